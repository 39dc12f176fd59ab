use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::prime::Prime;
use crate::linalg::subspace::Subspace;

/// Dense matrix over the prime field F_p, row-major, entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FpMatrix {
    pub fn new(p: Prime, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e >= p.get()) {
            return Err(Error::DimensionMismatch(format!(
                "entry {bad} is not reduced mod {p}"
            )));
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row vectors of equal length `cols`.
    pub fn from_rows(p: Prime, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&e| e % p.get()));
        }
        Ok(FpMatrix {
            p,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.p.get();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let p = self.p.get() as u64;
        Ok((0..self.rows)
            .map(|r| {
                let acc: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64 % p)
                    .sum();
                (acc % p) as u32
            })
            .collect())
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p.get() as u64;
        let mut acc = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let out = &mut acc[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(other.row(k)) {
                    if b != 0 {
                        *o = (*o + a * b as u64) % p;
                    }
                }
            }
        }
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            entries: acc.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom so
    /// the shape is unchanged.
    pub fn rref(&self) -> (FpMatrix, usize) {
        let mut m = self.clone();
        let pivots = rref_in_place(self.p, &mut m.entries, m.rows, m.cols);
        (m, pivots.len())
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Null space `{v : M v = 0}` as a canonical subspace of F_p^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let pivots = pivot_columns(&r, rank);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.p.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.p, self.cols, &basis)
            .expect("kernel vectors have ambient length")
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix mod {} ({}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn pivot_columns(r: &FpMatrix, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|i| {
            r.row(i)
                .iter()
                .position(|&x| x != 0)
                .expect("nonzero row above rank")
        })
        .collect()
}

/// Gauss-Jordan elimination on a row-major buffer. Returns pivot columns.
pub(crate) fn rref_in_place(p: Prime, a: &mut [u32], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if found != prow {
            for c in 0..cols {
                a.swap(found * cols + c, prow * cols + c);
            }
        }
        let inv = p.inv(a[prow * cols + col]);
        if inv != 1 {
            for c in col..cols {
                a[prow * cols + c] = p.mul(a[prow * cols + c], inv);
            }
        }
        let (before, rest) = a.split_at_mut(prow * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        for row in before
            .chunks_exact_mut(cols)
            .chain(after.chunks_exact_mut(cols))
        {
            let f = row[col];
            if f != 0 {
                eliminate(p, row, pivot_row, f, col);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}

/// `row -= f * pivot_row`, starting at column `from`.
#[inline]
pub(crate) fn eliminate(p: Prime, row: &mut [u32], pivot_row: &[u32], f: u32, from: usize) {
    let nf = p.neg(f);
    for (x, &y) in row[from..].iter_mut().zip(&pivot_row[from..]) {
        if y != 0 {
            *x = p.add(*x, p.mul(nf, y));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let i = FpMatrix::identity(p(3), 2);
        let (r, rank) = i.rref();
        assert_eq!(r, i);
        assert_eq!(rank, 2);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = FpMatrix::zeros(p(2), 3, 4);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn duplicate_rows_collapse() {
        let m = FpMatrix::from_rows(p(2), 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[1, 1]);
        assert_eq!(r.row(1), &[0, 0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(p(5), 3).kernel().dim(), 0);
        let full = FpMatrix::zeros(p(2), 2, 3).kernel();
        assert_eq!(full.dim(), 3);
        let k = FpMatrix::from_rows(p(2), 3, &[vec![1, 1, 0]])
            .unwrap()
            .kernel();
        let expected = Subspace::from_vectors(p(2), 3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn rejects_unreduced_entries() {
        assert!(FpMatrix::new(p(3), 1, 2, vec![1, 3]).is_err());
        assert!(FpMatrix::new(p(3), 1, 2, vec![1]).is_err());
    }

    #[test]
    fn product_matches_hand_computation() {
        let a = FpMatrix::from_rows(p(5), 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = a.mul(&a).unwrap();
        // [[7,10],[15,22]] mod 5
        assert_eq!(b.entries(), &[2, 0, 0, 2]);
        assert_eq!(a.mul_vec(&[1, 1]).unwrap(), vec![3, 2]);
    }
}
