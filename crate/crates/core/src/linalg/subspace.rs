use crate::error::{Error, Result};
use crate::linalg::matrix::{eliminate, rref_in_place, FpMatrix};
use crate::linalg::prime::Prime;

/// A subspace of F_p^n stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces of the same ambient space are
/// equal as sets exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: Prime,
    ambient_dim: usize,
    /// Row-major RREF basis, `dim` rows of length `ambient_dim`.
    rows: Vec<u32>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: Prime, ambient_dim: usize) -> Self {
        Subspace {
            p,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: Prime, ambient_dim: usize) -> Self {
        let m = FpMatrix::identity(p, ambient_dim);
        Subspace {
            p,
            ambient_dim,
            rows: m.entries().to_vec(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors(p: Prime, ambient_dim: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let mut buf = Vec::with_capacity(vectors.len() * ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
            buf.extend(v.iter().map(|&x| x % p.get()));
        }
        Ok(Self::from_buffer(p, ambient_dim, buf, vectors.len()))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &FpMatrix) -> Self {
        Self::from_buffer(m.prime(), m.cols(), m.entries().to_vec(), m.rows())
    }

    fn from_buffer(p: Prime, ambient_dim: usize, mut buf: Vec<u32>, nrows: usize) -> Self {
        let pivots = rref_in_place(p, &mut buf, nrows, ambient_dim);
        buf.truncate(pivots.len() * ambient_dim);
        Subspace {
            p,
            ambient_dim,
            rows: buf,
            pivots,
        }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[u32] {
        &self.rows[i * self.ambient_dim..(i + 1) * self.ambient_dim]
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        self.rows
            .chunks_exact(self.ambient_dim.max(1))
            .take(self.dim())
    }

    /// The basis as an RREF matrix with no zero rows.
    pub fn basis(&self) -> FpMatrix {
        FpMatrix::new(self.p, self.dim(), self.ambient_dim, self.rows.clone())
            .expect("basis buffer is consistent")
    }

    /// Remainder of `v` after reduction against the basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut r: Vec<u32> = v.iter().map(|&x| x % self.p.get()).collect();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = r[pc];
            if f != 0 {
                eliminate(self.p, &mut r, self.basis_vector(i), f, pc);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(|&x| x == 0)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis_vectors().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut buf = self.rows.clone();
        buf.extend_from_slice(&other.rows);
        Ok(Self::from_buffer(
            self.p,
            self.ambient_dim,
            buf,
            self.dim() + other.dim(),
        ))
    }

    /// Intersection via the kernel of the concatenated basis matrix: a vector
    /// `(x, y)` with `x·A = y·B` gives the common element `x·A`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.p, self.ambient_dim));
        }
        // columns: basis vectors of a, then basis vectors of b
        let mut m = FpMatrix::zeros(self.p, self.ambient_dim, da + db);
        for (j, v) in self.basis_vectors().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        for (j, v) in other.basis_vectors().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, da + j, x);
            }
        }
        let ker = m.kernel();
        let mut out = Vec::with_capacity(ker.dim());
        for k in ker.basis_vectors() {
            let mut v = vec![0u32; self.ambient_dim];
            for (j, &c) in k[..da].iter().enumerate() {
                if c != 0 {
                    for (x, &b) in v.iter_mut().zip(self.basis_vector(j)) {
                        *x = self.p.add(*x, self.p.mul(c, b));
                    }
                }
            }
            out.push(v);
        }
        Subspace::from_vectors(self.p, self.ambient_dim, &out)
    }

    /// Adds one vector to the span in place; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let r = self.reduce(v);
        if r.iter().all(|&x| x == 0) {
            return false;
        }
        let mut buf = std::mem::take(&mut self.rows);
        buf.extend_from_slice(&r);
        let n = self.dim() + 1;
        *self = Self::from_buffer(self.p, self.ambient_dim, buf, n);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn coordinate_lines() {
        let a = Subspace::from_vectors(p(2), 2, &[vec![1, 0]]).unwrap();
        let b = Subspace::from_vectors(p(2), 2, &[vec![0, 1]]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(p(2), 2));
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
    }

    #[test]
    fn idempotent_intersection() {
        let a = Subspace::from_vectors(p(5), 3, &[vec![1, 2, 3], vec![0, 1, 4]]).unwrap();
        assert_eq!(a.intersection(&a).unwrap(), a);
        assert!(a.equals(&a).unwrap());
    }

    #[test]
    fn full_space_contains_line() {
        let a = Subspace::from_vectors(p(3), 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Subspace::from_vectors(p(3), 2, &[vec![1, 0]]).unwrap();
        assert!(a.contains(&b).unwrap());
        assert!(!b.contains(&a).unwrap());
    }

    #[test]
    fn mismatches_are_rejected() {
        let a = Subspace::zero(p(3), 2);
        let b = Subspace::zero(p(3), 3);
        let c = Subspace::zero(p(5), 2);
        assert!(a.sum(&b).is_err());
        assert!(a.intersection(&c).is_err());
        assert!(a.contains(&c).is_err());
    }

    #[test]
    fn insert_grows_only_on_new_vectors() {
        let mut s = Subspace::zero(p(3), 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(!s.insert(&[2, 1, 0]));
        assert!(s.insert(&[0, 0, 1]));
        assert_eq!(s.dim(), 2);
    }
}
