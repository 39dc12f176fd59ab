//! The group algebra `F_pG` and its center.
//!
//! Elements of `F_pG` are coefficient vectors indexed by group elements.
//! Central elements are stored in class-sum coordinates, one coefficient per
//! conjugacy class in the order of [`FiniteGroup::conjugacy_classes`].

mod center;
mod ideal;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{FpMatrix, Prime, Subspace};

pub use ideal::{IdealVerdict, SocleCosetDims};

/// An element of `F_pG`: the coefficient of `g` is `coeffs[g]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraElement {
    #[serde(skip)]
    p: Prime,
    coeffs: Vec<u32>,
}

impl AlgebraElement {
    pub fn from_coeffs(p: Prime, coeffs: Vec<u32>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % p.get()).collect();
        AlgebraElement { p, coeffs }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> u32 {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.p != other.p || self.coeffs.len() != other.coeffs.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| p.add(a, b))
            .collect();
        Ok(AlgebraElement { p, coeffs })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| p.sub(a, b))
            .collect();
        Ok(AlgebraElement { p, coeffs })
    }

    pub fn scale(&self, c: u32) -> AlgebraElement {
        let p = self.p;
        let c = c % p.get();
        AlgebraElement {
            p,
            coeffs: self.coeffs.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }
}

/// An element of `Z(F_pG)` in class-sum coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CentralElement {
    #[serde(skip)]
    p: Prime,
    pub(crate) coords: Vec<u32>,
}

impl CentralElement {
    pub fn from_coords(p: Prime, coords: Vec<u32>) -> Self {
        let coords = coords.into_iter().map(|c| c % p.get()).collect();
        CentralElement { p, coords }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// What a central subspace was computed as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceRole {
    JacobsonRadical,
    Socle,
    Annihilator,
    Generic,
}

/// A subspace of `Z(F_pG)` in class-sum coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSubspace {
    pub space: Subspace,
    pub role: SubspaceRole,
}

impl CentralSubspace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<CentralElement> {
        let p = self.space.prime();
        self.space
            .basis_vectors()
            .map(|v| CentralElement {
                p,
                coords: v.to_vec(),
            })
            .collect()
    }
}

/// `F_pG` for a fixed group and prime.
#[derive(Clone, Copy, Debug)]
pub struct GroupAlgebra<'a> {
    group: &'a FiniteGroup,
    p: Prime,
}

impl<'a> GroupAlgebra<'a> {
    pub fn new(group: &'a FiniteGroup, p: u64) -> Result<Self> {
        Ok(GroupAlgebra {
            group,
            p: Prime::new(p)?,
        })
    }

    pub fn group(&self) -> &'a FiniteGroup {
        self.group
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// Dimension of the center, the number of conjugacy classes.
    pub fn center_dim(&self) -> usize {
        self.group.class_count()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            p: self.p,
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        let mut a = self.zero();
        a.coeffs[g] = 1;
        a
    }

    /// `X⁺`, the sum of the given elements.
    pub fn subset_sum(&self, elems: &[usize]) -> AlgebraElement {
        let mut a = self.zero();
        for &x in elems {
            a.coeffs[x] = self.p.add(a.coeffs[x], 1);
        }
        a
    }

    pub fn element(&self, coeffs: Vec<u32>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::GroupMismatch);
        }
        Ok(AlgebraElement::from_coeffs(self.p, coeffs))
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.p != self.p || a.coeffs.len() != self.dim() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Convolution product in `F_pG`.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let n = self.dim();
        let p = self.p.get() as u64;
        let mut acc = vec![0u64; n];
        let b_support: Vec<(usize, u64)> = b.support().map(|y| (y, b.coeffs[y] as u64)).collect();
        for x in a.support() {
            let ax = a.coeffs[x] as u64;
            let row = self.group.row(x);
            for &(y, by) in &b_support {
                let slot = &mut acc[row[y] as usize];
                *slot = (*slot + ax * by) % p;
            }
        }
        Ok(AlgebraElement {
            p: self.p,
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
        })
    }

    /// `a · g` for a group element `g`, a coordinate permutation.
    pub fn right_translate(&self, a: &AlgebraElement, g: usize) -> AlgebraElement {
        let mut out = self.zero();
        for x in a.support() {
            out.coeffs[self.group.mul(x, g)] = a.coeffs[x];
        }
        out
    }

    /// `g · a` for a group element `g`.
    pub fn left_translate(&self, a: &AlgebraElement, g: usize) -> AlgebraElement {
        let mut out = self.zero();
        for x in a.support() {
            out.coeffs[self.group.mul(g, x)] = a.coeffs[x];
        }
        out
    }

    pub fn central(&self, coords: Vec<u32>) -> Result<CentralElement> {
        if coords.len() != self.center_dim() {
            return Err(Error::GroupMismatch);
        }
        Ok(CentralElement::from_coords(self.p, coords))
    }

    /// The class sum `C_k⁺`.
    pub fn class_sum(&self, k: usize) -> CentralElement {
        let mut coords = vec![0; self.center_dim()];
        coords[k] = 1;
        CentralElement { p: self.p, coords }
    }

    /// Class sums, one per conjugacy class.
    pub fn center_basis(&self) -> Vec<CentralElement> {
        (0..self.center_dim()).map(|k| self.class_sum(k)).collect()
    }

    pub fn expand(&self, z: &CentralElement) -> AlgebraElement {
        let coeffs = (0..self.dim())
            .map(|x| z.coords[self.group.class_of(x)])
            .collect();
        AlgebraElement { p: self.p, coeffs }
    }

    /// Class coordinates of `a` if it is constant on every class.
    pub fn restrict(&self, a: &AlgebraElement) -> Option<CentralElement> {
        let classes = self.group.conjugacy_classes();
        let mut coords = Vec::with_capacity(classes.len());
        for c in classes {
            let v = a.coeffs[c.representative];
            if c.elements.iter().any(|&x| a.coeffs[x] != v) {
                return None;
            }
            coords.push(v);
        }
        Some(CentralElement { p: self.p, coords })
    }

    /// Number of group elements on which `z` is nonzero.
    fn support_size(&self, z: &CentralElement) -> usize {
        let classes = self.group.conjugacy_classes();
        z.coords
            .iter()
            .zip(classes)
            .filter(|(&c, _)| c != 0)
            .map(|(_, c)| c.size())
            .sum()
    }

    /// Product of two central elements, computed at class representatives:
    /// `(uv)(r) = Σ_x u(x)·v(x⁻¹r)`, with `x` running over the smaller support.
    pub fn central_multiply(&self, u: &CentralElement, v: &CentralElement) -> CentralElement {
        let (u, v) = if self.support_size(u) <= self.support_size(v) {
            (u, v)
        } else {
            (v, u)
        };
        let g = self.group;
        let p = self.p.get() as u64;
        let classes = g.conjugacy_classes();
        let support: Vec<(usize, u64)> = classes
            .iter()
            .zip(&u.coords)
            .filter(|(_, &c)| c != 0)
            .flat_map(|(c, &ux)| c.elements.iter().map(move |&x| (x, ux as u64)))
            .collect();
        let coords = classes
            .iter()
            .map(|c| {
                let r = c.representative;
                let mut acc = 0u64;
                for &(x, ux) in &support {
                    let vy = v.coords[g.class_of(g.mul(g.inv(x), r))];
                    acc += ux * vy as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                (acc % p) as u32
            })
            .collect();
        CentralElement { p: self.p, coords }
    }

    /// Matrix of `z ↦ s·z` in class-sum coordinates.
    pub fn multiplication_matrix(&self, s: &CentralElement) -> FpMatrix {
        let g = self.group;
        let k = self.center_dim();
        let p = self.p;
        let classes = g.conjugacy_classes();
        let support: Vec<(usize, u32)> = classes
            .iter()
            .zip(&s.coords)
            .filter(|(_, &c)| c != 0)
            .flat_map(|(c, &sx)| c.elements.iter().map(move |&x| (x, sx)))
            .collect();
        let mut m = FpMatrix::zeros(p, k, k);
        for (row, c) in classes.iter().enumerate() {
            let r = c.representative;
            for &(x, sx) in &support {
                let col = g.class_of(g.mul(g.inv(x), r));
                m.set(row, col, p.add(m.get(row, col), sx));
            }
        }
        m
    }

    /// Expands a central subspace into `F_pG` coordinates.
    pub fn expand_subspace(&self, s: &CentralSubspace) -> Subspace {
        let vectors: Vec<Vec<u32>> = s.basis().iter().map(|z| self.expand(z).coeffs).collect();
        Subspace::from_vectors(self.p, self.dim(), &vectors)
            .expect("expanded vectors have length |G|")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, quaternion, sl2};

    #[test]
    fn one_is_neutral() {
        let g = quaternion(8).unwrap();
        let a = GroupAlgebra::new(&g, 3).unwrap();
        let x = a.element((0..8).map(|i| i * 7 % 3).collect()).unwrap();
        assert_eq!(a.multiply(&a.one(), &x).unwrap(), x);
        assert_eq!(a.multiply(&x, &a.one()).unwrap(), x);
    }

    #[test]
    fn square_of_one_plus_x_vanishes_in_char_two() {
        let g = cyclic(2).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let u = a.subset_sum(&[0, 1]);
        assert!(a.multiply(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn central_product_matches_convolution() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        for i in 0..a.center_dim() {
            for j in 0..a.center_dim() {
                let (u, v) = (a.class_sum(i), a.class_sum(j));
                let direct = a.multiply(&a.expand(&u), &a.expand(&v)).unwrap();
                let fast = a.central_multiply(&u, &v);
                assert_eq!(a.restrict(&direct).unwrap(), fast);
                let m = a.multiplication_matrix(&u);
                assert_eq!(m.mul_vec(v.coords()).unwrap(), fast.coords);
            }
        }
    }

    #[test]
    fn mismatched_operands_are_rejected() {
        let g = cyclic(3).unwrap();
        let h = cyclic(4).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let b = GroupAlgebra::new(&h, 2).unwrap();
        assert!(a.multiply(&a.one(), &b.one()).is_err());
    }
}
