use crate::algebra::{CentralElement, CentralSubspace, GroupAlgebra, SubspaceRole};
use crate::linalg::{FpMatrix, Subspace};

impl GroupAlgebra<'_> {
    /// `z ↦ z^p` on the class sum `C_k⁺`.
    fn frobenius_image(&self, k: usize) -> CentralElement {
        let g = self.group;
        let p = self.p.get() as u64;
        let c = &g.conjugacy_classes()[k];
        if c.size() == 1 {
            return self.class_sum(g.class_of(g.pow(c.representative, p as i64)));
        }
        let base = self.class_sum(k);
        let mut acc = base.clone();
        for _ in 1..p {
            acc = self.central_multiply(&base, &acc);
        }
        acc
    }

    /// Matrix of the p-power map on `Z(F_pG)`, which is `F_p`-linear.
    pub fn frobenius_matrix(&self) -> FpMatrix {
        let k = self.center_dim();
        let mut m = FpMatrix::zeros(self.p, k, k);
        for col in 0..k {
            let img = self.frobenius_image(col);
            for (row, &v) in img.coords.iter().enumerate() {
                m.set(row, col, v);
            }
        }
        m
    }

    /// `J(Z(F_pG))` as the nilradical: the kernel of the p-power map iterated
    /// `m` times with `p^m ≥ dim Z(F_pG)`.
    pub fn nilradical_center(&self) -> CentralSubspace {
        let k = self.center_dim();
        let p = self.p.get() as usize;
        if !self.group.order().is_multiple_of(p) {
            return CentralSubspace {
                space: Subspace::zero(self.p, k),
                role: SubspaceRole::JacobsonRadical,
            };
        }
        let f = self.frobenius_matrix();
        let mut power = f.clone();
        let mut reach = p;
        while reach < k {
            power = f.mul(&power).expect("square matrices of equal size");
            reach = reach.saturating_mul(p);
        }
        CentralSubspace {
            space: power.kernel(),
            role: SubspaceRole::JacobsonRadical,
        }
    }

    /// The elements `b_C` for nontrivial classes `C`: `C⁺` when `p` divides
    /// `|C|`, otherwise `C⁺ − |C|·1`.
    pub fn radical_class_basis(&self) -> Vec<CentralElement> {
        let p = self.p;
        self.group
            .conjugacy_classes()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let mut b = self.class_sum(k);
                b.coords[0] = p.neg(p.reduce(c.size() as u64));
                b
            })
            .collect()
    }

    /// `Ann_{Z(F_pG)}(S)`, intersecting kernels of multiplication maps one
    /// element of `S` at a time.
    pub fn annihilator_in_center(&self, s: &[CentralElement]) -> CentralSubspace {
        let k = self.center_dim();
        let p = self.p;
        let mut basis: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut e = vec![0; k];
                e[i] = 1;
                e
            })
            .collect();
        for x in s {
            if basis.is_empty() {
                break;
            }
            if x.is_zero() {
                continue;
            }
            let m = self.multiplication_matrix(x);
            let images: Vec<Vec<u32>> = basis
                .iter()
                .map(|w| {
                    m.mul_vec(w)
                        .expect("coordinate vectors have class-count length")
                })
                .collect();
            if images.iter().all(|v| v.iter().all(|&c| c == 0)) {
                continue;
            }
            let d = basis.len();
            let mut a = FpMatrix::zeros(p, k, d);
            for (j, img) in images.iter().enumerate() {
                for (r, &v) in img.iter().enumerate() {
                    a.set(r, j, v);
                }
            }
            let combos = a.kernel();
            basis = combos
                .basis_vectors()
                .map(|c| {
                    let mut w = vec![0u32; k];
                    for (j, &cj) in c.iter().enumerate() {
                        if cj != 0 {
                            for (wi, &bi) in w.iter_mut().zip(&basis[j]) {
                                *wi = p.add(*wi, p.mul(cj, bi));
                            }
                        }
                    }
                    w
                })
                .collect();
        }
        CentralSubspace {
            space: Subspace::from_vectors(p, k, &basis).expect("vectors have class-count length"),
            role: SubspaceRole::Annihilator,
        }
    }

    /// `soc(Z(F_pG)) = Ann(J(Z(F_pG)))`.
    pub fn socle_center(&self) -> CentralSubspace {
        self.socle_from_radical(&self.nilradical_center())
    }

    pub fn socle_from_radical(&self, j: &CentralSubspace) -> CentralSubspace {
        let mut s = self.annihilator_in_center(&j.basis());
        s.role = SubspaceRole::Socle;
        s
    }

    /// Whether `s` is closed under multiplication by every class sum.
    pub fn is_ideal_of_center(&self, s: &CentralSubspace) -> bool {
        let basis = s.basis();
        (0..self.center_dim()).all(|k| {
            let c = self.class_sum(k);
            basis.iter().all(|z| {
                s.space
                    .contains_vector(&self.central_multiply(&c, z).coords)
            })
        })
    }

    /// `z^e` for a central element.
    pub fn central_pow(&self, z: &CentralElement, e: u64) -> CentralElement {
        let mut acc = self.class_sum(0);
        for _ in 0..e {
            acc = self.central_multiply(z, &acc);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, sl2};

    #[test]
    fn semisimple_radical_is_zero() {
        let g = cyclic(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        assert_eq!(a.nilradical_center().dim(), 0);
        assert_eq!(a.socle_center().dim(), 3);
    }

    #[test]
    fn c2_in_char_two() {
        let g = cyclic(2).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let j = a.nilradical_center();
        assert_eq!(j.dim(), 1);
        assert_eq!(j.basis()[0].coords(), &[1, 1]);
        assert_eq!(a.socle_center().space, j.space);
    }

    #[test]
    fn sl23_radical_and_socle() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let j = a.nilradical_center();
        assert_eq!(j.dim(), 6);
        assert!(a.is_ideal_of_center(&j));
        let fast = Subspace::from_vectors(
            a.prime(),
            7,
            &a.radical_class_basis()
                .iter()
                .map(|b| b.coords().to_vec())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(fast, j.space);
        let s = a.socle_center();
        assert_eq!(s.dim(), 3);
        assert!(a.is_ideal_of_center(&s));
    }

    #[test]
    fn trivial_annihilators() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let zero = a.central(vec![0; 7]).unwrap();
        assert_eq!(a.annihilator_in_center(&[zero]).dim(), 7);
        assert_eq!(a.annihilator_in_center(&[a.class_sum(0)]).dim(), 0);
    }
}
