use serde::Serialize;

use crate::algebra::{AlgebraElement, CentralSubspace, GroupAlgebra};
use crate::error::{Error, Result};
use crate::group::{QuotientMap, Subgroup};
use crate::linalg::Subspace;

/// Two independent answers to whether `soc(Z(F_pG))` is an ideal of `F_pG`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    /// Closure of the expanded socle under left and right translation.
    pub direct: bool,
    /// Containment of the socle in `(G')⁺·F_pG`.
    pub criterion: bool,
}

/// Dimensions of `soc(Z(F_pG)) ∩ F_p[hP]` over the cosets of a normal
/// Sylow subgroup `P`, one per element `h` of a complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleCosetDims {
    pub representatives: Vec<usize>,
    pub dims: Vec<usize>,
    pub socle_dim: usize,
}

impl SocleCosetDims {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

impl GroupAlgebra<'_> {
    /// `(G')⁺·F_pG`, spanned by the indicator vectors of the cosets of `G'`.
    pub fn gprime_plus_fg(&self) -> Subspace {
        let g = self.group;
        let d = g.derived_subgroup();
        let mut seen = vec![false; g.order()];
        let mut vectors = Vec::new();
        for t in 0..g.order() {
            if seen[t] {
                continue;
            }
            let mut v = vec![0u32; g.order()];
            for &x in d.elements() {
                let y = g.mul(x, t);
                seen[y] = true;
                v[y] = 1;
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.p, g.order(), &vectors)
            .expect("indicator vectors have length |G|")
    }

    /// Whether the subspace `s` of `F_pG` is a two-sided ideal. Translation by
    /// the generators of `G` suffices by linearity.
    pub fn is_ideal_in_fg(&self, s: &Subspace) -> bool {
        let gens = self.group.generators();
        s.basis_vectors().all(|v| {
            let a = AlgebraElement {
                p: self.p,
                coeffs: v.to_vec(),
            };
            gens.iter().all(|&g| {
                s.contains_vector(&self.right_translate(&a, g).coeffs)
                    && s.contains_vector(&self.left_translate(&a, g).coeffs)
            })
        })
    }

    /// Decides whether `soc` is an ideal of `F_pG` both directly and by the
    /// `(G')⁺·F_pG` containment; disagreement is a consistency failure.
    pub fn socle_ideal_verdict(&self, soc: &CentralSubspace) -> Result<IdealVerdict> {
        let expanded = self.expand_subspace(soc);
        let direct = self.is_ideal_in_fg(&expanded);
        let criterion = self.gprime_plus_fg().contains(&expanded)?;
        if direct != criterion {
            return Err(Error::Consistency(format!(
                "ideal test ({direct}) and (G')+FG containment ({criterion}) disagree"
            )));
        }
        Ok(IdealVerdict { direct, criterion })
    }

    pub fn is_socle_ideal(&self) -> Result<IdealVerdict> {
        self.socle_ideal_verdict(&self.socle_center())
    }

    /// `ν_N(a)` in `F_p[G/N]`.
    pub fn project_nu(&self, q: &QuotientMap, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        if q.source_order() != self.dim() {
            return Err(Error::GroupMismatch);
        }
        let p = self.p;
        let mut coeffs = vec![0u32; q.target().order()];
        for x in a.support() {
            let slot = &mut coeffs[q.proj(x)];
            *slot = p.add(*slot, a.coeffs[x]);
        }
        Ok(AlgebraElement { p, coeffs })
    }

    /// Indices of the classes `C ≠ 1` with `C ⊄ G''` and `p ∤ |C|/|C̄|`,
    /// where `C̄` is the image class in `G/G''`. Cross-checked against the
    /// classes with `ν_{G''}(b_C) ≠ 0`.
    pub fn clp_prime(&self) -> Result<Vec<usize>> {
        let g = self.group;
        let g2 = g.second_derived();
        let q = g.quotient(&g2)?;
        let d = q.target();
        let classes = g.conjugacy_classes();
        let p = self.p.get() as usize;
        let by_formula: Vec<usize> = (1..classes.len())
            .filter(|&k| {
                let c = &classes[k];
                let image = &d.conjugacy_classes()[d.class_of(q.proj(c.representative))];
                !c.elements.iter().all(|&x| g2.contains(x))
                    && !(c.size() / image.size()).is_multiple_of(p)
            })
            .collect();
        let basis = self.radical_class_basis();
        let by_projection: Vec<usize> = (1..classes.len())
            .filter(|&k| {
                !self
                    .project_nu(&q, &self.expand(&basis[k - 1]))
                    .expect("same algebra")
                    .is_zero()
            })
            .collect();
        if by_formula != by_projection {
            return Err(Error::Consistency(
                "class filter by formula disagrees with the projection definition".into(),
            ));
        }
        Ok(by_formula)
    }

    /// Splits the socle along the cosets `hP` of a normal Sylow subgroup `P`
    /// with complement `H`.
    pub fn socle_coset_decomposition(
        &self,
        soc: &CentralSubspace,
        sylow: &Subgroup,
        complement: &Subgroup,
    ) -> Result<SocleCosetDims> {
        let g = self.group;
        if !sylow.is_normal() || sylow.order() * complement.order() != g.order() {
            return Err(Error::Unsupported(
                "coset decomposition needs a normal Sylow subgroup with a complement".into(),
            ));
        }
        let mut coset = vec![usize::MAX; g.order()];
        for (i, &h) in complement.elements().iter().enumerate() {
            for &y in sylow.elements() {
                coset[g.mul(h, y)] = i;
            }
        }
        let classes = g.conjugacy_classes();
        let k = classes.len();
        let mut dims = Vec::with_capacity(complement.order());
        for i in 0..complement.order() {
            let units: Vec<Vec<u32>> = classes
                .iter()
                .enumerate()
                .filter(|(_, c)| c.elements.iter().all(|&x| coset[x] == i))
                .map(|(j, _)| {
                    let mut e = vec![0; k];
                    e[j] = 1;
                    e
                })
                .collect();
            let block = Subspace::from_vectors(self.p, k, &units)?;
            dims.push(soc.space.intersection(&block)?.dim());
        }
        Ok(SocleCosetDims {
            representatives: complement.elements().to_vec(),
            dims,
            socle_dim: soc.dim(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{agl1, cyclic, sl2};

    #[test]
    fn sl23_socle_is_ideal() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let v = a.is_socle_ideal().unwrap();
        assert!(v.direct && v.criterion);
        assert_eq!(a.gprime_plus_fg().dim(), 3);
        let sh = g.sylow_and_hall(2);
        let dims = a
            .socle_coset_decomposition(
                &a.socle_center(),
                &sh.sylow,
                sh.hall_complement.as_ref().unwrap(),
            )
            .unwrap();
        assert_eq!(dims.dims, vec![1, 1, 1]);
    }

    #[test]
    fn ideal_test_trivial_cases() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let all = a.subset_sum(&(0..24).collect::<Vec<_>>());
        let s = Subspace::from_vectors(a.prime(), 24, &[all.coeffs().to_vec()]).unwrap();
        assert!(a.is_ideal_in_fg(&s));
        let s = Subspace::from_vectors(a.prime(), 24, &[a.one().coeffs().to_vec()]).unwrap();
        assert!(!a.is_ideal_in_fg(&s));
    }

    #[test]
    fn agl_quotients() {
        let g = agl1(8).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        assert_eq!(a.gprime_plus_fg().dim(), 7);
        let c = cyclic(6).unwrap();
        let a = GroupAlgebra::new(&c, 2).unwrap();
        assert_eq!(a.gprime_plus_fg().dim(), 6);
    }

    #[test]
    fn clp_on_sl23() {
        let g = sl2(3).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let cl = a.clp_prime().unwrap();
        let classes = g.conjugacy_classes();
        let z = g.center().non_identity().next().unwrap();
        assert!(!cl.contains(&g.class_of(z)));
        for (k, c) in classes.iter().enumerate() {
            if g.element_order(c.representative) == 3 {
                assert!(cl.contains(&k));
            }
        }
    }
}
