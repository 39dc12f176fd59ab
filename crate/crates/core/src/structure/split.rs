use serde::Serialize;

use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::{agl1, cyclic, direct_product, FiniteGroup, Subgroup};
use crate::structure::{
    centralizes, is_minimal_normal, isomorphic, DDecomposition, IsoMethod, StandingForm,
};

/// Checks on one factor `G_i = ⟨g_i, e_i⟩` of the central product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub g: usize,
    pub e: usize,
    pub h: usize,
    pub order: usize,
    /// `[h_i] = U·h_i` with `U = {1} ∪ {e_i^k g_i e_i^{-k}}`.
    pub class_shape: bool,
    /// `g_i` commutes with every `e_j`, `j ≠ i`.
    pub commutes_with_other_generators: bool,
    /// `g_i ∼ g_i⁻¹` and `g_i ∼ [e_i^k, g_i]` for `1 ≤ k < s_i`.
    pub conjugacy_facts: bool,
    /// Every nontrivial `h ∈ C_H(M_i)` yields a conjugate of `g_i`.
    pub independent_of_h: bool,
    pub socle_ideal: bool,
    pub derived_is_sylow: bool,
    pub center_of_derived_is_second: bool,
    pub derived_quotient_minimal_normal: bool,
}

impl ComponentReport {
    fn holds(&self) -> bool {
        self.class_shape
            && self.commutes_with_other_generators
            && self.conjugacy_facts
            && self.independent_of_h
            && self.socle_ideal
            && self.derived_is_sylow
            && self.center_of_derived_is_second
            && self.derived_quotient_minimal_normal
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralProductSplit {
    pub components: Vec<ComponentReport>,
    #[serde(skip)]
    pub subgroups: Vec<Subgroup>,
    /// `[G_i, G_j] = 1` for `i ≠ j`.
    pub pairwise_commute: bool,
    pub generate_whole: bool,
    /// `[L_i, L_j] = 1` for the preimages `L_i` of the `T_i`.
    pub preimages_commute: bool,
    /// `H = ⟨e_1⟩ × … × ⟨e_n⟩` with `ord(e_i) = |T_i| − 1`.
    pub h_direct_product: bool,
    /// `D ≅ ∏ AGL(1, |T_i|)`.
    pub d_product_of_affine: bool,
    pub d_iso_method: IsoMethod,
}

impl CentralProductSplit {
    fn holds(&self) -> bool {
        self.components.iter().all(ComponentReport::holds)
            && self.pairwise_commute
            && self.generate_whole
            && self.preimages_commute
            && self.h_direct_product
            && self.d_product_of_affine
    }
}

/// `U` with `[h] = U·h`.
fn class_translate(g: &FiniteGroup, h: usize) -> Vec<usize> {
    let hinv = g.inv(h);
    let mut u: Vec<usize> = g.conjugacy_classes()[g.class_of(h)]
        .elements
        .iter()
        .map(|&c| g.mul(c, hinv))
        .collect();
    u.sort_unstable();
    u
}

/// Splits `G` as a central product of the `G_i = ⟨g_i, e_i⟩` and verifies
/// the properties of each factor by direct computation.
pub fn split_central_product(
    sf: &StandingForm<'_>,
    dd: &DDecomposition,
    ideal: bool,
) -> Result<CentralProductSplit> {
    let hall = sf.require_special()?;
    if !ideal {
        return Err(Error::Inapplicable("socle is not an ideal".into()));
    }
    let g = sf.group;
    let g2 = &sf.second_derived;
    let n = dd.n();
    let e: Vec<usize> =
        dd.e.iter()
            .map(|x| x.ok_or_else(|| Error::Consistency("missing generator e_i".into())))
            .collect::<Result<_>>()?;
    let h: Vec<usize> =
        dd.h.iter()
            .map(|x| x.ok_or_else(|| Error::Consistency("trivial centralizer of M_i".into())))
            .collect::<Result<_>>()?;

    let mut components = Vec::with_capacity(n);
    let mut subgroups = Vec::with_capacity(n);
    for i in 0..n {
        let u = class_translate(g, h[i]);
        let gi = *u
            .iter()
            .find(|&&x| !g2.contains(x))
            .ok_or_else(|| Error::Consistency("class of h_i lies in G''·h_i".into()))?;
        let shape = |u: &[usize], gi: usize| {
            let mut want = g.conjugation_orbit(gi, &[e[i]]);
            want.push(0);
            want.sort_unstable();
            want == u
        };
        let class_shape = shape(&u, gi);
        let commutes_with_other_generators =
            (0..n).all(|j| j == i || g.mul(gi, e[j]) == g.mul(e[j], gi));
        let s = dd.s[i] as i64;
        let conjugacy_facts = g.are_conjugate(gi, g.inv(gi))
            && (1..s).all(|k| g.are_conjugate(gi, g.commutator(g.pow(e[i], k), gi)));
        let independent_of_h = hall
            .non_identity()
            .filter(|&x| centralizes(g, x, dd.m[i].generators()))
            .all(|x| {
                let ux = class_translate(g, x);
                ux.iter()
                    .find(|&&y| !g2.contains(y))
                    .is_some_and(|&y| shape(&ux, y) && g.are_conjugate(y, gi))
            });

        let sub = g.generate(&[gi, e[i]]);
        let (gi_group, _) = g.subgroup_as_group(&sub);
        let socle_ideal = GroupAlgebra::new(&gi_group, sf.p)?.is_socle_ideal()?.direct;
        let d_i = gi_group.derived_subgroup();
        let d2_i = gi_group.second_derived();
        let derived_is_sylow = gi_group.sylow(sf.p) == d_i;
        let center_of_derived_is_second = gi_group.center_of(&d_i) == d2_i;
        let qi = gi_group.quotient(&d2_i)?;
        let derived_quotient_minimal_normal = is_minimal_normal(qi.target(), &qi.image(&d_i));
        components.push(ComponentReport {
            g: gi,
            e: e[i],
            h: h[i],
            order: sub.order(),
            class_shape,
            commutes_with_other_generators,
            conjugacy_facts,
            independent_of_h,
            socle_ideal,
            derived_is_sylow,
            center_of_derived_is_second,
            derived_quotient_minimal_normal,
        });
        subgroups.push(sub);
    }

    let commute = |a: &Subgroup, b: &Subgroup| {
        a.generators()
            .iter()
            .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    };
    let pairs = || (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let pairwise_commute = pairs().all(|(i, j)| commute(&subgroups[i], &subgroups[j]));
    let all: Vec<usize> = subgroups
        .iter()
        .flat_map(|s| s.generators().to_vec())
        .collect();
    let generate_whole = g.generate(&all).order() == g.order();
    let l: Vec<Subgroup> = dd
        .factors
        .iter()
        .map(|t| dd.quotient.preimage(g, t))
        .collect();
    let preimages_commute = pairs().all(|(i, j)| commute(&l[i], &l[j]));

    let h_direct_product = (0..n).all(|i| g.element_order(e[i]) == dd.s[i])
        && dd.s.iter().product::<usize>() == hall.order()
        && (0..n).all(|i| {
            let own = g.generate(&[e[i]]);
            let others: Vec<usize> = (0..n).filter(|&j| j != i).map(|j| e[j]).collect();
            g.intersection(&own, &g.generate(&others)).is_trivial()
        });

    let mut model = cyclic(1)?;
    for t in &dd.factors {
        model = direct_product(&model, &agl1(t.order())?);
    }
    let (d_product_of_affine, d_iso_method) = isomorphic(dd.d(), &model);

    let split = CentralProductSplit {
        components,
        subgroups,
        pairwise_commute,
        generate_whole,
        preimages_commute,
        h_direct_product,
        d_product_of_affine,
        d_iso_method,
    };
    if !split.holds() {
        return Err(Error::Consistency(format!(
            "central product statements fail: {:?}",
            split
        )));
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{central_product_auto, sl2};
    use crate::structure::{check_standing_form, decompose_d};

    #[test]
    fn sl23_is_a_single_component() {
        let g = sl2(3).unwrap();
        let sf = check_standing_form(&g, 2);
        let dd = decompose_d(&sf).unwrap();
        let split = split_central_product(&sf, &dd, true).unwrap();
        assert_eq!(split.components.len(), 1);
        assert_eq!(split.subgroups[0].order(), 24);
        let u = class_translate(&g, dd.h[0].unwrap());
        assert_eq!(u.len(), 4);
    }

    #[test]
    fn two_copies_of_sl23() {
        let s = sl2(3).unwrap();
        let cp = central_product_auto(&s, &s).unwrap();
        let sf = check_standing_form(&cp.group, 2);
        let dd = decompose_d(&sf).unwrap();
        assert_eq!(dd.n(), 2);
        let split = split_central_product(&sf, &dd, true).unwrap();
        assert!(split.components.iter().all(|c| c.order == 24));
    }
}
