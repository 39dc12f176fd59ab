use serde::Serialize;

use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientMap, Subgroup};
use crate::linalg::Prime;
use crate::structure::{
    centralizes, is_minimal_normal, Coordinates, StandingForm, SUPPORT_PATTERN_LIMIT,
};

/// The decomposition of `D = G/G''`: `D' ⊇ T × Z_D` with `T = T_1 × … × T_n`,
/// generators `e_i ∈ H`, the subgroups `M_i ⊆ G'` and centralizing `h_i ∈ H`.
#[derive(Clone, Debug)]
pub struct DDecomposition {
    pub quotient: QuotientMap,
    pub d_derived: Subgroup,
    /// `Z(G')/G''`.
    pub zd: Subgroup,
    /// `{x ∈ D' : x^p = 1}`.
    pub m_bar: Subgroup,
    pub t: Subgroup,
    pub factors: Vec<Subgroup>,
    /// `e_i`, as elements of `G` lying in `H`.
    pub e: Vec<Option<usize>>,
    pub s: Vec<usize>,
    /// `M_i = π⁻¹(∏_{j≠i} T_j × Z_D)`, subgroups of `G`.
    pub m: Vec<Subgroup>,
    pub h: Vec<Option<usize>>,
    /// `T ∩ Z_D = 1` and `|T|·|Z_D| = |D'|`.
    pub t_complements_zd: bool,
    /// `T` is the internal direct product of the `T_i`.
    pub factors_direct: bool,
}

impl DDecomposition {
    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn d(&self) -> &FiniteGroup {
        self.quotient.target()
    }

    pub fn summary(&self) -> DSummary {
        DSummary {
            d_order: self.d().order(),
            d_derived_order: self.d_derived.order(),
            zd_order: self.zd.order(),
            t_order: self.t.order(),
            factor_orders: self.factors.iter().map(Subgroup::order).collect(),
            e: self.e.clone(),
            s: self.s.clone(),
            m_orders: self.m.iter().map(Subgroup::order).collect(),
            h: self.h.clone(),
            t_complements_zd: self.t_complements_zd,
            factors_direct: self.factors_direct,
        }
    }
}

/// Serializable digest of a [`DDecomposition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSummary {
    pub d_order: usize,
    pub d_derived_order: usize,
    pub zd_order: usize,
    pub t_order: usize,
    pub factor_orders: Vec<usize>,
    pub e: Vec<Option<usize>>,
    pub s: Vec<usize>,
    pub m_orders: Vec<usize>,
    pub h: Vec<Option<usize>>,
    pub t_complements_zd: bool,
    pub factors_direct: bool,
}

/// Builds the decomposition of `D = G/G''` following the complement
/// construction by averaging over `H`.
pub fn decompose_d(sf: &StandingForm<'_>) -> Result<DDecomposition> {
    let hall = sf.require()?;
    let g = sf.group;
    let p = sf.p as usize;
    let fp = Prime::new(sf.p)?;
    let quotient = g.quotient(&sf.second_derived)?;
    let d = quotient.target();
    let proj = |x: usize| quotient.proj(x);
    let d_derived = quotient.image(&sf.derived);
    let zg = g.center_of(&sf.derived);
    let zd = quotient.image(&zg);
    let m_elems: Vec<usize> = d_derived
        .elements()
        .iter()
        .copied()
        .filter(|&x| d.pow(x, p as i64) == 0)
        .collect();
    let m_bar = d.subgroup_from_elements(&m_elems)?;
    let m_full = quotient.preimage(g, &m_bar);
    let w = quotient.image(&g.intersection(&m_full, &zg));

    let (coords, w_rank) = Coordinates::new(d, p, w.elements(), m_bar.elements());
    let h_bar: Vec<usize> = hall.elements().iter().map(|&h| proj(h)).collect();
    let mut t_elems = Vec::new();
    for &x in m_bar.elements() {
        let mut acc = vec![0u32; coords.rank];
        for &h in &h_bar {
            let y = d.conj(x, d.inv(h));
            let mut v = coords.vector(y);
            v[w_rank..].iter_mut().for_each(|c| *c = 0);
            let z = d.conj(coords.element(&v), h);
            for (a, c) in acc.iter_mut().zip(coords.vector(z)) {
                *a = fp.add(*a, c as u32);
            }
        }
        if acc.iter().all(|&c| c == 0) {
            t_elems.push(x);
        }
    }
    let t = d.subgroup_from_elements(&t_elems)?;
    let t_complements_zd = g_trivial_meet(&t, &zd) && t.order() * zd.order() == d_derived.order();

    let mut closures: Vec<Subgroup> = Vec::new();
    for x in t.non_identity() {
        let n = d.normal_closure(&[x]);
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    let mut factors: Vec<Subgroup> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    factors.sort_by_key(|f| f.elements()[1]);
    let n = factors.len();
    let factors_direct = {
        let all: Vec<usize> = factors
            .iter()
            .flat_map(|f| f.generators().to_vec())
            .collect();
        d.generate(&all) == t && factors.iter().map(Subgroup::order).product::<usize>() == t.order()
    };

    let e: Vec<Option<usize>> = (0..n)
        .map(|i| find_e(g, &quotient, hall, &factors, i))
        .collect();
    let s: Vec<usize> = factors.iter().map(|f| f.order() - 1).collect();

    let mut m = Vec::with_capacity(n);
    let mut h = Vec::with_capacity(n);
    for i in 0..n {
        let mut gens: Vec<usize> = zd.generators().to_vec();
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                gens.extend_from_slice(f.generators());
            }
        }
        let mi = quotient.preimage(g, &d.generate(&gens));
        let hi = hall
            .non_identity()
            .find(|&x| centralizes(g, x, mi.generators()));
        m.push(mi);
        h.push(hi);
    }

    Ok(DDecomposition {
        quotient,
        d_derived,
        zd,
        m_bar,
        t,
        factors,
        e,
        s,
        m,
        h,
        t_complements_zd,
        factors_direct,
    })
}

fn g_trivial_meet(a: &Subgroup, b: &Subgroup) -> bool {
    a.non_identity().all(|x| !b.contains(x))
}

/// Smallest `e ∈ H` acting transitively on `T_i ∖ 1`, centralizing the other
/// factors and generating `H` modulo `C_H(T_i)`.
fn find_e(
    g: &FiniteGroup,
    q: &QuotientMap,
    hall: &Subgroup,
    factors: &[Subgroup],
    i: usize,
) -> Option<usize> {
    let d = q.target();
    let ti = &factors[i];
    let c_ti: Vec<usize> = hall
        .elements()
        .iter()
        .copied()
        .filter(|&h| centralizes(d, q.proj(h), ti.generators()))
        .collect();
    hall.non_identity().find(|&x| {
        let xb = q.proj(x);
        let t0 = ti.elements()[1];
        d.conjugation_orbit(t0, &[xb]).len() == ti.order() - 1
            && factors
                .iter()
                .enumerate()
                .all(|(j, f)| j == i || centralizes(d, xb, f.generators()))
            && {
                let mut gens = c_ti.clone();
                gens.push(x);
                g.generate(&gens).order() == hall.order()
            }
    })
}

/// Outcome of the checks on the factors of `D'`, the generators `e_i`, the
/// centralizers `C_H(M_i)`, and the class and
/// support-pattern statements that accompany them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionConditions {
    pub n: usize,
    /// Each `T_i` minimal normal and `D' = T_1 × … × T_n × Z_D`.
    pub factors_minimal_direct: bool,
    /// The `e_i` exist and `H = ⟨e_1, …, e_n, C_H(T)⟩`.
    pub e_generate_complement: bool,
    /// Each `C_H(M_i)` is nontrivial.
    pub centralizers_nontrivial: bool,
    /// `[h̄_i] = T_i·h̄_i` in `D` and `[h_i]` lies in the filtered classes.
    pub class_shape: bool,
    /// `None` when `|T|` exceeds the exhaustive limit.
    pub support_patterns: Option<bool>,
}

impl DecompositionConditions {
    fn holds(&self) -> bool {
        self.factors_minimal_direct
            && self.e_generate_complement
            && self.centralizers_nontrivial
            && self.class_shape
            && self.support_patterns != Some(false)
    }
}

/// Checks the decomposition of `D` on a group in standing form whose socle is an ideal.
pub fn check_decomposition_conditions(
    sf: &StandingForm<'_>,
    dd: &DDecomposition,
    ideal: bool,
) -> Result<DecompositionConditions> {
    let hall = sf.require()?;
    if !ideal {
        return Err(Error::Inapplicable("socle is not an ideal".into()));
    }
    let g = sf.group;
    let d = dd.d();
    let q = &dd.quotient;
    let n = dd.n();

    let factors_minimal_direct = dd.t_complements_zd
        && dd.factors_direct
        && dd.factors.iter().all(|f| is_minimal_normal(d, f))
        && dd.zd.is_subgroup_of(&dd.d_derived);

    let e_generate_complement = dd.e.iter().all(Option::is_some) && {
        let c_t: Vec<usize> = hall
            .elements()
            .iter()
            .copied()
            .filter(|&h| centralizes(d, q.proj(h), dd.t.generators()))
            .collect();
        let mut gens: Vec<usize> = dd.e.iter().flatten().copied().collect();
        gens.extend(c_t);
        g.generate(&gens).order() == hall.order()
    };

    let centralizers_nontrivial = dd.h.iter().all(Option::is_some);

    let clp = GroupAlgebra::new(g, sf.p)?.clp_prime()?;
    let class_shape = centralizers_nontrivial
        && dd.factors.iter().zip(&dd.h).all(|(ti, hi)| {
            let hi = hi.expect("checked above");
            let hb = q.proj(hi);
            let class = &d.conjugacy_classes()[d.class_of(hb)].elements;
            let mut coset: Vec<usize> = ti.elements().iter().map(|&t| d.mul(t, hb)).collect();
            coset.sort_unstable();
            *class == coset && clp.contains(&g.class_of(hi))
        });

    let support_patterns = (dd.t.order() <= SUPPORT_PATTERN_LIMIT && dd.factors_direct)
        .then(|| support_patterns_match(d, &dd.factors));

    let report = DecompositionConditions {
        n,
        factors_minimal_direct,
        e_generate_complement,
        centralizers_nontrivial,
        class_shape,
        support_patterns,
    };
    if !report.holds() {
        return Err(Error::Consistency(format!(
            "decomposition statements fail: {report:?}"
        )));
    }
    Ok(report)
}

/// Two elements of `T` are conjugate in `D` exactly when their nontrivial
/// components sit in the same factors.
fn support_patterns_match(d: &FiniteGroup, factors: &[Subgroup]) -> bool {
    let mut pattern: Vec<(usize, u64)> = vec![(0, 0)];
    for (i, f) in factors.iter().enumerate() {
        let mut next = Vec::with_capacity(pattern.len() * f.order());
        for &(x, mask) in &pattern {
            for &y in f.elements() {
                let bit = if y == 0 { 0 } else { 1u64 << i };
                next.push((d.mul(x, y), mask | bit));
            }
        }
        pattern = next;
    }
    pattern.iter().all(|&(x, mx)| {
        pattern
            .iter()
            .all(|&(y, my)| d.are_conjugate(x, y) == (mx == my))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{agl1, sl2};
    use crate::structure::check_standing_form;

    #[test]
    fn sl23_decomposition() {
        let g = sl2(3).unwrap();
        let sf = check_standing_form(&g, 2);
        let dd = decompose_d(&sf).unwrap();
        assert_eq!(dd.n(), 1);
        assert_eq!(dd.factors[0], dd.d_derived);
        assert!(dd.zd.is_trivial());
        let hall = sf.hall.as_ref().unwrap();
        assert!(centralizes(&g, hall.generators()[0], dd.m[0].elements()));
        let r = check_decomposition_conditions(&sf, &dd, true).unwrap();
        assert!(r.factors_minimal_direct && r.e_generate_complement && r.centralizers_nontrivial);
        assert_eq!(r.support_patterns, Some(true));
    }

    #[test]
    fn abelian_derived_gives_no_factors() {
        for (q, p) in [(4, 2), (8, 2), (9, 3)] {
            let g = agl1(q).unwrap();
            let sf = check_standing_form(&g, p);
            let dd = decompose_d(&sf).unwrap();
            assert_eq!(dd.n(), 0);
            assert_eq!(dd.zd, dd.d_derived);
            assert!(dd.t.is_trivial());
            check_decomposition_conditions(&sf, &dd, true).unwrap();
        }
    }
}
