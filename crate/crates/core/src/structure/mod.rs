//! Structural analysis of groups `G = G' ⋊ H` whose socle of the center may
//! be an ideal: the standing form, the reduction chain, the decomposition of
//! `D = G/G''`, the central-product splitting, the iff-criterion for a
//! minimal normal `D'`, and the explicit non-ideal witness.
//!
//! Every statement that is supposed to hold under checked hypotheses is
//! verified on the computed objects; a violation is returned as
//! [`Error::Consistency`](crate::Error::Consistency).

mod annihilator;
mod criterion;
mod decompose;
mod reduction;
mod split;

use serde::Serialize;

use crate::algebra::{CentralSubspace, GroupAlgebra, IdealVerdict};
use crate::error::{Error, Result};
use crate::group::{find_isomorphism, fingerprint, FiniteGroup, Subgroup};
use crate::linalg::Subspace;

pub use annihilator::{verify_annihilators, AnnihilatorReport};
pub use criterion::{check_affine_criterion, witness_non_ideal, AffineCriterionReport, Witness};
pub use decompose::{
    check_decomposition_conditions, decompose_d, DDecomposition, DSummary, DecompositionConditions,
};
pub use reduction::{reduction_pipeline, Reduction, ReductionStep};
pub use split::{split_central_product, CentralProductSplit, ComponentReport};

/// Isomorphism search is attempted up to this order; above it only
/// fingerprints are compared.
pub const ISOMORPHISM_SEARCH_LIMIT: usize = 512;

/// Support-pattern conjugacy in `T` is checked exhaustively up to this size.
pub const SUPPORT_PATTERN_LIMIT: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StandingFlags {
    pub gprime_is_sylow: bool,
    pub h_abelian: bool,
    pub op_prime_trivial: bool,
    pub z_gprime_equals_gsecond: bool,
}

/// `G` together with `G'`, `G''`, a Sylow subgroup and a complement.
#[derive(Clone, Debug)]
pub struct StandingForm<'a> {
    pub group: &'a FiniteGroup,
    pub p: u64,
    pub derived: Subgroup,
    pub second_derived: Subgroup,
    pub sylow: Subgroup,
    pub hall: Option<Subgroup>,
    pub flags: StandingFlags,
}

impl StandingForm<'_> {
    /// `G' ∈ Syl_p(G)`, `H` abelian and `O_{p'}(G) = 1`.
    pub fn holds(&self) -> bool {
        self.flags.gprime_is_sylow && self.flags.h_abelian && self.flags.op_prime_trivial
    }

    pub fn hall(&self) -> Result<&Subgroup> {
        self.hall
            .as_ref()
            .ok_or_else(|| Error::Inapplicable("no complement to the Sylow subgroup".into()))
    }

    pub(crate) fn require(&self) -> Result<&Subgroup> {
        if !self.holds() {
            return Err(Error::Inapplicable(format!(
                "standing hypotheses fail: {:?}",
                self.flags
            )));
        }
        self.hall()
    }

    pub(crate) fn require_special(&self) -> Result<&Subgroup> {
        let h = self.require()?;
        if !self.flags.z_gprime_equals_gsecond {
            return Err(Error::Inapplicable("Z(G') differs from G''".into()));
        }
        Ok(h)
    }
}

pub fn check_standing_form(g: &FiniteGroup, p: u64) -> StandingForm<'_> {
    let derived = g.derived_subgroup();
    let second_derived = g.second_derived();
    let sh = g.sylow_and_hall(p);
    let hall = if sh.sylow == derived {
        sh.hall_complement
    } else {
        None
    };
    let gprime_is_sylow = sh.sylow == derived;
    let h_abelian = hall.as_ref().is_some_and(|h| {
        let e = h.elements();
        e.iter()
            .all(|&a| e.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    });
    let op_prime_trivial = g.o_p_prime(p).is_trivial();
    let z_gprime_equals_gsecond = g.center_of(&derived) == second_derived;
    StandingForm {
        group: g,
        p,
        derived,
        second_derived,
        sylow: sh.sylow,
        hall,
        flags: StandingFlags {
            gprime_is_sylow,
            h_abelian,
            op_prime_trivial,
            z_gprime_equals_gsecond,
        },
    }
}

/// Algebra-level statements that hold under the standing hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StandingInvariants {
    /// The class-based radical basis spans the nilradical.
    pub radical_bases_agree: bool,
    /// Socle elements are constant on `Z(G')`.
    pub socle_constant_on_center_of_derived: bool,
    /// `soc = (G')⁺·F_pG`, checked when the socle is an ideal.
    pub socle_equals_gprime_plus: Option<bool>,
    /// `Φ(G') ⊆ Z(G')`, checked when the socle is an ideal.
    pub frattini_in_center: Option<bool>,
}

impl StandingInvariants {
    pub fn all_hold(&self) -> bool {
        self.radical_bases_agree
            && self.socle_constant_on_center_of_derived
            && self.socle_equals_gprime_plus != Some(false)
            && self.frattini_in_center != Some(false)
    }
}

/// Checks the algebra invariants that the standing hypotheses imply.
pub fn check_standing_invariants(
    sf: &StandingForm<'_>,
    radical: &CentralSubspace,
    socle: &CentralSubspace,
    verdict: IdealVerdict,
) -> Result<StandingInvariants> {
    sf.require()?;
    let g = sf.group;
    let a = GroupAlgebra::new(g, sf.p)?;
    let fast: Vec<Vec<u32>> = a
        .radical_class_basis()
        .iter()
        .map(|b| b.coords().to_vec())
        .collect();
    let radical_bases_agree =
        Subspace::from_vectors(a.prime(), a.center_dim(), &fast)? == radical.space;
    let zg = g.center_of(&sf.derived);
    let socle_constant_on_center_of_derived = socle.basis().iter().all(|z| {
        let y = a.expand(z);
        zg.elements().iter().all(|&x| y.coeff(x) == y.coeff(0))
    });
    let (socle_equals_gprime_plus, frattini_in_center) = if verdict.direct {
        let eq = a.expand_subspace(socle) == a.gprime_plus_fg();
        let phi = g.frattini_of_p_group(&sf.derived)?;
        (Some(eq), Some(phi.is_subgroup_of(&zg)))
    } else {
        (None, None)
    };
    let out = StandingInvariants {
        radical_bases_agree,
        socle_constant_on_center_of_derived,
        socle_equals_gprime_plus,
        frattini_in_center,
    };
    if !out.all_hold() {
        return Err(Error::Consistency(format!(
            "standing invariants violated: {out:?}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoMethod {
    Isomorphism,
    Fingerprint,
}

/// Isomorphism by search up to [`ISOMORPHISM_SEARCH_LIMIT`], by fingerprint above.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> (bool, IsoMethod) {
    if a.order() <= ISOMORPHISM_SEARCH_LIMIT {
        (
            a.order() == b.order() && find_isomorphism(a, b).is_some(),
            IsoMethod::Isomorphism,
        )
    } else {
        (fingerprint(a) == fingerprint(b), IsoMethod::Fingerprint)
    }
}

/// Coordinates of an elementary abelian p-subgroup of `d` in a chosen basis.
pub(crate) struct Coordinates {
    p: usize,
    pub(crate) rank: usize,
    /// Base-`p` index of each element's coordinate vector; `usize::MAX` outside.
    index_of: Vec<usize>,
    element_of: Vec<usize>,
}

impl Coordinates {
    /// Basis taken greedily from `first`, then extended from `rest`.
    pub(crate) fn new(d: &FiniteGroup, p: usize, first: &[usize], rest: &[usize]) -> (Self, usize) {
        let mut index_of = vec![usize::MAX; d.order()];
        index_of[0] = 0;
        let mut element_of = vec![0];
        let mut rank = 0;
        let mut first_rank = 0;
        for (pass, list) in [first, rest].into_iter().enumerate() {
            for &b in list {
                if index_of[b] != usize::MAX {
                    continue;
                }
                let stride = element_of.len();
                let old = element_of.clone();
                let mut power = 0;
                for c in 1..p {
                    power = d.mul(power, b);
                    for (i, &x) in old.iter().enumerate() {
                        let y = d.mul(x, power);
                        index_of[y] = c * stride + i;
                        element_of.push(y);
                    }
                }
                rank += 1;
                if pass == 0 {
                    first_rank = rank;
                }
            }
        }
        (
            Coordinates {
                p,
                rank,
                index_of,
                element_of,
            },
            first_rank,
        )
    }

    pub(crate) fn vector(&self, x: usize) -> Vec<usize> {
        let mut i = self.index_of[x];
        (0..self.rank)
            .map(|_| {
                let c = i % self.p;
                i /= self.p;
                c
            })
            .collect()
    }

    pub(crate) fn element(&self, v: &[usize]) -> usize {
        let i = v.iter().rev().fold(0, |acc, &c| acc * self.p + c);
        self.element_of[i]
    }
}

/// Whether the nontrivial normal subgroup `n` of `g` is minimal normal.
pub(crate) fn is_minimal_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    !n.is_trivial() && n.is_normal() && n.non_identity().all(|x| g.normal_closure(&[x]) == *n)
}

/// Whether `h` commutes with every element of `set`.
pub(crate) fn centralizes(g: &FiniteGroup, h: usize, set: &[usize]) -> bool {
    set.iter().all(|&x| g.mul(h, x) == g.mul(x, h))
}
