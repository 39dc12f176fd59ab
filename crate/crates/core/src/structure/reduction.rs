use serde::Serialize;

use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// One step of the reduction chain with the socle verdict before and after.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionStep {
    pub name: String,
    pub order_before: usize,
    pub order_after: usize,
    pub ideal_before: bool,
    pub ideal_after: bool,
    /// Whether equality of the two verdicts was asserted at this step.
    pub asserted: bool,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// `O^p(G/O_{p'}(G))` when the splitting holds, else `G/O_{p'}(G)`.
    pub group: FiniteGroup,
    pub steps: Vec<ReductionStep>,
    /// Whether `G/O_{p'}(G) = C_P(H) * O^p(G/O_{p'}(G))`.
    pub split_holds: bool,
}

fn ideal(g: &FiniteGroup, p: u64) -> Result<bool> {
    Ok(GroupAlgebra::new(g, p)?.is_socle_ideal()?.direct)
}

fn is_abelian_sub(g: &FiniteGroup, h: &Subgroup) -> bool {
    let e = h.generators();
    e.iter()
        .all(|&a| e.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Walks `G → G/O_{p'}(G) → O^p(G/O_{p'}(G))`, recomputing the socle
/// verdict at each stage and checking the statements that tie them together.
pub fn reduction_pipeline(g: &FiniteGroup, p: u64) -> Result<Reduction> {
    let sh = g.sylow_and_hall(p);
    let Some(hall) = sh.hall_complement else {
        return Err(Error::Unsupported(
            "the Sylow subgroup is not normal with a complement".into(),
        ));
    };
    let h_abelian = is_abelian_sub(g, &hall);
    let mut steps = Vec::new();

    let v0 = ideal(g, p)?;
    let q = g.quotient(&g.o_p_prime(p))?;
    let g1 = q.target().clone();
    let v1 = ideal(&g1, p)?;
    if h_abelian && v0 != v1 {
        return Err(Error::Consistency(format!(
            "quotient by the largest normal p'-subgroup changed the verdict ({v0} to {v1})"
        )));
    }
    steps.push(ReductionStep {
        name: "quotient_by_o_p_prime".into(),
        order_before: g.order(),
        order_after: g1.order(),
        ideal_before: v0,
        ideal_after: v1,
        asserted: h_abelian,
        note: if h_abelian {
            "complement abelian".into()
        } else {
            "complement nonabelian; equality not asserted".into()
        },
    });

    let sh1 = g1.sylow_and_hall(p);
    let hall1 = sh1
        .hall_complement
        .ok_or_else(|| Error::Consistency("quotient lost its complement".into()))?;
    let cp = g1.centralizer_of(&hall1, &sh1.sylow);
    let op = g1.o_upper_p(p);
    let split_holds =
        g1.join(&cp, &op).order() == g1.order() && g1.commutator_subgroup(&cp, &op).is_trivial();
    if v1 && !split_holds {
        return Err(Error::Consistency(
            "socle is an ideal but C_P(H) and O^p do not form a central product".into(),
        ));
    }
    if !split_holds {
        steps.push(ReductionStep {
            name: "split_c_p_h_times_o_upper_p".into(),
            order_before: g1.order(),
            order_after: g1.order(),
            ideal_before: v1,
            ideal_after: v1,
            asserted: false,
            note: "not a central product; nothing split".into(),
        });
        return Ok(Reduction {
            group: g1,
            steps,
            split_holds,
        });
    }
    let (cp_group, _) = g1.subgroup_as_group(&cp);
    let (op_group, _) = g1.subgroup_as_group(&op);
    let vc = ideal(&cp_group, p)?;
    let vo = ideal(&op_group, p)?;
    if v1 != (vc && vo) {
        return Err(Error::Consistency(format!(
            "central product verdict {v1} but components give {vc} and {vo}"
        )));
    }
    steps.push(ReductionStep {
        name: "split_c_p_h_times_o_upper_p".into(),
        order_before: g1.order(),
        order_after: op_group.order(),
        ideal_before: v1,
        ideal_after: vo,
        asserted: true,
        note: format!("|C_P(H)| = {}, component verdict {vc}", cp.order()),
    });
    Ok(Reduction {
        group: op_group,
        steps,
        split_holds,
    })
}
