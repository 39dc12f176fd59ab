//! The class-two affine family covers every branch of the iff-criterion:
//! Camina instances with an ideal socle, a failing centralizer condition,
//! and a non-Camina instance carrying an explicit witness.

use soclelab::algebra::GroupAlgebra;
use soclelab::group::affine_class_two;
use soclelab::structure::{check_affine_criterion, check_standing_form, witness_non_ideal};

fn report(q: usize, w: usize, j: usize) -> soclelab::structure::AffineCriterionReport {
    let g = affine_class_two(q, w, j).unwrap();
    let p = soclelab::linalg::prime_divisors(q as u64)[0];
    let sf = check_standing_form(&g, p);
    let v = GroupAlgebra::new(&g, p).unwrap().is_socle_ideal().unwrap();
    check_affine_criterion(&sf, v).unwrap()
}

#[test]
fn camina_instances_are_ideal() {
    for (q, w, j) in [(4, 2, 1), (9, 3, 1), (16, 4, 2)] {
        let r = report(q, w, j);
        assert!(r.hypotheses_ok, "ac2({q},{w},{j})");
        assert!(r.cond_agl && r.cond_chg && r.cond_camina && r.direct);
    }
}

#[test]
fn trivial_centralizer_is_not_ideal() {
    let r = report(8, 8, 1);
    assert!(r.hypotheses_ok);
    assert!(r.cond_agl && !r.cond_chg && !r.direct);
    assert!(r.witness.is_none());
}

#[test]
fn non_camina_instance_carries_witness() {
    let r = report(16, 16, 1);
    assert!(r.hypotheses_ok);
    assert!(r.cond_agl && r.cond_chg && !r.cond_camina && !r.direct);
    let w = r.witness.expect("witness");
    assert!(w.annihilates_radical_basis && w.in_socle && w.outside_gprime_plus);
    assert!(w.c_order < w.second_derived_order);
}

#[test]
fn witness_refuses_camina_groups() {
    let g = affine_class_two(16, 4, 2).unwrap();
    let sf = check_standing_form(&g, 2);
    assert!(witness_non_ideal(&sf).is_err());
}
