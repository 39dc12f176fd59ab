use std::sync::OnceLock;

use proptest::prelude::*;
use soclelab::algebra::{AlgebraElement, CentralElement, GroupAlgebra};
use soclelab::group::io::construct_family;
use soclelab::group::FiniteGroup;

const CASES: &[(&str, u64)] = &[
    ("S3", 2),
    ("S3", 3),
    ("D8", 2),
    ("Q8", 2),
    ("A4", 2),
    ("A4", 3),
    ("SL2(3)", 2),
    ("SL2(3)", 3),
    ("S4", 2),
    ("AGL(1,5)", 5),
    ("extraspecial(27,+)", 3),
    ("direct(S3,C3)", 3),
];

fn groups() -> &'static [FiniteGroup] {
    static G: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| {
        CASES
            .iter()
            .map(|(s, _)| construct_family(s, 256).unwrap())
            .collect()
    })
}

/// A case index and a seed vector long enough for any group in the list.
fn case_and_seed() -> impl Strategy<Value = (usize, Vec<u32>, Vec<u32>)> {
    (
        0..CASES.len(),
        prop::collection::vec(any::<u32>(), 32),
        prop::collection::vec(any::<u32>(), 32),
    )
}

fn element(a: &GroupAlgebra<'_>, seed: &[u32]) -> AlgebraElement {
    let p = a.prime().get();
    let coeffs = (0..a.dim())
        .map(|i| seed[i % seed.len()].rotate_left(i as u32) % p)
        .collect();
    a.element(coeffs).unwrap()
}

/// A random combination of a central subspace's basis.
fn combo(a: &GroupAlgebra<'_>, basis: &[CentralElement], seed: &[u32]) -> CentralElement {
    let p = a.prime();
    let mut coords = vec![0u32; a.center_dim()];
    for (b, &s) in basis.iter().zip(seed) {
        let c = s % p.get();
        for (x, &y) in coords.iter_mut().zip(b.coords()) {
            *x = p.add(*x, p.mul(c, y));
        }
    }
    a.central(coords).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn central_elements_commute((i, s, t) in case_and_seed()) {
        let g = &groups()[i];
        let a = GroupAlgebra::new(g, CASES[i].1).unwrap();
        let z = combo(&a, &a.center_basis(), &s);
        let x = element(&a, &t);
        let zx = a.multiply(&a.expand(&z), &x).unwrap();
        let xz = a.multiply(&x, &a.expand(&z)).unwrap();
        prop_assert_eq!(zx, xz);
    }

    #[test]
    fn radical_elements_are_nilpotent((i, s, _) in case_and_seed()) {
        let g = &groups()[i];
        let a = GroupAlgebra::new(g, CASES[i].1).unwrap();
        let j = a.nilradical_center();
        let z = combo(&a, &j.basis(), &s);
        let mut power = z.clone();
        for _ in 0..a.center_dim() {
            power = a.central_multiply(&power, &z);
        }
        prop_assert!(power.is_zero());
    }

    #[test]
    fn socle_annihilates_radical((i, s, t) in case_and_seed()) {
        let g = &groups()[i];
        let a = GroupAlgebra::new(g, CASES[i].1).unwrap();
        let j = a.nilradical_center();
        let soc = a.socle_from_radical(&j);
        let y = combo(&a, &soc.basis(), &s);
        let r = combo(&a, &j.basis(), &t);
        prop_assert!(a.central_multiply(&y, &r).is_zero());
        prop_assert_eq!(soc, a.socle_center());
    }

    #[test]
    fn projection_is_multiplicative((i, s, t) in case_and_seed()) {
        let g = &groups()[i];
        let p = CASES[i].1;
        let a = GroupAlgebra::new(g, p).unwrap();
        let (x, y) = (element(&a, &s), element(&a, &t));
        for n in [g.derived_subgroup(), g.center()] {
            let q = g.quotient(&n).unwrap();
            let b = GroupAlgebra::new(q.target(), p).unwrap();
            let lhs = a.project_nu(&q, &a.multiply(&x, &y).unwrap()).unwrap();
            let rhs = b
                .multiply(&a.project_nu(&q, &x).unwrap(), &a.project_nu(&q, &y).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn expand_and_restrict_are_inverse((i, s, _) in case_and_seed()) {
        let g = &groups()[i];
        let a = GroupAlgebra::new(g, CASES[i].1).unwrap();
        let z = combo(&a, &a.center_basis(), &s);
        prop_assert_eq!(a.restrict(&a.expand(&z)), Some(z));
    }
}
