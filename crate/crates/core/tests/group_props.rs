use std::sync::OnceLock;

use proptest::prelude::*;
use soclelab::group::io::construct_family;
use soclelab::group::{
    agl1, direct_product, element_parts, find_isomorphism, semidirect_product, FiniteGroup,
    SemidirectSpec, DEFAULT_MAX_ORDER,
};
use soclelab::linalg::prime_divisors;

const POOL: &[&str] = &[
    "C12",
    "D8",
    "D12",
    "Q8",
    "Q16",
    "S4",
    "A5",
    "SL2(3)",
    "AGL(1,8)",
    "AGL(1,9)",
    "extraspecial(27,-)",
    "direct(S3,C4)",
    "central(Q8,D8)",
    "ac2(4,2,1)",
];

fn pool() -> &'static [FiniteGroup] {
    static P: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    P.get_or_init(|| {
        POOL.iter()
            .map(|s| construct_family(s, DEFAULT_MAX_ORDER).unwrap())
            .collect()
    })
}

/// A pool group with three element indices.
fn group_and_elements() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..POOL.len()).prop_flat_map(|i| {
        let n = pool()[i].order();
        (Just(i), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_axioms_hold_pointwise((i, a, b, c) in group_and_elements()) {
        let g = &pool()[i];
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert_eq!(g.commutator(a, b), g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }

    #[test]
    fn quotients_are_homomorphisms((i, a, b, _) in group_and_elements()) {
        let g = &pool()[i];
        for n in [g.derived_subgroup(), g.center(), g.second_derived()] {
            let q = g.quotient(&n).unwrap();
            let t = q.target();
            prop_assert_eq!(q.proj(g.mul(a, b)), t.mul(q.proj(a), q.proj(b)));
            prop_assert_eq!(t.order() * n.order(), g.order());
            prop_assert_eq!(q.proj(q.section(q.proj(a))), q.proj(a));
        }
    }

    #[test]
    fn element_parts_split_orders((i, x, _, _) in group_and_elements()) {
        let g = &pool()[i];
        for p in prime_divisors(g.order() as u64) {
            let (xp, xq) = element_parts(g, x, p);
            prop_assert_eq!(g.mul(xp, xq), x);
            prop_assert_eq!(g.mul(xp, xq), g.mul(xq, xp));
            let op = g.element_order(xp) as u64;
            let oq = g.element_order(xq) as u64;
            prop_assert!(prime_divisors(op).iter().all(|&r| r == p));
            prop_assert!(!oq.is_multiple_of(p));
        }
    }

    #[test]
    fn largest_normal_p_prime_subgroup_of_quotient_is_trivial(i in 0..POOL.len()) {
        let g = &pool()[i];
        for p in prime_divisors(g.order() as u64) {
            let q = g.quotient(&g.o_p_prime(p)).unwrap();
            prop_assert!(q.target().o_p_prime(p).is_trivial());
        }
    }

    #[test]
    fn class_sizes_partition_and_divide(i in 0..POOL.len()) {
        let g = &pool()[i];
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        prop_assert_eq!(sizes.iter().sum::<usize>(), g.order());
        prop_assert!(sizes.iter().all(|s| g.order().is_multiple_of(*s)));
        prop_assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), g.center().order());
    }

    #[test]
    fn affine_groups_are_frobenius(q in prop::sample::select(vec![2usize, 3, 4, 5, 7, 8, 9, 11, 13, 16])) {
        let g = agl1(q).unwrap();
        prop_assert_eq!(g.order(), q * (q - 1));
        let d = g.derived_subgroup();
        if q > 2 {
            prop_assert_eq!(d.order(), q);
            prop_assert!(g.is_frobenius_with_kernel(&d));
            prop_assert!(g.center().is_trivial());
        }
        prop_assert_eq!(g.class_count(), q);
    }

    #[test]
    fn trivial_action_semidirect_is_direct(a in 0..4usize, b in 0..4usize) {
        let small = ["C2", "C3", "D6", "C4"];
        let n = construct_family(small[a], 64).unwrap();
        let h = construct_family(small[b], 64).unwrap();
        let identity: Vec<usize> = (0..n.order()).collect();
        let sd = semidirect_product(&SemidirectSpec {
            kernel_group: n.clone(),
            acting_group: h.clone(),
            action: vec![identity; h.order()],
        })
        .unwrap();
        prop_assert!(find_isomorphism(&sd, &direct_product(&n, &h)).is_some());
    }
}
