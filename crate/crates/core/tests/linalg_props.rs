use proptest::prelude::*;
use soclelab::linalg::{FpMatrix, Prime, Subspace};

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

/// A prime together with `rows × cols` entries reduced mod that prime.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FpMatrix> {
    (prime(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0u32..p as u32, r * c)
            .prop_map(move |e| FpMatrix::new(Prime::new(p).unwrap(), r, c, e).unwrap())
    })
}

/// Three subspaces of a common `F_p^n`.
fn three_subspaces() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (prime(), 1usize..=6).prop_flat_map(|(p, n)| {
        let vecs = move || prop::collection::vec(prop::collection::vec(0u32..p as u32, n), 0..=4);
        (vecs(), vecs(), vecs()).prop_map(move |(a, b, c)| {
            let pr = Prime::new(p).unwrap();
            (
                Subspace::from_vectors(pr, n, &a).unwrap(),
                Subspace::from_vectors(pr, n, &b).unwrap(),
                Subspace::from_vectors(pr, n, &c).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(6, 6)) {
        let (r, rank) = m.rref();
        let (rr, rank2) = r.rref();
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(r, rr);
    }

    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix(6, 7)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rank_of_transpose(m in matrix(5, 6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn dimension_formula((u, v, _) in three_subspaces()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn modular_law((u, x, v) in three_subspaces()) {
        // U ⊆ W forces W ∩ (U + V) = U + (W ∩ V).
        let w = u.sum(&x).unwrap();
        let lhs = w.intersection(&u.sum(&v).unwrap()).unwrap();
        let rhs = u.sum(&w.intersection(&v).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn mutual_containment_is_equality((u, v, _) in three_subspaces()) {
        let both = u.contains(&v).unwrap() && v.contains(&u).unwrap();
        prop_assert_eq!(both, u.equals(&v).unwrap());
        prop_assert_eq!(both, u == v);
    }

    #[test]
    fn reduce_is_zero_exactly_on_members((u, v, _) in three_subspaces()) {
        for w in v.basis_vectors() {
            let zero = u.reduce(w).iter().all(|&x| x == 0);
            prop_assert_eq!(zero, u.contains_vector(w));
        }
    }
}
