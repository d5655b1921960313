//! Property tests for the structural invariants of the core types.

use std::cmp::Ordering;

use proptest::prelude::*;

use multilin::multiindex::{self, MultiIndex};
use multilin::sym::{column_vector, vector_power_normalized};
use multilin::{AltMatrix, DenseMatrix, Rational, SymMatrix};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn multi_index(dim: usize) -> impl Strategy<Value = MultiIndex> {
    proptest::collection::vec(0usize..4, dim).prop_map(MultiIndex::new)
}

fn dense(rows: usize, cols: usize) -> impl Strategy<Value = DenseMatrix> {
    proptest::collection::vec(rational(), rows * cols)
        .prop_map(move |v| DenseMatrix::from_entries(rows, cols, v).unwrap())
}

fn sym(n: usize, n_prime: usize, p: usize, p_prime: usize) -> impl Strategy<Value = SymMatrix> {
    let rows = multiindex::stratum_size(n, p);
    let cols = multiindex::stratum_size(n_prime, p_prime);
    proptest::collection::vec(rational(), rows * cols).prop_map(move |v| {
        SymMatrix::from_dense(
            n,
            n_prime,
            p,
            p_prime,
            &DenseMatrix::from_entries(rows, cols, v).unwrap(),
        )
        .unwrap()
    })
}

fn alt(n: usize, n_prime: usize, p: usize, p_prime: usize) -> impl Strategy<Value = AltMatrix> {
    let rows = multiindex::strict_stratum_size(n, p);
    let cols = multiindex::strict_stratum_size(n_prime, p_prime);
    proptest::collection::vec(rational(), rows * cols).prop_map(move |v| {
        AltMatrix::from_dense(
            n,
            n_prime,
            p,
            p_prime,
            &DenseMatrix::from_entries(rows, cols, v).unwrap(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &Rational::zero(), a.clone());
        prop_assert_eq!(&a * &Rational::one(), a.clone());
        prop_assert_eq!(&a + &(-&a), Rational::zero());
        if !b.is_zero() {
            prop_assert_eq!(&b * &b.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn graded_order_is_total_and_translation_compatible(
        a in multi_index(3),
        b in multi_index(3),
        c in multi_index(3),
    ) {
        let ab = a.cmp_graded(&b).unwrap();
        let ba = b.cmp_graded(&a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let shifted = a.add(&c).unwrap().cmp_graded(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(ab, shifted);
    }

    #[test]
    fn rank_unrank_roundtrip(a in multi_index(4)) {
        let rank = a.rank();
        prop_assert_eq!(multiindex::unrank(4, a.weight(), rank).unwrap(), a);
    }

    #[test]
    fn det_is_multiplicative(a in dense(3, 3), b in dense(3, 3)) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn rank_is_transpose_invariant(a in dense(3, 4)) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn inverse_multiplies_to_identity(a in dense(3, 3)) {
        if !a.det().unwrap().is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.matmul(&inv).unwrap(), DenseMatrix::identity(3));
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn odot_commutes_and_distributes(
        a in sym(2, 2, 1, 1),
        b in sym(2, 2, 1, 1),
        c in sym(2, 2, 1, 1),
    ) {
        prop_assert_eq!(a.odot(&b).unwrap(), b.odot(&a).unwrap());
        let lhs = a.add(&b).unwrap().odot(&c).unwrap();
        let rhs = a.odot(&c).unwrap().add(&b.odot(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn odot_is_associative(
        a in sym(2, 2, 1, 0),
        b in sym(2, 2, 0, 1),
        c in sym(2, 2, 1, 1),
    ) {
        let lhs = a.odot(&b).unwrap().odot(&c).unwrap();
        let rhs = a.odot(&b.odot(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_anticommutes_with_graded_sign(
        a in alt(3, 3, 1, 1),
        b in alt(3, 3, 1, 1),
    ) {
        // Sign (-1)^{pq + p'q'} is +1 for two weight-(1,1) factors.
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
    }

    #[test]
    fn vector_wedge_anticommutes(
        xs in proptest::collection::vec(rational(), 3),
        ys in proptest::collection::vec(rational(), 3),
    ) {
        let x = multilin::alt::alt_column_vector(&xs);
        let y = multilin::alt::alt_column_vector(&ys);
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().neg());
        prop_assert!(x.wedge(&x).unwrap().is_zero());
    }

    #[test]
    fn vector_power_formula_matches_odot_route(
        xs in proptest::collection::vec(rational(), 3),
        p in 0usize..4,
    ) {
        let v = column_vector(&xs);
        prop_assert_eq!(v.sym_power(p).unwrap(), vector_power_normalized(&xs, p));
    }
}
