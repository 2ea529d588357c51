use proptest::prelude::*;
use redotted::exactalg::{Field, Q};
use redotted::gradedla::{
    inverse_power_series, rank_of, sparse_from_pairs, Laurent, Matrix, RationalGdim, Solution,
};

fn laurent(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().copied())
}

#[test]
fn inverse_powers_of_one_minus_q_squared() {
    // 1/(1-q^2)^2 = sum (k+1) q^{2k}
    let s = inverse_power_series(2, 8);
    for k in 0..=4 {
        assert_eq!(s.coeff(2 * k), k + 1);
        assert_eq!(s.coeff(2 * k + 1), 0);
    }
}

#[test]
fn rational_graded_dimensions_print_canonically() {
    let g = RationalGdim::new(laurent(&[(0, 1), (2, 1)]), 2);
    assert_eq!(g.to_text(), "(1+q^2)/(1-q^2)^2");
    assert_eq!(g.series(4), laurent(&[(0, 1), (2, 3), (4, 5)]));
    assert_eq!(RationalGdim::new(Laurent::q(), 2).to_text(), "q/(1-q^2)^2");
}

#[test]
fn linear_algebra_over_the_rationals() {
    let m = Matrix::<Q>::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
    assert_eq!(m.rank(), 2);
    for v in m.kernel() {
        assert!(m.apply(&v).iter().all(|x| x.is_zero()));
    }
    match m.solve(&[Q::from_i64(1), Q::from_i64(0), Q::from_i64(0)]) {
        Solution::Inconsistent(_) => {}
        Solution::Solved(_) => panic!("system is inconsistent"),
    }
    let a = Matrix::<Q>::from_i64(&[&[2, 1], &[1, 1]]);
    assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
}

#[test]
fn sparse_rank() {
    let v = |p: &[(usize, i64)]| {
        sparse_from_pairs(
            p.iter()
                .map(|&(k, c)| (k, Q::from_i64(c)))
                .collect::<Vec<_>>(),
        )
    };
    assert_eq!(
        rank_of(&[v(&[(0, 1), (1, 1)]), v(&[(1, 1)]), v(&[(0, 2), (1, 3)])]),
        2
    );
}

proptest! {
    #[test]
    fn laurent_ring_axioms(
        a in prop::collection::vec((-4i64..4, -3i64..3), 0..4),
        b in prop::collection::vec((-4i64..4, -3i64..3), 0..4),
        c in prop::collection::vec((-4i64..4, -3i64..3), 0..4),
    ) {
        let (a, b, c) = (laurent(&a), laurent(&b), laurent(&c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn shifts_compose(a in prop::collection::vec((-4i64..4, -3i64..3), 0..4), s in -3i64..3, t in -3i64..3) {
        let a = laurent(&a);
        prop_assert_eq!(a.shift(s).shift(t), a.shift(s + t));
        prop_assert_eq!(a.shift(s), a.mul(&Laurent::monomial(1, s)));
    }
}
