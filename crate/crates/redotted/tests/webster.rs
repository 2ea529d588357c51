use proptest::prelude::*;
use redotted::exactalg::{Fp, Q};
use redotted::webster::{
    basis_in_degree, center_basis_check, center_element, cross, down, enumerated_block_series,
    graded_dim_block, is_central, up, verify_relations, xdot, ydot, WElem,
};

#[test]
fn relations_hold_for_two_and_three_red_strands() {
    for n in 2..=3 {
        let rep = verify_relations::<Q>(n);
        assert!(rep.passed(), "n={n}: {:?}", rep.failures());
    }
    assert!(verify_relations::<Fp<32003>>(3).passed());
}

#[test]
fn blocks_of_w21() {
    let want = [
        ((2, 2), "1/(1-q^2)^2"),
        ((2, 3), "q/(1-q^2)^2"),
        ((3, 2), "q/(1-q^2)^2"),
        ((3, 3), "(1+q^2)/(1-q^2)^2"),
    ];
    for ((a, b), text) in want {
        let g = graded_dim_block(2, a, b);
        assert_eq!(g.to_text(), text);
        assert_eq!(enumerated_block_series(2, a, b, 20), g.series(20));
    }
}

#[test]
fn block_dimensions_agree_with_enumeration_for_three_strands() {
    for a in 2..=4 {
        for b in 2..=4 {
            assert_eq!(
                enumerated_block_series(3, a, b, 8),
                graded_dim_block(3, a, b).series(8),
                "({a},{b})"
            );
        }
    }
}

#[test]
fn double_crossing_is_a_dot_difference() {
    // e_2 psi_2 psi_2 e_2 = (x_1 - x_2) e_2 at n = 2: the leftmost-black term vanishes.
    let n = 2;
    let w: WElem<Q> = down(n, 3).mul(&up(n, 2));
    let want = xdot::<Q>(n, 1).sub(&xdot(n, 2)).mul(&WElem::idem(n, 2));
    assert_eq!(w, want);
    assert!(cross::<Q>(n, 2, 2).mul(&cross(n, 2, 2)).is_zero());
}

#[test]
fn center_of_small_algebras() {
    for n in 2..=3 {
        let rep = center_basis_check::<Q>(n, 8);
        assert!(rep.passed(), "n={n}: {rep:?}");
    }
    assert!(is_central(&center_element::<Q>(3, 1)));
    assert!(!is_central(&ydot::<Q>(3, 3)));
}

fn small_basis(n: usize) -> Vec<WElem<Q>> {
    (0..=3).flat_map(|d| basis_in_degree::<Q>(n, d)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let b = small_basis(3);
        let (x, y, z) = (&b[i % b.len()], &b[j % b.len()], &b[k % b.len()]);
        prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
    }

    #[test]
    fn degree_is_additive(i in 0usize..1000, j in 0usize..1000) {
        let b = small_basis(3);
        let (x, y) = (&b[i % b.len()], &b[j % b.len()]);
        let p = x.mul(y);
        if !p.is_zero() {
            prop_assert_eq!(p.degree(), Some(x.degree().unwrap() + y.degree().unwrap()));
        }
    }

    #[test]
    fn unit_is_neutral(i in 0usize..1000) {
        let b = small_basis(3);
        let x = &b[i % b.len()];
        prop_assert_eq!(&WElem::unit(3).mul(x), x);
        prop_assert_eq!(&x.mul(&WElem::unit(3)), x);
    }
}
