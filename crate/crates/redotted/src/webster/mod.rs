//! The algebra `W(n,1)`: elements in the blockwise basis, multiplication through
//! the faithful module `V_n`, the defining relations, grading and center.

pub mod center;
pub mod elem;
pub mod gdim;
pub mod gens;
pub mod relations;

pub use center::{center_basis_check, center_element, is_central, CenterReport};
pub use elem::{
    basis_in_degree, block_basis_in_degree, block_len, decompose, p_factor, Block, WElem,
};
pub use gdim::{enumerated_block_series, graded_dim_block, graded_dim_total};
pub use gens::{
    cross, cross_all, dot, dot_all, down, seq_index, seq_string, up, xdot, ydot, GeneratorWord,
    Token,
};
pub use relations::{generator_degrees, verify_relations, RelationReport, Status};

use crate::exactalg::{Field, QuotElem, YPoly};

/// Compare two elements through their action on the `R`-basis `1, y, ...` of every `V_{n,i}`.
pub fn equal_as_operators<F: Field>(a: &WElem<F>, b: &WElem<F>) -> bool {
    let n = a.n();
    for i in 2..=n + 1 {
        for c in 0..i - 1 {
            let v = QuotElem::new(&YPoly::one(n).shift(c), i).expect("valid index");
            if a.act(&v) != b.act(&v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Poly, Q};

    fn x(n: usize, i: usize) -> Poly<Q> {
        Poly::var(n, i)
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let n = 3;
        for i in 1..=4 {
            for j in 1..=4 {
                let p = WElem::<Q>::idem(n, i).mul(&WElem::idem(n, j));
                let expected = if i == j {
                    WElem::idem(n, i)
                } else {
                    WElem::zero(n)
                };
                assert_eq!(p, expected);
            }
        }
        assert!(WElem::<Q>::idem(n, 1).is_zero());
    }

    #[test]
    fn double_crossing_at_e2() {
        let n = 2;
        let p = down::<Q>(n, 3).mul(&up(n, 2));
        let expected = WElem::from_block(n, 2, 2, vec![&x(n, 1) - &x(n, 2)]).unwrap();
        assert_eq!(p, expected);
        let w: WElem<Q> = GeneratorWord(vec![Token::Cross(2), Token::Cross(2), Token::Idem(2)])
            .evaluate(n)
            .unwrap();
        assert_eq!(w, expected);
    }

    #[test]
    fn decompose_examples() {
        let n = 2;
        assert_eq!(
            decompose::<Q>(n, 2, 2, &YPoly::one(n)).unwrap(),
            vec![Poly::one(n)]
        );
        let v = YPoly::from_poly(&x(n, 1) - &x(n, 2));
        assert_eq!(
            decompose::<Q>(n, 2, 2, &v).unwrap(),
            vec![&x(n, 1) - &x(n, 2)]
        );
        assert_eq!(
            decompose::<Q>(n, 2, 3, &YPoly::linear(n, 2)).unwrap(),
            vec![Poly::one(n)]
        );
        assert!(decompose::<Q>(n, 2, 3, &YPoly::one(n)).is_err());
    }

    #[test]
    fn relations_hold_for_small_n() {
        for n in 2..=3 {
            let r = verify_relations::<Q>(n);
            assert!(r.passed(), "{:?}", r.failures());
        }
    }

    #[test]
    fn generator_degrees_match_table() {
        for (name, d) in generator_degrees::<Q>(3) {
            let expected = if name.starts_with('y') { 2 } else { 1 };
            assert_eq!(d, Some(expected), "{name}");
        }
    }

    #[test]
    fn center_element_zero_is_unit() {
        assert_eq!(center_element::<Q>(3, 0), WElem::unit(3));
    }

    #[test]
    fn lemma_instance_on_e3() {
        let n = 2;
        let y2 = ydot::<Q>(n, 3).mul(&ydot(n, 3));
        let e1 = &x(n, 1) + &x(n, 2);
        let e2 = &x(n, 1) * &x(n, 2);
        let rhs = ydot::<Q>(n, 3)
            .mul_poly(&e1)
            .sub(&WElem::idem(n, 3).mul_poly(&e2));
        assert_eq!(y2, rhs);
    }

    #[test]
    fn block_dimensions_for_n2() {
        assert_eq!(graded_dim_block(2, 3, 3).to_text(), "(1+q^2)/(1-q^2)^2");
        assert_eq!(graded_dim_block(2, 2, 3).to_text(), "q/(1-q^2)^2");
        assert_eq!(graded_dim_block(2, 3, 2).to_text(), "q/(1-q^2)^2");
        assert_eq!(graded_dim_block(2, 2, 2).to_text(), "1/(1-q^2)^2");
        assert!(graded_dim_block(2, 1, 2).num.is_zero());
        for (i, j) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            assert_eq!(
                graded_dim_block(2, i, j).series(20),
                enumerated_block_series(2, i, j, 20)
            );
        }
    }

    #[test]
    fn center_matches_expected_series() {
        for n in 2..=3 {
            let r = center_basis_check::<Q>(n, 8);
            assert!(r.passed(), "{r:?}");
        }
        let total = graded_dim_total(2);
        assert_eq!(total.series(10), enumerated_total(2, 10));
    }

    fn enumerated_total(n: usize, cap: i64) -> crate::gradedla::Laurent {
        let mut acc = crate::gradedla::Laurent::zero();
        for i in 2..=n + 1 {
            for j in 2..=n + 1 {
                acc = acc.add(&enumerated_block_series(n, i, j, cap));
            }
        }
        acc
    }

    #[test]
    fn operator_equality_agrees_with_coefficients() {
        let n = 3;
        let a = up::<Q>(n, 2).mul(&ydot(n, 2));
        let b = ydot::<Q>(n, 3).mul(&up(n, 2));
        assert_eq!(a, b);
        assert!(equal_as_operators(&a, &b));
        assert!(!equal_as_operators(&a, &up(n, 2)));
    }
}
