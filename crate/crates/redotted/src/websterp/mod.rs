//! The subalgebra `W^p(n,1)` with one thick red strand, its faithful module
//! `V_n^p`, its basis, and the embedding `rho_p` into `W(n,1)`.

pub mod elem;
pub mod gens;
pub mod relations;

pub use elem::{
    basis_in_degree_p, block_basis_in_degree_p, block_gdim_text_p, block_series_p,
    enumerated_block_series_p, rho_index, rho_preimage, thick_position, ThickRing, WpElem,
};
pub use gens::{
    cross_p, dot_p, down_p, e1_p, e2_p, rho_checks, rho_table, seq_string_p, up_p, ydot_p,
    RhoEntry, RhoReport, Strand,
};
pub use relations::verify_relations_p;

use crate::exactalg::Field;
use crate::webster::WElem;

/// `rho_p(x)`.
pub fn rho<F: Field>(x: &WpElem<F>) -> WElem<F> {
    x.embed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Poly, Q};

    #[test]
    fn symmetric_reduction_round_trips() {
        let ring = ThickRing::new(4, 2).unwrap();
        let x = |i| Poly::<Q>::var(4, i);
        let f = &(&x(2) * &x(2)) * &x(3) + &(&x(2) * &x(3)) * &x(3) + &x(1) * &x(4);
        let g = ring.reduce(&f).unwrap();
        assert_eq!(ring.embed(&g), f);
        assert!(ring.reduce(&x(2)).is_err());
    }

    #[test]
    fn e_central_and_thick_quadratic() {
        let (n, p) = (3, 1);
        let r = verify_relations_p::<Q>(n, p).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        let (n, p) = (3, 2);
        let r = verify_relations_p::<Q>(n, p).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn thick_double_crossing_value() {
        let (n, p) = (3, 1);
        // e(Rb r): black at 2, thick at 1.
        let i = 2;
        assert_eq!(seq_string_p(n, p, i), "Rbr");
        let c = cross_p::<Q>(n, p, 1, 1).add(&cross_p(n, p, 1, 2));
        let lhs = c.mul(&c).mul(&WpElem::idem(n, p, i));
        let ring = ThickRing::new(n, p).unwrap();
        let y = ydot_p::<Q>(n, p, i);
        let e = WpElem::idem(n, p, i);
        let rhs = e
            .mul_coeff(&ring.e2())
            .sub(&y.mul_coeff(&ring.e1()))
            .add(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_on_idempotents_and_e1() {
        let (n, p) = (3, 2);
        assert_eq!(rho(&WpElem::<Q>::idem(n, p, 2)), WElem::idem(n, 2));
        assert_eq!(rho(&WpElem::<Q>::idem(n, p, 3)), WElem::idem(n, 4));
        let e1 = rho(&e1_p::<Q>(n, p, 3));
        let x = &Poly::<Q>::var(n, 2) + &Poly::var(n, 3);
        assert_eq!(e1, WElem::idem(n, 4).mul_poly(&x));
        let u = rho(&WpElem::<Q>::unit(n, p));
        assert_eq!(u.mul(&u), u);
    }

    #[test]
    fn rho_checks_pass_and_literal_table_fails() {
        for n in 2..=3 {
            for p in 1..n {
                let r = rho_checks::<Q>(n, p, 6);
                assert!(r.passed(), "n={n} p={p} {r:?}");
            }
        }
        let r = rho_checks::<Q>(3, 2, 0);
        assert!(!r.literal_passed());
    }

    #[test]
    fn basis_counts_match_series() {
        for (n, p) in [(2, 1), (3, 1), (3, 2)] {
            for i in 2..=n {
                for j in 2..=n {
                    assert_eq!(
                        block_series_p(n, p, i, j, 12),
                        enumerated_block_series_p(n, p, i, j, 12)
                    );
                }
            }
        }
        assert_eq!(block_gdim_text_p(3, 1, 2, 3), "(q+q^3)/((1-q^2)^2(1-q^4))");
        assert_eq!(block_gdim_text_p(2, 1, 2, 2), "(1+q^2)/((1-q^2)(1-q^4))");
    }
}
