//! Singular Soergel bimodules for `J = {2, ..., n-1}`: the bimodules `P_i`, the
//! tensor products `B_{i+1} (x) P_i` with their splittings, short exact sequences,
//! standard filtrations, and the isomorphism `Phi: End(sum P_i) -> W(n,1)`.

pub mod pbimod;
pub mod phi;
pub mod ses;
pub mod tensor;

pub use pbimod::{
    elementary_identity_holds, hom_dimension, p_basis_in_degree, symmetric_reduce, Invariants,
    PElem, PMap,
};
pub use phi::{
    hom_series, lambda, n2_table, phi_check, phi_down, phi_of, phi_table, phi_up, phi_up_literal,
    right_x1, PhiEntry, PhiReport,
};
pub use ses::{ses_checks, twist, BElem, SesReport};
pub use tensor::{
    split_check, splitting, tensor_basis_in_degree, SplitReport, Splitting, TensorElem,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{esym_range, Poly, YPoly, Q};
    use crate::webster::WElem;

    #[test]
    fn elementary_identity_small_n() {
        for n in 2..=4 {
            for j in 1..n {
                assert!(elementary_identity_holds::<Q>(n, j), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn right_action_of_x1_is_y() {
        let n = 3;
        let one = PElem::<Q>::one(n, 1);
        let inv = Invariants::new(n);
        assert_eq!(one.right(&inv.x1()), PElem::new(n, 1, &YPoly::y(n)));
    }

    #[test]
    fn p0_actions_agree() {
        let n = 3;
        let inv = Invariants::new(n);
        for j in 1..n {
            let g = inv.e::<Q>(j);
            let r = PElem::<Q>::one(n, 0).right(&g);
            let l = PElem::<Q>::one(n, 0).left(&inv.to_r(&g));
            assert_eq!(r, l);
        }
    }

    #[test]
    fn normalizer_round_trips() {
        let n = 4;
        let inv = Invariants::new(n);
        let f = &(&esym_range::<Q>(n, 2, 2, 4) * &Poly::var(n, 1)) + &esym_range(n, 3, 2, 4).pow(2);
        let g = inv.normalize(&f).unwrap();
        assert_eq!(inv.to_r(&g), f);
        assert!(inv.normalize(&Poly::<Q>::var(n, 2)).is_err());
    }

    #[test]
    fn phi_maps() {
        let n = 3;
        let comp = phi_down::<Q>(n, 1).compose(&phi_up(n, 0)).unwrap();
        assert_eq!(comp, PMap::new(0, 0, YPoly::linear(n, 2)));
        assert!(phi_up::<Q>(n, 0).well_defined());
        assert!(!phi_up_literal::<Q>(n, 0).well_defined());
        assert_eq!(phi_up::<Q>(n, 1).degree(), Some(1));
        assert_eq!(phi_down::<Q>(n, 1).degree(), Some(1));
        assert_eq!(
            phi_of(n, &PMap::<Q>::identity(n, 1)).unwrap(),
            WElem::idem(n, 3)
        );
    }

    #[test]
    fn phi_check_small() {
        for n in 2..=3 {
            let r = phi_check::<Q>(n, 6);
            assert!(r.passed(), "{r:?}");
            assert!(!r.literal_phi_up_well_defined);
        }
        let t = n2_table::<Q>(10);
        assert!(t.iter().all(|r| r.3));
        assert_eq!(t[0].2, "1/(1-q^2)^2");
        assert_eq!(t[3].2, "(1+q^2)/(1-q^2)^2");
    }

    #[test]
    fn splittings() {
        for (n, i) in [(2, 0), (3, 0), (3, 1), (4, 1), (4, 2)] {
            let r = split_check::<Q>(n, i, 2).unwrap();
            assert!(r.passed(), "n={n} i={i} {r:?}");
        }
    }

    #[test]
    fn short_exact_sequences() {
        for n in 2..=4 {
            let r = ses_checks::<Q>(n, 3);
            assert!(r.passed(), "{r:?}");
        }
    }
}
