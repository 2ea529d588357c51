//! The quiver algebra `A_n^!`, its Hochschild cohomology, the 2-cocycles `mu_i`,
//! and the comparison `W(n,1)/m = A_n^!`.

pub mod deformation;
pub mod mu;
pub mod pathalg;
pub mod resolution;

pub use deformation::{
    deformation_check, path_image, quotient_basis, quotient_graded_dimension, DeformationReport,
};
pub use mu::{extend_to_cocycle, is_cocycle, mu, mu_cocycles, MuCheck, MuReport, TwoCochain};
pub use pathalg::{build_basis, expected_dimension, walk_label, walks, PathAlg, PathBasis};
pub use resolution::{
    hochschild, BimodResolution, ExactnessReport, FreeMap, FreeTerm, Gen, HhTable,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, Fp, Q};

    #[test]
    fn small_bases() {
        for n in 1..=5 {
            let a = build_basis::<Q>(n);
            assert_eq!(a.dim(0), n);
            assert_eq!(a.dim(1), 2 * (n - 1));
            assert_eq!(a.len(), expected_dimension(n));
        }
        let a = build_basis::<Q>(3);
        assert!(a.walk_vector(&[1, 2, 1]).is_empty());
        assert_eq!(a.walk_vector(&[2, 1, 2]), a.walk_vector(&[2, 3, 2]));
    }

    #[test]
    fn c_is_central_and_nilpotent() {
        for n in 2..=4 {
            let a = build_basis::<Q>(n);
            let c = a.c();
            for b in 0..a.len() {
                let e = vec![(b, Q::one())];
                assert_eq!(a.mul(&c, &e), a.mul(&e, &c));
            }
            let mut p = c.clone();
            for _ in 1..n - 1 {
                p = a.mul(&p, &c);
            }
            assert!(!p.is_empty());
            assert!(a.mul(&p, &c).is_empty());
        }
    }

    #[test]
    fn resolution_is_exact() {
        for n in 2..=5 {
            let r = BimodResolution::<Q>::new(n);
            assert!(r.exactness().passed(), "n={n}");
            let f1 = r.graded_map(1);
            let f2 = r.graded_map(2);
            assert!(f2.compose(&f1).unwrap().homology().image.is_zero());
        }
    }

    #[test]
    fn hochschild_table() {
        for n in 2..=5 {
            let t = hochschild::<Q>(n, 3);
            for j in 0..n as i64 {
                assert_eq!(t.dim(0, 2 * j), 1);
            }
            assert_eq!(t.total(0), n);
            for j in 0..n as i64 - 1 {
                assert_eq!(t.dim(1, 2 * j), 1);
            }
            assert_eq!(t.total(1), n - 1);
            assert_eq!(t.dim(2, -2), n - 1);
            assert_eq!(t.total(2), n - 1);
            assert_eq!(t.total(3), 0);
        }
    }

    #[test]
    fn hochschild_over_prime_field() {
        assert_eq!(hochschild::<Fp<7>>(4, 2), {
            let mut t = hochschild::<Q>(4, 2);
            t.n = 4;
            t
        });
    }

    #[test]
    fn mu_classes_span() {
        for n in 2..=5 {
            let r = mu_cocycles::<Q>(n);
            assert!(r.passed(), "{r:?}");
            assert!(!r.literal_passed());
        }
    }

    #[test]
    fn mu_values() {
        let a = build_basis::<Q>(3);
        let m = mu(&a, 2);
        let up = a.arrow(2, 1).unwrap();
        let down = a.arrow(1, 2).unwrap();
        assert_eq!(mu::eval(&m, up, down), vec![(a.vertex(2), Q::from_i64(-1))]);
        assert_eq!(mu::eval(&m, down, up), vec![(a.vertex(1), Q::from_i64(-1))]);
        assert!(mu::eval(&m, up, a.vertex(1)).is_empty());
    }

    #[test]
    fn deformation() {
        for n in 2..=4 {
            let r = deformation_check::<Q>(n);
            assert!(r.passed(), "{r:?}");
        }
    }
}
