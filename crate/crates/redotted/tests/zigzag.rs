use redotted::exactalg::{Fp, Q};
use redotted::zigzag::{
    deformation_check, expected_dimension, hochschild, mu_cocycles, quotient_graded_dimension,
    BimodResolution, HhTable, PathAlg,
};

#[test]
fn zigzag_dimensions() {
    for n in 2..=5 {
        assert_eq!(PathAlg::<Q>::build(n).len(), expected_dimension(n), "n={n}");
    }
}

#[test]
fn resolution_is_exact() {
    for n in 2..=4 {
        assert!(BimodResolution::<Q>::new(n).exactness().passed(), "n={n}");
    }
}

#[test]
fn hochschild_cohomology_pattern() {
    for n in 2..=5usize {
        let t = hochschild::<Q>(n, 2);
        let m = n as i64;
        for j in -4..=2 * m + 2 {
            let hh0 = usize::from(j % 2 == 0 && (0..=2 * (m - 1)).contains(&j));
            let hh1 = usize::from(j % 2 == 0 && (0..=2 * (m - 2)).contains(&j));
            let hh2 = if j == 0 { n - 1 } else { 0 };
            assert_eq!(t.labelled_dim(0, j), hh0, "n={n} HH^0,{j}");
            assert_eq!(t.labelled_dim(1, j), hh1, "n={n} HH^1,{j}");
            assert_eq!(t.labelled_dim(2, j), hh2, "n={n} HH^2,{j}");
        }
        assert_eq!(HhTable::path_length_label(2, -2), 0);
    }
    assert_eq!(hochschild::<Fp<5>>(3, 2), hochschild::<Q>(3, 2));
}

#[test]
fn mu_classes_span_hh2() {
    for n in 2..=4 {
        let rep = mu_cocycles::<Q>(n);
        assert!(rep.passed(), "n={n}: {rep:?}");
        assert!(!rep.literal_passed());
    }
}

#[test]
fn w_modulo_m_is_the_zigzag_algebra() {
    for n in 2..=4 {
        let rep = deformation_check::<Q>(n);
        assert!(rep.passed(), "n={n}: {:?}", rep.mismatches);
        assert_eq!(rep.quotient_gdim, quotient_graded_dimension(n));
    }
}
