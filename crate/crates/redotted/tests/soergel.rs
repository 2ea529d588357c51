use redotted::exactalg::{Fp, Q};
use redotted::soergel::{
    hom_dimension, n2_table, phi_check, phi_up_literal, ses_checks, split_check,
};
use redotted::webster::graded_dim_block;

#[test]
fn phi_is_an_isomorphism_for_small_n() {
    for n in 2..=3 {
        let rep = phi_check::<Q>(n, 8);
        assert!(rep.passed(), "n={n}: {rep:?}");
    }
}

#[test]
fn hom_table_for_two_strands() {
    for (src, tgt, text, ok) in n2_table::<Q>(12) {
        assert!(ok, "Hom({src}, {tgt}) = {text}");
    }
}

#[test]
fn hom_dimensions_are_webster_blocks() {
    for i in 0..2 {
        for j in 0..2 {
            let series = graded_dim_block(2, i + 2, j + 2).series(10);
            for t in -2..=10 {
                assert_eq!(
                    hom_dimension::<Q>(2, i, j, t) as i64,
                    series.coeff(t),
                    "Hom(P_{i}, P_{j}) in degree {t}"
                );
            }
        }
    }
}

#[test]
fn tensor_with_b_splits() {
    let rep = split_check::<Q>(3, 1, 10).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(split_check::<Fp<7>>(3, 1, 6).unwrap().passed());
    assert!(split_check::<Q>(3, 2, 6).is_err());
}

#[test]
fn exact_sequences_and_literal_phi() {
    assert!(ses_checks::<Q>(3, 8).passed());
    assert!(!phi_up_literal::<Q>(3, 0).well_defined());
}
