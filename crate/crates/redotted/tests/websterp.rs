use redotted::exactalg::Q;
use redotted::websterp::{
    block_series_p, enumerated_block_series_p, rho_checks, rho_index, verify_relations_p, WpElem,
};

#[test]
fn thick_relations_hold() {
    for (n, p) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let rep = verify_relations_p::<Q>(n, p).unwrap();
        assert!(rep.passed(), "n={n} p={p}: {:?}", rep.failures());
    }
}

#[test]
fn rho_is_an_injective_homomorphism() {
    for p in 1..=2 {
        let rep = rho_checks::<Q>(3, p, 8);
        assert!(rep.passed(), "p={p}: {rep:?}");
        assert!(rep.pairs_checked > 0);
    }
}

#[test]
fn thick_block_series_agree_with_enumeration() {
    for (n, p) in [(2, 1), (3, 1), (3, 2)] {
        for i in 2..=n {
            for j in 2..=n {
                assert_eq!(
                    block_series_p(n, p, i, j, 8),
                    enumerated_block_series_p(n, p, i, j, 8),
                    "n={n} p={p} ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn idempotents_embed_away_from_the_thick_position() {
    for p in 1..=2 {
        let unit = WpElem::<Q>::unit(3, p).embed();
        let images: Vec<usize> = (2..=3).map(|i| rho_index(p, i)).collect();
        assert!(!images.contains(&(p + 1)));
        assert_eq!(unit.blocks().count(), 2);
    }
}
