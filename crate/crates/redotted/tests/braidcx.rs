use proptest::prelude::*;
use redotted::braidcx::{
    black_interference, burau, coequalizer_block, expected_generator, generator_matrix,
    relation_suite, spanning_set_numerator, tensor_block, thick_coequalizer_block, Bimod, BimodMap,
    Complex, Hecke, LaurentMat, Subalgebra,
};
use redotted::exactalg::{Fp, Q};
use redotted::gradedla::Laurent;

#[test]
fn rouquier_complexes_square_to_zero() {
    for (n, p) in [(2, 1), (3, 1), (3, 2)] {
        for positive in [true, false] {
            let c = Complex::<Q>::rouquier(n, p, positive).unwrap();
            assert!(c.d_squared_zero(), "n={n} p={p} positive={positive}");
            assert!(c.differentials_are_bimodule_maps());
        }
    }
}

#[test]
fn inverse_pair_is_homotopic_to_the_unit() {
    let c = Complex::<Q>::braid_word(2, &[1, -1]).unwrap();
    let eq = Complex::find_equivalence(&Complex::unit(2), &c, 7, 4).expect("equivalence");
    assert!(eq.cone.profile(10).is_zero());
    assert_eq!(eq.chain_map_space, 1);
    let c3 = Complex::<Q>::braid_word(3, &[1, -1]).unwrap();
    assert!(Complex::find_equivalence(&Complex::unit(3), &c3, 7, 4).is_some());
}

#[test]
fn braid_relation_holds_up_to_homotopy() {
    let a = Complex::<Q>::braid_word(3, &[1, 2, 1]).unwrap();
    let b = Complex::<Q>::braid_word(3, &[2, 1, 2]).unwrap();
    assert_eq!(a.profile(6), b.profile(6));
    let eq = Complex::find_equivalence(&a, &b, 1, 4).expect("equivalence");
    assert!(Complex::is_chain_map(&a, &b, &eq.map));
    assert!(eq.cone.is_null_homotopy(&eq.homotopy));
}

#[test]
fn euler_characteristic_is_invariant_under_minimization() {
    for word in [vec![1], vec![-1], vec![1, -1], vec![1, 1]] {
        let c = Complex::<Q>::braid_word(2, &word).unwrap();
        assert_eq!(c.profile(8).euler(2), c.euler_series(8), "word {word:?}");
    }
    let c = Complex::<Q>::braid_word(3, &[1, 2]).unwrap();
    assert_eq!(c.profile(6).euler(3), c.euler_series(6));
}

#[test]
fn k0_classes_are_burau_matrices() {
    for n in 2..=4 {
        for p in 1..n {
            assert_eq!(generator_matrix(n, p, true), expected_generator(n, p));
            assert_eq!(burau(n, &[p as i64, -(p as i64)]), LaurentMat::identity(n));
            let c = Complex::<Q>::rouquier(n, p, true).unwrap();
            assert_eq!(c.k0(), generator_matrix(n, p, true));
        }
    }
    assert_eq!(burau(3, &[1, 2, 1]), burau(3, &[2, 1, 2]));
    assert_eq!(burau(4, &[1, 3]), burau(4, &[3, 1]));
    assert!(burau(4, &[1, 2, -3]).is_invertible());
}

#[test]
fn burau_closed_form_at_n2() {
    // q^{-2} times the reduced Burau matrix at t = q^2 is the 2x2 matrix with
    // -1 at (0,0), q^-1 at (1,0), q^-2 at (1,1).
    let m = generator_matrix(2, 1, true);
    assert_eq!(*m.get(0, 0), Laurent::monomial(-1, 0));
    assert_eq!(*m.get(1, 0), Laurent::monomial(1, -1));
    assert_eq!(*m.get(0, 1), Laurent::zero());
    assert_eq!(*m.get(1, 1), Laurent::monomial(1, -2));
}

#[test]
fn thick_strand_squares_split() {
    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        let h = Hecke::<Q>::new(n);
        let delta = h.split(i).unwrap();
        let mu = h.merge(i).unwrap();
        let m = h.middle_dot(i);
        let id1 = h.id(&[i]);
        let id2 = h.id(&[i, i]);
        assert!(delta.then(&mu).is_zero(), "merge after split vanishes");
        assert!(delta.then(&m).then(&mu).equals(&id1), "mu M delta = id");
        let p1 = m.then(&mu);
        let proj = m.then(&mu).then(&delta);
        let i2 = delta.then(&m).then(&id2.sub(&proj));
        assert!(i2.then(&mu).equals(&id1), "p2 i2 = id");
        assert!(i2.then(&p1).is_zero(), "p1 i2 = 0");
        let total = p1.then(&delta).add(&mu.then(&i2));
        assert!(total.equals(&id2), "i1 p1 + i2 p2 = id");
    }
}

#[test]
fn distant_crossings_are_involutions() {
    let h = Hecke::<Q>::new(4);
    let x = h.crossing(1, 3).unwrap();
    let y = h.crossing(3, 1).unwrap();
    assert!(x.then(&y).equals(&h.id(&[1, 3])));
    assert!(y.then(&x).equals(&h.id(&[3, 1])));
}

#[test]
fn hecke_relations_at_three_strands() {
    for c in relation_suite::<Q>(3).unwrap() {
        assert!(c.passed, "{} {:?}", c.name, c.colors);
    }
    for c in black_interference::<Q>(3, 1).unwrap() {
        assert!(c.difference_is_identity, "{}", c.label);
    }
}

#[test]
fn hecke_relations_in_positive_characteristic() {
    for c in relation_suite::<Fp<101>>(3).unwrap() {
        assert!(c.passed, "{} {:?}", c.name, c.colors);
    }
}

#[test]
fn distant_relations_at_four_strands() {
    for c in relation_suite::<Q>(4).unwrap() {
        assert!(c.passed, "{} {:?}", c.name, c.colors);
    }
}

#[test]
fn left_free_model_agrees_with_coequalizer() {
    for (n, p) in [(2, 1), (3, 1), (3, 2)] {
        let wp = Bimod::wi(n, p);
        for a in 2..=n + 1 {
            for b in 2..=n + 1 {
                let coeq = thick_coequalizer_block::<Q>(n, p, a, b, 6)
                    .shift(-1)
                    .truncate(5);
                assert_eq!(
                    wp.block_series(a, b, 5),
                    coeq,
                    "n={n} p={p} block ({a},{b})"
                );
            }
        }
    }
    let w1 = Bimod::wi(3, 1);
    let w2 = Bimod::wi(3, 2);
    let w12 = Bimod::word(3, &[1, 2]);
    for a in 2..=4 {
        for b in 2..=4 {
            assert_eq!(
                w12.block_series(a, b, 4),
                tensor_block::<Q>(&w1, &w2, a, b, 4),
                "block ({a},{b})"
            );
        }
    }
}

#[test]
fn regular_bimodule_is_a_unit_for_the_coequalizer() {
    let w = Bimod::regular(2);
    for a in 2..=3 {
        for b in 2..=3 {
            let c = coequalizer_block::<Q>(&w, &w, &Subalgebra::whole(2), a, b, 6);
            assert_eq!(c, w.block_series(a, b, 6));
        }
    }
}

#[test]
fn spanning_set_matches_the_corner_without_dots() {
    for (n, p) in [(2, 1), (3, 1), (3, 2)] {
        let block = Bimod::wi(n, p).block_gdim(p + 1, p + 1);
        assert_eq!(block.num, spanning_set_numerator(p, 1), "n={n} p={p}");
        assert_eq!(block.den as usize, n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn burau_of_word_and_inverse_is_identity(word in prop::collection::vec(prop_oneof![1i64..=3, -3i64..=-1], 0..6)) {
        let inverse: Vec<i64> = word.iter().rev().map(|s| -s).collect();
        let mut both = word.clone();
        both.extend(inverse);
        prop_assert_eq!(burau(4, &both), LaurentMat::identity(4));
        prop_assert!(burau(4, &word).is_invertible());
    }

    #[test]
    fn k0_of_word_is_product_of_generators(word in prop::collection::vec(prop_oneof![1i64..=2, -2i64..=-1], 0..3)) {
        let c = Complex::<Q>::braid_word(3, &word).unwrap();
        prop_assert_eq!(c.k0(), burau(3, &word));
    }

    #[test]
    fn canonical_maps_on_words_are_identities(word in prop::collection::vec(1usize..=2, 1..3)) {
        let m = Bimod::word(3, &word);
        let f = BimodMap::<Q>::canonical(&m, &m).unwrap();
        prop_assert!(f.equals(&BimodMap::identity(&m)));
    }
}
