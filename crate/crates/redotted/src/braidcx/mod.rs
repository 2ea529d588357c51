//! Bimodules over `W(n,1)`, the thick-strand bimodules `W_p`, the maps between
//! them, Rouquier complexes and the induced action on `K_0`.

pub mod bimod;
pub mod burau;
pub mod coeq;
pub mod complex;
pub mod hecke;
pub mod maps;
pub mod named;

pub use bimod::{algebra_generators, wi_elements, Bimod, Gen, RhoMat};
pub use burau::{burau, expected_generator, generator_matrix, LaurentMat};
pub use coeq::{
    coequalizer_block, spanning_set_numerator, tensor_block, thick_coequalizer_block, Subalgebra,
};
pub use complex::{ChainMap, Complex, Equivalence, Homotopy, Profile};
pub use hecke::{black_interference, relation_suite, Hecke, InterferenceCheck, RelationCheck};
pub use maps::{act_right, express, hom_space, mod_eq, pin, BimodMap, CoordIndex, ModElem};
pub use named::{epsilon, iota, merge, six_valent, split, thick_free, x_map};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, Poly, Q};
    use crate::webster::{basis_in_degree, WElem};
    use crate::websterp::WpElem;

    fn rho_product<F: Field>(m: &Bimod, a: &RhoMat<F>, b: &RhoMat<F>) -> RhoMat<F> {
        let mut out = RhoMat::new();
        for (&(g, h), c) in a {
            for (&(_, k), c2) in b.range((h, 0)..(h + 1, 0)) {
                let v = c.mul(c2);
                let cur = out.get(&(g, k)).map(|o: &WElem<F>| o.add(&v)).unwrap_or(v);
                if cur.is_zero() {
                    out.remove(&(g, k));
                } else {
                    out.insert((g, k), cur);
                }
            }
        }
        let _ = m;
        out
    }

    #[test]
    fn right_action_is_multiplicative() {
        for (n, word) in [(2, vec![1]), (3, vec![1]), (3, vec![2]), (3, vec![1, 2])] {
            let m = Bimod::word(n, &word);
            let gens: Vec<WElem<Q>> = (0..=2).flat_map(|d| basis_in_degree::<Q>(n, d)).collect();
            for a in &gens {
                for b in &gens {
                    let lhs = m.rho(&a.mul(b));
                    let rhs = rho_product(&m, &m.rho(a), &m.rho(b));
                    assert_eq!(lhs, rhs, "n={n} word={word:?} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn decomposition_reconstructs() {
        for (n, p) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let m = Bimod::wi(n, p);
            let us = wi_elements::<Q>(&m);
            for d in 0..=3 {
                for w in basis_in_degree::<Q>(n, d) {
                    for (g, gen) in m.gens().iter().enumerate() {
                        let r = m.rho(&w);
                        let mut total = WElem::zero(n);
                        for (&(_, k), c) in r.range((g, 0)..(g + 1, 0)) {
                            assert!(
                                WpElem::pullback(n, p, c).is_ok(),
                                "coefficient {c} not in W^{p}"
                            );
                            total = total.add(&c.mul(&us[k]));
                        }
                        assert_eq!(total, us[g].mul(&w), "n={n} p={p} gen={} w={w}", gen.label);
                    }
                }
            }
        }
    }

    #[test]
    fn named_maps_exist() {
        for (n, p) in [(2, 1), (3, 1), (3, 2)] {
            let e = epsilon::<Q>(n, p).unwrap();
            let i = iota::<Q>(n, p).unwrap();
            assert!(e.is_bimodule_map() && i.is_bimodule_map());
            let ei = i.then(&e);
            let m = Bimod::regular(n);
            let want = BimodMap::left_central(
                &m,
                &crate::webster::xdot(n, p).sub(&crate::webster::xdot(n, p + 1)),
                2,
            );
            assert!(ei.equals(&want), "n={n} p={p}: {:?}", ei.entries);
            let s = split::<Q>(n, p).unwrap();
            let mg = merge::<Q>(n, p).unwrap();
            assert!(s.is_bimodule_map() && mg.is_bimodule_map());
            let _ = Poly::<Q>::zero(n);
        }
    }
}
