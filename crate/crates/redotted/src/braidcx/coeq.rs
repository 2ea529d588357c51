//! Tensor products of bimodules computed blockwise as coequalizers.
//!
//! For bimodules `M`, `N` over `W` and a subalgebra `A` of `W` given by
//! generators and idempotents `e_c`, the block `e_a (M (x)_A N) e_b` in degree `t`
//! is the cokernel of
//! `(+)_{x} M(a, tgt x) (x) N(src x, b) -> (+)_c M(a, c) (x) N(c, b)`,
//! `m (x) n -> m x (x) n - m (x) x n`, truncated at a degree cap.

use std::collections::HashMap;

use super::bimod::{algebra_generators, Bimod};
use super::maps::{act_right, BasisKey, ModElem};
use crate::exactalg::Field;
use crate::gradedla::{rank_of, sparse_from_pairs, Laurent, SparseVec};
use crate::webster::{block_basis_in_degree, WElem};
use crate::websterp::rho_table;

/// A subalgebra of `W` presented by idempotents and homogeneous generators.
#[derive(Clone, Debug)]
pub struct Subalgebra<F: Field> {
    pub idempotents: Vec<usize>,
    pub generators: Vec<WElem<F>>,
}

impl<F: Field> Subalgebra<F> {
    /// `W` itself.
    pub fn whole(n: usize) -> Self {
        let generators = algebra_generators::<F>(n)
            .into_iter()
            .map(|(_, w)| w)
            .collect();
        Subalgebra {
            idempotents: (2..=n + 1).collect(),
            generators,
        }
    }

    /// The image of `W^p(n,1)` under `rho_p`.
    pub fn thick(n: usize, p: usize) -> Self {
        let generators = rho_table::<F>(n, p)
            .into_iter()
            .map(|e| e.image)
            .filter(|w| !w.is_zero())
            .collect();
        Subalgebra {
            idempotents: (2..=n + 1).filter(|&c| c != p + 1).collect(),
            generators,
        }
    }
}

type Key = (usize, BasisKey);

/// Basis of `e_a M e_c` in degree `t`: elements `w g` with `r(g) = c`.
fn module_basis<F: Field>(m: &Bimod, a: usize, c: usize, t: i64) -> Vec<ModElem<F>> {
    let mut out = Vec::new();
    for (k, g) in m.gens().iter().enumerate().filter(|(_, g)| g.right == c) {
        for w in block_basis_in_degree::<F>(m.n(), g.left, a, t - g.degree) {
            out.push(ModElem::from([(k, w)]));
        }
    }
    out
}

fn expand<F: Field>(x: &ModElem<F>) -> Vec<(Key, F)> {
    let mut out = Vec::new();
    for (&g, w) in x {
        for (key, c) in w.coords() {
            out.push(((g, key), c));
        }
    }
    out
}

fn left_mul<F: Field>(x: &WElem<F>, v: &ModElem<F>) -> ModElem<F> {
    let mut out = ModElem::new();
    for (&h, c) in v {
        let p = x.mul(c);
        if !p.is_zero() {
            out.insert(h, p);
        }
    }
    out
}

fn homogeneous_blocks<F: Field>(x: &WElem<F>) -> Vec<(usize, usize, i64, WElem<F>)> {
    let n = x.n();
    x.blocks()
        .filter_map(|((s, t), coeffs)| {
            let e = WElem::from_block(n, s, t, coeffs.clone()).ok()?;
            let d = e.degree()?;
            Some((s, t, d, e))
        })
        .collect()
}

/// Graded dimension of `e_a (M (x)_A N) e_b` in degrees `lo..=cap`.
pub fn coequalizer_block<F: Field>(
    m: &Bimod,
    nn: &Bimod,
    alg: &Subalgebra<F>,
    a: usize,
    b: usize,
    cap: i64,
) -> Laurent {
    let lo_m = m.gens().iter().map(|g| g.degree).min().unwrap_or(0);
    let lo_n = nn.gens().iter().map(|g| g.degree).min().unwrap_or(0);
    let blocks: Vec<_> = alg.generators.iter().flat_map(homogeneous_blocks).collect();
    let rho: Vec<_> = blocks.iter().map(|(_, _, _, x)| m.rho(x)).collect();
    let mut out = Laurent::zero();
    for t in (lo_m + lo_n)..=cap {
        let mut index: HashMap<(Key, Key), usize> = HashMap::new();
        for &c in &alg.idempotents {
            for s in lo_m..=(t - lo_n) {
                let ms = module_basis::<F>(m, a, c, s);
                let ns = module_basis::<F>(nn, c, b, t - s);
                for x in &ms {
                    for y in &ns {
                        for (kx, _) in expand(x) {
                            for (ky, _) in expand(y) {
                                let len = index.len();
                                index.entry((kx.clone(), ky)).or_insert(len);
                            }
                        }
                    }
                }
            }
        }
        let total = index.len();
        let mut relations: Vec<SparseVec<F>> = Vec::new();
        for (k, (src, tgt, d, x)) in blocks.iter().enumerate() {
            for s in lo_m..=(t - d - lo_n) {
                for mm in module_basis::<F>(m, a, *tgt, s) {
                    let mx = act_right(&rho[k], &mm);
                    for nv in module_basis::<F>(nn, *src, b, t - d - s) {
                        let xn = left_mul(x, &nv);
                        let mut pairs = Vec::new();
                        for (kx, cx) in expand(&mx) {
                            for (ky, cy) in expand(&nv) {
                                pairs.push((index[&(kx.clone(), ky)], cx.mul(&cy)));
                            }
                        }
                        for (kx, cx) in expand(&mm) {
                            for (ky, cy) in expand(&xn) {
                                pairs.push((index[&(kx.clone(), ky)], cx.mul(&cy).neg()));
                            }
                        }
                        let v = sparse_from_pairs(pairs);
                        if !v.is_empty() {
                            relations.push(v);
                        }
                    }
                }
            }
        }
        let dim = total - rank_of(&relations);
        if dim > 0 {
            out.add_term(t, dim as i64);
        }
    }
    out
}

/// Graded dimension of the block `e_a (W (x)_{W^p} W) e_b` up to degree `cap`.
pub fn thick_coequalizer_block<F: Field>(
    n: usize,
    p: usize,
    a: usize,
    b: usize,
    cap: i64,
) -> Laurent {
    let w = Bimod::regular(n);
    coequalizer_block(&w, &w, &Subalgebra::<F>::thick(n, p), a, b, cap)
}

/// Graded dimension of the block `e_a (M (x)_W N) e_b` up to degree `cap`.
pub fn tensor_block<F: Field>(m: &Bimod, nn: &Bimod, a: usize, b: usize, cap: i64) -> Laurent {
    coequalizer_block(m, nn, &Subalgebra::<F>::whole(m.n()), a, b, cap)
}

/// Numerator over `(1 - q^2)^n` of the graded rank of the left `R`-span of three
/// families in `e_{p+1} W_p e_{p+1}` with `a` black dots, `0 <= a < dots`: the black
/// strand passing left of the thick strand (degree `1 + 2a`, and `3 + 2a` with a red
/// dot), and passing right of it (degree `1 + 2a`). The families passing left need
/// `p >= 2`, since `e_1 = 0`.
pub fn spanning_set_numerator(p: usize, dots: usize) -> Laurent {
    let mut num = Laurent::zero();
    for a in 0..dots as i64 {
        num.add_term(1 + 2 * a, 1);
        if p >= 2 {
            num.add_term(1 + 2 * a, 1);
            num.add_term(3 + 2 * a, 1);
        }
    }
    num
}
