//! The 2-cocycles `mu_i` in the normalized Hochschild complex of `A_n^!` relative to
//! the vertex idempotents, in internal degree `-2`.
//!
//! A `k`-cochain of degree `-2` assigns to composable positive-degree basis paths
//! `(a_1, ..., a_k)` an element of length `sum deg a_j - 2` with matching endpoints.
//! The differentials are
//! `(d phi)(a, b) = a phi(b) - phi(ab) + phi(a) b` and
//! `(d mu)(a, b, c) = a mu(b, c) - mu(ab, c) + mu(a, bc) - mu(a, b) c`.

use std::collections::HashMap;

use super::pathalg::PathAlg;
use super::resolution::BimodResolution;
use crate::exactalg::Field;
use crate::gradedla::{
    kernel_of_columns, rank_of, sparse_axpy, sparse_from_pairs, SpanBuilder, SparseVec,
};

/// A 2-cochain: values on pairs of basis indices `(a, b)` meaning the argument `a (x) b`.
pub type TwoCochain<F> = HashMap<(usize, usize), SparseVec<F>>;

/// `mu_i` for `i = 2..=n`.
pub fn mu<F: Field>(alg: &PathAlg<F>, i: usize) -> TwoCochain<F> {
    let up = alg.arrow(i, i - 1).expect("arrow (i|i-1)");
    let down = alg.arrow(i - 1, i).expect("arrow (i-1|i)");
    let mut m = HashMap::new();
    m.insert((up, down), vec![(alg.vertex(i), F::one().neg())]);
    m.insert((down, up), vec![(alg.vertex(i - 1), F::one().neg())]);
    m
}

/// Evaluate a 2-cochain on `a (x) b` for basis indices.
pub fn eval<F: Field>(mu: &TwoCochain<F>, a: usize, b: usize) -> SparseVec<F> {
    mu.get(&(a, b)).cloned().unwrap_or_default()
}

fn positive<F: Field>(alg: &PathAlg<F>) -> Vec<usize> {
    (0..alg.len()).filter(|&b| alg.basis()[b].deg > 0).collect()
}

fn eval_linear<F: Field>(
    mu: &TwoCochain<F>,
    left: &SparseVec<F>,
    b: usize,
    flip: bool,
) -> SparseVec<F> {
    let mut out = Vec::new();
    for (e, c) in left {
        let v = if flip {
            eval(mu, b, *e)
        } else {
            eval(mu, *e, b)
        };
        out = sparse_axpy(&out, c, &v);
    }
    out
}

/// `(d mu)(a, b, c)`.
pub fn coboundary2_at<F: Field>(
    alg: &PathAlg<F>,
    mu: &TwoCochain<F>,
    a: usize,
    b: usize,
    c: usize,
) -> SparseVec<F> {
    let one = F::one();
    let mone = one.neg();
    let mut out = alg.mul(&vec![(a, one.clone())], &eval(mu, b, c));
    out = sparse_axpy(&out, &mone, &eval_linear(mu, alg.mul_basis(a, b), c, false));
    out = sparse_axpy(&out, &one, &eval_linear(mu, alg.mul_basis(b, c), a, true));
    out = sparse_axpy(&out, &mone, &alg.mul(&eval(mu, a, b), &vec![(c, one)]));
    out
}

/// Composable triples `(a, b, c)` of positive-degree basis paths.
fn triples<F: Field>(alg: &PathAlg<F>) -> Vec<(usize, usize, usize)> {
    let pos = positive(alg);
    let bs = alg.basis();
    let mut out = Vec::new();
    for &a in &pos {
        for &b in &pos {
            if bs[b].tgt != bs[a].src {
                continue;
            }
            for &c in &pos {
                if bs[c].tgt == bs[b].src {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Whether `d mu = 0` on every composable triple.
pub fn is_cocycle<F: Field>(alg: &PathAlg<F>, mu: &TwoCochain<F>) -> bool {
    triples(alg)
        .into_iter()
        .all(|(a, b, c)| coboundary2_at(alg, mu, a, b, c).is_empty())
}

/// Coordinates of the degree `-2` 2-cochains: `(a, b, value basis element)`.
pub fn two_cochain_coords<F: Field>(alg: &PathAlg<F>) -> Vec<(usize, usize, usize)> {
    let pos = positive(alg);
    let bs = alg.basis();
    let mut out = Vec::new();
    for &a in &pos {
        for &b in &pos {
            if bs[b].tgt != bs[a].src {
                continue;
            }
            let d = bs[a].deg + bs[b].deg;
            if d < 2 {
                continue;
            }
            for &m in alg.degree_basis(d - 2) {
                if bs[m].src == bs[b].src && bs[m].tgt == bs[a].tgt {
                    out.push((a, b, m));
                }
            }
        }
    }
    out
}

fn coords_of<F: Field>(
    mu: &TwoCochain<F>,
    index: &HashMap<(usize, usize, usize), usize>,
) -> SparseVec<F> {
    let mut out = Vec::new();
    for (&(a, b), v) in mu {
        for (m, c) in v {
            out = sparse_axpy(&out, c, &vec![(index[&(a, b, *m)], F::one())]);
        }
    }
    out
}

/// Coboundaries `d phi` of the degree `-2` 1-cochains, in 2-cochain coordinates.
pub fn coboundaries<F: Field>(
    alg: &PathAlg<F>,
    index: &HashMap<(usize, usize, usize), usize>,
) -> Vec<SparseVec<F>> {
    let pos = positive(alg);
    let bs = alg.basis();
    let mut out = Vec::new();
    for &p in &pos {
        if bs[p].deg < 2 {
            continue;
        }
        for &m in alg.degree_basis(bs[p].deg - 2) {
            if bs[m].src != bs[p].src || bs[m].tgt != bs[p].tgt {
                continue;
            }
            // phi sends p to m and every other basis path to zero.
            let mut d: TwoCochain<F> = HashMap::new();
            for &a in &pos {
                for &b in &pos {
                    if bs[b].tgt != bs[a].src {
                        continue;
                    }
                    let mut v = Vec::new();
                    if b == p {
                        v = sparse_axpy(
                            &v,
                            &F::one(),
                            &alg.mul(&vec![(a, F::one())], &vec![(m, F::one())]),
                        );
                    }
                    if let Some((_, c)) = alg.mul_basis(a, b).iter().find(|(e, _)| *e == p) {
                        v = sparse_axpy(&v, &c.neg(), &vec![(m, F::one())]);
                    }
                    if a == p {
                        v = sparse_axpy(
                            &v,
                            &F::one(),
                            &alg.mul(&vec![(m, F::one())], &vec![(b, F::one())]),
                        );
                    }
                    if !v.is_empty() {
                        d.insert((a, b), v);
                    }
                }
            }
            out.push(coords_of(&d, index));
        }
    }
    out
}

/// Row index of the coboundary: `(a, b, c, value)` to row.
pub type PairIndex = HashMap<(usize, usize, usize, usize), usize>;

/// The coboundary `C^2_{-2} -> C^3_{-2}` as columns indexed by `coords`; rows are
/// `(triple, value basis element)` in first-seen order.
pub fn delta2_columns<F: Field>(
    alg: &PathAlg<F>,
    coords: &[(usize, usize, usize)],
) -> (Vec<SparseVec<F>>, PairIndex) {
    let mut by_pair: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for (k, &(a, b, m)) in coords.iter().enumerate() {
        by_pair.entry((a, b)).or_default().push((m, k));
    }
    let mut rows: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); coords.len()];
    let one = F::one();
    let push = |rows: &mut HashMap<(usize, usize, usize, usize), usize>,
                cols: &mut Vec<Vec<(usize, F)>>,
                t: (usize, usize, usize),
                k: usize,
                v: &SparseVec<F>,
                c: &F| {
        for (o, a) in v {
            let len = rows.len();
            let r = *rows.entry((t.0, t.1, t.2, *o)).or_insert(len);
            cols[k].push((r, a.mul(c)));
        }
    };
    for (x, y, z) in triples(alg) {
        let t = (x, y, z);
        if let Some(list) = by_pair.get(&(y, z)) {
            for &(m, k) in list {
                push(&mut rows, &mut cols, t, k, alg.mul_basis(x, m), &one);
            }
        }
        for (e, c) in alg.mul_basis(x, y) {
            if let Some(list) = by_pair.get(&(*e, z)) {
                for &(m, k) in list {
                    push(
                        &mut rows,
                        &mut cols,
                        t,
                        k,
                        &vec![(m, one.clone())],
                        &c.neg(),
                    );
                }
            }
        }
        for (e, c) in alg.mul_basis(y, z) {
            if let Some(list) = by_pair.get(&(x, *e)) {
                for &(m, k) in list {
                    push(&mut rows, &mut cols, t, k, &vec![(m, one.clone())], c);
                }
            }
        }
        if let Some(list) = by_pair.get(&(x, y)) {
            for &(m, k) in list {
                push(&mut rows, &mut cols, t, k, alg.mul_basis(m, z), &one.neg());
            }
        }
    }
    (cols.into_iter().map(sparse_from_pairs).collect(), rows)
}

/// Dimension of the degree `-2` 2-cocycles in the normalized complex.
pub fn cocycle_dimension<F: Field>(alg: &PathAlg<F>, coords: &[(usize, usize, usize)]) -> usize {
    kernel_of_columns(&delta2_columns(alg, coords).0).len()
}

/// A cocycle agreeing with `mu` on pairs of arrows, obtained by adding values on pairs
/// of total length at least three; `None` if no such cocycle exists.
pub fn extend_to_cocycle<F: Field>(alg: &PathAlg<F>, mu: &TwoCochain<F>) -> Option<TwoCochain<F>> {
    let coords = two_cochain_coords(alg);
    let index: HashMap<(usize, usize, usize), usize> =
        coords.iter().enumerate().map(|(k, x)| (*x, k)).collect();
    let (cols, _) = delta2_columns(alg, &coords);
    let target: SparseVec<F> = {
        let v = coords_of(mu, &index);
        let mut acc = Vec::new();
        for (k, c) in &v {
            acc = sparse_axpy(&acc, &c.neg(), &cols[*k]);
        }
        acc
    };
    let bs = alg.basis();
    let free: Vec<usize> = (0..coords.len())
        .filter(|&k| bs[coords[k].0].deg + bs[coords[k].1].deg >= 3)
        .collect();
    let mut span = SpanBuilder::new();
    for &k in &free {
        span.insert(&cols[k]);
    }
    let sol = span.express(&target)?;
    let mut out = mu.clone();
    for (j, c) in sol {
        let (a, b, m) = coords[free[j]];
        let e = out.entry((a, b)).or_default();
        *e = sparse_axpy(e, &c, &vec![(m, F::one())]);
    }
    out.retain(|_, v| !v.is_empty());
    Some(out)
}

/// Checks for one `mu_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuCheck {
    pub i: usize,
    /// Whether `mu_i` extended by zero off the arrow pairs is a cocycle.
    pub literal_cocycle: bool,
    /// Whether a cocycle agreeing with `mu_i` on arrow pairs exists.
    pub extends: bool,
    /// Whether that cocycle is not a coboundary.
    pub nontrivial: bool,
    /// Number of pairs on which the extension differs from zero beyond the arrow pairs.
    pub correction_pairs: usize,
}

/// Outcome of the `mu_i` checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuReport {
    pub n: usize,
    pub per_mu: Vec<MuCheck>,
    /// Rank of the `mu_i` classes modulo coboundaries.
    pub independent_rank: usize,
    /// `dim HH^2` in internal degree `-2` in the normalized bar complex.
    pub bar_hh2: usize,
    /// `dim HH^2` from the resolution, summed over all internal degrees.
    pub resolution_hh2: usize,
}

impl MuReport {
    pub fn passed(&self) -> bool {
        self.per_mu.iter().all(|m| m.extends && m.nontrivial)
            && self.independent_rank == self.n - 1
            && self.bar_hh2 == self.n - 1
            && self.resolution_hh2 == self.n - 1
    }

    /// Whether every `mu_i` is a cocycle exactly as written, zero off the arrow pairs.
    pub fn literal_passed(&self) -> bool {
        self.per_mu.iter().all(|m| m.literal_cocycle)
    }
}

/// Verify that `mu_2, ..., mu_n` define non-trivial classes that are independent and span
/// `HH^2`, and record whether the literal cochains are cocycles.
pub fn mu_cocycles<F: Field>(n: usize) -> MuReport {
    let res = BimodResolution::<F>::new(n);
    let alg = &res.alg;
    let coords = two_cochain_coords(alg);
    let index: HashMap<(usize, usize, usize), usize> =
        coords.iter().enumerate().map(|(k, x)| (*x, k)).collect();
    let bounds = coboundaries(alg, &index);
    let rank_b = rank_of(&bounds);
    let mut per_mu = Vec::new();
    let mut classes = Vec::new();
    for i in 2..=n {
        let lit = mu(alg, i);
        let literal_cocycle = is_cocycle(alg, &lit);
        let ext = extend_to_cocycle(alg, &lit);
        let (extends, nontrivial, correction_pairs) = match &ext {
            Some(e) => {
                let v = coords_of(e, &index);
                let mut with = bounds.clone();
                with.push(v.clone());
                classes.push(v);
                (
                    is_cocycle(alg, e),
                    rank_of(&with) > rank_b,
                    e.len() - lit.len(),
                )
            }
            None => (false, false, 0),
        };
        per_mu.push(MuCheck {
            i,
            literal_cocycle,
            extends,
            nontrivial,
            correction_pairs,
        });
    }
    let mut all = bounds.clone();
    all.extend(classes);
    let independent_rank = rank_of(&all) - rank_b;
    let bar_hh2 = cocycle_dimension(alg, &coords) - rank_b;
    let resolution_hh2 = res.hochschild(2).total(2);
    MuReport {
        n,
        per_mu,
        independent_rank,
        bar_hh2,
        resolution_hh2,
    }
}
