//! Bounded complexes of left-free bimodules, the Rouquier complexes
//! `sigma_p = (W -> W_p<-1>)` (with `W` in cohomological degree `-1`) and
//! `sigma_p^{-1} = (W_p<1> -> W)` (with `W_p<1>` in degree `0`), tensor products
//! with Koszul signs, cones, and exact certificates of contractibility.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bimod::Bimod;
use super::burau::LaurentMat;
use super::maps::{hom_space, BasisKey, BimodMap, CoordIndex};
use super::named::{epsilon, iota};
use crate::exactalg::Field;
use crate::gradedla::{
    kernel_of_columns, rank_of, sparse_axpy, sparse_from_pairs, Laurent, SpanBuilder, SparseVec,
};
use crate::webster::{block_basis_in_degree, WElem};
use crate::Result;

/// A bounded complex of bimodules with differentials of internal degree `0`.
/// Each term is a direct sum (`Bimod::sum`) and `d^k: C^k -> C^{k+1}`.
#[derive(Clone, Debug)]
pub struct Complex<F: Field> {
    n: usize,
    terms: BTreeMap<i64, Bimod>,
    diffs: BTreeMap<i64, BimodMap<F>>,
}

/// A family of maps `f^k: C^k -> D^k`.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    pub maps: BTreeMap<i64, BimodMap<F>>,
}

/// A null-homotopy `h^k: X^k -> X^{k-1}` with `d h + h d = 1`.
pub type Homotopy<F> = BTreeMap<i64, BimodMap<F>>;

/// Cohomology block profile: for each cohomological degree, the matrix of
/// truncated graded dimensions of `e_a H^k e_b`, indexed from `e_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub cap: i64,
    pub by_degree: BTreeMap<i64, Vec<Vec<Laurent>>>,
}

impl Profile {
    /// Whether every block in every cohomological degree vanishes.
    pub fn is_zero(&self) -> bool {
        self.by_degree
            .values()
            .all(|m| m.iter().flatten().all(|l| l.is_zero()))
    }

    /// Text lines `k (a,b): series` for the nonzero blocks.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, m) in &self.by_degree {
            for (a, row) in m.iter().enumerate() {
                for (b, l) in row.iter().enumerate() {
                    if !l.is_zero() {
                        out.push(format!("H^{k} e{} . e{}: {}", a + 2, b + 2, l));
                    }
                }
            }
        }
        out
    }

    /// Alternating sum over cohomological degrees, blockwise.
    pub fn euler(&self, size: usize) -> Vec<Vec<Laurent>> {
        alternating(size, self.by_degree.iter().map(|(k, m)| (*k, m.clone())))
    }
}

fn alternating(
    size: usize,
    terms: impl Iterator<Item = (i64, Vec<Vec<Laurent>>)>,
) -> Vec<Vec<Laurent>> {
    let mut out = vec![vec![Laurent::zero(); size]; size];
    for (k, m) in terms {
        for (a, row) in m.iter().enumerate() {
            for (b, l) in row.iter().enumerate() {
                out[a][b] = if k.rem_euclid(2) == 0 {
                    out[a][b].add(l)
                } else {
                    out[a][b].sub(l)
                };
            }
        }
    }
    out
}

fn one<F: Field>() -> F {
    F::one()
}

impl<F: Field> Complex<F> {
    /// The complex with the given terms (lists of summands) and differentials
    /// between the corresponding direct sums.
    pub fn new(
        n: usize,
        terms: BTreeMap<i64, Vec<Bimod>>,
        diffs: BTreeMap<i64, BimodMap<F>>,
    ) -> Self {
        let terms: BTreeMap<i64, Bimod> = terms
            .into_iter()
            .map(|(k, parts)| (k, Bimod::sum(n, parts)))
            .filter(|(_, m)| !m.is_empty())
            .collect();
        let mut c = Complex {
            n,
            terms,
            diffs: BTreeMap::new(),
        };
        for (k, d) in diffs {
            let mut f = BimodMap::zero(&c.term(k), &c.term(k + 1), 0);
            f.place(&d, 0, 0, &one());
            if !f.is_zero() {
                c.diffs.insert(k, f);
            }
        }
        c
    }

    /// The unit complex `W` in degree `0`.
    pub fn unit(n: usize) -> Self {
        Self::new(
            n,
            BTreeMap::from([(0, vec![Bimod::regular(n)])]),
            BTreeMap::new(),
        )
    }

    /// `sigma_p` (`positive`) or `sigma_p^{-1}`.
    pub fn rouquier(n: usize, p: usize, positive: bool) -> Result<Self> {
        if positive {
            let d = iota::<F>(n, p)?.shifted(0, -1);
            let terms = BTreeMap::from([
                (-1, vec![Bimod::regular(n)]),
                (0, vec![Bimod::wi(n, p).shift(-1)]),
            ]);
            Ok(Self::new(n, terms, BTreeMap::from([(-1, d)])))
        } else {
            let d = epsilon::<F>(n, p)?.shifted(1, 0);
            let terms = BTreeMap::from([
                (0, vec![Bimod::wi(n, p).shift(1)]),
                (1, vec![Bimod::regular(n)]),
            ]);
            Ok(Self::new(n, terms, BTreeMap::from([(0, d)])))
        }
    }

    /// The complex of a braid word: `p` for `sigma_p`, `-p` for `sigma_p^{-1}`.
    pub fn braid_word(n: usize, word: &[i64]) -> Result<Self> {
        let mut acc = Self::unit(n);
        for (k, &s) in word.iter().enumerate() {
            let c = Self::rouquier(n, s.unsigned_abs() as usize, s > 0)?;
            acc = if k == 0 { c } else { acc.tensor(&c) };
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cohomological degrees with nonzero terms.
    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn term(&self, k: i64) -> Bimod {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Bimod::sum(self.n, Vec::new()))
    }

    pub fn diff(&self, k: i64) -> BimodMap<F> {
        self.diffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| BimodMap::zero(&self.term(k), &self.term(k + 1), 0))
    }

    /// Whether all terms vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `d^{k+1} d^k = 0` for all `k`.
    pub fn d_squared_zero(&self) -> bool {
        self.diffs
            .keys()
            .all(|&k| self.diff(k).then(&self.diff(k + 1)).is_zero())
    }

    /// Whether every differential is a homogeneous bimodule map of degree `0`.
    pub fn differentials_are_bimodule_maps(&self) -> bool {
        self.diffs
            .values()
            .all(|d| d.degree == 0 && d.is_homogeneous() && d.is_bimodule_map())
    }

    /// Total complex of `self (x)_W other` with `d(a (x) b) = da (x) b + (-1)^i a (x) db`.
    pub fn tensor(&self, other: &Complex<F>) -> Complex<F> {
        let n = self.n;
        let mut parts: BTreeMap<i64, Vec<Bimod>> = BTreeMap::new();
        let mut pos: HashMap<(i64, i64, usize, usize), (i64, usize)> = HashMap::new();
        for (&i, ci) in &self.terms {
            for (&j, dj) in &other.terms {
                for (si, a) in ci.parts().iter().enumerate() {
                    for (sj, b) in dj.parts().iter().enumerate() {
                        let list = parts.entry(i + j).or_default();
                        pos.insert((i, j, si, sj), (i + j, list.len()));
                        list.push(a.tensor(b));
                    }
                }
            }
        }
        let mut out = Complex::new(n, parts, BTreeMap::new());
        let mut diffs: BTreeMap<i64, BimodMap<F>> = BTreeMap::new();
        for (&i, ci) in &self.terms {
            for (&j, dj) in &other.terms {
                let (cparts, dparts) = (ci.parts(), dj.parts());
                let (coff, doff) = (ci.part_offsets(), dj.part_offsets());
                let sign = if i.rem_euclid(2) == 0 {
                    one::<F>()
                } else {
                    one::<F>().neg()
                };
                for (si, a) in cparts.iter().enumerate() {
                    for (sj, b) in dparts.iter().enumerate() {
                        let (k, p) = pos[&(i, j, si, sj)];
                        let src_off = out.term(k).part_offsets()[p];
                        let tgt = out.term(k + 1);
                        let toffs = tgt.part_offsets();
                        let d = diffs
                            .entry(k)
                            .or_insert_with(|| BimodMap::zero(&out.term(k), &tgt, 0));
                        let cnext = self.term(i + 1);
                        for (ti, a2) in cnext.parts().iter().enumerate() {
                            let blk =
                                self.diff(i)
                                    .restrict(a, a2, coff[si], cnext.part_offsets()[ti]);
                            if blk.is_zero() {
                                continue;
                            }
                            let (_, tp) = pos[&(i + 1, j, ti, sj)];
                            d.place(&blk.tensor_id(b), src_off, toffs[tp], &one());
                        }
                        let dnext = other.term(j + 1);
                        for (tj, b2) in dnext.parts().iter().enumerate() {
                            let blk =
                                other
                                    .diff(j)
                                    .restrict(b, b2, doff[sj], dnext.part_offsets()[tj]);
                            if blk.is_zero() {
                                continue;
                            }
                            let (_, tp) = pos[&(i, j + 1, si, tj)];
                            d.place(&blk.id_tensor(a), src_off, toffs[tp], &sign);
                        }
                    }
                }
            }
        }
        out.diffs = diffs.into_iter().filter(|(_, d)| !d.is_zero()).collect();
        out
    }

    /// Cone of `f: C -> D`: `Cone^k = C^{k+1} (+) D^k` with `d = [[-d_C, 0], [f, d_D]]`.
    pub fn cone(c: &Complex<F>, d: &Complex<F>, f: &ChainMap<F>) -> Complex<F> {
        let n = c.n;
        let lo = c
            .degrees()
            .first()
            .map(|k| k - 1)
            .into_iter()
            .chain(d.degrees().first().copied())
            .min();
        let hi = c
            .degrees()
            .last()
            .map(|k| k - 1)
            .into_iter()
            .chain(d.degrees().last().copied())
            .max();
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Complex::new(n, BTreeMap::new(), BTreeMap::new());
        };
        let mut parts = BTreeMap::new();
        for k in lo..=hi {
            let mut list = c.term(k + 1).parts();
            list.extend(d.term(k).parts());
            list.retain(|m| !m.is_empty());
            parts.insert(k, list);
        }
        let mut out = Complex::new(n, parts, BTreeMap::new());
        let minus = one::<F>().neg();
        for k in lo..hi {
            let mut dk = BimodMap::zero(&out.term(k), &out.term(k + 1), 0);
            let (c1, c2) = (c.term(k + 1).len(), c.term(k + 2).len());
            dk.place(&c.diff(k + 1), 0, 0, &minus);
            if let Some(fk) = f.maps.get(&(k + 1)) {
                dk.place(fk, 0, c2, &one());
            }
            dk.place(&d.diff(k), c1, c2, &one());
            if !dk.is_zero() {
                out.diffs.insert(k, dk);
            }
        }
        out
    }

    /// Whether `f` commutes with the differentials.
    pub fn is_chain_map(c: &Complex<F>, d: &Complex<F>, f: &ChainMap<F>) -> bool {
        let ks: Vec<i64> = c.degrees().into_iter().chain(d.degrees()).collect();
        let (Some(&lo), Some(&hi)) = (ks.iter().min(), ks.iter().max()) else {
            return true;
        };
        (lo - 1..=hi).all(|k| {
            let fk = f
                .maps
                .get(&k)
                .cloned()
                .unwrap_or_else(|| BimodMap::zero(&c.term(k), &d.term(k), 0));
            let fk1 = f
                .maps
                .get(&(k + 1))
                .cloned()
                .unwrap_or_else(|| BimodMap::zero(&c.term(k + 1), &d.term(k + 1), 0));
            fk.then(&d.diff(k)).equals(&c.diff(k).then(&fk1))
        })
    }

    /// A null-homotopy of the identity, if one exists; its existence certifies
    /// that the complex is contractible in the homotopy category of bimodules.
    pub fn null_homotopy(&self) -> Option<Homotopy<F>> {
        let ks = self.degrees();
        if ks.is_empty() {
            return Some(BTreeMap::new());
        }
        let base = ks[0];
        let block = |k: i64| (k - base) as usize;
        let mut idx = CoordIndex::new();
        let mut unknowns: Vec<(i64, BimodMap<F>)> = Vec::new();
        let mut sb = SpanBuilder::new();
        for &k in &ks {
            let below = self.term(k - 1);
            if below.is_empty() {
                continue;
            }
            for h in hom_space::<F>(&self.term(k), &below, 0) {
                let a = idx.vector(block(k), &h.then(&self.diff(k - 1)));
                let b = idx.vector(block(k - 1), &self.diff(k - 1).then(&h));
                sb.insert(&sparse_axpy(&a, &one(), &b));
                unknowns.push((k, h));
            }
        }
        let mut target: SparseVec<F> = Vec::new();
        for &k in &ks {
            target = sparse_axpy(
                &target,
                &one(),
                &idx.vector(block(k), &BimodMap::identity(&self.term(k))),
            );
        }
        let combo = sb.express(&target)?;
        let mut out: Homotopy<F> = BTreeMap::new();
        for (u, c) in combo {
            let (k, h) = &unknowns[u];
            let e = out
                .entry(*k)
                .or_insert_with(|| BimodMap::zero(&self.term(*k), &self.term(k - 1), 0));
            *e = e.add(&h.scale(&c));
        }
        Some(out)
    }

    /// Check `d h + h d = 1` degree by degree.
    pub fn is_null_homotopy(&self, h: &Homotopy<F>) -> bool {
        self.degrees().into_iter().all(|k| {
            let hk = h
                .get(&k)
                .cloned()
                .unwrap_or_else(|| BimodMap::zero(&self.term(k), &self.term(k - 1), 0));
            let hk1 = h
                .get(&(k + 1))
                .cloned()
                .unwrap_or_else(|| BimodMap::zero(&self.term(k + 1), &self.term(k), 0));
            let lhs = hk.then(&self.diff(k - 1)).add(&self.diff(k).then(&hk1));
            lhs.equals(&BimodMap::identity(&self.term(k)))
        })
    }

    /// A basis of the degree-zero chain maps `C -> D`.
    pub fn chain_maps(c: &Complex<F>, d: &Complex<F>) -> Vec<ChainMap<F>> {
        let ks: Vec<i64> = c
            .degrees()
            .into_iter()
            .filter(|k| !d.term(*k).is_empty())
            .collect();
        if ks.is_empty() {
            return Vec::new();
        }
        let base = ks[0] - 1;
        let block = |k: i64| (k - base) as usize;
        let mut idx = CoordIndex::new();
        let mut unknowns: Vec<(i64, BimodMap<F>)> = Vec::new();
        let mut columns = Vec::new();
        for &k in &ks {
            for f in hom_space::<F>(&c.term(k), &d.term(k), 0) {
                let a = idx.vector(block(k), &f.then(&d.diff(k)));
                let b = idx.vector(block(k - 1), &c.diff(k - 1).then(&f));
                columns.push(sparse_axpy(&a, &one::<F>().neg(), &b));
                unknowns.push((k, f));
            }
        }
        kernel_of_columns(&columns)
            .into_iter()
            .map(|v| {
                let mut maps: BTreeMap<i64, BimodMap<F>> = BTreeMap::new();
                for (u, s) in v {
                    let (k, f) = &unknowns[u];
                    let e = maps
                        .entry(*k)
                        .or_insert_with(|| BimodMap::zero(&c.term(*k), &d.term(*k), 0));
                    *e = e.add(&f.scale(&s));
                }
                ChainMap { maps }
            })
            .collect()
    }

    /// Search for a chain map `C -> D` whose cone is contractible, trying seeded
    /// random combinations of a basis of chain maps.
    pub fn find_equivalence(
        c: &Complex<F>,
        d: &Complex<F>,
        seed: u64,
        attempts: usize,
    ) -> Option<Equivalence<F>> {
        let basis = Self::chain_maps(c, d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..attempts {
            let mut maps: BTreeMap<i64, BimodMap<F>> = BTreeMap::new();
            for f in &basis {
                let r = F::from_i64(rng.gen_range(-9..=9));
                for (k, m) in &f.maps {
                    let e = maps
                        .entry(*k)
                        .or_insert_with(|| BimodMap::zero(&m.source, &m.target, 0));
                    *e = e.add(&m.scale(&r));
                }
            }
            let f = ChainMap { maps };
            let cone = Self::cone(c, d, &f);
            if let Some(h) = cone.null_homotopy() {
                return Some(Equivalence {
                    map: f,
                    cone,
                    homotopy: h,
                    chain_map_space: basis.len(),
                });
            }
        }
        None
    }

    /// Class in `K_0`: `sum_k (-1)^k [C^k]`.
    pub fn k0(&self) -> LaurentMat {
        let mut acc = LaurentMat::zero(self.n);
        for (k, t) in &self.terms {
            let m = LaurentMat::from_entries(t.k0_entries());
            acc = if k.rem_euclid(2) == 0 {
                acc.add(&m)
            } else {
                acc.sub(&m)
            };
        }
        acc
    }

    fn space(&self, k: i64, a: usize, b: usize, t: i64) -> Vec<(usize, WElem<F>)> {
        let term = self.term(k);
        let mut out = Vec::new();
        for (g, gen) in term.gens().iter().enumerate() {
            if gen.right != b {
                continue;
            }
            for x in block_basis_in_degree::<F>(self.n, gen.left, a, t - gen.degree) {
                out.push((g, x));
            }
        }
        out
    }

    fn diff_rank(&self, k: i64, space: &[(usize, WElem<F>)]) -> usize {
        let d = self.diff(k);
        if d.is_zero() {
            return 0;
        }
        let mut index: HashMap<(usize, BasisKey), usize> = HashMap::new();
        let vectors: Vec<SparseVec<F>> = space
            .iter()
            .map(|(g, x)| {
                let mut pairs = Vec::new();
                for (h, c) in d.value(*g) {
                    for (key, v) in x.mul(&c).coords() {
                        let next = index.len();
                        pairs.push((*index.entry((h, key)).or_insert(next), v));
                    }
                }
                sparse_from_pairs(pairs)
            })
            .collect();
        rank_of(&vectors)
    }

    /// Lowest internal degree of a generator.
    pub fn min_internal_degree(&self) -> Option<i64> {
        self.terms
            .values()
            .flat_map(|t| t.gens().iter().map(|g| g.degree))
            .min()
    }

    /// Degreewise minimal model as complexes of graded vector spaces: each block
    /// `e_a C e_b` in each internal degree `t <= cap` is reduced by Gaussian
    /// elimination to its cohomology.
    pub fn profile(&self, cap: i64) -> Profile {
        let m = self.n;
        let mut by_degree: BTreeMap<i64, Vec<Vec<Laurent>>> = BTreeMap::new();
        let Some(lo) = self.min_internal_degree() else {
            return Profile { cap, by_degree };
        };
        for &k in self.terms.keys() {
            by_degree.insert(k, vec![vec![Laurent::zero(); m]; m]);
        }
        for a in 2..=m + 1 {
            for b in 2..=m + 1 {
                for t in lo..=cap {
                    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
                    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
                    for &k in self.terms.keys() {
                        let sp = self.space(k, a, b, t);
                        dims.insert(k, sp.len());
                        ranks.insert(k, self.diff_rank(k, &sp));
                    }
                    for (&k, &dim) in &dims {
                        let h = dim - ranks[&k] - ranks.get(&(k - 1)).copied().unwrap_or(0);
                        if h > 0 {
                            by_degree.get_mut(&k).expect("degree")[a - 2][b - 2]
                                .add_term(t, h as i64);
                        }
                    }
                }
            }
        }
        by_degree.retain(|_, mat| mat.iter().flatten().any(|l| !l.is_zero()));
        Profile { cap, by_degree }
    }

    /// Blockwise Euler characteristic of the terms, truncated at `cap`; it agrees
    /// with the Euler characteristic of the profile.
    pub fn euler_series(&self, cap: i64) -> Vec<Vec<Laurent>> {
        let m = self.n;
        let terms = self.terms.iter().map(|(&k, t)| {
            let mat = (2..=m + 1)
                .map(|a| (2..=m + 1).map(|b| t.block_series(a, b, cap)).collect())
                .collect();
            (k, mat)
        });
        alternating(m, terms)
    }
}

/// A chain map together with an exact certificate that its cone is contractible.
#[derive(Clone, Debug)]
pub struct Equivalence<F: Field> {
    pub map: ChainMap<F>,
    pub cone: Complex<F>,
    pub homotopy: Homotopy<F>,
    pub chain_map_space: usize,
}
