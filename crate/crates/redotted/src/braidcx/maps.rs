//! Homogeneous bimodule maps between left-free bimodules.
//!
//! A map `F: M -> N` is stored by its values `F(g) = sum_h c_{g,h} h` on the
//! generators of `M`, with `c_{g,h}` in `e_{l(g)} W e_{l(h)}` of degree
//! `deg F + deg g - deg h` and `r(h) = r(g)`. It is a bimodule map exactly when
//! `F(g . w) = F(g) . w` for every algebra generator `w`.

use std::collections::{BTreeMap, HashMap};

use super::bimod::{algebra_generators, Bimod, Gen, RhoMat};
use crate::exactalg::{Field, Mono, Poly};
use crate::gradedla::{kernel_of_columns, sparse_from_pairs, SpanBuilder, SparseVec};
use crate::webster::{block_basis_in_degree, WElem};
use crate::{Error, Result};

/// An element `sum_g a_g g` of a left-free bimodule.
pub type ModElem<F> = BTreeMap<usize, WElem<F>>;

/// Coordinate key of a map entry: `(g, h, source, target, y-power, monomial)`.
pub type CoordKey = (usize, usize, usize, usize, usize, Mono);

/// Coordinate of a `WElem`: block source, block target, coefficient index and monomial.
pub type BasisKey = (usize, usize, usize, Mono);

/// Entries of a right action matrix grouped by column.
type ByColumn<'a, F> = BTreeMap<usize, Vec<(usize, &'a WElem<F>)>>;

/// A homogeneous bimodule map.
#[derive(Clone, Debug)]
pub struct BimodMap<F: Field> {
    pub source: Bimod,
    pub target: Bimod,
    pub degree: i64,
    pub entries: BTreeMap<(usize, usize), WElem<F>>,
}

impl<F: Field> BimodMap<F> {
    pub fn zero(source: &Bimod, target: &Bimod, degree: i64) -> Self {
        BimodMap {
            source: source.clone(),
            target: target.clone(),
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(m: &Bimod) -> Self {
        let mut f = Self::zero(m, m, 0);
        for (k, g) in m.gens().iter().enumerate() {
            f.entries.insert((k, k), WElem::idem(m.n(), g.left));
        }
        f
    }

    /// The structural isomorphism between two bracketings of the same tensor word,
    /// with factors `W` inserted or removed: it matches generators whose labels
    /// agree once the `W` components `e_b` are dropped.
    pub fn canonical(source: &Bimod, target: &Bimod) -> Result<Self> {
        let key = |g: &Gen| {
            let parts: Vec<&str> = g.label.split('|').filter(|s| !is_unit_label(s)).collect();
            (parts.join("|"), g.left, g.right, g.degree)
        };
        let index: HashMap<_, usize> = target
            .gens()
            .iter()
            .enumerate()
            .map(|(k, g)| (key(g), k))
            .collect();
        if source.len() != target.len() {
            return Err(Error::Invalid(format!(
                "{source} and {target} have different generator counts"
            )));
        }
        let mut f = Self::zero(source, target, 0);
        for (k, g) in source.gens().iter().enumerate() {
            let h = index
                .get(&key(g))
                .ok_or_else(|| Error::Invalid(format!("no match for {} in {target}", g.label)))?;
            f.entries.insert((k, *h), WElem::idem(source.n(), g.left));
        }
        Ok(f)
    }

    /// Left multiplication by a central element `z` of degree `deg`.
    pub fn left_central(m: &Bimod, z: &WElem<F>, deg: i64) -> Self {
        let mut f = Self::zero(m, m, deg);
        for (k, g) in m.gens().iter().enumerate() {
            f.set(k, k, z.mul(&WElem::idem(m.n(), g.left)));
        }
        f
    }

    /// Right multiplication by a central element `z` of degree `deg`.
    pub fn right_central(m: &Bimod, z: &WElem<F>, deg: i64) -> Self {
        let mut f = Self::zero(m, m, deg);
        f.entries = m.rho(z);
        f
    }

    /// Left multiplication by the red dot `x_l`.
    pub fn left_x(m: &Bimod, l: usize) -> Self {
        Self::left_central(m, &crate::webster::xdot(m.n(), l), 2)
    }

    /// Right multiplication by the red dot `x_l`.
    pub fn right_x(m: &Bimod, l: usize) -> Self {
        Self::right_central(m, &crate::webster::xdot(m.n(), l), 2)
    }

    /// The same map between shifted bimodules `M<s> -> N<t>`.
    pub fn shifted(&self, s: i64, t: i64) -> Self {
        BimodMap {
            source: self.source.shift(s),
            target: self.target.shift(t),
            degree: self.degree + t - s,
            entries: self.entries.clone(),
        }
    }

    /// The component between generator ranges, reindexed onto `source` and `target`.
    pub fn restrict(&self, source: &Bimod, target: &Bimod, src_off: usize, tgt_off: usize) -> Self {
        let mut out = Self::zero(source, target, self.degree);
        for (&(g, h), c) in &self.entries {
            if g >= src_off
                && g < src_off + source.len()
                && h >= tgt_off
                && h < tgt_off + target.len()
            {
                out.entries.insert((g - src_off, h - tgt_off), c.clone());
            }
        }
        out
    }

    /// Add `sign * part` into the generator ranges starting at the given offsets.
    pub fn place(&mut self, part: &BimodMap<F>, src_off: usize, tgt_off: usize, sign: &F) {
        for (&(g, h), c) in &part.entries {
            let key = (g + src_off, h + tgt_off);
            let v = c.scale(sign);
            let cur = self.entries.get(&key).map(|o| o.add(&v)).unwrap_or(v);
            self.set(key.0, key.1, cur);
        }
    }

    pub fn set(&mut self, g: usize, h: usize, c: WElem<F>) {
        if c.is_zero() {
            self.entries.remove(&(g, h));
        } else {
            self.entries.insert((g, h), c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value on generator `g`.
    pub fn value(&self, g: usize) -> ModElem<F> {
        self.entries
            .range((g, 0)..(g + 1, 0))
            .map(|(&(_, h), c)| (h, c.clone()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(g, h), c) in &other.entries {
            let v = match out.entries.get(&(g, h)) {
                Some(old) => old.add(c),
                None => c.clone(),
            };
            out.set(g, h, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.source, &self.target, self.degree);
        for (&(g, h), e) in &self.entries {
            out.set(g, h, e.scale(c));
        }
        out
    }

    /// `after . self`.
    pub fn then(&self, after: &BimodMap<F>) -> Self {
        assert_eq!(
            self.target.len(),
            after.source.len(),
            "composition of incompatible maps"
        );
        let mut out = Self::zero(&self.source, &after.target, self.degree + after.degree);
        for (&(g, h), c) in &self.entries {
            for (&(_, k), c2) in after.entries.range((h, 0)..(h + 1, 0)) {
                let v = c.mul(c2);
                if v.is_zero() {
                    continue;
                }
                let cur = out.entries.get(&(g, k)).map(|o| o.add(&v)).unwrap_or(v);
                out.set(g, k, cur);
            }
        }
        out
    }

    /// `self (x) id_N` on `M (x) N`.
    pub fn tensor_id(&self, nn: &Bimod) -> Self {
        let src = self.source.tensor(nn);
        let tgt = self.target.tensor(nn);
        let mut out = Self::zero(&src, &tgt, self.degree);
        for k in 0..src.len() {
            let (g, h) = src.tensor_pair(k).expect("tensor generator");
            for (g2, c) in self.value(g) {
                let t = tgt.pair_index(g2, h).expect("target pair");
                out.set(k, t, c);
            }
        }
        out
    }

    /// `id_M (x) self` on `M (x) N`.
    pub fn id_tensor(&self, m: &Bimod) -> Self {
        let src = m.tensor(&self.source);
        let tgt = m.tensor(&self.target);
        let mut out = Self::zero(&src, &tgt, self.degree);
        let mut cache: HashMap<(usize, usize), RhoMat<F>> = HashMap::new();
        for k in 0..src.len() {
            let (g, h) = src.tensor_pair(k).expect("tensor generator");
            for (h2, c) in self.value(h) {
                let r = cache.entry((h, h2)).or_insert_with(|| m.rho(&c));
                for (&(_, g2), c2) in r.range((g, 0)..(g + 1, 0)) {
                    let t = tgt.pair_index(g2, h2).expect("target pair");
                    let cur = out
                        .entries
                        .get(&(k, t))
                        .map(|o| o.add(c2))
                        .unwrap_or_else(|| c2.clone());
                    out.set(k, t, cur);
                }
            }
        }
        out
    }

    /// `self (x) other`.
    pub fn tensor(&self, other: &BimodMap<F>) -> Self {
        self.tensor_id(&other.source)
            .then(&other.id_tensor(&self.target))
    }

    /// Evaluate on an element of the source.
    pub fn apply(&self, x: &ModElem<F>) -> ModElem<F> {
        let mut out: ModElem<F> = BTreeMap::new();
        for (g, a) in x {
            for (h, c) in self.value(*g) {
                let v = a.mul(&c);
                add_to(&mut out, h, &v);
            }
        }
        out
    }

    /// Coordinates of all entries.
    pub fn coords(&self) -> Vec<(CoordKey, F)> {
        let mut out = Vec::new();
        for (&(g, h), c) in &self.entries {
            for ((i, j, k, m), a) in c.coords() {
                out.push(((g, h, i, j, k, m), a));
            }
        }
        out
    }

    /// Whether the two maps agree entry by entry.
    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Check `F(g . w) = F(g) . w` for all generators `g` and algebra generators `w`.
    pub fn is_bimodule_map(&self) -> bool {
        let n = self.source.n();
        for (_, w) in algebra_generators::<F>(n) {
            let rm = self.source.rho(&w);
            let rn = self.target.rho(&w);
            for g in 0..self.source.len() {
                let gw: ModElem<F> = rm
                    .range((g, 0)..(g + 1, 0))
                    .map(|(&(_, k), c)| (k, c.clone()))
                    .collect();
                let lhs = self.apply(&gw);
                let rhs = act_right(&rn, &self.value(g));
                if !mod_eq(&lhs, &rhs) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every entry is homogeneous of the expected degree.
    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().all(|(&(g, h), c)| {
            let want = self.degree + self.source.gens()[g].degree - self.target.gens()[h].degree;
            c.degree() == Some(want)
        })
    }
}

fn is_unit_label(s: &str) -> bool {
    s.strip_prefix('e')
        .is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
}

fn add_to<F: Field>(out: &mut ModElem<F>, h: usize, v: &WElem<F>) {
    if v.is_zero() {
        return;
    }
    let cur = out.get(&h).map(|o| o.add(v)).unwrap_or_else(|| v.clone());
    if cur.is_zero() {
        out.remove(&h);
    } else {
        out.insert(h, cur);
    }
}

/// `x . w` for `x` in a bimodule with right action matrix `rho(w)`.
pub fn act_right<F: Field>(rho: &RhoMat<F>, x: &ModElem<F>) -> ModElem<F> {
    let mut out = BTreeMap::new();
    for (g, a) in x {
        for (&(_, g2), c) in rho.range((*g, 0)..(*g + 1, 0)) {
            add_to(&mut out, g2, &a.mul(c));
        }
    }
    out
}

/// Equality of module elements.
pub fn mod_eq<F: Field>(a: &ModElem<F>, b: &ModElem<F>) -> bool {
    let keys: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
    keys.into_iter().all(|k| match (a.get(&k), b.get(&k)) {
        (Some(x), Some(y)) => x == y,
        (Some(x), None) | (None, Some(x)) => x.is_zero(),
        (None, None) => true,
    })
}

/// The unknowns of a map: `(g, h, basis element of e_{l(g)} W e_{l(h)})`.
fn unknowns<F: Field>(
    m: &Bimod,
    nn: &Bimod,
    degree: i64,
    gr: std::ops::Range<usize>,
    hr: std::ops::Range<usize>,
) -> Vec<(usize, usize, WElem<F>)> {
    let mut out = Vec::new();
    for g in gr {
        let gg = &m.gens()[g];
        for h in hr.clone() {
            let hh = &nn.gens()[h];
            if gg.right != hh.right {
                continue;
            }
            let d = degree + gg.degree - hh.degree;
            for b in block_basis_in_degree::<F>(m.n(), hh.left, gg.left, d) {
                out.push((g, h, b));
            }
        }
    }
    out
}

/// A basis of the homogeneous bimodule maps `M -> N` of the given degree.
pub fn hom_space<F: Field>(m: &Bimod, nn: &Bimod, degree: i64) -> Vec<BimodMap<F>> {
    let gens = algebra_generators::<F>(m.n());
    let rms: Vec<RhoMat<F>> = gens.iter().map(|(_, w)| m.rho(w)).collect();
    let rns: Vec<RhoMat<F>> = gens.iter().map(|(_, w)| nn.rho(w)).collect();
    let mut out = Vec::new();
    for gr in m.summand_ranges() {
        for hr in nn.summand_ranges() {
            out.extend(hom_block(m, nn, degree, gr.clone(), hr, &rms, &rns));
        }
    }
    out
}

fn hom_block<F: Field>(
    m: &Bimod,
    nn: &Bimod,
    degree: i64,
    gr: std::ops::Range<usize>,
    hr: std::ops::Range<usize>,
    rms: &[RhoMat<F>],
    rns: &[RhoMat<F>],
) -> Vec<BimodMap<F>> {
    let unk = unknowns::<F>(m, nn, degree, gr.clone(), hr.clone());
    if unk.is_empty() {
        return Vec::new();
    }
    let mut rows: HashMap<(usize, usize, usize, BasisKey), usize> = HashMap::new();
    let mut columns = Vec::with_capacity(unk.len());
    let by_col: Vec<ByColumn<F>> = rms
        .iter()
        .map(|rm| {
            let mut bc: ByColumn<F> = BTreeMap::new();
            for (&(g0, g), c) in rm {
                bc.entry(g).or_default().push((g0, c));
            }
            bc
        })
        .collect();
    for (g, h, b) in &unk {
        let mut pairs = Vec::new();
        for (wi, rn) in rns.iter().enumerate() {
            if let Some(list) = by_col[wi].get(g) {
                for (g0, r) in list {
                    if !gr.contains(g0) {
                        continue;
                    }
                    for (key, a) in r.mul(b).coords() {
                        let next = rows.len();
                        let idx = *rows.entry((wi, *g0, *h, key)).or_insert(next);
                        pairs.push((idx, a));
                    }
                }
            }
            for (&(_, h2), c) in rn.range((*h, 0)..(*h + 1, 0)) {
                for (key, a) in b.mul(c).coords() {
                    let next = rows.len();
                    let idx = *rows.entry((wi, *g, h2, key)).or_insert(next);
                    pairs.push((idx, a.neg()));
                }
            }
        }
        columns.push(sparse_from_pairs(pairs));
    }
    kernel_of_columns(&columns)
        .into_iter()
        .map(|v| {
            let mut f = BimodMap::zero(m, nn, degree);
            for (k, c) in v {
                let (g, h, b) = &unk[k];
                let cur = f
                    .entries
                    .get(&(*g, *h))
                    .map(|o| o.add(&b.scale(&c)))
                    .unwrap_or_else(|| b.scale(&c));
                f.set(*g, *h, cur);
            }
            f
        })
        .collect()
}

/// Index coordinates of a family of maps as sparse vectors over a shared index.
pub struct CoordIndex {
    index: HashMap<(usize, CoordKey), usize>,
}

impl Default for CoordIndex {
    fn default() -> Self {
        Self::new()
    }
}

impl CoordIndex {
    pub fn new() -> Self {
        CoordIndex {
            index: HashMap::new(),
        }
    }

    /// Sparse vector of `f`, offset by `block` so that maps between different
    /// pairs of objects occupy disjoint coordinates.
    pub fn vector<F: Field>(&mut self, block: usize, f: &BimodMap<F>) -> SparseVec<F> {
        let pairs: Vec<(usize, F)> = f
            .coords()
            .into_iter()
            .map(|((g, h, i, j, c, m), a)| {
                let key = (block, (g, h, i, j, c, m));
                let next = self.index.len();
                (*self.index.entry(key).or_insert(next), a)
            })
            .collect();
        sparse_from_pairs(pairs)
    }
}

/// The unique combination of `basis` with the prescribed values on the listed
/// generators. Errors when no combination or more than one fits.
pub fn pin<F: Field>(
    basis: &[BimodMap<F>],
    values: &[(usize, ModElem<F>)],
    what: &str,
) -> Result<BimodMap<F>> {
    let first = basis
        .first()
        .ok_or_else(|| Error::NoSolution(format!("{what}: the map space is zero")))?;
    let mut idx = CoordIndex::new();
    let restrict = |f: &BimodMap<F>| -> BimodMap<F> {
        let mut r = BimodMap::zero(&f.source, &f.target, f.degree);
        for (g, _) in values {
            for (h, c) in f.value(*g) {
                r.set(*g, h, c);
            }
        }
        r
    };
    let mut sb = SpanBuilder::new();
    let mut restricted = Vec::new();
    for f in basis {
        let v = idx.vector(0, &restrict(f));
        restricted.push(v.clone());
        sb.insert(&v);
    }
    if sb.rank() < basis.len() {
        return Err(Error::Verification(format!(
            "{what}: prescribed values leave {} free parameters",
            basis.len() - sb.rank()
        )));
    }
    let mut want = BimodMap::zero(&first.source, &first.target, first.degree);
    for (g, val) in values {
        for (h, c) in val {
            want.set(*g, *h, c.clone());
        }
    }
    let target = idx.vector(0, &want);
    let combo = sb.express(&target).ok_or_else(|| {
        Error::NoSolution(format!(
            "{what}: prescribed values are not attained by a bimodule map"
        ))
    })?;
    let mut out = BimodMap::zero(&first.source, &first.target, first.degree);
    for (k, c) in combo {
        out = out.add(&basis[k].scale(&c));
    }
    Ok(out)
}

/// Express `f` in terms of `basis`, if possible.
pub fn express<F: Field>(basis: &[BimodMap<F>], f: &BimodMap<F>) -> Option<SparseVec<F>> {
    let mut idx = CoordIndex::new();
    let mut sb = SpanBuilder::new();
    for b in basis {
        sb.insert(&idx.vector(0, b));
    }
    sb.express(&idx.vector(0, f))
}

/// `e_a` times a polynomial, as a coefficient.
pub fn poly_coeff<F: Field>(n: usize, a: usize, p: &Poly<F>) -> WElem<F> {
    WElem::idem(n, a).mul_poly(p)
}
