//! Bimodules over `W = W(n,1)` that are free as left modules.
//!
//! A bimodule `M` is presented by generators `g`, each with a left idempotent
//! `l(g)`, a right idempotent `r(g)` and a degree, so that `M = (+)_g W g` as a
//! left module with `g = e_{l(g)} g e_{r(g)}`. The right action is the matrix
//! `rho_M(w)` with `g . w = sum_{g'} rho_M(w)_{g,g'} g'` and entries in
//! `e_{l(g)} W e_{l(g')}`; it satisfies `rho_M(ab) = rho_M(a) rho_M(b)`.
//!
//! `W_p = W (x)_{W^p} W <-1>` has the generators
//! `f_b^0 = e_b (x) e_b` and `f_b^1 = e_b (x) x_p e_b` for `b != p+1`, together with
//! `d = e_p (x) psi e_{p+1}` (when `p >= 2`) and `u = e_{p+2} (x) psi e_{p+1}`.
//! This uses that `W e_b` is free over `W^p` on `e_b, x_p e_b` for `b != p+1` and
//! `W e_{p+1}` is free over `W^p` on the two crossings out of `e_{p+1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactalg::{Field, Poly, YPoly};
use crate::gradedla::{Laurent, RationalGdim};
use crate::soergel::tensor::split_symmetric;
use crate::webster::{down, graded_dim_block, up, xdot, ydot, WElem};

/// A generator of a left-free bimodule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gen {
    pub left: usize,
    pub right: usize,
    pub degree: i64,
    pub label: String,
}

/// Right action matrix: `(g, g') -> rho(w)_{g,g'}`.
pub type RhoMat<F> = BTreeMap<(usize, usize), WElem<F>>;

#[derive(Clone, Debug)]
enum Kind {
    Regular,
    Wi(usize),
    Tensor {
        left: Box<Bimod>,
        right: Box<Bimod>,
        pairs: Vec<(usize, usize)>,
    },
    Sum {
        parts: Vec<Bimod>,
        offsets: Vec<usize>,
    },
    Shift(Box<Bimod>),
}

/// A left-free `W`-bimodule.
#[derive(Clone, Debug)]
pub struct Bimod {
    n: usize,
    name: String,
    gens: Vec<Gen>,
    kind: Kind,
}

impl Bimod {
    /// The regular bimodule `W`, generated by `e_2, ..., e_{n+1}`.
    pub fn regular(n: usize) -> Self {
        let gens = (2..=n + 1)
            .map(|b| Gen {
                left: b,
                right: b,
                degree: 0,
                label: format!("e{b}"),
            })
            .collect();
        Bimod {
            n,
            name: "W".to_string(),
            gens,
            kind: Kind::Regular,
        }
    }

    /// The thick-strand bimodule `W_p = W (x)_{W^p} W <-1>`.
    pub fn wi(n: usize, p: usize) -> Self {
        assert!(p >= 1 && p < n, "W_p needs 1 <= p <= n-1");
        let mut gens = Vec::new();
        for b in (2..=n + 1).filter(|&b| b != p + 1) {
            gens.push(Gen {
                left: b,
                right: b,
                degree: -1,
                label: format!("f{b}"),
            });
            gens.push(Gen {
                left: b,
                right: b,
                degree: 1,
                label: format!("f{b}'"),
            });
        }
        if p >= 2 {
            gens.push(Gen {
                left: p,
                right: p + 1,
                degree: 0,
                label: "d".to_string(),
            });
        }
        gens.push(Gen {
            left: p + 2,
            right: p + 1,
            degree: 0,
            label: "u".to_string(),
        });
        Bimod {
            n,
            name: format!("W{p}"),
            gens,
            kind: Kind::Wi(p),
        }
    }

    /// `W_{p_1} (x) ... (x) W_{p_r}`, or `W` for the empty word.
    pub fn word(n: usize, word: &[usize]) -> Self {
        let mut it = word.iter();
        let Some(&first) = it.next() else {
            return Self::regular(n);
        };
        it.fold(Self::wi(n, first), |acc, &p| acc.tensor(&Self::wi(n, p)))
    }

    /// `M (x)_W N`, generated by the pairs `(g, h)` with `r(g) = l(h)`.
    pub fn tensor(&self, other: &Bimod) -> Bimod {
        assert_eq!(
            self.n, other.n,
            "tensor of bimodules over different algebras"
        );
        let mut pairs = Vec::new();
        let mut gens = Vec::new();
        for (a, g) in self.gens.iter().enumerate() {
            for (b, h) in other.gens.iter().enumerate() {
                if g.right == h.left {
                    pairs.push((a, b));
                    gens.push(Gen {
                        left: g.left,
                        right: h.right,
                        degree: g.degree + h.degree,
                        label: format!("{}|{}", g.label, h.label),
                    });
                }
            }
        }
        Bimod {
            n: self.n,
            name: format!("{}{}", self.name, other.name),
            gens,
            kind: Kind::Tensor {
                left: Box::new(self.clone()),
                right: Box::new(other.clone()),
                pairs,
            },
        }
    }

    /// Direct sum, with generators concatenated in order.
    pub fn sum(n: usize, parts: Vec<Bimod>) -> Bimod {
        let mut gens = Vec::new();
        let mut offsets = Vec::new();
        let mut names = Vec::new();
        for m in &parts {
            assert_eq!(m.n, n, "direct sum of bimodules over different algebras");
            offsets.push(gens.len());
            gens.extend(m.gens.iter().cloned());
            names.push(m.name.clone());
        }
        let name = if names.is_empty() {
            "0".to_string()
        } else {
            names.join(" + ")
        };
        Bimod {
            n,
            name,
            gens,
            kind: Kind::Sum { parts, offsets },
        }
    }

    /// The grading shift `M<s>`, with `M<s>_t = M_{t-s}`.
    pub fn shift(&self, s: i64) -> Bimod {
        if s == 0 {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .map(|g| Gen {
                degree: g.degree + s,
                ..g.clone()
            })
            .collect();
        Bimod {
            n: self.n,
            name: format!("{}<{s}>", self.name),
            gens,
            kind: Kind::Shift(Box::new(self.clone())),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Index of the generator with the given label.
    pub fn gen_index(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.label == label)
    }

    /// Summands of a direct sum (through shifts); the bimodule itself otherwise.
    pub fn parts(&self) -> Vec<Bimod> {
        match &self.kind {
            Kind::Sum { parts, .. } => parts.clone(),
            _ => vec![self.clone()],
        }
    }

    /// Offsets of the summands of a direct sum in the generator list.
    pub fn part_offsets(&self) -> Vec<usize> {
        match &self.kind {
            Kind::Sum { offsets, .. } => offsets.clone(),
            _ => vec![0],
        }
    }

    /// For a tensor product, the factor generators of generator `k`.
    pub fn tensor_pair(&self, k: usize) -> Option<(usize, usize)> {
        match &self.kind {
            Kind::Tensor { pairs, .. } => Some(pairs[k]),
            _ => None,
        }
    }

    /// For a tensor product, the index of the pair `(a, b)`.
    pub fn pair_index(&self, a: usize, b: usize) -> Option<usize> {
        match &self.kind {
            Kind::Tensor { pairs, .. } => pairs.iter().position(|&q| q == (a, b)),
            _ => None,
        }
    }

    /// Ranges of generators belonging to the summands of a direct sum; a single
    /// range otherwise.
    pub fn summand_ranges(&self) -> Vec<std::ops::Range<usize>> {
        match &self.kind {
            Kind::Sum { parts, offsets } => parts
                .iter()
                .zip(offsets)
                .map(|(m, &o)| o..o + m.len())
                .filter(|r| !r.is_empty())
                .collect(),
            Kind::Shift(inner) => inner.summand_ranges(),
            _ if self.is_empty() => Vec::new(),
            _ => std::iter::once(0..self.len()).collect(),
        }
    }

    /// Right action matrix of an arbitrary element.
    pub fn rho<F: Field>(&self, w: &WElem<F>) -> RhoMat<F> {
        let n = self.n;
        let mut out = RhoMat::new();
        match &self.kind {
            Kind::Regular => {
                for ((src, tgt), coeffs) in w.blocks() {
                    let e = WElem::from_block(n, src, tgt, coeffs.clone()).expect("block of W");
                    out.insert((tgt - 2, src - 2), e);
                }
            }
            Kind::Wi(p) => {
                for (g, gen) in self.gens.iter().enumerate() {
                    let ug = wi_element::<F>(n, *p, gen);
                    for ((src, tgt), coeffs) in w.blocks() {
                        if tgt != gen.right {
                            continue;
                        }
                        let c = WElem::from_block(n, src, tgt, coeffs.clone()).expect("block of W");
                        let v = ug.mul(&c);
                        for (k, ck) in wi_decompose(self, *p, &v, src, gen.left) {
                            add_entry(&mut out, (g, k), &ck);
                        }
                    }
                }
            }
            Kind::Tensor { left, right, pairs } => {
                let index: HashMap<(usize, usize), usize> =
                    pairs.iter().enumerate().map(|(k, &q)| (q, k)).collect();
                let mut by_right: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
                for (k, &(a, b)) in pairs.iter().enumerate() {
                    by_right.entry(b).or_default().push((k, a));
                }
                for ((h, h2), c) in right.rho(w) {
                    let Some(rows) = by_right.get(&h) else {
                        continue;
                    };
                    let rm = left.rho(&c);
                    for &(k, a) in rows {
                        for ((_, g2), c2) in rm.range((a, 0)..(a + 1, 0)) {
                            add_entry(&mut out, (k, index[&(*g2, h2)]), c2);
                        }
                    }
                }
            }
            Kind::Sum { parts, offsets } => {
                for (m, &o) in parts.iter().zip(offsets) {
                    for ((g, g2), c) in m.rho(w) {
                        out.insert((g + o, g2 + o), c);
                    }
                }
            }
            Kind::Shift(inner) => return inner.rho(w),
        }
        out
    }

    /// Graded dimension of the block `e_a M e_b` as a rational function.
    pub fn block_gdim(&self, a: usize, b: usize) -> RationalGdim {
        let mut acc = RationalGdim::new(Laurent::zero(), self.n as u32);
        for g in self.gens.iter().filter(|g| g.right == b) {
            acc = acc.add(&graded_dim_block(self.n, g.left, a).shift(g.degree));
        }
        acc
    }

    /// Truncated graded dimension of the block `e_a M e_b` up to degree `cap`.
    pub fn block_series(&self, a: usize, b: usize, cap: i64) -> Laurent {
        self.block_gdim(a, b).series(cap)
    }

    /// Class in `K_0`: entry `(a, b)` is `sum q^{deg g}` over generators with
    /// `l(g) = a`, `r(g) = b`, indexed from `0` for `e_2`.
    pub fn k0_entries(&self) -> Vec<Vec<Laurent>> {
        let m = self.n;
        let mut out = vec![vec![Laurent::zero(); m]; m];
        for g in &self.gens {
            out[g.left - 2][g.right - 2].add_term(g.degree, 1);
        }
        out
    }
}

impl fmt::Display for Bimod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn add_entry<F: Field>(m: &mut RhoMat<F>, key: (usize, usize), c: &WElem<F>) {
    if c.is_zero() {
        return;
    }
    let v = match m.get(&key) {
        Some(old) => old.add(c),
        None => c.clone(),
    };
    if v.is_zero() {
        m.remove(&key);
    } else {
        m.insert(key, v);
    }
}

/// The element `u_g` of `W` with `g = 1 (x) u_g` in `W_p`.
fn wi_element<F: Field>(n: usize, p: usize, g: &Gen) -> WElem<F> {
    if g.left != g.right {
        return if g.left == p {
            down(n, p + 1)
        } else {
            up(n, p + 1)
        };
    }
    let e = WElem::idem(n, g.left);
    if g.degree > 0 {
        e.mul_poly(&Poly::var(n, p))
    } else {
        e
    }
}

/// The elements `u_g` of all generators of `W_p`.
pub fn wi_elements<F: Field>(m: &Bimod) -> Vec<WElem<F>> {
    let Kind::Wi(p) = m.kind else {
        panic!("wi_elements needs W_p");
    };
    m.gens.iter().map(|g| wi_element(m.n, p, g)).collect()
}

/// Write `v` in `e_a W e_src` as `sum_k C_k u_k` with `C_k` in the image of `W^p`.
fn wi_decompose<F: Field>(
    m: &Bimod,
    p: usize,
    v: &WElem<F>,
    src: usize,
    a: usize,
) -> Vec<(usize, WElem<F>)> {
    let n = m.n;
    if v.is_zero() {
        return Vec::new();
    }
    let h = YPoly::from_coeffs(n, v.block(src, a));
    let (s, t) = split_symmetric(&h, p);
    let blk = |i: usize, poly: &YPoly<F>| -> WElem<F> {
        WElem::from_block(n, i, a, poly.coeffs().to_vec()).expect("decomposition coefficient")
    };
    let find = |label: &str| m.gen_index(label).expect("generator of W_p");
    let mut out = Vec::new();
    if src != p + 1 {
        out.push((find(&format!("f{src}")), blk(src, &s)));
        out.push((find(&format!("f{src}'")), blk(src, &t)));
    } else if a >= p + 2 {
        if p >= 2 {
            out.push((find("d"), blk(p, &t.neg().reduce_mod(p))));
        }
        out.push((find("u"), blk(p + 2, &s.add(&YPoly::y(n).mul(&t)))));
    } else {
        out.push((find("u"), blk(p + 2, &t)));
        if p >= 2 {
            let e1 = &Poly::var(n, p) + &Poly::var(n, p + 1);
            let shifted = YPoly::y(n).sub(&YPoly::from_poly(e1));
            out.push((find("d"), blk(p, &s.sub(&shifted.mul(&t)).reduce_mod(a))));
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Algebra generators of `W` used to test commutation with the right action:
/// the red dots, the black dot and the two families of crossings.
pub fn algebra_generators<F: Field>(n: usize) -> Vec<(String, WElem<F>)> {
    let mut out: Vec<(String, WElem<F>)> = (1..=n).map(|l| (format!("x{l}"), xdot(n, l))).collect();
    let sum =
        |f: &dyn Fn(usize) -> WElem<F>| (2..=n + 1).fold(WElem::zero(n), |acc, b| acc.add(&f(b)));
    out.push(("y".to_string(), sum(&|b| ydot(n, b))));
    out.push(("up".to_string(), sum(&|b| up(n, b))));
    out.push(("down".to_string(), sum(&|b| down(n, b))));
    out
}
