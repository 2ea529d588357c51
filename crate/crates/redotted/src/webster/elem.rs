//! Elements of `W(n,1)` in the blockwise basis `g(x) y^c psi_{w(i->j)} e_i`.
//!
//! The block `(i, j)` holds the coefficients `(g_0, ..., g_{min(i,j)-2})` of the
//! element `sum_c g_c y^c psi_w e_i` of `e_j W e_i`. On the faithful module
//! `V_n = (+)_m V_{n,m}` such an element sends `p` in `V_{n,i}` to
//! `(sum_c g_c y^c) P_{i->j} p` reduced in `V_{n,j}`, where `P_{i->j}` is
//! `prod_{l=i}^{j-1} (y - x_l)` when `j > i` and `1` otherwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::poly::monomials_of_total;
use crate::exactalg::{linear_product, Field, Mono, Poly, QuotElem, YPoly};
use crate::{Error, Result};

/// Source and target idempotent indices of a block: `(i, j)` for `e_j W e_i`.
pub type Block = (usize, usize);

/// Number of basis coefficients in block `(i, j)`.
pub fn block_len(i: usize, j: usize) -> usize {
    i.min(j).saturating_sub(1)
}

/// The monic factor `P_{i->j}` produced by the minimal crossing word.
pub fn p_factor<F: Field>(n: usize, i: usize, j: usize) -> YPoly<F> {
    if j > i {
        linear_product(n, i, j - 1)
    } else {
        YPoly::one(n)
    }
}

/// Whether `(i, j)` indexes a nonzero block of `W(n,1)`.
pub fn valid_block(n: usize, i: usize, j: usize) -> bool {
    (2..=n + 1).contains(&i) && (2..=n + 1).contains(&j)
}

/// An element of `W(n,1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WElem<F: Field> {
    n: usize,
    blocks: BTreeMap<Block, Vec<Poly<F>>>,
}

impl<F: Field> WElem<F> {
    pub fn zero(n: usize) -> Self {
        WElem {
            n,
            blocks: BTreeMap::new(),
        }
    }

    /// The idempotent `e_i`; `e_1` is zero.
    pub fn idem(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        if valid_block(n, i, i) {
            w.set_block(i, i, vec![Poly::one(n)]);
        }
        w
    }

    /// The unit `sum_{i=2}^{n+1} e_i`.
    pub fn unit(n: usize) -> Self {
        let mut w = Self::zero(n);
        for i in 2..=n + 1 {
            w.set_block(i, i, vec![Poly::one(n)]);
        }
        w
    }

    /// The element with the given coefficients in block `(i, j)`.
    pub fn from_block(n: usize, i: usize, j: usize, coeffs: Vec<Poly<F>>) -> Result<Self> {
        if !valid_block(n, i, j) {
            if i == 1 || j == 1 {
                return Ok(Self::zero(n));
            }
            return Err(Error::Index(format!("block ({i},{j}) for n = {n}")));
        }
        let len = block_len(i, j);
        if coeffs.len() > len {
            return Err(Error::Invalid(format!(
                "block ({i},{j}) takes {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut w = Self::zero(n);
        w.set_block(i, j, coeffs);
        Ok(w)
    }

    /// The basis element `x^alpha y^c psi_w e_i` of block `(i, j)`.
    pub fn basis(n: usize, i: usize, j: usize, c: usize, alpha: &Mono) -> Self {
        let mut coeffs = vec![Poly::zero(n); c + 1];
        coeffs[c] = Poly::term(alpha.clone(), F::one());
        Self::from_block(n, i, j, coeffs).expect("valid basis element")
    }

    fn set_block(&mut self, i: usize, j: usize, mut coeffs: Vec<Poly<F>>) {
        let len = block_len(i, j);
        coeffs.resize(len, Poly::zero(self.n));
        if coeffs.iter().all(|c| c.is_zero()) {
            self.blocks.remove(&(i, j));
        } else {
            self.blocks.insert((i, j), coeffs);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> impl Iterator<Item = (Block, &Vec<Poly<F>>)> {
        self.blocks.iter().map(|(&b, v)| (b, v))
    }

    pub fn block(&self, i: usize, j: usize) -> Vec<Poly<F>> {
        self.blocks
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| vec![Poly::zero(self.n); block_len(i, j)])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), v) in &other.blocks {
            let cur = out.block(i, j);
            let sum = cur.iter().zip(v).map(|(a, b)| a + b).collect();
            out.set_block(i, j, sum);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.blocks {
            out.set_block(i, j, v.iter().map(|p| p.scale(c)).collect());
        }
        out
    }

    /// Multiply by a polynomial in the red dots (central).
    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.blocks {
            out.set_block(i, j, v.iter().map(|g| g * p).collect());
        }
        out
    }

    /// Image of `v` in `V_{n,i}` under block `(i, j)`.
    pub fn act_block(&self, i: usize, j: usize, v: &YPoly<F>) -> YPoly<F> {
        let Some(coeffs) = self.blocks.get(&(i, j)) else {
            return YPoly::zero(self.n);
        };
        let g = YPoly::from_coeffs(self.n, coeffs.clone());
        g.mul(&p_factor(self.n, i, j)).mul(v).reduce_mod(j)
    }

    /// Action on an element of `V_{n,i}`; the result has a component in each `V_{n,j}`.
    pub fn act(&self, v: &QuotElem<F>) -> BTreeMap<usize, QuotElem<F>> {
        let i = v.index();
        let mut out = BTreeMap::new();
        for &(s, j) in self.blocks.keys() {
            if s != i {
                continue;
            }
            let img = self.act_block(i, j, v.rep());
            if !img.is_zero() {
                out.insert(j, QuotElem::new(&img, j).expect("valid index"));
            }
        }
        out
    }

    /// Product `self * other`: apply `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("closure of the basis model")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let n = self.n;
        let mut images: BTreeMap<Block, YPoly<F>> = BTreeMap::new();
        for (&(i, k), bc) in &other.blocks {
            let g = YPoly::from_coeffs(n, bc.clone());
            let v = g.mul(&p_factor(n, i, k)).reduce_mod(k);
            if v.is_zero() {
                continue;
            }
            for (&(k2, j), _) in self.blocks.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k2, k);
                let w = self.act_block(k, j, &v);
                if w.is_zero() {
                    continue;
                }
                let e = images.entry((i, j)).or_insert_with(|| YPoly::zero(n));
                *e = e.add(&w);
            }
        }
        let mut out = Self::zero(n);
        for ((i, j), img) in images {
            let coeffs = decompose(n, i, j, &img)?;
            out.set_block(i, j, coeffs);
        }
        Ok(out)
    }

    /// Graded degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<i64> {
        let mut deg = None;
        for (&(i, j), v) in &self.blocks {
            for (c, g) in v.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let d = g.homogeneous_degree()? as i64 + 2 * c as i64 + (i as i64 - j as i64).abs();
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    /// Set every red dot to zero (the quotient by positive-degree polynomials).
    pub fn eval_x_zero(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.blocks {
            out.set_block(
                i,
                j,
                v.iter()
                    .map(|g| Poly::constant(self.n, g.eval_zero()))
                    .collect(),
            );
        }
        out
    }

    /// Coordinates in the monomial basis: `((i, j, c, monomial), coefficient)`.
    pub fn coords(&self) -> Vec<((usize, usize, usize, Mono), F)> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.blocks {
            for (c, g) in v.iter().enumerate() {
                for (m, a) in g.terms() {
                    out.push(((i, j, c, m.clone()), a.clone()));
                }
            }
        }
        out
    }

    /// Canonical text `[i->j] (g_0, g_1, ...)` joined by ` + `.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(&(i, j), v)| {
                let cs: Vec<String> = v.iter().map(|g| g.to_text()).collect();
                format!("[{i}->{j}] ({})", cs.join(", "))
            })
            .collect();
        parts.join(" + ")
    }
}

/// Recover block coefficients from the image of `1` in `V_{n,j}`.
pub fn decompose<F: Field>(n: usize, i: usize, j: usize, image: &YPoly<F>) -> Result<Vec<Poly<F>>> {
    let len = block_len(i, j);
    let coeffs = if j > i {
        let (q, r) = image.divrem_monic(&p_factor(n, i, j));
        if !r.is_zero() {
            return Err(Error::NotInImage(format!(
                "image {image} in V_{j} is not divisible by P_({i}->{j}); remainder {r}"
            )));
        }
        q.into_coeffs()
    } else {
        image.reduce_mod(j).into_coeffs()
    };
    if coeffs.len() > len {
        return Err(Error::NotInImage(format!(
            "image {image} exceeds block ({i},{j})"
        )));
    }
    Ok(coeffs)
}

/// Basis elements of block `(i, j)` in graded degree `d`.
pub fn block_basis_in_degree<F: Field>(n: usize, i: usize, j: usize, d: i64) -> Vec<WElem<F>> {
    let mut out = Vec::new();
    if !valid_block(n, i, j) {
        return out;
    }
    let rest = d - (i as i64 - j as i64).abs();
    if rest < 0 || rest % 2 != 0 {
        return out;
    }
    for c in 0..block_len(i, j) {
        let left = rest / 2 - c as i64;
        if left < 0 {
            break;
        }
        for m in monomials_of_total(n, left as usize) {
            out.push(WElem::basis(n, i, j, c, &m));
        }
    }
    out
}

/// All basis elements of `W(n,1)` in graded degree `d`.
pub fn basis_in_degree<F: Field>(n: usize, d: i64) -> Vec<WElem<F>> {
    let mut out = Vec::new();
    for i in 2..=n + 1 {
        for j in 2..=n + 1 {
            out.extend(block_basis_in_degree(n, i, j, d));
        }
    }
    out
}

impl<F: Field> fmt::Display for WElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> fmt::Debug for WElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
