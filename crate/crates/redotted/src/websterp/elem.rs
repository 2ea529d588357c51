//! Elements of `W^p(n,1)` stored blockwise with coefficients in
//! `C_p = k[t_1, ..., t_{n-2}, E_1, E_2]`.
//!
//! The idempotent `e_{i,p}` has the black strand in position `i` of a sequence of
//! `n` strands: `n-2` thin red strands and one thick red strand, which sits in
//! position `p+1` when `i <= p` and in position `p` otherwise. The block `(i, j)`
//! holds coefficients `(g_0, ..., g_{L-1})` of `sum_c g_c y^c psi_w e_{i,p}` with
//! `L = min(rho(i), rho(j)) - 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::poly::monomials_of_weight;
use crate::exactalg::{Field, Poly, QuotElem};
use crate::gradedla::{inverse_power_series, Laurent};
use crate::webster::{block_len, WElem};
use crate::{Error, Result};

/// Index of the black strand in `W(n,1)` for the idempotent `e_{i,p}`.
pub fn rho_index(p: usize, i: usize) -> usize {
    if i <= p {
        i
    } else {
        i + 1
    }
}

/// Inverse of [`rho_index`], `None` for `p + 1`.
pub fn rho_preimage(p: usize, a: usize) -> Option<usize> {
    match a.cmp(&(p + 1)) {
        std::cmp::Ordering::Less => Some(a),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(a - 1),
    }
}

/// Position of the thick strand when the black strand is in position `i`.
pub fn thick_position(p: usize, i: usize) -> usize {
    if i <= p {
        p + 1
    } else {
        p
    }
}

/// Weights of the `C_p` variables in graded degree: thin dots 2, `E_1` 2, `E_2` 4.
pub fn coefficient_weights(n: usize) -> Vec<u32> {
    let mut w = vec![2; n];
    w[n - 1] = 4;
    w
}

/// Number of coefficients in block `(i, j)` of `W^p(n,1)`.
pub fn block_len_p(p: usize, i: usize, j: usize) -> usize {
    block_len(rho_index(p, i), rho_index(p, j))
}

/// The coefficient ring `C_p` together with its embedding into `R = k[x_1..x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickRing {
    pub n: usize,
    pub p: usize,
}

impl ThickRing {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        if n < 2 || p == 0 || p >= n {
            return Err(Error::Index(format!(
                "W^p(n,1) needs 1 <= p <= n-1, got n = {n}, p = {p}"
            )));
        }
        Ok(ThickRing { n, p })
    }

    /// `R` variable of the thin variable `t_k`.
    pub fn thin_to_r(&self, k: usize) -> usize {
        if k < self.p {
            k
        } else {
            k + 2
        }
    }

    /// `C_p` variable of the `R` variable `x_l` for `l` outside `{p, p+1}`.
    pub fn r_to_thin(&self, l: usize) -> Option<usize> {
        if l < self.p {
            Some(l)
        } else if l > self.p + 1 {
            Some(l - 2)
        } else {
            None
        }
    }

    pub fn thin<F: Field>(&self, k: usize) -> Poly<F> {
        Poly::var(self.n, k)
    }

    pub fn e1<F: Field>(&self) -> Poly<F> {
        Poly::var(self.n, self.n - 1)
    }

    pub fn e2<F: Field>(&self) -> Poly<F> {
        Poly::var(self.n, self.n)
    }

    /// Images in `R` of the `C_p` variables.
    fn images<F: Field>(&self) -> Vec<Poly<F>> {
        let n = self.n;
        let mut out: Vec<Poly<F>> = (1..=n - 2)
            .map(|k| Poly::var(n, self.thin_to_r(k)))
            .collect();
        let (a, b) = (Poly::var(n, self.p), Poly::var(n, self.p + 1));
        out.push(&a + &b);
        out.push(&a * &b);
        out
    }

    /// `t_k -> x_{k or k+2}`, `E_1 -> x_p + x_{p+1}`, `E_2 -> x_p x_{p+1}`.
    pub fn embed<F: Field>(&self, f: &Poly<F>) -> Poly<F> {
        f.substitute(&self.images())
    }

    /// Write an `s_p`-symmetric polynomial of `R` in `C_p`.
    pub fn reduce<F: Field>(&self, f: &Poly<F>) -> Result<Poly<F>> {
        let (p, n) = (self.p, self.n);
        if f.swap_vars(p, p + 1) != *f {
            return Err(Error::NotInImage(format!(
                "{f} is not symmetric in x{p}, x{}",
                p + 1
            )));
        }
        let map: Vec<usize> = (1..=n).map(|l| self.r_to_thin(l).unwrap_or(1)).collect();
        let mut zero_b: Vec<Poly<F>> = (1..=n).map(|l| Poly::var(n, l)).collect();
        zero_b[p] = Poly::zero(n);
        let e2_r = &Poly::var(n, p) * &Poly::var(n, p + 1);
        let mut out = Poly::zero(n);
        let mut rest = f.clone();
        let mut e2_pow = Poly::one(n);
        while !rest.is_zero() {
            let g = rest.substitute(&zero_b);
            let mut part = Poly::zero(n);
            for (k, gk) in g.coefficients_in(p).into_iter().enumerate() {
                if !gk.is_zero() {
                    part = &part + &(&gk.relabel(n, &map) * &self.e1::<F>().pow(k as u32));
                }
            }
            out = &out + &(&part * &e2_pow);
            let diff = &rest - &self.embed(&part);
            rest = diff
                .div_exact(&e2_r)
                .ok_or_else(|| Error::NotInImage(format!("{f} failed symmetric reduction")))?;
            e2_pow = &e2_pow * &self.e2::<F>();
        }
        Ok(out)
    }
}

/// An element of `W^p(n,1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WpElem<F: Field> {
    n: usize,
    p: usize,
    blocks: BTreeMap<(usize, usize), Vec<Poly<F>>>,
}

impl<F: Field> WpElem<F> {
    pub fn zero(n: usize, p: usize) -> Self {
        WpElem {
            n,
            p,
            blocks: BTreeMap::new(),
        }
    }

    pub fn valid_block(n: usize, i: usize, j: usize) -> bool {
        (2..=n).contains(&i) && (2..=n).contains(&j)
    }

    /// The element with coefficients `coeffs` in block `(i, j)`; blocks touching
    /// `e_{1,p}` are zero.
    pub fn from_block(
        n: usize,
        p: usize,
        i: usize,
        j: usize,
        coeffs: Vec<Poly<F>>,
    ) -> Result<Self> {
        ThickRing::new(n, p)?;
        let mut w = Self::zero(n, p);
        if !Self::valid_block(n, i, j) {
            if (i == 1 && j <= n) || (j == 1 && i <= n) {
                return Ok(w);
            }
            return Err(Error::Index(format!("block ({i},{j}) of W^{p}({n},1)")));
        }
        let len = block_len_p(p, i, j);
        if coeffs.len() > len {
            return Err(Error::Invalid(format!(
                "block ({i},{j}) takes {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        w.set_block(i, j, coeffs);
        Ok(w)
    }

    pub fn idem(n: usize, p: usize, i: usize) -> Self {
        Self::from_block(n, p, i, i, vec![Poly::one(n)]).expect("valid idempotent")
    }

    pub fn unit(n: usize, p: usize) -> Self {
        (2..=n).fold(Self::zero(n, p), |acc, i| acc.add(&Self::idem(n, p, i)))
    }

    fn set_block(&mut self, i: usize, j: usize, mut coeffs: Vec<Poly<F>>) {
        coeffs.resize(block_len_p(self.p, i, j), Poly::zero(self.n));
        if coeffs.iter().all(|c| c.is_zero()) {
            self.blocks.remove(&(i, j));
        } else {
            self.blocks.insert((i, j), coeffs);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ring(&self) -> ThickRing {
        ThickRing {
            n: self.n,
            p: self.p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> impl Iterator<Item = ((usize, usize), &Vec<Poly<F>>)> {
        self.blocks.iter().map(|(&b, v)| (b, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), v) in &other.blocks {
            let mut cur = out
                .blocks
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Poly::zero(self.n); v.len()]);
            for (a, b) in cur.iter_mut().zip(v) {
                *a = &*a + b;
            }
            out.set_block(i, j, cur);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n, self.p);
        for (&(i, j), v) in &self.blocks {
            out.set_block(i, j, v.iter().map(|g| g.scale(c)).collect());
        }
        out
    }

    /// Multiply every coefficient by an element of `C_p`.
    pub fn mul_coeff(&self, f: &Poly<F>) -> Self {
        let mut out = Self::zero(self.n, self.p);
        for (&(i, j), v) in &self.blocks {
            out.set_block(i, j, v.iter().map(|g| g * f).collect());
        }
        out
    }

    /// Coefficient-level image in `W(n,1)`.
    pub fn embed(&self) -> WElem<F> {
        let ring = self.ring();
        let mut out = WElem::zero(self.n);
        for (&(i, j), v) in &self.blocks {
            let coeffs = v.iter().map(|g| ring.embed(g)).collect();
            let b = WElem::from_block(self.n, rho_index(self.p, i), rho_index(self.p, j), coeffs)
                .expect("embedded block");
            out = out.add(&b);
        }
        out
    }

    /// Pull back an element of `W(n,1)` lying in the image of the embedding.
    pub fn pullback(n: usize, p: usize, w: &WElem<F>) -> Result<Self> {
        let ring = ThickRing::new(n, p)?;
        let mut out = Self::zero(n, p);
        for ((a, b), v) in w.blocks() {
            let (i, j) = match (rho_preimage(p, a), rho_preimage(p, b)) {
                (Some(i), Some(j)) => (i, j),
                _ => {
                    return Err(Error::NotInImage(format!(
                        "block ({a},{b}) touches e_{}",
                        p + 1
                    )))
                }
            };
            let coeffs = v
                .iter()
                .map(|g| ring.reduce(g))
                .collect::<Result<Vec<_>>>()?;
            out.set_block(i, j, coeffs);
        }
        Ok(out)
    }

    /// Action on `V_n^p`: `v` must lie in `V_{n,rho(i)}` for some `i`.
    pub fn act(&self, v: &QuotElem<F>) -> Result<BTreeMap<usize, QuotElem<F>>> {
        if rho_preimage(self.p, v.index()).is_none() {
            return Err(Error::Index(format!(
                "V_{} is not a summand of V_n^{}",
                v.index(),
                self.p
            )));
        }
        Ok(self.embed().act(v))
    }

    /// Product `self * other`: apply `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("closure of W^p(n,1)")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.p != other.p || self.n != other.n {
            return Err(Error::Invalid("factors from different W^p(n,1)".into()));
        }
        Self::pullback(self.n, self.p, &self.embed().mul(&other.embed()))
    }

    /// Graded degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<i64> {
        let w = coefficient_weights(self.n);
        let mut deg = None;
        for (&(i, j), v) in &self.blocks {
            let shift = (rho_index(self.p, i) as i64 - rho_index(self.p, j) as i64).abs();
            for (c, g) in v.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let d = g.homogeneous_weighted(&w)? as i64 + 2 * c as i64 + shift;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    /// Canonical text with variables `t1.., E1, E2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = coefficient_names(self.n);
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(&(i, j), v)| {
                let cs: Vec<String> = v.iter().map(|g| g.to_text_with(&names)).collect();
                format!("[{i}->{j}] ({})", cs.join(", "))
            })
            .collect();
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Display for WpElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> fmt::Debug for WpElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WpElem(p={}, {})", self.p, self.to_text())
    }
}

/// Variable names of `C_p`.
pub fn coefficient_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=n - 2).map(|k| format!("t{k}")).collect();
    names.push("E1".into());
    names.push("E2".into());
    names
}

/// Basis elements of block `(i, j)` of `W^p(n,1)` in graded degree `d`.
pub fn block_basis_in_degree_p<F: Field>(
    n: usize,
    p: usize,
    i: usize,
    j: usize,
    d: i64,
) -> Vec<WpElem<F>> {
    let mut out = Vec::new();
    if !WpElem::<F>::valid_block(n, i, j) {
        return out;
    }
    let rest = d - (rho_index(p, i) as i64 - rho_index(p, j) as i64).abs();
    if rest < 0 || rest % 2 != 0 {
        return out;
    }
    let w = coefficient_weights(n);
    for c in 0..block_len_p(p, i, j) {
        let left = rest - 2 * c as i64;
        if left < 0 {
            break;
        }
        for m in monomials_of_weight(&w, left as u32) {
            let mut coeffs = vec![Poly::zero(n); c + 1];
            coeffs[c] = Poly::term(m, F::one());
            out.push(WpElem::from_block(n, p, i, j, coeffs).expect("basis element"));
        }
    }
    out
}

/// All basis elements of `W^p(n,1)` in graded degree `d`.
pub fn basis_in_degree_p<F: Field>(n: usize, p: usize, d: i64) -> Vec<WpElem<F>> {
    let mut out = Vec::new();
    for i in 2..=n {
        for j in 2..=n {
            out.extend(block_basis_in_degree_p(n, p, i, j, d));
        }
    }
    out
}

/// Closed-form series `q^s (1 + ... + q^{2(L-1)}) / ((1-q^2)^{n-1} (1-q^4))` up to `cap`.
pub fn block_series_p(n: usize, p: usize, i: usize, j: usize, cap: i64) -> Laurent {
    if !(2..=n).contains(&i) || !(2..=n).contains(&j) {
        return Laurent::zero();
    }
    let s = (rho_index(p, i) as i64 - rho_index(p, j) as i64).abs();
    let num = Laurent::from_terms((0..block_len_p(p, i, j) as i64).map(|c| (s + 2 * c, 1)));
    let e2 = Laurent::from_terms((0..=cap / 4).map(|k| (4 * k, 1)));
    num.mul(&inverse_power_series(n as u32 - 1, cap))
        .mul(&e2)
        .truncate(cap)
}

/// Closed-form text of [`block_series_p`].
pub fn block_gdim_text_p(n: usize, p: usize, i: usize, j: usize) -> String {
    let s = (rho_index(p, i) as i64 - rho_index(p, j) as i64).abs();
    let num = Laurent::from_terms((0..block_len_p(p, i, j) as i64).map(|c| (s + 2 * c, 1)));
    if num.is_zero() {
        return "0".into();
    }
    let n1 = n - 1;
    let num_text = num.to_text();
    let num_text = if num.terms().count() > 1 {
        format!("({num_text})")
    } else {
        num_text
    };
    if n1 == 1 {
        format!("{num_text}/((1-q^2)(1-q^4))")
    } else {
        format!("{num_text}/((1-q^2)^{n1}(1-q^4))")
    }
}

/// Series obtained by counting basis elements.
pub fn enumerated_block_series_p(n: usize, p: usize, i: usize, j: usize, cap: i64) -> Laurent {
    let mut out = Laurent::zero();
    for d in 0..=cap {
        out.add_term(
            d,
            block_basis_in_degree_p::<crate::exactalg::Q>(n, p, i, j, d).len() as i64,
        );
    }
    out
}
