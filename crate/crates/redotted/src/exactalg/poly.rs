//! Sparse multivariate polynomials `k[x_1, ..., x_n]` with the grading `deg x_i = 2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::field::Field;
use crate::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub SmallVec<[u16; 8]>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Mono {
        let mut m = Mono::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Mono {
        Mono(SmallVec::from_slice(exps))
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted(&self, weights: &[u32]) -> u32 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

/// A polynomial in `n` commuting variables over the field `F`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    n: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn constant(n: usize, c: F) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(Mono::one(n), c);
        }
        p
    }

    pub fn from_i64(n: usize, c: i64) -> Self {
        Self::constant(n, F::from_i64(c))
    }

    /// The variable `x_i`, with `i` counted from 1.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable x{i} out of range for n = {n}");
        Self::term(Mono::var(n, i - 1), F::one())
    }

    pub fn term(m: Mono, c: F) -> Self {
        let n = m.0.len();
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Mono::one(self.n))
    }

    pub fn leading(&self) -> Option<(&Mono, &F)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::VarMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d.mul(c));
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d.mul(c)))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (m2, d) in &self.terms {
            out.add_term(m.mul(m2), d.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Graded degree of the top term (`deg x_i = 2`); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| 2 * m.total()).max()
    }

    /// Common graded degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.homogeneous_weighted(&vec![2; self.n])
    }

    pub fn homogeneous_weighted(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weighted(weights));
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Part of weighted degree exactly `d`.
    pub fn part_of_degree(&self, weights: &[u32], d: u32) -> Self {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted(weights) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute `x_i -> images[i-1]`; the images share a common variable count.
    pub fn substitute(&self, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.n, "substitution arity mismatch");
        let m = images.first().map(|p| p.n).unwrap_or(0);
        let mut powers: Vec<Vec<Poly<F>>> = images
            .iter()
            .map(|p| vec![Poly::one(p.n), p.clone()])
            .collect();
        let mut out = Poly::zero(m);
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out.add_scaled(&t, &F::one());
        }
        out
    }

    /// Rename variables into a ring with `m` variables: `x_i -> x_{map[i-1]}`.
    pub fn relabel(&self, m: usize, map: &[usize]) -> Poly<F> {
        let mut out = Poly::zero(m);
        for (mono, c) in &self.terms {
            let mut e = Mono::one(m);
            for (i, &k) in mono.0.iter().enumerate() {
                if k > 0 {
                    e.0[map[i] - 1] += k;
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Exchange `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.0.swap(i - 1, j - 1);
            out.add_term(m, c.clone());
        }
        out
    }

    /// Set every variable to zero.
    pub fn eval_zero(&self) -> F {
        self.constant_term()
    }

    /// Exact division; `None` when the divisor does not divide.
    pub fn div_exact(&self, d: &Poly<F>) -> Option<Poly<F>> {
        assert_eq!(self.n, d.n);
        let (lm, lc) = d.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.n);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(lm)?;
            let qc = c.mul(&lc_inv);
            rem = &rem - &d.mul_mono(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Highest exponent of `x_i` (1-based) appearing.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.0[i - 1]).max().unwrap_or(0)
    }

    /// Write as `sum_k c_k x_i^k` with the coefficients free of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly<F>> {
        let mut out = vec![Poly::zero(self.n); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            let k = m.0[i - 1] as usize;
            let mut m = m.clone();
            m.0[i - 1] = 0;
            out[k].add_term(m, c.clone());
        }
        out
    }

    /// Canonical text with default variable names `x1, x2, ...`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        self.to_text_with(&names)
    }

    /// Canonical text with the given variable names, highest terms first.
    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = split_sign(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (k, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[k].clone()),
                    _ => factors.push(format!("{}^{}", names[k], e)),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Sign and magnitude text of a scalar; the magnitude is parenthesized if needed.
pub(crate) fn split_sign<F: Field>(c: &F) -> (bool, String) {
    let neg_text = c.neg().to_string();
    let text = c.to_string();
    if text.starts_with('-') {
        (true, neg_text)
    } else {
        (false, text)
    }
}

/// Elementary symmetric polynomial `E_j` in the listed variables (1-based) of `k[x_1..x_n]`.
pub fn elementary_symmetric<F: Field>(n: usize, j: usize, vars: &[usize]) -> Result<Poly<F>> {
    if j > vars.len() {
        return Err(Error::Index(format!("E_{j} in {} variables", vars.len())));
    }
    if let Some(&v) = vars.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::Index(format!("variable x{v} with n = {n}")));
    }
    // Dynamic programming over the variables: e[k] holds E_k of the prefix.
    let mut e: Vec<Poly<F>> = vec![Poly::zero(n); j + 1];
    e[0] = Poly::one(n);
    for &v in vars {
        let x = Poly::var(n, v);
        for k in (1..=j).rev() {
            let add = &e[k - 1] * &x;
            e[k] = &e[k] + &add;
        }
    }
    Ok(e.swap_remove(j))
}

/// `E_j(x_a, ..., x_b)` for a contiguous range, zero when `j` exceeds the range size.
pub fn esym_range<F: Field>(n: usize, j: usize, a: usize, b: usize) -> Poly<F> {
    let vars: Vec<usize> = if b >= a {
        (a..=b).collect()
    } else {
        Vec::new()
    };
    if j > vars.len() {
        return Poly::zero(n);
    }
    elementary_symmetric(n, j, &vars).expect("range checked")
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&F::one().neg())
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

/// Number of monomials of graded degree `2d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    // binomial(d + n - 1, n - 1)
    let mut acc: u128 = 1;
    for k in 0..(n - 1) {
        acc = acc * (d + n - 1 - k) as u128 / (k + 1) as u128;
    }
    acc as usize
}

/// All monomials in `n` variables of total degree `d`, in increasing order.
pub fn monomials_of_total(n: usize, d: usize) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Mono>) {
        let n = cur.len();
        if n == 0 {
            if left == 0 {
                out.push(Mono::from_exps(cur));
            }
            return;
        }
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Mono::from_exps(cur));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Monomials with the given weighted degree.
pub fn monomials_of_weight(weights: &[u32], d: u32) -> Vec<Mono> {
    let n = weights.len();
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, w: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Mono>) {
        if i == w.len() {
            if left == 0 {
                out.push(Mono::from_exps(cur));
            }
            return;
        }
        let mut e = 0u32;
        while e * w[i] <= left {
            cur[i] = e as u16;
            rec(i + 1, left - e * w[i], w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    rec(0, d, weights, &mut cur, &mut out);
    let _ = n;
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Q;

    #[test]
    fn monomial_product_and_degree() {
        let p = &Poly::<Q>::var(2, 1) * &Poly::var(2, 2);
        assert_eq!(p.to_text(), "x1*x2");
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn elementary_small_cases() {
        let e1 = elementary_symmetric::<Q>(2, 1, &[1, 2]).unwrap();
        let e2 = elementary_symmetric::<Q>(2, 2, &[1, 2]).unwrap();
        assert_eq!(e1.to_text(), "x1 + x2");
        assert_eq!(e2.to_text(), "x1*x2");
        assert!(elementary_symmetric::<Q>(3, 0, &[1, 2, 3])
            .unwrap()
            .is_one());
        assert!(elementary_symmetric::<Q>(3, 4, &[1, 2, 3]).is_err());
        let e = elementary_symmetric::<Q>(3, 2, &[1, 2, 3]).unwrap();
        assert_eq!(e.to_text(), "x1*x2 + x1*x3 + x2*x3");
    }

    #[test]
    fn e3_of_four_matches_brute_force() {
        let n = 4;
        let e3 = elementary_symmetric::<Q>(n, 3, &[1, 2, 3, 4]).unwrap();
        let mut brute = Poly::<Q>::zero(n);
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    let t = &(&Poly::var(n, a) * &Poly::var(n, b)) * &Poly::var(n, c);
                    brute = &brute + &t;
                }
            }
        }
        assert_eq!(e3, brute);
    }

    #[test]
    fn elementary_recursion_in_first_variable() {
        for n in 2..=5usize {
            for j in 0..n {
                let all: Vec<usize> = (1..=n).collect();
                let rest: Vec<usize> = (2..=n).collect();
                let lhs = elementary_symmetric::<Q>(n, j + 1, &all).unwrap();
                let mut rhs = Poly::zero(n);
                if j < rest.len() {
                    rhs = elementary_symmetric(n, j + 1, &rest).unwrap();
                }
                let t = &Poly::var(n, 1) * &elementary_symmetric(n, j, &rest).unwrap();
                rhs = &rhs + &t;
                assert_eq!(lhs, rhs, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn exact_division() {
        let n = 3;
        let a = &Poly::<Q>::var(n, 1) - &Poly::var(n, 2);
        let b = &(&Poly::var(n, 1) + &Poly::var(n, 3)) * &Poly::var(n, 2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(Poly::<Q>::var(n, 3).div_exact(&a).is_none());
    }

    #[test]
    fn monomial_counts_agree_with_enumeration() {
        for n in 0..5 {
            for d in 0..6 {
                assert_eq!(monomials_of_total(n, d).len(), monomial_count(n, d));
            }
        }
    }
}
