//! Integer Laurent polynomials in `q` and graded dimensions of the form `P(q)/(1-q^2)^n`.

use std::collections::BTreeMap;
use std::fmt;

/// `sum_k c_k q^k` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut l = Laurent::zero();
        l.add_term(k, c);
        l
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut l = Laurent::zero();
        for (k, c) in terms {
            l.add_term(k, c);
        }
        l
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Laurent::zero();
        for (k, d) in self.terms() {
            out.add_term(k, c * d);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&k, &c)| (k + s, c)).collect(),
        }
    }

    /// Substitute `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }

    /// Keep terms of degree at most `cap`.
    pub fn truncate(&self, cap: i64) -> Self {
        Laurent {
            terms: self.terms.range(..=cap).map(|(&k, &c)| (k, c)).collect(),
        }
    }

    /// Whether this is `+- q^k`, the units of `Z[q, q^{-1}]`.
    pub fn as_unit(&self) -> Option<(i64, i64)> {
        if self.terms.len() == 1 {
            let (&k, &c) = self.terms.iter().next().unwrap();
            if c == 1 || c == -1 {
                return Some((c, k));
            }
        }
        None
    }

    /// Compact text such as `1+q^2` or `q^-1-2q`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if c < 0 {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let qk = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if qk.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&qk);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Series expansion of `1/(1-q^2)^n` up to degree `cap`.
pub fn inverse_power_series(n: u32, cap: i64) -> Laurent {
    if n == 0 {
        return Laurent::one().truncate(cap);
    }
    let mut out = Laurent::zero();
    let mut k = 0i64;
    while 2 * k <= cap {
        out.add_term(
            2 * k,
            binomial(k as u64 + n as u64 - 1, n as u64 - 1) as i64,
        );
        k += 1;
    }
    out
}

pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The rational function `num / (1-q^2)^den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGdim {
    pub num: Laurent,
    pub den: u32,
}

impl RationalGdim {
    pub fn new(num: Laurent, den: u32) -> Self {
        RationalGdim { num, den }
    }

    /// Expansion as a power series truncated at degree `cap`.
    pub fn series(&self, cap: i64) -> Laurent {
        let low = self.num.min_degree().unwrap_or(0);
        let span = cap - low.min(0);
        self.num
            .mul(&inverse_power_series(self.den, span.max(0)))
            .truncate(cap)
    }

    /// Exact equality of rational functions.
    pub fn equals(&self, other: &Self) -> bool {
        let one_minus = Laurent::from_terms([(0, 1), (2, -1)]);
        let pow = |e: u32| (0..e).fold(Laurent::one(), |acc, _| acc.mul(&one_minus));
        let (a, b) = if self.den >= other.den {
            (self.num.clone(), other.num.mul(&pow(self.den - other.den)))
        } else {
            (self.num.mul(&pow(other.den - self.den)), other.num.clone())
        };
        a == b
    }

    pub fn add(&self, other: &Self) -> Self {
        let one_minus = Laurent::from_terms([(0, 1), (2, -1)]);
        let pow = |e: u32| (0..e).fold(Laurent::one(), |acc, _| acc.mul(&one_minus));
        let den = self.den.max(other.den);
        let num = self
            .num
            .mul(&pow(den - self.den))
            .add(&other.num.mul(&pow(den - other.den)));
        RationalGdim { num, den }
    }

    pub fn shift(&self, s: i64) -> Self {
        RationalGdim {
            num: self.num.shift(s),
            den: self.den,
        }
    }

    /// Text such as `(1+q^2)/(1-q^2)^2`.
    pub fn to_text(&self) -> String {
        let num = self.num.to_text();
        let num = if self.num.terms.len() > 1 {
            format!("({num})")
        } else {
            num
        };
        match self.den {
            0 => num,
            1 => format!("{num}/(1-q^2)"),
            d => format!("{num}/(1-q^2)^{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries_print_canonically() {
        let g = RationalGdim::new(Laurent::from_terms([(0, 1), (2, 1)]), 2);
        assert_eq!(g.to_text(), "(1+q^2)/(1-q^2)^2");
        assert_eq!(RationalGdim::new(Laurent::q(), 2).to_text(), "q/(1-q^2)^2");
    }

    #[test]
    fn series_of_inverse_square() {
        let s = RationalGdim::new(Laurent::one(), 2).series(6);
        assert_eq!(s, Laurent::from_terms([(0, 1), (2, 2), (4, 3), (6, 4)]));
    }

    #[test]
    fn rational_equality_cross_multiplies() {
        let a = RationalGdim::new(Laurent::from_terms([(0, 1), (2, -1)]), 3);
        let b = RationalGdim::new(Laurent::one(), 2);
        assert!(a.equals(&b));
        assert!(!a.equals(&RationalGdim::new(Laurent::one(), 3)));
    }
}
