//! Univariate polynomials in `y` with coefficients in `k[x_1..x_n]`, `deg y = 2`.

use std::fmt;

use super::field::Field;
use super::poly::{esym_range, Poly};

/// `sum_c coeffs[c] * y^c`, trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YPoly<F: Field> {
    n: usize,
    coeffs: Vec<Poly<F>>,
}

impl<F: Field> YPoly<F> {
    pub fn zero(n: usize) -> Self {
        YPoly {
            n,
            coeffs: Vec::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_poly(Poly::one(n))
    }

    pub fn y(n: usize) -> Self {
        YPoly {
            n,
            coeffs: vec![Poly::zero(n), Poly::one(n)],
        }
        .trimmed()
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let n = p.nvars();
        YPoly { n, coeffs: vec![p] }.trimmed()
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Poly<F>>) -> Self {
        YPoly { n, coeffs }.trimmed()
    }

    /// `p * y^k`.
    pub fn monomial(p: Poly<F>, k: usize) -> Self {
        let n = p.nvars();
        let mut coeffs = vec![Poly::zero(n); k];
        coeffs.push(p);
        YPoly { n, coeffs }.trimmed()
    }

    /// The linear factor `y - x_l`.
    pub fn linear(n: usize, l: usize) -> Self {
        YPoly {
            n,
            coeffs: vec![-&Poly::var(n, l), Poly::one(n)],
        }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Poly<F>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly<F>> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Poly<F> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Degree in `y`; `None` for zero.
    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        YPoly { n: self.n, coeffs }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        YPoly { n: self.n, coeffs }.trimmed()
    }

    pub fn neg(&self) -> Self {
        YPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        YPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
        .trimmed()
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        YPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
        .trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let mut coeffs = vec![Poly::zero(self.n); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let t = ca * cb;
                coeffs[a + b].add_scaled(&t, &F::one());
            }
        }
        YPoly { n: self.n, coeffs }.trimmed()
    }

    /// Multiply by `y^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Poly::zero(self.n); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { n: self.n, coeffs }
    }

    /// Graded degree (`deg y = deg x_i = 2`) if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()? + 2 * k as u32;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Division with remainder by a polynomial that is monic in `y`.
    pub fn divrem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree_y().expect("division by zero");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic in y");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(d);
        let mut quot = vec![Poly::zero(self.n); qlen];
        for k in (d..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[k], Poly::zero(self.n));
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let t = &c * &divisor.coeffs[j];
                rem[k - d + j].add_scaled(&t, &F::one().neg());
            }
            quot[k - d] = c;
        }
        (
            YPoly {
                n: self.n,
                coeffs: quot,
            }
            .trimmed(),
            YPoly {
                n: self.n,
                coeffs: rem,
            }
            .trimmed(),
        )
    }

    /// Remainder modulo `prod_{l=1}^{m-1} (y - x_l)`.
    pub fn reduce_mod(&self, m: usize) -> Self {
        let d = m - 1;
        if self.coeffs.len() <= d {
            return self.clone();
        }
        // y^d = sum_{j=1}^{d} (-1)^{j+1} E_j(x_1..x_d) y^{d-j}
        let rel: Vec<Poly<F>> = (1..=d)
            .map(|j| {
                let e = esym_range::<F>(self.n, j, 1, d);
                if j % 2 == 1 {
                    e
                } else {
                    -&e
                }
            })
            .collect();
        let mut rem = self.coeffs.clone();
        for k in (d..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[k], Poly::zero(self.n));
            if c.is_zero() {
                continue;
            }
            for (j, r) in rel.iter().enumerate() {
                let t = &c * r;
                rem[k - j - 1].add_scaled(&t, &F::one());
            }
        }
        YPoly {
            n: self.n,
            coeffs: rem,
        }
        .trimmed()
    }

    /// Substitute a polynomial for `y`.
    pub fn eval_y(&self, v: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero(self.n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Apply a ring map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        let coeffs: Vec<Poly<F>> = self.coeffs.iter().map(f).collect();
        let n = coeffs.first().map(|c| c.nvars()).unwrap_or(self.n);
        YPoly { n, coeffs }.trimmed()
    }

    /// Canonical text, highest power of `y` first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let yk = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let ct = c.to_text();
            let term = if yk.is_empty() {
                ct
            } else if c.is_one() {
                yk
            } else if c.len() == 1 && ct == "-1" {
                format!("-{yk}")
            } else if c.len() == 1 {
                format!("{ct}*{yk}")
            } else {
                format!("({ct})*{yk}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, p) in parts.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&p);
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for YPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> fmt::Debug for YPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// `prod_{l=a}^{b} (y - x_l)`, which is 1 for an empty range.
pub fn linear_product<F: Field>(n: usize, a: usize, b: usize) -> YPoly<F> {
    let mut acc = YPoly::one(n);
    for l in a..=b {
        acc = acc.mul(&YPoly::linear(n, l));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Q;

    #[test]
    fn divrem_recovers_dividend() {
        let n = 3;
        let d = linear_product::<Q>(n, 1, 2);
        let f = YPoly::monomial(Poly::var(n, 3), 4).add(&YPoly::y(n));
        let (q, r) = f.divrem_monic(&d);
        assert!(r.degree_y().is_none_or(|k| k < 2));
        assert_eq!(q.mul(&d).add(&r), f);
    }

    #[test]
    fn reduce_matches_division() {
        let n = 3;
        for m in 2..=4 {
            let f = YPoly::monomial(Poly::<Q>::var(n, 2), 5);
            let (_, r) = f.divrem_monic(&linear_product(n, 1, m - 1));
            assert_eq!(f.reduce_mod(m), r);
        }
    }
}
