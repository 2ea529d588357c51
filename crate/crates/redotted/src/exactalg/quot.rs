//! The modules `V_{n,m} = R[y] / prod_{l=1}^{m-1} (y - x_l)` for `2 <= m <= n+1`.

use std::fmt;

use super::field::Field;
use super::poly::Poly;
use super::ypoly::{linear_product, YPoly};
use crate::{Error, Result};

/// A reduced element of `V_{n,m}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotElem<F: Field> {
    m: usize,
    rep: YPoly<F>,
}

fn check_index(n: usize, m: usize) -> Result<()> {
    if m < 2 || m > n + 1 {
        Err(Error::Index(format!(
            "module index {m} outside 2..={}",
            n + 1
        )))
    } else {
        Ok(())
    }
}

/// The monic modulus `prod_{l=1}^{m-1} (y - x_l)`.
pub fn modulus<F: Field>(n: usize, m: usize) -> YPoly<F> {
    linear_product(n, 1, m - 1)
}

/// Reduce an arbitrary `y`-polynomial into `V_{n,m}`.
pub fn quot_reduce<F: Field>(p: &YPoly<F>, m: usize) -> Result<QuotElem<F>> {
    check_index(p.nvars(), m)?;
    Ok(QuotElem {
        m,
        rep: p.reduce_mod(m),
    })
}

impl<F: Field> QuotElem<F> {
    pub fn new(p: &YPoly<F>, m: usize) -> Result<Self> {
        quot_reduce(p, m)
    }

    pub fn zero(n: usize, m: usize) -> Self {
        QuotElem {
            m,
            rep: YPoly::zero(n),
        }
    }

    pub fn one(n: usize, m: usize) -> Self {
        QuotElem {
            m,
            rep: YPoly::one(n),
        }
    }

    pub fn index(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.rep.nvars()
    }

    pub fn rep(&self) -> &YPoly<F> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            Err(Error::Index(format!("V_{} vs V_{}", self.m, other.m)))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(QuotElem {
            m: self.m,
            rep: self.rep.add(&other.rep),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(QuotElem {
            m: self.m,
            rep: self.rep.sub(&other.rep),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(QuotElem {
            m: self.m,
            rep: self.rep.mul(&other.rep).reduce_mod(self.m),
        })
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        QuotElem {
            m: self.m,
            rep: self.rep.mul_poly(p),
        }
    }

    /// Multiply by an arbitrary `y`-polynomial and reduce.
    pub fn mul_y(&self, p: &YPoly<F>) -> Self {
        QuotElem {
            m: self.m,
            rep: self.rep.mul(p).reduce_mod(self.m),
        }
    }

    /// The natural surjection `V_{n,m} -> V_{n,m-1}`.
    pub fn project(&self) -> Result<Self> {
        check_index(self.nvars(), self.m - 1)?;
        Ok(QuotElem {
            m: self.m - 1,
            rep: self.rep.reduce_mod(self.m - 1),
        })
    }

    /// Multiplication by `y - x_m`, landing in `V_{n,m+1}`.
    pub fn raise(&self) -> Result<Self> {
        check_index(self.nvars(), self.m + 1)?;
        let rep = self.rep.mul(&YPoly::linear(self.nvars(), self.m));
        Ok(QuotElem { m: self.m + 1, rep })
    }
}

impl<F: Field> fmt::Display for QuotElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in V_{}", self.rep, self.m)
    }
}

impl<F: Field> fmt::Debug for QuotElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Q;

    fn x(n: usize, i: usize) -> Poly<Q> {
        Poly::var(n, i)
    }

    #[test]
    fn reduce_linear_modulus() {
        let n = 2;
        let r = quot_reduce(&YPoly::<Q>::y(n), 2).unwrap();
        assert_eq!(r.rep(), &YPoly::from_poly(x(n, 1)));
    }

    #[test]
    fn reduce_quadratic_modulus() {
        let n = 2;
        let r = quot_reduce(&YPoly::<Q>::y(n).shift(1), 3).unwrap();
        let expected = YPoly::from_coeffs(n, vec![-&(&x(n, 1) * &x(n, 2)), &x(n, 1) + &x(n, 2)]);
        assert_eq!(r.rep(), &expected);
    }

    #[test]
    fn reduced_input_is_fixed() {
        let n = 3;
        let p = YPoly::from_coeffs(n, vec![x(n, 3), x(n, 2)]);
        assert_eq!(quot_reduce(&p, 3).unwrap().rep(), &p);
    }

    #[test]
    fn project_and_raise() {
        let n = 2;
        let one3 = QuotElem::<Q>::one(n, 3);
        assert_eq!(one3.project().unwrap(), QuotElem::one(n, 2));
        let up = QuotElem::<Q>::one(n, 2).raise().unwrap();
        assert_eq!(up.rep(), &YPoly::linear(n, 2));
        let p = QuotElem::one(n, 2).mul_poly(&x(n, 2));
        let back = p.raise().unwrap().project().unwrap();
        assert_eq!(back, p.mul_poly(&(&x(n, 1) - &x(n, 2))));
    }

    #[test]
    fn index_range_is_checked() {
        assert!(quot_reduce(&YPoly::<Q>::one(2), 4).is_err());
        assert!(QuotElem::<Q>::one(2, 2).project().is_err());
        assert!(QuotElem::<Q>::one(2, 3).raise().is_err());
    }
}
