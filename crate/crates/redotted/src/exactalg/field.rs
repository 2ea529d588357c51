//! Exact coefficient fields: the rationals and prime fields of odd characteristic.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field of characteristic different from two.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Zero for the rationals, otherwise the prime.
    fn characteristic() -> u64;
    /// Short human-readable name such as `Q` or `F_32003`.
    fn name() -> String;
    /// Parse a decimal integer or a fraction `a/b`.
    fn parse_scalar(text: &str) -> Option<Self>;
    /// Integer value when the element is the image of a small integer, used for printing.
    fn as_small_int(&self) -> Option<i64>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_i64(num).div(&Self::from_i64(den))
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }
}

/// Rational numbers with a machine-word fast path.
///
/// Values whose reduced numerator and denominator fit in `i64` are always stored
/// in the `Small` variant, which keeps equality and hashing canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    Small(i64, i64),
    Big(BigRational),
}

impl Q {
    fn from_i128(num: i128, den: i128) -> Q {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Q::Small(a, b),
            _ => Q::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Q::Small(a, b),
            _ => Q::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Q::Small(a, b) => BigRational::new(BigInt::from(*a), BigInt::from(*b)),
            Q::Big(r) => r.clone(),
        }
    }

    /// Numerator and denominator as big integers.
    pub fn parts(&self) -> (BigInt, BigInt) {
        let r = self.to_big();
        (r.numer().clone(), r.denom().clone())
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(a, 1) => write!(f, "{a}"),
            Q::Small(a, b) => write!(f, "{a}/{b}"),
            Q::Big(r) => write!(f, "{r}"),
        }
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q::Small(0, 1)
    }

    fn one() -> Self {
        Q::Small(1, 1)
    }

    fn from_i64(v: i64) -> Self {
        Q::Small(v, 1)
    }

    fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                if b == d {
                    Q::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Q::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Q::Small(a, b) => match a.checked_neg() {
                Some(na) => Q::Small(na, *b),
                None => Q::from_i128(-(*a as i128), *b as i128),
            },
            Q::Big(r) => Q::from_big(-r.clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Q::Small(a, b) => Q::from_i128(*b as i128, *a as i128),
            Q::Big(r) => Q::from_big(r.recip()),
        })
    }

    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::from_big(BigRational::new(n, d)))
        } else {
            let n: BigInt = text.parse().ok()?;
            Some(Q::from_big(BigRational::from_integer(n)))
        }
    }

    fn as_small_int(&self) -> Option<i64> {
        match self {
            Q::Small(a, 1) => Some(*a),
            _ => None,
        }
    }
}

impl Q {
    /// True when the value is a negative rational.
    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(a, _) => *a < 0,
            Q::Big(r) => r.is_negative(),
        }
    }

    /// The value one as a big rational, for interop with `num`.
    pub fn big_one() -> BigRational {
        BigRational::one()
    }
}

/// The prime field with `P` elements. `P` must be an odd prime below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_small_int() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}", self.0),
        }
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn from_i64(v: i64) -> Self {
        let r = (v as i128).rem_euclid(P as i128);
        Fp(r as u64)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, other: &Self) -> Self {
        let s = self.0 as u128 + other.0 as u128;
        Fp((s % P as u128) as u64)
    }

    fn sub(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            Fp(self.0 - other.0)
        } else {
            Fp(P - (other.0 - self.0))
        }
    }

    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }

    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("F_{P}")
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        let q = Q::parse_scalar(text)?;
        let (n, d) = q.parts();
        let p = BigInt::from(P);
        let n = n.mod_floor(&p).to_u64()?;
        let d = d.mod_floor(&p).to_u64()?;
        Fp::<P>(n).div(&Fp::<P>(d))
    }

    /// Balanced representative when it is small compared with the prime.
    fn as_small_int(&self) -> Option<i64> {
        let half = P / 2;
        if self.0 <= half {
            i64::try_from(self.0).ok()
        } else {
            i64::try_from(P - self.0).ok().map(|v| -v)
        }
    }
}

/// Primes accepted for `Fp:p` field selection.
pub const SUPPORTED_PRIMES: &[u64] = &[
    3,
    5,
    7,
    11,
    13,
    101,
    10007,
    32003,
    65521,
    1_000_003,
    2_147_483_647,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Q::from_ratio(1, 3).unwrap();
        let b = Q::from_ratio(1, 6).unwrap();
        assert_eq!(a.add(&b), Q::from_ratio(1, 2).unwrap());
        assert_eq!(a.mul(&b), Q::from_ratio(1, 18).unwrap());
        assert_eq!(a.inv().unwrap(), Q::from_i64(3));
        assert!(Q::zero().inv().is_none());
    }

    #[test]
    fn rational_overflow_promotes_to_big() {
        let big = Q::from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        assert!(matches!(back, Q::Small(_, _)));
    }

    #[test]
    fn prime_field_inverse() {
        type F = Fp<32003>;
        for v in 1..200 {
            let a = F::from_i64(v);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert_eq!(F::from_i64(-1).as_small_int(), Some(-1));
        assert_eq!(
            F::parse_scalar("1/2").unwrap().mul(&F::from_i64(2)),
            F::one()
        );
    }

    #[test]
    fn large_prime_multiplication() {
        type F = Fp<2_147_483_647>;
        let a = F::from_i64(2_147_483_646);
        assert_eq!(a.mul(&a), F::one());
    }
}
