//! Parser for the canonical polynomial text form, e.g. `3*x1^2*x2 - y + 1/2`.

use super::field::Field;
use super::poly::Poly;
use super::ypoly::YPoly;
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    allow_y: bool,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn expr<F: Field>(&mut self) -> Result<YPoly<F>> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<YPoly<F>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary<F: Field>(&mut self) -> Result<YPoly<F>> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power<F: Field>(&mut self) -> Result<YPoly<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let Some(e) = self.integer() else {
                return self.err("expected exponent");
            };
            let e: u32 = match e.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            let mut acc = YPoly::one(self.n);
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom<F: Field>(&mut self) -> Result<YPoly<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer().expect("digit present");
                let mut text = num;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let Some(den) = self.integer() else {
                        return self.err("expected denominator");
                    };
                    text = format!("{text}/{den}");
                }
                match F::parse_scalar(&text) {
                    Some(c) => Ok(YPoly::from_poly(Poly::constant(self.n, c))),
                    None => self.err(format!("invalid scalar {text}")),
                }
            }
            Some(b'x') => {
                self.pos += 1;
                let Some(idx) = self.integer() else {
                    return self.err("expected variable index after x");
                };
                let i: usize = idx.parse().unwrap_or(0);
                if i == 0 || i > self.n {
                    return self.err(format!("variable x{idx} outside x1..x{}", self.n));
                }
                Ok(YPoly::from_poly(Poly::var(self.n, i)))
            }
            Some(b'y') if self.allow_y => {
                self.pos += 1;
                Ok(YPoly::y(self.n))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_inner<F: Field>(text: &str, n: usize, allow_y: bool) -> Result<YPoly<F>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
        allow_y,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse a polynomial in `x1..xn`.
pub fn parse_poly<F: Field>(text: &str, n: usize) -> Result<Poly<F>> {
    let y = parse_inner::<F>(text, n, false)?;
    Ok(y.coeff(0))
}

/// Parse a polynomial in `y` with coefficients in `x1..xn`.
pub fn parse_ypoly<F: Field>(text: &str, n: usize) -> Result<YPoly<F>> {
    parse_inner(text, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{Fp, Q};

    #[test]
    fn round_trip_examples() {
        for s in ["3*x1^2*x2 - x3 + 1/2", "x1 + x2", "-x1*x2", "0", "7"] {
            let p = parse_poly::<Q>(s, 3).unwrap();
            assert_eq!(p.to_text(), s);
        }
        let y = parse_ypoly::<Q>("3*x1^2*x2 - y", 2).unwrap();
        assert_eq!(y.to_text(), "-y + 3*x1^2*x2");
        assert_eq!(parse_ypoly::<Q>(&y.to_text(), 2).unwrap(), y);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly::<Q>("x1 + x9", 2) {
            Err(Error::Parse { pos, .. }) => assert!(pos >= 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly::<Q>("x1 +", 2).is_err());
        assert!(parse_poly::<Q>("y", 2).is_err());
    }

    #[test]
    fn prime_field_parsing() {
        let p = parse_poly::<Fp<7>>("8*x1", 1).unwrap();
        assert_eq!(p.to_text(), "x1");
    }
}
