//! A small expression language for elements of `W(n,1)`.
//!
//! Grammar (EBNF; whitespace is insignificant between tokens):
//!
//! ```text
//! sum      = signed , { ( "+" | "-" ) , signed } ;
//! signed   = "-" , signed | product ;
//! product  = power , { [ ";" | "*" ] , factor } ;
//! factor   = "-" , factor | power ;
//! power    = atom , [ "^" , uint ] ;
//! atom     = number | var | idem | gen | block | "(" , sum , ")" ;
//! number   = uint , [ "/" , uint ] ;
//! var      = "x" , uint | "x[" , uint , "]" ;
//! idem     = "e_" , uint | "e(" , seq , ")" ;
//! seq      = { "r" | "b" } ;
//! gen      = "y[" , uint , "]" | "psi[" , uint , "]" | "E1" | "E2" ;
//! block    = "[" , uint , "->" , uint , "]" , "(" , sum , { "," , sum } , ")" ;
//! ```
//!
//! Juxtaposition is a product, as are `;` and `*`. A product `a ; b` is the element
//! `ab`, so `b` acts first on the faithful module. `x_l`, numbers and their sums and
//! products are central. `y[j]` and `psi[j]` are summed over all idempotents.
//! `E1`, `E2` are the images under `rho_p` of the thick-strand generators and need a
//! thick position `p`. A block literal `[i->j] (g_0, g_1, ...)` is the canonical
//! text form of a [`WElem`] block; the coefficients must be polynomials in `x`.

use std::fmt;

use crate::exactalg::{Field, Poly};
use crate::webster::{cross_all, dot_all, WElem};
use crate::websterp::{e1_p, e2_p, WpElem};
use crate::{Error, Result};

/// Abstract syntax tree of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A nonnegative rational literal in canonical text (`3` or `1/2`).
    Num(String),
    /// The central element `x_l`.
    Var(usize),
    /// `e_i` by black position.
    Idem(usize),
    /// A sequence literal `e(rbr)`, stored by black position with its length and token index.
    Seq {
        index: usize,
        len: usize,
        token: usize,
    },
    /// `y_j` summed over idempotents.
    Dot(usize),
    /// `psi_j` summed over idempotents.
    Cross(usize),
    E1,
    E2,
    /// Canonical block literal `[i->j] (g_0, g_1, ...)`.
    Block {
        src: usize,
        tgt: usize,
        coeffs: Vec<Expr>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Evaluation context: the number of red strands and an optional thick position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Context {
    pub n: usize,
    pub p: Option<usize>,
}

impl Context {
    pub fn new(n: usize) -> Self {
        Context { n, p: None }
    }

    pub fn with_thick(n: usize, p: usize) -> Self {
        Context { n, p: Some(p) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(&'static str),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

const SYMBOLS: [&str; 13] = [
    "->", "(", ")", "[", "]", ",", ";", "*", "+", "-", "^", "/", "_",
];

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    'outer: while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            out.push(Token {
                tok: Tok::Int(text[start..pos].to_string()),
                pos: start,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            out.push(Token {
                tok: Tok::Ident(text[start..pos].to_string()),
                pos: start,
            });
            continue;
        }
        for s in SYMBOLS {
            if text[pos..].starts_with(s) {
                out.push(Token {
                    tok: Tok::Sym(s),
                    pos,
                });
                pos += s.len();
                continue 'outer;
            }
        }
        return Err(Error::Parse {
            pos,
            msg: format!(
                "unexpected character {:?}",
                text[pos..].chars().next().unwrap_or('?')
            ),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn eat(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(t)) if *t == s) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected '{s}'"))
        }
    }

    fn uint(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Int(v)) => match v.parse() {
                Ok(k) => {
                    self.at += 1;
                    Ok(k)
                }
                Err(_) => self.err("integer too large"),
            },
            _ => self.err("expected an integer"),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.signed()?;
        loop {
            if self.eat("+") {
                acc = Expr::Add(Box::new(acc), Box::new(self.signed()?));
            } else if self.eat("-") {
                acc = Expr::Sub(Box::new(acc), Box::new(self.signed()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.signed()?)));
        }
        self.product()
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        loop {
            let rhs = if self.eat(";") || self.eat("*") {
                self.factor()?
            } else if self.starts_atom() {
                self.power()?
            } else {
                return Ok(acc);
            };
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.power()
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) => true,
            Some(Tok::Sym(s)) => *s == "(" || *s == "[",
            None => false,
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat("^") {
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| Error::Parse {
                pos: self.pos(),
                msg: "exponent too large".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn bracketed_index(&mut self) -> Result<usize> {
        self.expect("[")?;
        let k = self.uint()?;
        self.expect("]")?;
        Ok(k)
    }

    fn atom(&mut self) -> Result<Expr> {
        let token = self.at;
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                let v = v.trim_start_matches('0');
                let num = if v.is_empty() {
                    "0".to_string()
                } else {
                    v.to_string()
                };
                if self.eat("/") {
                    let den = self.uint()?;
                    if den == 0 {
                        return Err(Error::Parse {
                            pos: self.toks[self.at - 1].pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    return Ok(Expr::Num(format!("{num}/{den}")));
                }
                Ok(Expr::Num(num))
            }
            Some(Tok::Sym("(")) => {
                self.at += 1;
                let e = self.sum()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(Tok::Sym("[")) => self.block(),
            Some(Tok::Ident(id)) => {
                self.at += 1;
                match id.as_str() {
                    "e" => {
                        if self.eat("_") {
                            return Ok(Expr::Idem(self.uint()?));
                        }
                        self.expect("(")?;
                        let seq_token = self.at;
                        let seq = match self.peek() {
                            Some(Tok::Ident(s)) => s.clone(),
                            _ => return self.err("expected a sequence of r and b"),
                        };
                        self.at += 1;
                        self.expect(")")?;
                        if let Some(bad) = seq.chars().find(|c| *c != 'r' && *c != 'b') {
                            return Err(Error::Color {
                                token: seq_token,
                                msg: format!("letter {bad:?} in sequence {seq}"),
                            });
                        }
                        let blacks: Vec<usize> = seq
                            .char_indices()
                            .filter(|(_, c)| *c == 'b')
                            .map(|(k, _)| k + 1)
                            .collect();
                        if blacks.len() != 1 {
                            return Err(Error::Color {
                                token: seq_token,
                                msg: format!(
                                    "sequence {seq} has {} black strands, expected exactly one",
                                    blacks.len()
                                ),
                            });
                        }
                        Ok(Expr::Seq {
                            index: blacks[0],
                            len: seq.len(),
                            token,
                        })
                    }
                    "y" => Ok(Expr::Dot(self.bracketed_index()?)),
                    "psi" => Ok(Expr::Cross(self.bracketed_index()?)),
                    "x" => Ok(Expr::Var(self.bracketed_index()?)),
                    "E1" => Ok(Expr::E1),
                    "E2" => Ok(Expr::E2),
                    _ => {
                        if let Some(l) = id.strip_prefix('x').and_then(|r| r.parse::<usize>().ok())
                        {
                            return Ok(Expr::Var(l));
                        }
                        self.at -= 1;
                        self.err(format!("unknown identifier {id}"))
                    }
                }
            }
            Some(Tok::Sym(s)) => self.err(format!("unexpected '{s}'")),
            None => self.err("unexpected end of input"),
        }
    }

    fn block(&mut self) -> Result<Expr> {
        self.expect("[")?;
        let src = self.uint()?;
        self.expect("->")?;
        let tgt = self.uint()?;
        self.expect("]")?;
        self.expect("(")?;
        let mut coeffs = vec![self.sum()?];
        while self.eat(",") {
            coeffs.push(self.sum()?);
        }
        self.expect(")")?;
        Ok(Expr::Block { src, tgt, coeffs })
    }
}

/// Parse an expression.
pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.sum()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

const SUM: u8 = 0;
const SIGNED: u8 = 1;
const PRODUCT: u8 = 2;
const POWER: u8 = 3;
const ATOM: u8 = 4;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Neg(_) => SIGNED,
            Expr::Mul(..) => PRODUCT,
            Expr::Pow(..) => POWER,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, SUM)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(s) => write!(f, "{s}"),
            Expr::Var(l) => write!(f, "x{l}"),
            Expr::Idem(i) | Expr::Seq { index: i, .. } => write!(f, "e_{i}"),
            Expr::Dot(j) => write!(f, "y[{j}]"),
            Expr::Cross(j) => write!(f, "psi[{j}]"),
            Expr::E1 => write!(f, "E1"),
            Expr::E2 => write!(f, "E2"),
            Expr::Block { src, tgt, coeffs } => {
                write!(f, "[{src}->{tgt}] (")?;
                for (k, c) in coeffs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    c.write_at(f, SUM)?;
                }
                write!(f, ")")
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, SIGNED)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, SUM)?;
                write!(
                    f,
                    " {} ",
                    if matches!(self, Expr::Add(..)) {
                        "+"
                    } else {
                        "-"
                    }
                )?;
                b.write_at(f, SIGNED)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, PRODUCT)?;
                write!(f, " ; ")?;
                b.write_at(f, POWER)
            }
            Expr::Pow(a, e) => {
                a.write_at(f, ATOM)?;
                write!(f, "^{e}")
            }
        }
    }

    /// Evaluate to an element of `W(n,1)`.
    pub fn eval<F: Field>(&self, ctx: &Context) -> Result<WElem<F>> {
        let n = ctx.n;
        Ok(match self {
            Expr::Num(_) | Expr::Var(_) => WElem::unit(n).mul_poly(&self.eval_poly(n)?),
            Expr::Idem(i) => {
                if *i == 0 || *i > n + 1 {
                    return Err(Error::Index(format!("idempotent e_{i} for n = {n}")));
                }
                WElem::idem(n, *i)
            }
            Expr::Seq { index, len, token } => {
                if *len != n + 1 {
                    return Err(Error::Color {
                        token: *token,
                        msg: format!("sequence of length {len} for {} strands", n + 1),
                    });
                }
                WElem::idem(n, *index)
            }
            Expr::Dot(j) => {
                if *j == 0 || *j > n + 1 {
                    return Err(Error::Index(format!("dot position {j} for n = {n}")));
                }
                dot_all(n, *j)
            }
            Expr::Cross(j) => {
                if *j == 0 || *j > n {
                    return Err(Error::Index(format!("crossing position {j} for n = {n}")));
                }
                cross_all(n, *j)
            }
            Expr::E1 | Expr::E2 => {
                let p = ctx
                    .p
                    .ok_or_else(|| Error::Invalid("E1 and E2 need a thick position p".into()))?;
                if p == 0 || p >= n {
                    return Err(Error::Index(format!("thick position {p} for n = {n}")));
                }
                let gen = if matches!(self, Expr::E1) {
                    e1_p::<F>
                } else {
                    e2_p::<F>
                };
                (2..=n)
                    .fold(WpElem::zero(n, p), |acc, i| acc.add(&gen(n, p, i)))
                    .embed()
            }
            Expr::Block { src, tgt, coeffs } => {
                let cs = coeffs
                    .iter()
                    .map(|c| c.eval_poly(n))
                    .collect::<Result<Vec<_>>>()?;
                WElem::from_block(n, *src, *tgt, cs)?
            }
            Expr::Neg(a) => a.eval::<F>(ctx)?.neg(),
            Expr::Add(a, b) => a.eval::<F>(ctx)?.add(&b.eval(ctx)?),
            Expr::Sub(a, b) => a.eval::<F>(ctx)?.sub(&b.eval(ctx)?),
            Expr::Mul(a, b) => a.eval::<F>(ctx)?.mul(&b.eval(ctx)?),
            Expr::Pow(a, e) => {
                let base = a.eval::<F>(ctx)?;
                (0..*e).fold(WElem::unit(n), |acc, _| acc.mul(&base))
            }
        })
    }

    /// Evaluate a scalar expression to a polynomial in `x_1..x_n`.
    pub fn eval_poly<F: Field>(&self, n: usize) -> Result<Poly<F>> {
        Ok(match self {
            Expr::Num(s) => {
                let c = F::parse_scalar(s).ok_or_else(|| {
                    Error::Invalid(format!("{s} is not a scalar of {}", F::name()))
                })?;
                Poly::constant(n, c)
            }
            Expr::Var(l) => {
                if *l == 0 || *l > n {
                    return Err(Error::Index(format!("variable x{l} for n = {n}")));
                }
                Poly::var(n, *l)
            }
            Expr::Neg(a) => -a.eval_poly::<F>(n)?,
            Expr::Add(a, b) => a.eval_poly::<F>(n)? + b.eval_poly(n)?,
            Expr::Sub(a, b) => a.eval_poly::<F>(n)? - b.eval_poly(n)?,
            Expr::Mul(a, b) => a.eval_poly::<F>(n)? * b.eval_poly(n)?,
            Expr::Pow(a, e) => a.eval_poly::<F>(n)?.pow(*e),
            other => return Err(Error::Invalid(format!("{other} is not a polynomial in x"))),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, SUM)
    }
}

/// Canonical text of an element: block literals joined by ` + `, parseable by [`parse`].
pub fn print<F: Field>(w: &WElem<F>) -> String {
    w.to_text()
}

/// Parse and evaluate in one step.
pub fn evaluate<F: Field>(text: &str, ctx: &Context) -> Result<WElem<F>> {
    parse(text)?.eval(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    #[test]
    fn sequence_literal_is_an_index() {
        assert!(matches!(
            parse("e(rbr)").unwrap(),
            Expr::Seq {
                index: 2,
                len: 3,
                ..
            }
        ));
        let w = evaluate::<Q>("e(rbr)", &Context::new(2)).unwrap();
        assert_eq!(w, WElem::idem(2, 2));
    }

    #[test]
    fn leftmost_black_strand_vanishes() {
        assert!(evaluate::<Q>("e(brr)", &Context::new(2)).unwrap().is_zero());
    }

    #[test]
    fn double_crossing_is_a_difference_of_dots() {
        let w = evaluate::<Q>("psi[2] ; psi[2] ; e_2", &Context::new(2)).unwrap();
        let want = evaluate::<Q>("[2->2] (x1 - x2)", &Context::new(2)).unwrap();
        assert_eq!(w, want);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("y[2] + + e_2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        match parse("e(rbb)") {
            Err(Error::Color { token, .. }) => assert_eq!(token, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            evaluate::<Q>("e(rrbr)", &Context::new(2)),
            Err(Error::Color { token: 0, .. })
        ));
    }

    #[test]
    fn printed_expressions_reparse() {
        for s in [
            "-x1 ; psi[2] + 2/3 y[3]^2",
            "(x1 + x2)^2 ; e_3 - -e_2",
            "[2->3] (1, x1 - x2) + E1",
            "(-x1) ; y[2]",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s} -> {e}");
        }
    }
}
