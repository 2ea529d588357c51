//! Generators of `W(n,1)`: idempotents, dots and crossings, plus generator words.

use std::fmt;

use super::elem::WElem;
use crate::exactalg::{Field, Poly};
use crate::{Error, Result};

/// Label of the red strand at `pos` in the sequence with the black strand at `i`,
/// or `None` when `pos` is the black strand.
pub fn red_label(i: usize, pos: usize) -> Option<usize> {
    match pos.cmp(&i) {
        std::cmp::Ordering::Less => Some(pos),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(pos - 1),
    }
}

/// Sequence string (`r`/`b`) of the idempotent `e_i` with `n` red strands.
pub fn seq_string(n: usize, i: usize) -> String {
    (1..=n + 1)
        .map(|p| if p == i { 'b' } else { 'r' })
        .collect()
}

/// Parse a sequence such as `rbr` into the black position.
pub fn seq_index(n: usize, seq: &str) -> Result<usize> {
    if seq.len() != n + 1 || seq.chars().any(|c| c != 'r' && c != 'b') {
        return Err(Error::Invalid(format!(
            "sequence {seq} is not a word in r, b of length {}",
            n + 1
        )));
    }
    let blacks: Vec<usize> = seq
        .char_indices()
        .filter(|(_, c)| *c == 'b')
        .map(|(k, _)| k + 1)
        .collect();
    if blacks.len() != 1 {
        return Err(Error::Invalid(format!(
            "sequence {seq} must contain exactly one b"
        )));
    }
    Ok(blacks[0])
}

/// Sequence obtained by exchanging positions `j` and `j+1`.
pub fn swap_index(i: usize, j: usize) -> usize {
    if i == j {
        j + 1
    } else if i == j + 1 {
        j
    } else {
        i
    }
}

/// The dot `y_pos e(i)`: the black dot `y` on the black strand, `x_l` on the `l`-th red strand.
pub fn dot<F: Field>(n: usize, pos: usize, i: usize) -> WElem<F> {
    match red_label(i, pos) {
        None => ydot(n, i),
        Some(l) => WElem::idem(n, i).mul_poly(&Poly::var(n, l)),
    }
}

/// The black dot at idempotent `e_b`, i.e. `y e_b`.
pub fn ydot<F: Field>(n: usize, b: usize) -> WElem<F> {
    if b <= 2 {
        // y e_2 equals x_1 e_2 since V_{n,2} = R[y]/(y - x_1).
        return WElem::idem(n, b).mul_poly(&Poly::var(n, 1));
    }
    WElem::from_block(n, b, b, vec![Poly::zero(n), Poly::one(n)]).expect("valid block")
}

/// The crossing `psi_j e(i)`.
pub fn cross<F: Field>(n: usize, j: usize, i: usize) -> WElem<F> {
    if i == j {
        up(n, i)
    } else if i == j + 1 {
        down(n, i)
    } else {
        WElem::zero(n)
    }
}

/// The crossing moving the black strand right: `e_{b+1} psi_b e_b`.
pub fn up<F: Field>(n: usize, b: usize) -> WElem<F> {
    if b < 2 || b > n {
        return WElem::zero(n);
    }
    WElem::from_block(n, b, b + 1, vec![Poly::one(n)]).expect("valid block")
}

/// The crossing moving the black strand left: `e_{b-1} psi_{b-1} e_b`.
pub fn down<F: Field>(n: usize, b: usize) -> WElem<F> {
    if b < 3 || b > n + 1 {
        return WElem::zero(n);
    }
    WElem::from_block(n, b, b - 1, vec![Poly::one(n)]).expect("valid block")
}

/// `y_pos` summed over all idempotents.
pub fn dot_all<F: Field>(n: usize, pos: usize) -> WElem<F> {
    (1..=n + 1).fold(WElem::zero(n), |acc, i| acc.add(&dot(n, pos, i)))
}

/// `psi_j` summed over all idempotents.
pub fn cross_all<F: Field>(n: usize, j: usize) -> WElem<F> {
    (1..=n + 1).fold(WElem::zero(n), |acc, i| acc.add(&cross(n, j, i)))
}

/// The central element `x_l = sum_i x_l e_i`.
pub fn xdot<F: Field>(n: usize, l: usize) -> WElem<F> {
    WElem::unit(n).mul_poly(&Poly::var(n, l))
}

/// A token of a generator word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    /// `e(i)` by black position.
    Idem(usize),
    /// `y_j` summed over idempotents.
    Dot(usize),
    /// `psi_j` summed over idempotents.
    Cross(usize),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Idem(i) => write!(f, "e_{i}"),
            Token::Dot(j) => write!(f, "y[{j}]"),
            Token::Cross(j) => write!(f, "psi[{j}]"),
        }
    }
}

/// A product of generators, read left to right; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorWord(pub Vec<Token>);

impl GeneratorWord {
    pub fn evaluate<F: Field>(&self, n: usize) -> Result<WElem<F>> {
        let mut acc = WElem::unit(n);
        for t in &self.0 {
            let g = match *t {
                Token::Idem(i) => {
                    if i == 0 || i > n + 1 {
                        return Err(Error::Index(format!("idempotent e_{i} for n = {n}")));
                    }
                    WElem::idem(n, i)
                }
                Token::Dot(j) => {
                    if j == 0 || j > n + 1 {
                        return Err(Error::Index(format!("dot position {j} for n = {n}")));
                    }
                    dot_all(n, j)
                }
                Token::Cross(j) => {
                    if j == 0 || j > n {
                        return Err(Error::Index(format!("crossing position {j} for n = {n}")));
                    }
                    cross_all(n, j)
                }
            };
            acc = acc.mul(&g);
        }
        Ok(acc)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}
