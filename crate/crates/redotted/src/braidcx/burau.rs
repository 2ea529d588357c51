//! Square matrices over `Z[q, q^{-1}]` and the `K_0` classes of braid complexes.
//!
//! The class of a complex acts on `K_0` of graded projective left modules in the
//! basis `[W e_2], ..., [W e_{n+1}]`: entry `(a, b)` is the alternating sum of
//! `q^{deg g}` over generators `g` with `l(g) = a`, `r(g) = b`.

use std::fmt;

use crate::gradedla::Laurent;

/// A square matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMat {
    entries: Vec<Vec<Laurent>>,
}

impl LaurentMat {
    pub fn zero(m: usize) -> Self {
        LaurentMat {
            entries: vec![vec![Laurent::zero(); m]; m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::zero(m);
        for k in 0..m {
            out.entries[k][k] = Laurent::one();
        }
        out
    }

    pub fn from_entries(entries: Vec<Vec<Laurent>>) -> Self {
        assert!(
            entries.iter().all(|r| r.len() == entries.len()),
            "square matrix"
        );
        LaurentMat { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &Laurent {
        &self.entries[a][b]
    }

    pub fn entries(&self) -> &[Vec<Laurent>] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.size();
        let entries = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| self.entries[a][b].add(&other.entries[a][b]))
                    .collect()
            })
            .collect();
        LaurentMat { entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.size();
        let entries = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| self.entries[a][b].sub(&other.entries[a][b]))
                    .collect()
            })
            .collect();
        LaurentMat { entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.size();
        let mut out = Self::zero(m);
        for a in 0..m {
            for c in 0..m {
                let mut acc = Laurent::zero();
                for b in 0..m {
                    acc = acc.add(&self.entries[a][b].mul(&other.entries[b][c]));
                }
                out.entries[a][c] = acc;
            }
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Laurent {
        det_rec(&self.entries)
    }

    /// Whether the determinant is a unit `+-q^k` of `Z[q, q^{-1}]`.
    pub fn is_invertible(&self) -> bool {
        self.det().as_unit().is_some()
    }

    /// Entries as text, row by row.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|l| l.to_text()).collect())
            .collect()
    }
}

fn det_rec(m: &[Vec<Laurent>]) -> Laurent {
    let size = m.len();
    if size == 0 {
        return Laurent::one();
    }
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = Laurent::zero();
    for (c, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Laurent>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top.mul(&det_rec(&minor));
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

impl fmt::Display for LaurentMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The matrix of `sigma_p^{+-1}` read off from the terms of the Rouquier complex:
/// `sigma_p = -[W] + [W_p<-1>]`, `sigma_p^{-1} = [W_p<1>] - [W]`.
pub fn generator_matrix(n: usize, p: usize, positive: bool) -> LaurentMat {
    use super::bimod::Bimod;
    let w = LaurentMat::from_entries(Bimod::regular(n).k0_entries());
    if positive {
        LaurentMat::from_entries(Bimod::wi(n, p).shift(-1).k0_entries()).sub(&w)
    } else {
        LaurentMat::from_entries(Bimod::wi(n, p).shift(1).k0_entries()).sub(&w)
    }
}

/// Product of generator matrices along a braid word (`p` or `-p`), leftmost factor first.
pub fn burau(n: usize, word: &[i64]) -> LaurentMat {
    word.iter().fold(LaurentMat::identity(n), |acc, &s| {
        acc.mul(&generator_matrix(n, s.unsigned_abs() as usize, s > 0))
    })
}

/// Closed form of the matrix of `sigma_p`: `q^{-2}` on the diagonal except `-1` at
/// `e_{p+1}`, with `q^{-1}` in the entries `(e_p, e_{p+1})` and `(e_{p+2}, e_{p+1})`.
/// Multiplied by `q^2` this is the reduced Burau matrix in `t = q^2`.
pub fn expected_generator(n: usize, p: usize) -> LaurentMat {
    let mut m = LaurentMat::zero(n);
    for k in 0..n {
        m.entries[k][k] = Laurent::monomial(1, -2);
    }
    let c = p - 1;
    m.entries[c][c] = Laurent::monomial(-1, 0);
    if p >= 2 {
        m.entries[c - 1][c] = Laurent::monomial(1, -1);
    }
    m.entries[c + 1][c] = Laurent::monomial(1, -1);
    m
}
