//! The quiver algebra `A_n^!`: paths in the doubled `A_n` quiver modulo the
//! relations `(i|i-1|i) = (i|i+1|i)` for `i = 1, ..., n-1` with `(1|0|1) = 0`.
//!
//! A path `(i_r | ... | i_1)` starts at `i_1` and ends at `i_r`; it is stored as the
//! walk `[i_1, ..., i_r]` in traversal order. The product `a * b` traverses `b`
//! first, so it is nonzero only when `b` ends where `a` starts.

use std::collections::HashMap;

use crate::exactalg::Field;
use crate::gradedla::{sparse_axpy, sparse_from_pairs, Laurent, SpanBuilder, SparseVec};

/// A basis vector of `A_n^!`: the residue class of a representative path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBasis {
    pub src: usize,
    pub tgt: usize,
    pub deg: usize,
    pub walk: Vec<usize>,
}

impl PathBasis {
    /// Text `(i_r|...|i_1)`.
    pub fn label(&self) -> String {
        walk_label(&self.walk)
    }
}

/// Text `(i_r|...|i_1)` of a walk `[i_1, ..., i_r]`.
pub fn walk_label(walk: &[usize]) -> String {
    let parts: Vec<String> = walk.iter().rev().map(|v| v.to_string()).collect();
    format!("({})", parts.join("|"))
}

/// Reduction data for one path length.
#[derive(Clone)]
struct DegreeData<F: Field> {
    walk_index: HashMap<Vec<usize>, usize>,
    ideal: SpanBuilder<F>,
    to_basis: HashMap<usize, usize>,
}

/// `A_n^!` with a computed basis and structure constants.
#[derive(Clone)]
pub struct PathAlg<F: Field> {
    n: usize,
    basis: Vec<PathBasis>,
    by_degree: Vec<Vec<usize>>,
    degrees: Vec<DegreeData<F>>,
    table: Vec<Vec<SparseVec<F>>>,
}

/// All walks of length `d` in the doubled `A_n` quiver.
pub fn walks(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<Vec<usize>> = (1..=n).map(|v| vec![v]).collect();
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &cur {
            let v = *w.last().expect("nonempty walk");
            for u in [v.wrapping_sub(1), v + 1] {
                if (1..=n).contains(&u) {
                    let mut w2 = w.clone();
                    w2.push(u);
                    next.push(w2);
                }
            }
        }
        cur = next;
    }
    cur
}

/// Build `A_n^!` degree by degree.
pub fn build_basis<F: Field>(n: usize) -> PathAlg<F> {
    PathAlg::build(n)
}

impl<F: Field> PathAlg<F> {
    pub fn build(n: usize) -> Self {
        assert!(n >= 1, "A_n^! needs n >= 1");
        let mut basis = Vec::new();
        let mut by_degree = Vec::new();
        let mut degrees = Vec::new();
        let mut d = 0;
        loop {
            let ws = walks(n, d);
            let walk_index: HashMap<Vec<usize>, usize> = ws
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, w)| (w, k))
                .collect();
            let mut ideal = SpanBuilder::new();
            for w in &ws {
                for k in 0..d.saturating_sub(1) {
                    let i = w[k];
                    if w[k + 2] != i || i >= n {
                        continue;
                    }
                    let mut lo = w.clone();
                    lo[k + 1] = i.wrapping_sub(1);
                    let mut hi = w.clone();
                    hi[k + 1] = i + 1;
                    let mut pairs = vec![(walk_index[&hi], F::one().neg())];
                    if i >= 2 {
                        pairs.push((walk_index[&lo], F::one()));
                    }
                    ideal.insert(&sparse_from_pairs(pairs));
                }
            }
            let mut to_basis = HashMap::new();
            let mut here = Vec::new();
            for (k, w) in ws.iter().enumerate() {
                let e = vec![(k, F::one())];
                if ideal.reduce(&e).0 == e {
                    to_basis.insert(k, basis.len());
                    here.push(basis.len());
                    basis.push(PathBasis {
                        src: w[0],
                        tgt: *w.last().expect("nonempty"),
                        deg: d,
                        walk: w.clone(),
                    });
                }
            }
            let empty = here.is_empty();
            by_degree.push(here);
            degrees.push(DegreeData {
                walk_index,
                ideal,
                to_basis,
            });
            if empty {
                break;
            }
            d += 1;
        }
        let mut alg = PathAlg {
            n,
            basis,
            by_degree,
            degrees,
            table: Vec::new(),
        };
        let m = alg.basis.len();
        let mut table = vec![vec![Vec::new(); m]; m];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                let (pa, pb) = (&alg.basis[a], &alg.basis[b]);
                if pb.tgt != pa.src {
                    continue;
                }
                let mut w = pb.walk.clone();
                w.extend_from_slice(&pa.walk[1..]);
                *entry = alg.walk_vector(&w);
            }
        }
        alg.table = table;
        alg
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[PathBasis] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Largest degree with a nonzero component.
    pub fn top_degree(&self) -> usize {
        self.by_degree.len().saturating_sub(2)
    }

    /// Global indices of the basis vectors of path length `d`.
    pub fn degree_basis(&self, d: usize) -> &[usize] {
        self.by_degree.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn dim(&self, d: usize) -> usize {
        self.degree_basis(d).len()
    }

    /// `sum_d dim (A_n^!)^d q^d`.
    pub fn graded_dimension(&self) -> Laurent {
        Laurent::from_terms((0..self.by_degree.len()).map(|d| (d as i64, self.dim(d) as i64)))
    }

    /// Normal form of a walk in the computed basis.
    pub fn walk_vector(&self, walk: &[usize]) -> SparseVec<F> {
        let d = walk.len() - 1;
        let Some(data) = self.degrees.get(d) else {
            return Vec::new();
        };
        let Some(&k) = data.walk_index.get(walk) else {
            return Vec::new();
        };
        let (res, _) = data.ideal.reduce(&vec![(k, F::one())]);
        sparse_from_pairs(res.into_iter().map(|(w, c)| (data.to_basis[&w], c)))
    }

    /// Index of the vertex idempotent `(i)`.
    pub fn vertex(&self, i: usize) -> usize {
        self.by_degree[0]
            .iter()
            .copied()
            .find(|&b| self.basis[b].src == i)
            .expect("vertex in range")
    }

    /// Index of the arrow `(to|from)`, if it exists.
    pub fn arrow(&self, to: usize, from: usize) -> Option<usize> {
        self.degree_basis(1)
            .iter()
            .copied()
            .find(|&b| self.basis[b].walk == [from, to])
    }

    /// Structure constants of `basis[a] * basis[b]`.
    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec<F> {
        &self.table[a][b]
    }

    pub fn mul(&self, u: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = Vec::new();
        for (a, ca) in u {
            for (b, cb) in v {
                let t = &self.table[*a][*b];
                if !t.is_empty() {
                    out = sparse_axpy(&out, &ca.mul(cb), t);
                }
            }
        }
        out
    }

    /// The central element `c = (2|1|2) + ... + (n|n-1|n)`.
    pub fn c(&self) -> SparseVec<F> {
        let mut out = Vec::new();
        for i in 2..=self.n {
            out = sparse_axpy(&out, &F::one(), &self.walk_vector(&[i, i - 1, i]));
        }
        out
    }

    /// Text of an element in the basis labels.
    pub fn to_text(&self, v: &SparseVec<F>) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|(b, c)| {
                let l = self.basis[*b].label();
                if c.is_one() {
                    l
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `sum_{a,b=1}^n min(a, b)`, the dimension of `A_n^!`.
pub fn expected_dimension(n: usize) -> usize {
    (1..=n).flat_map(|a| (1..=n).map(move |b| a.min(b))).sum()
}
