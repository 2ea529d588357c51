//! Sparse incremental elimination: spans, kernels and solving with tracked combinations.

use std::collections::{BTreeMap, HashMap};

use crate::exactalg::Field;

/// Sparse vector: sorted `(index, value)` pairs without zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Build a sparse vector from unsorted pairs, summing duplicates.
pub fn sparse_from_pairs<F: Field>(pairs: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (i, v) in pairs {
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert_with(F::zero);
        e.add_assign(&v);
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a + c * b`.
pub fn sparse_axpy<F: Field>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = b[j].1.mul(c);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.add(&b[j].1.mul(c));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained span of vectors, remembering how each stored vector
/// was combined from the inserted ones.
#[derive(Clone)]
pub struct SpanBuilder<F: Field> {
    pivot_of: HashMap<usize, usize>,
    stored: Vec<(SparseVec<F>, SparseVec<F>)>,
    inserted: usize,
}

impl<F: Field> Default for SpanBuilder<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> SpanBuilder<F> {
    pub fn new() -> Self {
        SpanBuilder {
            pivot_of: HashMap::new(),
            stored: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.stored.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduce `v` against the stored vectors, returning the residue and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut cur: BTreeMap<usize, F> = v.iter().cloned().collect();
        let mut combo: SparseVec<F> = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = cur.range(cursor..).next().map(|(&k, c)| (k, c.clone()));
            let Some((k, c)) = next else { break };
            match self.pivot_of.get(&k) {
                Some(&s) => {
                    let (vec, cmb) = &self.stored[s];
                    let f = c.neg();
                    for (idx, val) in vec {
                        let e = cur.entry(*idx).or_insert_with(F::zero);
                        e.add_assign(&val.mul(&f));
                        if e.is_zero() {
                            cur.remove(idx);
                        }
                    }
                    combo = sparse_axpy(&combo, &f, cmb);
                }
                None => cursor = k + 1,
            }
        }
        (cur.into_iter().collect(), combo)
    }

    /// Insert a vector. Returns `Some(relation)` when it was dependent: the relation
    /// is a combination of inserted vectors (by insertion index) summing to zero.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let id = self.inserted;
        self.inserted += 1;
        let (res, combo) = self.reduce(v);
        let combo = sparse_axpy(&combo, &F::one(), &vec![(id, F::one())]);
        if res.is_empty() {
            return Some(combo);
        }
        let inv = res[0].1.inv().expect("nonzero leading entry");
        let vec: SparseVec<F> = res.iter().map(|(i, c)| (*i, c.mul(&inv))).collect();
        let combo: SparseVec<F> = combo.iter().map(|(i, c)| (*i, c.mul(&inv))).collect();
        self.pivot_of.insert(vec[0].0, self.stored.len());
        self.stored.push((vec, combo));
        None
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coefficients `c` with `sum_i c_i inserted_i = v`, if `v` is in the span.
    pub fn express(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let (res, combo) = self.reduce(v);
        if !res.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(i, c)| (i, c.neg())).collect())
    }
}

/// Kernel of the linear map whose columns are given; each kernel vector is
/// indexed by column position.
pub fn kernel_of_columns<F: Field>(columns: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut sb = SpanBuilder::new();
    let mut out = Vec::new();
    for c in columns {
        if let Some(rel) = sb.insert(c) {
            out.push(rel);
        }
    }
    out
}

/// Rank of a family of sparse vectors.
pub fn rank_of<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut sb = SpanBuilder::new();
    for v in vectors {
        sb.insert(v);
    }
    sb.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn kernel_relations_vanish() {
        let cols = vec![
            vec![(0, q(1)), (2, q(1))],
            vec![(1, q(1))],
            vec![(0, q(2)), (1, q(3)), (2, q(2))],
            vec![(0, q(1)), (1, q(1)), (2, q(1))],
        ];
        let ker = kernel_of_columns(&cols);
        assert_eq!(ker.len(), 2);
        for rel in &ker {
            let mut acc: SparseVec<Q> = Vec::new();
            for (i, c) in rel {
                acc = sparse_axpy(&acc, c, &cols[*i]);
            }
            assert!(acc.is_empty());
        }
    }

    #[test]
    fn express_reconstructs_vector() {
        let mut sb = SpanBuilder::new();
        sb.insert(&vec![(0, q(1)), (1, q(1))]);
        sb.insert(&vec![(1, q(1)), (2, q(1))]);
        let target = vec![(0, q(2)), (1, q(5)), (2, q(3))];
        let c = sb.express(&target).unwrap();
        assert_eq!(c, vec![(0, q(2)), (1, q(3))]);
        assert!(sb.express(&vec![(2, q(1))]).is_none());
    }
}
