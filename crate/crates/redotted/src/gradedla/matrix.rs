//! Dense matrices over an exact field with row reduction.

use std::fmt;

use crate::exactalg::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<F: Field> {
    /// A particular solution.
    Solved(Vec<F>),
    /// No solution; the witness is a left-kernel vector `w` with `w A = 0` and `w b != 0`.
    Inconsistent(Vec<F>),
}

/// Reduced row echelon form with the transformation that produced it.
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
    /// `transform * original = reduced`.
    pub transform: Matrix<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c).add(&a.mul(b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Stack columns side by side.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss-Jordan elimination, tracking the row operations.
    pub fn rref(&self) -> Rref<F> {
        let mut a = self.clone();
        let mut t = Self::identity(self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            t.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            a.scale_row(r, &inv);
            t.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r {
                    let f = a.get(i, c).clone();
                    if !f.is_zero() {
                        a.axpy_row(i, r, &f.neg());
                        t.axpy_row(i, r, &f.neg());
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: a,
            pivots,
            transform: t,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: &F) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(f);
            self.set(r, c, v);
        }
    }

    /// Row `dst += f * row src`.
    fn axpy_row(&mut self, dst: usize, src: usize, f: &F) {
        for c in 0..self.cols {
            let s = self.get(src, c);
            if !s.is_zero() {
                let v = self.get(dst, c).add(&s.mul(f));
                self.set(dst, c, v);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : A x = 0}` as columns.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let rr = self.rref();
        let pivot_set: std::collections::HashSet<usize> = rr.pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (i, &p) in rr.pivots.iter().enumerate() {
                v[p] = rr.reduced.get(i, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space, chosen among the original columns.
    pub fn image_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    pub fn solve(&self, b: &[F]) -> Solution<F> {
        assert_eq!(b.len(), self.rows);
        let rr = self.rref();
        let tb = rr.transform.apply(b);
        let rank = rr.pivots.len();
        if let Some(i) = (rank..self.rows).find(|&i| !tb[i].is_zero()) {
            return Solution::Inconsistent(rr.transform.row(i).to_vec());
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in rr.pivots.iter().enumerate() {
            x[p] = tb[i].clone();
        }
        Solution::Solved(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let rr = self.rref();
        (rr.pivots.len() == self.rows).then_some(rr.transform)
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    #[test]
    fn rank_nullity() {
        let m = Matrix::<Q>::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn solve_identity_returns_input() {
        let id = Matrix::<Q>::identity(3);
        let v: Vec<Q> = [1, -2, 5].iter().map(|&x| Q::from_i64(x)).collect();
        assert_eq!(id.solve(&v), Solution::Solved(v));
    }

    #[test]
    fn inconsistent_system_has_witness() {
        let m = Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]);
        let b = vec![Q::from_i64(1), Q::from_i64(2)];
        match m.solve(&b) {
            Solution::Inconsistent(w) => {
                let wa = m.transpose().apply(&w);
                assert!(wa.iter().all(|v| v.is_zero()));
                let wb = w
                    .iter()
                    .zip(&b)
                    .fold(Q::zero(), |acc, (a, c)| acc.add(&a.mul(c)));
                assert!(!wb.is_zero());
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::<Q>::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]])
            .inverse()
            .is_none());
    }
}
