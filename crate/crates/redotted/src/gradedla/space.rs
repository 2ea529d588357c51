//! Truncated graded vector spaces and homogeneous maps between them.

use std::collections::BTreeMap;

use super::laurent::Laurent;
use super::matrix::{Matrix, Solution};
use crate::exactalg::Field;
use crate::{Error, Result};

/// A graded vector space known in degrees `[-cap, cap]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub cap: i64,
    dims: BTreeMap<i64, usize>,
    labels: BTreeMap<i64, Vec<String>>,
}

impl GradedSpace {
    pub fn new(cap: i64) -> Self {
        GradedSpace {
            cap,
            dims: BTreeMap::new(),
            labels: BTreeMap::new(),
        }
    }

    /// Space with labelled basis vectors in the given degrees.
    pub fn from_labels(
        cap: i64,
        labelled: impl IntoIterator<Item = (i64, String)>,
    ) -> Result<Self> {
        let mut s = GradedSpace::new(cap);
        for (d, l) in labelled {
            if d.abs() > cap {
                return Err(Error::Invalid(format!(
                    "degree {d} beyond cap {cap} (truncated)"
                )));
            }
            s.labels.entry(d).or_default().push(l);
            *s.dims.entry(d).or_insert(0) += 1;
        }
        Ok(s)
    }

    pub fn from_dims(cap: i64, dims: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut s = GradedSpace::new(cap);
        for (d, k) in dims {
            if k > 0 && d.abs() <= cap {
                s.dims.insert(d, k);
            }
        }
        s
    }

    pub fn dim(&self, d: i64) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn labels(&self, d: i64) -> &[String] {
        self.labels.get(&d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn degrees(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&d, &k)| (d, k))
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// `sum_t dim_t q^t`.
    pub fn graded_dimension(&self) -> Laurent {
        Laurent::from_terms(self.dims.iter().map(|(&d, &k)| (d, k as i64)))
    }
}

/// Truncated graded dimension `sum_t dim_t q^t` of a space.
pub fn graded_dimension(space: &GradedSpace) -> Laurent {
    space.graded_dimension()
}

/// Homogeneous map of degree `degree`: the block at `t` maps degree `t` to `t + degree`.
#[derive(Clone, Debug)]
pub struct GradedMap<F: Field> {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: i64,
    blocks: BTreeMap<i64, Matrix<F>>,
}

/// Dimensions of kernel, image and cokernel, plus whether truncation hid information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub kernel: GradedSpace,
    pub image: GradedSpace,
    pub cokernel: GradedSpace,
    pub truncated: bool,
}

impl<F: Field> GradedMap<F> {
    pub fn new(source: GradedSpace, target: GradedSpace, degree: i64) -> Self {
        GradedMap {
            source,
            target,
            degree,
            blocks: BTreeMap::new(),
        }
    }

    pub fn zero(source: GradedSpace, target: GradedSpace, degree: i64) -> Self {
        Self::new(source, target, degree)
    }

    pub fn identity(space: GradedSpace) -> Self {
        let mut m = Self::new(space.clone(), space.clone(), 0);
        for (d, k) in space.degrees() {
            m.blocks.insert(d, Matrix::identity(k));
        }
        m
    }

    /// Set the block from degree `t`; its shape must be `target(t+deg) x source(t)`.
    pub fn set_block(&mut self, t: i64, m: Matrix<F>) -> Result<()> {
        let (r, c) = (self.target.dim(t + self.degree), self.source.dim(t));
        if m.rows() != r || m.cols() != c {
            return Err(Error::Invalid(format!(
                "block at degree {t} has shape {}x{}, expected {r}x{c}",
                m.rows(),
                m.cols()
            )));
        }
        self.blocks.insert(t, m);
        Ok(())
    }

    pub fn block(&self, t: i64) -> Matrix<F> {
        self.blocks
            .get(&t)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.dim(t + self.degree), self.source.dim(t)))
    }

    pub fn compose(&self, after: &GradedMap<F>) -> Result<GradedMap<F>> {
        if self.target != after.source {
            return Err(Error::Invalid(
                "composition of maps with mismatched spaces".into(),
            ));
        }
        let mut out = GradedMap::new(
            self.source.clone(),
            after.target.clone(),
            self.degree + after.degree,
        );
        for (t, _) in self.source.degrees() {
            let m = after.block(t + self.degree).mul(&self.block(t));
            out.blocks.insert(t, m);
        }
        Ok(out)
    }

    /// Kernel, image and cokernel dimensions per degree.
    pub fn homology(&self) -> Homology {
        let cap = self.source.cap.min(self.target.cap);
        let mut ker = Vec::new();
        let mut img = Vec::new();
        let mut cok = Vec::new();
        let mut truncated = false;
        for (t, k) in self.source.degrees() {
            let r = self.block(t).rank();
            ker.push((t, k - r));
            img.push((t + self.degree, r));
            if (t + self.degree).abs() > self.target.cap {
                truncated = true;
            }
        }
        for (t, k) in self.target.degrees() {
            let r = img.iter().find(|(d, _)| *d == t).map_or(0, |x| x.1);
            cok.push((t, k - r));
            if (t - self.degree).abs() > self.source.cap {
                truncated = true;
            }
        }
        Homology {
            kernel: GradedSpace::from_dims(cap, ker),
            image: GradedSpace::from_dims(cap, img),
            cokernel: GradedSpace::from_dims(cap, cok),
            truncated,
        }
    }

    /// Solve `f(x) = v` for a vector `v` in target degree `t`.
    pub fn solve(&self, t: i64, v: &[F]) -> Solution<F> {
        self.block(t - self.degree).solve(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::monomials_of_total;
    use crate::exactalg::{Poly, Q};

    #[test]
    fn kernel_of_zero_and_cokernel_of_identity() {
        let s = GradedSpace::from_dims(4, [(0, 2), (2, 3)]);
        let z = GradedMap::<Q>::zero(s.clone(), s.clone(), 0);
        assert_eq!(z.homology().kernel, s);
        let id = GradedMap::<Q>::identity(s.clone());
        assert!(id.homology().cokernel.is_zero());
    }

    #[test]
    fn multiplication_rank_in_degree_two() {
        // Multiplication from the quadratic part of R_2 tensor R_2 onto the quadratic monomials.
        let n = 2;
        let mut src = Vec::new();
        for a in 0..=2 {
            for ma in monomials_of_total(n, a) {
                for mb in monomials_of_total(n, 2 - a) {
                    src.push((ma.clone(), mb));
                }
            }
        }
        let tgt = monomials_of_total(n, 2);
        let mut rows = vec![vec![Q::zero(); src.len()]; tgt.len()];
        for (j, (ma, mb)) in src.iter().enumerate() {
            let p = Poly::<Q>::term(ma.mul(mb), Q::one());
            for (i, m) in tgt.iter().enumerate() {
                rows[i][j] = p.coeff(m);
            }
        }
        assert_eq!(Matrix::from_rows(rows).rank(), 3);
    }

    #[test]
    fn graded_dimension_of_polynomial_ring() {
        let s = GradedSpace::from_dims(
            4,
            (0..=2).map(|d| (2 * d, monomials_of_total(2, d as usize).len())),
        );
        assert_eq!(graded_dimension(&s).to_text(), "1+2q^2+3q^4");
        assert!(graded_dimension(&GradedSpace::new(4)).is_zero());
    }
}
