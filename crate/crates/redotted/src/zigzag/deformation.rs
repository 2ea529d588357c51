//! The quotient `W(n,1)/m` by the red dots and its identification with `A_n^!`.
//!
//! The correspondence sends the vertex `(i)` to `e_{i+1}`, the arrow `(i+1|i)` to the
//! crossing `e_{i+2} psi e_{i+1}`, the arrow `(i|i+1)` to `e_{i+1} psi e_{i+2}`, and a
//! path to the product of its arrows.

use std::collections::BTreeMap;

use super::pathalg::{PathAlg, PathBasis};
use crate::exactalg::Field;
use crate::gradedla::{rank_of, Laurent, SparseVec};
use crate::webster::{block_len, down, up, ydot, WElem};

/// Basis `y^c psi_w e_i` of `W(n,1)/m`, keyed by `(i, j, c)` with its degree.
pub fn quotient_basis(n: usize) -> Vec<((usize, usize, usize), i64)> {
    let mut out = Vec::new();
    for i in 2..=n + 1 {
        for j in 2..=n + 1 {
            for c in 0..block_len(i, j) {
                out.push(((i, j, c), 2 * c as i64 + (i as i64 - j as i64).abs()));
            }
        }
    }
    out
}

/// Graded dimension of `W(n,1)/m`.
pub fn quotient_graded_dimension(n: usize) -> Laurent {
    let mut l = Laurent::zero();
    for (_, d) in quotient_basis(n) {
        l.add_term(d, 1);
    }
    l
}

/// Coordinates of an element of `W(n,1)/m` in [`quotient_basis`].
pub fn quotient_coords<F: Field>(n: usize, w: &WElem<F>) -> SparseVec<F> {
    let index: BTreeMap<(usize, usize, usize), usize> = quotient_basis(n)
        .into_iter()
        .enumerate()
        .map(|(k, (key, _))| (key, k))
        .collect();
    let mut out = Vec::new();
    for ((i, j, c, m), a) in w.eval_x_zero().coords() {
        if m.is_one() {
            out.push((index[&(i, j, c)], a));
        }
    }
    out.sort_by_key(|(k, _)| *k);
    out
}

/// Image of a path under the correspondence, reduced modulo `m`.
pub fn path_image<F: Field>(n: usize, walk: &[usize]) -> WElem<F> {
    let mut acc = WElem::idem(n, walk[0] + 1);
    for step in walk.windows(2) {
        let g = if step[1] == step[0] + 1 {
            up(n, step[0] + 1)
        } else {
            down(n, step[0] + 1)
        };
        acc = g.mul(&acc);
    }
    acc.eval_x_zero()
}

fn image_of<F: Field>(n: usize, alg: &PathAlg<F>, v: &SparseVec<F>) -> WElem<F> {
    v.iter().fold(WElem::zero(n), |acc, (b, c)| {
        acc.add(&path_image::<F>(n, &alg.basis()[*b].walk).scale(c))
    })
}

/// Outcome of the deformation comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub n: usize,
    pub quotient_gdim: Laurent,
    pub path_gdim: Laurent,
    pub relators_vanish: bool,
    pub images_independent: bool,
    pub dots_match: bool,
    pub structure_constants_checked: usize,
    pub mismatches: Vec<String>,
}

impl DeformationReport {
    pub fn passed(&self) -> bool {
        self.quotient_gdim == self.path_gdim
            && self.relators_vanish
            && self.images_independent
            && self.dots_match
            && self.mismatches.is_empty()
    }
}

/// Compare `W(n,1)/m` with `A_n^!` through the correspondence.
pub fn deformation_check<F: Field>(n: usize) -> DeformationReport {
    let alg = PathAlg::<F>::build(n);
    let quotient_gdim = quotient_graded_dimension(n);
    let path_gdim = alg.graded_dimension();
    let relators_vanish = (1..n).all(|i| {
        let lo = if i >= 2 {
            path_image::<F>(n, &[i, i - 1, i])
        } else {
            WElem::zero(n)
        };
        lo.sub(&path_image(n, &[i, i + 1, i])).is_zero()
    });
    let images: Vec<SparseVec<F>> = alg
        .basis()
        .iter()
        .map(|b: &PathBasis| quotient_coords(n, &path_image::<F>(n, &b.walk)))
        .collect();
    let images_independent =
        rank_of(&images) == images.len() && images.len() == quotient_basis(n).len();
    let dots_match = (1..=n).all(|i| {
        let c_i = alg.mul(&alg.c(), &vec![(alg.vertex(i), F::one())]);
        let y = ydot::<F>(n, i + 1).eval_x_zero();
        image_of(n, &alg, &c_i) == y
    });
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let elems: Vec<WElem<F>> = alg
        .basis()
        .iter()
        .map(|b| path_image::<F>(n, &b.walk))
        .collect();
    for a in 0..alg.len() {
        for b in 0..alg.len() {
            let lhs = elems[a].mul(&elems[b]).eval_x_zero();
            let rhs = image_of(n, &alg, alg.mul_basis(a, b));
            if lhs != rhs {
                mismatches.push(format!(
                    "{} * {}: W/m gives {}, A gives {}",
                    alg.basis()[a].label(),
                    alg.basis()[b].label(),
                    lhs,
                    rhs
                ));
            }
            checked += 1;
        }
    }
    DeformationReport {
        n,
        quotient_gdim,
        path_gdim,
        relators_vanish,
        images_independent,
        dots_match,
        structure_constants_checked: checked,
        mismatches,
    }
}
