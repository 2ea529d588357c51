//! The center of `W(n,1)`: the element `z = sum_i y e_i`, its minimal relation and
//! a degreewise computation of the full center.

use std::collections::HashMap;

use super::elem::{basis_in_degree, WElem};
use super::gens::{down, up, xdot, ydot};
use crate::exactalg::{Field, Mono, Poly, YPoly};
use crate::gradedla::{kernel_of_columns, Laurent, RationalGdim, SparseVec};

/// `z^k = sum_{i=2}^{n+1} y^k e_i`, each block reduced.
pub fn center_element<F: Field>(n: usize, k: usize) -> WElem<F> {
    let mut out = WElem::zero(n);
    for i in 2..=n + 1 {
        let rep = YPoly::monomial(Poly::one(n), k).reduce_mod(i);
        let block = WElem::from_block(n, i, i, rep.into_coeffs()).expect("diagonal block");
        out = out.add(&block);
    }
    out
}

/// Algebra generators used for commutation tests.
pub fn algebra_generators<F: Field>(n: usize) -> Vec<(String, WElem<F>)> {
    let mut out = Vec::new();
    for b in 2..=n + 1 {
        out.push((format!("e_{b}"), WElem::idem(n, b)));
        out.push((format!("y e_{b}"), ydot(n, b)));
        if b <= n {
            out.push((format!("up_{b}"), up(n, b)));
        }
        if b >= 3 {
            out.push((format!("down_{b}"), down(n, b)));
        }
    }
    for l in 1..=n {
        out.push((format!("x_{l}"), xdot(n, l)));
    }
    out
}

/// Whether `a` commutes with every algebra generator.
pub fn is_central<F: Field>(a: &WElem<F>) -> bool {
    algebra_generators::<F>(a.n())
        .iter()
        .all(|(_, g)| a.mul(g) == g.mul(a))
}

/// Expected graded dimension of `R[z]/prod_l (z - x_l)`.
pub fn expected_center_gdim(n: usize) -> RationalGdim {
    RationalGdim::new(
        Laurent::from_terms((0..n as i64).map(|k| (2 * k, 1))),
        n as u32,
    )
}

/// Dimension of the center in graded degree `d`, as the common kernel of commutators.
pub fn center_dimension<F: Field>(n: usize, d: i64) -> usize {
    let gens: Vec<WElem<F>> = algebra_generators::<F>(n)
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    let candidates: Vec<WElem<F>> = basis_in_degree::<F>(n, d)
        .into_iter()
        .filter(|b| b.blocks().all(|((i, j), _)| i == j))
        .collect();
    let mut index: HashMap<(usize, usize, usize, usize, Mono), usize> = HashMap::new();
    let mut columns: Vec<SparseVec<F>> = Vec::new();
    for c in &candidates {
        let mut col = Vec::new();
        for (gi, g) in gens.iter().enumerate() {
            let comm = c.mul(g).sub(&g.mul(c));
            for ((i, j, k, m), a) in comm.coords() {
                let len = index.len();
                let id = *index.entry((gi, i, j, k, m)).or_insert(len);
                col.push((id, a));
            }
        }
        columns.push(crate::gradedla::sparse_from_pairs(col));
    }
    kernel_of_columns(&columns).len()
}

/// Report of the center checks up to a degree cap.
#[derive(Clone, Debug)]
pub struct CenterReport {
    pub n: usize,
    pub cap: i64,
    pub z_central: bool,
    pub minimal_relation_zero: bool,
    /// `(degree, computed dimension, expected dimension)`.
    pub dims: Vec<(i64, usize, i64)>,
}

impl CenterReport {
    pub fn passed(&self) -> bool {
        self.z_central
            && self.minimal_relation_zero
            && self.dims.iter().all(|&(_, a, b)| a as i64 == b)
    }
}

/// Check centrality of `z`, the relation `prod_l (z - x_l) = 0`, and the
/// degreewise dimension of the center up to `cap`.
pub fn center_basis_check<F: Field>(n: usize, cap: i64) -> CenterReport {
    let z = center_element::<F>(n, 1);
    let z_central = is_central(&z);
    let mut prod = WElem::unit(n);
    for l in 1..=n {
        prod = prod.mul(&z.sub(&xdot(n, l)));
    }
    let expected = expected_center_gdim(n).series(cap);
    let dims = (0..=cap)
        .map(|d| (d, center_dimension::<F>(n, d), expected.coeff(d)))
        .collect();
    CenterReport {
        n,
        cap,
        z_central,
        minimal_relation_zero: prod.is_zero(),
        dims,
    }
}
