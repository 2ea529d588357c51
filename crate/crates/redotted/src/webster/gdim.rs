//! Graded dimensions of the blocks `e_j W(n,1) e_i`.

use super::elem::{block_basis_in_degree, block_len, valid_block};
use crate::exactalg::Q;
use crate::gradedla::{Laurent, RationalGdim};

/// Closed form `q^{|i-j|} (1 + q^2 + ... + q^{2(min(i,j)-2)}) / (1-q^2)^n`.
pub fn graded_dim_block(n: usize, i: usize, j: usize) -> RationalGdim {
    if !valid_block(n, i, j) {
        return RationalGdim::new(Laurent::zero(), n as u32);
    }
    let shift = (i as i64 - j as i64).abs();
    let num = Laurent::from_terms((0..block_len(i, j) as i64).map(|c| (shift + 2 * c, 1)));
    RationalGdim::new(num, n as u32)
}

/// Truncated series obtained by counting basis elements degree by degree.
pub fn enumerated_block_series(n: usize, i: usize, j: usize, cap: i64) -> Laurent {
    let mut out = Laurent::zero();
    for d in 0..=cap {
        let k = block_basis_in_degree::<Q>(n, i, j, d).len();
        out.add_term(d, k as i64);
    }
    out
}

/// Graded dimension of the whole algebra.
pub fn graded_dim_total(n: usize) -> RationalGdim {
    let mut acc = RationalGdim::new(Laurent::zero(), n as u32);
    for i in 2..=n + 1 {
        for j in 2..=n + 1 {
            acc = acc.add(&graded_dim_block(n, i, j));
        }
    }
    acc
}
