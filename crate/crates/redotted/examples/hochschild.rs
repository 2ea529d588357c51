//! Hochschild cohomology of the zigzag algebra A_n^! and the deformation W(n,1) of it.
//!
//! Run with `cargo run --example hochschild -- 4`.

use redotted::exactalg::Q;
use redotted::zigzag::{deformation_check, hochschild, mu_cocycles, HhTable};

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let t = hochschild::<Q>(n, 2);
    println!("HH^(i,j) of A_{n}^!:");
    for (&(k, tt), d) in &t.entries {
        println!("  HH^({k},{}) = {d}", HhTable::path_length_label(k, tt));
    }
    let mu = mu_cocycles::<Q>(n);
    println!(
        "mu_i independent classes: {} (HH^2 total {})",
        mu.independent_rank,
        t.total(2)
    );
    let def = deformation_check::<Q>(n);
    println!(
        "W/m: {}  A^!: {}  agree: {}",
        def.quotient_gdim,
        def.path_gdim,
        def.passed()
    );
}
