//! The thick-strand subalgebra W^p(n,1) and its embedding rho_p into W(n,1).
//!
//! Run with `cargo run --example thick_strands`.

use redotted::exactalg::Q;
use redotted::websterp::{block_gdim_text_p, rho_checks, rho_table};

fn main() {
    let (n, p) = (3, 1);
    println!("generators of W^{p}({n},1) and their images:");
    for e in rho_table::<Q>(n, p) {
        println!("  {:<12} -> {}", e.name, e.image);
    }
    for i in 2..=n {
        for j in 2..=n {
            println!("  block ({i},{j}): {}", block_gdim_text_p(n, p, i, j));
        }
    }
    let rep = rho_checks::<Q>(n, p, 8);
    println!(
        "homomorphism on {} pairs, injective to degree 8: {}",
        rep.pairs_checked,
        rep.passed()
    );
}
