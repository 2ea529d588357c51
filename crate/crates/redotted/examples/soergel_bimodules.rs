//! Singular Soergel bimodules P_i: the isomorphism Phi and the splitting of B (x) P.
//!
//! Run with `cargo run --example soergel_bimodules`.

use redotted::exactalg::Q;
use redotted::soergel::{n2_table, phi_check, phi_table, split_check};

fn main() -> redotted::Result<()> {
    println!("Hom(P_i, P_j) for n = 2:");
    for (a, b, g, ok) in n2_table::<Q>(12) {
        println!("  Hom({a}, {b}) = {g:<20} matches W blocks: {ok}");
    }
    println!("Phi on generators for n = 3:");
    for e in phi_table::<Q>(3) {
        println!("  {:<16} -> {}", e.name, e.image);
    }
    println!("Phi check: {}", phi_check::<Q>(3, 8).passed());
    let s = split_check::<Q>(3, 1, 8)?;
    println!("B_2 (x) P_1 = P_0 + P_2: {}", s.passed());
    Ok(())
}
