//! The center of W(n,1): the element z, its minimal relation and the degreewise dimension.
//!
//! Run with `cargo run --example center`.

use redotted::exactalg::Q;
use redotted::webster::{center_basis_check, center_element};

fn main() {
    for n in 2..=3 {
        println!("n = {n}: z = {}", center_element::<Q>(n, 1));
        let rep = center_basis_check::<Q>(n, 10);
        println!(
            "  z central: {}, prod (z - x_l) = 0: {}",
            rep.z_central, rep.minimal_relation_zero
        );
        for (d, computed, expected) in rep.dims.iter().filter(|r| r.0 % 2 == 0) {
            println!("  degree {d:>2}: {computed} (expected {expected})");
        }
    }
}
