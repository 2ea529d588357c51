//! The action of braid generators on K_0: the Burau representation.
//!
//! Run with `cargo run --example burau`.

use redotted::braidcx::{burau, generator_matrix};

fn main() {
    let n = 3;
    for p in 1..n {
        println!("sigma_{p}:");
        print!("{}", generator_matrix(n, p, true));
    }
    let lhs = burau(n, &[1, 2, 1]);
    println!("sigma1 sigma2 sigma1:\n{lhs}");
    println!("braid relation holds: {}", lhs == burau(n, &[2, 1, 2]));
    println!("det = {}", lhs.det().to_text());
}
