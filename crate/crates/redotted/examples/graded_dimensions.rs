//! Graded dimensions of the blocks e(i) W(n,1) e(j), closed form against enumeration.
//!
//! Run with `cargo run --example graded_dimensions`.

use redotted::webster::{enumerated_block_series, graded_dim_block, graded_dim_total};

fn main() {
    for n in 2..=3 {
        println!("n = {n}");
        for i in 2..=n + 1 {
            for j in 2..=n + 1 {
                let closed = graded_dim_block(n, i, j);
                let series = enumerated_block_series(n, i, j, 8);
                assert_eq!(closed.series(8), series);
                println!("  ({i},{j})  {:<24} {}", closed.to_text(), series.to_text());
            }
        }
        println!("  total  {}", graded_dim_total(n).to_text());
    }
}
