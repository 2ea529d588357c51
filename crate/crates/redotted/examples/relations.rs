//! The defining relations of W(n,1), checked on the faithful polynomial module.
//!
//! Run with `cargo run --example relations -- 4`.

use redotted::exactalg::Q;
use redotted::webster::verify_relations;

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let rep = verify_relations::<Q>(n);
    println!("relation  instances  vacuous");
    for (r, total, vacuous) in rep.summary() {
        println!("{r:>8}  {total:>9}  {vacuous:>7}");
    }
    println!("all pass: {}", rep.passed());
}
