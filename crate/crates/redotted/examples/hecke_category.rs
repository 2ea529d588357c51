//! Relations of the Hecke category realized by the bimodules W_i and their maps.
//!
//! Run with `cargo run --example hecke_category`.

use redotted::braidcx::{black_interference, relation_suite};
use redotted::exactalg::Q;

fn main() -> redotted::Result<()> {
    for c in relation_suite::<Q>(3)? {
        println!(
            "{:<32} colors {:?}: {}",
            c.name,
            c.colors,
            if c.passed { "ok" } else { "FAIL" }
        );
    }
    for c in black_interference::<Q>(3, 1)? {
        println!(
            "generator {}: first term {}, difference is the identity: {}",
            c.label, c.first_term, c.difference_is_identity
        );
    }
    Ok(())
}
