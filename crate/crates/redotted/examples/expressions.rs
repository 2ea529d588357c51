//! The expression language: parsing, evaluation and canonical printing.
//!
//! Run with `cargo run --example expressions -- "psi[2] ; psi[2] ; e_2"`.

use redotted::cli::{evaluate, parse, print, Context};
use redotted::exactalg::Q;

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let defaults = [
        "e(rbr)",
        "psi[2] ; psi[2] ; e_2",
        "e(brr)",
        "y[3]^2 e_3",
        "(x1 + x2) psi[2] e_2",
        "e(rbb)",
    ];
    let inputs: Vec<String> = if inputs.is_empty() {
        defaults.iter().map(|s| s.to_string()).collect()
    } else {
        inputs
    };
    let ctx = Context::new(2);
    for text in inputs {
        match parse(&text).and_then(|e| e.eval::<Q>(&ctx).map(|w| (e, w))) {
            Ok((e, w)) => {
                let canonical = print(&w);
                let again = evaluate::<Q>(&canonical, &ctx).expect("canonical text parses");
                println!(
                    "{text:<24} parsed {e:<24} = {canonical}   round trip: {}",
                    again == w
                );
            }
            Err(err) => println!("{text:<24} error: {err}"),
        }
    }
}
