//! Rouquier complexes of braid words: minimized profiles and an explicit homotopy equivalence.
//!
//! Run with `cargo run --example rouquier_complexes`.

use redotted::braidcx::Complex;
use redotted::exactalg::Q;

fn main() -> redotted::Result<()> {
    let a = Complex::<Q>::braid_word(3, &[1, 2, 1])?;
    let b = Complex::<Q>::braid_word(3, &[2, 1, 2])?;
    for k in a.degrees() {
        println!("sigma1 sigma2 sigma1 in degree {k}: {}", a.term(k).name());
    }
    println!("minimized profile to degree 6:");
    for line in a.profile(6).lines() {
        println!("  {line}");
    }
    println!("profiles agree: {}", a.profile(6) == b.profile(6));
    match Complex::find_equivalence(&a, &b, 0, 4) {
        Some(e) => println!(
            "chain map found (space of dimension {}), cone is contractible",
            e.chain_map_space
        ),
        None => println!("no equivalence found"),
    }

    let inv = Complex::<Q>::braid_word(2, &[1, -1])?;
    let e = Complex::find_equivalence(&Complex::unit(2), &inv, 0, 4).expect("sigma sigma^-1 = W");
    println!(
        "cone(W -> sigma1 sigma1^-1) vanishes to degree 10: {}",
        e.cone.profile(10).is_zero()
    );
    Ok(())
}
