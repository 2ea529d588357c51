//! Exact polynomial arithmetic over Q and F_p, and the quotient modules V_{n,m}.
//!
//! Run with `cargo run --example polynomials`.

use redotted::exactalg::{elementary_symmetric, parse_poly, parse_ypoly, Field, Fp, QuotElem, Q};

fn main() -> redotted::Result<()> {
    let f = parse_poly::<Q>("3*x1^2*x2 - x3 + 1/2", 3)?;
    let g = parse_poly::<Q>("x1 - x2", 3)?;
    println!("f       = {f}");
    println!("f * g   = {}", &f * &g);
    println!("(fg)/g  = {}", (&f * &g).div_exact(&g).expect("exact"));
    println!("E_2     = {}", elementary_symmetric::<Q>(3, 2, &[1, 2, 3])?);

    let h = parse_poly::<Fp<7>>("x1 + 6*x2", 2)?;
    println!("over {}: (x1 - x2)^7 = {}", Fp::<7>::name(), h.pow(7));

    let y = parse_ypoly::<Q>("y^3", 2)?;
    let v = QuotElem::new(&y, 3)?;
    println!("y^3 in V_(2,3) = {}", v.rep());
    Ok(())
}
