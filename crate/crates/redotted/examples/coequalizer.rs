//! Tensor products over subalgebras computed degreewise as coequalizers.
//!
//! Run with `cargo run --example coequalizer`.

use redotted::braidcx::{tensor_block, thick_coequalizer_block, Bimod};
use redotted::exactalg::Q;

fn main() {
    let (n, p, cap) = (3, 1, 6);
    let wp = Bimod::wi(n, p);
    for a in 2..=n + 1 {
        for b in 2..=n + 1 {
            let coeq = thick_coequalizer_block::<Q>(n, p, a, b, cap)
                .shift(-1)
                .truncate(cap - 1);
            let free = wp.block_series(a, b, cap - 1);
            println!(
                "({a},{b}) W (x)_W^{p} W <-1>: {coeq}   left-free model agrees: {}",
                coeq == free
            );
        }
    }
    let w12 = Bimod::word(n, &[1, 2]);
    let t = tensor_block::<Q>(&Bimod::wi(n, 1), &Bimod::wi(n, 2), 3, 3, 4);
    println!(
        "(3,3) W_1 (x)_W W_2: {t}   agrees: {}",
        t == w12.block_series(3, 3, 4)
    );
}
