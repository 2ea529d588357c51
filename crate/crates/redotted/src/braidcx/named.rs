//! The named bimodule maps: `epsilon_p`, `iota_p`, the trivalent maps, `X_ij`
//! and the six-valent maps. Each is obtained by solving for the space of bimodule
//! maps of the right degree and pinning the unique map with the prescribed values
//! on generators.

use super::bimod::Bimod;
use super::maps::{hom_space, pin, BimodMap, ModElem};
use crate::exactalg::{Field, Poly};
use crate::webster::WElem;
use crate::{Error, Result};

/// The idempotents `b != p+1` carrying the generators `f_b` of `W_p`.
pub fn thick_free(n: usize, p: usize) -> Vec<usize> {
    (2..=n + 1).filter(|&b| b != p + 1).collect()
}

fn idem<F: Field>(n: usize, b: usize) -> WElem<F> {
    WElem::idem(n, b)
}

fn single<F: Field>(k: usize, c: WElem<F>) -> ModElem<F> {
    let mut m = ModElem::new();
    if !c.is_zero() {
        m.insert(k, c);
    }
    m
}

fn locate(m: &Bimod, label: &str) -> Result<usize> {
    m.gen_index(label)
        .ok_or_else(|| Error::Index(format!("generator {label} of {m}")))
}

fn repeat_label(b: usize, k: usize) -> String {
    vec![format!("f{b}"); k].join("|")
}

/// `epsilon_p: W_p -> W` of degree 1, with `e_b (x) e_b -> e_b`.
pub fn epsilon<F: Field>(n: usize, p: usize) -> Result<BimodMap<F>> {
    let (src, tgt) = (Bimod::wi(n, p), Bimod::regular(n));
    let mut values = Vec::new();
    for b in thick_free(n, p) {
        values.push((locate(&src, &format!("f{b}"))?, single(b - 2, idem(n, b))));
    }
    pin(&hom_space(&src, &tgt, 1), &values, &format!("epsilon_{p}"))
}

/// `iota_p: W -> W_p` of degree 1, with `e_b -> x_p (x) 1 - 1 (x) x_{p+1}` for `b != p+1`.
pub fn iota<F: Field>(n: usize, p: usize) -> Result<BimodMap<F>> {
    let (src, tgt) = (Bimod::regular(n), Bimod::wi(n, p));
    let mut values = Vec::new();
    for b in thick_free(n, p) {
        let mut v = ModElem::new();
        v.insert(locate(&tgt, &format!("f{b}'"))?, idem(n, b));
        v.insert(
            locate(&tgt, &format!("f{b}"))?,
            idem::<F>(n, b).mul_poly(&Poly::var(n, p + 1)).neg(),
        );
        values.push((b - 2, v));
    }
    pin(&hom_space(&src, &tgt, 1), &values, &format!("iota_{p}"))
}

/// The trivalent split `W_p -> W_p (x) W_p` of degree -1, duplicating `1 (x) 1`.
pub fn split<F: Field>(n: usize, p: usize) -> Result<BimodMap<F>> {
    let src = Bimod::wi(n, p);
    let tgt = src.tensor(&src);
    let mut values = Vec::new();
    for b in thick_free(n, p) {
        values.push((
            locate(&src, &format!("f{b}"))?,
            single(locate(&tgt, &repeat_label(b, 2))?, idem(n, b)),
        ));
    }
    pin(&hom_space(&src, &tgt, -1), &values, &format!("split_{p}"))
}

/// The trivalent merge `W_p (x) W_p -> W_p` of degree -1: `1 (x) 1 (x) 1 -> 0` and
/// `1 (x) x_p (x) 1 -> 1 (x) 1`.
pub fn merge<F: Field>(n: usize, p: usize) -> Result<BimodMap<F>> {
    let tgt = Bimod::wi(n, p);
    let src = tgt.tensor(&tgt);
    let mut values = Vec::new();
    for b in thick_free(n, p) {
        values.push((locate(&src, &repeat_label(b, 2))?, ModElem::new()));
        values.push((
            locate(&src, &format!("f{b}'|f{b}"))?,
            single(locate(&tgt, &format!("f{b}"))?, idem(n, b)),
        ));
    }
    pin(&hom_space(&src, &tgt, -1), &values, &format!("merge_{p}"))
}

fn unit_to_unit<F: Field>(
    src: &Bimod,
    tgt: &Bimod,
    k: usize,
    avoid: &[usize],
    what: &str,
) -> Result<BimodMap<F>> {
    let n = src.n();
    let mut values = Vec::new();
    for b in (2..=n + 1).filter(|b| !avoid.contains(b)) {
        values.push((
            locate(src, &repeat_label(b, k))?,
            single(locate(tgt, &repeat_label(b, k))?, idem(n, b)),
        ));
    }
    pin(&hom_space(src, tgt, 0), &values, what)
}

/// `X_ij: W_i (x) W_j -> W_j (x) W_i` for `|i - j| > 1`, with `1 (x) 1 (x) 1 -> 1 (x) 1 (x) 1`.
pub fn x_map<F: Field>(n: usize, i: usize, j: usize) -> Result<BimodMap<F>> {
    if i.abs_diff(j) <= 1 {
        return Err(Error::Invalid(format!("X_{i}{j} needs |i - j| > 1")));
    }
    let src = Bimod::word(n, &[i, j]);
    let tgt = Bimod::word(n, &[j, i]);
    unit_to_unit(&src, &tgt, 2, &[i + 1, j + 1], &format!("X_{i}{j}"))
}

/// The six-valent map `W_i (x) W_j (x) W_i -> W_j (x) W_i (x) W_j` for `|i - j| = 1`,
/// with `1 (x) 1 (x) 1 (x) 1 -> 1 (x) 1 (x) 1 (x) 1`.
pub fn six_valent<F: Field>(n: usize, i: usize, j: usize) -> Result<BimodMap<F>> {
    if i.abs_diff(j) != 1 {
        return Err(Error::Invalid(format!(
            "the six-valent map needs |i - j| = 1, got {i}, {j}"
        )));
    }
    let src = Bimod::word(n, &[i, j, i]);
    let tgt = Bimod::word(n, &[j, i, j]);
    unit_to_unit(
        &src,
        &tgt,
        3,
        &[i + 1, j + 1],
        &format!("six-valent {i}{j}{i}"),
    )
}
