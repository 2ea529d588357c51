//! The maps `phi`, `lambda` between the `P_i` and the isomorphism `Phi` from
//! `End(P_0 (+) ... (+) P_{n-1})` onto `W(n,1)`.

use super::pbimod::{hom_dimension, PMap};
use crate::exactalg::{Field, Poly, YPoly};
use crate::gradedla::Laurent;
use crate::webster::{self, decompose, graded_dim_block, WElem};
use crate::Result;

/// `phi_{i+1,i}: P_i -> P_{i+1}`, `1 -> y - x_{i+2}`.
///
/// The assignment `1 -> x_{i+1} - y` is not well defined; see [`phi_up_literal`].
pub fn phi_up<F: Field>(n: usize, i: usize) -> PMap<F> {
    PMap::new(i, i + 1, YPoly::linear(n, i + 2))
}

/// The assignment `1 -> x_{i+1} - y` for `P_i -> P_{i+1}`.
pub fn phi_up_literal<F: Field>(n: usize, i: usize) -> PMap<F> {
    PMap::new(i, i + 1, YPoly::linear(n, i + 1).neg())
}

/// `phi_{i-1,i}: P_i -> P_{i-1}`, `1 -> 1`.
pub fn phi_down<F: Field>(n: usize, i: usize) -> PMap<F> {
    PMap::new(i, i - 1, YPoly::one(n))
}

/// `lambda_{x_j,i}: P_i -> P_i`, `1 -> x_j`.
pub fn lambda<F: Field>(n: usize, j: usize, i: usize) -> PMap<F> {
    PMap::new(i, i, YPoly::from_poly(Poly::var(n, j)))
}

/// `1 -> y` on `P_i`: the right action of `x_1`.
pub fn right_x1<F: Field>(n: usize, i: usize) -> PMap<F> {
    PMap::new(i, i, YPoly::y(n))
}

/// `Phi` of an arbitrary map: the element of `e_{j+2} W e_{i+2}` acting on `1` as the map does.
pub fn phi_of<F: Field>(n: usize, f: &PMap<F>) -> Result<WElem<F>> {
    let coeffs = decompose(n, f.src + 2, f.tgt + 2, &f.image)?;
    WElem::from_block(n, f.src + 2, f.tgt + 2, coeffs)
}

/// A generator with its image under the assignment table of `Phi`.
#[derive(Clone, Debug)]
pub struct PhiEntry<F: Field> {
    pub name: String,
    pub map: PMap<F>,
    pub image: WElem<F>,
}

/// `Phi(Id_{P_i}) = e_{i+2}`, `Phi(phi_{i+1,i}) = psi_{i+2} e_{i+2}`,
/// `Phi(phi_{i-1,i}) = psi_{i+1} e_{i+2}`, `Phi(lambda_{x_j,i}) = y_j e_{i+2}` (`j <= i+1`)
/// or `y_{j+1} e_{i+2}` (`j > i+1`), plus `Phi(1 -> y) = y_{i+2} e_{i+2}`.
pub fn phi_table<F: Field>(n: usize) -> Vec<PhiEntry<F>> {
    let mut out = Vec::new();
    for i in 0..n {
        let e = i + 2;
        out.push(PhiEntry {
            name: format!("Id_P{i}"),
            map: PMap::identity(n, i),
            image: WElem::idem(n, e),
        });
        if i + 1 < n {
            out.push(PhiEntry {
                name: format!("phi_{},{i}", i + 1),
                map: phi_up(n, i),
                image: webster::cross(n, i + 2, e),
            });
        }
        if i >= 1 {
            out.push(PhiEntry {
                name: format!("phi_{},{i}", i - 1),
                map: phi_down(n, i),
                image: webster::cross(n, i + 1, e),
            });
        }
        for j in 1..=n {
            let pos = if j <= i + 1 { j } else { j + 1 };
            out.push(PhiEntry {
                name: format!("lambda_x{j},{i}"),
                map: lambda(n, j, i),
                image: webster::dot(n, pos, e),
            });
        }
        out.push(PhiEntry {
            name: format!("rho_x1,{i}"),
            map: right_x1(n, i),
            image: webster::dot(n, e, e),
        });
    }
    out
}

/// Results of the `Phi` checks.
#[derive(Clone, Debug)]
pub struct PhiReport {
    pub n: usize,
    pub cap: i64,
    /// Generators whose map is not a bimodule map (up to `cap`).
    pub not_bimodule_maps: Vec<String>,
    /// Generators whose table image differs from the induced action.
    pub table_mismatches: Vec<String>,
    /// Composable pairs `(g, f)` with `Phi(g f) != Phi(g) Phi(f)`.
    pub composition_failures: Vec<(String, String)>,
    pub pairs_checked: usize,
    /// Pairs `(i, j)` whose Hom dimensions differ from the block `(i+2, j+2)`.
    pub dimension_failures: Vec<(usize, usize, i64)>,
    /// Whether `1 -> x_{i+1} - y` is a bimodule map (it is not).
    pub literal_phi_up_well_defined: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.not_bimodule_maps.is_empty()
            && self.table_mismatches.is_empty()
            && self.composition_failures.is_empty()
            && self.dimension_failures.is_empty()
    }
}

/// Hom-space series `P_i -> P_j` up to degree `cap`.
pub fn hom_series<F: Field>(n: usize, i: usize, j: usize, cap: i64) -> Laurent {
    let mut out = Laurent::zero();
    for t in 0..=cap {
        out.add_term(t, hom_dimension::<F>(n, i, j, t) as i64);
    }
    out
}

/// Check the table of `Phi`, composition of all generator pairs, and the
/// graded dimensions of Hom spaces against the blocks of `W(n,1)` up to `cap`.
pub fn phi_check<F: Field>(n: usize, cap: i64) -> PhiReport {
    let table = phi_table::<F>(n);
    let mut not_bimodule_maps = Vec::new();
    let mut table_mismatches = Vec::new();
    for g in &table {
        if !g.map.commutes_with_actions(n, cap.min(4)) {
            not_bimodule_maps.push(g.name.clone());
        }
        match phi_of(n, &g.map) {
            Ok(w) if w == g.image => {}
            _ => table_mismatches.push(g.name.clone()),
        }
    }
    let mut composition_failures = Vec::new();
    let mut pairs_checked = 0;
    for f in &table {
        for g in &table {
            if g.map.src != f.map.tgt {
                continue;
            }
            pairs_checked += 1;
            let gf = g.map.compose(&f.map).expect("composable");
            let ok = matches!(phi_of(n, &gf), Ok(w) if w == g.image.mul(&f.image));
            if !ok {
                composition_failures.push((g.name.clone(), f.name.clone()));
            }
        }
    }
    let mut dimension_failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let expected = graded_dim_block(n, i + 2, j + 2).series(cap);
            let got = hom_series::<F>(n, i, j, cap);
            if got != expected {
                let t = (0..=cap)
                    .find(|&t| got.coeff(t) != expected.coeff(t))
                    .unwrap_or(0);
                dimension_failures.push((i, j, t));
            }
        }
    }
    let literal_phi_up_well_defined =
        (0..n.saturating_sub(1)).all(|i| phi_up_literal::<F>(n, i).well_defined());
    PhiReport {
        n,
        cap,
        not_bimodule_maps,
        table_mismatches,
        composition_failures,
        pairs_checked,
        dimension_failures,
        literal_phi_up_well_defined,
    }
}

/// Rows `(source, target, closed form, series up to cap agrees)` of the Hom table
/// for `n = 2`, where `P_0 = R` and `P_1 = B`.
pub fn n2_table<F: Field>(cap: i64) -> Vec<(String, String, String, bool)> {
    let names = ["R", "B"];
    let mut out = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            let closed = graded_dim_block(2, i + 2, j + 2);
            let ok = hom_series::<F>(2, i, j, cap) == closed.series(cap);
            out.push((a.to_string(), b.to_string(), closed.to_text(), ok));
        }
    }
    out
}
