//! Generators of `W^p(n,1)`, the generator table of `rho_p`, and the checks of
//! `rho_p` against the coefficient embedding.

use super::elem::{basis_in_degree_p, rho_index, thick_position, ThickRing, WpElem};
use crate::exactalg::{Field, Poly};
use crate::gradedla::{rank_of, sparse_from_pairs, SparseVec};
use crate::webster::{self, WElem};

/// Kind of the strand in a given position of the sequence of `e_{i,p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strand {
    Black,
    Thick,
    /// Thin red strand carrying the `C_p` variable `t_k`.
    Thin(usize),
}

/// Strand in position `pos` of the sequence with the black strand at `i`.
pub fn strand(n: usize, p: usize, i: usize, pos: usize) -> Strand {
    let ring = ThickRing { n, p };
    let thick = thick_position(p, i);
    if pos == i {
        Strand::Black
    } else if pos == thick {
        Strand::Thick
    } else {
        let w = if pos < thick { pos } else { pos + 1 };
        let l = webster::gens::red_label(rho_index(p, i), w).expect("red strand");
        Strand::Thin(ring.r_to_thin(l).expect("thin strand"))
    }
}

/// Sequence string over `b`, `r`, `R`.
pub fn seq_string_p(n: usize, p: usize, i: usize) -> String {
    (1..=n)
        .map(|pos| match strand(n, p, i, pos) {
            Strand::Black => 'b',
            Strand::Thick => 'R',
            Strand::Thin(_) => 'r',
        })
        .collect()
}

/// Black dot `y e_{i,p}`.
pub fn ydot_p<F: Field>(n: usize, p: usize, i: usize) -> WpElem<F> {
    let len = super::elem::block_len_p(p, i, i);
    if len >= 2 {
        return WpElem::from_block(n, p, i, i, vec![Poly::zero(n), Poly::one(n)])
            .expect("valid block");
    }
    if len == 1 {
        // V_{n,2} = R[y]/(y - x_1), and x_1 is thin since p >= 2 here.
        return WpElem::idem(n, p, i).mul_coeff(&Poly::var(n, 1));
    }
    WpElem::zero(n, p)
}

/// Dot `y_pos e_{i,p}` on a black or thin strand; `None` on the thick strand.
pub fn dot_p<F: Field>(n: usize, p: usize, pos: usize, i: usize) -> Option<WpElem<F>> {
    match strand(n, p, i, pos) {
        Strand::Black => Some(ydot_p(n, p, i)),
        Strand::Thick => None,
        Strand::Thin(k) => Some(WpElem::idem(n, p, i).mul_coeff(&Poly::var(n, k))),
    }
}

/// `E_1 e_{i,p}`.
pub fn e1_p<F: Field>(n: usize, p: usize, i: usize) -> WpElem<F> {
    WpElem::idem(n, p, i).mul_coeff(&ThickRing { n, p }.e1())
}

/// `E_2 e_{i,p}`.
pub fn e2_p<F: Field>(n: usize, p: usize, i: usize) -> WpElem<F> {
    WpElem::idem(n, p, i).mul_coeff(&ThickRing { n, p }.e2())
}

/// Crossing moving the black strand from position `i` to `i+1`.
pub fn up_p<F: Field>(n: usize, p: usize, i: usize) -> WpElem<F> {
    if i < 2 || i >= n {
        return WpElem::zero(n, p);
    }
    WpElem::from_block(n, p, i, i + 1, vec![Poly::one(n)]).expect("valid block")
}

/// Crossing moving the black strand from position `i` to `i-1`.
pub fn down_p<F: Field>(n: usize, p: usize, i: usize) -> WpElem<F> {
    if i < 3 || i > n {
        return WpElem::zero(n, p);
    }
    WpElem::from_block(n, p, i, i - 1, vec![Poly::one(n)]).expect("valid block")
}

/// `psi_j e_{i,p}`.
pub fn cross_p<F: Field>(n: usize, p: usize, j: usize, i: usize) -> WpElem<F> {
    if i == j {
        up_p(n, p, i)
    } else if i == j + 1 {
        down_p(n, p, i)
    } else {
        WpElem::zero(n, p)
    }
}

/// A generator of `W^p(n,1)` with its image under `rho_p`.
#[derive(Clone, Debug)]
pub struct RhoEntry<F: Field> {
    pub name: String,
    pub element: WpElem<F>,
    /// Image under the corrected generator table.
    pub image: WElem<F>,
    /// Image under the generator table read literally, `None` where it has no entry.
    pub literal: Option<WElem<F>>,
}

/// All generators `e_{i,p}`, `y_j e_{i,p}`, `E_1 e_{i,p}`, `E_2 e_{i,p}`, `psi e_{i,p}`
/// with their images in `W(n,1)`.
pub fn rho_table<F: Field>(n: usize, p: usize) -> Vec<RhoEntry<F>> {
    use webster::{cross, cross_all, dot, down, up};
    let mut out = Vec::new();
    let xp = Poly::<F>::var(n, p);
    let xq = Poly::<F>::var(n, p + 1);
    for i in 1..=n {
        let a = rho_index(p, i);
        let seq = seq_string_p(n, p, i);
        let e = WElem::idem(n, a);
        out.push(RhoEntry {
            name: format!("e({seq})"),
            element: WpElem::idem(n, p, i),
            image: e.clone(),
            literal: Some(e.clone()),
        });
        for j in 1..=n {
            if let Some(g) = dot_p::<F>(n, p, j, i) {
                let w = if j < thick_position(p, i) { j } else { j + 1 };
                let lit = if i > p {
                    if j < p {
                        Some(dot(n, j, i + 1))
                    } else if j > p {
                        Some(dot(n, j + 1, i + 1))
                    } else {
                        None
                    }
                } else if j < p + 1 {
                    Some(dot(n, j, i))
                } else if j > p + 1 {
                    Some(dot(n, j + 1, i))
                } else {
                    None
                };
                out.push(RhoEntry {
                    name: format!("y_{j} e({seq})"),
                    element: g,
                    image: dot(n, w, a),
                    literal: lit,
                });
            }
        }
        let lit_e1 = dot::<F>(n, p, a).add(&dot(n, p + 1, a));
        let lit_e2 = dot::<F>(n, p, a).mul(&dot(n, p + 1, a));
        out.push(RhoEntry {
            name: format!("E1 e({seq})"),
            element: e1_p(n, p, i),
            image: e.mul_poly(&(&xp + &xq)),
            literal: Some(lit_e1),
        });
        out.push(RhoEntry {
            name: format!("E2 e({seq})"),
            element: e2_p(n, p, i),
            image: e.mul_poly(&(&xp * &xq)),
            literal: Some(lit_e2),
        });
        if i < n {
            let image = if i == p {
                up::<F>(n, p + 1).mul(&up(n, p))
            } else {
                up(n, a)
            };
            let literal = if i > p {
                Some(cross(n, i + 1, i + 1))
            } else if i + 1 < p {
                Some(cross(n, i, i))
            } else if i + 1 == p {
                Some(cross_all::<F>(n, p).mul(&cross(n, p - 1, p - 1)))
            } else {
                None
            };
            out.push(RhoEntry {
                name: format!("psi_{i} e({seq})"),
                element: up_p(n, p, i),
                image,
                literal,
            });
        }
        if i > 1 {
            let image = if i == p + 1 {
                down::<F>(n, p + 1).mul(&down(n, p + 2))
            } else {
                down(n, a)
            };
            let literal = if i > p + 1 {
                Some(cross(n, i, i + 1))
            } else if i < p {
                Some(cross(n, i - 1, i))
            } else if i == p + 1 {
                Some(cross_all::<F>(n, p).mul(&cross(n, p + 1, p + 2)))
            } else {
                None
            };
            out.push(RhoEntry {
                name: format!("psi_{} e({seq})", i - 1),
                element: down_p(n, p, i),
                image,
                literal,
            });
        }
    }
    out
}

/// Results of the `rho_p` checks.
#[derive(Clone, Debug)]
pub struct RhoReport {
    pub n: usize,
    pub p: usize,
    /// Generators whose corrected table image differs from the coefficient embedding.
    pub table_mismatches: Vec<String>,
    /// Generators where the literal table is missing or disagrees.
    pub literal_mismatches: Vec<String>,
    /// Generator pairs `(a, b)` with `rho(ab) != rho(a) rho(b)`.
    pub product_failures: Vec<(String, String)>,
    pub pairs_checked: usize,
    /// `(degree, basis size, rank of images)`.
    pub injectivity: Vec<(i64, usize, usize)>,
    /// Whether images lie in `e W e` for `e = sum_i rho(e_{i,p})`.
    pub corner: bool,
}

impl RhoReport {
    pub fn passed(&self) -> bool {
        self.table_mismatches.is_empty()
            && self.product_failures.is_empty()
            && self.corner
            && self.injectivity.iter().all(|&(_, a, b)| a == b)
    }

    pub fn literal_passed(&self) -> bool {
        self.literal_mismatches.is_empty()
    }
}

fn coords_vector<F: Field>(
    w: &WElem<F>,
    index: &mut std::collections::HashMap<(usize, usize, usize, crate::exactalg::Mono), usize>,
) -> SparseVec<F> {
    let pairs = w.coords().into_iter().map(|(k, c)| {
        let len = index.len();
        (*index.entry(k).or_insert(len), c)
    });
    sparse_from_pairs(pairs.collect::<Vec<_>>())
}

/// Check the generator table, multiplicativity on all generator pairs, the corner
/// property, and injectivity on the basis up to degree `cap`.
pub fn rho_checks<F: Field>(n: usize, p: usize, cap: i64) -> RhoReport {
    let table = rho_table::<F>(n, p);
    let mut table_mismatches = Vec::new();
    let mut literal_mismatches = Vec::new();
    for g in &table {
        if g.element.embed() != g.image {
            table_mismatches.push(g.name.clone());
        }
        if g.literal.as_ref() != Some(&g.image) {
            literal_mismatches.push(g.name.clone());
        }
    }
    let mut product_failures = Vec::new();
    let mut pairs_checked = 0;
    for a in &table {
        for b in &table {
            pairs_checked += 1;
            let lhs = a.element.mul(&b.element).embed();
            if lhs != a.image.mul(&b.image) {
                product_failures.push((a.name.clone(), b.name.clone()));
            }
        }
    }
    let e: WElem<F> = (1..=n).fold(WElem::zero(n), |acc, i| {
        acc.add(&WElem::idem(n, rho_index(p, i)))
    });
    let corner = table.iter().all(|g| e.mul(&g.image).mul(&e) == g.image);
    let mut injectivity = Vec::new();
    for d in 0..=cap {
        let basis = basis_in_degree_p::<F>(n, p, d);
        let mut index = std::collections::HashMap::new();
        let vecs: Vec<SparseVec<F>> = basis
            .iter()
            .map(|b| coords_vector(&b.embed(), &mut index))
            .collect();
        injectivity.push((d, basis.len(), rank_of(&vecs)));
    }
    RhoReport {
        n,
        p,
        table_mismatches,
        literal_mismatches,
        product_failures,
        pairs_checked,
        injectivity,
        corner,
    }
}
