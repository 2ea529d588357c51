//! The `(R, R^J)`-bimodules `P_i = R[y]/(y-x_1)...(y-x_{i+1}) <-i>` for
//! `J = {2, ..., n-1}`, bimodule maps out of them, and their Hom spaces.
//!
//! Elements of `R^J` are written in the invariant presentation: a polynomial in
//! `z_1 = x_1` and `z_{j+1} = E_j(x_2, ..., x_n)` for `1 <= j <= n-1`.

use crate::exactalg::poly::monomials_of_total;
use crate::exactalg::{esym_range, Field, Poly, QuotElem, YPoly};
use crate::gradedla::{kernel_of_columns, sparse_from_pairs, SparseVec};
use crate::{Error, Result};

/// Elementary symmetric polynomial `E_j` in the variable range `a..=b`.
fn esym<F: Field>(n: usize, j: usize, a: usize, b: usize) -> Poly<F> {
    esym_range(n, j, a, b)
}

/// Express a polynomial symmetric in `vars` through their elementary symmetric
/// polynomials. Returns a polynomial in `n + vars.len()` variables: the first `n`
/// are the original ones (the entries of `vars` never occur), the last
/// `vars.len()` stand for `E_1, ..., E_k` of `vars`.
pub fn symmetric_reduce<F: Field>(f: &Poly<F>, vars: &[usize]) -> Result<Poly<F>> {
    let n = f.nvars();
    for w in vars.windows(2) {
        if f.swap_vars(w[0], w[1]) != *f {
            return Err(Error::NotInImage(format!(
                "{f} is not symmetric in the given variables"
            )));
        }
    }
    Ok(sym_rec(f, vars, n))
}

fn sym_rec<F: Field>(f: &Poly<F>, vars: &[usize], n: usize) -> Poly<F> {
    let k = vars.len();
    let big = n + k;
    let lift: Vec<usize> = (1..=n).collect();
    if f.is_zero() {
        return Poly::zero(big);
    }
    if k == 0 {
        return f.relabel(big, &lift);
    }
    let last = vars[k - 1];
    let mut zero_last: Vec<Poly<F>> = (1..=n).map(|l| Poly::var(n, l)).collect();
    zero_last[last - 1] = Poly::zero(n);
    let g = f.substitute(&zero_last);
    // g is symmetric in vars[..k-1]; its reduction uses E_1..E_{k-1} of those.
    let g_red = sym_rec(&g, &vars[..k - 1], n);
    // Reinterpret E_j(vars[..k-1]) as E_j(vars).
    let mut map: Vec<usize> = (1..=n).collect();
    map.extend(n + 1..n + k);
    let g_big = g_red.relabel(big, &map);
    let e_images = elementary_images::<F>(n, vars);
    let back = expand(&g_big, n, &e_images);
    let rest = f - &back;
    let ek = e_images[k - 1].clone();
    let q = rest
        .div_exact(&ek)
        .expect("symmetric remainder divisible by E_k");
    let q_red = sym_rec(&q, vars, n);
    let ek_var = Poly::var(big, n + k);
    &g_big + &(&q_red * &ek_var)
}

fn elementary_images<F: Field>(n: usize, vars: &[usize]) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for j in 1..=vars.len() {
        out.push(crate::exactalg::elementary_symmetric(n, j, vars).expect("valid variables"));
    }
    out
}

/// Substitute the elementary symmetric images for the last variables.
fn expand<F: Field>(g: &Poly<F>, n: usize, e_images: &[Poly<F>]) -> Poly<F> {
    let mut images: Vec<Poly<F>> = (1..=n).map(|l| Poly::var(n, l)).collect();
    images.extend(e_images.iter().cloned());
    g.substitute(&images)
}

/// The subring `R^J` written in its invariant presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
}

impl Invariants {
    pub fn new(n: usize) -> Self {
        Invariants { n }
    }

    /// `z_1 = x_1`.
    pub fn x1<F: Field>(&self) -> Poly<F> {
        Poly::var(self.n, 1)
    }

    /// `z_{j+1} = E_j(x_2, ..., x_n)`.
    pub fn e<F: Field>(&self, j: usize) -> Poly<F> {
        Poly::var(self.n, j + 1)
    }

    /// Polynomial in `x_1..x_n` of an element given in the presentation.
    pub fn to_r<F: Field>(&self, g: &Poly<F>) -> Poly<F> {
        let n = self.n;
        let mut images = vec![Poly::var(n, 1)];
        for j in 1..n {
            images.push(esym(n, j, 2, n));
        }
        g.substitute(&images)
    }

    /// Rewrite a polynomial symmetric in `x_2..x_n` into the presentation.
    pub fn normalize<F: Field>(&self, f: &Poly<F>) -> Result<Poly<F>> {
        let n = self.n;
        let vars: Vec<usize> = (2..=n).collect();
        let red = symmetric_reduce(f, &vars)?;
        // Variables of `red`: x_1..x_n (only x_1 occurs), then E_1..E_{n-1}.
        let mut map = vec![1usize; n];
        map.extend(2..=n);
        Ok(red.relabel(n, &map))
    }

    /// Image of `z_{j+1}` under the right action on `P_i`:
    /// `sum_m (-1)^m y^m E_{j-m}(x_1, ..., x_n)`.
    pub fn e_action<F: Field>(&self, j: usize) -> YPoly<F> {
        let n = self.n;
        let mut coeffs = Vec::new();
        for m in 0..=j {
            let c = esym::<F>(n, j - m, 1, n);
            coeffs.push(if m % 2 == 0 { c } else { -&c });
        }
        YPoly::from_coeffs(n, coeffs)
    }

    /// The right action of `g` as multiplication by an element of `R[y]`.
    pub fn action<F: Field>(&self, g: &Poly<F>) -> YPoly<F> {
        let n = self.n;
        let mut out = YPoly::zero(n);
        let mut gens = vec![YPoly::y(n)];
        for j in 1..n {
            gens.push(self.e_action(j));
        }
        for (m, c) in g.terms() {
            let mut t = YPoly::from_poly(Poly::constant(n, c.clone()));
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&gens[k]);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

/// The identity `E_j(x_2..x_n) = sum_m (-1)^m x_1^m E_{j-m}(x_1..x_n)`.
pub fn elementary_identity_holds<F: Field>(n: usize, j: usize) -> bool {
    let lhs = esym::<F>(n, j, 2, n);
    let rhs = Invariants::new(n).e_action::<F>(j).eval_y(&Poly::var(n, 1));
    lhs == rhs
}

/// An element of `P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PElem<F: Field> {
    pub i: usize,
    pub v: QuotElem<F>,
}

impl<F: Field> PElem<F> {
    pub fn new(n: usize, i: usize, rep: &YPoly<F>) -> Self {
        let _ = n;
        PElem {
            i,
            v: QuotElem::new(rep, i + 2).expect("valid P index"),
        }
    }

    pub fn one(n: usize, i: usize) -> Self {
        PElem {
            i,
            v: QuotElem::one(n, i + 2),
        }
    }

    pub fn zero(n: usize, i: usize) -> Self {
        PElem {
            i,
            v: QuotElem::zero(n, i + 2),
        }
    }

    pub fn n(&self) -> usize {
        self.v.nvars()
    }

    pub fn rep(&self) -> &YPoly<F> {
        self.v.rep()
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        PElem {
            i: self.i,
            v: self.v.add(&o.v).expect("same P"),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PElem {
            i: self.i,
            v: self.v.sub(&o.v).expect("same P"),
        }
    }

    /// Left action of `f` in `R`.
    pub fn left(&self, f: &Poly<F>) -> Self {
        PElem {
            i: self.i,
            v: self.v.mul_poly(f),
        }
    }

    /// Right action of `g` in `R^J` (invariant presentation).
    pub fn right(&self, g: &Poly<F>) -> Self {
        let a = Invariants::new(self.n()).action(g);
        PElem {
            i: self.i,
            v: self.v.mul_y(&a),
        }
    }

    /// Multiplication by an element of `R[y]`, combining both actions.
    pub fn mul_y(&self, a: &YPoly<F>) -> Self {
        PElem {
            i: self.i,
            v: self.v.mul_y(a),
        }
    }

    /// Graded degree if homogeneous: `deg(x^a y^r) = 2|a| + 2r - i`.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.rep().homogeneous_degree()? as i64 - self.i as i64)
    }
}

/// Spanning set `x^a y^r` of `P_i` in graded degree `d`.
pub fn p_basis_in_degree<F: Field>(n: usize, i: usize, d: i64) -> Vec<PElem<F>> {
    let mut out = Vec::new();
    let t = d + i as i64;
    if t < 0 || t % 2 != 0 {
        return out;
    }
    for r in 0..=i {
        let left = t / 2 - r as i64;
        if left < 0 {
            break;
        }
        for m in monomials_of_total(n, left as usize) {
            out.push(PElem::new(
                n,
                i,
                &YPoly::monomial(Poly::term(m, F::one()), r),
            ));
        }
    }
    out
}

/// A bimodule map out of `P_src`, determined by the image of the generator `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMap<F: Field> {
    pub src: usize,
    pub tgt: usize,
    pub image: YPoly<F>,
}

impl<F: Field> PMap<F> {
    pub fn new(src: usize, tgt: usize, image: YPoly<F>) -> Self {
        let image = image.reduce_mod(tgt + 2);
        PMap { src, tgt, image }
    }

    pub fn identity(n: usize, i: usize) -> Self {
        PMap::new(i, i, YPoly::one(n))
    }

    /// `f(a . 1) = a . f(1)` for `a` in `R[y]`.
    pub fn apply(&self, m: &PElem<F>) -> PElem<F> {
        let n = m.n();
        PElem::new(n, self.tgt, &self.image).mul_y(m.rep())
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &PMap<F>) -> Result<PMap<F>> {
        if first.tgt != self.src {
            return Err(Error::Invalid(format!(
                "cannot compose P_{} -> P_{} after P_{} -> P_{}",
                self.src, self.tgt, first.src, first.tgt
            )));
        }
        Ok(PMap::new(first.src, self.tgt, first.image.mul(&self.image)))
    }

    /// Degree of the map: `deg f(1) + src`.
    pub fn degree(&self) -> Option<i64> {
        let n = self.image.nvars();
        PElem::new(n, self.tgt, &self.image)
            .degree()
            .map(|d| d + self.src as i64)
    }

    /// Whether `1 -> image` extends to a well-defined map: the defining relation
    /// `prod_{l<=src+1} (y - x_l) . 1 = 0` of `P_src` must map to zero.
    pub fn well_defined(&self) -> bool {
        let n = self.image.nvars();
        let rel = crate::exactalg::modulus::<F>(n, self.src + 2);
        PElem::new(n, self.tgt, &self.image).mul_y(&rel).is_zero()
    }

    /// Check commutation with the left action of every `x_j` and the right action of
    /// every presentation generator on the spanning set up to degree `cap`.
    pub fn commutes_with_actions(&self, n: usize, cap: i64) -> bool {
        if !self.well_defined() {
            return false;
        }
        for d in -(self.src as i64)..=cap {
            for m in p_basis_in_degree::<F>(n, self.src, d) {
                for j in 1..=n {
                    let x = Poly::var(n, j);
                    if self.apply(&m.left(&x)) != self.apply(&m).left(&x) {
                        return false;
                    }
                    if self.apply(&m.right(&x)) != self.apply(&m).right(&x) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Dimension of the space of bimodule maps `P_i -> P_j` of degree `t`, computed
/// as the kernel of the defining relation of `P_i` acting on `P_j`.
pub fn hom_dimension<F: Field>(n: usize, i: usize, j: usize, t: i64) -> usize {
    let cands = p_basis_in_degree::<F>(n, j, t - i as i64);
    let rel = crate::exactalg::modulus::<F>(n, i + 2);
    let mut index = std::collections::HashMap::new();
    let cols: Vec<SparseVec<F>> = cands
        .iter()
        .map(|v| {
            let w = v.mul_y(&rel);
            let mut pairs = Vec::new();
            for (r, c) in w.rep().coeffs().iter().enumerate() {
                for (m, a) in c.terms() {
                    let len = index.len();
                    let id = *index.entry((r, m.clone())).or_insert(len);
                    pairs.push((id, a.clone()));
                }
            }
            sparse_from_pairs(pairs)
        })
        .collect();
    kernel_of_columns(&cols).len()
}
