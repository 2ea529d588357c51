//! The bimodule `B_{i+1} (x)_R P_i = R (x)_{R^{s_{i+1}}} P_i <-1>` and the maps
//! `alpha, beta, gamma, delta` splitting it as `P_{i-1} (+) P_{i+1}`.
//!
//! An element is stored as a pair `(m_0, m_1)` standing for
//! `1 (x) m_0 + x_{i+1} (x) m_1`, using that `R` is free over `R^{s_{i+1}}` with
//! basis `1, x_{i+1}`.

use super::pbimod::{p_basis_in_degree, PElem};
use crate::exactalg::{Field, Poly, YPoly};
use crate::{Error, Result};

/// Element `1 (x) m_0 + x_{i+1} (x) m_1` of `B_{i+1} (x) P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem<F: Field> {
    pub i: usize,
    pub m0: PElem<F>,
    pub m1: PElem<F>,
}

/// Split `h = a + b x_k` with `a, b` symmetric in `x_k, x_{k+1}` (coefficientwise in `y`).
pub fn split_symmetric<F: Field>(h: &YPoly<F>, k: usize) -> (YPoly<F>, YPoly<F>) {
    let n = h.nvars();
    let diff = &Poly::var(n, k) - &Poly::var(n, k + 1);
    let xk = Poly::var(n, k);
    let b = h.map_coeffs(|c| {
        (c - &c.swap_vars(k, k + 1))
            .div_exact(&diff)
            .expect("divided difference")
    });
    let a = h.sub(&b.mul_poly(&xk));
    (a, b)
}

impl<F: Field> TensorElem<F> {
    pub fn new(m0: PElem<F>, m1: PElem<F>) -> Self {
        TensorElem { i: m0.i, m0, m1 }
    }

    pub fn zero(n: usize, i: usize) -> Self {
        Self::new(PElem::zero(n, i), PElem::zero(n, i))
    }

    /// `1 (x) h` for `h` in `P_i`.
    pub fn pure(m: PElem<F>) -> Self {
        let n = m.n();
        let i = m.i;
        Self::new(m, PElem::zero(n, i))
    }

    /// `x_{i+1} (x) h`.
    pub fn pure_x(m: PElem<F>) -> Self {
        let n = m.n();
        let i = m.i;
        Self::new(PElem::zero(n, i), m)
    }

    pub fn n(&self) -> usize {
        self.m0.n()
    }

    pub fn is_zero(&self) -> bool {
        self.m0.is_zero() && self.m1.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.m0.add(&o.m0), self.m1.add(&o.m1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.m0.sub(&o.m0), self.m1.sub(&o.m1))
    }

    /// Left action of `x_j`.
    pub fn left_var(&self, j: usize) -> Self {
        let n = self.n();
        let k = self.i + 1;
        let e1 = &Poly::var(n, k) + &Poly::var(n, k + 1);
        let e2 = &Poly::var(n, k) * &Poly::var(n, k + 1);
        let times_xk = |t: &Self| {
            // x_k^2 = e1 x_k - e2
            Self::new(t.m1.left(&-&e2), t.m0.add(&t.m1.left(&e1)))
        };
        if j == k {
            times_xk(self)
        } else if j == k + 1 {
            let a = Self::new(self.m0.left(&e1), self.m1.left(&e1));
            a.sub(&times_xk(self))
        } else {
            let x = Poly::var(n, j);
            Self::new(self.m0.left(&x), self.m1.left(&x))
        }
    }

    /// Left action of a polynomial.
    pub fn left(&self, f: &Poly<F>) -> Self {
        let n = self.n();
        let mut out = Self::zero(n, self.i);
        for (m, c) in f.terms() {
            let mut t = self.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.left_var(k + 1);
                }
            }
            out = out.add(&Self::new(
                t.m0.left(&Poly::constant(n, c.clone())),
                t.m1.left(&Poly::constant(n, c.clone())),
            ));
        }
        out
    }

    /// Right action of `g` in `R^J`.
    pub fn right(&self, g: &Poly<F>) -> Self {
        Self::new(self.m0.right(g), self.m1.right(g))
    }

    /// Graded degree: `1 (x) 1` sits in degree `-i-1`.
    pub fn degree(&self) -> Option<i64> {
        let d0 = self.m0.degree().map(|d| d - 1);
        let d1 = self.m1.degree().map(|d| d + 1);
        match (d0, d1) {
            (Some(a), Some(b)) if a != b => None,
            (Some(a), _) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }
}

/// Spanning set of `B_{i+1} (x) P_i` in degree `d`.
pub fn tensor_basis_in_degree<F: Field>(n: usize, i: usize, d: i64) -> Vec<TensorElem<F>> {
    let mut out: Vec<TensorElem<F>> = p_basis_in_degree(n, i, d + 1)
        .into_iter()
        .map(TensorElem::pure)
        .collect();
    out.extend(
        p_basis_in_degree(n, i, d - 1)
            .into_iter()
            .map(TensorElem::pure_x),
    );
    out
}

/// A map out of the tensor product, determined by the images of `1 (x) 1` and
/// `1 (x) x_{i+1}` in some `P_t`.
#[derive(Clone, Debug)]
pub struct TensorMap<F: Field> {
    pub i: usize,
    pub tgt: usize,
    pub g0: YPoly<F>,
    pub g1: YPoly<F>,
}

impl<F: Field> TensorMap<F> {
    /// `phi(1 (x) h)` for a representative `h` in `R[y]`.
    fn on_pure(&self, h: &YPoly<F>) -> PElem<F> {
        let n = h.nvars();
        let (a, b) = split_symmetric(h, self.i + 1);
        let v = a.mul(&self.g0).add(&b.mul(&self.g1));
        PElem::new(n, self.tgt, &v)
    }

    pub fn apply(&self, t: &TensorElem<F>) -> PElem<F> {
        let n = t.n();
        let xk = Poly::var(n, self.i + 1);
        self.on_pure(t.m0.rep())
            .add(&self.on_pure(t.m1.rep()).left(&xk))
    }
}

/// A map into the tensor product out of `P_s`, determined by the image of `1`.
#[derive(Clone, Debug)]
pub struct IntoTensor<F: Field> {
    pub src: usize,
    pub image: TensorElem<F>,
}

impl<F: Field> IntoTensor<F> {
    /// `f(a . 1) = a . f(1)`, with `x^a y^r` acting by left `x^a` and right `x_1^r`.
    pub fn apply(&self, m: &PElem<F>) -> TensorElem<F> {
        let n = m.n();
        let mut out = TensorElem::zero(n, self.image.i);
        let x1 = Poly::var(n, 1);
        for (r, c) in m.rep().coeffs().iter().enumerate() {
            let mut t = self.image.clone();
            for _ in 0..r {
                t = t.right(&x1);
            }
            out = out.add(&t.left(c));
        }
        out
    }
}

/// The four splitting maps for `B_{i+1} (x) P_i`.
#[derive(Clone, Debug)]
pub struct Splitting<F: Field> {
    pub i: usize,
    /// `alpha(1) = 1 (x) (y - x_{i+1})`, absent when `i = 0`.
    pub alpha: Option<IntoTensor<F>>,
    /// `beta(1 (x) 1) = 0`, `beta(1 (x) x_{i+1}) = -1`.
    pub beta: Option<TensorMap<F>>,
    /// `gamma(1) = 1 (x) 1`.
    pub gamma: IntoTensor<F>,
    /// `delta(1 (x) 1) = 1`, `delta(1 (x) x_{i+1}) = y`.
    pub delta: TensorMap<F>,
}

pub fn splitting<F: Field>(n: usize, i: usize) -> Result<Splitting<F>> {
    if i + 2 > n {
        return Err(Error::Index(format!(
            "B_{} (x) P_{i} needs i <= n-2 (n = {n})",
            i + 1
        )));
    }
    let xk = Poly::<F>::var(n, i + 1);
    let (alpha, beta) = if i >= 1 {
        let a = IntoTensor {
            src: i - 1,
            image: TensorElem::pure(PElem::new(
                n,
                i,
                &YPoly::y(n).sub(&YPoly::from_poly(xk.clone())),
            )),
        };
        let b = TensorMap {
            i,
            tgt: i - 1,
            g0: YPoly::zero(n),
            g1: YPoly::from_poly(Poly::from_i64(n, -1)),
        };
        (Some(a), Some(b))
    } else {
        (None, None)
    };
    let gamma = IntoTensor {
        src: i + 1,
        image: TensorElem::pure(PElem::one(n, i)),
    };
    let delta = TensorMap {
        i,
        tgt: i + 1,
        g0: YPoly::one(n),
        g1: YPoly::y(n),
    };
    Ok(Splitting {
        i,
        alpha,
        beta,
        gamma,
        delta,
    })
}

/// Results of the splitting check.
#[derive(Clone, Debug, Default)]
pub struct SplitReport {
    pub i: usize,
    pub cap: i64,
    pub beta_alpha_id: bool,
    pub delta_gamma_id: bool,
    pub beta_gamma_zero: bool,
    pub delta_alpha_zero: bool,
    pub sum_id: bool,
    pub maps_are_bimodule_maps: bool,
    /// `(generator, value)` of the forced values of `beta` and `delta`.
    pub forced: Vec<(String, String, bool)>,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.beta_alpha_id
            && self.delta_gamma_id
            && self.beta_gamma_zero
            && self.delta_alpha_zero
            && self.sum_id
            && self.maps_are_bimodule_maps
            && self.forced.iter().all(|f| f.2)
    }
}

fn tensor_map_commutes<F: Field>(f: &TensorMap<F>, n: usize, cap: i64) -> bool {
    let i = f.i;
    for d in -(i as i64) - 1..=cap {
        for t in tensor_basis_in_degree::<F>(n, i, d) {
            let ft = f.apply(&t);
            for j in 1..=n {
                let x = Poly::var(n, j);
                if f.apply(&t.left(&x)) != ft.left(&x) {
                    return false;
                }
            }
            for j in 1..=n {
                let g = Poly::var(n, j);
                if f.apply(&t.right(&g)) != ft.right(&g) {
                    return false;
                }
            }
        }
    }
    true
}

fn into_tensor_commutes<F: Field>(f: &IntoTensor<F>, n: usize, cap: i64) -> bool {
    // Well defined: the relation of P_src maps to zero.
    let rel = crate::exactalg::modulus::<F>(n, f.src + 2);
    let img = &f.image;
    let mut t = TensorElem::zero(n, img.i);
    let x1 = Poly::var(n, 1);
    for (r, c) in rel.coeffs().iter().enumerate() {
        let mut s = img.clone();
        for _ in 0..r {
            s = s.right(&x1);
        }
        t = t.add(&s.left(c));
    }
    if !t.is_zero() {
        return false;
    }
    for d in -(f.src as i64)..=cap {
        for m in p_basis_in_degree::<F>(n, f.src, d) {
            let fm = f.apply(&m);
            for j in 1..=n {
                let x = Poly::var(n, j);
                if f.apply(&m.left(&x)) != fm.left(&x) || f.apply(&m.right(&x)) != fm.right(&x) {
                    return false;
                }
            }
        }
    }
    true
}

/// Verify `beta alpha = Id`, `delta gamma = Id`, `beta gamma = 0`, `delta alpha = 0`
/// and `alpha beta + gamma delta = Id` on spanning sets up to degree `cap`, plus
/// the forced values of `beta` and `delta`.
pub fn split_check<F: Field>(n: usize, i: usize, cap: i64) -> Result<SplitReport> {
    let s = splitting::<F>(n, i)?;
    let mut rep = SplitReport {
        i,
        cap,
        ..Default::default()
    };
    rep.delta_gamma_id = (-(i as i64) - 1..=cap).all(|d| {
        p_basis_in_degree::<F>(n, i + 1, d)
            .iter()
            .all(|m| s.delta.apply(&s.gamma.apply(m)) == *m)
    });
    rep.beta_alpha_id = true;
    rep.beta_gamma_zero = true;
    rep.delta_alpha_zero = true;
    if let (Some(alpha), Some(beta)) = (&s.alpha, &s.beta) {
        rep.beta_alpha_id = (-(i as i64) + 1..=cap).all(|d| {
            p_basis_in_degree::<F>(n, i - 1, d)
                .iter()
                .all(|m| beta.apply(&alpha.apply(m)) == *m)
        });
        rep.delta_alpha_zero = (-(i as i64) + 1..=cap).all(|d| {
            p_basis_in_degree::<F>(n, i - 1, d)
                .iter()
                .all(|m| s.delta.apply(&alpha.apply(m)).is_zero())
        });
        rep.beta_gamma_zero = (-(i as i64) - 1..=cap).all(|d| {
            p_basis_in_degree::<F>(n, i + 1, d)
                .iter()
                .all(|m| beta.apply(&s.gamma.apply(m)).is_zero())
        });
    }
    rep.sum_id = (-(i as i64) - 1..=cap).all(|d| {
        tensor_basis_in_degree::<F>(n, i, d).iter().all(|t| {
            let mut back = s.gamma.apply(&s.delta.apply(t));
            if let (Some(alpha), Some(beta)) = (&s.alpha, &s.beta) {
                back = back.add(&alpha.apply(&beta.apply(t)));
            }
            back == *t
        })
    });
    let mut ok = tensor_map_commutes(&s.delta, n, cap) && into_tensor_commutes(&s.gamma, n, cap);
    if let (Some(alpha), Some(beta)) = (&s.alpha, &s.beta) {
        ok = ok && tensor_map_commutes(beta, n, cap) && into_tensor_commutes(alpha, n, cap);
    }
    rep.maps_are_bimodule_maps = ok;
    let k = i + 1;
    let one_x =
        |l: usize| TensorElem::pure(PElem::new(n, i, &YPoly::from_poly(Poly::<F>::var(n, l))));
    let y_t = TensorElem::pure(PElem::new(n, i, &YPoly::y(n)));
    let target = |t: usize, v: YPoly<F>| PElem::new(n, t, &v);
    if let Some(beta) = &s.beta {
        let b = |t: &TensorElem<F>| beta.apply(t);
        rep.forced
            .push(("beta(1 (x) y)".into(), "0".into(), b(&y_t).is_zero()));
        rep.forced.push((
            "beta(1 (x) x_{i+2})".into(),
            "1".into(),
            b(&one_x(k + 1)) == target(i - 1, YPoly::one(n)),
        ));
        for j in (1..=n).filter(|&j| j != k && j != k + 1) {
            rep.forced.push((
                format!("beta(1 (x) x_{j})"),
                "0".into(),
                b(&one_x(j)).is_zero(),
            ));
        }
    }
    let dl = |t: &TensorElem<F>| s.delta.apply(t);
    rep.forced.push((
        "delta(1 (x) y)".into(),
        "y".into(),
        dl(&y_t) == target(i + 1, YPoly::y(n)),
    ));
    let e = YPoly::from_poly(&Poly::<F>::var(n, k) + &Poly::var(n, k + 1)).sub(&YPoly::y(n));
    rep.forced.push((
        "delta(1 (x) x_{i+2})".into(),
        "x_{i+1}+x_{i+2}-y".into(),
        dl(&one_x(k + 1)) == target(i + 1, e),
    ));
    for j in (1..=n).filter(|&j| j != k && j != k + 1) {
        let ok = dl(&one_x(j)) == target(i + 1, YPoly::from_poly(Poly::var(n, j)));
        rep.forced
            .push((format!("delta(1 (x) x_{j})"), format!("x_{j}"), ok));
    }
    Ok(rep)
}
