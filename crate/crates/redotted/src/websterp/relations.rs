//! The defining relations of `W^p(n,1)` checked in the blockwise model.

use super::elem::{ThickRing, WpElem};
use super::gens::{cross_p, dot_p, e1_p, e2_p, seq_string_p, strand, Strand};
use crate::exactalg::{Field, Poly};
use crate::webster::gens::swap_index;
use crate::webster::relations::RelationCheck;
use crate::webster::{RelationReport, Status};

struct Suite<F: Field> {
    n: usize,
    p: usize,
    report: RelationReport,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Suite<F> {
    fn check(&mut self, relation: u8, instance: String, lhs: WpElem<F>, rhs: WpElem<F>) {
        let status = if lhs != rhs {
            Status::Fail(format!("lhs {lhs} != rhs {rhs}"))
        } else if lhs.is_zero() {
            Status::Vacuous
        } else {
            Status::Pass
        };
        self.report.checks.push(RelationCheck {
            relation,
            instance,
            status,
        });
    }

    fn e(&self, i: usize) -> WpElem<F> {
        WpElem::idem(self.n, self.p, i)
    }

    fn seq(&self, i: usize) -> String {
        seq_string_p(self.n, self.p, i)
    }

    fn cross_all(&self, j: usize) -> WpElem<F> {
        (1..=self.n).fold(WpElem::zero(self.n, self.p), |acc, i| {
            acc.add(&cross_p(self.n, self.p, j, i))
        })
    }

    fn generators(&self) -> Vec<WpElem<F>> {
        let (n, p) = (self.n, self.p);
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(self.e(i));
            for pos in 1..=n {
                if let Some(d) = dot_p(n, p, pos, i) {
                    out.push(d);
                }
            }
            for j in 1..n {
                out.push(cross_p(n, p, j, i));
            }
        }
        out
    }
}

/// Verify the relations of `W^p(n,1)` numbered as in its presentation:
/// (1) idempotents, (2) `E_1, E_2` central, (3) dots commute with idempotents,
/// (4) crossings permute idempotents, (5) red-red crossings vanish,
/// (6) distant crossings commute, (7) distant dot slides, (8) dots commute,
/// (9)-(10) dot slides through a crossing, (11) quadratic relations,
/// (12) braid relation, (13) cyclotomic relation.
pub fn verify_relations_p<F: Field>(n: usize, p: usize) -> crate::Result<RelationReport> {
    ThickRing::new(n, p)?;
    let mut s = Suite::<F> {
        n,
        p,
        report: RelationReport {
            n,
            checks: Vec::new(),
        },
        _f: Default::default(),
    };
    let ring = ThickRing { n, p };
    let gens = s.generators();
    for i in 1..=n {
        for j in 1..=n {
            let lhs = s.e(i).mul(&s.e(j));
            let rhs = if i == j { s.e(i) } else { WpElem::zero(n, p) };
            s.check(1, format!("e({}) e({})", s.seq(i), s.seq(j)), lhs, rhs);
        }
    }
    for (name, c) in [("E1", ring.e1::<F>()), ("E2", ring.e2::<F>())] {
        let central = WpElem::unit(n, p).mul_coeff(&c);
        for (k, g) in gens.iter().enumerate() {
            s.check(
                2,
                format!("{name} with generator {k}"),
                central.mul(g),
                g.mul(&central),
            );
        }
    }
    let e1 = (1..=n).fold(WpElem::zero(n, p), |a, i| a.add(&e1_p(n, p, i)));
    let e2 = (1..=n).fold(WpElem::zero(n, p), |a, i| a.add(&e2_p(n, p, i)));
    s.check(2, "E1 E2 = E2 E1".into(), e1.mul(&e2), e2.mul(&e1));
    for i in 1..=n {
        for pos in 1..=n {
            if let Some(d) = dot_p::<F>(n, p, pos, i) {
                s.check(
                    3,
                    format!("y_{pos} e({})", s.seq(i)),
                    d.mul(&s.e(i)),
                    s.e(i).mul(&d),
                );
            }
        }
        for k in 1..n {
            let lhs = s.cross_all(k).mul(&s.e(i));
            let rhs = s.e(swap_index(i, k)).mul(&s.cross_all(k));
            s.check(4, format!("psi_{k} e({})", s.seq(i)), lhs, rhs);
            if strand(n, p, i, k) != Strand::Black && strand(n, p, i, k + 1) != Strand::Black {
                s.check(
                    5,
                    format!("psi_{k} e({})", s.seq(i)),
                    s.cross_all(k).mul(&s.e(i)),
                    WpElem::zero(n, p),
                );
            }
        }
        for j in 1..n {
            for l in 1..n {
                if j.abs_diff(l) > 1 {
                    let lhs = s.cross_all(j).mul(&s.cross_all(l)).mul(&s.e(i));
                    let rhs = s.cross_all(l).mul(&s.cross_all(j)).mul(&s.e(i));
                    s.check(6, format!("psi_{j} psi_{l} e({})", s.seq(i)), lhs, rhs);
                }
            }
            for l in 1..=n {
                if j.abs_diff(l) > 1 {
                    let t = swap_index(i, j);
                    if let (Some(a), Some(b)) = (dot_p::<F>(n, p, l, i), dot_p::<F>(n, p, l, t)) {
                        let lhs = cross_p(n, p, j, i).mul(&a);
                        let rhs = b.mul(&cross_p(n, p, j, i));
                        s.check(7, format!("psi_{j} y_{l} e({})", s.seq(i)), lhs, rhs);
                    }
                }
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                if let (Some(x), Some(y)) = (dot_p::<F>(n, p, a, i), dot_p::<F>(n, p, b, i)) {
                    s.check(
                        8,
                        format!("y_{a} y_{b} e({})", s.seq(i)),
                        x.mul(&y),
                        y.mul(&x),
                    );
                }
            }
        }
        for j in 1..n {
            let t = swap_index(i, j);
            let dots = (
                dot_p::<F>(n, p, j, i),
                dot_p::<F>(n, p, j + 1, t),
                dot_p::<F>(n, p, j, t),
                dot_p::<F>(n, p, j + 1, i),
            );
            if let (Some(yj_i), Some(yj1_t), Some(yj_t), Some(yj1_i)) = dots {
                let c = cross_p::<F>(n, p, j, i);
                s.check(
                    9,
                    format!("j={j} e({})", s.seq(i)),
                    c.mul(&yj_i).sub(&yj1_t.mul(&c)),
                    WpElem::zero(n, p),
                );
                s.check(
                    10,
                    format!("j={j} e({})", s.seq(i)),
                    yj_t.mul(&c).sub(&c.mul(&yj1_i)),
                    WpElem::zero(n, p),
                );
            }
            let lhs = s.cross_all(j).mul(&s.cross_all(j)).mul(&s.e(i));
            let rhs = quadratic_rhs(n, p, i, j, &ring);
            s.check(11, format!("psi_{j}^2 e({})", s.seq(i)), lhs, rhs);
        }
        for j in 1..n.saturating_sub(1) {
            let a = s.cross_all(j);
            let b = s.cross_all(j + 1);
            let lhs = a.mul(&b).mul(&a).sub(&b.mul(&a).mul(&b)).mul(&s.e(i));
            s.check(
                12,
                format!("j={j} e({})", s.seq(i)),
                lhs,
                WpElem::zero(n, p),
            );
        }
    }
    s.check(13, format!("e({})", s.seq(1)), s.e(1), WpElem::zero(n, p));
    Ok(s.report)
}

/// Right-hand side of `psi_j^2 e(i)`.
fn quadratic_rhs<F: Field>(n: usize, p: usize, i: usize, j: usize, ring: &ThickRing) -> WpElem<F> {
    let e = WpElem::idem(n, p, i);
    let y = |pos: usize| dot_p::<F>(n, p, pos, i).unwrap_or_else(|| WpElem::zero(n, p));
    let thick_form = |pos: usize| {
        let yy = y(pos);
        e.mul_coeff(&ring.e2())
            .sub(&yy.mul_coeff(&ring.e1()))
            .add(&yy.mul(&yy))
    };
    match (strand(n, p, i, j), strand(n, p, i, j + 1)) {
        (Strand::Thin(_), Strand::Black) => y(j + 1).sub(&y(j)),
        (Strand::Black, Strand::Thin(_)) => y(j).sub(&y(j + 1)),
        (Strand::Thick, Strand::Black) => thick_form(j + 1),
        (Strand::Black, Strand::Thick) => thick_form(j),
        _ => {
            let _ = Poly::<F>::zero(n);
            WpElem::zero(n, p)
        }
    }
}
