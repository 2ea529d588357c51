//! Exhaustive verification of the defining relations of `W(n,1)` in the basis model.

use super::elem::WElem;
use super::gens::{cross, cross_all, dot, dot_all, red_label, seq_string, swap_index};
use crate::exactalg::Field;

/// Outcome of one relation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// The instance holds trivially for one black strand (both sides are zero).
    Vacuous,
}

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: u8,
    pub instance: String,
    pub status: Status,
}

/// Results of a relation suite.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, Status::Fail(_)))
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail(_)))
            .collect()
    }

    /// `(relation, checked, vacuous)` counts per relation number.
    pub fn summary(&self) -> Vec<(u8, usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=12u8 {
            let all: Vec<_> = self.checks.iter().filter(|c| c.relation == r).collect();
            let vac = all.iter().filter(|c| c.status == Status::Vacuous).count();
            out.push((r, all.len(), vac));
        }
        out
    }
}

struct Suite<F: Field> {
    n: usize,
    report: RelationReport,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Suite<F> {
    fn check(&mut self, relation: u8, instance: String, lhs: WElem<F>, rhs: WElem<F>) {
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

    fn e(&self, i: usize) -> WElem<F> {
        WElem::idem(self.n, i)
    }
}

/// Delta for the black-black coincidence used in the dot-slide relations.
fn both_black(i: usize, j: usize) -> bool {
    red_label(i, j).is_none() && red_label(i, j + 1).is_none()
}

/// Verify relations (1)-(12) of `W(n,1)` at every sequence and position.
///
/// The dot-slide relations carry a correction term only when both crossing
/// strands are black, which never happens with a single black strand.
pub fn verify_relations<F: Field>(n: usize) -> RelationReport {
    let mut s = Suite::<F> {
        n,
        report: RelationReport {
            n,
            checks: Vec::new(),
        },
        _f: Default::default(),
    };
    let seqs: Vec<usize> = (1..=n + 1).collect();
    let npos = n + 1;

    // (1) e(i) e(j) = delta e(i)
    for &i in &seqs {
        for &j in &seqs {
            let lhs = s.e(i).mul(&s.e(j));
            let rhs = if i == j { s.e(i) } else { WElem::zero(n) };
            s.check(
                1,
                format!("e({}) e({})", seq_string(n, i), seq_string(n, j)),
                lhs,
                rhs,
            );
        }
    }
    // (2) y_j e(i) = e(i) y_j
    for &i in &seqs {
        for j in 1..=npos {
            let lhs = dot_all::<F>(n, j).mul(&s.e(i));
            let rhs = s.e(i).mul(&dot_all(n, j));
            s.check(2, format!("y_{j} e({})", seq_string(n, i)), lhs, rhs);
        }
    }
    // (3) psi_k e(i) = e(s_k i) psi_k
    for &i in &seqs {
        for k in 1..=n {
            let lhs = cross_all::<F>(n, k).mul(&s.e(i));
            let rhs = s.e(swap_index(i, k)).mul(&cross_all(n, k));
            s.check(3, format!("psi_{k} e({})", seq_string(n, i)), lhs, rhs);
        }
    }
    // (4) psi_j e(i) = 0 for two red strands
    for &i in &seqs {
        for j in 1..=n {
            if red_label(i, j).is_some() && red_label(i, j + 1).is_some() {
                let lhs = cross_all::<F>(n, j).mul(&s.e(i));
                s.check(
                    4,
                    format!("psi_{j} e({})", seq_string(n, i)),
                    lhs,
                    WElem::zero(n),
                );
            }
        }
    }
    // (5) distant crossings commute
    for &i in &seqs {
        for j in 1..=n {
            for l in 1..=n {
                if j.abs_diff(l) > 1 {
                    let lhs = cross_all::<F>(n, j).mul(&cross_all(n, l)).mul(&s.e(i));
                    let rhs = cross_all::<F>(n, l).mul(&cross_all(n, j)).mul(&s.e(i));
                    s.check(
                        5,
                        format!("psi_{j} psi_{l} e({})", seq_string(n, i)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    // (6) distant dots slide through crossings
    for &i in &seqs {
        for j in 1..=n {
            for l in 1..=npos {
                if j.abs_diff(l) > 1 {
                    let lhs = cross::<F>(n, j, i).mul(&dot(n, l, i));
                    let rhs = dot::<F>(n, l, swap_index(i, j)).mul(&cross(n, j, i));
                    s.check(
                        6,
                        format!("psi_{j} y_{l} e({})", seq_string(n, i)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    // (7) dots commute
    for &i in &seqs {
        for j in 1..=npos {
            for l in 1..=npos {
                let lhs = dot_all::<F>(n, j).mul(&dot_all(n, l)).mul(&s.e(i));
                let rhs = dot_all::<F>(n, l).mul(&dot_all(n, j)).mul(&s.e(i));
                s.check(7, format!("y_{j} y_{l} e({})", seq_string(n, i)), lhs, rhs);
            }
        }
    }
    // (8) psi_j y_j e(i) - y_{j+1} psi_j e(i) = delta e(i)
    // (9) y_j psi_j e(i) - psi_j y_{j+1} e(i) = delta e(i)
    for &i in &seqs {
        for j in 1..=n {
            let delta = if both_black(i, j) {
                s.e(i)
            } else {
                WElem::zero(n)
            };
            let t = swap_index(i, j);
            let lhs8 = cross::<F>(n, j, i)
                .mul(&dot(n, j, i))
                .sub(&dot(n, j + 1, t).mul(&cross(n, j, i)));
            s.check(
                8,
                format!("j={j} e({})", seq_string(n, i)),
                lhs8,
                delta.clone(),
            );
            let lhs9 = dot::<F>(n, j, t)
                .mul(&cross(n, j, i))
                .sub(&cross(n, j, i).mul(&dot(n, j + 1, i)));
            s.check(9, format!("j={j} e({})", seq_string(n, i)), lhs9, delta);
        }
    }
    // (10) psi_j^2 e(i)
    for &i in &seqs {
        for j in 1..=n {
            let lhs = cross_all::<F>(n, j).mul(&cross_all(n, j)).mul(&s.e(i));
            let same = red_label(i, j).is_some() == red_label(i, j + 1).is_some();
            let rhs = if same {
                WElem::zero(n)
            } else {
                let sj = if red_label(i, j).is_some() {
                    F::one().neg()
                } else {
                    F::one()
                };
                let sj1 = if red_label(i, j + 1).is_some() {
                    F::one().neg()
                } else {
                    F::one()
                };
                dot::<F>(n, j, i)
                    .scale(&sj)
                    .add(&dot::<F>(n, j + 1, i).scale(&sj1))
            };
            s.check(10, format!("psi_{j}^2 e({})", seq_string(n, i)), lhs, rhs);
        }
    }
    // (11) braid relation; the correction needs the pattern b r b
    for &i in &seqs {
        for j in 1..n {
            let a = cross_all::<F>(n, j);
            let b = cross_all::<F>(n, j + 1);
            let lhs = a.mul(&b).mul(&a).sub(&b.mul(&a).mul(&b)).mul(&s.e(i));
            s.check(
                11,
                format!("j={j} e({})", seq_string(n, i)),
                lhs,
                WElem::zero(n),
            );
        }
    }
    // (12) cyclotomic: the black strand in first position
    let e1 = s.e(1);
    s.check(
        12,
        format!("e({})", seq_string(n, 1)),
        e1.clone(),
        WElem::zero(n),
    );
    for j in 1..=npos {
        let lhs = e1.mul(&dot_all(n, j)).add(&dot_all::<F>(n, j).mul(&e1));
        s.check(
            12,
            format!("e({}) y_{j}", seq_string(n, 1)),
            lhs,
            WElem::zero(n),
        );
    }
    for j in 1..=n {
        let lhs = e1.mul(&cross_all(n, j)).add(&cross_all::<F>(n, j).mul(&e1));
        s.check(
            12,
            format!("e({}) psi_{j}", seq_string(n, 1)),
            lhs,
            WElem::zero(n),
        );
    }
    s.report
}

/// Degrees of generators: black dot 2, red dot 2, mixed crossing 1.
pub fn generator_degrees<F: Field>(n: usize) -> Vec<(String, Option<i64>)> {
    let mut out = Vec::new();
    for i in 2..=n + 1 {
        for j in 1..=n + 1 {
            out.push((
                format!("y_{j} e({})", seq_string(n, i)),
                dot::<F>(n, j, i).degree(),
            ));
        }
        for j in 1..=n {
            let c = cross::<F>(n, j, i);
            if !c.is_zero() {
                out.push((format!("psi_{j} e({})", seq_string(n, i)), c.degree()));
            }
        }
    }
    out
}
