//! The length-two projective bimodule resolution of `A_n^!` and the Hochschild
//! cohomology computed from it.
//!
//! Terms, with generators `(i) (x) (j)` of `A(i) (x) (j)A` placed in degree `s`:
//!
//! * `P_0 = (+)_{i=1}^{n} A(i) (x) (i)A`,
//! * `P_1 = (+)_{i=2}^{n} A(i) (x) (i-1)A <1>  (+)  A(i-1) (x) (i)A <1>`,
//! * `P_2 = (+)_{i=1}^{n-1} A(i) (x) (i)A <2>`,
//!
//! with `f_1`, `f_2` given on generators and the multiplication map `f_0: P_0 -> A`.
//! A cochain of internal degree `t` sends a generator of degree `s` to an element of
//! path length `s + t`.

use std::collections::{BTreeMap, HashMap};

use super::pathalg::PathAlg;
use crate::exactalg::Field;
use crate::gradedla::{rank_of, sparse_axpy, GradedMap, GradedSpace, Matrix, SparseVec};

/// Generator `(left) (x) (right)` of a free bimodule, in degree `shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gen {
    pub left: usize,
    pub right: usize,
    pub shift: usize,
}

/// A free bimodule `(+)_g A(left_g) (x) (right_g)A <shift_g>` with its basis `l (x) r`.
#[derive(Clone, Debug)]
pub struct FreeTerm {
    pub gens: Vec<Gen>,
    pub elems: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
    by_degree: BTreeMap<usize, Vec<usize>>,
}

impl FreeTerm {
    pub fn new<F: Field>(alg: &PathAlg<F>, gens: Vec<Gen>) -> Self {
        let mut elems = Vec::new();
        let mut index = HashMap::new();
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (g, gen) in gens.iter().enumerate() {
            for (l, pl) in alg.basis().iter().enumerate() {
                if pl.src != gen.left {
                    continue;
                }
                for (r, pr) in alg.basis().iter().enumerate() {
                    if pr.tgt != gen.right {
                        continue;
                    }
                    let d = pl.deg + pr.deg + gen.shift;
                    index.insert((g, l, r), elems.len());
                    by_degree.entry(d).or_default().push(elems.len());
                    elems.push((g, l, r));
                }
            }
        }
        FreeTerm {
            gens,
            elems,
            index,
            by_degree,
        }
    }

    pub fn dim(&self, d: usize) -> usize {
        self.by_degree.get(&d).map_or(0, |v| v.len())
    }

    pub fn degree_elems(&self, d: usize) -> &[usize] {
        self.by_degree.get(&d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.keys().next_back().copied().unwrap_or(0)
    }

    /// Graded space with labels `g:l(x)r`.
    pub fn space<F: Field>(&self, alg: &PathAlg<F>, cap: i64) -> GradedSpace {
        let labelled = self.by_degree.iter().flat_map(|(&d, ids)| {
            ids.iter().map(move |&k| {
                let (g, l, r) = self.elems[k];
                (
                    d as i64,
                    format!(
                        "{g}:{}(x){}",
                        alg.basis()[l].label(),
                        alg.basis()[r].label()
                    ),
                )
            })
        });
        GradedSpace::from_labels(cap, labelled.collect::<Vec<_>>()).expect("degrees within cap")
    }

    /// Position of `l (x) r` in generator `g` within its degree.
    fn position_in_degree(&self, k: usize, d: usize) -> usize {
        self.degree_elems(d)
            .binary_search(&k)
            .expect("element of this degree")
    }
}

/// A generator image: `sum c * l (x) r` in generator `g` of the target term.
pub type GenImage<F> = Vec<(F, usize, usize, usize)>;

/// A bimodule map between free terms, given on generators.
#[derive(Clone, Debug)]
pub struct FreeMap<F: Field> {
    pub images: Vec<GenImage<F>>,
}

impl<F: Field> FreeMap<F> {
    /// Image of the basis element `l (x) r` of generator `g`.
    pub fn apply_elem(
        &self,
        alg: &PathAlg<F>,
        target: &FreeTerm,
        g: usize,
        l: usize,
        r: usize,
    ) -> SparseVec<F> {
        let mut out = Vec::new();
        for (c, g2, l2, r2) in &self.images[g] {
            let left = alg.mul_basis(l, *l2);
            let right = alg.mul_basis(*r2, r);
            for (a, ca) in left {
                for (b, cb) in right {
                    let k = target.index[&(*g2, *a, *b)];
                    out = sparse_axpy(&out, &c.mul(&ca.mul(cb)), &vec![(k, F::one())]);
                }
            }
        }
        out
    }
}

/// The resolution `P_2 -> P_1 -> P_0 -> A_n^!`.
#[derive(Clone)]
pub struct BimodResolution<F: Field> {
    pub alg: PathAlg<F>,
    pub terms: [FreeTerm; 3],
    pub f1: FreeMap<F>,
    pub f2: FreeMap<F>,
}

fn unit_image<F: Field>(c: i64, g: usize, l: usize, r: usize) -> (F, usize, usize, usize) {
    (F::from_i64(c), g, l, r)
}

impl<F: Field> BimodResolution<F> {
    pub fn new(n: usize) -> Self {
        let alg = PathAlg::<F>::build(n);
        let p0 = FreeTerm::new(
            &alg,
            (1..=n)
                .map(|i| Gen {
                    left: i,
                    right: i,
                    shift: 0,
                })
                .collect(),
        );
        let mut g1 = Vec::new();
        for i in 2..=n {
            g1.push(Gen {
                left: i,
                right: i - 1,
                shift: 1,
            });
            g1.push(Gen {
                left: i - 1,
                right: i,
                shift: 1,
            });
        }
        let p1 = FreeTerm::new(&alg, g1);
        let p2 = FreeTerm::new(
            &alg,
            (1..n)
                .map(|i| Gen {
                    left: i,
                    right: i,
                    shift: 2,
                })
                .collect(),
        );
        let v = |i: usize| alg.vertex(i);
        let arr = |to: usize, from: usize| alg.arrow(to, from).expect("arrow of the quiver");
        // P_0 generator (i)(x)(i) has index i-1; P_1 generators (i)(x)(i-1) and (i-1)(x)(i)
        // have indices 2(i-2) and 2(i-2)+1.
        let plus = |i: usize| 2 * (i - 2);
        let minus = |i: usize| 2 * (i - 2) + 1;
        let mut f1 = Vec::new();
        for i in 2..=n {
            f1.push(vec![
                unit_image(1, i - 2, arr(i, i - 1), v(i - 1)),
                unit_image(-1, i - 1, v(i), arr(i, i - 1)),
            ]);
            f1.push(vec![
                unit_image(1, i - 1, arr(i - 1, i), v(i)),
                unit_image(-1, i - 2, v(i - 1), arr(i - 1, i)),
            ]);
        }
        let mut f2 = Vec::new();
        for i in 1..n {
            let mut img = vec![
                unit_image(1, plus(i + 1), arr(i, i + 1), v(i)),
                unit_image(1, minus(i + 1), v(i), arr(i + 1, i)),
            ];
            if i >= 2 {
                img.push(unit_image(-1, plus(i), v(i), arr(i - 1, i)));
                img.push(unit_image(-1, minus(i), arr(i, i - 1), v(i)));
            }
            f2.push(img);
        }
        BimodResolution {
            alg,
            terms: [p0, p1, p2],
            f1: FreeMap { images: f1 },
            f2: FreeMap { images: f2 },
        }
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    fn map_for(&self, k: usize) -> &FreeMap<F> {
        if k == 1 {
            &self.f1
        } else {
            &self.f2
        }
    }

    /// Dense block of `f_k: P_k -> P_{k-1}` in degree `d` (`k = 1, 2`).
    pub fn block(&self, k: usize, d: usize) -> Matrix<F> {
        let (src, tgt) = (&self.terms[k], &self.terms[k - 1]);
        let mut m = Matrix::zeros(tgt.dim(d), src.dim(d));
        for (col, &e) in src.degree_elems(d).iter().enumerate() {
            let (g, l, r) = src.elems[e];
            for (t, c) in self.map_for(k).apply_elem(&self.alg, tgt, g, l, r) {
                m.set(tgt.position_in_degree(t, d), col, c);
            }
        }
        m
    }

    /// Dense block of the multiplication map `f_0: P_0 -> A` in degree `d`.
    pub fn augmentation_block(&self, d: usize) -> Matrix<F> {
        let src = &self.terms[0];
        let tgt = self.alg.degree_basis(d);
        let mut m = Matrix::zeros(tgt.len(), src.dim(d));
        for (col, &e) in src.degree_elems(d).iter().enumerate() {
            let (_, l, r) = src.elems[e];
            for (b, c) in self.alg.mul_basis(l, r) {
                let row = tgt.iter().position(|x| x == b).expect("same degree");
                m.set(row, col, c.clone());
            }
        }
        m
    }

    /// `f_k` as a graded map of degree zero.
    pub fn graded_map(&self, k: usize) -> GradedMap<F> {
        let cap = self.max_degree() as i64;
        let src = self.terms[k].space(&self.alg, cap);
        let tgt = self.terms[k - 1].space(&self.alg, cap);
        let mut map = GradedMap::new(src, tgt, 0);
        for d in 0..=self.max_degree() {
            map.set_block(d as i64, self.block(k, d))
                .expect("block shape");
        }
        map
    }

    pub fn max_degree(&self) -> usize {
        self.terms.iter().map(|t| t.max_degree()).max().unwrap_or(0)
    }

    /// Verify `f_0 f_1 = 0`, `f_1 f_2 = 0` and exactness of `0 -> P_2 -> P_1 -> P_0 -> A -> 0`
    /// in every degree.
    pub fn exactness(&self) -> ExactnessReport {
        let mut rep = ExactnessReport {
            degrees_checked: 0,
            failures: Vec::new(),
        };
        for d in 0..=self.max_degree() {
            let a0 = self.augmentation_block(d);
            let b1 = self.block(1, d);
            let b2 = self.block(2, d);
            let (r0, r1, r2) = (a0.rank(), b1.rank(), b2.rank());
            if !a0.mul(&b1).is_zero() {
                rep.failures.push(format!("f0 f1 != 0 in degree {d}"));
            }
            if !b1.mul(&b2).is_zero() {
                rep.failures.push(format!("f1 f2 != 0 in degree {d}"));
            }
            if r0 != self.alg.dim(d) {
                rep.failures.push(format!("f0 not onto in degree {d}"));
            }
            if self.terms[0].dim(d) - r0 != r1 {
                rep.failures.push(format!("not exact at P_0 in degree {d}"));
            }
            if self.terms[1].dim(d) - r1 != r2 {
                rep.failures.push(format!("not exact at P_1 in degree {d}"));
            }
            if r2 != self.terms[2].dim(d) {
                rep.failures.push(format!("f2 not injective in degree {d}"));
            }
            rep.degrees_checked += 1;
        }
        rep
    }

    /// Basis of the cochains on `P_k` of internal degree `t`: pairs (generator, path basis
    /// element in `(left)A(right)` of length `shift + t`).
    pub fn cochain_basis(&self, k: usize, t: i64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (g, gen) in self.terms[k].gens.iter().enumerate() {
            let d = gen.shift as i64 + t;
            if d < 0 {
                continue;
            }
            for &b in self.alg.degree_basis(d as usize) {
                let pb = &self.alg.basis()[b];
                if pb.tgt == gen.left && pb.src == gen.right {
                    out.push((g, b));
                }
            }
        }
        out
    }

    /// Columns of the coboundary `C^k_t -> C^{k+1}_t` in the basis of `cochain_basis(k + 1, t)`.
    pub fn coboundary_columns(&self, k: usize, t: i64) -> Vec<SparseVec<F>> {
        let src = self.cochain_basis(k, t);
        if k >= 2 {
            return vec![Vec::new(); src.len()];
        }
        let tgt = self.cochain_basis(k + 1, t);
        let pos: HashMap<(usize, usize), usize> =
            tgt.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        let f = self.map_for(k + 1);
        src.iter()
            .map(|&(g, m)| {
                let mut col = Vec::new();
                for (g2, img) in f.images.iter().enumerate() {
                    for (c, h, l, r) in img {
                        if *h != g {
                            continue;
                        }
                        let lm = self.alg.mul_basis(*l, m);
                        for (a, ca) in lm {
                            for (b, cb) in self.alg.mul_basis(*a, *r) {
                                let k2 = pos[&(g2, *b)];
                                col = sparse_axpy(&col, &c.mul(&ca.mul(cb)), &vec![(k2, F::one())]);
                            }
                        }
                    }
                }
                col
            })
            .collect()
    }

    /// `dim HH^{k,t}` for `k = 0, 1, 2`.
    pub fn hh_dim(&self, k: usize, t: i64) -> usize {
        let dim = self.cochain_basis(k, t).len();
        let rank_out = if k < 2 {
            rank_of(&self.coboundary_columns(k, t))
        } else {
            0
        };
        let rank_in = if k > 0 {
            rank_of(&self.coboundary_columns(k - 1, t))
        } else {
            0
        };
        dim - rank_out - rank_in
    }

    /// The table `HH^{k,t}` for `k = 0..=max_k` over internal degrees `t` in `[-2, top]`.
    pub fn hochschild(&self, max_k: usize) -> HhTable {
        let top = self.alg.top_degree() as i64;
        let mut entries = BTreeMap::new();
        for k in 0..=max_k {
            for t in -2..=top {
                let d = if k <= 2 { self.hh_dim(k, t) } else { 0 };
                if d > 0 {
                    entries.insert((k, t), d);
                }
            }
        }
        HhTable {
            n: self.n(),
            max_k,
            t_range: (-2, top),
            entries,
        }
    }
}

/// Outcome of the exactness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub degrees_checked: usize,
    pub failures: Vec<String>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Nonzero dimensions `HH^{k,t}` keyed by cohomological degree `k` and internal degree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HhTable {
    pub n: usize,
    pub max_k: usize,
    pub t_range: (i64, i64),
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl HhTable {
    pub fn dim(&self, k: usize, t: i64) -> usize {
        self.entries.get(&(k, t)).copied().unwrap_or(0)
    }

    /// Label used for `HH^{k,t}` in the stated table: the internal degree for `k <= 1`
    /// and the length of the value on the generators (`t + 2`) for `k = 2`.
    pub fn path_length_label(k: usize, t: i64) -> i64 {
        if k == 2 {
            t + 2
        } else {
            t
        }
    }

    /// `dim HH^{k,j}` under [`HhTable::path_length_label`].
    pub fn labelled_dim(&self, k: usize, j: i64) -> usize {
        let t = if k == 2 { j - 2 } else { j };
        self.dim(k, t)
    }

    /// Total dimension of `HH^k`.
    pub fn total(&self, k: usize) -> usize {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == k)
            .map(|(_, d)| d)
            .sum()
    }
}

/// Compute the Hochschild table of `A_n^!` up to cohomological degree `max_k`.
pub fn hochschild<F: Field>(n: usize, max_k: usize) -> HhTable {
    BimodResolution::<F>::new(n).hochschild(max_k)
}
