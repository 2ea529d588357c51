//! Images of the Hecke category relations as equalities of bimodule maps.
//!
//! A diagram is read bottom to top; a word `[i, j, ...]` stands for
//! `W_i (x) W_j (x) ...`. The cup is `split . iota`, the cap is `epsilon . merge`,
//! and the dot in the region between the two legs of a trivalent vertex is the
//! right action of `x_i` on the first factor.

use super::bimod::Bimod;
use super::maps::{BimodMap, ModElem};
use super::named::{epsilon, iota, merge, six_valent, split, x_map};
use crate::exactalg::Field;
use crate::webster::xdot;
use crate::{Error, Result};

/// Outcome of one relation instance.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub n: usize,
    pub colors: Vec<usize>,
    pub passed: bool,
}

/// The two terms of the six-valent relation evaluated on one generator of
/// `W_i (x) W_j (x) W_i` whose black strand passes through the middle factor.
#[derive(Clone, Debug)]
pub struct InterferenceCheck {
    pub label: String,
    pub first_term: String,
    pub second_term: String,
    pub difference_is_identity: bool,
}

/// The maps of the Hecke category needed for a relation, built on demand.
pub struct Hecke<F: Field> {
    n: usize,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Hecke<F> {
    pub fn new(n: usize) -> Self {
        Hecke {
            n,
            _field: std::marker::PhantomData,
        }
    }

    pub fn word(&self, w: &[usize]) -> Bimod {
        Bimod::word(self.n, w)
    }

    pub fn id(&self, w: &[usize]) -> BimodMap<F> {
        BimodMap::identity(&self.word(w))
    }

    /// `id_left (x) f (x) id_right` between the flat words, for `f: word(a) -> word(b)`.
    pub fn whisker(&self, left: &[usize], f: &BimodMap<F>, right: &[usize]) -> Result<BimodMap<F>> {
        let mut g = f.clone();
        if !left.is_empty() {
            g = g.id_tensor(&self.word(left));
        }
        if !right.is_empty() {
            g = g.tensor_id(&self.word(right));
        }
        let src = flat(self.n, left, &f.source, right);
        let tgt = flat(self.n, left, &f.target, right);
        let into = BimodMap::canonical(&src, &g.source)?;
        let out = BimodMap::canonical(&g.target, &tgt)?;
        Ok(into.then(&g).then(&out))
    }

    /// Composite of maps listed bottom to top.
    pub fn chain(&self, maps: &[BimodMap<F>]) -> BimodMap<F> {
        let mut it = maps.iter();
        let first = it.next().expect("nonempty composite").clone();
        it.fold(first, |acc, m| acc.then(m))
    }

    pub fn unit(&self, i: usize) -> Result<BimodMap<F>> {
        iota(self.n, i)
    }

    pub fn counit(&self, i: usize) -> Result<BimodMap<F>> {
        epsilon(self.n, i)
    }

    pub fn split(&self, i: usize) -> Result<BimodMap<F>> {
        split(self.n, i)
    }

    pub fn merge(&self, i: usize) -> Result<BimodMap<F>> {
        merge(self.n, i)
    }

    /// `W -> W_i W_i`.
    pub fn cup(&self, i: usize) -> Result<BimodMap<F>> {
        let s = self.split(i)?;
        Ok(self.unit(i)?.then(&s))
    }

    /// `W_i W_i -> W`.
    pub fn cap(&self, i: usize) -> Result<BimodMap<F>> {
        let e = self.counit(i)?;
        Ok(self.merge(i)?.then(&e))
    }

    /// `W_i W_i -> W_i W_i`: the dot `x_i` between the two strands.
    pub fn middle_dot(&self, i: usize) -> BimodMap<F> {
        BimodMap::right_x(&self.word(&[i]), i).tensor_id(&self.word(&[i]))
    }

    pub fn crossing(&self, i: usize, j: usize) -> Result<BimodMap<F>> {
        x_map(self.n, i, j)
    }

    pub fn six_valent(&self, i: usize, j: usize) -> Result<BimodMap<F>> {
        six_valent(self.n, i, j)
    }

    /// The composite `(id (x) iota_j (x) id) . split_i . merge_i . (id (x) epsilon_j (x) id)`
    /// on `W_i W_j W_i`.
    pub fn broken_six_valent(&self, i: usize, j: usize) -> Result<BimodMap<F>> {
        let down = self.whisker(&[i], &self.counit(j)?, &[i])?;
        let up = self.whisker(&[i], &self.unit(j)?, &[i])?;
        Ok(self.chain(&[down, self.merge(i)?, self.split(i)?, up]))
    }
}

fn flat(n: usize, left: &[usize], middle: &Bimod, right: &[usize]) -> Bimod {
    let inner = word_of(middle);
    let mut w = left.to_vec();
    w.extend(inner);
    w.extend_from_slice(right);
    Bimod::word(n, &w)
}

fn word_of(m: &Bimod) -> Vec<usize> {
    let name = m.name();
    if name == "W" {
        return Vec::new();
    }
    name.split('W')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().expect("word bimodule name"))
        .collect()
}

fn record(out: &mut Vec<RelationCheck>, name: &str, n: usize, colors: &[usize], passed: bool) {
    out.push(RelationCheck {
        name: name.to_string(),
        n,
        colors: colors.to_vec(),
        passed,
    });
}

/// One-color relations for the color `i`: polynomial slides, associativity,
/// the zigzag, counit and unit laws, Frobenius, the broken strand, the barbell
/// and the needle relations.
pub fn one_color<F: Field>(n: usize, i: usize) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let mut out = Vec::new();
    let wi = h.word(&[i]);
    let x = |l: usize| {
        (
            BimodMap::<F>::left_x(&wi, l),
            BimodMap::<F>::right_x(&wi, l),
        )
    };

    let (li, ri) = x(i);
    let (lj, rj) = x(i + 1);
    record(
        &mut out,
        "slide x_i + x_{i+1}",
        n,
        &[i],
        li.add(&lj).equals(&ri.add(&rj)),
    );
    record(
        &mut out,
        "slide x_i x_{i+1}",
        n,
        &[i],
        li.then(&lj).equals(&ri.then(&rj)),
    );
    let mut distant = true;
    for l in (1..=n).filter(|&l| l != i && l != i + 1) {
        let (a, b) = x(l);
        distant &= a.equals(&b);
    }
    record(&mut out, "slide x_j, j != i, i+1", n, &[i], distant);

    let s = h.split(i)?;
    let m = h.merge(i)?;
    let left_assoc = s.then(&h.whisker(&[], &s, &[i])?);
    let right_assoc = s.then(&h.whisker(&[i], &s, &[])?);
    record(
        &mut out,
        "associativity of split",
        n,
        &[i],
        left_assoc.equals(&right_assoc),
    );

    let id = h.id(&[i]);
    let cup = h.cup(i)?;
    let cap = h.cap(i)?;
    let zig = h
        .whisker(&[], &cup, &[i])?
        .then(&h.whisker(&[i], &cap, &[])?);
    let zag = h
        .whisker(&[i], &cup, &[])?
        .then(&h.whisker(&[], &cap, &[i])?);
    record(
        &mut out,
        "zigzag",
        n,
        &[i],
        zig.equals(&id) && zag.equals(&id),
    );

    let e = h.counit(i)?;
    let counit_l = s.then(&h.whisker(&[], &e, &[i])?);
    let counit_r = s.then(&h.whisker(&[i], &e, &[])?);
    record(
        &mut out,
        "counit of split",
        n,
        &[i],
        counit_l.equals(&id) && counit_r.equals(&id),
    );

    let frob_l = h.whisker(&[], &cup, &[i])?.then(&h.whisker(&[i], &m, &[])?);
    let frob_r = h.whisker(&[i], &cup, &[])?.then(&h.whisker(&[], &m, &[i])?);
    record(
        &mut out,
        "Frobenius",
        n,
        &[i],
        frob_l.equals(&s) && frob_r.equals(&s),
    );

    let u = h.unit(i)?;
    let unit_r = h.whisker(&[i], &u, &[])?.then(&m);
    let unit_l = h.whisker(&[], &u, &[i])?.then(&m);
    record(
        &mut out,
        "unit of merge",
        n,
        &[i],
        unit_r.equals(&id) && unit_l.equals(&id),
    );

    let broken = e.then(&u);
    record(
        &mut out,
        "broken strand",
        n,
        &[i],
        broken.equals(&li.sub(&rj)),
    );

    let barbell = u.then(&e);
    let w = Bimod::regular(n);
    let diff = BimodMap::left_central(&w, &xdot(n, i).sub(&xdot(n, i + 1)), 2);
    record(&mut out, "barbell", n, &[i], barbell.equals(&diff));

    let needle = s.then(&m).then(&e);
    let dotted = s.then(&h.middle_dot(i)).then(&m).then(&e);
    record(
        &mut out,
        "needle",
        n,
        &[i],
        needle.is_zero() && dotted.equals(&e),
    );
    Ok(out)
}

/// Two adjacent colors: the six-valent relation
/// `id = (six-valent)^2 - broken six-valent` on `W_i W_j W_i`.
pub fn adjacent<F: Field>(n: usize, i: usize, j: usize) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let lhs = h.id(&[i, j, i]);
    let rhs = h
        .six_valent(i, j)?
        .then(&h.six_valent(j, i)?)
        .sub(&h.broken_six_valent(i, j)?);
    let mut out = Vec::new();
    record(&mut out, "six-valent square", n, &[i, j], lhs.equals(&rhs));
    Ok(out)
}

/// The six-valent relation evaluated on the generators of `W_i W_j W_i` whose black
/// strand passes through the middle factor, `j = i + 1`.
pub fn black_interference<F: Field>(n: usize, i: usize) -> Result<Vec<InterferenceCheck>> {
    let j = i + 1;
    let h = Hecke::<F>::new(n);
    let first = h.six_valent(i, j)?.then(&h.six_valent(j, i)?);
    let second = h.broken_six_valent(i, j)?;
    let m = h.word(&[i, j, i]);
    let b = i + 2;
    let mut out = Vec::new();
    for tail in [format!("f{b}"), format!("f{b}'")] {
        let label = format!("u|d|{tail}");
        let g = m
            .gen_index(&label)
            .ok_or_else(|| Error::Index(format!("generator {label} of {m}")))?;
        let v1 = first.value(g);
        let v2 = second.value(g);
        let mut ident = ModElem::new();
        ident.insert(g, crate::webster::WElem::idem(n, m.gens()[g].left));
        let diff = first.sub(&second).value(g);
        out.push(InterferenceCheck {
            label,
            first_term: show(&m, &v1),
            second_term: show(&m, &v2),
            difference_is_identity: super::maps::mod_eq(&diff, &ident),
        });
    }
    Ok(out)
}

/// Two distant colors: the crossing is an involution, it commutes with dots and
/// trivalent vertices, and the rotated crossing is again a crossing.
pub fn distant<F: Field>(n: usize, i: usize, j: usize) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let mut out = Vec::new();
    let xij = h.crossing(i, j)?;
    let xji = h.crossing(j, i)?;

    let rot_left = h.chain(&[
        h.whisker(&[j, i], &h.cup(j)?, &[])?,
        h.whisker(&[j], &xij, &[j])?,
        h.whisker(&[], &h.cap(j)?, &[i, j])?,
    ]);
    let rot_right = h.chain(&[
        h.whisker(&[], &h.cup(i)?, &[j, i])?,
        h.whisker(&[i], &xij, &[i])?,
        h.whisker(&[i, j], &h.cap(i)?, &[])?,
    ]);
    record(
        &mut out,
        "rotated crossing",
        n,
        &[i, j],
        rot_left.equals(&xji) && rot_right.equals(&xji),
    );

    record(
        &mut out,
        "crossing squared",
        n,
        &[i, j],
        xij.then(&xji).equals(&h.id(&[i, j])),
    );

    let through = xij.then(&h.whisker(&[j], &h.counit(i)?, &[])?);
    let direct = h.whisker(&[], &h.counit(i)?, &[j])?;
    record(
        &mut out,
        "dot through crossing",
        n,
        &[i, j],
        through.equals(&direct),
    );

    let lhs = h.chain(&[
        h.whisker(&[], &h.split(i)?, &[j])?,
        h.whisker(&[i], &xij, &[])?,
        h.whisker(&[], &xij, &[i])?,
    ]);
    let rhs = xij.then(&h.whisker(&[j], &h.split(i)?, &[])?);
    record(
        &mut out,
        "trivalent through crossing",
        n,
        &[i, j],
        lhs.equals(&rhs),
    );
    Ok(out)
}

/// `|i - j| = 1` and `k` distant from both: the strand `k` passes through the
/// six-valent vertex.
pub fn six_valent_slide<F: Field>(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let lhs = h.chain(&[
        h.whisker(&[], &h.six_valent(i, j)?, &[k])?,
        h.whisker(&[j, i], &h.crossing(j, k)?, &[])?,
        h.whisker(&[j], &h.crossing(i, k)?, &[j])?,
        h.whisker(&[], &h.crossing(j, k)?, &[i, j])?,
    ]);
    let rhs = h.chain(&[
        h.whisker(&[i, j], &h.crossing(i, k)?, &[])?,
        h.whisker(&[i], &h.crossing(j, k)?, &[i])?,
        h.whisker(&[], &h.crossing(i, k)?, &[j, i])?,
        h.whisker(&[k], &h.six_valent(i, j)?, &[])?,
    ]);
    let mut out = Vec::new();
    record(
        &mut out,
        "strand through six-valent vertex",
        n,
        &[i, j, k],
        lhs.equals(&rhs),
    );
    Ok(out)
}

/// Three pairwise distant colors: the two ways of reversing `i j k` by crossings agree.
pub fn three_distant<F: Field>(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let lhs = h.chain(&[
        h.whisker(&[], &h.crossing(i, j)?, &[k])?,
        h.whisker(&[j], &h.crossing(i, k)?, &[])?,
        h.whisker(&[], &h.crossing(j, k)?, &[i])?,
    ]);
    let rhs = h.chain(&[
        h.whisker(&[i], &h.crossing(j, k)?, &[])?,
        h.whisker(&[], &h.crossing(i, k)?, &[j])?,
        h.whisker(&[k], &h.crossing(i, j)?, &[])?,
    ]);
    let mut out = Vec::new();
    record(
        &mut out,
        "three distant crossings",
        n,
        &[i, j, k],
        lhs.equals(&rhs),
    );
    Ok(out)
}

fn show<F: Field>(m: &Bimod, x: &ModElem<F>) -> String {
    if x.is_empty() {
        return "0".to_string();
    }
    x.iter()
        .map(|(g, c)| format!("({c}) {}", m.gens()[*g].label))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The relation suite: one-color relations for every color, the six-valent
/// relation for every adjacent pair, and, when `n` admits them, the distant
/// relations, a strand through a six-valent vertex, three distant crossings and
/// the agreement of braid-move paths for three consecutive colors.
pub fn relation_suite<F: Field>(n: usize) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    for i in 1..n {
        out.extend(one_color::<F>(n, i)?);
    }
    for i in 1..n.saturating_sub(1) {
        out.extend(adjacent::<F>(n, i, i + 1)?);
        out.extend(adjacent::<F>(n, i + 1, i)?);
    }
    for i in 1..n {
        for j in (i + 2)..n {
            out.extend(distant::<F>(n, i, j)?);
            out.extend(distant::<F>(n, j, i)?);
        }
    }
    if n >= 4 {
        out.extend(move_paths_agree::<F>(
            n,
            &[1, 2, 1, 3, 2, 1],
            &[3, 2, 3, 1, 2, 3],
        )?);
        out.extend(move_paths_agree::<F>(
            n,
            &[3, 1, 2, 1, 3, 2],
            &[2, 1, 3, 2, 3, 1],
        )?);
    }
    if n >= 5 {
        out.extend(six_valent_slide::<F>(n, 1, 2, 4)?);
    }
    if n >= 6 {
        out.extend(three_distant::<F>(n, 1, 3, 5)?);
    }
    Ok(out)
}

/// A braid move on a word: a six-valent vertex on `i j i` or a crossing on `i k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub at: usize,
    pub len: usize,
}

fn apply_move(w: &[usize], m: &Move) -> Vec<usize> {
    let mut out = w.to_vec();
    if m.len == 3 {
        let (a, b) = (w[m.at], w[m.at + 1]);
        out[m.at..m.at + 3].copy_from_slice(&[b, a, b]);
    } else {
        out.swap(m.at, m.at + 1);
    }
    out
}

fn moves(w: &[usize]) -> Vec<Move> {
    let mut out = Vec::new();
    for at in 0..w.len().saturating_sub(1) {
        if w[at].abs_diff(w[at + 1]) > 1 {
            out.push(Move { at, len: 2 });
        }
        if at + 2 < w.len() && w[at] == w[at + 2] && w[at].abs_diff(w[at + 1]) == 1 {
            out.push(Move { at, len: 3 });
        }
    }
    out
}

/// All shortest sequences of braid moves from `from` to `to`.
pub fn shortest_move_paths(from: &[usize], to: &[usize]) -> Vec<Vec<Move>> {
    use std::collections::{HashMap, VecDeque};
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::from([(from.to_vec(), 0)]);
    let mut queue = VecDeque::from([from.to_vec()]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for m in moves(&w) {
            let v = apply_move(&w, &m);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    let Some(&total) = dist.get(to) else {
        return Vec::new();
    };
    let mut paths = Vec::new();
    let mut stack = vec![(from.to_vec(), Vec::new())];
    while let Some((w, path)) = stack.pop() {
        if path.len() == total {
            if w == to {
                paths.push(path);
            }
            continue;
        }
        for m in moves(&w) {
            let v = apply_move(&w, &m);
            if dist.get(&v) == Some(&(path.len() + 1)) {
                let mut p: Vec<Move> = path.clone();
                p.push(m);
                stack.push((v, p));
            }
        }
    }
    paths
}

impl<F: Field> Hecke<F> {
    /// The composite of a sequence of braid moves starting at `word`.
    pub fn move_path(&self, word: &[usize], path: &[Move]) -> Result<BimodMap<F>> {
        let mut w = word.to_vec();
        let mut acc = self.id(word);
        for m in path {
            let (l, r) = (&w[..m.at], &w[m.at + m.len..]);
            let f = if m.len == 3 {
                self.six_valent(w[m.at], w[m.at + 1])?
            } else {
                self.crossing(w[m.at], w[m.at + 1])?
            };
            acc = acc.then(&self.whisker(l, &f, r)?);
            w = apply_move(&w, m);
        }
        Ok(acc)
    }
}

/// Every shortest sequence of braid moves between two reduced words gives the same map.
pub fn move_paths_agree<F: Field>(
    n: usize,
    from: &[usize],
    to: &[usize],
) -> Result<Vec<RelationCheck>> {
    let h = Hecke::<F>::new(n);
    let paths = shortest_move_paths(from, to);
    if paths.is_empty() {
        return Err(Error::Invalid(format!(
            "no braid-move path from {from:?} to {to:?}"
        )));
    }
    let first = h.move_path(from, &paths[0])?;
    let mut passed = true;
    for p in &paths[1..] {
        passed &= h.move_path(from, p)?.equals(&first);
    }
    let mut out = Vec::new();
    record(
        &mut out,
        &format!("{} shortest braid-move paths agree", paths.len()),
        n,
        from,
        passed,
    );
    Ok(out)
}
