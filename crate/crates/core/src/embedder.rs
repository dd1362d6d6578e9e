//! Degree-and-density conditions for embedding oriented trees, and the
//! greedy embedding that follows their inductive argument.
//!
//! For a tree on `n` vertices the parameters are two positive sequences
//! `w_1..w_{n-1}` and `d_1..d_{n-1}`. Step `k` (placing the `(k+1)`-th tree
//! vertex) uses `w_k` and `d_k`:
//!
//! 1. for every ordered `S = (s_1..s_{k-1})` and `v` outside it, the set `Y`
//!    of neighbours `y` of `v` outside `S` with `dist_{G-v}(y, s_i) <= i` for
//!    some `i` has at most `d_k` elements (radius 1 instead of `i` in plain
//!    mode);
//! 2. every vertex set larger than `w_k` spans more than `(d_k + k - 1) w_k`
//!    edges;
//! 3. `w_1 + ... + w_{n-1} < |V|`.
//!
//! Conditions 1 and 2 are stated for `2 <= k < n`. The induction also uses
//! condition 2 at `k = 1` (it is what guarantees an edge inside any set
//! larger than `w_1`), so reports carry that check separately.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::OrientedTree;
use crate::distance::distance_matrix;
use crate::embedding::{EmbeddingCertificate, Variant};
use crate::error::{ensure_cap, Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;
use crate::par;

/// Isometric embeddings, or the plain (induced, not distance-preserving)
/// variant where every distance test uses radius 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Isometric,
    Plain,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "isometric" => Ok(Mode::Isometric),
            "plain" => Ok(Mode::Plain),
            other => Err(Error::parse(other, "mode must be isometric or plain")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PikhParameters {
    pub n: usize,
    /// `w[k-1]` is `w_k`.
    pub w: Vec<f64>,
    /// `d[k-1]` is `d_k`.
    pub d: Vec<f64>,
    pub mode: Mode,
}

impl PikhParameters {
    pub fn new(n: usize, w: Vec<f64>, d: Vec<f64>, mode: Mode) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("parameters need a tree on at least two vertices"));
        }
        if w.len() != n - 1 || d.len() != n - 1 {
            return Err(Error::invalid(format!(
                "expected {} entries in w and d, got {} and {}",
                n - 1,
                w.len(),
                d.len()
            )));
        }
        if let Some(x) = w.iter().chain(&d).find(|x| !(x.is_finite() && **x > 0.0)) {
            return Err(Error::invalid(format!("parameter {x} is not a positive real")));
        }
        Ok(PikhParameters { n, w, d, mode })
    }

    pub fn w_k(&self, k: usize) -> f64 {
        self.w[k - 1]
    }

    pub fn d_k(&self, k: usize) -> f64 {
        self.d[k - 1]
    }
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite parameter")
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A `(v, S)` pair whose blocked set is too large.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cond1Witness {
    pub v: usize,
    pub s: Vec<usize>,
    pub y: Vec<usize>,
}

/// Vertex cap on the `|V|^k` scan of condition 1.
pub const COND1_WORK_CAP: u64 = 10_000_000;

/// Radius-`r` balls in `G - v`: `balls[s][r]`.
fn balls_without(g: &Graph, v: usize, max_r: usize) -> Vec<Vec<FixedBitSet>> {
    let n = g.order();
    let h = g.without_vertex(v);
    // `without_vertex` relabels; map back to original indices.
    let back: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let mut balls = vec![Vec::new(); n];
    for (i, &s) in back.iter().enumerate() {
        let d = h.bfs(i);
        balls[s] = (0..=max_r)
            .map(|r| {
                let mut b = FixedBitSet::with_capacity(n);
                for (j, dj) in d.iter().enumerate() {
                    if dj.is_some_and(|x| x <= r) {
                        b.insert(back[j]);
                    }
                }
                b
            })
            .collect();
    }
    balls
}

fn blocked_set(
    g: &Graph,
    v: usize,
    s: &[usize],
    balls: &[Vec<FixedBitSet>],
    mode: Mode,
) -> FixedBitSet {
    let n = g.order();
    let mut reach = FixedBitSet::with_capacity(n);
    for (i, &si) in s.iter().enumerate() {
        let r = match mode {
            Mode::Isometric => i + 1,
            Mode::Plain => 1,
        };
        reach.union_with(&balls[si][r.min(balls[si].len() - 1)]);
    }
    reach.intersect_with(g.adjacency(v));
    for &si in s {
        reach.set(si, false);
    }
    reach.set(v, false);
    reach
}

/// Scans every `v` and ordered `(k-1)`-tuple `S` avoiding `v`. The first
/// violation in lexicographic `(v, S)` order is returned.
pub fn check_condition1(g: &Graph, k: usize, d_k: f64, mode: Mode) -> Result<Option<Cond1Witness>> {
    if k < 1 {
        return Err(Error::invalid("condition 1 is indexed from k = 1"));
    }
    let n = g.order();
    let work = (n as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    ensure_cap("condition 1 work |V|^k", work, COND1_WORK_CAP)?;
    let dk = exact(d_k);
    let radius = match mode {
        Mode::Isometric => k.saturating_sub(1).max(1),
        Mode::Plain => 1,
    };
    let dk = &dk;
    par::find_first(
        0..n as u64,
        || (),
        |_, v| {
            let v = v as usize;
            let balls = balls_without(g, v, radius);
            let mut s = Vec::with_capacity(k - 1);
            first_violation(g, v, k - 1, &mut s, &balls, mode, dk)
        },
    )
    .map_or(Ok(None), |w| Ok(Some(w)))
}

fn first_violation(
    g: &Graph,
    v: usize,
    len: usize,
    s: &mut Vec<usize>,
    balls: &[Vec<FixedBitSet>],
    mode: Mode,
    dk: &BigRational,
) -> Option<Cond1Witness> {
    if s.len() == len {
        let y = blocked_set(g, v, s, balls, mode);
        return (int(y.count_ones(..)) > *dk).then(|| Cond1Witness {
            v,
            s: s.clone(),
            y: y.ones().collect(),
        });
    }
    for x in 0..g.order() {
        if x == v || s.contains(&x) {
            continue;
        }
        s.push(x);
        let found = first_violation(g, v, len, s, balls, mode, dk);
        s.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether condition 2 is certified exactly or only probed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exactness {
    Exact,
    /// Random probing with a seeded generator; can only find violations.
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Cond2Outcome {
    Ok,
    Violated { w: Vec<usize>, spanned: usize },
    /// Sampling found no violation; nothing is certified.
    Inconclusive { trials: u64 },
}

impl Cond2Outcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, Cond2Outcome::Violated { .. })
    }
}

/// Vertex cap for exact subset scans.
pub const SUBSET_CAP: usize = 20;

fn spanned(g: &Graph, w: &[usize]) -> usize {
    let mut e = 0;
    for (i, &a) in w.iter().enumerate() {
        for &b in &w[i + 1..] {
            e += g.has_edge(a, b) as usize;
        }
    }
    e
}

/// Smallest number of edges spanned by an `m`-subset, scanning subsets
/// one combination at a time.
pub fn min_edge_span(g: &Graph, m: usize) -> Result<usize> {
    let n = g.order();
    ensure_cap("edge span vertices", n as u64, SUBSET_CAP as u64)?;
    if m > n {
        return Err(Error::invalid(format!("subset size {m} exceeds {n} vertices")));
    }
    let mut idx: Vec<usize> = (0..m).collect();
    let mut best = usize::MAX;
    loop {
        best = best.min(spanned(g, &idx));
        // Next combination in lexicographic order.
        let mut i = m;
        while i > 0 && idx[i - 1] == n - m + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(if m == 0 { 0 } else { best })
}

/// Minimum span per cardinality over all subsets, with the smallest mask
/// attaining each minimum, from one pass over `2^n` masks.
pub fn min_spans_by_size(g: &Graph) -> Result<Vec<(usize, u32)>> {
    let n = g.order();
    ensure_cap("edge span vertices", n as u64, SUBSET_CAP as u64)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut span = vec![0u16; 1 << n];
    let mut best = vec![(usize::MAX, 0u32); n + 1];
    best[0] = (0, 0);
    for mask in 1u32..(1u32 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let s = span[rest as usize] + (adj[low] & rest).count_ones() as u16;
        span[mask as usize] = s;
        let c = mask.count_ones() as usize;
        if (s as usize) < best[c].0 {
            best[c] = (s as usize, mask);
        }
    }
    Ok(best)
}

fn ones(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Checks condition 2 at step `k`. A violation is a set larger than `w_k`
/// spanning at most `(d_k + k - 1) w_k` edges; exact mode reports the
/// smallest violating cardinality with its minimum-span set.
pub fn check_condition2(g: &Graph, k: usize, w_k: f64, d_k: f64, exactness: Exactness) -> Result<Cond2Outcome> {
    if k < 1 {
        return Err(Error::invalid("condition 2 is indexed from k = 1"));
    }
    let n = g.order();
    let wk = exact(w_k);
    let threshold = (exact(d_k) + int(k - 1)) * &wk;
    let violates = |size: usize, span: usize| int(size) > wk && int(span) <= threshold;
    match exactness {
        Exactness::Exact => {
            let best = min_spans_by_size(g)?;
            for (size, &(span, mask)) in best.iter().enumerate() {
                if size > 0 && violates(size, span) {
                    return Ok(Cond2Outcome::Violated {
                        w: ones(mask),
                        spanned: span,
                    });
                }
            }
            Ok(Cond2Outcome::Ok)
        }
        Exactness::Sampled { trials, seed } => {
            // Peeling the highest-degree vertex gives sparse sets cheaply;
            // random subsets cover the rest.
            let mut alive: Vec<usize> = (0..n).collect();
            while !alive.is_empty() {
                let span = spanned(g, &alive);
                if violates(alive.len(), span) {
                    return Ok(Cond2Outcome::Violated { w: alive, spanned: span });
                }
                let (pos, _) = alive
                    .iter()
                    .enumerate()
                    .max_by_key(|&(_, &v)| {
                        let deg = alive.iter().filter(|&&u| g.has_edge(u, v)).count();
                        (deg, std::cmp::Reverse(v))
                    })
                    .expect("nonempty");
                alive.remove(pos);
            }
            let lo = (w_k.floor() as usize + 1).min(n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut verts: Vec<usize> = (0..n).collect();
            for _ in 0..trials {
                if lo > n || n == 0 {
                    break;
                }
                let size = rng.gen_range(lo..=n);
                verts.shuffle(&mut rng);
                let mut w: Vec<usize> = verts[..size].to_vec();
                w.sort_unstable();
                let span = spanned(g, &w);
                if violates(size, span) {
                    return Ok(Cond2Outcome::Violated { w, spanned: span });
                }
            }
            Ok(Cond2Outcome::Inconclusive { trials })
        }
    }
}

/// `w_1 + ... + w_{n-1} < |V|`, compared exactly.
pub fn check_condition3(w: &[f64], n_vertices: usize) -> bool {
    let sum = w.iter().fold(int(0), |acc, &x| acc + exact(x));
    sum < int(n_vertices)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub cond1_ok: bool,
    pub cond2_ok: bool,
    pub cond3_ok: bool,
    /// Condition 2 at `k = 1`, which the induction needs as its base.
    pub cond2_base_ok: bool,
    pub cond1_witness: Option<(usize, Cond1Witness)>,
    pub cond2_witness: Option<(usize, Cond2Outcome)>,
    /// Set when sampled mode found nothing for some `k`; nothing is certified then.
    pub cond2_inconclusive: bool,
    pub w_sum: f64,
}

impl ConditionReport {
    /// All hypotheses hold, the base case included.
    pub fn all_ok(&self) -> bool {
        self.cond1_ok && self.cond2_ok && self.cond3_ok && self.cond2_base_ok && !self.cond2_inconclusive
    }
}

/// Evaluates every condition for `params` on `g`.
pub fn pikh_check(g: &Graph, params: &PikhParameters, exactness: Exactness) -> Result<ConditionReport> {
    let mut report = ConditionReport {
        cond1_ok: true,
        cond2_ok: true,
        cond3_ok: check_condition3(&params.w, g.order()),
        cond2_base_ok: true,
        cond1_witness: None,
        cond2_witness: None,
        cond2_inconclusive: false,
        w_sum: params.w.iter().sum(),
    };
    for k in 1..params.n {
        if k >= 2 && report.cond1_ok {
            if let Some(w) = check_condition1(g, k, params.d_k(k), params.mode)? {
                report.cond1_ok = false;
                report.cond1_witness = Some((k, w));
            }
        }
        let out = check_condition2(g, k, params.w_k(k), params.d_k(k), exactness)?;
        match out {
            Cond2Outcome::Ok => {}
            Cond2Outcome::Inconclusive { .. } => report.cond2_inconclusive = true,
            Cond2Outcome::Violated { .. } => {
                if k == 1 {
                    report.cond2_base_ok = false;
                } else if report.cond2_ok {
                    report.cond2_ok = false;
                    report.cond2_witness = Some((k, out));
                }
            }
        }
    }
    Ok(report)
}

/// Where the greedy embedding ran out of candidates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureTrace {
    /// Number of tree vertices being placed when the step failed.
    pub step: usize,
    /// Host vertex carrying the pendant vertex's neighbour (`None` when the
    /// single-vertex base found `U` empty).
    pub v_image: Option<usize>,
    /// True when the new vertex had to be an out-neighbour of `v_image`.
    pub outward: bool,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub y: Vec<usize>,
    /// Images of the other tree vertices, in the order used for `Y`.
    pub s: Vec<usize>,
}

impl FailureTrace {
    /// Recomputes the candidate set the trace claims is empty.
    pub fn candidates(&self, o: &Orientation<'_>) -> Vec<usize> {
        let Some(v) = self.v_image else {
            return self.u.clone();
        };
        self.u
            .iter()
            .copied()
            .filter(|&x| !self.y.contains(&x) && !self.s.contains(&x) && x != v)
            .filter(|&x| if self.outward { o.has_arc(v, x) } else { o.has_arc(x, v) })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Embedded(EmbeddingCertificate),
    Failed(FailureTrace),
}

struct Greedy<'a, 'g> {
    g: &'a Graph,
    o: &'a Orientation<'g>,
    params: &'a PikhParameters,
    dist: crate::distance::DistanceMatrix,
    n: usize,
}

impl Greedy<'_, '_> {
    /// Out- (or in-) degree of `x` inside `u`.
    fn degree_in(&self, x: usize, u: &FixedBitSet, outward: bool) -> usize {
        self.g
            .neighbors(x)
            .iter()
            .filter(|&&y| u.contains(y) && if outward { self.o.has_arc(x, y) } else { self.o.has_arc(y, x) })
            .count()
    }

    fn blocked(&self, v: usize, s: &[usize], radius: impl Fn(usize) -> usize) -> FixedBitSet {
        let max_r = (0..s.len()).map(&radius).max().unwrap_or(1);
        let balls = balls_without(self.g, v, max_r);
        let mut reach = FixedBitSet::with_capacity(self.n);
        for (i, &si) in s.iter().enumerate() {
            reach.union_with(&balls[si][radius(i)]);
        }
        reach.intersect_with(self.g.adjacency(v));
        for &si in s {
            reach.set(si, false);
        }
        reach.set(v, false);
        reach
    }

    fn run(&self, tree: &OrientedTree, u: FixedBitSet) -> std::result::Result<Vec<usize>, FailureTrace> {
        let t = tree.digraph();
        if t.order() == 1 {
            return match u.ones().next() {
                Some(x) => Ok(vec![x]),
                None => Err(FailureTrace {
                    step: 1,
                    v_image: None,
                    outward: true,
                    u: Vec::new(),
                    w: Vec::new(),
                    y: Vec::new(),
                    s: Vec::new(),
                }),
            };
        }
        let k = t.order() - 1;
        let leaf = *tree.leaves().last().expect("trees on two or more vertices have leaves");
        let nb = t.out_neighbors(leaf).chain(t.in_neighbors(leaf)).next().expect("leaf neighbour");
        let outward = t.has_arc(nb, leaf);
        let limit = exact(self.params.d_k(k)) + int(k - 1);
        let w: FixedBitSet = u
            .ones()
            .filter(|&x| int(self.degree_in(x, &u, outward)) <= limit)
            .collect::<Vec<_>>()
            .into_iter()
            .fold(FixedBitSet::with_capacity(self.n), |mut b, x| {
                b.insert(x);
                b
            });
        let mut rest = u.clone();
        rest.difference_with(&w);
        let (small, kept) = tree.remove_leaf(leaf).expect("leaf");
        let sub = self.run(&small, rest)?;
        let v = sub[kept.iter().position(|&x| x == nb).expect("neighbour kept")];
        let mut s: Vec<usize> = sub.iter().copied().filter(|&x| x != v).collect();
        s.sort_by(|&a, &b| match self.dist.get(a, v).cmp(&self.dist.get(b, v)) {
            Ordering::Equal => a.cmp(&b),
            o => o,
        });
        let candidates = |y: &FixedBitSet| -> Option<usize> {
            self.g.neighbors(v).iter().copied().find(|&x| {
                u.contains(x)
                    && !y.contains(x)
                    && !s.contains(&x)
                    && if outward { self.o.has_arc(v, x) } else { self.o.has_arc(x, v) }
            })
        };
        let y_iso = self.blocked(v, &s, |i| i + 1);
        let choice = match self.params.mode {
            Mode::Isometric => candidates(&y_iso).ok_or(y_iso),
            Mode::Plain => {
                // Prefer what the isometric rule would pick so that plain
                // mode succeeds whenever isometric mode does.
                let y_plain = self.blocked(v, &s, |_| 1);
                candidates(&y_iso).or_else(|| candidates(&y_plain)).ok_or(y_plain)
            }
        };
        match choice {
            Ok(x) => {
                let mut map = vec![0; t.order()];
                for (i, &old) in kept.iter().enumerate() {
                    map[old] = sub[i];
                }
                map[leaf] = x;
                Ok(map)
            }
            Err(y) => Err(FailureTrace {
                step: k + 1,
                v_image: Some(v),
                outward,
                u: u.ones().collect(),
                w: w.ones().collect(),
                y: y.ones().collect(),
                s,
            }),
        }
    }
}

/// Embeds `tree` into the orientation `o` of `g` by the inductive greedy
/// procedure. Success yields an isometric certificate (plain mode: an
/// oriented one); failure reports the first step with no candidate.
pub fn greedy_tree_embed(
    g: &Graph,
    o: &Orientation<'_>,
    tree: &OrientedTree,
    params: &PikhParameters,
) -> Result<GreedyOutcome> {
    if tree.order() != params.n {
        return Err(Error::invalid(format!(
            "tree has {} vertices, parameters are for {}",
            tree.order(),
            params.n
        )));
    }
    if o.host() != g {
        return Err(Error::invalid("orientation is not of the given graph"));
    }
    let n = g.order();
    let greedy = Greedy {
        g,
        o,
        params,
        dist: distance_matrix(g),
        n,
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    Ok(match greedy.run(tree, all) {
        Ok(map) => {
            let variant = match params.mode {
                Mode::Isometric => Variant::Isometric,
                Mode::Plain => Variant::Oriented,
            };
            GreedyOutcome::Embedded(EmbeddingCertificate::new(tree.digraph(), o, map, variant))
        }
        Err(trace) => GreedyOutcome::Failed(trace),
    })
}
