//! Canonical forms for small graphs and oriented graphs.
//!
//! Colour refinement followed by individualisation over the first
//! non-singleton cell; the key is the lexicographically smallest adjacency
//! encoding over all leaves of the search tree. Transpositions of twin
//! vertices are automorphisms, so only one twin per cell is expanded.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_cap, Result};
use crate::graph::{Digraph, Graph};

/// Largest order accepted by the exact canonical form.
pub const CANON_CAP: usize = 10;

/// Isomorphism-invariant key. Two (di)graphs receive equal keys iff they are
/// isomorphic; graphs and digraphs never share keys.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    directed: bool,
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }
}

/// Objects with an adjacency relation that can be canonised.
pub trait Canonize {
    fn order(&self) -> usize;
    /// Relation code for the ordered pair `(u, v)`: bit 0 is `u -> v`.
    fn relation(&self, u: usize, v: usize) -> bool;
    fn directed(&self) -> bool;
}

impl Canonize for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn relation(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
    fn directed(&self) -> bool {
        false
    }
}

impl Canonize for Digraph {
    fn order(&self) -> usize {
        Digraph::order(self)
    }
    fn relation(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v)
    }
    fn directed(&self) -> bool {
        true
    }
}

/// Exact canonical key; errors above [`CANON_CAP`] vertices.
pub fn canonical_form<T: Canonize>(x: &T) -> Result<CanonicalForm> {
    canonical_labeling(x).map(|(f, _)| f)
}

/// The canonical key and a relabeling `perm` (vertex `v` becomes `perm[v]`)
/// under which the object's adjacency encoding equals the key.
pub fn canonical_labeling<T: Canonize>(x: &T) -> Result<(CanonicalForm, Vec<usize>)> {
    ensure_cap("canonical form vertices", x.order() as u64, CANON_CAP as u64)?;
    Ok(canonize(x))
}

pub(crate) fn canonize<T: Canonize>(x: &T) -> (CanonicalForm, Vec<usize>) {
    let m = Matrix::new(x);
    let mut search = Search {
        m: &m,
        best: None,
    };
    let mut colors = vec![0u32; m.n];
    m.refine(&mut colors);
    search.descend(colors);
    let (code, perm) = search.best.unwrap_or_default();
    (
        CanonicalForm {
            directed: m.directed,
            n: m.n,
            code,
        },
        perm,
    )
}

/// Refinement-only hash; invariant under relabeling but not a complete
/// invariant. Meant for graphs above [`CANON_CAP`].
pub fn invariant_hash<T: Canonize>(x: &T) -> u64 {
    let m = Matrix::new(x);
    let mut colors = vec![0u32; m.n];
    m.refine(&mut colors);
    let mut sizes = vec![0u64; m.n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    // FNV-1a over (directed, n, cell sizes, edge count per cell pair).
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    feed(m.directed as u64);
    feed(m.n as u64);
    for s in sizes {
        feed(s);
    }
    let mut counts = std::collections::BTreeMap::new();
    for u in 0..m.n {
        for v in 0..m.n {
            if m.at(u, v) {
                *counts.entry((colors[u], colors[v])).or_insert(0u64) += 1;
            }
        }
    }
    for ((a, b), c) in counts {
        feed(a as u64);
        feed(b as u64);
        feed(c);
    }
    h
}

struct Matrix {
    n: usize,
    directed: bool,
    a: Vec<bool>,
}

impl Matrix {
    fn new<T: Canonize>(x: &T) -> Self {
        let n = x.order();
        let mut a = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v && x.relation(u, v) {
                    a[u * n + v] = true;
                }
            }
        }
        Matrix {
            n,
            directed: x.directed(),
            a,
        }
    }

    #[inline]
    fn at(&self, u: usize, v: usize) -> bool {
        self.a[u * self.n + v]
    }

    /// Equitable refinement; colours are renumbered to `0..k` by sorted signature.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<(u32, u8)>, usize)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(u32, u8)> = (0..n)
                        .filter(|&w| w != v)
                        .filter_map(|w| {
                            let code = self.at(v, w) as u8 | ((self.at(w, v) as u8) << 1);
                            (code != 0).then_some((colors[w], code))
                        })
                        .collect();
                    s.sort_unstable();
                    (colors[v], s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank += 1;
                }
                colors[sigs[i].2] = rank;
            }
            let now = if n == 0 { 0 } else { rank as usize + 1 };
            if now == classes {
                break;
            }
            classes = now;
        }
    }

    fn encode(&self, colors: &[u32]) -> Vec<u64> {
        let n = self.n;
        let mut inv = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c as usize] = v;
        }
        let mut code = Vec::new();
        let mut word = 0u64;
        let mut bits = 0;
        for i in 0..n {
            let start = if self.directed { 0 } else { i + 1 };
            for j in start..n {
                if i == j {
                    continue;
                }
                word = (word << 1) | self.at(inv[i], inv[j]) as u64;
                bits += 1;
                if bits == 64 {
                    code.push(word);
                    word = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            code.push(word << (64 - bits));
        }
        code
    }

    fn is_twin_swap(&self, v: usize, w: usize) -> bool {
        if self.at(v, w) != self.at(w, v) {
            return false;
        }
        (0..self.n)
            .filter(|&x| x != v && x != w)
            .all(|x| self.at(v, x) == self.at(w, x) && self.at(x, v) == self.at(x, w))
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    m: &'a Matrix,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.m.n;
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = match (0..n).find(|&c| size[c] > 1) {
            None => {
                let code = self.m.encode(&colors);
                let better = match &self.best {
                    None => true,
                    Some((b, _)) => code.cmp(b) == Ordering::Less,
                };
                if better {
                    let perm = colors.iter().map(|&c| c as usize).collect();
                    self.best = Some((code, perm));
                }
                return;
            }
            Some(c) => c as u32,
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| self.m.is_twin_swap(v, w)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| if x == v { 2 * c } else { 2 * c + 1 })
                .collect();
            self.m.refine(&mut next);
            self.descend(next);
        }
    }
}
