use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Hop distance; [`Dist::INFINITE`] sorts above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dist(u32);

impl Dist {
    pub const INFINITE: Dist = Dist(u32::MAX);

    pub fn finite(d: u32) -> Dist {
        debug_assert!(d != u32::MAX);
        Dist(d)
    }

    pub fn is_finite(self) -> bool {
        self.0 != u32::MAX
    }

    pub fn value(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.value() {
            Some(d) => s.serialize_u32(d),
            None => s.serialize_none(),
        }
    }
}

/// All-pairs hop distances of an undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.d.iter().filter_map(|d| d.value()).max().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<Vec<Dist>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }
}

impl Serialize for DistanceMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![Dist::INFINITE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = Dist(0);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u].0;
            for &w in g.neighbors(u) {
                if row[w] == Dist::INFINITE {
                    row[w] = Dist(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}
