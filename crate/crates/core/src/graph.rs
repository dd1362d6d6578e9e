//! Simple undirected graphs and oriented graphs on dense vertex sets `0..n`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_cap, Error, Result};

/// An undirected simple graph on `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. The
/// position of an edge in [`Graph::edges`] is the index used by orientation
/// bit strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
            nbrs: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "edge {{{a},{b}}} out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();

        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut nbrs = vec![Vec::new(); n];
        for &(a, b) in &list {
            adj[a].insert(b);
            adj[b].insert(a);
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        for l in &mut nbrs {
            l.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            nbrs,
            edges: list,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Position of the edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabeling by a permutation preserves simplicity")
    }

    /// The subgraph induced on `verts`, relabeled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Graph::from_edges(verts.len(), edges).expect("induced subgraph is simple")
    }

    /// Graph with vertex `v` deleted (remaining vertices keep their relative order).
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.nbrs[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS hop distances from `root`; unreachable vertices get `None`.
    pub fn bfs(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The largest diameter over connected components (0 for edgeless graphs).
    pub fn max_component_diameter(&self) -> usize {
        (0..self.n)
            .map(|v| self.bfs(v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

/// An oriented graph: no loops and no pair of opposite arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphRepr", into = "DigraphRepr")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<DigraphRepr> for Digraph {
    type Error = Error;
    fn try_from(r: DigraphRepr) -> Result<Self> {
        Digraph::from_arcs(r.n, r.arcs)
    }
}

impl From<Digraph> for DigraphRepr {
    fn from(d: Digraph) -> Self {
        DigraphRepr {
            n: d.n,
            arcs: d.arcs,
        }
    }
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            arcs: Vec::new(),
            out: vec![FixedBitSet::with_capacity(n); n],
            inn: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n);
        let mut list: Vec<(usize, usize)> = arcs.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        for &(a, b) in &list {
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "arc ({a},{b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            if d.out[b].contains(a) {
                return Err(Error::invalid(format!("opposite arcs between {a} and {b}")));
            }
            d.out[a].insert(b);
            d.inn[b].insert(a);
        }
        d.arcs = list;
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].ones()
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v].ones()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones(..)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones(..)
    }

    /// Total degree in the underlying undirected graph.
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// The underlying undirected graph.
    pub fn shadow(&self) -> Graph {
        Graph::from_edges(self.n, self.arcs.iter().copied()).expect("shadow of a digraph is simple")
    }

    pub fn reverse(&self) -> Digraph {
        Digraph::from_arcs(self.n, self.arcs.iter().map(|&(a, b)| (b, a)))
            .expect("reversal preserves the digraph invariants")
    }

    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        Digraph::from_arcs(self.n, self.arcs.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabeling preserves the digraph invariants")
    }

    /// Sub-digraph induced on `verts`, relabeled in the given order.
    pub fn induced(&self, verts: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Digraph::from_arcs(verts.len(), arcs).expect("induced sub-digraph is oriented")
    }

    /// A topological order, or `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut ready: Vec<usize> = (0..self.n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for w in self.out[v].ones() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// True when the shadow is a tree.
    pub fn is_oriented_tree(&self) -> bool {
        self.n >= 1 && self.arcs.len() == self.n - 1 && self.shadow().is_connected()
    }
}

pub fn complete(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    Graph::from_edges(m, (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))))
}

pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::invalid("cycle needs at least three vertices"));
    }
    Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
}

pub fn path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Cartesian ("rectangular") product. Vertex `(a, b)` is numbered `a * |h| + b`.
pub fn rectangular_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut edges = Vec::with_capacity(g.size() * m + h.size() * g.order());
    for &(a, a2) in g.edges() {
        for b in 0..m {
            edges.push((a * m + b, a2 * m + b));
        }
    }
    for a in 0..g.order() {
        for &(b, b2) in h.edges() {
            edges.push((a * m + b, a * m + b2));
        }
    }
    Graph::from_edges(g.order() * m, edges).expect("product of simple graphs is simple")
}

/// Orients every edge from the endpoint that comes first in `order`.
pub fn acyclic_orientation(g: &Graph, order: &[usize]) -> Result<Digraph> {
    let n = g.order();
    if order.len() != n {
        return Err(Error::invalid(format!(
            "order has {} entries, graph has {n} vertices",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::invalid(format!("order is not a permutation (entry {v})")));
        }
        pos[v] = i;
    }
    Digraph::from_arcs(
        n,
        g.edges()
            .iter()
            .map(|&(a, b)| if pos[a] < pos[b] { (a, b) } else { (b, a) }),
    )
}

/// Default vertex cap for exact chromatic number.
pub const CHROMATIC_CAP: usize = 16;

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(optimal_coloring(g)?.into_iter().map(|c| c + 1).max().unwrap_or(0))
}

/// A proper coloring with the minimum number of colors, colors `0..chi`.
pub fn optimal_coloring(g: &Graph) -> Result<Vec<usize>> {
    optimal_coloring_capped(g, CHROMATIC_CAP)
}

pub fn optimal_coloring_capped(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.order();
    ensure_cap("chromatic number vertices", n as u64, cap as u64)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let upper = greedy_coloring(g);
    let ub = upper.iter().max().unwrap() + 1;
    let lb = max_clique(g).len().max(1);
    if lb == ub {
        return Ok(upper);
    }
    // Colour vertices in order of decreasing degree; a clique goes first so
    // its colours can be fixed without loss of generality.
    let clique = max_clique(g);
    let mut order: Vec<usize> = clique.clone();
    let mut rest: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order.extend(rest);

    for k in lb..ub {
        let mut colors = vec![usize::MAX; n];
        for (i, &v) in clique.iter().enumerate() {
            colors[v] = i;
        }
        if color_backtrack(g, &order, clique.len(), k, &mut colors) {
            return Ok(colors);
        }
    }
    Ok(upper)
}

fn color_backtrack(g: &Graph, order: &[usize], idx: usize, k: usize, colors: &mut [usize]) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let used_max = order[..idx].iter().map(|&u| colors[u]).max().unwrap_or(0);
    // Symmetry: never open more than one fresh colour at a time.
    let limit = (used_max + 2).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_backtrack(g, order, idx + 1, k, colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// DSatur greedy coloring.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| colors[w])
                    .filter(|&c| c != usize::MAX)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

/// A maximum clique (Bron–Kerbosch with pivoting); sorted.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    fn expand(
        g: &Graph,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        best: &mut Vec<usize>,
    ) {
        if p.is_clear() {
            if x.is_clear() && r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + p.count_ones(..) <= best.len() {
            return;
        }
        let pivot = p.ones().chain(x.ones()).max_by_key(|&u| g.adjacency(u).intersection(&p).count()).unwrap();
        let cands: Vec<usize> = p.ones().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in cands {
            let mut np = p.clone();
            np.intersect_with(g.adjacency(v));
            let mut nx = x.clone();
            nx.intersect_with(g.adjacency(v));
            r.push(v);
            expand(g, r, np, nx, best);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    let n = g.order();
    let mut best = Vec::new();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    expand(g, &mut Vec::new(), all, FixedBitSet::with_capacity(n), &mut best);
    best.sort_unstable();
    best
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
