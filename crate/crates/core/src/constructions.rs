//! Explicit constructions: the product pigeonhole embedder and the tower of
//! products built from it, the BFS-parity orientation, comparability tests,
//! and the composite orientation along a weak homomorphism.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arrows::{arrow_check, ddiam, FamilyKind};
use crate::canon::{canonical_form, CanonicalForm, CANON_CAP};
use crate::catalog::{directed_path, OrientedTree};
use crate::embedding::{find_embedding, EmbeddingCertificate, Variant};
use crate::error::{ensure_cap, Error, Result};
use crate::graph::{chromatic_number, complete, rectangular_product, Digraph, Graph};
use crate::orientation::{bits_to_hex, Orientation};

/// Embeds smaller trees into single copies `g x {u}` of a product host.
pub trait SubEmbedder {
    /// Whether `tree` belongs to the family this embedder handles in every
    /// orientation of its base graph.
    fn covers(&self, tree: &Digraph) -> bool;
    /// An isometric map of `tree` into `host`, an orientation of the base graph.
    fn embed(&self, tree: &Digraph, host: &Orientation<'_>) -> Option<Vec<usize>>;
}

/// Exhaustive search for members of a fixed family the base graph arrows.
#[derive(Clone, Debug)]
pub struct ExhaustiveEmbedder {
    keys: Vec<CanonicalForm>,
}

impl ExhaustiveEmbedder {
    pub fn new(family: &[Digraph]) -> Result<Self> {
        let keys = family.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
        Ok(ExhaustiveEmbedder { keys })
    }
}

impl SubEmbedder for ExhaustiveEmbedder {
    fn covers(&self, tree: &Digraph) -> bool {
        tree.order() <= CANON_CAP
            && canonical_form(tree).is_ok_and(|k| self.keys.contains(&k))
    }

    fn embed(&self, tree: &Digraph, host: &Orientation<'_>) -> Option<Vec<usize>> {
        find_embedding(tree, host, Variant::Isometric).map(|c| c.map)
    }
}

/// Adapts a pair of closures into a [`SubEmbedder`].
pub struct FnEmbedder<C, E> {
    pub covers: C,
    pub embed: E,
}

impl<C, E> SubEmbedder for FnEmbedder<C, E>
where
    C: Fn(&Digraph) -> bool,
    E: Fn(&Digraph, &Orientation<'_>) -> Option<Vec<usize>>,
{
    fn covers(&self, tree: &Digraph) -> bool {
        (self.covers)(tree)
    }
    fn embed(&self, tree: &Digraph, host: &Orientation<'_>) -> Option<Vec<usize>> {
        (self.embed)(tree, host)
    }
}

/// The orientation that `host` (on `g x K_k`) induces on the copy `g x {u}`.
pub fn copy_orientation<'g>(g: &'g Graph, host: &Orientation<'_>, k: usize, u: usize) -> Orientation<'g> {
    let flags: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(a, b)| host.has_arc(b * k + u, a * k + u))
        .collect();
    Orientation::from_bools(g, &flags).expect("one flag per edge")
}

/// Extends isometric embeddings of a one-vertex-smaller subtree, found in
/// each copy of `g` inside `g x K_{m+1}`, to an isometric embedding of
/// `tree` in the oriented product.
///
/// The pendant vertex removed is the first leaf (by index) whose removal
/// leaves a tree the sub-embedder covers. Copies are processed in order and
/// the first two that place the attachment vertex over the same `g` vertex
/// are used.
pub fn pigeonhole_embed(
    g: &Graph,
    sub: &dyn SubEmbedder,
    host: &Orientation<'_>,
    tree: &OrientedTree,
) -> Result<EmbeddingCertificate> {
    let gn = g.order();
    let hn = host.host().order();
    if gn == 0 || hn % gn != 0 {
        return Err(Error::invalid("host order is not a multiple of the base order"));
    }
    let k = hn / gn;
    if k < gn + 1 {
        return Err(Error::invalid(format!(
            "product has {k} copies; the pigeonhole step needs at least {}",
            gn + 1
        )));
    }
    if *host.host() != rectangular_product(g, &complete(k)?) {
        return Err(Error::invalid("host is not the product of the base with a complete graph"));
    }
    let t = tree.digraph();
    if t.order() == 1 {
        let map = vec![0];
        return Ok(EmbeddingCertificate::new(t, host, map, Variant::Isometric));
    }
    let (leaf, small, kept) = tree
        .leaves()
        .into_iter()
        .find_map(|leaf| {
            let (small, kept) = tree.remove_leaf(leaf).ok()?;
            sub.covers(small.digraph()).then_some((leaf, small, kept))
        })
        .ok_or_else(|| Error::invalid("no pendant vertex leaves a covered subtree"))?;
    let attach = t.out_neighbors(leaf).chain(t.in_neighbors(leaf)).next().expect("leaf has a neighbour");
    let attach_small = kept.iter().position(|&v| v == attach).expect("attachment kept");

    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut seen: Vec<Option<usize>> = vec![None; gn];
    let mut pair = None;
    for u in 0..k {
        let copy = copy_orientation(g, host, k, u);
        let f = sub
            .embed(small.digraph(), &copy)
            .ok_or(Error::SubEmbedding { copy: u })?;
        let gv = f[attach_small];
        maps.push(f);
        if let Some(prev) = seen[gv] {
            pair = Some((prev, u, gv));
            break;
        }
        seen[gv] = Some(u);
    }
    let (u, w, gv) = pair.expect("more copies than base vertices forces a repeat");
    let xu = gv * k + u;
    let xw = gv * k + w;
    let out_of_attach = t.has_arc(attach, leaf);
    let u_to_w = host.has_arc(xu, xw);
    // Keep the copy whose attachment point has the arc pointing the way the tree needs.
    let (copy, leaf_image) = if out_of_attach == u_to_w { (u, xw) } else { (w, xu) };
    let mut map = vec![0; t.order()];
    for (i, &v) in kept.iter().enumerate() {
        map[v] = maps[copy][i] * k + copy;
    }
    map[leaf] = leaf_image;
    Ok(EmbeddingCertificate::new(t, host, map, Variant::Isometric))
}

/// Largest tower level whose graph is materialized.
pub const TOWER_MATERIALIZE_CAP: usize = 4;

/// `a_1 = 1`, `a_{k+1} = a_k (a_k + 1)` for `k < n`.
pub fn tower_sizes(n: usize) -> Vec<BigUint> {
    let mut sizes = Vec::with_capacity(n);
    let mut a = BigUint::one();
    for _ in 0..n {
        sizes.push(a.clone());
        a = &a * (&a + 1u32);
    }
    sizes
}

/// `a_k + 1 <= 2^(2^(k-1))`.
pub fn tower_bound_holds(k: usize, a_k: &BigUint) -> bool {
    assert!(k >= 1);
    let bound = BigUint::one() << (1usize << (k - 1));
    a_k + 1u32 <= bound
}

#[derive(Clone, Debug)]
pub struct TowerFamily {
    pub sizes: Vec<BigUint>,
    /// Graphs for levels `1..=min(n, TOWER_MATERIALIZE_CAP)`.
    pub levels: Vec<Graph>,
}

impl TowerFamily {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_levels(n, n.min(TOWER_MATERIALIZE_CAP))
    }

    /// Size sequence to `n`, graphs up to `materialize` (at most the cap).
    pub fn with_levels(n: usize, materialize: usize) -> Result<Self> {
        ensure_cap("tower levels materialized", materialize as u64, TOWER_MATERIALIZE_CAP as u64)?;
        let sizes = tower_sizes(n.max(materialize));
        let mut levels = Vec::with_capacity(materialize);
        let mut g = Graph::empty(1);
        for k in 0..materialize {
            if k > 0 {
                g = rectangular_product(&g, &complete(g.order() + 1)?);
            }
            levels.push(g.clone());
        }
        Ok(TowerFamily { sizes, levels })
    }
}

impl Serialize for TowerFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TowerFamily", 2)?;
        let sizes: Vec<String> = self.sizes.iter().map(|a| a.to_string()).collect();
        st.serialize_field("sizes", &sizes)?;
        let g6: Vec<String> = self.levels.iter().map(crate::io::to_graph6).collect();
        st.serialize_field("graph6", &g6)?;
        st.end()
    }
}

/// Embeds trees on at most `level` vertices into orientations of the tower
/// graph at that level: exhaustively up to the prism, by the pigeonhole
/// step on top of the level below beyond it.
#[derive(Clone, Debug)]
pub struct TowerEmbedder {
    level: usize,
    graphs: Vec<Graph>,
}

/// Levels at or below this are searched directly.
const TOWER_EXHAUSTIVE_LEVEL: usize = 3;

impl TowerEmbedder {
    pub fn new(level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::invalid("tower levels start at 1"));
        }
        let family = TowerFamily::with_levels(level, level)?;
        Ok(TowerEmbedder {
            level,
            graphs: family.levels,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graphs[self.level - 1]
    }

    fn below(&self) -> TowerEmbedder {
        TowerEmbedder {
            level: self.level - 1,
            graphs: self.graphs[..self.level - 1].to_vec(),
        }
    }
}

impl SubEmbedder for TowerEmbedder {
    fn covers(&self, tree: &Digraph) -> bool {
        tree.order() <= self.level && tree.is_oriented_tree()
    }

    fn embed(&self, tree: &Digraph, host: &Orientation<'_>) -> Option<Vec<usize>> {
        if self.level <= TOWER_EXHAUSTIVE_LEVEL {
            return find_embedding(tree, host, Variant::Isometric).map(|c| c.map);
        }
        let tree = OrientedTree::new(tree.clone()).ok()?;
        let below = self.below();
        pigeonhole_embed(below.graph(), &below, host, &tree).ok().map(|c| c.map)
    }
}

/// Orientation by BFS layers from `root`: between layers the arc leaves the
/// even layer, inside a layer it goes from the lower index to the higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsOrientationResult {
    pub host: Graph,
    pub bits: FixedBitSet,
    pub norms: Vec<usize>,
}

impl BfsOrientationResult {
    pub fn orientation(&self) -> Orientation<'_> {
        Orientation::new(&self.host, self.bits.clone()).expect("bits match host")
    }
}

impl Serialize for BfsOrientationResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BfsOrientationResult", 3)?;
        st.serialize_field("graph6", &crate::io::to_graph6(&self.host))?;
        st.serialize_field("orientation_bits", &bits_to_hex(&self.bits))?;
        st.serialize_field("norms", &self.norms)?;
        st.end()
    }
}

pub fn bfs_parity_orientation(g: &Graph, root: usize) -> Result<BfsOrientationResult> {
    if root >= g.order() {
        return Err(Error::invalid(format!("root {root} out of range")));
    }
    let norms: Vec<usize> = g
        .bfs(root)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::invalid("graph is not connected"))?;
    let mut bits = FixedBitSet::with_capacity(g.size());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let (na, nb) = (norms[a], norms[b]);
        // Arc source: the endpoint on the even layer, or `a` inside a layer.
        let source = if na == nb {
            a
        } else if na % 2 == 0 {
            a
        } else {
            b
        };
        bits.set(i, source == b);
    }
    Ok(BfsOrientationResult {
        host: g.clone(),
        bits,
        norms,
    })
}

/// Largest `|norm(u) - norm(v)|` over pairs with `v` reachable from `u`
/// along arcs of the orientation.
pub fn norm_span_check(r: &BfsOrientationResult) -> usize {
    let d = r.orientation().to_digraph();
    let n = d.order();
    let mut best = 0;
    let mut seen = vec![usize::MAX; n];
    for u in 0..n {
        let mut queue = VecDeque::from([u]);
        seen[u] = u;
        while let Some(x) = queue.pop_front() {
            best = best.max(r.norms[x].abs_diff(r.norms[u]));
            for y in d.out_neighbors(x) {
                if seen[y] != u {
                    seen[y] = u;
                    queue.push_back(y);
                }
            }
        }
    }
    best
}

/// Edge cap for the backtracking transitive-orientation search.
pub const TRANSITIVE_EDGE_CAP: usize = 24;

/// A transitive orientation of `g`, if one exists. Edges are decided in
/// index order, trying `low -> high` first, so `K_n` yields the identity
/// order.
pub fn transitive_orientation(g: &Graph) -> Result<Option<Orientation<'_>>> {
    ensure_cap("transitive orientation edges", g.size() as u64, TRANSITIVE_EDGE_CAP as u64)?;
    let n = g.order();
    // arc[u][v]: Some(true) if u -> v decided.
    let mut arc = vec![false; n * n];
    let mut flags = vec![false; g.size()];
    let found = assign(g, 0, &mut arc, &mut flags);
    Ok(found.then(|| Orientation::from_bools(g, &flags).expect("one flag per edge")))
}

fn assign(g: &Graph, i: usize, arc: &mut [bool], flags: &mut [bool]) -> bool {
    let n = g.order();
    if i == g.size() {
        return true;
    }
    let (a, b) = g.edges()[i];
    for flip in [false, true] {
        let (s, t) = if flip { (b, a) } else { (a, b) };
        if consistent(g, s, t, arc) {
            arc[s * n + t] = true;
            flags[i] = flip;
            if assign(g, i + 1, arc, flags) {
                return true;
            }
            arc[s * n + t] = false;
        }
    }
    false
}

/// Whether adding `s -> t` keeps every decided two-arc path closed.
fn consistent(g: &Graph, s: usize, t: usize, arc: &[bool]) -> bool {
    let n = g.order();
    let at = |x: usize, y: usize| arc[x * n + y];
    for x in 0..n {
        if x == s || x == t {
            continue;
        }
        // x -> s -> t needs x -> t.
        if at(x, s) && (!g.has_edge(x, t) || at(t, x)) {
            return false;
        }
        // s -> t -> x needs s -> x.
        if at(t, x) && (!g.has_edge(s, x) || at(x, s)) {
            return false;
        }
        // t -> x -> s would need t -> s.
        if at(t, x) && at(x, s) {
            return false;
        }
    }
    true
}

/// True iff every odd closed walk has a triangular chord, i.e. `g` is a
/// comparability graph.
///
/// Consecutive edges `{x,y}, {y,z}` of a walk with `{x,z}` missing must both
/// point into `y` or both out of it in any transitive orientation. The check
/// propagates these parity constraints with a union-find and reports whether
/// they are consistent. Closed walks rather than simple cycles are needed:
/// in the triangular prism every odd simple cycle has a triangular chord,
/// yet the prism has no transitive orientation.
pub fn odd_cycle_chord_check(g: &Graph) -> bool {
    let mut uf = ParityUnionFind::new(g.size());
    for y in 0..g.order() {
        let nb = g.neighbors(y);
        for (i, &x) in nb.iter().enumerate() {
            for &z in &nb[i + 1..] {
                if g.has_edge(x, z) {
                    continue;
                }
                let ex = g.edge_index(x, y).expect("edge");
                let ez = g.edge_index(z, y).expect("edge");
                // bit 0 means low -> high, so "x -> y" is bit == (x > y).
                let parity = (x > y) ^ (z > y);
                if !uf.union(ex, ez, parity) {
                    return false;
                }
            }
        }
    }
    true
}

struct ParityUnionFind {
    parent: Vec<usize>,
    /// Parity relative to the parent.
    rel: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            rel: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, pr) = self.find(p);
        self.parent[x] = root;
        self.rel[x] ^= pr;
        (root, self.rel[x])
    }

    /// Records `value(a) ^ value(b) == parity`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, parity: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == parity;
        }
        self.parent[ra] = rb;
        self.rel[ra] = pa ^ pb ^ parity;
        true
    }
}

/// A map under which every edge either collapses or lands on an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHomomorphism {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl WeakHomomorphism {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::invalid("map length differs from the source order"));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(Error::invalid(format!("image {bad} outside the target")));
        }
        for &(u, v) in source.edges() {
            let (a, b) = (map[u], map[v]);
            if a != b && !target.has_edge(a, b) {
                return Err(Error::invalid(format!(
                    "edge {{{u},{v}}} maps to the non-edge {{{a},{b}}}"
                )));
            }
        }
        Ok(WeakHomomorphism { source, target, map })
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The preimage of `y` as an induced subgraph, with its vertex list
    /// (fibre vertex `i` is source vertex `verts[i]`).
    pub fn fiber(&self, y: usize) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = (0..self.source.order()).filter(|&v| self.map[v] == y).collect();
        (self.source.induced(&verts), verts)
    }
}

/// Orients `f`'s source: edges between fibres follow increasing colour of
/// the image, edges inside fibre `y` follow `fibers[y]`, an orientation
/// bit string of [`WeakHomomorphism::fiber`]`(y)`.
pub fn composite_orientation<'a>(
    f: &'a WeakHomomorphism,
    coloring: &[usize],
    fibers: &[FixedBitSet],
) -> Result<Orientation<'a>> {
    let h = &f.target;
    if coloring.len() != h.order() {
        return Err(Error::invalid("coloring length differs from the target order"));
    }
    if let Some(&(a, b)) = h.edges().iter().find(|&&(a, b)| coloring[a] == coloring[b]) {
        return Err(Error::invalid(format!("coloring is improper on edge {{{a},{b}}}")));
    }
    if fibers.len() != h.order() {
        return Err(Error::invalid(format!(
            "{} fibre orientations for {} target vertices",
            fibers.len(),
            h.order()
        )));
    }
    let mut local = Vec::with_capacity(h.order());
    for (y, bits) in fibers.iter().enumerate() {
        let (fg, verts) = f.fiber(y);
        if bits.len() != fg.size() {
            return Err(Error::invalid(format!("fibre {y} orientation has the wrong length")));
        }
        let o = Orientation::new(&fg, bits.clone())?;
        let arcs: Vec<(usize, usize)> = o.arcs().map(|(a, b)| (verts[a], verts[b])).collect();
        local.push(arcs);
    }
    let inside: std::collections::HashSet<(usize, usize)> = local.into_iter().flatten().collect();
    let flags: Vec<bool> = f
        .source
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (cu, cv) = (coloring[f.map[u]], coloring[f.map[v]]);
            if f.map[u] == f.map[v] {
                !inside.contains(&(u, v))
            } else {
                cu > cv
            }
        })
        .collect();
    Orientation::from_bools(&f.source, &flags)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakHomReport {
    pub lhs: usize,
    pub rhs: usize,
    pub chi: usize,
    pub fiber_ddiam: Vec<usize>,
}

/// Both sides of the fibre bound on `ddiam_I`. The right side is the best
/// sum of fibre values over sets of at most `chi(target)` target vertices,
/// which is the sum of the `chi` largest values.
pub fn weak_hom_bound_check(f: &WeakHomomorphism) -> Result<WeakHomReport> {
    let lhs = ddiam(&f.source, FamilyKind::Paths)?;
    let chi = chromatic_number(&f.target)?;
    let fiber_ddiam = (0..f.target.order())
        .map(|y| ddiam(&f.fiber(y).0, FamilyKind::Paths))
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = fiber_ddiam.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let rhs = sorted.iter().take(chi).sum();
    Ok(WeakHomReport {
        lhs,
        rhs,
        chi,
        fiber_ddiam,
    })
}

/// For each fibre, an orientation with no isometric `I_{d+1}` where `d` is
/// the fibre's `ddiam_I`: the counterexample that certifies the value.
pub fn fiber_counterexamples(f: &WeakHomomorphism) -> Result<Vec<FixedBitSet>> {
    (0..f.target.order())
        .map(|y| {
            let (fg, _) = f.fiber(y);
            if fg.order() == 0 {
                return Ok(FixedBitSet::new());
            }
            let d = ddiam(&fg, FamilyKind::Paths)?;
            let v = arrow_check(&fg, &[directed_path(d + 1)?], Variant::Isometric)?;
            v.counterexample
                .ok_or_else(|| Error::invalid("fibre unexpectedly arrows a longer path"))
        })
        .collect()
}
