//! The pattern families: directed paths, oriented trees up to isomorphism,
//! the small-graph atlas, and the two-layer doubling of an acyclic digraph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::{canonize, CanonicalForm};
use crate::error::{ensure_cap, Error, Result};
use crate::graph::{Digraph, Graph};

pub const TREE_CAP: usize = 9;
pub const ATLAS_CAP: usize = 7;

/// An oriented graph whose shadow is a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OrientedTree(Digraph);

impl OrientedTree {
    pub fn new(d: Digraph) -> Result<Self> {
        if d.is_oriented_tree() {
            Ok(OrientedTree(d))
        } else {
            Err(Error::invalid("digraph is not an oriented tree"))
        }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Vertices of total degree one, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.0.order()).filter(|&v| self.0.degree(v) == 1).collect()
    }

    /// The tree with `leaf` removed, remaining vertices relabeled in order,
    /// together with the kept vertex list (new label `i` is old `kept[i]`).
    pub fn remove_leaf(&self, leaf: usize) -> Result<(OrientedTree, Vec<usize>)> {
        if self.0.degree(leaf) != 1 {
            return Err(Error::invalid(format!("vertex {leaf} is not a leaf")));
        }
        let kept: Vec<usize> = (0..self.0.order()).filter(|&v| v != leaf).collect();
        Ok((OrientedTree(self.0.induced(&kept)), kept))
    }
}

impl AsRef<Digraph> for OrientedTree {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

/// Vertices `0..n`, arcs `(i-1, i)`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::invalid("directed path needs at least one vertex"));
    }
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

/// Unlabeled free trees on `n` vertices, canonically labeled.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>> {
    ensure_cap("tree order", n as u64, TREE_CAP as u64)?;
    if n == 0 {
        return Err(Error::invalid("trees need at least one vertex"));
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..size - 1 {
                let edges = t.edges().iter().copied().chain([(v, size - 1)]);
                let grown = Graph::from_edges(size, edges)?;
                let (key, perm) = canonize(&grown);
                next.entry(key).or_insert_with(|| grown.relabel(&perm));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// One representative per isomorphism class of oriented trees on `n`
/// vertices, canonically labeled and sorted by canonical form.
pub fn enumerate_oriented_trees(n: usize) -> Result<Vec<OrientedTree>> {
    let mut classes: BTreeMap<CanonicalForm, Digraph> = BTreeMap::new();
    for t in enumerate_free_trees(n)? {
        let m = t.size();
        for mask in 0u32..(1 << m) {
            let arcs = t.edges().iter().enumerate().map(|(i, &(a, b))| {
                if mask >> i & 1 == 1 {
                    (b, a)
                } else {
                    (a, b)
                }
            });
            let d = Digraph::from_arcs(n, arcs)?;
            let (key, perm) = canonize(&d);
            classes.entry(key).or_insert_with(|| d.relabel(&perm));
        }
    }
    Ok(classes.into_values().map(OrientedTree).collect())
}

/// All graphs on `n` vertices up to isomorphism, canonically labeled, sorted
/// by edge count and then canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    ensure_cap("atlas order", n as u64, ATLAS_CAP as u64)?;
    if n == 0 {
        return Err(Error::invalid("atlas starts at one vertex"));
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let new_edges = (0..size - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, size - 1));
                let grown = Graph::from_edges(size, g.edges().iter().copied().chain(new_edges))?;
                let (key, perm) = canonize(&grown);
                next.entry(key).or_insert_with(|| grown.relabel(&perm));
            }
        }
        level = next.into_values().collect();
    }
    let mut keyed: Vec<(usize, CanonicalForm, Graph)> = level
        .into_iter()
        .map(|g| (g.size(), canonize(&g).0, g))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
}

/// Doubles an acyclic connected digraph `h`: layer 0 is a copy of `h`,
/// layer 1 a reversed copy, joined by one arc at `root`. Vertex `(v, layer)`
/// is numbered `v + layer * |h|`.
pub fn gamma_construction(h: &Digraph, root: usize) -> Result<Digraph> {
    let n = h.order();
    if root >= n {
        return Err(Error::invalid(format!("root {root} out of range")));
    }
    if !h.is_acyclic() {
        return Err(Error::invalid("pattern must be acyclic"));
    }
    if !h.shadow().is_connected() {
        return Err(Error::invalid("pattern must be connected"));
    }
    let arcs = std::iter::once((root, root + n))
        .chain(h.arcs().iter().map(|&(u, v)| (u, v)))
        .chain(h.arcs().iter().map(|&(u, v)| (v + n, u + n)));
    Digraph::from_arcs(2 * n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::distance::distance_matrix;

    #[test]
    fn paths() {
        assert_eq!(directed_path(1).unwrap().arcs().len(), 0);
        assert_eq!(directed_path(3).unwrap().arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(directed_path(2).unwrap().arcs(), &[(0, 1)]);
        assert!(directed_path(0).is_err());
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_oriented_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 8, 27]);
        let t3 = enumerate_oriented_trees(3).unwrap();
        let keys: Vec<_> = t3.iter().map(|t| canonical_form(t.digraph()).unwrap()).collect();
        let path = canonical_form(&directed_path(3).unwrap()).unwrap();
        let in_star = canonical_form(&Digraph::from_arcs(3, [(0, 1), (2, 1)]).unwrap()).unwrap();
        let out_star = canonical_form(&Digraph::from_arcs(3, [(1, 0), (1, 2)]).unwrap()).unwrap();
        for k in [path, in_star, out_star] {
            assert!(keys.contains(&k));
        }
        assert!(enumerate_oriented_trees(10).is_err());
    }

    #[test]
    fn atlas_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn gamma_examples() {
        let i2 = directed_path(2).unwrap();
        let g = gamma_construction(&i2, 0).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.arcs(), &[(0, 1), (0, 2), (3, 2)]);
        assert!(g.is_acyclic());

        let single = gamma_construction(&Digraph::empty(1), 0).unwrap();
        assert_eq!(single.arcs(), &[(0, 1)]);

        let i3 = directed_path(3).unwrap();
        let g = gamma_construction(&i3, 1).unwrap();
        assert_eq!((g.order(), g.arcs().len()), (6, 5));
        assert_eq!(
            canonical_form(&g.induced(&[0, 1, 2])).unwrap(),
            canonical_form(&i3).unwrap()
        );
        let d = distance_matrix(&g.shadow());
        let h = distance_matrix(&i3.shadow());
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(d.get(u, v), h.get(u, v));
                assert_eq!(d.get(u + 3, v + 3), h.get(u, v));
            }
        }
    }

    #[test]
    fn gamma_rejects_bad_input() {
        let cyc = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(gamma_construction(&cyc, 0).is_err());
        assert!(gamma_construction(&Digraph::empty(2), 0).is_err());
        assert!(gamma_construction(&directed_path(2).unwrap(), 5).is_err());
    }
}
