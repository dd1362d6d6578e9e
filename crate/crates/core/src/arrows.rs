//! Exhaustive arrow relations over all orientations of a host graph.

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_form, CANON_CAP};
use crate::catalog::{directed_path, enumerate_graphs, enumerate_oriented_trees};
use crate::embedding::{HostView, PatternPlan, Variant};
use crate::error::{ensure_cap, Error, Result};
use crate::graph::{chromatic_number, greedy_coloring, Digraph, Graph, CHROMATIC_CAP};
use crate::orientation::{bits_to_hex, suffix_bits, Orientation, ENUM_EDGE_CAP};
use crate::par;

/// Outcome of an exhaustive arrow check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub holds: bool,
    /// All `2^m` when the arrow holds; otherwise the lexicographic rank of
    /// the counterexample plus one.
    pub orientations_checked: u64,
    /// The lexicographically first orientation that embeds some member of
    /// the family in no way.
    pub counterexample: Option<FixedBitSet>,
    /// Index (into the caller's family) of the member that failed.
    pub failing_member: Option<usize>,
}

impl ArrowVerdict {
    pub fn counterexample_orientation<'g>(&self, g: &'g Graph) -> Option<Orientation<'g>> {
        self.counterexample
            .as_ref()
            .map(|b| Orientation::new(g, b.clone()).expect("counterexample matches host"))
    }
}

impl Serialize for ArrowVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ArrowVerdict", 4)?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("orientations_checked", &self.orientations_checked)?;
        if let Some(b) = &self.counterexample {
            st.serialize_field("counterexample", &bits_to_hex(b))?;
            st.serialize_field("failing_member", &self.failing_member)?;
        }
        st.end()
    }
}

/// Family members in check order: larger first, ties by canonical form.
fn check_order(family: &[Digraph]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..family.len()).collect();
    let keys: Vec<_> = family
        .iter()
        .map(|d| {
            if d.order() <= CANON_CAP {
                canonical_form(d).ok()
            } else {
                None
            }
        })
        .collect();
    idx.sort_by(|&a, &b| {
        family[b]
            .order()
            .cmp(&family[a].order())
            .then_with(|| keys[a].cmp(&keys[b]))
            .then(a.cmp(&b))
    });
    idx
}

/// Does every orientation of `g` contain every member of `family`?
pub fn arrow_check(g: &Graph, family: &[Digraph], variant: Variant) -> Result<ArrowVerdict> {
    arrow_check_capped(g, family, variant, ENUM_EDGE_CAP)
}

pub fn arrow_check_capped(
    g: &Graph,
    family: &[Digraph],
    variant: Variant,
    cap: usize,
) -> Result<ArrowVerdict> {
    if let Some(bad) = family.iter().position(|d| !d.is_acyclic()) {
        return Err(Error::invalid(format!(
            "family member {bad} has a directed cycle; no orientation arrows it"
        )));
    }
    let m = g.size();
    ensure_cap("orientation enumeration edges", m as u64, cap.min(63) as u64)?;
    let order = check_order(family);
    let plans: Vec<(usize, PatternPlan)> = order.iter().map(|&i| (i, PatternPlan::new(&family[i]))).collect();
    let base = HostView::new(g);
    let total = 1u64 << m;
    let failure = par::find_first(
        0..total,
        || base.clone(),
        |view, x| {
            let o = Orientation::new(g, suffix_bits(m, &[], x)).expect("bit count matches");
            view.orient(&o);
            plans
                .iter()
                .find(|(_, plan)| plan.find(view, variant).is_none())
                .map(|&(i, _)| (x, i))
        },
    );
    Ok(match failure {
        None => ArrowVerdict {
            holds: true,
            orientations_checked: total,
            counterexample: None,
            failing_member: None,
        },
        Some((x, i)) => ArrowVerdict {
            holds: false,
            orientations_checked: x + 1,
            counterexample: Some(suffix_bits(m, &[], x)),
            failing_member: Some(i),
        },
    })
}

/// Which family `ddiam` ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Paths,
    Trees,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paths" | "I" => Ok(FamilyKind::Paths),
            "trees" | "T" => Ok(FamilyKind::Trees),
            other => Err(Error::parse(other, "family kind must be paths or trees")),
        }
    }
}

/// The family `I_k` (as a one-element list) or `T_k`.
pub fn family(kind: FamilyKind, k: usize) -> Result<Vec<Digraph>> {
    match kind {
        FamilyKind::Paths => Ok(vec![directed_path(k)?]),
        FamilyKind::Trees => Ok(enumerate_oriented_trees(k)?
            .into_iter()
            .map(|t| t.into_digraph())
            .collect()),
    }
}

/// `min(max component diameter + 1, chi)`, the stopping rule for [`ddiam`].
/// Above the exact chromatic cap the greedy colour count stands in for chi.
pub fn ddiam_upper_bound(g: &Graph) -> Result<usize> {
    let chi = if g.order() <= CHROMATIC_CAP {
        chromatic_number(g)?
    } else {
        greedy_coloring(g).into_iter().map(|c| c + 1).max().unwrap_or(0)
    };
    Ok((g.max_component_diameter() + 1).min(chi))
}

/// Largest `k` with `g` isometrically arrowing `I_k` (paths) or `T_k` (trees).
pub fn ddiam(g: &Graph, kind: FamilyKind) -> Result<usize> {
    if g.order() == 0 {
        return Ok(0);
    }
    let upper = ddiam_upper_bound(g)?;
    for k in 2..=upper {
        if !arrow_check(g, &family(kind, k)?, Variant::Isometric)?.holds {
            return Ok(k - 1);
        }
    }
    Ok(upper)
}

/// Result of a bounded search for an isometric Ramsey number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrSearch {
    Found { value: usize, witness: Graph },
    Unresolved { searched_up_to: usize },
}

/// Smallest order `n <= max_n` of an atlas graph that isometrically arrows
/// every member of `family`, with the first such graph in atlas order.
pub fn ir_search(family: &[Digraph], max_n: usize) -> Result<IrSearch> {
    let smallest = family.iter().map(Digraph::order).max().unwrap_or(1).max(1);
    for n in smallest..=max_n {
        for g in enumerate_graphs(n)? {
            if arrow_check(&g, family, Variant::Isometric)?.holds {
                return Ok(IrSearch::Found { value: n, witness: g });
            }
        }
    }
    // Still validates the cap when the loop never ran.
    if max_n > 0 {
        ensure_cap("atlas order", max_n as u64, crate::catalog::ATLAS_CAP as u64)?;
    }
    Ok(IrSearch::Unresolved { searched_up_to: max_n })
}

/// Vertex cap for the subset DP used on digraphs with directed cycles.
pub const PATH_CAP: usize = 16;

/// Number of vertices on a longest simple directed path.
///
/// Acyclic inputs use a linear DP over a topological order and need no cap;
/// cyclic inputs fall back to a DP over vertex subsets, capped at [`PATH_CAP`].
pub fn longest_directed_path(d: &Digraph) -> Result<usize> {
    let n = d.order();
    if n == 0 {
        return Ok(0);
    }
    if let Some(topo) = d.topological_order() {
        let mut best = vec![1usize; n];
        for &v in topo.iter().rev() {
            best[v] = 1 + d.out_neighbors(v).map(|w| best[w]).max().unwrap_or(0);
        }
        return Ok(best.into_iter().max().unwrap_or(0));
    }
    ensure_cap("longest path vertices", n as u64, PATH_CAP as u64)?;
    // ends[mask]: vertices at which some path covering exactly `mask` ends.
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for v in 0..n {
            if e >> v & 1 == 1 {
                for w in d.out_neighbors(v) {
                    if mask >> w & 1 == 0 {
                        ends[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GhrvReport {
    pub chi: usize,
    pub min_longest_path: usize,
}

impl GhrvReport {
    pub fn agrees(&self) -> bool {
        self.chi == self.min_longest_path
    }
}

/// Chromatic number against the minimum, over all orientations, of the
/// longest directed path.
pub fn ghrv_check(g: &Graph) -> Result<GhrvReport> {
    let m = g.size();
    ensure_cap("orientation enumeration edges", m as u64, ENUM_EDGE_CAP as u64)?;
    let chi = chromatic_number(g)?;
    if g.order() > PATH_CAP {
        ensure_cap("longest path vertices", g.order() as u64, PATH_CAP as u64)?;
    }
    let min = par::min(
        0..1u64 << m,
        || (),
        |_, x| {
            let o = Orientation::new(g, suffix_bits(m, &[], x)).expect("bit count matches");
            longest_directed_path(&o.to_digraph()).expect("order within cap")
        },
    );
    Ok(GhrvReport {
        chi,
        min_longest_path: min.unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{acyclic_orientation, complete, cycle, path, rectangular_product};

    #[test]
    fn c5_arrows_i3() {
        let c5 = cycle(5).unwrap();
        let v = arrow_check(&c5, &[directed_path(3).unwrap()], Variant::Isometric).unwrap();
        assert!(v.holds);
        assert_eq!(v.orientations_checked, 32);
    }

    #[test]
    fn prism_arrows_t3() {
        let prism = rectangular_product(&complete(2).unwrap(), &complete(3).unwrap());
        let t3 = family(FamilyKind::Trees, 3).unwrap();
        assert!(arrow_check(&prism, &t3, Variant::Isometric).unwrap().holds);
    }

    #[test]
    fn k4_counterexample_is_identity_order() {
        let k4 = complete(4).unwrap();
        let v = arrow_check(&k4, &[directed_path(3).unwrap()], Variant::Isometric).unwrap();
        assert!(!v.holds);
        let expected = acyclic_orientation(&k4, &[0, 1, 2, 3]).unwrap();
        let got = v.counterexample_orientation(&k4).unwrap().to_digraph();
        assert_eq!(got, expected);
        assert_eq!(v.orientations_checked, 1);
    }

    #[test]
    fn rejects_cyclic_patterns() {
        let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(arrow_check(&complete(3).unwrap(), &[tri], Variant::Weak).is_err());
    }

    #[test]
    fn ddiam_small() {
        let c5 = cycle(5).unwrap();
        assert_eq!(ddiam(&c5, FamilyKind::Paths).unwrap(), 3);
        assert_eq!(ddiam(&c5, FamilyKind::Trees).unwrap(), 2);
        assert_eq!(ddiam(&Graph::empty(1), FamilyKind::Paths).unwrap(), 1);
    }

    #[test]
    fn ir_small() {
        let i2 = directed_path(2).unwrap();
        match ir_search(&[i2], 2).unwrap() {
            IrSearch::Found { value, witness } => {
                assert_eq!(value, 2);
                assert_eq!(witness, complete(2).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            ir_search(&[directed_path(3).unwrap()], 4).unwrap(),
            IrSearch::Unresolved { searched_up_to: 4 }
        );
    }

    #[test]
    fn longest_paths() {
        let k4 = complete(4).unwrap();
        let tt = acyclic_orientation(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(longest_directed_path(&tt).unwrap(), 4);
        assert_eq!(longest_directed_path(&directed_path(5).unwrap()).unwrap(), 5);
        let star = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(longest_directed_path(&star).unwrap(), 2);
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(longest_directed_path(&c4).unwrap(), 4);
    }

    #[test]
    fn ghrv_small() {
        assert_eq!(
            ghrv_check(&cycle(5).unwrap()).unwrap(),
            GhrvReport { chi: 3, min_longest_path: 3 }
        );
        assert_eq!(
            ghrv_check(&complete(4).unwrap()).unwrap(),
            GhrvReport { chi: 4, min_longest_path: 4 }
        );
        assert!(ghrv_check(&path(2).unwrap()).unwrap().agrees());
    }
}
