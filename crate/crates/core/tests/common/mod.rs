//! Naive oracles shared by the integration tests. They use only the plain
//! graph accessors, never the library's own verifiers or search code.
#![allow(dead_code)]

use oriray::embedding::Variant;
use oriray::graph::{Digraph, Graph};
use oriray::orientation::Orientation;

pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances by Floyd–Warshall.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == UNREACHABLE {
                continue;
            }
            for j in 0..n {
                if d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Whether `map` embeds `pattern` into the orientation `bits` of `host`,
/// straight from the definitions.
pub fn naive_valid(pattern: &Digraph, host: &Graph, bits: &fixedbitset::FixedBitSet, map: &[usize], variant: Variant) -> bool {
    let n = host.order();
    if map.len() != pattern.order() || map.iter().any(|&x| x >= n) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] {
                return false;
            }
        }
    }
    let Ok(o) = Orientation::new(host, bits.clone()) else {
        return false;
    };
    let mut arc = vec![vec![false; n]; n];
    for (a, b) in o.arcs() {
        arc[a][b] = true;
    }
    let dist = floyd_warshall(host);
    let pd = floyd_warshall(&pattern.shadow());
    for u in 0..map.len() {
        for v in 0..map.len() {
            if u == v {
                continue;
            }
            let (x, y) = (map[u], map[v]);
            if pattern.has_arc(u, v) && !arc[x][y] {
                return false;
            }
            if variant != Variant::Weak && arc[x][y] && !pattern.has_arc(u, v) {
                return false;
            }
            if variant == Variant::Isometric && dist[x][y] != pd[u][v] {
                return false;
            }
        }
    }
    true
}
