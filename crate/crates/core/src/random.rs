//! Seeded random graphs for tests, benchmarks and the CLI.

use rand::Rng;

use crate::constructions::WeakHomomorphism;
use crate::graph::Graph;
use crate::Result;

/// `G(n, p)`: each pair independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// A random recursive tree on `n` vertices plus `G(n, p)` noise, so the
/// result is always connected.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend(gnp(n, p, rng).edges().iter().copied());
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// A weak homomorphism onto `target`: fibre `y` gets `fiber_sizes[y]`
/// vertices, and each pair inside a fibre or across an edge of `target` is
/// joined with probability `p`.
pub fn random_weak_hom<R: Rng + ?Sized>(
    target: &Graph,
    fiber_sizes: &[usize],
    p: f64,
    rng: &mut R,
) -> Result<WeakHomomorphism> {
    let map: Vec<usize> = fiber_sizes
        .iter()
        .enumerate()
        .flat_map(|(y, &s)| std::iter::repeat(y).take(s))
        .collect();
    let n = map.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (map[a], map[b]);
            if (x == y || target.has_edge(x, y)) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((a, b));
            }
        }
    }
    WeakHomomorphism::new(Graph::from_edges(n, edges)?, target.clone(), map)
}
