mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oriray::arrows::{arrow_check, ddiam, ddiam_upper_bound, FamilyKind};
use oriray::canon::canonical_form;
use oriray::catalog::{directed_path, enumerate_graphs, enumerate_oriented_trees, gamma_construction};
use oriray::certificate::{verify, verify_as};
use oriray::distance::distance_matrix;
use oriray::embedding::{find_embedding, Variant};
use oriray::graph::{chromatic_number, Digraph};
use oriray::orientation::{enumerate_orientations, Orientation};
use oriray::random::random_connected;

use common::naive_valid;

/// Labelled tree from a Prüfer sequence.
fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[test]
fn oriented_tree_counts_match_prufer_buckets() {
    assert_eq!(enumerate_oriented_trees(1).unwrap().len(), 1);
    for n in 2..=6usize {
        let mut keys = HashSet::new();
        let total = n.pow(n as u32 - 2);
        for code in 0..total {
            let seq: Vec<usize> = (0..n - 2).map(|i| code / n.pow(i as u32) % n).collect();
            let edges = prufer_decode(&seq, n);
            for mask in 0..1u32 << (n - 1) {
                let arcs = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) });
                keys.insert(canonical_form(&Digraph::from_arcs(n, arcs).unwrap()).unwrap());
            }
        }
        assert_eq!(enumerate_oriented_trees(n).unwrap().len(), keys.len(), "n = {n}");
    }
}

#[test]
fn every_tree_extends_a_smaller_one() {
    for n in 2..=7 {
        let smaller: HashSet<_> = enumerate_oriented_trees(n - 1)
            .unwrap()
            .iter()
            .map(|t| canonical_form(t.digraph()).unwrap())
            .collect();
        for t in enumerate_oriented_trees(n).unwrap() {
            for leaf in t.leaves() {
                let (s, _) = t.remove_leaf(leaf).unwrap();
                assert!(smaller.contains(&canonical_form(s.digraph()).unwrap()));
            }
        }
    }
}

#[test]
fn gamma_is_acyclic_with_isometric_layers() {
    for n in 1..=5 {
        for t in enumerate_oriented_trees(n).unwrap() {
            let h = t.digraph();
            for root in 0..n {
                let gamma = gamma_construction(h, root).unwrap();
                assert!(gamma.is_acyclic());
                let shadow = gamma.shadow();
                assert!(shadow.is_connected());
                let dg = distance_matrix(&shadow);
                let dh = distance_matrix(&h.shadow());
                for u in 0..n {
                    for v in 0..n {
                        assert_eq!(dg.get(u, v), dh.get(u, v));
                        assert_eq!(dg.get(u + n, v + n), dh.get(u, v));
                        assert_eq!(gamma.has_arc(v + n, u + n), h.has_arc(u, v));
                    }
                }
            }
        }
    }
}

#[test]
fn prefix_partition_covers_the_stream() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20 {
        let g = random_connected(7, 0.3, &mut rng);
        let m = g.size();
        let all: Vec<String> = enumerate_orientations(&g, &[]).unwrap().map(|o| o.to_hex()).collect();
        let k = rng.gen_range(0..=m.min(4));
        let mut parts = Vec::new();
        for p in 0..1u32 << k {
            let prefix: Vec<bool> = (0..k).map(|i| p >> (k - 1 - i) & 1 == 1).collect();
            parts.extend(enumerate_orientations(&g, &prefix).unwrap().map(|o| o.to_hex()));
        }
        assert_eq!(parts, all);
    }
}

fn small_pattern() -> impl Strategy<Value = usize> {
    0..enumerate_oriented_trees(4).unwrap().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reversal_symmetry(seed in any::<u64>(), idx in small_pattern(), v in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(6, 0.4, &mut rng);
        let h = enumerate_oriented_trees(4).unwrap()[idx].digraph().clone();
        let variant = [Variant::Oriented, Variant::Isometric, Variant::Weak][v];
        let a = arrow_check(&g, std::slice::from_ref(&h), variant).unwrap();
        let b = arrow_check(&g, &[h.reverse()], variant).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        if let Some(o) = a.counterexample_orientation(&g) {
            prop_assert!(find_embedding(&h, &o, variant).is_none());
            prop_assert!(find_embedding(&h.reverse(), &o.reversed(), variant).is_none());
        }
    }

    #[test]
    fn certificates_and_variant_hierarchy(seed in any::<u64>(), n in 3usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, 0.35, &mut rng);
        let o = Orientation::random(&g, &mut rng);
        for t in enumerate_oriented_trees(4).unwrap() {
            for v in [Variant::Oriented, Variant::Isometric, Variant::Weak] {
                if let Some(c) = find_embedding(t.digraph(), &o, v) {
                    prop_assert!(verify(&c).is_ok());
                    prop_assert!(naive_valid(&c.pattern, &c.host, &c.bits, &c.map, v));
                    if v == Variant::Isometric {
                        prop_assert!(verify_as(&c, Variant::Oriented).is_ok());
                    }
                    if v != Variant::Weak {
                        prop_assert!(verify_as(&c, Variant::Weak).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn ddiam_within_its_bounds(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = oriray::random::gnp(n, 0.4, &mut rng);
        let d = ddiam(&g, FamilyKind::Paths).unwrap();
        prop_assert!(d <= chromatic_number(&g).unwrap());
        prop_assert!(d <= g.max_component_diameter() + 1);
        prop_assert!(d <= ddiam_upper_bound(&g).unwrap());
        prop_assert!(arrow_check(&g, &[directed_path(d).unwrap()], Variant::Isometric).unwrap().holds);
    }
}

#[test]
fn counterexamples_reverify_on_the_atlas() {
    let i3 = directed_path(3).unwrap();
    for n in 3..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let v = arrow_check(&g, std::slice::from_ref(&i3), Variant::Isometric).unwrap();
            match v.counterexample_orientation(&g) {
                Some(o) => assert!(find_embedding(&i3, &o, Variant::Isometric).is_none()),
                None => assert_eq!(v.orientations_checked, 1u64 << g.size()),
            }
        }
    }
}
