//! Browser bindings. Each export takes plain strings or numbers and returns
//! a JSON string; the plain functions below are what the tests call.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use oriray::arrows::{ddiam, ddiam_upper_bound, FamilyKind};
use oriray::bounds::{k_objective, minimize_k};
use oriray::constructions::{bfs_parity_orientation, norm_span_check};
use oriray::graph::Graph;
use oriray::io::from_graph6;

/// The page runs the exhaustive search on the main thread.
pub const DEMO_EDGE_CAP: usize = 18;

fn parse(graph6: &str) -> Result<Graph, String> {
    from_graph6(graph6.trim()).map_err(|e| e.to_string())
}

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn bfs_orient_json(graph6: &str, root: usize) -> Result<Value, String> {
    let g = parse(graph6)?;
    let r = bfs_parity_orientation(&g, root).map_err(|e| e.to_string())?;
    let o = r.orientation();
    let arcs: Vec<(usize, usize)> = o.arcs().collect();
    let edges: Vec<(usize, usize)> = g.edges().to_vec();
    Ok(json!({
        "n": g.order(),
        "edges": edges,
        "arcs": arcs,
        "norms": r.norms,
        "norm_span": norm_span_check(&r),
    }))
}

pub fn ddiam_json(graph6: &str) -> Result<Value, String> {
    let g = parse(graph6)?;
    if g.size() > DEMO_EDGE_CAP {
        return Err(format!("{} edges; the demo enumerates at most {DEMO_EDGE_CAP}", g.size()));
    }
    let e = |r: oriray::Result<usize>| r.map_err(|e| e.to_string());
    Ok(json!({
        "n": g.order(),
        "m": g.size(),
        "orientations": 1u64 << g.size(),
        "paths": e(ddiam(&g, FamilyKind::Paths))?,
        "trees": e(ddiam(&g, FamilyKind::Trees))?,
        "upper_bound": e(ddiam_upper_bound(&g))?,
    }))
}

/// Samples of the K objective on `[xmin, xmax]` plus the minimizer.
pub fn k_curve_json(xmin: f64, xmax: f64, samples: usize) -> Result<Value, String> {
    if !(xmin > 1.0 && xmax > xmin && (2..=10_000).contains(&samples)) {
        return Err("need 1 < xmin < xmax and 2..=10000 samples".into());
    }
    let step = (xmax - xmin) / (samples - 1) as f64;
    let points: Vec<[f64; 2]> = (0..samples)
        .map(|i| {
            let x = xmin + step * i as f64;
            [x, k_objective(x)]
        })
        .collect();
    let kc = minimize_k();
    Ok(json!({ "points": points, "x_star": kc.x_star, "k": kc.k }))
}

#[wasm_bindgen]
pub fn bfs_orient(graph6: &str, root: usize) -> String {
    wrap(bfs_orient_json(graph6, root))
}

#[wasm_bindgen]
pub fn directed_diameter(graph6: &str) -> String {
    wrap(ddiam_json(graph6))
}

#[wasm_bindgen]
pub fn k_curve(xmin: f64, xmax: f64, samples: usize) -> String {
    wrap(k_curve_json(xmin, xmax, samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use oriray::graph::{cycle, petersen};
    use oriray::io::to_graph6;

    #[test]
    fn c5_values() {
        let v = ddiam_json(&to_graph6(&cycle(5).unwrap())).unwrap();
        assert_eq!((v["paths"].as_u64(), v["trees"].as_u64()), (Some(3), Some(2)));
        let k7 = to_graph6(&oriray::graph::complete(7).unwrap());
        assert!(ddiam_json(&k7).unwrap_err().contains("21 edges"));
    }

    #[test]
    fn bfs_on_petersen() {
        let v = bfs_orient_json(&to_graph6(&petersen()), 0).unwrap();
        assert_eq!(v["arcs"].as_array().unwrap().len(), 15);
        assert!(v["norm_span"].as_u64().unwrap() <= 1);
    }

    #[test]
    fn curve_and_errors() {
        let v = k_curve_json(2.0, 10.0, 81).unwrap();
        let pts = v["points"].as_array().unwrap();
        assert_eq!(pts.len(), 81);
        let min = pts.iter().map(|p| p[1].as_f64().unwrap()).fold(f64::INFINITY, f64::min);
        assert!(min >= v["k"].as_f64().unwrap());
        assert!(k_curve_json(0.5, 2.0, 10).is_err());
        assert!(wrap(bfs_orient_json("not graph6!", 0)).contains("error"));
    }
}
