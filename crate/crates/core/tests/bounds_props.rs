use proptest::prelude::*;

use oriray::bounds::{
    erdos_bounds, geom_lemma_check, k_objective, klr_parameters_with, log_sum_exp, minimize_k,
    minimize_k_from, pikh_default_choice, pikh_parameters, pikh_threshold, random_feasibility, GeomCheck,
    RandomModelParameters,
};
use oriray::embedder::Mode;

/// Direct float evaluation of the four conditions, for inputs small enough
/// not to overflow.
fn direct(p: &RandomModelParameters) -> [bool; 4] {
    let n = p.n as f64;
    let nv = p.ln_n_vertices.exp();
    let (pp, c, bc) = (p.p(), p.c, p.big_c());
    let hbar = match p.mode {
        Mode::Isometric => (1.0 + c).powf(n) * (pp * nv).powf(n - 2.0),
        Mode::Plain => (1.0 + c) * (n - 2.0) * pp * nv,
    };
    let a = match p.mode {
        Mode::Isometric => (n - 1.0) * (n - 2.0),
        Mode::Plain => n * (n - 1.0),
    };
    [
        c * c * pp * nv > 3.0 * (3.0 * nv).ln(),
        (1.0 - bc + bc * bc.ln()) * pp * hbar > (n - 1.0) * nv.ln() + c.ln_1p() + 3f64.ln(),
        c * c * bc * bc * hbar * hbar > nv * 2f64.ln() + (3.0 * n).ln(),
        a / ((1.0 - c) * pp) + 2.0 * bc * (n - 1.0) * hbar / (1.0 - c) < nv,
    ]
}

fn model(n: u64, ln_nv: f64, ln_p: f64, c: f64, ln_big_c: f64, mode: Mode) -> RandomModelParameters {
    RandomModelParameters {
        n,
        ln_n_vertices: ln_nv,
        n_vertices: None,
        ln_p,
        c,
        ln_big_c,
        delta: 0.1,
        mode,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn log_space_matches_direct(
        n in 3u64..12,
        ln_nv in 2.0f64..30.0,
        p_frac in 0.01f64..0.99,
        c in 0.01f64..0.9,
        ln_big_c in 0.01f64..5.0,
        plain in any::<bool>(),
    ) {
        let mode = if plain { Mode::Plain } else { Mode::Isometric };
        let p = model(n, ln_nv, p_frac.ln(), c, ln_big_c, mode);
        let r = random_feasibility(&p);
        let d = direct(&p);
        for i in 0..4 {
            // Skip knife-edge cases where rounding can decide either way.
            let gap = (r.conditions[i].ln_lhs - r.conditions[i].ln_rhs).abs();
            if gap > 1e-9 {
                prop_assert_eq!(r.conditions[i].holds, d[i], "condition {}", i + 1);
            }
        }
    }

    #[test]
    fn geometric_sum_inequality(a_excess in 0.0f64..1e3, c in 1e-3f64..10.0, n in 1u64..1_000_000) {
        let a = 1.0 + 1.0 / c + a_excess + 1e-9;
        prop_assert_eq!(geom_lemma_check(a, c, n), GeomCheck::Holds);
    }

    #[test]
    fn condition4_monotone_in_vertex_count(n in 3u64..400, grow in 0.0f64..50.0) {
        let p = pikh_parameters(n, 0.5, 0.05).unwrap();
        let before = random_feasibility(&p).conditions[3].holds;
        let after = random_feasibility(&p.with_ln_vertices(p.ln_n_vertices + grow)).conditions[3].holds;
        prop_assert!(!before || after);
    }

    #[test]
    fn log_sum_exp_is_exact_for_small_values(xs in prop::collection::vec(-20.0f64..20.0, 1..8)) {
        let direct: f64 = xs.iter().map(|x| x.exp()).sum::<f64>().ln();
        prop_assert!((log_sum_exp(&xs) - direct).abs() < 1e-9 * direct.abs().max(1.0));
    }
}

#[test]
fn geometric_lemma_random_samples() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
    for _ in 0..100_000 {
        let c: f64 = rng.gen_range(1e-3..10.0);
        let a = (1.0 + 1.0 / c) * rng.gen_range(1.000001..100.0);
        let n = rng.gen_range(1..10_000_000u64);
        assert_eq!(geom_lemma_check(a, c, n), GeomCheck::Holds, "a={a} c={c} n={n}");
    }
}

#[test]
fn k_minimum_matches_stationary_point() {
    // The derivative of the objective vanishes where 2 - 2x + x ln x = 0.
    let h = |x: f64| 2.0 - 2.0 * x + x * x.ln();
    let (mut lo, mut hi) = (2.0f64, 10.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let kc = minimize_k();
    assert!((kc.x_star - lo).abs() < 1e-6);
    assert!((kc.k - k_objective(lo)).abs() < 1e-9);
    for s in [1.5, 3.0, 10.0, 100.0, 1.0001, 1e6] {
        assert!((minimize_k_from(s).x_star - lo).abs() < 1e-6, "start {s}");
    }
}

#[test]
fn isometric_thresholds_for_valid_parameters() {
    assert_eq!(pikh_threshold(0.9, 0.1, 10_000).unwrap(), Some(117));
    assert_eq!(pikh_threshold(0.9, 0.05, 10_000).unwrap(), Some(442));
    assert_eq!(pikh_threshold(0.5, 0.05, 10_000).unwrap(), Some(1309));
    for n in [117u64, 1000, 10_000] {
        let p = pikh_parameters(n, 0.9, 0.1).unwrap();
        let r = random_feasibility(&p);
        assert!(r.all_ok && r.finite);
        assert!(p.n_vertices.is_none());
    }
    assert!(pikh_parameters(200, 0.05, 0.05).is_err());
    assert_eq!(pikh_default_choice(0.1).unwrap(), (0.08, 0.01));
}

#[test]
fn plain_recipe_feasible_with_larger_delta() {
    let p = klr_parameters_with(100_000, 0.9, 0.05).unwrap();
    assert!(random_feasibility(&p).all_ok);
    assert!(klr_parameters_with(100_000, 0.001, 0.5).is_err());
}

#[test]
fn erdos_sweep() {
    for k in 2..=20 {
        for g in 4..=12 {
            let b = erdos_bounds(k, g).unwrap();
            let up = b.upper.unwrap();
            assert!(b.lower.ln_value <= up.ln_value);
            assert!(up.ln_value.is_finite());
            assert_eq!(up.certified, k >= 4);
        }
    }
}
