//! Numeric bounds: Chernoff tails, the geometric-sum inequality, the
//! random-graph feasibility conditions in both modes, their parameter
//! recipes, the constant `K`, and the Erdős/Burr calculators.
//!
//! Everything that can overflow is carried as a natural logarithm.

use std::collections::BTreeMap;
use std::f64::consts::LN_2;

use serde::Serialize;

use crate::embedder::Mode;
use crate::error::{Error, Result};

/// `ln(e^a + e^b + ...)` with Neumaier-compensated summation after the
/// max shift. `-inf` entries (zero terms) are ignored.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY || !m.is_finite() {
        return m;
    }
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &x in xs {
        let t = (x - m).exp();
        let s = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
    }
    m + (sum + comp).ln()
}

/// `ln(1 - C + C ln C)` given `ln C > 0`, accurate at both ends.
pub fn ln_chernoff_gap(ln_c: f64) -> f64 {
    let x = ln_c;
    assert!(x > 0.0, "needs C > 1");
    if x > 1.0 {
        // C (ln C - 1) + 1 = C (x - 1 + e^-x)
        x + (x - 1.0 + (-x).exp()).ln()
    } else if x > 1e-3 {
        (x * x.exp() - x.exp_m1()).ln()
    } else {
        // sum_{k>=2} x^k (k-1)/k!
        (x * x * (0.5 + x * (1.0 / 3.0 + x * (1.0 / 8.0 + x / 30.0)))).ln()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChernoffBounds {
    /// `(e^{C-1} / C^C)^{EX}`
    pub upper_c: f64,
    /// `e^{-c^2 EX / 3}`
    pub upper_plus: f64,
    /// `e^{-c^2 EX / 2}`
    pub lower_minus: f64,
}

pub fn chernoff(ex: f64, big_c: f64, c: f64) -> Result<ChernoffBounds> {
    if !(ex > 0.0 && ex.is_finite()) {
        return Err(Error::domain(format!("expected value {ex} must be positive")));
    }
    if !(big_c > 1.0 && big_c.is_finite()) {
        return Err(Error::domain(format!("C = {big_c} must exceed 1")));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain(format!("c = {c} must lie in (0, 1)")));
    }
    Ok(ChernoffBounds {
        upper_c: (ex * (big_c - 1.0 - big_c * big_c.ln())).exp(),
        upper_plus: (-c * c * ex / 3.0).exp(),
        lower_minus: (-c * c * ex / 2.0).exp(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeomCheck {
    Holds,
    Fails,
    NotApplicable,
}

/// `(a^n - 1)/(a - 1) < (1 + c) a^{n-1}` under `a > 1 + 1/c`, in log space.
pub fn geom_lemma_check(a: f64, c: f64, n: u64) -> GeomCheck {
    if !(c > 0.0 && a > 1.0 + 1.0 / c && n >= 1 && a.is_finite()) {
        return GeomCheck::NotApplicable;
    }
    let la = a.ln();
    let nf = n as f64;
    let lhs = nf * la + (-(-nf * la).exp()).ln_1p() - (a - 1.0).ln();
    let rhs = c.ln_1p() + (nf - 1.0) * la;
    if lhs < rhs {
        GeomCheck::Holds
    } else {
        GeomCheck::Fails
    }
}

/// The tuple `(n, N, p, c, C, delta)` of the random-graph argument.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomModelParameters {
    pub n: u64,
    pub ln_n_vertices: f64,
    /// `N` itself when it is below `2^53`.
    pub n_vertices: Option<u64>,
    pub ln_p: f64,
    pub c: f64,
    pub ln_big_c: f64,
    pub delta: f64,
    pub mode: Mode,
}

const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// The smallest integer above `e^{ln_t}`, as a log plus the integer when small.
fn smallest_integer_above(ln_t: f64) -> (f64, Option<u64>) {
    if ln_t < EXACT_INT_LIMIT.ln() - 1.0 {
        let n = ln_t.exp().floor() as u64 + 1;
        ((n as f64).ln(), Some(n))
    } else {
        // +1 is far below the resolution of the log.
        (ln_t, None)
    }
}

impl RandomModelParameters {
    /// `ln hbar`: `(1+c)^n (pN)^{n-2}` or, in plain mode, `(1+c)(n-2)pN`.
    pub fn ln_hbar(&self) -> f64 {
        let n = self.n as f64;
        let ln_pn = self.ln_p + self.ln_n_vertices;
        match self.mode {
            Mode::Isometric => n * self.c.ln_1p() + (n - 2.0) * ln_pn,
            Mode::Plain => self.c.ln_1p() + (n - 2.0).ln() + ln_pn,
        }
    }

    pub fn p(&self) -> f64 {
        self.ln_p.exp()
    }

    pub fn big_c(&self) -> f64 {
        self.ln_big_c.exp()
    }
}

/// One side-by-side comparison in log space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogComparison {
    pub ln_lhs: f64,
    pub ln_rhs: f64,
    pub holds: bool,
}

impl LogComparison {
    fn greater(ln_lhs: f64, ln_rhs: f64) -> Self {
        LogComparison {
            ln_lhs,
            ln_rhs,
            holds: ln_lhs > ln_rhs,
        }
    }

    fn less(ln_lhs: f64, ln_rhs: f64) -> Self {
        LogComparison {
            ln_lhs,
            ln_rhs,
            holds: ln_lhs < ln_rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub conditions: [LogComparison; 4],
    pub all_ok: bool,
    /// Every log value came out finite.
    pub finite: bool,
}

/// The four conditions under which `G(N, p)` works with positive
/// probability, evaluated in log space.
///
/// 1. `c^2 p N > 3 ln(3N)`
/// 2. `(1 - C + C ln C) p hbar > (n-1) ln N + ln(1+c) + ln 3`
/// 3. `c^2 C^2 hbar^2 > N ln 2 + ln(3n)`
/// 4. `A / ((1-c) p) + 2C (n-1) hbar / (1-c) < N`, with `A = (n-1)(n-2)`
///    (isometric) or `n(n-1)` (plain).
pub fn random_feasibility(params: &RandomModelParameters) -> FeasibilityReport {
    let RandomModelParameters {
        n,
        ln_n_vertices: ln_nv,
        ln_p,
        c,
        ln_big_c,
        ..
    } = *params;
    let nf = n as f64;
    let ln_c = c.ln();
    let ln_1pc = c.ln_1p();
    let ln_1mc = (-c).ln_1p();
    let ln_hbar = params.ln_hbar();

    let c1 = LogComparison::greater(2.0 * ln_c + ln_p + ln_nv, (3.0f64).ln() + ((3.0f64).ln() + ln_nv).ln());

    let rhs2 = log_sum_exp(&[(nf - 1.0).ln() + ln_nv.ln(), ln_1pc.ln(), (3.0f64.ln()).ln()]);
    let c2 = LogComparison::greater(ln_chernoff_gap(ln_big_c) + ln_p + ln_hbar, rhs2);

    let rhs3 = log_sum_exp(&[ln_nv + LN_2.ln(), (3.0 * nf).ln().ln()]);
    let c3 = LogComparison::greater(2.0 * (ln_c + ln_big_c + ln_hbar), rhs3);

    let a = match params.mode {
        Mode::Isometric => (nf - 1.0) * (nf - 2.0),
        Mode::Plain => nf * (nf - 1.0),
    };
    let t1 = a.ln() - ln_1mc - ln_p;
    let t2 = LN_2 + ln_big_c + (nf - 1.0).ln() + ln_hbar - ln_1mc;
    let c4 = LogComparison::less(log_sum_exp(&[t1, t2]), ln_nv);

    let conditions = [c1, c2, c3, c4];
    let finite = conditions
        .iter()
        .all(|x| !x.ln_lhs.is_nan() && !x.ln_rhs.is_nan() && x.ln_rhs.is_finite() && x.ln_lhs < f64::INFINITY);
    FeasibilityReport {
        all_ok: conditions.iter().all(|x| x.holds),
        conditions,
        finite,
    }
}

/// Whether `(delta, c)` meet the isometric recipe's constraints:
/// both in `(0, 1)` and `4(1+delta)(1-c)/(2+c) > 2+delta`.
pub fn pikh_constraints_hold(delta: f64, c: f64) -> bool {
    delta > 0.0 && delta < 1.0 && c > 0.0 && c < 1.0 && 4.0 * (1.0 + delta) * (1.0 - c) / (2.0 + c) > 2.0 + delta
}

/// Isometric recipe: `C = e^n`, `N` the smallest integer above
/// `((2+c) e^n / (1-c)) (n-1) (1+c)^n (4(1+delta) n^2 ln n)^{n-2}`,
/// `p = 4(1+delta) n^2 ln n / N`.
pub fn pikh_parameters(n: u64, delta: f64, c: f64) -> Result<RandomModelParameters> {
    if !pikh_constraints_hold(delta, c) {
        return Err(Error::domain(format!(
            "(delta, c) = ({delta}, {c}) violates 4(1+delta)(1-c)/(2+c) > 2+delta \
             (left side {:.6}, right side {:.6})",
            4.0 * (1.0 + delta) * (1.0 - c) / (2.0 + c),
            2.0 + delta
        )));
    }
    pikh_parameters_unchecked(n, delta, c)
}

/// The same recipe without the `(delta, c)` constraint check, for
/// diagnosing parameter choices that fall outside it.
pub fn pikh_parameters_unchecked(n: u64, delta: f64, c: f64) -> Result<RandomModelParameters> {
    if n < 3 {
        return Err(Error::domain("the isometric recipe needs n >= 3"));
    }
    if !(delta > 0.0 && c > 0.0 && c < 1.0) {
        return Err(Error::domain("delta must be positive and c in (0, 1)"));
    }
    let nf = n as f64;
    let ln_pn = pikh_ln_pn(nf, delta);
    let ln_t = (2.0 + c).ln() + nf - (-c).ln_1p() + (nf - 1.0).ln() + nf * c.ln_1p() + (nf - 2.0) * ln_pn;
    let (ln_nv, n_vertices) = smallest_integer_above(ln_t);
    Ok(RandomModelParameters {
        n,
        ln_n_vertices: ln_nv,
        n_vertices,
        ln_p: ln_pn - ln_nv,
        c,
        ln_big_c: nf,
        delta,
        mode: Mode::Isometric,
    })
}

/// `ln(4(1+delta) n^2 ln n)`, the product `pN` of the isometric recipe.
fn pikh_ln_pn(nf: f64, delta: f64) -> f64 {
    (4.0 * (1.0 + delta)).ln() + 2.0 * nf.ln() + nf.ln().ln()
}

impl RandomModelParameters {
    /// The isometric recipe with a different vertex count; `pN` is kept.
    pub fn with_ln_vertices(&self, ln_nv: f64) -> RandomModelParameters {
        let ln_pn = self.ln_p + self.ln_n_vertices;
        RandomModelParameters {
            ln_n_vertices: ln_nv,
            n_vertices: (ln_nv < EXACT_INT_LIMIT.ln() - 1.0).then(|| ln_nv.exp().round() as u64),
            ln_p: ln_pn - ln_nv,
            ..self.clone()
        }
    }
}

/// Smallest `n0` in `[3, n_max]` such that the isometric recipe is feasible
/// for every `n` in `[n0, n_max]`; `None` if it fails at `n_max`.
pub fn pikh_threshold(delta: f64, c: f64, n_max: u64) -> Result<Option<u64>> {
    let mut n0 = None;
    for n in (3..=n_max).rev() {
        if random_feasibility(&pikh_parameters(n, delta, c)?).all_ok {
            n0 = Some(n);
        } else {
            break;
        }
    }
    Ok(n0)
}

/// A grid choice of `(delta, c)` for a target `eps`: the smallest grid `c`,
/// then the largest grid `delta` with `(1+delta)(1+c) < 1+eps` and the
/// recipe's constraint. Grid step 0.01.
pub fn pikh_default_choice(eps: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::domain(format!("eps = {eps} must lie in (0, 1)")));
    }
    for ci in 1..100 {
        let c = ci as f64 / 100.0;
        for di in (1..100).rev() {
            let delta = di as f64 / 100.0;
            if (1.0 + delta) * (1.0 + c) < 1.0 + eps && pikh_constraints_hold(delta, c) {
                return Ok((delta, c));
            }
        }
    }
    Err(Error::domain(format!("no grid point satisfies the constraints for eps = {eps}")))
}

/// `16 x^2 / (1 - x + x ln x)` for `x > 1`.
pub fn k_objective(x: f64) -> f64 {
    16.0 * x * x / (1.0 - x + x * x.ln())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KConstant {
    pub x_star: f64,
    pub k: f64,
}

/// Golden-section minimisation of [`k_objective`] over `x > 1`, from the
/// default start `x = 3`.
pub fn minimize_k() -> KConstant {
    minimize_k_from(3.0)
}

/// As [`minimize_k`], bracketing from `start`. Works in `t = ln(x - 1)`,
/// where the objective is unimodal on the whole line.
pub fn minimize_k_from(start: f64) -> KConstant {
    assert!(start > 1.0, "start must exceed 1");
    let f = |t: f64| k_objective(1.0 + t.exp());
    // Walk downhill with doubling steps until the value rises.
    let t0 = (start - 1.0).ln();
    let dir = if f(t0 + 1e-3) < f(t0) { 1.0 } else { -1.0 };
    let mut step = 0.5;
    let (mut a, mut b) = (t0, t0 + dir * step);
    while f(b) < f(a) {
        step *= 2.0;
        a = b;
        b = a + dir * step;
    }
    // The minimum lies between the point before `a` and `b`.
    let (mut lo, mut hi) = {
        let prev = a - dir * step / 2.0;
        if prev < b {
            (prev, b)
        } else {
            (b, prev)
        }
    };
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > 1e-13 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let x_star = 1.0 + ((lo + hi) / 2.0).exp();
    KConstant {
        x_star,
        k: k_objective(x_star),
    }
}

/// Plain recipe: `C = x*`, `p = (1-c) / (2C(1+c)^2 n^2)`, `N` the smallest
/// integer above `K(1+delta) n^4 ln n`. `delta` is taken as `0.99 eps / K`
/// (capped below 1) and `c` as half the root of
/// `4(1+delta)(1-c)^2/(1+c)^3 = 4+delta`.
pub fn klr_parameters(n: u64, eps: f64) -> Result<(RandomModelParameters, KConstant)> {
    if n < 3 {
        return Err(Error::domain("the plain recipe needs n >= 3"));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::domain(format!("eps = {eps} must be positive")));
    }
    let kc = minimize_k();
    let delta = (0.99 * eps / kc.k).min(0.99);
    let target = (4.0 + delta) / (4.0 * (1.0 + delta));
    let h = |c: f64| (1.0 - c).powi(2) / (1.0 + c).powi(3);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if h(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c = lo / 2.0;
    if !(c > 0.0 && delta > 0.0) {
        return Err(Error::domain(format!("eps = {eps} is too small for representable delta and c")));
    }
    klr_parameters_with(n, delta, c).map(|p| (p, kc))
}

/// The plain recipe for explicit `(delta, c)`.
pub fn klr_parameters_with(n: u64, delta: f64, c: f64) -> Result<RandomModelParameters> {
    if !(delta > 0.0 && delta < 1.0 && c > 0.0 && c < 1.0) {
        return Err(Error::domain("delta and c must lie in (0, 1)"));
    }
    if 4.0 * (1.0 + delta) * (1.0 - c).powi(2) / (1.0 + c).powi(3) <= 4.0 + delta {
        return Err(Error::domain(format!(
            "(delta, c) = ({delta}, {c}) violates 4(1+delta)(1-c)^2/(1+c)^3 > 4+delta"
        )));
    }
    let kc = minimize_k();
    let nf = n as f64;
    let ln_t = kc.k.ln() + delta.ln_1p() + 4.0 * nf.ln() + nf.ln().ln();
    let (ln_nv, n_vertices) = smallest_integer_above(ln_t);
    let ln_p = (-c).ln_1p() - (2.0 * kc.x_star).ln() - 2.0 * c.ln_1p() - 2.0 * nf.ln();
    Ok(RandomModelParameters {
        n,
        ln_n_vertices: ln_nv,
        n_vertices,
        ln_p,
        c,
        ln_big_c: kc.x_star.ln(),
        delta,
        mode: Mode::Plain,
    })
}

/// A named numeric bound. Values too large for `f64` are reported through
/// `ln_value` alone with `log_space` set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub kind: BoundKind,
    pub inputs: BTreeMap<String, f64>,
    pub value: Option<f64>,
    pub ln_value: f64,
    pub log_space: bool,
    /// Exact integer value in decimal, when known.
    pub exact: Option<String>,
    /// False for shapes that depend on an unspecified constant.
    pub certified: bool,
    pub formula: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

impl BoundReport {
    fn new(name: &str, kind: BoundKind, inputs: &[(&str, f64)], ln_value: f64, formula: &str) -> Self {
        let value = ln_value.exp();
        let log_space = !value.is_finite() || value == 0.0;
        BoundReport {
            name: name.to_string(),
            kind,
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value: (!log_space).then_some(value),
            ln_value,
            log_space,
            exact: None,
            certified: true,
            formula: formula.to_string(),
        }
    }

    fn with_exact(mut self, exact: impl ToString) -> Self {
        self.exact = Some(exact.to_string());
        self
    }
}

/// `ln h` with `h = 6(k+1) ln(k+1)`.
fn ln_h(k: f64) -> f64 {
    6f64.ln() + (k + 1.0).ln() + (k + 1.0).ln().ln()
}

/// Upper bound `ceil(h^g)`, exact when it fits below `2^53`.
fn erdos_upper(k: f64, g: u64) -> BoundReport {
    let ln_v = g as f64 * ln_h(k);
    let r = BoundReport::new(
        "erdos_upper",
        BoundKind::Upper,
        &[("k", k), ("g", g as f64)],
        ln_v,
        "E(k,g) <= ceil(h^g), h = 6(k+1) ln(k+1)",
    );
    if ln_v < EXACT_INT_LIMIT.ln() {
        let h = 6.0 * (k + 1.0) * (k + 1.0).ln();
        r.with_exact(h.powi(g as i32).ceil() as u64)
    } else {
        r
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErdosBounds {
    pub lower: BoundReport,
    pub upper: Option<BoundReport>,
}

/// `E(k, g) >= k^{(g-1)/2}` and, for `g >= 4`, `E(k, g) <= ceil(h^g)`.
/// The upper bound is stated for `k, g >= 4`; for smaller `k` it is still
/// reported but flagged uncertified.
pub fn erdos_bounds(k: u64, g: u64) -> Result<ErdosBounds> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    if g < 3 {
        return Err(Error::domain("girth must be at least 3"));
    }
    let kf = k as f64;
    let ln_lower = (g as f64 - 1.0) / 2.0 * kf.ln();
    let mut lower = BoundReport::new(
        "erdos_lower",
        BoundKind::Lower,
        &[("k", kf), ("g", g as f64)],
        ln_lower,
        "E(k,g) >= k^((g-1)/2)",
    );
    if (g - 1) % 2 == 0 && ln_lower < EXACT_INT_LIMIT.ln() {
        lower = lower.with_exact(k.pow(((g - 1) / 2) as u32));
    }
    let upper = (g >= 4).then(|| {
        let mut r = erdos_upper(kf, g);
        r.certified = k >= 4;
        r
    });
    Ok(ErdosBounds { lower, upper })
}

/// The implicit bound `m^{1/(g-2)} ln m < C k` solved for the largest real
/// `m`, given a caller-supplied `C`. Never certified.
pub fn spencer_bound(k: u64, g: u64, constant: f64) -> Result<BoundReport> {
    if k < 3 || g < 3 {
        return Err(Error::domain("k and g must be at least 3"));
    }
    if !(constant > 0.0 && constant.is_finite()) {
        return Err(Error::domain("constant must be positive"));
    }
    let target = constant * k as f64;
    let gm = (g - 2) as f64;
    // phi(y) = e^{y/(g-2)} y is increasing for y > 0; solve phi(y) = target.
    let phi = |y: f64| (y / gm).exp() * y;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while phi(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if phi(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r = BoundReport::new(
        "erdos_spencer",
        BoundKind::Upper,
        &[("k", k as f64), ("g", g as f64), ("constant", constant)],
        lo,
        "m^(1/(g-2)) ln m < C k with m = E(k,g); C supplied by the caller",
    );
    r.certified = false;
    Ok(r)
}

/// The bounds that surround `IR(I_n)` and `IR(T_n)`.
pub fn ir_upper_bounds(n: u64) -> Result<Vec<BoundReport>> {
    if n < 2 {
        return Err(Error::domain("n must be at least 2"));
    }
    let nf = n as f64;
    // n^2/2 - n/2 + 1 = n(n-1)/2 + 1, always an integer.
    let burr_t = n * (n - 1) / 2 + 1;
    let girth = 2 * n - 2;
    let mut out = vec![
        BoundReport::new("burr_paths", BoundKind::Exact, &[("n", nf)], nf.ln(), "B(I_n) = n")
            .with_exact(n),
        BoundReport::new(
            "burr_trees_upper",
            BoundKind::Upper,
            &[("n", nf)],
            (burr_t as f64).ln(),
            "B(T_n) <= n^2/2 - n/2 + 1",
        )
        .with_exact(burr_t),
    ];
    if girth >= 4 {
        let mut ip = erdos_upper(nf, girth);
        ip.name = "ir_paths_upper".into();
        ip.inputs.insert("n".into(), nf);
        ip.formula = "IR(I_n) <= E(n, 2n-2) <= ceil(h^(2n-2)), h = 6(n+1) ln(n+1)".into();
        ip.certified = n >= 4;
        out.push(ip);
        let mut it = erdos_upper(burr_t as f64, girth);
        it.name = "ir_trees_upper".into();
        it.inputs.insert("n".into(), nf);
        it.formula = "IR(T_n) <= E(b, 2n-2) <= ceil(h^(2n-2)), b = n^2/2 - n/2 + 1, h = 6(b+1) ln(b+1)".into();
        it.certified = burr_t >= 4;
        out.push(it);
    }
    let lower = BoundReport::new(
        "r_paths_lower",
        BoundKind::Lower,
        &[("n", nf)],
        2.0 * nf.ln() - LN_2,
        "R(I_n) >= n^2/2",
    )
    .with_exact((n * n).div_ceil(2));
    out.push(lower);
    let ln_tower = (nf - 1.0).exp2() * LN_2;
    let mut tower = BoundReport::new(
        "tower_upper",
        BoundKind::Upper,
        &[("n", nf)],
        ln_tower,
        "IR(T_n) < 2^(2^(n-1))",
    );
    if n <= 7 {
        let bits = 1u32 << (n - 1);
        tower = tower.with_exact(num_bigint::BigUint::from(1u32) << bits);
    }
    out.push(tower);
    Ok(out)
}

/// `K` and its minimiser as a report.
pub fn k_constant_report() -> BoundReport {
    let kc = minimize_k();
    let mut r = BoundReport::new(
        "k_constant",
        BoundKind::Exact,
        &[("x_star", kc.x_star)],
        kc.k.ln(),
        "K = min over x > 1 of 16x^2 / (1 - x + x ln x)",
    );
    r.value = Some(kc.k);
    r
}

/// The vertex count of the isometric recipe as an upper bound on
/// `IR(T_n)`, certified only when every condition holds.
pub fn pikh_report(params: &RandomModelParameters, feasible: &FeasibilityReport) -> BoundReport {
    let mut r = BoundReport::new(
        "ir_trees_random_upper",
        BoundKind::Upper,
        &[("n", params.n as f64), ("delta", params.delta), ("c", params.c)],
        params.ln_n_vertices,
        "IR(T_n) <= N for the isometric recipe when conditions (1)-(4) hold",
    );
    if let Some(n) = params.n_vertices {
        r = r.with_exact(n);
    }
    r.certified = feasible.all_ok;
    r
}

/// The vertex count of the plain recipe as an upper bound on `R(T_n)`.
pub fn klr_report(params: &RandomModelParameters, feasible: &FeasibilityReport, eps: f64) -> BoundReport {
    let mut r = BoundReport::new(
        "r_trees_random_upper",
        BoundKind::Upper,
        &[("n", params.n as f64), ("eps", eps), ("delta", params.delta), ("c", params.c)],
        params.ln_n_vertices,
        "R(T_n) <= N, N the smallest integer above K(1+delta) n^4 ln n, when conditions (1')-(4') hold",
    );
    if let Some(n) = params.n_vertices {
        r = r.with_exact(n);
    }
    r.certified = feasible.all_ok;
    r
}
