//! Named groups of known values, recomputed on demand.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use oriray::arrows::{arrow_check, ddiam, family, ghrv_check, ir_search, FamilyKind, IrSearch};
use oriray::bounds::minimize_k;
use oriray::catalog::enumerate_graphs;
use oriray::constructions::{odd_cycle_chord_check, tower_bound_holds, tower_sizes, transitive_orientation};
use oriray::embedding::Variant;
use oriray::graph::{complete, cycle, rectangular_product};
use oriray::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    SmallValues,
    Tower,
    Ghrv,
    Comparability,
    OddCycles,
    KConstant,
    All,
}

#[derive(Serialize)]
pub struct Row {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

fn row(name: impl Into<String>, expected: Value, got: Value) -> Row {
    let pass = expected == got;
    Row {
        name: name.into(),
        expected,
        got,
        pass,
    }
}

fn ir_value(fam: &[oriray::graph::Digraph]) -> Result<Value, Error> {
    Ok(match ir_search(fam, 7)? {
        IrSearch::Found { value, .. } => json!(value),
        IrSearch::Unresolved { .. } => Value::Null,
    })
}

fn small_values(out: &mut Vec<Row>) -> Result<(), Error> {
    for (k, want) in [(1, 1), (2, 2), (3, 5)] {
        out.push(row(format!("IR(I{k})"), json!(want), ir_value(&family(FamilyKind::Paths, k)?)?));
    }
    let trees = family(FamilyKind::Trees, 3)?;
    out.push(row("IR(T3)", json!(6), ir_value(&trees)?));
    let prism = rectangular_product(&complete(2)?, &complete(3)?);
    out.push(row(
        "K2xK3 arrows T3",
        json!(true),
        json!(arrow_check(&prism, &trees, Variant::Isometric)?.holds),
    ));
    Ok(())
}

fn tower(out: &mut Vec<Row>) {
    let sizes = tower_sizes(20);
    let first: Vec<String> = sizes[..5].iter().map(|a| a.to_string()).collect();
    out.push(row("a_1..a_5", json!(["1", "2", "6", "42", "1806"]), json!(first)));
    let holds = sizes.iter().enumerate().all(|(i, a)| tower_bound_holds(i + 1, a));
    out.push(row("a_k + 1 <= 2^(2^(k-1)), k <= 20", json!(true), json!(holds)));
}

fn ghrv(out: &mut Vec<Row>) -> Result<(), Error> {
    for n in 1..=5 {
        let graphs = enumerate_graphs(n)?;
        let mut agree = 0;
        for g in &graphs {
            agree += usize::from(ghrv_check(g)?.agrees());
        }
        out.push(row(format!("chi = min longest path, n={n}"), json!(graphs.len()), json!(agree)));
    }
    Ok(())
}

fn comparability(out: &mut Vec<Row>) -> Result<(), Error> {
    for n in 1..=6 {
        let graphs = enumerate_graphs(n)?;
        let mut agree = 0;
        for g in &graphs {
            let small = ddiam(g, FamilyKind::Paths)? <= 2;
            let trans = transitive_orientation(g)?.is_some();
            agree += usize::from(small == trans && small == odd_cycle_chord_check(g));
        }
        out.push(row(format!("three tests agree, n={n}"), json!(graphs.len()), json!(agree)));
    }
    Ok(())
}

fn odd_cycles(out: &mut Vec<Row>) -> Result<(), Error> {
    for m in [5, 7, 9] {
        let c = cycle(m)?;
        out.push(row(format!("ddiam paths C{m}"), json!(3), json!(ddiam(&c, FamilyKind::Paths)?)));
        out.push(row(format!("ddiam trees C{m}"), json!(2), json!(ddiam(&c, FamilyKind::Trees)?)));
    }
    Ok(())
}

fn k_constant(out: &mut Vec<Row>) {
    let kc = minimize_k();
    let round = |x: f64, digits: i32| (x * 10f64.powi(digits)).round() / 10f64.powi(digits);
    out.push(row("K (3 decimals)", json!(98.825), json!(round(kc.k, 3))));
    out.push(row("x* (3 decimals)", json!(4.922), json!(round(kc.x_star, 3))));
}

pub fn run(target: Target) -> Result<Vec<Row>, Error> {
    let mut out = Vec::new();
    let all = target == Target::All;
    if all || target == Target::SmallValues {
        small_values(&mut out)?;
    }
    if all || target == Target::Tower {
        tower(&mut out);
    }
    if all || target == Target::Ghrv {
        ghrv(&mut out)?;
    }
    if all || target == Target::Comparability {
        comparability(&mut out)?;
    }
    if all || target == Target::OddCycles {
        odd_cycles(&mut out)?;
    }
    if all || target == Target::KConstant {
        k_constant(&mut out);
    }
    Ok(out)
}
