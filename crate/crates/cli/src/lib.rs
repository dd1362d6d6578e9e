//! The `oriray` command line. [`run`] does all the work and returns the
//! exit code with the text to print, so tests can drive it in-process.

mod inputs;
mod repro;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use oriray::arrows::{arrow_check_capped, ddiam, ddiam_upper_bound, ghrv_check, ir_search, FamilyKind, IrSearch};
use oriray::bounds::{
    erdos_bounds, ir_upper_bounds, k_constant_report, klr_parameters, klr_report, pikh_parameters, pikh_report,
    random_feasibility, spencer_bound,
};
use oriray::catalog::{enumerate_free_trees, enumerate_graphs, enumerate_oriented_trees, gamma_construction, OrientedTree};
use oriray::certificate::verify_as;
use oriray::constructions::{
    bfs_parity_orientation, norm_span_check, odd_cycle_chord_check, pigeonhole_embed, tower_bound_holds,
    transitive_orientation, ExhaustiveEmbedder, TowerFamily,
};
use oriray::distance::distance_matrix;
use oriray::embedder::{greedy_tree_embed, pikh_check, Exactness, GreedyOutcome, Mode, PikhParameters};
use oriray::embedding::{EmbeddingCertificate, Variant};
use oriray::graph::{complete, rectangular_product, Digraph, Graph};
use oriray::io::{to_edge_list, to_graph6};
use oriray::orientation::{enumerate_orientations_capped, Orientation, ENUM_EDGE_CAP};
use oriray::Error;

use inputs::Digests;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "oriray", version, about = "Isometric Ramsey relations for oriented graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "ORIRAY_THREADS")]
    threads: Option<usize>,
    /// Largest edge count for exhaustive orientation enumeration.
    #[arg(long, global = true, default_value_t = ENUM_EDGE_CAP)]
    cap_edges: usize,
    /// Largest accepted input graph order.
    #[arg(long, global = true, default_value_t = 4096)]
    cap_vertices: usize,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Oriented,
    Isometric,
    Weak,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Oriented => Variant::Oriented,
            VariantArg::Isometric => Variant::Isometric,
            VariantArg::Weak => Variant::Weak,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Paths,
    Trees,
}

impl From<KindArg> for FamilyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Paths => FamilyKind::Paths,
            KindArg::Trees => FamilyKind::Trees,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Isometric,
    Plain,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Isometric => Mode::Isometric,
            ModeArg::Plain => Mode::Plain,
        }
    }
}

#[derive(Args, Debug)]
struct OrientationArg {
    /// Orientation bits in hex; a seeded random orientation when absent.
    #[arg(long)]
    orientation: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All-pairs hop distances.
    Dist {
        #[arg(long)]
        graph: String,
    },
    /// Rectangular (Cartesian) product.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Oriented (or free) trees on n vertices.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        free: bool,
    },
    /// All graphs on n vertices up to isomorphism, as graph6.
    GraphsAtlas {
        #[arg(long)]
        n: usize,
    },
    /// The doubling construction of an acyclic connected digraph.
    Gamma {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Orientations in lexicographic order, optionally under a fixed prefix.
    OrientEnum {
        #[arg(long)]
        graph: String,
        /// Leading bits as a 0/1 string.
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value_t = 1024)]
        limit: usize,
    },
    /// Whether every orientation of the graph embeds every family member.
    Arrow {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Isometric)]
        variant: VariantArg,
    },
    /// Directed diameter for paths or trees.
    Ddiam {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = KindArg::Paths)]
        kind: KindArg,
    },
    /// Smallest atlas graph that isometrically arrows the family.
    IrSearch {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Chromatic number against the shortest longest directed path.
    Ghrv {
        #[arg(long)]
        graph: String,
    },
    /// Three comparability tests side by side.
    Comparability {
        #[arg(long)]
        graph: String,
    },
    /// Orientation by BFS layer parity.
    BfsOrient {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// The tower size sequence and its small graphs.
    Tower {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        materialize: usize,
    },
    /// One pigeonhole step in `base x K_k`.
    PigeonholeEmbed {
        #[arg(long)]
        base: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tree: String,
        /// Family the base is known to arrow; members it does not arrow are dropped.
        #[arg(long)]
        sub_family: String,
        #[command(flatten)]
        orientation: OrientationArg,
    },
    /// The greedy embedder's hypotheses on a graph.
    PikhCheck {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        d: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Isometric)]
        mode: ModeArg,
        /// Random probes for condition 2 instead of the exact scan.
        #[arg(long)]
        trials: Option<u64>,
    },
    /// Greedy tree embedding into one orientation.
    GreedyEmbed {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        tree: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        d: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Isometric)]
        mode: ModeArg,
        #[command(flatten)]
        orientation: OrientationArg,
    },
    /// Numeric bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Re-checks an embedding certificate from its definitions.
    VerifyCert {
        file: String,
        /// Check against this variant instead of the declared one.
        #[arg(long = "as", value_enum)]
        as_variant: Option<VariantArg>,
    },
    /// Reruns a group of known values and prints a pass/fail table.
    Repro {
        #[arg(value_enum)]
        target: repro::Target,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    KConst,
    Pikh {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        c: f64,
    },
    Klr {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        eps: f64,
    },
    Erdos {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u64,
        /// Constant for the implicit upper bound (reported uncertified).
        #[arg(long)]
        spencer_constant: Option<f64>,
    },
    Ir {
        #[arg(long)]
        n: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dist { .. } => "dist",
            Command::Product { .. } => "product",
            Command::Trees { .. } => "trees",
            Command::GraphsAtlas { .. } => "graphs-atlas",
            Command::Gamma { .. } => "gamma",
            Command::OrientEnum { .. } => "orient-enum",
            Command::Arrow { .. } => "arrow",
            Command::Ddiam { .. } => "ddiam",
            Command::IrSearch { .. } => "ir-search",
            Command::Ghrv { .. } => "ghrv",
            Command::Comparability { .. } => "comparability",
            Command::BfsOrient { .. } => "bfs-orient",
            Command::Tower { .. } => "tower",
            Command::PigeonholeEmbed { .. } => "pigeonhole-embed",
            Command::PikhCheck { .. } => "pikh-check",
            Command::GreedyEmbed { .. } => "greedy-embed",
            Command::Bounds(BoundsCommand::KConst) => "bounds k-const",
            Command::Bounds(BoundsCommand::Pikh { .. }) => "bounds pikh",
            Command::Bounds(BoundsCommand::Klr { .. }) => "bounds klr",
            Command::Bounds(BoundsCommand::Erdos { .. }) => "bounds erdos",
            Command::Bounds(BoundsCommand::Ir { .. }) => "bounds ir",
            Command::VerifyCert { .. } => "verify-cert",
            Command::Repro { .. } => "repro",
        }
    }

    fn randomized(&self) -> bool {
        matches!(
            self,
            Command::PigeonholeEmbed { .. } | Command::GreedyEmbed { .. } | Command::PikhCheck { trials: Some(_), .. }
        )
    }
}

#[derive(Serialize)]
struct Caps {
    edges: usize,
    vertices: usize,
}

/// Provenance attached to every output. Contains nothing that varies
/// between runs with equal inputs.
#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    inputs: BTreeMap<String, String>,
    seed: Option<u64>,
    caps: Caps,
    version: &'static str,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    digests: Digests,
    cap_edges: usize,
    cap_vertices: usize,
    seed: u64,
}

/// A result body plus an exit code for outcomes that are answers but
/// still count as verification failures.
struct Reply {
    body: Value,
    code: i32,
}

impl Reply {
    fn ok(body: impl Serialize) -> Result<Reply, Error> {
        Ok(Reply {
            body: serde_json::to_value(body).expect("serializable"),
            code: EXIT_OK,
        })
    }

    fn checked(body: impl Serialize, pass: bool) -> Result<Reply, Error> {
        let mut r = Reply::ok(body)?;
        if !pass {
            r.code = EXIT_VERIFY;
        }
        Ok(r)
    }
}

impl Ctx {
    fn graph(&mut self, arg: &str, token: &str) -> Result<Graph, Error> {
        let g = inputs::graph(arg, token, &mut self.digests)?;
        if g.order() > self.cap_vertices {
            return Err(Error::CapExceeded {
                what: "input graph vertices",
                limit: self.cap_vertices as u64,
                actual: g.order() as u64,
            });
        }
        Ok(g)
    }

    fn enumerable(&self, g: &Graph) -> Result<(), Error> {
        if g.size() > self.cap_edges {
            return Err(Error::CapExceeded {
                what: "orientation enumeration edges",
                limit: self.cap_edges as u64,
                actual: g.size() as u64,
            });
        }
        Ok(())
    }

    fn orientation<'g>(&self, g: &'g Graph, arg: &OrientationArg) -> Result<Orientation<'g>, Error> {
        match &arg.orientation {
            Some(hex) => Orientation::from_hex(g, hex),
            None => Ok(Orientation::random(g, &mut ChaCha8Rng::seed_from_u64(self.seed))),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::SubEmbedding { .. } => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(t) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mut ctx = Ctx {
        digests: Digests::default(),
        cap_edges: cli.cap_edges,
        cap_vertices: cli.cap_vertices,
        seed: cli.seed,
    };
    let reply = dispatch(&cli.command, &mut ctx);
    let (mut body, code) = match reply {
        Ok(r) => (r.body, r.code),
        Err(e) => {
            return Outcome {
                code: error_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let manifest = RunManifest {
        subcommand: cli.command.name(),
        inputs: ctx.digests.0,
        seed: cli.command.randomized().then_some(cli.seed),
        caps: Caps {
            edges: cli.cap_edges,
            vertices: cli.cap_vertices,
        },
        version: env!("CARGO_PKG_VERSION"),
    };
    let manifest = serde_json::to_value(manifest).expect("serializable");
    match &mut body {
        Value::Object(map) => {
            map.insert("manifest".into(), manifest);
        }
        other => body = json!({ "result": other.take(), "manifest": manifest }),
    }
    let stdout = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string(&body).expect("serializable")),
        Format::Text => text_view(&body),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

/// `key: value` lines; tables from `repro` print one row per line.
fn text_view(body: &Value) -> String {
    let mut out = String::new();
    if let Some(rows) = body.get("rows").and_then(Value::as_array) {
        for r in rows {
            out.push_str(&format!(
                "{:<4} {:<40} expected {:<12} got {}\n",
                if r["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
                r["name"].as_str().unwrap_or(""),
                r["expected"],
                r["got"]
            ));
        }
        return out;
    }
    if let Value::Object(map) = body {
        for (k, v) in map {
            if k != "manifest" {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
    }
    out
}

fn tree_arg(ctx: &mut Ctx, token: &str) -> Result<OrientedTree, Error> {
    OrientedTree::new(inputs::digraph("tree", token, &mut ctx.digests)?)
}

fn arcs(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().to_vec()
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<Reply, Error> {
    match cmd {
        Command::Dist { graph } => {
            let g = ctx.graph("graph", graph)?;
            let rows: Vec<Vec<Option<u32>>> = distance_matrix(&g)
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|d| d.value()).collect())
                .collect();
            Reply::ok(json!({ "order": g.order(), "distances": rows }))
        }
        Command::Product { left, right } => {
            let p = rectangular_product(&ctx.graph("left", left)?, &ctx.graph("right", right)?);
            Reply::ok(json!({
                "order": p.order(),
                "size": p.size(),
                "graph6": to_graph6(&p),
                "edge_list": to_edge_list(&p),
            }))
        }
        Command::Trees { n, free } => {
            if *free {
                let g6: Vec<String> = enumerate_free_trees(*n)?.iter().map(to_graph6).collect();
                Reply::ok(json!({ "n": n, "count": g6.len(), "graph6": g6 }))
            } else {
                let trees: Vec<_> = enumerate_oriented_trees(*n)?.iter().map(|t| arcs(t.digraph())).collect();
                Reply::ok(json!({ "n": n, "count": trees.len(), "arcs": trees }))
            }
        }
        Command::GraphsAtlas { n } => {
            let g6: Vec<String> = enumerate_graphs(*n)?.iter().map(to_graph6).collect();
            Reply::ok(json!({ "n": n, "count": g6.len(), "graph6": g6 }))
        }
        Command::Gamma { pattern, root } => {
            let h = inputs::digraph("pattern", pattern, &mut ctx.digests)?;
            let g = gamma_construction(&h, *root)?;
            Reply::ok(json!({ "order": g.order(), "arcs": arcs(&g), "acyclic": g.is_acyclic() }))
        }
        Command::OrientEnum { graph, prefix, limit } => {
            let g = ctx.graph("graph", graph)?;
            let bits = prefix
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse {
                        token: c.to_string(),
                        reason: "prefix must be a 0/1 string".into(),
                    }),
                })
                .collect::<Result<Vec<bool>, Error>>()?;
            let it = enumerate_orientations_capped(&g, &bits, ctx.cap_edges)?;
            let total = it.len();
            let hex: Vec<String> = it.take(*limit).map(|o| o.to_hex()).collect();
            Reply::ok(json!({
                "edges": g.size(),
                "total": total,
                "truncated": (hex.len() as u64) < total,
                "orientations": hex,
            }))
        }
        Command::Arrow { graph, family, variant } => {
            let g = ctx.graph("graph", graph)?;
            let fam = inputs::family("family", family, &mut ctx.digests)?;
            Reply::ok(arrow_check_capped(&g, &fam, (*variant).into(), ctx.cap_edges)?)
        }
        Command::Ddiam { graph, kind } => {
            let g = ctx.graph("graph", graph)?;
            ctx.enumerable(&g)?;
            Reply::ok(json!({
                "ddiam": ddiam(&g, (*kind).into())?,
                "upper_bound": ddiam_upper_bound(&g)?,
            }))
        }
        Command::IrSearch { family, max_n } => {
            let fam = inputs::family("family", family, &mut ctx.digests)?;
            match ir_search(&fam, *max_n)? {
                IrSearch::Found { value, witness } => {
                    Reply::ok(json!({ "found": true, "value": value, "witness": to_graph6(&witness) }))
                }
                IrSearch::Unresolved { searched_up_to } => {
                    Reply::ok(json!({ "found": false, "searched_up_to": searched_up_to }))
                }
            }
        }
        Command::Ghrv { graph } => {
            let g = ctx.graph("graph", graph)?;
            ctx.enumerable(&g)?;
            let r = ghrv_check(&g)?;
            let agrees = r.agrees();
            Reply::checked(json!({ "report": r, "agrees": agrees }), agrees)
        }
        Command::Comparability { graph } => {
            let g = ctx.graph("graph", graph)?;
            ctx.enumerable(&g)?;
            let small = ddiam(&g, FamilyKind::Paths)? <= 2;
            let trans = transitive_orientation(&g)?.map(|o| o.to_hex());
            let chords = odd_cycle_chord_check(&g);
            let consistent = small == trans.is_some() && small == chords;
            Reply::checked(
                json!({
                    "ddiam_paths_at_most_2": small,
                    "transitive_orientation": trans,
                    "odd_cycle_chords": chords,
                    "consistent": consistent,
                }),
                consistent,
            )
        }
        Command::BfsOrient { graph, root } => {
            let g = ctx.graph("graph", graph)?;
            let r = bfs_parity_orientation(&g, *root)?;
            let span = norm_span_check(&r);
            Reply::checked(json!({ "orientation": r, "norm_span": span }), span <= 1)
        }
        Command::Tower { n, materialize } => {
            let fam = TowerFamily::with_levels(*n, *materialize)?;
            let holds: Vec<bool> = fam.sizes.iter().enumerate().map(|(i, a)| tower_bound_holds(i + 1, a)).collect();
            let all = holds.iter().all(|&h| h);
            Reply::checked(json!({ "family": fam, "bound_holds": holds }), all)
        }
        Command::PigeonholeEmbed {
            base,
            k,
            tree,
            sub_family,
            orientation,
        } => {
            let g = ctx.graph("base", base)?;
            ctx.enumerable(&g)?;
            let t = tree_arg(ctx, tree)?;
            let fam = inputs::family("sub_family", sub_family, &mut ctx.digests)?;
            let mut covered = Vec::new();
            for member in fam {
                if arrow_check_capped(&g, std::slice::from_ref(&member), Variant::Isometric, ctx.cap_edges)?.holds {
                    covered.push(member);
                }
            }
            let sub = ExhaustiveEmbedder::new(&covered)?;
            let host = rectangular_product(&g, &complete(*k)?);
            let o = ctx.orientation(&host, orientation)?;
            Reply::ok(pigeonhole_embed(&g, &sub, &o, &t)?)
        }
        Command::PikhCheck { graph, w, d, mode, trials } => {
            let g = ctx.graph("graph", graph)?;
            let (w, d) = (inputs::reals(w)?, inputs::reals(d)?);
            let params = PikhParameters::new(w.len() + 1, w, d, (*mode).into())?;
            let exactness = match trials {
                Some(t) => Exactness::Sampled {
                    trials: *t,
                    seed: ctx.seed,
                },
                None => Exactness::Exact,
            };
            let r = pikh_check(&g, &params, exactness)?;
            let all_ok = r.all_ok();
            Reply::ok(json!({ "report": r, "all_ok": all_ok }))
        }
        Command::GreedyEmbed {
            graph,
            tree,
            w,
            d,
            mode,
            orientation,
        } => {
            let g = ctx.graph("graph", graph)?;
            let t = tree_arg(ctx, tree)?;
            let (w, d) = (inputs::reals(w)?, inputs::reals(d)?);
            let params = PikhParameters::new(t.order(), w, d, (*mode).into())?;
            let o = ctx.orientation(&g, orientation)?;
            match greedy_tree_embed(&g, &o, &t, &params)? {
                GreedyOutcome::Embedded(cert) => Reply::ok(json!({ "embedded": true, "certificate": cert })),
                GreedyOutcome::Failed(trace) => Reply::ok(json!({ "embedded": false, "trace": trace })),
            }
        }
        Command::Bounds(b) => bounds(b),
        Command::VerifyCert { file, as_variant } => {
            let text = std::fs::read(file).map_err(|e| Error::Invalid(format!("cannot read {file}: {e}")))?;
            ctx.digests.0.insert("file".into(), {
                use sha2::Digest;
                hex::encode(sha2::Sha256::digest(&text))
            });
            let cert: EmbeddingCertificate = serde_json::from_slice(&text).map_err(|e| Error::Parse {
                token: format!("line {} column {}", e.line(), e.column()),
                reason: e.to_string(),
            })?;
            let variant = as_variant.map(Variant::from).unwrap_or(cert.variant);
            match verify_as(&cert, variant) {
                Ok(()) => Reply::ok(json!({ "valid": true, "variant": variant })),
                Err(why) => Reply::checked(
                    json!({ "valid": false, "variant": variant, "reason": why.to_string() }),
                    false,
                ),
            }
        }
        Command::Repro { target } => {
            let rows = repro::run(*target)?;
            let pass = rows.iter().all(|r| r.pass);
            Reply::checked(json!({ "target": target, "pass": pass, "rows": rows }), pass)
        }
    }
}

fn bounds(b: &BoundsCommand) -> Result<Reply, Error> {
    match b {
        BoundsCommand::KConst => Reply::ok(k_constant_report()),
        BoundsCommand::Pikh { n, delta, c } => {
            let p = pikh_parameters(*n, *delta, *c)?;
            let f = random_feasibility(&p);
            Reply::ok(json!({ "report": pikh_report(&p, &f), "parameters": p, "feasibility": f }))
        }
        BoundsCommand::Klr { n, eps } => {
            let (p, kc) = klr_parameters(*n, *eps)?;
            let f = random_feasibility(&p);
            Reply::ok(json!({ "report": klr_report(&p, &f, *eps), "parameters": p, "k": kc, "feasibility": f }))
        }
        BoundsCommand::Erdos { k, g, spencer_constant } => {
            let e = erdos_bounds(*k, *g)?;
            let mut reports = vec![e.lower];
            reports.extend(e.upper);
            if let Some(c) = spencer_constant {
                reports.push(spencer_bound(*k, *g, *c)?);
            }
            Reply::ok(json!({ "reports": reports }))
        }
        BoundsCommand::Ir { n } => Reply::ok(json!({ "reports": ir_upper_bounds(*n)? })),
    }
}
