//! The `lrmso` command line.
//!
//! Exit codes: 0 success (or a true sentence), 1 false sentence or failed
//! self-test, 2 usage error, 3 input error, 4 cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::eval::{EvalConfig, Evaluator, LowRankStrategy};
use crate::flip::{apply_flip, FlipSpec};
use crate::generators::{self, figure1, Family};
use crate::graph::{ColoredGraph, Digraph};
use crate::hflip::{build_h_digraph, h_params};
use crate::io::{digraph_to_json, graph_to_json, parse_graph, parse_vertex_list};
use crate::logic::{parse_flip_specs, parse_formula};
use crate::lowrank::{
    brute_lowrank, lowrank_via_suffixes, seed_for_suffix, seed_from_digraph, suffixes,
    DEFAULT_BRUTE_MAX_N, DEFAULT_SUFFIX_CAP,
};
use crate::rank::rank_measures;
use crate::separation::capture_separation;
use crate::vc::{vc_dimension, DEFAULT_VC_MAX_N};
use crate::vset::VertexSet;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_CAP: u8 = 4;

/// Environment variable overriding the default enumeration caps.
pub const CAP_ENV: &str = "LRMSO_CAP";

#[derive(Parser, Debug)]
#[command(name = "lrmso", version, about = "Model checker for low rank MSO and flip logics")]
struct Cli {
    /// Worker threads for parallel sweeps (output does not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Suffix,
}

impl From<Method> for LowRankStrategy {
    fn from(m: Method) -> Self {
        match m {
            Method::Brute => LowRankStrategy::Brute,
            Method::Suffix => LowRankStrategy::Suffix,
        }
    }
}

/// The digraph to work on: a declared flip with parameters, or `H_ā`.
#[derive(Args, Debug)]
struct FlipArgs {
    /// File of flip declarations
    #[arg(long, conflicts_with_all = ["plus", "minus", "rank"])]
    spec: Option<PathBuf>,
    /// Which declared flip to use when the file holds several
    #[arg(long, requires = "spec")]
    name: Option<String>,
    /// Parameter tuple for --spec, e.g. 0,3,3
    #[arg(long, requires = "spec", default_value = "")]
    params: String,
    /// Positive half of the parameters of H
    #[arg(long, requires_all = ["minus", "rank"])]
    plus: Option<String>,
    /// Negative half of the parameters of H
    #[arg(long, requires_all = ["plus", "rank"])]
    minus: Option<String>,
    /// Rank threshold for admissibility of H
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a sentence on a graph
    Check {
        graph: PathBuf,
        formula: PathBuf,
        #[arg(long, value_enum, default_value = "suffix")]
        strategy: Method,
        /// Print one JSON line per quantifier decision to stderr
        #[arg(long)]
        trace: bool,
        /// Largest graph order for the brute strategy
        #[arg(long)]
        subset_cap: Option<usize>,
        /// Cap on suffix enumeration
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Rank measures of the cut of a vertex set
    Rank {
        graph: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// All vertex sets of cutrank at most --rank
    EnumLowrank {
        graph: PathBuf,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "suffix")]
        method: Method,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Flip a graph and print the digraph
    Flip {
        graph: PathBuf,
        #[command(flatten)]
        flip: FlipArgs,
    },
    /// Suffixes of a flipped graph
    Suffixes {
        graph: PathBuf,
        #[command(flatten)]
        flip: FlipArgs,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Seed generated by --b, or a seed whose span holds the suffix --set
    Seed {
        graph: PathBuf,
        #[command(flatten)]
        flip: FlipArgs,
        #[arg(long, conflicts_with = "b", required_unless_present = "b")]
        set: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Separation capturing a vertex set
    Capture {
        graph: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long)]
        t: usize,
    },
    /// VC dimension of the neighbourhood set system
    Vc {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VC_MAX_N)]
        max_n: usize,
    },
    /// Generate a graph from a family
    Gen {
        family: String,
        params: Vec<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the built-in eight-vertex example
    Selftest,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedDocument(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<ColoredGraph> {
    parse_graph(&read(path)?)
}

fn parse_tuple(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Error::BadParameter(format!("`{part}` is not a vertex index")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        out.push(v);
    }
    Ok(out)
}

fn env_cap() -> Option<usize> {
    std::env::var(CAP_ENV).ok()?.trim().parse().ok()
}

fn cap_or_default(flag: Option<usize>) -> usize {
    flag.or_else(env_cap).unwrap_or(DEFAULT_SUFFIX_CAP)
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| json!(s.to_vec())).collect())
}

impl FlipArgs {
    /// The digraph and its parameter tuple.
    fn resolve(&self, g: &ColoredGraph) -> Result<(Digraph, Vec<usize>)> {
        let n = g.n();
        if let Some(path) = &self.spec {
            let specs = parse_flip_specs(&read(path)?)?;
            let spec: &FlipSpec = match &self.name {
                Some(name) => specs
                    .iter()
                    .find(|s| &s.name == name)
                    .ok_or_else(|| Error::BadParameter(format!("no flip named `{name}`")))?,
                None if specs.len() == 1 => &specs[0],
                None => {
                    return Err(Error::BadParameter(format!(
                        "{} flips declared, choose one with --name",
                        specs.len()
                    )))
                }
            };
            let params = parse_tuple(&self.params, n)?;
            return Ok((apply_flip(g, spec, &params)?, params));
        }
        match (&self.plus, &self.minus, self.rank) {
            (Some(p), Some(m), Some(r)) => {
                let p = parse_vertex_list(p, n)?;
                let m = parse_vertex_list(m, n)?;
                Ok((build_h_digraph(g, &p, &m, r).digraph, h_params(&p, &m)))
            }
            _ => Err(Error::BadParameter(
                "give either --spec with --params, or --plus, --minus and --rank".into(),
            )),
        }
    }
}

enum Outcome {
    Json(Value),
    Text(String),
    Verdict(bool),
    SelfTest(Value, bool),
}

fn execute(command: Command, trace_lines: &mut Vec<String>) -> Result<Outcome> {
    Ok(match command {
        Command::Check {
            graph,
            formula,
            strategy,
            trace,
            subset_cap,
            cap,
        } => {
            let g = load_graph(&graph)?;
            let doc = parse_formula(&read(&formula)?)?;
            let cfg = EvalConfig {
                strategy: strategy.into(),
                subset_cap: subset_cap.unwrap_or(DEFAULT_BRUTE_MAX_N),
                suffix_cap: cap_or_default(cap),
                trace,
            };
            let ev = Evaluator::new(&g, &doc, cfg);
            let result = ev.eval(&Default::default());
            trace_lines.extend(ev.take_trace());
            Outcome::Verdict(result?)
        }
        Command::Rank { graph, set } => {
            let g = load_graph(&graph)?;
            let x = parse_vertex_list(&set, g.n())?;
            Outcome::Json(serde_json::to_value(rank_measures(&g, &x)).expect("serializable"))
        }
        Command::EnumLowrank {
            graph,
            rank,
            method,
            cap,
        } => {
            let g = load_graph(&graph)?;
            let fam = match method {
                Method::Brute => brute_lowrank(&g, rank, DEFAULT_BRUTE_MAX_N)?,
                Method::Suffix => lowrank_via_suffixes(&g, rank, cap_or_default(cap))?,
            };
            Outcome::Json(serde_json::to_value(&fam).expect("serializable"))
        }
        Command::Flip { graph, flip } => {
            let g = load_graph(&graph)?;
            let (d, _) = flip.resolve(&g)?;
            Outcome::Text(digraph_to_json(&d))
        }
        Command::Suffixes { graph, flip, cap } => {
            let g = load_graph(&graph)?;
            let (d, _) = flip.resolve(&g)?;
            Outcome::Json(json!({ "sets": sets_json(&suffixes(&d, cap_or_default(cap))?) }))
        }
        Command::Seed {
            graph,
            flip,
            set,
            b,
        } => {
            let g = load_graph(&graph)?;
            let (d, params) = flip.resolve(&g)?;
            let value = match (set, b) {
                (Some(set), _) => {
                    let x = parse_vertex_list(&set, g.n())?;
                    serde_json::to_value(seed_for_suffix(&d, &g, &params, &x)?)
                }
                (None, Some(b)) => {
                    let b = parse_tuple(&b, g.n())?;
                    serde_json::to_value(seed_from_digraph(&d, &b)?)
                }
                (None, None) => unreachable!("clap requires --set or --b"),
            };
            Outcome::Json(value.expect("serializable"))
        }
        Command::Capture { graph, set, t } => {
            let g = load_graph(&graph)?;
            let x = parse_vertex_list(&set, g.n())?;
            let sep = capture_separation(&g, &x, t)?;
            Outcome::Json(json!({ "l": sep.l.to_vec(), "r": sep.r.to_vec(), "order": sep.order() }))
        }
        Command::Vc { graph, max_n } => {
            let g = load_graph(&graph)?;
            Outcome::Json(json!({ "vc": vc_dimension(&g, max_n)? }))
        }
        Command::Gen {
            family,
            params,
            seed,
            output,
        } => {
            let g = generators::generate(&Family::from_name(&family, &params, seed)?)?;
            let text = graph_to_json(&g);
            match output {
                Some(path) => {
                    std::fs::write(&path, text + "\n").map_err(|e| {
                        Error::BadParameter(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Outcome::Json(json!({ "written": path.display().to_string() }))
                }
                None => Outcome::Text(text),
            }
        }
        Command::Selftest => {
            let (report, ok) = selftest();
            Outcome::SelfTest(report, ok)
        }
    })
}

/// Golden checks on the eight-vertex example: the φ tables, the arcs forced
/// by the type (iv) rule, and the suffixes of `H` with their cutranks.
fn selftest() -> (Value, bool) {
    use figure1::*;
    let g = generators::figure1_graph();
    let p = VertexSet::from_indices(8, [A1P, A2P]);
    let m = VertexSet::from_indices(8, [A1M, A2M]);
    let h = build_h_digraph(&g, &p, &m, 2);
    let phi_plus = [None, None, Some(A1P), Some(A2P), None, Some(A1P), Some(A2P), Some(A2P)];
    let phi_minus = [Some(A1M), Some(A2M), None, None, Some(A1M), Some(A1M), Some(A1M), None];
    // w2 is non-adjacent to w1 and w3 while φ⁺(w2) = a1p is adjacent to a1m = φ⁻(w1) = φ⁻(w3)
    let mut expected: Vec<VertexSet> = [
        vec![],
        vec![A1P, A2P, W3, W4],
        vec![A1P, A2P, W4],
        (0..8).collect(),
    ]
    .into_iter()
    .map(|v| VertexSet::from_indices(8, v))
    .collect();
    expected.sort();
    let found = suffixes(&h.digraph, 100).unwrap_or_default();
    let checks = [
        ("admissible", h.admissible),
        ("phi_plus", h.reps.phi_plus == phi_plus),
        ("phi_minus", h.reps.phi_minus == phi_minus),
        ("arc_w2_w3", h.digraph.has_arc(W2, W3) && !h.digraph.has_arc(W3, W2)),
        ("arc_w2_w1", h.digraph.has_arc(W2, W1)),
        ("suffixes", found == expected),
        ("suffix_ranks", found.iter().all(|x| crate::rank::cutrank(&g, x) <= 2)),
        (
            "w2_suffix_rank",
            crate::rank::cutrank(&g, &VertexSet::from_indices(8, [A1P, A2P, W2, W3, W4])) == 3,
        ),
    ];
    let ok = checks.iter().all(|&(_, pass)| pass);
    let report = json!({
        "ok": ok,
        "checks": checks.iter().map(|&(name, pass)| json!({ "name": name, "pass": pass })).collect::<Vec<_>>(),
    });
    (report, ok)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::TooLarge(_) => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

/// Runs the CLI with the given arguments, writing to the given streams.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut trace_lines = Vec::new();
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(cli.command, &mut trace_lines)),
            Err(e) => Err(Error::BadParameter(format!("cannot start {threads} threads: {e}"))),
        },
        None => execute(cli.command, &mut trace_lines),
    };
    for line in &trace_lines {
        let _ = writeln!(err, "{line}");
    }
    match result {
        Ok(Outcome::Json(v)) => {
            let _ = writeln!(out, "{v}");
            EXIT_OK
        }
        Ok(Outcome::Text(t)) => {
            let _ = writeln!(out, "{t}");
            EXIT_OK
        }
        Ok(Outcome::Verdict(b)) => {
            let _ = writeln!(out, "{}", json!({ "result": b }));
            if b {
                EXIT_OK
            } else {
                EXIT_FALSE
            }
        }
        Ok(Outcome::SelfTest(report, ok)) => {
            let _ = writeln!(out, "{report}");
            if ok {
                EXIT_OK
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{}", json!({ "error": e.to_string() }));
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}
