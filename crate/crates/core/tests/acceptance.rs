//! Acceptance suite. Runs without the test harness and prints one line per
//! criterion; exits non-zero when a criterion fails that is not listed as a
//! known discrepancy.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, random_graphs, Sampler};
use lrmso::eval::{
    co_connectivity_document, compile_flipconn_logic, compile_separator_logic, conn, eval,
    Assignment, EvalConfig, LowRankStrategy, SPLIT_SENTENCE,
};
use lrmso::generators::{self, figure1::*, Family};
use lrmso::hflip::{build_h_digraph, h_params};
use lrmso::logic::{parse_formula, parse_formula_with_free};
use lrmso::lowrank::{
    brute_lowrank, is_partition, is_uniform, lowrank_sweep, lowrank_via_suffixes,
    seed_for_suffix, span_contains, suffixes, DEFAULT_SUFFIX_CAP,
};
use lrmso::rank::{cutrank, rank_measures, representatives};
use lrmso::separation::{capture_separation, contains_biclique};
use lrmso::{ColoredGraph, VertexSet};

enum Verdict {
    Pass(String),
    Fail(String),
    /// Fails for a documented reason that the implementation cannot change.
    KnownFail(String),
    OutOfScope(String),
}

use Verdict::*;

fn set(n: usize, v: &[usize]) -> VertexSet {
    VertexSet::from_indices(n, v.iter().copied())
}

fn timed(limit: Duration, start: Instant, detail: String) -> Verdict {
    let took = start.elapsed();
    if took <= limit {
        Pass(format!("{detail} in {took:.2?}"))
    } else {
        Fail(format!("{detail} but took {took:.2?} (limit {limit:?})"))
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let g = generators::figure1_graph();
    let h = build_h_digraph(&g, &set(8, &[A1P, A2P]), &set(8, &[A1M, A2M]), 2);
    let phi_plus = [None, None, Some(A1P), Some(A2P), None, Some(A1P), Some(A2P), Some(A2P)];
    let phi_minus = [Some(A1M), Some(A2M), None, None, Some(A1M), Some(A1M), Some(A1M), None];
    if !h.admissible || h.reps.phi_plus != phi_plus || h.reps.phi_minus != phi_minus {
        return Fail("φ tables differ from the worked example".into());
    }
    let found: Vec<VertexSet> = suffixes(&h.digraph, 100)
        .unwrap()
        .into_iter()
        .filter(|x| !x.is_empty() && !x.is_full())
        .collect();
    let mut listed = vec![
        set(8, &[A1P, A2P, W4]),
        set(8, &[A1P, A2P, W3, W4]),
        set(8, &[A1P, A2P, W2, W3, W4]),
    ];
    listed.sort();
    if found == listed {
        return timed(Duration::from_secs(1), start, "φ tables and suffix list match".into());
    }
    let odd = set(8, &[A1P, A2P, W2, W3, W4]);
    let derivable = {
        let mut d = listed.clone();
        d.retain(|x| x != &odd);
        d
    };
    if found == derivable && h.digraph.has_arc(W2, W1) && cutrank(&g, &odd) == 3 {
        KnownFail(format!(
            "φ tables match; suffixes {:?} lack {:?}, which has cutrank 3 > 2 (arc w2->w1 forced by rule (iv))",
            found.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            odd.to_vec()
        ))
    } else {
        Fail(format!(
            "unexpected suffixes {:?}",
            found.iter().map(VertexSet::to_vec).collect::<Vec<_>>()
        ))
    }
}

/// One graph and rank of the criterion-2 sweep.
struct Run {
    graph: ColoredGraph,
    name: String,
    r: usize,
}

fn sweep_runs() -> Vec<Run> {
    let mut runs = Vec::new();
    for case in corpus(7, 200, 0x5eed) {
        for r in 0..=2 {
            if r == 2 && case.graph.n() > 5 {
                continue;
            }
            runs.push(Run {
                graph: case.graph.clone(),
                name: case.name.clone(),
                r,
            });
        }
    }
    runs
}

fn criterion_2(runs: &[Run], graphs: usize) -> Verdict {
    let start = Instant::now();
    let mut sets = 0;
    for run in runs {
        let via = lowrank_via_suffixes(&run.graph, run.r, DEFAULT_SUFFIX_CAP).unwrap();
        let brute = brute_lowrank(&run.graph, run.r, 16).unwrap();
        if via.sets != brute.sets {
            return Fail(format!("{} r={}: families differ", run.name, run.r));
        }
        sets += via.len();
    }
    if graphs < 200 {
        return Fail(format!("only {graphs} graphs in the corpus"));
    }
    timed(
        Duration::from_secs(600),
        start,
        format!("{graphs} graphs, {} runs, {sets} sets equal", runs.len()),
    )
}

fn criteria_3_6_9(runs: &[Run]) -> (Verdict, Verdict, Verdict) {
    const SEED_INSTANCES: usize = 10_000;
    let quota = SEED_INSTANCES.div_ceil(runs.len());
    let mut suffix_count = 0usize;
    let mut rank_failure = None;
    let mut rep_failure = None;
    let mut seed_failure = None;
    let mut seeded = 0usize;
    let mut max_cover = 0usize;
    let mut within = 0usize;
    for run in runs {
        let g = &run.graph;
        let entries = lowrank_sweep(g, run.r, DEFAULT_SUFFIX_CAP).unwrap();
        let admissible: Vec<_> = entries.iter().filter(|e| e.admissible).collect();
        let stride = (admissible.len() / quota.max(1)).max(1);
        let mut taken = 0;
        for e in &entries {
            for x in &e.suffixes {
                suffix_count += 1;
                let rank = cutrank(g, x);
                if e.admissible && rank > run.r && rank_failure.is_none() {
                    rank_failure = Some(format!("{} r={}: {:?} has cutrank {rank}", run.name, run.r, x.to_vec()));
                }
                let reps = representatives(g, x).len();
                if reps > 1 << rank && rep_failure.is_none() {
                    rep_failure = Some(format!("{}: {:?} has {reps} representatives at cutrank {rank}", run.name, x.to_vec()));
                }
            }
        }
        for (i, e) in admissible.iter().enumerate() {
            if i % stride != 0 || taken >= quota {
                continue;
            }
            let h = build_h_digraph(g, &e.a_plus, &e.a_minus, run.r).digraph;
            let params = h_params(&e.a_plus, &e.a_minus);
            for x in &e.suffixes {
                if taken >= quota || seeded >= SEED_INSTANCES {
                    break;
                }
                taken += 1;
                seeded += 1;
                let s = seed_for_suffix(&h, g, &params, x).unwrap();
                max_cover = max_cover.max(s.b_plus.len()).max(s.b_minus.len());
                within += usize::from(s.within_bound);
                let ok = span_contains(&s.seed, x)
                    && is_partition(&s.seed)
                    && is_uniform(g, &s.seed, &params);
                if !ok && seed_failure.is_none() {
                    seed_failure = Some(format!("{} r={}: suffix {:?}", run.name, run.r, x.to_vec()));
                }
            }
        }
    }
    let c3 = match rank_failure {
        Some(f) => Fail(f),
        None => Pass(format!("{suffix_count} suffixes, all within the rank bound")),
    };
    let c6 = match rep_failure {
        Some(f) => Fail(f),
        None => Pass(format!("{suffix_count} suffixes, representatives within 2^cutrank")),
    };
    let c9 = match seed_failure {
        Some(f) => Fail(f),
        None => Pass(format!(
            "{seeded} seeds contain their suffix, partition and uniform; largest cover {max_cover}, {within}/{seeded} within |types|^2"
        )),
    };
    (c3, c6, c9)
}

fn criterion_4() -> Verdict {
    let mut rng = Sampler::new(4);
    for i in 0..1000 {
        let n = 2 + rng.below(11);
        let g = generators::random(n, 0.15 + 0.7 * rng.below(100) as f64 / 100.0, 1000 + i).unwrap();
        let x = rng.subset(n);
        let m = rank_measures(&g, &x);
        let chain = m.rk_f2 <= m.rk_q && 2 * m.rk_q <= m.dv && m.dv <= 2 << m.rk_f2;
        if !chain {
            return Fail(format!("n={n} X={:?}: {m:?}", x.to_vec()));
        }
    }
    Pass("1000 random cuts satisfy the chain".into())
}

fn criterion_5() -> Verdict {
    let mut rng = Sampler::new(5);
    let mut tested = 0;
    let mut seed = 0u64;
    while tested < 100 {
        seed += 1;
        let n = 4 + rng.below(7);
        let g = generators::random(n, 0.3, 50_000 + seed).unwrap();
        if contains_biclique(&g, 2) {
            continue;
        }
        tested += 1;
        let x = rng.subset(n);
        let r = cutrank(&g, &x);
        match capture_separation(&g, &x, 2) {
            Ok(sep) if sep.is_separation(&g) && sep.captures(&x) && sep.order() <= 2 << r => {}
            Ok(sep) => {
                return Fail(format!(
                    "n={n} X={:?}: order {} at cutrank {r}",
                    x.to_vec(),
                    sep.order()
                ))
            }
            Err(e) => return Fail(format!("n={n} X={:?}: {e}", x.to_vec())),
        }
    }
    Pass("100 K_{2,2}-free graphs captured within order 2^(r+1)".into())
}

fn criterion_7() -> Verdict {
    let graphs = random_graphs(50, 2, 6, 7000);
    let mut checked = 0usize;
    for case in &graphs {
        let g = &case.graph;
        let n = g.n();
        for k in 0..=2usize {
            let avoid: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
            let text = format!("conn(s, t; {})", avoid.join(", "));
            let mut vars = vec!["s", "t"];
            vars.extend(avoid.iter().map(String::as_str));
            let direct = parse_formula_with_free(&text, &vars, &[]).unwrap();
            let sep = compile_separator_logic(&direct);
            let reach = compile_flipconn_logic(&sep).unwrap();
            let cfg = EvalConfig::default();
            let tuples = n.pow(2 + k as u32);
            for code in 0..tuples {
                let mut c = code;
                let mut vals = Vec::new();
                for _ in 0..2 + k {
                    vals.push(c % n);
                    c /= n;
                }
                let mut asg = Assignment::new();
                for (var, &v) in vars.iter().zip(&vals) {
                    asg = asg.with_vertex(*var, v);
                }
                let want = conn(g, vals[0], vals[1], &vals[2..]);
                let a = eval(g, &direct, &asg, &cfg).unwrap();
                let b = eval(g, &sep, &asg, &cfg).unwrap();
                let c = eval(g, &reach, &asg, &cfg).unwrap();
                if !(a == want && b == want && c == want) {
                    return Fail(format!("{} tuple {vals:?}: {want} {a} {b} {c}", case.name));
                }
                checked += 1;
            }
        }
    }
    Pass(format!("{checked} argument tuples agree across the three logics"))
}

fn criterion_8() -> Verdict {
    let doc = co_connectivity_document();
    let cfg = EvalConfig::default();
    for n in 4..=6 {
        let yes = generators::generate(&Family::ComplementOfCycle(n)).unwrap();
        let no = generators::generate(&Family::ComplementOfTwoCycles(n, n)).unwrap();
        if !eval(&yes, &doc, &Assignment::new(), &cfg).unwrap() {
            return Fail(format!("false on complement_of_cycle({n})"));
        }
        if eval(&no, &doc, &Assignment::new(), &cfg).unwrap() {
            return Fail(format!("true on complement_of_two_cycles({n},{n})"));
        }
    }
    Pass("true on complements of cycles, false on complements of two cycles, n = 4..6".into())
}

const SENTENCES: &[&str] = &[
    SPLIT_SENTENCE,
    "existsSet X : 2 . (forall x . (A(x) -> x in X)) /\\ (forall y . (C(y) -> ~(y in X)))",
    "existsSet X : 0 . (forall x . (A(x) -> x in X)) /\\ (forall y . (C(y) -> ~(y in X)))",
    "existsSet X : 0 . (exists x . x in X) /\\ (exists y . ~(y in X))",
    "existsSet X : 1 . (exists x . x in X) /\\ (exists y . ~(y in X))",
    "existsSet X : 1 . (exists x . exists y . x in X /\\ y in X /\\ ~(x = y)) /\\ (exists z . exists w . ~(z in X) /\\ ~(w in X) /\\ ~(z = w))",
    "existsSet X : 2 . (exists x . exists y . x in X /\\ y in X /\\ ~(x = y)) /\\ (exists z . exists w . ~(z in X) /\\ ~(w in X) /\\ ~(z = w))",
    "forallSet X : 0 . forall x . forall y . (x in X /\\ E(x, y)) -> y in X",
    "forallSet X : 1 . (exists x . x in X) \\/ (forall y . ~(y in X))",
    "existsSet X : 1 . exists x . exists y . x in X /\\ ~(y in X) /\\ E(x, y) /\\ (forall z . (z in X /\\ E(z, y)) -> z = x)",
    "existsSet X : 1 . existsSet Y : 1 . (exists x . x in X /\\ ~(x in Y)) /\\ (exists y . y in Y /\\ ~(y in X))",
    "existsSet X : 1 . forall x . (A(x) -> x in X)",
    "existsSet X : 1 . (exists x . x in X) /\\ (exists y . ~(y in X)) /\\ (forall x . forall y . (x in X /\\ ~(y in X)) -> E(x, y))",
    "existsSet X : 1 . (exists x . x in X) /\\ (exists y . ~(y in X)) /\\ (forall x . forall y . (x in X /\\ ~(y in X)) -> ~E(x, y))",
    "forall x . existsSet X : 1 . x in X /\\ (exists y . ~(y in X))",
    "forall x . forall y . ~(x = y) -> existsSet X : 1 . x in X /\\ ~(y in X)",
    "forall x . forall y . ~(x = y) -> existsSet X : 0 . x in X /\\ ~(y in X)",
    "existsSet X : 1 . (exists x . x in X) /\\ (forall s . forall t . (s in X /\\ t in X) -> conn(s, t; ))",
    "forallSet X : 2 . existsSet Y : 1 . forall x . (x in Y -> x in X)",
    "existsSet X : 1 . exists a . ~(a in X) /\\ (exists s . exists t . s in X /\\ ~(t in X) /\\ ~(t = a) /\\ conn(s, t; a))",
    "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=) } existsSet X : 1 . (exists x . x in X) /\\ (exists y . ~(y in X)) /\\ (forall s . forall t . (s in X /\\ t in X) -> flipconn<Comp>(s, t; ))",
    "flip Out k=1 { (eq=1, adj=*) ~ (eq=0, adj=*) } forall a . existsSet X : 2 . a in X /\\ (forall t . flipreach<Out>(a, t; a) -> t in X)",
    "forallSet X : 1 . forallSet Y : 1 . existsSet Z : 2 . forall x . (x in Z -> (x in X \\/ x in Y))",
];

fn colored(g: &ColoredGraph, rng: &mut Sampler) -> ColoredGraph {
    let n = g.n();
    let mut a = Vec::new();
    let mut c = Vec::new();
    for v in 0..n {
        match rng.below(3) {
            0 => a.push(v),
            1 => c.push(v),
            _ => {}
        }
    }
    g.clone()
        .with_color("A", set(n, &a))
        .and_then(|g| g.with_color("C", set(n, &c)))
        .unwrap()
}

fn criterion_10() -> Verdict {
    let docs: Vec<_> = SENTENCES.iter().map(|s| parse_formula(s).unwrap()).collect();
    let mut rng = Sampler::new(10);
    let graphs: Vec<ColoredGraph> = random_graphs(50, 2, 7, 10_000)
        .iter()
        .map(|c| colored(&c.graph, &mut rng))
        .collect();
    let brute = EvalConfig::with_strategy(LowRankStrategy::Brute);
    let suffix = EvalConfig::with_strategy(LowRankStrategy::Suffix);
    let mut trues = 0;
    for (gi, g) in graphs.iter().enumerate() {
        for (si, doc) in docs.iter().enumerate() {
            let a = eval(g, doc, &Assignment::new(), &brute).unwrap();
            let b = eval(g, doc, &Assignment::new(), &suffix).unwrap();
            if a != b {
                return Fail(format!("graph {gi}, sentence {si}: brute {a}, suffix {b}"));
            }
            trues += usize::from(a);
        }
    }
    Pass(format!(
        "{} sentences on {} graphs agree ({trues} true, {} false)",
        docs.len(),
        graphs.len(),
        docs.len() * graphs.len() - trues
    ))
}

fn main() -> ExitCode {
    let runs = sweep_runs();
    let graph_count = corpus(7, 200, 0x5eed).len();
    let mut results: Vec<(usize, Verdict)> = vec![(1, criterion_1()), (2, criterion_2(&runs, graph_count))];
    let (c3, c6, c9) = criteria_3_6_9(&runs);
    results.push((3, c3));
    results.push((4, criterion_4()));
    results.push((5, criterion_5()));
    results.push((6, c6));
    results.push((7, criterion_7()));
    results.push((8, criterion_8()));
    results.push((9, c9));
    results.push((10, criterion_10()));
    results.push((
        11,
        OutOfScope(
            "separating family with doubly-exponential layer sizes and the asymptotic running-time claim are not reproducible at desk scale".into(),
        ),
    ));
    let mut failed = false;
    for (i, verdict) in &results {
        let (tag, detail) = match verdict {
            Pass(d) => ("PASS", d),
            Fail(d) => {
                failed = true;
                ("FAIL", d)
            }
            KnownFail(d) => ("FAIL (known discrepancy)", d),
            OutOfScope(d) => ("OUT OF SCOPE", d),
        };
        println!("criterion {i:2}: {tag}: {detail}");
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
