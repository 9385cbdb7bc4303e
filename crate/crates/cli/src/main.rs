//! `e3c`: export, metrics, routing and verification sweeps for E3C(r,s,t).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use e3c::e3c::{all_vertices, e3c_neighbors, graph_census, EdgeClass};
use e3c::oracles::{
    bfs_distance, binomial, graph_metrics, select_pairs, wide_upper_from_router, Distance, FaultSet, Graph,
    MetricOptions, Mode, DEFAULT_BUDGET,
};
use e3c::router::{bound_expr, case_bound, theorem31_witness};
use e3c::{classify_pair, construct_normalized, E3CParams, E3CVertex, Error, Isomorphism};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "e3c", version, about = "Exchanged 3-ary n-cube toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export the graph as an edge list, DOT or JSON.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        /// Output format (may also be given positionally).
        #[arg(value_enum)]
        format_arg: Option<Format>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Census, degrees, diameter and optional connectivity/fault/wide sections.
    Metrics {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        mode: ModeArgs,
        /// Fault-set size for the fault-distance section.
        #[arg(long)]
        faults: Option<usize>,
        /// Include the router-derived wide-diameter upper bound.
        #[arg(long)]
        wide: bool,
        /// Skip the all-pairs max-flow section.
        #[arg(long)]
        no_connectivity: bool,
    },
    /// Disjoint path system between two vertices, as JSON.
    Route {
        #[command(flatten)]
        graph: GraphArgs,
        u: String,
        v: String,
    },
    /// Route every selected pair and check the paths and per-case bounds.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// `all` or a case number in 1..=15.
        scope: Option<String>,
        /// Only check pairs of this case.
        #[arg(long)]
        lemma: Option<u8>,
        #[command(flatten)]
        mode: ModeArgs,
        /// Subtracted from every table bound; a negative-path fixture.
        #[arg(long, hide = true, default_value_t = 0)]
        bound_delta: usize,
    },
    /// Lower-bound witness, fault-distance maxima and the sandwich verdict.
    Fault {
        #[command(flatten)]
        graph: GraphArgs,
        /// Enumerate every fault set for the witness pair.
        #[arg(long)]
        exhaustive_pair_witness: bool,
        /// Fault-set size (default 2r+1).
        #[arg(long)]
        faults: Option<usize>,
        /// Extra random pairs to probe with the same fault mode.
        #[arg(long, default_value_t = 0)]
        pairs: usize,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Menger pair connectivity for one pair, or its minimum over pairs.
    Connectivity {
        #[command(flatten)]
        graph: GraphArgs,
        u: Option<String>,
        v: Option<String>,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

#[derive(Args)]
struct GraphArgs {
    r: usize,
    s: usize,
    t: usize,
}

impl GraphArgs {
    fn params(&self) -> Result<E3CParams, Failure> {
        Ok(E3CParams::new(self.r, self.s, self.t)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeKind {
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum)]
    mode: Option<ModeKind>,
    /// Shorthand for `--mode sampled`.
    #[arg(long, conflicts_with = "exhaustive")]
    sampled: bool,
    /// Shorthand for `--mode exhaustive`.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Cap on enumerated items (pairs, fault sets) in exhaustive mode.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl ModeArgs {
    fn mode(&self) -> Result<Mode, Failure> {
        let kind = match (self.mode, self.sampled, self.exhaustive) {
            (Some(ModeKind::Sampled), _, true) | (Some(ModeKind::Exhaustive), true, _) => {
                return Err(Failure::Usage("conflicting mode flags".into()))
            }
            (Some(kind), _, _) => kind,
            (None, true, _) => ModeKind::Sampled,
            _ => ModeKind::Exhaustive,
        };
        match kind {
            ModeKind::Exhaustive => Ok(Mode::Exhaustive),
            ModeKind::Sampled => match (self.seed, self.trials) {
                (Some(seed), Some(trials)) => Ok(Mode::Sampled { seed, trials }),
                _ => Err(Failure::Usage("sampled mode needs --seed and --trials".into())),
            },
        }
    }
}

/// Exit status classes: 1 verification failure, 2 usage, 3 resource budget.
#[derive(Debug)]
enum Failure {
    Verify(String),
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Construction(_) => Self::Verify(e.to_string()),
            Error::Resource(_) => Self::Resource(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Verify(_) => 1,
            Self::Usage(_) => 2,
            Self::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Verify(m) | Self::Usage(m) | Self::Resource(m) => m,
        }
    }
}

/// A finished command: the JSON result and whether it counts as a pass.
struct Outcome {
    mode: Option<Mode>,
    result: Value,
    pass: bool,
}

impl Outcome {
    fn ok(mode: Option<Mode>, result: Value) -> Self {
        Self { mode, result, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::Gen { .. } => "gen",
        Command::Metrics { .. } => "metrics",
        Command::Route { .. } => "route",
        Command::Verify { .. } => "verify",
        Command::Fault { .. } => "fault",
        Command::Connectivity { .. } => "connectivity",
    };
    match run(cli.command) {
        Ok(Some((params, outcome))) => {
            let envelope = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "command": name,
                "params": params,
                "mode": outcome.mode,
                "seed": outcome.mode.and_then(|m| m.seed()),
                "result": outcome.result,
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&envelope).expect("JSON values serialize")));
            ExitCode::from(u8::from(!outcome.pass))
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Runs a command; `None` means the output was already written in full.
fn run(command: Command) -> Result<Option<(E3CParams, Outcome)>, Failure> {
    let (params, outcome) = match command {
        Command::Gen { graph, format_arg, format, output } => {
            let format = match (format, format_arg) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Usage("two different formats given".into())),
                (a, b) => a.or(b).unwrap_or(Format::EdgeList),
            };
            let params = graph.params()?;
            let text = export(params, format);
            match output {
                None => {
                    emit(&text);
                    return Ok(None);
                }
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    let lines = text.lines().count();
                    (params, Outcome::ok(None, json!({ "output": path, "lines": lines })))
                }
            }
        }
        Command::Metrics { graph, mode, faults, wide, no_connectivity } => {
            let params = graph.params()?;
            let options =
                MetricOptions { mode: mode.mode()?, faults, connectivity: !no_connectivity, wide, budget: mode.budget };
            let report = graph_metrics(params, options)?;
            (params, Outcome::ok(Some(options.mode), to_value(&report)))
        }
        Command::Route { graph, u, v } => {
            let params = graph.params()?;
            (params, route(params, &u, &v)?)
        }
        Command::Verify { graph, scope, lemma, mode, bound_delta } => {
            let params = graph.params()?;
            let lemma = match (lemma, scope.as_deref()) {
                (Some(n), _) => Some(n),
                (None, None | Some("all")) => None,
                (None, Some(s)) => Some(s.parse().map_err(|_| Failure::Usage(format!("bad scope {s:?}")))?),
            };
            if let Some(n) = lemma {
                if !(1..=15).contains(&n) {
                    return Err(Failure::Usage(format!("case {n} outside 1..=15")));
                }
            }
            (params, verify(params, lemma, mode.mode()?, mode.budget, bound_delta)?)
        }
        Command::Fault { graph, exhaustive_pair_witness, faults, pairs, mode } => {
            let params = graph.params()?;
            let mut m = mode.mode()?;
            if exhaustive_pair_witness {
                m = Mode::Exhaustive;
            }
            (params, fault(params, faults, pairs, m, &mode)?)
        }
        Command::Connectivity { graph, u, v, mode } => {
            let params = graph.params()?;
            (params, connectivity(params, u.as_deref(), v.as_deref(), mode.mode()?, mode.budget)?)
        }
    };
    Ok(Some((params, outcome)))
}

/// Writes to standard output, treating a closed pipe as a normal end.
fn emit(text: &str) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn vertex(params: E3CParams, text: &str) -> Result<E3CVertex, Failure> {
    Ok(E3CVertex::parse(params, text)?)
}

/// Edges once each, smaller flat string first, sorted.
fn edges(params: E3CParams) -> Vec<(String, String, EdgeClass)> {
    let mut out = Vec::new();
    for u in all_vertices(params) {
        let us = u.to_string();
        for (v, class) in e3c_neighbors(&u) {
            let vs = v.to_string();
            if us < vs {
                out.push((us.clone(), vs, class));
            }
        }
    }
    out.sort();
    out
}

fn export(params: E3CParams, format: Format) -> String {
    let edges = edges(params);
    let mut s = String::new();
    match format {
        Format::EdgeList => {
            for (u, v, class) in &edges {
                let _ = writeln!(s, "{u} {v} {class}");
            }
        }
        Format::Dot => {
            let _ = writeln!(s, "graph \"{params}\" {{");
            for (u, v, class) in &edges {
                let color = ["black", "red", "blue", "darkgreen"][class.index()];
                let _ = writeln!(s, "  \"{u}\" -- \"{v}\" [class={class}, color={color}];");
            }
            s.push_str("}\n");
        }
        Format::Json => {
            let census = graph_census(params);
            let list: Vec<Value> = edges.iter().map(|(u, v, c)| json!([u, v, c.name()])).collect();
            let doc = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "params": params,
                "vertices": census.vertices,
                "edges": census.edges,
                "edge_list": list,
            });
            s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            s.push('\n');
        }
    }
    s
}

fn route(params: E3CParams, u: &str, v: &str) -> Result<Outcome, Failure> {
    let (u, v) = (vertex(params, u)?, vertex(params, v)?);
    if u == v {
        return Err(Failure::Usage("route needs distinct endpoints".into()));
    }
    let (system, iso) = construct_normalized(&u, &v)?;
    let expr = bound_expr(system.label.fenlei, system.label.subcase)?;
    let result = json!({
        "system": system,
        "lengths": system.lengths(),
        "bound_expr": expr.to_string(),
        "normalization": {
            "applied": !iso.is_identity(),
            "sigma": iso.sigma(),
            "routed_in": iso.target(),
        },
    });
    Ok(Outcome::ok(None, result))
}

fn exhaustive_pairs(params: E3CParams) -> u64 {
    binomial(params.vertex_count(), 2)
}

fn checked_pairs(params: E3CParams, mode: Mode, budget: u64) -> Result<Vec<(u64, u64)>, Failure> {
    if mode == Mode::Exhaustive && exhaustive_pairs(params) > budget {
        return Err(Failure::Resource(format!(
            "{} pairs exceed the budget of {budget}; use sampled mode",
            exhaustive_pairs(params)
        )));
    }
    Ok(select_pairs(params, mode))
}

#[derive(Default, Serialize)]
struct Tally {
    fenlei: u8,
    subcase: u8,
    pairs: u64,
    max_length: usize,
    bound: usize,
    violations: u64,
}

/// Per-thread partial result of a verification sweep.
#[derive(Default)]
struct Sweep {
    cases: BTreeMap<(u8, u8), Tally>,
    failures: Vec<String>,
    paths_checked: u64,
}

const MAX_REPORTED: usize = 20;

fn verify(params: E3CParams, lemma: Option<u8>, mode: Mode, budget: u64, delta: usize) -> Result<Outcome, Failure> {
    let pairs = checked_pairs(params, mode, budget)?;
    let width = 2 * params.min_len() + 2;
    let n = params.n();
    let work = |chunk: &[(u64, u64)]| -> Result<Sweep, Error> {
        let mut sweep = Sweep::default();
        for &(a, b) in chunk {
            let u = E3CVertex::from_index(params, a)?;
            let v = E3CVertex::from_index(params, b)?;
            let label = classify_pair(&u, &v)?;
            if lemma.is_some_and(|l| l != label.fenlei) {
                continue;
            }
            let bound = case_bound(&label, params).saturating_sub(delta);
            let tally = sweep.cases.entry((label.fenlei, label.subcase)).or_insert_with(|| Tally {
                fenlei: label.fenlei,
                subcase: label.subcase,
                bound,
                ..Tally::default()
            });
            tally.pairs += 1;
            let problem = match construct_normalized(&u, &v) {
                Ok((system, _)) => {
                    tally.max_length = tally.max_length.max(system.max_len());
                    sweep.paths_checked += system.paths.len() as u64;
                    if system.paths.len() != width {
                        Some(format!("{} paths, expected {width}", system.paths.len()))
                    } else if system.max_len() > n + 5 {
                        Some(format!("length {} exceeds n+5 = {}", system.max_len(), n + 5))
                    } else {
                        system.check(bound).err()
                    }
                }
                Err(Error::Construction(defect)) => Some(defect.to_string()),
                Err(e) => return Err(e),
            };
            if let Some(p) = problem {
                tally.violations += 1;
                if sweep.failures.len() < MAX_REPORTED {
                    sweep.failures.push(format!("{u} {v}: {p}"));
                }
            }
        }
        Ok(sweep)
    };
    let mut total = Sweep::default();
    for part in par_chunks(&pairs, work)? {
        for (key, t) in part.cases {
            let e = total.cases.entry(key).or_insert_with(|| Tally { bound: t.bound, ..Tally::default() });
            e.fenlei = t.fenlei;
            e.subcase = t.subcase;
            e.pairs += t.pairs;
            e.max_length = e.max_length.max(t.max_length);
            e.violations += t.violations;
        }
        total.paths_checked += part.paths_checked;
        total.failures.extend(part.failures);
    }
    total.failures.truncate(MAX_REPORTED);
    let checked: u64 = total.cases.values().map(|t| t.pairs).sum();
    let violations: u64 = total.cases.values().map(|t| t.violations).sum();
    let max_length = total.cases.values().map(|t| t.max_length).max().unwrap_or(0);
    let result = json!({
        "scope": lemma.map_or_else(|| "all".to_string(), |l| l.to_string()),
        "pairs": checked,
        "paths": total.paths_checked,
        "width": width,
        "max_length": max_length,
        "n_plus_5": n + 5,
        "violations": violations,
        "bound_delta": delta,
        "cases": total.cases.values().collect::<Vec<_>>(),
        "failures": total.failures,
    });
    Ok(Outcome { mode: Some(mode), result, pass: violations == 0 })
}

fn par_chunks<I: Sync, R: Send>(items: &[I], work: impl Fn(&[I]) -> Result<R, Error> + Sync) -> Result<Vec<R>, Error> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let size = items.len().div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items.chunks(size).map(|chunk| scope.spawn(|| work(chunk))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[derive(Serialize)]
struct PairProbe {
    u: String,
    v: String,
    max: Distance,
    faults: Vec<String>,
    evaluations: u64,
    exhaustive: bool,
}

fn fault(params: E3CParams, f: Option<usize>, extra: usize, mode: Mode, args: &ModeArgs) -> Result<Outcome, Failure> {
    let n = params.n();
    let f = f.unwrap_or(2 * params.min_len() + 1);
    let delta = params.min_degree();
    if f + 1 > delta {
        return Err(Failure::Usage(format!("f = {f} exceeds min degree - 1 = {}", delta - 1)));
    }
    // The witness is stated for ordered parameters; transport it back.
    let iso = Isomorphism::normalizing(params);
    let back = iso.inverse();
    let w = theorem31_witness(iso.target())?;
    let (wu, wv) = (back.map(&w.u), back.map(&w.v));
    let wf: Vec<E3CVertex> = w.faults.iter().map(|x| back.map(x)).collect();
    let witness_distance = bfs_distance(params, &wu, &wv, &FaultSet::from_vertices(&wf))?;

    let graph = Graph::new(params)?;
    let mut endpoints = vec![(wu.index(), wv.index())];
    if extra > 0 {
        let seed = args.seed.unwrap_or(0);
        endpoints.extend(select_pairs(params, Mode::Sampled { seed, trials: extra }));
    }
    let mut probes = Vec::new();
    for (a, b) in endpoints {
        let m = graph.fault_distance_max(a, b, f, mode, args.budget)?;
        let name = |i: u64| E3CVertex::from_index(params, i).expect("index in range").to_string();
        probes.push(PairProbe {
            u: name(a),
            v: name(b),
            max: m.max,
            faults: m.witness.vertices(params).iter().map(ToString::to_string).collect(),
            evaluations: m.evaluations,
            exhaustive: m.exhaustive,
        });
    }
    // The witness set is itself one of the evaluated fault sets.
    let observed = probes.iter().map(|p| p.max).chain([witness_distance]).max().expect("non-empty");
    let wide_mode = match mode {
        Mode::Exhaustive => Mode::Exhaustive,
        Mode::Sampled { seed, trials } => Mode::Sampled { seed, trials: trials.min(10_000) },
    };
    if wide_mode == Mode::Exhaustive && exhaustive_pairs(params) > args.budget {
        return Err(Failure::Resource(format!("{} router pairs exceed the budget", exhaustive_pairs(params))));
    }
    let wide = wide_upper_from_router(params, wide_mode)?;
    let lower = Distance::Finite(n + 3);
    let upper = Distance::Finite(n + 5);
    let pass = lower <= witness_distance && witness_distance <= observed && observed <= upper && wide.max <= n + 5;
    let result = json!({
        "f": f,
        "witness": { "u": wu.to_string(), "v": wv.to_string(),
                     "faults": wf.iter().map(ToString::to_string).collect::<Vec<_>>(),
                     "distance": witness_distance },
        "probes": probes,
        "observed_max": observed,
        "wide_upper": wide,
        "lower_bound": n + 3,
        "upper_bound": n + 5,
        "verdict": if pass { "PASS" } else { "FAIL" },
    });
    Ok(Outcome { mode: Some(mode), result, pass })
}

fn connectivity(
    params: E3CParams,
    u: Option<&str>,
    v: Option<&str>,
    mode: Mode,
    budget: u64,
) -> Result<Outcome, Failure> {
    let width = 2 * params.min_len() + 2;
    let graph = Graph::new(params)?;
    let (result, count) = match (u, v) {
        (Some(u), Some(v)) => {
            let (u, v) = (vertex(params, u)?, vertex(params, v)?);
            if u == v {
                return Err(Failure::Usage("connectivity needs distinct endpoints".into()));
            }
            let (count, paths) = graph.pair_connectivity(u.index(), v.index())?;
            let paths: Vec<Vec<String>> = paths
                .iter()
                .map(|p| {
                    p.iter().map(|&i| E3CVertex::from_index(params, i).expect("index in range").to_string()).collect()
                })
                .collect();
            (json!({ "u": u.to_string(), "v": v.to_string(), "count": count, "paths": paths, "width": width }), count)
        }
        (None, None) => {
            let pairs = checked_pairs(params, mode, budget)?;
            let mins = par_chunks(&pairs, |chunk| {
                let mut best = (usize::MAX, 0, 0);
                for &(a, b) in chunk {
                    let (k, _) = graph.pair_connectivity(a, b)?;
                    if k < best.0 {
                        best = (k, a, b);
                    }
                }
                Ok(best)
            })?;
            let (count, a, b) = mins.into_iter().min_by_key(|m| m.0).unwrap_or((0, 0, 0));
            let name = |i| E3CVertex::from_index(params, i).expect("index in range").to_string();
            (json!({ "pairs": pairs.len(), "min": count, "u": name(a), "v": name(b), "width": width }), count)
        }
        _ => return Err(Failure::Usage("give both endpoints or neither".into())),
    };
    Ok(Outcome { mode: Some(mode), result, pass: count >= width })
}
