use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use rdom_core::audit::{audit_extremal_4, audit_extremal_5, audit_outer_pattern, audit_weight_census_bounds};
use rdom_core::bounds::{bounds_pckk, Mode, Source};
use rdom_core::constructions::{default_tripartition, example_4rdf, extremal_pattern, lift, TriPartition};
use rdom_core::graph::{
    build_example_graph, build_generalized_petersen, build_subdivided_k4, export_dot, parse_graph, serialize_graph,
};
use rdom_core::rdf::{parse_assignment, serialize_assignment, verify_trdf};
use rdom_core::solver::{
    certify, certify_petersen, petersen_hint, solve_auto, solve_branch_bound_with, solve_profile_dp,
    BranchBoundOptions, Certificate, Instance, SearchBudget, SolveResult,
};
use rdom_core::{ColorSet, Error, Graph, PetersenParams, RainbowAssignment};

const CONVENTIONS: &str = "\
Vertex ids:
  P(n,k)        u_i = i, v_i = n + i (0 <= i < n); edges u_i u_{i+1}, u_i v_i, v_i v_{i+k}
  subdivided K4 0..3 branch vertices b1..b4, 4 + p subdivision vertex of the p-th pair
                in pair order 12, 13, 14, 23, 24, 34
  example       copy c (0..2) occupies 10c..10c+9 in the subdivided-K4 layout;
                30 + p is the hub of pair p, joined in each copy to the subdivision
                vertex of the complementary pair

Files:
  graph       {\"n_vertices\":N,\"edges\":[[a,b],...],\"labels\":{\"0\":\"u0\",...}}
  assignment  {\"t\":T,\"colors\":[[1,3],[],...]}  (one ascending list per vertex)

Exit codes: 0 success, 1 verification or audit failure, 2 invalid input, 3 budget exhausted";

#[derive(Parser)]
#[command(name = "rdom", version, about = "Rainbow domination on cubic graphs and generalized Petersen graphs")]
#[command(after_help = CONVENTIONS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as JSON or DOT
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Check an assignment and certify its weight
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute γ_rt exactly
    Solve {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the optimal (or best found) assignment here
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Also print search statistics and elapsed time
        #[arg(long)]
        verbose: bool,
    },
    /// Build an assignment
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Bounds on γ_rt(P(ck,k))
    Bounds {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Corrected)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// CSV of bounds over a (c, k, t) grid; ranges are `a`, `a..b` or `a,b,c`
    Table {
        #[arg(long)]
        c: String,
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Corrected)]
        mode: ModeArg,
        /// Fill solver_value where a solver finishes within the budget
        #[arg(long)]
        solve_within_budget: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Audit the structure of an extremal assignment (JSON report)
    CheckStructure {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum)]
        profile: Profile,
    },
}

#[derive(Subcommand)]
enum Family {
    /// P(n,k)
    Petersen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GraphOut,
    },
    /// The 36-vertex cubic example: three subdivided K4 copies and six hubs
    Example {
        #[command(flatten)]
        out: GraphOut,
    },
    /// K4 with every edge subdivided once
    SubdividedK4 {
        #[command(flatten)]
        out: GraphOut,
    },
}

#[derive(Args)]
struct GraphOut {
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construction {
    /// The 6-periodic extremal pattern on P(n,k), n = 0 (mod 6), k = 1,5 (mod 6)
    Pattern {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Three color sets `A|B|C`, e.g. `1,2|3|4`
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add one color to a valid assignment
    Lift {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 4-rainbow function of weight 24 on the example graph
    Example {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArg {
    /// Graph JSON file
    #[arg(long)]
    graph: Option<PathBuf>,
    /// P(n,k) given as `n,k`
    #[arg(long, value_name = "N,K")]
    petersen: Option<String>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 100_000_000)]
    budget_states: u64,
    #[arg(long, default_value_t = 600)]
    budget_seconds: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_states: self.budget_states,
            max_elapsed: Duration::from_secs(self.budget_seconds),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Bb,
    Dp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Corrected,
    AsPrinted,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Corrected => Mode::Corrected,
            ModeArg::AsPrinted => Mode::AsPrinted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Extremal4,
    Extremal5,
    Outer,
    Census,
}

enum Input {
    File(Graph),
    Petersen(PetersenParams, Graph),
}

impl Input {
    fn graph(&self) -> &Graph {
        match self {
            Input::File(g) | Input::Petersen(_, g) => g,
        }
    }

    fn params(&self) -> Option<PetersenParams> {
        match self {
            Input::Petersen(p, _) => Some(*p),
            Input::File(_) => None,
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_petersen(spec: &str) -> anyhow::Result<PetersenParams> {
    let (n, k) = spec
        .split_once(',')
        .ok_or_else(|| anyhow!("--petersen expects `n,k`, got {spec:?}"))?;
    let n = n.trim().parse().with_context(|| format!("bad n in {spec:?}"))?;
    let k = k.trim().parse().with_context(|| format!("bad k in {spec:?}"))?;
    Ok(PetersenParams::new(n, k)?)
}

fn load_graph(arg: &GraphArg) -> anyhow::Result<Input> {
    match (&arg.graph, &arg.petersen) {
        (Some(path), None) => {
            let text = read(path)?;
            Ok(Input::File(
                parse_graph(&text).with_context(|| format!("in {}", path.display()))?,
            ))
        }
        (None, Some(spec)) => {
            let p = parse_petersen(spec)?;
            Ok(Input::Petersen(p, build_generalized_petersen(p)))
        }
        _ => bail!("give exactly one of --graph or --petersen"),
    }
}

fn load_assignment(path: &Path) -> anyhow::Result<RainbowAssignment> {
    let text = read(path)?;
    parse_assignment(&text).with_context(|| format!("in {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// The `P(n,k)` a graph is, if any, with the same vertex ids.
fn detect_petersen(g: &Graph) -> Option<PetersenParams> {
    let n = g.n_vertices() / 2;
    if n < 3 || g.n_vertices() % 2 == 1 {
        return None;
    }
    let sorted = |g: &Graph| -> Vec<Vec<usize>> {
        g.adjacency()
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.sort_unstable();
                l
            })
            .collect()
    };
    let target = sorted(g);
    (1..n)
        .filter(|&k| 2 * k < n)
        .filter_map(|k| PetersenParams::new(n, k).ok())
        .find(|&p| sorted(&build_generalized_petersen(p)) == target)
}

fn certificate_for(input: &Input, t: usize, a: &RainbowAssignment) -> Result<Certificate, Error> {
    match input.params() {
        Some(p) => certify_petersen(p, t, a),
        None => certify(input.graph(), t, a),
    }
}

fn describe(c: &Certificate) -> String {
    match c {
        Certificate::Exact {
            lower_bound, source, ..
        } => format!("exact (lower bound {lower_bound}, {source})"),
        Certificate::UpperOnly {
            lower_bound,
            gap,
            source,
            ..
        } => format!("upper bound only (lower bound {lower_bound}, {source}; gap {gap})"),
    }
}

fn cmd_gen(family: Family) -> anyhow::Result<u8> {
    let (g, out) = match family {
        Family::Petersen { n, k, out } => (build_generalized_petersen(PetersenParams::new(n, k)?), out),
        Family::Example { out } => (build_example_graph(), out),
        Family::SubdividedK4 { out } => (build_subdivided_k4(), out),
    };
    let text = if out.dot { export_dot(&g) } else { serialize_graph(&g) };
    emit(out.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_verify(graph: GraphArg, assignment: PathBuf, json: bool) -> anyhow::Result<u8> {
    let input = load_graph(&graph)?;
    let a = load_assignment(&assignment)?;
    let verdict = verify_trdf(input.graph(), &a)?;
    if !verdict.passed() {
        if json {
            print_json(&json!({ "t": a.t(), "weight": a.weight(), "result": verdict }))?;
        } else {
            println!("invalid {}-rainbow dominating function", a.t());
            for v in verdict.violations() {
                println!("  vertex {} misses {}", v.vertex, v.missing);
            }
        }
        return Ok(1);
    }
    let cert = certificate_for(&input, a.t(), &a)?;
    if json {
        print_json(&json!({ "t": a.t(), "weight": a.weight(), "result": verdict, "certificate": cert }))?;
    } else {
        println!("valid {}-rainbow dominating function of weight {}", a.t(), a.weight());
        println!("certificate: {}", describe(&cert));
    }
    Ok(0)
}

#[derive(Serialize)]
struct SolveOutput {
    status: &'static str,
    t: usize,
    optimum: u64,
    method: &'static str,
    certificate: Certificate,
    witness: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<serde_json::Value>,
}

fn assignment_json(a: &RainbowAssignment) -> serde_json::Value {
    serde_json::from_str(&serialize_assignment(a)).expect("assignment JSON round-trips")
}

fn cmd_solve(
    graph: GraphArg,
    t: usize,
    method: MethodArg,
    budget: SearchBudget,
    witness_out: Option<PathBuf>,
    json: bool,
    verbose: bool,
) -> anyhow::Result<u8> {
    let input = load_graph(&graph)?;
    let hint = input.params().and_then(|p| petersen_hint(p, t));
    let bb = |g: &Graph| solve_branch_bound_with(g, t, budget, &BranchBoundOptions { hint: hint.clone() });
    let result: Result<SolveResult, Error> = match (method, &input) {
        (MethodArg::Dp, Input::File(_)) => bail!("--method dp needs --petersen"),
        (MethodArg::Dp, Input::Petersen(p, _)) => solve_profile_dp(*p, t, budget),
        (MethodArg::Bb, inp) | (MethodArg::Auto, inp @ Input::File(_)) => bb(inp.graph()),
        (MethodArg::Auto, Input::Petersen(p, _)) => solve_auto(Instance::Petersen(*p), t, budget),
    };
    let r = match result {
        Ok(r) => r,
        Err(Error::BudgetExhausted {
            incumbent_weight,
            incumbent,
            proven_lower,
            nodes,
        }) => {
            if let (Some(path), Some(sets)) = (&witness_out, incumbent) {
                let a = RainbowAssignment::new(t, sets)?;
                emit(Some(path), &serialize_assignment(&a))?;
            }
            if json {
                print_json(&json!({
                    "t": t,
                    "status": "budget_exhausted",
                    "incumbent_weight": incumbent_weight,
                    "proven_lower": proven_lower,
                }))?;
            }
            eprintln!(
                "budget exhausted after {nodes} nodes/states: best weight {incumbent_weight}, proven lower bound {proven_lower}"
            );
            return Ok(3);
        }
        Err(e) => return Err(e.into()),
    };
    let cert = certificate_for(&input, t, &r.witness)?;
    if let Some(path) = &witness_out {
        emit(Some(path), &serialize_assignment(&r.witness))?;
    }
    if json {
        print_json(&SolveOutput {
            status: "optimal",
            t,
            optimum: r.optimum,
            method: r.method.as_str(),
            certificate: cert,
            witness: assignment_json(&r.witness),
            stats: verbose.then(|| {
                json!({
                    "nodes": r.stats.nodes,
                    "states": r.stats.states,
                    "elapsed_seconds": r.elapsed.as_secs_f64(),
                })
            }),
        })?;
    } else {
        println!("{}", r.optimum);
        println!("method: {}", r.method.as_str());
        println!("certificate: {}", describe(&cert));
        if verbose {
            println!("nodes: {}, states: {}", r.stats.nodes, r.stats.states);
            println!("elapsed: {:.3?}", r.elapsed);
        }
    }
    Ok(0)
}

fn parse_partition(t: usize, spec: &str) -> anyhow::Result<TriPartition> {
    let parts: Vec<ColorSet> = spec
        .split('|')
        .map(|part| -> anyhow::Result<ColorSet> {
            let colors = part
                .split(',')
                .map(|c| c.trim().parse::<usize>().with_context(|| format!("bad color {c:?}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            if colors.iter().any(|&c| c == 0 || c > t) {
                bail!("colors in {part:?} must lie in 1..={t}");
            }
            Ok(ColorSet::from_colors(colors))
        })
        .collect::<anyhow::Result<_>>()?;
    let [a, b, c] = parts[..] else {
        bail!("--partition needs three sets `A|B|C`, got {spec:?}");
    };
    Ok(TriPartition::new(t, a, b, c)?)
}

fn cmd_construct(what: Construction) -> anyhow::Result<u8> {
    let (a, out) = match what {
        Construction::Pattern {
            n,
            k,
            t,
            partition,
            out,
        } => {
            let p = match partition {
                Some(spec) => parse_partition(t, &spec)?,
                None => default_tripartition(t)?,
            };
            (extremal_pattern(n, k, t, &p)?, out)
        }
        Construction::Lift { graph, assignment, out } => {
            let input = load_graph(&graph)?;
            (lift(input.graph(), &load_assignment(&assignment)?)?, out)
        }
        Construction::Example { out } => (example_4rdf(), out),
    };
    emit(out.as_deref(), &serialize_assignment(&a))?;
    Ok(0)
}

fn labels(sources: &[Source]) -> String {
    sources.iter().map(|s| s.label()).collect::<Vec<_>>().join(";")
}

fn cmd_bounds(c: u64, k: u64, t: u64, mode: Mode, json: bool) -> anyhow::Result<u8> {
    let r = bounds_pckk(c, k, t, mode)?;
    if json {
        print_json(&r)?;
        return Ok(0);
    }
    println!("P({},{k}), t = {t}, mode {}", c * k, mode.as_str());
    println!("lower: {}", r.lower);
    println!("upper: {}", r.upper);
    match r.exact {
        Some(e) => println!("exact: {e}"),
        None => println!("exact: unknown"),
    }
    println!("sources: {}", labels(&r.sources));
    if let Some(d) = &r.discrepancy {
        let readings: Vec<String> = d.readings.iter().map(|v| v.to_string()).collect();
        println!("discrepancy: {} (readings {})", d.note, readings.join(" vs "));
    }
    Ok(0)
}

fn parse_range(name: &str, spec: &str) -> anyhow::Result<Vec<u64>> {
    let mut values = vec![];
    for part in spec.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.parse().with_context(|| format!("--{name}: bad bound {a:?}"))?;
            let b: u64 = b.trim_start_matches('=').parse().with_context(|| format!("--{name}: bad bound {b:?}"))?;
            values.extend(a..=b);
        } else if !part.is_empty() {
            values.push(part.parse().with_context(|| format!("--{name}: bad value {part:?}"))?);
        }
    }
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

#[derive(Serialize)]
struct TableRow {
    c: u64,
    k: u64,
    n: u64,
    t: u64,
    lower: u64,
    upper: u64,
    exact: Option<u64>,
    solver_value: Option<u64>,
    method: &'static str,
    sources: String,
    mode: &'static str,
}

fn solve_row(c: u64, k: u64, t: u64, budget: SearchBudget) -> Option<SolveResult> {
    let p = PetersenParams::new((c * k) as usize, k as usize).ok()?;
    let t = t as usize;
    match solve_profile_dp(p, t, budget) {
        Ok(r) => Some(r),
        Err(Error::Refused { .. }) => {
            let options = BranchBoundOptions {
                hint: petersen_hint(p, t),
            };
            solve_branch_bound_with(&build_generalized_petersen(p), t, budget, &options).ok()
        }
        Err(_) => None,
    }
}

fn cmd_table(c: &str, k: &str, t: &str, mode: Mode, solve: bool, budget: SearchBudget) -> anyhow::Result<u8> {
    let (cs, ks, ts) = (parse_range("c", c)?, parse_range("k", k)?, parse_range("t", t)?);
    let mut grid = vec![];
    for &c in cs.iter().filter(|&&c| c >= 3) {
        for &k in ks.iter().filter(|&&k| k >= 1) {
            grid.extend(ts.iter().map(|&t| (c, k, t)));
        }
    }
    if grid.is_empty() {
        bail!(Error::Input("empty grid (need c >= 3 and k >= 1)".into()));
    }
    let rows: Vec<anyhow::Result<TableRow>> = grid
        .par_iter()
        .map(|&(c, k, t)| {
            let r = bounds_pckk(c, k, t, mode)?;
            let solved = if solve { solve_row(c, k, t, budget) } else { None };
            Ok(TableRow {
                c,
                k,
                n: c * k,
                t,
                lower: r.lower,
                upper: r.upper,
                exact: r.exact,
                solver_value: solved.as_ref().map(|s| s.optimum),
                method: solved.as_ref().map_or("", |s| s.method.as_str()),
                sources: labels(&r.sources),
                mode: mode.as_str(),
            })
        })
        .collect();
    let mut w = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        w.serialize(row?)?;
    }
    w.flush()?;
    Ok(0)
}

fn cmd_check_structure(
    graph: GraphArg,
    assignment: PathBuf,
    t: Option<usize>,
    profile: Profile,
) -> anyhow::Result<u8> {
    let input = load_graph(&graph)?;
    let a = load_assignment(&assignment)?;
    if let Some(t) = t {
        if t != a.t() {
            bail!(Error::Input(format!("--t {t} but the assignment uses t = {}", a.t())));
        }
    }
    let g = input.graph();
    let report = match profile {
        Profile::Extremal4 => audit_extremal_4(g, &a)?,
        Profile::Extremal5 => audit_extremal_5(g, &a)?,
        Profile::Census => audit_weight_census_bounds(&a, g, a.t())?,
        Profile::Outer => {
            let p = input
                .params()
                .or_else(|| detect_petersen(g))
                .ok_or_else(|| Error::Input("the outer profile needs a generalized Petersen graph".into()))?;
            audit_outer_pattern(p, &a)?
        }
    };
    print_json(&report)?;
    Ok(if report.overall { 0 } else { 1 })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Gen { family } => cmd_gen(family),
        Command::Verify {
            graph,
            assignment,
            json,
        } => cmd_verify(graph, assignment, json),
        Command::Solve {
            graph,
            t,
            method,
            budget,
            witness_out,
            json,
            verbose,
        } => cmd_solve(graph, t, method, budget.budget(), witness_out, json, verbose),
        Command::Construct { what } => cmd_construct(what),
        Command::Bounds { c, k, t, mode, json } => cmd_bounds(c, k, t, mode.into(), json),
        Command::Table {
            c,
            k,
            t,
            mode,
            solve_within_budget,
            budget,
        } => cmd_table(&c, &k, &t, mode.into(), solve_within_budget, budget.budget()),
        Command::CheckStructure {
            graph,
            assignment,
            t,
            profile,
        } => cmd_check_structure(graph, assignment, t, profile),
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Contract { .. }) => 1,
        Some(Error::BudgetExhausted { .. } | Error::Refused { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(Error::Contract { violations, .. }) = e.downcast_ref::<Error>() {
                for v in violations {
                    eprintln!("  vertex {} misses {}", v.vertex, v.missing);
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("c", "3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_range("c", "7,3..4,3").unwrap(), vec![3, 4, 7]);
        assert!(parse_range("c", "x").is_err());
        assert!(parse_range("c", "").unwrap().is_empty());
    }

    #[test]
    fn petersen_spec() {
        let p = parse_petersen("8, 3").unwrap();
        assert_eq!((p.n(), p.k()), (8, 3));
        assert!(parse_petersen("8").is_err());
        assert!(parse_petersen("6,3").is_err());
    }

    #[test]
    fn detects_petersen_ids() {
        let p = PetersenParams::new(9, 2).unwrap();
        assert_eq!(detect_petersen(&build_generalized_petersen(p)), Some(p));
        assert_eq!(detect_petersen(&build_subdivided_k4()), None);
    }

    #[test]
    fn partitions() {
        assert!(parse_partition(4, "1,2|3|4").is_ok());
        assert!(parse_partition(4, "1|2|3").is_err());
        assert!(parse_partition(3, "1|2").is_err());
        assert!(parse_partition(3, "1|2|9").is_err());
    }

    #[test]
    fn cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
