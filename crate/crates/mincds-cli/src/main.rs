use anyhow::{Context, Result, bail};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use mincds::engine::{self, Budget, RunConfig, TracePoint};
use mincds::exact::{self, DEFAULT_ORACLE_CAP};
use mincds::generate::{DEFAULT_MAX_RETRIES, GenSpec, Model, generate};
use mincds::graph::Graph;
use mincds::greedy;
use mincds::harness::{self, ExperimentSpec, InstanceSpec, ResultRow, SolverKind};
use mincds::{format, vertex_set::VertexSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exit status when every reported run produced a verified solution.
const ALL_FEASIBLE: u8 = 0;
/// Usage, IO or parameter failure.
const USAGE_ERROR: u8 = 1;
/// At least one run ended without a feasible solution.
const SOME_INFEASIBLE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "mincds",
    version,
    about = "Minimum connected dominating set solvers, instance generators and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random connected instance in the graph text format
    Gen(GenArgs),
    /// Run one solver on one instance file
    Solve(SolveArgs),
    /// Run an instances x solvers x budgets x replicates sweep to CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Graph family: ba (preferential attachment) or er (uniform)
    #[arg(long)]
    model: Model,
    /// Vertex count
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Edge probability, er only; defaults to ln(n)/n
    #[arg(long)]
    p: Option<f64>,
    /// Connectivity resampling cap, er only
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    retries: usize,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// semo, gsemo, greedy or exact
    #[arg(long)]
    algo: SolverKind,
    /// Instance file in the graph text format
    #[arg(long)]
    graph: PathBuf,
    /// Iterations for randomized solvers: T1, T2, T3 or a count
    #[arg(long, default_value = "T1")]
    budget: Budget,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Progress trace CSV (randomized solvers only)
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Trace cadence in iterations; default budget/100
    #[arg(long)]
    trace_every: Option<u64>,
    /// Refusal threshold for the exhaustive solver
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Print the run as a JSON object instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Families for the generated corpus
    #[arg(long, value_delimiter = ',')]
    models: Vec<Model>,
    /// Sizes for the generated corpus (crossed with models)
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Seed for generated corpus instances
    #[arg(long, default_value_t = 1)]
    corpus_seed: u64,
    /// Additional instance files
    #[arg(long, value_delimiter = ',')]
    graphs: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',', required = true)]
    solvers: Vec<SolverKind>,
    #[arg(long, value_delimiter = ',', default_value = "T1")]
    budgets: Vec<Budget>,
    #[arg(long, default_value_t = 3)]
    replicates: u32,
    /// Replicate r of a randomized solver runs with seed base_seed + r
    #[arg(long, default_value_t = 0)]
    base_seed: u64,
    /// Instances up to this size get oracle-backed m and ratio columns
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// CSV output path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a JSON report mirroring the CSV
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ALL_FEASIBLE,
                _ => USAGE_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_gen(args: GenArgs) -> Result<u8> {
    let spec = GenSpec {
        model: args.model,
        n: args.n,
        seed: args.seed,
        edge_probability: args.p,
        max_retries: args.retries,
    };
    let graph = generate(&spec).context("generating instance")?;
    let text = format::write_graph(&graph);
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ALL_FEASIBLE)
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    format::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn display_members(set: &VertexSet) -> String {
    let labels: Vec<String> = set.iter().map(|v| format!("v{}", v + 1)).collect();
    labels.join(" ")
}

fn run_solve(args: SolveArgs) -> Result<u8> {
    let graph = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let instance = args
        .graph
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".to_string());
    if args.trace.is_some() && !args.algo.is_randomized() {
        bail!("--trace applies to the randomized solvers (semo, gsemo)");
    }

    let mut row = ResultRow {
        instance,
        model: "file".to_string(),
        n,
        delta: graph.max_degree(),
        solver: args.algo.to_string(),
        budget: "-".to_string(),
        seed: None,
        size: None,
        feasible: false,
        first_feasible_iter: None,
        iterations: 0,
        wall_time_s: 0.0,
        m: None,
        ratio: None,
    };
    let solution: Option<VertexSet>;

    match args.algo {
        SolverKind::Semo | SolverKind::Gsemo => {
            let algorithm = match args.algo {
                SolverKind::Semo => engine::Algorithm::Semo,
                _ => engine::Algorithm::Gsemo,
            };
            let total = args.budget.resolve(n);
            let mut config = RunConfig::new(algorithm, args.budget, args.seed);
            if args.trace.is_some() {
                config.trace_every = args.trace_every.unwrap_or((total / 100).max(1));
            }
            let report = engine::run(&graph, &config).context("running solver")?;
            if let Some(path) = &args.trace {
                std::fs::write(path, render_trace(&report.trace))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            row.budget = args.budget.to_string();
            row.seed = Some(args.seed);
            row.feasible = report.solution.as_ref().is_some_and(|s| graph.is_cds(s));
            row.size = if row.feasible { report.solution_size() } else { None };
            row.first_feasible_iter = report.first_feasible_iteration;
            row.iterations = report.iterations;
            row.wall_time_s = report.wall_time.as_secs_f64();
            solution = report.solution;
        }
        SolverKind::Greedy => {
            let run = greedy::greedy_cds(&graph).context("running solver")?;
            row.feasible = graph.is_cds(&run.solution);
            row.size = row.feasible.then(|| run.solution.len() as u32);
            row.iterations = run.steps.len() as u64;
            row.wall_time_s = run.wall_time.as_secs_f64();
            solution = Some(run.solution);
        }
        SolverKind::Exact => {
            let started = std::time::Instant::now();
            let result =
                exact::exact_min_cds(&graph, args.oracle_cap).context("running solver")?;
            row.feasible = graph.is_cds(&result.optimum);
            row.size = row.feasible.then(|| result.optimum.len() as u32);
            row.iterations = result.subsets_examined;
            row.wall_time_s = started.elapsed().as_secs_f64();
            row.m = Some(result.minimum_size);
            solution = Some(result.optimum);
        }
    }
    if let (Some(size), Some(m)) = (row.size, row.m) {
        row.ratio = Some(f64::from(size) / m as f64);
    }

    if args.json {
        println!("{}", serde_json::to_string_pretty(&row)?);
    } else {
        println!("instance {} (n={}, max degree {})", row.instance, row.n, row.delta);
        match args.algo.is_randomized() {
            true => println!(
                "solver {}, budget {} ({} iterations), seed {}",
                row.solver, row.budget, row.iterations, args.seed
            ),
            false => println!("solver {}", row.solver),
        }
        println!("feasible: {}", row.feasible);
        match (&solution, row.feasible) {
            (Some(set), true) => println!("size: {} [{}]", set.len(), display_members(set)),
            _ => println!("size: -"),
        }
        if let Some(t) = row.first_feasible_iter {
            println!("first feasible iteration: {t}");
        }
        if let Some(m) = row.m {
            println!("optimum size: {m}");
        }
        println!("wall time: {:.6}s", row.wall_time_s);
    }
    Ok(if row.feasible { ALL_FEASIBLE } else { SOME_INFEASIBLE })
}

fn render_trace(points: &[TracePoint]) -> String {
    let mut out = String::from("iteration,archive_size,min_feasibility,feasible_size,potential\n");
    for p in points {
        let feasible_size = p.feasible_size.map(|s| s.to_string()).unwrap_or_default();
        let potential = p.potential.map(|k| k.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.iteration, p.archive_size, p.min_feasibility, feasible_size, potential
        ));
    }
    out
}

fn run_bench(args: BenchArgs) -> Result<u8> {
    let mut instances = Vec::new();
    for &model in &args.models {
        for &n in &args.sizes {
            let spec = match model {
                Model::Ba => GenSpec::ba(n, args.corpus_seed),
                Model::Er => GenSpec::er(n, args.corpus_seed),
            };
            instances.push(InstanceSpec::generated(spec));
        }
    }
    for path in &args.graphs {
        instances.push(InstanceSpec::file(path));
    }

    let spec = ExperimentSpec {
        instances,
        solvers: args.solvers,
        budgets: args.budgets,
        replicates: args.replicates,
        base_seed: args.base_seed,
        oracle_cap: args.oracle_cap,
        workers: harness::workers_from_env(),
    };
    let rows = harness::run_experiment(&spec).context("running experiment")?;

    let csv = harness::render_csv(&rows);
    match &args.out {
        Some(path) => {
            std::fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => print!("{csv}"),
    }
    if let Some(path) = &args.json {
        std::fs::write(path, harness::render_json(&rows))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if rows.iter().all(|r| r.feasible) { ALL_FEASIBLE } else { SOME_INFEASIBLE })
}
