use crate::SolveError;
use crate::engine::{self, Algorithm, Budget, RunConfig};
use crate::exact;
use crate::format::{self, ParseError};
use crate::generate::{self, GenError, GenSpec};
use crate::graph::Graph;
use crate::greedy;
use serde::Serialize;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;
use std::thread;
use thiserror::Error;

/// Stable CSV schema; columns never reorder.
pub const CSV_HEADER: &str = "instance,model,n,delta,solver,budget,seed,size,feasible,first_feasible_iter,iterations,wall_time_s,m,ratio";

/// Worker-count override; unset means single-threaded.
pub const WORKERS_ENV: &str = "MINCDS_WORKERS";

/// Which solver a run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    Semo,
    Gsemo,
    Greedy,
    Exact,
}

impl SolverKind {
    /// Randomized solvers take budgets, seeds and replicates; the other two
    /// run once per instance.
    pub fn is_randomized(&self) -> bool {
        matches!(self, SolverKind::Semo | SolverKind::Gsemo)
    }

    fn algorithm(&self) -> Option<Algorithm> {
        match self {
            SolverKind::Semo => Some(Algorithm::Semo),
            SolverKind::Gsemo => Some(Algorithm::Gsemo),
            _ => None,
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverKind::Semo => "semo",
            SolverKind::Gsemo => "gsemo",
            SolverKind::Greedy => "greedy",
            SolverKind::Exact => "exact",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("solver must be semo, gsemo, greedy or exact, got {input:?}")]
pub struct SolverParseError {
    input: String,
}

impl FromStr for SolverKind {
    type Err = SolverParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "semo" => Ok(SolverKind::Semo),
            "gsemo" => Ok(SolverKind::Gsemo),
            "greedy" => Ok(SolverKind::Greedy),
            "exact" => Ok(SolverKind::Exact),
            _ => Err(SolverParseError { input: s.to_string() }),
        }
    }
}

/// One instance of an experiment: generated on the fly or read from disk.
#[derive(Clone, Debug)]
pub struct InstanceSpec {
    /// Row label; derived from the source when absent.
    pub id: Option<String>,
    pub source: InstanceSource,
}

#[derive(Clone, Debug)]
pub enum InstanceSource {
    Generated(GenSpec),
    File(PathBuf),
}

impl InstanceSpec {
    pub fn generated(spec: GenSpec) -> Self {
        InstanceSpec { id: None, source: InstanceSource::Generated(spec) }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        InstanceSpec { id: None, source: InstanceSource::File(path.into()) }
    }
}

/// Full experiment description. The run executes the cross product of
/// instances, solvers, budgets and replicates, with randomized-run seeds
/// derived as `base_seed + replicate index`.
#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub instances: Vec<InstanceSpec>,
    pub solvers: Vec<SolverKind>,
    /// Budgets for the randomized solvers; ignored by greedy and exact.
    pub budgets: Vec<Budget>,
    pub replicates: u32,
    pub base_seed: u64,
    /// Instances at most this large get an exhaustive optimum, enabling the
    /// `m` and `ratio` columns.
    pub oracle_cap: usize,
    pub workers: usize,
}

/// One run's outcome; field names match the CSV columns.
#[derive(Clone, Debug, Serialize)]
pub struct ResultRow {
    pub instance: String,
    pub model: String,
    pub n: usize,
    pub delta: usize,
    pub solver: String,
    pub budget: String,
    pub seed: Option<u64>,
    pub size: Option<u32>,
    pub feasible: bool,
    pub first_feasible_iter: Option<u64>,
    pub iterations: u64,
    pub wall_time_s: f64,
    pub m: Option<usize>,
    pub ratio: Option<f64>,
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("experiment has no instances")]
    NoInstances,
    #[error("experiment has no solvers")]
    NoSolvers,
    #[error("randomized solvers need at least one budget")]
    NoBudgets,
    #[error("replicates must be at least 1")]
    ZeroReplicates,
    #[error("generating {id}: {source}")]
    Gen { id: String, source: GenError },
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parsing {path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("instance {id} has {n} vertices; {solver} needs at least 3")]
    TooSmallForSolver { id: String, n: usize, solver: SolverKind },
    #[error("instance {id} has {n} vertices, above the exhaustive cap {cap}")]
    ExactBeyondCap { id: String, n: usize, cap: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

struct Loaded {
    id: String,
    model: String,
    graph: Graph,
    optimum: Option<usize>,
}

#[derive(Clone, Copy)]
struct Unit {
    instance: usize,
    solver: SolverKind,
    budget: Option<Budget>,
    replicate: u32,
}

fn sanitize_id(raw: &str) -> String {
    raw.chars()
        .map(|c| if c.is_ascii_alphanumeric() || "._-".contains(c) { c } else { '_' })
        .collect()
}

fn load_instance(spec: &InstanceSpec) -> Result<(String, String, Graph), HarnessError> {
    match &spec.source {
        InstanceSource::Generated(gen_spec) => {
            let id = spec
                .id
                .clone()
                .unwrap_or_else(|| format!("{}-n{}-s{}", gen_spec.model, gen_spec.n, gen_spec.seed));
            let id = sanitize_id(&id);
            let graph = generate::generate(gen_spec)
                .map_err(|source| HarnessError::Gen { id: id.clone(), source })?;
            Ok((id, gen_spec.model.to_string(), graph))
        }
        InstanceSource::File(path) => {
            let fallback = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "instance".to_string());
            let id = sanitize_id(&spec.id.clone().unwrap_or(fallback));
            let text = std::fs::read_to_string(path)
                .map_err(|source| HarnessError::Io { path: path.clone(), source })?;
            let graph = format::parse_graph(&text)
                .map_err(|source| HarnessError::Parse { path: path.clone(), source })?;
            Ok((id, "file".to_string(), graph))
        }
    }
}

/// Runs the experiment and returns rows in canonical order: instance, then
/// solver, then budget, then replicate, regardless of worker scheduling.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ResultRow>, HarnessError> {
    if spec.instances.is_empty() {
        return Err(HarnessError::NoInstances);
    }
    if spec.solvers.is_empty() {
        return Err(HarnessError::NoSolvers);
    }
    if spec.replicates == 0 {
        return Err(HarnessError::ZeroReplicates);
    }
    if spec.solvers.iter().any(SolverKind::is_randomized) && spec.budgets.is_empty() {
        return Err(HarnessError::NoBudgets);
    }

    let mut loaded = Vec::with_capacity(spec.instances.len());
    for instance in &spec.instances {
        let (id, model, graph) = load_instance(instance)?;
        let n = graph.vertex_count();
        for &solver in &spec.solvers {
            match solver {
                SolverKind::Exact if n > spec.oracle_cap.min(64) => {
                    return Err(HarnessError::ExactBeyondCap {
                        id,
                        n,
                        cap: spec.oracle_cap.min(64),
                    });
                }
                SolverKind::Semo | SolverKind::Gsemo | SolverKind::Greedy if n < 3 => {
                    return Err(HarnessError::TooSmallForSolver { id, n, solver });
                }
                _ => {}
            }
        }
        let optimum = if n <= spec.oracle_cap.min(64) {
            Some(
                exact::exact_min_cds(&graph, spec.oracle_cap)
                    .expect("cap was checked")
                    .minimum_size,
            )
        } else {
            None
        };
        loaded.push(Loaded { id, model, graph, optimum });
    }

    let mut units = Vec::new();
    for instance in 0..loaded.len() {
        for &solver in &spec.solvers {
            if solver.is_randomized() {
                for &budget in &spec.budgets {
                    for replicate in 0..spec.replicates {
                        units.push(Unit { instance, solver, budget: Some(budget), replicate });
                    }
                }
            } else {
                units.push(Unit { instance, solver, budget: None, replicate: 0 });
            }
        }
    }

    let workers = spec.workers.max(1).min(units.len().max(1));
    let mut rows: Vec<(usize, ResultRow)> = if workers == 1 {
        units
            .iter()
            .enumerate()
            .map(|(i, unit)| (i, execute(unit, &loaded[unit.instance], spec)))
            .collect()
    } else {
        let collected = Mutex::new(Vec::with_capacity(units.len()));
        thread::scope(|scope| {
            for worker in 0..workers {
                let units = &units;
                let loaded = &loaded;
                let collected = &collected;
                scope.spawn(move || {
                    for index in (worker..units.len()).step_by(workers) {
                        let unit = &units[index];
                        let row = execute(unit, &loaded[unit.instance], spec);
                        collected.lock().expect("no panics hold the lock").push((index, row));
                    }
                });
            }
        });
        collected.into_inner().expect("workers finished")
    };
    rows.sort_by_key(|(index, _)| *index);
    Ok(rows.into_iter().map(|(_, row)| row).collect())
}

fn execute(unit: &Unit, loaded: &Loaded, spec: &ExperimentSpec) -> ResultRow {
    let graph = &loaded.graph;
    let mut row = ResultRow {
        instance: loaded.id.clone(),
        model: loaded.model.clone(),
        n: graph.vertex_count(),
        delta: graph.max_degree(),
        solver: unit.solver.to_string(),
        budget: unit.budget.map_or_else(|| "-".to_string(), |b| b.to_string()),
        seed: None,
        size: None,
        feasible: false,
        first_feasible_iter: None,
        iterations: 0,
        wall_time_s: 0.0,
        m: loaded.optimum,
        ratio: None,
    };
    match unit.solver {
        SolverKind::Semo | SolverKind::Gsemo => {
            let seed = spec.base_seed + u64::from(unit.replicate);
            let algorithm = unit.solver.algorithm().expect("randomized solver");
            let budget = unit.budget.expect("randomized solvers carry a budget");
            let config = RunConfig::new(algorithm, budget, seed);
            let report = engine::run(graph, &config).expect("instance sizes were validated");
            row.seed = Some(seed);
            row.feasible = report.solution.as_ref().is_some_and(|s| graph.is_cds(s));
            row.size = if row.feasible { report.solution_size() } else { None };
            row.first_feasible_iter = report.first_feasible_iteration;
            row.iterations = report.iterations;
            row.wall_time_s = report.wall_time.as_secs_f64();
        }
        SolverKind::Greedy => {
            let run = greedy::greedy_cds(graph).expect("instance sizes were validated");
            row.feasible = graph.is_cds(&run.solution);
            row.size = row.feasible.then(|| run.solution.len() as u32);
            row.iterations = run.steps.len() as u64;
            row.wall_time_s = run.wall_time.as_secs_f64();
        }
        SolverKind::Exact => {
            let started = std::time::Instant::now();
            let result = exact::exact_min_cds(graph, spec.oracle_cap).expect("cap was validated");
            row.feasible = graph.is_cds(&result.optimum);
            row.size = row.feasible.then(|| result.optimum.len() as u32);
            row.iterations = result.subsets_examined;
            row.wall_time_s = started.elapsed().as_secs_f64();
        }
    }
    if let (Some(size), Some(m)) = (row.size, row.m) {
        row.ratio = Some(f64::from(size) / m as f64);
    }
    row
}

fn csv_cell<T: fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(String::new, T::to_string)
}

/// Renders rows under [`CSV_HEADER`]. Absent values are empty cells; every
/// column except `wall_time_s` is deterministic for a fixed spec and seed.
pub fn render_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let ratio = r.ratio.map(|x| format!("{x:.4}"));
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{:.6},{},{}\n",
            r.instance,
            r.model,
            r.n,
            r.delta,
            r.solver,
            r.budget,
            csv_cell(&r.seed),
            csv_cell(&r.size),
            r.feasible,
            csv_cell(&r.first_feasible_iter),
            r.iterations,
            r.wall_time_s,
            csv_cell(&r.m),
            csv_cell(&ratio),
        ));
    }
    out
}

/// JSON report mirroring the CSV schema.
pub fn render_json(rows: &[ResultRow]) -> String {
    serde_json::to_string_pretty(rows).expect("plain data serializes")
}

/// Drops the `wall_time_s` column, leaving the deterministic part of a CSV.
pub fn csv_without_wall_time(csv: &str) -> String {
    let wall_index = CSV_HEADER
        .split(',')
        .position(|c| c == "wall_time_s")
        .expect("schema contains wall_time_s");
    csv.lines()
        .map(|line| {
            let mut cells: Vec<&str> = line.split(',').collect();
            if cells.len() > wall_index {
                cells.remove(wall_index);
            }
            cells.join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Worker count from the environment, defaulting to single-threaded.
pub fn workers_from_env() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1)
}
