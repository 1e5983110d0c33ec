use crate::SolveError;
use crate::graph::Graph;
use crate::objectives::{self, Dominance, Evaluation, compare, ratio_potential};
use crate::vertex_set::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Variant of the evolutionary search: how offspring are mutated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// One uniformly chosen bit is flipped per offspring.
    Semo,
    /// Every bit flips independently with probability `1/n`.
    Gsemo,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Semo => "semo",
            Algorithm::Gsemo => "gsemo",
        })
    }
}

/// Iteration budget, either a preset scaling with the vertex count or a
/// fixed count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// `n (n-1) (n-2)`: enough for the expected-time guarantee.
    Cubic,
    /// `n^2`: deliberately tight, used to watch early progress.
    Square,
    /// `ceil(n^2 ln n)`: middle ground.
    SquareLog,
    Fixed(u64),
}

impl Budget {
    /// Concrete iteration count for an `n`-vertex graph.
    pub fn resolve(&self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Budget::Cubic => n * n.saturating_sub(1) * n.saturating_sub(2),
            Budget::Square => n * n,
            Budget::SquareLog => ((n * n) as f64 * (n as f64).ln()).ceil() as u64,
            Budget::Fixed(t) => *t,
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Cubic => f.write_str("T1"),
            Budget::Square => f.write_str("T2"),
            Budget::SquareLog => f.write_str("T3"),
            Budget::Fixed(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("budget must be T1, T2, T3 or a positive integer, got {input:?}")]
pub struct BudgetParseError {
    input: String,
}

impl FromStr for Budget {
    type Err = BudgetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => return Ok(Budget::Cubic),
            "T2" => return Ok(Budget::Square),
            "T3" => return Ok(Budget::SquareLog),
            _ => {}
        }
        match s.parse::<u64>() {
            Ok(t) if t > 0 => Ok(Budget::Fixed(t)),
            _ => Err(BudgetParseError { input: s.to_string() }),
        }
    }
}

/// Archive member: a vertex subset with its cached evaluation.
#[derive(Clone, Debug)]
pub struct Individual {
    pub bits: VertexSet,
    pub eval: Evaluation,
}

impl Individual {
    pub fn evaluate(g: &Graph, bits: VertexSet) -> Self {
        let eval = objectives::evaluate(g, &bits);
        Individual { bits, eval }
    }
}

/// Pareto archive of mutually incomparable individuals.
///
/// Kept invariants: no member strictly dominates another, and no two members
/// share an objective vector. Since equal feasibility forces equal size here,
/// each feasibility value appears at most once, which bounds the archive size
/// by the number of distinct feasibility values.
#[derive(Clone, Debug, Default)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    pub fn new() -> Self {
        Population { members: Vec::new() }
    }

    /// Offers a candidate. It enters unless some member strictly dominates
    /// it; on entry, every member it weakly dominates (including an equal
    /// incumbent) is dropped. Returns whether it entered.
    pub fn offer(&mut self, candidate: Individual) -> bool {
        if self
            .members
            .iter()
            .any(|m| compare(&m.eval, &candidate.eval) == Dominance::Better)
        {
            return false;
        }
        self.members
            .retain(|m| !compare(&candidate.eval, &m.eval).weakly_better());
        self.members.push(candidate);
        true
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn evaluations(&self) -> Vec<Evaluation> {
        self.members.iter().map(|m| m.eval).collect()
    }

    /// The feasible member, if the archive holds one. At most one can exist:
    /// two members at feasibility 2 with different sizes would be comparable.
    pub fn feasible_member(&self) -> Option<&Individual> {
        self.members.iter().find(|m| m.eval.is_feasible())
    }

    pub fn min_feasibility(&self) -> Option<u32> {
        self.members.iter().map(|m| m.eval.feasibility()).min()
    }
}

/// Settings for one evolutionary run.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub budget: Budget,
    pub seed: u64,
    /// Emit a trace point every this many iterations; 0 disables tracing.
    /// Feasibility discovery and the final iteration are always traced when
    /// tracing is on, and so is the initial archive as iteration 0.
    pub trace_every: u64,
    /// True optimum size, when an oracle supplied one; enables the potential
    /// column in trace points.
    pub diagnostics_optimum: Option<NonZeroUsize>,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, budget: Budget, seed: u64) -> Self {
        RunConfig {
            algorithm,
            budget,
            seed,
            trace_every: 0,
            diagnostics_optimum: None,
        }
    }

    pub fn with_trace_every(mut self, every: u64) -> Self {
        self.trace_every = every;
        self
    }

    pub fn with_diagnostics_optimum(mut self, optimum_size: NonZeroUsize) -> Self {
        self.diagnostics_optimum = Some(optimum_size);
        self
    }
}

/// One sampled point of a run's progress.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TracePoint {
    pub iteration: u64,
    pub archive_size: usize,
    pub min_feasibility: u32,
    /// Size of the feasible member, once one exists.
    pub feasible_size: Option<u32>,
    /// See [`objectives::ratio_potential`]; only filled when the run was
    /// given the true optimum size.
    pub potential: Option<u32>,
}

/// Outcome of a run. `solution` is the feasible archive member at exit, and
/// stays `None` if feasibility was never reached within the budget.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub solution: Option<VertexSet>,
    pub iterations: u64,
    pub first_feasible_iteration: Option<u64>,
    pub trace: Vec<TracePoint>,
    pub wall_time: Duration,
}

impl RunReport {
    pub fn solution_size(&self) -> Option<u32> {
        self.solution.as_ref().map(|s| s.len() as u32)
    }
}

/// Flips one uniformly chosen bit of the parent.
pub fn mutate_one_bit<R: Rng + ?Sized>(parent: &VertexSet, rng: &mut R) -> VertexSet {
    let mut child = parent.clone();
    child.toggle(rng.random_range(0..parent.universe()));
    child
}

/// Flips every bit independently with probability `1/n`.
pub fn mutate_per_bit<R: Rng + ?Sized>(parent: &VertexSet, rng: &mut R) -> VertexSet {
    let n = parent.universe();
    let rate = 1.0 / n as f64;
    let mut child = parent.clone();
    for v in 0..n {
        if rng.random::<f64>() < rate {
            child.toggle(v);
        }
    }
    child
}

const SELECTION_STREAM: u64 = 0;
const MUTATION_STREAM: u64 = 1;

/// Runs the archive-based search on `g`.
///
/// Starts from the empty set, and per iteration picks a uniform archive
/// member, mutates it per the configured algorithm, and offers the offspring
/// to the archive. The reported solution is the feasible member after the
/// last iteration.
///
/// Requires at least 3 vertices: on a 2-vertex graph the empty set already
/// scores the minimal feasibility value and would shadow every real
/// solution.
///
/// Runs with the same graph and config are bit-for-bit reproducible: parent
/// selection and mutation draw from two independent, seed-derived streams.
pub fn run(g: &Graph, config: &RunConfig) -> Result<RunReport, SolveError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(SolveError::GraphTooSmall { n });
    }
    let total = config.budget.resolve(n);

    let mut select_rng = ChaCha8Rng::seed_from_u64(config.seed);
    select_rng.set_stream(SELECTION_STREAM);
    let mut mutate_rng = ChaCha8Rng::seed_from_u64(config.seed);
    mutate_rng.set_stream(MUTATION_STREAM);

    let start = Instant::now();
    let mut population = Population::new();
    population.offer(Individual::evaluate(g, VertexSet::empty(n)));

    let mut first_feasible = None;
    let mut trace = Vec::new();
    if config.trace_every > 0 {
        trace.push(trace_point(0, &population, config, g));
    }

    for t in 1..=total {
        let parent = &population.members()[select_rng.random_range(0..population.len())];
        let bits = match config.algorithm {
            Algorithm::Semo => mutate_one_bit(&parent.bits, &mut mutate_rng),
            Algorithm::Gsemo => mutate_per_bit(&parent.bits, &mut mutate_rng),
        };
        let child = Individual::evaluate(g, bits);
        let child_feasible = child.eval.is_feasible();
        population.offer(child);
        debug_assert!(population.len() <= n - 1);

        let newly_feasible = first_feasible.is_none() && child_feasible;
        if newly_feasible {
            first_feasible = Some(t);
        }
        if config.trace_every > 0 && (newly_feasible || t == total || t % config.trace_every == 0)
        {
            trace.push(trace_point(t, &population, config, g));
        }
    }

    let solution = population.feasible_member().map(|m| m.bits.clone());
    debug_assert!(solution.as_ref().is_none_or(|s| g.is_cds(s)));
    Ok(RunReport {
        solution,
        iterations: total,
        first_feasible_iteration: first_feasible,
        trace,
        wall_time: start.elapsed(),
    })
}

fn trace_point(iteration: u64, population: &Population, config: &RunConfig, g: &Graph) -> TracePoint {
    let potential = config.diagnostics_optimum.and_then(|m| {
        ratio_potential(&population.evaluations(), m.get(), g.max_degree())
            .expect("optimum size is nonzero")
    });
    TracePoint {
        iteration,
        archive_size: population.len(),
        min_feasibility: population.min_feasibility().expect("archive never empties"),
        feasible_size: population.feasible_member().map(|m| m.eval.size),
        potential,
    }
}
