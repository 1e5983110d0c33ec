use crate::graph::{Graph, is_connected};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Random graph family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// Growth with preferential attachment from a 4-vertex ring seed.
    Ba,
    /// Uniform edge sampling, resampled until connected.
    Er,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Ba => "ba",
            Model::Er => "er",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("model must be ba or er, got {input:?}")]
pub struct ModelParseError {
    input: String,
}

impl FromStr for Model {
    type Err = ModelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ba" => Ok(Model::Ba),
            "er" => Ok(Model::Er),
            _ => Err(ModelParseError { input: s.to_string() }),
        }
    }
}

/// Edges each new vertex brings in the preferential attachment model.
const ATTACH_EDGES: usize = 2;

pub const DEFAULT_MAX_RETRIES: usize = 1000;

/// Instance description: deterministic in all fields.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
    /// Edge probability for the uniform model; defaults to `ln(n) / n`, the
    /// connectivity threshold scaling. Must stay `None` for the attachment
    /// model.
    pub edge_probability: Option<f64>,
    /// Resampling cap for the uniform model's connectivity rejection loop.
    pub max_retries: usize,
}

impl GenSpec {
    pub fn ba(n: usize, seed: u64) -> Self {
        GenSpec {
            model: Model::Ba,
            n,
            seed,
            edge_probability: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn er(n: usize, seed: u64) -> Self {
        GenSpec {
            model: Model::Er,
            n,
            seed,
            edge_probability: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn er_with_probability(n: usize, seed: u64, p: f64) -> Self {
        GenSpec {
            edge_probability: Some(p),
            ..GenSpec::er(n, seed)
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("attachment model needs at least 4 vertices (the ring seed), got {n}")]
    BaTooSmall { n: usize },
    #[error("uniform model needs at least 2 vertices, got {n}")]
    ErTooSmall { n: usize },
    #[error("edge probability only applies to the uniform model")]
    ProbabilityNotApplicable,
    #[error("edge probability must be in (0, 1], got {p}")]
    InvalidProbability { p: f64 },
    #[error("max_retries must be at least 1")]
    NoRetries,
    #[error("no connected sample in {retries} attempts (n={n}, p={p})")]
    RetriesExhausted { n: usize, p: f64, retries: usize },
}

pub fn default_edge_probability(n: usize) -> f64 {
    (n as f64).ln() / n as f64
}

/// Generates the instance described by `spec`. Identical specs produce
/// identical graphs.
pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    match spec.model {
        Model::Ba => {
            if spec.edge_probability.is_some() {
                return Err(GenError::ProbabilityNotApplicable);
            }
            preferential_attachment(spec.n, spec.seed)
        }
        Model::Er => uniform_connected(spec),
    }
}

/// Ring of 4, then each vertex joins with 2 edges to distinct existing
/// vertices, drawn without replacement proportionally to the degrees as they
/// were before this vertex's step. Connected by construction with exactly
/// `2n - 4` edges.
fn preferential_attachment(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 4 {
        return Err(GenError::BaTooSmall { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    let mut degrees: Vec<u64> = vec![2; 4];
    for newcomer in 4..n {
        let snapshot = degrees.clone();
        let mut picked: Vec<usize> = Vec::with_capacity(ATTACH_EDGES);
        for _ in 0..ATTACH_EDGES {
            let total: u64 = snapshot
                .iter()
                .enumerate()
                .filter(|(v, _)| !picked.contains(v))
                .map(|(_, &d)| d)
                .sum();
            let mut ticket = rng.random_range(0..total);
            let target = snapshot
                .iter()
                .enumerate()
                .filter(|(v, _)| !picked.contains(v))
                .find(|&(_, &d)| {
                    if ticket < d {
                        true
                    } else {
                        ticket -= d;
                        false
                    }
                })
                .map(|(v, _)| v)
                .expect("tickets sum to the total weight");
            picked.push(target);
        }
        for &target in &picked {
            edges.push((target, newcomer));
            degrees[target] += 1;
        }
        degrees.push(ATTACH_EDGES as u64);
    }
    Ok(Graph::from_edges(n, edges).expect("attachment construction is simple and connected"))
}

/// Samples each pair independently, rejecting disconnected draws. The RNG
/// stream advances across rejections, so retries explore fresh samples.
fn uniform_connected(spec: &GenSpec) -> Result<Graph, GenError> {
    let n = spec.n;
    if n < 2 {
        return Err(GenError::ErTooSmall { n });
    }
    if spec.max_retries < 1 {
        return Err(GenError::NoRetries);
    }
    let p = spec.edge_probability.unwrap_or_else(|| default_edge_probability(n));
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenError::InvalidProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.max_retries {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        if is_connected(n, &edges) {
            return Ok(Graph::from_edges(n, edges).expect("sampled edges are simple"));
        }
    }
    Err(GenError::RetriesExhausted {
        n,
        p,
        retries: spec.max_retries,
    })
}
