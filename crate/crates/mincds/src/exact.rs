use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use thiserror::Error;

/// Default refusal threshold for the exhaustive search.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Certified optimum from the exhaustive search.
#[derive(Clone, Debug)]
pub struct ExactResult {
    /// Lexicographically first minimum connected dominating set.
    pub optimum: VertexSet,
    pub minimum_size: usize,
    /// Candidates generated, including ones discarded by the domination
    /// prune.
    pub subsets_examined: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive search refused: {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Finds a minimum connected dominating set by enumerating subsets in
/// increasing cardinality, lexicographic within each size. Candidates whose
/// closed neighborhoods fail to cover all vertices are discarded before the
/// connectivity check.
///
/// Deterministic and exponential: refuses graphs above `max_n` vertices
/// (and above 64 regardless, the width of the internal masks).
pub fn exact_min_cds(g: &Graph, max_n: usize) -> Result<ExactResult, OracleError> {
    let n = g.vertex_count();
    let cap = max_n.min(64);
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |acc, &w| acc | 1 << w))
        .collect();
    let open: Vec<u64> = (0..n).map(|v| closed[v] & !(1u64 << v)).collect();

    let mut examined = 0u64;
    for k in 1..=n {
        let mut indices: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            let mut cover = 0u64;
            let mut members = 0u64;
            for &v in &indices {
                cover |= closed[v];
                members |= 1 << v;
            }
            if cover == full && connected_within(members, &open) {
                return Ok(ExactResult {
                    optimum: VertexSet::from_members(n, &indices),
                    minimum_size: k,
                    subsets_examined: examined,
                });
            }
            if !next_combination(&mut indices, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set of a connected graph is a connected dominating set")
}

/// Whether the vertices of `members` induce a connected subgraph, using
/// per-vertex adjacency masks.
fn connected_within(members: u64, open: &[u64]) -> bool {
    debug_assert!(members != 0);
    let mut reached = 1u64 << members.trailing_zeros();
    loop {
        let mut frontier = reached;
        let mut next = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= open[v] & members;
        }
        if next == reached {
            return reached == members;
        }
        reached = next;
    }
}

/// Advances `indices` to the lexicographically next k-combination of `0..n`;
/// false when exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
