use crate::SolveError;
use crate::graph::Graph;
use crate::objectives;
use crate::vertex_set::VertexSet;
use std::time::{Duration, Instant};

/// One greedy addition: which vertex went in and the feasibility move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub vertex: usize,
    pub feasibility_before: u32,
    pub feasibility_after: u32,
}

/// Result of a greedy construction.
#[derive(Clone, Debug)]
pub struct GreedyRun {
    pub solution: VertexSet,
    pub steps: Vec<GreedyStep>,
    pub wall_time: Duration,
}

/// Best single-vertex addition to `set`: the outside vertex whose insertion
/// yields the lowest feasibility, smallest id on ties. `None` only when no
/// vertex is outside.
fn best_addition(g: &Graph, set: &VertexSet) -> Option<(usize, u32)> {
    let mut best: Option<(usize, u32)> = None;
    let mut scratch = set.clone();
    for v in 0..g.vertex_count() {
        if set.contains(v) {
            continue;
        }
        scratch.insert(v);
        let after = objectives::evaluate(g, &scratch).feasibility();
        scratch.remove(v);
        if best.is_none_or(|(_, incumbent)| after < incumbent) {
            best = Some((v, after));
        }
    }
    best
}

/// Builds a connected dominating set greedily: starting from the empty set,
/// repeatedly adds the vertex that lowers feasibility the most (smallest id
/// on ties) until feasibility reaches 2.
///
/// Every step is guaranteed to lower feasibility by at least 1 on a
/// connected graph, so at most `n - 2` steps run. Requires at least 3
/// vertices for the same reason as the evolutionary run: on 2 vertices the
/// empty set already scores feasibility 2.
pub fn greedy_cds(g: &Graph) -> Result<GreedyRun, SolveError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(SolveError::GraphTooSmall { n });
    }
    let start = Instant::now();
    let mut solution = VertexSet::empty(n);
    let mut feasibility = objectives::evaluate(g, &solution).feasibility();
    let mut steps = Vec::new();
    while feasibility > 2 {
        let (vertex, after) =
            best_addition(g, &solution).expect("feasibility above 2 leaves vertices to add");
        assert!(
            after < feasibility,
            "no improving vertex from feasibility {feasibility}; graph invariant violated"
        );
        solution.insert(vertex);
        steps.push(GreedyStep {
            vertex,
            feasibility_before: feasibility,
            feasibility_after: after,
        });
        feasibility = after;
    }
    debug_assert!(g.is_cds(&solution));
    Ok(GreedyRun {
        solution,
        steps,
        wall_time: start.elapsed(),
    })
}

/// Exact integer form of the decay bound: `after <= (1 - 1/m) * before +
/// 2/m + 1`, cleared of denominators.
fn within_decay(before: u32, after: u32, optimum_size: usize) -> bool {
    let m = optimum_size as u64;
    u64::from(after) * m <= (m - 1) * u64::from(before) + m + 2
}

/// Checks a recorded greedy run against the manufactured guarantees, given
/// the true optimum size: each step drops feasibility by at least 1 and
/// lands under the decay line toward the optimum.
pub fn steps_within_guarantee(steps: &[GreedyStep], optimum_size: usize) -> bool {
    optimum_size >= 1
        && steps.iter().all(|s| {
            s.feasibility_after < s.feasibility_before
                && within_decay(s.feasibility_before, s.feasibility_after, optimum_size)
        })
}

/// Sweeps every vertex subset whose feasibility exceeds 2 and checks that
/// the greedy step from it makes the guaranteed progress: feasibility drops
/// by at least 1 and stays under the decay line. Exhaustive over all `2^n`
/// subsets, so only sensible at small n.
pub fn verify_step_guarantee(g: &Graph, optimum_size: usize) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20, "subset sweep is exponential; {n} vertices is too many");
    assert!(optimum_size >= 1);
    for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let set = VertexSet::from_members(n, &members);
        let before = objectives::evaluate(g, &set).feasibility();
        if before <= 2 {
            continue;
        }
        let (_, after) = best_addition(g, &set).expect("feasibility above 2, so not all of V");
        if after >= before || !within_decay(before, after, optimum_size) {
            return false;
        }
    }
    true
}
