//! Acceptance suite: the product-level checks that gate a release. Each test
//! prints exactly one summary line ("acceptance criterion NN (...): PASS") or
//! panics with the collected violations, so a full `cargo test --test
//! acceptance -- --nocapture` reads as a checklist.

mod common;

use std::collections::HashSet;

use mincds::engine::{mutate_one_bit, mutate_per_bit, Individual, Population};
use mincds::harness::{
    csv_without_wall_time, render_csv, run_experiment, ExperimentSpec, InstanceSpec, SolverKind,
    CSV_HEADER,
};
use mincds::objectives::{compare, is_good_individual, Dominance, Evaluation};
use mincds::{
    evaluate, exact_min_cds, generate, greedy_cds, is_connected, run, Algorithm, Budget, GenSpec,
    RunConfig, VertexSet, DEFAULT_ORACLE_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(number: u32, name: &str, violations: Vec<String>) {
    if violations.is_empty() {
        println!("acceptance criterion {number:02} ({name}): PASS");
    } else {
        println!(
            "acceptance criterion {number:02} ({name}): FAIL with {} violations",
            violations.len()
        );
        for v in violations.iter().take(10) {
            println!("  {v}");
        }
        panic!("acceptance criterion {number:02} ({name}) failed");
    }
}

fn ratio_bound(max_degree: usize, optimum: usize) -> f64 {
    (2.0 + (max_degree as f64).ln()) * optimum as f64
}

/// Feasibility score 2 must coincide with the connected-dominating-set
/// predicate on every subset of every small suite graph.
#[test]
fn criterion_01_feasibility_equivalence() {
    let mut violations = Vec::new();
    for (name, g) in common::small_suite() {
        let n = g.vertex_count();
        for mask in common::subsets(n) {
            let set = common::mask_to_set(mask, n);
            let by_objective = evaluate(&g, &set).is_feasible();
            let by_definition = g.is_cds(&set);
            if by_objective != by_definition {
                violations.push(format!(
                    "{name}: subset {mask:#b} objective says {by_objective}, definition says {by_definition}"
                ));
            }
        }
    }
    report(1, "feasibility equivalence, exhaustive", violations);
}

/// The single-step guarantee behind both solvers: from every infeasible
/// subset, the best addition strictly improves feasibility and respects the
/// geometric decay bound. Swept over all subsets of every small suite graph.
#[test]
fn criterion_02_step_guarantee_sweep() {
    let mut violations = Vec::new();
    for (name, g) in common::small_suite() {
        let m = exact_min_cds(&g, 10).unwrap().minimum_size;
        if !mincds::greedy::verify_step_guarantee(&g, m) {
            violations.push(format!("{name}: step guarantee sweep failed (optimum {m})"));
        }
    }
    report(2, "single-step guarantee, exhaustive", violations);
}

/// The on-track diagnostic machinery, checked exactly over integer grids.
///
/// Grid parameters follow what connected graphs can realize: the optimum
/// needs `m <= n-2` (prune a spanning tree to its internal vertices), each
/// vertex dominates at most `max_degree + 1` vertices so `n <= (Δ+1)m`, and
/// a connected graph on n >= 3 vertices has `2 <= Δ <= n-1`. On those grids,
/// two facts must hold with zero tolerance: every on-track evaluation that
/// still has feasibility >= 2m+2 has size at most m ln Δ, and the on-track
/// region is downward closed in both coordinates. The library predicate must
/// agree with the cleared-denominator integer check everywhere.
#[test]
fn criterion_03_diagnostic_bound_grids() {
    let mut violations = Vec::new();
    for n in 3..=30i128 {
        for m in 1..=10i128.min(n - 2) {
            for delta in 2..=29i128.min(n - 1) {
                if n > (delta + 1) * m {
                    continue;
                }
                let size_cap = m as f64 * (delta as f64).ln();
                // Powers of m and m-1 up to exponent n; largest is 10^30.
                let mut pow_m = vec![1i128; n as usize + 1];
                let mut pow_m1 = vec![1i128; n as usize + 1];
                for s in 1..=n as usize {
                    pow_m[s] = pow_m[s - 1] * m;
                    pow_m1[s] = pow_m1[s - 1] * (m - 1);
                }
                let good =
                    |f1: i128, s: usize| (f1 - m - 2) * pow_m[s] <= (n - 2 - m) * pow_m1[s];
                for s in 0..=n as usize {
                    for f1 in 0..=2 * n {
                        let lib = is_good_individual(
                            &Evaluation {
                                induced_components: 0,
                                covered_components: f1 as u32,
                                size: s as u32,
                            },
                            n as usize,
                            m as usize,
                        )
                        .unwrap();
                        if lib != good(f1, s) {
                            violations.push(format!(
                                "n={n} m={m}: library predicate disagrees at f1={f1} size={s}"
                            ));
                        }
                        if !good(f1, s) {
                            continue;
                        }
                        if f1 >= 2 * m + 2 && s as f64 > size_cap {
                            violations.push(format!(
                                "n={n} m={m} delta={delta}: on-track f1={f1} size={s} exceeds {size_cap:.3}"
                            ));
                        }
                        if f1 > 0 && !good(f1 - 1, s) {
                            violations.push(format!(
                                "n={n} m={m}: on-track region not closed under f1 {f1}->{}",
                                f1 - 1
                            ));
                        }
                        if s > 0 && !good(f1, s - 1) {
                            violations.push(format!(
                                "n={n} m={m}: on-track region not closed under size {s}->{}",
                                s - 1
                            ));
                        }
                    }
                }
            }
        }
    }
    report(3, "diagnostic bound grids, exact", violations);
}

/// Both engines must deliver the guaranteed approximation ratio at the cubic
/// budget (times e for the per-bit engine) on at least 19 of 20 fixed seeds
/// per instance. The budget guarantee is an expectation bound, hence the
/// one-seed slack; suite composition notes live in the fixtures module.
#[test]
fn criterion_04_engine_ratio_at_cubic_budget() {
    let mut violations = Vec::new();
    for (name, g) in common::ratio_suite() {
        let n = g.vertex_count();
        let m = exact_min_cds(&g, 20).unwrap().minimum_size;
        let bound = ratio_bound(g.max_degree(), m);
        let t1 = Budget::Cubic.resolve(n);
        let scaled = (std::f64::consts::E * t1 as f64).ceil() as u64;
        for (algorithm, budget) in [(Algorithm::Semo, t1), (Algorithm::Gsemo, scaled)] {
            let mut hits = 0u32;
            for seed in 0..20u64 {
                let config = RunConfig::new(algorithm, Budget::Fixed(budget), seed);
                if let Some(size) = run(&g, &config).unwrap().solution_size() {
                    if size as f64 <= bound {
                        hits += 1;
                    }
                }
            }
            if hits < 19 {
                violations.push(format!(
                    "{name}: {algorithm} made the ratio bound on only {hits}/20 seeds at budget {budget}"
                ));
            }
        }
    }
    report(4, "engine ratio at cubic budget, 19/20 seeds", violations);
}

/// The greedy baseline must meet the same ratio everywhere the oracle can
/// certify the optimum, with strictly decreasing feasibility per step and
/// every step inside the decay bound.
#[test]
fn criterion_05_greedy_guarantee() {
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    let instances = common::small_suite()
        .into_iter()
        .chain(common::ratio_suite())
        .filter(|(name, _)| seen.insert(name.clone()));
    for (name, g) in instances {
        let m = exact_min_cds(&g, 20).unwrap().minimum_size;
        let report = greedy_cds(&g).unwrap();
        if !g.is_cds(&report.solution) {
            violations.push(format!("{name}: greedy returned a non-solution"));
        }
        if report.solution.len() as f64 > ratio_bound(g.max_degree(), m) {
            violations.push(format!(
                "{name}: greedy size {} above the guarantee for optimum {m}",
                report.solution.len()
            ));
        }
        if report
            .steps
            .iter()
            .any(|s| s.feasibility_after >= s.feasibility_before)
        {
            violations.push(format!("{name}: a greedy step failed to improve feasibility"));
        }
        if !mincds::greedy::steps_within_guarantee(&report.steps, m) {
            violations.push(format!("{name}: greedy steps left the decay bound"));
        }
    }
    report(5, "greedy ratio and strict descent", violations);
}

/// A million random offers must never leave the archive with a dominated
/// member, a duplicated feasibility value, or a duplicated objective vector.
#[test]
fn criterion_06_archive_invariants_fuzz() {
    let mut violations = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pop = Population::new();
    'outer: for round in 0..1_000_000u32 {
        let eval = Evaluation {
            induced_components: rng.random_range(0..=6),
            covered_components: rng.random_range(1..=10),
            size: rng.random_range(0..=12),
        };
        pop.offer(Individual {
            bits: VertexSet::empty(1),
            eval,
        });
        let evals = pop.evaluations();
        let mut seen_f1 = HashSet::new();
        for e in &evals {
            if !seen_f1.insert(e.feasibility()) {
                violations.push(format!(
                    "round {round}: feasibility {} held by two members",
                    e.feasibility()
                ));
                break 'outer;
            }
        }
        for (i, a) in evals.iter().enumerate() {
            for b in evals.iter().skip(i + 1) {
                if compare(a, b) != Dominance::Incomparable {
                    violations.push(format!(
                        "round {round}: members {a:?} and {b:?} are comparable"
                    ));
                    break 'outer;
                }
            }
        }
    }
    report(6, "archive invariants under 1e6 offers", violations);
}

/// The one-bit operator must be uniform over positions (chi-square on 1e5
/// draws under the 0.001 critical value for 9 degrees of freedom) and the
/// per-bit operator must flip exactly one bit with probability close to
/// (1-1/n)^(n-1), both at n=10 with a fixed stream.
#[test]
fn criterion_07_mutation_distributions() {
    let mut violations = Vec::new();
    let n = 10usize;
    let samples = 100_000u32;
    let parent = VertexSet::empty(n);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut counts = vec![0u32; n];
    for _ in 0..samples {
        let child = mutate_one_bit(&parent, &mut rng);
        counts[child.iter().next().unwrap()] += 1;
    }
    let expected = f64::from(samples) / n as f64;
    let chi2: f64 = counts
        .iter()
        .map(|&c| {
            let d = f64::from(c) - expected;
            d * d / expected
        })
        .sum();
    // Critical value of the chi-square distribution, 9 dof, p = 0.001.
    if chi2 >= 27.877 {
        violations.push(format!("one-bit position counts {counts:?} give chi2 {chi2:.3}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut exactly_one = 0u32;
    for _ in 0..samples {
        if mutate_per_bit(&parent, &mut rng).len() == 1 {
            exactly_one += 1;
        }
    }
    let freq = f64::from(exactly_one) / f64::from(samples);
    let target = (1.0 - 1.0 / n as f64).powi(n as i32 - 1);
    if (freq - target).abs() > 0.02 {
        violations.push(format!(
            "per-bit single-flip frequency {freq:.5} not within 0.02 of {target:.5}"
        ));
    }
    report(7, "mutation operator distributions", violations);
}

/// Generator contracts: the attachment model always yields connected graphs
/// with exactly 2n-4 edges; the sparse random model always yields connected
/// graphs with edge counts inside a four-sigma binomial window.
#[test]
fn criterion_08_generator_contracts() {
    let mut violations = Vec::new();
    for n in 4..=100usize {
        for seed in 0..10u64 {
            let g = generate(&GenSpec::ba(n, seed)).unwrap();
            if g.edge_count() != 2 * n - 4 {
                violations.push(format!(
                    "ba n={n} seed={seed}: {} edges instead of {}",
                    g.edge_count(),
                    2 * n - 4
                ));
            }
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (u as usize, v as usize))
                .collect();
            if !is_connected(n, &edges) {
                violations.push(format!("ba n={n} seed={seed}: disconnected"));
            }
        }
    }

    let n = 50usize;
    let p = (n as f64).ln() / n as f64;
    let pairs = (n * (n - 1) / 2) as f64;
    let mean = pairs * p;
    let sigma = (pairs * p * (1.0 - p)).sqrt();
    for seed in 0..100u64 {
        let g = generate(&GenSpec::er(n, seed)).unwrap();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        if !is_connected(n, &edges) {
            violations.push(format!("er n=50 seed={seed}: disconnected"));
        }
        let e = g.edge_count() as f64;
        if (e - mean).abs() > 4.0 * sigma {
            violations.push(format!(
                "er n=50 seed={seed}: {} edges outside {mean:.1} +- {:.1}",
                g.edge_count(),
                4.0 * sigma
            ));
        }
    }
    report(8, "generator contracts", violations);
}

/// On the seeded generated corpus, the evolutionary engine at the cubic
/// budget must be competitive with greedy: mean size within one vertex per
/// instance. The size gap between the cubic and the quadratic budget is
/// an observation the literature reports rather than guarantees, so it is
/// printed, not asserted.
#[test]
fn criterion_09_baseline_comparison() {
    let mut violations = Vec::new();
    for (name, g) in common::comparison_corpus() {
        let n = g.vertex_count();
        let greedy_size = greedy_cds(&g).unwrap().solution.len();
        let t1 = Budget::Cubic.resolve(n);
        let mut sizes = Vec::new();
        for seed in 0..10u64 {
            let config = RunConfig::new(Algorithm::Semo, Budget::Fixed(t1), seed);
            match run(&g, &config).unwrap().solution_size() {
                Some(s) => sizes.push(f64::from(s)),
                None => violations.push(format!("{name}: seed {seed} infeasible at cubic budget")),
            }
        }
        let mean = sizes.iter().sum::<f64>() / sizes.len().max(1) as f64;
        if mean > greedy_size as f64 + 1.0 {
            violations.push(format!(
                "{name}: mean engine size {mean:.2} above greedy {greedy_size} + 1"
            ));
        }
        if name.starts_with("ba-") {
            let t2 = Budget::Square.resolve(n);
            let mut t2_sizes = Vec::new();
            let mut t2_misses = 0u32;
            for seed in 0..10u64 {
                let config = RunConfig::new(Algorithm::Semo, Budget::Fixed(t2), seed);
                match run(&g, &config).unwrap().solution_size() {
                    Some(s) => t2_sizes.push(f64::from(s)),
                    None => t2_misses += 1,
                }
            }
            let t2_mean = t2_sizes.iter().sum::<f64>() / t2_sizes.len().max(1) as f64;
            println!(
                "  note {name}: cubic-budget mean {mean:.2}, quadratic-budget mean {t2_mean:.2} ({t2_misses}/10 infeasible)"
            );
        }
    }
    report(9, "baseline comparison on generated corpus", violations);
}

/// Identical experiment specs must render byte-identical CSV (wall time
/// aside), independently of the worker count.
#[test]
fn criterion_10_bench_determinism() {
    let mut violations = Vec::new();
    let spec = |workers: usize| ExperimentSpec {
        instances: vec![
            InstanceSpec::generated(GenSpec::ba(12, 312)),
            InstanceSpec::generated(GenSpec::er(10, 210)),
        ],
        solvers: vec![
            SolverKind::Semo,
            SolverKind::Gsemo,
            SolverKind::Greedy,
            SolverKind::Exact,
        ],
        budgets: vec![Budget::Cubic, Budget::Fixed(300)],
        replicates: 2,
        base_seed: 11,
        oracle_cap: DEFAULT_ORACLE_CAP,
        workers,
    };
    let runs: Vec<String> = [1usize, 1, 2]
        .iter()
        .map(|&w| csv_without_wall_time(&render_csv(&run_experiment(&spec(w)).unwrap())))
        .collect();
    if !runs[0].starts_with(&csv_without_wall_time(&format!("{CSV_HEADER}\n"))) {
        violations.push("rendered CSV does not start with the canonical header".into());
    }
    if runs[0] != runs[1] {
        violations.push("two identical single-worker runs rendered different CSV".into());
    }
    if runs[0] != runs[2] {
        violations.push("worker count changed the rendered CSV".into());
    }
    report(10, "bench determinism", violations);
}
