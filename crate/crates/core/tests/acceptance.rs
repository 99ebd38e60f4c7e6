//! One pass/fail line per acceptance criterion. Every criterion is exact, so
//! the only pinned tolerances are the mismatch count (zero) and runtime
//! budgets.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use degseq::analysis::is_threshold_graph;
use degseq::forced::{
    bound_excludes_forced, check_monotonicity, forced_edges_labeled, forced_graph,
    max_forced_clique_size, packing_obstruction,
};
use degseq::oracle::{
    enumerate_graphic_sequences, enumerate_realizations, forbidden_set_oracle, forced_set_oracle,
    isomorphism_classes, min_edge_cut_brute_force, verify_all,
};
use degseq::{
    diameter, edge_connectivity, forbidden_set, forced_set, majorizes, sis_sample, DegreeSequence,
    Edge, LabeledGraph, LabeledIntSequence, Majorization, McmcChain,
};

/// Every criterion is exact.
const ALLOWED_MISMATCHES: u64 = 0;
const FAST_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(600);
const PARALLEL_BUDGET: Duration = Duration::from_secs(180);
const MAX_N: usize = 7;
const MAX_N_MONOTONICITY: usize = 6;
const MAX_N_BRUTE_CUT: usize = 6;
const SIS_SEEDS: u64 = 100;
const MCMC_SEEDS: u64 = 20;
const MCMC_STEP_BUDGET: usize = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn exact(failures: u64, checked: u64, what: &str) -> Outcome {
    Outcome {
        pass: failures == ALLOWED_MISMATCHES && checked > 0,
        detail: format!("{what}: {checked} checked, {failures} mismatches"),
    }
}

fn all_sequences(max_n: usize) -> Vec<DegreeSequence> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphic_sequences(n).unwrap())
        .collect()
}

fn realizations(a: &DegreeSequence) -> Vec<LabeledGraph> {
    enumerate_realizations(a, None).unwrap().collect()
}

fn criterion_1() -> Outcome {
    let a: DegreeSequence = "4,4,3,3,3,1".parse().unwrap();
    let forced: Vec<Edge> = forced_set(&a).unwrap().edges().collect();
    let classes = isomorphism_classes(&realizations(&a)).len();
    Outcome {
        pass: forced == vec![Edge::new(1, 2).unwrap()] && classes == 2,
        detail: format!("forced set of 4,4,3,3,3,1 = {forced:?}, {classes} isomorphism classes"),
    }
}

fn criterion_2() -> Outcome {
    let a: LabeledIntSequence = "4,4,4,1,1,1,1,1,1".parse().unwrap();
    let mut padded = vec![0, 1, 1];
    padded.resize(9, 0);
    let b = LabeledIntSequence::new(padded).unwrap();
    let shared = Edge::new(2, 3).unwrap();
    let both = forced_edges_labeled(&a).unwrap().contains(&shared)
        && forced_edges_labeled(&b).unwrap().contains(&shared);
    let obstruction = packing_obstruction(&a, &b).unwrap();
    Outcome {
        pass: both && obstruction == Some(shared),
        detail: format!("(2,3) forced in both: {both}; reported obstruction {obstruction:?}"),
    }
}

fn criterion_3(seqs: &[DegreeSequence]) -> Outcome {
    let mut failures = 0;
    for a in seqs {
        let f: BTreeSet<Edge> = forced_set(a).unwrap().edges().collect();
        let b: BTreeSet<Edge> = forbidden_set(a).unwrap().edges().collect();
        if f != forced_set_oracle(a).unwrap() || b != forbidden_set_oracle(a).unwrap() {
            failures += 1;
        }
    }
    let mut o = exact(
        failures,
        seqs.len() as u64,
        "sequences with F and B equal to the oracle",
    );
    for jobs in [1, 4] {
        let start = Instant::now();
        let report = verify_all(MAX_N, jobs).unwrap();
        let elapsed = start.elapsed();
        let tally = report.tally("oracle-equivalence").unwrap();
        let budget = if jobs == 1 {
            SWEEP_BUDGET
        } else {
            PARALLEL_BUDGET
        };
        o.pass &= tally.failed == 0 && elapsed <= budget;
        o.detail.push_str(&format!(
            "; full verify n={MAX_N} with {jobs} worker(s) {:.2}s",
            elapsed.as_secs_f64()
        ));
    }
    o
}

fn criterion_4(seqs: &[DegreeSequence]) -> Outcome {
    let failures = seqs
        .iter()
        .filter(|a| {
            let n = a.len();
            let f = forced_set_oracle(a).unwrap();
            let mirrored: BTreeSet<Edge> = forbidden_set_oracle(&a.complement())
                .unwrap()
                .iter()
                .map(|e| e.mirrored(n))
                .collect();
            f != mirrored
                || forbidden_set(&a.complement()).unwrap().mirrored() != forced_set(a).unwrap()
        })
        .count() as u64;
    exact(
        failures,
        seqs.len() as u64,
        "sequences with F(a) = B(complement) mirrored",
    )
}

fn criterion_5(seqs: &[DegreeSequence]) -> Outcome {
    let failures = seqs
        .iter()
        .filter(|a| !is_threshold_graph(&forced_graph(a).unwrap()))
        .count() as u64;
    exact(
        failures,
        seqs.len() as u64,
        "forced graphs free of 2K2, P4, C4",
    )
}

fn structural(a: &DegreeSequence) -> bool {
    a.min_degree() >= 1
        && !(forced_set(a).unwrap().is_empty() && forbidden_set(a).unwrap().is_empty())
}

fn criterion_6(seqs: &[DegreeSequence]) -> Outcome {
    let (mut checked, mut failures) = (0, 0);
    for a in seqs.iter().filter(|a| structural(a)) {
        for g in realizations(a) {
            checked += 1;
            if !diameter(&g).at_most(3) {
                failures += 1;
            }
        }
    }
    exact(failures, checked, "realizations with diameter <= 3")
}

fn criterion_7(seqs: &[DegreeSequence]) -> Outcome {
    let (mut checked, mut failures, mut brute) = (0, 0, 0);
    for a in seqs {
        let hyp = structural(a);
        for g in realizations(a) {
            let lambda = edge_connectivity(&g).lambda;
            if hyp {
                checked += 1;
                if lambda != a.min_degree() {
                    failures += 1;
                }
            }
            if a.len() <= MAX_N_BRUTE_CUT {
                brute += 1;
                if lambda != min_edge_cut_brute_force(&g) {
                    failures += 1;
                }
            }
        }
    }
    exact(
        failures,
        checked,
        &format!("realizations with lambda = min degree, plus {brute} brute-force cut comparisons"),
    )
}

fn criterion_8() -> Outcome {
    let (mut checked, mut failures) = (0, 0);
    for n in 1..=MAX_N_MONOTONICITY {
        let seqs: Vec<DegreeSequence> = enumerate_graphic_sequences(n).unwrap().collect();
        for a in &seqs {
            for b in &seqs {
                if majorizes(a, b).unwrap() == Majorization::LeftMajorizes {
                    checked += 1;
                    if !check_monotonicity(a, b).unwrap() {
                        failures += 1;
                    }
                }
            }
        }
    }
    exact(
        failures,
        checked,
        "strictly comparable graphic pairs with F and B growing",
    )
}

fn criterion_9(seqs: &[DegreeSequence]) -> Outcome {
    let (mut checked, mut failures) = (0, 0);
    for a in seqs.iter().filter(|a| a.min_degree() > 0) {
        checked += 1;
        if bound_excludes_forced(a).unwrap() && !forced_set(a).unwrap().is_empty() {
            failures += 1;
        }
    }
    let regular: DegreeSequence = "2,2,2,2,2,2,2,2,2".parse().unwrap();
    let regular_ok = bound_excludes_forced(&regular).unwrap();
    let mut o = exact(failures, checked, "bound never flags a nonempty forced set");
    o.pass &= regular_ok;
    o.detail
        .push_str(&format!("; 9-vertex 2-regular flagged: {regular_ok}"));
    o
}

fn criterion_10(seqs: &[DegreeSequence]) -> Outcome {
    let (mut checked, mut failures, mut literal_failures) = (0, 0, 0);
    for a in seqs.iter().filter(|a| a.min_degree() > 0) {
        let n = a.len();
        let clique = max_forced_clique_size(a).unwrap();
        for e in forbidden_set(a).unwrap().edges() {
            checked += 1;
            if clique < a.degree(e.j()) {
                failures += 1;
            }
            if clique < a.degree(e.i()) {
                literal_failures += 1;
            }
        }
        if a.max_degree() + 2 < n && !forced_set(a).unwrap().is_empty() {
            checked += 1;
            if clique < a.min_degree() {
                failures += 1;
            }
        }
    }
    let mut o = exact(
        failures,
        checked,
        "forbidden edges (i,j) with a forced clique >= degree of j, plus corollary cases",
    );
    o.detail.push_str(&format!(
        "; bounding by the degree of the smaller label i instead fails {literal_failures} times (documented deviation)"
    ));
    o
}

fn criterion_11(seqs: &[DegreeSequence]) -> Outcome {
    let mut sis_failures = 0;
    let mut sis_runs = 0;
    for a in seqs {
        for seed in 0..SIS_SEEDS {
            sis_runs += 1;
            match sis_sample(a, seed) {
                Ok(g) if g.degree_list() == a.values() => {}
                _ => sis_failures += 1,
            }
        }
    }
    let matching: DegreeSequence = "1,1,1,1".parse().unwrap();
    let mut mcmc_failures = 0;
    for seed in 0..MCMC_SEEDS {
        let mut chain = McmcChain::new(&matching, seed).unwrap();
        let mut seen = BTreeSet::from([chain.graph().to_edge_list()]);
        for _ in 0..MCMC_STEP_BUDGET {
            if seen.len() == 3 {
                break;
            }
            chain.step();
            seen.insert(chain.graph().to_edge_list());
        }
        if seen.len() != 3 {
            mcmc_failures += 1;
        }
    }
    let mut forced_failures = 0;
    let mut states = 0;
    for a in seqs {
        let forced = forced_set(a).unwrap();
        let mut chain = McmcChain::new(a, 5).unwrap();
        for _ in 0..200 {
            chain.step();
            states += 1;
            if !forced.edges().all(|e| chain.graph().has_edge(e.i(), e.j())) {
                forced_failures += 1;
            }
        }
    }
    let failures = sis_failures + mcmc_failures + forced_failures;
    Outcome {
        pass: failures == ALLOWED_MISMATCHES,
        detail: format!(
            "SIS {sis_runs} runs, {sis_failures} dead ends or invalid; MCMC on 1,1,1,1 missed a matching for \
             {mcmc_failures}/{MCMC_SEEDS} seeds; {states} MCMC states, {forced_failures} missing a forced edge"
        ),
    }
}

fn main() -> ExitCode {
    let seqs = all_sequences(MAX_N);
    type Check<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let checks: Vec<Check> = vec![
        (
            "forced set and isomorphism classes of 4,4,3,3,3,1",
            FAST_BUDGET,
            Box::new(criterion_1),
        ),
        (
            "shared forced edge blocks packing",
            FAST_BUDGET,
            Box::new(criterion_2),
        ),
        (
            "staircase sets equal oracle sets, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_3(&seqs)),
        ),
        (
            "duality under complement, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_4(&seqs)),
        ),
        (
            "forced graph is threshold, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_5(&seqs)),
        ),
        (
            "diameter at most 3, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_6(&seqs)),
        ),
        (
            "edge connectivity equals minimum degree, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_7(&seqs)),
        ),
        (
            "monotonicity along majorization, n <= 6",
            SWEEP_BUDGET,
            Box::new(criterion_8),
        ),
        (
            "bound excludes forced edges, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_9(&seqs)),
        ),
        (
            "forced cliques from forbidden edges, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_10(&seqs)),
        ),
        (
            "samplers, n <= 7",
            SWEEP_BUDGET,
            Box::new(|| criterion_11(&seqs)),
        ),
    ];
    let mut all = true;
    for (idx, (name, budget, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if elapsed > *budget {
            outcome.pass = false;
            outcome
                .detail
                .push_str(&format!("; over budget {budget:?}"));
        }
        all &= outcome.pass;
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict} {name} ({:.2}s): {}",
            idx + 1,
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILURES" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
