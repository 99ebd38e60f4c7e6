//! Exhaustive theorem sweep over every graphic sequence of one length.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate_graphic_sequences, enumerate_realizations, min_edge_cut_brute_force};
use crate::analysis::{
    check_forbidden_clique, check_forced_independence, diameter, edge_connectivity,
    is_threshold_graph, Diameter,
};
use crate::error::{Error, Result};
use crate::forced::{
    bound_excludes_forced, check_monotonicity, forbidden_set, forbidden_set_via_complement,
    forced_set, induced_forced_persists, is_threshold_sequence, max_forced_clique_size, Edge,
    StaircaseEdgeSet,
};
use crate::graph::LabeledGraph;
use crate::seq::{majorizes, DegreeSequence, Label, Majorization};

/// Largest `n` accepted by [`verify_all`].
pub const MAX_VERIFY_N: usize = 7;

/// Largest `n` at which cuts are also checked by edge-subset enumeration.
pub const MAX_BRUTE_FORCE_CUT_N: usize = 6;

/// Names of the checked statements, in report order.
pub const THEOREMS: [&str; 20] = [
    "realization-validity",
    "oracle-equivalence",
    "duality",
    "forbidden-routes-agree",
    "staircase-closure",
    "corner-rule",
    "forced-forbidden-disjoint",
    "threshold-structure",
    "threshold-sequence",
    "monotonicity",
    "bound",
    "induced-persistence",
    "forced-independence",
    "forbidden-clique",
    "forced-clique",
    "min-degree-clique",
    "diameter",
    "connectivity",
    "diameter-two-connectivity",
    "cut-brute-force",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sequence: DegreeSequence,
    /// Edge list of the offending realization, when the statement is about one.
    pub realization: Option<Vec<Edge>>,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub theorem: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub sequences_checked: u64,
    pub realizations_checked: u64,
    pub theorems: Vec<TheoremTally>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.theorems.iter().all(|t| t.failed == 0)
    }

    pub fn tally(&self, theorem: &str) -> Option<&TheoremTally> {
        self.theorems.iter().find(|t| t.theorem == theorem)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremTally> {
        self.theorems.iter().filter(|t| t.failed > 0)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify n={}: {} sequences, {} realizations",
            self.n, self.sequences_checked, self.realizations_checked
        )?;
        let width = THEOREMS.iter().map(|t| t.len()).max().unwrap_or(0);
        for t in &self.theorems {
            let verdict = if t.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  {:<width$}  {verdict}  checked {}  passed {}  failed {}",
                t.theorem, t.checked, t.passed, t.failed
            )?;
            if let Some(c) = &t.counterexample {
                write!(f, "    counterexample: sequence {}", c.sequence)?;
                if let Some(edges) = &c.realization {
                    let list: Vec<String> = edges.iter().map(Edge::to_string).collect();
                    write!(f, "; realization {}", list.join(","))?;
                }
                writeln!(f, "; {}", c.witness)?;
            }
        }
        let verdict = if self.all_passed() {
            "all pass"
        } else {
            "counterexample found"
        };
        write!(f, "result: {verdict}")
    }
}

/// Per-theorem tallies for one work unit, indexed like [`THEOREMS`].
struct Tallies {
    rows: Vec<TheoremTally>,
}

impl Tallies {
    fn new() -> Self {
        Tallies {
            rows: THEOREMS
                .iter()
                .map(|t| TheoremTally {
                    theorem: (*t).to_string(),
                    checked: 0,
                    passed: 0,
                    failed: 0,
                    counterexample: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, theorem: &str, ok: bool, witness: impl FnOnce() -> Counterexample) {
        let idx = THEOREMS
            .iter()
            .position(|t| *t == theorem)
            .expect("known theorem");
        let row = &mut self.rows[idx];
        row.checked += 1;
        if ok {
            row.passed += 1;
        } else {
            row.failed += 1;
            if row.counterexample.is_none() {
                row.counterexample = Some(witness());
            }
        }
    }

    /// Adds `later` into `self`, keeping the earliest counterexample.
    fn absorb(&mut self, later: Tallies) {
        for (row, other) in self.rows.iter_mut().zip(later.rows) {
            row.checked += other.checked;
            row.passed += other.passed;
            row.failed += other.failed;
            if row.counterexample.is_none() {
                row.counterexample = other.counterexample;
            }
        }
    }
}

fn edge_set(s: &StaircaseEdgeSet) -> BTreeSet<Edge> {
    s.edges().collect()
}

fn show(edges: &BTreeSet<Edge>) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges
        .iter()
        .map(Edge::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn subsets_containing(n: usize, i: Label, j: Label) -> impl Iterator<Item = Vec<Label>> {
    let others: Vec<Label> = (1..=n).filter(|&v| v != i && v != j).collect();
    (0u32..1 << others.len()).map(move |mask| {
        let mut s = vec![i, j];
        s.extend(
            others
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v),
        );
        s
    })
}

fn on_sequence(a: &DegreeSequence, witness: String) -> impl FnOnce() -> Counterexample + '_ {
    move || Counterexample {
        sequence: a.clone(),
        realization: None,
        witness,
    }
}

fn witness_on(a: &DegreeSequence, g: &LabeledGraph, witness: String) -> Counterexample {
    Counterexample {
        sequence: a.clone(),
        realization: Some(g.edges().collect()),
        witness,
    }
}

fn check_sequence(a: &DegreeSequence, comparable: &[DegreeSequence]) -> Result<(Tallies, u64)> {
    let n = a.len();
    let mut tallies = Tallies::new();
    let realizations: Vec<LabeledGraph> = enumerate_realizations(a, None)?.collect();

    for g in &realizations {
        let ok = g.degree_list() == a.values();
        tallies.record("realization-validity", ok, || {
            witness_on(a, g, format!("degrees {:?}", g.degree_list()))
        });
    }

    let forced = forced_set(a)?;
    let forbidden = forbidden_set(a)?;
    let f = edge_set(&forced);
    let b = edge_set(&forbidden);

    let mut oracle_f: BTreeSet<Edge> = realizations
        .first()
        .map(|g| g.edges().collect())
        .unwrap_or_default();
    let mut union: BTreeSet<Edge> = BTreeSet::new();
    for g in &realizations {
        oracle_f.retain(|e| g.has_edge(e.i(), e.j()));
        union.extend(g.edges());
    }
    let oracle_b: BTreeSet<Edge> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| Edge::new(i, j).expect("i < j")))
        .filter(|e| !union.contains(e))
        .collect();

    let ok = f == oracle_f && b == oracle_b;
    let msg = format!(
        "staircase F={} B={}; oracle F={} B={}",
        show(&f),
        show(&b),
        show(&oracle_f),
        show(&oracle_b)
    );
    tallies.record("oracle-equivalence", ok, on_sequence(a, msg));

    let dual = forbidden_set(&a.complement())?.mirrored();
    let ok = dual == forced;
    let msg = format!(
        "F={} but mirrored B(complement)={}",
        show(&f),
        show(&edge_set(&dual))
    );
    tallies.record("duality", ok, on_sequence(a, msg));

    let via = forbidden_set_via_complement(a)?;
    let ok = via == forbidden;
    let msg = format!(
        "direct B={} via complement {}",
        show(&b),
        show(&edge_set(&via))
    );
    tallies.record("forbidden-routes-agree", ok, on_sequence(a, msg));

    // Closure is checked on the oracle sets, which carry no built-in shape.
    let mut closure_failure = None;
    'outer: for e in &oracle_f {
        for p in 1..=e.i() {
            for q in 1..=e.j() {
                if p != q && !oracle_f.contains(&Edge::new(p, q).expect("p != q")) {
                    closure_failure =
                        Some(format!("{e} forced but ({},{}) not", p.min(q), p.max(q)));
                    break 'outer;
                }
            }
        }
    }
    if closure_failure.is_none() {
        'outer2: for e in &oracle_b {
            for p in e.i()..=n {
                for q in e.j()..=n {
                    if p != q && !oracle_b.contains(&Edge::new(p, q).expect("p != q")) {
                        closure_failure =
                            Some(format!("{e} forbidden but ({},{}) not", p.min(q), p.max(q)));
                        break 'outer2;
                    }
                }
            }
        }
    }
    let ok = closure_failure.is_none();
    tallies.record(
        "staircase-closure",
        ok,
        on_sequence(a, closure_failure.unwrap_or_default()),
    );

    if n >= 2 {
        let first_forced = Edge::new(1, 2).expect("n >= 2");
        let first_forbidden = Edge::new(n - 1, n).expect("n >= 2");
        let ok = oracle_f.is_empty() != oracle_f.contains(&first_forced)
            && oracle_b.is_empty() != oracle_b.contains(&first_forbidden);
        let msg = format!("oracle F={} B={}", show(&oracle_f), show(&oracle_b));
        tallies.record("corner-rule", ok, on_sequence(a, msg));
    }

    let overlap: BTreeSet<&Edge> = oracle_f.intersection(&oracle_b).collect();
    let ok = overlap.is_empty();
    let msg = format!("edges in both: {overlap:?}");
    tallies.record("forced-forbidden-disjoint", ok, on_sequence(a, msg));

    let forced_graph = LabeledGraph::from_edges(n, oracle_f.iter().copied())?;
    let ok = is_threshold_graph(&forced_graph);
    let msg = format!(
        "forced graph {} has an induced 2K2, P4 or C4",
        show(&oracle_f)
    );
    tallies.record("threshold-structure", ok, on_sequence(a, msg));

    let unique = is_threshold_sequence(a)?;
    let ok = unique == (realizations.len() == 1);
    let msg = format!(
        "threshold sequence {unique} with {} realizations",
        realizations.len()
    );
    tallies.record("threshold-sequence", ok, on_sequence(a, msg));

    for b_seq in comparable {
        let ok = check_monotonicity(a, b_seq)?;
        let msg = format!("majorizes {b_seq} but sets do not contain its sets");
        tallies.record("monotonicity", ok, on_sequence(a, msg));
    }

    let min = a.min_degree();
    if min > 0 {
        let flagged = bound_excludes_forced(a)?;
        let ok = !flagged || oracle_f.is_empty();
        let msg = format!("bound holds but F={}", show(&oracle_f));
        tallies.record("bound", ok, on_sequence(a, msg));
    }

    let clique = max_forced_clique_size(a)?;
    if min > 0 {
        // Bounded by the smaller endpoint degree: the larger one fails, e.g. <5,4,2,2,2,1>.
        for e in &oracle_b {
            let need = a.degree(e.j());
            let ok = clique >= need;
            let msg = format!(
                "{e} forbidden, degree of {} is {need}, largest forced clique {clique}",
                e.j()
            );
            tallies.record("forced-clique", ok, on_sequence(a, msg));
        }
        if a.max_degree() + 2 < n && !oracle_f.is_empty() {
            let ok = clique >= min;
            let msg = format!("largest forced clique {clique} below minimum degree {min}");
            tallies.record("min-degree-clique", ok, on_sequence(a, msg));
        }
    }

    // Fails with maximum degree n - 2, e.g. <5,5,4,3,3,1,1>.
    let clique_hypotheses = a.max_degree() + 2 < n && min > 0;
    let structural = min >= 1 && !(oracle_f.is_empty() && oracle_b.is_empty());
    for g in &realizations {
        for e in &oracle_f {
            for s in subsets_containing(n, e.i(), e.j()) {
                let ok = induced_forced_persists(g, e.i(), e.j(), &s)?;
                tallies.record("induced-persistence", ok, || {
                    witness_on(
                        a,
                        g,
                        format!("{e} not forced in the subgraph induced by {s:?}"),
                    )
                });
            }
            let ok = check_forced_independence(g, e.i(), e.j())?;
            tallies.record("forced-independence", ok, || {
                witness_on(
                    a,
                    g,
                    format!(
                        "vertices outside N({}) and N({}) are not independent",
                        e.i(),
                        e.j()
                    ),
                )
            });
        }
        if clique_hypotheses {
            for e in &oracle_b {
                let ok = check_forbidden_clique(g, e.i(), e.j())?;
                tallies.record("forbidden-clique", ok, || {
                    witness_on(
                        a,
                        g,
                        format!("N({}) and N({}) do not span a clique", e.i(), e.j()),
                    )
                });
            }
        }
        let d = diameter(g);
        let cut = edge_connectivity(g);
        if structural {
            let ok = d.at_most(3);
            tallies.record("diameter", ok, || witness_on(a, g, format!("diameter {d}")));
            let ok = cut.lambda == min;
            tallies.record("connectivity", ok, || {
                witness_on(
                    a,
                    g,
                    format!(
                        "lambda {} with cut {:?}, minimum degree {min}",
                        cut.lambda, cut.witness_cut
                    ),
                )
            });
        }
        if matches!(d, Diameter::Finite(x) if x <= 2) && n >= 2 {
            let ok = cut.lambda == min;
            tallies.record("diameter-two-connectivity", ok, || {
                witness_on(
                    a,
                    g,
                    format!("diameter {d}, lambda {}, minimum degree {min}", cut.lambda),
                )
            });
        }
        if n <= MAX_BRUTE_FORCE_CUT_N {
            let brute = min_edge_cut_brute_force(g);
            let ok = brute == cut.lambda && cut.witness_cut.len() == cut.lambda;
            tallies.record("cut-brute-force", ok, || {
                witness_on(
                    a,
                    g,
                    format!("max-flow lambda {} but brute force {brute}", cut.lambda),
                )
            });
        }
    }
    Ok((tallies, realizations.len() as u64))
}

/// Runs every check over all graphic sequences of length `n` on `jobs`
/// worker threads (0 uses the rayon default). The report is identical for
/// every `jobs`.
pub fn verify_all(n: usize, jobs: usize) -> Result<VerificationReport> {
    if n > MAX_VERIFY_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERIFY_N,
        });
    }
    let sequences: Vec<DegreeSequence> = enumerate_graphic_sequences(n)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
    let results: Vec<Result<(Tallies, u64)>> = pool.install(|| {
        sequences
            .par_iter()
            .map(|a| {
                let below: Vec<DegreeSequence> = sequences
                    .iter()
                    .filter(|b| *b != a && majorizes(a, b) == Ok(Majorization::LeftMajorizes))
                    .cloned()
                    .collect();
                check_sequence(a, &below)
            })
            .collect()
    });
    let mut total = Tallies::new();
    let mut realizations = 0;
    for r in results {
        let (t, count) = r?;
        total.absorb(t);
        realizations += count;
    }
    Ok(VerificationReport {
        n,
        sequences_checked: sequences.len() as u64,
        realizations_checked: realizations,
        theorems: total.rows,
    })
}
