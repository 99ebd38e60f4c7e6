//! Forced and forbidden edge sets.
//!
//! An edge `(i, j)` is forced when `increment({i, j})` of the sequence is not
//! graphic, and forbidden when `decrement({i, j})` is not graphic. The forced
//! set is downward closed: with `(i, j)` it contains every `(p, q)` with
//! `p <= i`, `q <= j`, `p != q`. The forbidden set is upward closed, and is
//! downward closed after relabeling `i -> n + 1 - i`.
//!
//! [`StaircaseEdgeSet`] stores either set as one boundary per row, so a full
//! set costs `O(n)` space and is computed with at most `2n` graphicality
//! probes.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::analysis::is_threshold_graph;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::seq::{check_label, is_graphic, DegreeSequence, Label, LabeledIntSequence};

#[allow(clippy::reversed_empty_ranges)]
const EMPTY_ROW: RangeInclusive<Label> = 1..=0;

/// An undirected edge with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Label; 2]", into = "[Label; 2]")]
pub struct Edge {
    i: Label,
    j: Label,
}

impl Edge {
    /// Canonicalizes the endpoint order; rejects loops and label 0.
    pub fn new(a: Label, b: Label) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidEdge(a, b));
        }
        Ok(Self {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> Label {
        self.i
    }

    pub fn j(&self) -> Label {
        self.j
    }

    pub fn endpoints(&self) -> (Label, Label) {
        (self.i, self.j)
    }

    pub fn contains(&self, v: Label) -> bool {
        self.i == v || self.j == v
    }

    /// The same edge under `v -> n + 1 - v`.
    pub fn mirrored(&self, n: usize) -> Edge {
        Edge {
            i: n + 1 - self.j,
            j: n + 1 - self.i,
        }
    }
}

impl TryFrom<[Label; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [Label; 2]) -> Result<Self> {
        Edge::new(pair[0], pair[1])
    }
}

impl From<Edge> for [Label; 2] {
    fn from(e: Edge) -> Self {
        [e.i, e.j]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Forced,
    Forbidden,
}

/// A forced or forbidden edge set in frontier form.
///
/// Internally both kinds keep a downward-closed boundary `down`, where
/// `down[p - 1] = Some(q)` means row `p` holds exactly the pairs `(p, p+1..=q)`.
/// Forced sets use their own labels; forbidden sets use mirrored labels
/// `v -> n + 1 - v`, under which an upward-closed set becomes downward closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseEdgeSet {
    n: usize,
    kind: SetKind,
    down: Vec<Option<Label>>,
}

/// Two-pointer walk over a downward-closed predicate on pairs `p < q`.
/// Issues at most `2n` probes.
fn frontier_walk(n: usize, mut member: impl FnMut(Label, Label) -> bool) -> Vec<Option<Label>> {
    let mut down = vec![None; n];
    // Corner rule: an empty set is detected with a single probe.
    if n < 2 || !member(1, 2) {
        return down;
    }
    let mut j = n;
    for i in 1..n {
        while j > i && !member(i, j) {
            j -= 1;
        }
        if j <= i {
            break;
        }
        down[i - 1] = Some(j);
    }
    down
}

fn validate_down(n: usize, down: &[Option<Label>]) -> Result<()> {
    let mut prev: Option<Label> = Some(n);
    for (idx, &row) in down.iter().enumerate() {
        let p = idx + 1;
        match (prev, row) {
            (_, Some(q)) if q <= p || q > n => {
                return Err(Error::Malformed(format!(
                    "row {p} boundary {q} out of range"
                )))
            }
            (None, Some(_)) => {
                return Err(Error::Malformed(format!("row {p} follows an empty row")))
            }
            (Some(a), Some(b)) if b > a => {
                return Err(Error::Malformed(format!("row {p} is not closed")))
            }
            _ => {}
        }
        prev = row;
    }
    Ok(())
}

impl StaircaseEdgeSet {
    fn from_down(n: usize, kind: SetKind, down: Vec<Option<Label>>) -> Self {
        debug_assert!(validate_down(n, &down).is_ok());
        Self { n, kind, down }
    }

    pub fn empty(n: usize, kind: SetKind) -> Self {
        Self::from_down(n, kind, vec![None; n])
    }

    /// Builds a set from an explicit edge list, checking the staircase shape.
    pub fn from_edges(n: usize, kind: SetKind, edges: &[Edge]) -> Result<Self> {
        let mut down = vec![None; n];
        let mut distinct = BTreeSet::new();
        for e in edges {
            if e.j() > n {
                return Err(Error::IndexOutOfRange { label: e.j(), n });
            }
            let e = match kind {
                SetKind::Forced => *e,
                SetKind::Forbidden => e.mirrored(n),
            };
            distinct.insert(e);
            let row: &mut Option<Label> = &mut down[e.i() - 1];
            *row = Some(row.map_or(e.j(), |q: Label| q.max(e.j())));
        }
        validate_down(n, &down)?;
        let set = Self { n, kind, down };
        if set.len() != distinct.len() {
            return Err(Error::Malformed(format!(
                "{} edges do not form a closed staircase",
                edges.len()
            )));
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Per-row boundary as exposed to callers: for a forced set, entry
    /// `i - 1` is the largest `j > i` with `(i, j)` in the set; for a
    /// forbidden set, the smallest such `j`.
    pub fn frontier(&self) -> Vec<Option<Label>> {
        (1..=self.n)
            .map(|i| {
                let r = self.row(i);
                if r.is_empty() {
                    None
                } else {
                    Some(match self.kind {
                        SetKind::Forced => *r.end(),
                        SetKind::Forbidden => *r.start(),
                    })
                }
            })
            .collect()
    }

    /// Number of leading rows whose boundary reaches column `q`.
    fn rows_reaching(&self, q: Label) -> usize {
        self.down.partition_point(|row| row.is_some_and(|v| v >= q))
    }

    /// Labels `j > i` with `(i, j)` in the set, as a contiguous range.
    pub fn row(&self, i: Label) -> RangeInclusive<Label> {
        let n = self.n;
        match self.kind {
            SetKind::Forced => match self.down.get(i.wrapping_sub(1)).copied().flatten() {
                Some(q) => i + 1..=q,
                None => EMPTY_ROW,
            },
            SetKind::Forbidden => {
                if i == 0 || i >= n {
                    return EMPTY_ROW;
                }
                // (i, j) is present iff mirrored row n+1-j reaches n+1-i.
                let p = self.rows_reaching(n + 1 - i).min(n - i);
                if p == 0 {
                    EMPTY_ROW
                } else {
                    n + 1 - p..=n
                }
            }
        }
    }

    pub fn contains(&self, e: &Edge) -> bool {
        if e.j() > self.n {
            return false;
        }
        let e = match self.kind {
            SetKind::Forced => *e,
            SetKind::Forbidden => e.mirrored(self.n),
        };
        self.down[e.i() - 1].is_some_and(|q| e.j() <= q)
    }

    pub fn contains_pair(&self, a: Label, b: Label) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.contains(&e))
    }

    pub fn len(&self) -> usize {
        self.down
            .iter()
            .enumerate()
            .map_while(|(idx, row)| row.map(|q| q - (idx + 1)))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.down.first().is_none_or(|r| r.is_none())
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.n).flat_map(move |i| self.row(i).map(move |j| Edge { i, j }))
    }

    /// Vertices incident to at least one edge of the set, ascending.
    pub fn vertices(&self) -> Vec<Label> {
        let mut seen = vec![false; self.n];
        for (idx, row) in self.down.iter().enumerate() {
            let Some(q) = *row else { break };
            for v in idx + 1..=q {
                seen[v - 1] = true;
            }
        }
        let labels = seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(idx, _)| idx + 1);
        match self.kind {
            SetKind::Forced => labels.collect(),
            SetKind::Forbidden => {
                let mut v: Vec<Label> = labels.map(|l| self.n + 1 - l).collect();
                v.reverse();
                v
            }
        }
    }

    pub fn is_superset_of(&self, other: &StaircaseEdgeSet) -> bool {
        self.n == other.n
            && self.kind == other.kind
            && self.down.iter().zip(&other.down).all(|(a, b)| b <= a)
    }

    /// The same rows read under `v -> n + 1 - v` with the kind flipped; maps
    /// the forced set of a sequence onto the forbidden set of its complement.
    pub fn mirrored(&self) -> StaircaseEdgeSet {
        let kind = match self.kind {
            SetKind::Forced => SetKind::Forbidden,
            SetKind::Forbidden => SetKind::Forced,
        };
        Self::from_down(self.n, kind, self.down.clone())
    }
}

impl fmt::Display for StaircaseEdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(none)");
        }
        for (idx, e) in self.edges().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn check_pair(n: usize, i: Label, j: Label) -> Result<()> {
    check_label(i, n)?;
    check_label(j, n)?;
    if i == j {
        return Err(Error::InvalidEdge(i, j));
    }
    Ok(())
}

fn shifted_is_graphic(values: &[i64], i: Label, j: Label, delta: i64) -> bool {
    let mut work = values.to_vec();
    work[i - 1] += delta;
    work[j - 1] += delta;
    is_graphic(&work)
}

pub fn is_forced(a: &DegreeSequence, i: Label, j: Label) -> Result<bool> {
    check_pair(a.len(), i, j)?;
    a.require_graphic()?;
    Ok(!shifted_is_graphic(&a.signed(), i, j, 1))
}

pub fn is_forbidden(a: &DegreeSequence, i: Label, j: Label) -> Result<bool> {
    check_pair(a.len(), i, j)?;
    a.require_graphic()?;
    Ok(!shifted_is_graphic(&a.signed(), i, j, -1))
}

/// Forced test on an unsorted labeled sequence; graphicality is invariant
/// under relabeling, so no sorting is needed.
pub fn is_forced_labeled(s: &LabeledIntSequence, i: Label, j: Label) -> Result<bool> {
    check_pair(s.len(), i, j)?;
    if !s.is_graphic() {
        return Err(Error::NotGraphic);
    }
    Ok(!shifted_is_graphic(s.values(), i, j, 1))
}

pub fn is_forbidden_labeled(s: &LabeledIntSequence, i: Label, j: Label) -> Result<bool> {
    check_pair(s.len(), i, j)?;
    if !s.is_graphic() {
        return Err(Error::NotGraphic);
    }
    Ok(!shifted_is_graphic(s.values(), i, j, -1))
}

fn forced_unchecked(a: &DegreeSequence) -> StaircaseEdgeSet {
    let values = a.signed();
    let down = frontier_walk(a.len(), |i, j| !shifted_is_graphic(&values, i, j, 1));
    StaircaseEdgeSet::from_down(a.len(), SetKind::Forced, down)
}

fn forbidden_direct_unchecked(a: &DegreeSequence) -> StaircaseEdgeSet {
    let n = a.len();
    let values = a.signed();
    // Mirrored pair (p, q) is the edge (n+1-q, n+1-p).
    let down = frontier_walk(n, |p, q| {
        !shifted_is_graphic(&values, n + 1 - q, n + 1 - p, -1)
    });
    StaircaseEdgeSet::from_down(n, SetKind::Forbidden, down)
}

/// The forced set, by a frontier walk issuing `O(n)` forced probes.
pub fn forced_set(a: &DegreeSequence) -> Result<StaircaseEdgeSet> {
    a.require_graphic()?;
    Ok(forced_unchecked(a))
}

/// The forbidden set, by a direct frontier walk over forbidden probes.
/// Debug builds cross-check against [`forbidden_set_via_complement`].
pub fn forbidden_set(a: &DegreeSequence) -> Result<StaircaseEdgeSet> {
    a.require_graphic()?;
    let direct = forbidden_direct_unchecked(a);
    debug_assert_eq!(direct, forced_unchecked(&a.complement()).mirrored());
    Ok(direct)
}

/// The forbidden set as the mirrored forced set of the complement sequence.
pub fn forbidden_set_via_complement(a: &DegreeSequence) -> Result<StaircaseEdgeSet> {
    a.require_graphic()?;
    Ok(forced_unchecked(&a.complement()).mirrored())
}

pub fn forced_vertices(a: &DegreeSequence) -> Result<Vec<Label>> {
    Ok(forced_set(a)?.vertices())
}

/// The graph on all `n` labels whose edges are the forced set.
pub fn forced_graph(a: &DegreeSequence) -> Result<LabeledGraph> {
    let forced = forced_set(a)?;
    Ok(LabeledGraph::from_edges(a.len(), forced.edges()).expect("forced edges are in range"))
}

/// Checks the forced graph on its vertex set for induced 2K2, P4 and C4.
pub fn forced_graph_is_threshold(a: &DegreeSequence) -> Result<bool> {
    Ok(is_threshold_graph(&forced_graph(a)?))
}

/// True iff every edge of a realization is forced, i.e. the realization is unique.
pub fn is_threshold_sequence(a: &DegreeSequence) -> Result<bool> {
    Ok(forced_set(a)?.len() as u64 == a.edge_count())
}

/// Sufficient condition for an empty forced set:
/// `n >= min((d1 + dn + 2)^2 / (4 dn), (d1 + dn)^2 / (2 dn))`, in integers.
///
/// A vertex of degree `n - 1` forces all its edges, so the condition also
/// requires `d1 < n - 1`; without it `<1,1>` satisfies the inequality.
pub fn bound_excludes_forced(a: &DegreeSequence) -> Result<bool> {
    a.require_graphic()?;
    let (max, min, n) = (
        a.max_degree() as u128,
        a.min_degree() as u128,
        a.len() as u128,
    );
    if min == 0 {
        return Err(Error::MinDegreeZero);
    }
    if max + 1 == n {
        return Ok(false);
    }
    let first = n * 4 * min >= (max + min + 2).pow(2);
    let second = n * 2 * min >= (max + min).pow(2);
    Ok(first || second)
}

/// Whether the forced and forbidden sets of `a` contain those of `b`.
/// Requires `a` to majorize `b`.
pub fn check_monotonicity(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    if !crate::seq::majorizes(a, b)?.left_dominates() {
        return Err(Error::NotComparable);
    }
    a.require_graphic()?;
    b.require_graphic()?;
    Ok(forced_unchecked(a).is_superset_of(&forced_unchecked(b))
        && forbidden_direct_unchecked(a).is_superset_of(&forbidden_direct_unchecked(b)))
}

/// Largest `c` with `(c - 1, c)` forced, so that `{1..c}` is a forced
/// clique; 1 when nothing is forced.
pub fn max_forced_clique_size(a: &DegreeSequence) -> Result<usize> {
    let forced = forced_set(a)?;
    Ok(clique_size_of(&forced))
}

pub(crate) fn clique_size_of(forced: &StaircaseEdgeSet) -> usize {
    let mut c = 1;
    while c < forced.n() && forced.contains_pair(c, c + 1) {
        c += 1;
    }
    c
}

/// Maps a labeled sequence to sorted form and returns a lookup from
/// original labels to sorted positions.
fn sorted_view(s: &LabeledIntSequence) -> Result<(StaircaseEdgeSet, Vec<Label>, Vec<Label>)> {
    if !s.is_graphic() {
        return Err(Error::NotGraphic);
    }
    let (sorted, perm) = s.to_degree_sequence()?;
    let mut position = vec![0; s.len()];
    for (idx, &label) in perm.iter().enumerate() {
        position[label - 1] = idx + 1;
    }
    Ok((forced_unchecked(&sorted), perm, position))
}

/// Forced set of a labeled sequence, in its own labels, sorted.
pub fn forced_edges_labeled(s: &LabeledIntSequence) -> Result<Vec<Edge>> {
    let (forced, perm, _) = sorted_view(s)?;
    let mut edges: Vec<Edge> = forced
        .edges()
        .map(|e| Edge::new(perm[e.i() - 1], perm[e.j() - 1]).expect("distinct labels"))
        .collect();
    edges.sort();
    Ok(edges)
}

/// The lexicographically smallest edge forced in both labeled sequences.
/// `None` does not mean the two sequences pack.
pub fn packing_obstruction(a: &LabeledIntSequence, b: &LabeledIntSequence) -> Result<Option<Edge>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (fa, perm_a, _) = sorted_view(a)?;
    let (fb, _, pos_b) = sorted_view(b)?;
    Ok(fa
        .edges()
        .map(|e| Edge::new(perm_a[e.i() - 1], perm_a[e.j() - 1]).expect("distinct labels"))
        .filter(|e| fb.contains_pair(pos_b[e.i() - 1], pos_b[e.j() - 1]))
        .min())
}

/// Whether a forced edge of `deg(g)` stays forced in the degree sequence
/// of the induced subgraph `g[s]`.
pub fn induced_forced_persists(g: &LabeledGraph, i: Label, j: Label, s: &[Label]) -> Result<bool> {
    if !is_forced_labeled(&g.degrees(), i, j)? {
        return Err(Error::PreconditionViolated(format!(
            "({i},{j}) is not forced in the degree sequence of g"
        )));
    }
    if !s.contains(&i) || !s.contains(&j) {
        return Err(Error::PreconditionViolated(format!(
            "vertex set must contain {i} and {j}"
        )));
    }
    let sub = crate::analysis::induced_subgraph(g, s)?;
    let local = |v: Label| sub.local_label(v).expect("endpoint in subset");
    is_forced_labeled(&sub.graph.degrees(), local(i), local(j))
}

/// Aggregated forced/forbidden structure of one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub sequence: DegreeSequence,
    pub forced: StaircaseEdgeSet,
    pub forbidden: StaircaseEdgeSet,
    pub forced_vertices: Vec<Label>,
    pub is_threshold_sequence: bool,
    pub max_forced_clique: usize,
    /// `None` when the minimum degree is zero and the bound does not apply.
    pub bound_excludes_forced: Option<bool>,
}

pub fn analyze(a: &DegreeSequence) -> Result<AnalysisReport> {
    a.require_graphic()?;
    let forced = forced_unchecked(a);
    let forbidden = forbidden_direct_unchecked(a);
    let bound = match bound_excludes_forced(a) {
        Ok(v) => Some(v),
        Err(Error::MinDegreeZero) => None,
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        sequence: a.clone(),
        forced_vertices: forced.vertices(),
        is_threshold_sequence: forced.len() as u64 == a.edge_count(),
        max_forced_clique: clique_size_of(&forced),
        bound_excludes_forced: bound,
        forced,
        forbidden,
    })
}
