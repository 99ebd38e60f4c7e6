//! Text and JSON renderings of analysis results and sampled graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forced::{AnalysisReport, Edge, SetKind, StaircaseEdgeSet};
use crate::graph::LabeledGraph;
use crate::oracle::VerificationReport;
use crate::seq::{DegreeSequence, Label};

/// Structured form of an [`AnalysisReport`]. Edges are `[i, j]` pairs in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisDocument {
    pub sequence: DegreeSequence,
    pub forced_edges: Vec<Edge>,
    pub forbidden_edges: Vec<Edge>,
    pub forced_vertices: Vec<Label>,
    pub is_threshold: bool,
    pub max_forced_clique: usize,
    pub bound_excludes_forced: Option<bool>,
}

impl From<&AnalysisReport> for AnalysisDocument {
    fn from(r: &AnalysisReport) -> Self {
        AnalysisDocument {
            sequence: r.sequence.clone(),
            forced_edges: r.forced.edges().collect(),
            forbidden_edges: r.forbidden.edges().collect(),
            forced_vertices: r.forced_vertices.clone(),
            is_threshold: r.is_threshold_sequence,
            max_forced_clique: r.max_forced_clique,
            bound_excludes_forced: r.bound_excludes_forced,
        }
    }
}

impl AnalysisDocument {
    /// Rebuilds the report; edge lists must have staircase shape.
    pub fn to_report(&self) -> Result<AnalysisReport> {
        let n = self.sequence.len();
        let forced = StaircaseEdgeSet::from_edges(n, SetKind::Forced, &self.forced_edges)?;
        let forbidden = StaircaseEdgeSet::from_edges(n, SetKind::Forbidden, &self.forbidden_edges)?;
        if forced.vertices() != self.forced_vertices {
            return Err(Error::Malformed(
                "forced_vertices disagree with forced_edges".into(),
            ));
        }
        Ok(AnalysisReport {
            sequence: self.sequence.clone(),
            forced,
            forbidden,
            forced_vertices: self.forced_vertices.clone(),
            is_threshold_sequence: self.is_threshold,
            max_forced_clique: self.max_forced_clique,
            bound_excludes_forced: self.bound_excludes_forced,
        })
    }
}

pub fn analysis_to_json(r: &AnalysisReport) -> String {
    serde_json::to_string_pretty(&AnalysisDocument::from(r)).expect("plain data serializes")
}

pub fn analysis_from_json(text: &str) -> Result<AnalysisReport> {
    let doc: AnalysisDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.to_report()
}

pub fn verification_to_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(r).expect("plain data serializes")
}

fn join_labels(labels: &[Label]) -> String {
    if labels.is_empty() {
        return "(none)".into();
    }
    labels
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Line-oriented `key: value` rendering.
pub struct AnalysisText<'a>(pub &'a AnalysisReport);

impl fmt::Display for AnalysisText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        writeln!(f, "sequence: {}", r.sequence)?;
        writeln!(f, "forced: {}", r.forced)?;
        writeln!(f, "forbidden: {}", r.forbidden)?;
        writeln!(f, "forced vertices: {}", join_labels(&r.forced_vertices))?;
        writeln!(f, "threshold: {}", r.is_threshold_sequence)?;
        writeln!(f, "max forced clique: {}", r.max_forced_clique)?;
        match r.bound_excludes_forced {
            Some(b) => write!(f, "bound excludes forced: {b}"),
            None => write!(f, "bound excludes forced: n/a (minimum degree 0)"),
        }
    }
}

/// A realization together with how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleDocument {
    pub sequence: DegreeSequence,
    pub method: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub steps: Option<u64>,
    pub edges: Vec<Edge>,
}

impl SampleDocument {
    pub fn new(
        sequence: &DegreeSequence,
        method: &str,
        seed: u64,
        steps: Option<u64>,
        g: &LabeledGraph,
    ) -> Self {
        SampleDocument {
            sequence: sequence.clone(),
            method: method.to_string(),
            seed,
            steps,
            edges: g.edges().collect(),
        }
    }

    pub fn to_graph(&self) -> Result<LabeledGraph> {
        let g = LabeledGraph::from_edges(self.sequence.len(), self.edges.iter().copied())?;
        if g.degree_list() != self.sequence.values() {
            return Err(Error::Malformed("edges do not realize the sequence".into()));
        }
        Ok(g)
    }
}

/// Realizations listed by the `enumerate` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub sequence: DegreeSequence,
    pub count: usize,
    pub truncated: bool,
    pub realizations: Vec<Vec<Edge>>,
}
