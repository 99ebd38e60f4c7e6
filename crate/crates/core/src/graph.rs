//! Simple undirected graphs on labels `1..=n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forced::Edge;
use crate::seq::{parse_integers, Label, LabeledIntSequence};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    adjacency: Vec<BTreeSet<Label>>,
}

impl LabeledGraph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from edges; repeated edges are an error.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::new(n);
        for e in edges {
            if e.j() > n {
                return Err(Error::IndexOutOfRange { label: e.j(), n });
            }
            if !g.add_edge(e) {
                return Err(Error::PreconditionViolated(format!("edge {e} repeated")));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: Label, b: Label) -> bool {
        a != b && a >= 1 && a <= self.n() && self.adjacency[a - 1].contains(&b)
    }

    /// Returns false if the edge was already present.
    pub fn add_edge(&mut self, e: Edge) -> bool {
        let (i, j) = e.endpoints();
        let fresh = self.adjacency[i - 1].insert(j);
        self.adjacency[j - 1].insert(i);
        fresh
    }

    /// Returns false if the edge was absent.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let (i, j) = e.endpoints();
        let present = self.adjacency[i - 1].remove(&j);
        self.adjacency[j - 1].remove(&i);
        present
    }

    pub fn neighbors(&self, v: Label) -> &BTreeSet<Label> {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: Label) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn degrees(&self) -> LabeledIntSequence {
        LabeledIntSequence::from_values(self.adjacency.iter().map(|s| s.len() as i64).collect())
    }

    pub fn degree_list(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(idx, nbrs)| {
            let i = idx + 1;
            nbrs.range(i + 1..)
                .map(move |&j| Edge::new(i, j).expect("i < j"))
        })
    }

    /// One `i j` pair per line, sorted.
    pub fn to_edge_list(&self) -> String {
        self.edges()
            .map(|e| format!("{} {}\n", e.i(), e.j()))
            .collect()
    }

    /// Parses the edge-list format; blank lines are ignored.
    pub fn parse_edge_list(n: usize, text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match parse_integers(line)?.as_slice() {
                &[a, b] if a > 0 && b > 0 => edges.push(Edge::new(a as usize, b as usize)?),
                _ => return Err(Error::Malformed(format!("bad edge line {line:?}"))),
            }
        }
        Self::from_edges(n, edges)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            n: self.n(),
            adjacency: self
                .adjacency
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let n = doc.n;
        if doc.adjacency.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: doc.adjacency.len(),
            });
        }
        let mut g = Self::new(n);
        for (idx, nbrs) in doc.adjacency.iter().enumerate() {
            for &j in nbrs {
                if j == 0 || j > n {
                    return Err(Error::IndexOutOfRange { label: j, n });
                }
                g.add_edge(Edge::new(idx + 1, j)?);
            }
        }
        if g.to_document() != *doc {
            return Err(Error::Malformed(
                "adjacency is not symmetric and sorted".into(),
            ));
        }
        Ok(g)
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Adjacency-list document: `adjacency[v - 1]` lists the neighbors of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub adjacency: Vec<Vec<Label>>,
}
