//! Structural measurements on realizations.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forced::{is_forbidden_labeled, is_forced_labeled, Edge};
use crate::graph::LabeledGraph;
use crate::seq::{check_label, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

fn bfs_eccentricity(
    g: &LabeledGraph,
    source: Label,
    dist: &mut [usize],
    queue: &mut VecDeque<Label>,
) -> Option<usize> {
    dist.fill(usize::MAX);
    dist[source - 1] = 0;
    queue.clear();
    queue.push_back(source);
    let mut reached = 1;
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u - 1];
        far = far.max(du);
        for &v in g.neighbors(u) {
            if dist[v - 1] == usize::MAX {
                dist[v - 1] = du + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    (reached == g.n()).then_some(far)
}

/// Largest shortest-path distance, by BFS from every vertex.
pub fn diameter(g: &LabeledGraph) -> Diameter {
    let mut dist = vec![0; g.n()];
    let mut queue = VecDeque::new();
    let mut best = 0;
    for v in 1..=g.n() {
        match bfs_eccentricity(g, v, &mut dist, &mut queue) {
            Some(e) => best = best.max(e),
            None => return Diameter::Infinite,
        }
    }
    Diameter::Finite(best)
}

/// Minimum edge cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub lambda: usize,
    /// Edges whose removal separates `source_side` from the rest.
    pub witness_cut: Vec<Edge>,
    pub source_side: Vec<Label>,
}

/// Unit-capacity residual network of an undirected graph. Each edge becomes
/// a pair of arcs that act as each other's reverse.
struct UnitFlow {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl UnitFlow {
    fn new(g: &LabeledGraph) -> Self {
        let mut head = Vec::new();
        let mut adj = vec![Vec::new(); g.n()];
        for e in g.edges() {
            let (u, v) = (e.i() - 1, e.j() - 1);
            adj[u].push(head.len());
            head.push(v);
            adj[v].push(head.len());
            head.push(u);
        }
        let cap = vec![1; head.len()];
        Self { head, cap, adj }
    }

    fn reset(&mut self) {
        self.cap.fill(1);
    }

    /// Augments along BFS paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.adj.len();
        let mut parent_arc = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut flow = 0;
        while flow < limit {
            parent_arc.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && v != s && parent_arc[v] == usize::MAX {
                        parent_arc[v] = a;
                        if v == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !found {
                break;
            }
            let mut v = t;
            while v != s {
                let a = parent_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Edge connectivity via unit-capacity max flow from vertex 1 to every
/// other vertex. Graphs with fewer than two vertices report 0.
pub fn edge_connectivity(g: &LabeledGraph) -> CutResult {
    let n = g.n();
    if n < 2 {
        return CutResult {
            lambda: 0,
            witness_cut: Vec::new(),
            source_side: (1..=n).collect(),
        };
    }
    let mut net = UnitFlow::new(g);
    // The star around a minimum-degree vertex is a cut of size min_degree.
    let lightest = (1..=n).min_by_key(|&v| g.degree(v)).expect("n >= 2");
    let mut best = g.degree(lightest);
    let mut side: Vec<bool> = (1..=n).map(|v| v != lightest).collect();
    if lightest == 1 {
        side.iter_mut().for_each(|s| *s = !*s);
    }
    for t in 1..n {
        net.reset();
        let flow = net.max_flow(0, t, best);
        if flow < best {
            best = flow;
            side = net.reachable(0);
        }
    }
    let witness_cut = g
        .edges()
        .filter(|e| side[e.i() - 1] != side[e.j() - 1])
        .collect();
    CutResult {
        lambda: best,
        witness_cut,
        source_side: (1..=n).filter(|&v| side[v - 1]).collect(),
    }
}

/// Rejects graphs containing an induced 2K2, P4 or C4.
///
/// Each of the three contains two disjoint edges; the pair's four cross
/// pairs identify the shape: none is 2K2, one is P4, a perfect matching is C4.
pub fn is_threshold_graph(g: &LabeledGraph) -> bool {
    let edges: Vec<Edge> = g.edges().collect();
    for (idx, e1) in edges.iter().enumerate() {
        let (p, q) = e1.endpoints();
        for e2 in &edges[idx + 1..] {
            let (r, s) = e2.endpoints();
            if r == p || r == q || s == p || s == q {
                continue;
            }
            let (pr, ps, qr, qs) = (
                g.has_edge(p, r),
                g.has_edge(p, s),
                g.has_edge(q, r),
                g.has_edge(q, s),
            );
            let cross = [pr, ps, qr, qs].iter().filter(|&&x| x).count();
            let c4 = cross == 2 && ((pr && qs) || (ps && qr));
            if cross <= 1 || c4 {
                return false;
            }
        }
    }
    true
}

fn require_edge_labels(g: &LabeledGraph, i: Label, j: Label) -> Result<()> {
    check_label(i, g.n())?;
    check_label(j, g.n())?;
    if i == j {
        return Err(Error::InvalidEdge(i, j));
    }
    Ok(())
}

/// For a forced edge `(i, j)`, whether `V - (N(i) ∪ N(j))` is independent.
pub fn check_forced_independence(g: &LabeledGraph, i: Label, j: Label) -> Result<bool> {
    require_edge_labels(g, i, j)?;
    if !is_forced_labeled(&g.degrees(), i, j)? {
        return Err(Error::PreconditionViolated(format!(
            "({i},{j}) is not forced"
        )));
    }
    let outside: Vec<Label> = (1..=g.n())
        .filter(|&v| !g.has_edge(i, v) && !g.has_edge(j, v))
        .collect();
    Ok(outside
        .iter()
        .enumerate()
        .all(|(k, &u)| outside[k + 1..].iter().all(|&v| !g.has_edge(u, v))))
}

/// For a forbidden edge `(i, j)` in a graph with `1 <= degree <= n - 2`,
/// whether `N(i) ∪ N(j)` is a clique.
pub fn check_forbidden_clique(g: &LabeledGraph, i: Label, j: Label) -> Result<bool> {
    require_edge_labels(g, i, j)?;
    if !is_forbidden_labeled(&g.degrees(), i, j)? {
        return Err(Error::PreconditionViolated(format!(
            "({i},{j}) is not forbidden"
        )));
    }
    let degrees = g.degree_list();
    let max = degrees.iter().copied().max().unwrap_or(0);
    if max + 1 >= g.n() || g.min_degree() == 0 {
        return Err(Error::PreconditionViolated(
            "requires maximum degree < n-1 and minimum degree > 0".into(),
        ));
    }
    let union: Vec<Label> = g.neighbors(i).union(g.neighbors(j)).copied().collect();
    Ok(union
        .iter()
        .enumerate()
        .all(|(k, &u)| union[k + 1..].iter().all(|&v| g.has_edge(u, v))))
}

/// `g[S]` relabeled `1..=|S|` in increasing order of the original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: LabeledGraph,
    /// `labels[k]` is the original label of local vertex `k + 1`.
    pub labels: Vec<Label>,
}

impl InducedSubgraph {
    pub fn local_label(&self, original: Label) -> Option<Label> {
        self.labels.binary_search(&original).ok().map(|k| k + 1)
    }

    pub fn original_label(&self, local: Label) -> Label {
        self.labels[local - 1]
    }
}

pub fn induced_subgraph(g: &LabeledGraph, s: &[Label]) -> Result<InducedSubgraph> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut labels = s.to_vec();
    labels.sort_unstable();
    for w in labels.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateIndex { label: w[0] });
        }
    }
    for &v in &labels {
        check_label(v, g.n())?;
    }
    let mut graph = LabeledGraph::new(labels.len());
    for (a, &u) in labels.iter().enumerate() {
        for (b, &v) in labels.iter().enumerate().skip(a + 1) {
            if g.has_edge(u, v) {
                graph.add_edge(Edge::new(a + 1, b + 1).expect("distinct"));
            }
        }
    }
    Ok(InducedSubgraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: Label, b: Label) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn graph(n: usize, pairs: &[(Label, Label)]) -> LabeledGraph {
        LabeledGraph::from_edges(n, pairs.iter().map(|&(a, b)| e(a, b))).unwrap()
    }

    fn complete(n: usize) -> LabeledGraph {
        LabeledGraph::from_edges(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| e(i, j))))
            .unwrap()
    }

    /// The two drawings of realizations of 4,4,3,3,3,1.
    fn example_graphs() -> [LabeledGraph; 2] {
        [
            graph(
                6,
                &[
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (3, 5),
                ],
            ),
            graph(
                6,
                &[
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (5, 6),
                ],
            ),
        ]
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&complete(4)), Diameter::Finite(1));
        assert_eq!(
            diameter(&graph(4, &[(1, 2), (2, 3), (3, 4)])),
            Diameter::Finite(3)
        );
        assert_eq!(diameter(&graph(4, &[(1, 2), (3, 4)])), Diameter::Infinite);
        assert_eq!(diameter(&LabeledGraph::new(1)), Diameter::Finite(0));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(edge_connectivity(&complete(4)).lambda, 3);
        let path = graph(3, &[(1, 2), (2, 3)]);
        let cut = edge_connectivity(&path);
        assert_eq!(cut.lambda, 1);
        assert_eq!(cut.witness_cut.len(), 1);
        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let cut = edge_connectivity(&c4);
        assert_eq!(cut.lambda, 2);
        assert_eq!(cut.witness_cut.len(), 2);
        let split = edge_connectivity(&graph(4, &[(1, 2), (3, 4)]));
        assert_eq!(split.lambda, 0);
        assert!(split.witness_cut.is_empty());
        assert_eq!(split.source_side, vec![1, 2]);
    }

    #[test]
    fn witness_cut_disconnects() {
        // Two triangles joined by a bridge 3-4.
        let g = graph(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]);
        let cut = edge_connectivity(&g);
        assert_eq!(cut.lambda, 1);
        assert_eq!(cut.witness_cut, vec![e(3, 4)]);
        let mut h = g.clone();
        for edge in &cut.witness_cut {
            h.remove_edge(*edge);
        }
        assert_eq!(diameter(&h), Diameter::Infinite);
    }

    #[test]
    fn threshold_shapes() {
        assert!(!is_threshold_graph(&graph(4, &[(1, 2), (3, 4)])));
        assert!(!is_threshold_graph(&graph(4, &[(1, 2), (2, 3), (3, 4)])));
        assert!(!is_threshold_graph(&graph(
            4,
            &[(1, 2), (2, 3), (3, 4), (1, 4)]
        )));
        assert!(is_threshold_graph(&graph(
            4,
            &[(1, 2), (1, 3), (1, 4), (2, 3)]
        )));
        assert!(is_threshold_graph(&complete(5)));
        assert!(is_threshold_graph(&graph(4, &[(1, 2)])));
    }

    #[test]
    fn forced_independence_examples() {
        for g in example_graphs() {
            assert!(check_forced_independence(&g, 1, 2).unwrap());
        }
        assert!(check_forced_independence(&complete(3), 1, 2).unwrap());
        assert!(matches!(
            check_forced_independence(&graph(4, &[(1, 2), (3, 4)]), 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn forbidden_clique_examples() {
        let g = crate::realize::realize(&"3,3,3,1,1,1".parse().unwrap()).unwrap();
        assert!(check_forbidden_clique(&g, 5, 6).unwrap());
        // 2,1,1 has max degree n-1, so the hypotheses fail.
        let star = graph(3, &[(1, 2), (1, 3)]);
        assert!(matches!(
            check_forbidden_clique(&star, 2, 3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn induced_examples() {
        let sub = induced_subgraph(&complete(4), &[1, 2, 3]).unwrap();
        assert_eq!(sub.graph, complete(3));
        let path = graph(4, &[(1, 2), (2, 3), (3, 4)]);
        let sub = induced_subgraph(&path, &[4, 1, 3]).unwrap();
        assert_eq!(sub.labels, vec![1, 3, 4]);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![e(2, 3)]);
        assert_eq!(sub.original_label(2), 3);
        assert_eq!(sub.local_label(4), Some(3));
        assert_eq!(sub.graph.degrees().values(), &[0, 1, 1]);
        let full = induced_subgraph(&path, &[1, 2, 3, 4]).unwrap();
        assert_eq!(full.graph, path);
        assert_eq!(induced_subgraph(&path, &[]), Err(Error::EmptySubset));
        assert_eq!(
            induced_subgraph(&path, &[5]),
            Err(Error::IndexOutOfRange { label: 5, n: 4 })
        );
    }
}
