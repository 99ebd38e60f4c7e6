//! Brute-force ground truth for small sequences.
//!
//! Everything here enumerates realizations explicitly and is meant for
//! `n <= 10`. The sweeps in [`verify`] compare the analytic routines of the
//! rest of the crate against these enumerations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::forced::Edge;
use crate::graph::LabeledGraph;
use crate::seq::{is_graphic, DegreeSequence, Label};

pub mod verify;

pub use verify::{verify_all, Counterexample, TheoremTally, VerificationReport};

/// Largest `n` accepted by realization enumeration.
pub const MAX_ENUMERATION_N: usize = 10;

/// Largest `n` accepted by [`enumerate_graphic_sequences`].
pub const MAX_SEQUENCE_N: usize = 8;

struct Frame {
    vertex: usize,
    need: usize,
    candidates: Vec<usize>,
    combo: Vec<usize>,
    fresh: bool,
    applied: bool,
}

impl Frame {
    fn new(vertex: usize, residual: &[i64]) -> Self {
        let need = residual[vertex] as usize;
        let candidates = (vertex + 1..residual.len())
            .filter(|&u| residual[u] > 0)
            .collect();
        Frame {
            vertex,
            need,
            candidates,
            combo: Vec::with_capacity(need),
            fresh: true,
            applied: false,
        }
    }

    /// Steps to the next `need`-subset of candidates in lexicographic order.
    fn advance(&mut self) -> bool {
        let (k, m) = (self.need, self.candidates.len());
        if self.fresh {
            self.fresh = false;
            if k > m {
                return false;
            }
            self.combo.extend(0..k);
            return true;
        }
        let Some(pos) = (0..k).rev().find(|&p| self.combo[p] < m - k + p) else {
            return false;
        };
        self.combo[pos] += 1;
        for p in pos + 1..k {
            self.combo[p] = self.combo[p - 1] + 1;
        }
        true
    }

    fn chosen(&self) -> impl Iterator<Item = usize> + '_ {
        self.combo.iter().map(|&c| self.candidates[c])
    }
}

/// Backtracking enumeration of every labeled realization.
///
/// Vertex 1 picks its neighbor set first (as a combination of later
/// vertices), then vertex 2, and so on. A branch is cut as soon as the
/// residual degrees of the undecided vertices stop being graphic, so every
/// branch that survives completes and each realization appears exactly once.
pub struct RealizationIterator {
    sequence: DegreeSequence,
    residual: Vec<i64>,
    frames: Vec<Frame>,
    remaining: Option<usize>,
    exhausted: bool,
}

impl RealizationIterator {
    pub fn sequence(&self) -> &DegreeSequence {
        &self.sequence
    }

    fn undo(&mut self) {
        let Some(top) = self.frames.last_mut() else {
            return;
        };
        if !top.applied {
            return;
        }
        top.applied = false;
        for u in top.combo.iter().map(|&c| top.candidates[c]) {
            self.residual[u] += 1;
        }
        self.residual[top.vertex] = top.need as i64;
    }

    fn apply(&mut self) -> bool {
        let top = self.frames.last_mut().expect("frame");
        top.applied = true;
        self.residual[top.vertex] = 0;
        for u in top.combo.iter().map(|&c| top.candidates[c]) {
            self.residual[u] -= 1;
        }
        is_graphic(&self.residual[top.vertex + 1..])
    }

    fn current_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.residual.len());
        for f in &self.frames {
            for u in f.chosen() {
                g.add_edge(Edge::new(f.vertex + 1, u + 1).expect("distinct"));
            }
        }
        g
    }
}

impl Iterator for RealizationIterator {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        if self.exhausted || self.remaining == Some(0) {
            return None;
        }
        let n = self.residual.len();
        loop {
            self.undo();
            let Some(top) = self.frames.last_mut() else {
                self.exhausted = true;
                return None;
            };
            if !top.advance() {
                self.frames.pop();
                continue;
            }
            let vertex = top.vertex;
            if !self.apply() {
                continue;
            }
            if vertex + 1 == n {
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(self.current_graph());
            }
            let next = Frame::new(vertex + 1, &self.residual);
            self.frames.push(next);
        }
    }
}

pub fn enumerate_realizations(
    a: &DegreeSequence,
    limit: Option<usize>,
) -> Result<RealizationIterator> {
    let n = a.len();
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let residual = a.values().iter().map(|&d| d as i64).collect::<Vec<_>>();
    let graphic = a.is_graphic();
    let frames = if graphic {
        vec![Frame::new(0, &residual)]
    } else {
        Vec::new()
    };
    Ok(RealizationIterator {
        sequence: a.clone(),
        residual,
        frames,
        remaining: limit,
        exhausted: !graphic,
    })
}

/// Index of pair `(i, j)`, `i < j`, in a 45-bit mask over `n <= 10` labels.
fn pair_bit(i: Label, j: Label) -> u64 {
    1u64 << ((i - 1) * MAX_ENUMERATION_N + (j - 1))
}

fn edge_mask(g: &LabeledGraph) -> u64 {
    g.edges().fold(0, |m, e| m | pair_bit(e.i(), e.j()))
}

/// Intersection and union of edge sets over all realizations.
fn intersection_and_union(a: &DegreeSequence) -> Result<(u64, u64)> {
    a.require_graphic()?;
    let mut all = !0u64;
    let mut any = 0u64;
    for g in enumerate_realizations(a, None)? {
        let m = edge_mask(&g);
        all &= m;
        any |= m;
    }
    Ok((all, any))
}

fn all_pairs(n: usize) -> impl Iterator<Item = (Label, Label)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// Edges present in every realization.
pub fn forced_set_oracle(a: &DegreeSequence) -> Result<BTreeSet<Edge>> {
    let (all, _) = intersection_and_union(a)?;
    Ok(all_pairs(a.len())
        .filter(|&(i, j)| all & pair_bit(i, j) != 0)
        .map(|(i, j)| Edge::new(i, j).expect("i < j"))
        .collect())
}

/// Edges present in no realization.
pub fn forbidden_set_oracle(a: &DegreeSequence) -> Result<BTreeSet<Edge>> {
    let (_, any) = intersection_and_union(a)?;
    Ok(all_pairs(a.len())
        .filter(|&(i, j)| any & pair_bit(i, j) == 0)
        .map(|(i, j)| Edge::new(i, j).expect("i < j"))
        .collect())
}

/// All graphic sequences of length `n`, lexicographically descending.
pub fn enumerate_graphic_sequences(n: usize) -> Result<std::vec::IntoIter<DegreeSequence>> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n > MAX_SEQUENCE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_SEQUENCE_N,
        });
    }
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == n {
            let s = DegreeSequence::new(prefix.clone()).expect("non-increasing by construction");
            if s.is_graphic() {
                out.push(s);
            }
            return;
        }
        let top = prefix.last().copied().unwrap_or(n - 1);
        for d in (0..=top).rev() {
            prefix.push(d);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    Ok(out.into_iter())
}

/// Smallest number of edges whose removal disconnects `g`, by trying edge
/// subsets of increasing size. Exponential; for `n <= 6` or so.
pub fn min_edge_cut_brute_force(g: &LabeledGraph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let edges: Vec<Edge> = g.edges().collect();
    let m = edges.len();
    assert!(m < 64, "brute-force cut limited to 63 edges");
    let connected_without = |removed: u64| {
        let mut adj = vec![0u64; n];
        for (k, e) in edges.iter().enumerate() {
            if removed >> k & 1 == 0 {
                adj[e.i() - 1] |= 1 << (e.j() - 1);
                adj[e.j() - 1] |= 1 << (e.i() - 1);
            }
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == n
    };
    for k in 0..=m {
        if k == 0 {
            if !connected_without(0) {
                return 0;
            }
            continue;
        }
        // Gosper's hack over k-subsets of m bits.
        let mut subset: u64 = (1 << k) - 1;
        while subset < 1 << m {
            if !connected_without(subset) {
                return k;
            }
            let c = subset & subset.wrapping_neg();
            let r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    m
}

/// Stable color refinement of two graphs at once, so colors are comparable
/// between them.
fn refine_colors(g: &LabeledGraph, h: &LabeledGraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|x| x.degree_list()).collect();
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = Vec::new();
        let keyed: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(x, col)| {
                (1..=x.n())
                    .map(|v| {
                        let mut nb: Vec<usize> =
                            x.neighbors(v).iter().map(|&u| col[u - 1]).collect();
                        nb.sort_unstable();
                        (col[v - 1], nb)
                    })
                    .collect()
            })
            .collect();
        for k in keyed.iter().flatten() {
            signatures.push(k.clone());
        }
        signatures.sort();
        signatures.dedup();
        let next: Vec<Vec<usize>> = keyed
            .iter()
            .map(|ks| {
                ks.iter()
                    .map(|k| signatures.binary_search(k).expect("present"))
                    .collect()
            })
            .collect();
        let classes = |c: &Vec<Vec<usize>>| c.iter().flatten().collect::<BTreeSet<_>>().len();
        let stable = classes(&next) == classes(&colors);
        colors = next;
        if stable {
            let h_col = colors.pop().expect("two");
            let g_col = colors.pop().expect("two");
            return (g_col, h_col);
        }
    }
}

/// Exact isomorphism test: color refinement, then backtracking over
/// color-preserving bijections.
pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (cg, ch) = refine_colors(g, h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    fn extend(
        g: &LabeledGraph,
        h: &LabeledGraph,
        cg: &[usize],
        ch: &[usize],
        map: &mut Vec<Label>,
        used: &mut Vec<bool>,
    ) -> bool {
        let v = map.len() + 1;
        if v > g.n() {
            return true;
        }
        for w in 1..=h.n() {
            if used[w - 1] || cg[v - 1] != ch[w - 1] {
                continue;
            }
            let consistent = (1..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u - 1], w));
            if !consistent {
                continue;
            }
            map.push(w);
            used[w - 1] = true;
            if extend(g, h, cg, ch, map, used) {
                return true;
            }
            used[w - 1] = false;
            map.pop();
        }
        false
    }
    extend(g, h, &cg, &ch, &mut Vec::new(), &mut vec![false; h.n()])
}

/// Groups graphs into isomorphism classes; returns member indices per class
/// in order of first appearance.
pub fn isomorphism_classes(graphs: &[LabeledGraph]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, g) in graphs.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| are_isomorphic(&graphs[c[0]], g))
        {
            Some(c) => c.push(idx),
            None => classes.push(vec![idx]),
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn e(a: Label, b: Label) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn lists(a: &str) -> Vec<String> {
        enumerate_realizations(&seq(a), None)
            .unwrap()
            .map(|g| g.to_edge_list())
            .collect()
    }

    #[test]
    fn realization_counts() {
        assert_eq!(lists("2,2,2"), vec!["1 2\n1 3\n2 3\n"]);
        assert_eq!(lists("1,1,1,1").len(), 3);
        let two = lists("2,2,1,1");
        assert_eq!(two, vec!["1 2\n1 3\n2 4\n", "1 2\n1 4\n2 3\n"]);
        assert_eq!(lists("4,4,3,3,3,1").len(), 9);
        assert_eq!(lists("3,3,3,1,1,1").len(), 6);
        assert!(lists("3,3,1,1").is_empty());
        assert_eq!(lists("0").len(), 1);
        assert_eq!(lists("0,0,0").len(), 1);
    }

    #[test]
    fn limit_and_size_guard() {
        let a = seq("1,1,1,1");
        assert_eq!(enumerate_realizations(&a, Some(2)).unwrap().count(), 2);
        assert_eq!(enumerate_realizations(&a, Some(0)).unwrap().count(), 0);
        let big = DegreeSequence::new(vec![1; 12]).unwrap();
        assert!(matches!(
            enumerate_realizations(&big, None),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn oracle_sets() {
        let f = forced_set_oracle(&seq("4,4,3,3,3,1")).unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![e(1, 2)]);
        let a = seq("2,1,1");
        assert_eq!(
            forced_set_oracle(&a)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![e(1, 2), e(1, 3)]
        );
        assert_eq!(
            forbidden_set_oracle(&a)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![e(2, 3)]
        );
        assert!(forced_set_oracle(&seq("1,1,1,1")).unwrap().is_empty());
        assert!(forbidden_set_oracle(&seq("1,1,1,1")).unwrap().is_empty());
        assert_eq!(forced_set_oracle(&seq("3,3,1,1")), Err(Error::NotGraphic));
    }

    #[test]
    fn graphic_sequence_listing() {
        let list = |n| {
            enumerate_graphic_sequences(n)
                .unwrap()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(list(1), vec!["0"]);
        assert_eq!(list(2), vec!["1,1", "0,0"]);
        assert_eq!(list(3), vec!["2,2,2", "2,1,1", "1,1,0", "0,0,0"]);
        // Counts from exhaustive enumeration of all graphs on n vertices.
        let counts: Vec<usize> = (1..=7).map(|n| list(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 31, 102, 342]);
        assert!(matches!(
            enumerate_graphic_sequences(9),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(
            enumerate_graphic_sequences(0).err(),
            Some(Error::EmptySequence)
        );
    }

    #[test]
    fn total_realizations_match_exhaustive_count() {
        // 936 and 16758: labeled graphs on 6 / 7 vertices whose degrees are
        // non-increasing in label order, counted over all 2^15 / 2^21 graphs.
        for (n, expected) in [(6, 936usize), (7, 16758)] {
            let total: usize = enumerate_graphic_sequences(n)
                .unwrap()
                .map(|s| enumerate_realizations(&s, None).unwrap().count())
                .sum();
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn realizations_are_valid_and_distinct() {
        for s in enumerate_graphic_sequences(6).unwrap() {
            let all: Vec<LabeledGraph> = enumerate_realizations(&s, None).unwrap().collect();
            let distinct: BTreeSet<String> = all.iter().map(|g| g.to_edge_list()).collect();
            assert_eq!(distinct.len(), all.len(), "{s}");
            for g in &all {
                assert_eq!(g.degree_list(), s.values());
            }
        }
    }

    #[test]
    fn brute_force_cut_examples() {
        let path = LabeledGraph::from_edges(3, [e(1, 2), e(2, 3)]).unwrap();
        assert_eq!(min_edge_cut_brute_force(&path), 1);
        let k4 = LabeledGraph::from_edges(4, all_pairs(4).map(|(i, j)| e(i, j))).unwrap();
        assert_eq!(min_edge_cut_brute_force(&k4), 3);
        assert_eq!(min_edge_cut_brute_force(&LabeledGraph::new(3)), 0);
    }

    #[test]
    fn isomorphism_examples() {
        let p = LabeledGraph::from_edges(4, [e(1, 2), e(2, 3), e(3, 4)]).unwrap();
        let q = LabeledGraph::from_edges(4, [e(3, 1), e(1, 4), e(4, 2)]).unwrap();
        let star = LabeledGraph::from_edges(4, [e(1, 2), e(1, 3), e(1, 4)]).unwrap();
        assert!(are_isomorphic(&p, &q));
        assert!(!are_isomorphic(&p, &star));
        // C6 versus two triangles: same degrees, refinement alone cannot split.
        let c6 =
            LabeledGraph::from_edges(6, [e(1, 2), e(2, 3), e(3, 4), e(4, 5), e(5, 6), e(1, 6)])
                .unwrap();
        let tt =
            LabeledGraph::from_edges(6, [e(1, 2), e(2, 3), e(1, 3), e(4, 5), e(5, 6), e(4, 6)])
                .unwrap();
        assert!(!are_isomorphic(&c6, &tt));
        assert_eq!(
            isomorphism_classes(&[p, star.clone(), q, star]),
            vec![vec![0, 2], vec![1, 3]]
        );
    }
}
