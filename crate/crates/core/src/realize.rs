//! Constructing and sampling realizations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forced::{forced_set, Edge, StaircaseEdgeSet};
use crate::graph::LabeledGraph;
use crate::seq::{is_graphic, DegreeSequence, Label};

/// Seeded generator used by every sampler.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Repeatedly saturates the vertex of largest residual degree against the
/// next largest residuals (ties go to the smaller label). Returns false if
/// the residual sequence cannot be completed.
fn saturate_largest(residual: &mut [i64], g: &mut LabeledGraph) -> bool {
    let n = residual.len();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    loop {
        // max_by_key keeps the last maximum, so scan in reverse.
        let Some(v) = (0..n).rev().max_by_key(|&u| residual[u]) else {
            return true;
        };
        let d = residual[v];
        if d == 0 {
            return true;
        }
        if d < 0 {
            return false;
        }
        residual[v] = 0;
        order.clear();
        order.extend((0..n).filter(|&u| u != v && residual[u] > 0));
        let d = d as usize;
        if order.len() < d {
            return false;
        }
        order.sort_by(|&x, &y| residual[y].cmp(&residual[x]).then(x.cmp(&y)));
        for &u in &order[..d] {
            residual[u] -= 1;
            g.add_edge(Edge::new(v + 1, u + 1).expect("distinct"));
        }
    }
}

/// Deterministic realization by iterated Kleitman–Wang reduction.
pub fn realize(a: &DegreeSequence) -> Result<LabeledGraph> {
    a.require_graphic()?;
    let mut g = LabeledGraph::new(a.len());
    let ok = saturate_largest(&mut a.signed(), &mut g);
    debug_assert!(ok);
    Ok(g)
}

/// A realization in which `label` is adjacent to the `d_label` other
/// vertices of highest degree (smallest labels first).
pub fn realize_saturating(a: &DegreeSequence, label: Label) -> Result<LabeledGraph> {
    a.require_graphic()?;
    let reduced = a.kleitman_wang_reduce(label)?;
    let mut g = LabeledGraph::new(a.len());
    (1..=a.len())
        .filter(|&u| u != label)
        .take(a.degree(label))
        .for_each(|u| {
            g.add_edge(Edge::new(label, u).expect("distinct"));
        });
    let mut residual = reduced.values().to_vec();
    let ok = saturate_largest(&mut residual, &mut g);
    debug_assert!(ok, "reduction of a graphic sequence stays graphic");
    Ok(g)
}

/// Replaces `remove` by `add` on the same four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoSwitch {
    remove: [Edge; 2],
    add: [Edge; 2],
}

impl TwoSwitch {
    pub fn new(remove: [Edge; 2], add: [Edge; 2]) -> Result<Self> {
        let mut verts: Vec<Label> = remove.iter().flat_map(|e| [e.i(), e.j()]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != 4 {
            return Err(Error::InvalidSwitch(
                "removed edges must be disjoint".into(),
            ));
        }
        let mut added: Vec<Label> = add.iter().flat_map(|e| [e.i(), e.j()]).collect();
        added.sort_unstable();
        if added != verts {
            return Err(Error::InvalidSwitch(
                "added edges must match the removed vertices".into(),
            ));
        }
        if add.iter().any(|e| remove.contains(e)) {
            return Err(Error::InvalidSwitch(
                "added edge equals a removed one".into(),
            ));
        }
        Ok(Self { remove, add })
    }

    /// `{(i,k), (j,l)} -> {(i,j), (k,l)}`.
    pub fn from_labels(i: Label, k: Label, j: Label, l: Label) -> Result<Self> {
        let remove = [Edge::new(i, k)?, Edge::new(j, l)?];
        let add = [Edge::new(i, j)?, Edge::new(k, l)?];
        Self::new(remove, add)
    }

    pub fn removed(&self) -> [Edge; 2] {
        self.remove
    }

    pub fn added(&self) -> [Edge; 2] {
        self.add
    }

    fn check(&self, g: &LabeledGraph) -> Result<()> {
        for e in self.remove.iter().chain(&self.add) {
            if e.j() > g.n() {
                return Err(Error::InvalidSwitch(format!("{e} out of range")));
            }
        }
        if let Some(e) = self.remove.iter().find(|e| !g.has_edge(e.i(), e.j())) {
            return Err(Error::InvalidSwitch(format!("{e} is not an edge")));
        }
        if let Some(e) = self.add.iter().find(|e| g.has_edge(e.i(), e.j())) {
            return Err(Error::InvalidSwitch(format!("{e} already present")));
        }
        Ok(())
    }

    pub fn apply_in_place(&self, g: &mut LabeledGraph) -> Result<()> {
        self.check(g)?;
        for e in self.remove {
            g.remove_edge(e);
        }
        for e in self.add {
            g.add_edge(e);
        }
        Ok(())
    }
}

pub fn apply_two_switch(g: &LabeledGraph, sw: &TwoSwitch) -> Result<LabeledGraph> {
    let mut out = g.clone();
    sw.apply_in_place(&mut out)?;
    Ok(out)
}

/// Lazy 2-switch chain over realizations that never touches forced edges.
///
/// Each step draws an ordered pair of distinct non-forced edges uniformly
/// and one of the two rewirings by a fair coin; an invalid proposal leaves
/// the state unchanged. No claims are made about mixing or uniformity.
pub struct McmcChain {
    graph: LabeledGraph,
    forced: StaircaseEdgeSet,
    pool: Vec<Edge>,
    rng: ChaCha8Rng,
    steps: u64,
    accepted: u64,
}

impl McmcChain {
    pub fn new(a: &DegreeSequence, seed: u64) -> Result<Self> {
        let graph = realize(a)?;
        let forced = forced_set(a)?;
        let pool = graph.edges().filter(|e| !forced.contains(e)).collect();
        Ok(Self {
            graph,
            forced,
            pool,
            rng: rng_from_seed(seed),
            steps: 0,
            accepted: 0,
        })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.graph
    }

    pub fn forced(&self) -> &StaircaseEdgeSet {
        &self.forced
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    /// Edges eligible for removal.
    pub fn swappable(&self) -> &[Edge] {
        &self.pool
    }

    /// One proposal round; returns whether the state changed.
    pub fn step(&mut self) -> bool {
        self.steps += 1;
        let m = self.pool.len();
        if m < 2 {
            return false;
        }
        let x = self.rng.random_range(0..m);
        let mut y = self.rng.random_range(0..m - 1);
        if y >= x {
            y += 1;
        }
        let (a, b) = self.pool[x].endpoints();
        let (c, d) = self.pool[y].endpoints();
        let (p, q) = if self.rng.random_bool(0.5) {
            ((a, c), (b, d))
        } else {
            ((a, d), (b, c))
        };
        let (Ok(e1), Ok(e2)) = (Edge::new(p.0, p.1), Edge::new(q.0, q.1)) else {
            return false;
        };
        let Ok(sw) = TwoSwitch::new([self.pool[x], self.pool[y]], [e1, e2]) else {
            return false;
        };
        if sw.apply_in_place(&mut self.graph).is_err() {
            return false;
        }
        self.pool[x] = e1;
        self.pool[y] = e2;
        self.accepted += 1;
        true
    }

    pub fn run(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }
}

pub fn mcmc_sample(a: &DegreeSequence, steps: u64, seed: u64) -> Result<LabeledGraph> {
    let mut chain = McmcChain::new(a, seed)?;
    chain.run(steps);
    Ok(chain.into_graph())
}

/// Sequential construction that only adds edges keeping the residual
/// sequence graphic. The vertex with the smallest positive residual degree
/// is completed first (ties go to the smaller label); each of its neighbors
/// is drawn uniformly among the admissible candidates.
pub fn sis_sample(a: &DegreeSequence, seed: u64) -> Result<LabeledGraph> {
    a.require_graphic()?;
    let n = a.len();
    let mut rng = rng_from_seed(seed);
    let mut residual = a.signed();
    let mut g = LabeledGraph::new(n);
    let mut candidates = Vec::with_capacity(n);
    while let Some(i) = (0..n)
        .filter(|&v| residual[v] > 0)
        .min_by_key(|&v| residual[v])
    {
        while residual[i] > 0 {
            candidates.clear();
            for j in 0..n {
                if j == i || residual[j] == 0 || g.has_edge(i + 1, j + 1) {
                    continue;
                }
                residual[i] -= 1;
                residual[j] -= 1;
                if is_graphic(&residual) {
                    candidates.push(j);
                }
                residual[i] += 1;
                residual[j] += 1;
            }
            if candidates.is_empty() {
                return Err(Error::SamplerStuck { vertex: i + 1 });
            }
            let j = candidates[rng.random_range(0..candidates.len())];
            residual[i] -= 1;
            residual[j] -= 1;
            g.add_edge(Edge::new(i + 1, j + 1).expect("distinct"));
        }
    }
    Ok(g)
}
