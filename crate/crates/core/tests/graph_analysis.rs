use degseq::analysis::{is_threshold_graph, Diameter};
use degseq::forced::is_threshold_sequence;
use degseq::oracle::{
    are_isomorphic, enumerate_graphic_sequences, enumerate_realizations, min_edge_cut_brute_force,
};
use degseq::{diameter, edge_connectivity, DegreeSequence, Edge, LabeledGraph};
use proptest::prelude::*;

fn all_pairs(n: usize) -> Vec<Edge> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| Edge::new(i, j).unwrap()))
        .collect()
}

fn graph_from_mask(n: usize, mask: u64) -> LabeledGraph {
    let pairs = all_pairs(n);
    LabeledGraph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e),
    )
    .unwrap()
}

/// All-pairs distances by Floyd-Warshall.
fn floyd_diameter(g: &LabeledGraph) -> Diameter {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in g.edges() {
        d[e.i() - 1][e.j() - 1] = 1;
        d[e.j() - 1][e.i() - 1] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let far = d.iter().flatten().copied().max().unwrap_or(0);
    if far >= inf {
        Diameter::Infinite
    } else {
        Diameter::Finite(far)
    }
}

fn sorted_degrees(g: &LabeledGraph) -> DegreeSequence {
    g.degrees().to_degree_sequence().unwrap().0
}

#[test]
fn every_graph_on_five_vertices() {
    for mask in 0u64..1 << 10 {
        let g = graph_from_mask(5, mask);
        assert_eq!(diameter(&g), floyd_diameter(&g), "{g}");
        let cut = edge_connectivity(&g);
        assert_eq!(cut.lambda, min_edge_cut_brute_force(&g), "{g}");
        assert_eq!(
            is_threshold_graph(&g),
            is_threshold_sequence(&sorted_degrees(&g)).unwrap(),
            "{g}"
        );
    }
}

#[test]
fn threshold_recognition_on_every_graph_with_six_vertices() {
    for mask in 0u64..1 << 15 {
        let g = graph_from_mask(6, mask);
        assert_eq!(
            is_threshold_graph(&g),
            is_threshold_sequence(&sorted_degrees(&g)).unwrap()
        );
    }
}

#[test]
fn max_flow_cut_matches_brute_force_on_all_realizations() {
    for n in 2..=6 {
        for a in enumerate_graphic_sequences(n).unwrap() {
            for g in enumerate_realizations(&a, None).unwrap() {
                let cut = edge_connectivity(&g);
                assert_eq!(cut.lambda, min_edge_cut_brute_force(&g), "{g}");
                let mut h = g.clone();
                for e in &cut.witness_cut {
                    assert!(h.remove_edge(*e));
                }
                assert_eq!(
                    floyd_diameter(&h),
                    Diameter::Infinite,
                    "witness does not disconnect {g}"
                );
            }
        }
    }
}

#[test]
fn example_sequence_has_two_isomorphism_classes() {
    let a: DegreeSequence = "4,4,3,3,3,1".parse().unwrap();
    let graphs: Vec<LabeledGraph> = enumerate_realizations(&a, None).unwrap().collect();
    assert_eq!(graphs.len(), 9);
    let classes = degseq::oracle::isomorphism_classes(&graphs);
    assert_eq!(classes.len(), 2);
    assert!(!are_isomorphic(
        &graphs[classes[0][0]],
        &graphs[classes[1][0]]
    ));
}

fn random_graph() -> impl Strategy<Value = LabeledGraph> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            (Just(n), 0u64..(1u64 << m))
        })
        .prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #[test]
    fn cut_and_diameter_on_random_graphs(g in random_graph()) {
        prop_assert_eq!(diameter(&g), floyd_diameter(&g));
        let cut = edge_connectivity(&g);
        prop_assert_eq!(cut.lambda, min_edge_cut_brute_force(&g));
        prop_assert!(cut.lambda <= g.min_degree() || g.n() < 2);
        prop_assert_eq!(cut.witness_cut.len(), cut.lambda);
    }

    #[test]
    fn isomorphism_is_invariant_under_relabeling(g in random_graph(), rot in 0usize..7) {
        let n = g.n();
        let shift = |v: usize| (v - 1 + rot) % n + 1;
        let h = LabeledGraph::from_edges(n, g.edges().map(|e| Edge::new(shift(e.i()), shift(e.j())).unwrap())).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(is_threshold_graph(&g), is_threshold_graph(&h));
    }
}
