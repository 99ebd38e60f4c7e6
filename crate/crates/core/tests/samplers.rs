use std::collections::BTreeSet;

use degseq::oracle::{enumerate_graphic_sequences, enumerate_realizations};
use degseq::realize::realize_saturating;
use degseq::{forced_set, mcmc_sample, realize, sis_sample, DegreeSequence, Error, McmcChain};

fn seq(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

#[test]
fn sis_never_dead_ends_on_small_sequences() {
    for n in 1..=7 {
        for a in enumerate_graphic_sequences(n).unwrap() {
            for seed in 0..100 {
                let g = sis_sample(&a, seed).unwrap_or_else(|e| panic!("{a} seed {seed}: {e}"));
                assert_eq!(g.degree_list(), a.values(), "{a} seed {seed}");
            }
        }
    }
}

#[test]
fn sis_reaches_every_realization_of_small_sequences() {
    for a in enumerate_graphic_sequences(5).unwrap() {
        let all: BTreeSet<String> = enumerate_realizations(&a, None)
            .unwrap()
            .map(|g| g.to_edge_list())
            .collect();
        let seen: BTreeSet<String> = (0..400)
            .map(|s| sis_sample(&a, s).unwrap().to_edge_list())
            .collect();
        assert_eq!(seen, all, "{a}");
    }
}

#[test]
fn mcmc_visits_all_perfect_matchings() {
    let a = seq("1,1,1,1");
    for seed in 0..20 {
        let mut chain = McmcChain::new(&a, seed).unwrap();
        let mut seen = BTreeSet::new();
        seen.insert(chain.graph().to_edge_list());
        for _ in 0..10_000 {
            chain.step();
            seen.insert(chain.graph().to_edge_list());
            if seen.len() == 3 {
                break;
            }
        }
        assert_eq!(seen.len(), 3, "seed {seed}");
    }
}

#[test]
fn mcmc_states_keep_forced_edges_and_degrees() {
    for n in 2..=6 {
        for a in enumerate_graphic_sequences(n).unwrap() {
            let forced = forced_set(&a).unwrap();
            let mut chain = McmcChain::new(&a, n as u64).unwrap();
            for _ in 0..300 {
                chain.step();
                let g = chain.graph();
                assert!(forced.edges().all(|e| g.has_edge(e.i(), e.j())), "{a}");
            }
            assert_eq!(chain.graph().degree_list(), a.values());
            assert_eq!(chain.steps(), 300);
        }
    }
}

#[test]
fn mcmc_is_irreducible_on_small_sequences() {
    for a in enumerate_graphic_sequences(5).unwrap() {
        let all: BTreeSet<String> = enumerate_realizations(&a, None)
            .unwrap()
            .map(|g| g.to_edge_list())
            .collect();
        let mut chain = McmcChain::new(&a, 11).unwrap();
        let mut seen = BTreeSet::from([chain.graph().to_edge_list()]);
        for _ in 0..20_000 {
            chain.step();
            seen.insert(chain.graph().to_edge_list());
        }
        assert_eq!(seen, all, "{a}");
    }
}

#[test]
fn samplers_are_deterministic_per_seed() {
    let a = seq("4,4,3,3,3,2,2,1");
    assert_eq!(
        mcmc_sample(&a, 5000, 3).unwrap(),
        mcmc_sample(&a, 5000, 3).unwrap()
    );
    assert_eq!(sis_sample(&a, 3).unwrap(), sis_sample(&a, 3).unwrap());
}

#[test]
fn constructions_realize_every_small_sequence() {
    for n in 1..=7 {
        for a in enumerate_graphic_sequences(n).unwrap() {
            assert_eq!(realize(&a).unwrap().degree_list(), a.values(), "{a}");
            for label in 1..=n {
                let g = realize_saturating(&a, label).unwrap();
                assert_eq!(g.degree_list(), a.values(), "{a} at {label}");
                let d = a.degree(label);
                let expected: Vec<usize> = (1..=n).filter(|&v| v != label).take(d).collect();
                let got: Vec<usize> = g.neighbors(label).iter().copied().collect();
                assert_eq!(got, expected, "{a} at {label}");
            }
        }
    }
}

#[test]
fn non_graphic_inputs_are_rejected() {
    let odd = seq("1,1,1");
    assert_eq!(sis_sample(&odd, 0), Err(Error::NotGraphic));
    assert_eq!(mcmc_sample(&odd, 10, 0), Err(Error::NotGraphic));
    assert_eq!(realize(&seq("3,3,1,1")), Err(Error::NotGraphic));
}
