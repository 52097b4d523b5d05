mod common;

use proptest::prelude::*;
use tempres::generators::{random_temporal_graph, LabelDomain};
use tempres::{Dist, TemporalGraph};

use common::journey_distances;

fn assert_matches_enumeration(g: &TemporalGraph) {
    for s in 0..g.n() {
        let fast = g.earliest_arrival(s);
        assert_eq!(fast, journey_distances(g, s), "source {s} in {g:?}");
        let reached: Vec<_> = (0..g.n()).filter(|&v| fast[v].is_finite()).collect();
        assert_eq!(g.reach_set(s).into_iter().collect::<Vec<_>>(), reached);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn finite_distances(n in 1usize..=7, prob in 0.2f64..0.9, k in 1usize..=3, seed in any::<u64>()) {
        let g = random_temporal_graph(n, prob, k, LabelDomain::Finite { max: 5 }, seed).unwrap();
        assert_matches_enumeration(&g);
    }

    #[test]
    fn periodic_distances(n in 1usize..=6, p in 1u64..=4, prob in 0.2f64..0.9, k in 1usize..=2, seed in any::<u64>()) {
        let g = random_temporal_graph(n, prob, k, LabelDomain::Periodic { period: p }, seed).unwrap();
        assert_matches_enumeration(&g);
    }
}

#[test]
fn strictness_blocks_equal_labels() {
    let g = TemporalGraph::finite(3, [(0, 1, vec![2]), (1, 2, vec![2])]).unwrap();
    assert_eq!(g.earliest_arrival(0), vec![Dist::At(0), Dist::At(2), Dist::Never]);
    let p = TemporalGraph::periodic(3, 3, [(0, 1, vec![2]), (1, 2, vec![2])]).unwrap();
    // the second edge comes back at 5
    assert_eq!(p.earliest_arrival(0), vec![Dist::At(0), Dist::At(2), Dist::At(5)]);
}

#[test]
fn exclusive_reach_is_reach_minus_others() {
    for seed in 0..50 {
        let g = random_temporal_graph(6, 0.5, 2, LabelDomain::Finite { max: 4 }, seed).unwrap();
        let set = [0, 2, 5];
        for &v in &set {
            let mut expected = g.reach_set(v);
            for &w in set.iter().filter(|&&w| w != v) {
                for x in g.reach_set(w) {
                    expected.remove(&x);
                }
            }
            assert_eq!(g.exclusive_reach(&set, v).unwrap(), expected);
        }
    }
}
