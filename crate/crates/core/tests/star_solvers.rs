use proptest::prelude::*;
use tempres::exact::min_resolving_bruteforce;
use tempres::star::{solve_star, solve_subdivided_star_12, solve_subdivided_star_12_traced};
use tempres::{check_resolving, TemporalGraph, Time};

fn star(labels: &[Time]) -> TemporalGraph {
    TemporalGraph::finite(
        labels.len() + 1,
        labels.iter().enumerate().map(|(i, &l)| (0, i + 1, vec![l])),
    )
    .unwrap()
}

/// Center 0; each branch is a list of labels from the center outward.
fn spider(branches: &[Vec<Time>]) -> TemporalGraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for branch in branches {
        let mut prev = 0;
        for &l in branch {
            edges.push((prev, next, vec![l]));
            prev = next;
            next += 1;
        }
    }
    TemporalGraph::finite(next, edges).unwrap()
}

fn spider_strategy() -> impl Strategy<Value = Vec<Vec<Time>>> {
    prop::collection::vec(prop::collection::vec(1u64..=2, 1..=4), 3..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn star_matches_oracle(labels in prop::collection::vec(1u64..=6, 3..=9)) {
        let g = star(&labels);
        let set = solve_star(&g).unwrap();
        prop_assert!(check_resolving(&g, &set).unwrap().is_resolving());
        let mut distinct = labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert!(set.len() >= labels.len() - distinct.len());
        prop_assert_eq!(set.len(), min_resolving_bruteforce(&g, None).unwrap().len());
    }

    #[test]
    fn subdivided_star_matches_oracle(branches in spider_strategy()) {
        let g = spider(&branches);
        let (set, state) = solve_subdivided_star_12_traced(&g).unwrap();
        prop_assert!(check_resolving(&g, &set).unwrap().is_resolving());
        prop_assert!(!state.r_prime.contains(&0));
        prop_assert!(state.b_c.iter().all(|b| state.b_c_initial.contains(b)));
        let best = min_resolving_bruteforce(&g, None).unwrap();
        prop_assert_eq!(set.len(), best.len(), "state {:?}", state);
    }
}

#[test]
fn no_branch_needs_the_center() {
    // leaf-to-center labels increase, so each path solution is the center's neighbor
    let g = spider(&[vec![2, 1], vec![2, 1], vec![2, 1]]);
    let (set, state) = solve_subdivided_star_12_traced(&g).unwrap();
    assert!(state.b_c_initial.is_empty());
    assert_eq!(set, state.r_prime);
    assert_eq!(set, vec![1, 3, 5]);
    assert!(check_resolving(&g, &set).unwrap().is_resolving());
}

#[test]
fn label_two_branch_reached_through_center() {
    // every path solution uses the center, yet one extra vertex suffices
    let g = spider(&[vec![1, 1], vec![1], vec![2]]);
    let (set, state) = solve_subdivided_star_12_traced(&g).unwrap();
    assert_eq!(state.b_c_initial.len(), 3);
    assert_eq!(state.round, Some(-1));
    assert_eq!(set.len(), 2);
    assert_eq!(min_resolving_bruteforce(&g, None).unwrap().len(), 2);
}

#[test]
fn single_edge_branches() {
    let g = star(&[1, 1, 2]);
    assert_eq!(solve_subdivided_star_12(&g).unwrap().len(), 2);
    assert_eq!(min_resolving_bruteforce(&g, None).unwrap().len(), 2);
}
