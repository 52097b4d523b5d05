use proptest::prelude::*;
use tempres::exact::{all_minimum_resolving_sets, min_resolving_bruteforce};
use tempres::path::{solve_path, solve_temporal_path, PathView};
use tempres::{check_resolving, Time};

fn labels(max_n: usize) -> impl Strategy<Value = Vec<Time>> {
    prop::collection::vec(1u64..=8, 0..max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_oracle_and_resolves(t in labels(14)) {
        let view = PathView::new(t).unwrap();
        let g = view.to_graph();
        let set = solve_path(&view);
        prop_assert!(check_resolving(&g, &set).unwrap().is_resolving());
        let best = min_resolving_bruteforce(&g, None).unwrap();
        prop_assert_eq!(set.len(), best.len());
    }

    #[test]
    fn output_is_strictly_increasing(t in labels(30)) {
        let set = solve_path(&PathView::new(t).unwrap());
        prop_assert!(set.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orientation_does_not_change_size(t in labels(14)) {
        let view = PathView::new(t).unwrap();
        prop_assert_eq!(solve_path(&view).len(), solve_path(&view.reversed()).len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    // every optimal set is dominated position-wise by the greedy rightmost choice
    #[test]
    fn greedy_dominates_every_optimum(t in labels(11)) {
        let view = PathView::new(t).unwrap();
        let greedy = solve_path(&view);
        for other in all_minimum_resolving_sets(&view.to_graph()) {
            prop_assert_eq!(other.len(), greedy.len());
            for (a, b) in other.iter().zip(&greedy) {
                prop_assert!(a <= b, "{:?} vs greedy {:?}", other, greedy);
            }
        }
    }

    // dropping vertices from the left end never increases the optimum
    #[test]
    fn suffix_subpaths_are_no_harder(t in labels(14)) {
        let full = solve_path(&PathView::new(t.clone()).unwrap()).len();
        for cut in 1..=t.len() {
            let sub = solve_path(&PathView::new(t[cut..].to_vec()).unwrap()).len();
            prop_assert!(sub <= full, "cut {} gives {} > {}", cut, sub, full);
        }
    }
}

#[test]
fn small_examples() {
    let solve = |t: &[Time]| solve_path(&PathView::new(t.to_vec()).unwrap());
    assert_eq!(solve(&[]), vec![0]);
    assert_eq!(solve(&[7]).len(), 1);
    assert_eq!(solve(&[2, 1]), vec![2]);
    assert_eq!(solve(&[1, 1]), vec![1, 2]);
    let inc = PathView::new(vec![1, 3, 4, 9]).unwrap();
    assert_eq!(solve_path(&inc).len(), 1);
    assert!(check_resolving(&inc.to_graph(), &[0]).unwrap().is_resolving());
}

#[test]
fn large_path_solves_quickly() {
    let t: Vec<Time> = (0..1_000_000u64).map(|i| 1 + (i * 2654435761 % 97)).collect();
    let view = PathView::new(t).unwrap();
    let set = solve_path(&view);
    assert!(!set.is_empty());
    let g = view.to_graph();
    assert_eq!(solve_temporal_path(&g, false).unwrap().len(), set.len());
}
