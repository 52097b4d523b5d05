#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempres::reductions::{ThreeDMInstance, Triple};
use tempres::{Dist, Mode, TemporalGraph, Time, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Earliest arrival from `source` by listing every strict journey along a
/// simple path (finite mode) or by exploring the time-expanded graph up to
/// `n * p` (periodic mode, where waiting at most `p` per edge suffices).
pub fn journey_distances(g: &TemporalGraph, source: Vertex) -> Vec<Dist> {
    match g.mode() {
        Mode::Finite => simple_path_journeys(g, source),
        Mode::Periodic(p) => time_expanded(g, source, g.n() as Time * p),
    }
}

fn simple_path_journeys(g: &TemporalGraph, source: Vertex) -> Vec<Dist> {
    let mut best = vec![Dist::Never; g.n()];
    best[source] = Dist::At(0);
    let mut on_path = vec![false; g.n()];
    on_path[source] = true;
    extend(g, source, 0, &mut on_path, &mut best);
    best
}

fn extend(g: &TemporalGraph, v: Vertex, time: Time, on_path: &mut [bool], best: &mut [Dist]) {
    for &(w, e) in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        for &t in g.edges()[e].labels.values() {
            if t <= time {
                continue;
            }
            best[w] = best[w].min(Dist::At(t));
            on_path[w] = true;
            extend(g, w, t, on_path, best);
            on_path[w] = false;
        }
    }
}

fn time_expanded(g: &TemporalGraph, source: Vertex, horizon: Time) -> Vec<Dist> {
    let p = g.period().unwrap();
    let present = |e: usize, t: Time| g.edges()[e].labels.values().contains(&((t - 1) % p + 1));
    let mut best = vec![Dist::Never; g.n()];
    best[source] = Dist::At(0);
    let mut seen = BTreeSet::new();
    let mut stack = vec![(source, 0)];
    while let Some((v, time)) = stack.pop() {
        if !seen.insert((v, time)) {
            continue;
        }
        for &(w, e) in g.neighbors(v) {
            for t in time + 1..=horizon {
                if present(e, t) {
                    best[w] = best[w].min(Dist::At(t));
                    stack.push((w, t));
                }
            }
        }
    }
    best
}

/// Path `0 - 1 - ... - (n-1)` with uniform residues.
pub fn random_periodic_path(n: usize, p: Time, rng: &mut ChaCha8Rng) -> TemporalGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v, vec![rng.gen_range(1..=p)])).collect();
    TemporalGraph::periodic(n, p, edges).unwrap()
}

pub fn random_periodic_complete(n: usize, p: Time, rng: &mut ChaCha8Rng) -> TemporalGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, vec![rng.gen_range(1..=p)]));
        }
    }
    TemporalGraph::periodic(n, p, edges).unwrap()
}

/// Star with center 0 whose edge residues are given leaf by leaf.
pub fn periodic_star(residues: &[Time], p: Time) -> TemporalGraph {
    let edges: Vec<_> = residues.iter().enumerate().map(|(i, &r)| (0, i + 1, vec![r])).collect();
    TemporalGraph::periodic(residues.len() + 1, p, edges).unwrap()
}

/// Every instance over ground `1..=n` whose X, Y and Z are a partition of
/// the ground set into three `p_size`-sets, with between 1 and `max_s`
/// triples, deduplicated. Targets are left at 0.
pub fn all_3dm(n: u32, p_size: u32, max_s: usize) -> Vec<ThreeDMInstance> {
    use itertools::Itertools;
    let ground: Vec<u32> = (1..=n).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for xs in ground.iter().copied().combinations(p_size as usize) {
        let rest: Vec<u32> = ground.iter().copied().filter(|v| !xs.contains(v)).collect();
        for ys in rest.iter().copied().combinations(p_size as usize) {
            let left: Vec<u32> = rest.iter().copied().filter(|v| !ys.contains(v)).collect();
            for zs in left.iter().copied().combinations(p_size as usize) {
                let cube: Vec<Triple> = itertools::iproduct!(&xs, &ys, &zs)
                    .map(|(&x, &y, &z)| (x, y, z))
                    .collect();
                for s in 1..=max_s.min(cube.len()) {
                    for triples in cube.iter().copied().combinations(s) {
                        if seen.insert(triples.clone()) {
                            out.push(ThreeDMInstance::new(n, p_size, triples, 0).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}
