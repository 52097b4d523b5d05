//! Seeded random instances.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha)
//! using rand 0.8's uniform sampling, so a given seed yields the same
//! instance on every platform.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Mode, StaticGraph, TemporalGraph, Time, Vertex};
use crate::path::PathView;
use crate::reductions::{ThreeDMInstance, Triple};
use crate::star::SubdividedStarView;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Where edge labels are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelDomain {
    /// Finite labels in `1..=max`.
    Finite { max: Time },
    /// Residues in `1..=period`.
    Periodic { period: Time },
}

impl LabelDomain {
    fn mode(self) -> Mode {
        match self {
            LabelDomain::Finite { .. } => Mode::Finite,
            LabelDomain::Periodic { period } => Mode::Periodic(period),
        }
    }

    fn top(self) -> Time {
        match self {
            LabelDomain::Finite { max } => max,
            LabelDomain::Periodic { period } => period,
        }
    }

    fn draw(self, rng: &mut ChaCha8Rng) -> Time {
        rng.gen_range(1..=self.top())
    }
}

fn positive(name: &str, value: u64) -> Result<()> {
    if value == 0 {
        return Err(Error::Precondition(format!("{name} must be positive")));
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)` with one uniform label per edge.
pub fn random_temporal_path(n: usize, label_max: Time, seed: u64) -> Result<(TemporalGraph, PathView)> {
    positive("n", n as u64)?;
    positive("label_max", label_max)?;
    let mut rng = rng(seed);
    let labels: Vec<Time> = (1..n).map(|_| rng.gen_range(1..=label_max)).collect();
    let view = PathView::new(labels)?;
    Ok((view.to_graph(), view))
}

/// Star with center 0 and one uniform label per edge.
pub fn random_star(leaves: usize, label_max: Time, seed: u64) -> Result<TemporalGraph> {
    positive("label_max", label_max)?;
    let mut rng = rng(seed);
    TemporalGraph::finite(
        leaves + 1,
        (1..=leaves).map(|v| (0, v, vec![rng.gen_range(1..=label_max)])),
    )
}

/// Subdivided star with center 0 and `degree` branches of uniform length in
/// `1..=max_branch_len`, numbered branch by branch outward from the center.
pub fn random_subdivided_star(
    degree: usize,
    max_branch_len: usize,
    domain: LabelDomain,
    seed: u64,
) -> Result<(TemporalGraph, SubdividedStarView)> {
    if degree < 3 {
        return Err(Error::Precondition("a subdivided star needs at least 3 branches".into()));
    }
    positive("max_branch_len", max_branch_len as u64)?;
    positive("label bound", domain.top())?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..degree {
        let len = rng.gen_range(1..=max_branch_len);
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next, vec![domain.draw(&mut rng)]));
            prev = next;
            next += 1;
        }
    }
    let g = TemporalGraph::new(next, domain.mode(), edges)?;
    let view = SubdividedStarView::from_graph(&g)?;
    Ok((g, view))
}

/// Random recursive tree (vertex `i` attaches to a uniform earlier vertex)
/// with uniform residues.
pub fn random_periodic_tree(n: usize, p: Time, seed: u64) -> Result<TemporalGraph> {
    positive("n", n as u64)?;
    positive("p", p)?;
    let mut rng = rng(seed);
    let edges: Vec<_> = (1..n)
        .map(|i| (rng.gen_range(0..i), i, vec![rng.gen_range(1..=p)]))
        .collect();
    TemporalGraph::periodic(n, p, edges)
}

/// Cycle `0 - 1 - ... - (n-1) - 0` with uniform residues.
pub fn random_periodic_cycle(n: usize, p: Time, seed: u64) -> Result<TemporalGraph> {
    if n < 3 {
        return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
    }
    positive("p", p)?;
    let mut rng = rng(seed);
    TemporalGraph::periodic(n, p, (0..n).map(|i| (i, (i + 1) % n, vec![rng.gen_range(1..=p)])))
}

/// Every pair becomes an edge with probability `edge_prob`; each edge gets
/// between 1 and `max_labels` distinct labels from `domain`.
pub fn random_temporal_graph(
    n: usize,
    edge_prob: f64,
    max_labels: usize,
    domain: LabelDomain,
    seed: u64,
) -> Result<TemporalGraph> {
    positive("max_labels", max_labels as u64)?;
    positive("label bound", domain.top())?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                let k = rng.gen_range(1..=max_labels.min(domain.top() as usize));
                let labels = index::sample(&mut rng, domain.top() as usize, k)
                    .into_iter()
                    .map(|i| i as Time + 1)
                    .collect();
                edges.push((u, v, labels));
            }
        }
    }
    TemporalGraph::new(n, domain.mode(), edges)
}

/// Connected static graph: a random recursive tree plus each remaining pair
/// with probability `extra_prob`.
pub fn random_connected_graph(n: usize, extra_prob: f64, seed: u64) -> Result<StaticGraph> {
    positive("n", n as u64)?;
    let mut rng = rng(seed);
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_prob.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::new(n, edges)
}

/// `s` distinct triples over three disjoint random `p_size`-subsets of
/// `1..=n`, with a target drawn uniformly from `1..s`.
pub fn random_3dm(p_size: u32, s: usize, n: u32, seed: u64) -> Result<ThreeDMInstance> {
    positive("p_size", p_size as u64)?;
    if s < 2 {
        return Err(Error::Precondition("need at least two triples".into()));
    }
    if 3 * p_size as u64 > n as u64 {
        return Err(Error::Precondition(format!(
            "three disjoint sets of size {p_size} do not fit in 1..={n}"
        )));
    }
    let p = p_size as usize;
    if (s as u64) > (p as u64).pow(3) {
        return Err(Error::Precondition(format!("only {} distinct triples exist", p.pow(3))));
    }
    let mut rng = rng(seed);
    let mut ground: Vec<u32> = (1..=n).collect();
    ground.shuffle(&mut rng);
    let (xs, rest) = ground.split_at(p);
    let (ys, rest) = rest.split_at(p);
    let zs = &rest[..p];
    let triples: Vec<Triple> = index::sample(&mut rng, p * p * p, s)
        .into_iter()
        .map(|code| (xs[code / (p * p)], ys[code / p % p], zs[code % p]))
        .collect();
    let target = rng.gen_range(1..s);
    ThreeDMInstance::new(n, p_size, triples, target)
}
