//! Solvers and extremal constructions for periodic 1-labelings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{min_resolving_bruteforce, min_resolving_periodic_tree, search_table, SearchOptions};
use crate::graph::{Mode, TemporalGraph, Time, Vertex};
use crate::shape::{classify_shape, complete_binary_tree, ShapeClass};
use crate::verify::DistanceTable;

/// Largest complete graph `build_complete_tight` will produce.
pub const COMPLETE_GUARD: usize = 40;

fn require_periodic(g: &TemporalGraph) -> Result<Time> {
    match g.mode() {
        Mode::Periodic(p) => Ok(p),
        Mode::Finite => Err(Error::WrongMode("periodic")),
    }
}

fn mismatch(expected: &'static str, found: &ShapeClass) -> Error {
    Error::ShapeMismatch {
        expected,
        found: found.tag().into(),
    }
}

/// An end vertex of a periodic path; it reaches every other vertex, strictly
/// later the further away it is.
pub fn solve_path_periodic(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    require_periodic(g)?;
    match classify_shape(g) {
        ShapeClass::Path { order } => Ok(vec![order[0]]),
        other => Err(mismatch("path", &other)),
    }
}

/// A singleton if one resolves, otherwise the endpoints of an edge whose
/// residue is at least that of both neighboring edges.
pub fn solve_cycle_periodic(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    require_periodic(g)?;
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    let order = match classify_shape(g) {
        ShapeClass::Cycle { order } => order,
        other => return Err(mismatch("cycle", &other)),
    };
    let table = DistanceTable::new(g);
    if let Some(v) = (0..g.n()).find(|&v| table.resolves(&[v])) {
        return Ok(vec![v]);
    }
    let n = order.len();
    let residue = |i: usize| {
        g.labels_between(order[i % n], order[(i + 1) % n])
            .expect("consecutive cycle vertices")
            .values()[0]
    };
    // edge i joins order[i] and order[i + 1]; the maximum residue is always locally maximal
    let best = (0..n)
        .find(|&i| residue(i) >= residue(i + n - 1) && residue(i) >= residue(i + 1))
        .expect("a maximum-residue edge exists");
    let mut pair = vec![order[best], order[(best + 1) % n]];
    pair.sort_unstable();
    Ok(pair)
}

/// Complete graph on `b + p^b` vertices whose first `b` vertices resolve it.
///
/// Every outside vertex gets its own tuple of `b` residues in `1..=p`; the
/// edge from the i-th designated vertex carries the i-th coordinate. All
/// remaining edges carry residue `p`.
pub fn build_complete_tight(b: usize, p: Time) -> Result<(TemporalGraph, Vec<Vertex>)> {
    if b == 0 || p == 0 {
        return Err(Error::Precondition("b and p must be positive".into()));
    }
    let outside = (p as usize)
        .checked_pow(b as u32)
        .filter(|&o| b + o <= COMPLETE_GUARD)
        .ok_or_else(|| {
            Error::GuardExceeded(format!("b + p^b exceeds {COMPLETE_GUARD} vertices"))
        })?;
    let n = b + outside;
    let digit = |index: usize, i: usize| (index / (p as usize).pow(i as u32)) % p as usize + 1;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let residue = if u < b && v >= b { digit(v - b, u) as Time } else { p };
            edges.push((u, v, vec![residue]));
        }
    }
    Ok((TemporalGraph::periodic(n, p, edges)?, (0..b).collect()))
}

/// Complete graph whose edges all carry residue 1; every pair is a twin pair.
pub fn build_complete_worst(n: usize, p: Time) -> Result<TemporalGraph> {
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, vec![1])));
    TemporalGraph::periodic(n, p, edges)
}

/// Minimum resolving set of a periodic subdivided star with a 1-labeling.
///
/// Tries every singleton, then leaf subsets of increasing size starting at
/// `leaves - p`, the pigeonhole bound.
pub fn solve_substar_periodic(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    let p = require_periodic(g)?;
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    let spider = match classify_shape(g) {
        ShapeClass::Path { .. } => return solve_path_periodic(g),
        ShapeClass::Star(s) | ShapeClass::SubdividedStar(s) => s,
        other => return Err(mismatch("subdivided-star", &other)),
    };
    let table = DistanceTable::new(g);
    if let Some(v) = (0..g.n()).find(|&v| table.resolves(&[v])) {
        return Ok(vec![v]);
    }
    let mut leaves = spider.leaves();
    leaves.sort_unstable();
    let floor = leaves.len().saturating_sub(p as usize).max(2);
    let opts = SearchOptions {
        min_size: floor,
        jobs: 1,
    };
    search_table(&table, &leaves, opts).ok_or(Error::PoolExhausted)
}

/// Heap-indexed complete binary tree with `levels` levels: vertex `i` has
/// children `2i + 1` and `2i + 2`.
fn binary_tree_edges(levels: u32, residues: (Time, Time)) -> Vec<(Vertex, Vertex, Vec<Time>)> {
    let n = (1usize << levels) - 1;
    (1..n)
        .map(|v| {
            let residue = if v % 2 == 1 { residues.0 } else { residues.1 };
            ((v - 1) / 2, v, vec![residue])
        })
        .collect()
}

/// Complete binary tree on `2^levels - 1` vertices, period 2, where the left
/// child edge has residue 1 and the right child edge residue 2. The returned
/// set holds, for every vertex on level `levels - 3`, the leaf below it
/// reached by two left steps.
pub fn build_binary_tree_alternating(levels: u32) -> Result<(TemporalGraph, Vec<Vertex>)> {
    if !(3..=20).contains(&levels) {
        return Err(Error::Precondition(format!(
            "alternating binary tree needs 3 to 20 levels, got {levels}"
        )));
    }
    let n = (1usize << levels) - 1;
    let g = TemporalGraph::periodic(n, 2, binary_tree_edges(levels, (1, 2)))?;
    let first = (1usize << (levels - 3)) - 1;
    let set = (first..2 * first + 1).map(|v| 4 * v + 3).collect();
    Ok((g, set))
}

/// Complete binary tree on `2^levels - 1` vertices, period 2, all residues 1.
pub fn build_binary_tree_uniform(levels: u32) -> Result<TemporalGraph> {
    if !(1..=20).contains(&levels) {
        return Err(Error::Precondition(format!(
            "binary tree needs 1 to 20 levels, got {levels}"
        )));
    }
    TemporalGraph::periodic((1 << levels) - 1, 2, binary_tree_edges(levels, (1, 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum BoundSource {
    Path,
    Cycle,
    /// `n = b + p^b`.
    Complete { b: usize },
    SubdividedStar { leaves: usize },
    BinaryTree { levels: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicInstanceReport {
    pub computed_size: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub bound_source: BoundSource,
}

impl PeriodicInstanceReport {
    pub fn within_bounds(&self) -> bool {
        (self.lower_bound..=self.upper_bound).contains(&self.computed_size)
    }
}

/// Solves a periodic 1-labeled instance from one of the classes with known
/// bounds and reports the optimum next to those bounds.
pub fn periodic_report(g: &TemporalGraph) -> Result<PeriodicInstanceReport> {
    let p = require_periodic(g)?;
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    let shape = classify_shape(g);
    let report = |computed_size, lower_bound, upper_bound, bound_source| PeriodicInstanceReport {
        computed_size,
        lower_bound,
        upper_bound,
        bound_source,
    };
    match &shape {
        ShapeClass::Path { .. } => Ok(report(solve_path_periodic(g)?.len(), 1, 1, BoundSource::Path)),
        ShapeClass::Cycle { .. } => Ok(report(solve_cycle_periodic(g)?.len(), 1, 2, BoundSource::Cycle)),
        ShapeClass::Star(s) | ShapeClass::SubdividedStar(s) => {
            let leaves = s.branches.len();
            let lower = leaves.saturating_sub(p as usize).max(1);
            let size = solve_substar_periodic(g)?.len();
            Ok(report(size, lower, leaves - 1, BoundSource::SubdividedStar { leaves }))
        }
        ShapeClass::Complete => {
            let n = g.n();
            let b = (1..n)
                .find(|&b| (p as usize).checked_pow(b as u32).map(|o| b + o) == Some(n))
                .ok_or_else(|| {
                    Error::Precondition(format!("{n} is not of the form b + {p}^b"))
                })?;
            let size = min_resolving_bruteforce(g, None)?.len();
            Ok(report(size, b, n - 1, BoundSource::Complete { b }))
        }
        ShapeClass::Tree { .. } => {
            let tree = complete_binary_tree(&g.underlying())
                .filter(|_| p == 2)
                .ok_or_else(|| mismatch("complete binary tree with period 2", &shape))?;
            let size = min_resolving_periodic_tree(g)?.len();
            let levels = tree.levels;
            Ok(report(
                size,
                1 << (levels - 3),
                1 << (levels - 2),
                BoundSource::BinaryTree { levels },
            ))
        }
        ShapeClass::General => Err(mismatch("path, cycle, star, complete or binary tree", &shape)),
    }
}
