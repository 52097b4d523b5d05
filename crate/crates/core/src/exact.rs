//! Exhaustive search for minimum temporal resolving sets.
//!
//! Subsets are enumerated by increasing size and, within one size, in
//! lexicographic order over the sorted candidate pool, so the returned witness
//! is the lexicographically first minimum set. Parallel runs partition each
//! size by the first element and reconcile to the same answer.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Mode, StaticGraph, TemporalGraph, Vertex};
use crate::shape::{classify_shape, ShapeClass};
use crate::verify::DistanceTable;

/// Largest static graph accepted by [`min_adjacency_resolving_bruteforce`].
pub const ADJACENCY_GUARD: usize = 10;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Smallest subset size to try.
    pub min_size: usize,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { min_size: 1, jobs: 1 }
    }
}

/// Lexicographically first minimum resolving set drawn from `pool`
/// (all vertices when `None`).
pub fn min_resolving_bruteforce(g: &TemporalGraph, pool: Option<&[Vertex]>) -> Result<Vec<Vertex>> {
    min_resolving_bruteforce_with(g, pool, SearchOptions::default())
}

pub fn min_resolving_bruteforce_with(
    g: &TemporalGraph,
    pool: Option<&[Vertex]>,
    opts: SearchOptions,
) -> Result<Vec<Vertex>> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let table = DistanceTable::new(g);
    let pool = normalize_pool(g, pool)?;
    search_table(&table, &pool, opts).ok_or(Error::PoolExhausted)
}

fn normalize_pool(g: &TemporalGraph, pool: Option<&[Vertex]>) -> Result<Vec<Vertex>> {
    let mut pool = match pool {
        None => (0..g.n()).collect::<Vec<_>>(),
        Some(p) => p.to_vec(),
    };
    if let Some(&bad) = pool.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    pool.sort_unstable();
    pool.dedup();
    Ok(pool)
}

/// Runs the size-ordered search against a precomputed table.
pub fn search_table(table: &DistanceTable, pool: &[Vertex], opts: SearchOptions) -> Option<Vec<Vertex>> {
    let start = opts.min_size.max(1);
    if opts.jobs <= 1 {
        return (start..=pool.len()).find_map(|k| first_of_size(table, pool, k));
    }
    let workers = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .ok()?;
    workers.install(|| (start..=pool.len()).find_map(|k| first_of_size_par(table, pool, k)))
}

fn first_of_size(table: &DistanceTable, pool: &[Vertex], k: usize) -> Option<Vec<Vertex>> {
    pool.iter()
        .copied()
        .combinations(k)
        .find(|set| table.resolves(set))
}

fn first_of_size_par(table: &DistanceTable, pool: &[Vertex], k: usize) -> Option<Vec<Vertex>> {
    if k == 0 || k > pool.len() {
        return None;
    }
    // partition i holds every k-subset whose smallest element is pool[i]
    (0..=pool.len() - k).into_par_iter().find_map_first(|i| {
        pool[i + 1..]
            .iter()
            .copied()
            .combinations(k - 1)
            .map(|rest| {
                let mut set = Vec::with_capacity(k);
                set.push(pool[i]);
                set.extend(rest);
                set
            })
            .find(|set| table.resolves(set))
    })
}

/// Every resolving set of minimum size, in lexicographic order.
pub fn all_minimum_resolving_sets(g: &TemporalGraph) -> Vec<Vec<Vertex>> {
    let table = DistanceTable::new(g);
    for k in 1..=g.n() {
        let found: Vec<Vec<Vertex>> = (0..g.n())
            .combinations(k)
            .filter(|set| table.resolves(set))
            .collect();
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

/// Minimum resolving set of a periodic temporal tree with a 1-labeling.
///
/// Singletons are tried over all vertices; larger sets are drawn from the
/// leaves only, since some minimum set of size at least two consists of
/// leaves.
pub fn min_resolving_periodic_tree(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    min_resolving_periodic_tree_with(g, 1)
}

pub fn min_resolving_periodic_tree_with(g: &TemporalGraph, jobs: usize) -> Result<Vec<Vertex>> {
    if !matches!(g.mode(), Mode::Periodic(_)) {
        return Err(Error::WrongMode("periodic"));
    }
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    require_tree_shape(g)?;
    let table = DistanceTable::new(g);
    if let Some(v) = (0..g.n()).find(|&v| table.resolves(&[v])) {
        return Ok(vec![v]);
    }
    let leaves = g.leaves();
    let opts = SearchOptions { min_size: 2, jobs };
    match search_table(&table, &leaves, opts) {
        Some(set) => Ok(set),
        // unreachable for trees, kept so a bad pool never yields a wrong answer
        None => {
            let all: Vec<Vertex> = (0..g.n()).collect();
            search_table(&table, &all, opts).ok_or(Error::PoolExhausted)
        }
    }
}

/// Minimum adjacency resolving set size of a static graph, using the
/// truncated distance `min(dist, 2)`.
///
/// Unreachable pairs also truncate to 2, so every vertex counts as reached;
/// this matches the temporal complete graph produced by the adjacency
/// reduction, where every vertex is reached by every landmark.
pub fn min_adjacency_resolving_bruteforce(g: &StaticGraph) -> Result<usize> {
    let n = g.n();
    if n > ADJACENCY_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{n} vertices exceeds the adjacency oracle limit of {ADJACENCY_GUARD}"
        )));
    }
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let truncated: Vec<Vec<u8>> = (0..n)
        .map(|s| {
            g.bfs(s)
                .into_iter()
                .map(|d| d.map_or(2, |d| d.min(2) as u8))
                .collect()
        })
        .collect();
    let separates = |set: &[Vertex]| {
        let mut keys: Vec<Vec<u8>> = (0..n)
            .map(|v| set.iter().map(|&s| truncated[s][v]).collect())
            .collect();
        keys.sort_unstable();
        keys.windows(2).all(|w| w[0] != w[1])
    };
    (1..=n)
        .find(|&k| (0..n).combinations(k).any(|set| separates(&set)))
        .ok_or(Error::SearchExhausted)
}

/// Convenience for callers that only need the optimum value.
pub fn resolving_number(g: &TemporalGraph) -> Result<usize> {
    min_resolving_bruteforce(g, None).map(|s| s.len())
}

fn require_tree_shape(g: &TemporalGraph) -> Result<ShapeClass> {
    let shape = classify_shape(g);
    if shape.is_tree() {
        Ok(shape)
    } else {
        Err(Error::ShapeMismatch {
            expected: "tree",
            found: shape.tag().into(),
        })
    }
}
