//! Picks a solver for an instance and runs it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{min_resolving_bruteforce_with, min_resolving_periodic_tree_with, SearchOptions};
use crate::graph::{Mode, TemporalGraph, Vertex};
use crate::path::solve_temporal_path;
use crate::periodic::{solve_cycle_periodic, solve_path_periodic, solve_substar_periodic};
use crate::shape::{classify_shape, ShapeClass};
use crate::star::{solve_star, solve_subdivided_star_12};

/// Exhaustive search is allowed up to this many vertices...
pub const GUARD_VERTICES: usize = 18;
/// ...or this many candidates.
pub const GUARD_POOL: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Auto,
    Bruteforce,
    /// Linear-time solver for finite paths; a single end vertex for periodic ones.
    Path,
    Star,
    Substar12,
    SubstarPeriodic,
    CyclePeriodic,
    PeriodicTree,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Auto,
        Algorithm::Bruteforce,
        Algorithm::Path,
        Algorithm::Star,
        Algorithm::Substar12,
        Algorithm::SubstarPeriodic,
        Algorithm::CyclePeriodic,
        Algorithm::PeriodicTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Bruteforce => "bruteforce",
            Algorithm::Path => "path",
            Algorithm::Star => "star",
            Algorithm::Substar12 => "substar12",
            Algorithm::SubstarPeriodic => "substar-periodic",
            Algorithm::CyclePeriodic => "cycle-periodic",
            Algorithm::PeriodicTree => "periodic-tree",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

/// Candidate vertices for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pool {
    #[default]
    All,
    /// Leaves first, falling back to all vertices if no leaf set resolves.
    Leaves,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DispatchOptions {
    pub pool: Pool,
    pub jobs: usize,
    pub unsafe_no_guard: bool,
    /// Scan finite paths from the other end.
    pub reverse: bool,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions {
            pool: Pool::All,
            jobs: 1,
            unsafe_no_guard: false,
            reverse: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub algorithm: Algorithm,
    pub set: Vec<Vertex>,
}

fn labels_within_one_two(g: &TemporalGraph) -> bool {
    g.edges()
        .iter()
        .all(|e| e.labels.values().iter().all(|&l| l == 1 || l == 2))
}

/// The solver `auto` would run on `g`.
pub fn choose_algorithm(g: &TemporalGraph) -> Algorithm {
    let shape = classify_shape(g);
    let one = g.is_one_labeling();
    match (g.mode(), &shape) {
        (Mode::Finite, ShapeClass::Path { .. }) if one => Algorithm::Path,
        (Mode::Finite, ShapeClass::Star(_)) if one => Algorithm::Star,
        (Mode::Finite, ShapeClass::SubdividedStar(_)) if one && labels_within_one_two(g) => {
            Algorithm::Substar12
        }
        (Mode::Periodic(_), ShapeClass::Path { .. }) => Algorithm::Path,
        (Mode::Periodic(_), ShapeClass::Cycle { .. }) if one => Algorithm::CyclePeriodic,
        (Mode::Periodic(_), ShapeClass::Star(_) | ShapeClass::SubdividedStar(_)) if one => {
            Algorithm::SubstarPeriodic
        }
        (Mode::Periodic(_), ShapeClass::Tree { .. }) if one => Algorithm::PeriodicTree,
        _ => Algorithm::Bruteforce,
    }
}

fn guard(n: usize, pool: usize, opts: &DispatchOptions) -> Result<()> {
    if opts.unsafe_no_guard || n <= GUARD_VERTICES || pool <= GUARD_POOL {
        return Ok(());
    }
    Err(Error::GuardExceeded(format!(
        "exhaustive search over {pool} candidates on {n} vertices; limits are {GUARD_VERTICES} vertices or {GUARD_POOL} candidates"
    )))
}

pub fn solve(g: &TemporalGraph, algorithm: Algorithm, opts: &DispatchOptions) -> Result<Solution> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let algorithm = match algorithm {
        Algorithm::Auto => choose_algorithm(g),
        other => other,
    };
    let search = SearchOptions {
        min_size: 1,
        jobs: opts.jobs.max(1),
    };
    let set = match algorithm {
        Algorithm::Auto => unreachable!("resolved above"),
        Algorithm::Bruteforce => match opts.pool {
            Pool::All => {
                guard(g.n(), g.n(), opts)?;
                min_resolving_bruteforce_with(g, None, search)?
            }
            Pool::Leaves => {
                let leaves = g.leaves();
                guard(g.n(), leaves.len(), opts)?;
                match min_resolving_bruteforce_with(g, Some(&leaves), search) {
                    Err(Error::PoolExhausted) => {
                        guard(g.n(), g.n(), opts)?;
                        min_resolving_bruteforce_with(g, None, search)?
                    }
                    other => other?,
                }
            }
        },
        Algorithm::Path => match g.mode() {
            Mode::Finite => solve_temporal_path(g, opts.reverse)?,
            Mode::Periodic(_) => solve_path_periodic(g)?,
        },
        Algorithm::Star => solve_star(g)?,
        Algorithm::Substar12 => solve_subdivided_star_12(g)?,
        Algorithm::SubstarPeriodic => {
            guard(g.n(), g.leaves().len(), opts)?;
            solve_substar_periodic(g)?
        }
        Algorithm::CyclePeriodic => solve_cycle_periodic(g)?,
        Algorithm::PeriodicTree => {
            guard(g.n(), g.leaves().len(), opts)?;
            min_resolving_periodic_tree_with(g, search.jobs)?
        }
    };
    Ok(Solution { algorithm, set })
}
