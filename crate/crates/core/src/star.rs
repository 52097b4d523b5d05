//! Stars and subdivided stars with one label per edge.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Mode, TemporalGraph, Time, Vertex};
use crate::path::{solve_path, PathView};
use crate::shape::{classify_shape, ShapeClass, Spider};
use crate::verify::DistanceTable;

fn single_label(g: &TemporalGraph, u: Vertex, v: Vertex) -> Result<Time> {
    match g.labels_between(u, v).map(|s| s.values()) {
        Some([l]) => Ok(*l),
        Some(_) => Err(Error::NotOneLabeling),
        None => Err(Error::Precondition(format!("no edge between {u} and {v}"))),
    }
}

/// Minimum resolving set of a finite star with a 1-labeling.
///
/// Keeps out one leaf per distinct label (the smallest-index one) and takes
/// every other vertex, center included.
pub fn solve_star(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    if g.mode() != Mode::Finite {
        return Err(Error::WrongMode("finite"));
    }
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    let (center, leaves) = match classify_shape(g) {
        ShapeClass::Star(s) => (s.center, s.leaves()),
        ShapeClass::Path { order } if order.len() <= 3 => {
            let center = order[order.len() / 2];
            let leaves = order.iter().copied().filter(|&v| v != center).collect();
            (center, leaves)
        }
        other => {
            return Err(Error::ShapeMismatch {
                expected: "star",
                found: other.tag().into(),
            })
        }
    };
    let mut representative: BTreeMap<Time, Vertex> = BTreeMap::new();
    for &leaf in &leaves {
        let label = single_label(g, center, leaf)?;
        let entry = representative.entry(label).or_insert(leaf);
        *entry = (*entry).min(leaf);
    }
    let excluded: Vec<Vertex> = representative.into_values().collect();
    let set: Vec<Vertex> = (0..g.n()).filter(|v| !excluded.contains(v)).collect();
    // labels shared by several leaves force all but one of them into the set
    debug_assert!(set.len() >= leaves.len() - excluded.len());
    Ok(set)
}

/// A subdivided star with branches ordered by the label of their first edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdividedStarView {
    pub center: Vertex,
    /// Each branch from the neighbor of the center out to its leaf.
    pub branches: Vec<Vec<Vertex>>,
    /// `labels[i][k]` is the label of the edge entering `branches[i][k]`
    /// from the center side.
    pub labels: Vec<Vec<Time>>,
    /// Number of branches whose first edge has label 1.
    pub ones: usize,
}

impl SubdividedStarView {
    /// Works for both finite and periodic labelings (residues are used as
    /// labels in the latter case).
    pub fn from_graph(g: &TemporalGraph) -> Result<Self> {
        let spider = match classify_shape(g) {
            ShapeClass::Star(s) | ShapeClass::SubdividedStar(s) => s,
            other => {
                return Err(Error::ShapeMismatch {
                    expected: "subdivided-star",
                    found: other.tag().into(),
                })
            }
        };
        Self::from_spider(g, spider)
    }

    fn from_spider(g: &TemporalGraph, spider: Spider) -> Result<Self> {
        let Spider { center, branches } = spider;
        let mut labelled = branches
            .into_iter()
            .map(|branch| {
                let labels = std::iter::once(center)
                    .chain(branch.iter().copied())
                    .tuple_windows()
                    .map(|(u, v)| single_label(g, u, v))
                    .collect::<Result<Vec<_>>>()?;
                Ok((branch, labels))
            })
            .collect::<Result<Vec<_>>>()?;
        // stable: equal first labels keep their neighbor order
        labelled.sort_by_key(|(_, labels)| labels[0]);
        let ones = labelled.iter().filter(|(_, l)| l[0] == 1).count();
        let (branches, labels) = labelled.into_iter().unzip();
        Ok(SubdividedStarView {
            center,
            branches,
            labels,
            ones,
        })
    }

    pub fn degree(&self) -> usize {
        self.branches.len()
    }

    pub fn first_label(&self, branch: usize) -> Time {
        self.labels[branch][0]
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.branches.iter().map(|b| *b.last().expect("branches are non-empty")).collect()
    }

    /// Temporal path from the leaf of `branch` to the center, with the
    /// vertex at each position.
    fn leaf_to_center(&self, branch: usize) -> (PathView, Vec<Vertex>) {
        let mut order: Vec<Vertex> = self.branches[branch].iter().rev().copied().collect();
        order.push(self.center);
        let labels = self.labels[branch].iter().rev().copied().collect();
        (PathView::new(labels).expect("labels are positive"), order)
    }

    /// The branch on its own, leaf first, without the center.
    fn branch_only(&self, branch: usize) -> (PathView, Vec<Vertex>) {
        let order: Vec<Vertex> = self.branches[branch].iter().rev().copied().collect();
        let labels = self.labels[branch][1..].iter().rev().copied().collect();
        (PathView::new(labels).expect("labels are positive"), order)
    }
}

/// Intermediate sets of the subdivided-star solver, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Alg2State {
    /// Per-branch path solutions, indexed like the view's branches.
    pub path_solutions: Vec<Vec<Vertex>>,
    /// Union of the path solutions without the center.
    pub r_prime: Vec<Vertex>,
    /// Branch indices whose path solution used the center.
    pub b_c_initial: Vec<usize>,
    /// `b_c_initial` after dropping branches that meet `q2`.
    pub b_c: Vec<usize>,
    pub q1: Vec<Vertex>,
    pub q2: Vec<Vertex>,
    /// Number of branches meeting `q1`.
    pub r: usize,
    /// Extra vertices added near the center.
    pub r_double_prime: Vec<Vertex>,
    /// `|R''| - (|B_c| - 1 - r)` for the returned set, if the search ran.
    /// Negative values happen: label-2 branches can be reached through the
    /// center from other branches and need no extra vertex of their own.
    pub round: Option<isize>,
}

/// Minimum resolving set of a finite subdivided star whose edges carry a
/// single label from {1, 2}.
pub fn solve_subdivided_star_12(g: &TemporalGraph) -> Result<Vec<Vertex>> {
    solve_subdivided_star_12_traced(g).map(|(set, _)| set)
}

pub fn solve_subdivided_star_12_traced(g: &TemporalGraph) -> Result<(Vec<Vertex>, Alg2State)> {
    if g.mode() != Mode::Finite {
        return Err(Error::WrongMode("finite"));
    }
    if !g.is_one_labeling() {
        return Err(Error::NotOneLabeling);
    }
    if let Some(bad) = g
        .edges()
        .iter()
        .flat_map(|e| e.labels.values())
        .find(|&&l| l != 1 && l != 2)
    {
        return Err(Error::LabelOutsideDomain(*bad));
    }
    let view = SubdividedStarView::from_graph(g)?;
    let c = view.center;
    let table = DistanceTable::new(g);

    let path_solutions: Vec<Vec<Vertex>> = (0..view.degree())
        .map(|i| {
            let (path, order) = view.leaf_to_center(i);
            solve_path(&path).into_iter().map(|p| order[p]).collect()
        })
        .collect();
    let mut r_prime: Vec<Vertex> = path_solutions
        .iter()
        .flatten()
        .copied()
        .filter(|&v| v != c)
        .collect();
    r_prime.sort_unstable();
    r_prime.dedup();
    let b_c_initial: Vec<usize> = (0..view.degree())
        .filter(|&i| path_solutions[i].contains(&c))
        .collect();

    let mut state = Alg2State {
        path_solutions,
        r_prime: r_prime.clone(),
        b_c_initial: b_c_initial.clone(),
        b_c: b_c_initial.clone(),
        q1: Vec::new(),
        q2: Vec::new(),
        r: 0,
        r_double_prime: Vec::new(),
        round: None,
    };
    if b_c_initial.is_empty() {
        return Ok((r_prime, state));
    }

    for &i in &b_c_initial {
        if first_vertex_is_conflicted(&view, i, &state.path_solutions[i]) {
            let v = view.branches[i][0];
            match view.first_label(i) {
                1 => state.q1.push(v),
                _ => state.q2.push(v),
            }
        }
    }
    state.b_c.retain(|&i| !state.q2.contains(&view.branches[i][0]));
    state.r = state.q1.len();

    let b_c_vertices: Vec<Vertex> = state
        .b_c
        .iter()
        .flat_map(|&i| view.branches[i].iter().copied())
        .collect();
    let mut candidates: Vec<Vertex> = b_c_vertices
        .iter()
        .copied()
        .chain(std::iter::once(c))
        .filter(|&v| table.dist(c, v).is_finite() && !r_prime.contains(&v))
        .collect();
    candidates.sort_unstable();

    let mut branch_of = vec![None; g.n()];
    for (i, branch) in view.branches.iter().enumerate() {
        for &v in branch {
            branch_of[v] = Some(i);
        }
    }
    let second_ring: Vec<Vertex> = view.branches.iter().filter_map(|b| b.get(1).copied()).collect();

    let admissible = |set: &[Vertex]| {
        let branches_hit: Vec<usize> = set.iter().filter_map(|&v| branch_of[v]).collect();
        branches_hit.iter().all_unique()
            && set.iter().filter(|v| state.q1.contains(v)).count() <= 1
            && set.iter().filter(|v| second_ring.contains(v)).count() <= 1
    };

    // |B_c| + 1 - r extra vertices always suffice (the center plus one
    // neighbor per branch outside Q1); smaller sizes are tried first
    let base = state.b_c.len() as isize - 1 - state.r as isize;
    let largest = (base + 2).max(0) as usize;
    for size in 0..=largest.min(candidates.len()) {
        let found = candidates
            .iter()
            .copied()
            .combinations(size)
            .filter(|extra| admissible(extra))
            .map(|extra| {
                let mut set = r_prime.clone();
                set.extend(&extra);
                set.sort_unstable();
                (set, extra)
            })
            .find(|(set, _)| table.resolves(set));
        if let Some((set, extra)) = found {
            state.r_double_prime = extra;
            state.round = Some(size as isize - base);
            return Ok((set, state));
        }
    }
    Err(Error::SearchExhausted)
}

/// Whether the first vertex of `branch` is reached by the branch's own
/// landmarks (center excluded) but shares its vector with another vertex of
/// the branch.
fn first_vertex_is_conflicted(view: &SubdividedStarView, branch: usize, solution: &[Vertex]) -> bool {
    let (path, order) = view.branch_only(branch);
    let landmarks: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, v)| solution.contains(v))
        .map(|(p, _)| p)
        .collect();
    if landmarks.is_empty() {
        return false;
    }
    let g = path.to_graph();
    let first = order.len() - 1;
    let sweeps: Vec<_> = landmarks.iter().map(|&s| g.earliest_arrival(s)).collect();
    let vector = |v: usize| sweeps.iter().map(|row| row[v]).collect::<Vec<_>>();
    let target = vector(first);
    target.iter().any(|d| d.is_finite()) && (0..first).any(|v| vector(v) == target)
}
