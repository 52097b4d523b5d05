//! Linear-time minimum temporal resolving sets on temporal paths with a
//! finite 1-labeling.
//!
//! On a path, the vertices reached from `s` form an interval around `s`, and
//! arrival times strictly increase with hop distance on each side. So the
//! only possible distance collisions are between one vertex left of `s` and
//! one vertex right of `s`. The solver repeatedly picks the rightmost vertex
//! that reaches the current target, then moves the target either past the
//! reach of that vertex or onto the first right-side collision.

use crate::error::{Error, Result};
use crate::graph::{Mode, TemporalGraph, Time, Vertex};
use crate::shape::{classify_shape, ShapeClass};

/// A temporal path `0 - 1 - ... - (n-1)` with one label per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathView {
    /// `labels[i]` is the label of the edge between positions `i` and `i + 1`.
    labels: Vec<Time>,
}

impl PathView {
    pub fn new(labels: Vec<Time>) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidLabels("time labels must be positive".into()));
        }
        Ok(PathView { labels })
    }

    /// Path view of a finite temporal path, together with the vertex found at
    /// each position.
    pub fn from_graph(g: &TemporalGraph) -> Result<(PathView, Vec<Vertex>)> {
        if g.mode() != Mode::Finite {
            return Err(Error::WrongMode("finite"));
        }
        let order = match classify_shape(g) {
            ShapeClass::Path { order } => order,
            other => {
                return Err(Error::ShapeMismatch {
                    expected: "path",
                    found: other.tag().into(),
                })
            }
        };
        let labels = order
            .windows(2)
            .map(|w| {
                let set = g.labels_between(w[0], w[1]).expect("consecutive path vertices");
                match set.values() {
                    [l] => Ok(*l),
                    _ => Err(Error::NotOneLabeling),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((PathView { labels }, order))
    }

    pub fn n(&self) -> usize {
        self.labels.len() + 1
    }

    pub fn labels(&self) -> &[Time] {
        &self.labels
    }

    pub fn reversed(&self) -> PathView {
        PathView {
            labels: self.labels.iter().rev().copied().collect(),
        }
    }

    /// The path as a graph whose vertex `i` sits at position `i`.
    pub fn to_graph(&self) -> TemporalGraph {
        TemporalGraph::finite(
            self.n(),
            self.labels.iter().enumerate().map(|(i, &l)| (i, i + 1, vec![l])),
        )
        .expect("path views are valid graphs")
    }
}

/// Positions of a minimum temporal resolving set, in increasing order.
pub fn solve_path(p: &PathView) -> Vec<usize> {
    let n = p.n();
    if n == 1 {
        return vec![0];
    }
    let t = &p.labels;

    let mut chosen = Vec::new();
    // positions 0..=covered are reached by members chosen so far
    let mut covered: Option<usize> = None;
    let mut target = 0;
    // last member and its right reach; labels increase strictly in between
    let mut run: Option<(usize, usize)> = None;
    loop {
        // positions reaching `target` from the right form an interval
        // starting at it; one more step left needs a larger label
        let mut s = target;
        while s + 1 < n && (s == target || t[s - 1] > t[s]) {
            s += 1;
        }
        chosen.push(s);

        // every earlier position is covered, and s reaches back to target,
        // which never lies beyond covered + 1
        let lo = covered.map_or(0, |m| m + 1);
        let hi = match run {
            Some((prev, end)) if prev < s && s < end => end,
            _ => rightmost(t, s),
        };
        run = Some((s, hi));
        covered = Some(covered.map_or(hi, |m| m.max(hi)));

        match first_collision(t, s, lo, hi) {
            Some(b) => target = b,
            None if hi == n - 1 => return chosen,
            None => target = hi + 1,
        }
    }
}

/// Largest position reachable from `s` walking right.
fn rightmost(t: &[Time], s: usize) -> usize {
    let last = t.len();
    if s == last {
        return last;
    }
    let mut j = s + 1;
    while j < last && t[j - 1] < t[j] {
        j += 1;
    }
    j
}

/// Smallest position `y > s` in `lo..=hi` whose arrival time from `s` equals
/// that of some position `x < s` in the same window.
fn first_collision(t: &[Time], s: usize, lo: usize, hi: usize) -> Option<usize> {
    if lo >= s {
        return None;
    }
    // left arrivals t[s-1] < t[s-2] < ... ; right arrivals t[s] < t[s+1] < ...
    let mut x = s - 1;
    let mut y = s + 1;
    while y <= hi {
        let (left, right) = (t[x], t[y - 1]);
        if left == right {
            return Some(y);
        }
        if left < right {
            if x == lo {
                return None;
            }
            x -= 1;
        } else {
            y += 1;
        }
    }
    None
}

/// Minimum resolving set of a finite temporal path graph, as vertex ids.
///
/// With `reverse` the algorithm scans from the other end of the path; the
/// set may differ but its size does not.
pub fn solve_temporal_path(g: &TemporalGraph, reverse: bool) -> Result<Vec<Vertex>> {
    let (view, mut order) = PathView::from_graph(g)?;
    let view = if reverse {
        order.reverse();
        view.reversed()
    } else {
        view
    };
    let mut set: Vec<Vertex> = solve_path(&view).into_iter().map(|i| order[i]).collect();
    set.sort_unstable();
    Ok(set)
}
