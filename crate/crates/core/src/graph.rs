//! Temporal graphs with finite or periodic edge labelings and strict-journey
//! earliest-arrival distances.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type Vertex = usize;
/// A time-step. Labels are always `>= 1`; `0` is the departure time at a source.
pub type Time = u64;

/// Earliest-arrival value: a time-step, or unreachable.
///
/// `Never` orders above every finite time and compares equal to itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    At(Time),
    Never,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::At(_))
    }

    pub fn time(self) -> Option<Time> {
        match self {
            Dist::At(t) => Some(t),
            Dist::Never => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::At(t) => write!(f, "{t}"),
            Dist::Never => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dist::At(t) => serializer.serialize_u64(*t),
            Dist::Never => serializer.serialize_str("inf"),
        }
    }
}

/// The set of time-steps at which one edge is present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TimeLabelSet {
    /// Strictly increasing positive labels.
    Finite(Vec<Time>),
    /// Residues in `1..=period`; the edge exists at every `r + j * period`.
    Periodic { residues: Vec<Time>, period: Time },
}

impl TimeLabelSet {
    pub fn finite(labels: impl IntoIterator<Item = Time>) -> Result<Self> {
        let mut labels: Vec<Time> = labels.into_iter().collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.is_empty() {
            return Err(Error::InvalidLabels("empty label set".into()));
        }
        if labels[0] == 0 {
            return Err(Error::InvalidLabels("time labels must be positive".into()));
        }
        Ok(TimeLabelSet::Finite(labels))
    }

    pub fn periodic(residues: impl IntoIterator<Item = Time>, period: Time) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidLabels("period must be positive".into()));
        }
        let mut residues: Vec<Time> = residues.into_iter().collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.is_empty() {
            return Err(Error::InvalidLabels("empty residue set".into()));
        }
        if let Some(&bad) = residues.iter().find(|&&r| r == 0 || r > period) {
            return Err(Error::InvalidLabels(format!(
                "residue {bad} outside [1, {period}]"
            )));
        }
        Ok(TimeLabelSet::Periodic { residues, period })
    }

    /// Labels (finite mode) or residues (periodic mode), ascending.
    pub fn values(&self) -> &[Time] {
        match self {
            TimeLabelSet::Finite(labels) => labels,
            TimeLabelSet::Periodic { residues, .. } => residues,
        }
    }

    pub fn period(&self) -> Option<Time> {
        match self {
            TimeLabelSet::Finite(_) => None,
            TimeLabelSet::Periodic { period, .. } => Some(*period),
        }
    }

    pub fn len(&self) -> usize {
        self.values().len()
    }

    pub fn is_empty(&self) -> bool {
        self.values().is_empty()
    }

    pub fn is_k_labeling(&self, k: usize) -> bool {
        self.len() <= k
    }

    pub fn is_single(&self) -> bool {
        self.len() == 1
    }

    /// Smallest label strictly greater than `after`.
    ///
    /// Periodic sets always answer; the value is computed per residue rather
    /// than by scanning forward in time.
    pub fn next_after(&self, after: Time) -> Option<Time> {
        match self {
            TimeLabelSet::Finite(labels) => {
                let idx = labels.partition_point(|&l| l <= after);
                labels.get(idx).copied()
            }
            TimeLabelSet::Periodic { residues, period } => residues
                .iter()
                .map(|&r| {
                    if r > after {
                        r
                    } else {
                        r + ((after - r) / period + 1) * period
                    }
                })
                .min(),
        }
    }

    fn shifted_down(&self, by: Time) -> Self {
        match self {
            TimeLabelSet::Finite(labels) => {
                TimeLabelSet::Finite(labels.iter().map(|l| l - by).collect())
            }
            periodic => periodic.clone(),
        }
    }
}

/// Labeling mode shared by every edge of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Finite,
    Periodic(Time),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub labels: TimeLabelSet,
}

impl Edge {
    pub fn other(&self, w: Vertex) -> Vertex {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A temporal graph: a simple underlying graph on `0..n` plus one label set per edge.
///
/// Equality ignores the order in which edges were supplied.
#[derive(Debug, Clone)]
pub struct TemporalGraph {
    n: usize,
    mode: Mode,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl PartialEq for TemporalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.mode == other.mode
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .all(|e| other.labels_between(e.u, e.v) == Some(&e.labels))
    }
}

impl Eq for TemporalGraph {}

impl TemporalGraph {
    /// Builds a graph from `(u, v, labels)` triples. In periodic mode the
    /// labels are residues in `1..=p`.
    pub fn new<I>(n: usize, mode: Mode, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vec<Time>)>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v, labels) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (u, v) = (u.min(v), u.max(v));
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            let labels = match mode {
                Mode::Finite => TimeLabelSet::finite(labels)?,
                Mode::Periodic(p) => TimeLabelSet::periodic(labels, p)?,
            };
            let id = out.len();
            adj[u].push((v, id));
            adj[v].push((u, id));
            out.push(Edge { u, v, labels });
        }
        Ok(TemporalGraph {
            n,
            mode,
            edges: out,
            adj,
        })
    }

    pub fn finite<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vec<Time>)>,
    {
        Self::new(n, Mode::Finite, edges)
    }

    pub fn periodic<I>(n: usize, period: Time, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vec<Time>)>,
    {
        if period == 0 {
            return Err(Error::InvalidLabels("period must be positive".into()));
        }
        Self::new(n, Mode::Periodic(period), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.mode, Mode::Periodic(_))
    }

    pub fn period(&self) -> Option<Time> {
        match self.mode {
            Mode::Finite => None,
            Mode::Periodic(p) => Some(p),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn labels_between(&self, u: Vertex, v: Vertex) -> Option<&TimeLabelSet> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, id)| &self.edges[id].labels)
    }

    /// Largest label in finite mode; `None` for periodic or edgeless graphs.
    pub fn t_max(&self) -> Option<Time> {
        match self.mode {
            Mode::Finite => self
                .edges
                .iter()
                .filter_map(|e| e.labels.values().last().copied())
                .max(),
            Mode::Periodic(_) => None,
        }
    }

    pub fn is_k_labeling(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.labels.is_k_labeling(k))
    }

    pub fn is_one_labeling(&self) -> bool {
        self.is_k_labeling(1)
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn underlying(&self) -> StaticGraph {
        StaticGraph::from_adjacency(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&(w, _)| w).collect())
                .collect(),
        )
    }

    /// Shifts every finite label down so the smallest becomes 1.
    pub fn normalize(&self) -> Result<TemporalGraph> {
        if self.is_periodic() {
            return Err(Error::WrongMode("finite"));
        }
        let min = self
            .edges
            .iter()
            .map(|e| e.labels.values()[0])
            .min()
            .unwrap_or(1);
        let shift = min - 1;
        let mut out = self.clone();
        for e in &mut out.edges {
            e.labels = e.labels.shifted_down(shift);
        }
        Ok(out)
    }

    /// Earliest arrival time of a strict journey from `source` to every vertex.
    pub fn earliest_arrival(&self, source: Vertex) -> Vec<Dist> {
        let mut best = vec![Dist::Never; self.n];
        best[source] = Dist::At(0);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0, source)));
        while let Some(Reverse((t, u))) = heap.pop() {
            if best[u] != Dist::At(t) {
                continue;
            }
            for &(w, id) in &self.adj[u] {
                let Some(next) = self.edges[id].labels.next_after(t) else {
                    continue;
                };
                if Dist::At(next) < best[w] {
                    best[w] = Dist::At(next);
                    heap.push(Reverse((next, w)));
                }
            }
        }
        if let Mode::Periodic(p) = self.mode {
            // every hop of a foremost journey waits less than one period
            let cap = self.n as Time * p;
            debug_assert!(best.iter().all(|d| d.time().is_none_or(|t| t <= cap)));
        }
        best
    }

    /// Vertices reachable from `v` by a strict journey (always contains `v`).
    pub fn reach_set(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.earliest_arrival(v)
            .into_iter()
            .enumerate()
            .filter(|(_, d)| d.is_finite())
            .map(|(u, _)| u)
            .collect()
    }

    /// Vertices reached from `v` and from no other member of `set`.
    pub fn exclusive_reach(&self, set: &[Vertex], v: Vertex) -> Result<BTreeSet<Vertex>> {
        if !set.contains(&v) {
            return Err(Error::Precondition(format!("vertex {v} is not in the set")));
        }
        let mut reach = self.reach_set(v);
        for &w in set.iter().filter(|&&w| w != v) {
            for u in self.reach_set(w) {
                reach.remove(&u);
            }
        }
        Ok(reach)
    }
}

/// A simple undirected graph without labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    adj: Vec<Vec<Vertex>>,
}

impl StaticGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        StaticGraph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Hop distances from `source`; `None` when unreachable.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() == self.n() - 1 && self.is_connected()
    }
}
