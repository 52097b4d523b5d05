//! Temporal resolving set checks.
//!
//! A set `R` is resolving when every vertex is reached by some member of `R`
//! and no two vertices share the same vector of earliest-arrival times from
//! `R`. Unreachable coordinates compare equal to each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dist, TemporalGraph, Vertex};

/// Arrival times from each landmark, in ascending landmark order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DistanceVector(pub Vec<Dist>);

impl DistanceVector {
    pub fn is_unreached(&self) -> bool {
        self.0.iter().all(|d| !d.is_finite())
    }
}

impl std::fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Resolving,
    /// No landmark reaches `vertex`.
    NotReaching { vertex: Vertex },
    /// `u < v` share a distance vector.
    NotSeparating { u: Vertex, v: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCertificate {
    pub landmarks: Vec<Vertex>,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Indexed by vertex.
    pub vectors: Vec<DistanceVector>,
}

impl ResolutionCertificate {
    pub fn is_resolving(&self) -> bool {
        self.verdict == Verdict::Resolving
    }

    /// Re-derives the verdict from the stored vectors alone.
    pub fn recheck(&self) -> bool {
        match self.verdict {
            Verdict::Resolving => verdict_from_vectors(&self.vectors) == Verdict::Resolving,
            Verdict::NotReaching { vertex } => self.vectors[vertex].is_unreached(),
            Verdict::NotSeparating { u, v } => u != v && self.vectors[u] == self.vectors[v],
        }
    }
}

fn canonical_landmarks(g: &TemporalGraph, landmarks: &[Vertex]) -> Result<Vec<Vertex>> {
    if landmarks.is_empty() {
        return Err(Error::Precondition("landmark set must be non-empty".into()));
    }
    if let Some(&bad) = landmarks.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    let mut set = landmarks.to_vec();
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Distance vector of every vertex with respect to the sorted, deduplicated
/// landmark set (returned alongside).
pub fn distance_vectors(
    g: &TemporalGraph,
    landmarks: &[Vertex],
) -> Result<(Vec<Vertex>, Vec<DistanceVector>)> {
    let set = canonical_landmarks(g, landmarks)?;
    let sweeps: Vec<Vec<Dist>> = set.iter().map(|&s| g.earliest_arrival(s)).collect();
    let vectors = (0..g.n())
        .map(|v| DistanceVector(sweeps.iter().map(|row| row[v]).collect()))
        .collect();
    Ok((set, vectors))
}

fn verdict_from_vectors(vectors: &[DistanceVector]) -> Verdict {
    if let Some(vertex) = vectors.iter().position(DistanceVector::is_unreached) {
        return Verdict::NotReaching { vertex };
    }
    match smallest_twin_pair(vectors) {
        Some((u, v)) => Verdict::NotSeparating { u, v },
        None => Verdict::Resolving,
    }
}

/// Lexicographically smallest `(u, v)`, `u < v`, with equal vectors.
fn smallest_twin_pair(vectors: &[DistanceVector]) -> Option<(Vertex, Vertex)> {
    let mut order: Vec<Vertex> = (0..vectors.len()).collect();
    // stable sort keeps equal vectors in ascending vertex order
    order.sort_by(|&a, &b| vectors[a].cmp(&vectors[b]));
    order
        .windows(2)
        .filter(|w| vectors[w[0]] == vectors[w[1]])
        .map(|w| (w[0], w[1]))
        .fold(None, |best: Option<(Vertex, Vertex)>, pair| {
            // within a run of equal vectors only the first two matter
            match best {
                Some(b) if b <= pair => Some(b),
                _ => Some(pair),
            }
        })
}

pub fn check_resolving(g: &TemporalGraph, landmarks: &[Vertex]) -> Result<ResolutionCertificate> {
    let (landmarks, vectors) = distance_vectors(g, landmarks)?;
    let verdict = verdict_from_vectors(&vectors);
    Ok(ResolutionCertificate {
        landmarks,
        verdict,
        vectors,
    })
}

/// Separation condition only; the reaching condition is ignored.
pub fn is_separating_only(g: &TemporalGraph, landmarks: &[Vertex]) -> Result<bool> {
    let (_, vectors) = distance_vectors(g, landmarks)?;
    Ok(smallest_twin_pair(&vectors).is_none())
}

/// All-pairs earliest-arrival table for repeated resolving checks.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    // row-major: rows[s * n + v] = arrival at v from s, with Never encoded as u64::MAX
    rows: Vec<u64>,
}

impl DistanceTable {
    pub fn new(g: &TemporalGraph) -> Self {
        let n = g.n();
        let mut rows = Vec::with_capacity(n * n);
        for s in 0..n {
            rows.extend(
                g.earliest_arrival(s)
                    .into_iter()
                    .map(|d| d.time().unwrap_or(u64::MAX)),
            );
        }
        DistanceTable { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, from: Vertex, to: Vertex) -> Dist {
        match self.rows[from * self.n + to] {
            u64::MAX => Dist::Never,
            t => Dist::At(t),
        }
    }

    pub fn reaches(&self, set: &[Vertex]) -> bool {
        (0..self.n).all(|v| set.iter().any(|&s| self.rows[s * self.n + v] != u64::MAX))
    }

    pub fn separates(&self, set: &[Vertex]) -> bool {
        let k = set.len();
        let n = self.n;
        let mut flat = Vec::with_capacity(n * k);
        for v in 0..n {
            flat.extend(set.iter().map(|&s| self.rows[s * n + v]));
        }
        let key = |v: usize| &flat[v * k..(v + 1) * k];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
        order.windows(2).all(|w| key(w[0]) != key(w[1]))
    }

    pub fn resolves(&self, set: &[Vertex]) -> bool {
        !set.is_empty() && self.reaches(set) && self.separates(set)
    }
}
