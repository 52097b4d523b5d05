//! Instance generators for the hardness reductions, and a small
//! 3-dimensional matching oracle to check them against.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{StaticGraph, TemporalGraph, Time, Vertex};

/// Largest triple count accepted by [`max_matching`].
pub const MATCHING_GUARD: usize = 12;

pub type Triple = (u32, u32, u32);

/// A 3-dimensional matching instance: does `triples` contain `target`
/// pairwise disjoint triples?
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeDMInstance {
    /// Coordinates are drawn from `1..=n`.
    pub n: u32,
    /// Size bound shared by the coordinate sets X, Y and Z.
    pub p_size: u32,
    pub triples: Vec<Triple>,
    pub target: usize,
}

impl ThreeDMInstance {
    pub fn new(n: u32, p_size: u32, triples: Vec<Triple>, target: usize) -> Result<Self> {
        let inst = ThreeDMInstance {
            n,
            p_size,
            triples,
            target,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if self.triples.is_empty() {
            return bad("no triples".into());
        }
        if self.target >= self.triples.len() {
            return bad(format!(
                "target {} must be below the number of triples {}",
                self.target,
                self.triples.len()
            ));
        }
        if 3 * self.p_size as u64 > self.n as u64 {
            return bad(format!("three disjoint sets of size {} do not fit in 1..={}", self.p_size, self.n));
        }
        if !self.triples.iter().all_unique() {
            return bad("duplicate triple".into());
        }
        let coords: [BTreeSet<u32>; 3] = [
            self.triples.iter().map(|t| t.0).collect(),
            self.triples.iter().map(|t| t.1).collect(),
            self.triples.iter().map(|t| t.2).collect(),
        ];
        for set in &coords {
            if let Some(&v) = set.iter().find(|&&v| v == 0 || v > self.n) {
                return bad(format!("coordinate {v} outside 1..={}", self.n));
            }
            if set.len() > self.p_size as usize {
                return bad(format!("more than {} distinct values in one coordinate", self.p_size));
            }
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if let Some(v) = coords[i].intersection(&coords[j]).next() {
                return bad(format!("value {v} used in two coordinates"));
            }
        }
        Ok(())
    }

    pub fn s(&self) -> usize {
        self.triples.len()
    }

    /// Whether `matching` names distinct triples that are pairwise disjoint.
    pub fn check_matching(&self, matching: &[usize]) -> Result<()> {
        if let Some(&i) = matching.iter().find(|&&i| i >= self.s()) {
            return Err(Error::InvalidMatching(format!("no triple with index {i}")));
        }
        if !matching.iter().all_unique() {
            return Err(Error::InvalidMatching("repeated triple".into()));
        }
        for (&i, &j) in matching.iter().tuple_combinations() {
            if !disjoint(self.triples[i], self.triples[j]) {
                return Err(Error::InvalidMatching(format!("triples {i} and {j} overlap")));
            }
        }
        Ok(())
    }
}

fn disjoint(a: Triple, b: Triple) -> bool {
    a.0 != b.0 && a.1 != b.1 && a.2 != b.2
}

/// Size of a largest set of pairwise disjoint triples, by subset enumeration.
pub fn max_matching(triples: &[Triple]) -> Result<usize> {
    Ok(best_matching(triples)?.len())
}

/// Lexicographically first largest matching, as triple indices.
pub fn best_matching(triples: &[Triple]) -> Result<Vec<usize>> {
    if triples.len() > MATCHING_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{} triples exceeds the matching oracle limit of {MATCHING_GUARD}",
            triples.len()
        )));
    }
    for k in (1..=triples.len()).rev() {
        if let Some(m) = (0..triples.len()).combinations(k).find(|m| {
            m.iter()
                .tuple_combinations()
                .all(|(&i, &j)| disjoint(triples[i], triples[j]))
        }) {
            return Ok(m);
        }
    }
    Ok(Vec::new())
}

pub fn brute_force_3dm(inst: &ThreeDMInstance) -> Result<usize> {
    max_matching(&inst.triples)
}

/// A reduced instance: the temporal graph and the resolving-set budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: TemporalGraph,
    pub budget: usize,
}

/// Complete temporal graph with label 1 on the edges of `g` and label 2 on
/// its non-edges.
pub fn reduce_adjacency_to_complete(g: &StaticGraph) -> Result<TemporalGraph> {
    if !g.is_connected() {
        return Err(Error::InvalidInstance("graph must be connected".into()));
    }
    let n = g.n();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n).map(move |v| (u, v, vec![if g.has_edge(u, v) { 1 } else { 2 }]))
    });
    TemporalGraph::finite(n, edges)
}

/// Which budget the subdivided-star reduction reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BudgetRule {
    /// `s + 1 - target`, the size of the set built from a matching.
    #[default]
    Proof,
    /// `s + 2 - target`, one more than the matching-built set.
    Statement,
}

/// Vertex ids of the subdivided-star gadget.
pub mod substar_layout {
    use crate::graph::Vertex;

    pub const U: Vertex = 0;
    pub const T1: Vertex = 1;
    pub const T2: Vertex = 2;
    pub const T3: Vertex = 3;

    /// Smallest-value vertex of triple `i`'s branch (adjacent to `U`).
    pub fn a(i: usize) -> Vertex {
        4 + 3 * i
    }
    pub fn b(i: usize) -> Vertex {
        5 + 3 * i
    }
    pub fn c(i: usize) -> Vertex {
        6 + 3 * i
    }
}

/// Star with every edge subdivided twice: one branch `u - a - b - c` per
/// triple, with the triple's values sorted so that `a < b < c`, plus the
/// control branch `u - t1 - t2 - t3`.
pub fn reduce_3dm_to_substar(inst: &ThreeDMInstance, rule: BudgetRule) -> Result<Reduction> {
    use substar_layout::*;
    inst.validate()?;
    let s = inst.s();
    let mut edges: Vec<(Vertex, Vertex, Vec<Time>)> = vec![
        (U, T1, vec![2]),
        (T1, T2, vec![1]),
        (T2, T3, vec![3]),
    ];
    for (i, &(x, y, z)) in inst.triples.iter().enumerate() {
        let mut v = [x as Time, y as Time, z as Time];
        v.sort_unstable();
        edges.push((U, a(i), vec![2, v[0] + 4]));
        edges.push((a(i), b(i), vec![3, v[1] + 4]));
        edges.push((b(i), c(i), vec![4, v[2] + 4]));
    }
    let graph = TemporalGraph::finite(3 * s + 4, edges)?;
    let budget = match rule {
        BudgetRule::Proof => s + 1 - inst.target,
        BudgetRule::Statement => s + 2 - inst.target,
    };
    Ok(Reduction { graph, budget })
}

/// Vertex ids of the tree gadget for ground-set size `n`.
///
/// Vertex 0 is the hub `u`; branch `i` occupies a contiguous block. Spine
/// indices `j` and chain indices `k` are 1-based as in the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeLayout {
    pub n: usize,
    pub s: usize,
}

impl TreeLayout {
    pub const U: Vertex = 0;

    fn chain_len(&self) -> usize {
        (self.n - 1) * (self.n - 1)
    }

    pub fn per_branch(&self) -> usize {
        3 * self.n + 3 + 3 * self.chain_len()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.s * self.per_branch()
    }

    fn base(&self, i: usize) -> Vertex {
        1 + i * self.per_branch()
    }

    pub fn v(&self, i: usize, j: usize) -> Vertex {
        self.base(i) + j - 1
    }
    pub fn a(&self, i: usize) -> Vertex {
        self.base(i) + self.n
    }
    pub fn b(&self, i: usize) -> Vertex {
        self.base(i) + self.n + 1
    }
    pub fn c(&self, i: usize) -> Vertex {
        self.base(i) + self.n + 2
    }

    fn chain_index(&self, j: usize, k: usize) -> usize {
        (j - 1) * (self.n - 1) + (k - 1)
    }

    /// `k`-th vertex of the chain from spine vertex `j` to `j + 1`.
    pub fn w(&self, i: usize, j: usize, k: usize) -> Vertex {
        self.base(i) + self.n + 3 + self.chain_index(j, k)
    }
    pub fn t_spine(&self, i: usize, j: usize) -> Vertex {
        self.base(i) + self.n + 3 + self.chain_len() + j - 1
    }
    pub fn s_spine(&self, i: usize, j: usize) -> Vertex {
        self.base(i) + 2 * self.n + 3 + self.chain_len() + j - 1
    }
    pub fn t_chain(&self, i: usize, j: usize, k: usize) -> Vertex {
        self.base(i) + 3 * self.n + 3 + self.chain_len() + self.chain_index(j, k)
    }
    pub fn s_chain(&self, i: usize, j: usize, k: usize) -> Vertex {
        self.base(i) + 3 * self.n + 3 + 2 * self.chain_len() + self.chain_index(j, k)
    }

    /// Every `t` vertex of branch `i`.
    pub fn ts(&self, i: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = (1..=self.n).map(|j| self.t_spine(i, j)).collect();
        for j in 1..self.n {
            out.extend((1..self.n).map(|k| self.t_chain(i, j, k)));
        }
        out
    }
}

/// Tree gadget: a hub joined to one long branch per triple. Each branch is
/// a spine `v^1 .. v^n` whose consecutive vertices are linked by chains of
/// `n - 1` vertices, with the triple's coordinates hanging off the spine
/// vertices of the same index and a pendant pair `t - s` on every spine and
/// chain vertex. Labels are shifted to start at 1.
pub fn reduce_3dm_to_tree(inst: &ThreeDMInstance) -> Result<Reduction> {
    tree_gadget(inst, false)
}

/// Same gadget where every label set is a pair of consecutive integers.
pub fn reduce_3dm_to_tree_intervals(inst: &ThreeDMInstance) -> Result<Reduction> {
    tree_gadget(inst, true)
}

fn tree_gadget(inst: &ThreeDMInstance, intervals: bool) -> Result<Reduction> {
    inst.validate()?;
    let n = inst.n as usize;
    if n < 2 {
        return Err(Error::InvalidInstance("tree gadget needs n >= 2".into()));
    }
    let s = inst.s();
    let layout = TreeLayout { n, s };
    let nt = n as Time;
    let top = nt * nt + 1;
    let pair = |t: Time| vec![t, t + 1];
    let (pendant_inner, pendant_outer) = if intervals {
        (pair(top + 1), pair(top))
    } else {
        (vec![top], vec![top])
    };

    let mut edges = Vec::with_capacity(layout.vertex_count());
    for (i, &(x, y, z)) in inst.triples.iter().enumerate() {
        edges.push((TreeLayout::U, layout.v(i, 1), pair(nt - 1)));
        for (coord, leaf) in [(x, layout.a(i)), (y, layout.b(i)), (z, layout.c(i))] {
            let j = coord as usize;
            edges.push((layout.v(i, j), leaf, pair(coord as Time * nt)));
        }
        for j in 1..n {
            let jt = j as Time;
            edges.push((layout.v(i, j), layout.w(i, j, 1), pair(jt * nt)));
            for k in 1..n - 1 {
                edges.push((layout.w(i, j, k), layout.w(i, j, k + 1), pair(jt * nt + k as Time)));
            }
            edges.push((layout.w(i, j, n - 1), layout.v(i, j + 1), pair((jt + 1) * nt - 1)));
        }
        for j in 1..=n {
            edges.push((layout.t_spine(i, j), layout.v(i, j), pendant_inner.clone()));
            edges.push((layout.s_spine(i, j), layout.t_spine(i, j), pendant_outer.clone()));
        }
        for j in 1..n {
            for k in 1..n {
                edges.push((layout.t_chain(i, j, k), layout.w(i, j, k), pendant_inner.clone()));
                edges.push((layout.s_chain(i, j, k), layout.t_chain(i, j, k), pendant_outer.clone()));
            }
        }
    }
    let graph = TemporalGraph::finite(layout.vertex_count(), edges)?.normalize()?;
    let budget = s * (n * (n - 1) + 1) + (s - inst.target);
    Ok(Reduction { graph, budget })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    Substar,
    /// Also valid for the interval variant, which shares the layout.
    Tree,
}

/// The resolving set built from a matching in the forward direction of each
/// reduction.
pub fn matching_to_resolving_set(
    inst: &ThreeDMInstance,
    matching: &[usize],
    gadget: Gadget,
) -> Result<Vec<Vertex>> {
    inst.validate()?;
    inst.check_matching(matching)?;
    let unmatched = (0..inst.s()).filter(|i| !matching.contains(i));
    let mut set: Vec<Vertex> = match gadget {
        Gadget::Substar => {
            let mut set: Vec<Vertex> = unmatched.map(substar_layout::a).collect();
            set.push(substar_layout::T1);
            set
        }
        Gadget::Tree if matching.len() == inst.s() => {
            // nothing would reach the hub or the coordinate vertices
            return Err(Error::InvalidMatching(
                "the tree gadget needs at least one unmatched triple".into(),
            ));
        }
        Gadget::Tree => {
            let layout = TreeLayout {
                n: inst.n as usize,
                s: inst.s(),
            };
            let mut set: Vec<Vertex> = unmatched.map(|i| layout.v(i, 1)).collect();
            for i in 0..inst.s() {
                set.extend(layout.ts(i));
            }
            set
        }
    };
    set.sort_unstable();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{classify_shape, ShapeClass};
    use crate::verify::check_resolving;

    fn single(n: u32, triple: Triple) -> ThreeDMInstance {
        ThreeDMInstance::new(n, 1, vec![triple], 0).unwrap()
    }

    #[test]
    fn validation() {
        assert!(ThreeDMInstance::new(6, 2, vec![(1, 3, 5), (2, 4, 6)], 1).is_ok());
        // x value reused as a y value
        assert!(ThreeDMInstance::new(6, 2, vec![(1, 3, 5), (3, 4, 6)], 1).is_err());
        assert!(ThreeDMInstance::new(6, 2, vec![(1, 3, 5)], 1).is_err());
        assert!(ThreeDMInstance::new(6, 2, vec![(1, 3, 7), (2, 4, 6)], 1).is_err());
        assert!(ThreeDMInstance::new(6, 2, vec![(1, 3, 5), (1, 3, 5)], 1).is_err());
    }

    #[test]
    fn matching_oracle() {
        assert_eq!(max_matching(&[(1, 3, 5), (1, 4, 6)]).unwrap(), 1);
        assert_eq!(max_matching(&[(1, 4, 7), (2, 5, 8), (3, 6, 9)]).unwrap(), 3);
        assert_eq!(max_matching(&[(1, 1, 1), (2, 2, 2), (1, 2, 1)]).unwrap(), 2);
        assert!(max_matching(&[(1, 1, 1); 13]).is_err());
    }

    #[test]
    fn adjacency_reduction_labels() {
        let p3 = StaticGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let k3 = reduce_adjacency_to_complete(&p3).unwrap();
        assert_eq!(k3.labels_between(0, 1).unwrap().values(), &[1]);
        assert_eq!(k3.labels_between(1, 2).unwrap().values(), &[1]);
        assert_eq!(k3.labels_between(0, 2).unwrap().values(), &[2]);
        assert_eq!(k3.t_max(), Some(2));
        let c4 = StaticGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k4 = reduce_adjacency_to_complete(&c4).unwrap();
        let twos: Vec<_> = k4
            .edges()
            .iter()
            .filter(|e| e.labels.values() == [2])
            .map(|e| (e.u, e.v))
            .collect();
        assert_eq!(twos, vec![(0, 2), (1, 3)]);
        assert!(reduce_adjacency_to_complete(&StaticGraph::new(2, []).unwrap()).is_err());
    }

    #[test]
    fn substar_gadget_labels() {
        use substar_layout::*;
        let red = reduce_3dm_to_substar(&single(5, (1, 3, 5)), BudgetRule::Proof).unwrap();
        let g = &red.graph;
        assert_eq!(g.n(), 7);
        assert_eq!(g.labels_between(U, a(0)).unwrap().values(), &[2, 5]);
        assert_eq!(g.labels_between(a(0), b(0)).unwrap().values(), &[3, 7]);
        assert_eq!(g.labels_between(b(0), c(0)).unwrap().values(), &[4, 9]);
        assert_eq!(g.labels_between(U, T1).unwrap().values(), &[2]);
        assert_eq!(g.labels_between(T1, T2).unwrap().values(), &[1]);
        assert_eq!(g.labels_between(T2, T3).unwrap().values(), &[3]);
        assert_eq!(red.budget, 2);
        let set = matching_to_resolving_set(&single(5, (1, 3, 5)), &[0], Gadget::Substar).unwrap();
        assert_eq!(set, vec![T1]);
        assert!(check_resolving(g, &set).unwrap().is_resolving());
        let inst = ThreeDMInstance::new(6, 2, vec![(1, 3, 5), (2, 4, 6)], 1).unwrap();
        let red = reduce_3dm_to_substar(&inst, BudgetRule::Statement).unwrap();
        assert_eq!(red.budget, 3);
        match classify_shape(&red.graph) {
            ShapeClass::SubdividedStar(s) => assert!(s.branches.iter().all(|b| b.len() == 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tree_gadget_size_and_labels() {
        let inst = single(3, (1, 2, 3));
        let red = reduce_3dm_to_tree(&inst).unwrap();
        assert_eq!(red.graph.n(), 25);
        assert!(red.graph.underlying().is_tree());
        // raw labels span [n - 1, n^2 + 1] = [2, 10], shifted down by 1
        let layout = TreeLayout { n: 3, s: 1 };
        assert_eq!(red.graph.labels_between(layout.s_spine(0, 1), layout.t_spine(0, 1)).unwrap().values(), &[9]);
        assert_eq!(red.graph.labels_between(TreeLayout::U, layout.v(0, 1)).unwrap().values(), &[1, 2]);
        assert_eq!(red.budget, 7 + 1);
        let set = matching_to_resolving_set(&inst, &[], Gadget::Tree).unwrap();
        assert_eq!(set.len(), 8);
        assert!(check_resolving(&red.graph, &set).unwrap().is_resolving());
    }

    #[test]
    fn interval_gadget_uses_consecutive_pairs() {
        let inst = single(3, (1, 2, 3));
        let red = reduce_3dm_to_tree_intervals(&inst).unwrap();
        for e in red.graph.edges() {
            let l = e.labels.values();
            assert!(l.len() == 2 && l[1] == l[0] + 1, "{e:?}");
        }
        assert_eq!(red.budget, reduce_3dm_to_tree(&inst).unwrap().budget);
        let set = matching_to_resolving_set(&inst, &[], Gadget::Tree).unwrap();
        assert!(check_resolving(&red.graph, &set).unwrap().is_resolving());
        assert!(matches!(
            matching_to_resolving_set(&inst, &[0], Gadget::Tree),
            Err(Error::InvalidMatching(_))
        ));
    }

    #[test]
    fn matching_sets_reject_invalid_matchings() {
        let inst = ThreeDMInstance::new(6, 2, vec![(1, 3, 5), (1, 4, 6)], 1).unwrap();
        assert!(matches!(
            matching_to_resolving_set(&inst, &[0, 1], Gadget::Substar),
            Err(Error::InvalidMatching(_))
        ));
        assert!(matching_to_resolving_set(&inst, &[5], Gadget::Substar).is_err());
    }
}
