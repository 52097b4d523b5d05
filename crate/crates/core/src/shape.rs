//! Recognition of the underlying-graph classes the specialized solvers accept.

use serde::Serialize;

use crate::graph::{StaticGraph, TemporalGraph, Vertex};

/// A center with vertex-disjoint paths ("branches") hanging off it.
///
/// Each branch is listed from the neighbor of the center outward, so
/// `branch[0]` is adjacent to the center and `branch.last()` is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spider {
    pub center: Vertex,
    pub branches: Vec<Vec<Vertex>>,
}

impl Spider {
    pub fn leaves(&self) -> Vec<Vertex> {
        self.branches.iter().filter_map(|b| b.last().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum ShapeClass {
    Path { order: Vec<Vertex> },
    Cycle { order: Vec<Vertex> },
    /// Every branch has length one. Also usable wherever a subdivided star is.
    Star(Spider),
    SubdividedStar(Spider),
    Complete,
    Tree { leaves: Vec<Vertex> },
    General,
}

impl ShapeClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ShapeClass::Path { .. } => "path",
            ShapeClass::Cycle { .. } => "cycle",
            ShapeClass::Star(_) => "star",
            ShapeClass::SubdividedStar(_) => "subdivided-star",
            ShapeClass::Complete => "complete",
            ShapeClass::Tree { .. } => "tree",
            ShapeClass::General => "general",
        }
    }

    pub fn spider(&self) -> Option<&Spider> {
        match self {
            ShapeClass::Star(s) | ShapeClass::SubdividedStar(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_tree(&self) -> bool {
        matches!(
            self,
            ShapeClass::Path { .. }
                | ShapeClass::Star(_)
                | ShapeClass::SubdividedStar(_)
                | ShapeClass::Tree { .. }
        )
    }
}

pub fn classify_shape(g: &TemporalGraph) -> ShapeClass {
    classify_static(&g.underlying())
}

/// Most specific class of a static graph, in the priority order
/// path, cycle, star, subdivided star, complete, tree, general.
pub fn classify_static(g: &StaticGraph) -> ShapeClass {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return ShapeClass::General;
    }
    let m = g.edge_count();
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);

    if m + 1 == n {
        if max_deg <= 2 {
            return ShapeClass::Path {
                order: path_order(g),
            };
        }
        let high: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
        if let [center] = high[..] {
            let spider = spider_from(g, center);
            return if spider.branches.iter().all(|b| b.len() == 1) {
                ShapeClass::Star(spider)
            } else {
                ShapeClass::SubdividedStar(spider)
            };
        }
        return ShapeClass::Tree {
            leaves: (0..n).filter(|&v| g.degree(v) == 1).collect(),
        };
    }
    if m == n && max_deg == 2 && (0..n).all(|v| g.degree(v) == 2) {
        return ShapeClass::Cycle {
            order: cycle_order(g),
        };
    }
    if m == n * (n - 1) / 2 {
        return ShapeClass::Complete;
    }
    ShapeClass::General
}

fn path_order(g: &StaticGraph) -> Vec<Vertex> {
    let n = g.n();
    let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| Some(w) != prev) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

fn cycle_order(g: &StaticGraph) -> Vec<Vertex> {
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap_or(0);
        prev = cur;
        cur = next;
    }
    order
}

fn spider_from(g: &StaticGraph, center: Vertex) -> Spider {
    let branches = g
        .neighbors(center)
        .iter()
        .map(|&first| {
            let mut branch = vec![first];
            let mut prev = center;
            let mut cur = first;
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                branch.push(next);
                prev = cur;
                cur = next;
            }
            branch
        })
        .collect();
    Spider { center, branches }
}

/// Level structure of a complete binary tree rooted at its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryTreeShape {
    pub root: Vertex,
    /// Number of levels `n`; the tree has `2^n - 1` vertices.
    pub levels: u32,
    pub level_of: Vec<u32>,
}

/// Recognizes a complete binary tree with at least three vertices.
pub fn complete_binary_tree(g: &StaticGraph) -> Option<BinaryTreeShape> {
    let n = g.n();
    if n < 3 || !(n + 1).is_power_of_two() || !g.is_tree() {
        return None;
    }
    let levels = (n + 1).trailing_zeros();
    let roots: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    let root = match (levels, &roots[..]) {
        (2, _) => (0..n).find(|&v| g.degree(v) == 2)?,
        (_, [r]) => *r,
        _ => return None,
    };
    let dist = g.bfs(root);
    let level_of: Vec<u32> = dist.iter().map(|d| d.unwrap_or(usize::MAX) as u32).collect();
    for v in 0..n {
        let expected = if v == root {
            2
        } else if level_of[v] + 1 == levels {
            1
        } else {
            3
        };
        if g.degree(v) != expected {
            return None;
        }
    }
    Some(BinaryTreeShape {
        root,
        levels,
        level_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(n: usize, edges: &[(usize, usize)]) -> StaticGraph {
        StaticGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn recognizes_paths() {
        assert_eq!(
            classify_static(&sg(3, &[(2, 1), (1, 0)])),
            ShapeClass::Path { order: vec![0, 1, 2] }
        );
        assert_eq!(
            classify_static(&sg(4, &[(1, 3), (3, 0), (0, 2)])),
            ShapeClass::Path { order: vec![1, 3, 0, 2] }
        );
        assert_eq!(classify_static(&sg(1, &[])), ShapeClass::Path { order: vec![0] });
        assert_eq!(
            classify_static(&sg(2, &[(0, 1)])),
            ShapeClass::Path { order: vec![0, 1] }
        );
    }

    #[test]
    fn recognizes_complete_and_cycles() {
        let k4: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(classify_static(&sg(4, &k4)), ShapeClass::Complete);
        let c4 = sg(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(classify_static(&c4), ShapeClass::Cycle { order: vec![0, 1, 2, 3] });
        // K3 is reported as the more specific cycle
        assert_eq!(
            classify_static(&sg(3, &[(0, 1), (1, 2), (0, 2)])).tag(),
            "cycle"
        );
    }

    #[test]
    fn recognizes_spiders() {
        let spider = sg(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        match classify_static(&spider) {
            ShapeClass::SubdividedStar(s) => {
                assert_eq!(s.center, 0);
                assert_eq!(s.branches, vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
                assert_eq!(s.leaves(), vec![2, 4, 6]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let star = sg(4, &[(2, 0), (2, 1), (2, 3)]);
        let shape = classify_static(&star);
        assert_eq!(shape.tag(), "star");
        assert_eq!(shape.spider().unwrap().center, 2);
    }

    #[test]
    fn general_trees_and_disconnected() {
        // two vertices of degree 3
        let t = sg(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        assert_eq!(classify_static(&t), ShapeClass::Tree { leaves: vec![1, 2, 4, 5] });
        assert_eq!(classify_static(&sg(3, &[(0, 1)])), ShapeClass::General);
    }

    #[test]
    fn binary_tree_levels() {
        let edges: Vec<_> = (1..15).map(|v| ((v - 1) / 2, v)).collect();
        let shape = complete_binary_tree(&sg(15, &edges)).unwrap();
        assert_eq!(shape.root, 0);
        assert_eq!(shape.levels, 4);
        assert_eq!(shape.level_of[14], 3);
        assert!(complete_binary_tree(&sg(4, &[(0, 1), (1, 2), (2, 3)])).is_none());
        let p3 = complete_binary_tree(&sg(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!((p3.root, p3.levels), (1, 2));
    }
}
