//! Named graphs with frozen labelings, and cubic graphs built from trees of
//! gadget blocks.
//!
//! Catalog labelings are part of the public contract: certificates carry edge
//! ids relative to exactly these labelings.

use super::{GraphError, Multigraph, VertexId};
use std::str::FromStr;

/// The named-graph catalog.
///
/// - `W`: triangle with one doubled edge; vertex 0 is the degree-2 apex.
/// - `Wprime`: K4 with one edge subdivided once; vertex 0 is the degree-2
///   subdivision vertex.
/// - `K4`, `K33`: complete graph on 4, complete bipartite 3+3 (parts
///   `{0,1,2}` and `{3,4,5}`).
/// - `P10`: Petersen graph; outer 5-cycle `0..5`, spokes `i-(i+5)`, inner
///   5-cycle `5-7-9-6-8-5`.
/// - `P12`: `P10` with vertex 0 expanded to a triangle.
/// - `S10`: hub vertex with three `W` blocks attached by bridges;
///   equals `generate_from_tree(caterpillar(4), W)`.
/// - `S16`: hub vertex with three `Wprime` blocks; equals
///   `generate_from_tree(caterpillar(4), Wprime)`.
/// - `theta`: two vertices joined by a triple edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphName {
    W,
    Wprime,
    K4,
    K33,
    P10,
    P12,
    S10,
    S16,
    Theta,
}

impl GraphName {
    pub const ALL: [GraphName; 9] = [
        GraphName::W,
        GraphName::Wprime,
        GraphName::K4,
        GraphName::K33,
        GraphName::P10,
        GraphName::P12,
        GraphName::S10,
        GraphName::S16,
        GraphName::Theta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphName::W => "W",
            GraphName::Wprime => "Wprime",
            GraphName::K4 => "K4",
            GraphName::K33 => "K33",
            GraphName::P10 => "P10",
            GraphName::P12 => "P12",
            GraphName::S10 => "S10",
            GraphName::S16 => "S16",
            GraphName::Theta => "theta",
        }
    }
}

impl FromStr for GraphName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = GraphName::ALL.iter().map(|n| n.as_str()).collect();
                format!("unknown graph name {s:?}; expected one of {}", names.join(", "))
            })
    }
}

pub fn generate(name: GraphName) -> Multigraph {
    let g = match name {
        GraphName::W => Multigraph::from_edges(3, &[(0, 1), (0, 2), (1, 2), (1, 2)]),
        GraphName::Wprime => Multigraph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        ),
        GraphName::K4 => {
            Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        }
        GraphName::K33 => Multigraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        ),
        GraphName::P10 => Multigraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        ),
        GraphName::P12 => {
            let p10 = generate(GraphName::P10);
            return crate::structure::expand_vertices(&p10, &[0])
                .expect("vertex 0 of P10 has degree 3")
                .graph;
        }
        GraphName::S10 => {
            let tree = DegreeTree::caterpillar(4).expect("n = 4 is valid");
            return generate_from_tree(&tree, Gadget::W);
        }
        GraphName::S16 => {
            let tree = DegreeTree::caterpillar(4).expect("n = 4 is valid");
            return generate_from_tree(&tree, Gadget::WPrime);
        }
        GraphName::Theta => Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]),
    };
    g.expect("catalog labelings are valid")
}

/// Attachable end-block gadget: a cubic block with a single degree-2 vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gadget {
    /// Triangle with one doubled edge (3 vertices).
    W,
    /// K4 with one edge subdivided once (5 vertices).
    WPrime,
}

impl Gadget {
    pub fn vertex_count(self) -> usize {
        match self {
            Gadget::W => 3,
            Gadget::WPrime => 5,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            Gadget::W => 4,
            Gadget::WPrime => 7,
        }
    }

    /// Internal edges with the degree-2 apex labeled 0, matching the catalog
    /// labelings of `W` and `Wprime`.
    pub fn internal_edges(self) -> &'static [(usize, usize)] {
        match self {
            Gadget::W => &[(0, 1), (0, 2), (1, 2), (1, 2)],
            Gadget::WPrime => &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        }
    }

    pub fn graph(self) -> Multigraph {
        match self {
            Gadget::W => generate(GraphName::W),
            Gadget::WPrime => generate(GraphName::Wprime),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Gadget::W => "W",
            Gadget::WPrime => "Wprime",
        }
    }
}

impl FromStr for Gadget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            _ if s.eq_ignore_ascii_case("W") => Ok(Gadget::W),
            _ if s.eq_ignore_ascii_case("Wprime") => Ok(Gadget::WPrime),
            _ => Err(format!("unknown gadget {s:?}; expected W or Wprime")),
        }
    }
}

/// A tree in which every vertex has degree 1 or 3.
///
/// Such a tree on `n` vertices always has `n/2 + 1` leaves and `n/2 - 1`
/// internal vertices; the constructor validates this shape.
#[derive(Clone, Debug)]
pub struct DegreeTree {
    tree: Multigraph,
    leaves: Vec<VertexId>,
    internal: Vec<VertexId>,
}

impl DegreeTree {
    pub fn new(tree: Multigraph) -> Result<DegreeTree, GraphError> {
        let n = tree.vertex_count();
        if n < 2 {
            return Err(GraphError::InvalidTree { reason: "need at least 2 vertices".into() });
        }
        if tree.edge_count() != n - 1 || !tree.is_connected() {
            return Err(GraphError::InvalidTree { reason: "not a tree".into() });
        }
        let mut leaves = Vec::new();
        let mut internal = Vec::new();
        for v in 0..n {
            match tree.degree(v) {
                1 => leaves.push(v),
                3 => internal.push(v),
                d => {
                    return Err(GraphError::InvalidTree {
                        reason: format!("vertex {v} has degree {d}, expected 1 or 3"),
                    })
                }
            }
        }
        if leaves.len() != n / 2 + 1 || internal.len() != n / 2 - 1 {
            return Err(GraphError::InvalidTree {
                reason: "leaf/internal counts off; tree shape corrupted".into(),
            });
        }
        Ok(DegreeTree { tree, leaves, internal })
    }

    /// Canonical degree-1/3 tree on `n` vertices (`n` even, `n >= 2`): a path
    /// of internal vertices `0..n/2-1` with pendant leaves appended in
    /// ascending id order. `n = 2` gives a single edge; `n = 4` the claw.
    pub fn caterpillar(n: usize) -> Result<DegreeTree, GraphError> {
        if n < 2 || n % 2 == 1 {
            return Err(GraphError::InvalidOrder { order: n, reason: "need an even n >= 2" });
        }
        let k3 = n / 2 - 1;
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        for i in 1..k3 {
            edges.push((i - 1, i));
        }
        let mut next_leaf = k3;
        if k3 == 0 {
            edges.push((0, 1));
        } else {
            for i in 0..k3 {
                while edges.iter().filter(|&&(a, b)| a == i || b == i).count() < 3 {
                    edges.push((i, next_leaf));
                    next_leaf += 1;
                }
            }
        }
        let tree = Multigraph::from_edges(n, &edges).expect("caterpillar edges are valid");
        DegreeTree::new(tree)
    }

    pub fn tree(&self) -> &Multigraph {
        &self.tree
    }

    pub fn leaves(&self) -> &[VertexId] {
        &self.leaves
    }

    pub fn internal(&self) -> &[VertexId] {
        &self.internal
    }
}

/// Builds a cubic multigraph by replacing every leaf of a degree-1/3 tree
/// with a gadget block, identifying the leaf with the gadget's degree-2 apex.
///
/// Labeling: internal tree vertices come first in ascending original order;
/// then, per leaf in ascending original order, the gadget block with its apex
/// first. Edges: the tree edges in original order (endpoints remapped, leaf
/// endpoints to the apex), then each block's internal edges.
///
/// The result has `k3 + 3*k1` vertices for `W` and `k3 + 5*k1` for `Wprime`,
/// where `k1`/`k3` are the tree's leaf/internal counts.
pub fn generate_from_tree(tree: &DegreeTree, gadget: Gadget) -> Multigraph {
    let gsize = gadget.vertex_count();
    let k3 = tree.internal().len();
    let mut map = vec![usize::MAX; tree.tree().vertex_count()];
    for (i, &v) in tree.internal().iter().enumerate() {
        map[v] = i;
    }
    for (i, &v) in tree.leaves().iter().enumerate() {
        map[v] = k3 + i * gsize; // apex of block i
    }

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for &(u, v) in tree.tree().edges() {
        edges.push((map[u], map[v]));
    }
    for i in 0..tree.leaves().len() {
        let base = k3 + i * gsize;
        for &(a, b) in gadget.internal_edges() {
            edges.push((base + a, base + b));
        }
    }
    let n = k3 + tree.leaves().len() * gsize;
    Multigraph::from_edges(n, &edges).expect("gadget blocks are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, Classification};

    #[test]
    fn catalog_counts() {
        let expect = [
            (GraphName::W, 3, 4),
            (GraphName::Wprime, 5, 7),
            (GraphName::K4, 4, 6),
            (GraphName::K33, 6, 9),
            (GraphName::P10, 10, 15),
            (GraphName::P12, 12, 18),
            (GraphName::S10, 10, 15),
            (GraphName::S16, 16, 24),
            (GraphName::Theta, 2, 3),
        ];
        for (name, n, m) in expect {
            let g = generate(name);
            assert_eq!(g.vertex_count(), n, "{name:?}");
            assert_eq!(g.edge_count(), m, "{name:?}");
        }
    }

    #[test]
    fn catalog_degree_profiles() {
        // W and Wprime have exactly one degree-2 vertex (the apex, labeled 0);
        // everything else in the catalog is cubic.
        for name in [GraphName::W, GraphName::Wprime] {
            let g = generate(name);
            assert_eq!(g.degree(0), 2, "{name:?}");
            assert!((1..g.vertex_count()).all(|v| g.degree(v) == 3), "{name:?}");
        }
        for name in [
            GraphName::K4,
            GraphName::K33,
            GraphName::P10,
            GraphName::P12,
            GraphName::S10,
            GraphName::S16,
            GraphName::Theta,
        ] {
            assert!(generate(name).is_cubic(), "{name:?}");
        }
    }

    #[test]
    fn petersen_has_girth_five() {
        let g = generate(GraphName::P10);
        assert!(g.is_simple());
        // no triangles
        for u in 0..10 {
            for v in (u + 1)..10 {
                for w in (v + 1)..10 {
                    let abc = !g.edges_between(u, v).is_empty()
                        && !g.edges_between(v, w).is_empty()
                        && !g.edges_between(u, w).is_empty();
                    assert!(!abc, "triangle {u},{v},{w}");
                }
            }
        }
        // no 4-circuits: distinct vertices share at most one neighbor
        for u in 0..10 {
            for v in (u + 1)..10 {
                let nu = g.neighbors(u);
                let common =
                    g.neighbors(v).iter().filter(|w| nu.contains(w)).count();
                assert!(common <= 1, "4-circuit through {u},{v}");
            }
        }
    }

    #[test]
    fn p12_has_unique_triangle() {
        let g = generate(GraphName::P12);
        assert!(g.is_cubic());
        assert!(g.is_simple());
        let mut triangles = 0;
        for u in 0..g.vertex_count() {
            for v in (u + 1)..g.vertex_count() {
                for w in (v + 1)..g.vertex_count() {
                    if !g.edges_between(u, v).is_empty()
                        && !g.edges_between(v, w).is_empty()
                        && !g.edges_between(u, w).is_empty()
                    {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 1);
    }

    #[test]
    fn s10_structure() {
        let g = generate(GraphName::S10);
        match classify(&g) {
            Classification::Cubic(c) => {
                assert!(c.connected);
                assert!(!c.bridgeless);
                assert!(!c.simple);
            }
            other => panic!("unexpected: {other:?}"),
        }
        // hub vertex 0 joins the three block apexes 1, 4, 7
        assert_eq!(g.neighbors(0), vec![1, 4, 7]);
    }

    #[test]
    fn caterpillar_shapes() {
        let k2 = DegreeTree::caterpillar(2).unwrap();
        assert_eq!(k2.leaves(), &[0, 1]);
        assert_eq!(k2.internal(), &[] as &[usize]);

        let claw = DegreeTree::caterpillar(4).unwrap();
        assert_eq!(claw.internal(), &[0]);
        assert_eq!(claw.leaves(), &[1, 2, 3]);

        for n in [2usize, 4, 6, 8, 10, 12] {
            let t = DegreeTree::caterpillar(n).unwrap();
            assert_eq!(t.leaves().len(), n / 2 + 1, "n={n}");
            assert_eq!(t.internal().len(), n / 2 - 1, "n={n}");
        }
        assert!(DegreeTree::caterpillar(5).is_err());
        assert!(DegreeTree::caterpillar(0).is_err());
    }

    #[test]
    fn degree_tree_rejects_bad_shapes() {
        // path on 3 vertices has a degree-2 vertex
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(DegreeTree::new(path).is_err());
        // cycle is not a tree
        let cyc = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(DegreeTree::new(cyc).is_err());
    }

    #[test]
    fn tree_of_gadgets_orders() {
        for (n, gadget, order, size) in [
            (2usize, Gadget::W, 6usize, 9usize),
            (4, Gadget::W, 10, 15),
            (6, Gadget::W, 14, 21),
            (4, Gadget::WPrime, 16, 24),
            (6, Gadget::WPrime, 22, 33),
        ] {
            let t = DegreeTree::caterpillar(n).unwrap();
            let g = generate_from_tree(&t, gadget);
            assert_eq!(g.vertex_count(), order, "n={n} {gadget:?}");
            assert_eq!(g.edge_count(), size, "n={n} {gadget:?}");
            assert!(g.is_cubic(), "n={n} {gadget:?}");
            assert!(g.is_connected(), "n={n} {gadget:?}");
        }
    }

    #[test]
    fn two_block_degenerate_tree() {
        let t = DegreeTree::caterpillar(2).unwrap();
        let g = generate_from_tree(&t, Gadget::W);
        // two W blocks joined by an edge between their apexes 0 and 3
        assert_eq!(g.edges()[0], (0, 3));
        assert_eq!(g.neighbors(0), vec![1, 2, 3]);
        assert!(g.is_cubic());
    }

    #[test]
    fn names_parse() {
        for name in GraphName::ALL {
            assert_eq!(name.as_str().parse::<GraphName>().unwrap(), name);
        }
        assert_eq!("THETA".parse::<GraphName>().unwrap(), GraphName::Theta);
        assert!("Q7".parse::<GraphName>().is_err());
        assert_eq!("wprime".parse::<Gadget>().unwrap(), Gadget::WPrime);
    }
}
