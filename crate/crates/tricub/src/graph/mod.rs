//! Loop-free undirected multigraphs with positional edge identity.
//!
//! Edges are numbered `0..m` in insertion order and keep that identity through
//! every operation in the crate; all subgraph objects (matchings, parity
//! subgraphs, covers) are sets of edge ids. Parallel edges are allowed and
//! distinguished only by id; loops are rejected at construction.

mod catalog;
mod enumerate;
mod formats;
mod iso;
mod random;

pub use catalog::{generate, generate_from_tree, DegreeTree, Gadget, GraphName};
pub use enumerate::enumerate_simple_cubic;
pub use formats::{
    decode_sparse6, encode_sparse6, parse_edge_list, serialize_edge_list, ParseError,
};
pub use iso::{automorphisms, is_isomorphic, vertex_orbits};
pub use random::random_cubic;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: VertexId },
    #[error("edge endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("graph order {order} is invalid: {reason}")]
    InvalidOrder { order: usize, reason: &'static str },
    #[error("not a degree-1/3 tree: {reason}")]
    InvalidTree { reason: String },
    #[error("random generation gave up after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
}

/// Undirected multigraph without loops.
///
/// Endpoint pairs are stored exactly as given; `endpoints(e)` preserves the
/// original orientation of the input line or constructor call, which callers
/// such as subdivide-and-attach rely on to name "first" and "second" halves.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    endpoints: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Multigraph, GraphError> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            incidence[u].push(id);
            incidence[v].push(id);
        }
        Ok(Multigraph { vertex_count, endpoints: edges.to_vec(), incidence })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.endpoints
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints[e];
        debug_assert!(v == a || v == b);
        if v == a {
            b
        } else {
            a
        }
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.degree(v)).collect()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    /// Distinct neighbor vertices of `v`, ascending, each listed once.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> =
            self.incidence[v].iter().map(|&e| self.other_endpoint(e, v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Edge ids joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.other_endpoint(e, u) == v)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.endpoints {
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &e in &self.incidence[v] {
                    let w = self.other_endpoint(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    /// Hex SHA-256 of the canonical edge-list serialization. Identifies the
    /// labeled graph (not its isomorphism class) in certificates and records.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let bytes = formats::serialize_edge_list(self);
        let digest = Sha256::digest(bytes.as_bytes());
        let mut out = String::with_capacity(64);
        for b in digest {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}, m={}, edges={:?})", self.vertex_count, self.endpoints.len(), self.endpoints)
    }
}

/// Everything `classify` asserts about a cubic multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicCertificate {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub simple: bool,
    pub connected: bool,
    pub bridgeless: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Cubic(CubicCertificate),
    /// Not cubic, with a distinguishing vertex and its degree.
    NotCubic { vertex: VertexId, degree: usize },
}

/// Checks cubicity and reports the basic structure flags.
///
/// Non-cubic input is a reported outcome, not an error.
pub fn classify(g: &Multigraph) -> Classification {
    for v in 0..g.vertex_count() {
        if g.degree(v) != 3 {
            return Classification::NotCubic { vertex: v, degree: g.degree(v) };
        }
    }
    Classification::Cubic(CubicCertificate {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        simple: g.is_simple(),
        connected: g.is_connected(),
        bridgeless: crate::structure::bridge_edges(g).is_empty(),
    })
}
