//! Structural operations on multigraphs: bridges and block decomposition,
//! triangle expansion and contraction, and edge subdivision with gadget
//! attachment.

use crate::graph::{EdgeId, Multigraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },
    #[error("selection contains duplicates")]
    DuplicateSelection,
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotDegreeThree { vertex: VertexId, degree: usize },
    #[error("vertices {corners:?} do not span a triangle: {reason}")]
    NotATriangle {
        corners: [VertexId; 3],
        reason: &'static str,
    },
    #[error("contracting the triangle would turn edge {edge} into a loop")]
    ContractionCreatesLoop { edge: EdgeId },
    #[error("edge {edge} is not a bridge")]
    NotABridge { edge: EdgeId },
}

// ---------------------------------------------------------------------------
// Bridges, cut vertices, blocks
// ---------------------------------------------------------------------------

/// A maximal 2-connected piece of the graph together with its link to the
/// rest. An end block is a block containing exactly one cut vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndBlock {
    /// Index into `BlockDecomposition::blocks`.
    pub block: usize,
    /// The unique cut vertex of the block, in host labels.
    pub attachment: VertexId,
    /// The block as a standalone graph.
    pub graph: Multigraph,
    /// Block vertex -> host vertex (ascending).
    pub vertex_map: Vec<VertexId>,
    /// Block edge -> host edge (ascending).
    pub edge_map: Vec<EdgeId>,
}

impl EndBlock {
    /// The attachment vertex in block-local labels.
    pub fn attachment_local(&self) -> VertexId {
        self.vertex_map
            .binary_search(&self.attachment)
            .expect("attachment lies in the block")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge ids of each block, sorted; blocks ordered by smallest edge id.
    pub blocks: Vec<Vec<EdgeId>>,
    /// All cut vertices, sorted.
    pub cut_vertices: Vec<VertexId>,
    /// All bridges, sorted. A bridge forms a block of its own.
    pub bridges: Vec<EdgeId>,
    /// Blocks with exactly one cut vertex, in block order.
    pub end_blocks: Vec<EndBlock>,
}

struct Frame {
    v: VertexId,
    parent_edge: Option<EdgeId>,
    idx: usize,
    children: usize,
}

/// Blocks, cut vertices, and bridges of `g` (per component; parallel edges
/// handled). Iterative lowpoint computation.
pub fn block_decomposition(g: &Multigraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut bridges: Vec<EdgeId> = Vec::new();
    let mut cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![Frame {
            v: root,
            parent_edge: None,
            idx: 0,
            children: 0,
        }];
        while !stack.is_empty() {
            let fi = stack.len() - 1;
            let v = stack[fi].v;
            let incident = g.incident_edges(v);
            if stack[fi].idx < incident.len() {
                let e = incident[stack[fi].idx];
                stack[fi].idx += 1;
                if stack[fi].parent_edge == Some(e) {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if disc[w] == usize::MAX {
                    stack[fi].children += 1;
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent_edge: Some(e),
                        idx: 0,
                        children: 0,
                    });
                } else if disc[w] < disc[v] {
                    // Back edge to an ancestor; the reverse sighting
                    // (disc[w] > disc[v]) is skipped.
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let frame = stack.pop().expect("loop guard keeps the stack nonempty");
                if let Some(parent) = stack.last() {
                    let p = parent.v;
                    let e = frame.parent_edge.expect("non-root has a parent edge");
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(top_e) = edge_stack.pop() {
                            block.push(top_e);
                            if top_e == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                        if parent.parent_edge.is_some() {
                            cut[p] = true;
                        }
                    }
                    if low[v] > disc[p] {
                        bridges.push(e);
                    }
                } else if frame.children >= 2 {
                    cut[v] = true;
                }
            }
        }
    }

    blocks.sort_by_key(|b| b[0]);
    bridges.sort_unstable();
    let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| cut[v]).collect();

    let mut end_blocks = Vec::new();
    for (idx, block) in blocks.iter().enumerate() {
        let mut vertices: Vec<VertexId> = block
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let cuts: Vec<VertexId> = vertices.iter().copied().filter(|&v| cut[v]).collect();
        if cuts.len() != 1 {
            continue;
        }
        let local_edges: Vec<(VertexId, VertexId)> = block
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                let lu = vertices.binary_search(&u).expect("endpoint in block");
                let lv = vertices.binary_search(&v).expect("endpoint in block");
                (lu, lv)
            })
            .collect();
        let graph = Multigraph::from_edges(vertices.len(), &local_edges)
            .expect("block subgraph is loop-free");
        end_blocks.push(EndBlock {
            block: idx,
            attachment: cuts[0],
            graph,
            vertex_map: vertices,
            edge_map: block.clone(),
        });
    }

    BlockDecomposition {
        blocks,
        cut_vertices,
        bridges,
        end_blocks,
    }
}

/// All bridges of `g`, sorted ascending.
pub fn bridge_edges(g: &Multigraph) -> Vec<EdgeId> {
    block_decomposition(g).bridges
}

fn component_size_avoiding(g: &Multigraph, start: VertexId, skip: &[EdgeId]) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut size = 1;
    while let Some(v) = queue.pop_front() {
        for &e in g.incident_edges(v) {
            if skip.contains(&e) {
                continue;
            }
            let w = g.other_endpoint(e, v);
            if !seen[w] {
                seen[w] = true;
                size += 1;
                queue.push_back(w);
            }
        }
    }
    size
}

/// Whether bridge `e` cuts off a side of at most `threshold` vertices.
/// Errors if `e` is out of range or not a bridge.
pub fn is_trivial_bridge(
    g: &Multigraph,
    e: EdgeId,
    threshold: usize,
) -> Result<bool, StructureError> {
    if e >= g.edge_count() {
        return Err(StructureError::EdgeOutOfRange {
            edge: e,
            edge_count: g.edge_count(),
        });
    }
    if !bridge_edges(g).contains(&e) {
        return Err(StructureError::NotABridge { edge: e });
    }
    let (u, v) = g.endpoints(e);
    let skip = [e];
    let side_u = component_size_avoiding(g, u, &skip);
    let side_v = component_size_avoiding(g, v, &skip);
    Ok(side_u.min(side_v) <= threshold)
}

/// Connected with no edge cut of size one or two.
pub fn is_three_edge_connected(g: &Multigraph) -> bool {
    if !g.is_connected() || g.vertex_count() < 2 {
        return false;
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if !bridge_edges(g).is_empty() {
        return false;
    }
    for e in 0..m {
        for f in e + 1..m {
            if component_size_avoiding(g, 0, &[e, f]) != n {
                return false;
            }
        }
    }
    true
}

/// All triangles of `g` as sorted vertex triples (parallel edges do not
/// multiply a triangle).
pub fn triangles(g: &Multigraph) -> Vec<[VertexId; 3]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.edges_between(a, b).is_empty() {
                continue;
            }
            for c in b + 1..n {
                if !g.edges_between(a, c).is_empty() && !g.edges_between(b, c).is_empty() {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Triangle expansion
// ---------------------------------------------------------------------------

/// Result of replacing each selected degree-3 vertex by a triangle.
///
/// For the i-th expanded vertex `u` (ascending), the triangle corners are
/// `[u, n + 2i, n + 2i + 1]` where `n` is the host order. The incident edges
/// of `u`, in ascending id order, stay attached to corners 0, 1, 2
/// respectively and keep their ids. Triangle edges get ids `m + 3i`
/// (corner 0 - corner 1), `m + 3i + 1` (corner 0 - corner 2), and
/// `m + 3i + 2` (corner 1 - corner 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    pub graph: Multigraph,
    /// The expanded vertices, ascending.
    pub expanded: Vec<VertexId>,
    /// Triangle corners per expanded vertex.
    pub corners: Vec<[VertexId; 3]>,
    /// Triangle edge ids per expanded vertex.
    pub corner_edges: Vec<[EdgeId; 3]>,
    /// Original incident edges per expanded vertex, ascending; entry k is
    /// the edge absorbed by corner k.
    pub absorbed: Vec<[EdgeId; 3]>,
    /// Host edge id -> expansion edge id (the identity by construction,
    /// recorded so certificates need no convention).
    pub edge_lift: Vec<EdgeId>,
}

impl ExpansionResult {
    pub fn index_of(&self, u: VertexId) -> Option<usize> {
        self.expanded.binary_search(&u).ok()
    }

    /// The corner of `u`'s triangle that absorbed host edge `e`.
    pub fn corner_for(&self, u: VertexId, e: EdgeId) -> Option<VertexId> {
        let i = self.index_of(u)?;
        let k = self.absorbed[i].iter().position(|&x| x == e)?;
        Some(self.corners[i][k])
    }

    /// The triangle edge of `u` not incident to the corner that absorbed
    /// host edge `e` (the edge joining the other two corners).
    pub fn opposite_triangle_edge(&self, u: VertexId, e: EdgeId) -> Option<EdgeId> {
        let i = self.index_of(u)?;
        let k = self.absorbed[i].iter().position(|&x| x == e)?;
        Some(self.corner_edges[i][2 - k])
    }
}

/// Replaces each vertex in `us` (must have degree 3) by a triangle.
pub fn expand_vertices(
    g: &Multigraph,
    us: &[VertexId],
) -> Result<ExpansionResult, StructureError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut expanded = us.to_vec();
    expanded.sort_unstable();
    if expanded.windows(2).any(|w| w[0] == w[1]) {
        return Err(StructureError::DuplicateSelection);
    }
    for &u in &expanded {
        if u >= n {
            return Err(StructureError::VertexOutOfRange {
                vertex: u,
                vertex_count: n,
            });
        }
        if g.degree(u) != 3 {
            return Err(StructureError::NotDegreeThree {
                vertex: u,
                degree: g.degree(u),
            });
        }
    }

    let mut endpoints: Vec<(VertexId, VertexId)> = g.edges().to_vec();
    let mut corners = Vec::with_capacity(expanded.len());
    let mut corner_edges = Vec::with_capacity(expanded.len());
    let mut absorbed = Vec::with_capacity(expanded.len());
    for (i, &u) in expanded.iter().enumerate() {
        let c1 = n + 2 * i;
        let c2 = n + 2 * i + 1;
        let inc = g.incident_edges(u);
        let moved: [EdgeId; 3] = [inc[0], inc[1], inc[2]];
        for (e, c) in [(moved[1], c1), (moved[2], c2)] {
            if endpoints[e].0 == u {
                endpoints[e].0 = c;
            } else {
                endpoints[e].1 = c;
            }
        }
        endpoints.push((u, c1));
        endpoints.push((u, c2));
        endpoints.push((c1, c2));
        corners.push([u, c1, c2]);
        corner_edges.push([m + 3 * i, m + 3 * i + 1, m + 3 * i + 2]);
        absorbed.push(moved);
    }

    let graph = Multigraph::from_edges(n + 2 * expanded.len(), &endpoints)
        .expect("expansion introduces no loops");
    Ok(ExpansionResult {
        graph,
        expanded,
        corners,
        corner_edges,
        absorbed,
        edge_lift: (0..m).collect(),
    })
}

// ---------------------------------------------------------------------------
// Triangle contraction
// ---------------------------------------------------------------------------

/// Result of contracting a triangle to its smallest corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Multigraph,
    /// New id of the vertex the triangle collapsed to.
    pub merged: VertexId,
    /// The three removed triangle edges, in host labels, ascending.
    pub triangle_edges: [EdgeId; 3],
    /// Host vertex -> new vertex.
    pub vertex_map: Vec<VertexId>,
    /// Host edge -> new edge; `None` for the triangle edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

/// Contracts the triangle spanned by `corners` to the smallest corner,
/// renumbering the remaining vertices and edges in order. Fails if the
/// corners carry a second edge between some pair (it would become a loop).
pub fn contract_triangle(
    g: &Multigraph,
    corners: [VertexId; 3],
) -> Result<ContractionResult, StructureError> {
    let n = g.vertex_count();
    let mut tri = corners;
    tri.sort_unstable();
    let [a, b, c] = tri;
    if a == b || b == c {
        return Err(StructureError::DuplicateSelection);
    }
    for v in tri {
        if v >= n {
            return Err(StructureError::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
    }
    let mut tri_edges = Vec::with_capacity(3);
    for (x, y) in [(a, b), (a, c), (b, c)] {
        let between = g.edges_between(x, y);
        match between.len() {
            0 => {
                return Err(StructureError::NotATriangle {
                    corners: tri,
                    reason: "a corner pair has no edge",
                })
            }
            1 => tri_edges.push(between[0]),
            _ => return Err(StructureError::ContractionCreatesLoop { edge: between[1] }),
        }
    }
    tri_edges.sort_unstable();
    let triangle_edges = [tri_edges[0], tri_edges[1], tri_edges[2]];

    let vertex_map: Vec<VertexId> = (0..n)
        .map(|v| {
            let target = if v == b || v == c { a } else { v };
            target - [b, c].iter().filter(|&&r| r < target).count()
        })
        .collect();
    let m = g.edge_count();
    let mut edge_map = vec![None; m];
    let mut endpoints = Vec::with_capacity(m - 3);
    for (e, slot) in edge_map.iter_mut().enumerate() {
        if triangle_edges.contains(&e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let (nu, nv) = (vertex_map[u], vertex_map[v]);
        debug_assert_ne!(nu, nv, "non-triangle corner pairs were rejected");
        *slot = Some(endpoints.len());
        endpoints.push((nu, nv));
    }
    let graph =
        Multigraph::from_edges(n - 2, &endpoints).expect("contraction introduces no loops");
    Ok(ContractionResult {
        graph,
        merged: vertex_map[a],
        triangle_edges,
        vertex_map,
        edge_map,
    })
}

// ---------------------------------------------------------------------------
// Subdivision with gadget attachment
// ---------------------------------------------------------------------------

use crate::graph::Gadget;

/// Result of subdividing each selected edge and joining the new vertex to a
/// fresh gadget copy by a bridge.
///
/// For the i-th selected edge `e = (u, v)` (ascending id), the subdivision
/// vertex is `w = n + i * (1 + s)` with `s` the gadget order; the gadget
/// copy occupies `w + 1 ..= w + s` with its degree-2 vertex at `w + 1`. The
/// half `u - w` keeps id `e`; appended per edge are the half `w - v`, the
/// bridge `w - (w + 1)`, and the gadget's internal edges in its own order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachResult {
    pub graph: Multigraph,
    pub gadget: Gadget,
    /// The subdivided host edges, ascending.
    pub attached: Vec<EdgeId>,
    /// Subdivision vertex per attached edge.
    pub roots: Vec<VertexId>,
    /// Per attached edge `e = (u, v)`: (id of half `u - w`, id of half
    /// `w - v`). The first is `e` itself.
    pub half_edges: Vec<(EdgeId, EdgeId)>,
    /// Bridge edge per attached edge.
    pub bridge_edges: Vec<EdgeId>,
    /// Gadget vertices per attached edge, ascending; first is the apex the
    /// bridge lands on.
    pub gadget_vertices: Vec<Vec<VertexId>>,
    /// Gadget internal edge ids per attached edge.
    pub gadget_edges: Vec<Vec<EdgeId>>,
}

pub fn subdivide_attach(
    g: &Multigraph,
    edges: &[EdgeId],
    gadget: Gadget,
) -> Result<AttachResult, StructureError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut attached = edges.to_vec();
    attached.sort_unstable();
    if attached.windows(2).any(|w| w[0] == w[1]) {
        return Err(StructureError::DuplicateSelection);
    }
    if let Some(&e) = attached.iter().find(|&&e| e >= m) {
        return Err(StructureError::EdgeOutOfRange {
            edge: e,
            edge_count: m,
        });
    }

    let s = gadget.vertex_count();
    let internal = gadget.graph();
    let mut endpoints: Vec<(VertexId, VertexId)> = g.edges().to_vec();
    let mut roots = Vec::new();
    let mut half_edges = Vec::new();
    let mut bridge_edges = Vec::new();
    let mut gadget_vertices = Vec::new();
    let mut gadget_edges = Vec::new();
    for (i, &e) in attached.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        let w = n + i * (1 + s);
        let apex = w + 1;
        endpoints[e] = (u, w);
        let second = endpoints.len();
        endpoints.push((w, v));
        let bridge = endpoints.len();
        endpoints.push((w, apex));
        let first_internal = endpoints.len();
        for &(x, y) in internal.edges() {
            endpoints.push((apex + x, apex + y));
        }
        roots.push(w);
        half_edges.push((e, second));
        bridge_edges.push(bridge);
        gadget_vertices.push((apex..apex + s).collect());
        gadget_edges.push((first_internal..first_internal + internal.edge_count()).collect());
    }

    let graph = Multigraph::from_edges(n + attached.len() * (1 + s), &endpoints)
        .expect("subdivision introduces no loops");
    Ok(AttachResult {
        graph,
        gadget,
        attached,
        roots,
        half_edges,
        bridge_edges,
        gadget_vertices,
        gadget_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, is_isomorphic, GraphName};

    #[test]
    fn bridgeless_catalog_graphs_have_no_bridges() {
        for name in [GraphName::K4, GraphName::K33, GraphName::P10, GraphName::Theta] {
            let g = generate(name);
            assert!(bridge_edges(&g).is_empty(), "{name:?}");
            assert!(is_three_edge_connected(&g), "{name:?}");
        }
    }

    #[test]
    fn s10_blocks_and_end_blocks() {
        let s10 = generate(GraphName::S10);
        let dec = block_decomposition(&s10);
        // three bridges from the hub plus three gadget blocks
        assert_eq!(dec.bridges, vec![0, 1, 2]);
        assert_eq!(dec.blocks.len(), 6);
        assert_eq!(dec.cut_vertices, vec![0, 1, 4, 7]);
        assert_eq!(dec.end_blocks.len(), 3);
        let w = generate(GraphName::W);
        for eb in &dec.end_blocks {
            assert!(is_isomorphic(&eb.graph, &w));
            assert!([1, 4, 7].contains(&eb.attachment));
            assert_eq!(eb.graph.degree(eb.attachment_local()), 2);
            // maps are consistent with the host
            for (le, &he) in eb.edge_map.iter().enumerate() {
                let (lu, lv) = eb.graph.endpoints(le);
                let (hu, hv) = s10.endpoints(he);
                assert_eq!(
                    (eb.vertex_map[lu].min(eb.vertex_map[lv]), eb.vertex_map[lu].max(eb.vertex_map[lv])),
                    (hu.min(hv), hu.max(hv))
                );
            }
        }
        assert!(is_trivial_bridge(&s10, 0, 3).unwrap());
        assert!(!is_trivial_bridge(&s10, 0, 2).unwrap());
        assert_eq!(
            is_trivial_bridge(&s10, 3, 3),
            Err(StructureError::NotABridge { edge: 3 })
        );
        assert!(!is_three_edge_connected(&s10));
    }

    #[test]
    fn theta_is_three_edge_connected_but_not_four() {
        let theta = generate(GraphName::Theta);
        assert!(is_three_edge_connected(&theta));
        // removing two of three parallel edges keeps one path
        let two = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(!is_three_edge_connected(&two));
    }

    #[test]
    fn shared_vertex_makes_two_end_blocks_without_bridges() {
        // two triangles glued at vertex 0
        let g = Multigraph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
        )
        .unwrap();
        let dec = block_decomposition(&g);
        assert!(dec.bridges.is_empty());
        assert_eq!(dec.cut_vertices, vec![0]);
        assert_eq!(dec.blocks.len(), 2);
        assert_eq!(dec.end_blocks.len(), 2);
    }

    #[test]
    fn expansion_of_k4_at_one_vertex() {
        let k4 = generate(GraphName::K4);
        let exp = expand_vertices(&k4, &[0]).unwrap();
        let h = &exp.graph;
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 9);
        assert!(h.is_cubic());
        assert_eq!(exp.corners, vec![[0, 4, 5]]);
        assert_eq!(exp.corner_edges, vec![[6, 7, 8]]);
        assert_eq!(exp.absorbed, vec![[0, 1, 2]]);
        // absorbed edges keep their ids and follow their corners
        assert_eq!(h.endpoints(0), (0, 1));
        assert_eq!(h.endpoints(1), (4, 2));
        assert_eq!(h.endpoints(2), (5, 3));
        assert_eq!(h.endpoints(6), (0, 4));
        assert_eq!(h.endpoints(7), (0, 5));
        assert_eq!(h.endpoints(8), (4, 5));
        assert_eq!(exp.corner_for(0, 1), Some(4));
        assert_eq!(exp.opposite_triangle_edge(0, 0), Some(8));
        assert_eq!(exp.opposite_triangle_edge(0, 1), Some(7));
        assert_eq!(exp.opposite_triangle_edge(0, 2), Some(6));
        assert_eq!(exp.opposite_triangle_edge(0, 3), None);
        assert_eq!(exp.edge_lift, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn expanding_theta_gives_k4() {
        let theta = generate(GraphName::Theta);
        let exp = expand_vertices(&theta, &[0]).unwrap();
        assert!(is_isomorphic(&exp.graph, &generate(GraphName::K4)));
    }

    #[test]
    fn expansion_rejects_bad_selections() {
        let k4 = generate(GraphName::K4);
        assert_eq!(
            expand_vertices(&k4, &[0, 0]),
            Err(StructureError::DuplicateSelection)
        );
        assert!(matches!(
            expand_vertices(&k4, &[9]),
            Err(StructureError::VertexOutOfRange { .. })
        ));
        let w = generate(GraphName::W);
        assert_eq!(
            expand_vertices(&w, &[0]),
            Err(StructureError::NotDegreeThree {
                vertex: 0,
                degree: 2
            })
        );
    }

    #[test]
    fn contraction_inverts_expansion_exactly() {
        for name in [GraphName::K4, GraphName::K33, GraphName::P10, GraphName::Theta] {
            let g = generate(name);
            for v in 0..g.vertex_count() {
                let exp = expand_vertices(&g, &[v]).unwrap();
                let back = contract_triangle(&exp.graph, exp.corners[0]).unwrap();
                assert_eq!(back.graph, g, "{name:?} at {v}");
                assert_eq!(back.merged, v);
                assert_eq!(back.triangle_edges, exp.corner_edges[0]);
            }
        }
    }

    #[test]
    fn contraction_renumbers_interior_corners() {
        // expand both vertices of theta, then contract the first triangle:
        // the remaining graph must be the single expansion of the second
        let theta = generate(GraphName::Theta);
        let both = expand_vertices(&theta, &[0, 1]).unwrap();
        let back = contract_triangle(&both.graph, both.corners[0]).unwrap();
        let only_second = expand_vertices(&theta, &[1]).unwrap();
        assert!(is_isomorphic(&back.graph, &only_second.graph));
        assert!(back.graph.is_cubic());
    }

    #[test]
    fn contraction_rejects_doubled_corner_pairs() {
        let w = generate(GraphName::W);
        assert_eq!(
            contract_triangle(&w, [0, 1, 2]),
            Err(StructureError::ContractionCreatesLoop { edge: 3 })
        );
        let k33 = generate(GraphName::K33);
        assert!(matches!(
            contract_triangle(&k33, [0, 1, 2]),
            Err(StructureError::NotATriangle { .. })
        ));
    }

    #[test]
    fn attach_w_to_every_theta_edge() {
        let theta = generate(GraphName::Theta);
        let att = subdivide_attach(&theta, &[0, 1, 2], Gadget::W).unwrap();
        let h = &att.graph;
        assert_eq!(h.vertex_count(), 14);
        assert_eq!(h.edge_count(), 21);
        assert!(h.is_cubic());
        assert!(h.is_connected());
        assert_eq!(att.roots, vec![2, 6, 10]);
        let dec = block_decomposition(h);
        assert_eq!(dec.bridges.len(), 3);
        assert_eq!(dec.bridges, att.bridge_edges);
        assert_eq!(dec.end_blocks.len(), 3);
        let w = generate(GraphName::W);
        for eb in &dec.end_blocks {
            assert!(is_isomorphic(&eb.graph, &w));
        }
        // halves: first keeps the host id
        for (i, &(h1, h2)) in att.half_edges.iter().enumerate() {
            assert_eq!(h1, att.attached[i]);
            let (u, w_) = h.endpoints(h1);
            let (w2, v) = h.endpoints(h2);
            assert_eq!(w_, att.roots[i]);
            assert_eq!(w2, att.roots[i]);
            assert_eq!((u, v), theta.endpoints(att.attached[i]));
        }
    }

    #[test]
    fn attach_wprime_to_one_k4_edge() {
        let k4 = generate(GraphName::K4);
        let att = subdivide_attach(&k4, &[5], Gadget::WPrime).unwrap();
        let h = &att.graph;
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.edge_count(), 15);
        assert!(h.is_cubic());
        let dec = block_decomposition(h);
        assert_eq!(dec.bridges, att.bridge_edges);
        assert_eq!(dec.bridges.len(), 1);
        assert_eq!(dec.end_blocks.len(), 2);
        let wp = generate(GraphName::Wprime);
        assert!(dec
            .end_blocks
            .iter()
            .any(|eb| is_isomorphic(&eb.graph, &wp)));
        assert!(is_trivial_bridge(h, att.bridge_edges[0], 5).unwrap());
        assert!(!is_trivial_bridge(h, att.bridge_edges[0], 4).unwrap());
    }

    #[test]
    fn attach_rejects_bad_edges() {
        let k4 = generate(GraphName::K4);
        assert_eq!(
            subdivide_attach(&k4, &[1, 1], Gadget::W),
            Err(StructureError::DuplicateSelection)
        );
        assert!(matches!(
            subdivide_attach(&k4, &[6], Gadget::W),
            Err(StructureError::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn triangle_census() {
        assert_eq!(triangles(&generate(GraphName::P10)), Vec::<[usize; 3]>::new());
        assert_eq!(triangles(&generate(GraphName::K4)).len(), 4);
        let p12 = generate(GraphName::P12);
        let tris = triangles(&p12);
        assert_eq!(tris.len(), 1);
        assert_eq!(tris[0], [0, 10, 11]);
        assert_eq!(triangles(&generate(GraphName::W)).len(), 1);
    }
}
