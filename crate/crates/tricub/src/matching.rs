//! Perfect matchings, T-joins, and parity subgraphs.
//!
//! The optimizing routines run on two independent backends: a blossom
//! (matching-based) solver and an exhaustive subset scan. Both produce the
//! same canonical answer, which the test suite exploits as a cross-check.

use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::structure::ExpansionResult;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },
    #[error("graph has a bridge (edge {bridge}), which this routine does not support")]
    BridgedInput { bridge: EdgeId },
    #[error("exhaustive scan supports at most {cap} edges, graph has {edges}")]
    TooManyEdgesForScan { edges: usize, cap: usize },
    #[error("more than {limit} objects; enumeration truncated")]
    EnumerationTruncated { limit: usize },
    #[error("no two-factor exists")]
    NoTwoFactor,
    #[error("degree profile unsupported: need all degrees 3, or all 3 except one vertex of degree 2")]
    UnsupportedDegreeProfile,
    #[error("a matching guaranteed by theory was not found: {0}")]
    MissingGuaranteedMatching(&'static str),
    #[error("edge set is not a parity subgraph of the host")]
    NotAParitySubgraph,
    #[error("expansion does not cover every degree-3 vertex of the parity subgraph (vertex {vertex})")]
    UncoveredOddVertex { vertex: VertexId },
    #[error("edge set is not a perfect matching of the host")]
    NotAPerfectMatching,
}

/// Exhaustive-scan backends refuse graphs with more edges than this.
pub const MAX_SCAN_EDGES: usize = 24;

/// Which engine computes minimum parity subgraphs and T-joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityBackend {
    /// Shortest paths plus blossom matching on the metric closure.
    Blossom,
    /// Scan of all edge subsets (up to [`MAX_SCAN_EDGES`] edges).
    Exhaustive,
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// Degrees of the subgraph spanned by `edges`; `None` if an id repeats or is
/// out of range.
pub fn subgraph_degrees(g: &Multigraph, edges: &[EdgeId]) -> Option<Vec<usize>> {
    let mut seen = vec![false; g.edge_count()];
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edges {
        if e >= g.edge_count() || seen[e] {
            return None;
        }
        seen[e] = true;
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    Some(deg)
}

/// Every vertex covered exactly once.
pub fn is_perfect_matching(g: &Multigraph, edges: &[EdgeId]) -> bool {
    subgraph_degrees(g, edges).is_some_and(|deg| deg.iter().all(|&d| d == 1))
}

/// Every vertex of even degree.
pub fn is_even_subgraph(g: &Multigraph, edges: &[EdgeId]) -> bool {
    subgraph_degrees(g, edges).is_some_and(|deg| deg.iter().all(|&d| d % 2 == 0))
}

/// Every vertex of the same degree parity as in the host.
pub fn is_parity_subgraph(g: &Multigraph, edges: &[EdgeId]) -> bool {
    subgraph_degrees(g, edges)
        .is_some_and(|deg| (0..g.vertex_count()).all(|v| deg[v] % 2 == g.degree(v) % 2))
}

// ---------------------------------------------------------------------------
// Subgraph helpers
// ---------------------------------------------------------------------------

/// `g` minus the flagged edges, plus a map from new edge ids to old.
fn delete_edges(g: &Multigraph, drop: &[bool]) -> (Multigraph, Vec<EdgeId>) {
    let mut endpoints = Vec::new();
    let mut edge_map = Vec::new();
    for (e, &dropped) in drop.iter().enumerate() {
        if !dropped {
            endpoints.push(g.endpoints(e));
            edge_map.push(e);
        }
    }
    let sub = Multigraph::from_edges(g.vertex_count(), &endpoints)
        .expect("deleting edges keeps the graph valid");
    (sub, edge_map)
}

/// `g` minus the flagged vertices and their edges, plus maps back to the
/// host labels.
fn delete_vertices(g: &Multigraph, drop: &[bool]) -> (Multigraph, Vec<VertexId>, Vec<EdgeId>) {
    let vertex_map: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| !drop[v]).collect();
    let mut new_of = vec![usize::MAX; g.vertex_count()];
    for (nv, &v) in vertex_map.iter().enumerate() {
        new_of[v] = nv;
    }
    let mut endpoints = Vec::new();
    let mut edge_map = Vec::new();
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if !drop[u] && !drop[v] {
            endpoints.push((new_of[u], new_of[v]));
            edge_map.push(e);
        }
    }
    let sub = Multigraph::from_edges(vertex_map.len(), &endpoints)
        .expect("deleting vertices keeps the graph valid");
    (sub, vertex_map, edge_map)
}

// ---------------------------------------------------------------------------
// Blossom wrapper
// ---------------------------------------------------------------------------

/// A perfect matching of `g`, or `None` if there is none. Parallel edges are
/// collapsed to the smallest id. Blossom-based; no size limits.
pub fn find_perfect_matching(g: &Multigraph) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if !n.is_multiple_of(2) {
        return None;
    }
    // one entry per vertex pair, smallest edge id wins
    let mut rep: std::collections::BTreeMap<(VertexId, VertexId), EdgeId> =
        std::collections::BTreeMap::new();
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let key = (u.min(v), u.max(v));
        rep.entry(key).or_insert(e);
    }
    let edges: Vec<(usize, usize, i32)> = rep.keys().map(|&(u, v)| (u, v, 1)).collect();
    let mates = mwmatching::Matching::new(edges).max_cardinality().solve();
    let mut out = Vec::with_capacity(n / 2);
    for v in 0..n {
        let mate = mates.get(v).copied().unwrap_or(mwmatching::SENTINEL);
        if mate == mwmatching::SENTINEL {
            return None;
        }
        if v < mate {
            out.push(rep[&(v, mate)]);
        }
    }
    out.sort_unstable();
    Some(out)
}

// ---------------------------------------------------------------------------
// T-joins
// ---------------------------------------------------------------------------

/// BFS tree from `start`: (distance, parent edge) per vertex, unreachable as
/// `usize::MAX`.
fn bfs_tree(g: &Multigraph, start: VertexId) -> (Vec<usize>, Vec<EdgeId>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &e in g.incident_edges(v) {
            let w = g.other_endpoint(e, v);
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = e;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// A minimum-size edge set whose odd-degree vertices are exactly `odd`
/// (`odd[v]` true means vertex `v` must have odd degree). `None` when no
/// such set exists (some component holds an odd number of marked vertices).
/// Shortest-path metric closure plus minimum-weight perfect matching.
fn min_tjoin_any(g: &Multigraph, odd: &[bool]) -> Option<Vec<EdgeId>> {
    let terminals: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| odd[v]).collect();
    if terminals.is_empty() {
        return Some(Vec::new());
    }
    let trees: Vec<(Vec<usize>, Vec<EdgeId>)> =
        terminals.iter().map(|&t| bfs_tree(g, t)).collect();
    let mut pair_edges: Vec<(usize, usize, i32)> = Vec::new();
    let mut max_d = 0usize;
    for (i, tree) in trees.iter().enumerate() {
        for (j, &tj) in terminals.iter().enumerate().skip(i + 1) {
            let d = tree.0[tj];
            if d != usize::MAX {
                pair_edges.push((i, j, d as i32));
                max_d = max_d.max(d);
            }
        }
    }
    // maximize sum of (C - d): perfect + minimum total distance
    let c = max_d as i32 + 1;
    for e in &mut pair_edges {
        e.2 = c - e.2;
    }
    let mates = mwmatching::Matching::new(pair_edges).max_cardinality().solve();
    let mut in_join = vec![false; g.edge_count()];
    for i in 0..terminals.len() {
        let j = mates.get(i).copied().unwrap_or(mwmatching::SENTINEL);
        if j == mwmatching::SENTINEL {
            return None;
        }
        if i < j {
            // XOR the BFS path from terminal i to terminal j
            let mut v = terminals[j];
            while v != terminals[i] {
                let e = trees[i].1[v];
                in_join[e] = !in_join[e];
                v = g.other_endpoint(e, v);
            }
        }
    }
    let join: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| in_join[e]).collect();
    debug_assert!({
        let deg = subgraph_degrees(g, &join).expect("join ids are valid");
        (0..g.vertex_count()).all(|v| (deg[v] % 2 == 1) == odd[v])
    });
    Some(join)
}

/// Minimum T-join size with some edges forced in and some forced out;
/// returns the full join (forced edges included). Deleting a forced-in edge
/// flips the required parity at its endpoints.
fn min_tjoin_constrained(
    g: &Multigraph,
    odd: &[bool],
    forced_in: &[EdgeId],
    forced_out: &[EdgeId],
) -> Option<Vec<EdgeId>> {
    let mut drop = vec![false; g.edge_count()];
    let mut target = odd.to_vec();
    for &e in forced_in {
        drop[e] = true;
        let (u, v) = g.endpoints(e);
        target[u] = !target[u];
        target[v] = !target[v];
    }
    for &e in forced_out {
        drop[e] = true;
    }
    let (sub, edge_map) = delete_edges(g, &drop);
    let rest = min_tjoin_any(&sub, &target)?;
    let mut join: Vec<EdgeId> = rest.into_iter().map(|e| edge_map[e]).collect();
    join.extend_from_slice(forced_in);
    join.sort_unstable();
    Some(join)
}

/// Minimum-size subgraph with odd degree exactly at the marked vertices,
/// canonicalized to the lexicographically smallest edge-id set among all
/// minimum solutions. `None` when infeasible.
pub fn min_tjoin(g: &Multigraph, odd: &[bool]) -> Option<Vec<EdgeId>> {
    let base = min_tjoin_any(g, odd)?;
    let k = base.len();
    let mut forced_in: Vec<EdgeId> = Vec::new();
    let mut forced_out: Vec<EdgeId> = Vec::new();
    for e in 0..g.edge_count() {
        if forced_in.len() == k {
            break;
        }
        forced_in.push(e);
        match min_tjoin_constrained(g, odd, &forced_in, &forced_out) {
            Some(j) if j.len() == k => {}
            _ => {
                forced_in.pop();
                forced_out.push(e);
            }
        }
    }
    debug_assert_eq!(forced_in.len(), k);
    Some(forced_in)
}

// ---------------------------------------------------------------------------
// Minimum parity subgraphs
// ---------------------------------------------------------------------------

fn odd_degree_flags(g: &Multigraph) -> Vec<bool> {
    (0..g.vertex_count()).map(|v| g.degree(v) % 2 == 1).collect()
}

/// Exhaustive scan over all edge subsets in Gray-code order, returning the
/// lexicographically smallest minimum parity subgraph.
fn min_parity_exhaustive(g: &Multigraph) -> Result<Vec<EdgeId>, MatchingError> {
    let m = g.edge_count();
    if m > MAX_SCAN_EDGES {
        return Err(MatchingError::TooManyEdgesForScan {
            edges: m,
            cap: MAX_SCAN_EDGES,
        });
    }
    let odd = odd_degree_flags(g);
    let mut parity = vec![false; g.vertex_count()];
    let mut mismatch = odd.iter().filter(|&&b| b).count();
    let mut mask: u64 = 0;
    let mut best: Option<(usize, Vec<EdgeId>)> = None;
    let consider = |mask: u64, mismatch: usize, best: &mut Option<(usize, Vec<EdgeId>)>| {
        if mismatch != 0 {
            return;
        }
        let size = mask.count_ones() as usize;
        if best.as_ref().is_none_or(|(bs, _)| size < *bs) {
            let ids = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            *best = Some((size, ids));
        } else if let Some((bs, bv)) = best.as_mut() {
            if size == *bs {
                let ids: Vec<EdgeId> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
                if ids < *bv {
                    *bv = ids;
                }
            }
        }
    };
    consider(mask, mismatch, &mut best);
    for i in 1u64..1 << m {
        let e = i.trailing_zeros() as usize;
        mask ^= 1 << e;
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            parity[w] = !parity[w];
            if parity[w] == odd[w] {
                mismatch -= 1;
            } else {
                mismatch += 1;
            }
        }
        consider(mask, mismatch, &mut best);
    }
    let (_, ids) = best.expect("every graph has a parity subgraph");
    Ok(ids)
}

/// The minimum number of edges in a parity subgraph of `g`.
pub fn min_parity_size(g: &Multigraph, backend: ParityBackend) -> Result<usize, MatchingError> {
    match backend {
        ParityBackend::Blossom => Ok(min_tjoin_any(g, &odd_degree_flags(g))
            .expect("parity targets are component-wise even")
            .len()),
        ParityBackend::Exhaustive => Ok(min_parity_exhaustive(g)?.len()),
    }
}

/// The lexicographically smallest minimum parity subgraph of `g`. Both
/// backends return the identical canonical set.
pub fn min_parity_subgraph(
    g: &Multigraph,
    backend: ParityBackend,
) -> Result<Vec<EdgeId>, MatchingError> {
    match backend {
        ParityBackend::Blossom => Ok(min_tjoin(g, &odd_degree_flags(g))
            .expect("parity targets are component-wise even")),
        ParityBackend::Exhaustive => min_parity_exhaustive(g),
    }
}

/// A maximum even subgraph: the complement of the canonical minimum parity
/// subgraph.
pub fn max_even_subgraph(
    g: &Multigraph,
    backend: ParityBackend,
) -> Result<Vec<EdgeId>, MatchingError> {
    let j = min_parity_subgraph(g, backend)?;
    let mut in_j = vec![false; g.edge_count()];
    for &e in &j {
        in_j[e] = true;
    }
    Ok((0..g.edge_count()).filter(|&e| !in_j[e]).collect())
}

// ---------------------------------------------------------------------------
// Matching enumeration and guaranteed matchings
// ---------------------------------------------------------------------------

/// All perfect matchings of `g`, sorted lexicographically. Errs once more
/// than `limit` matchings exist (the list is never silently truncated).
pub fn enumerate_perfect_matchings(
    g: &Multigraph,
    limit: usize,
) -> Result<Vec<Vec<EdgeId>>, MatchingError> {
    fn rec(
        g: &Multigraph,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        limit: usize,
    ) -> Result<(), MatchingError> {
        let Some(v) = (0..g.vertex_count()).find(|&v| !covered[v]) else {
            let mut pm = chosen.clone();
            pm.sort_unstable();
            out.push(pm);
            if out.len() > limit {
                return Err(MatchingError::EnumerationTruncated { limit });
            }
            return Ok(());
        };
        for &e in g.incident_edges(v) {
            let w = g.other_endpoint(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            rec(g, covered, chosen, out, limit)?;
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
        Ok(())
    }
    if !g.vertex_count().is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    rec(
        g,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut out,
        limit,
    )?;
    out.sort();
    Ok(out)
}

fn require_bridgeless_cubic(g: &Multigraph, e: EdgeId) -> Result<(), MatchingError> {
    if e >= g.edge_count() {
        return Err(MatchingError::EdgeOutOfRange {
            edge: e,
            edge_count: g.edge_count(),
        });
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(MatchingError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(&b) = crate::structure::bridge_edges(g).first() {
        return Err(MatchingError::BridgedInput { bridge: b });
    }
    Ok(())
}

/// A perfect matching of a bridgeless cubic graph avoiding edge `e`.
pub fn matching_avoiding(g: &Multigraph, e: EdgeId) -> Result<Vec<EdgeId>, MatchingError> {
    require_bridgeless_cubic(g, e)?;
    let mut drop = vec![false; g.edge_count()];
    drop[e] = true;
    let (sub, edge_map) = delete_edges(g, &drop);
    let pm = find_perfect_matching(&sub)
        .ok_or(MatchingError::MissingGuaranteedMatching("avoiding matching"))?;
    let mut out: Vec<EdgeId> = pm.into_iter().map(|f| edge_map[f]).collect();
    out.sort_unstable();
    Ok(out)
}

/// A perfect matching of a bridgeless cubic graph through edge `e`.
pub fn matching_through(g: &Multigraph, e: EdgeId) -> Result<Vec<EdgeId>, MatchingError> {
    require_bridgeless_cubic(g, e)?;
    let (u, v) = g.endpoints(e);
    let mut drop = vec![false; g.vertex_count()];
    drop[u] = true;
    drop[v] = true;
    let (sub, _, edge_map) = delete_vertices(g, &drop);
    let pm = find_perfect_matching(&sub)
        .ok_or(MatchingError::MissingGuaranteedMatching("matching through an edge"))?;
    let mut out: Vec<EdgeId> = pm.into_iter().map(|f| edge_map[f]).collect();
    out.push(e);
    out.sort_unstable();
    Ok(out)
}

/// A spanning subgraph with every degree 2. Supports cubic graphs
/// (complement of a perfect matching) and cubic-except-one-degree-2-vertex
/// graphs such as end blocks (complement of a near-perfect matching
/// exposing that vertex).
pub fn two_factor(g: &Multigraph) -> Result<Vec<EdgeId>, MatchingError> {
    let deg2: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
    let ok = (0..g.vertex_count()).all(|v| g.degree(v) == 3 || deg2.contains(&v));
    if !ok || deg2.len() > 1 {
        return Err(MatchingError::UnsupportedDegreeProfile);
    }
    let matching: Vec<EdgeId> = if let Some(&x) = deg2.first() {
        let mut drop = vec![false; g.vertex_count()];
        drop[x] = true;
        let (sub, _, edge_map) = delete_vertices(g, &drop);
        let pm = find_perfect_matching(&sub).ok_or(MatchingError::NoTwoFactor)?;
        pm.into_iter().map(|f| edge_map[f]).collect()
    } else {
        find_perfect_matching(g).ok_or(MatchingError::NoTwoFactor)?
    };
    let mut in_m = vec![false; g.edge_count()];
    for &e in &matching {
        in_m[e] = true;
    }
    let factor: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !in_m[e]).collect();
    debug_assert!(subgraph_degrees(g, &factor)
        .is_some_and(|deg| deg.iter().all(|&d| d == 2)));
    Ok(factor)
}

// ---------------------------------------------------------------------------
// Lifting a parity subgraph to a matching of an expansion
// ---------------------------------------------------------------------------

/// Lifts a parity subgraph `j` of the host to a perfect matching of the
/// expansion: host edges of `j` keep their ids; at each expanded vertex of
/// degree 1 in `j` the triangle edge opposite the absorbed corner completes
/// the cover. Requires the expansion to include every degree-3 vertex of `j`
/// and the host to be cubic.
pub fn lift_parity(
    g: &Multigraph,
    exp: &ExpansionResult,
    j: &[EdgeId],
) -> Result<Vec<EdgeId>, MatchingError> {
    if !is_parity_subgraph(g, j) {
        return Err(MatchingError::NotAParitySubgraph);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(MatchingError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let deg = subgraph_degrees(g, j).expect("validated above");
    let mut lifted = j.to_vec();
    for (v, &d) in deg.iter().enumerate() {
        if d == 3 && exp.index_of(v).is_none() {
            return Err(MatchingError::UncoveredOddVertex { vertex: v });
        }
    }
    for &u in &exp.expanded {
        if deg[u] == 1 {
            let e = j
                .iter()
                .copied()
                .find(|&e| {
                    let (x, y) = g.endpoints(e);
                    x == u || y == u
                })
                .expect("degree-1 vertex has an incident join edge");
            lifted.push(
                exp.opposite_triangle_edge(u, e)
                    .expect("join edge is absorbed by a corner"),
            );
        }
    }
    lifted.sort_unstable();
    if !is_perfect_matching(&exp.graph, &lifted) {
        return Err(MatchingError::NotAPerfectMatching);
    }
    Ok(lifted)
}

// ---------------------------------------------------------------------------
// Transferring a host matching across subdivision-with-gadgets
// ---------------------------------------------------------------------------

/// A matching certificate produced by [`transfer_matching`].
#[derive(Clone, Debug)]
pub struct TransferResult {
    /// Expansion of the attachment graph at the roots of matched attached
    /// edges.
    pub expansion: ExpansionResult,
    /// A verified perfect matching of `expansion.graph`.
    pub matching: Vec<EdgeId>,
    /// The expanded roots, one per attached edge lying in the host matching.
    pub expanded_roots: Vec<VertexId>,
}

/// Carries a perfect matching `m` of the host across a subdivide-and-attach
/// construction: expanding the subdivision vertex of each attached edge that
/// lies in `m` yields a graph with a perfect matching, built explicitly.
/// The number of expanded vertices equals the number of attached edges in
/// `m`.
pub fn transfer_matching(
    host: &Multigraph,
    att: &crate::structure::AttachResult,
    m: &[EdgeId],
) -> Result<TransferResult, MatchingError> {
    if !is_perfect_matching(host, m) {
        return Err(MatchingError::NotAPerfectMatching);
    }
    let mut sorted = m.to_vec();
    sorted.sort_unstable();
    let matched = |e: EdgeId| sorted.binary_search(&e).is_ok();

    let roots: Vec<VertexId> = att
        .attached
        .iter()
        .zip(&att.roots)
        .filter(|&(&e, _)| matched(e))
        .map(|(_, &w)| w)
        .collect();
    let exp = crate::structure::expand_vertices(&att.graph, &roots)
        .expect("subdivision roots are cubic in the attachment graph");

    // the lex-smallest perfect matching of the gadget minus its apex covers
    // the interior of every gadget copy
    let gadget_graph = att.gadget.graph();
    let mut drop = vec![false; gadget_graph.vertex_count()];
    drop[0] = true;
    let (gsub, _, gmap) = delete_vertices(&gadget_graph, &drop);
    let interior = enumerate_perfect_matchings(&gsub, 64)
        .expect("gadgets are tiny")
        .into_iter()
        .next()
        .expect("gadget minus apex has a perfect matching");
    let interior: Vec<usize> = interior.into_iter().map(|f| gmap[f]).collect();

    let mut n_edges: Vec<EdgeId> = sorted
        .iter()
        .copied()
        .filter(|&e| att.attached.binary_search(&e).is_err())
        .collect();
    for (i, &e) in att.attached.iter().enumerate() {
        for &pos in &interior {
            n_edges.push(att.gadget_edges[i][pos]);
        }
        n_edges.push(att.bridge_edges[i]);
        if matched(e) {
            let (h1, h2) = att.half_edges[i];
            n_edges.push(h1);
            n_edges.push(h2);
        }
    }
    n_edges.sort_unstable();
    if !is_perfect_matching(&exp.graph, &n_edges) {
        return Err(MatchingError::NotAPerfectMatching);
    }
    Ok(TransferResult {
        expansion: exp,
        matching: n_edges,
        expanded_roots: roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        enumerate_simple_cubic, generate, random_cubic, Gadget, GraphName,
    };
    use crate::structure::{expand_vertices, subdivide_attach};

    fn brute_min_parity(g: &Multigraph) -> Vec<EdgeId> {
        let m = g.edge_count();
        assert!(m <= 20);
        let mut best: Option<Vec<EdgeId>> = None;
        for mask in 0u64..1 << m {
            let ids: Vec<EdgeId> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            if !is_parity_subgraph(g, &ids) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => ids.len() < b.len() || (ids.len() == b.len() && ids < *b),
            };
            if better {
                best = Some(ids);
            }
        }
        best.expect("parity subgraph exists")
    }

    #[test]
    fn perfect_matching_counts_frozen() {
        let expect = [
            (GraphName::K4, 3),
            (GraphName::K33, 6),
            (GraphName::P10, 6),
            (GraphName::Theta, 3),
            (GraphName::S10, 0),
        ];
        for (name, count) in expect {
            let g = generate(name);
            let pms = enumerate_perfect_matchings(&g, 1000).unwrap();
            assert_eq!(pms.len(), count, "{name:?}");
            for pm in &pms {
                assert!(is_perfect_matching(&g, pm));
            }
        }
    }

    #[test]
    fn blossom_agrees_with_enumeration() {
        let mut graphs = vec![
            generate(GraphName::K4),
            generate(GraphName::P10),
            generate(GraphName::S10),
            generate(GraphName::S16),
            generate(GraphName::W),
        ];
        graphs.extend(enumerate_simple_cubic(6).unwrap());
        graphs.extend(enumerate_simple_cubic(8).unwrap());
        for g in &graphs {
            let all = enumerate_perfect_matchings(g, 100_000).unwrap();
            match find_perfect_matching(g) {
                Some(pm) => {
                    assert!(is_perfect_matching(g, &pm));
                    assert!(!all.is_empty());
                }
                None => assert!(all.is_empty()),
            }
        }
    }

    #[test]
    fn tjoin_matches_brute_force() {
        for seed in 0..12 {
            let g = random_cubic(8, false, seed).unwrap();
            let brute = brute_min_parity(&g);
            let blossom = min_parity_subgraph(&g, ParityBackend::Blossom).unwrap();
            let scan = min_parity_subgraph(&g, ParityBackend::Exhaustive).unwrap();
            assert_eq!(blossom, brute, "seed {seed}");
            assert_eq!(scan, brute, "seed {seed}");
            assert!(is_parity_subgraph(&g, &blossom));
        }
    }

    #[test]
    fn backends_agree_on_simple_corpus() {
        for n in [4usize, 6, 8] {
            for g in enumerate_simple_cubic(n).unwrap() {
                let a = min_parity_subgraph(&g, ParityBackend::Blossom).unwrap();
                let b = min_parity_subgraph(&g, ParityBackend::Exhaustive).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.len(), min_parity_size(&g, ParityBackend::Blossom).unwrap());
            }
        }
    }

    #[test]
    fn parity_degree_identity_on_corpus() {
        // doubling |E(J)| counts each vertex once plus twice per degree-3
        // vertex of J, for cubic hosts
        for g in [generate(GraphName::P10), generate(GraphName::S10), generate(GraphName::S16)] {
            let j = min_parity_subgraph(&g, ParityBackend::Blossom).unwrap();
            let deg = subgraph_degrees(&g, &j).unwrap();
            let v3 = deg.iter().filter(|&&d| d == 3).count();
            assert_eq!(2 * j.len(), g.vertex_count() + 2 * v3);
        }
    }

    #[test]
    fn frozen_parity_sizes() {
        let s10 = generate(GraphName::S10);
        assert_eq!(min_parity_size(&s10, ParityBackend::Blossom).unwrap(), 6);
        let s16 = generate(GraphName::S16);
        assert_eq!(min_parity_size(&s16, ParityBackend::Blossom).unwrap(), 9);
        let p10 = generate(GraphName::P10);
        assert_eq!(min_parity_size(&p10, ParityBackend::Blossom).unwrap(), 5);
    }

    #[test]
    fn avoiding_and_through_cover_every_edge_of_petersen() {
        let p10 = generate(GraphName::P10);
        for e in 0..p10.edge_count() {
            let avoid = matching_avoiding(&p10, e).unwrap();
            assert!(is_perfect_matching(&p10, &avoid));
            assert!(!avoid.contains(&e));
            let through = matching_through(&p10, e).unwrap();
            assert!(is_perfect_matching(&p10, &through));
            assert!(through.contains(&e));
        }
    }

    #[test]
    fn guaranteed_matchings_reject_bad_hosts() {
        let s10 = generate(GraphName::S10);
        assert!(matches!(
            matching_avoiding(&s10, 0),
            Err(MatchingError::BridgedInput { .. })
        ));
        let w = generate(GraphName::W);
        assert!(matches!(
            matching_avoiding(&w, 0),
            Err(MatchingError::NotCubic { .. })
        ));
    }

    #[test]
    fn two_factor_of_cubic_is_pm_complement() {
        for name in [GraphName::K4, GraphName::P10, GraphName::Theta, GraphName::K33] {
            let g = generate(name);
            let f = two_factor(&g).unwrap();
            let deg = subgraph_degrees(&g, &f).unwrap();
            assert!(deg.iter().all(|&d| d == 2), "{name:?}");
            assert_eq!(f.len(), g.edge_count() - g.vertex_count() / 2);
        }
    }

    #[test]
    fn two_factor_of_end_block_gadgets() {
        // W: triangle through the apex using one of the doubled edges
        let w = generate(GraphName::W);
        let f = two_factor(&w).unwrap();
        assert_eq!(f.len(), 3);
        let deg = subgraph_degrees(&w, &f).unwrap();
        assert!(deg.iter().all(|&d| d == 2));
        let wp = generate(GraphName::Wprime);
        let f = two_factor(&wp).unwrap();
        let deg = subgraph_degrees(&wp, &f).unwrap();
        assert!(deg.iter().all(|&d| d == 2));
        // cubic graph with no perfect matching has no two-factor
        assert_eq!(two_factor(&generate(GraphName::S10)), Err(MatchingError::NoTwoFactor));
        // other profiles rejected
        let path = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(two_factor(&path), Err(MatchingError::UnsupportedDegreeProfile));
    }

    #[test]
    fn lift_turns_minimum_parity_into_matching() {
        for name in [GraphName::S10, GraphName::S16] {
            let g = generate(name);
            let j = min_parity_subgraph(&g, ParityBackend::Blossom).unwrap();
            let deg = subgraph_degrees(&g, &j).unwrap();
            let u: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] == 3).collect();
            assert_eq!(u.len(), 1, "{name:?} needs exactly one expansion");
            let exp = expand_vertices(&g, &u).unwrap();
            let pm = lift_parity(&g, &exp, &j).unwrap();
            assert!(is_perfect_matching(&exp.graph, &pm));
        }
    }

    #[test]
    fn lift_requires_covering_the_odd_vertices() {
        let s10 = generate(GraphName::S10);
        let j = min_parity_subgraph(&s10, ParityBackend::Blossom).unwrap();
        let exp = expand_vertices(&s10, &[2]).unwrap();
        assert!(matches!(
            lift_parity(&s10, &exp, &j),
            Err(MatchingError::UncoveredOddVertex { .. })
        ));
    }

    #[test]
    fn transfer_across_theta_attachment() {
        let theta = generate(GraphName::Theta);
        let att = subdivide_attach(&theta, &[0, 1, 2], Gadget::W).unwrap();
        for pm in enumerate_perfect_matchings(&theta, 10).unwrap() {
            let tr = transfer_matching(&theta, &att, &pm).unwrap();
            assert_eq!(tr.expanded_roots.len(), 1); // exactly one theta edge is matched
            assert!(is_perfect_matching(&tr.expansion.graph, &tr.matching));
        }
    }

    #[test]
    fn transfer_with_no_attached_edge_matched() {
        let k4 = generate(GraphName::K4);
        let att = subdivide_attach(&k4, &[5], Gadget::WPrime).unwrap();
        // matching {1, 4} avoids edge 5 entirely
        let tr = transfer_matching(&k4, &att, &[1, 4]).unwrap();
        assert!(tr.expanded_roots.is_empty());
        assert_eq!(tr.expansion.graph, att.graph);
        assert!(is_perfect_matching(&att.graph, &tr.matching));
        // matching {0, 5} passes through edge 5
        let tr = transfer_matching(&k4, &att, &[0, 5]).unwrap();
        assert_eq!(tr.expanded_roots, vec![4]);
        assert!(is_perfect_matching(&tr.expansion.graph, &tr.matching));
    }
}
