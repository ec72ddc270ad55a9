//! Cycle covers and double covers.
//!
//! Everything here works with even subgraphs (subgraphs in which every vertex
//! has even degree). A cycle cover is a family of even subgraphs whose union
//! is the whole edge set; its length is the total size of its members, and the
//! depth of an edge is how many members contain it. Specialised covers — an
//! exactly-double cover by five members, a cover by four perfect matchings —
//! get their own certificate types, and transforms connect covers to parity
//! families and to triangle expansions.
//!
//! Enumeration kernels use [`EdgeSet`] masks, so hosts are limited to
//! [`MAX_EDGES`] edges and cycle space dimension [`CYCLE_SPACE_CAP`]. Searches
//! that could run long carry explicit budgets and report honestly whether
//! their answer is exact.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{EdgeSet, MAX_EDGES};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::matching::{
    enumerate_perfect_matchings, is_even_subgraph, is_parity_subgraph, is_perfect_matching,
    subgraph_degrees,
};
use crate::structure::{bridge_edges, expand_vertices, is_three_edge_connected, ExpansionResult};

/// Largest cycle space dimension the even-subgraph enumerator will expand.
pub const CYCLE_SPACE_CAP: usize = 24;

/// Largest cycle space dimension the double-cover search will accept; the
/// completion search is cubic in the number of even subgraphs.
pub const CDC_DIMENSION_CAP: usize = 12;

/// Default cap on how many perfect matchings a cover search will enumerate.
pub const DEFAULT_PM_LIMIT: usize = 5_000;

/// Default node budget for the shortest-cover search.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoversError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("edge {bridge} is a bridge, so it lies on no circuit and covers by even subgraphs cannot exist")]
    BridgedInput { bridge: EdgeId },
    #[error("graph has {edges} edges, more than the {cap} supported by the subset kernels")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("cycle space dimension {dim} exceeds the enumeration cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("more than {limit} perfect matchings exist; a negative answer would be inconclusive")]
    MatchingsTruncated { limit: usize },
    #[error("search budget of {budget} nodes exhausted before any cover was found")]
    SearchTruncated { budget: u64 },
    #[error("no cover with at most {max_members} members satisfies the given constraints")]
    NoCoverWithinLimits { max_members: usize },
    #[error("graph is not 3-edge-connected")]
    NotThreeEdgeConnected,
    #[error("invalid cover: {reason}")]
    InvalidCover { reason: String },
}

// ---------------------------------------------------------------------------
// Cycle space
// ---------------------------------------------------------------------------

/// Dimension of the cycle space: `|E| - |V| + #components`.
pub fn cycle_space_dimension(g: &Multigraph) -> usize {
    g.edge_count() + g.components().len() - g.vertex_count()
}

/// Fundamental cycles of a breadth-first spanning forest, one per non-tree
/// edge.
fn fundamental_cycles(g: &Multigraph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut parent: Vec<VertexId> = (0..n).collect();
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut tree = vec![false; g.edge_count()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident_edges(v) {
                let w = g.other_endpoint(e, v);
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    parent_edge[w] = Some(e);
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let path_to_root = |mut v: VertexId| {
        let mut path = EdgeSet::EMPTY;
        while let Some(e) = parent_edge[v] {
            path.insert(e);
            v = parent[v];
        }
        path
    };
    (0..g.edge_count())
        .filter(|&e| !tree[e])
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let mut cycle = path_to_root(u).xor(path_to_root(v));
            cycle.insert(e);
            cycle
        })
        .collect()
}

/// All even subgraphs as masks, ascending as bitmask integers.
fn even_subgraph_masks(g: &Multigraph) -> Result<Vec<EdgeSet>, CoversError> {
    let m = g.edge_count();
    if m > MAX_EDGES {
        return Err(CoversError::TooManyEdges {
            edges: m,
            cap: MAX_EDGES,
        });
    }
    let basis = fundamental_cycles(g);
    let dim = basis.len();
    if dim > CYCLE_SPACE_CAP {
        return Err(CoversError::DimensionTooLarge {
            dim,
            cap: CYCLE_SPACE_CAP,
        });
    }
    let mut out = Vec::with_capacity(1usize << dim);
    let mut cur = EdgeSet::EMPTY;
    out.push(cur);
    for k in 1u64..(1u64 << dim) {
        // Gray code: consecutive subsets differ in one basis element.
        cur = cur.xor(basis[k.trailing_zeros() as usize]);
        out.push(cur);
    }
    out.sort_unstable();
    Ok(out)
}

/// Every even subgraph of `g` (the empty one included) as sorted edge lists,
/// ordered by size and then lexicographically.
pub fn enumerate_even_subgraphs(g: &Multigraph) -> Result<Vec<Vec<EdgeId>>, CoversError> {
    let mut lists: Vec<Vec<EdgeId>> = even_subgraph_masks(g)?
        .into_iter()
        .map(EdgeSet::to_vec)
        .collect();
    lists.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(lists)
}

/// Indices into `sets` sorted by descending size, ties by lexicographic edge
/// list.
fn size_desc_order(sets: &[EdgeSet]) -> Vec<usize> {
    let keys: Vec<Vec<EdgeId>> = sets.iter().map(|s| s.to_vec()).collect();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&i, &j| {
        keys[j]
            .len()
            .cmp(&keys[i].len())
            .then_with(|| keys[i].cmp(&keys[j]))
    });
    order
}

// ---------------------------------------------------------------------------
// Cover types
// ---------------------------------------------------------------------------

/// A family of even subgraphs whose union is the whole edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    /// Members as sorted edge lists.
    pub members: Vec<Vec<EdgeId>>,
}

impl CycleCover {
    /// Total number of edge slots over all members.
    pub fn length(&self) -> usize {
        self.members.iter().map(|m| m.len()).sum()
    }

    /// Per-edge cover multiplicities, or `None` if a member repeats an edge
    /// or mentions one outside the host.
    pub fn multiplicities(&self, g: &Multigraph) -> Option<Vec<usize>> {
        let mut mult = vec![0usize; g.edge_count()];
        for member in &self.members {
            let mut seen = vec![false; g.edge_count()];
            for &e in member {
                if e >= g.edge_count() || seen[e] {
                    return None;
                }
                seen[e] = true;
                mult[e] += 1;
            }
        }
        Some(mult)
    }
}

/// A cover of the edge set by four perfect matchings (repeats allowed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourPmCover {
    pub matchings: [Vec<EdgeId>; 4],
}

/// A cover by five even subgraphs in which every edge has depth exactly two.
/// `members[0]` is always a largest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveCdc {
    pub members: [Vec<EdgeId>; 5],
}

/// Four parity subgraphs that together cover the edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityFamily {
    pub members: [Vec<EdgeId>; 4],
    /// Largest number of members sharing one edge.
    pub max_edge_multiplicity: usize,
}

// ---------------------------------------------------------------------------
// Shortest cycle cover
// ---------------------------------------------------------------------------

/// Knobs for [`scc_exact_with`].
#[derive(Clone, Copy, Debug)]
pub struct SccOptions {
    /// Largest number of members a cover may use.
    pub max_members: usize,
    /// Optional cap on per-edge depth (e.g. `Some(2)` for covers in which no
    /// edge is used more than twice).
    pub max_depth: Option<usize>,
    /// How many branch-and-bound nodes to explore before giving up on
    /// exactness.
    pub node_budget: u64,
}

impl Default for SccOptions {
    fn default() -> Self {
        SccOptions {
            max_members: 4,
            max_depth: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Outcome of the shortest-cover search.
#[derive(Clone, Debug)]
pub struct SccResult {
    /// Length of the best cover found.
    pub length: usize,
    pub cover: CycleCover,
    /// True when `length` is known optimal: either it meets the degree lower
    /// bound (so no cover of any kind beats it), or the search space allowed
    /// by the options was exhausted (so it is the minimum over covers obeying
    /// those options).
    pub exact: bool,
    /// Branch-and-bound nodes explored.
    pub nodes: u64,
}

/// Shortest cycle cover using at most `max_members` even subgraphs.
///
/// The returned length is an upper bound for the true shortest cover and is
/// tight whenever `exact` is set. Errs on bridged input, since a bridge lies
/// on no circuit.
pub fn scc_exact(g: &Multigraph, max_members: usize) -> Result<SccResult, CoversError> {
    scc_exact_with(
        g,
        SccOptions {
            max_members,
            ..SccOptions::default()
        },
    )
}

struct SccCtx {
    full: EdgeSet,
    cands: Vec<EdgeSet>,
    by_edge: Vec<Vec<usize>>,
    max_members: usize,
    max_depth: Option<usize>,
    node_budget: u64,
    root_lb: usize,
    vertex_edges: Vec<Vec<EdgeId>>,
}

struct SccState {
    chosen: Vec<EdgeSet>,
    mult: Vec<u8>,
    forbidden: Vec<bool>,
    best_len: usize,
    best: Vec<EdgeSet>,
    nodes: u64,
    truncated: bool,
    done: bool,
}

impl SccCtx {
    /// Admissible bound on the extra length any completion must add: every
    /// vertex needs an even number of further edge slots, at least one per
    /// uncovered incident edge; each slot is shared by two vertices.
    fn lower_bound_add(&self, covered: EdgeSet) -> usize {
        let mut total = 0usize;
        for edges in &self.vertex_edges {
            let unc = edges.iter().filter(|&&e| !covered.contains(e)).count();
            total += unc + (unc & 1);
        }
        total / 2
    }
}

fn scc_dive(ctx: &SccCtx, st: &mut SccState, covered: EdgeSet, len: usize) {
    if st.done || st.truncated {
        return;
    }
    if covered == ctx.full {
        if len < st.best_len {
            st.best_len = len;
            st.best = st.chosen.clone();
            if st.best_len <= ctx.root_lb {
                st.done = true;
            }
        }
        return;
    }
    if st.chosen.len() == ctx.max_members {
        return;
    }
    if len + ctx.lower_bound_add(covered) >= st.best_len {
        return;
    }
    let e = ctx
        .full
        .minus(covered)
        .iter()
        .next()
        .expect("some edge is uncovered");
    let mut marked: Vec<usize> = Vec::new();
    for &ci in &ctx.by_edge[e] {
        if st.forbidden[ci] {
            continue;
        }
        let cand = ctx.cands[ci];
        if let Some(cap) = ctx.max_depth {
            if cand.iter().any(|f| usize::from(st.mult[f]) >= cap) {
                continue;
            }
        }
        st.nodes += 1;
        if st.nodes > ctx.node_budget {
            st.truncated = true;
            break;
        }
        for f in cand.iter() {
            st.mult[f] += 1;
        }
        st.chosen.push(cand);
        scc_dive(ctx, st, covered.union(cand), len + cand.len());
        st.chosen.pop();
        for f in cand.iter() {
            st.mult[f] -= 1;
        }
        if st.done || st.truncated {
            break;
        }
        // Covers containing `cand` are fully explored; a completion that
        // uses it again would be a permutation of one already seen.
        st.forbidden[ci] = true;
        marked.push(ci);
    }
    for ci in marked {
        st.forbidden[ci] = false;
    }
}

/// [`scc_exact`] with explicit member, depth, and budget options.
pub fn scc_exact_with(g: &Multigraph, opts: SccOptions) -> Result<SccResult, CoversError> {
    if let Some(&bridge) = bridge_edges(g).first() {
        return Err(CoversError::BridgedInput { bridge });
    }
    let m = g.edge_count();
    let masks = even_subgraph_masks(g)?;
    let order = size_desc_order(&masks);
    let cands: Vec<EdgeSet> = order
        .into_iter()
        .map(|i| masks[i])
        .filter(|s| !s.is_empty())
        .collect();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, cand) in cands.iter().enumerate() {
        for e in cand.iter() {
            by_edge[e].push(ci);
        }
    }
    let ctx = SccCtx {
        full: EdgeSet::full(m),
        by_edge,
        max_members: opts.max_members,
        max_depth: opts.max_depth,
        node_budget: opts.node_budget,
        root_lb: 0,
        vertex_edges: (0..g.vertex_count())
            .map(|v| g.incident_edges(v).to_vec())
            .collect(),
        cands,
    };
    let root_lb = ctx.lower_bound_add(EdgeSet::EMPTY);
    let ctx = SccCtx { root_lb, ..ctx };
    let n_cands = ctx.cands.len();
    let mut st = SccState {
        chosen: Vec::new(),
        mult: vec![0u8; m],
        forbidden: vec![false; n_cands],
        best_len: usize::MAX,
        best: Vec::new(),
        nodes: 0,
        truncated: false,
        done: false,
    };
    scc_dive(&ctx, &mut st, EdgeSet::EMPTY, 0);
    if st.best_len == usize::MAX {
        return Err(if st.truncated {
            CoversError::SearchTruncated {
                budget: opts.node_budget,
            }
        } else {
            CoversError::NoCoverWithinLimits {
                max_members: opts.max_members,
            }
        });
    }
    let best_order = size_desc_order(&st.best);
    let members: Vec<Vec<EdgeId>> = best_order.into_iter().map(|i| st.best[i].to_vec()).collect();
    Ok(SccResult {
        length: st.best_len,
        cover: CycleCover { members },
        exact: st.best_len == ctx.root_lb || !st.truncated,
        nodes: st.nodes,
    })
}

// ---------------------------------------------------------------------------
// Covers by four perfect matchings
// ---------------------------------------------------------------------------

/// Knobs for [`four_pm_cover_with`].
#[derive(Clone, Copy, Debug)]
pub struct FourPmOptions {
    /// Require four pairwise distinct matchings instead of a multiset.
    pub distinct_only: bool,
    /// Cap on how many perfect matchings to enumerate before declaring the
    /// question inconclusive.
    pub pm_limit: usize,
}

impl Default for FourPmOptions {
    fn default() -> Self {
        FourPmOptions {
            distinct_only: false,
            pm_limit: DEFAULT_PM_LIMIT,
        }
    }
}

/// A cover of `g` by four perfect matchings, if one exists.
///
/// `Ok(None)` is a proof of absence: the search enumerates every perfect
/// matching and exhausts all ways to combine four of them. When the matching
/// count exceeds the limit the call errs instead of guessing.
pub fn four_pm_cover(g: &Multigraph) -> Result<Option<FourPmCover>, CoversError> {
    four_pm_cover_with(g, FourPmOptions::default())
}

fn pm_cover_dive(
    masks: &[EdgeSet],
    by_edge: &[Vec<usize>],
    full: EdgeSet,
    pm_size: usize,
    forbidden: &mut [bool],
    chosen: &mut Vec<usize>,
    covered: EdgeSet,
) -> bool {
    if covered == full {
        return true;
    }
    if chosen.len() == 4 {
        return false;
    }
    if full.minus(covered).len() > (4 - chosen.len()) * pm_size {
        return false;
    }
    let e = full
        .minus(covered)
        .iter()
        .next()
        .expect("some edge is uncovered");
    let mut marked: Vec<usize> = Vec::new();
    let mut found = false;
    for &ci in &by_edge[e] {
        if forbidden[ci] {
            continue;
        }
        chosen.push(ci);
        if pm_cover_dive(
            masks,
            by_edge,
            full,
            pm_size,
            forbidden,
            chosen,
            covered.union(masks[ci]),
        ) {
            found = true;
            break;
        }
        chosen.pop();
        forbidden[ci] = true;
        marked.push(ci);
    }
    for ci in marked {
        forbidden[ci] = false;
    }
    found
}

/// [`four_pm_cover`] with explicit options.
pub fn four_pm_cover_with(
    g: &Multigraph,
    opts: FourPmOptions,
) -> Result<Option<FourPmCover>, CoversError> {
    if !g.is_cubic() {
        return Err(CoversError::NotCubic);
    }
    let m = g.edge_count();
    if m > MAX_EDGES {
        return Err(CoversError::TooManyEdges {
            edges: m,
            cap: MAX_EDGES,
        });
    }
    let pms = enumerate_perfect_matchings(g, opts.pm_limit).map_err(|_| {
        CoversError::MatchingsTruncated {
            limit: opts.pm_limit,
        }
    })?;
    if pms.is_empty() {
        return Ok(None);
    }
    let masks: Vec<EdgeSet> = pms
        .iter()
        .map(|pm| EdgeSet::from_ids(pm.iter().copied()))
        .collect();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, mask) in masks.iter().enumerate() {
        for e in mask.iter() {
            by_edge[e].push(ci);
        }
    }
    if by_edge.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let mut forbidden = vec![false; masks.len()];
    let mut chosen: Vec<usize> = Vec::new();
    let found = pm_cover_dive(
        &masks,
        &by_edge,
        EdgeSet::full(m),
        g.vertex_count() / 2,
        &mut forbidden,
        &mut chosen,
        EdgeSet::EMPTY,
    );
    if !found {
        return Ok(None);
    }
    if opts.distinct_only {
        // Top up with unused matchings; any superset of a cover still covers.
        let extras: Vec<usize> = (0..pms.len()).filter(|i| !chosen.contains(i)).collect();
        let mut extras = extras.into_iter();
        while chosen.len() < 4 {
            match extras.next() {
                Some(i) => chosen.push(i),
                None => return Ok(None),
            }
        }
    } else {
        while chosen.len() < 4 {
            chosen.push(chosen[0]);
        }
    }
    let matchings: [Vec<EdgeId>; 4] = [
        pms[chosen[0]].clone(),
        pms[chosen[1]].clone(),
        pms[chosen[2]].clone(),
        pms[chosen[3]].clone(),
    ];
    debug_assert!(matchings.iter().all(|pm| is_perfect_matching(g, pm)));
    Ok(Some(FourPmCover { matchings }))
}

// ---------------------------------------------------------------------------
// Five-member double covers
// ---------------------------------------------------------------------------

/// Multisets `(C1, C2, C3)` drawn from `pool[start..]` such that together
/// with the fixed first member every edge is covered once or twice; the
/// fifth member is then their symmetric difference.
fn cdc_complete(
    pool: &[EdgeSet],
    start: usize,
    slot: usize,
    cov1: EdgeSet,
    cov2: EdgeSet,
    full: EdgeSet,
    picked: &mut [EdgeSet; 3],
) -> bool {
    if slot == 3 {
        return cov1 == full;
    }
    for i in start..pool.len() {
        let cand = pool[i];
        if !cand.intersection(cov2).is_empty() {
            continue;
        }
        picked[slot] = cand;
        if cdc_complete(
            pool,
            i,
            slot + 1,
            cov1.union(cand),
            cov2.union(cov1.intersection(cand)),
            full,
            picked,
        ) {
            return true;
        }
    }
    false
}

/// A five-member double cover of `g`: every edge in exactly two members.
/// Empty members are allowed, so this is also a cover by at most five.
///
/// With `maximize_c0` the first member is guaranteed to be as large as any
/// member of any five-member double cover of `g`; otherwise the first family
/// found is returned. Either way `members[0]` is a largest member of the
/// returned family.
pub fn five_cdc(g: &Multigraph, maximize_c0: bool) -> Result<Option<FiveCdc>, CoversError> {
    if let Some(&bridge) = bridge_edges(g).first() {
        return Err(CoversError::BridgedInput { bridge });
    }
    let dim = cycle_space_dimension(g);
    if dim > CDC_DIMENSION_CAP {
        return Err(CoversError::DimensionTooLarge {
            dim,
            cap: CDC_DIMENSION_CAP,
        });
    }
    let masks = even_subgraph_masks(g)?;
    let full = EdgeSet::full(g.edge_count());
    let desc: Vec<EdgeSet> = size_desc_order(&masks).into_iter().map(|i| masks[i]).collect();
    // Search order for the first member: largest first when maximizing, so
    // the first completable choice is the best possible; otherwise smallest
    // first, which tends to complete quickly.
    let c0_choices: Vec<usize> = if maximize_c0 {
        (0..desc.len()).collect()
    } else {
        (0..desc.len()).rev().collect()
    };
    for p in c0_choices {
        let c0 = desc[p];
        // When maximizing, members larger than the first would contradict
        // its claim, so restrict the pool to sizes at most |C0|.
        let pool: &[EdgeSet] = if maximize_c0 {
            let group_start = desc.partition_point(|s| s.len() > c0.len());
            &desc[group_start..]
        } else {
            &desc
        };
        let mut picked = [EdgeSet::EMPTY; 3];
        if !cdc_complete(pool, 0, 0, c0, EdgeSet::EMPTY, full, &mut picked) {
            continue;
        }
        // Every edge sits in exactly two members, so the five must cancel:
        // the fifth member is the symmetric difference of the other four.
        let c4 = c0.xor(picked[0]).xor(picked[1]).xor(picked[2]);
        let mut rest = [picked[0], picked[1], picked[2], c4];
        debug_assert!(
            !maximize_c0 || c4.len() <= c0.len(),
            "a larger fifth member would have completed an earlier first member"
        );
        rest.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
        let mut all = [c0, rest[0], rest[1], rest[2], rest[3]];
        if !maximize_c0 {
            all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
        }
        let members: [Vec<EdgeId>; 5] = [
            all[0].to_vec(),
            all[1].to_vec(),
            all[2].to_vec(),
            all[3].to_vec(),
            all[4].to_vec(),
        ];
        let cdc = FiveCdc { members };
        debug_assert!(check_cdc(g, &cdc).is_ok());
        return Ok(Some(cdc));
    }
    Ok(None)
}

/// A five-member double cover that includes `member`, if one exists.
///
/// The returned family lists members largest first, so the prescribed member
/// may appear at any position. Same caps and bridge handling as [`five_cdc`].
pub fn five_cdc_containing(
    g: &Multigraph,
    member: &[EdgeId],
) -> Result<Option<FiveCdc>, CoversError> {
    if let Some(&bridge) = bridge_edges(g).first() {
        return Err(CoversError::BridgedInput { bridge });
    }
    let dim = cycle_space_dimension(g);
    if dim > CDC_DIMENSION_CAP {
        return Err(CoversError::DimensionTooLarge {
            dim,
            cap: CDC_DIMENSION_CAP,
        });
    }
    if !is_even_subgraph(g, member) {
        return Err(CoversError::InvalidCover {
            reason: "prescribed member is not an even subgraph".into(),
        });
    }
    let masks = even_subgraph_masks(g)?;
    let full = EdgeSet::full(g.edge_count());
    let pool: Vec<EdgeSet> = size_desc_order(&masks).into_iter().map(|i| masks[i]).collect();
    let c0 = EdgeSet::from_ids(member.iter().copied());
    let mut picked = [EdgeSet::EMPTY; 3];
    if !cdc_complete(&pool, 0, 0, c0, EdgeSet::EMPTY, full, &mut picked) {
        return Ok(None);
    }
    let c4 = c0.xor(picked[0]).xor(picked[1]).xor(picked[2]);
    let mut all = [c0, picked[0], picked[1], picked[2], c4];
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    let cdc = FiveCdc {
        members: [
            all[0].to_vec(),
            all[1].to_vec(),
            all[2].to_vec(),
            all[3].to_vec(),
            all[4].to_vec(),
        ],
    };
    debug_assert!(check_cdc(g, &cdc).is_ok());
    Ok(Some(cdc))
}

/// Validates a claimed five-member double cover.
fn check_cdc(g: &Multigraph, cdc: &FiveCdc) -> Result<(), CoversError> {
    for (i, member) in cdc.members.iter().enumerate() {
        if !is_even_subgraph(g, member) {
            return Err(CoversError::InvalidCover {
                reason: format!("member {i} is not an even subgraph"),
            });
        }
    }
    let cover = CycleCover {
        members: cdc.members.to_vec(),
    };
    let mult = cover
        .multiplicities(g)
        .expect("members validated as subgraphs");
    if let Some(e) = mult.iter().position(|&c| c != 2) {
        return Err(CoversError::InvalidCover {
            reason: format!("edge {e} has depth {}, expected exactly 2", mult[e]),
        });
    }
    let c0_len = cdc.members[0].len();
    if cdc.members.iter().any(|m| m.len() > c0_len) {
        return Err(CoversError::InvalidCover {
            reason: "first member must be a largest member".into(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Transforms out of a double cover
// ---------------------------------------------------------------------------

fn edge_flags(m: usize, edges: &[EdgeId]) -> Vec<bool> {
    let mut flags = vec![false; m];
    for &e in edges {
        flags[e] = true;
    }
    flags
}

/// Four parity subgraphs from a five-member double cover: each is the
/// complement of the symmetric difference of the first member with one of
/// the other four. Edges of the first member end up in exactly one of the
/// four, every other edge in exactly two.
pub fn cdc_to_parity_family(g: &Multigraph, cdc: &FiveCdc) -> Result<ParityFamily, CoversError> {
    check_cdc(g, cdc)?;
    let m = g.edge_count();
    let c0 = edge_flags(m, &cdc.members[0]);
    let mut members: [Vec<EdgeId>; 4] = Default::default();
    for i in 1..5 {
        let ci = edge_flags(m, &cdc.members[i]);
        let ji: Vec<EdgeId> = (0..m).filter(|&e| c0[e] == ci[e]).collect();
        debug_assert!(is_parity_subgraph(g, &ji));
        members[i - 1] = ji;
    }
    let mut mult = vec![0usize; m];
    for member in &members {
        for &e in member {
            mult[e] += 1;
        }
    }
    debug_assert!(mult.iter().all(|&c| c >= 1));
    let max_edge_multiplicity = mult.into_iter().max().unwrap_or(0);
    Ok(ParityFamily {
        members,
        max_edge_multiplicity,
    })
}

/// The vertices that some member of the parity family of `cdc` meets with
/// degree three. Expanding exactly these vertices turns each family member
/// into the restriction of a perfect matching, so the expansion is coverable
/// by four perfect matchings. The set avoids every vertex of the first
/// member, so it has at most `|V|` minus the first member's size elements.
pub fn cdc_to_expansion_set(g: &Multigraph, cdc: &FiveCdc) -> Result<Vec<VertexId>, CoversError> {
    if !g.is_cubic() {
        return Err(CoversError::NotCubic);
    }
    let family = cdc_to_parity_family(g, cdc)?;
    let n = g.vertex_count();
    let mut in_u = vec![false; n];
    for member in &family.members {
        let deg = subgraph_degrees(g, member).expect("family members are valid subgraphs");
        for v in 0..n {
            if deg[v] == 3 {
                in_u[v] = true;
            }
        }
    }
    Ok((0..n).filter(|&v| in_u[v]).collect())
}

// ---------------------------------------------------------------------------
// Depth-two covers and triangle expansions
// ---------------------------------------------------------------------------

/// A depth-two cover lifted through the triangle expansion of the vertices
/// all of whose edges have depth two.
#[derive(Clone, Debug)]
pub struct Depth2Expansion {
    /// The expanded vertices: those whose three incident edges all have
    /// depth two in the input cover.
    pub u: Vec<VertexId>,
    pub expansion: ExpansionResult,
    /// The input cover with each member extended through the triangles it
    /// crosses; covers the expansion with length `4/3` of its edge count.
    pub lifted: CycleCover,
    /// The edges of depth two in the lifted cover; a perfect matching of the
    /// expansion.
    pub doubled_matching: Vec<EdgeId>,
}

/// Lifts a depth-two cycle cover of a 3-edge-connected cubic graph to the
/// triangle expansion of its fully-doubled vertices.
///
/// Each member passing an expanded vertex picks up the triangle edge
/// opposite the one incident edge it avoids, which keeps it an even
/// subgraph. The lift adds three edge slots per expanded vertex, so its
/// length lands exactly on `4/3` of the expanded edge count, and the edges
/// covered twice form a perfect matching of the expansion.
pub fn depth2_scc_to_expansion(
    g: &Multigraph,
    cover: &CycleCover,
) -> Result<Depth2Expansion, CoversError> {
    if !g.is_cubic() {
        return Err(CoversError::NotCubic);
    }
    if !is_three_edge_connected(g) {
        return Err(CoversError::NotThreeEdgeConnected);
    }
    for (i, member) in cover.members.iter().enumerate() {
        if !is_even_subgraph(g, member) {
            return Err(CoversError::InvalidCover {
                reason: format!("member {i} is not an even subgraph"),
            });
        }
    }
    let mult = cover
        .multiplicities(g)
        .expect("members validated as subgraphs");
    for (e, &c) in mult.iter().enumerate() {
        if c == 0 {
            return Err(CoversError::InvalidCover {
                reason: format!("edge {e} is uncovered"),
            });
        }
        if c > 2 {
            return Err(CoversError::InvalidCover {
                reason: format!("edge {e} has depth {c}, expected at most 2"),
            });
        }
    }
    let n = g.vertex_count();
    let u: Vec<VertexId> = (0..n)
        .filter(|&v| g.incident_edges(v).iter().all(|&e| mult[e] == 2))
        .collect();
    let expansion = expand_vertices(g, &u).expect("cubic vertices expand");
    let mut lifted_members = Vec::with_capacity(cover.members.len());
    for member in &cover.members {
        let flags = edge_flags(g.edge_count(), member);
        let mut lifted = member.clone();
        for &v in &u {
            let inside: Vec<EdgeId> = g
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&e| flags[e])
                .collect();
            match inside.len() {
                0 => {}
                2 => {
                    let avoided = g
                        .incident_edges(v)
                        .iter()
                        .copied()
                        .find(|&e| !flags[e])
                        .expect("one incident edge is outside the member");
                    let tri = expansion
                        .opposite_triangle_edge(v, avoided)
                        .expect("expanded vertex with incident edge");
                    lifted.push(tri);
                }
                _ => unreachable!("even subgraph meets a cubic vertex 0 or 2 times"),
            }
        }
        lifted.sort_unstable();
        lifted_members.push(lifted);
    }
    let lifted = CycleCover {
        members: lifted_members,
    };
    let lifted_mult = lifted
        .multiplicities(&expansion.graph)
        .ok_or_else(|| CoversError::InvalidCover {
            reason: "lifted members leave the expansion".into(),
        })?;
    if lifted_mult.contains(&0) {
        return Err(CoversError::InvalidCover {
            reason: "lifted cover misses an edge of the expansion".into(),
        });
    }
    let doubled_matching: Vec<EdgeId> = lifted_mult
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 2)
        .map(|(e, _)| e)
        .collect();
    if !is_perfect_matching(&expansion.graph, &doubled_matching) {
        return Err(CoversError::InvalidCover {
            reason: "doubled edges of the lift do not form a perfect matching".into(),
        });
    }
    Ok(Depth2Expansion {
        u,
        expansion,
        lifted,
        doubled_matching,
    })
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// A cover claim as carried by certificate files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverCertificate {
    /// Even subgraphs covering every edge at least once.
    CycleCover { members: Vec<Vec<EdgeId>> },
    /// Five even subgraphs covering every edge exactly twice, largest first.
    FiveCdc { members: Vec<Vec<EdgeId>> },
    /// Four perfect matchings covering every edge.
    FourPmCover { members: Vec<Vec<EdgeId>> },
    /// Four parity subgraphs covering every edge.
    ParityFamily { members: Vec<Vec<EdgeId>> },
}

impl From<&CycleCover> for CoverCertificate {
    fn from(c: &CycleCover) -> Self {
        CoverCertificate::CycleCover {
            members: c.members.clone(),
        }
    }
}

impl From<&FiveCdc> for CoverCertificate {
    fn from(c: &FiveCdc) -> Self {
        CoverCertificate::FiveCdc {
            members: c.members.to_vec(),
        }
    }
}

impl From<&FourPmCover> for CoverCertificate {
    fn from(c: &FourPmCover) -> Self {
        CoverCertificate::FourPmCover {
            members: c.matchings.to_vec(),
        }
    }
}

impl From<&ParityFamily> for CoverCertificate {
    fn from(c: &ParityFamily) -> Self {
        CoverCertificate::ParityFamily {
            members: c.members.to_vec(),
        }
    }
}

/// Outcome of replaying a cover certificate against a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub valid: bool,
    /// First failed check, if any.
    pub violation: Option<String>,
    pub members: usize,
    pub empty_members: usize,
    pub length: usize,
    /// Smallest and largest per-edge depth (0 when the host has no edges).
    pub min_depth: usize,
    pub max_depth: usize,
}

/// Checks a cover certificate edge by edge and reports the first violation.
pub fn verify_cover(g: &Multigraph, cert: &CoverCertificate) -> CoverReport {
    let (members, expect_count, kind) = match cert {
        CoverCertificate::CycleCover { members } => (members, None, "cycle cover"),
        CoverCertificate::FiveCdc { members } => (members, Some(5), "double cover"),
        CoverCertificate::FourPmCover { members } => (members, Some(4), "matching cover"),
        CoverCertificate::ParityFamily { members } => (members, Some(4), "parity family"),
    };
    let mut report = CoverReport {
        valid: false,
        violation: None,
        members: members.len(),
        empty_members: members.iter().filter(|m| m.is_empty()).count(),
        length: members.iter().map(|m| m.len()).sum(),
        min_depth: 0,
        max_depth: 0,
    };
    let fail = |report: &mut CoverReport, why: String| {
        report.violation = Some(why);
    };
    if let Some(want) = expect_count {
        if members.len() != want {
            fail(
                &mut report,
                format!("a {kind} needs exactly {want} members, got {}", members.len()),
            );
            return report;
        }
    }
    let mut mult = vec![0usize; g.edge_count()];
    for (i, member) in members.iter().enumerate() {
        let Some(deg) = subgraph_degrees(g, member) else {
            fail(
                &mut report,
                format!("member {i} repeats an edge or leaves the host"),
            );
            return report;
        };
        let ok = match cert {
            CoverCertificate::CycleCover { .. } | CoverCertificate::FiveCdc { .. } => {
                deg.iter().all(|&d| d % 2 == 0)
            }
            CoverCertificate::FourPmCover { .. } => deg.iter().all(|&d| d == 1),
            CoverCertificate::ParityFamily { .. } => {
                (0..g.vertex_count()).all(|v| deg[v] % 2 == g.degree(v) % 2)
            }
        };
        if !ok {
            let expected = match cert {
                CoverCertificate::CycleCover { .. } | CoverCertificate::FiveCdc { .. } => {
                    "an even subgraph"
                }
                CoverCertificate::FourPmCover { .. } => "a perfect matching",
                CoverCertificate::ParityFamily { .. } => "a parity subgraph",
            };
            fail(&mut report, format!("member {i} is not {expected}"));
            return report;
        }
        for &e in member {
            mult[e] += 1;
        }
    }
    for (e, &c) in mult.iter().enumerate() {
        let ok = match cert {
            CoverCertificate::FiveCdc { .. } => c == 2,
            _ => c >= 1,
        };
        if !ok {
            let want = match cert {
                CoverCertificate::FiveCdc { .. } => "exactly 2",
                _ => "at least 1",
            };
            fail(&mut report, format!("edge {e} has depth {c}, expected {want}"));
            return report;
        }
    }
    if let CoverCertificate::FiveCdc { members } = cert {
        let c0_len = members[0].len();
        if members.iter().any(|m| m.len() > c0_len) {
            fail(
                &mut report,
                "first member of a double cover must be a largest member".into(),
            );
            return report;
        }
    }
    report.min_depth = mult.iter().copied().min().unwrap_or(0);
    report.max_depth = mult.iter().copied().max().unwrap_or(0);
    report.valid = true;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphName};

    fn assert_valid_cycle_cover(g: &Multigraph, cover: &CycleCover) {
        let report = verify_cover(g, &CoverCertificate::from(cover));
        assert!(report.valid, "{:?}", report.violation);
    }

    #[test]
    fn even_subgraph_counts_frozen() {
        for (name, count) in [
            (GraphName::K4, 8),
            (GraphName::Theta, 4),
            (GraphName::P10, 64),
        ] {
            let g = generate(name);
            let evens = enumerate_even_subgraphs(&g).unwrap();
            assert_eq!(evens.len(), count, "{name:?}");
            assert!(evens[0].is_empty());
            assert!(evens.iter().all(|s| is_even_subgraph(&g, s)));
        }
    }

    #[test]
    fn even_subgraph_caps_are_enforced() {
        let wide = Multigraph::from_edges(2, &vec![(0, 1); 26]).unwrap();
        assert!(matches!(
            enumerate_even_subgraphs(&wide),
            Err(CoversError::DimensionTooLarge { dim: 25, cap: 24 })
        ));
        let huge = Multigraph::from_edges(2, &vec![(0, 1); 65]).unwrap();
        assert!(matches!(
            enumerate_even_subgraphs(&huge),
            Err(CoversError::TooManyEdges { edges: 65, cap: 64 })
        ));
    }

    #[test]
    fn scc_frozen_values() {
        for (name, length) in [
            (GraphName::K4, 8),
            (GraphName::Theta, 4),
            (GraphName::P10, 21),
            (GraphName::P12, 24),
        ] {
            let g = generate(name);
            let res = scc_exact(&g, 4).unwrap();
            assert_eq!(res.length, length, "{name:?}");
            assert!(res.exact, "{name:?}");
            assert!(res.cover.members.len() <= 4);
            assert_eq!(res.cover.length(), length);
            assert_valid_cycle_cover(&g, &res.cover);
        }
    }

    #[test]
    fn scc_member_cap_is_not_the_binding_constraint_here() {
        let p10 = generate(GraphName::P10);
        assert_eq!(scc_exact(&p10, 5).unwrap().length, 21);
        assert_eq!(scc_exact(&p10, 6).unwrap().length, 21);
    }

    #[test]
    fn scc_rejects_bridged_input() {
        let s10 = generate(GraphName::S10);
        assert!(matches!(
            scc_exact(&s10, 4),
            Err(CoversError::BridgedInput { .. })
        ));
    }

    #[test]
    fn scc_depth_two_variant_on_petersen() {
        let p10 = generate(GraphName::P10);
        let res = scc_exact_with(
            &p10,
            SccOptions {
                max_members: 4,
                max_depth: Some(2),
                ..SccOptions::default()
            },
        )
        .unwrap();
        assert_eq!(res.length, 21);
        assert!(res.exact);
        let mult = res.cover.multiplicities(&p10).unwrap();
        assert!(mult.iter().all(|&c| (1..=2).contains(&c)));
        assert_valid_cycle_cover(&p10, &res.cover);
    }

    #[test]
    fn four_pm_cover_frozen() {
        let k4 = generate(GraphName::K4);
        let cover = four_pm_cover(&k4).unwrap().expect("coverable");
        let report = verify_cover(&k4, &CoverCertificate::from(&cover));
        assert!(report.valid, "{:?}", report.violation);

        let p12 = generate(GraphName::P12);
        let cover = four_pm_cover(&p12).unwrap().expect("coverable");
        let report = verify_cover(&p12, &CoverCertificate::from(&cover));
        assert!(report.valid, "{:?}", report.violation);

        assert!(four_pm_cover(&generate(GraphName::P10)).unwrap().is_none());
        assert!(four_pm_cover(&generate(GraphName::S10)).unwrap().is_none());

        let theta = generate(GraphName::Theta);
        let cover = four_pm_cover(&theta).unwrap().expect("coverable");
        let report = verify_cover(&theta, &CoverCertificate::from(&cover));
        assert!(report.valid, "{:?}", report.violation);
    }

    #[test]
    fn four_pm_cover_distinct_mode() {
        // K4 has only three perfect matchings, so no four distinct ones exist.
        let k4 = generate(GraphName::K4);
        let opts = FourPmOptions {
            distinct_only: true,
            ..FourPmOptions::default()
        };
        assert!(four_pm_cover_with(&k4, opts).unwrap().is_none());

        let p12 = generate(GraphName::P12);
        let cover = four_pm_cover_with(&p12, opts).unwrap().expect("coverable");
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(cover.matchings[i], cover.matchings[j]);
            }
        }
        let report = verify_cover(&p12, &CoverCertificate::from(&cover));
        assert!(report.valid, "{:?}", report.violation);
    }

    #[test]
    fn four_pm_cover_is_inconclusive_when_enumeration_is_cut() {
        let p10 = generate(GraphName::P10);
        let opts = FourPmOptions {
            distinct_only: false,
            pm_limit: 3,
        };
        assert!(matches!(
            four_pm_cover_with(&p10, opts),
            Err(CoversError::MatchingsTruncated { limit: 3 })
        ));
    }

    #[test]
    fn five_cdc_frozen() {
        let p10 = generate(GraphName::P10);
        let cdc = five_cdc(&p10, true).unwrap().expect("double cover");
        assert_eq!(cdc.members[0].len(), 9);
        let report = verify_cover(&p10, &CoverCertificate::from(&cdc));
        assert!(report.valid, "{:?}", report.violation);
        assert_eq!(report.length, 2 * p10.edge_count());
        assert_eq!((report.min_depth, report.max_depth), (2, 2));

        let k4 = generate(GraphName::K4);
        let cdc = five_cdc(&k4, true).unwrap().expect("double cover");
        assert_eq!(cdc.members[0].len(), 4);
        let report = verify_cover(&k4, &CoverCertificate::from(&cdc));
        assert!(report.valid, "{:?}", report.violation);
        assert_eq!(report.empty_members, 2);

        let theta = generate(GraphName::Theta);
        let cdc = five_cdc(&theta, false).unwrap().expect("double cover");
        let report = verify_cover(&theta, &CoverCertificate::from(&cdc));
        assert!(report.valid, "{:?}", report.violation);
    }

    #[test]
    fn five_cdc_rejects_bridges() {
        let s10 = generate(GraphName::S10);
        assert!(matches!(
            five_cdc(&s10, true),
            Err(CoversError::BridgedInput { .. })
        ));
    }

    #[test]
    fn parity_family_from_double_cover() {
        let p10 = generate(GraphName::P10);
        let cdc = five_cdc(&p10, true).unwrap().unwrap();
        let family = cdc_to_parity_family(&p10, &cdc).unwrap();
        assert!(family.max_edge_multiplicity <= 2);
        let report = verify_cover(&p10, &CoverCertificate::from(&family));
        assert!(report.valid, "{:?}", report.violation);
        // Edges used once are exactly the largest double-cover member.
        let mut mult = vec![0usize; p10.edge_count()];
        for member in &family.members {
            for &e in member {
                mult[e] += 1;
            }
        }
        let once: Vec<EdgeId> = (0..p10.edge_count()).filter(|&e| mult[e] == 1).collect();
        assert_eq!(once, cdc.members[0]);
    }

    #[test]
    fn expansion_set_from_double_cover() {
        let p10 = generate(GraphName::P10);
        let cdc = five_cdc(&p10, true).unwrap().unwrap();
        let u = cdc_to_expansion_set(&p10, &cdc).unwrap();
        assert!(u.len() <= p10.vertex_count() - cdc.members[0].len());
        assert!(5 * u.len() <= 2 * p10.vertex_count());
        let expanded = expand_vertices(&p10, &u).unwrap();
        let cover = four_pm_cover(&expanded.graph).unwrap();
        assert!(cover.is_some(), "expansion must be coverable");

        let k4 = generate(GraphName::K4);
        let cdc = five_cdc(&k4, true).unwrap().unwrap();
        assert!(cdc_to_expansion_set(&k4, &cdc).unwrap().is_empty());
    }

    #[test]
    fn depth_two_lift_on_k4_expands_nothing() {
        let k4 = generate(GraphName::K4);
        let res = scc_exact(&k4, 4).unwrap();
        let lift = depth2_scc_to_expansion(&k4, &res.cover).unwrap();
        assert!(lift.u.is_empty());
        assert_eq!(lift.expansion.graph, k4);
        assert_eq!(lift.lifted, res.cover);
        assert_eq!(lift.lifted.length(), 4 * k4.edge_count() / 3);
    }

    #[test]
    fn depth_two_lift_on_petersen() {
        let p10 = generate(GraphName::P10);
        let res = scc_exact_with(
            &p10,
            SccOptions {
                max_members: 4,
                max_depth: Some(2),
                ..SccOptions::default()
            },
        )
        .unwrap();
        let lift = depth2_scc_to_expansion(&p10, &res.cover).unwrap();
        assert_eq!(lift.u.len(), 1);
        let m_up = lift.expansion.graph.edge_count();
        assert_eq!(m_up, 18);
        assert_eq!(lift.lifted.length(), 4 * m_up / 3);
        assert_valid_cycle_cover(&lift.expansion.graph, &lift.lifted);
        assert!(is_perfect_matching(
            &lift.expansion.graph,
            &lift.doubled_matching
        ));
        assert!(crate::graph::is_isomorphic(
            &lift.expansion.graph,
            &generate(GraphName::P12)
        ));
    }

    #[test]
    fn depth_two_lift_rejects_bad_inputs() {
        let theta = generate(GraphName::Theta);
        let too_deep = CycleCover {
            members: vec![vec![0, 1], vec![0, 1], vec![0, 2]],
        };
        assert!(matches!(
            depth2_scc_to_expansion(&theta, &too_deep),
            Err(CoversError::InvalidCover { .. })
        ));
        let uncovered = CycleCover {
            members: vec![vec![0, 1]],
        };
        assert!(matches!(
            depth2_scc_to_expansion(&theta, &uncovered),
            Err(CoversError::InvalidCover { .. })
        ));
        let s10 = generate(GraphName::S10);
        let trivial = CycleCover { members: vec![] };
        assert!(matches!(
            depth2_scc_to_expansion(&s10, &trivial),
            Err(CoversError::NotThreeEdgeConnected)
        ));
        let w = crate::graph::Gadget::W.graph();
        assert!(matches!(
            depth2_scc_to_expansion(&w, &trivial),
            Err(CoversError::NotCubic)
        ));
    }

    #[test]
    fn verify_cover_catches_violations() {
        let k4 = generate(GraphName::K4);
        let good = scc_exact(&k4, 4).unwrap().cover;
        assert!(verify_cover(&k4, &CoverCertificate::from(&good)).valid);

        let mut broken = good.clone();
        broken.members[0].pop();
        let report = verify_cover(&k4, &CoverCertificate::from(&broken));
        assert!(!report.valid);
        assert!(report.violation.unwrap().contains("not an even subgraph"));

        let short = CoverCertificate::FiveCdc {
            members: vec![vec![0, 1, 2]],
        };
        let report = verify_cover(&k4, &short);
        assert!(!report.valid);
        assert!(report.violation.unwrap().contains("exactly 5 members"));

        let not_double = CoverCertificate::FiveCdc {
            members: good.members.iter().cloned().chain([vec![], vec![], vec![]]).collect(),
        };
        let report = verify_cover(&k4, &not_double);
        assert!(!report.valid);

        let pm = crate::matching::find_perfect_matching(&k4).unwrap();
        let repeat = CoverCertificate::FourPmCover {
            members: vec![pm.clone(), pm.clone(), pm.clone(), pm.clone()],
        };
        let report = verify_cover(&k4, &repeat);
        assert!(!report.valid, "one matching repeated cannot cover K4");
        assert!(report.violation.unwrap().contains("depth 0"));
    }
}
