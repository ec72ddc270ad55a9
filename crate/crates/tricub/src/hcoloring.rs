//! Colorings of one cubic graph by the edges of another.
//!
//! An H-coloring of G maps each edge of G to an edge of H so that every
//! vertex star of G lands exactly onto a vertex star of H. The module
//! verifies claimed colorings, searches for them by backtracking, composes
//! them, and turns a coloring by the Petersen graph into a five-member
//! double cover with a guaranteed large first member: pick the Petersen
//! vertex hit by the fewest stars, take a 9-circuit missing it, complete
//! that circuit to a double cover of the Petersen graph, and pull all five
//! members back through the coloring.
//!
//! The double covers of the Petersen graph through a prescribed 9-circuit
//! are found by search once per circuit and cached for the process. Setting
//! `TRICUB_FIXTURES` to a directory containing [`P10_CDC_FIXTURE_FILE`]
//! seeds that cache from disk instead; entries are re-verified on load.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covers::{
    enumerate_even_subgraphs, five_cdc_containing, verify_cover, CoverCertificate, FiveCdc,
};
use crate::graph::{generate, EdgeId, GraphName, Multigraph, VertexId};

/// File name looked up inside the `TRICUB_FIXTURES` directory.
pub const P10_CDC_FIXTURE_FILE: &str = "p10_cdc.json";

/// Format tag carried by the fixture file.
pub const P10_CDC_FIXTURE_FORMAT: &str = "tricub-p10-cdc/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HColoringError {
    #[error("both graphs must be cubic")]
    NotCubic,
    #[error("coloring source does not match the given graph")]
    MismatchedSource,
    #[error("coloring target must be the Petersen graph in its catalog labeling")]
    TargetNotPetersen,
    #[error("colorings do not compose: inner target differs from outer source")]
    MismatchedComposition,
    #[error("coloring is not valid: {reason}")]
    InvalidColoring { reason: String },
    #[error("no double cover of the Petersen graph completes the chosen circuit")]
    MissingDoubleCover,
    #[error("fixture file is invalid: {reason}")]
    BadFixture { reason: String },
    #[error("pullback failed verification: {reason}")]
    PullbackFailed { reason: String },
}

/// A map from the edges of `source` onto the edges of `target` that sends
/// vertex stars onto vertex stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HColoring {
    pub source: Multigraph,
    pub target: Multigraph,
    /// `phi[e]` is the target edge coloring source edge `e`.
    pub phi: Vec<EdgeId>,
}

/// Outcome of checking a claimed coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HColoringReport {
    pub valid: bool,
    /// First vertex whose incident colors are not a target vertex star.
    pub failing_vertex: Option<VertexId>,
    pub violation: Option<String>,
}

/// Sorted incident edge lists of every vertex.
fn vertex_stars(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    (0..g.vertex_count())
        .map(|v| g.incident_edges(v).to_vec())
        .collect()
}

/// Checks that every vertex star of the source maps exactly onto a vertex
/// star of the target and reports the first vertex where it does not.
pub fn verify_hcoloring(c: &HColoring) -> HColoringReport {
    let fail = |failing_vertex: Option<VertexId>, violation: String| HColoringReport {
        valid: false,
        failing_vertex,
        violation: Some(violation),
    };
    if c.phi.len() != c.source.edge_count() {
        return fail(
            None,
            format!(
                "coloring assigns {} edges but the source has {}",
                c.phi.len(),
                c.source.edge_count()
            ),
        );
    }
    if let Some((e, &color)) = c
        .phi
        .iter()
        .enumerate()
        .find(|&(_, &color)| color >= c.target.edge_count())
    {
        return fail(
            None,
            format!(
                "edge {e} gets color {color} but the target has only {} edges",
                c.target.edge_count()
            ),
        );
    }
    let stars = vertex_stars(&c.target);
    for v in 0..c.source.vertex_count() {
        let mut colors: Vec<EdgeId> = c
            .source
            .incident_edges(v)
            .iter()
            .map(|&e| c.phi[e])
            .collect();
        colors.sort_unstable();
        if colors.windows(2).any(|w| w[0] == w[1]) {
            return fail(Some(v), format!("vertex {v} repeats a color on its star"));
        }
        if !stars.contains(&colors) {
            return fail(
                Some(v),
                format!("the colors at vertex {v} are not a target vertex star"),
            );
        }
    }
    HColoringReport {
        valid: true,
        failing_vertex: None,
        violation: None,
    }
}

/// `outer` after `inner`: a coloring of `inner.source` by `outer.target`.
pub fn compose_colorings(
    outer: &HColoring,
    inner: &HColoring,
) -> Result<HColoring, HColoringError> {
    if inner.target != outer.source {
        return Err(HColoringError::MismatchedComposition);
    }
    Ok(HColoring {
        source: inner.source.clone(),
        target: outer.target.clone(),
        phi: inner.phi.iter().map(|&e| outer.phi[e]).collect(),
    })
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

/// Result of a bounded coloring search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringSearch {
    Found(HColoring),
    /// The whole space was explored: no coloring exists.
    Exhausted { nodes: u64 },
    /// The node budget ran out first, so absence is not established.
    Inconclusive { nodes: u64 },
}

/// Edges ordered most-constrained-first: repeatedly take the edge sharing
/// endpoints with the most already-ordered edges, ties to the smallest id.
fn search_order(g: &Multigraph) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    for _ in 0..m {
        let mut best: Option<(usize, EdgeId)> = None;
        for e in 0..m {
            if placed[e] {
                continue;
            }
            let (u, v) = g.endpoints(e);
            let score = g
                .incident_edges(u)
                .iter()
                .chain(g.incident_edges(v))
                .filter(|&&f| placed[f])
                .count();
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, e));
            }
        }
        let (_, e) = best.expect("an edge remains");
        placed[e] = true;
        order.push(e);
    }
    order
}

struct SearchCtx<'a> {
    g: &'a Multigraph,
    target_edges: usize,
    stars: Vec<Vec<EdgeId>>,
    order: Vec<EdgeId>,
    budget: u64,
}

enum SearchStep {
    Found,
    NoneHere,
    OutOfBudget,
}

/// The assigned colors at `v` are pairwise distinct and fit inside some
/// target star.
fn star_consistent(ctx: &SearchCtx, phi: &[Option<EdgeId>], v: VertexId) -> bool {
    let mut colors: Vec<EdgeId> = ctx.g.incident_edges(v).iter().filter_map(|&e| phi[e]).collect();
    colors.sort_unstable();
    if colors.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    ctx.stars
        .iter()
        .any(|star| colors.iter().all(|c| star.contains(c)))
}

fn color_dfs(ctx: &SearchCtx, phi: &mut [Option<EdgeId>], pos: usize, nodes: &mut u64) -> SearchStep {
    if pos == ctx.order.len() {
        return SearchStep::Found;
    }
    let e = ctx.order[pos];
    let (u, v) = ctx.g.endpoints(e);
    for color in 0..ctx.target_edges {
        *nodes += 1;
        if *nodes > ctx.budget {
            return SearchStep::OutOfBudget;
        }
        phi[e] = Some(color);
        if star_consistent(ctx, phi, u) && star_consistent(ctx, phi, v) {
            match color_dfs(ctx, phi, pos + 1, nodes) {
                SearchStep::Found => return SearchStep::Found,
                SearchStep::OutOfBudget => return SearchStep::OutOfBudget,
                SearchStep::NoneHere => {}
            }
        }
    }
    phi[e] = None;
    SearchStep::NoneHere
}

/// Backtracking search for a coloring of `g` by the edges of `h`.
///
/// Colors are tried in ascending edge id along a fixed most-constrained
/// edge order, so results are reproducible. `Exhausted` is a definitive
/// negative; `Inconclusive` only means the budget ran out.
pub fn find_hcoloring(
    g: &Multigraph,
    h: &Multigraph,
    budget: u64,
) -> Result<ColoringSearch, HColoringError> {
    if !g.is_cubic() || !h.is_cubic() {
        return Err(HColoringError::NotCubic);
    }
    let ctx = SearchCtx {
        g,
        target_edges: h.edge_count(),
        stars: vertex_stars(h),
        order: search_order(g),
        budget,
    };
    let mut phi: Vec<Option<EdgeId>> = vec![None; g.edge_count()];
    let mut nodes = 0u64;
    match color_dfs(&ctx, &mut phi, 0, &mut nodes) {
        SearchStep::Found => {
            let coloring = HColoring {
                source: g.clone(),
                target: h.clone(),
                phi: phi.into_iter().map(|c| c.expect("all edges colored")).collect(),
            };
            debug_assert!(verify_hcoloring(&coloring).valid);
            Ok(ColoringSearch::Found(coloring))
        }
        SearchStep::NoneHere => Ok(ColoringSearch::Exhausted { nodes }),
        SearchStep::OutOfBudget => Ok(ColoringSearch::Inconclusive { nodes }),
    }
}

// ---------------------------------------------------------------------------
// Petersen colorings and double covers
// ---------------------------------------------------------------------------

/// The vertex of the target whose star is the image of `v`'s star.
fn image_vertex(stars: &[Vec<EdgeId>], coloring: &HColoring, v: VertexId) -> VertexId {
    let mut colors: Vec<EdgeId> = coloring
        .source
        .incident_edges(v)
        .iter()
        .map(|&e| coloring.phi[e])
        .collect();
    colors.sort_unstable();
    stars
        .iter()
        .position(|s| *s == colors)
        .expect("verified colorings map stars onto stars")
}

/// The lexicographically least 9-circuit of the Petersen graph that misses
/// vertex `z`. One always exists: deleting any vertex leaves a graph with a
/// spanning circuit.
fn nine_circuit_avoiding(p10: &Multigraph, z: VertexId) -> Vec<EdgeId> {
    let evens = enumerate_even_subgraphs(p10).expect("the Petersen graph is within caps");
    evens
        .into_iter()
        .find(|s| {
            s.len() == 9
                && s.iter().all(|&e| {
                    let (a, b) = p10.endpoints(e);
                    a != z && b != z
                })
        })
        .expect("a 9-circuit avoids every vertex")
}

/// One fixture entry: a 9-circuit of the Petersen graph and a double cover
/// containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P10CdcFixtureEntry {
    pub circuit: Vec<EdgeId>,
    pub members: Vec<Vec<EdgeId>>,
}

/// On-disk shape of [`P10_CDC_FIXTURE_FILE`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P10CdcFixtureFile {
    pub format: String,
    pub entries: Vec<P10CdcFixtureEntry>,
}

/// Searches a double cover through the lexicographically least 9-circuit
/// missing each Petersen vertex in turn; the full content of the fixture
/// file.
pub fn p10_cdc_fixture_contents() -> Result<P10CdcFixtureFile, HColoringError> {
    let p10 = generate(GraphName::P10);
    let mut entries = Vec::new();
    for z in 0..p10.vertex_count() {
        let circuit = nine_circuit_avoiding(&p10, z);
        if entries.iter().any(|e: &P10CdcFixtureEntry| e.circuit == circuit) {
            continue;
        }
        let cdc = search_p10_cdc(&p10, &circuit)?;
        entries.push(P10CdcFixtureEntry {
            circuit,
            members: cdc.members.to_vec(),
        });
    }
    Ok(P10CdcFixtureFile {
        format: P10_CDC_FIXTURE_FORMAT.to_string(),
        entries,
    })
}

fn search_p10_cdc(p10: &Multigraph, circuit: &[EdgeId]) -> Result<FiveCdc, HColoringError> {
    five_cdc_containing(p10, circuit)
        .map_err(|e| HColoringError::PullbackFailed {
            reason: e.to_string(),
        })?
        .ok_or(HColoringError::MissingDoubleCover)
}

fn validated_cdc(
    p10: &Multigraph,
    circuit: &[EdgeId],
    entry: &P10CdcFixtureEntry,
) -> Result<FiveCdc, HColoringError> {
    let members: [Vec<EdgeId>; 5] =
        entry
            .members
            .clone()
            .try_into()
            .map_err(|_| HColoringError::BadFixture {
                reason: format!("entry needs 5 members, got {}", entry.members.len()),
            })?;
    let cdc = FiveCdc { members };
    let report = verify_cover(p10, &CoverCertificate::from(&cdc));
    if !report.valid {
        return Err(HColoringError::BadFixture {
            reason: report.violation.unwrap_or_default(),
        });
    }
    if !cdc.members.iter().any(|m| m == circuit) {
        return Err(HColoringError::BadFixture {
            reason: "entry does not contain its own circuit".into(),
        });
    }
    Ok(cdc)
}

/// Reads one circuit's double cover from a fixture file, re-verifying it
/// against the Petersen graph. `Ok(None)` when the file has no entry for
/// the circuit.
pub fn load_p10_cdc_entry(
    path: &Path,
    circuit: &[EdgeId],
) -> Result<Option<FiveCdc>, HColoringError> {
    let text = std::fs::read_to_string(path).map_err(|e| HColoringError::BadFixture {
        reason: format!("{}: {e}", path.display()),
    })?;
    let file: P10CdcFixtureFile =
        serde_json::from_str(&text).map_err(|e| HColoringError::BadFixture {
            reason: format!("{}: {e}", path.display()),
        })?;
    if file.format != P10_CDC_FIXTURE_FORMAT {
        return Err(HColoringError::BadFixture {
            reason: format!(
                "format {:?}, expected {:?}",
                file.format, P10_CDC_FIXTURE_FORMAT
            ),
        });
    }
    let p10 = generate(GraphName::P10);
    file.entries
        .iter()
        .find(|e| e.circuit == circuit)
        .map(|e| validated_cdc(&p10, circuit, e))
        .transpose()
}

static P10_CDC_CACHE: OnceLock<Mutex<BTreeMap<Vec<EdgeId>, FiveCdc>>> = OnceLock::new();

/// A double cover of the Petersen graph containing `circuit`, from the
/// process cache, the optional fixture directory, or a fresh search.
fn p10_cdc_containing(p10: &Multigraph, circuit: &[EdgeId]) -> Result<FiveCdc, HColoringError> {
    let cache = P10_CDC_CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(circuit) {
        return Ok(hit.clone());
    }
    let mut cdc = None;
    if let Some(dir) = std::env::var_os("TRICUB_FIXTURES") {
        let path = Path::new(&dir).join(P10_CDC_FIXTURE_FILE);
        if path.exists() {
            cdc = load_p10_cdc_entry(&path, circuit)?;
        }
    }
    let cdc = match cdc {
        Some(c) => c,
        None => search_p10_cdc(p10, circuit)?,
    };
    cache
        .lock()
        .expect("cache lock")
        .insert(circuit.to_vec(), cdc.clone());
    Ok(cdc)
}

/// Turns a coloring of `g` by the Petersen graph into a five-member double
/// cover of `g` whose largest member has at least `3/5 |E|` edges.
///
/// The Petersen vertex hit by the fewest source stars (ties to the smallest
/// index) is avoided by a 9-circuit; a double cover of the Petersen graph
/// through that circuit pulls back edge by edge to a double cover of `g`.
/// Every vertex whose star misses the avoided vertex contributes two edges
/// to the circuit's pullback, which is what makes some member large.
pub fn petersen_coloring_to_cdc(
    g: &Multigraph,
    f: &HColoring,
) -> Result<FiveCdc, HColoringError> {
    if f.source != *g {
        return Err(HColoringError::MismatchedSource);
    }
    let p10 = generate(GraphName::P10);
    if f.target != p10 {
        return Err(HColoringError::TargetNotPetersen);
    }
    let report = verify_hcoloring(f);
    if !report.valid {
        return Err(HColoringError::InvalidColoring {
            reason: report.violation.unwrap_or_default(),
        });
    }
    let stars = vertex_stars(&p10);
    let mut preimages = vec![0usize; p10.vertex_count()];
    for v in 0..g.vertex_count() {
        preimages[image_vertex(&stars, f, v)] += 1;
    }
    let z = (0..p10.vertex_count())
        .min_by_key(|&w| (preimages[w], w))
        .expect("the Petersen graph has vertices");
    let circuit = nine_circuit_avoiding(&p10, z);
    let cdc = p10_cdc_containing(&p10, &circuit)?;
    let mut pulled: Vec<Vec<EdgeId>> = cdc
        .members
        .iter()
        .map(|member| {
            let mut flag = vec![false; p10.edge_count()];
            for &e in member {
                flag[e] = true;
            }
            (0..g.edge_count()).filter(|&e| flag[f.phi[e]]).collect()
        })
        .collect();
    pulled.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let members: [Vec<EdgeId>; 5] = pulled.try_into().expect("five members pull back");
    let result = FiveCdc { members };
    let report = verify_cover(g, &CoverCertificate::from(&result));
    if !report.valid {
        return Err(HColoringError::PullbackFailed {
            reason: report.violation.unwrap_or_default(),
        });
    }
    if 5 * result.members[0].len() < 3 * g.edge_count() {
        return Err(HColoringError::PullbackFailed {
            reason: format!(
                "largest member has {} edges, below three fifths of {}",
                result.members[0].len(),
                g.edge_count()
            ),
        });
    }
    Ok(result)
}
