//! Seeded random cubic multigraphs via the pairing model.
//!
//! Three stubs per vertex are paired uniformly at random; pairings with loops
//! (or parallel edges, when a simple graph is requested) or a disconnected
//! result are rejected and the draw repeats on a fresh stream of the same
//! seed, so results are reproducible across runs and platforms.

use super::{GraphError, Multigraph, VertexId};
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: u64 = 100_000;

pub fn random_cubic(n: usize, simple: bool, seed: u64) -> Result<Multigraph, GraphError> {
    if n % 2 == 1 {
        return Err(GraphError::InvalidOrder { order: n, reason: "cubic graphs have even order" });
    }
    if simple && n < 4 {
        return Err(GraphError::InvalidOrder {
            order: n,
            reason: "no simple cubic graph below 4 vertices",
        });
    }
    if n < 2 {
        return Err(GraphError::InvalidOrder { order: n, reason: "need at least 2 vertices" });
    }

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);

        let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);

        let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                ok = false;
                break;
            }
            edges.push((u, v));
        }
        if !ok {
            continue;
        }
        edges.sort_unstable();
        if simple && edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = Multigraph::from_edges(n, &edges).expect("pairing avoids loops");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::GenerationExhausted { attempts: MAX_ATTEMPTS as usize })
}
