//! Exhaustive enumeration of connected simple cubic graphs of a given order,
//! one representative per isomorphism class.

use super::{is_isomorphic, GraphError, Multigraph};

struct Enumerator {
    n: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    max_used: usize,
    out: Vec<Multigraph>,
}

impl Enumerator {
    /// Completes the smallest vertex of degree < 3, or emits when every
    /// vertex is full.
    fn extend(&mut self) {
        match (0..self.n).find(|&v| self.deg[v] < 3) {
            None => self.emit(),
            // A deficient vertex beyond every used label would start a new
            // component; only connected graphs are wanted, so prune.
            Some(v) if v > self.max_used => {}
            Some(v) => self.fill(v, v + 1),
        }
    }

    /// Adds one edge (v, u) with u >= min_u. Neighbors of v are chosen in
    /// ascending order and new labels are introduced consecutively, so each
    /// labeled graph arises exactly once.
    fn fill(&mut self, v: usize, min_u: usize) {
        let limit = (self.max_used + 1).min(self.n - 1);
        for u in min_u..=limit {
            if self.deg[u] == 3 || self.adj[v][u] {
                continue;
            }
            self.adj[v][u] = true;
            self.adj[u][v] = true;
            self.deg[v] += 1;
            self.deg[u] += 1;
            let old_max = self.max_used;
            self.max_used = self.max_used.max(u);
            if self.deg[v] == 3 {
                self.extend();
            } else {
                self.fill(v, u + 1);
            }
            self.max_used = old_max;
            self.adj[v][u] = false;
            self.adj[u][v] = false;
            self.deg[v] -= 1;
            self.deg[u] -= 1;
        }
    }

    fn emit(&mut self) {
        let mut edges = Vec::with_capacity(3 * self.n / 2);
        for v in 0..self.n {
            for u in v + 1..self.n {
                if self.adj[v][u] {
                    edges.push((v, u));
                }
            }
        }
        let g = Multigraph::from_edges(self.n, &edges).expect("enumerator emits valid edges");
        if !g.is_connected() {
            return;
        }
        if !self.out.iter().any(|h| is_isomorphic(h, &g)) {
            self.out.push(g);
        }
    }
}

/// All connected simple cubic graphs on `n` vertices up to isomorphism,
/// with deterministic labels and edge order. Desk scale: intended for
/// n <= 12 or so.
pub fn enumerate_simple_cubic(n: usize) -> Result<Vec<Multigraph>, GraphError> {
    if !n.is_multiple_of(2) {
        return Err(GraphError::InvalidOrder {
            order: n,
            reason: "a cubic graph has even order",
        });
    }
    if n < 4 {
        return Err(GraphError::InvalidOrder {
            order: n,
            reason: "a simple cubic graph needs at least 4 vertices",
        });
    }
    let mut e = Enumerator {
        n,
        adj: vec![vec![false; n]; n],
        deg: vec![0; n],
        max_used: 0,
        out: Vec::new(),
    };
    e.extend();
    Ok(e.out)
}
