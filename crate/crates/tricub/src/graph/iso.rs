//! Brute-force multigraph isomorphism for desk-scale graphs.
//!
//! Backtracking over vertex maps with signature pruning. Intended for the
//! test corpus and small generators (up to roughly 20 vertices), not as a
//! general canonical-form engine.

use super::{Multigraph, VertexId};

/// Per-vertex invariant preserved by isomorphism: degree, the sorted
/// (multiplicity, neighbor degree) profile, and the sorted BFS distance
/// multiset (unreachable encoded large).
fn signatures(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut sigs = Vec::with_capacity(n);
    for v in 0..n {
        let mut sig = vec![g.degree(v)];
        let mut profile: Vec<(usize, usize)> = g
            .neighbors(v)
            .into_iter()
            .map(|w| (g.edges_between(v, w).len(), g.degree(w)))
            .collect();
        profile.sort_unstable();
        for (mult, deg) in profile {
            sig.push(mult);
            sig.push(deg);
        }
        let mut dist = vec![usize::MAX; n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut dists: Vec<usize> = dist.into_iter().map(|d| d.min(n)).collect();
        dists.sort_unstable();
        sig.extend(dists);
        sigs.push(sig);
    }
    sigs
}

fn multiplicity(g: &Multigraph, u: VertexId, v: VertexId) -> usize {
    g.edges_between(u, v).len()
}

struct Search<'a> {
    a: &'a Multigraph,
    b: &'a Multigraph,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    order: Vec<VertexId>,
    map: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<VertexId>>,
    all: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.found.push(self.map.clone());
            return !self.all;
        }
        let v = self.order[depth];
        for w in 0..self.b.vertex_count() {
            if self.used[w] || self.sig_a[v] != self.sig_b[w] {
                continue;
            }
            let consistent = (0..depth).all(|i| {
                let u = self.order[i];
                multiplicity(self.a, v, u) == multiplicity(self.b, w, self.map[u])
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

fn search(a: &Multigraph, b: &Multigraph, all: bool) -> Vec<Vec<VertexId>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Vec::new();
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Vec::new();
    }

    // Map vertices in BFS order from the rarest signature so adjacency
    // constraints bite early; disconnected graphs get per-component runs
    // appended in index order.
    let n = a.vertex_count();
    let mut rarity = std::collections::HashMap::new();
    for s in &sig_a {
        *rarity.entry(s.clone()).or_insert(0usize) += 1;
    }
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !seen[v])
            .min_by_key(|&v| (rarity[&sig_a[v]], v))
            .expect("unseen vertex exists");
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        order.push(start);
        while let Some(u) = queue.pop_front() {
            for w in a.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut s = Search {
        a,
        b,
        sig_a,
        sig_b,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        all,
    };
    s.run(0);
    s.found
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    if a.vertex_count() == 0 {
        return b.vertex_count() == 0 && b.edge_count() == 0;
    }
    !search(a, b, false).is_empty()
}

/// All automorphisms of `g` as vertex maps. Desk scale only.
pub fn automorphisms(g: &Multigraph) -> Vec<Vec<VertexId>> {
    if g.vertex_count() == 0 {
        return vec![Vec::new()];
    }
    search(g, g, true)
}

/// Orbit label per vertex under the automorphism group: each vertex maps to
/// the smallest vertex in its orbit.
pub fn vertex_orbits(g: &Multigraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut rep: Vec<VertexId> = (0..n).collect();
    fn find(rep: &mut Vec<VertexId>, v: VertexId) -> VertexId {
        if rep[v] != v {
            let r = find(rep, rep[v]);
            rep[v] = r;
        }
        rep[v]
    }
    for auto in automorphisms(g) {
        for (v, &image) in auto.iter().enumerate() {
            let (a, b) = (find(&mut rep, v), find(&mut rep, image));
            let (lo, hi) = (a.min(b), a.max(b));
            rep[hi] = lo;
        }
    }
    (0..n).map(|v| find(&mut rep, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphName};

    #[test]
    fn relabeled_petersen_is_isomorphic() {
        let p = generate(GraphName::P10);
        // relabel v -> (3v + 1) mod 10
        let perm: Vec<usize> = (0..10).map(|v| (3 * v + 1) % 10).collect();
        let edges: Vec<(usize, usize)> =
            p.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let q = Multigraph::from_edges(10, &edges).unwrap();
        assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn multiplicity_matters() {
        let theta = generate(GraphName::Theta);
        let path = Multigraph::from_edges(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert!(is_isomorphic(&theta, &path));
        let k4 = generate(GraphName::K4);
        assert!(!is_isomorphic(&theta, &k4));
    }

    #[test]
    fn k33_not_prism() {
        let k33 = generate(GraphName::K33);
        let prism = Multigraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_isomorphic(&k33, &prism));
        assert!(is_isomorphic(&prism, &prism));
    }

    #[test]
    fn automorphism_group_sizes() {
        // Vertex-map automorphism counts: theta's two vertices can swap (2),
        // K4 admits all of S4 (24), Petersen famously has 120.
        assert_eq!(automorphisms(&generate(GraphName::Theta)).len(), 2);
        assert_eq!(automorphisms(&generate(GraphName::K4)).len(), 24);
        assert_eq!(automorphisms(&generate(GraphName::P10)).len(), 120);
    }

    #[test]
    fn orbits_of_s10() {
        let orbits = vertex_orbits(&generate(GraphName::S10));
        // hub is alone; the three apexes share an orbit; the six triangle
        // vertices share an orbit
        assert_eq!(orbits[0], 0);
        assert_eq!(orbits[1], orbits[4]);
        assert_eq!(orbits[1], orbits[7]);
        assert_eq!(orbits[2], orbits[3]);
        assert_eq!(orbits[2], orbits[5]);
        assert_ne!(orbits[0], orbits[1]);
        assert_ne!(orbits[1], orbits[2]);
    }

    #[test]
    fn petersen_is_vertex_transitive() {
        let orbits = vertex_orbits(&generate(GraphName::P10));
        assert!(orbits.iter().all(|&o| o == 0));
    }
}
