//! Randomized invariants over pairing-model graphs: serialization round
//! trips, expansion/contraction inverses, parity identities, and matching
//! transfer.

use proptest::prelude::*;

use tricub::graph::{
    decode_sparse6, encode_sparse6, parse_edge_list, random_cubic, serialize_edge_list, Gadget,
    Multigraph, VertexId,
};
use tricub::matching::{
    find_perfect_matching, is_perfect_matching, lift_parity, min_parity_subgraph,
    subgraph_degrees, transfer_matching, ParityBackend,
};
use tricub::structure::{contract_triangle, expand_vertices, subdivide_attach};

/// A deterministic cubic multigraph: order in 4..=12, parallel edges unless
/// `simple`, topology from `seed`.
fn graph_strategy() -> impl Strategy<Value = Multigraph> {
    (0usize..5, any::<bool>(), any::<u64>()).prop_map(|(i, simple, seed)| {
        let n = [4, 6, 8, 10, 12][i];
        random_cubic(n, simple, seed).expect("pairing model converges at this scale")
    })
}

fn sorted_endpoints(g: &Multigraph) -> Vec<(VertexId, VertexId)> {
    let mut out: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    out.sort_unstable();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip_is_the_identity(g in graph_strategy()) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).expect("serializer output parses");
        prop_assert_eq!(&back, &g);
    }

    #[test]
    fn sparse6_round_trip_preserves_the_edge_multiset(g in graph_strategy()) {
        let text = encode_sparse6(&g);
        let back = decode_sparse6(&text).expect("encoder output decodes");
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(sorted_endpoints(&back), sorted_endpoints(&g));
    }

    #[test]
    fn random_graphs_are_cubic_connected_and_reproducible(
        i in 0usize..5,
        simple in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let n = [4, 6, 8, 10, 12][i];
        let g = random_cubic(n, simple, seed).expect("pairing model converges");
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert!(g.degrees().iter().all(|&d| d == 3));
        prop_assert_eq!(2 * g.edge_count(), 3 * n);
        prop_assert!(g.is_connected());
        if simple {
            prop_assert!(g.is_simple());
        }
        let again = random_cubic(n, simple, seed).expect("same seed, same graph");
        prop_assert_eq!(&again, &g);
    }

    #[test]
    fn expansion_then_contraction_is_the_identity(g in graph_strategy(), mask in any::<u32>()) {
        let u: Vec<VertexId> = (0..g.vertex_count())
            .filter(|v| (mask >> v) & 1 == 1)
            .collect();
        let exp = expand_vertices(&g, &u).expect("cubic input");
        prop_assert_eq!(exp.graph.vertex_count(), g.vertex_count() + 2 * u.len());
        prop_assert_eq!(exp.graph.edge_count(), g.edge_count() + 3 * u.len());
        prop_assert!(exp.graph.degrees().iter().all(|&d| d == 3));
        prop_assert!(exp.graph.is_connected());

        // Collapse the recorded triangles from the last down: every earlier
        // corner and edge id sits below the removed range, so the recorded
        // labels stay valid throughout.
        let mut cur = exp.graph.clone();
        for i in (0..u.len()).rev() {
            let res = contract_triangle(&cur, exp.corners[i]).expect("recorded triangle");
            prop_assert_eq!(res.merged, u[i]);
            cur = res.graph;
        }
        prop_assert_eq!(&cur, &g);
    }

    #[test]
    fn minimum_parity_subgraph_obeys_the_degree_identity(g in graph_strategy()) {
        let j = min_parity_subgraph(&g, ParityBackend::Blossom).expect("cubic connected input");
        let deg = subgraph_degrees(&g, &j).expect("edge ids in range");
        prop_assert!(deg.iter().all(|&d| d % 2 == 1));
        let v3 = deg.iter().filter(|&&d| d == 3).count();
        prop_assert_eq!(2 * j.len(), g.vertex_count() + 2 * v3);

        let rest: Vec<_> = (0..g.edge_count()).filter(|e| !j.contains(e)).collect();
        let rdeg = subgraph_degrees(&g, &rest).expect("edge ids in range");
        prop_assert!(rdeg.iter().all(|&d| d % 2 == 0), "complement must be even");
    }

    #[test]
    fn lifted_parity_subgraph_matches_the_expansion(g in graph_strategy()) {
        let j = min_parity_subgraph(&g, ParityBackend::Blossom).expect("cubic connected input");
        let deg = subgraph_degrees(&g, &j).expect("edge ids in range");
        let u: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| deg[v] == 3).collect();
        let exp = expand_vertices(&g, &u).expect("cubic input");
        let pm = lift_parity(&g, &exp, &j).expect("parity subgraph lifts");
        prop_assert!(is_perfect_matching(&exp.graph, &pm));
    }

    #[test]
    fn transferred_matchings_stay_perfect(
        g in graph_strategy(),
        mask in any::<u32>(),
        use_w in any::<bool>(),
    ) {
        let e0: Vec<_> = (0..g.edge_count())
            .filter(|e| (mask >> e) & 1 == 1)
            .collect();
        prop_assume!(!e0.is_empty());
        let Some(pm) = find_perfect_matching(&g) else {
            return Ok(()); // three or more bridges: nothing to transfer
        };
        let gadget = if use_w { Gadget::W } else { Gadget::WPrime };
        let att = subdivide_attach(&g, &e0, gadget).expect("valid attach set");
        let out = transfer_matching(&g, &att, &pm).expect("perfect matchings transfer");
        prop_assert!(is_perfect_matching(&out.expansion.graph, &out.matching));
        let used = e0.iter().filter(|&&e| pm.contains(&e)).count();
        prop_assert_eq!(out.expanded_roots.len(), used);
    }
}
