//! Cross-cutting invariants over random inputs: certification agreement
//! between the edge-triangle and local-graph formulations, adjacency
//! symmetry, far-graph disjointness, and graph6 round-trips.

use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use locreg::graph::{Graph, RegularityReport};
use locreg::graph6;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// The local-graph formulation of (k,t)-regularity, written independently
/// of Graph::certify: every neighbourhood induces a t-regular graph of
/// order k.
fn local_graph_certifies(g: &Graph) -> Option<(usize, usize)> {
    if g.n() == 0 {
        return None;
    }
    let k = g.degree(0);
    if k == 0 {
        // Edgeless graphs are not certified (k >= 1 by convention).
        return None;
    }
    let mut t = None;
    for v in 0..g.n() {
        if g.degree(v) != k {
            return None;
        }
        let (local, _) = g.local_graph(v).unwrap();
        if local.n() != k {
            return None;
        }
        for u in 0..local.n() {
            let d = local.degree(u);
            match t {
                None => t = Some(d),
                Some(t0) if t0 != d => return None,
                _ => {}
            }
        }
    }
    Some((k, t.unwrap_or(0)))
}

#[test]
fn certify_matches_local_graph_formulation() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut kt_seen = 0;
    for i in 0..600 {
        // Mix sparse/dense random graphs with structured ones so both
        // certifying and non-certifying cases appear.
        let g = match i % 6 {
            0 => Graph::complete(2 + i % 12).unwrap(),
            1 => Graph::cycle(3 + i % 11).unwrap(),
            _ => {
                let n = rng.gen_range(1..=14);
                let p = rng.gen_range(0.1..0.9);
                random_graph(&mut rng, n, p)
            }
        };
        let via_local = local_graph_certifies(&g);
        let via_certify = g.kt().map(|p| (p.k as usize, p.t as usize));
        assert_eq!(via_certify, via_local, "graph {}", graph6::encode(&g));
        if via_certify.is_some() {
            kt_seen += 1;
        }
    }
    assert!(kt_seen >= 100, "only {kt_seen} certifying graphs sampled");
}

#[test]
fn handshake_and_symmetry_on_constructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.gen_range(0..=20);
        let g = random_graph(&mut rng, n, 0.4);
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum % 2, 0);
        assert_eq!(degree_sum, 2 * g.edge_count());
        for (u, v) in g.edges() {
            assert!(u < v);
            assert!(g.has_edge(v, u));
            assert_ne!(u, v);
        }
    }
}

#[test]
fn far_graph_disjoint_from_short_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..100 {
        let n = rng.gen_range(1..=16);
        let g = random_graph(&mut rng, n, 0.25);
        let far = g.far_graph();
        for u in 0..n {
            let dist = g.distances_from(u).unwrap();
            for v in 0..n {
                if far.has_edge(u, v) {
                    assert!(dist[v] >= 3, "far edge at distance {}", dist[v]);
                }
                if u != v && dist[v] <= 2 {
                    assert!(!far.has_edge(u, v));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(edges in proptest::collection::vec((0usize..18, 0usize..18), 0..60)) {
        let mut g = Graph::empty(18).unwrap();
        for (u, v) in edges {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        let text = graph6::encode(&g);
        let back = graph6::decode(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(graph6::encode(&back), text);
    }

    #[test]
    fn certify_reports_are_consistent(edges in proptest::collection::vec((0usize..10, 0usize..10), 0..30)) {
        let mut g = Graph::empty(10).unwrap();
        for (u, v) in edges {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        match g.certify() {
            RegularityReport::KtRegular(p) => {
                prop_assert_eq!(g.kt(), Some(p));
            }
            _ => prop_assert_eq!(g.kt(), None),
        }
    }
}
