//! Simple undirected graphs with per-vertex neighbour bitsets.
//!
//! Vertices are dense integers `0..n`. Every constructor maintains the two
//! representation invariants: adjacency is symmetric and irreflexive.

use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Hard cap on the vertex count; bounds memory for bitset rows.
pub const MAX_VERTICES: usize = 1 << 16;

/// Distance sentinel for unreachable pairs, strictly greater than any finite
/// distance, so `dist >= 3` covers disconnected pairs without branching.
pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// The pair (k, t): valency and local valency.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct KtParameters {
    pub k: u32,
    pub t: u32,
}

impl KtParameters {
    pub fn new(k: u32, t: u32) -> Self {
        KtParameters { k, t }
    }

    /// The diagonal parameter d = k - t.
    pub fn d(&self) -> i64 {
        self.k as i64 - self.t as i64
    }
}

impl std::fmt::Display for KtParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.k, self.t)
    }
}

/// Outcome of `certify`, with a concrete witness for every failure mode.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "outcome")]
pub enum RegularityReport {
    /// Every vertex has degree k and every edge lies in exactly t triangles.
    KtRegular(KtParameters),
    /// Some vertex has a degree deviating from the reference degree
    /// (the degree of vertex 0), or the graph is edgeless (k = 0 excluded).
    NotRegular {
        vertex: usize,
        degree: u32,
        reference_degree: u32,
    },
    /// Regular and all local graphs regular, but local valencies differ:
    /// witnessed by an edge whose triangle count deviates.
    RegularNotLocallyRegular {
        edge: (usize, usize),
        triangles: u32,
        reference_triangles: u32,
    },
    /// Some vertex's local graph is not regular.
    LocallyIrregular { vertex: usize },
}

impl RegularityReport {
    pub fn parameters(&self) -> Option<KtParameters> {
        match self {
            RegularityReport::KtRegular(p) => Some(*p),
            _ => None,
        }
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: (0..n).map(|_| Bitset::new(n)).collect(),
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n)?;
            }
        } else if n == 2 {
            g.add_edge(0, 1)?;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts {u,v}; self-loops are rejected to keep irreflexivity.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// The neighbour bitset of v.
    pub fn neighbours(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Number of triangles containing the edge {u,v}.
    #[inline]
    pub fn triangles_on_edge(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection_count(&self.adj[v])
    }

    /// Induced subgraph on the neighbourhood of v, plus the map from its
    /// vertex labels back to labels in `self` (increasing order).
    pub fn local_graph(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let labels = self.adj[v].to_vec();
        Ok((self.induced(&labels), labels))
    }

    /// Induced subgraph on the given vertices, relabeled 0.. in list order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut g = Graph::empty(k).expect("induced subgraph under cap");
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Certifies (k,t)-regularity or reports a witness for the failure.
    ///
    /// The reference degree is that of vertex 0, and the reference triangle
    /// count that of the first edge. An edgeless graph (k = 0) reports
    /// `NotRegular` at vertex 0: valency at least 1 is assumed throughout.
    pub fn certify(&self) -> RegularityReport {
        if self.n == 0 {
            return RegularityReport::NotRegular {
                vertex: 0,
                degree: 0,
                reference_degree: 1,
            };
        }
        let k = self.degree(0);
        for v in 0..self.n {
            let d = self.degree(v);
            if d != k {
                return RegularityReport::NotRegular {
                    vertex: v,
                    degree: d as u32,
                    reference_degree: k as u32,
                };
            }
        }
        if k == 0 {
            return RegularityReport::NotRegular {
                vertex: 0,
                degree: 0,
                reference_degree: 1,
            };
        }
        // Per-vertex local regularity first: a vertex whose neighbourhood
        // induces a non-regular graph is a sharper witness than an edge.
        let mut reference: Option<(usize, usize, usize)> = None; // (u, v, t)
        for v in 0..self.n {
            let mut local_t: Option<usize> = None;
            for u in self.adj[v].iter() {
                let t = self.triangles_on_edge(v, u);
                match local_t {
                    None => local_t = Some(t),
                    Some(t0) if t0 != t => {
                        return RegularityReport::LocallyIrregular { vertex: v };
                    }
                    _ => {}
                }
                if reference.is_none() {
                    reference = Some((v.min(u), v.max(u), t));
                }
            }
            let (ru, rv, rt) = reference.unwrap();
            let t = local_t.unwrap();
            if t != rt {
                // All local graphs regular so far, valencies differ.
                let u = self.adj[v].iter().next().unwrap();
                let _ = (ru, rv);
                return RegularityReport::RegularNotLocallyRegular {
                    edge: (v.min(u), v.max(u)),
                    triangles: t as u32,
                    reference_triangles: rt as u32,
                };
            }
        }
        let t = reference.unwrap().2;
        RegularityReport::KtRegular(KtParameters::new(k as u32, t as u32))
    }

    /// Parameters if the graph certifies, shorthand for tests and assertions.
    pub fn kt(&self) -> Option<KtParameters> {
        self.certify().parameters()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// BFS distances from v; unreachable vertices get `INFINITE_DISTANCE`.
    pub fn distances_from(&self, v: usize) -> Result<Vec<u32>> {
        self.check_vertex(v)?;
        let mut dist = vec![INFINITE_DISTANCE; self.n];
        dist[v] = 0;
        let mut frontier = vec![v];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in self.adj[u].iter() {
                    if dist[w] == INFINITE_DISTANCE {
                        dist[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Graph on the same vertices joining pairs at distance >= 3
    /// (including unreachable pairs).
    pub fn far_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for v in 0..self.n {
            let dist = self.distances_from(v).unwrap();
            for (u, &d) in dist.iter().enumerate() {
                if u > v && d >= 3 {
                    g.add_edge(v, u).unwrap();
                }
            }
        }
        g
    }

    /// Whether the far graph is connected. Graphs on at most one vertex are
    /// far-connected vacuously.
    pub fn is_far_connected(&self) -> bool {
        self.far_graph().is_connected()
    }

    /// Stable JSON form: `{"n": .., "edges": [[u,v], ..]}` with edges
    /// sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
        let mut g = Graph::empty(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
        }
        g
    }

    #[test]
    fn local_graph_of_complete() {
        let g = Graph::complete(6).unwrap();
        for v in 0..6 {
            let (l, map) = g.local_graph(v).unwrap();
            assert_eq!(l.n(), 5);
            assert_eq!(l.edge_count(), 10); // K_5
            assert!(!map.contains(&v));
        }
    }

    #[test]
    fn local_graph_of_cycle() {
        let g = Graph::cycle(6).unwrap();
        let (l, _) = g.local_graph(0).unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.edge_count(), 0);
    }

    #[test]
    fn certify_complete_graphs() {
        for k in 2..=8u32 {
            let g = Graph::complete(k as usize + 1).unwrap();
            assert_eq!(
                g.certify(),
                RegularityReport::KtRegular(KtParameters::new(k, k - 1))
            );
        }
    }

    #[test]
    fn certify_path_not_regular() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        match g.certify() {
            RegularityReport::NotRegular { vertex, degree, .. } => {
                assert!(degree == 1 || degree == 2);
                assert!(vertex < 3);
            }
            other => panic!("expected NotRegular, got {other:?}"),
        }
    }

    #[test]
    fn certify_petersen() {
        // Triangle-free cubic: brute force over all 15 edges agrees.
        let g = petersen();
        for (u, v) in g.edges() {
            assert_eq!(g.triangles_on_edge(u, v), 0);
        }
        assert_eq!(g.kt(), Some(KtParameters::new(3, 0)));
    }

    #[test]
    fn certify_locally_irregular() {
        // Triangular prism: 3-regular, but the local graph of any vertex is
        // an edge plus an isolated vertex.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        match g.certify() {
            RegularityReport::LocallyIrregular { vertex } => assert!(vertex < 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certify_regular_not_locally_regular() {
        // K_4 disjoint union K_{3,3}: cubic, local graphs K_3 vs edgeless.
        let mut g = Graph::empty(10).unwrap();
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.add_edge(u, v).unwrap();
            }
        }
        for u in 4..7 {
            for v in 7..10 {
                g.add_edge(u, v).unwrap();
            }
        }
        match g.certify() {
            RegularityReport::RegularNotLocallyRegular {
                triangles,
                reference_triangles,
                ..
            } => assert_ne!(triangles, reference_triangles),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certify_edgeless_is_not_regular() {
        let g = Graph::empty(3).unwrap();
        assert!(matches!(g.certify(), RegularityReport::NotRegular { .. }));
    }

    #[test]
    fn complement_laws() {
        let g = Graph::complete(4).unwrap();
        assert_eq!(g.complement().edge_count(), 0);
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.kt(), Some(KtParameters::new(2, 0)));
        assert!(cc.is_connected()); // C_5 is self-complementary
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn distances_on_cycle() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(g.distances_from(0).unwrap(), vec![0, 1, 2, 3, 2, 1]);
        let e = Graph::empty(3).unwrap();
        assert_eq!(
            e.distances_from(0).unwrap(),
            vec![0, INFINITE_DISTANCE, INFINITE_DISTANCE]
        );
        assert!(g.distances_from(6).is_err());
    }

    #[test]
    fn components() {
        let mut g = Graph::empty(6).unwrap();
        for &(u, v) in &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
        assert!(Graph::empty(0).unwrap().is_far_connected());
    }

    #[test]
    fn far_connected_cycles() {
        assert!(!Graph::cycle(6).unwrap().is_far_connected());
        assert!(Graph::cycle(7).unwrap().is_far_connected());
        for n in 3..12 {
            assert_eq!(Graph::cycle(n).unwrap().is_far_connected(), n >= 7);
        }
        assert!(!Graph::complete(5).unwrap().is_far_connected());
    }

    #[test]
    fn far_graph_of_c6_is_perfect_matching() {
        let f = Graph::cycle(6).unwrap().far_graph();
        assert_eq!(f.edges(), vec![(0, 3), (1, 4), (2, 5)]);
        assert!(!f.is_connected());
    }

    #[test]
    fn disconnected_graphs_are_far_connected() {
        let mut g = Graph::empty(6).unwrap();
        for &(u, v) in &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(g.is_far_connected());
    }

    #[test]
    fn json_export_is_sorted() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        assert_eq!(
            g.to_json().to_string(),
            r#"{"edges":[[0,1],[0,2],[2,3]],"n":4}"#
        );
    }
}
