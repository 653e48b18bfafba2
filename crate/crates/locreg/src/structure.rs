//! Structural checks on (k,t)-regular graphs: Venn region profiles of
//! triangles, twin classes and their forced size, the exact two-path bound,
//! the far-connectivity threshold witness, complete-multipartite recognition,
//! and the diagonal-regime classifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, KtParameters};
use crate::products::lex_blowup;

/// Region sizes of the Venn diagram of N(x), N(y), N(z) for a triangle
/// {x,y,z}. Sizes are raw set sizes, so the triangle's own vertices sit
/// inside the pairwise regions (z lies in N(x) ∩ N(y) − N(z), and so on).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VennProfile {
    /// |N(x) ∩ N(y) ∩ N(z)|
    pub m: usize,
    /// |N(x)∩N(y)−N(z)|, |N(x)∩N(z)−N(y)|, |N(y)∩N(z)−N(x)|
    pub pairwise_only: [usize; 3],
    /// |N(x)−(N(y)∪N(z))|, |N(y)−(N(x)∪N(z))|, |N(z)−(N(x)∪N(y))|
    pub exclusive: [usize; 3],
}

impl VennProfile {
    /// In a (k,t)-regular graph the three exclusive sizes are equal.
    pub fn exclusive_sizes_equal(&self) -> bool {
        self.exclusive[0] == self.exclusive[1] && self.exclusive[1] == self.exclusive[2]
    }
}

pub fn venn_profile(g: &Graph, x: usize, y: usize, z: usize) -> Result<VennProfile> {
    if x == y
        || y == z
        || x == z
        || !g.has_edge(x, y)
        || !g.has_edge(y, z)
        || !g.has_edge(x, z)
    {
        return Err(Error::NotATriangle([x, y, z]));
    }
    let (nx, ny, nz) = (g.neighbours(x), g.neighbours(y), g.neighbours(z));
    let m = nx.intersection(ny).intersection_count(nz);
    let pairwise_only = [
        nx.intersection(ny).difference(nz).count(),
        nx.intersection(nz).difference(ny).count(),
        ny.intersection(nz).difference(nx).count(),
    ];
    let exclusive = [
        nx.difference(&ny.union(nz)).count(),
        ny.difference(&nx.union(nz)).count(),
        nz.difference(&nx.union(ny)).count(),
    ];
    Ok(VennProfile {
        m,
        pairwise_only,
        exclusive,
    })
}

/// All vertices with the same neighbourhood as v, v included.
pub fn twins(g: &Graph, v: usize) -> Result<Vec<usize>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.n(),
        });
    }
    Ok((0..g.n())
        .filter(|&u| g.neighbours(u) == g.neighbours(v))
        .collect())
}

/// Twin classes in order of their minimum vertex.
pub fn twin_partition(g: &Graph) -> Vec<Vec<usize>> {
    use std::collections::HashMap;
    let mut index: HashMap<&crate::bitset::Bitset, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        match index.get(g.neighbours(v)) {
            Some(&i) => classes[i].push(v),
            None => {
                index.insert(g.neighbours(v), classes.len());
                classes.push(vec![v]);
            }
        }
    }
    classes
}

/// Per-vertex outcome of the twin-count law: a vertex of a (k,t)-regular
/// graph whose complement local graph is far-connected has exactly k-t twins.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TwinCountOutcome {
    /// Hypothesis held and the twin class has size k-t.
    Verified { twin_count: usize },
    /// The complement of the local graph is not far-connected; the law
    /// does not apply at this vertex.
    HypothesisNotMet,
    /// Hypothesis held but the count is wrong; indicates a library bug.
    Violation { twin_count: usize, expected: usize },
}

pub fn check_twin_count(g: &Graph) -> Result<Vec<TwinCountOutcome>> {
    let params = g
        .kt()
        .ok_or_else(|| Error::NotKtRegular(format!("{:?}", g.certify())))?;
    let expected = (params.k - params.t) as usize;
    let mut out = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let (local, _) = g.local_graph(v)?;
        if !local.complement().is_far_connected() {
            out.push(TwinCountOutcome::HypothesisNotMet);
            continue;
        }
        let twin_count = twins(g, v)?.len();
        out.push(if twin_count == expected {
            TwinCountOutcome::Verified { twin_count }
        } else {
            TwinCountOutcome::Violation {
                twin_count,
                expected,
            }
        });
    }
    Ok(out)
}

/// K_m[K̄_d]: m parts of size d, all cross edges. Certifies
/// ((m-1)d, (m-2)d). Part p holds vertices p*d .. p*d+d-1.
pub fn complete_multipartite(parts: usize, part_size: usize) -> Result<Graph> {
    assert!(parts >= 2, "need at least two parts");
    assert!(part_size >= 1, "parts must be nonempty");
    lex_blowup(&Graph::complete(parts)?, part_size)
}

/// Recognizes complete multipartite graphs with equal part sizes via the
/// twin partition; returns (parts, part_size) or None.
pub fn recognize_complete_multipartite(g: &Graph) -> Option<(usize, usize)> {
    if g.n() == 0 {
        return None;
    }
    let classes = twin_partition(g);
    let d = classes[0].len();
    if classes.iter().any(|c| c.len() != d) {
        return None;
    }
    let m = classes.len();
    if m < 2 {
        return None;
    }
    // Twins are never adjacent (irreflexivity), so it suffices to demand
    // full adjacency between distinct classes.
    for i in 0..m {
        for j in (i + 1)..m {
            for &u in &classes[i] {
                for &v in &classes[j] {
                    if !g.has_edge(u, v) {
                        return None;
                    }
                }
            }
        }
    }
    Some((m, d))
}

/// An exact nonnegative rational, kept reduced.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Rational {
    pub num: u128,
    pub den: u128,
}

impl Rational {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0);
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn ge_int(&self, x: u128) -> bool {
        self.num >= x * self.den
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Count and bound for undirected paths of length at most 2 between the two
/// sides of a bipartition of a connected d-regular graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TwoPathReport {
    pub x_size: usize,
    pub y_size: usize,
    pub path_count: u128,
    /// |X||Y|/(|X|+|Y|) * (d^2 + d + 1/4), exactly.
    pub bound: Rational,
}

impl TwoPathReport {
    pub fn holds(&self) -> bool {
        self.bound.ge_int(self.path_count)
    }
}

/// Counts undirected paths of length 1 or 2 whose endpoints are separated by
/// the partition (X = `x_part`, Y = the rest); midpoints are unconstrained.
pub fn two_path_report(g: &Graph, x_part: &[usize]) -> Result<TwoPathReport> {
    let params = g
        .kt()
        .map(Ok)
        .unwrap_or_else(|| match g.certify() {
            crate::graph::RegularityReport::NotRegular { vertex, degree, .. } => Err(
                Error::NotRegular(format!("vertex {vertex} has degree {degree}")),
            ),
            // Only plain regularity is required here.
            _ => Ok(KtParameters::new(g.degree(0) as u32, 0)),
        })?;
    let d = params.k as u128;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut in_x = vec![false; g.n()];
    for &v in x_part {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.n(),
            });
        }
        in_x[v] = true;
    }
    let x_size = in_x.iter().filter(|&&b| b).count();
    let y_size = g.n() - x_size;
    if x_size == 0 || y_size == 0 {
        return Err(Error::TrivialPartition);
    }

    let mut count: u128 = 0;
    // Length 1: edges across the partition.
    for (u, v) in g.edges() {
        if in_x[u] != in_x[v] {
            count += 1;
        }
    }
    // Length 2: for each midpoint w, pair a neighbour in X with one in Y.
    for w in 0..g.n() {
        let mut dx = 0u128;
        let mut dy = 0u128;
        for u in g.neighbours(w).iter() {
            if in_x[u] {
                dx += 1;
            } else {
                dy += 1;
            }
        }
        count += dx * dy;
    }

    let bound = Rational::new(
        x_size as u128 * y_size as u128 * (4 * d * d + 4 * d + 1),
        4 * (x_size as u128 + y_size as u128),
    );
    Ok(TwoPathReport {
        x_size,
        y_size,
        path_count: count,
        bound,
    })
}

/// The d-regular graph of order d^2 + d that is not far-connected, showing
/// the far-connectivity order threshold is tight.
///
/// Labeling: hub vertices v_1..v_d are 0..d-1; w_{i,j} (1-based i, j) is
/// d + (i-1)*d + (j-1). Edges: v_i ~ w_{i,j} for all j, and w_{i,j} ~ w_{i',j}
/// for i != i'.
pub fn extremal_graph(d: usize) -> Result<Graph> {
    assert!(d >= 1);
    let w = |i: usize, j: usize| d + (i - 1) * d + (j - 1);
    let mut g = Graph::empty(d * d + d)?;
    for i in 1..=d {
        for j in 1..=d {
            g.add_edge(i - 1, w(i, j))?;
            for i2 in (i + 1)..=d {
                g.add_edge(w(i, j), w(i2, j))?;
            }
        }
    }
    Ok(g)
}

/// Result of the diagonal-regime classifier.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DiagonalClassification {
    /// k >= d^2 - d + 1 held; d divides k and the graph is the complete
    /// multipartite graph with these (parts, part_size).
    Classified { parts: usize, part_size: usize },
    /// k < d^2 - d + 1; the classification theorem does not apply.
    HypothesisNotMet,
}

/// For a connected (k, k-d)-regular graph with k >= d^2 - d + 1, verifies
/// that d divides k and the graph is K_{(k+d)/d}[K̄_d].
pub fn classify_diagonal(g: &Graph) -> Result<DiagonalClassification> {
    let params = g
        .kt()
        .ok_or_else(|| Error::NotKtRegular(format!("{:?}", g.certify())))?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let d = params.d();
    if d < 1 {
        return Err(Error::Precondition(format!(
            "need k > t, got {params}"
        )));
    }
    let (k, d) = (params.k as i64, d);
    if k < d * d - d + 1 {
        return Ok(DiagonalClassification::HypothesisNotMet);
    }
    if k % d != 0 {
        return Err(Error::Precondition(format!(
            "connected ({k},{}) graph exists with {d} not dividing {k}; \
             this contradicts the classification and indicates a bug",
            params.t
        )));
    }
    let expected = (((k + d) / d) as usize, d as usize);
    match recognize_complete_multipartite(g) {
        Some((m, ps)) if (m, ps) == expected => Ok(DiagonalClassification::Classified {
            parts: m,
            part_size: ps,
        }),
        other => Err(Error::Precondition(format!(
            "expected complete multipartite {expected:?}, recognized {other:?}"
        ))),
    }
}

/// For distinct y, z in N(x) with N(x) ⊆ N(y) ∪ N(z) in a (k,t)-regular
/// graph, checks the three forced set equalities:
/// N(y)−N(x) = N(z)−N(x), N(x)−N(y) = N(z)−N(y), N(x)−N(z) = N(y)−N(z).
/// A false return under valid preconditions would indicate a bug.
pub fn check_corollary_42(g: &Graph, x: usize, y: usize, z: usize) -> Result<bool> {
    g.kt()
        .ok_or_else(|| Error::NotKtRegular(format!("{:?}", g.certify())))?;
    if y == z || !g.has_edge(x, y) || !g.has_edge(x, z) {
        return Err(Error::Precondition(format!(
            "need distinct y={y}, z={z} adjacent to x={x}"
        )));
    }
    let (nx, ny, nz) = (g.neighbours(x), g.neighbours(y), g.neighbours(z));
    if !nx.difference(&ny.union(nz)).is_empty() {
        return Err(Error::Precondition(
            "N(x) is not contained in N(y) ∪ N(z)".into(),
        ));
    }
    Ok(ny.difference(nx) == nz.difference(nx)
        && nx.difference(ny) == nz.difference(ny)
        && nx.difference(nz) == ny.difference(nz))
}

/// All triangles of g as ordered triples x < y < z.
pub fn triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (x, y) in g.edges() {
        for z in g.neighbours(x).intersection(g.neighbours(y)).iter() {
            if z > y {
                out.push((x, y, z));
            }
        }
    }
    out
}
