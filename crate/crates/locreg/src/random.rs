//! Random regular graphs via the pairing model.
//!
//! Each vertex gets d half-edge stubs; a uniform perfect matching on the
//! stubs is resampled until it yields a simple graph. For the small d and n
//! used here the rejection rate is modest (asymptotically e^{(1-d^2)/4}).

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A uniform random simple d-regular graph on n vertices, by rejection
/// sampling over the pairing model. Requires nd even and d < n.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, d: usize, max_attempts: usize) -> Result<Graph> {
    if n * d % 2 != 0 {
        return Err(Error::Precondition(format!(
            "no {d}-regular graph on {n} vertices: nd is odd"
        )));
    }
    if d >= n.max(1) {
        return Err(Error::Precondition(format!(
            "degree {d} needs more than {n} vertices"
        )));
    }
    if d == 0 {
        return Graph::empty(n);
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    'attempt: for _ in 0..max_attempts {
        stubs.shuffle(rng);
        let mut g = Graph::empty(n)?;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt; // loop or multi-edge: resample
            }
            g.add_edge(u, v)?;
        }
        return Ok(g);
    }
    Err(Error::Precondition(format!(
        "pairing model failed to produce a simple {d}-regular graph on {n} vertices in {max_attempts} attempts"
    )))
}

/// A random connected d-regular graph, resampling until connected.
pub fn random_connected_regular<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    max_attempts: usize,
) -> Result<Graph> {
    for _ in 0..max_attempts {
        let g = random_regular(rng, n, d, max_attempts)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Precondition(format!(
        "no connected {d}-regular graph on {n} vertices found in {max_attempts} attempts"
    )))
}
