//! Canonical labeling for graphs on at most 64 vertices.
//!
//! Iterated neighbourhood refinement to the coarsest equitable partition,
//! then backtracking over individualizations, taking the lexicographically
//! least adjacency matrix over all admissible labelings. Equal canonical
//! strings hold exactly for isomorphic graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical graph6 string of the relabeled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(pub String);

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Word-per-vertex adjacency; the working representation of the search
/// kernel and the canonizer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SmallGraph {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::CanonicalTooLarge(n));
        }
        Ok(SmallGraph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut s = SmallGraph::empty(g.n())?;
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).unwrap();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> u32 {
        (self.rows[u] & self.rows[v]).count_ones()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let mut next = seen;
            let mut bits = seen;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.rows[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Relabel: new vertex i is old vertex `labels[i]`.
    pub fn relabel(&self, labels: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::empty(self.n).unwrap();
        let mut position = vec![0usize; self.n];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        for u in 0..self.n {
            let mut bits = self.rows[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if v > u {
                    g.add_edge(position[u], position[v]);
                }
            }
        }
        g
    }
}

/// Ordered partition of the vertices into cells.
type Partition = Vec<Vec<usize>>;

/// Refines to the coarsest equitable partition: repeatedly split every cell
/// by the vertices' neighbour counts into each cell, keying sub-cells by
/// count so the refinement is isomorphism-invariant.
fn refine(g: &SmallGraph, mut partition: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(partition.len());
        let mut changed = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // Signature: neighbour count into every current cell.
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks
                            .iter()
                            .map(|&m| (g.rows[v] & m).count_ones())
                            .collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut sub: Vec<usize> = vec![keyed[0].1];
            for w in 1..keyed.len() {
                if keyed[w].0 != keyed[w - 1].0 {
                    next.push(std::mem::take(&mut sub));
                }
                sub.push(keyed[w].1);
            }
            next.push(sub);
        }
        changed |= next.len() != partition.len();
        if !changed {
            return next;
        }
        partition = next;
    }
}

/// The adjacency key of a labeling: rows of the relabeled graph.
fn labeling_key(g: &SmallGraph, labels: &[usize]) -> Vec<u64> {
    let mut position = vec![0usize; g.n];
    for (new, &old) in labels.iter().enumerate() {
        position[old] = new;
    }
    let mut key = vec![0u64; g.n];
    for (new, &old) in labels.iter().enumerate() {
        let mut bits = g.rows[old];
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            key[new] |= 1 << position[v];
        }
    }
    key
}

fn search(g: &SmallGraph, partition: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    // Discrete partition: a concrete labeling.
    if partition.iter().all(|c| c.len() == 1) {
        let labels: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let key = labeling_key(g, &labels);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, labels));
        }
        return;
    }
    let target = partition.iter().position(|c| c.len() > 1).unwrap();
    for &v in &partition[target] {
        let mut split = partition.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&u| u != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, refine(g, split), best);
    }
}

pub fn canonical_small(g: &SmallGraph) -> CanonicalForm {
    if g.n == 0 {
        return CanonicalForm(crate::graph6::encode(&Graph::empty(0).unwrap()));
    }
    let initial = refine(g, vec![(0..g.n).collect()]);
    let mut best = None;
    search(g, initial, &mut best);
    let (_, labels) = best.unwrap();
    CanonicalForm(crate::graph6::encode(&g.relabel(&labels).to_graph()))
}

/// Canonical form of a graph on at most 64 vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_small(&SmallGraph::from_graph(g)?))
}
