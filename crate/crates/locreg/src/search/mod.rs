//! Isomorph-free exhaustive generation of connected (k,t)-regular graphs
//! up to a vertex bound.
//!
//! For each order n, k-regular graphs are grown by saturating the smallest
//! incomplete vertex with a full neighbour choice, under constraint
//! propagation on per-edge triangle counts. Symmetry is cut by fixing the
//! first vertex's neighbourhood to {1..k} and forcing untouched vertices to
//! enter in index order; completed graphs are deduplicated by canonical
//! form. Work is sharded over the second vertex's neighbour choice and
//! merged in canonical order, so output is independent of the worker count.

pub mod canon;

pub use canon::{canonical_form, CanonicalForm, SmallGraph};

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, KtParameters};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    EnumerateAll,
    FirstWitness,
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub target: KtParameters,
    pub max_n: usize,
    pub mode: SearchMode,
    /// Worker count; 0 means rayon's default.
    pub jobs: usize,
    /// Search-tree node budget, split evenly across shards. None = unbounded.
    pub budget: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Distinct witnesses sorted by (order, canonical form).
    pub witnesses: Vec<(CanonicalForm, Graph)>,
    pub states_explored: u64,
    pub budget_exhausted: bool,
    pub max_n_reached: usize,
}

struct Shard {
    k: usize,
    t: usize,
    n: usize,
    budget: Option<u64>,
    nodes: u64,
    exhausted: bool,
    stop_after_first: bool,
    found: Vec<(CanonicalForm, SmallGraph)>,
}

impl Shard {
    /// Recursively saturate the smallest incomplete vertex.
    fn grow(&mut self, g: &mut SmallGraph, fresh: usize) {
        if self.exhausted || (self.stop_after_first && !self.found.is_empty()) {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return;
        }
        let Some(u) = (0..self.n).find(|&v| (g.degree(v) as usize) < self.k) else {
            self.complete(g);
            return;
        };
        if u >= fresh {
            // An untouched vertex with no edges to the saturated part can
            // never reconnect: only larger untouched vertices remain.
            return;
        }
        let need = self.k - g.degree(u) as usize;
        let candidates: Vec<usize> = ((u + 1)..self.n)
            .filter(|&w| !g.has_edge(u, w) && (g.degree(w) as usize) < self.k)
            .collect();
        let mut chosen = Vec::with_capacity(need);
        self.choose(g, u, &candidates, 0, need, fresh, &mut chosen);
    }

    /// Choose `need` more neighbours for u from candidates[from..].
    /// Untouched vertices must be taken consecutively from `fresh` up, which
    /// quotients out the relabeling of never-touched vertices.
    fn choose(
        &mut self,
        g: &mut SmallGraph,
        u: usize,
        candidates: &[usize],
        from: usize,
        need: usize,
        fresh: usize,
        chosen: &mut Vec<usize>,
    ) {
        if self.exhausted || (self.stop_after_first && !self.found.is_empty()) {
            return;
        }
        if need == 0 {
            if self.saturation_ok(g, u) {
                let new_fresh = chosen
                    .iter()
                    .fold(fresh, |f, &w| if w >= f { w + 1 } else { f });
                self.grow(g, new_fresh);
            }
            return;
        }
        if candidates.len() - from < need {
            return;
        }
        // Untouched vertices already picked in this call sit consecutively
        // from `fresh`; only the next one in line may be added.
        let next_fresh = chosen
            .iter()
            .fold(fresh, |f, &c| if c >= f { c + 1 } else { f });
        for i in from..candidates.len() {
            let w = candidates[i];
            if w >= fresh {
                if w > next_fresh {
                    break; // candidates are increasing; nothing admissible left
                }
                if w < next_fresh {
                    continue; // already chosen earlier in this branch
                }
            }
            g.add_edge(u, w);
            // Cheap local prune: no edge may already exceed t triangles.
            if g.common_neighbours(u, w) as usize <= self.t {
                chosen.push(w);
                self.choose(g, u, candidates, i + 1, need - 1, fresh, chosen);
                chosen.pop();
            }
            g.remove_edge(u, w);
        }
    }

    /// Constraint check once u is saturated. Neighbours of u may have hit
    /// degree k through u's new edges without a completion step of their
    /// own, so their edges need the same exact check.
    fn saturation_ok(&self, g: &SmallGraph, u: usize) -> bool {
        if !self.edges_ok(g, u) {
            return false;
        }
        let mut bits = g.rows[u];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if g.degree(w) as usize == self.k && !self.edges_ok(g, w) {
                return false;
            }
        }
        true
    }

    /// Each edge at u must be able to reach exactly t triangles: equality
    /// when both endpoints are saturated (the count is final then),
    /// feasibility of the remaining capacity otherwise.
    fn edges_ok(&self, g: &SmallGraph, u: usize) -> bool {
        let mut bits = g.rows[u];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = g.common_neighbours(u, w) as usize;
            if c > self.t {
                return false;
            }
            if (g.degree(w) as usize) == self.k {
                if c != self.t {
                    return false;
                }
            } else {
                // w can still gain edges towards N(u) members with spare
                // degree capacity.
                let mut avail = 0usize;
                let mut others = g.rows[u] & !g.rows[w] & !(1 << w);
                while others != 0 {
                    let x = others.trailing_zeros() as usize;
                    others &= others - 1;
                    if (g.degree(x) as usize) < self.k {
                        avail += 1;
                    }
                }
                let cap = self.k - g.degree(w) as usize;
                if c + cap.min(avail) < self.t {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&mut self, g: &SmallGraph) {
        if !g.is_connected() {
            return;
        }
        // The constraints force (k,t)-regularity; certify anyway.
        let graph = g.to_graph();
        debug_assert_eq!(
            graph.kt(),
            Some(KtParameters::new(self.k as u32, self.t as u32))
        );
        let canon = canon::canonical_small(g);
        if !self.found.iter().any(|(c, _)| *c == canon) {
            self.found.push((canon, g.clone()));
        }
    }
}

/// Complete, duplicate-free enumeration of connected (k,t)-regular graphs
/// with at most `max_n` vertices.
pub fn enumerate(task: &SearchTask) -> Result<SearchOutcome> {
    let (k, t) = (task.target.k as usize, task.target.t as usize);
    if k < 1 || t >= k {
        return Err(Error::InvalidSearchTask(format!(
            "need 1 <= k and t < k, got ({k},{t})"
        )));
    }
    if task.max_n < k + 1 {
        return Err(Error::InvalidSearchTask(format!(
            "max_n {} below the minimum order k+1 = {}",
            task.max_n,
            k + 1
        )));
    }
    if task.max_n > 64 {
        return Err(Error::InvalidSearchTask(
            "search supports at most 64 vertices".into(),
        ));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(task.jobs)
        .build()
        .map_err(|e| Error::InvalidSearchTask(e.to_string()))?;

    let mut witnesses: Vec<(CanonicalForm, SmallGraph)> = Vec::new();
    let mut states = 0u64;
    let mut exhausted = false;
    let mut max_n_reached = k; // last order fully processed

    for n in (k + 1)..=task.max_n {
        if exhausted || (task.mode == SearchMode::FirstWitness && !witnesses.is_empty()) {
            break;
        }
        if n * k % 2 == 1 {
            max_n_reached = n; // odd order, odd degree: nothing to search
            continue;
        }
        // Root: N(0) = {1..k} up to relabeling.
        let mut root = SmallGraph::empty(n)?;
        for v in 1..=k {
            root.add_edge(0, v);
        }
        let shards = shard_roots(&root, n, k, t);
        let budget_per_shard = task.budget.map(|b| b / shards.len().max(1) as u64);
        let stop_after_first = task.mode == SearchMode::FirstWitness;
        let results: Vec<Shard> = pool.install(|| {
            shards
                .into_par_iter()
                .map(|(g, fresh)| {
                    let mut shard = Shard {
                        k,
                        t,
                        n,
                        budget: budget_per_shard,
                        nodes: 0,
                        exhausted: false,
                        stop_after_first,
                        found: Vec::new(),
                    };
                    let mut g = g;
                    shard.grow(&mut g, fresh);
                    shard
                })
                .collect()
        });
        for shard in results {
            states += shard.nodes;
            exhausted |= shard.exhausted;
            for (c, g) in shard.found {
                if !witnesses.iter().any(|(wc, _)| *wc == c) {
                    witnesses.push((c, g));
                }
            }
        }
        if !exhausted {
            max_n_reached = n;
        }
    }

    witnesses.sort_by(|a, b| (a.1.n, &a.0).cmp(&(b.1.n, &b.0)));
    Ok(SearchOutcome {
        witnesses: witnesses
            .into_iter()
            .map(|(c, g)| (c, g.to_graph()))
            .collect(),
        states_explored: states,
        budget_exhausted: exhausted,
        max_n_reached,
    })
}

/// Shards: every valid saturation of vertex 1 (given N(0) = {1..k}).
fn shard_roots(root: &SmallGraph, n: usize, k: usize, t: usize) -> Vec<(SmallGraph, usize)> {
    let mut out = Vec::new();
    let probe = Shard {
        k,
        t,
        n,
        budget: None,
        nodes: 0,
        exhausted: false,
        stop_after_first: false,
        found: Vec::new(),
    };
    // Enumerate vertex 1's remaining neighbour sets directly: within
    // {2..k} freely, above k only as a consecutive block starting at k+1.
    let need = k - 1;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let inner: Vec<usize> = (2..=k.min(n - 1)).collect();
    for inner_count in 0..=need.min(inner.len()) {
        let outer_count = need - inner_count;
        if k + outer_count >= n {
            continue;
        }
        combinations(&inner, inner_count, &mut |combo| {
            let mut set = combo.to_vec();
            set.extend((k + 1)..(k + 1 + outer_count));
            sets.push(set);
        });
    }
    for set in sets {
        let mut g = root.clone();
        for &w in &set {
            g.add_edge(1, w);
        }
        // Triangle feasibility at vertex 1 before accepting the shard.
        if g.rows[1].count_ones() as usize == k && probe.saturation_ok(&g, 1) {
            let fresh = set
                .iter()
                .fold(k + 1, |f, &w| if w >= f { w + 1 } else { f });
            out.push((g, fresh));
        }
    }
    out
}

fn combinations(items: &[usize], choose: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        from: usize,
        choose: usize,
        current: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if choose == 0 {
            f(current);
            return;
        }
        for i in from..items.len() {
            current.push(items[i]);
            rec(items, i + 1, choose - 1, current, f);
            current.pop();
        }
    }
    rec(items, 0, choose, &mut Vec::new(), f);
}

/// Report of a bounded probe at an open parameter pair. Witness-free
/// reports are evidence only, never proofs of nonexistence.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub k: u32,
    pub t: u32,
    pub max_n_reached: usize,
    pub states_explored: u64,
    pub budget_exhausted: bool,
    /// graph6 certificates of any witnesses found (each re-certified).
    pub witnesses: Vec<String>,
}

impl ProbeReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "t": self.t,
            "max_n_reached": self.max_n_reached,
            "states_explored": self.states_explored,
            "budget_exhausted": self.budget_exhausted,
            "witnesses": self.witnesses,
            "note": "bounded-order evidence only; absence of a witness is not a nonexistence proof",
        })
    }
}

pub fn probe_open_case(k: u32, t: u32, max_n: usize, budget: Option<u64>) -> Result<ProbeReport> {
    let outcome = enumerate(&SearchTask {
        target: KtParameters::new(k, t),
        max_n,
        mode: SearchMode::EnumerateAll,
        jobs: 0,
        budget,
    })?;
    let mut witnesses = Vec::new();
    for (_, g) in &outcome.witnesses {
        // Re-certify before reporting: a probe must never emit a false witness.
        if g.kt() == Some(KtParameters::new(k, t)) && g.is_connected() {
            witnesses.push(crate::graph6::encode(g));
        }
    }
    Ok(ProbeReport {
        k,
        t,
        max_n_reached: outcome.max_n_reached,
        states_explored: outcome.states_explored,
        budget_exhausted: outcome.budget_exhausted,
        witnesses,
    })
}
