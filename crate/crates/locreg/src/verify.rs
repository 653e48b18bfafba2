//! Quantified property suites behind `verify --suite <name>`.
//!
//! Each suite runs its properties over catalog graphs, constructed
//! families, and seeded random instances, and reports one summary row per
//! property: instances checked and failures (zero on a healthy build).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::existence::{self, Verdict};
use crate::graph::{Graph, KtParameters};
use crate::groups::catalog::{self, CATALOG_NAMES, CATALOG_PARAMETERS};
use crate::products::{cartesian, lex_blowup, tensor};
use crate::random::random_connected_regular;
use crate::search::canonical_form;
use crate::structure::{
    self, check_corollary_42, check_twin_count, complete_multipartite, extremal_graph,
    recognize_complete_multipartite, two_path_report, venn_profile, TwinCountOutcome,
};

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub instances_checked: u64,
    pub failures: u64,
    /// First failure, when any, for diagnosis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    property: &'static str,
    checked: u64,
    failures: u64,
    detail: Option<String>,
}

impl Tally {
    fn new(property: &'static str) -> Self {
        Tally {
            property,
            checked: 0,
            failures: 0,
            detail: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl Fn() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            property: self.property.to_string(),
            instances_checked: self.checked,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

fn catalog_graphs() -> Result<Vec<(&'static str, Graph)>> {
    CATALOG_NAMES
        .iter()
        .map(|&name| Ok((name, catalog::catalog(name)?)))
        .collect()
}

/// Certified (k,t)-regular graphs used as product inputs and triangle
/// sources: catalog entries plus small complete multipartite graphs.
fn certified_pool() -> Result<Vec<Graph>> {
    let mut pool: Vec<Graph> = catalog_graphs()?.into_iter().map(|(_, g)| g).collect();
    for n in 2..=8 {
        pool.push(Graph::complete(n)?);
    }
    for m in 2..=5 {
        for d in 2..=3 {
            pool.push(complete_multipartite(m, d)?);
        }
    }
    Ok(pool)
}

pub fn structure_suite(seed: u64) -> Result<Vec<PropertyResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    // Triangle regions: the three exclusive region sizes coincide and each
    // equals k - 2t + m. Complete multipartite entries push the instance
    // count past 10^4.
    let mut tri = Tally::new("lemma_4_1_triangle_regions");
    let mut sources = certified_pool()?;
    sources.push(complete_multipartite(8, 6)?);
    for g in &sources {
        let Some(p) = g.kt() else { continue };
        let (k, t) = (p.k as usize, p.t as usize);
        for (x, y, z) in structure::triangles(g) {
            let v = venn_profile(g, x, y, z)?;
            let expected = k + v.m - 2 * t;
            let ok = v.exclusive_sizes_equal() && v.exclusive[0] == expected;
            tri.check(ok, || format!("triangle ({x},{y},{z}): {v:?}, expected {expected}"));
        }
    }
    out.push(tri.finish());

    // Two-path bound on catalog graphs and random connected regular graphs,
    // with random bipartitions; exact rational comparison.
    let mut bound = Tally::new("lemma_4_4_two_path_bound");
    let mut threshold = Tally::new("cor_4_5_far_connected_threshold");
    let mut tested: Vec<Graph> = catalog_graphs()?.into_iter().map(|(_, g)| g).collect();
    for _ in 0..25 {
        for d in 2..=5 {
            let n = loop {
                let n = rng.gen_range((d + 2)..=40);
                if n * d % 2 == 0 {
                    break n;
                }
            };
            tested.push(random_connected_regular(&mut rng, n, d, 20_000)?);
        }
    }
    for g in &tested {
        let d = g.degree(0);
        for _ in 0..10 {
            let x = random_bipartition(&mut rng, g.n());
            let r = two_path_report(g, &x)?;
            bound.check(r.holds(), || {
                format!("d={d} n={} |X|={}: count {} exceeds {}/{}",
                    g.n(), r.x_size, r.path_count, r.bound.num, r.bound.den)
            });
        }
        if g.n() > d * d + d {
            threshold.check(g.is_far_connected(), || {
                format!("{}-regular graph of order {} not far-connected", d, g.n())
            });
        }
    }
    for d in 1..=6 {
        let g = extremal_graph(d)?;
        threshold.check(
            g.n() == d * d + d && (0..g.n()).all(|v| g.degree(v) == d) && !g.is_far_connected(),
            || format!("extremal_graph({d}) is not extremal"),
        );
    }
    out.push(bound.finish());
    out.push(threshold.finish());

    // Twin counts: k - t twins per vertex wherever the far-connectedness
    // hypothesis holds; complete multipartite graphs always satisfy it.
    let mut twins = Tally::new("prop_4_7_twin_count");
    let mut twin_sources: Vec<Graph> = catalog_graphs()?.into_iter().map(|(_, g)| g).collect();
    for m in 2..=6 {
        for d in 1..=4 {
            twin_sources.push(complete_multipartite(m, d)?);
        }
    }
    for g in &twin_sources {
        if g.kt().is_none() {
            continue;
        }
        for (v, outcome) in check_twin_count(g)?.into_iter().enumerate() {
            match outcome {
                TwinCountOutcome::HypothesisNotMet => {}
                TwinCountOutcome::Verified { .. } => twins.check(true, String::new),
                TwinCountOutcome::Violation {
                    twin_count,
                    expected,
                } => twins.check(false, || {
                    format!("vertex {v}: twin class size {twin_count}, expected {expected}")
                }),
            }
        }
    }
    out.push(twins.finish());

    // Corollary 4.2 on every qualifying 2-path of every catalog graph
    // (the hypothesis N(x) ⊆ N(y) ∪ N(z) selects the instances).
    let mut cor = Tally::new("cor_4_2_forced_equalities");
    let mut cor_sources: Vec<(String, Graph)> = catalog_graphs()?
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    // No catalog 2-path satisfies the covering hypothesis; complete
    // multipartite graphs supply nontrivial instances (y, z in different
    // parts cover everything).
    for m in 3..=5 {
        for d in 1..=3 {
            cor_sources.push((format!("K_{m}[{d}]"), complete_multipartite(m, d)?));
        }
    }
    for (name, g) in &cor_sources {
        for x in 0..g.n() {
            let nbrs = g.neighbours(x).to_vec();
            for (i, &y) in nbrs.iter().enumerate() {
                for &z in &nbrs[(i + 1)..] {
                    let covered = g
                        .neighbours(x)
                        .difference(&g.neighbours(y).union(g.neighbours(z)))
                        .is_empty();
                    if !covered {
                        continue;
                    }
                    cor.check(check_corollary_42(g, x, y, z)?, || {
                        format!("{name}: path {y}-{x}-{z}")
                    });
                }
            }
        }
    }
    out.push(cor.finish());

    // recognize ∘ complete_multipartite = identity.
    let mut rec = Tally::new("recognition_roundtrip");
    for m in 2..=8 {
        for d in 1..=6 {
            rec.check(
                recognize_complete_multipartite(&complete_multipartite(m, d)?) == Some((m, d)),
                || format!("({m},{d}) not recognized"),
            );
        }
    }
    out.push(rec.finish());

    Ok(out)
}

fn random_bipartition<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let x: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !x.is_empty() && x.len() < n {
            return x;
        }
    }
}

pub fn products_suite(_seed: u64) -> Result<Vec<PropertyResult>> {
    let pool = certified_pool()?;
    let mut out = Vec::new();

    let mut cp = Tally::new("cartesian_parameter_law");
    for g in &pool {
        for h in &pool {
            let (Some(pg), Some(ph)) = (g.kt(), h.kt()) else { continue };
            if pg.t != ph.t || g.n() * h.n() > 2000 {
                continue;
            }
            let p = cartesian(g, h)?;
            cp.check(
                p.n() == g.n() * h.n() && p.kt() == Some(KtParameters::new(pg.k + ph.k, pg.t)),
                || format!("cp of ({},{}) and ({},{})", pg.k, pg.t, ph.k, ph.t),
            );
        }
    }
    out.push(cp.finish());

    let mut lp = Tally::new("lex_blowup_parameter_law");
    for g in &pool {
        let Some(pg) = g.kt() else { continue };
        for m in 1..=3u32 {
            if g.n() * m as usize > 2000 {
                continue;
            }
            let p = lex_blowup(g, m as usize)?;
            lp.check(
                p.n() == g.n() * m as usize
                    && p.kt() == Some(KtParameters::new(pg.k * m, pg.t * m)),
                || format!("lex of ({},{}) by {m}", pg.k, pg.t),
            );
        }
    }
    out.push(lp.finish());

    let mut tp = Tally::new("tensor_parameter_law");
    for g in &pool {
        for h in &pool {
            let (Some(pg), Some(ph)) = (g.kt(), h.kt()) else { continue };
            if g.n() * h.n() > 2000 {
                continue;
            }
            let p = tensor(g, h)?;
            tp.check(
                p.n() == g.n() * h.n()
                    && p.kt() == Some(KtParameters::new(pg.k * ph.k, pg.t * ph.t)),
                || format!("tensor of ({},{}) and ({},{})", pg.k, pg.t, ph.k, ph.t),
            );
        }
    }
    out.push(tp.finish());

    // Commutativity up to isomorphism, via canonical forms. Products are
    // kept small: the canonizer backtracks over all admissible labelings,
    // which blows up on big vertex-transitive graphs like K_8 □ K_8.
    let mut comm = Tally::new("product_commutativity");
    let small: Vec<&Graph> = pool.iter().filter(|g| g.n() <= 6).collect();
    for g in &small {
        for h in &small {
            if g.n() * h.n() > 20 {
                continue;
            }
            comm.check(
                canonical_form(&cartesian(g, h)?)? == canonical_form(&cartesian(h, g)?)?,
                || "cartesian not commutative".into(),
            );
            comm.check(
                canonical_form(&tensor(g, h)?)? == canonical_form(&tensor(h, g)?)?,
                || "tensor not commutative".into(),
            );
        }
    }
    out.push(comm.finish());

    Ok(out)
}

pub fn groups_suite(seed: u64) -> Result<Vec<PropertyResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut cert = Tally::new("catalog_certification");
    for (name, (k, t), n) in CATALOG_PARAMETERS {
        let g = catalog::catalog(name)?;
        cert.check(
            g.n() == n && g.is_connected() && g.kt() == Some(KtParameters::new(k, t)),
            || format!("{name}: got {:?} on {} vertices", g.certify(), g.n()),
        );
    }
    out.push(cert.finish());

    let mut srg = Tally::new("strong_regularity");
    srg.check(
        catalog::srg_check(&catalog::catalog("clebsch_complement")?) == Some((16, 10, 6, 6)),
        || "clebsch_complement SRG parameters".into(),
    );
    srg.check(
        catalog::srg_check(&catalog::catalog("schlafli")?) == Some((27, 16, 10, 8)),
        || "schlafli SRG parameters".into(),
    );
    out.push(srg.finish());

    // Suborbit bookkeeping and edge invariance under 20 random group
    // elements, for each orbital-graph construction.
    let mut sub = Tally::new("suborbit_consistency");
    let mut inv = Tally::new("orbital_edge_invariance");
    let setups: Vec<(&str, crate::groups::PermGroup, Vec<usize>)> = vec![
        {
            let g = catalog::psl2_13()?;
            let h = g.find_subgroup(39)?;
            ("psl2_13", g, h)
        },
        {
            let g = catalog::sym5()?;
            let t1 = g
                .id_of(&crate::groups::Permutation::from_cycles(5, &[&[0, 1]])?)
                .expect("transposition");
            let t2 = g
                .id_of(&crate::groups::Permutation::from_cycles(5, &[&[2, 3]])?)
                .expect("transposition");
            let h = g.subgroup_closure(&[t1, t2]);
            ("sym5_30", g, h)
        },
        {
            let g = catalog::pgl2_7()?;
            let h = g.find_subgroup(14)?;
            ("pgl2_7", g, h)
        },
    ];
    for (name, group, subgroup) in &setups {
        let action = group.coset_action(subgroup)?;
        let subs = action.suborbits();
        let total: usize = subs.iter().map(|s| s.len()).sum();
        sub.check(total == action.coset_count(), || {
            format!("{name}: suborbit lengths sum to {total}")
        });
        for (i, s) in subs.iter().enumerate() {
            let p = s.paired_with;
            sub.check(
                p < subs.len() && subs[p].paired_with == i && (s.self_paired == (p == i)),
                || format!("{name}: pairing of suborbit {i} is not an involution"),
            );
        }
        let graph = catalog::catalog(match *name {
            "psl2_13" => "psl2_13",
            "sym5_30" => "sym5_30",
            _ => "pgl2_7",
        })?;
        let edges = graph.edges();
        for _ in 0..20 {
            let e = rng.gen_range(0..group.order());
            let ok = edges
                .iter()
                .all(|&(u, v)| graph.has_edge(action.act(u, e), action.act(v, e)));
            inv.check(ok, || format!("{name}: element {e} does not preserve edges"));
        }
    }
    out.push(sub.finish());

    // The Cayley-graph entries are vertex-transitive under translation.
    for name in ["clebsch_complement", "c2xc12_complement"] {
        let g = catalog::catalog(name)?;
        let edges = g.edges();
        for _ in 0..20 {
            match name {
                "clebsch_complement" => {
                    let a = rng.gen_range(0..16);
                    inv.check(
                        edges.iter().all(|&(u, v)| g.has_edge(u ^ a, v ^ a)),
                        || format!("{name}: translation by {a} not an automorphism"),
                    );
                }
                _ => {
                    let (e, f) = (rng.gen_range(0..2), rng.gen_range(0..12));
                    let m = |x: usize| 12 * ((x / 12 + e) % 2) + (x % 12 + f) % 12;
                    inv.check(
                        edges.iter().all(|&(u, v)| g.has_edge(m(u), m(v))),
                        || format!("{name}: translation by ({e},{f}) not an automorphism"),
                    );
                }
            }
        }
    }
    out.push(inv.finish());

    let mut pairs = Tally::new("pgl2_7_all_three_pairs");
    let candidates = catalog::pgl2_7_candidates()?;
    pairs.check(candidates.len() == 3, || {
        format!("{} candidate unions", candidates.len())
    });
    for (i, g) in candidates.iter().enumerate() {
        pairs.check(g.kt() == Some(KtParameters::new(14, 8)), || {
            format!("union {i} does not certify (14,8)")
        });
    }
    out.push(pairs.finish());

    Ok(out)
}

pub fn existence_suite(_seed: u64) -> Result<Vec<PropertyResult>> {
    let mut out = Vec::new();
    let table = existence::reproduce_table(16, 14);

    // Every claimed construction actually builds and certifies.
    let mut sound = Tally::new("table_recipe_soundness");
    for cell in &table {
        if let Some(recipe) = cell.verdict.recipe() {
            let built = existence::build(recipe);
            sound.check(
                built.is_ok_and(|g| g.kt() == Some(KtParameters::new(cell.k, cell.t))),
                || format!("({},{}) recipe {recipe}", cell.k, cell.t),
            );
        }
    }
    out.push(sound.finish());

    // decide must never refute a parameter pair it can construct.
    let mut obstruction = Tally::new("obstruction_soundness");
    let closure = existence::ParameterClosure::new(80, 20, existence::DEFAULT_SEARCH_BUDGET);
    for k in 1u32..=40 {
        for t in 0..=8.min(k - 1) {
            let verdict = existence::decide_with(&closure, k, t);
            if closure.recipe_for(k, t).is_some() {
                obstruction.check(
                    !matches!(
                        verdict,
                        Verdict::NotExistsOrder
                            | Verdict::NotExistsParity
                            | Verdict::NotExistsDiagonal { .. }
                    ),
                    || format!("({k},{t}) refuted despite a witness recipe"),
                );
            }
        }
    }
    for (name, (k, t), _) in CATALOG_PARAMETERS {
        let verdict = existence::decide_with(&closure, k, t);
        obstruction.check(
            verdict.class() == existence::VerdictClass::Exists,
            || format!("catalog entry {name} at ({k},{t}) got {verdict:?}"),
        );
    }
    out.push(obstruction.finish());

    // Frobenius-style coverage: even t from t^2+t on, odd t (even k) from
    // (t-1)^2 on, always constructible.
    let mut coverage = Tally::new("frobenius_coverage");
    for t in [0u32, 2, 4] {
        let lo = t * t + t;
        for k in lo.max(t + 1)..=(lo + 20) {
            coverage.check(
                existence::decide_with(&closure, k, t).class() == existence::VerdictClass::Exists,
                || format!("even t: ({k},{t}) not constructed"),
            );
        }
    }
    for t in [1u32, 3, 5] {
        let lo = (t - 1) * (t - 1);
        for k in (lo.max(t + 1)..=(lo + 20)).filter(|k| k % 2 == 0) {
            coverage.check(
                existence::decide_with(&closure, k, t).class() == existence::VerdictClass::Exists,
                || format!("odd t: ({k},{t}) not constructed"),
            );
        }
    }
    out.push(coverage.finish());

    // In the diagonal regime nothing may stay unknown.
    let mut diag = Tally::new("diagonal_completeness");
    for d in 1..=4u32 {
        for k in (d * d - d + 1)..=24 {
            let verdict = existence::decide_with(&closure, k, k - d);
            diag.check(
                verdict.class() != existence::VerdictClass::Unknown
                    && (k % d != 0 || verdict.is_unique()),
                || format!("d={d}, k={k}: {verdict:?}"),
            );
        }
    }
    out.push(diag.finish());

    // Unique cells carry a recipe; one spot-build per diagonal.
    let mut unique = Tally::new("unique_cells_have_recipes");
    for cell in &table {
        if cell.verdict.is_unique() {
            unique.check(cell.verdict.recipe().is_some(), || {
                format!("({},{}) unique without recipe", cell.k, cell.t)
            });
        }
    }
    out.push(unique.finish());

    Ok(out)
}

pub const SUITE_NAMES: &[&str] = &["structure", "products", "groups", "existence", "all"];

pub fn run_suite(name: &str, seed: u64) -> Result<Vec<PropertyResult>> {
    match name {
        "structure" => structure_suite(seed),
        "products" => products_suite(seed),
        "groups" => groups_suite(seed),
        "existence" => existence_suite(seed),
        "all" => {
            let mut out = structure_suite(seed)?;
            out.extend(products_suite(seed)?);
            out.extend(groups_suite(seed)?);
            out.extend(existence_suite(seed)?);
            Ok(out)
        }
        other => Err(Error::Precondition(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}

pub fn suite_json(results: &[PropertyResult]) -> serde_json::Value {
    json!({
        "properties": results,
        "passed": results.iter().all(|r| r.passed()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_suite_is_clean() {
        let results = products_suite(1).unwrap();
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.property, r.detail);
            assert!(r.instances_checked > 0, "{} checked nothing", r.property);
        }
    }

    #[test]
    fn groups_suite_is_clean() {
        for r in groups_suite(1).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.property, r.detail);
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", 0).is_err());
    }
}
