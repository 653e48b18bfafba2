//! Existence decisions for (k,t): obstructions, constructive recipes found
//! by closure over the product laws, and reproduction of the small-parameter
//! table.

use std::collections::HashMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, KtParameters};
use crate::groups::catalog::{catalog, CATALOG_PARAMETERS};
use crate::products::{cartesian, lex_blowup, tensor};

/// A constructive existence witness: an expression tree over complete
/// graphs, catalog graphs, and the three products.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Recipe {
    Complete(usize),
    Sporadic(String),
    Cartesian(Box<Recipe>, Box<Recipe>),
    LexBlowup(Box<Recipe>, usize),
    Tensor(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn node_count(&self) -> usize {
        match self {
            Recipe::Complete(_) | Recipe::Sporadic(_) => 1,
            Recipe::Cartesian(a, b) | Recipe::Tensor(a, b) => {
                1 + a.node_count() + b.node_count()
            }
            Recipe::LexBlowup(r, _) => 1 + r.node_count(),
        }
    }

    /// Parameters the recipe claims via the product laws.
    pub fn claimed_parameters(&self) -> Result<KtParameters> {
        match self {
            Recipe::Complete(n) => {
                if *n < 2 {
                    return Err(Error::InvalidRecipe(format!(
                        "complete graph leaf needs order >= 2, got {n}"
                    )));
                }
                Ok(KtParameters::new(*n as u32 - 1, *n as u32 - 2))
            }
            Recipe::Sporadic(name) => CATALOG_PARAMETERS
                .iter()
                .find(|(cname, _, _)| cname == name)
                .map(|&(_, (k, t), _)| KtParameters::new(k, t))
                .ok_or_else(|| Error::UnknownCatalogName(name.clone())),
            Recipe::Cartesian(a, b) => {
                let (pa, pb) = (a.claimed_parameters()?, b.claimed_parameters()?);
                if pa.t != pb.t {
                    return Err(Error::InvalidRecipe(format!(
                        "cartesian factors have different local valency: {pa} vs {pb}"
                    )));
                }
                Ok(KtParameters::new(pa.k + pb.k, pa.t))
            }
            Recipe::LexBlowup(r, m) => {
                if *m < 1 {
                    return Err(Error::InvalidRecipe("blow-up factor must be >= 1".into()));
                }
                let p = r.claimed_parameters()?;
                Ok(KtParameters::new(p.k * *m as u32, p.t * *m as u32))
            }
            Recipe::Tensor(a, b) => {
                let (pa, pb) = (a.claimed_parameters()?, b.claimed_parameters()?);
                Ok(KtParameters::new(pa.k * pb.k, pa.t * pb.t))
            }
        }
    }

    /// Label for table rendering, taken from the root constructor.
    pub fn label(&self) -> String {
        match self {
            Recipe::Complete(n) => format!("K_{n}"),
            Recipe::Sporadic(name) => name.clone(),
            Recipe::Cartesian(..) => "CP".into(),
            Recipe::LexBlowup(..) => "LP".into(),
            Recipe::Tensor(..) => "TP".into(),
        }
    }
}

impl std::fmt::Display for Recipe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Recipe::Complete(n) => write!(f, "K({n})"),
            Recipe::Sporadic(name) => write!(f, "sporadic({name})"),
            Recipe::Cartesian(a, b) => write!(f, "cp({a},{b})"),
            Recipe::LexBlowup(r, m) => write!(f, "lex({r},{m})"),
            Recipe::Tensor(a, b) => write!(f, "tensor({a},{b})"),
        }
    }
}

/// Builds the graph a recipe describes and checks it certifies the claimed
/// parameters.
pub fn build(recipe: &Recipe) -> Result<Graph> {
    let claimed = recipe.claimed_parameters()?;
    let g = build_unchecked(recipe)?;
    match g.kt() {
        Some(p) if p == claimed => Ok(g),
        got => Err(Error::InvalidRecipe(format!(
            "recipe {recipe} claims {claimed} but built graph certifies {got:?}"
        ))),
    }
}

pub fn build_unchecked(recipe: &Recipe) -> Result<Graph> {
    match recipe {
        Recipe::Complete(n) => Graph::complete(*n),
        Recipe::Sporadic(name) => catalog(name),
        Recipe::Cartesian(a, b) => cartesian(&build_unchecked(a)?, &build_unchecked(b)?),
        Recipe::LexBlowup(r, m) => lex_blowup(&build_unchecked(r)?, *m),
        Recipe::Tensor(a, b) => tensor(&build_unchecked(a)?, &build_unchecked(b)?),
    }
}

/// Recipe grammar: `K(n)`, `sporadic(name)`, `cp(r1,r2)`, `lex(r,m)`,
/// `tensor(r1,r2)`.
pub fn parse_recipe(text: &str) -> Result<Recipe> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::RecipeParse(format!(
            "trailing input at position {}",
            p.pos
        )));
    }
    Ok(r)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::RecipeParse(format!(
                "expected '{c}' at position {}",
                self.pos
            )))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<usize> {
        let w = self.word();
        w.parse()
            .map_err(|_| Error::RecipeParse(format!("expected a number, got {w:?}")))
    }

    fn expr(&mut self) -> Result<Recipe> {
        let head = self.word();
        self.expect('(')?;
        let r = match head.as_str() {
            "K" | "k" => Recipe::Complete(self.number()?),
            "sporadic" => Recipe::Sporadic(self.word()),
            "cp" => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                Recipe::Cartesian(Box::new(a), Box::new(b))
            }
            "lex" => {
                let a = self.expr()?;
                self.expect(',')?;
                let m = self.number()?;
                Recipe::LexBlowup(Box::new(a), m)
            }
            "tensor" => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                Recipe::Tensor(Box::new(a), Box::new(b))
            }
            other => {
                return Err(Error::RecipeParse(format!(
                    "unknown constructor {other:?}"
                )))
            }
        };
        self.expect(')')?;
        Ok(r)
    }
}

/// A positive decomposition ax + by = k with x, y >= 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct FrobeniusWitness {
    pub k: u64,
    pub a: u64,
    pub b: u64,
    pub x: u64,
    pub y: u64,
}

/// Smallest-x solution of ax + by = k with positive x, y, by exhaustive
/// scan (k is tiny here).
pub fn frobenius_decompose(k: u64, a: u64, b: u64) -> Option<FrobeniusWitness> {
    assert!(a >= 1 && b >= 1);
    for x in 1..=k / a {
        let rest = k - a * x;
        if rest >= b && rest % b == 0 {
            return Some(FrobeniusWitness {
                k,
                a,
                b,
                x,
                y: rest / b,
            });
        }
    }
    None
}

/// The existence decision for a pair (k,t).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// k <= t: local graphs of order k cannot have valency t.
    NotExistsOrder,
    /// kt odd: ruled out by handshaking in the local graphs.
    NotExistsParity,
    /// d = k-t with k >= d^2-d+1 and d not dividing k.
    NotExistsDiagonal { d: u32 },
    /// Exists and is the unique connected example.
    ExistsUnique(Recipe),
    Exists(Recipe),
    /// No obstruction applies and no recipe was found within budget.
    Unknown,
}

impl Verdict {
    pub fn class(&self) -> VerdictClass {
        match self {
            Verdict::NotExistsOrder | Verdict::NotExistsParity | Verdict::NotExistsDiagonal { .. } => {
                VerdictClass::NotExists
            }
            Verdict::Exists(_) | Verdict::ExistsUnique(_) => VerdictClass::Exists,
            Verdict::Unknown => VerdictClass::Unknown,
        }
    }

    pub fn recipe(&self) -> Option<&Recipe> {
        match self {
            Verdict::Exists(r) | Verdict::ExistsUnique(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, Verdict::ExistsUnique(_))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Verdict::NotExistsOrder => json!({"verdict": "not-exists", "obstruction": "order"}),
            Verdict::NotExistsParity => json!({"verdict": "not-exists", "obstruction": "parity"}),
            Verdict::NotExistsDiagonal { d } => {
                json!({"verdict": "not-exists", "obstruction": "diagonal", "d": d})
            }
            Verdict::ExistsUnique(r) => {
                json!({"verdict": "exists-unique", "recipe": r.to_string()})
            }
            Verdict::Exists(r) => json!({"verdict": "exists", "recipe": r.to_string()}),
            Verdict::Unknown => json!({"verdict": "unknown"}),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictClass {
    Exists,
    NotExists,
    Unknown,
}

// Generous: a truncated fixpoint would silently misreport cells as unknown.
pub const DEFAULT_SEARCH_BUDGET: usize = 100_000_000;

/// Closure of the parameter space reachable from complete-graph and catalog
/// seeds under the three product laws, with a minimal recipe per pair.
/// States are parameter pairs, not graphs; building is deferred.
pub struct ParameterClosure {
    best: HashMap<(u32, u32), Recipe>,
}

impl ParameterClosure {
    /// Fixpoint iteration over pairs with k <= k_cap, t <= t_cap.
    /// `budget` bounds the number of candidate evaluations.
    pub fn new(k_cap: u32, t_cap: u32, budget: usize) -> Self {
        let mut best: HashMap<(u32, u32), Recipe> = HashMap::new();
        let mut spent = 0usize;
        let consider =
            |best: &mut HashMap<(u32, u32), Recipe>, p: KtParameters, r: Recipe| -> bool {
                if p.k > k_cap || p.t > t_cap {
                    return false;
                }
                match best.get(&(p.k, p.t)) {
                    Some(old)
                        if (old.node_count(), old.to_string())
                            <= (r.node_count(), r.to_string()) =>
                    {
                        false
                    }
                    _ => {
                        best.insert((p.k, p.t), r);
                        true
                    }
                }
            };

        for n in 2..=(k_cap as usize + 1) {
            consider(
                &mut best,
                KtParameters::new(n as u32 - 1, n as u32 - 2),
                Recipe::Complete(n),
            );
        }
        for (name, (k, t), _) in CATALOG_PARAMETERS {
            consider(
                &mut best,
                KtParameters::new(k, t),
                Recipe::Sporadic(name.to_string()),
            );
        }

        loop {
            let mut changed = false;
            let states: Vec<((u32, u32), Recipe)> =
                best.iter().map(|(&p, r)| (p, r.clone())).collect();
            for (pa, ra) in &states {
                // Lexicographic blow-up.
                for m in 2..=(k_cap / pa.0.max(1)).max(1) {
                    spent += 1;
                    changed |= consider(
                        &mut best,
                        KtParameters::new(pa.0 * m, pa.1 * m),
                        Recipe::LexBlowup(Box::new(ra.clone()), m as usize),
                    );
                }
                for (pb, rb) in &states {
                    spent += 2;
                    if pa.1 == pb.1 {
                        changed |= consider(
                            &mut best,
                            KtParameters::new(pa.0 + pb.0, pa.1),
                            Recipe::Cartesian(Box::new(ra.clone()), Box::new(rb.clone())),
                        );
                    }
                    if pa.0.saturating_mul(pb.0) <= k_cap {
                        changed |= consider(
                            &mut best,
                            KtParameters::new(pa.0 * pb.0, pa.1 * pb.1),
                            Recipe::Tensor(Box::new(ra.clone()), Box::new(rb.clone())),
                        );
                    }
                }
                if spent > budget {
                    return ParameterClosure { best };
                }
            }
            if !changed {
                break;
            }
        }
        ParameterClosure { best }
    }

    pub fn recipe_for(&self, k: u32, t: u32) -> Option<&Recipe> {
        self.best.get(&(k, t))
    }
}

/// Bounded closure search for a minimal recipe realizing (k,t).
pub fn find_recipe(k: u32, t: u32, budget: usize) -> Option<Recipe> {
    ParameterClosure::new(k.saturating_mul(2).max(2), t.saturating_mul(2), budget)
        .recipe_for(k, t)
        .cloned()
}

/// Obstruction checks in precedence order (order, parity, diagonal), then
/// the constructive closure, then Unknown.
pub fn decide(k: u32, t: u32) -> Verdict {
    let closure = ParameterClosure::new(
        k.saturating_mul(2).max(2),
        t.saturating_mul(2),
        DEFAULT_SEARCH_BUDGET,
    );
    decide_with(&closure, k, t)
}

/// `decide` against a precomputed closure whose caps must be at least
/// (2k, 2t); used to evaluate whole tables without re-running the closure.
pub fn decide_with(closure: &ParameterClosure, k: u32, t: u32) -> Verdict {
    if k <= t {
        return Verdict::NotExistsOrder;
    }
    if k % 2 == 1 && t % 2 == 1 {
        return Verdict::NotExistsParity;
    }
    let d = k - t;
    if k >= d * d - d + 1 {
        if k % d == 0 {
            let parts = ((k + d) / d) as usize;
            let recipe = if d == 1 {
                Recipe::Complete(parts)
            } else {
                Recipe::LexBlowup(Box::new(Recipe::Complete(parts)), d as usize)
            };
            return Verdict::ExistsUnique(recipe);
        }
        return Verdict::NotExistsDiagonal { d };
    }
    if (k, t) == (5, 2) {
        return Verdict::ExistsUnique(Recipe::Sporadic("icosahedron".into()));
    }
    match closure.recipe_for(k, t) {
        Some(r) => Verdict::Exists(r.clone()),
        None => Verdict::Unknown,
    }
}

/// One cell of the reproduced small-parameter table.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub k: u32,
    pub t: u32,
    pub verdict: Verdict,
}

impl TableCell {
    /// Rendering with the table's symbols: x for a basic obstruction, x_D
    /// for the diagonal obstruction, ?? for unknown, and the construction
    /// label (bold for unique) otherwise.
    pub fn symbol(&self) -> String {
        match &self.verdict {
            Verdict::NotExistsOrder | Verdict::NotExistsParity => "×".into(),
            Verdict::NotExistsDiagonal { .. } => "×_D".into(),
            Verdict::Unknown => "??".into(),
            Verdict::Exists(r) => r.label(),
            Verdict::ExistsUnique(r) => format!("**{}**", r.label()),
        }
    }
}

/// Evaluates every cell for 1 <= k <= k_max, 0 <= t <= t_max.
pub fn reproduce_table(k_max: u32, t_max: u32) -> Vec<TableCell> {
    use rayon::prelude::*;
    let closure = ParameterClosure::new(
        k_max.saturating_mul(2).max(2),
        t_max.saturating_mul(2),
        DEFAULT_SEARCH_BUDGET,
    );
    let cells: Vec<(u32, u32)> = (1..=k_max)
        .flat_map(|k| (0..=t_max).map(move |t| (k, t)))
        .collect();
    cells
        .par_iter()
        .map(|&(k, t)| TableCell {
            k,
            t,
            verdict: decide_with(&closure, k, t),
        })
        .collect()
}
