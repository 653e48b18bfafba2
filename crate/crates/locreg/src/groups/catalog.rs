//! The seven sporadic catalog graphs, each constructed from first
//! principles, plus the strong-regularity check.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::perm::{cayley_graph, PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

pub const CATALOG_NAMES: [&str; 7] = [
    "icosahedron",
    "clebsch_complement",
    "psl2_13",
    "sym5_30",
    "pgl2_7",
    "c2xc12_complement",
    "schlafli",
];

/// (name, (k, t), order) for every catalog entry.
pub const CATALOG_PARAMETERS: [(&str, (u32, u32), usize); 7] = [
    ("icosahedron", (5, 2), 12),
    ("clebsch_complement", (10, 6), 16),
    ("psl2_13", (13, 6), 28),
    ("sym5_30", (14, 5), 30),
    ("pgl2_7", (14, 8), 24),
    ("c2xc12_complement", (15, 8), 24),
    ("schlafli", (16, 10), 27),
];

pub fn catalog(name: &str) -> Result<Graph> {
    match name {
        "icosahedron" => icosahedron(),
        "clebsch_complement" => clebsch_complement(),
        "psl2_13" => psl2_13_graph(),
        "sym5_30" => sym5_30_graph(),
        "pgl2_7" => pgl2_7_graph(),
        "c2xc12_complement" => c2xc12_complement(),
        "schlafli" => schlafli(),
        other => Err(Error::UnknownCatalogName(other.to_string())),
    }
}

/// 1-skeleton of the icosahedron: pole 0 over ring 1..5, ring 6..10 over
/// pole 11, rings joined so every local graph is a 5-cycle.
pub fn icosahedron() -> Result<Graph> {
    let mut g = Graph::empty(12)?;
    for i in 0..5 {
        let (u, d) = (1 + i, 6 + i);
        g.add_edge(0, u)?;
        g.add_edge(11, d)?;
        g.add_edge(u, 1 + (i + 1) % 5)?;
        g.add_edge(d, 6 + (i + 1) % 5)?;
        // Upper ring vertex i sits between lower ring vertices i and i+1.
        g.add_edge(u, d)?;
        g.add_edge(u, 6 + (i + 1) % 5)?;
    }
    Ok(g)
}

/// Complement of the 5-valent Clebsch graph: vertices are F_2^4, Clebsch
/// adjacency is difference of weight 1 or weight 4.
pub fn clebsch_complement() -> Result<Graph> {
    let mut g = Graph::empty(16)?;
    for u in 0..16u32 {
        for v in (u + 1)..16 {
            let w = (u ^ v).count_ones();
            if w == 1 || w == 4 {
                g.add_edge(u as usize, v as usize)?;
            }
        }
    }
    Ok(g.complement())
}

/// Fractional-linear permutations of the projective line over F_q,
/// with the point q standing for infinity.
mod projective {
    use super::*;

    /// x -> x + 1, fixing infinity.
    pub fn translation(q: usize) -> Permutation {
        let mut images: Vec<usize> = (0..=q).map(|x| if x < q { (x + 1) % q } else { q }).collect();
        images[q] = q;
        Permutation::new(images).unwrap()
    }

    /// x -> -1/x, with 0 <-> infinity.
    pub fn negated_inversion(q: usize) -> Permutation {
        let images: Vec<usize> = (0..=q)
            .map(|x| {
                if x == 0 {
                    q
                } else if x == q {
                    0
                } else {
                    (q - inverse_mod(x, q)) % q
                }
            })
            .collect();
        Permutation::new(images).unwrap()
    }

    /// x -> c x, fixing 0 and infinity.
    pub fn scaling(q: usize, c: usize) -> Permutation {
        let images: Vec<usize> = (0..=q)
            .map(|x| if x < q { c * x % q } else { q })
            .collect();
        Permutation::new(images).unwrap()
    }

    fn inverse_mod(x: usize, q: usize) -> usize {
        (1..q).find(|&y| x * y % q == 1).expect("q prime, x nonzero")
    }
}

/// PSL(2,13) acting on the 14 points of the projective line; order 1092.
pub fn psl2_13() -> Result<PermGroup> {
    PermGroup::closure(
        &[projective::translation(13), projective::negated_inversion(13)],
        DEFAULT_CLOSURE_CAP,
    )
}

/// PGL(2,7) on the 8 points of the projective line; order 336. The scaling
/// by the non-square 3 extends PSL(2,7) to the full group.
pub fn pgl2_7() -> Result<PermGroup> {
    PermGroup::closure(
        &[
            projective::translation(7),
            projective::negated_inversion(7),
            projective::scaling(7, 3),
        ],
        DEFAULT_CLOSURE_CAP,
    )
}

/// Orbital graph of PSL(2,13) on the 28 cosets of a subgroup of order 39,
/// over one of the two length-13 suborbits. The catalog exposes the first
/// (in suborbit order) that certifies (13,6); `psl2_13_report` says
/// whether both do.
pub fn psl2_13_graph() -> Result<Graph> {
    let (graphs, _) = psl2_13_candidates()?;
    graphs
        .into_iter()
        .find(|g| g.kt() == Some(crate::graph::KtParameters::new(13, 6)))
        .ok_or_else(|| Error::Group("no length-13 suborbit certifies (13,6)".into()))
}

/// Both length-13 orbital graphs and how many of them certify (13,6).
pub fn psl2_13_candidates() -> Result<(Vec<Graph>, usize)> {
    let group = psl2_13()?;
    let h = group.find_subgroup(39)?;
    let action = group.coset_action(&h)?;
    let subs = action.suborbits();
    let mut graphs = Vec::new();
    for (i, s) in subs.iter().enumerate() {
        if s.len() == 13 {
            graphs.push(action.orbital_graph(&[i])?);
        }
    }
    let certifying = graphs
        .iter()
        .filter(|g| g.kt() == Some(crate::graph::KtParameters::new(13, 6)))
        .count();
    Ok((graphs, certifying))
}

pub fn sym5() -> Result<PermGroup> {
    PermGroup::closure(
        &[
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])?,
            Permutation::from_cycles(5, &[&[0, 1]])?,
        ],
        DEFAULT_CLOSURE_CAP,
    )
}

/// Orbital graph of Sym(5) on the 30 cosets of <(0 1),(2 3)>: both
/// non-self-paired length-4 suborbits, one self-paired length-2 and one
/// self-paired length-4 suborbit, chosen by exhaustive trial over the
/// 2 x 3 candidates; the first selection certifying (14,5) is exposed.
pub fn sym5_30_graph() -> Result<Graph> {
    let (graphs, _) = sym5_30_candidates()?;
    graphs
        .into_iter()
        .flatten()
        .next()
        .ok_or_else(|| Error::Group("no suborbit selection certifies (14,5)".into()))
}

/// All six candidate selections in deterministic order; Some(graph) where
/// the candidate certifies (14,5), None where it does not.
pub fn sym5_30_candidates() -> Result<(Vec<Option<Graph>>, usize)> {
    let group = sym5()?;
    let t1 = group
        .id_of(&Permutation::from_cycles(5, &[&[0, 1]])?)
        .expect("transposition in Sym(5)");
    let t2 = group
        .id_of(&Permutation::from_cycles(5, &[&[2, 3]])?)
        .expect("transposition in Sym(5)");
    let h = group.subgroup_closure(&[t1, t2]);
    let action = group.coset_action(&h)?;
    let subs = action.suborbits();

    let nsp4: Vec<usize> = (0..subs.len())
        .filter(|&i| !subs[i].self_paired && subs[i].len() == 4)
        .collect();
    let sp2: Vec<usize> = (0..subs.len())
        .filter(|&i| subs[i].self_paired && subs[i].len() == 2)
        .collect();
    let sp4: Vec<usize> = (0..subs.len())
        .filter(|&i| subs[i].self_paired && subs[i].len() == 4)
        .collect();
    if nsp4.len() != 2 || sp2.len() != 2 || sp4.len() != 3 {
        return Err(Error::Group(format!(
            "unexpected suborbit structure: nsp4={nsp4:?} sp2={sp2:?} sp4={sp4:?}"
        )));
    }
    let mut out = Vec::new();
    for &two in &sp2 {
        for &four in &sp4 {
            let g = action.orbital_graph(&[nsp4[0], nsp4[1], two, four])?;
            out.push(
                (g.kt() == Some(crate::graph::KtParameters::new(14, 5))).then_some(g),
            );
        }
    }
    let successes = out.iter().flatten().count();
    Ok((out, successes))
}

/// Orbital graph of PGL(2,7) on the 24 cosets of a dihedral subgroup of
/// order 14: the union of the first two self-paired length-7 suborbits.
pub fn pgl2_7_graph() -> Result<Graph> {
    let group = pgl2_7()?;
    let h = group.find_subgroup(14)?;
    let action = group.coset_action(&h)?;
    let subs = action.suborbits();
    let sevens: Vec<usize> = (0..subs.len()).filter(|&i| subs[i].len() == 7).collect();
    if sevens.len() != 3 {
        return Err(Error::Group(format!(
            "expected three length-7 suborbits, got {}",
            sevens.len()
        )));
    }
    action.orbital_graph(&[sevens[0], sevens[1]])
}

/// All three 2-of-3 unions of the length-7 suborbits.
pub fn pgl2_7_candidates() -> Result<Vec<Graph>> {
    let group = pgl2_7()?;
    let h = group.find_subgroup(14)?;
    let action = group.coset_action(&h)?;
    let subs = action.suborbits();
    let sevens: Vec<usize> = (0..subs.len()).filter(|&i| subs[i].len() == 7).collect();
    let mut out = Vec::new();
    for i in 0..sevens.len() {
        for j in (i + 1)..sevens.len() {
            out.push(action.orbital_graph(&[sevens[i], sevens[j]])?);
        }
    }
    Ok(out)
}

/// Complement of the 8-valent Cayley graph of C_2 x C_12 on
/// {a, b^3, b^4, b^6, a b^4} (inverse-closed: 8 elements after
/// symmetrization). Element (e, f) is encoded as 12 e + f.
pub fn c2xc12_complement() -> Result<Graph> {
    let enc = |e: usize, f: usize| 12 * e + f;
    let table: Vec<Vec<usize>> = (0..24)
        .map(|x| {
            (0..24)
                .map(|y| enc((x / 12 + y / 12) % 2, (x % 12 + y % 12) % 12))
                .collect()
        })
        .collect();
    let connection = [enc(1, 0), enc(0, 3), enc(0, 4), enc(0, 6), enc(1, 4)];
    let g = cayley_graph(&table, 0, &connection)?;
    Ok(g.complement())
}

/// Schläfli graph via the 27-lines model: lines a_1..a_6 (0..5),
/// b_1..b_6 (6..11), c_{ij} for i<j (12..26 in lexicographic order);
/// the Schläfli graph is the complement of the line-intersection graph.
pub fn schlafli() -> Result<Graph> {
    let c = |i: usize, j: usize| {
        // 1-based i < j among 1..6, packed lexicographically after 12.
        let (i, j) = (i - 1, j - 1);
        12 + i * 6 - i * (i + 1) / 2 + (j - i - 1)
    };
    let mut meets = Graph::empty(27)?;
    for i in 1..=6 {
        for j in 1..=6 {
            if i != j {
                meets.add_edge(i - 1, 6 + j - 1)?; // a_i meets b_j iff i != j
            }
        }
    }
    for i in 1..=6 {
        for j in 1..=6 {
            for k in (j + 1)..=6 {
                if i == j || i == k {
                    meets.add_edge(i - 1, c(j, k))?; // a_i meets c_{jk} iff i in {j,k}
                    meets.add_edge(6 + i - 1, c(j, k))?; // likewise b_i
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (1..=6)
        .flat_map(|i| ((i + 1)..=6).map(move |j| (i, j)))
        .collect();
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[(x + 1)..] {
            if i != k && i != l && j != k && j != l {
                meets.add_edge(c(i, j), c(k, l))?; // disjoint index pairs meet
            }
        }
    }
    Ok(meets.complement())
}

/// Strong regularity parameters (n, k, lambda, mu), or None. Requires at
/// least one adjacent and one non-adjacent pair so both parameters are
/// determined.
pub fn srg_check(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        if g.degree(u) != k {
            return None;
        }
        for v in (u + 1)..n {
            let common = g.neighbours(u).intersection_count(g.neighbours(v));
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}
