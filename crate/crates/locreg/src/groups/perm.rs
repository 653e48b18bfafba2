//! Small permutation groups as explicit element lists, with right-coset
//! actions, suborbits, orbital graphs and Cayley graphs.
//!
//! Groups here have order at most a few thousand, so everything is
//! materialized: no stabilizer chains, no coset enumeration.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A permutation of {0..n-1} in image form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Group(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles (points not mentioned are
    /// fixed).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::Group(format!("point out of range in {cycle:?}")));
                }
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Left-to-right composition: `(a.then(b))(x) = b(a(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = p.then(self);
            n += 1;
        }
        n
    }
}

/// A permutation group materialized as its full element list. Element 0 is
/// the identity; the rest follow in BFS order from the identity over the
/// generators, so element ids are deterministic.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

impl PermGroup {
    /// BFS product closure of the generators.
    pub fn closure(generators: &[Permutation], cap: usize) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::Group("no generators".into())),
        };
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::Group("generators of mixed degree".into()));
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(next) = {
            let mut next = Vec::new();
            for &i in &frontier {
                for gen in generators {
                    let p = elements[i].then(gen);
                    if !index.contains_key(&p) {
                        if elements.len() >= cap {
                            return Err(Error::Group(format!(
                                "closure exceeded cap {cap}"
                            )));
                        }
                        index.insert(p.clone(), elements.len());
                        next.push(elements.len());
                        elements.push(p);
                    }
                }
            }
            if next.is_empty() {
                None
            } else {
                Some(next)
            }
        } {
            frontier = next;
        }
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn id_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Product by element ids (left-to-right application order).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Element ids of the subgroup generated by the given ids.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }

    /// One subgroup of the requested order, deterministically.
    ///
    /// Strategy: take the largest prime p dividing the order; for each
    /// element c of order p (in id order), brute-force the normalizer of
    /// <c> and scan its elements x for the first with |<c, x>| equal to the
    /// requested order.
    pub fn find_subgroup(&self, order: usize) -> Result<Vec<usize>> {
        if order == 0 || self.order() % order != 0 {
            return Err(Error::Group(format!(
                "order {order} does not divide group order {}",
                self.order()
            )));
        }
        if order == 1 {
            return Ok(vec![0]);
        }
        let p = largest_prime_factor(order);
        for c in 1..self.order() {
            if self.element(c).order() != p {
                continue;
            }
            let cyc = self.subgroup_closure(&[c]);
            let in_cyc: Vec<bool> = {
                let mut v = vec![false; self.order()];
                for &i in &cyc {
                    v[i] = true;
                }
                v
            };
            // Brute-force normalizer of <c>.
            let normalizer: Vec<usize> = (0..self.order())
                .filter(|&g| in_cyc[self.mul(self.mul(self.inv(g), c), g)])
                .collect();
            for &x in &normalizer {
                let h = self.subgroup_closure(&[c, x]);
                if h.len() == order {
                    return Ok(h);
                }
            }
        }
        Err(Error::Group(format!("no subgroup of order {order} found")))
    }

    /// Checks that the given element ids form a subgroup.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut set = vec![false; self.order()];
        for &i in members {
            set[i] = true;
        }
        set[0] && members
            .iter()
            .all(|&a| members.iter().all(|&b| set[self.mul(a, b)]))
    }
}

fn largest_prime_factor(mut n: usize) -> usize {
    let mut best = 1;
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            best = p;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        best = n;
    }
    best
}

/// The right-coset action of a group on the cosets of a subgroup.
/// Coset 0 is the subgroup itself; the rest are numbered in order of the
/// smallest element id they contain.
#[derive(Clone, Debug)]
pub struct CosetAction<'g> {
    pub group: &'g PermGroup,
    pub subgroup: Vec<usize>,
    /// Sorted element ids of each coset.
    pub cosets: Vec<Vec<usize>>,
    /// Coset index of every element.
    pub coset_of: Vec<usize>,
}

impl<'g> PermGroup {
    pub fn coset_action(&'g self, subgroup: &[usize]) -> Result<CosetAction<'g>> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::Group("not a subgroup".into()));
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut cosets = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(h, x)).collect();
            coset.sort_unstable();
            let id = cosets.len();
            for &e in &coset {
                coset_of[e] = id;
            }
            cosets.push(coset);
        }
        Ok(CosetAction {
            group: self,
            subgroup: subgroup.to_vec(),
            cosets,
            coset_of,
        })
    }
}

/// A suborbit: an orbit of the point stabilizer of coset 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suborbit {
    /// Sorted coset indices.
    pub points: Vec<usize>,
    pub self_paired: bool,
    /// Index of the paired suborbit (itself when self-paired).
    pub paired_with: usize,
}

impl Suborbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl CosetAction<'_> {
    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    /// Image of a coset under right multiplication by element g.
    #[inline]
    pub fn act(&self, coset: usize, g: usize) -> usize {
        self.coset_of[self.group.mul(self.cosets[coset][0], g)]
    }

    /// Orbits of the stabilizer of coset 0 (which is the subgroup itself),
    /// ordered by smallest coset, with pairing information.
    pub fn suborbits(&self) -> Vec<Suborbit> {
        let mut orbit_of = vec![usize::MAX; self.coset_count()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.coset_count() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = id;
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                for &h in &self.subgroup {
                    let d = self.act(c, h);
                    if orbit_of[d] == usize::MAX {
                        orbit_of[d] = id;
                        orbit.push(d);
                        stack.push(d);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        // Pairing: map (0, p) through an element sending p back to 0; the
        // image of 0 lands in the paired suborbit.
        let mut subs: Vec<Suborbit> = orbits
            .iter()
            .map(|o| Suborbit {
                points: o.clone(),
                self_paired: false,
                paired_with: usize::MAX,
            })
            .collect();
        for i in 0..subs.len() {
            let p = subs[i].points[0];
            // Any element of coset p maps coset 0 to coset p; its inverse
            // maps p back to 0 and 0 to the paired representative.
            let x = self.cosets[p][0];
            let q = self.act(0, self.group.inv(x));
            subs[i].paired_with = orbit_of[q];
            subs[i].self_paired = orbit_of[q] == i;
        }
        subs
    }

    /// Graph on the cosets whose edges are the orbitals of the chosen
    /// suborbits. Non-self-paired suborbits must be chosen together with
    /// their pair, and the trivial suborbit {0} is excluded.
    pub fn orbital_graph(&self, chosen: &[usize]) -> Result<Graph> {
        let subs = self.suborbits();
        for &i in chosen {
            if i >= subs.len() {
                return Err(Error::AsymmetricSelection(format!(
                    "suborbit index {i} out of range"
                )));
            }
            if subs[i].points == [0] {
                return Err(Error::AsymmetricSelection(
                    "the trivial suborbit cannot be an edge orbit".into(),
                ));
            }
            if !chosen.contains(&subs[i].paired_with) {
                return Err(Error::AsymmetricSelection(format!(
                    "suborbit {i} chosen without its pair {}",
                    subs[i].paired_with
                )));
            }
        }
        let mut g = Graph::empty(self.coset_count())?;
        for &i in chosen {
            for &p in &subs[i].points {
                for e in 0..self.group.order() {
                    let a = self.act(0, e);
                    let b = self.act(p, e);
                    if a != b {
                        g.add_edge(a, b)?;
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Cayley graph of a group given by its multiplication table: vertices are
/// group elements, x ~ y iff x^{-1} y lies in the inverse-closed connection
/// set. The identity must not appear in the connection set.
pub fn cayley_graph(
    table: &[Vec<usize>],
    identity: usize,
    connection: &[usize],
) -> Result<Graph> {
    let n = table.len();
    // Inverses from the table.
    let mut inv = vec![usize::MAX; n];
    for (x, row) in table.iter().enumerate() {
        for (y, &xy) in row.iter().enumerate() {
            if xy == identity {
                inv[x] = y;
            }
        }
    }
    if inv.iter().any(|&i| i == usize::MAX) {
        return Err(Error::Group("multiplication table has no inverses".into()));
    }
    let mut set = vec![false; n];
    for &c in connection {
        if c == identity {
            return Err(Error::IdentityInConnectionSet);
        }
        set[c] = true;
        set[inv[c]] = true; // symmetrize
    }
    let mut g = Graph::empty(n)?;
    for x in 0..n {
        for y in (x + 1)..n {
            if set[table[inv[x]][y]] {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}
