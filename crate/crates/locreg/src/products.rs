//! Cartesian product, lexicographic blow-up, and tensor product.
//!
//! Vertex pairs (u, v) are numbered row-major as `u * |h| + v` (for the
//! blow-up, `u * m + i`), so product outputs are byte-stable in graph6.
//!
//! Parameter laws, asserted as properties over certified inputs:
//!   cartesian: (k,t) x (l,t) -> (k+l, t)
//!   lex_blowup: (k,t), m -> (km, tm)
//!   tensor: (k,s) x (l,t) -> (kl, st)
//! The operations themselves accept arbitrary graphs.

use crate::error::Result;
use crate::graph::Graph;

/// (u,v) ~ (u',v')  iff  u = u' and v ~ v', or v = v' and u ~ u'.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let mut p = Graph::empty(gn.checked_mul(hn).unwrap_or(usize::MAX))?;
    for u in 0..gn {
        for v in 0..hn {
            let a = u * hn + v;
            for w in h.neighbours(v).iter() {
                if w > v {
                    p.add_edge(a, u * hn + w)?;
                }
            }
            for x in g.neighbours(u).iter() {
                if x > u {
                    p.add_edge(a, x * hn + v)?;
                }
            }
        }
    }
    Ok(p)
}

/// Replaces every vertex by an independent set of size m; (u,i) ~ (v,j)
/// iff u ~ v. `lex_blowup(g, 1)` is g itself (relabeled identically).
pub fn lex_blowup(g: &Graph, m: usize) -> Result<Graph> {
    assert!(m >= 1, "blow-up factor must be positive");
    let gn = g.n();
    let mut p = Graph::empty(gn.checked_mul(m).unwrap_or(usize::MAX))?;
    for (u, v) in g.edges() {
        for i in 0..m {
            for j in 0..m {
                p.add_edge(u * m + i, v * m + j)?;
            }
        }
    }
    Ok(p)
}

/// (u,v) ~ (u',v')  iff  u ~ u' and v ~ v'.
pub fn tensor(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let mut p = Graph::empty(gn.checked_mul(hn).unwrap_or(usize::MAX))?;
    for (u, x) in g.edges() {
        for (v, w) in h.edges() {
            p.add_edge(u * hn + v, x * hn + w)?;
            p.add_edge(u * hn + w, x * hn + v)?;
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::KtParameters;

    #[test]
    fn cartesian_of_complete_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let p = cartesian(&k4, &k4).unwrap();
        assert_eq!(p.n(), 16);
        assert_eq!(p.kt(), Some(KtParameters::new(6, 2)));

        let k2 = Graph::complete(2).unwrap();
        let c4 = cartesian(&k2, &k2).unwrap();
        assert_eq!(c4.kt(), Some(KtParameters::new(2, 0)));
        assert_eq!(c4.n(), 4);
        assert!(c4.is_connected());

        let k3 = Graph::complete(3).unwrap();
        let triple = cartesian(&cartesian(&k3, &k3).unwrap(), &k3).unwrap();
        assert_eq!(triple.kt(), Some(KtParameters::new(6, 1)));
    }

    #[test]
    fn lex_blowup_examples() {
        let k4 = Graph::complete(4).unwrap();
        let g = lex_blowup(&k4, 2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.kt(), Some(KtParameters::new(6, 4)));

        // Complete tripartite: K_3 blown up by d is (2d, d)-regular,
        // cross-checked against brute-force edge triangle counts.
        let k3 = Graph::complete(3).unwrap();
        for d in 1..=4u32 {
            let g = lex_blowup(&k3, d as usize).unwrap();
            for (u, v) in g.edges() {
                assert_eq!(g.triangles_on_edge(u, v) as u32, d);
            }
            assert_eq!(g.kt(), Some(KtParameters::new(2 * d, d)));
        }

        assert_eq!(lex_blowup(&k4, 1).unwrap(), k4);
    }

    #[test]
    fn tensor_examples() {
        let k4 = Graph::complete(4).unwrap();
        let p = tensor(&k4, &k4).unwrap();
        assert_eq!(p.kt(), Some(KtParameters::new(9, 4)));

        let k11 = Graph::complete(11).unwrap();
        let q = tensor(&k4, &k11).unwrap();
        assert_eq!(q.kt(), Some(KtParameters::new(30, 18)));

        // Bipartite double cover kills all triangles.
        let k2 = Graph::complete(2).unwrap();
        let ico = crate::groups::catalog::catalog("icosahedron").unwrap();
        let d = tensor(&ico, &k2).unwrap();
        assert_eq!(d.kt(), Some(KtParameters::new(5, 0)));
    }

    #[test]
    fn product_orders() {
        let g = Graph::cycle(5).unwrap();
        let h = Graph::complete(3).unwrap();
        assert_eq!(cartesian(&g, &h).unwrap().n(), 15);
        assert_eq!(tensor(&g, &h).unwrap().n(), 15);
        assert_eq!(lex_blowup(&g, 4).unwrap().n(), 20);
    }
}
