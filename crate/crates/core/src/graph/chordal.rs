//! Chordality, perfect elimination orderings and their exponents.
//!
//! Orderings `v_1, ..., v_n` are read front to back: the exponent of `v_i`
//! counts its neighbors among `v_1, ..., v_{i-1}`, and the ordering is perfect
//! when those earlier neighbors always form a clique.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{bits, region_polynomial, SimpleGraph};
use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// Largest vertex count accepted by [`is_chordal_bruteforce`].
pub const BRUTEFORCE_CHORDAL_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    /// `v_1, ..., v_n`.
    pub order: Vec<usize>,
    /// `e_i` for `v_i`, in ordering position.
    pub exponents: Vec<usize>,
    /// Earlier neighbors of every vertex form a clique.
    pub is_peo: bool,
    /// Earlier neighbors of every vertex lie all above or all below it.
    pub is_nice: bool,
}

impl EliminationOrdering {
    /// Exponents re-indexed by vertex label: entry `v - 1` is the exponent of `v`.
    pub fn exponents_by_vertex(&self) -> Vec<usize> {
        let mut by_vertex = vec![0; self.order.len()];
        for (&v, &e) in self.order.iter().zip(&self.exponents) {
            by_vertex[v - 1] = e;
        }
        by_vertex
    }

    pub fn exponent_multiset(&self) -> Vec<usize> {
        let mut m = self.exponents.clone();
        m.sort_unstable();
        m
    }

    /// `prod (t - e_i)`.
    pub fn chromatic_product(&self) -> QPolynomial {
        self.exponents
            .iter()
            .fold(QPolynomial::one(), |acc, &e| &acc * &QPolynomial::linear(-(e as i64), 1))
    }

    /// `prod [e_i + 1]_q`.
    pub fn q_product(&self) -> QPolynomial {
        QPolynomial::q_number_product(self.exponents.iter().map(|&e| e as u32 + 1))
    }
}

fn below_mask(v: usize) -> u64 {
    (1u64 << (v - 1)) - 1
}

/// Whether appending `v` after the vertex set `placed` keeps the ordering
/// perfect (`clique`) and nice (`nice`).
fn placement(g: &SimpleGraph, placed: u64, v: usize) -> (usize, bool, bool) {
    let earlier = g.mask(v) & placed;
    let clique = g.is_clique_mask(earlier);
    let nice = earlier & below_mask(v) == 0 || earlier & !below_mask(v) == 0;
    (earlier.count_ones() as usize, clique, nice)
}

/// Exponents and validity flags of an arbitrary vertex ordering.
pub fn exponents_of_ordering(g: &SimpleGraph, order: &[usize]) -> Result<EliminationOrdering> {
    let n = g.n();
    let mut placed = 0u64;
    if order.len() != n {
        return Err(Error::InvalidOrdering(order.to_vec()));
    }
    let mut exponents = Vec::with_capacity(n);
    let (mut is_peo, mut is_nice) = (true, true);
    for &v in order {
        if v == 0 || v > n || placed >> (v - 1) & 1 == 1 {
            return Err(Error::InvalidOrdering(order.to_vec()));
        }
        let (e, clique, nice) = placement(g, placed, v);
        exponents.push(e);
        is_peo &= clique;
        is_nice &= nice;
        placed |= 1 << (v - 1);
    }
    Ok(EliminationOrdering {
        order: order.to_vec(),
        exponents,
        is_peo,
        is_nice: is_peo && is_nice,
    })
}

/// Maximum cardinality search: repeatedly take the vertex with the most
/// already-taken neighbors, smallest label on ties.
pub fn mcs_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut taken = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| taken >> (v - 1) & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        taken |= 1 << (v - 1);
        for u in bits(g.mask(v) & !taken) {
            weight[u] += 1;
        }
    }
    order
}

/// A perfect elimination ordering (from maximum cardinality search) if `g`
/// is chordal.
pub fn find_peo(g: &SimpleGraph) -> Option<EliminationOrdering> {
    let ordering = exponents_of_ordering(g, &mcs_order(g)).expect("MCS yields a bijection");
    ordering.is_peo.then_some(ordering)
}

/// Chordality by scanning every induced subgraph on at least four vertices
/// for a chordless cycle.
pub fn is_chordal_bruteforce(g: &SimpleGraph) -> Result<bool> {
    let n = g.n();
    if n > BRUTEFORCE_CHORDAL_MAX {
        return Err(Error::ResourceBound {
            what: "brute-force chordality vertex count",
            requested: n,
            ceiling: BRUTEFORCE_CHORDAL_MAX,
        });
    }
    for set in 0u64..1 << n {
        if set.count_ones() >= 4 && induces_cycle(g, set) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The subgraph induced on `set` is a single cycle: 2-regular and connected.
fn induces_cycle(g: &SimpleGraph, set: u64) -> bool {
    if !bits(set).all(|v| (g.mask(v) & set).count_ones() == 2) {
        return false;
    }
    let start = set.trailing_zeros() as usize + 1;
    let mut seen = 1u64 << (start - 1);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in bits(g.mask(v) & set & !seen) {
            seen |= 1 << (u - 1);
            stack.push(u);
        }
    }
    seen == set
}

/// A nice perfect elimination ordering, if one exists. Depth-first over
/// prefixes (smallest label first), remembering prefixes known to dead-end.
pub fn find_nice_peo(g: &SimpleGraph) -> Option<EliminationOrdering> {
    let n = g.n();
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(n);
    if extend_nice(g, full, 0, &mut order, &mut dead) {
        let ordering = exponents_of_ordering(g, &order).expect("search yields a bijection");
        debug_assert!(ordering.is_nice);
        Some(ordering)
    } else {
        None
    }
}

fn extend_nice(
    g: &SimpleGraph,
    full: u64,
    placed: u64,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
) -> bool {
    if placed == full {
        return true;
    }
    if dead.contains(&placed) {
        return false;
    }
    for v in bits(full & !placed) {
        let (_, clique, nice) = placement(g, placed, v);
        if clique && nice {
            order.push(v);
            if extend_nice(g, full, placed | 1 << (v - 1), order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(placed);
    false
}

/// `[m + 1]_q R_{G \ v}(q)` for a vertex `v` whose `m` neighbors form a
/// clique lying entirely below or entirely above `v`.
pub fn region_polynomial_by_clique_vertex(g: &SimpleGraph, v: usize, m: usize) -> Result<QPolynomial> {
    let n = g.n();
    if v == 0 || v > n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    let fail = |reason: String| Err(Error::CliqueVertexPrecondition { v, reason });
    let nbrs = g.mask(v);
    if nbrs.count_ones() as usize != m {
        return fail(format!("degree is {}, not {m}", nbrs.count_ones()));
    }
    if !g.is_clique_mask(nbrs) {
        return fail("neighborhood is not a clique".into());
    }
    if nbrs & below_mask(v) != 0 && nbrs & !below_mask(v) != 0 {
        return fail("neighbors lie both below and above".into());
    }
    let rest = region_polynomial(&g.remove_vertex(v)?);
    Ok(&QPolynomial::q_number(m as i64 + 1)? * &rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{acyclic_orientations, chromatic_polynomial, AcyclicOrientation};
    use crate::perm::Permutation;

    fn every_ordering(n: usize) -> impl Iterator<Item = Vec<usize>> {
        Permutation::all(n).map(|p| p.to_vec())
    }

    #[test]
    fn peo_examples() {
        assert!(find_peo(&SimpleGraph::cycle(4)).is_none());
        for n in 1..=6 {
            let k = SimpleGraph::complete(n);
            for order in every_ordering(n).take(50) {
                assert!(exponents_of_ordering(&k, &order).unwrap().is_peo);
            }
        }
        // a tree: star with a tail
        let tree = SimpleGraph::from_edges(6, &[(1, 2), (1, 3), (1, 4), (4, 5), (5, 6)]).unwrap();
        let peo = find_peo(&tree).unwrap();
        assert!(peo.is_peo);
        assert!(peo.exponents.iter().all(|&e| e <= 1));
    }

    #[test]
    fn bruteforce_examples() {
        let c4 = SimpleGraph::cycle(4);
        assert!(!is_chordal_bruteforce(&c4).unwrap());
        let mut chorded = c4.clone();
        chorded.add_edge(1, 3).unwrap();
        assert!(is_chordal_bruteforce(&chorded).unwrap());
        assert!(is_chordal_bruteforce(&SimpleGraph::new(9).unwrap()).is_err());
    }

    #[test]
    fn mcs_agrees_with_bruteforce() {
        for n in 1..=6 {
            for g in SimpleGraph::all_graphs(n) {
                assert_eq!(find_peo(&g).is_some(), is_chordal_bruteforce(&g).unwrap(), "{g}");
            }
        }
    }

    #[test]
    fn ordering_exponents() {
        let g = SimpleGraph::new(4).unwrap();
        let e = exponents_of_ordering(&g, &[3, 1, 4, 2]).unwrap();
        assert_eq!(e.exponents, vec![0; 4]);
        let k = SimpleGraph::complete(5);
        assert_eq!(
            exponents_of_ordering(&k, &[1, 2, 3, 4, 5]).unwrap().exponents,
            vec![0, 1, 2, 3, 4]
        );
        assert!(matches!(
            exponents_of_ordering(&k, &[1, 2, 2, 4, 5]),
            Err(Error::InvalidOrdering(_))
        ));
        assert!(exponents_of_ordering(&k, &[1, 2, 3]).is_err());
        let e = exponents_of_ordering(&k, &[5, 2, 3, 1, 4]).unwrap();
        assert_eq!(e.exponents_by_vertex(), vec![3, 1, 2, 4, 0]);
    }

    #[test]
    fn nice_peo_examples() {
        let k = SimpleGraph::complete(5);
        let nice = find_nice_peo(&k).unwrap();
        assert_eq!(nice.order, vec![1, 2, 3, 4, 5]);
        assert!(exponents_of_ordering(&k, &[1, 2, 3, 4, 5]).unwrap().is_nice);
        assert!(find_nice_peo(&SimpleGraph::cycle(4)).is_none());
        // path 2 - 1 - 3: ordering 1,2,3 puts single earlier neighbors; nice
        let p = SimpleGraph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(find_nice_peo(&p).is_some());
    }

    #[test]
    fn nice_peo_factors_region_polynomial() {
        for n in 1..=5 {
            for g in SimpleGraph::all_graphs(n) {
                if let Some(nice) = find_nice_peo(&g) {
                    assert!(nice.is_peo && nice.is_nice);
                    assert_eq!(region_polynomial(&g), nice.q_product(), "{g}");
                }
            }
        }
    }

    #[test]
    fn exponent_multisets_do_not_depend_on_the_peo() {
        for n in 1..=5 {
            for g in SimpleGraph::all_graphs(n) {
                let Some(mcs) = find_peo(&g) else { continue };
                let expected = mcs.exponent_multiset();
                for order in every_ordering(n) {
                    let e = exponents_of_ordering(&g, &order).unwrap();
                    if e.is_peo {
                        assert_eq!(e.exponent_multiset(), expected, "{g} {order:?}");
                    }
                }
                assert_eq!(chromatic_polynomial(&g), mcs.chromatic_product(), "{g}");
            }
        }
    }

    #[test]
    fn clique_vertex_factor() {
        let g = SimpleGraph::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(
            region_polynomial_by_clique_vertex(&g, 4, 0).unwrap(),
            region_polynomial(&g)
        );
        for n in 2..=5 {
            let k = SimpleGraph::complete(n);
            let got = region_polynomial_by_clique_vertex(&k, n, n - 1).unwrap();
            assert_eq!(got, QPolynomial::q_number_product(1..=n as u32));
            assert_eq!(got, region_polynomial(&k));
        }
        // 2 has neighbors 1 and 3: mixed sides
        let path = SimpleGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(
            region_polynomial_by_clique_vertex(&path, 2, 2),
            Err(Error::CliqueVertexPrecondition { .. })
        ));
        let c4 = SimpleGraph::cycle(4);
        assert!(region_polynomial_by_clique_vertex(&c4, 1, 2).is_err());
        assert!(region_polynomial_by_clique_vertex(&k_minus(), 4, 1).is_err());
    }

    fn k_minus() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(1, 2), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn clique_vertex_factor_on_all_small_graphs() {
        for n in 1..=5 {
            for g in SimpleGraph::all_graphs(n) {
                for v in 1..=n {
                    let m = g.degree(v);
                    if let Ok(r) = region_polynomial_by_clique_vertex(&g, v, m) {
                        assert_eq!(r, region_polynomial(&g), "{g} v={v}");
                    }
                }
            }
        }
    }

    /// Every acyclic orientation of `G \ v` extends in exactly one way with
    /// `j` edges pointing into `v`, for each `j = 0..=m`.
    #[test]
    fn clique_vertex_extensions_are_unique_per_in_degree() {
        for n in 2..=5 {
            for g in SimpleGraph::all_graphs(n) {
                for v in 1..=n {
                    let nbrs = g.mask(v);
                    let m = nbrs.count_ones() as usize;
                    let one_sided = nbrs & below_mask(v) == 0 || nbrs & !below_mask(v) == 0;
                    if !g.is_clique_mask(nbrs) || !one_sided {
                        continue;
                    }
                    check_extensions(&g, v, m);
                }
            }
        }
    }

    fn check_extensions(g: &SimpleGraph, v: usize, m: usize) {
        let edges = g.edges();
        let touching: Vec<usize> = (0..edges.len())
            .filter(|&k| edges[k].0 == v || edges[k].1 == v)
            .collect();
        let rest = g.remove_vertex(v).unwrap();
        let unlabel = |u: usize| if u >= v { u + 1 } else { u };
        for base in acyclic_orientations(&rest) {
            let base_arcs: HashSet<(usize, usize)> = base
                .arcs()
                .into_iter()
                .map(|(a, b)| (unlabel(a), unlabel(b)))
                .collect();
            let mut per_in_degree = vec![0; m + 1];
            for mask in 0u32..1 << m {
                let mut reversed = vec![false; edges.len()];
                for (k, &(a, b)) in edges.iter().enumerate() {
                    if a != v && b != v {
                        reversed[k] = !base_arcs.contains(&(a, b));
                    }
                }
                for (bit, &k) in touching.iter().enumerate() {
                    reversed[k] = mask >> bit & 1 == 1;
                }
                if let Some(o) = AcyclicOrientation::new(g, reversed).unwrap() {
                    let into_v = o.arcs().iter().filter(|&&(_, h)| h == v).count();
                    per_in_degree[into_v] += 1;
                }
            }
            assert_eq!(per_in_degree, vec![1; m + 1], "{g} v={v}");
        }
    }
}
