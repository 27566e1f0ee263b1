//! Simple graphs on vertices `1..=n`, their acyclic orientations, region
//! polynomials, chromatic polynomials and elimination orderings.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::dot;
use crate::error::{Error, Result};

mod chordal;
mod chromatic;
mod orientation;

pub use chordal::{
    exponents_of_ordering, find_nice_peo, find_peo, is_chordal_bruteforce, mcs_order,
    region_polynomial_by_clique_vertex, EliminationOrdering, BRUTEFORCE_CHORDAL_MAX,
};
pub use chromatic::chromatic_polynomial;
pub use orientation::{
    acyclic_orientations, count_acyclic_orientations, descent_count, region_polynomial,
    region_polynomial_geometric_oracle, AcyclicOrientation, AcyclicOrientations,
    GEOMETRIC_ORACLE_MAX,
};

/// Undirected simple graph on `1..=n`, stored as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub const MAX_VERTICES: usize = 64;

    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                n,
                max: Self::MAX_VERTICES,
            });
        }
        Ok(Self { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n).expect("size within bounds");
        for (i, j) in (1..=n).tuple_combinations() {
            g.add_edge(i, j).unwrap();
        }
        g
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Self::new(n).expect("size within bounds");
        for i in 1..=n {
            g.add_edge(i, i % n + 1).unwrap();
        }
        g
    }

    /// Every labeled simple graph on `n` vertices (`2^(n choose 2)` of them),
    /// indexed by the bitmask over pairs in lexicographic order.
    pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        assert!(pairs.len() < 64, "too many graphs to enumerate");
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = SimpleGraph::new(n).unwrap();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
            }
            g
        })
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidEdge(i, j));
        }
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (1..=self.n()).contains(&i) && (1..=self.n()).contains(&j) && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    /// Neighbor bitmask of `v` (bit `k` is vertex `k + 1`).
    pub(crate) fn mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v - 1]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| bits(self.adj[i - 1]).filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| self.has_edge(a, b))
    }

    pub(crate) fn is_clique_mask(&self, set: u64) -> bool {
        bits(set).all(|v| self.adj[v - 1] & set == set & !(1 << (v - 1)))
    }

    /// `G \ v`, relabeling the remaining vertices order-preservingly to `1..=n-1`.
    pub fn remove_vertex(&self, v: usize) -> Result<SimpleGraph> {
        let n = self.n();
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let relabel = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        SimpleGraph::from_edges(n - 1, &edges)
    }

    /// `"n: 7; edges: 1-4,2-3"`.
    pub fn to_text(&self) -> String {
        let edges = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).join(",");
        format!("n: {}; edges: {}", self.n(), edges)
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_with_labels(|v| v.to_string())
    }

    pub fn to_dot_with_labels(&self, label: impl Fn(usize) -> String) -> String {
        let nodes: Vec<(String, String)> = (1..=self.n()).map(|v| (v.to_string(), label(v))).collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(i, j)| (i.to_string(), j.to_string()))
            .collect();
        dot::render(dot::Kind::Undirected, "G", &nodes, &edges)
    }
}

/// 1-based vertex labels of the set bits of `mask`.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let k = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(k + 1)
    })
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({})", self.to_text())
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"n: N; edges: i-j,...\", got {s:?}"));
        let (head, tail) = s.split_once(';').ok_or_else(bad)?;
        let n = head
            .trim()
            .strip_prefix("n:")
            .ok_or_else(bad)?
            .trim()
            .parse::<usize>()
            .map_err(|_| bad())?;
        let list = tail.trim().strip_prefix("edges:").ok_or_else(bad)?.trim();
        let mut g = SimpleGraph::new(n)?;
        for item in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item.split_once('-').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            g.add_edge(a, b)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_queries() {
        let g = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.neighbors(3), vec![1, 2]);
        assert_eq!(g.degree(4), 0);
        assert!(g.is_clique(&[1, 2, 3]));
        assert!(!g.is_clique(&[1, 2, 4]));
        assert!(g.is_clique_mask(0b0111));
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 4)]).is_err());
        assert!(SimpleGraph::new(65).is_err());
    }

    #[test]
    fn vertex_removal_relabels() {
        let g = SimpleGraph::from_edges(4, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        let h = g.remove_vertex(2).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(2, 3)]);
        assert!(g.remove_vertex(5).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = SimpleGraph::from_edges(7, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(g.to_text(), "n: 7; edges: 1-4,2-3");
        assert_eq!(g.to_text().parse::<SimpleGraph>().unwrap(), g);
        assert_eq!("n: 3; edges:".parse::<SimpleGraph>().unwrap(), SimpleGraph::new(3).unwrap());
        assert!("n: x; edges:".parse::<SimpleGraph>().is_err());
        assert!("edges: 1-2".parse::<SimpleGraph>().is_err());
    }

    #[test]
    fn graph_enumeration() {
        assert_eq!(SimpleGraph::all_graphs(4).count(), 64);
        assert_eq!(SimpleGraph::all_graphs(1).count(), 1);
        let max = SimpleGraph::all_graphs(4).map(|g| g.edge_count()).max();
        assert_eq!(max, Some(6));
    }

    #[test]
    fn dot_export() {
        let dot = SimpleGraph::from_edges(2, &[(1, 2)]).unwrap().to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("\"1\" -- \"2\";"));
    }
}
