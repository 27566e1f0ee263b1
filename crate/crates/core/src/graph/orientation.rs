//! Acyclic orientations and the descent-generating region polynomial.
//!
//! An orientation records, for each edge `(i, j)` with `i < j` in
//! [`SimpleGraph::edges`] order, whether it points `i -> j` (forward) or
//! `j -> i` (reversed). Reversed edges are exactly the descents. The region
//! of the graphical arrangement containing `(1, ..., n)` is the all-forward
//! orientation.

use std::collections::HashSet;

use super::SimpleGraph;
use crate::dot;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::QPolynomial;

/// Largest vertex count accepted by [`region_polynomial_geometric_oracle`].
pub const GEOMETRIC_ORACLE_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation {
    graph: SimpleGraph,
    reversed: Vec<bool>,
}

impl AcyclicOrientation {
    /// Orientation with `reversed[k]` for the `k`-th edge of `graph.edges()`;
    /// `None` if it contains a directed cycle.
    pub fn new(graph: &SimpleGraph, reversed: Vec<bool>) -> Result<Option<Self>> {
        let m = graph.edge_count();
        if reversed.len() != m {
            return Err(Error::SizeMismatch {
                left: reversed.len(),
                right: m,
            });
        }
        let o = Self {
            graph: graph.clone(),
            reversed,
        };
        Ok(o.is_acyclic().then_some(o))
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Per-edge reversal flags in `graph.edges()` order.
    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// Directed edges `(tail, head)`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .zip(&self.reversed)
            .map(|((i, j), &r)| if r { (j, i) } else { (i, j) })
            .collect()
    }

    /// Number of arcs `i -> j` with `i > j`.
    pub fn descent_count(&self) -> usize {
        self.reversed.iter().filter(|&&r| r).count()
    }

    /// Every edge flipped.
    pub fn reverse(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            reversed: self.reversed.iter().map(|r| !r).collect(),
        }
    }

    /// Edge `k` flipped, if the result is still acyclic.
    pub fn flip(&self, k: usize) -> Option<Self> {
        let mut reversed = self.reversed.clone();
        reversed[k] = !reversed[k];
        let o = Self {
            graph: self.graph.clone(),
            reversed,
        };
        o.is_acyclic().then_some(o)
    }

    /// Topological-sort check.
    pub fn is_acyclic(&self) -> bool {
        let n = self.graph.n();
        let mut indegree = vec![0usize; n + 1];
        let mut out = vec![Vec::new(); n + 1];
        for (t, h) in self.arcs() {
            indegree[h] += 1;
            out[t].push(h);
        }
        let mut ready: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &h in &out[v] {
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    ready.push(h);
                }
            }
        }
        removed == n
    }

    pub fn to_dot(&self) -> String {
        let nodes: Vec<(String, String)> =
            (1..=self.graph.n()).map(|v| (v.to_string(), v.to_string())).collect();
        let edges: Vec<(String, String)> = self
            .arcs()
            .into_iter()
            .map(|(t, h)| (t.to_string(), h.to_string()))
            .collect();
        dot::render(dot::Kind::Directed, "O", &nodes, &edges)
    }
}

/// Number of descents of `o`.
pub fn descent_count(o: &AcyclicOrientation) -> usize {
    o.descent_count()
}

/// Whether `to` is reachable from `from` along arcs in `out`.
fn reaches(out: &[u64], from: usize, to: usize) -> bool {
    let target = 1u64 << to;
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        if seen & target != 0 {
            return true;
        }
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= out[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & target != 0
}

/// Stream of all acyclic orientations, by backtracking over the edges in
/// order (forward before reversed) with incremental cycle detection.
#[derive(Clone, Debug)]
pub struct AcyclicOrientations {
    graph: SimpleGraph,
    edges: Vec<(usize, usize)>,
    out: Vec<u64>,
    stack: Vec<bool>,
    started: bool,
    done: bool,
}

pub fn acyclic_orientations(g: &SimpleGraph) -> AcyclicOrientations {
    AcyclicOrientations {
        graph: g.clone(),
        edges: g.edges().into_iter().map(|(i, j)| (i - 1, j - 1)).collect(),
        out: vec![0; g.n()],
        stack: Vec::new(),
        started: false,
        done: false,
    }
}

impl AcyclicOrientations {
    fn arc(&self, k: usize, reversed: bool) -> (usize, usize) {
        let (i, j) = self.edges[k];
        if reversed {
            (j, i)
        } else {
            (i, j)
        }
    }

    fn try_push(&mut self, reversed: bool) -> bool {
        let (t, h) = self.arc(self.stack.len(), reversed);
        if reaches(&self.out, h, t) {
            return false;
        }
        self.out[t] |= 1 << h;
        self.stack.push(reversed);
        true
    }

    /// Advances to the next complete orientation; `backtrack` discards the
    /// current one first.
    fn advance(&mut self, mut backtrack: bool) -> bool {
        loop {
            if backtrack {
                let Some(r) = self.stack.pop() else {
                    return false;
                };
                let (t, h) = self.arc(self.stack.len(), r);
                self.out[t] &= !(1 << h);
                backtrack = r || !self.try_push(true);
            } else if self.stack.len() == self.edges.len() {
                return true;
            } else if !self.try_push(false) && !self.try_push(true) {
                backtrack = true;
            }
        }
    }
}

impl Iterator for AcyclicOrientations {
    type Item = AcyclicOrientation;

    fn next(&mut self) -> Option<AcyclicOrientation> {
        if self.done {
            return None;
        }
        let resumed = std::mem::replace(&mut self.started, true);
        if !self.advance(resumed) {
            self.done = true;
            return None;
        }
        Some(AcyclicOrientation {
            graph: self.graph.clone(),
            reversed: self.stack.clone(),
        })
    }
}

/// `R_G(q) = sum over acyclic orientations of q^{des}`.
pub fn region_polynomial(g: &SimpleGraph) -> QPolynomial {
    QPolynomial::from_counts(&descent_tally(g))
}

/// `tally[d]` = number of acyclic orientations with `d` descents.
pub(crate) fn descent_tally(g: &SimpleGraph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(i, j)| (i - 1, j - 1)).collect();
    let mut tally = vec![0u64; edges.len() + 1];
    let mut out = vec![0u64; g.n()];
    tally_rec(&edges, 0, 0, &mut out, &mut tally);
    tally
}

fn tally_rec(edges: &[(usize, usize)], k: usize, des: usize, out: &mut [u64], tally: &mut [u64]) {
    if k == edges.len() {
        tally[des] += 1;
        return;
    }
    let (i, j) = edges[k];
    for (t, h, d) in [(i, j, 0), (j, i, 1)] {
        if !reaches(out, h, t) {
            out[t] |= 1 << h;
            tally_rec(edges, k + 1, des + d, out, tally);
            out[t] &= !(1 << h);
        }
    }
}

/// Number of acyclic orientations (= number of regions).
pub fn count_acyclic_orientations(g: &SimpleGraph) -> u64 {
    descent_tally(g).iter().sum()
}

/// Region polynomial computed from the arrangement directly: every ordering
/// of the coordinates picks a region; deduplicate and count hyperplanes
/// separating each region from the one containing `(1, ..., n)`.
pub fn region_polynomial_geometric_oracle(g: &SimpleGraph) -> Result<QPolynomial> {
    let n = g.n();
    if n > GEOMETRIC_ORACLE_MAX {
        return Err(Error::ResourceBound {
            what: "oracle vertex count",
            requested: n,
            ceiling: GEOMETRIC_ORACLE_MAX,
        });
    }
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    let edges = g.edges();
    let mut regions = HashSet::new();
    for x in Permutation::all(n) {
        // bit k set: hyperplane k separates the point x from (1, ..., n)
        let sides: u64 = edges
            .iter()
            .enumerate()
            .filter(|&(_, &(i, j))| x.get(i) > x.get(j))
            .fold(0, |acc, (k, _)| acc | 1 << k);
        regions.insert(sides);
    }
    let mut counts = vec![0u64; edges.len() + 1];
    for r in regions {
        counts[r.count_ones() as usize] += 1;
    }
    Ok(QPolynomial::from_counts(&counts))
}
