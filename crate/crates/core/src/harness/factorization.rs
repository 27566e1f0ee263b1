//! Do `q`-number factorizations of `R_G` come only from nice PEOs?

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{Counterexample, VerificationReport};
use super::with_pool;
use crate::error::{Error, Result};
use crate::graph::{find_nice_peo, region_polynomial, SimpleGraph};
use crate::poly::QPolynomial;

pub const DEFAULT_MAX_VERTICES: usize = 6;
pub const MAX_VERTICES_CEILING: usize = 7;

/// Rows: `R_G` factors into `q`-numbers or not. Columns: `G` has a nice PEO or not.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Contingency {
    pub factorizable_nice: u64,
    pub factorizable_not_nice: u64,
    pub not_factorizable_nice: u64,
    pub not_factorizable_not_nice: u64,
}

impl Contingency {
    pub fn total(&self) -> u64 {
        self.factorizable_nice
            + self.factorizable_not_nice
            + self.not_factorizable_nice
            + self.not_factorizable_not_nice
    }

    fn add(&mut self, factorizable: bool, nice: bool) {
        match (factorizable, nice) {
            (true, true) => self.factorizable_nice += 1,
            (true, false) => self.factorizable_not_nice += 1,
            (false, true) => self.not_factorizable_nice += 1,
            (false, false) => self.not_factorizable_not_nice += 1,
        }
    }
}

/// A graph off the diagonal of the contingency table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCandidate {
    pub graph: String,
    pub region_polynomial: QPolynomial,
    /// Every multiset `{a_k}` with `R_G = prod [a_k]_q`.
    pub factorizations: Vec<Vec<u32>>,
    pub nice_peo: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationExploration {
    pub contingency: Contingency,
    /// Per vertex count, same layout as `contingency`.
    pub by_vertices: BTreeMap<usize, Contingency>,
    pub candidates: Vec<FactorizationCandidate>,
    /// Off-diagonal graphs are listed as counterexamples to
    /// "factorizable exactly when a nice PEO exists".
    pub report: VerificationReport,
}

struct Row {
    factorizations: Vec<Vec<u32>>,
    nice: Option<Vec<usize>>,
    r: QPolynomial,
}

/// Tabulates every labeled graph on `1..=max_vertices` vertices.
pub fn explore_factorization(max_vertices: usize, jobs: usize) -> Result<FactorizationExploration> {
    if max_vertices > MAX_VERTICES_CEILING {
        return Err(Error::ResourceBound {
            what: "graph vertex count",
            requested: max_vertices,
            ceiling: MAX_VERTICES_CEILING,
        });
    }
    let start = Instant::now();
    let mut contingency = Contingency::default();
    let mut by_vertices = BTreeMap::new();
    let mut candidates = Vec::new();
    let mut counterexamples = Vec::new();
    let mut multiple = 0u64;
    for n in 1..=max_vertices {
        let graphs: Vec<SimpleGraph> = SimpleGraph::all_graphs(n).collect();
        let rows: Vec<Row> = with_pool(jobs, || {
            graphs
                .par_iter()
                .map(|g| {
                    let r = region_polynomial(g);
                    Row {
                        factorizations: r.q_number_factorizations().expect("R_G has constant term 1"),
                        nice: find_nice_peo(g).map(|o| o.order),
                        r,
                    }
                })
                .collect()
        });
        let table: &mut Contingency = by_vertices.entry(n).or_default();
        for (g, row) in graphs.iter().zip(rows) {
            let factorizable = !row.factorizations.is_empty();
            let nice = row.nice.is_some();
            table.add(factorizable, nice);
            contingency.add(factorizable, nice);
            if row.factorizations.len() > 1 {
                multiple += 1;
            }
            if factorizable != nice {
                counterexamples.push(Counterexample {
                    subject: g.to_text(),
                    expected: if nice { "factorizable R_G" } else { "no q-number factorization" }.into(),
                    actual: format!("R_G = {}, factorizations {:?}", row.r, row.factorizations),
                });
                candidates.push(FactorizationCandidate {
                    graph: g.to_text(),
                    region_polynomial: row.r,
                    factorizations: row.factorizations,
                    nice_peo: row.nice,
                });
            }
        }
    }
    let checked = contingency.total();
    let details = BTreeMap::from([
        ("factorizable-nice".to_string(), contingency.factorizable_nice),
        ("factorizable-not-nice".to_string(), contingency.factorizable_not_nice),
        ("not-factorizable-nice".to_string(), contingency.not_factorizable_nice),
        ("not-factorizable-not-nice".to_string(), contingency.not_factorizable_not_nice),
        ("multiple-factorizations".to_string(), multiple),
    ]);
    let report = VerificationReport {
        theorem_id: "factorization".to_string(),
        n_range: (1..=max_vertices).collect(),
        checked,
        passed: checked - counterexamples.len() as u64,
        counterexamples,
        details,
        wall_time: start.elapsed(),
    };
    Ok(FactorizationExploration {
        contingency,
        by_vertices,
        candidates,
        report,
    })
}
