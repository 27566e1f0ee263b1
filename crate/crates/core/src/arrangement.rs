//! The inversion arrangement of a permutation: its graph `G_w`, region
//! polynomial `R_w(q)`, the rook-diagram sector analysis and the flattening
//! recurrence `R_w = [m + 1]_q R_{w'}`.
//!
//! Rook diagram convention: the rook of position `i` sits in column `i` and
//! row `w(i)`, rows numbered from the top. Rook `a` is the one in the last
//! column (position `n`, value `e = w(n)`), rook `b` the one in the last row
//! (position `d = w^{-1}(n)`, value `n`). The row of `a` and the column of `b`
//! split the remaining rooks into four sectors:
//!
//! ```text
//!            i < d          d < i < n
//! w(i) < e     A               B
//! w(i) > e     C               D
//! ```

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{exponents_of_ordering, region_polynomial, EliminationOrdering, SimpleGraph};
use crate::perm::{ExponentVector, Permutation};
use crate::poly::QPolynomial;

/// `G_w`: vertices `1..=n`, an edge `(i, j)` for each inversion `i < j`, `w(i) > w(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionGraph {
    w: Permutation,
    graph: SimpleGraph,
}

impl InversionGraph {
    pub fn new(w: &Permutation) -> Self {
        let n = w.size();
        let mut graph = SimpleGraph::new(n).expect("permutation size is within graph bounds");
        for i in 1..=n {
            for j in i + 1..=n {
                if w.get(i) > w.get(j) {
                    graph.add_edge(i, j).unwrap();
                }
            }
        }
        Self { w: w.clone(), graph }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// DOT with vertices labeled `i / w(i)`.
    pub fn to_dot(&self) -> String {
        self.graph
            .to_dot_with_labels(|i| format!("{i} / {}", self.w.get(i)))
    }
}

pub fn inversion_graph(w: &Permutation) -> InversionGraph {
    InversionGraph::new(w)
}

/// `R_w(q) = R_{G_w}(q)`.
pub fn region_polynomial_w(w: &Permutation) -> QPolynomial {
    region_polynomial(InversionGraph::new(w).graph())
}

/// Rooks of `D_w` other than `a` and `b`, by sector. All lists hold positions
/// in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorDecomposition {
    /// Position of the value `n` (column of rook `b`).
    pub d: usize,
    /// `w(n)` (row of rook `a`).
    pub e: usize,
    pub sector_a: Vec<usize>,
    pub sector_b: Vec<usize>,
    pub sector_c: Vec<usize>,
    pub sector_d: Vec<usize>,
}

impl SectorDecomposition {
    pub fn rooks_in_b(&self) -> usize {
        self.sector_b.len()
    }

    pub fn rooks_in_c(&self) -> usize {
        self.sector_c.len()
    }

    pub fn rooks_in_d(&self) -> &[usize] {
        &self.sector_d
    }

    /// A pair of `D` rooks that does not form an inversion, returned as the
    /// positions `(d, i, j, n)` of the `4231` occurrence it creates with `a`
    /// and `b`.
    pub fn d_sector_violation(&self, w: &Permutation) -> Option<[usize; 4]> {
        let n = w.size();
        self.sector_d.iter().enumerate().find_map(|(k, &i)| {
            self.sector_d[k + 1..]
                .iter()
                .find(|&&j| w.get(i) < w.get(j))
                .map(|&j| [self.d, i, j, n])
        })
    }

    /// With rooks in both `B` and `C`, positions `(c, d, b, n)` of the `3412`
    /// occurrence they form with `a` and `b`.
    pub fn b_and_c_witness(&self, w: &Permutation) -> Option<[usize; 4]> {
        let c = *self.sector_c.first()?;
        let b = *self.sector_b.first()?;
        Some([c, self.d, b, w.size()])
    }
}

pub fn sector_decomposition(w: &Permutation) -> SectorDecomposition {
    let n = w.size();
    let d = w.position_of(n);
    let e = w.get(n);
    let mut s = SectorDecomposition {
        d,
        e,
        sector_a: Vec::new(),
        sector_b: Vec::new(),
        sector_c: Vec::new(),
        sector_d: Vec::new(),
    };
    for i in (1..n).filter(|&i| i != d) {
        let sector = match (i < d, w.get(i) < e) {
            (true, true) => &mut s.sector_a,
            (false, true) => &mut s.sector_b,
            (true, false) => &mut s.sector_c,
            (false, false) => &mut s.sector_d,
        };
        sector.push(i);
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecurrenceCase {
    /// `w(d) > w(d+1) > ... > w(n)`; remove position `d`.
    DecreasingAfterMax,
    /// `w^{-1}(e) > w^{-1}(e+1) > ... > w^{-1}(n)`; remove position `n`.
    DecreasingPositionsAboveLast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceStep {
    pub reduced: Permutation,
    pub m: usize,
    pub case: RecurrenceCase,
}

/// One step of the flattening recurrence for smooth `w`, `n >= 2`:
/// `R_w = [m + 1]_q R_{w'}`. The first case is taken whenever it applies.
pub fn recurrence_step(w: &Permutation) -> Result<RecurrenceStep> {
    let n = w.size();
    if n < 2 {
        return Err(Error::FlattenSingleton);
    }
    if !w.is_smooth() {
        return Err(Error::NotSmooth(w.to_string()));
    }
    let d = w.position_of(n);
    let e = w.get(n);
    if (d..n).all(|i| w.get(i) > w.get(i + 1)) {
        return Ok(RecurrenceStep {
            reduced: w.flatten(d)?,
            m: n - d,
            case: RecurrenceCase::DecreasingAfterMax,
        });
    }
    let inv = w.inverse();
    if (e..n).all(|v| inv.get(v) > inv.get(v + 1)) {
        return Ok(RecurrenceStep {
            reduced: w.flatten(n)?,
            m: n - e,
            case: RecurrenceCase::DecreasingPositionsAboveLast,
        });
    }
    Err(Error::Inconsistent(format!(
        "smooth {w} satisfies neither recurrence case"
    )))
}

/// Recurrence steps from `w` down to `S_1`.
pub fn recurrence_chain(w: &Permutation) -> Result<Vec<RecurrenceStep>> {
    let mut steps = Vec::with_capacity(w.size());
    let mut current = w.clone();
    while current.size() > 1 {
        let step = recurrence_step(&current)?;
        current = step.reduced.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// Exponents of `G_w` read off the record-block ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplePeoExponents {
    /// The ordering with position-ordered exponents.
    pub ordering: EliminationOrdering,
    /// Exponents indexed by vertex; comparable with the record formula.
    pub by_vertex: ExponentVector,
}

pub fn exponents_via_simple_peo(w: &Permutation) -> Result<SimplePeoExponents> {
    if !w.is_smooth() {
        return Err(Error::NotSmooth(w.to_string()));
    }
    let g = InversionGraph::new(w);
    let ordering = exponents_of_ordering(g.graph(), &w.simple_peo_order())?;
    if !ordering.is_peo {
        return Err(Error::Inconsistent(format!(
            "record-block ordering {:?} is not a PEO of G_{w}",
            ordering.order
        )));
    }
    let by_vertex = ExponentVector(ordering.exponents_by_vertex());
    Ok(SimplePeoExponents {
        ordering,
        by_vertex,
    })
}

/// ASCII rook diagram: `n x n` grid, an `x` in row `w(i)` of column `i`.
pub fn rook_diagram(w: &Permutation) -> String {
    let n = w.size();
    let rule = format!("+{}\n", "---+".repeat(n));
    let inv = w.inverse();
    let mut out = rule.clone();
    for row in 1..=n {
        out.push('|');
        let col = inv.get(row);
        for c in 1..=n {
            out.push_str(if c == col { " x |" } else { "   |" });
        }
        out.push('\n');
        out.push_str(&rule);
    }
    out
}

/// Sector map of the rook diagram: `a`/`b` for the two special rooks, the
/// sector letter for the others.
pub fn sector_diagram(w: &Permutation) -> String {
    let s = sector_decomposition(w);
    let n = w.size();
    let mut out = String::new();
    for row in 1..=n {
        for col in 1..=n {
            let c = if w.get(col) != row {
                '.'
            } else if col == n {
                'a'
            } else if col == s.d {
                'b'
            } else if s.sector_a.contains(&col) {
                'A'
            } else if s.sector_b.contains(&col) {
                'B'
            } else if s.sector_c.contains(&col) {
                'C'
            } else {
                'D'
            };
            out.push(c);
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "B: {} rooks, C: {} rooks, D: {:?}",
        s.rooks_in_b(),
        s.rooks_in_c(),
        s.sector_d
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::poincare_polynomial;
    use crate::graph::{find_nice_peo, find_peo};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inversion_graph_examples() {
        assert_eq!(InversionGraph::new(&Permutation::identity(5)).graph().edge_count(), 0);
        for n in 1..=6 {
            assert_eq!(
                InversionGraph::new(&Permutation::longest(n)).graph(),
                &SimpleGraph::complete(n)
            );
        }
        let w = p("5164732");
        let g = InversionGraph::new(&w);
        assert_eq!(g.graph().edge_count(), 12);
        assert_eq!(w.length(), 12);
        assert_eq!(w.exponents_by_records().sum(), 12);
        assert!(g.to_dot().contains("[label=\"1 / 5\"]"));
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let g = InversionGraph::new(&w);
                assert_eq!(g.graph().edge_count(), w.length());
                for (i, j) in g.graph().edges() {
                    assert!(w.get(i) > w.get(j));
                }
            }
        }
    }

    #[test]
    fn region_polynomial_examples() {
        assert_eq!(region_polynomial_w(&Permutation::identity(4)), QPolynomial::one());
        assert_eq!(
            region_polynomial_w(&Permutation::longest(3)),
            QPolynomial::from_i64s(&[1, 2, 2, 1])
        );
        assert_eq!(
            region_polynomial_w(&p("5164732")),
            QPolynomial::q_number_product([4, 2, 3, 4, 1, 2, 3])
        );
    }

    #[test]
    fn sectors_of_rook_example() {
        let w = p("31487625");
        let s = sector_decomposition(&w);
        assert_eq!((s.d, s.e), (4, 5));
        assert_eq!(s.rooks_in_b(), 1);
        assert_eq!(s.rooks_in_c(), 0);
        assert_eq!(s.rooks_in_d(), &[5, 6]);
        assert!(s.d_sector_violation(&w).is_none());
    }

    #[test]
    fn sectors_degenerate_and_violating() {
        let s = sector_decomposition(&p("3124"));
        assert!(s.sector_b.is_empty() && s.sector_c.is_empty() && s.sector_d.is_empty());
        assert_eq!(s.sector_a, vec![1, 2, 3]);

        let w = p("4231");
        let s = sector_decomposition(&w);
        assert_eq!(s.sector_d, vec![2, 3]);
        let witness = s.d_sector_violation(&w).unwrap();
        assert_eq!(witness, [1, 2, 3, 4]);
        let pattern: Vec<usize> = witness.iter().map(|&i| w.get(i)).collect();
        assert_eq!(pattern, vec![4, 2, 3, 1]);

        let w = p("3412");
        let s = sector_decomposition(&w);
        let witness = s.b_and_c_witness(&w).unwrap();
        let pattern: Vec<usize> = witness.iter().map(|&i| w.get(i)).collect();
        assert_eq!(pattern, vec![3, 4, 1, 2]);
    }

    #[test]
    fn sector_properties_of_smooth_permutations() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let s = sector_decomposition(&w);
                if w.get(n) == n {
                    assert!(s.sector_b.is_empty() && s.sector_c.is_empty() && s.sector_d.is_empty());
                }
                if w.is_smooth() {
                    assert!(s.rooks_in_b() == 0 || s.rooks_in_c() == 0, "{w}");
                    assert!(s.d_sector_violation(&w).is_none(), "{w}");
                }
                if let Some(pos) = s.d_sector_violation(&w) {
                    assert!(!w.is_smooth());
                    assert!(pos.windows(2).all(|p| p[0] < p[1]));
                }
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        let w = p("21345");
        let step = recurrence_step(&w).unwrap();
        assert_eq!(step.m, 0);
        assert_eq!(step.reduced, w.flatten(5).unwrap());
        assert_eq!(step.case, RecurrenceCase::DecreasingAfterMax);

        for n in 2..=6 {
            let step = recurrence_step(&Permutation::longest(n)).unwrap();
            assert_eq!(step.case, RecurrenceCase::DecreasingAfterMax);
            assert_eq!(step.m, n - 1);
            assert_eq!(step.reduced, Permutation::longest(n - 1));
        }
        assert!(matches!(recurrence_step(&p("3412")), Err(Error::NotSmooth(_))));
        assert!(recurrence_step(&p("1")).is_err());
        // 2 3 1: value 3 at d = 2, w(2) > w(3) so case 1 holds
        assert_eq!(recurrence_step(&p("231")).unwrap().m, 1);
    }

    #[test]
    fn second_case_is_used_when_first_fails() {
        // 3 1 2: d = 1, w(1..3) = 3 1 2 not decreasing; e = 2, positions of 2, 3 are 3, 1
        let step = recurrence_step(&p("312")).unwrap();
        assert_eq!(step.case, RecurrenceCase::DecreasingPositionsAboveLast);
        assert_eq!(step.m, 1);
        assert_eq!(step.reduced, p("21"));
    }

    #[test]
    fn full_recursion_reproduces_region_polynomial() {
        for n in 1..=6 {
            for w in Permutation::all(n).filter(|w| w.is_smooth()) {
                let chain = recurrence_chain(&w).unwrap();
                let product = QPolynomial::q_number_product(chain.iter().map(|s| s.m as u32 + 1));
                assert_eq!(product, region_polynomial_w(&w), "{w}");
            }
        }
    }

    #[test]
    fn simple_peo_exponents() {
        let w = p("5164732");
        let got = exponents_via_simple_peo(&w).unwrap();
        assert_eq!(got.ordering.order, vec![5, 6, 7, 3, 4, 1, 2]);
        assert_eq!(got.ordering.exponents, vec![0, 1, 2, 2, 3, 3, 1]);
        assert_eq!(got.ordering.exponent_multiset(), vec![0, 1, 1, 2, 2, 3, 3]);
        assert_eq!(got.by_vertex, w.exponents_by_records());
        let id = exponents_via_simple_peo(&Permutation::identity(4)).unwrap();
        assert_eq!(id.by_vertex.entries(), &[0, 0, 0, 0]);
        assert!(matches!(
            exponents_via_simple_peo(&p("4231")),
            Err(Error::NotSmooth(_))
        ));
    }

    #[test]
    fn smooth_permutations_n6() {
        for w in Permutation::all(6).filter(|w| w.is_smooth()) {
            let g = InversionGraph::new(&w);
            let simple = exponents_via_simple_peo(&w).unwrap();
            assert_eq!(simple.by_vertex, w.exponents_by_records(), "{w}");
            assert!(find_peo(g.graph()).is_some());
            assert!(find_nice_peo(g.graph()).is_some());
            let r = region_polynomial_w(&w);
            assert_eq!(r, w.exponents_by_records().q_product());
            assert_eq!(r, poincare_polynomial(&w));
        }
    }

    #[test]
    fn rook_diagram_rendering() {
        let d = rook_diagram(&p("21"));
        assert_eq!(d, "+---+---+\n|   | x |\n+---+---+\n| x |   |\n+---+---+\n");
        let d = rook_diagram(&p("31487625"));
        // first row: the rook of column 2 (w(2) = 1)
        assert_eq!(d.lines().nth(1).unwrap(), "|   | x |   |   |   |   |   |   |");
        let s = sector_diagram(&p("31487625"));
        assert!(s.starts_with(".A......\n"));
        assert!(s.contains("B: 1 rooks, C: 0 rooks, D: [5, 6]"));
    }
}
