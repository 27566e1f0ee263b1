use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{Counterexample, VerificationReport};
use super::with_pool;
use crate::arrangement::{exponents_via_simple_peo, inversion_graph, recurrence_step};
use crate::bruhat::{interval_size, poincare_polynomial};
use crate::error::{Error, Result};
use crate::graph::{chromatic_polynomial, count_acyclic_orientations, find_nice_peo, find_peo, mcs_order,
    exponents_of_ordering, region_polynomial};
use crate::perm::Permutation;
use crate::poly::QPolynomial;

/// Largest `n` swept without `allow_large`.
pub const DEFAULT_CEILING: usize = 7;
/// Largest `n` swept at all.
pub const LARGE_CEILING: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `P_w = R_w` exactly when `w` is smooth.
    PEqualsR,
    /// `|regions| <= B_w`, with equality exactly for avoiders of
    /// 4231, 35142, 42513, 351624.
    Hlss,
    /// `R_w = P_w = prod [e_i + 1]_q` with record exponents, smooth `w`.
    Formula,
    /// `R_w` is palindromic for every `w`.
    PalindromicR,
    /// `P_w` is palindromic exactly when `w` is smooth.
    PalindromicP,
    /// The record-block ordering is a PEO whose exponents match the record formula.
    SimplePeo,
    /// Smooth `w` gives a chordal `G_w` with a nice PEO factoring `R_w`.
    ChordalSmooth,
    /// `R_w = [m+1]_q R_{w'}` and `P_w = [m+1]_q P_{w'}` along the flattening recurrence.
    Recurrence,
    /// Chordal `G_w` has `chi = prod (t - e_i)`; for smooth `w` all exponent sources agree.
    ChromaticRoots,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::PEqualsR,
        Theorem::Hlss,
        Theorem::Formula,
        Theorem::PalindromicR,
        Theorem::PalindromicP,
        Theorem::SimplePeo,
        Theorem::ChordalSmooth,
        Theorem::Recurrence,
        Theorem::ChromaticRoots,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::PEqualsR => "p-eq-r",
            Theorem::Hlss => "hlss",
            Theorem::Formula => "formula",
            Theorem::PalindromicR => "palindromic-r",
            Theorem::PalindromicP => "palindromic-p",
            Theorem::SimplePeo => "simple-peo",
            Theorem::ChordalSmooth => "chordal-smooth",
            Theorem::Recurrence => "recurrence",
            Theorem::ChromaticRoots => "chromatic-roots",
        }
    }

    fn check(self, w: &Permutation) -> Outcome {
        match self {
            Theorem::PEqualsR => check_p_eq_r(w),
            Theorem::Hlss => check_hlss(w),
            Theorem::Formula => check_formula(w),
            Theorem::PalindromicR => check_palindromic_r(w),
            Theorem::PalindromicP => check_palindromic_p(w),
            Theorem::SimplePeo => check_simple_peo(w),
            Theorem::ChordalSmooth => check_chordal_smooth(w),
            Theorem::Recurrence => check_recurrence(w),
            Theorem::ChromaticRoots => check_chromatic_roots(w),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Worker threads; `0` picks one per core.
    pub jobs: usize,
    /// Permit `n = LARGE_CEILING`.
    pub allow_large: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            max_n: 6,
            jobs: 0,
            allow_large: false,
        }
    }
}

enum Outcome {
    Skipped,
    Pass(Vec<&'static str>),
    Fail(Counterexample, Vec<&'static str>),
}

fn fail(w: &Permutation, expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
    Outcome::Fail(
        Counterexample {
            subject: w.to_string(),
            expected: expected.into(),
            actual: actual.into(),
        },
        Vec::new(),
    )
}

fn q(p: &QPolynomial) -> String {
    p.to_string()
}

/// Sweeps every `w` in `S_1, ..., S_max_n`.
pub fn verify(theorem: Theorem, opts: &SweepOptions) -> Result<VerificationReport> {
    let ceiling = if opts.allow_large { LARGE_CEILING } else { DEFAULT_CEILING };
    if opts.max_n > ceiling {
        return Err(Error::ResourceBound {
            what: "sweep size n",
            requested: opts.max_n,
            ceiling,
        });
    }
    if opts.max_n == 0 {
        return Err(Error::EmptyPermutation);
    }
    let start = Instant::now();
    let mut checked = 0u64;
    let mut passed = 0u64;
    let mut counterexamples = Vec::new();
    let mut details = BTreeMap::new();
    let mut skipped = 0u64;
    for n in 1..=opts.max_n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let outcomes: Vec<Outcome> =
            with_pool(opts.jobs, || perms.par_iter().map(|w| theorem.check(w)).collect());
        for outcome in outcomes {
            let tags = match outcome {
                Outcome::Skipped => {
                    skipped += 1;
                    continue;
                }
                Outcome::Pass(tags) => {
                    passed += 1;
                    tags
                }
                Outcome::Fail(c, tags) => {
                    counterexamples.push(c);
                    tags
                }
            };
            checked += 1;
            for tag in tags {
                *details.entry(tag.to_string()).or_insert(0) += 1;
            }
        }
    }
    details.insert("skipped".to_string(), skipped);
    Ok(VerificationReport {
        theorem_id: theorem.id().to_string(),
        n_range: (1..=opts.max_n).collect(),
        checked,
        passed,
        counterexamples,
        details,
        wall_time: start.elapsed(),
    })
}

fn check_p_eq_r(w: &Permutation) -> Outcome {
    let p = poincare_polynomial(w);
    let r = region_polynomial(inversion_graph(w).graph());
    let smooth = w.is_smooth();
    let equal = p == r;
    if equal != smooth {
        let expected = if smooth { "P_w = R_w" } else { "P_w != R_w" };
        return fail(w, expected, format!("P_w = {}, R_w = {}", q(&p), q(&r)));
    }
    Outcome::Pass(if smooth { vec!["smooth"] } else { vec![] })
}

fn check_hlss(w: &Permutation) -> Outcome {
    let b = interval_size(w);
    let r = count_acyclic_orientations(inversion_graph(w).graph());
    let avoids = w.avoids_hlss_patterns();
    let mut tags = Vec::new();
    if avoids {
        tags.push("avoiders");
    }
    if r == b {
        tags.push("equality");
    }
    if r > b || (r == b) != avoids {
        let expected = if avoids { "regions = B_w" } else { "regions < B_w" };
        return fail(w, expected, format!("regions = {r}, B_w = {b}"));
    }
    Outcome::Pass(tags)
}

fn check_formula(w: &Permutation) -> Outcome {
    if !w.is_smooth() {
        return Outcome::Skipped;
    }
    let e = w.exponents_by_records();
    let product = e.q_product();
    let p = poincare_polynomial(w);
    let r = region_polynomial(inversion_graph(w).graph());
    if product != p || product != r {
        return fail(
            w,
            format!("P_w = R_w = {} = {}", e.bracket_form(), q(&product)),
            format!("P_w = {}, R_w = {}", q(&p), q(&r)),
        );
    }
    Outcome::Pass(vec![])
}

fn check_palindromic_r(w: &Permutation) -> Outcome {
    let r = region_polynomial(inversion_graph(w).graph());
    match r.is_palindromic() {
        Ok(true) => Outcome::Pass(vec![]),
        _ => fail(w, "palindromic R_w", format!("R_w = {}", q(&r))),
    }
}

fn check_palindromic_p(w: &Permutation) -> Outcome {
    let p = poincare_polynomial(w);
    let smooth = w.is_smooth();
    let palindromic = p.is_palindromic().unwrap_or(false);
    if palindromic != smooth {
        let expected = if smooth { "palindromic P_w" } else { "non-palindromic P_w" };
        return fail(w, expected, format!("P_w = {}", q(&p)));
    }
    Outcome::Pass(if smooth { vec!["smooth"] } else { vec![] })
}

fn check_simple_peo(w: &Permutation) -> Outcome {
    if !w.is_smooth() {
        return Outcome::Skipped;
    }
    let records = w.exponents_by_records();
    match exponents_via_simple_peo(w) {
        Ok(s) if s.by_vertex == records => Outcome::Pass(vec![]),
        Ok(s) => fail(w, records.to_string(), s.by_vertex.to_string()),
        Err(e) => fail(w, records.to_string(), e.to_string()),
    }
}

fn check_chordal_smooth(w: &Permutation) -> Outcome {
    if !w.is_smooth() {
        return Outcome::Skipped;
    }
    let g = inversion_graph(w);
    if find_peo(g.graph()).is_none() {
        return fail(w, "chordal G_w", "no perfect elimination ordering");
    }
    let Some(nice) = find_nice_peo(g.graph()) else {
        return fail(w, "nice PEO of G_w", "none found");
    };
    let r = region_polynomial(g.graph());
    let product = nice.q_product();
    if r != product {
        return fail(
            w,
            format!("R_w = {} (nice PEO {:?})", q(&product), nice.order),
            format!("R_w = {}", q(&r)),
        );
    }
    Outcome::Pass(vec![])
}

fn check_recurrence(w: &Permutation) -> Outcome {
    if !w.is_smooth() || w.size() < 2 {
        return Outcome::Skipped;
    }
    let step = match recurrence_step(w) {
        Ok(step) => step,
        Err(e) => return fail(w, "a recurrence case applies", e.to_string()),
    };
    let factor = QPolynomial::q_number(step.m as i64 + 1).expect("positive q-number");
    let r = region_polynomial(inversion_graph(w).graph());
    let r_reduced = region_polynomial(inversion_graph(&step.reduced).graph());
    let p = poincare_polynomial(w);
    let p_reduced = poincare_polynomial(&step.reduced);
    let r_ok = r == &factor * &r_reduced;
    let p_ok = p == &factor * &p_reduced;
    if !(r_ok && p_ok) {
        return fail(
            w,
            format!("[{}]_q times the polynomials of {}", step.m + 1, step.reduced),
            format!(
                "R_w = {}, R_w' = {}, P_w = {}, P_w' = {}",
                q(&r),
                q(&r_reduced),
                q(&p),
                q(&p_reduced)
            ),
        );
    }
    Outcome::Pass(vec![match step.case {
        crate::arrangement::RecurrenceCase::DecreasingAfterMax => "case-max",
        crate::arrangement::RecurrenceCase::DecreasingPositionsAboveLast => "case-last",
    }])
}

fn check_chromatic_roots(w: &Permutation) -> Outcome {
    let g = inversion_graph(w);
    let Some(peo) = find_peo(g.graph()) else {
        return Outcome::Skipped;
    };
    let chi = chromatic_polynomial(g.graph());
    if chi != peo.chromatic_product() {
        return fail(
            w,
            format!("chi = prod (t - e) over {:?}", peo.exponent_multiset()),
            format!("chi = {}", chi.display_in('t')),
        );
    }
    if !w.is_smooth() {
        return Outcome::Pass(vec!["chordal-non-smooth"]);
    }
    let records = w.exponents_by_records().multiset();
    let mcs = exponents_of_ordering(g.graph(), &mcs_order(g.graph()))
        .expect("mcs yields an ordering")
        .exponent_multiset();
    let simple = exponents_via_simple_peo(w).map(|s| s.by_vertex.multiset());
    let nice = find_nice_peo(g.graph()).map(|o| o.exponent_multiset());
    let agree = simple.as_ref().ok() == Some(&records)
        && nice.as_ref() == Some(&records)
        && mcs == records;
    if !agree {
        return fail(
            w,
            format!("exponent multiset {records:?} from every source"),
            format!("mcs {mcs:?}, simple {simple:?}, nice {nice:?}"),
        );
    }
    Outcome::Pass(vec!["smooth"])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_n: usize) -> SweepOptions {
        SweepOptions {
            max_n,
            jobs: 2,
            allow_large: false,
        }
    }

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!("nope".parse::<Theorem>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn every_theorem_holds_for_small_n() {
        for t in Theorem::ALL {
            let r = verify(t, &opts(5)).unwrap();
            assert!(r.is_success(), "{}", r.render_text());
            assert!(r.is_consistent());
            assert_eq!(r.checked + r.detail("skipped"), 1 + 2 + 6 + 24 + 120);
        }
    }

    #[test]
    fn smooth_counts_in_details() {
        // smooth permutations in S_1..S_5: 1, 2, 6, 22, 88
        let r = verify(Theorem::PEqualsR, &opts(5)).unwrap();
        assert_eq!(r.detail("smooth"), 119);
        let f = verify(Theorem::Formula, &opts(5)).unwrap();
        assert_eq!(f.checked, 119);
    }

    #[test]
    fn hlss_tallies() {
        let r = verify(Theorem::Hlss, &opts(5)).unwrap();
        assert_eq!(r.detail("equality"), r.detail("avoiders"));
        // S_5 has 103 avoiders of 4231; 35142 and 42513 are two of them
        assert_eq!(r.detail("avoiders"), 1 + 2 + 6 + 23 + 101);
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let a = verify(Theorem::ChromaticRoots, &opts(5)).unwrap();
        let b = verify(Theorem::ChromaticRoots, &SweepOptions { jobs: 1, ..opts(5) }).unwrap();
        assert_eq!((a.checked, a.passed, &a.details), (b.checked, b.passed, &b.details));
    }

    #[test]
    fn ceiling_enforced() {
        let err = verify(Theorem::Hlss, &opts(8)).unwrap_err();
        assert!(matches!(err, Error::ResourceBound { requested: 8, ceiling: 7, .. }));
        let err = verify(Theorem::Hlss, &SweepOptions { max_n: 9, jobs: 1, allow_large: true }).unwrap_err();
        assert!(matches!(err, Error::ResourceBound { ceiling: 8, .. }));
        assert!(verify(Theorem::Hlss, &opts(0)).is_err());
    }
}
