//! Combinatorics of Schubert varieties in type A and their inversion
//! hyperplane arrangements.
//!
//! The crate computes two polynomials attached to a permutation `w`:
//!
//! * the Poincaré polynomial `P_w(q)`, the rank generating function of the
//!   lower Bruhat interval `[id, w]` ([`bruhat`]);
//! * the region polynomial `R_w(q)`, counting regions of the arrangement
//!   `x_i = x_j` over the inversions of `w` by distance from the region
//!   containing `(1, ..., n)` ([`arrangement`], [`graph`]).
//!
//! The two agree exactly when `w` avoids `3412` and `4231`. Everything needed
//! to check that and the surrounding machinery (pattern avoidance, chordal
//! inversion graphs, perfect elimination orderings, record-based exponents,
//! the flattening recurrence) lives here, together with the exhaustive sweeps
//! in [`harness`].

pub mod arrangement;
pub mod bruhat;
mod dot;
pub mod error;
pub mod graph;
pub mod harness;
pub mod perm;
pub mod poly;

pub use arrangement::{InversionGraph, RecurrenceCase, RecurrenceStep, SectorDecomposition};
pub use bruhat::BruhatInterval;
pub use error::{Error, Result};
pub use graph::{AcyclicOrientation, EliminationOrdering, SimpleGraph};
pub use perm::{ExponentVector, Permutation};
pub use poly::QPolynomial;
