//! Exhaustive theorem sweeps over `S_n` and explorers for the open questions
//! about region graphs and q-number factorizations.

mod factorization;
mod gamma;
mod report;
mod verify;

pub use factorization::{
    explore_factorization, Contingency, FactorizationCandidate, FactorizationExploration,
    DEFAULT_MAX_VERTICES, MAX_VERTICES_CEILING,
};
pub use gamma::{
    explore_gamma, hasse_diagram, region_graph, EmbeddingOutcome, GammaReport, HasseDiagram,
    RegionGraph, EMBED_MAX_NODES, GAMMA_MAX_N,
};
pub use report::{Counterexample, VerificationReport};
pub use verify::{verify, SweepOptions, Theorem, DEFAULT_CEILING, LARGE_CEILING};

/// Runs `f` on a pool of `jobs` threads (`0` = one per core).
pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}
