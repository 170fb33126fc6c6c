//! Classification data and searches: the tables of prehomogeneous modules,
//! exhaustive cross-checks, typed candidates and A-free analysis.

mod afree;
mod enumerate;
mod tables;
mod typed;

use thiserror::Error;

use crate::liealg::LieError;
use crate::prehom::CertifyError;
use crate::repbuilder::RepError;
use crate::rootdata::RootDataError;

pub use afree::{a_free_structure, AFreeFactor};
pub use enumerate::{
    classify_modules, cross_check_vinberg, cross_check_vinberg_with, desk_bound, enumerate_modules, irreducible_labels,
    Diff, Report, DESK_BOUNDS,
};
pub use tables::{
    castling_transform, sk_reduced_table, vinberg_entries, vinberg_table, SKRow, SKRowKind, SKTriple, VinbergEntry,
    VinbergRow,
};
pub use typed::{
    construct_type1, construct_type2, search_type12, search_type12_with, typed_candidates, verify_typed_algebra,
    SearchOutcome, TypedModuleCandidate,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("castling does not apply to {0}")]
    NotCastlingShape(String),
    #[error("{0} is not a submodule of the required module")]
    NotEmbedded(String),
    #[error("the Levi factor has a simple factor of type A")]
    NotAFree,
    #[error("the algebra carries no Chevalley data for its Levi factor")]
    NoLeviData,
    #[error("{acting} simple factors act nontrivially on the radical summand {label}, expected exactly one")]
    NonUniqueFactor { acting: usize, label: String },
    #[error("the radical is not abelian")]
    RadicalNotAbelian,
    #[error("factor {0} with its module is not disemisimple")]
    FactorNotDisemisimple(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("could not build a thread pool: {0}")]
    ThreadPool(String),
}

/// Runs `f` inside a rayon pool with `jobs` threads, or the global pool.
pub(crate) fn with_pool<R: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> Result<R, ClassifyError> + Send,
) -> Result<R, ClassifyError> {
    match jobs {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| ClassifyError::ThreadPool(e.to_string()))?
            .install(f),
    }
}
