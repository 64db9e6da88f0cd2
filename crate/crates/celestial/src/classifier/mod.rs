//! Classification and verification routines that tie the lattice,
//! Möbius-geometry, and catalog layers together: the Weyl-orbit census and
//! its derived tables, divisor-class constraint solving, the admissible
//! surface-type survey, per-surface verification, and the conical-surface
//! cross-check table.

pub mod census;
pub mod constraints;
pub mod schicho;
pub mod types;
pub mod verify;

pub use census::{
    census, diff_m4_classes, diff_m4_counts, diff_table_c1, diff_table_g, pair_count,
    reproduce_m4_tables,
    reproduce_table_c1, reproduce_table_g, C1Row, Census, GRow, M4ClassRow, M4Row, Orbit,
};
pub use constraints::{
    m8_real_pairing, prop_40, prop_62_cases, prop_73, prop_84_conics, solve_class_constraints,
    ClassConstraint, Decomposition40,
};
pub use schicho::{verify_conical_rows, ConicalRow};
pub use types::{admissible_types, diff_types, survey_types, TypeDecision, TypeReason};
pub use verify::{verify_surface, Check, SurfaceReport};

use crate::catalog::CatalogError;
use crate::exact::ExactError;
use crate::lattice::LatticeError;
use crate::moebius::MoebiusError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassifierError {
    #[error("lattice error: {0}")]
    Lattice(#[from] LatticeError),
    #[error("arithmetic error: {0}")]
    Exact(#[from] ExactError),
    #[error("geometry error: {0}")]
    Moebius(#[from] MoebiusError),
    #[error("catalog error: {0}")]
    Catalog(#[from] CatalogError),
    #[error("census error: {0}")]
    Census(String),
    #[error("constraint system has no finite solution set: {0}")]
    InfiniteSolutionSet(String),
    #[error("{0}")]
    Verification(String),
}

pub type ClassifierResult<T> = Result<T, ClassifierError>;

/// Number of worker threads: `CELESTIAL_THREADS` if set (minimum 1),
/// otherwise the available parallelism.
pub fn thread_count() -> usize {
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("CELESTIAL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(n) => n.clamp(1, available.max(1)),
        None => available,
    }
}

/// Map a function over a slice with scoped worker threads, preserving input
/// order in the output.
pub fn parallel_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> U + Sync,
) -> Vec<U> {
    let threads = thread_count().min(items.len().max(1));
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    let mut out: Vec<Option<U>> = (0..items.len()).map(|_| None).collect();
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|scope| {
        for (slot_chunk, item_chunk) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, item) in slot_chunk.iter_mut().zip(item_chunk) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|o| o.expect("worker filled every slot")).collect()
}
