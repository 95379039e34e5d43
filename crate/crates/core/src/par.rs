//! Data-parallel loop helpers with a sequential fallback.
//!
//! The decision procedures are embarrassingly parallel over the carrier;
//! with the default `parallel` feature they fan out through rayon, and
//! without it the same call sites compile to plain sequential loops.
//! Results are position-stable either way, so verdicts and witnesses do
//! not depend on the execution mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` produced over `0..n`, in index order.
#[cfg(feature = "parallel")]
pub fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).find_map(f)
}

/// Map over `0..n` preserving index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Whether this build runs the data-parallel paths.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
