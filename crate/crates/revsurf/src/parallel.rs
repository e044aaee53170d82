//! Data-parallel map over independent work items.
//!
//! Sweeps (inversion centers, experiment configurations, batch invariants) are
//! embarrassingly parallel; with the `parallel` feature they fan out through
//! rayon, otherwise they run sequentially. Results keep input order either way,
//! so report assembly stays deterministic.

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Always-sequential map, kept as the benchmark baseline for `par_map`.
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
