//! Order-preserving batch evaluation, data-parallel with the `parallel` feature.

use crate::classifier::{classify, ReductionReport};
use crate::forms::TernaryForm;
use crate::Result;
use num_bigint::BigInt;

/// Apply `f` to every item; output order matches input order.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_sequential(items, f)
}

pub fn map_sequential<T, R, F: Fn(&T) -> R>(items: &[T], f: F) -> Vec<R> {
    items.iter().map(f).collect()
}

/// [`map_ordered`] on a dedicated pool of `threads` workers.
#[cfg(feature = "parallel")]
pub fn map_ordered_with_threads<T, R, F>(threads: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| map_ordered(items, f)),
        Err(_) => map_sequential(items, f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered_with_threads<T, R, F>(_threads: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_sequential(items, f)
}

/// Classify each `(quartic, prime)` pair.
pub fn classify_batch(jobs: &[(TernaryForm, BigInt)]) -> Vec<Result<ReductionReport>> {
    map_ordered(jobs, |(f, p)| classify(f, p))
}

pub fn classify_batch_sequential(jobs: &[(TernaryForm, BigInt)]) -> Vec<Result<ReductionReport>> {
    map_sequential(jobs, |(f, p)| classify(f, p))
}
