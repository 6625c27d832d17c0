//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) these fan out over rayon's current
//! thread pool; without it they compile to plain iterator loops. Results are
//! collected in input order and reductions use exact arithmetic, so output
//! is identical regardless of thread count or schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, preserving index order in the output.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Returns the smallest index in `0..n` where `bad` holds, if any.
///
/// The parallel version uses `find_first`, which matches the sequential
/// result exactly.
#[cfg(feature = "parallel")]
pub(crate) fn first_violation<F>(n: usize, bad: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..n).into_par_iter().find_first(|&i| bad(i))
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn first_violation<F>(n: usize, bad: F) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    (0..n).find(|&i| bad(i))
}

/// Applies `f(i, &mut items[i])` to every element in place. Elements are
/// updated independently, so scheduling cannot affect the result.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_indexed_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Sync + Send,
{
    items.par_iter_mut().enumerate().for_each(|(i, t)| f(i, t));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_indexed_mut<T, F>(items: &mut [T], f: F)
where
    F: Fn(usize, &mut T),
{
    items.iter_mut().enumerate().for_each(|(i, t)| f(i, t));
}
