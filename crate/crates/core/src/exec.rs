//! Thin switch between rayon and sequential execution for the data-parallel
//! inner loops. Everything funnels through `find_first_index` so the result
//! is deterministic in both modes: the smallest matching index wins.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest `i` in `0..len` with `pred(i)`, or `None`.
#[cfg(feature = "parallel")]
pub(crate) fn find_first_index<F>(len: u64, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    // Below this size the rayon setup costs more than the scan.
    const PAR_THRESHOLD: u64 = 1 << 12;
    if len < PAR_THRESHOLD {
        (0..len).find(|&i| pred(i))
    } else {
        (0..len).into_par_iter().find_first(|&i| pred(i))
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first_index<F>(len: u64, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    (0..len).find(|&i| pred(i))
}

/// Keep the elements of `items` whose index satisfies `keep`, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn retain_where<T: Send + Sync + Clone, F>(items: &[T], keep: F) -> Vec<T>
where
    F: Fn(usize, &T) -> bool + Sync,
{
    const PAR_THRESHOLD: usize = 256;
    if items.len() < PAR_THRESHOLD {
        items
            .iter()
            .enumerate()
            .filter(|(i, t)| keep(*i, t))
            .map(|(_, t)| t.clone())
            .collect()
    } else {
        items
            .par_iter()
            .enumerate()
            .filter(|(i, t)| keep(*i, t))
            .map(|(_, t)| t.clone())
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn retain_where<T: Send + Sync + Clone, F>(items: &[T], keep: F) -> Vec<T>
where
    F: Fn(usize, &T) -> bool + Sync,
{
    items
        .iter()
        .enumerate()
        .filter(|(i, t)| keep(*i, t))
        .map(|(_, t)| t.clone())
        .collect()
}

/// Name of the active execution mode, used by reports and benches.
pub fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
