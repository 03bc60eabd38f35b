//! In-place quicksorts, all written against [`SortContext`].
//!
//! None of them use small-range cutoffs, randomized pivots or pivot sampling:
//! single-pivot methods take the first key of the range, dual-pivot takes the
//! first and last. Every data movement goes through
//! [`SortContext::exchange`], so swap counts are comparable across methods.
//!
//! The routines index the whole slice with signed positions because several
//! scans legitimately step one slot past their range. Inside the recursion the
//! neighbouring slot always holds a placed pivot that stops the scan; at the
//! two ends of the slice a position check takes its place. Position checks
//! are not element comparisons and are never counted.
//!
//! Recursion is native and depth follows the partition tree, so adversarial
//! inputs (already sorted, organ pipe) recurse roughly `n` deep. Callers
//! sorting such inputs at scale should run on a thread with a large stack.

use std::cmp::Ordering;

use crate::context::{Probe, SortContext};

mod bentley_mcilroy;
mod dijkstra;
mod dual_pivot;
mod eqsort;
mod pdq;
mod sedgewick;

pub use bentley_mcilroy::bentley_mcilroy_sort;
pub use dijkstra::dijkstra3_sort;
pub use dual_pivot::dualpivot_sort;
pub use eqsort::{eq_partition, eq_partition_aux, eqsort1_sort, eqsort2_sort, eqsort3_sort};
pub use pdq::pdq_baseline_sort;
pub use sedgewick::sedgewick_sort;

/// Sorts with the standard library's unstable sort, routing comparisons
/// through `ctx`. Exchanges happen inside std and are not reported.
pub fn reference_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    v.sort_unstable_by(|a, b| ctx.compare(a, b));
}

#[inline(always)]
fn cmp_at<T, C: SortContext<T>>(v: &[T], ctx: &mut C, a: isize, b: isize) -> Ordering {
    ctx.compare(&v[a as usize], &v[b as usize])
}

#[inline(always)]
fn less<T, C: SortContext<T>>(v: &[T], ctx: &mut C, a: isize, b: isize) -> bool {
    cmp_at(v, ctx, a, b) == Ordering::Less
}

#[inline(always)]
fn equal<T, C: SortContext<T>>(v: &[T], ctx: &mut C, a: isize, b: isize) -> bool {
    cmp_at(v, ctx, a, b) == Ordering::Equal
}

#[inline(always)]
fn exch<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, a: isize, b: isize) {
    ctx.exchange(v, a as usize, b as usize);
}

#[inline(always)]
fn enter<T, C: SortContext<T>>(v: &[T], ctx: &mut C, start: isize, end: isize, depth: usize) {
    ctx.probe(
        v,
        Probe::Enter {
            start: start.max(0) as usize,
            len: (end - start + 1).max(0) as usize,
            depth,
        },
    );
}
