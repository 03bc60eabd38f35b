use std::cmp::Ordering;

use super::{cmp_at, enter, exch};
use crate::context::SortContext;

/// Single-pass three-way ("Dutch national flag") partitioning; recursion
/// continues only on the strictly smaller and strictly greater regions.
pub fn dijkstra3_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let hi = v.len() as isize - 1;
    sort(v, ctx, 0, hi, 0);
}

fn sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, lo: isize, hi: isize, depth: usize) {
    enter(v, ctx, lo, hi, depth);
    if hi <= lo {
        return;
    }
    // [lo, lt) < pivot, [lt, i) == pivot, (gt, hi] > pivot. The slot at `lt`
    // always holds a copy of the pivot.
    let mut lt = lo;
    let mut gt = hi;
    let mut i = lo + 1;
    while i <= gt {
        match cmp_at(v, ctx, i, lt) {
            Ordering::Less => {
                exch(v, ctx, lt, i);
                lt += 1;
                i += 1;
            }
            Ordering::Greater => {
                exch(v, ctx, i, gt);
                gt -= 1;
            }
            Ordering::Equal => i += 1,
        }
    }
    sort(v, ctx, lo, lt - 1, depth + 1);
    sort(v, ctx, gt + 1, hi, depth + 1);
}
