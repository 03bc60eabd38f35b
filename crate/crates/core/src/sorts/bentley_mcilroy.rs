use super::{enter, equal, exch, less};
use crate::context::SortContext;

/// Fat partitioning that parks keys equal to the pivot at both ends of the
/// range while scanning, then swaps them into the middle.
pub fn bentley_mcilroy_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let hi = v.len() as isize - 1;
    sort(v, ctx, 0, hi, 0);
}

fn sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, lo: isize, hi: isize, depth: usize) {
    enter(v, ctx, lo, hi, depth);
    if hi <= lo {
        return;
    }
    // Invariant while scanning: [lo, p] == pivot, (p, i) < pivot,
    // (j, q) > pivot, [q, hi] == pivot. The pivot itself stays at `lo`.
    let mut i = lo;
    let mut j = hi + 1;
    let mut p = lo;
    let mut q = hi + 1;
    loop {
        loop {
            i += 1;
            if !less(v, ctx, i, lo) || i == hi {
                break;
            }
        }
        loop {
            j -= 1;
            if !less(v, ctx, lo, j) || j == lo {
                break;
            }
        }
        if i == j && equal(v, ctx, i, lo) {
            p += 1;
            exch(v, ctx, p, i);
        }
        if i >= j {
            break;
        }
        exch(v, ctx, i, j);
        if equal(v, ctx, i, lo) {
            p += 1;
            exch(v, ctx, p, i);
        }
        if equal(v, ctx, j, lo) {
            q -= 1;
            exch(v, ctx, q, j);
        }
    }

    let mut i = j + 1;
    for k in lo..=p {
        exch(v, ctx, k, j);
        j -= 1;
    }
    for k in (q..=hi).rev() {
        exch(v, ctx, k, i);
        i += 1;
    }
    sort(v, ctx, lo, j, depth + 1);
    sort(v, ctx, i, hi, depth + 1);
}
