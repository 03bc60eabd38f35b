use super::{enter, exch, less};
use crate::context::SortContext;

/// Two-way Hoare partitioning where both scans stop on keys equal to the
/// pivot, so runs of duplicates are split evenly between the two sides.
pub fn sedgewick_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let hi = v.len() as isize - 1;
    sort(v, ctx, 0, hi, 0);
}

fn sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, lo: isize, hi: isize, depth: usize) {
    enter(v, ctx, lo, hi, depth);
    if hi <= lo {
        return;
    }
    let j = partition(v, ctx, lo, hi);
    sort(v, ctx, lo, j - 1, depth + 1);
    sort(v, ctx, j + 1, hi, depth + 1);
}

fn partition<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, lo: isize, hi: isize) -> isize {
    let mut i = lo;
    let mut j = hi + 1;
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
        if i >= j {
            break;
        }
        exch(v, ctx, i, j);
    }
    exch(v, ctx, lo, j);
    j
}
