use super::{cmp_at, enter, equal, exch, less};
use crate::context::{Probe, SortContext};

/// Partitions `[lo, hi]` around the key at `lo` and returns the pivot's final
/// position `p`: keys in `[lo, p)` are less than the pivot, keys in
/// `(p, hi]` are greater or equal.
///
/// The left scan stops on the first key not less than the pivot and the right
/// scan passes over equal keys, so duplicates of the pivot migrate right.
/// When the scans cross, the pivot is swapped with the last smaller key.
///
/// The right scan relies on the keys left of `lo` to stop it. When the key
/// just left of `lo` equals the pivot (eqsort2 recursing after its duplicate
/// skip can arrange this), no key of the range is smaller, the scan runs on
/// through the run of equal keys, nothing is exchanged, and the returned
/// position is the start of that run, left of `lo`. `lo <= hi < v.len()`.
pub fn eq_partition<T, C: SortContext<T>>(v: &mut [T], lo: usize, hi: usize, ctx: &mut C) -> usize {
    assert!(lo <= hi && hi < v.len(), "range [{lo}, {hi}] out of bounds");
    let len = v.len() as isize;
    let start = lo as isize;
    let mut i = start;
    let mut j = hi as isize + 1;
    loop {
        loop {
            i += 1;
            if i >= len || !less(v, ctx, i, start) {
                break;
            }
        }
        loop {
            j -= 1;
            if j < 0 || less(v, ctx, j, start) {
                break;
            }
        }
        if i >= j {
            if j < 0 || less(v, ctx, j, start) {
                j += 1;
            }
            if j > start {
                exch(v, ctx, j - 1, start);
                j -= 1;
            }
            let pivot = j as usize;
            ctx.probe(v, Probe::EqPartition { lo, hi, pivot });
            return pivot;
        }
        exch(v, ctx, i, j);
    }
}

/// Gathers the keys equal to the key at `lo` at the front of `[lo, hi]` and
/// returns the first position holding a greater key (`hi + 1` when every key
/// equals the pivot).
///
/// Every key in `[lo, hi]` must be greater than or equal to the key at `lo`.
pub fn eq_partition_aux<T, C: SortContext<T>>(v: &mut [T], lo: usize, hi: usize, ctx: &mut C) -> usize {
    assert!(lo <= hi && hi < v.len(), "range [{lo}, {hi}] out of bounds");
    let len = v.len() as isize;
    let start = lo as isize;
    let mut i = start - 1;
    let mut j = hi as isize + 1;
    loop {
        loop {
            i += 1;
            if i >= len || !equal(v, ctx, i, start) {
                break;
            }
        }
        loop {
            j -= 1;
            if cmp_at(v, ctx, j, start).is_le() {
                break;
            }
        }
        if i >= j {
            if equal(v, ctx, j, start) {
                j += 1;
            }
            let split = j as usize;
            ctx.probe(v, Probe::EqPartitionAux { lo, hi, split });
            return split;
        }
        exch(v, ctx, i, j);
    }
}

/// Skips keys equal to their left neighbour before partitioning. Those keys
/// are already in place: the neighbour is a placed pivot no greater than
/// anything to its right.
pub fn eqsort1_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let end = v.len() as isize - 1;
    eqsort1(v, ctx, 0, end, 0);
}

fn eqsort1<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, mut start: isize, end: isize, depth: usize) {
    enter(v, ctx, start, end, depth);
    while start > 0 && start < v.len() as isize && equal(v, ctx, start, start - 1) {
        ctx.probe(
            v,
            Probe::DuplicateSkip {
                pos: start as usize,
                end: end as usize,
            },
        );
        start += 1;
    }
    if start >= end {
        return;
    }
    let par = eq_partition(v, start as usize, end as usize, ctx) as isize;
    eqsort1(v, ctx, start, par - 1, depth + 1);
    eqsort1(v, ctx, par + 1, end, depth + 1);
}

/// Like eqsort1, but the duplicate skip runs between the two recursive calls,
/// stepping over keys equal to the placed pivot before recursing right.
pub fn eqsort2_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let end = v.len() as isize - 1;
    eqsort2(v, ctx, 0, end, 0);
}

fn eqsort2<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, start: isize, end: isize, depth: usize) {
    enter(v, ctx, start, end, depth);
    if start >= end {
        return;
    }
    let mut par = eq_partition(v, start as usize, end as usize, ctx) as isize;
    eqsort2(v, ctx, start, par - 1, depth + 1);
    while par + 1 < v.len() as isize && equal(v, ctx, par, par + 1) {
        par += 1;
    }
    eqsort2(v, ctx, par + 1, end, depth + 1);
}

/// Collects the pivot's duplicates with [`eq_partition_aux`] after the left
/// recursion and recurses only on the strictly greater remainder.
pub fn eqsort3_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let end = v.len() as isize - 1;
    eqsort3(v, ctx, 0, end, 0);
}

fn eqsort3<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, start: isize, end: isize, depth: usize) {
    enter(v, ctx, start, end, depth);
    if start < end {
        let par = eq_partition(v, start as usize, end as usize, ctx);
        eqsort3(v, ctx, start, par as isize - 1, depth + 1);
        let par = eq_partition_aux(v, par, end as usize, ctx) as isize;
        eqsort3(v, ctx, par, end, depth + 1);
    }
}
