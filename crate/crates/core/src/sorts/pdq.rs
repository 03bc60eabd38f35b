use super::{enter, exch, less};
use crate::context::SortContext;

/// The duplicate handling of pattern-defeating quicksort without any of its
/// speed-up machinery.
///
/// Ranges are normally split with [`partition_right`], which sends keys equal
/// to the pivot right. When the placed pivot just left of the range equals
/// the new pivot, every key equal to it is already minimal, so
/// [`partition_left`] gathers them on the left and they are skipped.
pub fn pdq_baseline_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let end = v.len() as isize;
    sort(v, ctx, 0, end, true, 0);
}

// Half-open range [begin, end).
fn sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, begin: isize, end: isize, leftmost: bool, depth: usize) {
    enter(v, ctx, begin, end - 1, depth);
    if end - begin <= 1 {
        return;
    }
    if !leftmost && !less(v, ctx, begin - 1, begin) {
        let pivot = partition_left(v, ctx, begin, end);
        sort(v, ctx, pivot + 1, end, false, depth + 1);
        return;
    }
    let pivot = partition_right(v, ctx, begin, end);
    sort(v, ctx, begin, pivot, leftmost, depth + 1);
    sort(v, ctx, pivot + 1, end, false, depth + 1);
}

/// Places keys `< pivot` before it and keys `>= pivot` after it.
fn partition_right<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, begin: isize, end: isize) -> isize {
    let len = v.len() as isize;
    let mut first = begin;
    let mut last = end;

    // A key >= pivot exists at `end` unless the range reaches the slice end.
    loop {
        first += 1;
        if first >= len || !less(v, ctx, first, begin) {
            break;
        }
    }
    if first - 1 == begin {
        while first < last {
            last -= 1;
            if less(v, ctx, last, begin) {
                break;
            }
        }
    } else {
        loop {
            last -= 1;
            if less(v, ctx, last, begin) {
                break;
            }
        }
    }

    while first < last {
        exch(v, ctx, first, last);
        loop {
            first += 1;
            if !less(v, ctx, first, begin) {
                break;
            }
        }
        loop {
            last -= 1;
            if less(v, ctx, last, begin) {
                break;
            }
        }
    }

    let pivot = first - 1;
    exch(v, ctx, begin, pivot);
    pivot
}

/// Places keys `<= pivot` before it and keys `> pivot` after it.
fn partition_left<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, begin: isize, end: isize) -> isize {
    let mut first = begin;
    let mut last = end;

    loop {
        last -= 1;
        if !less(v, ctx, begin, last) {
            break;
        }
    }
    if last + 1 == end {
        while first < last {
            first += 1;
            if less(v, ctx, begin, first) {
                break;
            }
        }
    } else {
        loop {
            first += 1;
            if less(v, ctx, begin, first) {
                break;
            }
        }
    }

    while first < last {
        exch(v, ctx, first, last);
        loop {
            last -= 1;
            if !less(v, ctx, begin, last) {
                break;
            }
        }
        loop {
            first += 1;
            if less(v, ctx, begin, first) {
                break;
            }
        }
    }

    let pivot = last;
    exch(v, ctx, begin, pivot);
    pivot
}
