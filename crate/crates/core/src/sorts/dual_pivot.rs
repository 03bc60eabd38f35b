use std::cmp::Ordering;

use super::{cmp_at, enter, exch, less};
use crate::context::SortContext;

/// Yaroslavskiy's dual-pivot quicksort with the outermost keys as pivots.
///
/// Keys below the left pivot go left, keys at or above the right pivot go
/// right and the rest stays in the middle. When the two pivots are equal only
/// keys strictly above them go right, so the middle holds exactly their
/// duplicates and is not recursed into.
pub fn dualpivot_sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C) {
    let right = v.len() as isize - 1;
    sort(v, ctx, 0, right, 0);
}

fn sort<T, C: SortContext<T>>(v: &mut [T], ctx: &mut C, left: isize, right: isize, depth: usize) {
    enter(v, ctx, left, right, depth);
    if right <= left {
        return;
    }
    let order = cmp_at(v, ctx, left, right);
    if order == Ordering::Greater {
        exch(v, ctx, left, right);
    }
    let equal_pivots = order == Ordering::Equal;

    let mut l = left + 1;
    let mut g = right - 1;
    let mut k = l;
    while k <= g {
        if less(v, ctx, k, left) {
            exch(v, ctx, k, l);
            l += 1;
        } else if goes_right(v, ctx, k, right, equal_pivots) {
            while less(v, ctx, right, g) && k < g {
                g -= 1;
            }
            exch(v, ctx, k, g);
            g -= 1;
            if less(v, ctx, k, left) {
                exch(v, ctx, k, l);
                l += 1;
            }
        }
        k += 1;
    }
    l -= 1;
    g += 1;
    exch(v, ctx, left, l);
    exch(v, ctx, right, g);

    sort(v, ctx, left, l - 1, depth + 1);
    if !equal_pivots {
        sort(v, ctx, l + 1, g - 1, depth + 1);
    }
    sort(v, ctx, g + 1, right, depth + 1);
}

#[inline(always)]
fn goes_right<T, C: SortContext<T>>(v: &[T], ctx: &mut C, k: isize, right: isize, equal_pivots: bool) -> bool {
    if equal_pivots {
        less(v, ctx, right, k)
    } else {
        !less(v, ctx, k, right)
    }
}
