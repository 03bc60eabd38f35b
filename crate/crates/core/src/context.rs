//! Comparison and exchange hooks shared by every sort.

use std::cmp::Ordering;

/// Structural events reported by the sorts through [`SortContext::probe`].
///
/// Positions are absolute indices into the slice being sorted. The default
/// `probe` ignores them; tests use them to check partition postconditions and
/// recursion shape without touching the algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    /// A recursive call on `[start, start + len)` at recursion `depth`
    /// (the top-level call has depth 0).
    Enter {
        start: usize,
        len: usize,
        depth: usize,
    },
    /// The main eqsort partition of `[lo, hi]` placed its pivot at `pivot`.
    EqPartition { lo: usize, hi: usize, pivot: usize },
    /// The auxiliary eqsort partition of `[lo, hi]` returned `split`.
    EqPartitionAux { lo: usize, hi: usize, split: usize },
    /// The eqsort1 duplicate skip stepped over the key at `pos`, which equals
    /// the key at `pos - 1`; the current range ends at `end`.
    DuplicateSkip { pos: usize, end: usize },
}

/// The order oracle and exchange primitive every sort is written against.
///
/// `compare` must be a strict total order over the keys being sorted. Each
/// call is one element comparison; algorithms needing only `<` or `==` derive
/// it from the three-way result.
pub trait SortContext<T> {
    fn compare(&mut self, a: &T, b: &T) -> Ordering;

    #[inline]
    fn exchange(&mut self, v: &mut [T], i: usize, j: usize) {
        v.swap(i, j);
    }

    #[inline]
    fn probe(&mut self, _v: &[T], _event: Probe) {}
}

/// Uses the keys' `Ord` implementation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalOrder;

impl<T: Ord> SortContext<T> for NaturalOrder {
    #[inline]
    fn compare(&mut self, a: &T, b: &T) -> Ordering {
        a.cmp(b)
    }
}

/// Uses a caller supplied comparator, e.g. `f64::total_cmp`.
#[derive(Debug, Clone, Copy)]
pub struct ByContext<F>(pub F);

impl<T, F: FnMut(&T, &T) -> Ordering> SortContext<T> for ByContext<F> {
    #[inline]
    fn compare(&mut self, a: &T, b: &T) -> Ordering {
        (self.0)(a, b)
    }
}

impl<T, C: SortContext<T> + ?Sized> SortContext<T> for &mut C {
    #[inline]
    fn compare(&mut self, a: &T, b: &T) -> Ordering {
        (**self).compare(a, b)
    }

    #[inline]
    fn exchange(&mut self, v: &mut [T], i: usize, j: usize) {
        (**self).exchange(v, i, j)
    }

    #[inline]
    fn probe(&mut self, v: &[T], event: Probe) {
        (**self).probe(v, event)
    }
}
