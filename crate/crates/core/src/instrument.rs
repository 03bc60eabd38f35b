//! Counting wrappers for the comparison and exchange hooks.

use std::cmp::Ordering;

use crate::context::{Probe, SortContext};

/// Running tallies of element comparisons and exchanges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    comparisons: u64,
    swaps: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// `(comparisons, swaps)`.
    pub fn snapshot(&self) -> (u64, u64) {
        (self.comparisons, self.swaps)
    }

    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn swaps(&self) -> u64 {
        self.swaps
    }
}

/// Wraps another context and counts one comparison per `compare` call and one
/// swap per `exchange` call, self-exchanges included.
#[derive(Debug, Clone, Default)]
pub struct CountingContext<C> {
    inner: C,
    counters: OpCounters,
}

impl<C> CountingContext<C> {
    pub fn new(inner: C) -> Self {
        Self::with_counters(inner, OpCounters::new())
    }

    /// Continues counting from existing tallies.
    pub fn with_counters(inner: C, counters: OpCounters) -> Self {
        Self { inner, counters }
    }

    pub fn counters(&self) -> OpCounters {
        self.counters
    }

    pub fn reset(&mut self) {
        self.counters.reset();
    }

    pub fn into_parts(self) -> (C, OpCounters) {
        (self.inner, self.counters)
    }
}

impl<T, C: SortContext<T>> SortContext<T> for CountingContext<C> {
    #[inline]
    fn compare(&mut self, a: &T, b: &T) -> Ordering {
        self.counters.comparisons += 1;
        self.inner.compare(a, b)
    }

    #[inline]
    fn exchange(&mut self, v: &mut [T], i: usize, j: usize) {
        self.counters.swaps += 1;
        self.inner.exchange(v, i, j);
    }

    #[inline]
    fn probe(&mut self, v: &[T], event: Probe) {
        self.inner.probe(v, event);
    }
}
