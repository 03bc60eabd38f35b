//! Duplicate-aware quicksort partitioning schemes.
//!
//! The crate provides three variants of "equal quicksort" (`eqsort1`,
//! `eqsort2`, `eqsort3`) together with five classical quicksort baselines
//! that differ only in how they treat keys equal to the pivot. Every sort
//! routes its element comparisons and exchanges through a [`SortContext`],
//! so the same code path can be timed with plain operations or counted with
//! [`CountingContext`].
//!
//! Around the sorts sit a deterministic multiset generator ([`datagen`]),
//! a measurement harness ([`bench`]), a correctness driver ([`verify`]) and a
//! small SVG chart emitter ([`plot`]).

pub mod bench;
pub mod context;
pub mod datagen;
mod error;
pub mod instrument;
mod method;
pub mod plot;
pub mod sorts;
pub mod verify;

pub use context::{ByContext, NaturalOrder, Probe, SortContext};
pub use error::{Error, Result};
pub use instrument::{CountingContext, OpCounters};
pub use method::{MethodId, ParseMethodError};

/// Sorts `v` ascending with `method` using the keys' natural order.
pub fn sort<T: Ord>(method: MethodId, v: &mut [T]) {
    method.sort_with(v, &mut NaturalOrder);
}

/// Sorts `v` with `method`, counting every comparison and exchange.
///
/// Returns the `(comparisons, swaps)` tallies of this single run.
pub fn sort_counted<T: Ord>(method: MethodId, v: &mut [T]) -> (u64, u64) {
    let mut ctx = CountingContext::new(NaturalOrder);
    method.sort_with(v, &mut ctx);
    ctx.counters().snapshot()
}

/// Returns `true` when `v` is non-decreasing under `Ord`.
pub fn is_sorted<T: Ord>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}
