//! Deterministic random multisets and adversarial patterns.
//!
//! Generation is a pure function of [`DatasetSpec`]. The stream comes from
//! ChaCha8 (`rand_chacha`, seeded through `SeedableRng::seed_from_u64`), and
//! palette indices are drawn with Lemire's multiply-shift method with
//! rejection, which is unbiased and does not depend on any `rand` version's
//! range sampling. Per-array seeds for benchmark cells come from
//! [`array_seed`], which reads one word from the ChaCha stream numbered by the
//! array index.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Key kind of a generated dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Domain {
    Int,
    #[default]
    Float,
    Str,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::Int => "int",
            Domain::Float => "float",
            Domain::Str => "string",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "int" => Ok(Domain::Int),
            "float" => Ok(Domain::Float),
            "string" | "str" => Ok(Domain::Str),
            other => Err(format!("unknown domain `{other}` (expected int, float or string)")),
        }
    }
}

/// An `f64` ordered by [`f64::total_cmp`].
#[derive(Debug, Clone, Copy)]
pub struct TotalF64(pub f64);

impl PartialEq for TotalF64 {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for TotalF64 {}

impl PartialOrd for TotalF64 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TotalF64 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for TotalF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

const STRING_KEY_LEN: usize = 8;
const STRING_DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A key type with a palette of distinct values indexed by `0..k`.
///
/// The palette is strictly increasing in the index, so datasets drawn with the
/// same indices are order-isomorphic across domains.
pub trait PaletteKey: Ord + Clone + Send + Sync + fmt::Display + 'static {
    const DOMAIN: Domain;

    /// Largest supported `k`.
    fn capacity() -> u64 {
        u64::MAX
    }

    fn palette(index: u64, k: u64) -> Self;
}

impl PaletteKey for i64 {
    const DOMAIN: Domain = Domain::Int;

    fn capacity() -> u64 {
        i64::MAX as u64
    }

    fn palette(index: u64, _k: u64) -> Self {
        index as i64
    }
}

impl PaletteKey for TotalF64 {
    const DOMAIN: Domain = Domain::Float;

    // Keeps `index / k` exactly representable and distinct.
    fn capacity() -> u64 {
        1 << 53
    }

    fn palette(index: u64, k: u64) -> Self {
        TotalF64(index as f64 / k as f64)
    }
}

impl PaletteKey for String {
    const DOMAIN: Domain = Domain::Str;

    fn capacity() -> u64 {
        36u64.pow(STRING_KEY_LEN as u32)
    }

    /// Fixed-width base-36 numerals, so byte order matches index order.
    fn palette(mut index: u64, _k: u64) -> Self {
        let mut buf = [b'0'; STRING_KEY_LEN];
        for slot in buf.iter_mut().rev() {
            *slot = STRING_DIGITS[(index % 36) as usize];
            index /= 36;
        }
        String::from_utf8(buf.to_vec()).expect("ascii digits")
    }
}

/// A random multiset of `n` keys over `k` distinct palette values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DatasetSpec {
    pub n: usize,
    pub k: u64,
    pub seed: u64,
    pub domain: Domain,
}

impl DatasetSpec {
    pub fn new(n: usize, k: u64, seed: u64, domain: Domain) -> Self {
        Self { n, k, seed, domain }
    }

    /// The spec of array `index` within a benchmark cell seeded by `master`.
    pub fn for_array(n: usize, k: u64, master: u64, index: u64, domain: Domain) -> Self {
        Self::new(n, k, array_seed(master, index), domain)
    }
}

/// Derives the seed of array `index` from a master seed.
pub fn array_seed(master: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng.next_u64()
}

/// Uniform draw from `0..bound` (Lemire, "Fast random integer generation in an
/// interval").
fn draw_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let mut m = u128::from(rng.next_u64()) * u128::from(bound);
    if (m as u64) < bound {
        let threshold = bound.wrapping_neg() % bound;
        while (m as u64) < threshold {
            m = u128::from(rng.next_u64()) * u128::from(bound);
        }
    }
    (m >> 64) as u64
}

fn check_k(k: u64, capacity: u64) -> Result<()> {
    if k < 1 {
        return Err(Error::EmptyPalette);
    }
    if k > capacity {
        return Err(Error::PaletteTooLarge { k, capacity });
    }
    Ok(())
}

/// Palette indices of the multiset described by `(n, k, seed)`.
pub fn gen_indices(n: usize, k: u64, seed: u64) -> Result<Vec<u64>> {
    check_k(k, u64::MAX)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| draw_below(&mut rng, k)).collect())
}

/// Draws `n` keys of type `K` independently and uniformly from its palette of
/// `k` values. The spec's `domain` field is ignored; `K` decides it.
pub fn gen_keys<K: PaletteKey>(n: usize, k: u64, seed: u64) -> Result<Vec<K>> {
    check_k(k, K::capacity())?;
    Ok(gen_indices(n, k, seed)?
        .into_iter()
        .map(|i| K::palette(i, k))
        .collect())
}

/// A generated key sequence in one of the supported domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dataset {
    Int(Vec<i64>),
    Float(Vec<TotalF64>),
    Str(Vec<String>),
}

impl Dataset {
    pub fn len(&self) -> usize {
        match self {
            Dataset::Int(v) => v.len(),
            Dataset::Float(v) => v.len(),
            Dataset::Str(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn distinct_count(&self) -> usize {
        match self {
            Dataset::Int(v) => distinct_count(v),
            Dataset::Float(v) => distinct_count(v),
            Dataset::Str(v) => distinct_count(v),
        }
    }

    /// Writes one key per line.
    pub fn write_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        fn lines<T: fmt::Display, W: Write>(v: &[T], out: &mut W) -> std::io::Result<()> {
            v.iter().try_for_each(|x| writeln!(out, "{x}"))
        }
        match self {
            Dataset::Int(v) => lines(v, &mut out)?,
            Dataset::Float(v) => lines(v, &mut out)?,
            Dataset::Str(v) => lines(v, &mut out)?,
        }
        out.flush()
    }
}

/// Generates the multiset described by `spec` in its domain.
pub fn gen_uniform_multiset(spec: &DatasetSpec) -> Result<Dataset> {
    Ok(match spec.domain {
        Domain::Int => Dataset::Int(gen_keys(spec.n, spec.k, spec.seed)?),
        Domain::Float => Dataset::Float(gen_keys(spec.n, spec.k, spec.seed)?),
        Domain::Str => Dataset::Str(gen_keys(spec.n, spec.k, spec.seed)?),
    })
}

/// Deterministic adversarial inputs for correctness testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Sorted,
    Reverse,
    /// `0, 1, ..., m, ..., 1, 0`.
    OrganPipe,
    AllEqual,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [
        Pattern::Sorted,
        Pattern::Reverse,
        Pattern::OrganPipe,
        Pattern::AllEqual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::Sorted => "sorted",
            Pattern::Reverse => "reverse",
            Pattern::OrganPipe => "organ_pipe",
            Pattern::AllEqual => "all_equal",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown pattern `{s}`"))
    }
}

pub fn gen_pattern(pattern: Pattern, n: usize) -> Vec<i64> {
    let n = n as i64;
    match pattern {
        Pattern::Sorted => (0..n).collect(),
        Pattern::Reverse => (0..n).rev().collect(),
        Pattern::OrganPipe => (0..n).map(|i| i.min(n - 1 - i)).collect(),
        Pattern::AllEqual => vec![0; n as usize],
    }
}

/// Exact number of distinct keys in `seq`.
pub fn distinct_count<T: Ord>(seq: &[T]) -> usize {
    seq.iter().collect::<BTreeSet<_>>().len()
}
