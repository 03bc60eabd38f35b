//! Measurement protocol: `d` generated arrays per cell, timing averaged over
//! repeats, separate counting passes, and ratio tables against a baseline.
//!
//! Timing cells run serially on the calling thread with [`NaturalOrder`] and
//! never touch counters. Counting cells are timing independent and run in
//! parallel across cells.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::datagen::{gen_keys, DatasetSpec, Domain, PaletteKey, TotalF64};
use crate::{is_sorted, CountingContext, Error, MethodId, NaturalOrder, Result};

/// Worker stack size for counting passes.
const COUNTING_STACK_BYTES: usize = 256 << 20;

pub const CSV_HEADER: [&str; 9] = [
    "kind",
    "method",
    "n",
    "k",
    "d",
    "repeats",
    "mean_time_s",
    "mean_comparisons",
    "mean_swaps",
];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n: usize,
    pub k_list: Vec<u64>,
    /// Arrays per cell.
    pub d: usize,
    /// Timing repetitions per cell.
    pub repeats: u32,
    pub methods: Vec<MethodId>,
    pub baseline: MethodId,
    pub seed: u64,
    pub domain: Domain,
}

impl Default for BenchConfig {
    /// Desk-scale defaults: n = 10^5, d = 50, three repeats.
    fn default() -> Self {
        Self {
            n: 100_000,
            k_list: vec![1, 2, 3, 5, 9, 19, 50, 100, 500, 1_000, 5_000, 10_000, 50_000, 100_000],
            d: 50,
            repeats: 3,
            methods: MethodId::STUDIED.to_vec(),
            baseline: MethodId::DualPivot,
            seed: 2024,
            domain: Domain::Float,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Config(m.to_owned()));
        if self.d < 1 {
            return fail("d must be at least 1");
        }
        if self.repeats < 1 {
            return fail("repeats must be at least 1");
        }
        if self.methods.is_empty() {
            return fail("no methods selected");
        }
        if !self.methods.contains(&self.baseline) {
            return Err(Error::Config(format!(
                "baseline {} is not among the selected methods",
                self.baseline
            )));
        }
        if self.k_list.is_empty() {
            return fail("no k values given");
        }
        if self.k_list.contains(&0) {
            return fail("k must be at least 1");
        }
        Ok(())
    }

    fn cells(&self) -> Vec<(MethodId, u64)> {
        self.methods
            .iter()
            .flat_map(|&m| self.k_list.iter().map(move |&k| (m, k)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowKind {
    Timing,
    Counting,
}

impl RowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RowKind::Timing => "timing",
            RowKind::Counting => "counting",
        }
    }
}

impl fmt::Display for RowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RowKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "timing" => Ok(RowKind::Timing),
            "counting" => Ok(RowKind::Counting),
            other => Err(format!("unknown row kind `{other}`")),
        }
    }
}

/// One measurement cell. Timing rows carry `repeats` and `mean_time_s`;
/// counting rows carry the two mean counts.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub kind: RowKind,
    pub method: MethodId,
    pub n: usize,
    pub k: u64,
    pub d: usize,
    pub repeats: Option<u32>,
    pub mean_time_s: Option<f64>,
    pub mean_comparisons: Option<f64>,
    pub mean_swaps: Option<f64>,
}

fn pristine_arrays<K: PaletteKey>(n: usize, k: u64, d: usize, seed: u64) -> Result<Vec<Vec<K>>> {
    (0..d as u64)
        .map(|i| {
            let spec = DatasetSpec::for_array(n, k, seed, i, K::DOMAIN);
            gen_keys(spec.n, spec.k, spec.seed)
        })
        .collect()
}

/// Times `method` over the `d` arrays of one cell.
///
/// The arrays are generated once and copied before every pass, outside the
/// timed region. One untimed warm-up sort of the first array precedes the
/// repeats. Each repeat times the loop over all `d` sorts and contributes
/// `elapsed / d`; the row reports the mean over repeats.
pub fn run_timing_cell<K: PaletteKey>(
    method: MethodId,
    n: usize,
    k: u64,
    d: usize,
    repeats: u32,
    seed: u64,
) -> Result<BenchRow> {
    let pristine = pristine_arrays::<K>(n, k, d, seed)?;

    if let Some(first) = pristine.first() {
        let mut warm = first.clone();
        method.sort_with(&mut warm, &mut NaturalOrder);
    }

    let mut total = 0.0;
    for _ in 0..repeats {
        let mut work = pristine.clone();
        let start = Instant::now();
        for v in work.iter_mut() {
            method.sort_with(v, &mut NaturalOrder);
        }
        let elapsed = start.elapsed().as_secs_f64();
        check_sorted(method, n, k, &work)?;
        total += elapsed / d as f64;
    }

    Ok(BenchRow {
        kind: RowKind::Timing,
        method,
        n,
        k,
        d,
        repeats: Some(repeats),
        mean_time_s: Some(total / f64::from(repeats)),
        mean_comparisons: None,
        mean_swaps: None,
    })
}

/// Counts comparisons and swaps of `method` over the `d` arrays of one cell
/// and reports per-array means.
pub fn run_counting_cell<K: PaletteKey>(method: MethodId, n: usize, k: u64, d: usize, seed: u64) -> Result<BenchRow> {
    let mut ctx = CountingContext::new(NaturalOrder);
    for i in 0..d as u64 {
        let spec = DatasetSpec::for_array(n, k, seed, i, K::DOMAIN);
        let mut v: Vec<K> = gen_keys(spec.n, spec.k, spec.seed)?;
        method.sort_with(&mut v, &mut ctx);
        if !is_sorted(&v) {
            return Err(Error::NotSorted {
                method,
                n,
                k,
                index: i as usize,
            });
        }
    }
    let (comparisons, swaps) = ctx.counters().snapshot();
    Ok(BenchRow {
        kind: RowKind::Counting,
        method,
        n,
        k,
        d,
        repeats: None,
        mean_time_s: None,
        mean_comparisons: Some(comparisons as f64 / d as f64),
        mean_swaps: Some(swaps as f64 / d as f64),
    })
}

fn check_sorted<K: Ord>(method: MethodId, n: usize, k: u64, arrays: &[Vec<K>]) -> Result<()> {
    match arrays.iter().position(|v| !is_sorted(v)) {
        Some(index) => Err(Error::NotSorted { method, n, k, index }),
        None => Ok(()),
    }
}

/// [`run_timing_cell`] in the key type selected by `domain`.
pub fn timing_cell(method: MethodId, n: usize, k: u64, d: usize, repeats: u32, seed: u64, domain: Domain) -> Result<BenchRow> {
    match domain {
        Domain::Int => run_timing_cell::<i64>(method, n, k, d, repeats, seed),
        Domain::Float => run_timing_cell::<TotalF64>(method, n, k, d, repeats, seed),
        Domain::Str => run_timing_cell::<String>(method, n, k, d, repeats, seed),
    }
}

/// [`run_counting_cell`] in the key type selected by `domain`.
pub fn counting_cell(method: MethodId, n: usize, k: u64, d: usize, seed: u64, domain: Domain) -> Result<BenchRow> {
    match domain {
        Domain::Int => run_counting_cell::<i64>(method, n, k, d, seed),
        Domain::Float => run_counting_cell::<TotalF64>(method, n, k, d, seed),
        Domain::Str => run_counting_cell::<String>(method, n, k, d, seed),
    }
}

/// Runs every timing cell of `cfg` serially, reporting each finished row.
pub fn run_timing_grid(cfg: &BenchConfig, mut progress: impl FnMut(&BenchRow)) -> Result<Vec<BenchRow>> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for (method, k) in cfg.cells() {
        let row = timing_cell(method, cfg.n, k, cfg.d, cfg.repeats, cfg.seed, cfg.domain)?;
        progress(&row);
        rows.push(row);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Runs every counting cell of `cfg`, in parallel across cells.
pub fn run_counting_grid(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .stack_size(COUNTING_STACK_BYTES)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let mut rows = pool.install(|| {
        cfg.cells()
            .into_par_iter()
            .map(|(method, k)| counting_cell(method, cfg.n, k, cfg.d, cfg.seed, cfg.domain))
            .collect::<Result<Vec<_>>>()
    })?;
    sort_rows(&mut rows);
    Ok(rows)
}

/// Orders rows by method, then n, then k (stable, so kinds keep their order).
pub fn sort_rows(rows: &mut [BenchRow]) {
    rows.sort_by_key(|r| (r.method, r.n, r.k));
}

/// A method's quantities relative to the baseline in the same `(n, k)` cell.
/// A ratio is absent when either side lacks the quantity or the baseline's
/// value is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub method: MethodId,
    pub n: usize,
    pub k: u64,
    pub time_ratio: Option<f64>,
    pub comparison_ratio: Option<f64>,
    pub swap_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no {baseline} row for n = {n}, k = {k} (needed by {method})")]
pub struct MissingBaseline {
    pub method: MethodId,
    pub baseline: MethodId,
    pub n: usize,
    pub k: u64,
}

#[derive(Debug, Default, Clone, Copy)]
struct Quantities {
    time: Option<f64>,
    comparisons: Option<f64>,
    swaps: Option<f64>,
}

fn ratio(value: Option<f64>, base: Option<f64>) -> Option<f64> {
    match (value, base) {
        (Some(v), Some(b)) if b != 0.0 => Some(v / b),
        _ => None,
    }
}

/// Divides each method's cells by the baseline's cell with the same `(n, k)`.
/// Timing and counting rows of one cell are merged first. Output follows
/// method, n, k order; a cell without a baseline row yields an error entry.
pub fn compute_ratios(rows: &[BenchRow], baseline: MethodId) -> Vec<Result<RatioRow, MissingBaseline>> {
    let mut cells: BTreeMap<(MethodId, usize, u64), Quantities> = BTreeMap::new();
    for r in rows {
        let q = cells.entry((r.method, r.n, r.k)).or_default();
        q.time = q.time.or(r.mean_time_s);
        q.comparisons = q.comparisons.or(r.mean_comparisons);
        q.swaps = q.swaps.or(r.mean_swaps);
    }

    cells
        .iter()
        .map(|(&(method, n, k), q)| {
            let base = cells.get(&(baseline, n, k)).ok_or(MissingBaseline { method, baseline, n, k })?;
            Ok(RatioRow {
                method,
                n,
                k,
                time_ratio: ratio(q.time, base.time),
                comparison_ratio: ratio(q.comparisons, base.comparisons),
                swap_ratio: ratio(q.swaps, base.swaps),
            })
        })
        .collect()
}

/// Formats like C's `%.6g`: six significant digits, trailing zeros removed,
/// scientific notation for exponents below -4 or at least 6.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt_field<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_default()
}

/// Writes the header and one line per row, in method, n, k order.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut rows = rows.to_vec();
    sort_rows(&mut rows);
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_write_error)?;
    for r in &rows {
        w.write_record([
            r.kind.to_string(),
            r.method.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.d.to_string(),
            opt_field(r.repeats, |x| x.to_string()),
            opt_field(r.mean_time_s, format_sig6),
            opt_field(r.mean_comparisons, format_sig6),
            opt_field(r.mean_swaps, format_sig6),
        ])
        .map_err(csv_write_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(rows: &[BenchRow], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    write_csv(rows, std::io::BufWriter::new(file))
}

fn csv_write_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Stdio(io),
        other => Error::Csv {
            row: 0,
            message: format!("{other:?}"),
        },
    }
}

/// Parses CSV produced by [`write_csv`]. Errors name the offending line.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(input);
    let mut records = rdr.records();

    let header = match records.next() {
        Some(rec) => rec.map_err(|e| csv_read_error(e, 1))?,
        None => return Err(Error::Csv { row: 1, message: "missing header".into() }),
    };
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Csv {
            row: 1,
            message: format!("unexpected header `{}`", header.iter().collect::<Vec<_>>().join(",")),
        });
    }

    let mut rows = Vec::new();
    for (idx, rec) in records.enumerate() {
        let line = idx as u64 + 2;
        let rec = rec.map_err(|e| csv_read_error(e, line))?;
        rows.push(parse_record(&rec).map_err(|message| Error::Csv { row: line, message })?);
    }
    Ok(rows)
}

fn csv_read_error(e: csv::Error, line: u64) -> Error {
    let line = e.position().map_or(line, |p| p.line());
    Error::Csv {
        row: line,
        message: e.to_string(),
    }
}

fn parse_record(rec: &csv::StringRecord) -> std::result::Result<BenchRow, String> {
    if rec.len() != CSV_HEADER.len() {
        return Err(format!("expected {} fields, found {}", CSV_HEADER.len(), rec.len()));
    }
    fn req<T: FromStr>(name: &str, s: &str) -> std::result::Result<T, String> {
        s.parse().map_err(|_| format!("bad {name} `{s}`"))
    }
    fn opt<T: FromStr>(name: &str, s: &str) -> std::result::Result<Option<T>, String> {
        if s.is_empty() {
            Ok(None)
        } else {
            req(name, s).map(Some)
        }
    }
    Ok(BenchRow {
        kind: rec[0].parse()?,
        method: rec[1].parse().map_err(|e: crate::ParseMethodError| e.to_string())?,
        n: req("n", &rec[2])?,
        k: req("k", &rec[3])?,
        d: req("d", &rec[4])?,
        repeats: opt("repeats", &rec[5])?,
        mean_time_s: opt("mean_time_s", &rec[6])?,
        mean_comparisons: opt("mean_comparisons", &rec[7])?,
        mean_swaps: opt("mean_swaps", &rec[8])?,
    })
}
