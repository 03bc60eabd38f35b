use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use eqsort::bench::{self, BenchConfig, BenchRow};
use eqsort::datagen::{gen_pattern, gen_uniform_multiset, DatasetSpec, Domain, PaletteKey, Pattern};
use eqsort::plot::{render_svg, PlotMode};
use eqsort::verify::{self, VerifyConfig, DEEP_STACK_BYTES};
use eqsort::{Error, MethodId};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "eqsort", version, about = "Duplicate-aware quicksort variants: verification, benchmarks and charts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every method against the reference sort.
    Verify(VerifyArgs),
    /// Time each (method, k) cell and write timing rows as CSV.
    Bench(GridArgs),
    /// Count comparisons and swaps per cell and write counting rows as CSV.
    Counts(GridArgs),
    /// Dump one generated dataset, one value per line.
    Gen(GenArgs),
    /// Render a benchmark CSV as an SVG chart.
    Plot(PlotArgs),
}

#[derive(Clone, Debug)]
struct MethodList(Vec<MethodId>);

impl FromStr for MethodList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodId::parse_list(s).map(MethodList).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug)]
struct NumList<T>(Vec<T>);

impl<T: FromStr> FromStr for NumList<T> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<T>().map_err(|_| format!("invalid number `{part}`"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(NumList)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated method names, or `all`.
    #[arg(long, default_value = "all")]
    methods: MethodList,
    /// Longest exhaustive sequence length.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Alphabet size of the exhaustive suite.
    #[arg(long, default_value_t = 3)]
    alphabet: u32,
    /// Random multisets per method.
    #[arg(long, default_value_t = 10_000)]
    random_cases: usize,
    /// Longest random multiset.
    #[arg(long, default_value_t = 512)]
    random_max_len: usize,
    /// Comma-separated sizes for the sorted, reverse, organ-pipe and all-equal inputs.
    #[arg(long, default_value = "1000,10000")]
    pattern_sizes: NumList<usize>,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Args)]
struct GridArgs {
    /// Array length.
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    /// Comma-separated distinct-key counts.
    #[arg(long, default_value = "1,2,3,5,9,19,50,100,500,1000,5000,10000,50000,100000")]
    k: NumList<u64>,
    /// Arrays per cell.
    #[arg(long, default_value_t = 50)]
    d: usize,
    /// Timing repetitions per cell.
    #[arg(long, default_value_t = 3)]
    repeats: u32,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Comma-separated method names, or `all`.
    #[arg(long, default_value = "all")]
    methods: MethodList,
    /// Method that the ratio summary on standard error is relative to.
    #[arg(long, default_value = "dualpivot")]
    baseline: MethodId,
    #[arg(long, default_value = "float")]
    domain: Domain,
    /// Output CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Distinct keys of a uniform multiset.
    #[arg(long, conflicts_with = "pattern", required_unless_present = "pattern")]
    k: Option<u64>,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, default_value = "float", conflicts_with = "pattern")]
    domain: Domain,
    /// Emit a fixed integer pattern instead: sorted, reverse, organ_pipe or all_equal.
    #[arg(long)]
    pattern: Option<Pattern>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Benchmark CSV produced by `bench` or `counts`.
    csv: PathBuf,
    /// Output SVG path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "ratio")]
    mode: PlotMode,
    #[arg(long, default_value = "dualpivot")]
    baseline: MethodId,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::EmptyPalette | Error::PaletteTooLarge { .. } => Failure::Usage(e.to_string()),
            other => Failure::Run(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn open_sink(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match out {
        Some(path) => File::create(path)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| Failure::Run(format!("{}: {e}", path.display()))),
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn finish(mut sink: Box<dyn Write>) -> CmdResult {
    sink.flush().map_err(|e| Failure::Run(format!("write failed: {e}")))
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if args.alphabet == 0 && args.max_len > 0 {
        return Err(Failure::Usage("alphabet must be at least 1".into()));
    }
    let config = VerifyConfig {
        methods: args.methods.0,
        max_len: args.max_len,
        alphabet: args.alphabet,
        random_cases: args.random_cases,
        random_max_len: args.random_max_len,
        pattern_sizes: args.pattern_sizes.0,
        seed: args.seed,
    };
    let report = verify::run(&config);
    for (method, r) in &report.methods {
        let status = if r.failures.is_empty() { "ok" } else { "FAILED" };
        println!(
            "{method:<16} {status:<6} exhaustive={} random={} pattern={}",
            r.exhaustive_cases, r.random_cases, r.pattern_cases
        );
        for cx in &r.failures {
            println!("  counterexample: {cx}");
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Run("verification failed".into()))
    }
}

fn grid_config(args: &GridArgs) -> Result<BenchConfig, Failure> {
    let cfg = BenchConfig {
        n: args.n,
        k_list: args.k.0.clone(),
        d: args.d,
        repeats: args.repeats,
        methods: args.methods.0.clone(),
        baseline: args.baseline,
        seed: args.seed,
        domain: args.domain,
    };
    cfg.validate()?;
    if cfg.domain == Domain::Str {
        let capacity = <String as PaletteKey>::capacity();
        if let Some(&k) = cfg.k_list.iter().find(|&&k| k > capacity) {
            return Err(Error::PaletteTooLarge { k, capacity }.into());
        }
    }
    Ok(cfg)
}

fn print_ratio_summary(rows: &[BenchRow], baseline: MethodId) {
    let fmt = |x: Option<f64>| x.map_or_else(|| "-".to_owned(), |v| format!("{v:.3}"));
    for r in bench::compute_ratios(rows, baseline).into_iter().flatten() {
        eprintln!(
            "ratio {:<16} n={} k={} time={} comparisons={} swaps={}",
            r.method,
            r.n,
            r.k,
            fmt(r.time_ratio),
            fmt(r.comparison_ratio),
            fmt(r.swap_ratio)
        );
    }
}

fn cmd_bench(args: GridArgs) -> CmdResult {
    let cfg = grid_config(&args)?;
    let mut sink = open_sink(args.out.as_deref())?;
    let worker = std::thread::Builder::new()
        .name("timing".into())
        .stack_size(DEEP_STACK_BYTES)
        .spawn(move || {
            bench::run_timing_grid(&cfg, |row| {
                eprintln!(
                    "timing {:<16} n={} k={} mean_time_s={}",
                    row.method,
                    row.n,
                    row.k,
                    bench::format_sig6(row.mean_time_s.unwrap_or(f64::NAN))
                );
            })
        })
        .map_err(|e| Failure::Run(format!("cannot start timing thread: {e}")))?;
    let rows = worker
        .join()
        .map_err(|_| Failure::Run("timing thread panicked".into()))??;
    print_ratio_summary(&rows, args.baseline);
    bench::write_csv(&rows, &mut sink)?;
    finish(sink)
}

fn cmd_counts(args: GridArgs) -> CmdResult {
    let cfg = grid_config(&args)?;
    let mut sink = open_sink(args.out.as_deref())?;
    eprintln!(
        "counting {} cells (n={}, d={})",
        cfg.methods.len() * cfg.k_list.len(),
        cfg.n,
        cfg.d
    );
    let rows = bench::run_counting_grid(&cfg)?;
    print_ratio_summary(&rows, args.baseline);
    bench::write_csv(&rows, &mut sink)?;
    finish(sink)
}

fn cmd_gen(args: GenArgs) -> CmdResult {
    let mut sink = open_sink(args.out.as_deref())?;
    let written = match (args.pattern, args.k) {
        (Some(p), _) => gen_pattern(p, args.n)
            .iter()
            .try_for_each(|v| writeln!(sink, "{v}")),
        (None, Some(k)) => {
            let data = gen_uniform_multiset(&DatasetSpec::new(args.n, k, args.seed, args.domain))?;
            data.write_lines(&mut sink)
        }
        (None, None) => return Err(Failure::Usage("either --k or --pattern is required".into())),
    };
    written.map_err(|e| Failure::Run(format!("write failed: {e}")))?;
    finish(sink)
}

fn cmd_plot(args: PlotArgs) -> CmdResult {
    let file = File::open(&args.csv).map_err(|e| Failure::Run(format!("{}: {e}", args.csv.display())))?;
    let rows = bench::read_csv(file)?;
    let svg = render_svg(&rows, args.mode, args.baseline);
    let mut sink = open_sink(args.out.as_deref())?;
    sink.write_all(svg.as_bytes())
        .map_err(|e| Failure::Run(format!("write failed: {e}")))?;
    finish(sink)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Counts(a) => cmd_counts(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
