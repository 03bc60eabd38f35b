//! Correctness driver: every method is checked against the reference sort on
//! exhaustive small inputs, random multisets and adversarial patterns.

use std::fmt;
use std::panic::{self, AssertUnwindSafe};

use crate::datagen::{array_seed, gen_keys, gen_pattern, Pattern};
use crate::MethodId;

/// Stack size for verification threads; sorted and organ-pipe inputs drive
/// first-element-pivot quicksorts about `n` calls deep.
pub const DEEP_STACK_BYTES: usize = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub methods: Vec<MethodId>,
    /// Longest sequence of the exhaustive suite; every length `1..=max_len`
    /// over `alphabet` letters is tried.
    pub max_len: usize,
    pub alphabet: u32,
    /// Random multisets per method, cycling k through 1, 2, 5 and n.
    pub random_cases: usize,
    pub random_max_len: usize,
    pub pattern_sizes: Vec<usize>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            methods: MethodId::STUDIED.to_vec(),
            max_len: 8,
            alphabet: 3,
            random_cases: 10_000,
            random_max_len: 512,
            pattern_sizes: vec![1_000, 10_000],
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Exhaustive,
    Random,
    Pattern(Pattern),
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::Exhaustive => f.write_str("exhaustive"),
            Suite::Random => f.write_str("random"),
            Suite::Pattern(p) => write!(f, "pattern {p}"),
        }
    }
}

/// A shrunk input on which a method disagrees with the reference sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub method: MethodId,
    pub suite: Suite,
    pub input: Vec<i64>,
    pub output: Vec<i64>,
    pub expected: Vec<i64>,
    pub panicked: bool,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.panicked {
            return write!(f, "{} ({}): input {:?} panicked", self.method, self.suite, self.input);
        }
        write!(
            f,
            "{} ({}): input {:?} -> {:?}, expected {:?}",
            self.method, self.suite, self.input, self.output, self.expected
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MethodReport {
    pub exhaustive_cases: usize,
    pub random_cases: usize,
    pub pattern_cases: usize,
    /// At most one counterexample per suite.
    pub failures: Vec<Counterexample>,
}

impl MethodReport {
    pub fn total_cases(&self) -> usize {
        self.exhaustive_cases + self.random_cases + self.pattern_cases
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub methods: Vec<(MethodId, MethodReport)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.methods.iter().all(|(_, r)| r.failures.is_empty())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Counterexample> {
        self.methods.iter().flat_map(|(_, r)| &r.failures)
    }
}

/// Verifies the library's own sorts.
pub fn run(config: &VerifyConfig) -> VerifyReport {
    run_with(config, crate::sort::<i64>)
}

/// Verifies `sorter`, which must sort its slice the way `method` would.
/// Methods are checked concurrently on threads with [`DEEP_STACK_BYTES`]
/// stacks.
pub fn run_with<F>(config: &VerifyConfig, sorter: F) -> VerifyReport
where
    F: Fn(MethodId, &mut [i64]) + Sync,
{
    let sorter = &sorter;
    let methods = std::thread::scope(|scope| {
        let handles: Vec<_> = config
            .methods
            .iter()
            .map(|&m| {
                std::thread::Builder::new()
                    .name(format!("verify-{m}"))
                    .stack_size(DEEP_STACK_BYTES)
                    .spawn_scoped(scope, move || (m, verify_method(config, m, sorter)))
                    .expect("spawn verification thread")
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    VerifyReport { methods }
}

fn verify_method<F>(config: &VerifyConfig, method: MethodId, sorter: &F) -> MethodReport
where
    F: Fn(MethodId, &mut [i64]),
{
    let mut report = MethodReport::default();
    // A panicking sort counts as a disagreement; its output is reported empty.
    let attempt = |input: &[i64]| -> Option<Vec<i64>> {
        let mut got = input.to_vec();
        panic::catch_unwind(AssertUnwindSafe(|| sorter(method, &mut got))).ok()?;
        Some(got)
    };
    let disagrees = |input: &[i64]| -> bool {
        let mut want = input.to_vec();
        want.sort_unstable();
        attempt(input).is_none_or(|got| got != want)
    };
    let record = |suite: Suite, input: Vec<i64>, report: &mut MethodReport| {
        if report.failures.iter().any(|f| f.suite == suite) {
            return;
        }
        let input = shrink(input, &disagrees);
        let output = attempt(&input);
        let panicked = output.is_none();
        let output = output.unwrap_or_default();
        let mut expected = input.clone();
        expected.sort_unstable();
        report.failures.push(Counterexample {
            method,
            suite,
            input,
            output,
            expected,
            panicked,
        });
    };

    // Lengths ascend, so the first failure found here is already minimal.
    let alphabet = u64::from(config.alphabet.max(1));
    'exhaustive: for len in 1..=config.max_len {
        let total = alphabet.pow(len as u32);
        for code in 0..total {
            let mut rest = code;
            let input: Vec<i64> = (0..len)
                .map(|_| {
                    let digit = rest % alphabet;
                    rest /= alphabet;
                    digit as i64
                })
                .collect();
            report.exhaustive_cases += 1;
            if disagrees(&input) {
                record(Suite::Exhaustive, input, &mut report);
                break 'exhaustive;
            }
        }
    }

    for case in 0..config.random_cases {
        let case_seed = array_seed(config.seed, case as u64);
        let n = (case_seed % (config.random_max_len as u64 + 1)) as usize;
        let k = match case % 4 {
            0 => 1,
            1 => 2,
            2 => 5,
            _ => n.max(1) as u64,
        };
        let input: Vec<i64> = gen_keys(n, k, case_seed).expect("k >= 1");
        report.random_cases += 1;
        if disagrees(&input) {
            record(Suite::Random, input, &mut report);
            break;
        }
    }

    for &n in &config.pattern_sizes {
        for pattern in Pattern::ALL {
            let input = gen_pattern(pattern, n);
            report.pattern_cases += 1;
            if disagrees(&input) {
                record(Suite::Pattern(pattern), input, &mut report);
            }
        }
    }
    report
}

/// Greedily drops chunks, then single elements, while `fails` still holds.
fn shrink(mut input: Vec<i64>, fails: &impl Fn(&[i64]) -> bool) -> Vec<i64> {
    let mut chunk = input.len() / 2;
    while chunk >= 1 {
        let mut start = 0;
        while start + chunk <= input.len() {
            let mut candidate = input.clone();
            candidate.drain(start..start + chunk);
            if fails(&candidate) {
                input = candidate;
            } else {
                start += chunk;
            }
        }
        chunk /= 2;
    }
    input
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(max_len: usize) -> VerifyConfig {
        VerifyConfig {
            max_len,
            random_cases: 200,
            random_max_len: 64,
            pattern_sizes: vec![100],
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn library_sorts_pass() {
        let report = run(&quick(5));
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.methods.len(), 8);
        let (_, r) = &report.methods[0];
        assert_eq!(r.exhaustive_cases, 3 + 9 + 27 + 81 + 243);
        assert_eq!(r.random_cases, 200);
        assert_eq!(r.pattern_cases, 4);
    }

    #[test]
    fn zero_length_runs_no_exhaustive_cases() {
        let cfg = VerifyConfig {
            random_cases: 0,
            pattern_sizes: vec![],
            ..quick(0)
        };
        let report = run(&cfg);
        assert!(report.passed());
        assert!(report.methods.iter().all(|(_, r)| r.total_cases() == 0));
    }

    #[test]
    fn broken_sorter_yields_minimal_counterexample() {
        // Reverses instead of sorting: wrong for any two distinct keys.
        let cfg = VerifyConfig {
            methods: vec![MethodId::Eqsort1],
            ..quick(4)
        };
        let report = run_with(&cfg, |_, v| v.reverse());
        assert!(!report.passed());
        let first = report.failures().next().unwrap();
        assert_eq!(first.suite, Suite::Exhaustive);
        assert_eq!(first.input.len(), 2);
        assert_ne!(first.output, first.expected);
    }

    #[test]
    fn panicking_sorter_is_reported() {
        let cfg = VerifyConfig {
            methods: vec![MethodId::Sedgewick],
            ..quick(3)
        };
        let report = run_with(&cfg, |_, v| {
            if v.len() > 1 {
                panic!("injected");
            }
        });
        let first = report.failures().next().unwrap();
        assert!(first.panicked);
        assert_eq!(first.input.len(), 2);
    }

    // Partition of the equal-key quicksort with the post-crossing fix-up
    // (`j += 1` when the right scan stopped on a smaller key) removed.
    fn partition_without_fixup(v: &mut [i64], lo: usize, hi: usize) -> usize {
        let start = lo as isize;
        let len = v.len() as isize;
        let (mut i, mut j) = (start, hi as isize + 1);
        loop {
            loop {
                i += 1;
                if i >= len || v[i as usize] >= v[lo] {
                    break;
                }
            }
            loop {
                j -= 1;
                if j < 0 || v[j as usize] < v[lo] {
                    break;
                }
            }
            if i >= j {
                if j > start {
                    v.swap((j - 1) as usize, lo);
                    j -= 1;
                }
                return j as usize;
            }
            v.swap(i as usize, j as usize);
        }
    }

    // The mutant can stop making progress; a depth budget turns that into a
    // panic the harness reports.
    fn mutant_sort(v: &mut [i64], lo: usize, hi: usize, depth: usize) {
        assert!(depth <= v.len(), "recursion budget exceeded");
        if lo >= hi {
            return;
        }
        let p = partition_without_fixup(v, lo, hi);
        if p > lo {
            mutant_sort(v, lo, p - 1, depth + 1);
        }
        mutant_sort(v, p + 1, hi, depth + 1);
    }

    #[test]
    fn mutation_without_fixup_is_caught() {
        let cfg = VerifyConfig {
            methods: vec![MethodId::Eqsort2],
            ..quick(6)
        };
        let report = run_with(&cfg, |_, v| {
            if !v.is_empty() {
                let hi = v.len() - 1;
                mutant_sort(v, 0, hi, 0);
            }
        });
        assert!(!report.passed());
        let first = report.failures().next().unwrap();
        assert_eq!(first.suite, Suite::Exhaustive);
        assert!(first.input.len() <= 3, "{first}");
    }

    #[test]
    fn shrinking_keeps_failure() {
        let fails = |v: &[i64]| v.contains(&7) && v.contains(&3);
        let small = shrink(vec![1, 7, 2, 2, 9, 3, 4, 0, 5], &fails);
        assert_eq!(small, vec![7, 3]);
    }
}
