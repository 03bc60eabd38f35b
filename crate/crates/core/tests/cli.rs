use std::fs;
use std::process::{Command, Output};

fn eqsort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqsort"))
        .args(args)
        .output()
        .expect("run eqsort binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines().skip(1).collect()
}

#[test]
fn bench_writes_one_timing_row_per_cell() {
    let out = eqsort(&["bench", "--n", "1000", "--k", "1,2,5", "--d", "5", "--methods", "eqsort1,dualpivot"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps\n"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.starts_with("timing,")));
    // Progress goes to standard error, never into the CSV.
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn counts_writes_one_counting_row_per_cell() {
    let out = eqsort(&["counts", "--n", "1000", "--k", "1,2,5", "--d", "5", "--methods", "eqsort1,dualpivot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.starts_with("counting,")));
    // eqsort1 on a single distinct key: 2(n - 1) + 2 comparisons, no swaps.
    assert!(rows.contains(&"counting,eqsort1,1000,1,5,,,2000,0"), "{text}");
}

#[test]
fn methods_all_expands_to_eight() {
    let out = eqsort(&["counts", "--n", "50", "--k", "2", "--d", "1", "--methods", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let methods: Vec<&str> = data_rows(&text).iter().map(|r| r.split(',').nth(1).unwrap()).collect();
    assert_eq!(
        methods,
        ["sedgewick", "dijkstra3", "bentley_mcilroy", "dualpivot", "pdq_baseline", "eqsort1", "eqsort2", "eqsort3"]
    );
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["counts", "--d", "0", "--n", "10", "--k", "1"],
        &["counts", "--n", "10", "--k", "1", "--methods", "eqsort1"],
        &["counts", "--n", "10", "--k", "0"],
        &["bench", "--n", "10", "--k", "1", "--repeats", "0"],
        &["counts", "--methods", "bubble"],
        &["counts", "--domain", "complex"],
        &["gen", "--n", "5"],
        &["gen", "--n", "5", "--k", "2", "--pattern", "sorted"],
        &["plot"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = eqsort(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_with_no_cases_passes() {
    let out = eqsort(&["verify", "--max-len", "0", "--random-cases", "0", "--pattern-sizes", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("exhaustive=0 random=0"));
}

#[test]
fn verify_small_run_passes() {
    let out = eqsort(&["verify", "--max-len", "5", "--random-cases", "100", "--pattern-sizes", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| l.contains(" ok ")));
}

#[test]
fn gen_is_newline_delimited_and_deterministic() {
    let a = eqsort(&["gen", "--n", "8", "--k", "10", "--seed", "2024", "--domain", "int"]);
    let b = eqsort(&["gen", "--n", "8", "--k", "10", "--seed", "2024", "--domain", "int"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), "1\n9\n6\n9\n6\n4\n0\n3\n");

    let organ = eqsort(&["gen", "--n", "5", "--pattern", "organ_pipe"]);
    assert_eq!(stdout(&organ), "0\n1\n2\n1\n0\n");

    let strings = eqsort(&["gen", "--n", "3", "--k", "1", "--domain", "string"]);
    assert_eq!(stdout(&strings), "00000000\n00000000\n00000000\n");
}

#[test]
fn out_flag_writes_file_and_counts_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = eqsort(&["counts", "--n", "300", "--k", "1,3,300", "--d", "4", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn unwritable_sink_fails() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("out.csv");
    let out = eqsort(&["counts", "--n", "10", "--k", "1", "--d", "1", "--out", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn plot_renders_csv_as_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let svg = dir.path().join("c.svg");
    let run = eqsort(&[
        "counts", "--n", "500", "--k", "1,2,5", "--d", "2", "--methods", "eqsort1,dualpivot", "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));

    let out = eqsort(&["plot", csv.to_str().unwrap(), "--out", svg.to_str().unwrap(), "--mode", "ratio"]);
    assert_eq!(out.status.code(), Some(0));
    let first = fs::read_to_string(&svg).unwrap();
    assert!(first.starts_with("<svg"));
    assert!(first.contains("com-eqs1/com-ydual"));
    assert!(first.contains("sw-ydual/sw-ydual"));

    let again = eqsort(&["plot", csv.to_str().unwrap(), "--mode", "ratio"]);
    assert_eq!(stdout(&again), first);
}

#[test]
fn plot_of_header_only_csv_has_axes_only() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("empty.csv");
    fs::write(&csv, "kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps\n").unwrap();
    let out = eqsort(&["plot", csv.to_str().unwrap(), "--mode", "time"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    assert!(svg.contains("<path"));
    assert!(!svg.contains("<polyline"));
}

#[test]
fn plot_reports_malformed_row() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bad.csv");
    fs::write(
        &csv,
        "kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps\n\
         counting,eqsort1,10,1,1,,,18,0\n\
         counting,eqsort9,10,1,1,,,18,0\n",
    )
    .unwrap();
    let out = eqsort(&["plot", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("row 3"), "{err}");
}
