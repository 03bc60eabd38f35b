//! Standalone SVG line charts of benchmark CSVs.
//!
//! The x axis is categorical: each distinct k gets an equally spaced tick
//! labelled with its value. One polyline per series, plus a legend. Output
//! bytes depend only on the input rows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::bench::{compute_ratios, BenchRow, RowKind};
use crate::MethodId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotMode {
    /// Mean seconds per array from timing rows.
    Time,
    /// Time, comparison and swap ratios against a baseline method.
    Ratio,
    /// Mean comparisons and swaps from counting rows.
    Counts,
}

impl FromStr for PlotMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "time" => Ok(PlotMode::Time),
            "ratio" => Ok(PlotMode::Ratio),
            "counts" => Ok(PlotMode::Counts),
            other => Err(format!("unknown plot mode `{other}` (expected time, ratio or counts)")),
        }
    }
}

const WIDTH: f64 = 820.0;
const HEIGHT: f64 = 520.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 220.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 90.0;

const COLORS: [&str; 9] = [
    "#555555", "#8c564b", "#2ca02c", "#000000", "#d62728", "#1f77b4", "#17becf", "#9467bd", "#7f7f7f",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub method: MethodId,
    pub dashed: bool,
    /// `(k, value)` pairs in ascending k.
    pub points: Vec<(u64, f64)>,
}

/// (method, n, quantity order, label, dashed)
type SeriesKey = (MethodId, usize, u8, String, bool);

/// Builds the series a chart of `mode` would draw.
pub fn build_series(rows: &[BenchRow], mode: PlotMode, baseline: MethodId) -> Vec<Series> {
    let multi_n = rows.iter().map(|r| r.n).collect::<BTreeSet<_>>().len() > 1;
    let mut acc: BTreeMap<SeriesKey, Vec<(u64, f64)>> = BTreeMap::new();
    let mut push = |method: MethodId, n: usize, order: u8, label: String, dashed: bool, k: u64, y: Option<f64>| {
        if let Some(y) = y {
            let label = if multi_n { format!("{label} (n={n})") } else { label };
            acc.entry((method, n, order, label, dashed)).or_default().push((k, y));
        }
    };

    match mode {
        PlotMode::Time => {
            for r in rows.iter().filter(|r| r.kind == RowKind::Timing) {
                let label = format!("T-{}", r.method.short_label());
                push(r.method, r.n, 0, label, false, r.k, r.mean_time_s);
            }
        }
        PlotMode::Counts => {
            for r in rows.iter().filter(|r| r.kind == RowKind::Counting) {
                let s = r.method.short_label();
                push(r.method, r.n, 1, format!("com-{s}"), false, r.k, r.mean_comparisons);
                push(r.method, r.n, 2, format!("sw-{s}"), true, r.k, r.mean_swaps);
            }
        }
        PlotMode::Ratio => {
            let b = baseline.short_label();
            for r in compute_ratios(rows, baseline).into_iter().flatten() {
                let s = r.method.short_label();
                push(r.method, r.n, 0, format!("T-{s}/T-{b}"), false, r.k, r.time_ratio);
                push(r.method, r.n, 1, format!("com-{s}/com-{b}"), false, r.k, r.comparison_ratio);
                push(r.method, r.n, 2, format!("sw-{s}/sw-{b}"), true, r.k, r.swap_ratio);
            }
        }
    }

    acc.into_iter()
        .map(|((method, _, _, label, dashed), mut points)| {
            points.sort_by_key(|p| p.0);
            Series {
                label,
                method,
                dashed,
                points,
            }
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tick_label(y: f64) -> String {
    let s = crate::bench::format_sig6((y * 1e6).round() / 1e6);
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Renders rows as an SVG document.
pub fn render_svg(rows: &[BenchRow], mode: PlotMode, baseline: MethodId) -> String {
    let series = build_series(rows, mode, baseline);
    let ks: Vec<u64> = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let values = series.iter().flat_map(|s| s.points.iter().map(|p| p.1));
    let (mut lo, mut hi) = match mode {
        PlotMode::Ratio => values.fold((1.0f64, 1.0f64), |(a, b), y| (a.min(y), b.max(y))),
        _ => (0.0, values.fold(0.0f64, f64::max)),
    };
    if hi <= lo {
        hi = lo + 1.0;
    }
    let pad = (hi - lo) * 0.08;
    hi += pad;
    if mode == PlotMode::Ratio {
        lo = (lo - pad).max(0.0);
    }

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x_of = |i: usize| -> f64 {
        if ks.len() <= 1 {
            LEFT + plot_w / 2.0
        } else {
            LEFT + plot_w * i as f64 / (ks.len() - 1) as f64
        }
    };
    let y_of = |y: f64| TOP + plot_h * (1.0 - (y - lo) / (hi - lo));

    let (title, y_label) = match mode {
        PlotMode::Time => ("Runtime per array".to_owned(), "Time in seconds"),
        PlotMode::Counts => ("Comparisons and swaps per array".to_owned(), "Count"),
        PlotMode::Ratio => (format!("Ratio to {baseline}"), "Ratio"),
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(&title)
    );

    // Axes.
    let _ = writeln!(
        svg,
        r#"<path d="M{LEFT:.1},{TOP:.1} L{LEFT:.1},{:.1} L{:.1},{:.1}" fill="none" stroke="black"/>"#,
        TOP + plot_h,
        LEFT + plot_w,
        TOP + plot_h
    );
    for t in 0..=5 {
        let y = lo + (hi - lo) * f64::from(t) / 5.0;
        let py = y_of(y);
        let _ = writeln!(
            svg,
            r##"<line x1="{:.1}" y1="{py:.1}" x2="{:.1}" y2="{py:.1}" stroke="#dddddd"/>"##,
            LEFT,
            LEFT + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            py + 4.0,
            tick_label(y)
        );
    }
    for (i, k) in ks.iter().enumerate() {
        let px = x_of(i);
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.1}" y1="{:.1}" x2="{px:.1}" y2="{:.1}" stroke="black"/>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0
        );
        let ty = TOP + plot_h + 16.0;
        let _ = writeln!(
            svg,
            r#"<text x="{px:.1}" y="{ty:.1}" text-anchor="end" transform="rotate(-60 {px:.1} {ty:.1})">{k}</text>"#
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">k (distinct elements)</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.1}" text-anchor="middle" transform="rotate(-90 18 {:.1})">{y_label}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    // Series and legend.
    for (idx, s) in series.iter().enumerate() {
        let color = COLORS[s.method.code() as usize % COLORS.len()];
        let dash = if s.dashed { r#" stroke-dasharray="6,4""# } else { "" };
        let points: Vec<String> = s
            .points
            .iter()
            .map(|&(k, y)| {
                let i = ks.binary_search(&k).expect("k collected above");
                format!("{:.1},{:.1}", x_of(i), y_of(y))
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.8"{dash}/>"#,
            points.join(" ")
        );
        for p in &points {
            let (cx, cy) = p.split_once(',').expect("formatted pair");
            let _ = writeln!(svg, r#"<circle cx="{cx}" cy="{cy}" r="2.5" fill="{color}"/>"#);
        }

        let ly = TOP + 10.0 + 18.0 * idx as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="1.8"{dash}/>"#,
            lx + 24.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 30.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    svg.push_str("</svg>\n");
    svg
}
