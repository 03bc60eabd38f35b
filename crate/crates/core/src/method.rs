use std::fmt;
use std::str::FromStr;

use crate::context::SortContext;
use crate::sorts;

/// Names one of the sort implementations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodId {
    Sedgewick,
    Dijkstra3,
    BentleyMcIlroy,
    DualPivot,
    PdqBaseline,
    Eqsort1,
    Eqsort2,
    Eqsort3,
    /// The standard library's unstable sort; used as the correctness oracle.
    Reference,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method `{0}`")]
pub struct ParseMethodError(pub String);

impl MethodId {
    pub const ALL: [MethodId; 9] = [
        MethodId::Sedgewick,
        MethodId::Dijkstra3,
        MethodId::BentleyMcIlroy,
        MethodId::DualPivot,
        MethodId::PdqBaseline,
        MethodId::Eqsort1,
        MethodId::Eqsort2,
        MethodId::Eqsort3,
        MethodId::Reference,
    ];

    /// The eight quicksorts under study (everything but the reference).
    pub const STUDIED: [MethodId; 8] = [
        MethodId::Sedgewick,
        MethodId::Dijkstra3,
        MethodId::BentleyMcIlroy,
        MethodId::DualPivot,
        MethodId::PdqBaseline,
        MethodId::Eqsort1,
        MethodId::Eqsort2,
        MethodId::Eqsort3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::Sedgewick => "sedgewick",
            MethodId::Dijkstra3 => "dijkstra3",
            MethodId::BentleyMcIlroy => "bentley_mcilroy",
            MethodId::DualPivot => "dualpivot",
            MethodId::PdqBaseline => "pdq_baseline",
            MethodId::Eqsort1 => "eqsort1",
            MethodId::Eqsort2 => "eqsort2",
            MethodId::Eqsort3 => "eqsort3",
            MethodId::Reference => "reference",
        }
    }

    /// Short label used in chart legends (`T-eqs1`, `com-ydual`, ...).
    pub fn short_label(self) -> &'static str {
        match self {
            MethodId::Sedgewick => "sedg",
            MethodId::Dijkstra3 => "dijk",
            MethodId::BentleyMcIlroy => "bm",
            MethodId::DualPivot => "ydual",
            MethodId::PdqBaseline => "pdqs",
            MethodId::Eqsort1 => "eqs1",
            MethodId::Eqsort2 => "eqs2",
            MethodId::Eqsort3 => "eqs3",
            MethodId::Reference => "ref",
        }
    }

    /// Stable numeric code, shared with the C ABI.
    pub fn code(self) -> u32 {
        self as u32
    }

    pub fn from_code(code: u32) -> Option<MethodId> {
        MethodId::ALL.get(code as usize).copied()
    }

    /// Parses a comma separated list; `all` expands to [`MethodId::STUDIED`].
    pub fn parse_list(s: &str) -> Result<Vec<MethodId>, ParseMethodError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(MethodId::STUDIED);
            } else {
                out.push(part.parse()?);
            }
        }
        let mut seen = Vec::with_capacity(out.len());
        out.retain(|m| {
            let fresh = !seen.contains(m);
            seen.push(*m);
            fresh
        });
        Ok(out)
    }

    /// Runs this method over `v` with the given context.
    pub fn sort_with<T, C: SortContext<T>>(self, v: &mut [T], ctx: &mut C) {
        match self {
            MethodId::Sedgewick => sorts::sedgewick_sort(v, ctx),
            MethodId::Dijkstra3 => sorts::dijkstra3_sort(v, ctx),
            MethodId::BentleyMcIlroy => sorts::bentley_mcilroy_sort(v, ctx),
            MethodId::DualPivot => sorts::dualpivot_sort(v, ctx),
            MethodId::PdqBaseline => sorts::pdq_baseline_sort(v, ctx),
            MethodId::Eqsort1 => sorts::eqsort1_sort(v, ctx),
            MethodId::Eqsort2 => sorts::eqsort2_sort(v, ctx),
            MethodId::Eqsort3 => sorts::eqsort3_sort(v, ctx),
            MethodId::Reference => sorts::reference_sort(v, ctx),
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = ParseMethodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| ParseMethodError(s.to_owned()))
    }
}
