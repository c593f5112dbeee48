//! Monte Carlo means against exact references.

use serde::{Deserialize, Serialize};

use super::record::ResultRecord;
use super::stats::z_score;
use crate::error::{Error, Result};

/// Largest accepted `|z|`.
pub const Z_TOL: f64 = 4.0;
/// Largest accepted `|mean - exact|`.
pub const GAP_TOL: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub index: usize,
    pub label: String,
    pub mean: f64,
    pub stderr: f64,
    pub exact: f64,
    /// `None` when the standard error is zero.
    pub z: Option<f64>,
    pub gap: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
}

fn label(r: &ResultRecord) -> String {
    let mut parts = vec![r.scenario.to_string()];
    let mut push = |name: &str, v: Option<u32>| {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    };
    push("nA", r.n_a);
    push("nB", r.n_b);
    push("nC", r.n_c);
    push("E", r.e);
    push("g", r.g);
    push("bAB", r.b_ab);
    push("bAC", r.b_ac);
    push("bBC", r.b_bc);
    push("k", r.k);
    push("depth", r.depth);
    parts.join(" ")
}

/// Passes a row when `|z| <= 4` and `|mean - exact| <= 0.01`. A zero standard error
/// leaves `z` undefined and the gap alone decides.
pub fn compare_mc_exact(records: &[ResultRecord]) -> Result<ComparisonReport> {
    let mut rows = Vec::with_capacity(records.len());
    for (index, r) in records.iter().enumerate() {
        let missing = |what: &str| Error::InvalidArgument(format!("record {index} ({}) has no {what}", label(r)));
        let exact = r.exact_y.ok_or_else(|| missing("exact_y"))?;
        let mean = r.mean_y_lin.ok_or_else(|| missing("mean_y_lin"))?;
        let stderr = r.stderr_y_lin.unwrap_or(0.0);
        let z = z_score(mean, stderr, exact);
        let gap = (mean - exact).abs();
        let pass = gap <= GAP_TOL && z.is_none_or(|z| z.abs() <= Z_TOL);
        rows.push(ComparisonRow {
            index,
            label: label(r),
            mean,
            stderr,
            exact,
            z,
            gap,
            pass,
        });
    }
    Ok(ComparisonReport { rows })
}
