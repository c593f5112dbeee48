//! One aggregated result row.

use serde::{Deserialize, Serialize};

use super::config::{Estimator, ScenarioKind};
use crate::dense::LambdaLaw;

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 31] = [
    "scenario",
    "nA",
    "nB",
    "nC",
    "E",
    "g",
    "bAB",
    "bAC",
    "bBC",
    "fA",
    "fB",
    "fC",
    "depth",
    "gate_span",
    "theta",
    "lambda_law",
    "k",
    "samples",
    "master_seed",
    "estimator",
    "prescramble",
    "mean_y_lin",
    "stderr_y_lin",
    "mean_m2",
    "stderr_m2",
    "init_m2",
    "delta_m2_mean",
    "delta_m2_stderr",
    "exact_y",
    "leading_y",
    "z_score",
];

/// Config echo plus statistics. Field order is [`CSV_HEADER`]; absent values are empty cells.
///
/// For `unitary_sre` the `*_m2` columns carry `H_alpha` of the sampled unitaries and for
/// `tcount_report` they carry `H_2`; `mean_y_lin` is empty for both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub scenario: ScenarioKind,
    #[serde(rename = "nA")]
    pub n_a: Option<u32>,
    #[serde(rename = "nB")]
    pub n_b: Option<u32>,
    #[serde(rename = "nC")]
    pub n_c: Option<u32>,
    #[serde(rename = "E")]
    pub e: Option<u32>,
    pub g: Option<u32>,
    #[serde(rename = "bAB")]
    pub b_ab: Option<u32>,
    #[serde(rename = "bAC")]
    pub b_ac: Option<u32>,
    #[serde(rename = "bBC")]
    pub b_bc: Option<u32>,
    #[serde(rename = "fA")]
    pub f_a: Option<u32>,
    #[serde(rename = "fB")]
    pub f_b: Option<u32>,
    #[serde(rename = "fC")]
    pub f_c: Option<u32>,
    pub depth: Option<u32>,
    pub gate_span: Option<u32>,
    pub theta: Option<f64>,
    pub lambda_law: Option<LambdaLaw>,
    pub k: Option<u32>,
    pub samples: u32,
    pub master_seed: u64,
    pub estimator: Estimator,
    pub prescramble: bool,
    pub mean_y_lin: Option<f64>,
    pub stderr_y_lin: Option<f64>,
    pub mean_m2: Option<f64>,
    pub stderr_m2: Option<f64>,
    pub init_m2: Option<f64>,
    pub delta_m2_mean: Option<f64>,
    pub delta_m2_stderr: Option<f64>,
    pub exact_y: Option<f64>,
    pub leading_y: Option<f64>,
    pub z_score: Option<f64>,
}

impl ResultRecord {
    /// An empty row for `scenario`, used as a base for struct updates.
    pub fn blank(scenario: ScenarioKind, samples: u32, master_seed: u64) -> Self {
        ResultRecord {
            scenario,
            n_a: None,
            n_b: None,
            n_c: None,
            e: None,
            g: None,
            b_ab: None,
            b_ac: None,
            b_bc: None,
            f_a: None,
            f_b: None,
            f_c: None,
            depth: None,
            gate_span: None,
            theta: None,
            lambda_law: None,
            k: None,
            samples,
            master_seed,
            estimator: Estimator::Brute,
            prescramble: false,
            mean_y_lin: None,
            stderr_y_lin: None,
            mean_m2: None,
            stderr_m2: None,
            init_m2: None,
            delta_m2_mean: None,
            delta_m2_stderr: None,
            exact_y: None,
            leading_y: None,
            z_score: None,
        }
    }
}
