//! Seeded Monte Carlo experiments, result persistence and comparison with exact averages.

mod compare;
mod config;
mod io;
mod record;
mod run;
mod stats;

pub use compare::{compare_mc_exact, ComparisonReport, ComparisonRow, GAP_TOL, Z_TOL};
pub use config::{load_configs, parse_configs, AlphaValue, Depths, Estimator, ExperimentConfig, ScenarioKind};
pub use io::{read_records, write_records, Format};
pub use record::{ResultRecord, CSV_HEADER};
pub use run::{random_clifford_t, run_all, run_experiment, run_samples, SamplePoint, DEFAULT_GATE_SPAN};
pub use stats::{z_score, Moments};
