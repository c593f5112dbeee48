//! Experiment configuration as read from JSON.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense::LambdaLaw;
use crate::error::{Error, Result};
use crate::measures::Alpha;
use crate::theory::Scenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    BipartiteHaar,
    BipartiteProduct,
    TripartitePair,
    TripartiteTriple,
    Brickwork,
    NonstabBell,
    NonstabSpectrum,
    UnitarySre,
    TcountReport,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 9] = [
        ScenarioKind::BipartiteHaar,
        ScenarioKind::BipartiteProduct,
        ScenarioKind::TripartitePair,
        ScenarioKind::TripartiteTriple,
        ScenarioKind::Brickwork,
        ScenarioKind::NonstabBell,
        ScenarioKind::NonstabSpectrum,
        ScenarioKind::UnitarySre,
        ScenarioKind::TcountReport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::BipartiteHaar => "bipartite_haar",
            ScenarioKind::BipartiteProduct => "bipartite_product",
            ScenarioKind::TripartitePair => "tripartite_pair",
            ScenarioKind::TripartiteTriple => "tripartite_triple",
            ScenarioKind::Brickwork => "brickwork",
            ScenarioKind::NonstabBell => "nonstab_bell",
            ScenarioKind::NonstabSpectrum => "nonstab_spectrum",
            ScenarioKind::UnitarySre => "unitary_sre",
            ScenarioKind::TcountReport => "tcount_report",
        }
    }

    /// The closed-form scenario this one is averaged against, if any.
    pub fn theory(self) -> Option<Scenario> {
        match self {
            ScenarioKind::BipartiteHaar | ScenarioKind::Brickwork | ScenarioKind::NonstabBell => {
                Some(Scenario::BipartiteHaar)
            }
            ScenarioKind::BipartiteProduct => Some(Scenario::BipartiteProduct),
            ScenarioKind::TripartitePair => Some(Scenario::TripartitePair),
            ScenarioKind::TripartiteTriple => Some(Scenario::TripartiteTriple),
            _ => None,
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown scenario {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    #[default]
    Brute,
    CosetReduced,
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Estimator::Brute => "brute",
            Estimator::CosetReduced => "coset_reduced",
        })
    }
}

/// A single depth or a sweep of depths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Depths {
    One(u32),
    Many(Vec<u32>),
}

impl Depths {
    pub fn to_vec(&self) -> Vec<u32> {
        match self {
            Depths::One(d) => vec![*d],
            Depths::Many(v) => v.clone(),
        }
    }
}

/// One experiment. Field names match the CSV columns.
///
/// Sizes can be given either as subsystem sizes (`nA`, `nB`, `nC`) or as filler counts
/// (`fA`, `fB`, `fC`); the other is derived from the shared entanglement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub scenario: ScenarioKind,
    #[serde(rename = "nA", default, skip_serializing_if = "Option::is_none")]
    pub n_a: Option<u32>,
    #[serde(rename = "nB", default, skip_serializing_if = "Option::is_none")]
    pub n_b: Option<u32>,
    #[serde(rename = "nC", default, skip_serializing_if = "Option::is_none")]
    pub n_c: Option<u32>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(rename = "bAB", default, skip_serializing_if = "Option::is_none")]
    pub b_ab: Option<u32>,
    #[serde(rename = "bAC", default, skip_serializing_if = "Option::is_none")]
    pub b_ac: Option<u32>,
    #[serde(rename = "bBC", default, skip_serializing_if = "Option::is_none")]
    pub b_bc: Option<u32>,
    #[serde(rename = "fA", default, skip_serializing_if = "Option::is_none")]
    pub f_a: Option<u32>,
    #[serde(rename = "fB", default, skip_serializing_if = "Option::is_none")]
    pub f_b: Option<u32>,
    #[serde(rename = "fC", default, skip_serializing_if = "Option::is_none")]
    pub f_c: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<Depths>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gate_span: Option<u32>,
    /// Radians.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_law: Option<LambdaLaw>,
    /// Pair count for non-stabilizer states, T count for `tcount_report`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub samples: u32,
    pub master_seed: u64,
    #[serde(default)]
    pub estimator: Estimator,
    #[serde(default)]
    pub prescramble: bool,
    /// Fixed gate for `unitary_sre` (otherwise Haar on `nA` qubits).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gate: Option<String>,
    /// Rényi index for `unitary_sre`, e.g. `2`, `0` or `"inf"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<AlphaValue>,
    /// |0> fillers instead of |+>.
    #[serde(default)]
    pub zero_fillers: bool,
}

/// Accepts `2` or `"inf"` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaValue {
    Int(u32),
    Text(String),
}

impl AlphaValue {
    pub fn resolve(&self) -> Result<Alpha> {
        match self {
            AlphaValue::Int(a) => Ok(Alpha::Finite(*a)),
            AlphaValue::Text(t) => t.parse().map_err(|e: Error| Error::Config(e.to_string())),
        }
    }
}

impl ExperimentConfig {
    /// A config with only the required fields set.
    pub fn new(scenario: ScenarioKind, samples: u32, master_seed: u64) -> Self {
        ExperimentConfig {
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
            gate: None,
            alpha: None,
            zero_fillers: false,
        }
    }

    /// Bipartite scenario with subsystem sizes and entanglement.
    pub fn bipartite(scenario: ScenarioKind, n_a: u32, n_b: u32, e: u32, samples: u32, master_seed: u64) -> Self {
        ExperimentConfig {
            n_a: Some(n_a),
            n_b: Some(n_b),
            e: Some(e),
            ..ExperimentConfig::new(scenario, samples, master_seed)
        }
    }
}

/// A JSON file holding one config object or an array of them.
pub fn load_configs(path: &Path) -> Result<Vec<ExperimentConfig>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_configs(&text)
}

pub fn parse_configs(text: &str) -> Result<Vec<ExperimentConfig>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        Many(Vec<ExperimentConfig>),
        One(Box<ExperimentConfig>),
    }
    // Parse into a value first so errors name the offending field.
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid JSON: {e}")))?;
    let configs = match value {
        serde_json::Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| serde_json::from_value(v).map_err(|e| Error::Config(format!("config #{i}: {e}"))))
            .collect::<Result<Vec<_>>>()?,
        other => match serde_json::from_value::<OneOrMany>(other.clone()) {
            Ok(OneOrMany::One(c)) => vec![*c],
            Ok(OneOrMany::Many(v)) => v,
            Err(_) => vec![serde_json::from_value(other).map_err(|e| Error::Config(e.to_string()))?],
        },
    };
    if configs.is_empty() {
        return Err(Error::Config("no experiments in config".into()));
    }
    Ok(configs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn object_and_array() {
        let one = r#"{"scenario":"bipartite_haar","nA":3,"nB":3,"E":1,"samples":10,"master_seed":7}"#;
        let cfgs = parse_configs(one).unwrap();
        assert_eq!(cfgs.len(), 1);
        assert_eq!(cfgs[0], ExperimentConfig::bipartite(ScenarioKind::BipartiteHaar, 3, 3, 1, 10, 7));
        let many = format!("[{one}, {one}]");
        assert_eq!(parse_configs(&many).unwrap().len(), 2);
    }

    #[test]
    fn depth_forms_and_alpha() {
        let text = r#"{"scenario":"brickwork","nA":4,"nB":3,"E":1,"depth":[0,2,4],"gate_span":2,
                       "samples":5,"master_seed":1,"prescramble":true,"estimator":"brute"}"#;
        let c = &parse_configs(text).unwrap()[0];
        assert_eq!(c.depth.as_ref().unwrap().to_vec(), vec![0, 2, 4]);
        let text = r#"{"scenario":"unitary_sre","gate":"T","alpha":"inf","samples":1,"master_seed":1}"#;
        let c = &parse_configs(text).unwrap()[0];
        assert_eq!(c.alpha.as_ref().unwrap().resolve().unwrap(), Alpha::Infinity);
        let text = r#"{"scenario":"brickwork","depth":3,"samples":1,"master_seed":1}"#;
        assert_eq!(parse_configs(text).unwrap()[0].depth, Some(Depths::One(3)));
    }

    #[test]
    fn errors_are_config_errors() {
        for bad in [
            "not json",
            "[]",
            r#"{"scenario":"nope","samples":1,"master_seed":1}"#,
            r#"{"scenario":"bipartite_haar","samples":1}"#,
            r#"{"scenario":"bipartite_haar","samples":1,"master_seed":1,"typo":3}"#,
        ] {
            assert!(matches!(parse_configs(bad), Err(Error::Config(_))), "{bad}");
        }
    }

    #[test]
    fn round_trips_through_json() {
        let mut c = ExperimentConfig::bipartite(ScenarioKind::NonstabBell, 3, 2, 0, 10, 3);
        c.theta = Some(std::f64::consts::FRAC_PI_8);
        c.k = Some(2);
        c.lambda_law = Some(LambdaLaw::Cubic);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(parse_configs(&text).unwrap()[0], c);
    }
}
