use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which subsystems receive independent Haar unitaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scenario {
    /// `U_A` on a bipartite normal form.
    BipartiteHaar,
    /// `U_A ⊗ U_B` on a bipartite normal form.
    BipartiteProduct,
    /// `U_A ⊗ U_B` on a tripartite normal form, `C` untouched.
    TripartitePair,
    /// `U_A ⊗ U_B ⊗ U_C`.
    TripartiteTriple,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::BipartiteHaar,
        Scenario::BipartiteProduct,
        Scenario::TripartitePair,
        Scenario::TripartiteTriple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::BipartiteHaar => "bipartite_haar",
            Scenario::BipartiteProduct => "bipartite_product",
            Scenario::TripartitePair => "tripartite_pair",
            Scenario::TripartiteTriple => "tripartite_triple",
        }
    }

    pub fn is_tripartite(self) -> bool {
        matches!(self, Scenario::TripartitePair | Scenario::TripartiteTriple)
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "scenario",
                reason: format!("unknown scenario {s:?}"),
            })
    }
}

/// Subsystem sizes in qubits and entanglement in ebits; every dimension `D_X` is `2^{n_X}`.
///
/// Bipartite scenarios use `n_a`, `n_b`, `e`. Tripartite ones use `n_a`, `n_b`, `n_c`
/// together with the GHZ count `g` and the pairwise Bell counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioDims {
    pub scenario: Scenario,
    pub n_a: u32,
    pub n_b: u32,
    #[serde(default)]
    pub n_c: u32,
    #[serde(default)]
    pub e: u32,
    #[serde(default)]
    pub g: u32,
    #[serde(default)]
    pub b_ab: u32,
    #[serde(default)]
    pub b_ac: u32,
    #[serde(default)]
    pub b_bc: u32,
}

pub(crate) fn pow2(k: u32) -> BigInt {
    BigInt::from(1) << k
}

impl ScenarioDims {
    pub fn bipartite(scenario: Scenario, n_a: u32, e: u32, n_b: u32) -> Self {
        ScenarioDims {
            scenario,
            n_a,
            n_b,
            n_c: 0,
            e,
            g: 0,
            b_ab: 0,
            b_ac: 0,
            b_bc: 0,
        }
    }

    /// Sizes follow from the normal form: `|A| = f_A + b_AB + b_AC + g`, and so on.
    #[allow(clippy::too_many_arguments)]
    pub fn tripartite(scenario: Scenario, g: u32, b_ab: u32, b_ac: u32, b_bc: u32, f_a: u32, f_b: u32, f_c: u32) -> Self {
        ScenarioDims {
            scenario,
            n_a: f_a + b_ab + b_ac + g,
            n_b: f_b + b_ab + b_bc + g,
            n_c: f_c + b_ac + b_bc + g,
            e: 0,
            g,
            b_ab,
            b_ac,
            b_bc,
        }
    }

    pub fn total_qubits(&self) -> u32 {
        self.n_a + self.n_b + if self.scenario.is_tripartite() { self.n_c } else { 0 }
    }

    pub fn d_a(&self) -> BigInt {
        pow2(self.n_a)
    }

    pub fn d_b(&self) -> BigInt {
        pow2(self.n_b)
    }

    pub fn d_c(&self) -> BigInt {
        pow2(self.n_c)
    }

    pub fn d_e(&self) -> BigInt {
        pow2(self.e)
    }

    pub fn d_g(&self) -> BigInt {
        pow2(self.g)
    }

    pub fn d_ab(&self) -> BigInt {
        pow2(self.b_ab)
    }

    pub fn d_ac(&self) -> BigInt {
        pow2(self.b_ac)
    }

    pub fn d_bc(&self) -> BigInt {
        pow2(self.b_bc)
    }

    /// Entanglement must fit inside the subsystems that share it.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.scenario.is_tripartite() {
            let need_a = self.b_ab + self.b_ac + self.g;
            let need_b = self.b_ab + self.b_bc + self.g;
            let need_c = self.b_ac + self.b_bc + self.g;
            if self.n_a < need_a || self.n_b < need_b || self.n_c < need_c {
                return bad(format!("shared entanglement does not fit in subsystems {self:?}"));
            }
        } else if self.e > self.n_a || self.e > self.n_b {
            return bad(format!("E = {} exceeds a subsystem size ({} | {})", self.e, self.n_a, self.n_b));
        }
        Ok(())
    }
}
