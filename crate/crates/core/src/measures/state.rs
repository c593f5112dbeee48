//! Stabilizer entropies of pure states from their Pauli spectrum.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::spectrum::{pauli_spectrum, PauliSpectrum};
use crate::dense::DenseState;
use crate::error::{Error, Result};

/// Squared coefficients below this count as zero for `alpha = 0`.
pub const ZERO_THRESHOLD: f64 = 1e-10;

/// `|tr(P rho)|` within this of one counts as a stabilizer for `alpha = inf`.
pub const UNIT_TOL: f64 = 1e-9;

/// Rényi index: a non-negative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Alpha {
    Finite(u32),
    Infinity,
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::Finite(2)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Finite(a) => write!(f, "{a}"),
            Alpha::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Alpha::Infinity),
            other => other.parse::<u32>().map(Alpha::Finite).map_err(|e| Error::Parse {
                what: "Rényi index",
                reason: format!("{s:?}: {e}"),
            }),
        }
    }
}

/// Rényi entropy (bits) of the distribution `q_i = w_i / total`, where the `w_i` are
/// non-negative weights summing to `total`.
pub(crate) fn renyi_of_weights(weights: &[f64], total: f64, alpha: Alpha) -> f64 {
    match alpha {
        Alpha::Finite(0) => {
            let support = weights.iter().filter(|&&w| w > ZERO_THRESHOLD).count();
            (support as f64).log2()
        }
        Alpha::Finite(1) => weights
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|&w| {
                let q = w / total;
                -q * q.log2()
            })
            .sum(),
        Alpha::Finite(a) => {
            let s: f64 = weights.iter().map(|&w| (w / total).powi(a as i32)).sum();
            s.log2() / (1.0 - a as f64)
        }
        Alpha::Infinity => {
            let max = weights.iter().copied().fold(0.0, f64::max);
            -(max / total).log2()
        }
    }
}

/// `Y_alpha = 1 - 2^{-n} sum_P tr(P rho)^{2 alpha}`; `alpha = inf` counts `|tr(P rho)| = 1`.
pub fn y_lin_alpha(spectrum: &PauliSpectrum, alpha: Alpha) -> Result<f64> {
    let scale = ((1u64 << spectrum.num_qubits()) as f64).recip();
    let kept = match alpha {
        Alpha::Finite(0) => {
            return Err(Error::InvalidArgument("Rényi index must be at least 1".into()));
        }
        Alpha::Finite(a) => spectrum.values().iter().map(|v| v.powi(2 * a as i32)).sum::<f64>(),
        Alpha::Infinity => spectrum.values().iter().filter(|v| v.abs() > 1.0 - UNIT_TOL).count() as f64,
    };
    Ok((1.0 - kept * scale).clamp(0.0, 1.0))
}

/// `Y_2`.
pub fn y_lin(spectrum: &PauliSpectrum) -> f64 {
    y_lin_alpha(spectrum, Alpha::Finite(2)).expect("alpha = 2 is valid")
}

/// `M_alpha = log2(1 - Y_alpha) / (1 - alpha)` in bits, with the Shannon limit at
/// `alpha = 1` and the support size at `alpha = 0`. `Y_alpha = 1` gives `+inf`.
pub fn m_alpha(spectrum: &PauliSpectrum, alpha: Alpha) -> f64 {
    let n = spectrum.num_qubits() as f64;
    let weights: Vec<f64> = spectrum.values().iter().map(|v| v * v).collect();
    let total = (1u64 << spectrum.num_qubits()) as f64;
    let m = renyi_of_weights(&weights, total, alpha) - n;
    if m.is_nan() {
        f64::INFINITY
    } else {
        m.max(0.0)
    }
}

/// Per-state summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MagicReport {
    pub y_lin: f64,
    /// Bits; infinite when `y_lin == 1`.
    pub m2: f64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub y_alpha: BTreeMap<String, f64>,
    pub y_inf: f64,
}

pub fn magic_report(spectrum: &PauliSpectrum, extra: &[Alpha]) -> Result<MagicReport> {
    let y = y_lin(spectrum);
    let mut y_alpha = BTreeMap::new();
    for &a in extra {
        y_alpha.insert(a.to_string(), y_lin_alpha(spectrum, a)?);
    }
    Ok(MagicReport {
        y_lin: y,
        m2: m_from_y(y),
        y_alpha,
        y_inf: y_lin_alpha(spectrum, Alpha::Infinity)?,
    })
}

/// Spectrum and report in one step.
pub fn state_magic(state: &DenseState, extra: &[Alpha]) -> Result<MagicReport> {
    magic_report(&pauli_spectrum(state)?, extra)
}

/// `M_2 = -log2(1 - Y)`.
pub fn m_from_y(y: f64) -> f64 {
    if y >= 1.0 {
        f64::INFINITY
    } else {
        (-(1.0 - y).log2()).max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::dense::choi_state;
    use crate::dense::named_gate;
    use crate::stabilizer::{random_clifford, StabilizerGroup};

    fn plus_t() -> DenseState {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        DenseState::new(1, vec![Complex64::new(h, 0.0), Complex64::from_polar(h, std::f64::consts::FRAC_PI_4)]).unwrap()
    }

    #[test]
    fn t_state_values() {
        let s = pauli_spectrum(&plus_t()).unwrap();
        assert!((y_lin(&s) - 0.25).abs() < 1e-14);
        assert!((m_alpha(&s, Alpha::Finite(2)) - (4.0f64 / 3.0).log2()).abs() < 1e-12);
        let r = magic_report(&s, &[Alpha::Finite(3)]).unwrap();
        assert!((r.m2 - (4.0f64 / 3.0).log2()).abs() < 1e-12);
        // 1 - (1 + 2 * 1/8) / 2
        assert!((r.y_alpha["3"] - 0.375).abs() < 1e-14);
        assert!((r.y_inf - 0.5).abs() < 1e-14);
    }

    #[test]
    fn choi_of_t_matches_unitary_value() {
        let choi = choi_state(&named_gate("T").unwrap()).unwrap();
        let s = pauli_spectrum(&choi).unwrap();
        assert!((m_alpha(&s, Alpha::Finite(2)) - (4.0f64 / 3.0).log2()).abs() < 1e-12);
        assert!((m_alpha(&s, Alpha::Finite(0)) - 1.5f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn stabilizer_states_are_free() {
        let base = StabilizerGroup::from_text("ZIII\nIZII\nIIZI\nIIIZ").unwrap();
        for seed in 0..20 {
            let g = random_clifford(4, seed).conjugate_group(&base).unwrap();
            let s = pauli_spectrum(&g.to_state().unwrap()).unwrap();
            for a in [Alpha::Finite(1), Alpha::Finite(2), Alpha::Finite(5), Alpha::Infinity] {
                assert!(y_lin_alpha(&s, a).unwrap().abs() < 1e-9);
            }
            for a in [Alpha::Finite(0), Alpha::Finite(1), Alpha::Finite(2), Alpha::Infinity] {
                assert!(m_alpha(&s, a).abs() < 1e-9, "{a}");
            }
        }
    }

    #[test]
    fn alpha_zero_rejected_for_y() {
        let s = pauli_spectrum(&plus_t()).unwrap();
        assert!(y_lin_alpha(&s, Alpha::Finite(0)).is_err());
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!("inf".parse::<Alpha>().unwrap(), Alpha::Infinity);
        assert_eq!("3".parse::<Alpha>().unwrap(), Alpha::Finite(3));
        assert!("-1".parse::<Alpha>().is_err());
        assert!("1.5".parse::<Alpha>().is_err());
    }

    #[test]
    fn m2_is_minus_log_of_one_minus_y() {
        let s = pauli_spectrum(&plus_t().tensor(&plus_t()).unwrap()).unwrap();
        let y = y_lin(&s);
        assert!((m_alpha(&s, Alpha::Finite(2)) - m_from_y(y)).abs() < 1e-12);
        assert!((m_from_y(y) - 2.0 * (4.0f64 / 3.0).log2()).abs() < 1e-12);
        assert_eq!(m_from_y(1.0), f64::INFINITY);
    }
}
