use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rand::Rng;

use super::haar::haar_unitary_with;
use super::state::{offsets, validate_qubits};
use super::{DenseState, DenseUnitary};
use crate::error::{Error, Result};
use crate::limits;
use crate::rng::rng_from_seed;

/// Applies `u` to `qubits` of `state`; `qubits[t]` is local bit `t` of `u`.
pub fn apply_on_qubits(state: &DenseState, u: &DenseUnitary, qubits: &[usize]) -> Result<DenseState> {
    let mut out = state.clone();
    apply_in_place(&mut out, u, qubits)?;
    Ok(out)
}

pub(crate) fn apply_in_place(state: &mut DenseState, u: &DenseUnitary, qubits: &[usize]) -> Result<()> {
    let n = state.num_qubits();
    if qubits.len() != u.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: u.num_qubits(),
            found: qubits.len(),
        });
    }
    validate_qubits(qubits, n)?;
    let off = offsets(qubits);
    let target_mask: usize = qubits.iter().map(|&q| 1usize << q).sum();
    let dim = off.len();
    let mat = u.matrix();
    let amps = state.amplitudes_mut();
    let mut buf = vec![Complex64::new(0.0, 0.0); dim];
    for base in 0..amps.len() {
        if base & target_mask != 0 {
            continue;
        }
        for (l, o) in off.iter().enumerate() {
            buf[l] = amps[base | o];
        }
        for (r, o) in off.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, b) in buf.iter().enumerate() {
                acc += mat[(r, c)] * b;
            }
            amps[base | o] = acc;
        }
    }
    Ok(())
}

/// Gate blocks of a brickwork circuit over a chain of `len` sites: for each layer,
/// the starting positions of its `span`-wide blocks. Odd layers are shifted by
/// `span / 2`; blocks that would cross the open boundary are dropped.
pub fn brickwork_layout(len: usize, depth: usize, span: usize) -> Vec<Vec<usize>> {
    (0..depth)
        .map(|layer| {
            let shift = if layer % 2 == 1 { span / 2 } else { 0 };
            (0..)
                .map(|b| shift + b * span)
                .take_while(|&start| start + span <= len)
                .collect()
        })
        .collect()
}

/// Applies `depth` brick layers of independent Haar gates on `gate_span`-qubit blocks of `region`.
pub fn brickwork_apply(
    state: &DenseState,
    region: &[usize],
    depth: usize,
    gate_span: usize,
    seed: u64,
) -> Result<DenseState> {
    brickwork_apply_with(state, region, depth, gate_span, &mut rng_from_seed(seed))
}

pub fn brickwork_apply_with<R: Rng + ?Sized>(
    state: &DenseState,
    region: &[usize],
    depth: usize,
    gate_span: usize,
    rng: &mut R,
) -> Result<DenseState> {
    if gate_span < 2 {
        return Err(Error::InvalidArgument("gate_span must be at least 2".into()));
    }
    if region.len() < gate_span {
        return Err(Error::InvalidArgument(format!(
            "region of {} qubits is smaller than gate_span {gate_span}",
            region.len()
        )));
    }
    validate_qubits(region, state.num_qubits())?;
    let mut out = state.clone();
    for layer in brickwork_layout(region.len(), depth, gate_span) {
        for start in layer {
            let gate = haar_unitary_with(gate_span, rng)?;
            apply_in_place(&mut out, &gate, &region[start..start + gate_span])?;
        }
    }
    Ok(out)
}

/// Choi state `(U ⊗ I)|Bell>^{⊗m}`; system qubit `j` is paired with ancilla `m + j`.
pub fn choi_state(u: &DenseUnitary) -> Result<DenseState> {
    let m = u.num_qubits();
    limits::check_dense("Choi state", 2 * m)?;
    let dim = 1usize << m;
    let norm = (dim as f64).sqrt().recip();
    let mut amps = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for r in 0..dim {
            amps[r | (i << m)] = u.entry(r, i) * norm;
        }
    }
    Ok(DenseState::from_raw(2 * m, amps))
}

/// Schmidt-coefficient law for engineered entanglement spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaLaw {
    Exp,
    Linear,
    Quadratic,
    Cubic,
}

impl LambdaLaw {
    /// Unnormalized coefficient for `i` in `1..=2^k`.
    pub fn weight(self, i: usize, k: usize) -> f64 {
        let x = i as f64;
        match self {
            LambdaLaw::Exp => (-x / (1u64 << k) as f64).exp(),
            LambdaLaw::Linear => x,
            LambdaLaw::Quadratic => x * x,
            LambdaLaw::Cubic => x * x * x,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LambdaLaw::Exp => "exp",
            LambdaLaw::Linear => "linear",
            LambdaLaw::Quadratic => "quadratic",
            LambdaLaw::Cubic => "cubic",
        }
    }
}

impl std::str::FromStr for LambdaLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(LambdaLaw::Exp),
            "linear" => Ok(LambdaLaw::Linear),
            "quadratic" => Ok(LambdaLaw::Quadratic),
            "cubic" => Ok(LambdaLaw::Cubic),
            other => Err(Error::Parse {
                what: "lambda law",
                reason: format!("unknown law {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NonStabKind {
    /// `k` copies of `cos(theta)|00> + sin(theta)|11>`.
    ImperfectBell { theta: f64 },
    Spectrum(LambdaLaw),
}

/// `|0>^{f_a} ⊗ sum_i lambda_i |i>_A |i>_B` over `k`-qubit halves.
///
/// Qubits `0..f_a` are fillers, `f_a..f_a+k` the A half and `f_a+k..f_a+2k` the B half,
/// so pair `j` joins qubits `f_a + j` and `f_a + k + j`.
pub fn build_nonstab_state(kind: NonStabKind, k: usize, f_a: usize) -> Result<DenseState> {
    if k == 0 {
        return Err(Error::InvalidArgument("need at least one pair".into()));
    }
    let n = f_a + 2 * k;
    limits::check_dense("non-stabilizer state", n)?;
    let dk = 1usize << k;
    let lambdas: Vec<f64> = match kind {
        NonStabKind::ImperfectBell { theta } => {
            if !(0.0..=FRAC_PI_2).contains(&theta) || !theta.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "theta = {theta} outside [0, pi/2]"
                )));
            }
            let (s, c) = theta.sin_cos();
            (0..dk)
                .map(|i| {
                    let ones = i.count_ones() as i32;
                    s.powi(ones) * c.powi(k as i32 - ones)
                })
                .collect()
        }
        NonStabKind::Spectrum(law) => {
            let raw: Vec<f64> = (1..=dk).map(|i| law.weight(i, k)).collect();
            let norm = raw.iter().map(|l| l * l).sum::<f64>().sqrt();
            raw.into_iter().map(|l| l / norm).collect()
        }
    };
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (i, l) in lambdas.iter().enumerate() {
        amps[(i << f_a) | (i << (f_a + k))] = Complex64::new(*l, 0.0);
    }
    DenseState::normalized(n, amps)
}
