use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{check_dims, Error, Result};
use crate::limits;

const NORM_TOL: f64 = 1e-10;

/// A normalized `n`-qubit statevector. Qubit `j` is bit `j` of the basis index.
#[derive(Clone, PartialEq)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

impl DenseState {
    /// Validates length and normalization.
    pub fn new(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        limits::check_dense("dense state", n)?;
        check_dims(1usize << n, amps.len())?;
        let s = DenseState { n, amps };
        let norm = s.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidArgument(format!(
                "state norm {norm} differs from 1"
            )));
        }
        Ok(s)
    }

    /// Normalizes `amps` before wrapping them.
    pub fn normalized(n: usize, mut amps: Vec<Complex64>) -> Result<Self> {
        limits::check_dense("dense state", n)?;
        check_dims(1usize << n, amps.len())?;
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidArgument("cannot normalize a zero vector".into()));
        }
        amps.iter_mut().for_each(|a| *a /= norm);
        Ok(DenseState { n, amps })
    }

    pub(crate) fn from_raw(n: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1usize << n);
        DenseState { n, amps }
    }

    /// `|0...0>`.
    pub fn zero(n: usize) -> Self {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index] = Complex64::new(1.0, 0.0);
        DenseState { n, amps }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &DenseState) -> Result<Complex64> {
        check_dims(self.n, other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &DenseState) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// `self ⊗ other` with `self` on the low qubits.
    pub fn tensor(&self, other: &DenseState) -> Result<DenseState> {
        let n = self.n + other.n;
        limits::check_dense("dense state", n)?;
        let mut amps = Vec::with_capacity(1 << n);
        for b in &other.amps {
            for a in &self.amps {
                amps.push(a * b);
            }
        }
        Ok(DenseState { n, amps })
    }

    /// Reduced density matrix on `keep` (qubit `keep[t]` becomes local bit `t`).
    pub fn reduced_density_matrix(&self, keep: &[usize]) -> Result<DMatrix<Complex64>> {
        validate_qubits(keep, self.n)?;
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep.contains(q)).collect();
        let dk = 1usize << keep.len();
        let dt = 1usize << traced.len();
        let keep_off = offsets(keep);
        let traced_off = offsets(&traced);
        let mut rho = DMatrix::<Complex64>::zeros(dk, dk);
        for &t in &traced_off[..dt] {
            for r in 0..dk {
                let ar = self.amps[t | keep_off[r]];
                if ar == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..dk {
                    rho[(r, c)] += ar * self.amps[t | keep_off[c]].conj();
                }
            }
        }
        Ok(rho)
    }

    /// Von Neumann entropy (bits) of the reduced state on `cut`.
    pub fn entanglement_entropy(&self, cut: &[usize]) -> Result<f64> {
        validate_qubits(cut, self.n)?;
        let rest: Vec<usize> = (0..self.n).filter(|q| !cut.contains(q)).collect();
        let side = if cut.len() <= rest.len() { cut } else { &rest[..] };
        if side.is_empty() {
            return Ok(0.0);
        }
        let rho = self.reduced_density_matrix(side)?;
        let eig = rho.symmetric_eigenvalues();
        Ok(eig
            .iter()
            .filter(|&&p| p > 1e-14)
            .map(|&p| -p * p.log2())
            .sum())
    }

    /// Equality up to a global phase, within `tol` on every amplitude.
    pub fn approx_eq_up_to_phase(&self, other: &DenseState, tol: f64) -> bool {
        if self.n != other.n {
            return false;
        }
        let overlap: Complex64 = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| b.conj() * a)
            .sum();
        if overlap.norm() < 1e-12 {
            return false;
        }
        let phase = overlap / overlap.norm();
        self.amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (a - b * phase).norm() <= tol)
    }
}

impl fmt::Debug for DenseState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseState({} qubits) [", self.n)?;
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm() > 1e-12 {
                let label: String = (0..self.n)
                    .map(|q| if i >> q & 1 == 1 { '1' } else { '0' })
                    .collect();
                write!(f, " {a:.4}|{label}>")?;
            }
        }
        write!(f, " ]")
    }
}

pub(crate) fn validate_qubits(qubits: &[usize], n: usize) -> Result<()> {
    let mut seen = 0u128;
    for &q in qubits {
        if q >= n {
            return Err(Error::InvalidArgument(format!(
                "qubit {q} out of range for {n} qubits"
            )));
        }
        if seen >> q & 1 == 1 {
            return Err(Error::InvalidArgument(format!("qubit {q} listed twice")));
        }
        seen |= 1 << q;
    }
    Ok(())
}

/// Basis-index offsets for every local index over `qubits`.
pub(crate) fn offsets(qubits: &[usize]) -> Vec<usize> {
    let mut off = vec![0usize; 1 << qubits.len()];
    for (t, &q) in qubits.iter().enumerate() {
        let half = 1 << t;
        for l in 0..half {
            off[half + l] = off[l] | (1 << q);
        }
    }
    off
}
