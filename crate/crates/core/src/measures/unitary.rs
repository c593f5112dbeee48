//! Magic of unitaries: stabilizer Rényi entropy, unitary nullity and T-count bounds.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spectrum::{operator_coefficients, pauli_spectrum};
use super::state::{m_alpha, renyi_of_weights, Alpha};
use crate::dense::{choi_state, DenseUnitary};
use crate::error::{Error, Result};
use crate::limits;
use crate::pauli::PauliString;

/// Agreement required between the direct sum and the Choi-state route.
pub const CHOI_TOL: f64 = 1e-9;

/// Default magnitude slack for recognising `U P U^dag` as a single Pauli.
pub const NULLITY_TOL: f64 = 1e-6;

const UNITARITY_TOL: f64 = 1e-9;

/// `c[j][i] = tr(P_i U P_j U^dag) / 2^m` over Hermitian Paulis, row-major in `j`.
struct ConjugationTable {
    m: usize,
    coeffs: Vec<f64>,
}

impl ConjugationTable {
    fn new(u: &DenseUnitary) -> Result<Self> {
        let m = u.num_qubits();
        limits::check_spectrum("unitary conjugation table", 2 * m)?;
        if u.unitarity_deviation() > UNITARITY_TOL {
            return Err(Error::InvalidArgument("matrix is not unitary".into()));
        }
        let dim = 1usize << m;
        let um = u.matrix();
        let ud = um.adjoint();
        let mut coeffs = Vec::with_capacity(dim * dim * dim * dim);
        for x in 0..dim as u64 {
            for z in 0..dim as u64 {
                let p = PauliString::from_masks(m, x, z, false);
                let pm = DMatrix::from_row_slice(dim, dim, &p.to_matrix());
                let w = um * pm * &ud;
                coeffs.extend(operator_coefficients(m, &w)?);
            }
        }
        Ok(ConjugationTable { m, coeffs })
    }

    fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.coeffs.chunks_exact(1 << (2 * self.m))
    }

    fn entropy(&self, alpha: Alpha) -> f64 {
        let weights: Vec<f64> = self.coeffs.iter().map(|c| c * c).collect();
        let total = (1u64 << (2 * self.m)) as f64;
        (renyi_of_weights(&weights, total, alpha) - 2.0 * self.m as f64).max(0.0)
    }
}

/// `H_alpha(U) = log2(2^{-2m} sum_ij c_ij^{2 alpha}) / (1 - alpha)` in bits.
///
/// Also evaluates `M_alpha` of the Choi state and fails if the two differ by more
/// than [`CHOI_TOL`]. `alpha = 0` counts `c_ij^2 > 1e-10`.
pub fn unitary_sre(u: &DenseUnitary, alpha: Alpha) -> Result<f64> {
    let table = ConjugationTable::new(u)?;
    checked_sre(&table, u, alpha)
}

fn checked_sre(table: &ConjugationTable, u: &DenseUnitary, alpha: Alpha) -> Result<f64> {
    let direct = table.entropy(alpha);
    let via_choi = m_alpha(&pauli_spectrum(&choi_state(u)?)?, alpha);
    if (direct - via_choi).abs() > CHOI_TOL {
        return Err(Error::Tolerance(format!(
            "H_{alpha} = {direct} but the Choi state gives {via_choi}"
        )));
    }
    Ok(direct)
}

/// `H_alpha` by the literal trace formula; only for `m <= 2`.
pub fn unitary_sre_literal(u: &DenseUnitary, alpha: Alpha) -> Result<f64> {
    let m = u.num_qubits();
    if m > 2 {
        return Err(Error::Unsupported("literal double sum is limited to two qubits".into()));
    }
    let dim = 1usize << m;
    let paulis: Vec<DMatrix<Complex64>> = (0..dim as u64)
        .flat_map(|x| (0..dim as u64).map(move |z| (x, z)))
        .map(|(x, z)| DMatrix::from_row_slice(dim, dim, &PauliString::from_masks(m, x, z, false).to_matrix()))
        .collect();
    let ud = u.matrix().adjoint();
    let mut weights = Vec::with_capacity(paulis.len() * paulis.len());
    for pj in &paulis {
        let w = u.matrix() * pj * &ud;
        for pi in &paulis {
            let c = (pi * &w).trace() / dim as f64;
            weights.push(c.norm_sqr());
        }
    }
    let total = (dim * dim) as f64;
    Ok((renyi_of_weights(&weights, total, alpha) - 2.0 * m as f64).max(0.0))
}

/// `2m - log2 |s(U)|`, `s(U) = {P : U P U^dag = ±Q}`.
pub fn unitary_nullity(u: &DenseUnitary, tol: f64) -> Result<usize> {
    nullity_of(&ConjugationTable::new(u)?, tol)
}

fn nullity_of(table: &ConjugationTable, tol: f64) -> Result<usize> {
    let m = table.m;
    let mut members: Vec<u64> = Vec::new();
    for (j, row) in table.rows().enumerate() {
        let big = row.iter().filter(|c| c.abs() >= 1.0 - tol).count();
        if big == 1 {
            // j = x * 2^m + z
            members.push(j as u64);
        }
    }
    let rank = gf2_rank(&members);
    if members.len() != 1 << rank {
        return Err(Error::Tolerance(format!(
            "{} Paulis map to Paulis, which is not a group; tolerance {tol} is too loose",
            members.len()
        )));
    }
    Ok(2 * m - rank)
}

fn gf2_rank(vectors: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Lower bounds on the T-count, each one at most the next.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub h0: f64,
    pub h2: f64,
    pub nullity: usize,
    pub t_lower: usize,
}

/// `h2 <= h0 <= nullity`, and `nullity <= declared_t` when a T-count is known.
pub fn t_count_bounds(u: &DenseUnitary, declared_t: Option<usize>) -> Result<BoundReport> {
    let table = ConjugationTable::new(u)?;
    let h0 = checked_sre(&table, u, Alpha::Finite(0))?;
    let h2 = checked_sre(&table, u, Alpha::Finite(2))?;
    let nullity = nullity_of(&table, NULLITY_TOL)?;
    const SLACK: f64 = 1e-9;
    if h2 > h0 + SLACK || h0 > nullity as f64 + SLACK {
        return Err(Error::Inconsistent(format!(
            "bound chain broken: H_2 = {h2}, H_0 = {h0}, nullity = {nullity}"
        )));
    }
    if let Some(t) = declared_t {
        if nullity > t {
            return Err(Error::Inconsistent(format!("nullity {nullity} exceeds declared T-count {t}")));
        }
    }
    Ok(BoundReport {
        h0,
        h2,
        nullity,
        t_lower: (h0 - SLACK).ceil().max(0.0) as usize,
    })
}
