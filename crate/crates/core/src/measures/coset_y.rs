//! Per-sample `Y_lin` of `(U_A ⊗ I)|S>` that never touches the B register.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::spectrum::operator_coefficients;
use crate::dense::DenseUnitary;
use crate::error::{check_dims, Result};
use crate::limits;
use crate::stabilizer::CosetDecomposition;

/// Only the coset containing `P_B` survives the B trace, which leaves
///
/// `1 - Y = 2^{-5|A| - E} sum_{P_A, k} tr(P_A U a_k Pi_A U^dag)^4`,
///
/// with `Pi_A` the (unnormalized) sum over `S_A` and `a_k` the A half of coset `k`.
pub fn coset_reduced_y(decomp: &CosetDecomposition, u_a: &DenseUnitary) -> Result<f64> {
    let na = decomp.region_a().len();
    check_dims(na, u_a.num_qubits())?;
    limits::check_spectrum("coset-reduced estimator", na)?;
    let dim = 1usize << na;
    let e = decomp.entanglement();

    let mut pi = DMatrix::<Complex64>::zeros(dim, dim);
    for s in decomp.s_a().elements() {
        pi += DMatrix::from_row_slice(dim, dim, &s.to_matrix());
    }
    let um = u_a.matrix();
    let ud = um.adjoint();
    let rotated_pi = um * &pi * &ud;

    let mut total = 0.0;
    for k in 0..decomp.num_cosets() {
        let (a_k, _) = decomp.coset_pair(k);
        let a_rot = um * DMatrix::from_row_slice(dim, dim, &a_k.to_matrix()) * &ud;
        let op = a_rot * &rotated_pi;
        // operator_coefficients divides by 2^|A|
        let scale = dim as f64;
        total += operator_coefficients(na, &op)?
            .iter()
            .map(|c| (c * scale).powi(4))
            .sum::<f64>();
    }
    let norm = 2f64.powi(-(5 * na as i32) - e as i32);
    Ok((1.0 - total * norm).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{apply_on_qubits, haar_unitary};
    use crate::measures::{pauli_spectrum, y_lin};
    use crate::stabilizer::{coset_decompose, random_clifford, BipartiteShape, Filler, Shape, StabilizerGroup};

    fn brute(group: &StabilizerGroup, region: &[usize], u: &DenseUnitary) -> f64 {
        let s = apply_on_qubits(&group.to_state().unwrap(), u, region).unwrap();
        y_lin(&pauli_spectrum(&s).unwrap())
    }

    /// Clifford-scrambled normal form, so the cosets are not aligned with qubits.
    fn scrambled(f_a: usize, e: usize, f_b: usize, seed: u64) -> (StabilizerGroup, Vec<usize>) {
        let shape = Shape::Bipartite(BipartiteShape { f_a, e, f_b });
        let form = shape.layout(Filler::Plus).unwrap();
        let na = f_a + e;
        let nb = e + f_b;
        let n = na + nb;
        let ca = random_clifford(na, seed).embed(&form.regions[0], n).unwrap();
        let cb = random_clifford(nb, seed + 1000).embed(&form.regions[1], n).unwrap();
        let g = cb.conjugate_group(&ca.conjugate_group(&form.group).unwrap()).unwrap();
        (g, form.regions[0].clone())
    }

    #[test]
    fn matches_brute_force() {
        for (f_a, e, f_b) in [(2, 0, 2), (1, 1, 2), (0, 2, 2), (2, 1, 2)] {
            for seed in 0..4 {
                let (g, a) = scrambled(f_a, e, f_b, seed);
                let d = coset_decompose(&g, &a).unwrap();
                assert_eq!(d.entanglement(), e);
                let u = haar_unitary(a.len(), 77 + seed).unwrap();
                let fast = coset_reduced_y(&d, &u).unwrap();
                let slow = brute(&g, &a, &u);
                assert!((fast - slow).abs() < 1e-8, "{f_a},{e},{f_b} seed {seed}: {fast} vs {slow}");
            }
        }
    }

    #[test]
    fn clifford_gives_zero() {
        let (g, a) = scrambled(1, 1, 1, 3);
        let d = coset_decompose(&g, &a).unwrap();
        let u = random_clifford(2, 5).to_unitary().unwrap();
        assert!(coset_reduced_y(&d, &u).unwrap().abs() < 1e-9);
    }

    #[test]
    fn size_mismatch() {
        let (g, a) = scrambled(1, 1, 1, 3);
        let d = coset_decompose(&g, &a).unwrap();
        assert!(coset_reduced_y(&d, &haar_unitary(3, 1).unwrap()).is_err());
    }
}
