use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::DenseUnitary;
use crate::error::Result;
use crate::limits;
use crate::rng::rng_from_seed;

/// Haar-random `m`-qubit unitary from a seed.
pub fn haar_unitary(m: usize, seed: u64) -> Result<DenseUnitary> {
    haar_unitary_with(m, &mut rng_from_seed(seed))
}

/// Haar-random unitary: QR of a complex Ginibre matrix, with `Q` multiplied by the
/// phases of `diag(R)` so the result does not depend on the QR sign convention.
pub fn haar_unitary_with<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<DenseUnitary> {
    limits::check_dense("Haar unitary", m)?;
    let dim = 1usize << m;
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut entries = Vec::with_capacity(dim * dim);
    for _ in 0..dim * dim {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        entries.push(Complex64::new(re * scale, im * scale));
    }
    let ginibre = DMatrix::from_row_slice(dim, dim, &entries);
    let (mut q, r) = ginibre.qr().unpack();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        q.column_mut(j).iter_mut().for_each(|v| *v *= phase);
    }
    Ok(DenseUnitary::from_matrix_unchecked(m, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_unitary_and_seeded() {
        for m in 1..=4 {
            let u = haar_unitary(m, 7).unwrap();
            assert!(u.unitarity_deviation() < 1e-10);
            assert_eq!(u, haar_unitary(m, 7).unwrap());
            assert_ne!(u, haar_unitary(m, 8).unwrap());
        }
    }

    #[test]
    fn first_moment_of_corner_entry() {
        // |U_00|^2 of a Haar 2x2 unitary is uniform on [0,1], mean 1/2.
        let samples = 10_000;
        let mean: f64 = (0..samples)
            .map(|s| haar_unitary(1, s).unwrap().entry(0, 0).norm_sqr())
            .sum::<f64>()
            / samples as f64;
        assert!((mean - 0.5).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn cap_is_enforced() {
        assert!(haar_unitary(40, 1).is_err());
    }
}
