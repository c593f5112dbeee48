//! Pauli spectra by a Walsh-Hadamard transform per X mask.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::dense::DenseState;
use crate::error::{Error, Result};
use crate::limits;
use crate::pauli::{times_i_pow, PauliString};

/// Imaginary parts above this are a bug, not rounding.
const IMAG_TOL: f64 = 1e-9;

/// `tr(P rho)` for every Hermitian Pauli `P = i^{|x&z|} X^x Z^z`, at index `x * 2^n + z`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSpectrum {
    n: usize,
    values: Vec<f64>,
}

impl PauliSpectrum {
    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn index(&self, x: u64, z: u64) -> usize {
        ((x as usize) << self.n) | z as usize
    }

    /// `tr(P rho)` for a Hermitian, possibly negative, `P`.
    pub fn get(&self, p: &PauliString) -> Result<f64> {
        crate::error::check_dims(self.n, p.num_qubits())?;
        if !p.is_hermitian() {
            return Err(Error::InvalidArgument(format!("{p} is not Hermitian")));
        }
        let v = self.values[self.index(p.x_mask(), p.z_mask())];
        Ok(if p.is_negative() { -v } else { v })
    }

    /// `2^{-n} sum_P tr(P rho)^2`; one for pure states.
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>() / (1u64 << self.n) as f64
    }
}

/// Spectrum of a pure state in `O(n 4^n)`.
pub fn pauli_spectrum(state: &DenseState) -> Result<PauliSpectrum> {
    let n = state.num_qubits();
    limits::check_spectrum("Pauli spectrum", n)?;
    let psi = state.amplitudes();
    let values = transform(n, |x, k| psi[k] * psi[k ^ x].conj())?;
    Ok(PauliSpectrum { n, values })
}

/// `tr(P M) / 2^n` for a Hermitian operator `M`, same indexing as [`PauliSpectrum`].
pub fn operator_coefficients(n: usize, m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    limits::check_spectrum("operator Pauli expansion", n)?;
    crate::error::check_dims(1 << n, m.nrows())?;
    crate::error::check_dims(1 << n, m.ncols())?;
    let scale = ((1u64 << n) as f64).recip();
    let mut out = transform(n, |x, k| m[(k, k ^ x)])?;
    out.iter_mut().for_each(|v| *v *= scale);
    Ok(out)
}

/// `out[x, z] = i^{|x&z|} sum_k (-1)^{z.k} f(x, k)`, asserted real.
fn transform<F>(n: usize, f: F) -> Result<Vec<f64>>
where
    F: Fn(usize, usize) -> Complex64 + Sync,
{
    let dim = 1usize << n;
    let mut values = vec![0.0; dim * dim];
    let worst = values
        .par_chunks_mut(dim)
        .enumerate()
        .map(|(x, row)| {
            let mut buf: Vec<Complex64> = (0..dim).map(|k| f(x, k)).collect();
            walsh_hadamard(&mut buf);
            let mut worst = 0.0f64;
            for (z, (out, c)) in row.iter_mut().zip(&buf).enumerate() {
                let c = times_i_pow(*c, ((x & z).count_ones() & 3) as u8);
                worst = worst.max(c.im.abs());
                *out = c.re;
            }
            worst
        })
        .reduce(|| 0.0, f64::max);
    if worst > IMAG_TOL {
        return Err(Error::Tolerance(format!(
            "Pauli expectation has imaginary part {worst:.3e}; input is not Hermitian"
        )));
    }
    Ok(values)
}

/// Unnormalized in-place transform, `out[z] = sum_k (-1)^{z.k} in[k]`.
pub(crate) fn walsh_hadamard(buf: &mut [Complex64]) {
    let len = buf.len();
    let mut h = 1;
    while h < len {
        for block in buf.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{haar_unitary, named_gate, DenseUnitary};

    fn plus_t() -> DenseState {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        DenseState::new(1, vec![Complex64::new(h, 0.0), Complex64::from_polar(h, std::f64::consts::FRAC_PI_4)]).unwrap()
    }

    fn value(s: &PauliSpectrum, text: &str) -> f64 {
        s.get(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn zero_state() {
        let s = pauli_spectrum(&DenseState::zero(1)).unwrap();
        assert_eq!([value(&s, "I"), value(&s, "Z"), value(&s, "X"), value(&s, "Y")], [1.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn t_plus_state() {
        let s = pauli_spectrum(&plus_t()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((value(&s, "X") - h).abs() < 1e-15);
        assert!((value(&s, "Y") - h).abs() < 1e-15);
        assert!(value(&s, "Z").abs() < 1e-15);
    }

    #[test]
    fn bell_state_entries() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let c = |v| Complex64::new(v, 0.0);
        let bell = DenseState::new(2, vec![c(h), c(0.0), c(0.0), c(h)]).unwrap();
        let s = pauli_spectrum(&bell).unwrap();
        assert!((value(&s, "XX") - 1.0).abs() < 1e-15);
        assert!((value(&s, "YY") + 1.0).abs() < 1e-15);
        assert!((value(&s, "ZZ") - 1.0).abs() < 1e-15);
        assert!((value(&s, "-YY") - 1.0).abs() < 1e-15);
        let big = s.values().iter().filter(|v| v.abs() > 0.5).count();
        assert_eq!(big, 4);
    }

    /// Brute force `<psi|P|psi>` with explicit Pauli matrices.
    #[test]
    fn matches_matrix_expectations() {
        let n = 3;
        let u = haar_unitary(n, 4).unwrap();
        let psi: Vec<Complex64> = (0..8).map(|r| u.entry(r, 0)).collect();
        let state = DenseState::new(n, psi.clone()).unwrap();
        let s = pauli_spectrum(&state).unwrap();
        for x in 0..8u64 {
            for z in 0..8u64 {
                let p = PauliString::from_masks(n, x, z, false);
                let m = p.to_matrix();
                let mut acc = Complex64::new(0.0, 0.0);
                for r in 0..8 {
                    for c in 0..8 {
                        acc += psi[r].conj() * m[r * 8 + c] * psi[c];
                    }
                }
                assert!(acc.im.abs() < 1e-12);
                assert!((acc.re - s.get(&p).unwrap()).abs() < 1e-12, "{p}");
            }
        }
        assert!((s.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn operator_coefficients_of_t_conjugated_x() {
        let t = named_gate("T").unwrap();
        let x = DenseUnitary::new(1, DMatrix::from_row_slice(2, 2, &PauliString::single(1, 0, 'X').unwrap().to_matrix())).unwrap();
        let m = t.compose(&x).unwrap().compose(&t.adjoint()).unwrap();
        let c = operator_coefficients(1, m.matrix()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        // index x*2+z: I=0, Z=1, X=2, Y=3
        assert!(c[0].abs() < 1e-15 && c[1].abs() < 1e-15);
        assert!((c[2] - h).abs() < 1e-15 && (c[3] - h).abs() < 1e-15);
    }

    #[test]
    fn non_hermitian_operator_is_rejected() {
        let m = DMatrix::from_row_slice(2, 2, &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)]);
        assert!(operator_coefficients(1, &m).is_err());
    }
}
