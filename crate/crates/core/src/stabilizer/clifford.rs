use num_complex::Complex64;
use rand::Rng;

use super::group::{check_region, StabilizerGroup};
use crate::dense::{DenseState, DenseUnitary};
use crate::error::{check_dims, Error, Result};
use crate::limits;
use crate::pauli::{apply_pauli, pauli_mul, symplectic_product, PauliString};
use crate::rng::rng_from_seed;

/// A Clifford unitary modulo global phase, stored as its action on the generators:
/// `images[j] = U X_j U^dag` and `images[n + j] = U Z_j U^dag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clifford {
    n: usize,
    images: Vec<PauliString>,
}

impl Clifford {
    pub fn identity(n: usize) -> Self {
        let images = (0..n)
            .map(|q| PauliString::single(n, q, 'X').expect("in range"))
            .chain((0..n).map(|q| PauliString::single(n, q, 'Z').expect("in range")))
            .collect();
        Clifford { n, images }
    }

    /// Checks that the images are Hermitian and satisfy the canonical commutation relations.
    pub fn from_images(n: usize, images: Vec<PauliString>) -> Result<Self> {
        check_dims(2 * n, images.len())?;
        for (i, p) in images.iter().enumerate() {
            check_dims(n, p.num_qubits())?;
            if !p.is_hermitian() {
                return Err(Error::InvalidArgument(format!("image {p} is not Hermitian")));
            }
            for (j, q) in images.iter().enumerate().take(i) {
                let want = u8::from(i == j + n);
                if symplectic_product(p, q) != want {
                    return Err(Error::InvalidArgument(
                        "images do not preserve the symplectic form".into(),
                    ));
                }
            }
        }
        Ok(Clifford { n, images })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// `U X_j U^dag` for `j < n`, then `U Z_j U^dag`.
    pub fn images(&self) -> &[PauliString] {
        &self.images
    }

    /// `U P U^dag`, with the exact phase.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        check_dims(self.n, p.num_qubits())?;
        // P = i^phase X^x Z^z; conjugate factor by factor in the same order.
        let mut out = PauliString::identity(self.n);
        for q in 0..self.n {
            if p.x_bit(q) {
                out = pauli_mul(&out, &self.images[q])?;
            }
        }
        for q in 0..self.n {
            if p.z_bit(q) {
                out = pauli_mul(&out, &self.images[self.n + q])?;
            }
        }
        let phase = out.phase() + p.phase();
        PauliString::from_bits(self.n, out.x_words().to_vec(), out.z_words().to_vec(), phase)
    }

    pub fn conjugate_group(&self, group: &StabilizerGroup) -> Result<StabilizerGroup> {
        check_dims(self.n, group.num_qubits())?;
        let gens = group
            .generators()
            .iter()
            .map(|g| self.conjugate(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(StabilizerGroup::from_trusted(self.n, gens))
    }

    /// This Clifford acting on `qubits` of an `n`-qubit register, identity elsewhere.
    pub fn embed(&self, qubits: &[usize], n: usize) -> Result<Clifford> {
        check_dims(self.n, qubits.len())?;
        check_region(qubits, n)?;
        let mut full = Clifford::identity(n);
        for (t, &q) in qubits.iter().enumerate() {
            full.images[q] = self.images[t].embed(qubits, n)?;
            full.images[n + q] = self.images[self.n + t].embed(qubits, n)?;
        }
        Ok(full)
    }

    /// Dense matrix realizing this action. Column `x` is `prod_j img(X_j)^{x_j} |psi_0>`, where
    /// `|psi_0>` is the state stabilized by the Z images.
    pub fn to_unitary(&self) -> Result<DenseUnitary> {
        limits::check_dense("Clifford unitary", self.n)?;
        let zs = StabilizerGroup::from_trusted(self.n, self.images[self.n..].to_vec());
        let first = zs.to_state()?;
        let dim = 1usize << self.n;
        let mut columns: Vec<DenseState> = Vec::with_capacity(dim);
        columns.push(first);
        for x in 1..dim {
            let j = x.trailing_zeros() as usize;
            let prev = &columns[x ^ (1 << j)];
            let next = apply_pauli(prev, &self.images[j])?;
            columns.push(next);
        }
        let matrix = nalgebra::DMatrix::from_fn(dim, dim, |r, c| columns[c].amplitudes()[r]);
        Ok(DenseUnitary::from_matrix_unchecked(self.n, matrix))
    }
}

fn random_symplectic_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
    let mut p = PauliString::identity(n);
    for q in 0..n {
        p.set_x(q, rng.random());
        p.set_z(q, rng.random());
    }
    p
}

/// Projects `v` onto the symplectic complement of the hyperbolic pairs found so far.
fn project(v: &PauliString, pairs: &[(PauliString, PauliString)]) -> PauliString {
    let mut out = v.clone();
    for (x, z) in pairs {
        if symplectic_product(v, z) == 1 {
            out = xor(&out, x);
        }
        if symplectic_product(v, x) == 1 {
            out = xor(&out, z);
        }
    }
    out
}

fn xor(a: &PauliString, b: &PauliString) -> PauliString {
    let x = a.x_words().iter().zip(b.x_words()).map(|(p, q)| p ^ q).collect();
    let z = a.z_words().iter().zip(b.z_words()).map(|(p, q)| p ^ q).collect();
    PauliString::from_bits(a.num_qubits(), x, z, 0).expect("same size")
}

fn hermitian_with_sign(p: &PauliString, negative: bool) -> PauliString {
    let base = p.unsigned();
    if negative {
        base.negated()
    } else {
        base
    }
}

/// Uniformly random Clifford on `n` qubits (modulo global phase).
pub fn random_clifford(n: usize, seed: u64) -> Clifford {
    random_clifford_with(n, &mut rng_from_seed(seed))
}

/// Uniform over `Sp(2n, F2)` times the sign choices.
///
/// Each hyperbolic pair is drawn uniformly from the symplectic complement of the
/// previous ones: a uniform vector projected onto the complement is uniform there, a
/// zero first vector or a commuting second vector is redrawn. The image signs are
/// independent fair bits.
pub fn random_clifford_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Clifford {
    let mut pairs: Vec<(PauliString, PauliString)> = Vec::with_capacity(n);
    for _ in 0..n {
        let first = loop {
            let v = project(&random_symplectic_vector(n, rng), &pairs);
            if !v.is_identity_up_to_phase() {
                break v;
            }
        };
        let second = loop {
            let w = project(&random_symplectic_vector(n, rng), &pairs);
            if symplectic_product(&first, &w) == 1 {
                break w;
            }
        };
        pairs.push((first, second));
    }
    let mut images = Vec::with_capacity(2 * n);
    let signs: Vec<bool> = (0..2 * n).map(|_| rng.random()).collect();
    for (j, (x, _)) in pairs.iter().enumerate() {
        images.push(hermitian_with_sign(x, signs[j]));
    }
    for (j, (_, z)) in pairs.iter().enumerate() {
        images.push(hermitian_with_sign(z, signs[n + j]));
    }
    Clifford { n, images }
}

/// Dense unitary of a random Clifford, when `n` fits the dense cap.
pub fn random_clifford_unitary(n: usize, seed: u64) -> Result<(Clifford, DenseUnitary)> {
    let c = random_clifford(n, seed);
    let u = c.to_unitary()?;
    Ok((c, u))
}

/// `U P U^dag` computed densely, for tests and diagnostics.
pub fn conjugate_dense(u: &DenseUnitary, p: &PauliString) -> Vec<Complex64> {
    let dim = u.dim();
    let pm = p.to_matrix();
    let um = u.matrix();
    let mut tmp = vec![Complex64::new(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..dim {
                acc += um[(r, k)] * pm[k * dim + c];
            }
            tmp[r * dim + c] = acc;
        }
    }
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..dim {
                acc += tmp[r * dim + k] * um[(c, k)].conj();
            }
            out[r * dim + c] = acc;
        }
    }
    out
}
