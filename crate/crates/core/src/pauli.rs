//! Signed Pauli strings in the binary symplectic representation.
//!
//! A [`PauliString`] on `n` qubits stores the operator
//! `i^phase * X^x * Z^z`, where `X^x = prod_j X_j^{x_j}` and likewise for `Z`.
//! Bits are packed little-endian, 64 qubits per word, so qubit `j` lives in
//! bit `j % 64` of word `j / 64`. For states of at most 64 qubits the first
//! word of `x` is exactly the basis-index mask flipped by the string.
//!
//! With this convention `Y = i X Z` is stored as `x = z = 1, phase = 1`; a
//! string is Hermitian iff `phase + #Y` is even.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dense::DenseState;
use crate::error::{check_dims, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(p, q)| (p & q).count_ones()).sum()
}

/// Multiplies `i^k` into a complex number, `k` taken mod 4.
#[inline]
pub(crate) fn times_i_pow(c: Complex64, k: u8) -> Complex64 {
    match k & 3 {
        0 => c,
        1 => Complex64::new(-c.im, c.re),
        2 => -c,
        _ => Complex64::new(c.im, -c.re),
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            n,
            x: vec![0; words(n)],
            z: vec![0; words(n)],
            phase: 0,
        }
    }

    /// Builds a string from raw masks; `phase` is the raw power of `i`.
    pub fn from_bits(n: usize, x: Vec<u64>, z: Vec<u64>, phase: u8) -> Result<Self> {
        check_dims(words(n), x.len())?;
        check_dims(words(n), z.len())?;
        let p = PauliString {
            n,
            x,
            z,
            phase: phase & 3,
        };
        if p.has_stray_bits() {
            return Err(Error::InvalidArgument(format!(
                "bit mask uses qubits beyond n = {n}"
            )));
        }
        Ok(p)
    }

    /// Hermitian string with sign `(-1)^negative` from masks of at most 64 qubits.
    pub fn from_masks(n: usize, x: u64, z: u64, negative: bool) -> Self {
        assert!(n <= 64, "from_masks handles at most 64 qubits");
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let (x, z) = (x & mask, z & mask);
        let y = (x & z).count_ones() as u8;
        let sign = if negative { 2 } else { 0 };
        PauliString {
            n,
            x: if n == 0 { vec![] } else { vec![x] },
            z: if n == 0 { vec![] } else { vec![z] },
            phase: (y + sign) & 3,
        }
    }

    /// Single-qubit Pauli `kind` ('X', 'Y' or 'Z') on `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, kind: char) -> Result<Self> {
        if qubit >= n {
            return Err(Error::InvalidArgument(format!(
                "qubit {qubit} out of range for {n} qubits"
            )));
        }
        let mut p = PauliString::identity(n);
        match kind {
            'X' => p.set_x(qubit, true),
            'Z' => p.set_z(qubit, true),
            'Y' => {
                p.set_x(qubit, true);
                p.set_z(qubit, true);
                p.phase = 1;
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown Pauli letter {other:?}"
                )))
            }
        }
        Ok(p)
    }

    fn has_stray_bits(&self) -> bool {
        let rem = self.n % 64;
        if rem == 0 || self.x.is_empty() {
            return false;
        }
        let mask = !((1u64 << rem) - 1);
        let last = self.x.len() - 1;
        self.x[last] & mask != 0 || self.z[last] & mask != 0
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    #[inline]
    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    /// Raw power of `i` in `i^phase X^x Z^z`.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// X mask as a single word. Panics for more than 64 qubits.
    #[inline]
    pub fn x_mask(&self) -> u64 {
        assert!(self.n <= 64);
        self.x.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn z_mask(&self) -> u64 {
        assert!(self.n <= 64);
        self.z.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn x_bit(&self, q: usize) -> bool {
        self.x[q / 64] >> (q % 64) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, q: usize) -> bool {
        self.z[q / 64] >> (q % 64) & 1 == 1
    }

    /// Sets the X bit of qubit `q`, keeping the raw phase unchanged.
    pub fn set_x(&mut self, q: usize, v: bool) {
        let (w, b) = (q / 64, q % 64);
        self.x[w] = (self.x[w] & !(1 << b)) | ((v as u64) << b);
    }

    pub fn set_z(&mut self, q: usize, v: bool) {
        let (w, b) = (q / 64, q % 64);
        self.z[w] = (self.z[w] & !(1 << b)) | ((v as u64) << b);
    }

    /// Number of qubits carrying a `Y`.
    #[inline]
    pub fn y_count(&self) -> u32 {
        popcount_and(&self.x, &self.z)
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase as u32 + self.y_count()) % 2 == 0
    }

    /// Power of `i` in front of the product of Hermitian single-qubit letters.
    #[inline]
    pub fn sign_phase(&self) -> u8 {
        ((self.phase as u32 + 4 - self.y_count() % 4) % 4) as u8
    }

    /// True when the string equals `-1` times a product of Hermitian letters.
    pub fn is_negative(&self) -> bool {
        self.sign_phase() == 2
    }

    /// The same letters with sign `+1`.
    pub fn unsigned(&self) -> PauliString {
        let mut p = self.clone();
        p.phase = (self.y_count() % 4) as u8;
        p
    }

    pub fn negated(&self) -> PauliString {
        let mut p = self.clone();
        p.phase = (p.phase + 2) & 3;
        p
    }

    /// Letter at qubit `q`: one of `I`, `X`, `Y`, `Z`.
    pub fn letter(&self, q: usize) -> char {
        match (self.x_bit(q), self.z_bit(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Qubits where the string is not the identity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&q| self.x_bit(q) || self.z_bit(q))
            .collect()
    }

    /// Restriction to `qubits` (in the given order), Hermitian with sign `+1`.
    pub fn restrict(&self, qubits: &[usize]) -> PauliString {
        let mut p = PauliString::identity(qubits.len());
        for (i, &q) in qubits.iter().enumerate() {
            p.set_x(i, self.x_bit(q));
            p.set_z(i, self.z_bit(q));
        }
        p.phase = (p.y_count() % 4) as u8;
        p
    }

    /// Places this string on `qubits` of an `n`-qubit register, keeping the phase.
    pub fn embed(&self, qubits: &[usize], n: usize) -> Result<PauliString> {
        check_dims(self.n, qubits.len())?;
        let mut p = PauliString::identity(n);
        for (i, &q) in qubits.iter().enumerate() {
            if q >= n {
                return Err(Error::InvalidArgument(format!(
                    "qubit {q} out of range for {n} qubits"
                )));
            }
            p.set_x(q, self.x_bit(i));
            p.set_z(q, self.z_bit(i));
        }
        p.phase = self.phase;
        Ok(p)
    }

    /// Concatenation `self ⊗ other`, `self` on the low qubits.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let n = self.n + other.n;
        let mut p = PauliString::identity(n);
        for q in 0..self.n {
            p.set_x(q, self.x_bit(q));
            p.set_z(q, self.z_bit(q));
        }
        for q in 0..other.n {
            p.set_x(self.n + q, other.x_bit(q));
            p.set_z(self.n + q, other.z_bit(q));
        }
        p.phase = (self.phase + other.phase) & 3;
        p
    }

    /// Symplectic vector as a bit list `(x_0..x_{n-1}, z_0..z_{n-1})`, used for ordering.
    pub fn symplectic_key(&self) -> (Vec<u64>, Vec<u64>) {
        (self.x.clone(), self.z.clone())
    }

    /// Dense `2^n x 2^n` matrix, row-major. Only for small `n`.
    pub fn to_matrix(&self) -> Vec<Complex64> {
        assert!(self.n <= 12, "dense Pauli matrix too large");
        let dim = 1usize << self.n;
        let (x, z) = (self.x_mask() as usize, self.z_mask() as usize);
        let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
        for col in 0..dim {
            let sign = if (z & col).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            let row = col ^ x;
            m[row * dim + col] = times_i_pow(Complex64::new(sign, 0.0), self.phase);
        }
        m
    }
}

/// Product `p * q` with exact phase tracking.
pub fn pauli_mul(p: &PauliString, q: &PauliString) -> Result<PauliString> {
    check_dims(p.n, q.n)?;
    // Z^{z1} X^{x2} = (-1)^{z1.x2} X^{x2} Z^{z1}
    let swaps = popcount_and(&p.z, &q.x);
    let phase = ((p.phase as u32 + q.phase as u32 + 2 * swaps) % 4) as u8;
    Ok(PauliString {
        n: p.n,
        x: p.x.iter().zip(&q.x).map(|(a, b)| a ^ b).collect(),
        z: p.z.iter().zip(&q.z).map(|(a, b)| a ^ b).collect(),
        phase,
    })
}

/// Symplectic inner product: 0 when the strings commute, 1 when they anticommute.
pub fn commutes(p: &PauliString, q: &PauliString) -> Result<u8> {
    check_dims(p.n, q.n)?;
    Ok(symplectic_product(p, q))
}

#[inline]
pub(crate) fn symplectic_product(p: &PauliString, q: &PauliString) -> u8 {
    ((popcount_and(&p.x, &q.z) + popcount_and(&p.z, &q.x)) % 2) as u8
}

/// Applies `p` to a dense state in `O(2^n)`.
pub fn apply_pauli(state: &DenseState, p: &PauliString) -> Result<DenseState> {
    check_dims(state.num_qubits(), p.n)?;
    let x = p.x_mask() as usize;
    let z = p.z_mask() as usize;
    let amps = state.amplitudes();
    let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
    for (j, &a) in amps.iter().enumerate() {
        let v = if (z & j).count_ones() % 2 == 1 { -a } else { a };
        out[j ^ x] = times_i_pow(v, p.phase);
    }
    Ok(DenseState::from_raw(p.n, out))
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign_phase() {
            0 => {}
            1 => f.write_str("+i")?,
            2 => f.write_str("-")?,
            _ => f.write_str("-i")?,
        }
        for q in 0..self.n {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (sign, body) = if let Some(rest) = s.strip_prefix("+i") {
            (1u8, rest)
        } else if let Some(rest) = s.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = s.strip_prefix('+') {
            (0, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest)
        } else {
            (0, s)
        };
        let n = body.chars().count();
        let mut p = PauliString::identity(n);
        for (q, c) in body.chars().enumerate() {
            match c {
                'I' => {}
                'X' => p.set_x(q, true),
                'Z' => p.set_z(q, true),
                'Y' => {
                    p.set_x(q, true);
                    p.set_z(q, true);
                }
                other => {
                    return Err(Error::Parse {
                        what: "Pauli string",
                        reason: format!("unexpected character {other:?} in {s:?}"),
                    })
                }
            }
        }
        p.phase = ((p.y_count() + sign as u32) % 4) as u8;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn matmul(a: &[Complex64], b: &[Complex64], dim: usize) -> Vec<Complex64> {
        let mut c = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = a[i * dim + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..dim {
                    c[i * dim + j] += aik * b[k * dim + j];
                }
            }
        }
        c
    }

    fn all_paulis(n: usize) -> Vec<PauliString> {
        let mut out = Vec::new();
        for x in 0..(1u64 << n) {
            for z in 0..(1u64 << n) {
                for neg in [false, true] {
                    out.push(PauliString::from_masks(n, x, z, neg));
                }
            }
        }
        out
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        let r = pauli_mul(&ps("X"), &ps("Z")).unwrap();
        assert_eq!(r, ps("-iY"));
        assert_eq!(r.phase(), 0);
        assert_eq!(r.sign_phase(), 3);
        assert_eq!(r.to_string(), "-iY");
    }

    #[test]
    fn hermitian_strings_square_to_identity() {
        for p in all_paulis(2) {
            let sq = pauli_mul(&p, &p).unwrap();
            assert_eq!(sq, PauliString::identity(2), "{p}");
        }
    }

    #[test]
    fn xx_times_zz_is_minus_yy() {
        let r = pauli_mul(&ps("XX"), &ps("ZZ")).unwrap();
        assert_eq!(r, ps("-YY"));
        let dense = matmul(&ps("XX").to_matrix(), &ps("ZZ").to_matrix(), 4);
        assert_eq!(dense, ps("-YY").to_matrix());
    }

    #[test]
    fn product_matches_dense_matrices_up_to_three_qubits() {
        for n in 1..=3 {
            let dim = 1 << n;
            let all: Vec<_> = all_paulis(n).into_iter().step_by(2).collect();
            for p in &all {
                let mp = p.to_matrix();
                for q in &all {
                    let r = pauli_mul(p, q).unwrap();
                    assert_eq!(matmul(&mp, &q.to_matrix(), dim), r.to_matrix());
                }
            }
        }
    }

    #[test]
    fn commutation_matches_dense_commutator() {
        for n in 1..=2 {
            let dim = 1 << n;
            let all: Vec<_> = all_paulis(n).into_iter().step_by(2).collect();
            for p in &all {
                for q in &all {
                    let pq = matmul(&p.to_matrix(), &q.to_matrix(), dim);
                    let qp = matmul(&q.to_matrix(), &p.to_matrix(), dim);
                    let expect = if pq == qp { 0 } else { 1 };
                    assert_eq!(commutes(p, q).unwrap(), expect, "{p} {q}");
                }
            }
        }
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(commutes(&ps("X"), &ps("Z")).unwrap(), 1);
        assert_eq!(commutes(&ps("XX"), &ps("ZZ")).unwrap(), 0);
        for q in all_paulis(2) {
            assert_eq!(commutes(&ps("II"), &q).unwrap(), 0);
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            pauli_mul(&ps("X"), &ps("XX")),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(commutes(&ps("X"), &ps("XX")).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["IXYZ", "-XYYXX", "+iZ", "-iYY", "I", ""] {
            assert_eq!(ps(s).to_string(), s);
        }
        assert_eq!(ps("+XZ").to_string(), "XZ");
        assert!("XQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn apply_examples() {
        let zero = DenseState::zero(1);
        let one = apply_pauli(&zero, &ps("X")).unwrap();
        assert_eq!(one.amplitudes()[1], Complex64::new(1.0, 0.0));

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = DenseState::new(1, vec![Complex64::new(h, 0.0); 2]).unwrap();
        let minus = apply_pauli(&plus, &ps("Z")).unwrap();
        assert_eq!(minus.amplitudes()[1], Complex64::new(-h, 0.0));

        let bell = DenseState::new(
            2,
            vec![
                Complex64::new(h, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(h, 0.0),
            ],
        )
        .unwrap();
        assert_eq!(apply_pauli(&bell, &ps("XX")).unwrap(), bell);
    }

    #[test]
    fn apply_matches_matrix_action() {
        let amps: Vec<Complex64> = (0..8)
            .map(|k| Complex64::new((k as f64 * 0.7).cos(), (k as f64 * 1.3).sin()))
            .collect();
        let state = DenseState::from_raw(3, amps.clone());
        for p in all_paulis(3).into_iter().step_by(3) {
            let m = p.to_matrix();
            let out = apply_pauli(&state, &p).unwrap();
            for r in 0..8 {
                let want: Complex64 = (0..8).map(|c| m[r * 8 + c] * amps[c]).sum();
                assert!((out.amplitudes()[r] - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn restrict_and_embed() {
        let p = ps("-XYZI");
        assert_eq!(p.restrict(&[1, 2]).to_string(), "YZ");
        let e = ps("YZ").embed(&[3, 0], 4).unwrap();
        assert_eq!(e.to_string(), "ZIIY");
        assert_eq!(ps("X").tensor(&ps("-Y")).to_string(), "-XY");
    }
}
