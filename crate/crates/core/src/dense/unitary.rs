use std::f64::consts::FRAC_PI_4;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;

const UNITARY_TOL: f64 = 1e-9;

/// A `2^m x 2^m` unitary. Local qubit `t` is bit `t` of the row/column index.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    m: usize,
    matrix: DMatrix<Complex64>,
}

impl DenseUnitary {
    /// Checks the shape and `U^dagger U = I` (max-entry deviation at most 1e-9).
    pub fn new(m: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        limits::check_dense("dense unitary", m)?;
        let dim = 1usize << m;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        let u = DenseUnitary { m, matrix };
        let dev = u.unitarity_deviation();
        if dev > UNITARY_TOL {
            return Err(Error::InvalidArgument(format!(
                "matrix is not unitary (max |U^dag U - I| = {dev:.3e})"
            )));
        }
        Ok(u)
    }

    pub(crate) fn from_matrix_unchecked(m: usize, matrix: DMatrix<Complex64>) -> Self {
        DenseUnitary { m, matrix }
    }

    pub fn identity(m: usize) -> Self {
        let dim = 1 << m;
        DenseUnitary {
            m,
            matrix: DMatrix::identity(dim, dim),
        }
    }

    /// Diagonal unitary from phases `e^{i phi_k}`.
    pub fn diagonal(m: usize, phases: &[f64]) -> Result<Self> {
        let dim = 1usize << m;
        if phases.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: phases.len(),
            });
        }
        let mut matrix = DMatrix::zeros(dim, dim);
        for (k, &phi) in phases.iter().enumerate() {
            matrix[(k, k)] = Complex64::from_polar(1.0, phi);
        }
        Ok(DenseUnitary { m, matrix })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        1 << self.m
    }

    #[inline]
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn adjoint(&self) -> DenseUnitary {
        DenseUnitary {
            m: self.m,
            matrix: self.matrix.adjoint(),
        }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &DenseUnitary) -> Result<DenseUnitary> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(DenseUnitary {
            m: self.m,
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// `self ⊗ other` with `self` on the low qubits.
    pub fn tensor(&self, other: &DenseUnitary) -> Result<DenseUnitary> {
        let m = self.m + other.m;
        limits::check_dense("dense unitary", m)?;
        let (da, db) = (self.dim(), other.dim());
        let matrix = DMatrix::from_fn(da * db, da * db, |r, c| {
            self.matrix[(r % da, c % da)] * other.matrix[(r / da, c / da)]
        });
        Ok(DenseUnitary { m, matrix })
    }

    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let dim = self.dim();
        let mut worst = 0.0f64;
        for r in 0..dim {
            for c in 0..dim {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((prod[(r, c)] - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Loads `{"m": int, "re": [[...]], "im": [[...]]}` (row-major).
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let file: UnitaryFile = serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
        file.into_unitary()
    }

    pub fn to_json_file(&self, path: &Path) -> Result<()> {
        let file = UnitaryFile::from(self);
        let text = serde_json::to_string_pretty(&file).expect("unitary file serializes");
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// On-disk form of a unitary.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnitaryFile {
    pub m: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl UnitaryFile {
    pub fn into_unitary(self) -> Result<DenseUnitary> {
        let dim = 1usize << self.m;
        let rows_ok = |rows: &Vec<Vec<f64>>| rows.len() == dim && rows.iter().all(|r| r.len() == dim);
        if !rows_ok(&self.re) || !rows_ok(&self.im) {
            return Err(Error::Parse {
                what: "unitary file",
                reason: format!("expected {dim}x{dim} arrays for m = {}", self.m),
            });
        }
        let matrix = DMatrix::from_fn(dim, dim, |r, c| Complex64::new(self.re[r][c], self.im[r][c]));
        DenseUnitary::new(self.m, matrix)
    }
}

impl From<&DenseUnitary> for UnitaryFile {
    fn from(u: &DenseUnitary) -> Self {
        let dim = u.dim();
        UnitaryFile {
            m: u.m,
            re: (0..dim).map(|r| (0..dim).map(|c| u.matrix[(r, c)].re).collect()).collect(),
            im: (0..dim).map(|r| (0..dim).map(|c| u.matrix[(r, c)].im).collect()).collect(),
        }
    }
}

/// Built-in gates: `T`, `S`, `H`, `X`, `Z`, `CNOT`, `CZ`, `CS`, `CCZ`, `Tn:<n>`.
pub fn named_gate(name: &str) -> Result<DenseUnitary> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let from_rows = |m: usize, rows: &[&[Complex64]]| {
        let dim = 1 << m;
        DenseUnitary::from_matrix_unchecked(m, DMatrix::from_fn(dim, dim, |r, k| rows[r][k]))
    };
    let gate = match name {
        "T" => DenseUnitary::diagonal(1, &[0.0, FRAC_PI_4])?,
        "S" => DenseUnitary::diagonal(1, &[0.0, 2.0 * FRAC_PI_4])?,
        "Z" => DenseUnitary::diagonal(1, &[0.0, 4.0 * FRAC_PI_4])?,
        "H" => from_rows(1, &[&[c(h, 0.0), c(h, 0.0)], &[c(h, 0.0), c(-h, 0.0)]]),
        "X" => from_rows(1, &[&[c(0.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]]),
        "CZ" => DenseUnitary::diagonal(2, &[0.0, 0.0, 0.0, 4.0 * FRAC_PI_4])?,
        "CS" => DenseUnitary::diagonal(2, &[0.0, 0.0, 0.0, 2.0 * FRAC_PI_4])?,
        "CCZ" => {
            let mut phases = [0.0; 8];
            phases[7] = std::f64::consts::PI;
            DenseUnitary::diagonal(3, &phases)?
        }
        "CNOT" => {
            // control qubit 0, target qubit 1
            let dim = 4;
            let matrix = DMatrix::from_fn(dim, dim, |r, k| {
                let image = if k & 1 == 1 { k ^ 2 } else { k };
                if r == image {
                    c(1.0, 0.0)
                } else {
                    c(0.0, 0.0)
                }
            });
            DenseUnitary::from_matrix_unchecked(2, matrix)
        }
        other => {
            if let Some(count) = other.strip_prefix("Tn:") {
                let n: usize = count.parse().map_err(|_| Error::Parse {
                    what: "gate name",
                    reason: format!("bad qubit count in {other:?}"),
                })?;
                if n == 0 {
                    return Err(Error::InvalidArgument("Tn needs at least one qubit".into()));
                }
                limits::check_dense("dense unitary", n)?;
                let phases: Vec<f64> = (0..1usize << n)
                    .map(|k| k.count_ones() as f64 * FRAC_PI_4)
                    .collect();
                DenseUnitary::diagonal(n, &phases)?
            } else {
                return Err(Error::Parse {
                    what: "gate name",
                    reason: format!("unknown gate {other:?}"),
                });
            }
        }
    };
    Ok(gate)
}
