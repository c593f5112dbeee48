//! Process-wide size caps for dense objects.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_DENSE_QUBITS: usize = 14;
pub const DEFAULT_SPECTRUM_QUBITS: usize = 12;

static DENSE_QUBITS: AtomicUsize = AtomicUsize::new(DEFAULT_DENSE_QUBITS);
static SPECTRUM_QUBITS: AtomicUsize = AtomicUsize::new(DEFAULT_SPECTRUM_QUBITS);

/// Caps on the number of qubits of dense states/unitaries and of full Pauli spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub dense_qubits: usize,
    pub spectrum_qubits: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dense_qubits: DEFAULT_DENSE_QUBITS,
            spectrum_qubits: DEFAULT_SPECTRUM_QUBITS,
        }
    }
}

impl Limits {
    pub fn current() -> Self {
        Limits {
            dense_qubits: DENSE_QUBITS.load(Ordering::Relaxed),
            spectrum_qubits: SPECTRUM_QUBITS.load(Ordering::Relaxed),
        }
    }

    /// Makes these caps the process-wide ones.
    pub fn install(self) {
        DENSE_QUBITS.store(self.dense_qubits, Ordering::Relaxed);
        SPECTRUM_QUBITS.store(self.spectrum_qubits, Ordering::Relaxed);
    }
}

pub(crate) fn check_dense(what: &'static str, qubits: usize) -> Result<()> {
    let cap = DENSE_QUBITS.load(Ordering::Relaxed);
    if qubits > cap {
        return Err(Error::ResourceCap {
            what,
            requested: qubits,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn check_spectrum(what: &'static str, qubits: usize) -> Result<()> {
    let cap = SPECTRUM_QUBITS.load(Ordering::Relaxed);
    if qubits > cap {
        return Err(Error::ResourceCap {
            what,
            requested: qubits,
            cap,
        });
    }
    Ok(())
}
