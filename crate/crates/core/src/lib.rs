//! Stabilizer Rényi entropies and Haar-averaged magic of partially injected stabilizer states.
//!
//! Modules, bottom up: [`pauli`] strings, [`stabilizer`] groups and Clifford sampling,
//! [`dense`] statevectors and unitaries, [`measures`] of magic, closed-form [`theory`]
//! and the Monte Carlo [`harness`].

pub mod dense;
pub mod error;
pub mod harness;
pub mod limits;
pub mod measures;
pub mod pauli;
pub mod rng;
pub mod stabilizer;
pub mod theory;

pub use error::{Error, Result};
pub use limits::Limits;
pub use pauli::{apply_pauli, commutes, pauli_mul, PauliString};
