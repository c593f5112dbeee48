//! Magic measures of states and unitaries.

mod coset_y;
mod spectrum;
mod state;
mod unitary;

pub use coset_y::coset_reduced_y;
pub use spectrum::{operator_coefficients, pauli_spectrum, PauliSpectrum};
pub use state::{
    m_alpha, m_from_y, magic_report, state_magic, y_lin, y_lin_alpha, Alpha, MagicReport, UNIT_TOL, ZERO_THRESHOLD,
};
pub use unitary::{
    t_count_bounds, unitary_nullity, unitary_sre, unitary_sre_literal, BoundReport, CHOI_TOL, NULLITY_TOL,
};
