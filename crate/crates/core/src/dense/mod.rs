//! Exact statevector and unitary arithmetic for small registers.

mod haar;
mod ops;
mod state;
mod unitary;

pub use haar::{haar_unitary, haar_unitary_with};
pub use ops::{
    apply_on_qubits, brickwork_apply, brickwork_apply_with, brickwork_layout, build_nonstab_state,
    choi_state, LambdaLaw, NonStabKind,
};
pub(crate) use ops::apply_in_place;
pub use state::DenseState;
pub use unitary::{named_gate, DenseUnitary, UnitaryFile};
