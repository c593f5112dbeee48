//! Stabilizer groups in the binary symplectic picture.

mod clifford;
mod coset;
mod echelon;
mod group;
mod normal;

pub use clifford::{conjugate_dense, random_clifford, random_clifford_unitary, random_clifford_with, Clifford};
pub use coset::{coset_decompose, Coset, CosetDecomposition};
pub use group::{group_to_state, StabilizerGroup};
pub use normal::{
    build_normal_state, ghz_group, BipartiteShape, Filler, NamedState, NormalForm, Shape, TripartiteShape,
};
