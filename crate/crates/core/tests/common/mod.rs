#![allow(dead_code)]

use stabmagic::stabilizer::{random_clifford, StabilizerGroup};
use stabmagic::PauliString;

/// `<Z_0, ..., Z_{n-1}>`.
pub fn zero_group(n: usize) -> StabilizerGroup {
    let gens = (0..n).map(|q| PauliString::single(n, q, 'Z').unwrap()).collect();
    StabilizerGroup::new(n, gens).unwrap()
}

/// A uniformly random stabilizer group on `n` qubits.
pub fn random_group(n: usize, seed: u64) -> StabilizerGroup {
    random_clifford(n, seed).conjugate_group(&zero_group(n)).unwrap()
}

pub fn all_paulis(n: usize) -> Vec<PauliString> {
    let d = 1u64 << n;
    (0..d)
        .flat_map(|x| (0..d).map(move |z| PauliString::from_masks(n, x, z, false)))
        .collect()
}
