//! Property tests for Pauli algebra, stabilizer groups and coset decompositions.

mod common;

use std::collections::HashSet;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use stabmagic::dense::{apply_on_qubits, haar_unitary, named_gate, DenseState};
use stabmagic::measures::{m_alpha, pauli_spectrum, y_lin, Alpha};
use stabmagic::stabilizer::{coset_decompose, random_clifford};
use stabmagic::{apply_pauli, commutes, pauli_mul, PauliString};

use common::random_group;

fn pauli(n: usize) -> impl Strategy<Value = PauliString> {
    let top = 1u64 << n;
    (0..top, 0..top, 0u8..4).prop_map(move |(x, z, ph)| PauliString::from_bits(n, vec![x], vec![z], ph).unwrap())
}

fn triple(max_n: usize) -> impl Strategy<Value = (PauliString, PauliString, PauliString)> {
    (1..=max_n).prop_flat_map(|n| (pauli(n), pauli(n), pauli(n)))
}

fn matrix(p: &PauliString) -> DMatrix<Complex64> {
    let d = 1 << p.num_qubits();
    DMatrix::from_row_slice(d, d, &p.to_matrix())
}

fn random_state(n: usize, seed: u64) -> DenseState {
    let u = haar_unitary(n, seed).unwrap();
    apply_on_qubits(&DenseState::zero(n), &u, &(0..n).collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative((p, q, r) in triple(8)) {
        let left = pauli_mul(&pauli_mul(&p, &q).unwrap(), &r).unwrap();
        let right = pauli_mul(&p, &pauli_mul(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_matches_matrices((p, q, _) in triple(3)) {
        let prod = matrix(&pauli_mul(&p, &q).unwrap());
        let dense = matrix(&p) * matrix(&q);
        prop_assert!((prod - dense).norm() < 1e-12);
    }

    #[test]
    fn commutation_is_symmetric_and_exact((p, q, _) in triple(8)) {
        let c = commutes(&p, &q).unwrap();
        prop_assert_eq!(c, commutes(&q, &p).unwrap());
        let pq = pauli_mul(&p, &q).unwrap();
        let qp = pauli_mul(&q, &p).unwrap();
        prop_assert_eq!(c == 0, pq == qp);
        if c == 1 {
            prop_assert_eq!(pq, qp.negated());
        }
    }

    #[test]
    fn hermitian_pauli_applied_twice_is_identity(p in (1usize..=5).prop_flat_map(pauli), seed in 0u64..1000) {
        let p = p.unsigned();
        prop_assume!(p.is_hermitian());
        let s = random_state(p.num_qubits(), seed);
        let back = apply_pauli(&apply_pauli(&s, &p).unwrap(), &p).unwrap();
        prop_assert!(back.approx_eq_up_to_phase(&s, 1e-12));
        let diff: f64 = back.amplitudes().iter().zip(s.amplitudes()).map(|(a, b)| (a - b).norm()).sum();
        prop_assert!(diff < 1e-12);
    }

    #[test]
    fn text_round_trip(p in (1usize..=8).prop_flat_map(pauli)) {
        let p = p.unsigned();
        prop_assume!(p.is_hermitian());
        let q: PauliString = p.to_string().parse().unwrap();
        prop_assert_eq!(q, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cosets_tile_the_group(n in 2usize..=8, seed in any::<u64>(), cut_bits in any::<u64>()) {
        let g = random_group(n, seed);
        let mut a: Vec<usize> = (0..n).filter(|q| cut_bits >> q & 1 == 1).collect();
        if a.is_empty() || a.len() == n {
            a = vec![0];
        }
        let d = coset_decompose(&g, &a).unwrap();
        prop_assert_eq!(d.entanglement(), g.entanglement_entropy(&a).unwrap());
        prop_assert_eq!(d.num_cosets(), 1 << (2 * d.entanglement()));
        let mut seen = HashSet::new();
        for k in 0..d.num_cosets() {
            let elems = d.coset_elements(k);
            prop_assert_eq!(elems.len(), (1 << n) >> (2 * d.entanglement()));
            for e in elems {
                prop_assert!(g.contains(&e));
                prop_assert!(seen.insert(e), "cosets overlap");
            }
        }
        prop_assert_eq!(seen.len(), 1 << n);
    }

    #[test]
    fn logical_pairs_commute_alike(n in 2usize..=8, seed in any::<u64>(), split in 1usize..8) {
        let a: Vec<usize> = (0..split.min(n - 1)).collect();
        let d = coset_decompose(&random_group(n, seed), &a).unwrap();
        let pairs = d.logical_pairs();
        for (ai, bi) in &pairs {
            for (aj, bj) in &pairs {
                prop_assert_eq!(commutes(ai, aj).unwrap(), commutes(bi, bj).unwrap());
            }
        }
    }

    #[test]
    fn stabilizer_entropy_matches_dense(n in 2usize..=8, seed in any::<u64>(), split in 1usize..8) {
        let g = random_group(n, seed);
        let a: Vec<usize> = (0..split.min(n - 1)).collect();
        let dense = g.to_state().unwrap().entanglement_entropy(&a).unwrap();
        prop_assert!((dense - g.entanglement_entropy(&a).unwrap() as f64).abs() < 1e-9);
    }

    #[test]
    fn magic_is_clifford_invariant(n in 1usize..=5, seed in any::<u64>(), t_mask in any::<u8>()) {
        // a random stabilizer state with T gates on some qubits, or a Haar state
        let mut s = random_group(n, seed).to_state().unwrap();
        let t = named_gate("T").unwrap();
        for q in (0..n).filter(|q| t_mask >> q & 1 == 1) {
            s = apply_on_qubits(&s, &t, &[q]).unwrap();
        }
        if t_mask & 0x80 != 0 {
            s = random_state(n, seed);
        }
        let c = random_clifford(n, seed ^ 0x5eed).to_unitary().unwrap();
        let moved = apply_on_qubits(&s, &c, &(0..n).collect::<Vec<_>>()).unwrap();
        let (before, after) = (pauli_spectrum(&s).unwrap(), pauli_spectrum(&moved).unwrap());
        prop_assert!((y_lin(&before) - y_lin(&after)).abs() < 1e-9);
        let (m0, m1) = (m_alpha(&before, Alpha::Finite(2)), m_alpha(&after, Alpha::Finite(2)));
        prop_assert!((m0 - m1).abs() < 1e-9);
    }
}

#[test]
fn commutation_agrees_with_dense_commutator_exhaustively() {
    for n in 1..=2 {
        let all = common::all_paulis(n);
        for p in &all {
            for q in &all {
                let (mp, mq) = (matrix(p), matrix(q));
                let commute = (&mp * &mq - &mq * &mp).norm() < 1e-12;
                assert_eq!(commutes(p, q).unwrap() == 0, commute, "{p} {q}");
            }
        }
    }
}
