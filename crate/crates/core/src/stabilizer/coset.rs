//! Decomposition of a pure stabilizer group into cosets of `S_A ⊗ S_B`.

use super::echelon::{reduce_against, rref, standard_order, Col};
use super::group::{check_region, StabilizerGroup};
use crate::error::{Error, Result};
use crate::pauli::{pauli_mul, symplectic_product, PauliString};

/// `S = union_k (a_k S_A) ⊗ (b_k S_B)` over `4^E` cosets.
///
/// `logicals` holds `2E` group elements whose products enumerate the coset
/// representatives; they come in symplectic pairs, so element `2i` anticommutes
/// (on A, and equally on B) with element `2i + 1` and commutes with the rest.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    n: usize,
    region_a: Vec<usize>,
    region_b: Vec<usize>,
    s_a: StabilizerGroup,
    s_b: StabilizerGroup,
    local: StabilizerGroup,
    logicals: Vec<PauliString>,
    entanglement: usize,
}

/// One coset `rep · (S_A ⊗ S_B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub index: usize,
    /// Lexicographically smallest symplectic vector in the coset, with its group sign.
    pub representative: PauliString,
}

/// Decomposes a pure group across the cut `cut_a | rest`.
pub fn coset_decompose(group: &StabilizerGroup, cut_a: &[usize]) -> Result<CosetDecomposition> {
    let n = group.num_qubits();
    if !group.is_pure() {
        return Err(Error::Unsupported("coset decomposition needs a pure group".into()));
    }
    check_region(cut_a, n)?;
    let region_a = cut_a.to_vec();
    let region_b: Vec<usize> = (0..n).filter(|q| !cut_a.contains(q)).collect();
    let full_a = group.subgroup_supported_on(&region_a)?;
    let full_b = group.subgroup_supported_on(&region_b)?;
    let entanglement = region_a.len() - full_a.dim();
    if region_b.len() - full_b.dim() != entanglement {
        return Err(Error::Inconsistent(
            "subsystem stabilizer dimensions disagree on the entanglement".into(),
        ));
    }

    let mut local_gens: Vec<PauliString> = full_a.generators().to_vec();
    local_gens.extend(full_b.generators().iter().cloned());
    let order = standard_order(n);

    // Extend S_A x S_B to the whole group greedily.
    let mut basis = rref(local_gens.clone(), &order);
    let mut extras = Vec::new();
    for g in group.generators() {
        let residual = reduce_against(g, &basis.rows, &basis.pivots, &order);
        if !residual.is_identity_up_to_phase() {
            extras.push(g.clone());
            let mut rows = basis.rows.clone();
            rows.push(g.clone());
            basis = rref(rows, &order);
        }
    }
    if extras.len() != 2 * entanglement {
        return Err(Error::Inconsistent(format!(
            "found {} logical generators for entanglement {entanglement}",
            extras.len()
        )));
    }
    let logicals = symplectic_pairs(extras, &region_a)?;

    let restrict_signed = |g: &PauliString, region: &[usize]| {
        let r = g.restrict(region);
        if g.is_negative() {
            r.negated()
        } else {
            r
        }
    };
    let s_a = StabilizerGroup::from_trusted(
        region_a.len(),
        full_a.generators().iter().map(|g| restrict_signed(g, &region_a)).collect(),
    );
    let s_b = StabilizerGroup::from_trusted(
        region_b.len(),
        full_b.generators().iter().map(|g| restrict_signed(g, &region_b)).collect(),
    );
    Ok(CosetDecomposition {
        n,
        region_a,
        region_b,
        s_a,
        s_b,
        local: StabilizerGroup::from_trusted(n, local_gens),
        logicals,
        entanglement,
    })
}

/// Symplectic Gram-Schmidt on the A-restrictions, multiplying whole group elements.
fn symplectic_pairs(mut pool: Vec<PauliString>, region_a: &[usize]) -> Result<Vec<PauliString>> {
    let form = |p: &PauliString, q: &PauliString| symplectic_product(&p.restrict(region_a), &q.restrict(region_a));
    let mut out = Vec::with_capacity(pool.len());
    while !pool.is_empty() {
        let u = pool.remove(0);
        let Some(j) = pool.iter().position(|w| form(&u, w) == 1) else {
            return Err(Error::Inconsistent(
                "logical operators on A are degenerate".into(),
            ));
        };
        let v = pool.remove(j);
        for w in pool.iter_mut() {
            let with_v = form(w, &v);
            let with_u = form(w, &u);
            if with_v == 1 {
                *w = pauli_mul(w, &u)?;
            }
            if with_u == 1 {
                *w = pauli_mul(w, &v)?;
            }
        }
        out.push(u);
        out.push(v);
    }
    Ok(out)
}

impl CosetDecomposition {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn region_a(&self) -> &[usize] {
        &self.region_a
    }

    pub fn region_b(&self) -> &[usize] {
        &self.region_b
    }

    /// Stabilizer entanglement `E` in bits.
    pub fn entanglement(&self) -> usize {
        self.entanglement
    }

    /// `S_A` on `|A|` qubits (qubit `region_a[t]` becomes `t`).
    pub fn s_a(&self) -> &StabilizerGroup {
        &self.s_a
    }

    pub fn s_b(&self) -> &StabilizerGroup {
        &self.s_b
    }

    /// `S_A ⊗ S_B` on the full register.
    pub fn local_subgroup(&self) -> &StabilizerGroup {
        &self.local
    }

    /// The `2E` logical generators as full-register group elements.
    pub fn logical_generators(&self) -> &[PauliString] {
        &self.logicals
    }

    /// Logical generators split as `(a_i, b_i)`; `a_i` carries the sign so that
    /// `a_i ⊗ b_i` is the group element.
    pub fn logical_pairs(&self) -> Vec<(PauliString, PauliString)> {
        self.logicals.iter().map(|l| self.split(l)).collect()
    }

    fn split(&self, p: &PauliString) -> (PauliString, PauliString) {
        let a = p.restrict(&self.region_a);
        let b = p.restrict(&self.region_b);
        if p.is_negative() {
            (a.negated(), b)
        } else {
            (a, b)
        }
    }

    pub fn num_cosets(&self) -> usize {
        1 << (2 * self.entanglement)
    }

    /// Product of the logical generators selected by the bits of `k`.
    pub fn raw_representative(&self, k: usize) -> PauliString {
        let mut rep = PauliString::identity(self.n);
        for (bit, l) in self.logicals.iter().enumerate() {
            if k >> bit & 1 == 1 {
                rep = pauli_mul(&rep, l).expect("same size");
            }
        }
        rep
    }

    /// Coset `k` with its lexicographically minimal representative.
    pub fn coset(&self, k: usize) -> Coset {
        let order: Vec<Col> = standard_order(self.n);
        let reduced = rref(self.local.generators().to_vec(), &order);
        let rep = reduce_against(&self.raw_representative(k), &reduced.rows, &reduced.pivots, &order);
        Coset {
            index: k,
            representative: rep,
        }
    }

    pub fn cosets(&self) -> Vec<Coset> {
        (0..self.num_cosets()).map(|k| self.coset(k)).collect()
    }

    /// `(a_k, b_k)` of coset `k`, split from its canonical representative.
    pub fn coset_pair(&self, k: usize) -> (PauliString, PauliString) {
        self.split(&self.coset(k).representative)
    }

    /// All `2^{|A|+|B|-2E}` elements of coset `k`.
    pub fn coset_elements(&self, k: usize) -> Vec<PauliString> {
        let rep = self.coset(k).representative;
        self.local
            .elements()
            .iter()
            .map(|s| pauli_mul(&rep, s).expect("same size"))
            .collect()
    }
}
