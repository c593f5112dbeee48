use std::fmt;

use num_complex::Complex64;

use super::echelon::{order_with_first, reduce_against, rref, standard_order};
use crate::dense::DenseState;
use crate::error::{Error, Result};
use crate::limits;
use crate::pauli::{apply_pauli, pauli_mul, symplectic_product, PauliString};

/// An abelian Pauli subgroup given by independent, commuting, Hermitian generators
/// that do not generate `-I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliString>,
}

impl StabilizerGroup {
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        if generators.len() > n {
            return Err(Error::InvalidGroup(format!(
                "{} generators on {n} qubits cannot be independent",
                generators.len()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.num_qubits() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
            if !g.is_hermitian() {
                return Err(Error::InvalidGroup(format!("generator {g} is not Hermitian")));
            }
            for h in &generators[..i] {
                if symplectic_product(g, h) == 1 {
                    return Err(Error::InvalidGroup(format!("generators {h} and {g} anticommute")));
                }
            }
        }
        let reduced = rref(generators.clone(), &standard_order(n));
        if let Some(z) = reduced.zero_rows.first() {
            let what = if z.is_negative() {
                "the generators produce -I"
            } else {
                "the generators are dependent"
            };
            return Err(Error::InvalidGroup(what.into()));
        }
        Ok(StabilizerGroup { n, generators })
    }

    /// Parses one generator per line; blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let gens: Vec<PauliString> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        let n = gens.first().map(PauliString::num_qubits).ok_or_else(|| Error::Parse {
            what: "stabilizer group",
            reason: "no generators".into(),
        })?;
        StabilizerGroup::new(n, gens)
    }

    pub(crate) fn from_trusted(n: usize, generators: Vec<PauliString>) -> Self {
        StabilizerGroup { n, generators }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Number of independent generators (log2 of the group order).
    #[inline]
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn is_pure(&self) -> bool {
        self.generators.len() == self.n
    }

    /// Reduced row-echelon generators of the same group. Idempotent.
    pub fn canonicalize(&self) -> StabilizerGroup {
        let reduced = rref(self.generators.clone(), &standard_order(self.n));
        StabilizerGroup {
            n: self.n,
            generators: reduced.rows,
        }
    }

    /// Every element of the group, indexed by generator subsets.
    pub fn elements(&self) -> Vec<PauliString> {
        let mut out = Vec::with_capacity(1 << self.dim());
        out.push(PauliString::identity(self.n));
        for g in &self.generators {
            let len = out.len();
            for i in 0..len {
                let e = pauli_mul(&out[i], g).expect("same size");
                out.push(e);
            }
        }
        out
    }

    /// True when `p` (including its sign) belongs to the group.
    pub fn contains(&self, p: &PauliString) -> bool {
        if p.num_qubits() != self.n {
            return false;
        }
        let order = standard_order(self.n);
        let reduced = rref(self.generators.clone(), &order);
        let residual = reduce_against(p, &reduced.rows, &reduced.pivots, &order);
        residual == PauliString::identity(self.n)
    }

    /// Elements supported entirely on `region`, as a group on the full register.
    pub fn subgroup_supported_on(&self, region: &[usize]) -> Result<StabilizerGroup> {
        check_region(region, self.n)?;
        let outside: Vec<usize> = (0..self.n).filter(|q| !region.contains(q)).collect();
        let order = order_with_first(self.n, &outside);
        let reduced = rref(self.generators.clone(), &order);
        let boundary = 2 * outside.len();
        let gens = reduced
            .rows
            .into_iter()
            .zip(reduced.pivots)
            .filter(|&(_, p)| p >= boundary)
            .map(|(r, _)| r)
            .collect();
        Ok(StabilizerGroup {
            n: self.n,
            generators: gens,
        })
    }

    /// The subgroup on `region`, restricted to `region.len()` qubits (qubit `region[t]` becomes `t`).
    pub fn restricted_to(&self, region: &[usize]) -> Result<StabilizerGroup> {
        let sub = self.subgroup_supported_on(region)?;
        let gens = sub
            .generators
            .iter()
            .map(|g| {
                let r = g.restrict(region);
                if g.is_negative() {
                    r.negated()
                } else {
                    r
                }
            })
            .collect();
        Ok(StabilizerGroup {
            n: region.len(),
            generators: gens,
        })
    }

    /// Stabilizer entanglement (bits) between `cut` and its complement.
    pub fn entanglement_entropy(&self, cut: &[usize]) -> Result<usize> {
        if !self.is_pure() {
            return Err(Error::Unsupported(
                "entanglement entropy needs a pure stabilizer group".into(),
            ));
        }
        if cut.is_empty() {
            return Ok(0);
        }
        let sub = self.subgroup_supported_on(cut)?;
        Ok(cut.len() - sub.dim())
    }

    /// The unique state stabilized by a pure group.
    ///
    /// The amplitude at the lowest basis index found by solving the Z-type
    /// constraints is made real and positive.
    pub fn to_state(&self) -> Result<DenseState> {
        group_to_state(self)
    }
}

/// Dense state `|psi>` with `g|psi> = |psi>` for every element `g` of a pure group.
pub fn group_to_state(group: &StabilizerGroup) -> Result<DenseState> {
    if !group.is_pure() {
        return Err(Error::Unsupported(
            "a mixed stabilizer group does not fix a single state".into(),
        ));
    }
    let n = group.n;
    limits::check_dense("stabilizer state", n)?;
    // X columns first: rows without X bits are Z-type constraints on the support.
    let order = standard_order(n);
    let reduced = rref(group.generators.clone(), &order);
    let mut start = 0usize;
    for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
        if p >= n && row.is_negative() {
            start |= 1 << order[p].qubit;
        }
    }
    let mut state = DenseState::basis(n, start);
    for g in &group.generators {
        let flipped = apply_pauli(&state, g)?;
        let amps: Vec<Complex64> = state
            .amplitudes()
            .iter()
            .zip(flipped.amplitudes())
            .map(|(a, b)| (a + b) * 0.5)
            .collect();
        state = DenseState::from_raw(n, amps);
    }
    let anchor = state.amplitudes()[start];
    if anchor.norm() < 1e-12 {
        return Err(Error::Inconsistent("projection onto the stabilizer state vanished".into()));
    }
    let fix = anchor.conj() / anchor.norm();
    let amps: Vec<Complex64> = state.amplitudes().iter().map(|a| a * fix).collect();
    DenseState::normalized(n, amps)
}

pub(crate) fn check_region(region: &[usize], n: usize) -> Result<()> {
    for (i, &q) in region.iter().enumerate() {
        if q >= n {
            return Err(Error::InvalidArgument(format!(
                "qubit {q} out of range for {n} qubits"
            )));
        }
        if region[..i].contains(&q) {
            return Err(Error::InvalidArgument(format!("qubit {q} listed twice")));
        }
    }
    Ok(())
}

impl fmt::Display for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(lines: &[&str]) -> Result<StabilizerGroup> {
        StabilizerGroup::from_text(&lines.join("\n"))
    }

    #[test]
    fn canonical_examples() {
        let g = group(&["XX", "ZZ"]).unwrap();
        assert_eq!(g.canonicalize(), g);
        assert!(matches!(group(&["XX", "ZZ", "-YY"]), Err(Error::InvalidGroup(_))));
        assert!(matches!(group(&["XX", "ZZ", "YY"]), Err(Error::InvalidGroup(_))));
        assert!(matches!(group(&["X", "Z"]), Err(Error::InvalidGroup(_))));
        assert!(group(&["iX"]).is_err());
    }

    #[test]
    fn canonicalize_is_idempotent_and_spans_the_same_group() {
        let g = group(&["ZZI", "-XXX", "IZZ"]).unwrap();
        let c = g.canonicalize();
        assert_eq!(c.canonicalize(), c);
        let mut a: Vec<String> = g.elements().iter().map(|e| e.to_string()).collect();
        let mut b: Vec<String> = c.elements().iter().map(|e| e.to_string()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn ghz5_generators_from_the_table() {
        let g = group(&["XXXXX", "ZZIII", "IZZII", "IIZZI", "IIIZZ"]).unwrap();
        assert_eq!(g.canonicalize().dim(), 5);
        assert!(g.contains(&"-XYYXX".parse().unwrap()));
        assert!(!g.contains(&"XYYXX".parse().unwrap()));
    }

    #[test]
    fn group_to_state_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = group(&["X"]).unwrap().to_state().unwrap();
        assert!((plus.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((plus.amplitudes()[1].re - h).abs() < 1e-15);

        let bell = group(&["XX", "ZZ"]).unwrap().to_state().unwrap();
        let want = [h, 0.0, 0.0, h];
        for (a, w) in bell.amplitudes().iter().zip(want) {
            assert!((a - Complex64::new(w, 0.0)).norm() < 1e-15);
        }

        let ghz = group(&["XXXXX", "ZZIII", "IZZII", "IIZZI", "IIIZZ"]).unwrap().to_state().unwrap();
        assert!((ghz.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((ghz.amplitudes()[31].re - h).abs() < 1e-15);

        let minus_one = group(&["-Z"]).unwrap().to_state().unwrap();
        assert_eq!(minus_one, DenseState::basis(1, 1));
    }

    #[test]
    fn every_generator_stabilizes_the_state() {
        let g = group(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "-XXXXX"]).unwrap();
        let s = g.to_state().unwrap();
        for gen in g.generators() {
            let t = apply_pauli(&s, gen).unwrap();
            assert!((s.inner(&t).unwrap().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn entanglement_examples() {
        let ghz = group(&["XXXXX", "ZZIII", "IZZII", "IIZZI", "IIIZZ"]).unwrap();
        assert_eq!(ghz.entanglement_entropy(&[0, 1, 2]).unwrap(), 1);
        assert_eq!(ghz.entanglement_entropy(&[3, 4]).unwrap(), 1);
        assert_eq!(ghz.entanglement_entropy(&[]).unwrap(), 0);
        let product = group(&["ZII", "IZI", "IIZ"]).unwrap();
        assert_eq!(product.entanglement_entropy(&[1]).unwrap(), 0);
        let mixed = group(&["ZZI"]).unwrap();
        assert!(matches!(mixed.entanglement_entropy(&[0]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn restricted_subgroup() {
        let ghz = group(&["XXXXX", "ZZIII", "IZZII", "IIZZI", "IIIZZ"]).unwrap();
        let sa = ghz.restricted_to(&[0, 1, 2]).unwrap();
        let mut elems: Vec<String> = sa.elements().iter().map(|e| e.to_string()).collect();
        elems.sort();
        assert_eq!(elems, ["III", "IZZ", "ZIZ", "ZZI"]);
    }
}
