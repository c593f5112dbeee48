//! Stabilizer states in normal form: fillers, Bell pairs and GHZ triples.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::group::StabilizerGroup;
use crate::dense::{apply_in_place, named_gate, DenseState};
use crate::error::{Error, Result};
use crate::limits;
use crate::pauli::PauliString;

/// Single-qubit filler state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filler {
    #[default]
    Plus,
    Zero,
}

/// `|f>^{f_A} ⊗ |Bell>^{E} ⊗ |f>^{f_B}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteShape {
    pub f_a: usize,
    pub e: usize,
    pub f_b: usize,
}

/// GHZ triples, pairwise Bell pairs and fillers shared by A, B, C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TripartiteShape {
    pub g: usize,
    pub b_ab: usize,
    pub b_ac: usize,
    pub b_bc: usize,
    pub f_a: usize,
    pub f_b: usize,
    pub f_c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Bipartite(BipartiteShape),
    Tripartite(TripartiteShape),
}

impl BipartiteShape {
    pub fn size_a(&self) -> usize {
        self.f_a + self.e
    }

    pub fn size_b(&self) -> usize {
        self.e + self.f_b
    }
}

impl TripartiteShape {
    pub fn size_a(&self) -> usize {
        self.f_a + self.b_ab + self.b_ac + self.g
    }

    pub fn size_b(&self) -> usize {
        self.f_b + self.b_ab + self.b_bc + self.g
    }

    pub fn size_c(&self) -> usize {
        self.f_c + self.b_ac + self.b_bc + self.g
    }
}

/// A normal-form register: generators plus the qubit layout.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub group: StabilizerGroup,
    /// Regions A, B (and C for tripartite shapes), as qubit index lists.
    pub regions: Vec<Vec<usize>>,
    fillers: Vec<usize>,
    bells: Vec<(usize, usize)>,
    ghz: Vec<[usize; 3]>,
    filler: Filler,
}

impl Shape {
    pub fn num_qubits(&self) -> usize {
        match self {
            Shape::Bipartite(s) => s.size_a() + s.size_b(),
            Shape::Tripartite(t) => t.size_a() + t.size_b() + t.size_c(),
        }
    }

    /// Qubit layout. Bipartite: A = `[fillers | Bell halves]`, B = `[partners | fillers]`.
    /// Tripartite: A = `[f_A | AB | AC | GHZ]`, B = `[f_B | AB | BC | GHZ]`,
    /// C = `[f_C | AC | BC | GHZ]`, blocks laid out in the order A, B, C.
    pub fn layout(&self, filler: Filler) -> Result<NormalForm> {
        let n = self.num_qubits();
        let mut fillers = Vec::new();
        let mut bells = Vec::new();
        let mut ghz = Vec::new();
        let regions = match *self {
            Shape::Bipartite(s) => {
                fillers.extend(0..s.f_a);
                for j in 0..s.e {
                    bells.push((s.f_a + j, s.f_a + s.e + j));
                }
                fillers.extend(s.f_a + 2 * s.e..n);
                vec![(0..s.size_a()).collect(), (s.size_a()..n).collect()]
            }
            Shape::Tripartite(t) => {
                let a0 = 0;
                let b0 = t.size_a();
                let c0 = b0 + t.size_b();
                fillers.extend(a0..a0 + t.f_a);
                fillers.extend(b0..b0 + t.f_b);
                fillers.extend(c0..c0 + t.f_c);
                let (a_ab, a_ac, a_g) = (a0 + t.f_a, a0 + t.f_a + t.b_ab, a0 + t.f_a + t.b_ab + t.b_ac);
                let (b_ab, b_bc, b_g) = (b0 + t.f_b, b0 + t.f_b + t.b_ab, b0 + t.f_b + t.b_ab + t.b_bc);
                let (c_ac, c_bc, c_g) = (c0 + t.f_c, c0 + t.f_c + t.b_ac, c0 + t.f_c + t.b_ac + t.b_bc);
                for j in 0..t.b_ab {
                    bells.push((a_ab + j, b_ab + j));
                }
                for j in 0..t.b_ac {
                    bells.push((a_ac + j, c_ac + j));
                }
                for j in 0..t.b_bc {
                    bells.push((b_bc + j, c_bc + j));
                }
                for j in 0..t.g {
                    ghz.push([a_g + j, b_g + j, c_g + j]);
                }
                vec![(a0..b0).collect(), (b0..c0).collect(), (c0..n).collect()]
            }
        };
        let mut gens = Vec::with_capacity(n);
        let single = |q: usize, kind: char| PauliString::single(n, q, kind);
        let pair = |qs: &[usize], kind: char| -> Result<PauliString> {
            let mut p = PauliString::identity(n);
            for &q in qs {
                p = crate::pauli::pauli_mul(&p, &single(q, kind)?)?;
            }
            Ok(p)
        };
        for &q in &fillers {
            gens.push(single(q, if filler == Filler::Plus { 'X' } else { 'Z' })?);
        }
        for &(p, q) in &bells {
            gens.push(pair(&[p, q], 'X')?);
            gens.push(pair(&[p, q], 'Z')?);
        }
        for t in &ghz {
            gens.push(pair(t, 'X')?);
            gens.push(pair(&t[..2], 'Z')?);
            gens.push(pair(&t[1..], 'Z')?);
        }
        Ok(NormalForm {
            group: StabilizerGroup::from_trusted(n, gens),
            regions,
            fillers,
            bells,
            ghz,
            filler,
        })
    }
}

impl NormalForm {
    /// Dense state prepared gate by gate from `|0...0>`.
    pub fn state(&self) -> Result<DenseState> {
        let n = self.group.num_qubits();
        limits::check_dense("normal-form state", n)?;
        let h = named_gate("H")?;
        let cnot = named_gate("CNOT")?;
        let mut s = DenseState::zero(n);
        if self.filler == Filler::Plus {
            for &q in &self.fillers {
                apply_in_place(&mut s, &h, &[q])?;
            }
        }
        for &(p, q) in &self.bells {
            apply_in_place(&mut s, &h, &[p])?;
            apply_in_place(&mut s, &cnot, &[p, q])?;
        }
        for t in &self.ghz {
            apply_in_place(&mut s, &h, &[t[0]])?;
            apply_in_place(&mut s, &cnot, &[t[0], t[1]])?;
            apply_in_place(&mut s, &cnot, &[t[0], t[2]])?;
        }
        Ok(s)
    }
}

/// Generators and matching dense state of a normal-form shape.
pub fn build_normal_state(shape: &Shape, filler: Filler) -> Result<(StabilizerGroup, DenseState)> {
    let form = shape.layout(filler)?;
    let state = form.state()?;
    Ok((form.group, state))
}

/// Built-in named states: `ghz:<n>`, `bell:<k>`, `normal:fA,E,fB`, `tri:g,bAB,bAC,bBC,fA,fB,fC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedState {
    Ghz(usize),
    Shape(Shape),
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            what: "named state",
            reason,
        };
        let (kind, args) = s.split_once(':').ok_or_else(|| bad(format!("missing ':' in {s:?}")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(format!("{s:?}: {e}")))?;
        let expect = |count: usize| {
            if nums.len() == count {
                Ok(())
            } else {
                Err(bad(format!("{kind} takes {count} numbers, got {}", nums.len())))
            }
        };
        match kind {
            "ghz" => {
                expect(1)?;
                if nums[0] == 0 {
                    return Err(bad("ghz needs at least one qubit".into()));
                }
                Ok(NamedState::Ghz(nums[0]))
            }
            "bell" => {
                expect(1)?;
                Ok(NamedState::Shape(Shape::Bipartite(BipartiteShape { f_a: 0, e: nums[0], f_b: 0 })))
            }
            "normal" => {
                expect(3)?;
                Ok(NamedState::Shape(Shape::Bipartite(BipartiteShape {
                    f_a: nums[0],
                    e: nums[1],
                    f_b: nums[2],
                })))
            }
            "tri" => {
                expect(7)?;
                Ok(NamedState::Shape(Shape::Tripartite(TripartiteShape {
                    g: nums[0],
                    b_ab: nums[1],
                    b_ac: nums[2],
                    b_bc: nums[3],
                    f_a: nums[4],
                    f_b: nums[5],
                    f_c: nums[6],
                })))
            }
            other => Err(bad(format!("unknown state kind {other:?}"))),
        }
    }
}

impl NamedState {
    pub fn group(&self) -> Result<StabilizerGroup> {
        match self {
            NamedState::Ghz(n) => Ok(ghz_group(*n)),
            NamedState::Shape(s) => Ok(s.layout(Filler::default())?.group),
        }
    }
}

/// `X^{⊗n}` and `Z_j Z_{j+1}`.
pub fn ghz_group(n: usize) -> StabilizerGroup {
    let mut gens = vec![PauliString::from_masks(n, (1u64 << n) - 1, 0, false)];
    for j in 0..n.saturating_sub(1) {
        gens.push(PauliString::from_masks(n, 0, 0b11 << j, false));
    }
    StabilizerGroup::from_trusted(n, gens)
}
