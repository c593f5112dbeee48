//! Per-sample pipelines and aggregation.

use std::f64::consts::FRAC_PI_4;

use rand::Rng;
use rayon::prelude::*;

use super::config::{Estimator, ExperimentConfig, ScenarioKind};
use super::record::ResultRecord;
use super::stats::{z_score, Moments};
use crate::dense::{
    apply_in_place, brickwork_layout, build_nonstab_state, haar_unitary_with, named_gate, DenseState, DenseUnitary,
    NonStabKind,
};
use crate::error::{Error, Result};
use crate::limits;
use crate::measures::{
    coset_reduced_y, m_alpha, m_from_y, pauli_spectrum, t_count_bounds, unitary_sre, y_lin, Alpha,
};
use crate::rng::{sample_rng, StreamRng};
use crate::stabilizer::{
    coset_decompose, random_clifford_with, BipartiteShape, CosetDecomposition, Filler, NormalForm, Shape,
    StabilizerGroup, TripartiteShape,
};
use crate::theory::{exact_average_y, leading_average_y, to_f64, Scenario, ScenarioDims};

/// Default brick width.
pub const DEFAULT_GATE_SPAN: u32 = 2;

/// `theta` within this of `pi/4` counts as perfect Bell pairs.
const BELL_THETA_TOL: f64 = 1e-12;

/// What one sample contributes to one output row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePoint {
    /// `Y_lin` of the final state; `None` for unitary scenarios.
    pub y: Option<f64>,
    /// `M_2` of the final state, or the unitary entropy for unitary scenarios.
    pub m2: f64,
}

impl SamplePoint {
    fn state(y: f64) -> Self {
        SamplePoint { y: Some(y), m2: m_from_y(y) }
    }
}

enum Plan {
    /// Haar unitaries on some regions of a normal-form state.
    Stabilizer {
        form: NormalForm,
        base: DenseState,
        targets: Vec<usize>,
        /// Unscrambled decomposition for the coset-reduced estimator.
        decomp: Option<CosetDecomposition>,
    },
    Brickwork {
        form: NormalForm,
        base: DenseState,
        depths: Vec<u32>,
        span: usize,
    },
    NonStab {
        base: DenseState,
        regions: [Vec<usize>; 2],
        init_m2: f64,
    },
    UnitarySre {
        qubits: usize,
        gate: Option<DenseUnitary>,
        alpha: Alpha,
    },
    TCount {
        qubits: usize,
        t: usize,
    },
}

/// A validated config: echo row, plan and reference dimensions.
struct Prepared {
    echo: ResultRecord,
    plan: Plan,
    theory: Option<ScenarioDims>,
}

fn cfg_err(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

/// `(size, fillers)` from either one, given `shared` qubits that are not fillers.
fn resolve_side(name: &str, n: Option<u32>, f: Option<u32>, shared: u32) -> Result<(u32, u32)> {
    match (n, f) {
        (Some(n), Some(f)) if n == f + shared => Ok((n, f)),
        (Some(n), Some(f)) => Err(cfg_err(format!(
            "n{name} = {n} does not equal f{name} + {shared} = {}",
            f + shared
        ))),
        (Some(n), None) if n >= shared => Ok((n, n - shared)),
        (Some(n), None) => Err(cfg_err(format!("n{name} = {n} is smaller than its {shared} shared qubits"))),
        (None, Some(f)) => Ok((f + shared, f)),
        (None, None) => Err(cfg_err(format!("need n{name} or f{name}"))),
    }
}

fn filler(cfg: &ExperimentConfig) -> Filler {
    if cfg.zero_fillers {
        Filler::Zero
    } else {
        Filler::Plus
    }
}

fn require<T: Copy>(v: Option<T>, what: &str, scenario: ScenarioKind) -> Result<T> {
    v.ok_or_else(|| cfg_err(format!("{scenario} needs {what}")))
}

fn prepare(cfg: &ExperimentConfig) -> Result<Prepared> {
    use ScenarioKind as K;
    if cfg.samples == 0 {
        return Err(cfg_err("samples must be at least 1"));
    }
    let sc = cfg.scenario;
    if cfg.estimator == Estimator::CosetReduced && sc != K::BipartiteHaar {
        return Err(cfg_err(format!("the coset_reduced estimator only supports bipartite_haar, not {sc}")));
    }
    let mut echo = ResultRecord {
        estimator: cfg.estimator,
        prescramble: cfg.prescramble,
        ..ResultRecord::blank(sc, cfg.samples, cfg.master_seed)
    };
    match sc {
        K::BipartiteHaar | K::BipartiteProduct | K::Brickwork => {
            let e = require(cfg.e, "E", sc)?;
            let (n_a, f_a) = resolve_side("A", cfg.n_a, cfg.f_a, e)?;
            let (n_b, f_b) = resolve_side("B", cfg.n_b, cfg.f_b, e)?;
            if n_a == 0 || (sc == K::BipartiteProduct && n_b == 0) {
                return Err(cfg_err("Haar-acted regions need at least one qubit"));
            }
            echo.n_a = Some(n_a);
            echo.n_b = Some(n_b);
            echo.e = Some(e);
            echo.f_a = Some(f_a);
            echo.f_b = Some(f_b);
            let shape = Shape::Bipartite(BipartiteShape {
                f_a: f_a as usize,
                e: e as usize,
                f_b: f_b as usize,
            });
            limits::check_spectrum("experiment state", shape.num_qubits())?;
            let form = shape.layout(filler(cfg))?;
            let base = form.state()?;
            let theory_sc = sc.theory().expect("bipartite scenarios have a theory");
            let theory = Some(ScenarioDims::bipartite(theory_sc, n_a, e, n_b));
            let plan = if sc == K::Brickwork {
                let depths = cfg
                    .depth
                    .as_ref()
                    .ok_or_else(|| cfg_err("brickwork needs depth"))?
                    .to_vec();
                if depths.is_empty() {
                    return Err(cfg_err("depth list is empty"));
                }
                let span = cfg.gate_span.unwrap_or(DEFAULT_GATE_SPAN);
                if span < 2 || span > n_a {
                    return Err(cfg_err(format!("gate_span {span} must lie in 2..={n_a}")));
                }
                echo.gate_span = Some(span);
                Plan::Brickwork {
                    form,
                    base,
                    depths,
                    span: span as usize,
                }
            } else {
                let targets = if sc == K::BipartiteHaar { vec![0] } else { vec![0, 1] };
                let decomp = match (cfg.estimator, cfg.prescramble) {
                    (Estimator::CosetReduced, false) => Some(coset_decompose(&form.group, &form.regions[0])?),
                    _ => None,
                };
                Plan::Stabilizer {
                    form,
                    base,
                    targets,
                    decomp,
                }
            };
            Ok(Prepared { echo, plan, theory })
        }
        K::TripartitePair | K::TripartiteTriple => {
            let g = cfg.g.unwrap_or(0);
            let (b_ab, b_ac, b_bc) = (cfg.b_ab.unwrap_or(0), cfg.b_ac.unwrap_or(0), cfg.b_bc.unwrap_or(0));
            let (n_a, f_a) = resolve_side("A", cfg.n_a, cfg.f_a, b_ab + b_ac + g)?;
            let (n_b, f_b) = resolve_side("B", cfg.n_b, cfg.f_b, b_ab + b_bc + g)?;
            let (n_c, f_c) = resolve_side("C", cfg.n_c, cfg.f_c, b_ac + b_bc + g)?;
            if n_a == 0 || n_b == 0 || (sc == K::TripartiteTriple && n_c == 0) {
                return Err(cfg_err("Haar-acted regions need at least one qubit"));
            }
            echo = ResultRecord {
                n_a: Some(n_a),
                n_b: Some(n_b),
                n_c: Some(n_c),
                g: Some(g),
                b_ab: Some(b_ab),
                b_ac: Some(b_ac),
                b_bc: Some(b_bc),
                f_a: Some(f_a),
                f_b: Some(f_b),
                f_c: Some(f_c),
                ..echo
            };
            let u = |v: u32| v as usize;
            let shape = Shape::Tripartite(TripartiteShape {
                g: u(g),
                b_ab: u(b_ab),
                b_ac: u(b_ac),
                b_bc: u(b_bc),
                f_a: u(f_a),
                f_b: u(f_b),
                f_c: u(f_c),
            });
            limits::check_spectrum("experiment state", shape.num_qubits())?;
            let form = shape.layout(filler(cfg))?;
            let base = form.state()?;
            let theory_sc = sc.theory().expect("tripartite scenarios have a theory");
            let theory = Some(ScenarioDims::tripartite(theory_sc, g, b_ab, b_ac, b_bc, f_a, f_b, f_c));
            let targets = if sc == K::TripartitePair { vec![0, 1] } else { vec![0, 1, 2] };
            Ok(Prepared {
                echo,
                plan: Plan::Stabilizer {
                    form,
                    base,
                    targets,
                    decomp: None,
                },
                theory,
            })
        }
        K::NonstabBell | K::NonstabSpectrum => {
            let k = require(cfg.k, "k", sc)?;
            if k == 0 {
                return Err(cfg_err("k must be at least 1"));
            }
            let (n_a, f_a) = resolve_side("A", cfg.n_a, cfg.f_a, k)?;
            if let Some(n_b) = cfg.n_b.filter(|&n| n != k) {
                return Err(cfg_err(format!("{sc} has nB = k = {k}, got {n_b}")));
            }
            echo.n_a = Some(n_a);
            echo.n_b = Some(k);
            echo.f_a = Some(f_a);
            echo.k = Some(k);
            limits::check_spectrum("experiment state", (n_a + k) as usize)?;
            let (kind, theory) = if sc == K::NonstabBell {
                let theta = require(cfg.theta, "theta", sc)?;
                echo.theta = Some(theta);
                // perfect Bell pairs: the stabilizer scenario with E = k
                let bell = (theta - FRAC_PI_4).abs() < BELL_THETA_TOL;
                let theory = bell.then(|| ScenarioDims::bipartite(Scenario::BipartiteHaar, n_a, k, k));
                (NonStabKind::ImperfectBell { theta }, theory)
            } else {
                let law = require(cfg.lambda_law, "lambda_law", sc)?;
                echo.lambda_law = Some(law);
                (NonStabKind::Spectrum(law), None)
            };
            let base = build_nonstab_state(kind, k as usize, f_a as usize)
                .map_err(|e| match e {
                    Error::InvalidArgument(m) => cfg_err(m),
                    other => other,
                })?;
            let init_m2 = m_alpha(&pauli_spectrum(&base)?, Alpha::Finite(2));
            echo.init_m2 = Some(init_m2);
            let a = (n_a + k) as usize;
            let regions = [(0..n_a as usize).collect(), (n_a as usize..a).collect()];
            Ok(Prepared {
                echo,
                plan: Plan::NonStab { base, regions, init_m2 },
                theory,
            })
        }
        K::UnitarySre => {
            let alpha = match &cfg.alpha {
                Some(a) => a.resolve()?,
                None => Alpha::default(),
            };
            let gate = match &cfg.gate {
                Some(name) => Some(named_gate(name).map_err(|e| cfg_err(e.to_string()))?),
                None => None,
            };
            let qubits = match (&gate, cfg.n_a) {
                (Some(g), Some(n)) if n as usize != g.num_qubits() => {
                    return Err(cfg_err(format!("gate acts on {} qubits, nA = {n}", g.num_qubits())));
                }
                (Some(g), _) => g.num_qubits(),
                (None, Some(n)) if n > 0 => n as usize,
                (None, _) => return Err(cfg_err("unitary_sre needs a gate or nA >= 1")),
            };
            limits::check_spectrum("unitary Choi state", 2 * qubits)?;
            echo.n_a = Some(qubits as u32);
            Ok(Prepared {
                echo,
                plan: Plan::UnitarySre { qubits, gate, alpha },
                theory: None,
            })
        }
        K::TcountReport => {
            let n = require(cfg.n_a, "nA", sc)?;
            let t = require(cfg.k, "k (the T count)", sc)?;
            if n == 0 {
                return Err(cfg_err("tcount_report needs nA >= 1"));
            }
            limits::check_spectrum("unitary Choi state", 2 * n as usize)?;
            echo.n_a = Some(n);
            echo.k = Some(t);
            Ok(Prepared {
                echo,
                plan: Plan::TCount {
                    qubits: n as usize,
                    t: t as usize,
                },
                theory: None,
            })
        }
    }
}

fn scramble(
    state: &mut DenseState,
    regions: &[Vec<usize>],
    rng: &mut StreamRng,
) -> Result<()> {
    for region in regions.iter().filter(|r| !r.is_empty()) {
        let c = random_clifford_with(region.len(), rng);
        apply_in_place(state, &c.to_unitary()?, region)?;
    }
    Ok(())
}

fn measure(state: &DenseState) -> Result<SamplePoint> {
    Ok(SamplePoint::state(y_lin(&pauli_spectrum(state)?)))
}

/// Conjugates the group by local Cliffords drawn in the same order as [`scramble`].
fn scramble_group(group: &StabilizerGroup, regions: &[Vec<usize>], rng: &mut StreamRng) -> Result<StabilizerGroup> {
    let n = group.num_qubits();
    let mut g = group.clone();
    for region in regions.iter().filter(|r| !r.is_empty()) {
        let c = random_clifford_with(region.len(), rng).embed(region, n)?;
        g = c.conjugate_group(&g)?;
    }
    Ok(g)
}

fn sample(prep: &Prepared, cfg: &ExperimentConfig, index: u64) -> Result<Vec<SamplePoint>> {
    let mut rng = sample_rng(cfg.master_seed, index);
    match &prep.plan {
        Plan::Stabilizer {
            form,
            base,
            targets,
            decomp,
        } => {
            if cfg.estimator == Estimator::CosetReduced {
                let scrambled;
                let d = match decomp {
                    Some(d) => d,
                    None => {
                        let g = scramble_group(&form.group, &form.regions, &mut rng)?;
                        scrambled = coset_decompose(&g, &form.regions[0])?;
                        &scrambled
                    }
                };
                let u = haar_unitary_with(form.regions[0].len(), &mut rng)?;
                return Ok(vec![SamplePoint::state(coset_reduced_y(d, &u)?)]);
            }
            let mut state = base.clone();
            if cfg.prescramble {
                scramble(&mut state, &form.regions, &mut rng)?;
            }
            for &t in targets {
                let region = &form.regions[t];
                let u = haar_unitary_with(region.len(), &mut rng)?;
                apply_in_place(&mut state, &u, region)?;
            }
            Ok(vec![measure(&state)?])
        }
        Plan::Brickwork {
            form,
            base,
            depths,
            span,
        } => {
            let mut state = base.clone();
            if cfg.prescramble {
                scramble(&mut state, &form.regions, &mut rng)?;
            }
            let region = &form.regions[0];
            let max_depth = *depths.iter().max().expect("non-empty") as usize;
            let mut at_depth = Vec::with_capacity(max_depth + 1);
            let wanted = |d: usize| depths.contains(&(d as u32));
            at_depth.push(if wanted(0) { Some(measure(&state)?) } else { None });
            for (l, layer) in brickwork_layout(region.len(), max_depth, *span).into_iter().enumerate() {
                for start in layer {
                    let gate = haar_unitary_with(*span, &mut rng)?;
                    apply_in_place(&mut state, &gate, &region[start..start + span])?;
                }
                at_depth.push(if wanted(l + 1) { Some(measure(&state)?) } else { None });
            }
            Ok(depths
                .iter()
                .map(|&d| at_depth[d as usize].expect("measured at every requested depth"))
                .collect())
        }
        Plan::NonStab { base, regions, .. } => {
            let mut state = base.clone();
            if cfg.prescramble {
                scramble(&mut state, regions, &mut rng)?;
            }
            let u = haar_unitary_with(regions[0].len(), &mut rng)?;
            apply_in_place(&mut state, &u, &regions[0])?;
            Ok(vec![measure(&state)?])
        }
        Plan::UnitarySre { qubits, gate, alpha } => {
            let h = match gate {
                Some(g) => unitary_sre(g, *alpha)?,
                None => unitary_sre(&haar_unitary_with(*qubits, &mut rng)?, *alpha)?,
            };
            Ok(vec![SamplePoint { y: None, m2: h }])
        }
        Plan::TCount { qubits, t } => {
            let u = random_clifford_t(*qubits, *t, &mut rng)?;
            let b = t_count_bounds(&u, Some(*t))?;
            Ok(vec![SamplePoint { y: None, m2: b.h2 }])
        }
    }
}

/// Per-sample values, indexed `[sample][row]`. Identical for any thread count.
pub fn run_samples(cfg: &ExperimentConfig) -> Result<Vec<Vec<SamplePoint>>> {
    let prep = prepare(cfg)?;
    samples_of(&prep, cfg)
}

fn samples_of(prep: &Prepared, cfg: &ExperimentConfig) -> Result<Vec<Vec<SamplePoint>>> {
    // A fixed gate gives the same value every time.
    if let Plan::UnitarySre { gate: Some(_), .. } = prep.plan {
        let one = sample(prep, cfg, 0)?;
        return Ok(vec![one; cfg.samples as usize]);
    }
    (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| sample(prep, cfg, i))
        .collect()
}

fn references(dims: &ScenarioDims) -> Result<(Option<f64>, Option<f64>)> {
    let exact = match exact_average_y(dims) {
        Ok(r) => Some(to_f64(&r)),
        Err(Error::Singular(_) | Error::NoExactFormula(_)) => None,
        Err(e) => return Err(e),
    };
    Ok((exact, Some(leading_average_y(dims).y)))
}

/// Runs one experiment: one record, or one per depth for `brickwork`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ResultRecord>> {
    let prep = prepare(cfg)?;
    let samples = samples_of(&prep, cfg)?;
    let (exact_y, leading_y) = match &prep.theory {
        Some(d) => references(d)?,
        None => (None, None),
    };
    let rows = samples.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows);
    for j in 0..rows {
        let ys: Option<Vec<f64>> = samples.iter().map(|s| s[j].y).collect();
        let m2s: Vec<f64> = samples.iter().map(|s| s[j].m2).collect();
        let my = ys.as_deref().map(Moments::of);
        let mm = Moments::of(&m2s);
        let mut rec = ResultRecord {
            mean_y_lin: my.map(|m| m.mean),
            stderr_y_lin: my.map(|m| m.stderr()),
            mean_m2: Some(mm.mean),
            stderr_m2: Some(mm.stderr()),
            exact_y,
            leading_y,
            z_score: match (my, exact_y) {
                (Some(m), Some(x)) => z_score(m.mean, m.stderr(), x),
                _ => None,
            },
            ..prep.echo.clone()
        };
        if let Plan::Brickwork { depths, .. } = &prep.plan {
            rec.depth = Some(depths[j]);
        }
        if let Plan::NonStab { init_m2, .. } = prep.plan {
            rec.delta_m2_mean = Some(mm.mean - init_m2);
            rec.delta_m2_stderr = Some(mm.stderr());
        }
        out.push(rec);
    }
    Ok(out)
}

/// Runs every config in order and concatenates the records.
pub fn run_all(configs: &[ExperimentConfig]) -> Result<Vec<ResultRecord>> {
    let mut out = Vec::new();
    for c in configs {
        out.extend(run_experiment(c)?);
    }
    Ok(out)
}

/// `C_t T_{q_t} ... C_1 T_{q_1} C_0` with uniformly random Cliffords `C_i` and T qubits `q_i`.
pub fn random_clifford_t<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> Result<DenseUnitary> {
    limits::check_dense("Clifford+T circuit", n)?;
    let t_gate = named_gate("T")?;
    let mut u = random_clifford_with(n, rng).to_unitary()?;
    for _ in 0..t {
        let q = rng.random_range(0..n);
        let layer = DenseUnitary::identity(q)
            .tensor(&t_gate)?
            .tensor(&DenseUnitary::identity(n - q - 1))?;
        u = layer.compose(&u)?;
        u = random_clifford_with(n, rng).to_unitary()?.compose(&u)?;
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::{AlphaValue, Depths};
    use crate::rng::rng_from_seed;

    fn bip(sc: ScenarioKind, n_a: u32, n_b: u32, e: u32, samples: u32) -> ExperimentConfig {
        ExperimentConfig::bipartite(sc, n_a, n_b, e, samples, 11)
    }

    #[test]
    fn side_resolution() {
        assert_eq!(resolve_side("A", Some(3), None, 1).unwrap(), (3, 2));
        assert_eq!(resolve_side("A", None, Some(2), 1).unwrap(), (3, 2));
        assert_eq!(resolve_side("A", Some(3), Some(2), 1).unwrap(), (3, 2));
        assert!(resolve_side("A", Some(3), Some(1), 1).is_err());
        assert!(resolve_side("A", Some(1), None, 2).is_err());
        assert!(resolve_side("A", None, None, 0).is_err());
    }

    #[test]
    fn echo_and_references() {
        let recs = run_experiment(&bip(ScenarioKind::BipartiteHaar, 3, 3, 0, 20)).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!((r.n_a, r.n_b, r.e, r.f_a, r.f_b), (Some(3), Some(3), Some(0), Some(3), Some(3)));
        assert!((r.exact_y.unwrap() - 7.0 / 11.0).abs() < 1e-15);
        assert_eq!(r.leading_y, Some(0.5));
        assert!(r.z_score.is_some());
        assert!(r.init_m2.is_none() && r.depth.is_none());
    }

    #[test]
    fn singular_reference_is_empty() {
        let r = &run_experiment(&bip(ScenarioKind::BipartiteHaar, 1, 2, 1, 3)).unwrap()[0];
        assert!(r.exact_y.is_none() && r.z_score.is_none());
        assert!(r.mean_y_lin.is_some());
    }

    #[test]
    fn coset_estimator_only_for_bipartite_haar() {
        let mut c = bip(ScenarioKind::BipartiteProduct, 2, 2, 1, 3);
        c.estimator = Estimator::CosetReduced;
        assert!(matches!(run_experiment(&c), Err(Error::Config(_))));
    }

    #[test]
    fn estimators_agree_per_sample() {
        for prescramble in [false, true] {
            let mut c = bip(ScenarioKind::BipartiteHaar, 2, 3, 1, 6);
            c.prescramble = prescramble;
            let brute = run_samples(&c).unwrap();
            c.estimator = Estimator::CosetReduced;
            let fast = run_samples(&c).unwrap();
            for (a, b) in brute.iter().zip(&fast) {
                assert!((a[0].y.unwrap() - b[0].y.unwrap()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn brickwork_rows_per_depth() {
        let mut c = bip(ScenarioKind::Brickwork, 3, 2, 1, 4);
        c.depth = Some(Depths::Many(vec![0, 1, 3]));
        let recs = run_experiment(&c).unwrap();
        assert_eq!(recs.iter().map(|r| r.depth.unwrap()).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert!(recs[0].mean_y_lin.unwrap().abs() < 1e-9);
        assert!(recs[2].mean_y_lin.unwrap() > 0.1);
        assert_eq!(recs[0].gate_span, Some(2));
        // a deeper run extends the shallower one sample by sample
        c.depth = Some(Depths::One(1));
        let shallow = run_samples(&c).unwrap();
        c.depth = Some(Depths::Many(vec![1, 3]));
        let deep = run_samples(&c).unwrap();
        for (s, d) in shallow.iter().zip(&deep) {
            assert_eq!(s[0], d[0]);
        }
    }

    #[test]
    fn nonstab_bell_at_quarter_pi_is_stabilizer() {
        let mut c = ExperimentConfig::new(ScenarioKind::NonstabBell, 5, 2);
        c.n_a = Some(3);
        c.k = Some(2);
        c.theta = Some(FRAC_PI_4);
        let r = &run_experiment(&c).unwrap()[0];
        assert!(r.init_m2.unwrap().abs() < 1e-9);
        assert!(r.exact_y.is_some());
        assert_eq!((r.f_a, r.n_b), (Some(1), Some(2)));
        assert!((r.delta_m2_mean.unwrap() - r.mean_m2.unwrap()).abs() < 1e-9);
        c.theta = Some(0.3);
        let r = &run_experiment(&c).unwrap()[0];
        assert!(r.init_m2.unwrap() > 0.0 && r.exact_y.is_none());
        c.theta = Some(5.0);
        assert!(matches!(run_experiment(&c), Err(Error::Config(_))));
    }

    #[test]
    fn unitary_rows() {
        let mut c = ExperimentConfig::new(ScenarioKind::UnitarySre, 3, 0);
        c.gate = Some("T".into());
        let r = &run_experiment(&c).unwrap()[0];
        assert!((r.mean_m2.unwrap() - (4.0f64 / 3.0).log2()).abs() < 1e-12);
        assert_eq!(r.stderr_m2, Some(0.0));
        assert!(r.mean_y_lin.is_none());
        c.alpha = Some(AlphaValue::Int(0));
        let r = &run_experiment(&c).unwrap()[0];
        assert!((r.mean_m2.unwrap() - 1.5f64.log2()).abs() < 1e-12);

        let mut c = ExperimentConfig::new(ScenarioKind::TcountReport, 3, 0);
        c.n_a = Some(2);
        c.k = Some(2);
        let r = &run_experiment(&c).unwrap()[0];
        assert!(r.mean_m2.unwrap() <= 2.0 + 1e-9);
    }

    #[test]
    fn clifford_t_respects_count() {
        let mut rng = rng_from_seed(4);
        for t in 0..4 {
            let u = random_clifford_t(2, t, &mut rng).unwrap();
            let b = t_count_bounds(&u, Some(t)).unwrap();
            assert!(b.nullity <= t);
        }
    }

    #[test]
    fn caps_and_bad_configs() {
        assert!(matches!(
            run_experiment(&bip(ScenarioKind::BipartiteHaar, 8, 8, 1, 1)),
            Err(Error::ResourceCap { .. })
        ));
        assert!(matches!(
            run_experiment(&bip(ScenarioKind::BipartiteHaar, 2, 2, 1, 0)),
            Err(Error::Config(_))
        ));
        let mut c = bip(ScenarioKind::Brickwork, 3, 2, 1, 1);
        assert!(matches!(run_experiment(&c), Err(Error::Config(_))));
        c.depth = Some(Depths::One(1));
        c.gate_span = Some(4);
        assert!(matches!(run_experiment(&c), Err(Error::Config(_))));
    }
}
