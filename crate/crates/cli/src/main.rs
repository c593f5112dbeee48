use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use stabmagic::dense::{named_gate, DenseUnitary};
use stabmagic::harness::{compare_mc_exact, load_configs, read_records, run_all, write_records, Format};
use stabmagic::measures::{m_from_y, t_count_bounds, unitary_nullity, unitary_sre, Alpha, NULLITY_TOL};
use stabmagic::stabilizer::{coset_decompose, NamedState};
use stabmagic::theory::{exact_average_y, leading_average_y, to_f64, Scenario, ScenarioDims};
use stabmagic::{Error, Limits};

const EXIT_COMPARISON: u8 = 2;
const EXIT_CONFIG: u8 = 3;
const EXIT_CAP: u8 = 4;

/// Stabilizer entropies, Haar-averaged magic injection and Monte Carlo checks.
#[derive(Parser)]
#[command(name = "stabmagic", version)]
struct Cli {
    /// Largest dense state or unitary, in qubits.
    #[arg(long, global = true, default_value_t = stabmagic::limits::DEFAULT_DENSE_QUBITS)]
    dense_cap: usize,
    /// Largest register whose full Pauli spectrum may be computed.
    #[arg(long, global = true, default_value_t = stabmagic::limits::DEFAULT_SPECTRUM_QUBITS)]
    spectrum_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact and leading-order Haar average of Y_lin.
    Exact {
        /// bipartite_haar, bipartite_product, tripartite_pair or tripartite_triple.
        #[arg(long)]
        scenario: Scenario,
        /// Comma-separated sizes, e.g. `nA=3,E=1,nB=3` or `g=1,bAB=0,bAC=0,bBC=0,fA=1,fB=1,fC=1`.
        #[arg(long)]
        dims: String,
    },
    /// Run Monte Carlo experiments from a JSON config.
    Mc {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Output format; defaults to the extension of --out.
        #[arg(long)]
        format: Option<Format>,
    },
    /// Check Monte Carlo means against exact averages (|z| <= 4 and gap <= 0.01).
    Compare {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Stabilizer Rényi entropy of a unitary.
    Unitary {
        #[command(flatten)]
        source: GateSource,
        /// Rényi index: a non-negative integer or `inf`.
        #[arg(long, default_value = "2")]
        alpha: Alpha,
    },
    /// T-count lower bounds: H_2 <= H_0 <= nullity.
    Bounds {
        #[command(flatten)]
        source: GateSource,
        /// Known T-count; the bounds are checked against it.
        #[arg(long)]
        t_count: Option<usize>,
    },
    /// Coset decomposition of a stabilizer group across a cut.
    Decompose {
        /// `ghz:<n>`, `bell:<k>`, `normal:fA,E,fB` or `tri:g,bAB,bAC,bBC,fA,fB,fC`.
        #[arg(long)]
        state: NamedState,
        /// Number of leading qubits in A, or an explicit list such as `0,2,3`.
        #[arg(long)]
        cut: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GateSource {
    /// Built-in gate: T, S, H, X, Z, CNOT, CZ, CS, CCZ or Tn:<n>.
    #[arg(long)]
    gate: Option<String>,
    /// JSON file with `m`, `re` and `im`.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

impl GateSource {
    fn load(&self) -> anyhow::Result<DenseUnitary> {
        match (&self.gate, &self.matrix) {
            (Some(g), _) => Ok(named_gate(g)?),
            (None, Some(p)) => Ok(DenseUnitary::from_json_file(p)?),
            (None, None) => bail!("need --gate or --matrix"),
        }
    }
}

/// A comparison that ran but did not pass.
#[derive(Debug)]
struct ComparisonFailed(usize);

impl std::fmt::Display for ComparisonFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} row(s) failed the comparison", self.0)
    }
}

impl std::error::Error for ComparisonFailed {}

fn parse_dims(scenario: Scenario, text: &str) -> anyhow::Result<ScenarioDims> {
    let mut vals = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value in --dims, got {part:?}"))?;
        let v: u32 = v.trim().parse().with_context(|| format!("value of {k}"))?;
        if vals.insert(k.trim().to_string(), v).is_some() {
            bail!("{k} given twice");
        }
    }
    let mut take = |k: &str| vals.remove(k);
    let dims = if scenario.is_tripartite() {
        let g = take("g").unwrap_or(0);
        let (ab, ac, bc) = (take("bAB").unwrap_or(0), take("bAC").unwrap_or(0), take("bBC").unwrap_or(0));
        let mut filler = |f: &str, n: &str, shared: u32| -> anyhow::Result<u32> {
            match (take(f), take(n)) {
                (Some(f), None) => Ok(f),
                (None, Some(n)) => n
                    .checked_sub(shared)
                    .ok_or_else(|| anyhow!("{n} is smaller than its {shared} shared qubits")),
                (Some(_), Some(_)) => bail!("give either {f} or {n}, not both"),
                (None, None) => bail!("missing {f} (or {n})"),
            }
        };
        let f_a = filler("fA", "nA", ab + ac + g)?;
        let f_b = filler("fB", "nB", ab + bc + g)?;
        let f_c = filler("fC", "nC", ac + bc + g)?;
        ScenarioDims::tripartite(scenario, g, ab, ac, bc, f_a, f_b, f_c)
    } else {
        let need = |v: Option<u32>, k: &str| v.ok_or_else(|| anyhow!("missing {k} in --dims"));
        let (n_a, e, n_b) = (take("nA"), take("E"), take("nB"));
        ScenarioDims::bipartite(scenario, need(n_a, "nA")?, need(e, "E")?, need(n_b, "nB")?)
    };
    if let Some(extra) = vals.keys().next() {
        bail!("unknown or unused key {extra:?} for {scenario}");
    }
    dims.validate()?;
    Ok(dims)
}

fn parse_cut(text: &str, n: usize) -> anyhow::Result<Vec<usize>> {
    if text.contains(',') {
        return text
            .split(',')
            .map(|q| q.trim().parse::<usize>().with_context(|| format!("qubit {q:?} in --cut")))
            .collect();
    }
    let k: usize = text.trim().parse().context("--cut")?;
    if k > n {
        bail!("cut of {k} qubits on a {n}-qubit state");
    }
    Ok((0..k).collect())
}

fn exact(scenario: Scenario, dims: &str) -> anyhow::Result<()> {
    let dims = parse_dims(scenario, dims)?;
    println!("scenario       {scenario}");
    println!(
        "sizes          nA={} nB={} nC={} E={} g={} bAB={} bAC={} bBC={}",
        dims.n_a, dims.n_b, dims.n_c, dims.e, dims.g, dims.b_ab, dims.b_ac, dims.b_bc
    );
    match exact_average_y(&dims) {
        Ok(r) => {
            let y = to_f64(&r);
            println!("exact_y        {r}");
            println!("exact_y_float  {y:.12}");
            println!("exact_m2       {:.12}", m_from_y(y));
        }
        Err(e @ (Error::Singular(_) | Error::NoExactFormula(_))) => println!("exact_y        n/a ({e})"),
        Err(e) => return Err(e.into()),
    }
    let lead = leading_average_y(&dims);
    println!("leading_y      {:.12}", lead.y);
    println!("leading_m2     {:.12}", lead.m2);
    println!("correction     {:.6e}{}", lead.correction, if lead.unreliable { " (unreliable)" } else { "" });
    Ok(())
}

fn mc(config: &PathBuf, out: &PathBuf, format: Option<Format>) -> anyhow::Result<()> {
    let configs = load_configs(config)?;
    let records = run_all(&configs)?;
    let format = format.unwrap_or_else(|| Format::from_path(out));
    write_records(&records, out, format)?;
    eprintln!(
        "{} experiment(s), {} record(s) written to {} ({format})",
        configs.len(),
        records.len(),
        out.display()
    );
    Ok(())
}

fn compare(input: &PathBuf, format: Option<Format>) -> anyhow::Result<()> {
    let format = format.unwrap_or_else(|| Format::from_path(input));
    let records = read_records(input, format)?;
    let report = compare_mc_exact(&records)?;
    println!("{:<4} {:<44} {:>10} {:>10} {:>10} {:>8} {:>9}  verdict", "row", "label", "mean", "stderr", "exact", "z", "gap");
    for r in &report.rows {
        let z = r.z.map_or_else(|| "n/a".to_string(), |z| format!("{z:.2}"));
        println!(
            "{:<4} {:<44} {:>10.6} {:>10.2e} {:>10.6} {:>8} {:>9.2e}  {}",
            r.index,
            r.label,
            r.mean,
            r.stderr,
            r.exact,
            z,
            r.gap,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    if report.passed() {
        println!("all {} row(s) pass", report.rows.len());
        Ok(())
    } else {
        Err(ComparisonFailed(report.failures()).into())
    }
}

fn unitary(source: &GateSource, alpha: Alpha) -> anyhow::Result<()> {
    let u = source.load()?;
    let h = unitary_sre(&u, alpha)?;
    println!("m        {}", u.num_qubits());
    println!("alpha    {alpha}");
    println!("H_alpha  {h:.12}");
    Ok(())
}

fn bounds(source: &GateSource, t_count: Option<usize>) -> anyhow::Result<()> {
    let u = source.load()?;
    let b = t_count_bounds(&u, t_count)?;
    debug_assert_eq!(unitary_nullity(&u, NULLITY_TOL)?, b.nullity);
    println!("m        {}", u.num_qubits());
    println!("H_2      {:.12}", b.h2);
    println!("H_0      {:.12}", b.h0);
    println!("nullity  {}", b.nullity);
    println!("t_lower  {}", b.t_lower);
    if let Some(t) = t_count {
        println!("declared {t} (consistent)");
    }
    Ok(())
}

fn decompose(state: &NamedState, cut: &str) -> anyhow::Result<()> {
    let group = state.group()?;
    let a = parse_cut(cut, group.num_qubits())?;
    let d = coset_decompose(&group, &a)?;
    let list = |ps: &[stabmagic::PauliString]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
    println!("qubits   {}  A = {:?}  B = {:?}", d.num_qubits(), d.region_a(), d.region_b());
    println!("E        {}", d.entanglement());
    println!("S_A      {}", list(d.s_a().generators()));
    println!("S_B      {}", list(d.s_b().generators()));
    for (i, (a_i, b_i)) in d.logical_pairs().iter().enumerate() {
        println!("logical  {i}: {a_i} ⊗ {b_i}");
    }
    for k in 0..d.num_cosets() {
        let c = d.coset(k);
        println!("coset {k}  rep {}  {{{}}}", c.representative, list(&d.coset_elements(k)));
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    Limits {
        dense_qubits: cli.dense_cap,
        spectrum_qubits: cli.spectrum_cap,
    }
    .install();
    match &cli.command {
        Command::Exact { scenario, dims } => exact(*scenario, dims),
        Command::Mc { config, out, format } => mc(config, out, *format),
        Command::Compare { input, format } => compare(input, *format),
        Command::Unitary { source, alpha } => unitary(source, *alpha),
        Command::Bounds { source, t_count } => bounds(source, *t_count),
        Command::Decompose { state, cut } => decompose(state, cut),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<ComparisonFailed>() {
        return EXIT_COMPARISON;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Config(_)) => EXIT_CONFIG,
        Some(Error::ResourceCap { .. }) => EXIT_CAP,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are configuration errors; --help and --version are not errors
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
