//! Command-line surface: one executable routing to every module, with
//! reproducible seeds and machine-readable output. Exit codes: 0 on
//! success, 1 when a verification fails (an irregular subspace, a failed
//! bound, a counterexample), 2 on usage or operational errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::critical::{critical_number, greedy_cover, CriticalResult};
use crate::error::{Error, Result};
use crate::gf2::{GF2Vector, Subspace};
use crate::harness::constants::theorem_constants;
use crate::harness::procedures::{
    dichotomy_experiment, weaker_procedure, DichotomyBranch, WeakerOutcome, WeakerRun,
};
use crate::harness::suites::run_all;
use crate::harness::verify::{
    verify_degenerate_bound, verify_sum_bound, verify_triangle_bound,
};
use crate::harness::{IneqCheck, Relation, VerifierReport};
use crate::matroid::{census, circuits_through};
use crate::pointset::{
    affine_layer, projective, random_density, random_triangle_free, PointSet,
};
use crate::regularity::{find_regular_subspace, is_regular, RegularityCert};
use crate::spectral::{count_sum_tuples, uniformity};
use crate::Rational;

/// Exact toolkit for point sets in GF(2)^n: spectra, circuits, critical
/// numbers, regularity, and executable verification of the bounds that
/// connect them.
#[derive(Parser)]
#[command(name = "gf2lab", version, arg_required_else_help = true)]
struct Cli {
    /// Worker threads; falls back to the GF2LAB_THREADS variable, then to
    /// one thread per core
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Omit runtime fields so identical configurations emit identical bytes
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Run the fast subset of the verification suites and exit
    #[arg(long)]
    self_test: bool,

    /// Seed for --self-test
    #[arg(long, default_value_t = 7)]
    seed: u64,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate point sets in the .gf2set format
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Character-sum spectrum utilities
    Spectral {
        #[command(subcommand)]
        action: SpectralAction,
    },
    /// Circuit enumeration and censuses
    Matroid {
        #[command(subcommand)]
        action: MatroidAction,
    },
    /// Critical numbers: smallest cover by affine layers
    Critical {
        #[command(subcommand)]
        action: CriticalAction,
    },
    /// Coset regularity checks and refinement
    Regularity {
        #[command(subcommand)]
        action: RegularityAction,
    },
    /// Verification experiments emitting JSON report arrays
    Verify {
        #[command(subcommand)]
        subject: VerifySubject,
    },
    /// Symbolic constants ledger for a density threshold and circuit size
    Constants {
        /// Density threshold as p/q
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,

        /// Circuit size; odd, at least 5
        #[arg(short)]
        k: u32,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// All nonzero vectors of GF(2)^n
    Projective {
        #[arg(short)]
        n: usize,

        /// Output file; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The layer {v : gamma·v = 1}
    AffineLayer {
        /// Character as a 0/1 string, highest coordinate first
        #[arg(long)]
        gamma: String,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Every vector kept independently with the given probability
    RandomDensity {
        #[arg(short)]
        n: usize,

        /// Keep probability as p/q
        #[arg(long, value_parser = parse_rational)]
        density: Rational,

        #[arg(long, default_value_t = 7)]
        seed: u64,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random set with no three distinct elements summing to zero
    RandomTriangleFree {
        #[arg(short)]
        n: usize,

        #[arg(long, default_value_t = 7)]
        seed: u64,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SpectralAction {
    /// Uniformity defect: the largest |correlation| over nonzero characters
    Uniformity {
        input: PathBuf,

        /// Threshold p/q; exit 1 when the defect ratio exceeds it
        #[arg(long, value_parser = parse_rational)]
        eps: Option<Rational>,
    },
    /// CSV table of N_k(x), the ordered k-tuples of members summing to x
    CountSums {
        input: PathBuf,

        #[arg(short)]
        k: u32,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MatroidAction {
    /// Per-element counts of size-k circuits
    Census {
        input: PathBuf,

        #[arg(short)]
        k: usize,

        /// JSON instead of CSV
        #[arg(long)]
        json: bool,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the size-k circuits through one element
    Circuits {
        input: PathBuf,

        /// Element as a 0/1 string
        #[arg(short)]
        x: String,

        #[arg(short)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum CriticalAction {
    /// Exact value by branch-and-bound over independent character sets
    Exact { input: PathBuf },
    /// Greedy upper bound with its cover certificate
    Greedy { input: PathBuf },
}

#[derive(Subcommand)]
enum RegularityAction {
    /// Check one subspace; exit 1 when it is irregular
    Check {
        input: PathBuf,

        /// Basis file (one 0/1 row per basis vector); full space when omitted
        #[arg(long)]
        subspace: Option<PathBuf>,

        /// Regularity parameter p/q
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// Refine the full space down to a regular subspace
    Find {
        input: PathBuf,

        #[arg(long, value_parser = parse_rational)]
        eps: Rational,

        /// Also write the refinement trace to this JSON file
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifySubject {
    /// Sum-count lower bound: 2^n·N_k(x) >= |A|^k - U^(k-2)·2^(2n)
    SumBound {
        /// Ambient dimension for random trials
        #[arg(long, default_value_t = 8)]
        n: usize,

        /// Tuple length
        #[arg(long, default_value_t = 3)]
        k: u32,

        #[arg(long, default_value_t = 20)]
        trials: u32,

        #[arg(long, default_value_t = 7)]
        seed: u64,

        /// Density of the random sets
        #[arg(long, value_parser = parse_rational)]
        density: Option<Rational>,

        /// Verify this file instead of random sets
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Degenerate-tuple upper bound: |S0(A,k;x)| <= 2^k·|A|^(k-2)
    DegenerateBound {
        #[arg(long, default_value_t = 6)]
        n: usize,

        #[arg(long, default_value_t = 3)]
        k: usize,

        #[arg(long, default_value_t = 20)]
        trials: u32,

        #[arg(long, default_value_t = 7)]
        seed: u64,

        #[arg(long, value_parser = parse_rational)]
        density: Option<Rational>,

        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Zero-triple lower bound: 2^n·T >= |A1||A2||A3| - U1·2^(2n)
    TriangleBound {
        #[arg(long, default_value_t = 8)]
        n: usize,

        #[arg(long, default_value_t = 20)]
        trials: u32,

        #[arg(long, default_value_t = 7)]
        seed: u64,

        #[arg(long, value_parser = parse_rational)]
        density: Option<Rational>,

        /// Verify this file (used for all three sets) instead of random ones
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Structure dichotomy: cover certificate or exact circuit statistics
    Dichotomy {
        input: PathBuf,

        /// Circuit size; odd, at least 5
        #[arg(short, default_value_t = 5)]
        k: u32,

        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// Flat-or-triangle procedure on one set
    FlatOrTriangle {
        input: PathBuf,

        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// The full property-suite battery
    Suites {
        #[arg(long, default_value_t = 7)]
        seed: u64,

        /// Fast subset (the --self-test sizes)
        #[arg(long)]
        quick: bool,
    },
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("expected an integer numerator, got {num:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("expected an integer denominator, got {den:?}"))?;
    if d <= BigInt::zero() {
        return Err(format!("denominator must be positive in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

fn configure_threads(flag: Option<usize>) {
    let count = flag.or_else(|| {
        std::env::var("GF2LAB_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(c) = count.filter(|&c| c > 0) {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(c)
            .build_global();
    }
}

fn read_set(path: &Path) -> Result<PointSet> {
    let text =
        std::fs::read_to_string(path).map_err(Error::io(path.display().to_string()))?;
    PointSet::parse_gf2set(&text)
}

/// Writes a line to stdout, tolerating a consumer that closed the pipe
/// early; the exit code still reflects the real verdict.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn write_text(output: Option<&PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, content).map_err(Error::io(path.display().to_string()))
        }
        None => {
            emit(content);
            Ok(())
        }
    }
}

fn print_json(value: &Value) {
    emit(&serde_json::to_string_pretty(value).expect("plain data"));
}

fn vector_strings(vs: &[GF2Vector]) -> Vec<String> {
    vs.iter().map(ToString::to_string).collect()
}

fn subspace_json(h: &Subspace) -> Value {
    json!({
        "ambient_dim": h.ambient_dim(),
        "dim": h.dim(),
        "codim": h.codim(),
        "basis": vector_strings(h.basis()),
    })
}

fn critical_json(r: &CriticalResult) -> Value {
    json!({
        "value": r.value,
        "witness_basis": vector_strings(&r.witness_basis),
        "method": r.method.to_string(),
        "nodes_expanded": r.nodes_expanded,
    })
}

/// Listed bad cosets are capped; the count is always exact.
const MAX_LISTED_COSETS: usize = 64;

fn cert_json(cert: &RegularityCert) -> Value {
    let listed: Vec<Value> = cert
        .bad_cosets
        .iter()
        .take(MAX_LISTED_COSETS)
        .map(|b| {
            json!({
                "rep": b.rep.to_string(),
                "witness": b.witness.to_string(),
                "correlation_abs": b.correlation_abs,
            })
        })
        .collect();
    json!({
        "subspace": subspace_json(&cert.subspace),
        "epsilon": cert.epsilon.to_string(),
        "regular": cert.regular,
        "bad_coset_count": cert.bad_cosets.len(),
        "bad_cosets": listed,
        "bad_mass": cert.bad_mass,
    })
}

/// Runs the parsed command line. The boolean is the verification verdict;
/// commands with nothing to verify return true.
fn execute(cli: Cli) -> Result<bool> {
    if cli.self_test {
        if cli.command.is_some() {
            return Err(Error::InvalidInput(
                "--self-test does not combine with a subcommand".into(),
            ));
        }
        let mut all = true;
        for mut outcome in run_all(cli.seed, true)? {
            if cli.no_timestamp {
                outcome.report.strip_runtime();
            }
            emit(&format!(
                "{}: {} ({} comparisons)",
                outcome.name,
                if outcome.report.pass { "pass" } else { "FAIL" },
                outcome.report.checked
            ));
            all &= outcome.report.pass;
        }
        return Ok(all);
    }
    let Some(command) = cli.command else {
        return Err(Error::InvalidInput(
            "a subcommand is required; see --help".into(),
        ));
    };
    match command {
        Command::Gen { family } => run_gen(family).map(|()| true),
        Command::Spectral { action } => run_spectral(action),
        Command::Matroid { action } => run_matroid(action).map(|()| true),
        Command::Critical { action } => run_critical(action).map(|()| true),
        Command::Regularity { action } => run_regularity(action),
        Command::Verify { subject } => run_verify(subject, cli.no_timestamp),
        Command::Constants { alpha, k } => {
            let ledger = theorem_constants(&alpha, k)?;
            print_json(&ledger.to_json());
            Ok(true)
        }
    }
}

fn run_gen(family: GenFamily) -> Result<()> {
    let (set, output) = match family {
        GenFamily::Projective { n, output } => (projective(n)?, output),
        GenFamily::AffineLayer { gamma, output } => {
            (affine_layer(GF2Vector::parse_bits(&gamma)?)?, output)
        }
        GenFamily::RandomDensity {
            n,
            density,
            seed,
            output,
        } => (random_density(n, &density, seed)?, output),
        GenFamily::RandomTriangleFree { n, seed, output } => {
            (random_triangle_free(n, seed)?, output)
        }
    };
    write_text(output.as_ref(), &set.to_gf2set_string())
}

fn run_spectral(action: SpectralAction) -> Result<bool> {
    match action {
        SpectralAction::Uniformity { input, eps } => {
            let set = read_set(&input)?;
            let report = uniformity(&set);
            let uniform = eps.as_ref().map(|e| report.is_uniform(e));
            print_json(&json!({
                "ambient_dim": report.ambient_dim,
                "cardinality": report.cardinality,
                "max_abs_correlation": report.max_abs_correlation,
                "witness": report.witness.map(|w| w.to_string()),
                "epsilon_star": report.epsilon_star.to_string(),
                "vacuously_uniform": report.vacuously_uniform,
                "epsilon": eps.as_ref().map(ToString::to_string),
                "uniform": uniform,
            }));
            Ok(uniform.unwrap_or(true))
        }
        SpectralAction::CountSums { input, k, output } => {
            let set = read_set(&input)?;
            let counts = count_sum_tuples(&set, k)?;
            let n = set.ambient_dim();
            let mut csv = String::from("x,count\n");
            for (bits, count) in counts.iter().enumerate() {
                let x = GF2Vector::new(bits as u32, n)?;
                csv.push_str(&format!("{x},{count}\n"));
            }
            write_text(output.as_ref(), &csv)?;
            Ok(true)
        }
    }
}

fn run_matroid(action: MatroidAction) -> Result<()> {
    match action {
        MatroidAction::Census {
            input,
            k,
            json: as_json,
            output,
        } => {
            let set = read_set(&input)?;
            let result = census(&set, k)?;
            if as_json {
                let per_element: Vec<Value> = result
                    .per_element
                    .iter()
                    .map(|(e, c)| json!({ "element": e.to_string(), "count": c }))
                    .collect();
                let rendered = json!({
                    "k": result.k,
                    "per_element": per_element,
                    "total_circuits": result.total_circuits,
                    "max_count": result.max_count,
                    "max_witness": result.max_witness.map(|w| w.to_string()),
                });
                write_text(
                    output.as_ref(),
                    &serde_json::to_string_pretty(&rendered).expect("plain data"),
                )
            } else {
                write_text(output.as_ref(), &result.to_csv())
            }
        }
        MatroidAction::Circuits { input, x, k } => {
            let set = read_set(&input)?;
            let element = GF2Vector::parse_bits(&x)?;
            let circuits = circuits_through(&set, element, k)?;
            let listed: Vec<Vec<String>> = circuits
                .iter()
                .map(|c| vector_strings(c.elements()))
                .collect();
            print_json(&json!({
                "element": element.to_string(),
                "k": k,
                "count": listed.len(),
                "circuits": listed,
            }));
            Ok(())
        }
    }
}

fn run_critical(action: CriticalAction) -> Result<()> {
    let result = match action {
        CriticalAction::Exact { input } => critical_number(&read_set(&input)?)?,
        CriticalAction::Greedy { input } => greedy_cover(&read_set(&input)?)?.to_result(),
    };
    print_json(&critical_json(&result));
    Ok(())
}

fn run_regularity(action: RegularityAction) -> Result<bool> {
    match action {
        RegularityAction::Check {
            input,
            subspace,
            eps,
        } => {
            let set = read_set(&input)?;
            let h = match subspace {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(Error::io(path.display().to_string()))?;
                    Subspace::parse_text(&text, Some(set.ambient_dim()))?
                }
                None => Subspace::full(set.ambient_dim()),
            };
            let cert = is_regular(&set, &h, &eps)?;
            print_json(&cert_json(&cert));
            Ok(cert.regular)
        }
        RegularityAction::Find { input, eps, trace } => {
            let set = read_set(&input)?;
            let result = find_regular_subspace(&set, &eps)?;
            let steps: Vec<Value> = result
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "dim_before": s.dim_before,
                        "bad_cosets": s.bad_cosets,
                        "bad_mass": s.bad_mass,
                        "section_witness": s.section_witness.to_string(),
                        "lifted_witness": s.lifted_witness.to_string(),
                    })
                })
                .collect();
            let rendered = json!({
                "steps": steps,
                "certificate": cert_json(&result.certificate),
            });
            if let Some(path) = trace {
                let text =
                    serde_json::to_string_pretty(&rendered).expect("plain data");
                std::fs::write(&path, text)
                    .map_err(Error::io(path.display().to_string()))?;
            }
            print_json(&rendered);
            Ok(true)
        }
    }
}

/// Attaches extra keys to a report's JSON rendering.
fn annotated(report: &VerifierReport, extra: &[(&str, Value)]) -> Value {
    let mut value = report.to_json();
    let map = value.as_object_mut().expect("reports render as objects");
    for (key, v) in extra {
        map.insert((*key).to_string(), v.clone());
    }
    value
}

fn run_verify(subject: VerifySubject, no_timestamp: bool) -> Result<bool> {
    let mut reports: Vec<Value> = Vec::new();
    let mut all = true;
    let mut keep = |report: &mut VerifierReport, extra: &[(&str, Value)]| {
        if no_timestamp {
            report.strip_runtime();
        }
        all &= report.pass;
        reports.push(annotated(report, extra));
    };
    match subject {
        VerifySubject::SumBound {
            n,
            k,
            trials,
            seed,
            density,
            input,
        } => {
            let p = density.unwrap_or_else(|| Rational::new(1.into(), 2.into()));
            match input {
                Some(path) => {
                    let mut report = verify_sum_bound(&read_set(&path)?, k)?;
                    keep(&mut report, &[]);
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for trial in 0..trials {
                        let set = random_density(n, &p, rng.gen())?;
                        let mut report = verify_sum_bound(&set, k)?;
                        keep(&mut report, &[("trial", json!(trial))]);
                    }
                }
            }
        }
        VerifySubject::DegenerateBound {
            n,
            k,
            trials,
            seed,
            density,
            input,
        } => {
            let p = density.unwrap_or_else(|| Rational::new(1.into(), 2.into()));
            match input {
                Some(path) => {
                    let set = read_set(&path)?;
                    // check every member as the target
                    for member in set.iter() {
                        let mut report = verify_degenerate_bound(&set, k, member)?;
                        keep(&mut report, &[]);
                    }
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for trial in 0..trials {
                        let set = random_density(n, &p, rng.gen())?;
                        let target = GF2Vector::new(rng.gen_range(0..(1u32 << n)), n)?;
                        let mut report = verify_degenerate_bound(&set, k, target)?;
                        keep(&mut report, &[("trial", json!(trial))]);
                    }
                }
            }
        }
        VerifySubject::TriangleBound {
            n,
            trials,
            seed,
            density,
            input,
        } => {
            let p = density.unwrap_or_else(|| Rational::new(1.into(), 2.into()));
            match input {
                Some(path) => {
                    let set = read_set(&path)?;
                    let mut report = verify_triangle_bound(&set, &set, &set)?;
                    keep(&mut report, &[]);
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for trial in 0..trials {
                        let a1 = random_density(n, &p, rng.gen())?;
                        let a2 = random_density(n, &p, rng.gen())?;
                        let a3 = random_density(n, &p, rng.gen())?;
                        let mut report = verify_triangle_bound(&a1, &a2, &a3)?;
                        keep(&mut report, &[("trial", json!(trial))]);
                    }
                }
            }
        }
        VerifySubject::Dichotomy { input, k, eps } => {
            let set = read_set(&input)?;
            let outcome = dichotomy_experiment(&set, k, &eps)?;
            let branch = match &outcome.branch {
                DichotomyBranch::CriticalBound { codim, cover } => json!({
                    "kind": "critical-bound",
                    "codim": codim,
                    "cover": vector_strings(cover),
                }),
                DichotomyBranch::CircuitCount {
                    element,
                    anchor,
                    codim,
                    nondegenerate,
                    circuits,
                    enumerated,
                    census_count,
                    scaled_ratio,
                } => json!({
                    "kind": "circuit-count",
                    "element": element.to_string(),
                    "anchor": anchor.to_string(),
                    "codim": codim,
                    "nondegenerate_tuples": nondegenerate.to_string(),
                    "circuits_through_element": circuits.to_string(),
                    "enumerated_recount": enumerated,
                    "census_recount": census_count,
                    "scaled_ratio": scaled_ratio.to_string(),
                }),
            };
            let mut extra = vec![("branch", branch)];
            if let Some(ledger) = &outcome.constants {
                extra.push(("constants", ledger.to_json()));
            }
            let mut report = outcome.report;
            keep(&mut report, &extra);
        }
        VerifySubject::FlatOrTriangle { input, eps } => {
            let set = read_set(&input)?;
            let run = weaker_procedure(&set, &eps)?;
            let mut report = flat_or_triangle_report(&set, &run)?;
            let extra = [("procedure", weaker_json(&run))];
            keep(&mut report, &extra);
        }
        VerifySubject::Suites { seed, quick } => {
            for outcome in run_all(seed, quick)? {
                let mut report = outcome.report;
                keep(&mut report, &[("suite", json!(outcome.name))]);
            }
        }
    }
    print_json(&Value::Array(reports));
    Ok(all)
}

/// Synthesizes the verification rows for one flat-or-triangle run: a flat
/// must carry at most an epsilon fraction of its points from X, a triangle
/// must be three distinct members summing to zero.
fn flat_or_triangle_report(x: &PointSet, run: &WeakerRun) -> Result<VerifierReport> {
    let mut report = VerifierReport::new(
        "flat-or-triangle outcome check",
        format!(
            "n = {}, |X| = {}, epsilon = {}, delta = {}",
            x.ambient_dim(),
            x.len(),
            run.epsilon,
            run.delta
        ),
    );
    match &run.outcome {
        WeakerOutcome::Flat(f) => {
            let inside = x.members_in_subspace(f)?.len();
            report.push(IneqCheck::new(
                format!("flat of dim {}: q·|F ∩ X| <= p·2^dim", f.dim()),
                BigInt::from(inside) * run.epsilon.denom(),
                Relation::Le,
                run.epsilon.numer() * (BigInt::from(1) << f.dim()),
            ));
            report.push(IneqCheck::new(
                "rounds refined",
                BigInt::from(run.achieved_codim()),
                Relation::Le,
                BigInt::from(x.ambient_dim()),
            ));
        }
        WeakerOutcome::Triangle(circuit) => {
            let sum = circuit
                .elements()
                .iter()
                .fold(GF2Vector::zero(x.ambient_dim()), |acc, &e| acc.add(e));
            report.push(IneqCheck::new(
                "triangle sums to zero",
                BigInt::from(sum.bits()),
                Relation::Eq,
                BigInt::zero(),
            ));
            let members = circuit
                .elements()
                .iter()
                .filter(|&&e| x.contains(e).unwrap_or(false))
                .count();
            report.push(IneqCheck::new(
                "triangle members belong to the input",
                BigInt::from(members),
                Relation::Eq,
                BigInt::from(3),
            ));
        }
    }
    Ok(report)
}

fn weaker_json(run: &WeakerRun) -> Value {
    let rounds: Vec<Value> = run
        .rounds
        .iter()
        .map(|r| {
            json!({
                "dim": r.dim,
                "members_inside": r.members_inside,
                "anchor": r.anchor.map(|a| a.to_string()),
                "refined_by": r.refined_by.map(|w| w.to_string()),
            })
        })
        .collect();
    let outcome = match &run.outcome {
        WeakerOutcome::Flat(f) => json!({ "kind": "flat", "subspace": subspace_json(f) }),
        WeakerOutcome::Triangle(c) => json!({
            "kind": "triangle",
            "elements": vector_strings(c.elements()),
        }),
    };
    json!({
        "epsilon": run.epsilon.to_string(),
        "delta": run.delta.to_string(),
        "achieved_codim": run.achieved_codim(),
        "rounds": rounds,
        "outcome": outcome,
    })
}

fn emit_err(err: &Error) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr().lock(), "{err}");
}

/// Entry point: parses arguments, runs, and maps the outcome to the exit
/// code contract.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err @ (Error::Counterexample { .. } | Error::Infeasible(_))) => {
            emit_err(&err);
            ExitCode::from(1)
        }
        Err(err) => {
            emit_err(&err);
            ExitCode::from(2)
        }
    }
}
