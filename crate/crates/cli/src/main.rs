//! `upqn`: command-line front end for the u(p,q|n) unitarity toolkit.
//!
//! Exit codes: 0 success, 1 a check came out false (`howe`, `selftest`),
//! 2 input or precondition error, 3 a negative Gram witness (`gram`).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use upqn::classifier::{
    check_u, classical_upq, conditions_holding, dual_unitary_lowest, gamma_bound_violation, gl_nqp_dual_unitary_highest, gl_nqp_unitary_lowest,
    integral_classify, kmod_type1, type1_finite, type2_finite, Condition, Verdict,
};
use upqn::oscillator::{commutation_fuzz_seeded, joint_hwv, monomial_count};
use upqn::sampling::Sampler;
use upqn::superalgebra::{star_killing_exhaustive, tau_check};
use upqn::superweights::{dominance_violation, SwappedWeight};
use upqn::verma::{certify, CertVerdict};
use upqn::{rational, Rational, Signature, Weight};

const THREADS_VAR: &str = "UPQN_THREADS";

#[derive(Parser)]
#[command(name = "upqn", version, about = "Unitarity of highest weight modules of u(p,q|n), exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one weight.
    Classify(ClassifyArgs),
    /// Classify every point of a rational lattice box.
    Scan(ScanArgs),
    /// Certify positivity of the Verma Gram matrices up to a height.
    Gram(GramArgs),
    /// Extract joint highest weight vectors in the oscillator model.
    Howe(HoweArgs),
    /// Run the cross-module invariant batteries.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Unitary highest weight u(p,q|n)-module.
    Hw,
    /// Dual-unitary lowest weight module with the given lowest weight.
    LwDual,
    /// Unitary lowest weight gl(n|q+p)-module; weight is "n entries;m entries".
    NqpLw,
    /// Dual-unitary highest weight gl(n|q+p)-module; weight is "n entries;m entries".
    NqpHwDual,
    /// Classical u(p,q) criterion (n = 0).
    Classical,
    /// Type-1 unitary finite-dimensional gl(m|n)-module.
    FiniteT1,
    /// Type-2 unitary finite-dimensional gl(m|n)-module.
    FiniteT2,
    /// Integral classification with its branch.
    Integral,
}

#[derive(clap::Args)]
struct ClassifyArgs {
    /// p,q,n
    #[arg(long)]
    signature: String,
    /// "λ_1,…,λ_m;ω_1,…,ω_n" with rational entries such as -3/2
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, value_enum, default_value = "hw")]
    mode: Mode,
    /// With mode hw, also run the gamma bound over theta shapes up to this height.
    #[arg(long)]
    gamma_cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct ScanArgs {
    /// p,q,n
    #[arg(long)]
    signature: String,
    /// One "lo:hi[:step]" per coordinate, in order λ_1…λ_m then ω_1…ω_n.
    #[arg(long = "range", allow_hyphen_values = true, required = true)]
    ranges: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// When positive, also run the Gram oracle to this height and report agreement.
    #[arg(long, default_value_t = 0)]
    height_cap: usize,
}

#[derive(clap::Args)]
struct GramArgs {
    #[arg(long)]
    signature: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, default_value_t = 6)]
    max_height: usize,
}

#[derive(clap::Args)]
struct HoweArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    signature: String,
    #[arg(long)]
    max_degree: usize,
    /// Refuse runs whose truncated space has more monomials than this.
    #[arg(long, default_value_t = 200_000)]
    limit: u128,
}

#[derive(clap::Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
}

/// An input error, reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e.0);
        return ExitCode::from(2);
    }
    let out = match cli.command {
        Command::Classify(a) => cmd_classify(&a),
        Command::Scan(a) => cmd_scan(&a),
        Command::Gram(a) => cmd_gram(&a),
        Command::Howe(a) => cmd_howe(&a),
        Command::Selftest(a) => cmd_selftest(&a),
    };
    out.unwrap_or_else(|e| {
        eprintln!("error: {}", e.0);
        ExitCode::from(2)
    })
}

fn configure_threads() -> Result<(), InputError> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .map_err(|_| InputError(format!("{THREADS_VAR}={v} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn parse_signature(text: &str) -> Result<Signature, InputError> {
    Ok(text.parse::<Signature>()?)
}

fn dominant_weight(sig: Signature, text: &str) -> Result<Weight, InputError> {
    let w = Weight::parse(sig, text)?;
    if let Some(why) = dominance_violation(&w) {
        return Err(InputError(format!("weight {w} is not dominant: {why}")));
    }
    Ok(w)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("json values serialize"));
}

fn cmd_classify(a: &ClassifyArgs) -> CliResult {
    let sig = parse_signature(&a.signature)?;
    let out = match a.mode {
        Mode::Hw => {
            let w = dominant_weight(sig, &a.weight)?;
            let mut v = check_u(&w)?.to_json();
            if let Some(cap) = a.gamma_cap {
                v["gamma_bound"] = gamma_report(&w, cap)?;
            }
            v
        }
        Mode::LwDual => {
            let w = Weight::parse(sig, &a.weight)?;
            let neg = -&w;
            if let Some(why) = dominance_violation(&neg) {
                return Err(InputError(format!("negated weight {neg} is not dominant: {why}")));
            }
            dual_unitary_lowest(&w)?.to_json()
        }
        Mode::NqpLw | Mode::NqpHwDual => {
            let u = SwappedWeight::parse(sig, &a.weight)?;
            let target = match a.mode {
                Mode::NqpLw => u.tau(),
                _ => -u.tau(),
            };
            if let Some(why) = dominance_violation(&target) {
                return Err(InputError(format!("translated weight {target} is not dominant: {why}")));
            }
            let v: Verdict = match a.mode {
                Mode::NqpLw => gl_nqp_unitary_lowest(&u)?,
                _ => gl_nqp_dual_unitary_highest(&u)?,
            };
            v.to_json()
        }
        Mode::Classical => json!({ "unitary": classical_upq(&dominant_weight(sig, &a.weight)?)? }),
        Mode::FiniteT1 => json!({ "unitary": type1_finite(&dominant_weight(sig, &a.weight)?)? }),
        Mode::FiniteT2 => json!({ "unitary": type2_finite(&dominant_weight(sig, &a.weight)?)? }),
        Mode::Integral => integral_classify(&dominant_weight(sig, &a.weight)?)?.to_json(),
    };
    print_json(&out);
    Ok(ExitCode::SUCCESS)
}

/// Three-valued gamma bound: `evidence_positive_at_cap` when γ ≤ 0 on every
/// admissible shape, `inconclusive` when some shape has γ > 0 (shapes
/// over-approximate the k-types, so this is not a proof of non-unitarity),
/// and `not_applicable` when L₀(Λ) is not type-1 unitary.
fn gamma_report(w: &Weight, cap: usize) -> Result<Value, InputError> {
    if !kmod_type1(w)? {
        return Ok(json!({ "cap": cap, "status": "not_applicable" }));
    }
    Ok(match gamma_bound_violation(w, cap)? {
        None => json!({ "cap": cap, "status": "evidence_positive_at_cap" }),
        Some((theta, g)) => json!({
            "cap": cap,
            "status": "inconclusive",
            "theta": theta.to_weight().to_string(),
            "gamma": rational::format(&g),
        }),
    })
}

/// Points lo, lo+step, …, ≤ hi.
fn parse_range(text: &str) -> Result<Vec<Rational>, InputError> {
    let parts: Vec<&str> = text.split(':').collect();
    let (lo, hi, step) = match parts.as_slice() {
        [lo, hi] => (rational::parse(lo)?, rational::parse(hi)?, Rational::from_integer(1.into())),
        [lo, hi, step] => (rational::parse(lo)?, rational::parse(hi)?, rational::parse(step)?),
        _ => return Err(InputError(format!("range {text:?} is not lo:hi[:step]"))),
    };
    if step <= Rational::from_integer(0.into()) {
        return Err(InputError(format!("range {text:?} needs a positive step")));
    }
    if lo > hi {
        return Err(InputError(format!("range {text:?} is empty")));
    }
    let mut out = Vec::new();
    let mut x = lo;
    while x <= hi {
        out.push(x.clone());
        x += &step;
    }
    Ok(out)
}

struct Row {
    weight: Weight,
    dominant: bool,
    verdict: Option<Verdict>,
    agreement: Option<bool>,
}

fn scan_row(sig: Signature, entries: Vec<Rational>, height_cap: usize) -> Result<Row, String> {
    let weight = Weight::from_entries(sig, entries).map_err(|e| e.to_string())?;
    if dominance_violation(&weight).is_some() {
        return Ok(Row {
            weight,
            dominant: false,
            verdict: None,
            agreement: None,
        });
    }
    let verdict = check_u(&weight).map_err(|e| e.to_string())?;
    let agreement = if height_cap > 0 {
        let c = certify(&weight, height_cap).map_err(|e| e.to_string())?;
        Some((c.verdict == CertVerdict::PsdUpToCap) == verdict.unitary)
    } else {
        None
    };
    Ok(Row {
        weight,
        dominant: true,
        verdict: Some(verdict),
        agreement,
    })
}

fn cmd_scan(a: &ScanArgs) -> CliResult {
    let sig = parse_signature(&a.signature)?;
    sig.require_noncompact()?;
    if a.ranges.len() != sig.dim() {
        return Err(InputError(format!(
            "{} ranges given but signature {sig} has {} coordinates",
            a.ranges.len(),
            sig.dim()
        )));
    }
    let axes = a.ranges.iter().map(|r| parse_range(r)).collect::<Result<Vec<_>, _>>()?;
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x.clone());
                    q
                })
            })
            .collect();
    }
    let rows = points
        .into_par_iter()
        .map(|p| scan_row(sig, p, a.height_cap))
        .collect::<Result<Vec<_>, _>>()
        .map_err(InputError)?;

    match a.format {
        Format::Csv => {
            let mut out = String::from("signature,weight,dominant,unitary,condition,i,mu,j,oracle_agreement\n");
            let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
            for r in &rows {
                let v = r.verdict.as_ref();
                writeln!(
                    out,
                    "\"{}\",\"{}\",{},{},{},{},{},{},{}",
                    sig,
                    r.weight,
                    r.dominant,
                    v.map(|v| v.unitary.to_string()).unwrap_or_default(),
                    v.and_then(|v| v.condition).map(|c| c.to_string()).unwrap_or_default(),
                    opt(v.and_then(|v| v.witnesses.i)),
                    opt(v.and_then(|v| v.witnesses.mu)),
                    opt(v.and_then(|v| v.witnesses.j)),
                    r.agreement.map(|b| b.to_string()).unwrap_or_default(),
                )
                .expect("writing to a string");
            }
            print!("{out}");
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "signature": sig.to_string(),
                        "weight": r.weight.to_string(),
                        "dominant": r.dominant,
                        "verdict": r.verdict.as_ref().map(Verdict::to_json),
                        "oracle_agreement": r.agreement,
                    })
                })
                .collect();
            print_json(&Value::Array(list));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gram(a: &GramArgs) -> CliResult {
    let sig = parse_signature(&a.signature)?;
    let w = dominant_weight(sig, &a.weight)?;
    let cert = certify(&w, a.max_height)?;
    print_json(&cert.to_json());
    Ok(match cert.verdict {
        CertVerdict::PsdUpToCap => ExitCode::SUCCESS,
        CertVerdict::NegativeWitness => ExitCode::from(3),
    })
}

fn cmd_howe(a: &HoweArgs) -> CliResult {
    let sig = parse_signature(&a.signature)?;
    if a.d == 0 {
        return Err(InputError("--d must be positive".into()));
    }
    let count = monomial_count(a.d, sig, a.max_degree);
    if count > a.limit {
        return Err(InputError(format!(
            "{count} monomials up to degree {} exceed the limit {}",
            a.max_degree, a.limit
        )));
    }
    let report = joint_hwv(a.d, sig, a.max_degree)?;
    print_json(&report.to_json());
    for lam in &report.missing {
        eprintln!("missing: no joint highest weight vector for {lam}");
    }
    Ok(if report.verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_selftest(a: &SelftestArgs) -> CliResult {
    let mut sampler = Sampler::new(a.seed);
    let weights: Vec<Weight> = (0..a.samples)
        .map(|_| {
            let s = sampler.signature(3);
            sampler.dominant(s)
        })
        .collect();
    let mut all_ok = true;
    let mut line = |name: &str, ok: bool, note: String| {
        all_ok &= ok;
        println!("{} {name}{note}", if ok { "PASS" } else { "FAIL" });
    };

    // U5 and U6 can hold together, since each chooses its own j; such overlaps
    // are counted separately and every other pair must be disjoint.
    let holding: Vec<Vec<_>> = weights
        .par_iter()
        .map(|w| conditions_holding(w).map(|h| h.into_iter().map(|(c, _)| c).collect()))
        .collect::<Result<_, _>>()?;
    let overlap_u5_u6 = holding.iter().filter(|h| h.as_slice() == [Condition::U5, Condition::U6]).count();
    let other = holding.iter().filter(|h| h.len() > 1).count() - overlap_u5_u6;
    line(
        "exclusivity",
        other == 0,
        format!(" ({} samples, {other} overlaps outside U5/U6, {overlap_u5_u6} U5/U6 overlaps)", weights.len()),
    );

    let duality = weights
        .par_iter()
        .map(|w| Ok::<_, upqn::Error>(dual_unitary_lowest(&-w)? == check_u(w)?))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    line("duality", duality, format!(" ({} samples)", weights.len()));

    let tau = [(1, 1, 1), (1, 2, 1)].iter().all(|&(p, q, n)| tau_check(Signature::new(p, q, n).expect("valid")));
    line("tau", tau, String::new());

    let sk = [(1, 1, 1), (2, 0, 1), (1, 0, 2), (1, 2, 1), (2, 1, 1), (3, 0, 1)]
        .iter()
        .all(|&(p, q, n)| star_killing_exhaustive(Signature::new(p, q, n).expect("valid")));
    line("star-killing", sk, String::new());

    let fuzz = [(1, (1, 1, 1)), (2, (1, 1, 1)), (2, (1, 1, 2))]
        .par_iter()
        .map(|&(d, (p, q, n))| commutation_fuzz_seeded(d, Signature::new(p, q, n).expect("valid"), 200, 3, a.seed))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    line("commutation-fuzz", fuzz, String::new());

    let first = weights.first().map(|w| format!("{} {w}", w.sig())).unwrap_or_default();
    println!("seed {} first sample {first}", a.seed);
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
