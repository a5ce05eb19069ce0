//! Command-line surface for the positroid laboratory.
//!
//! Machine-readable output (JSON or DOT) goes to standard output and is
//! byte-identical across identical invocations; diagnostics and timing go
//! to standard error. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use positroid_lab::external::{external_poset, BasisPoset};
use positroid_lab::gamma::{gamma, verify_recursion, GammaTrace};
use positroid_lab::linalg::RationalMatrix;
use positroid_lab::matroid::{Matroid, Subset};
use positroid_lab::positroid::{trivial_uip, uip};
use positroid_lab::uio::{catalan, enumerate_uios, UnitIntervalOrder};
use positroid_lab::verify::{
    check_basis_counts, check_order_condition_equivalence, check_psi_identity, minor_scan,
    run_all, to_pretty_json, CheckReport,
};

/// Default argument bounds; POSITROID_LAB_MAX_N raises any of them.
const MAX_ENUMERATION_N: usize = 7;
const MAX_POSET_N: usize = 6;
const MAX_RECURSION_N: usize = 5;
const MAX_EQUIVALENCE_RANK: usize = 4;
const MAX_PSI_N: usize = 4;
const MAX_MINOR_SCAN_RANK: usize = 4;

#[derive(Parser)]
#[command(
    name = "positroid-lab",
    version,
    about = "Unit interval positroids, external orders, and the poset recursion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th Catalan number.
    Catalan { n: usize },
    /// List every unit interval order on n elements as a zero-profile.
    EnumerateUios { n: usize },
    /// Print the antiadjacency matrix of the unit interval order with the
    /// given zero-profile (comma-separated, e.g. 2,1,0).
    Antiadjacency { profile: String },
    /// Extend an n x n matrix (JSON file) to its n x 2n representation.
    Psi { matrix: PathBuf },
    /// Build the unit interval positroid of a zero-profile.
    Uip { profile: String },
    /// List the bases of a matroid.
    Bases {
        #[command(flatten)]
        source: Source,
    },
    /// List the circuits of a matroid.
    Circuits {
        #[command(flatten)]
        source: Source,
    },
    /// Build the externally ordered poset of a matroid's bases.
    ExtPoset {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        format: Format,
    },
    /// Run the three-step recursion on the external poset of the rank-n
    /// trivial positroid.
    Gamma {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Run verification checks; exits nonzero if any check fails.
    Verify {
        #[command(flatten)]
        mode: VerifyMode,
    },
    /// Test every delete-then-contract minor of the rank-n trivial
    /// positroid for isomorphism with the positroids one rank down.
    MinorScan { rank: usize },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Rank of the trivial unit interval positroid.
    #[arg(long, value_name = "N")]
    trivial: Option<usize>,
    /// Path to a matroid JSON file ({"ground": …, "rank": …, "bases": […]}).
    #[arg(long, value_name = "FILE")]
    matroid: Option<PathBuf>,
    /// Zero-profile of a unit interval order (comma-separated).
    #[arg(long, value_name = "PROFILE")]
    profile: Option<String>,
}

#[derive(Args)]
struct Format {
    /// Emit Graphviz DOT instead of JSON.
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    /// Emit JSON (the default).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyMode {
    /// Compare the recursion output with the oracle poset at rank n.
    #[arg(long, value_name = "N")]
    recursion: Option<usize>,
    /// Check trivial-positroid basis counts up to rank n.
    #[arg(long, value_name = "N")]
    counts: Option<usize>,
    /// Check agreement of the two order formulations up to the given rank.
    #[arg(long, value_name = "RANK")]
    order_equivalence: Option<usize>,
    /// Check the extension minor identity at size n.
    #[arg(long, value_name = "N")]
    psi_identity: Option<usize>,
    /// Run the whole suite with ranged checks clamped to this maximum.
    #[arg(long, value_name = "MAX_N")]
    all: Option<usize>,
}

enum CliError {
    /// Bad arguments or malformed input: exit 2.
    Usage(String),
    /// A verification check failed or an internal invariant broke: exit 1.
    Failure(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn effective_bound(default: usize) -> usize {
    match std::env::var("POSITROID_LAB_MAX_N").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(raised) => default.max(raised),
        None => default,
    }
}

fn check_bound(what: &str, value: usize, default: usize) -> Result<(), CliError> {
    let bound = effective_bound(default);
    if value > bound {
        return Err(usage(format!(
            "{what} is limited to {bound}; set POSITROID_LAB_MAX_N to raise the bound at your own risk"
        )));
    }
    Ok(())
}

fn parse_profile(text: &str) -> Result<Vec<usize>, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(usage("the profile must contain at least one entry"));
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("profile entry {:?} is not a nonnegative integer", part.trim())))
        })
        .collect()
}

fn load_uio(text: &str, bound: usize) -> Result<UnitIntervalOrder, CliError> {
    let profile = parse_profile(text)?;
    check_bound("the number of elements", profile.len(), bound)?;
    UnitIntervalOrder::new(profile).map_err(|e| usage(e.to_string()))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn matroid_from_source(source: &Source, trivial_bound: usize) -> Result<Matroid, CliError> {
    if let Some(n) = source.trivial {
        check_bound("the trivial positroid rank", n, trivial_bound)?;
        return Ok(trivial_uip(n));
    }
    if let Some(path) = &source.matroid {
        let text = read_file(path)?;
        return serde_json::from_str(&text)
            .map_err(|e| usage(format!("{}: {e}", path.display())));
    }
    let profile = source.profile.as_deref().expect("clap enforces exactly one source");
    Ok(uip(&load_uio(profile, trivial_bound)?).matroid().clone())
}

fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        // A closed pipe (e.g. piping into `head`) is normal termination,
        // not an error worth reporting.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(1);
    }
}

#[derive(Serialize)]
struct CatalanJson {
    n: usize,
    catalan: String,
}

#[derive(Serialize)]
struct EnumerationJson {
    n: usize,
    count: usize,
    profiles: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct BasesJson {
    ground: usize,
    rank: usize,
    count: usize,
    bases: Vec<Subset>,
}

#[derive(Serialize)]
struct CircuitsJson {
    ground: usize,
    rank: usize,
    count: usize,
    circuits: Vec<Subset>,
}

#[derive(Serialize)]
struct GammaJson<'a> {
    n: usize,
    step1_map: Vec<(&'a Subset, &'a Subset)>,
    step2_map: Vec<(&'a Subset, &'a Subset)>,
    step3_map: Vec<(&'a Subset, &'a Subset)>,
    induced: &'a BasisPoset,
}

impl<'a> GammaJson<'a> {
    fn new(n: usize, trace: &'a GammaTrace) -> Self {
        let pairs = |m: &'a std::collections::BTreeMap<Subset, Subset>| {
            m.iter().collect::<Vec<(&Subset, &Subset)>>()
        };
        GammaJson {
            n,
            step1_map: pairs(trace.step1_map()),
            step2_map: pairs(trace.step2_map()),
            step3_map: pairs(trace.step3_map()),
            induced: trace.induced(),
        }
    }
}

/// Prints one check's timing diagnostics on standard error and returns
/// whether it passed.
fn report_check(report: &CheckReport) -> bool {
    let status = if report.passed { "pass" } else { "FAIL" };
    eprintln!(
        "{status}: {} in {:.3?} (bound {:?})",
        report.name, report.elapsed, report.bound
    );
    report.passed
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Catalan { n } => {
            let value = CatalanJson { n, catalan: catalan(n).to_string() };
            emit(&to_pretty_json(&value));
        }
        Command::EnumerateUios { n } => {
            check_bound("enumeration", n, MAX_ENUMERATION_N)?;
            let orders = enumerate_uios(n);
            let value = EnumerationJson {
                n,
                count: orders.len(),
                profiles: orders.iter().map(|u| u.profile().to_vec()).collect(),
            };
            emit(&to_pretty_json(&value));
        }
        Command::Antiadjacency { profile } => {
            let u = load_uio(&profile, MAX_ENUMERATION_N)?;
            emit(&to_pretty_json(&u.antiadjacency()));
        }
        Command::Psi { matrix } => {
            let text = read_file(&matrix)?;
            let a: RationalMatrix = serde_json::from_str(&text)
                .map_err(|e| usage(format!("{}: {e}", matrix.display())))?;
            let b = a.psi().map_err(|e| usage(e.to_string()))?;
            emit(&to_pretty_json(&b));
        }
        Command::Uip { profile } => {
            let u = load_uio(&profile, MAX_ENUMERATION_N)?;
            emit(&to_pretty_json(&uip(&u)));
        }
        Command::Bases { source } => {
            let m = matroid_from_source(&source, MAX_ENUMERATION_N)?;
            let value = BasesJson {
                ground: m.ground(),
                rank: m.rank(),
                count: m.bases().len(),
                bases: m.bases().to_vec(),
            };
            emit(&to_pretty_json(&value));
        }
        Command::Circuits { source } => {
            let m = matroid_from_source(&source, MAX_ENUMERATION_N)?;
            let circuits = m.circuits();
            let value = CircuitsJson {
                ground: m.ground(),
                rank: m.rank(),
                count: circuits.len(),
                circuits,
            };
            emit(&to_pretty_json(&value));
        }
        Command::ExtPoset { source, format } => {
            let m = matroid_from_source(&source, MAX_POSET_N)?;
            let poset = external_poset(&m);
            if format.dot {
                emit(&poset.to_dot());
            } else {
                emit(&to_pretty_json(&poset));
            }
        }
        Command::Gamma { n, format } => {
            check_bound("the recursion rank", n, MAX_RECURSION_N)?;
            let ex_pn = external_poset(&trivial_uip(n));
            let trace = gamma(&ex_pn, n).map_err(|e| CliError::Failure(e.to_string()))?;
            if format.dot {
                emit(&trace.to_dot());
            } else {
                emit(&to_pretty_json(&GammaJson::new(n, &trace)));
            }
        }
        Command::Verify { mode } => return run_verify(mode),
        Command::MinorScan { rank } => {
            check_bound("the minor scan rank", rank, MAX_MINOR_SCAN_RANK)?;
            let report = minor_scan(rank).map_err(|e| usage(e.to_string()))?;
            emit(&to_pretty_json(&report));
        }
    }
    Ok(())
}

fn run_verify(mode: VerifyMode) -> Result<(), CliError> {
    if let Some(n) = mode.recursion {
        check_bound("the recursion rank", n, MAX_RECURSION_N)?;
        let report = verify_recursion(n);
        emit(&to_pretty_json(&report));
        if !report.equal || !report.step1_order_preserved {
            return Err(CliError::Failure(format!(
                "recursion output disagrees with the oracle at n={n}"
            )));
        }
        return Ok(());
    }
    let single = |report: CheckReport| -> Result<(), CliError> {
        let passed = report_check(&report);
        emit(&to_pretty_json(&report));
        if passed {
            Ok(())
        } else {
            Err(CliError::Failure(format!("check {} failed", report.name)))
        }
    };
    if let Some(n) = mode.counts {
        check_bound("the basis count rank", n, MAX_POSET_N)?;
        return single(check_basis_counts(n));
    }
    if let Some(rank) = mode.order_equivalence {
        check_bound("the equivalence rank", rank, MAX_EQUIVALENCE_RANK)?;
        return single(check_order_condition_equivalence(rank));
    }
    if let Some(n) = mode.psi_identity {
        check_bound("the matrix size", n, MAX_PSI_N)?;
        if n < 1 {
            return Err(usage("the matrix size must be at least 1"));
        }
        return single(check_psi_identity(n, n, 50));
    }
    let max_n = mode.all.expect("clap enforces exactly one verify mode");
    check_bound("the suite maximum", max_n, MAX_POSET_N)?;
    let reports = run_all(max_n);
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report_check(report);
    }
    emit(&to_pretty_json(&reports));
    if all_passed {
        Ok(())
    } else {
        Err(CliError::Failure("one or more checks failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
