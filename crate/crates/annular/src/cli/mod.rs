//! The `annular` command-line front end.
//!
//! Thin argument handling over the library: `poly` prints counting
//! polynomials, `count` prints closed-form counts with optional brute-force
//! cross-checks, `enum` streams objects in canonical order, `verify` runs
//! the theorem suites as JSON lines, and `render` draws an annulus diagram
//! as SVG.
//!
//! Exit codes: 0 on success, 1 when a verification or `--check` comparison
//! fails, 2 on invalid flags or inconsistent parameters.
//!
//! `ANNULAR_THREADS` caps the worker count for parallel enumeration and
//! sweeps; output never depends on it.

mod render;

pub use render::{render_svg, RenderSpec};

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;

use crate::annulus::{
    enumerate_anc_b_with_bound, enumerate_anc_with_bound, enumerate_matchings_with_bound,
    AnnularPermutation, ProfileFilter, RotationPair, DEFAULT_ENUMERATION_BOUND,
};
use crate::formulas::{
    annular_catalan_q, annular_kreweras_q, annular_narayana1_q, annular_narayana2_q,
    annular_narayana3_q, bessis_reiner_x, catalan_q, count_anc, count_anc_b, count_anc_b_c,
    count_anc_b_crs, count_anc_b_profile, count_anc_b_weighted, count_anc_c, count_anc_crs,
    count_anc_profile, count_anc_weighted, kreweras_q, narayana_q, CycleProfile,
};
use crate::partitions::Partition;
use crate::qcalc::{eval_at_primitive_root, QPolynomial};
use crate::verify::{
    verify_bijection, verify_counts, verify_csp_annular, verify_disc_identities,
    verify_fixed_counts, verify_lemmas, verify_matchings, verify_polynomiality,
    verify_specializations, verify_sum_chain, verify_type_b, verify_unequal_orders, DiscBounds,
    LemmaBounds, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "annular",
    version,
    about = "Exact counting, q-analogues, and cyclic-sieving verification for annular noncrossing permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counting polynomial in q (human form and JSON), optionally
    /// its exact value at a root of unity or at q = 1
    Poly(PolyArgs),
    /// Print a closed-form count, optionally cross-checked by enumeration
    Count(CountArgs),
    /// Stream connected annular noncrossing permutations in canonical order
    Enum(EnumArgs),
    /// Run verification suites; JSON-lines report on stdout, exit 1 on any
    /// failed check
    Verify(VerifyArgs),
    /// Render an annulus diagram as a deterministic SVG file
    Render(RenderArgs),
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn err(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| err(format!("missing required flag --{flag}")))
}

fn require_ref<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| err(format!("missing required flag --{flag}")))
}

pub fn main() -> ExitCode {
    if let Ok(value) = std::env::var("ANNULAR_THREADS") {
        match value.parse::<usize>() {
            Ok(threads) if threads > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
            _ => {
                eprintln!("warning: ignoring unparseable ANNULAR_THREADS={value:?}");
            }
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly(args) => run_poly(args),
        Command::Count(args) => run_count(args),
        Command::Enum(args) => run_enum(args),
        Command::Verify(args) => run_verify(args),
        Command::Render(args) => run_render(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// poly

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    /// Annular q-Kreweras number of a full profile
    Kre,
    /// Annular q-Narayana number of type 1
    Nara1,
    /// Annular q-Narayana number of type 2
    Nara2,
    /// Annular q-Narayana number of type 3
    Nara3,
    /// Annular q-Catalan number
    Cat,
    /// Disc q-Kreweras number of a cycle type
    KreDisc,
    /// Disc q-Narayana number
    NaraDisc,
    /// Disc q-Catalan number
    CatDisc,
    /// Disc sieving polynomial of a cycle type
    BessisReiner,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    which: PolyKind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Total exterior cycle size
    #[arg(long = "R")]
    ext_weight: Option<u32>,
    /// Total interior cycle size
    #[arg(long = "S")]
    int_weight: Option<u32>,
    /// Cycle count for the disc q-Narayana number
    #[arg(long)]
    k: Option<u32>,
    /// Exterior cycle type, e.g. "(2,1)"
    #[arg(long)]
    alpha: Option<Partition>,
    /// Interior cycle type
    #[arg(long)]
    beta: Option<Partition>,
    /// Connected exterior cycle type (or the disc cycle type)
    #[arg(long)]
    lam: Option<Partition>,
    /// Connected interior cycle type
    #[arg(long)]
    mu: Option<Partition>,
    /// Evaluate exactly at a primitive d-th root of unity: "d" or "d,j"
    #[arg(long = "at-root")]
    at_root: Option<String>,
    /// Evaluate exactly at q = 1
    #[arg(long = "at-one")]
    at_one: bool,
}

/// Builds and validates a full cycle-type profile from the flags, naming
/// the violated invariant on failure.
fn profile_from_args(args: &PolyArgs) -> Result<CycleProfile, CliError> {
    let n = require(args.n, "n")?;
    let m = require(args.m, "m")?;
    let alpha = require_ref(&args.alpha, "alpha")?.clone();
    let beta = require_ref(&args.beta, "beta")?.clone();
    let lam = require_ref(&args.lam, "lam")?.clone();
    let mu = require_ref(&args.mu, "mu")?.clone();
    let profile = CycleProfile::new(n, m, alpha, beta, lam, mu).map_err(|e| err(e.to_string()))?;
    for (given, derived, flag) in [
        (args.c, profile.c(), "c"),
        (args.r, profile.r(), "r"),
        (args.s, profile.s(), "s"),
        (args.ext_weight, profile.ext_weight(), "R"),
        (args.int_weight, profile.int_weight(), "S"),
    ] {
        if let Some(v) = given {
            if v != derived {
                return Err(err(format!(
                    "--{flag} {v} contradicts the value {derived} derived from the partitions"
                )));
            }
        }
    }
    Ok(profile)
}

fn parse_root_spec(spec: &str) -> Result<(u64, i64), CliError> {
    let (d, j) = match spec.split_once(',') {
        Some((d, j)) => (d.trim(), j.trim()),
        None => (spec.trim(), "1"),
    };
    let d: u64 = d
        .parse()
        .map_err(|_| err(format!("cannot parse root order {d:?}")))?;
    if d == 0 {
        return Err(err("root order must be positive"));
    }
    let j: i64 = j
        .parse()
        .map_err(|_| err(format!("cannot parse root exponent {j:?}")))?;
    Ok((d, j))
}

fn run_poly(args: &PolyArgs) -> Result<ExitCode, CliError> {
    let poly: QPolynomial = match args.which {
        PolyKind::Kre => {
            let profile = profile_from_args(args)?;
            annular_kreweras_q(&profile).map_err(|e| err(e.to_string()))?
        }
        PolyKind::Nara1 => annular_narayana1_q(
            require(args.n, "n")?,
            require(args.m, "m")?,
            require(args.c, "c")?,
            require(args.r, "r")?,
            require(args.s, "s")?,
            require(args.ext_weight, "R")?,
            require(args.int_weight, "S")?,
        ),
        PolyKind::Nara2 => annular_narayana2_q(
            require(args.n, "n")?,
            require(args.m, "m")?,
            require(args.c, "c")?,
            require(args.r, "r")?,
            require(args.s, "s")?,
        ),
        PolyKind::Nara3 => annular_narayana3_q(
            require(args.n, "n")?,
            require(args.m, "m")?,
            require(args.c, "c")?,
        ),
        PolyKind::Cat => {
            let n = require(args.n, "n")?;
            let m = require(args.m, "m")?;
            if n == 0 || m == 0 {
                return Err(err("annulus circles must be nonempty (n, m >= 1)"));
            }
            annular_catalan_q(n, m)
        }
        PolyKind::KreDisc => kreweras_q(require_ref(&args.lam, "lam")?),
        PolyKind::NaraDisc => narayana_q(require(args.n, "n")?, require(args.k, "k")?),
        PolyKind::CatDisc => catalan_q(require(args.n, "n")?),
        PolyKind::BessisReiner => bessis_reiner_x(require_ref(&args.lam, "lam")?),
    };
    println!("{poly}");
    println!("{}", poly.to_json());
    if let Some(spec) = &args.at_root {
        let (d, j) = parse_root_spec(spec)?;
        let value = eval_at_primitive_root(&poly, d, j).map_err(|e| err(e.to_string()))?;
        let shown = match (value.as_integer(), value.as_rational()) {
            (Some(int), _) => int.to_string(),
            (None, Some(rat)) => rat.to_string(),
            (None, None) => value.to_string(),
        };
        println!("at q = zeta_{d}^{j}: {shown}");
    }
    if args.at_one {
        println!("at q = 1: {}", poly.at_one());
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// count

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Total exterior cycle size
    #[arg(long = "R")]
    ext_weight: Option<u32>,
    /// Total interior cycle size
    #[arg(long = "S")]
    int_weight: Option<u32>,
    #[arg(long)]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    #[arg(long)]
    lam: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    /// Count type-B objects (parameters in B coordinates; the ambient
    /// annulus is (2n, 2m))
    #[arg(long = "type-b")]
    type_b: bool,
    /// Cross-validate against brute-force enumeration
    #[arg(long)]
    check: bool,
}

enum Granularity {
    Total,
    ByC(u32),
    ByCrs(u32, u32, u32),
    Weighted(u32, u32, u32, u32, u32),
    Profile(Box<CycleProfile>),
}

fn count_granularity(args: &CountArgs) -> Result<Granularity, CliError> {
    let (n, m) = (args.n, args.m);
    if args.alpha.is_some() || args.beta.is_some() || args.lam.is_some() || args.mu.is_some() {
        let profile = CycleProfile::new(
            n,
            m,
            require_ref(&args.alpha, "alpha")?.clone(),
            require_ref(&args.beta, "beta")?.clone(),
            require_ref(&args.lam, "lam")?.clone(),
            require_ref(&args.mu, "mu")?.clone(),
        )
        .map_err(|e| err(e.to_string()))?;
        for (given, derived, flag) in [
            (args.c, profile.c(), "c"),
            (args.r, profile.r(), "r"),
            (args.s, profile.s(), "s"),
            (args.ext_weight, profile.ext_weight(), "R"),
            (args.int_weight, profile.int_weight(), "S"),
        ] {
            if let Some(v) = given {
                if v != derived {
                    return Err(err(format!(
                        "--{flag} {v} contradicts the value {derived} derived from the partitions"
                    )));
                }
            }
        }
        return Ok(Granularity::Profile(Box::new(profile)));
    }
    if args.ext_weight.is_some() || args.int_weight.is_some() {
        return Ok(Granularity::Weighted(
            require(args.c, "c")?,
            require(args.r, "r")?,
            require(args.s, "s")?,
            require(args.ext_weight, "R")?,
            require(args.int_weight, "S")?,
        ));
    }
    if args.r.is_some() || args.s.is_some() {
        return Ok(Granularity::ByCrs(
            require(args.c, "c")?,
            require(args.r, "r")?,
            require(args.s, "s")?,
        ));
    }
    if let Some(c) = args.c {
        return Ok(Granularity::ByC(c));
    }
    Ok(Granularity::Total)
}

fn run_count(args: &CountArgs) -> Result<ExitCode, CliError> {
    let (n, m) = (args.n, args.m);
    if n == 0 || m == 0 {
        return Err(err("annulus circles must be nonempty (n, m >= 1)"));
    }
    let granularity = count_granularity(args)?;
    let value: BigInt = match (&granularity, args.type_b) {
        (Granularity::Total, false) => count_anc(n, m),
        (Granularity::ByC(c), false) => count_anc_c(n, m, *c),
        (Granularity::ByCrs(c, r, s), false) => count_anc_crs(n, m, *c, *r, *s),
        (Granularity::Weighted(c, r, s, rw, sw), false) => {
            count_anc_weighted(n, m, *c, *r, *s, *rw, *sw)
        }
        (Granularity::Profile(p), false) => count_anc_profile(p),
        (Granularity::Total, true) => count_anc_b(n, m),
        (Granularity::ByC(c), true) => count_anc_b_c(n, m, *c),
        (Granularity::ByCrs(c, r, s), true) => count_anc_b_crs(n, m, *c, *r, *s),
        (Granularity::Weighted(c, r, s, rw, sw), true) => {
            count_anc_b_weighted(n, m, *c, *r, *s, *rw, *sw)
        }
        (Granularity::Profile(p), true) => count_anc_b_profile(p),
    };
    if !args.check {
        println!("{value}");
        return Ok(ExitCode::SUCCESS);
    }

    let filter = match &granularity {
        Granularity::Total => ProfileFilter::any(),
        Granularity::ByC(c) => ProfileFilter::with_c(*c),
        Granularity::ByCrs(c, r, s) => ProfileFilter {
            c: Some(*c),
            r: Some(*r),
            s: Some(*s),
            ..Default::default()
        },
        Granularity::Weighted(c, r, s, rw, sw) => ProfileFilter {
            c: Some(*c),
            r: Some(*r),
            s: Some(*s),
            ext_weight: Some(*rw),
            int_weight: Some(*sw),
            ..Default::default()
        },
        Granularity::Profile(p) => ProfileFilter::of_profile(p),
    };
    let enumerated = if args.type_b {
        enumerate_anc_b_with_bound(n, m, &filter, DEFAULT_ENUMERATION_BOUND)
    } else {
        enumerate_anc_with_bound(n, m, &filter, DEFAULT_ENUMERATION_BOUND)
    }
    .map_err(|e| err(e.to_string()))?
    .len();
    if BigInt::from(enumerated) == value {
        println!("{value} (enumeration: {enumerated}, OK)");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{value} (enumeration: {enumerated}, MISMATCH)");
        Ok(ExitCode::from(1))
    }
}

// ---------------------------------------------------------------------------
// enum

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    /// Cycle notation, one permutation per line
    Cycles,
    /// One JSON object per line
    Json,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long = "R")]
    ext_weight: Option<u32>,
    #[arg(long = "S")]
    int_weight: Option<u32>,
    #[arg(long)]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    #[arg(long)]
    lam: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    /// Restrict to annular noncrossing matchings (all cycles of size 2)
    #[arg(long)]
    matchings: bool,
    /// Keep only permutations fixed by the canonical rigid rotation of this
    /// order; no output when the order divides neither circle
    #[arg(long = "fixed-by")]
    fixed_by: Option<u32>,
    #[arg(long, value_enum, default_value = "cycles")]
    format: EnumFormat,
    /// Override the enumeration size bound on n + m
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: u32,
}

fn run_enum(args: &EnumArgs) -> Result<ExitCode, CliError> {
    let (n, m) = (args.n, args.m);
    if n == 0 || m == 0 {
        return Err(err("annulus circles must be nonempty (n, m >= 1)"));
    }
    let filter = ProfileFilter {
        c: args.c,
        r: args.r,
        s: args.s,
        ext_weight: args.ext_weight,
        int_weight: args.int_weight,
        alpha: args.alpha.clone(),
        beta: args.beta.clone(),
        lam: args.lam.clone(),
        mu: args.mu.clone(),
    };
    let mut perms = if args.matchings {
        let mut all =
            enumerate_matchings_with_bound(n, m, args.bound).map_err(|e| err(e.to_string()))?;
        if !filter.is_unconstrained() {
            all.retain(|p| filter.matches(&p.profile().expect("connected")));
        }
        all
    } else {
        enumerate_anc_with_bound(n, m, &filter, args.bound).map_err(|e| err(e.to_string()))?
    };
    if let Some(d) = args.fixed_by {
        match RotationPair::standard_of_order(n, m, d) {
            Some(rot) => perms.retain(|p| &rot.apply(p) == p),
            None => perms.clear(),
        }
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    use std::io::Write as _;
    for p in &perms {
        let line = match args.format {
            EnumFormat::Cycles => p.to_string(),
            EnumFormat::Json => p.to_json().to_string(),
        };
        writeln!(out, "{line}").map_err(|e| err(e.to_string()))?;
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    /// Cyclic sieving plus the unequal-orders vanishing check
    Csp,
    /// Enumeration vs. closed forms: type A, type B, fixed counts, matchings
    Counts,
    /// The summation chain and the disc identities
    Identities,
    /// The three summation lemmas and q-Vandermonde
    Lemmas,
    /// Quotient expressions have nonnegative integer coefficients
    Polynomiality,
    /// Injectivity and cardinality of the invariance encoding
    Bijection,
    /// Everything above at its default bounds
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteKind,
    /// Override the sweep bound on n + m (enumeration suites accept at
    /// most 10)
    #[arg(long = "max-total")]
    max_total: Option<u32>,
    /// Override the sum-chain bound on n
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    /// Override the sum-chain bound on m
    #[arg(long = "max-m")]
    max_m: Option<u32>,
}

fn enumeration_bound(args: &VerifyArgs, default: u32) -> Result<u32, CliError> {
    let bound = args.max_total.unwrap_or(default);
    if bound > DEFAULT_ENUMERATION_BOUND {
        return Err(err(format!(
            "--max-total {bound} exceeds the enumeration bound {DEFAULT_ENUMERATION_BOUND}"
        )));
    }
    Ok(bound)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    let run = |kind: SuiteKind, reports: &mut Vec<VerificationReport>| -> Result<(), CliError> {
        match kind {
            SuiteKind::Csp => {
                reports.push(verify_csp_annular(enumeration_bound(args, 8)?));
                reports.push(verify_unequal_orders(enumeration_bound(args, 8)?));
            }
            SuiteKind::Counts => {
                reports.push(verify_counts(enumeration_bound(args, 9)?));
                reports.push(verify_fixed_counts(enumeration_bound(args, 8)?));
                reports.push(verify_type_b(enumeration_bound(args, 8)?));
                reports.push(verify_matchings(enumeration_bound(args, 10)?));
            }
            SuiteKind::Identities => {
                let max_n = args
                    .max_n
                    .or(args.max_total.map(|t| t.div_ceil(2)))
                    .unwrap_or(6);
                let max_m = args
                    .max_m
                    .or(args.max_total.map(|t| t.div_ceil(2)))
                    .unwrap_or(6);
                reports.push(verify_sum_chain(max_n, max_m));
                let bounds = match args.max_total {
                    Some(t) => DiscBounds {
                        enum_n: t.min(DEFAULT_ENUMERATION_BOUND),
                        q_n: t,
                        csp_n: t.min(DEFAULT_ENUMERATION_BOUND),
                    },
                    None => DiscBounds::default(),
                };
                reports.push(verify_disc_identities(bounds));
            }
            SuiteKind::Lemmas => {
                let bounds = match args.max_total {
                    Some(t) => LemmaBounds {
                        sum2_n: t,
                        sum3_n: t,
                        sum1_nmk: t.div_ceil(2),
                        vandermonde_mn: t,
                    },
                    None => LemmaBounds::default(),
                };
                reports.push(verify_lemmas(bounds));
            }
            SuiteKind::Polynomiality => {
                reports.push(verify_polynomiality(args.max_total.unwrap_or(12)));
                reports.push(verify_specializations(enumeration_bound(args, 9)?));
            }
            SuiteKind::Bijection => {
                reports.push(verify_bijection(enumeration_bound(args, 6)?));
            }
            SuiteKind::All => unreachable!("expanded by the caller"),
        }
        Ok(())
    };
    match args.suite {
        SuiteKind::All => {
            for kind in [
                SuiteKind::Csp,
                SuiteKind::Counts,
                SuiteKind::Identities,
                SuiteKind::Lemmas,
                SuiteKind::Polynomiality,
                SuiteKind::Bijection,
            ] {
                run(kind, &mut reports)?;
            }
        }
        kind => run(kind, &mut reports)?,
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut all_ok = true;
    for report in &reports {
        report
            .write_jsonl(&mut out)
            .map_err(|e| err(e.to_string()))?;
        eprintln!("{}", report.human_summary());
        all_ok &= report.all_passed();
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------------
// render

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    /// The permutation in cycle notation, e.g. "(1,3)(2,4)"
    #[arg(long)]
    perm: String,
    /// Output SVG path
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
    /// Render without warning even if the permutation is not connected
    /// annular noncrossing
    #[arg(long)]
    force: bool,
    /// Canvas side length in pixels
    #[arg(long, default_value_t = 480)]
    size: u32,
    #[arg(long = "stroke-width", default_value_t = 1.5)]
    stroke_width: f64,
    #[arg(long = "font-size", default_value_t = 14)]
    font_size: u32,
}

fn run_render(args: &RenderArgs) -> Result<ExitCode, CliError> {
    if args.n == 0 || args.m == 0 {
        return Err(err("annulus circles must be nonempty (n, m >= 1)"));
    }
    let perm = AnnularPermutation::from_cycle_str(args.n, args.m, &args.perm)
        .map_err(|e| err(e.to_string()))?;
    if !perm.is_connected_anc() && !args.force {
        eprintln!(
            "warning: {perm} is not connected annular noncrossing; rendering anyway (use --force to silence)"
        );
    }
    let spec = RenderSpec {
        perm,
        size: args.size,
        stroke_width: args.stroke_width,
        font_size: args.font_size,
    };
    std::fs::write(&args.output, render_svg(&spec))
        .map_err(|e| err(format!("cannot write {}: {e}", args.output.display())))?;
    Ok(ExitCode::SUCCESS)
}
