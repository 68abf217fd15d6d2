//! Command-line front end.
//!
//! Three subcommands: `table` emits a full spectrum table as JSON or CSV,
//! `eigen` evaluates a single eigenvalue, and `verify` runs the consistency
//! suites. Exit codes: 0 success, 1 usage error, 2 domain error, 3
//! verification failure, 4 pole encountered. All output is deterministic:
//! identical flags produce identical bytes.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::closed_form::{spectral_z_float, ZVariant};
use crate::tables::{build_table, closed_eigenvalue, to_csv_bytes, to_json_bytes, TableOperator, TableRequest};
use crate::verify::{run_suites, SuiteKind, SuiteReport, VerifyOptions};
use crate::weights::{BundleSpec, Chirality, Family, IsotypicLabel, Sign};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_POLE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "sphere-spectra",
    version,
    about = "Exact spectra of conformally invariant spin operators on round spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full spectrum table for a bundle and operator
    Table(TableArgs),
    /// Evaluate the eigenvalue on a single isotypic summand
    Eigen(EigenArgs),
    /// Run exact consistency suites and report pass/fail per check
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Symmetric,
    Form,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiralityArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    #[value(name = "higher-spin")]
    HigherSpin,
    #[value(name = "higher-spin-squared")]
    HigherSpinSquared,
    #[value(name = "Z")]
    Z,
    #[value(name = "D-odd")]
    DOdd,
    #[value(name = "P_k")]
    Pk,
    #[value(name = "TTstar")]
    TTstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct BundleArgs {
    /// Sphere dimension, n >= 3
    #[arg(long)]
    n: u32,
    /// Tensor valence (k < n/2 for the form family)
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Spinor chirality; even n only (defaults to + there)
    #[arg(long, value_enum)]
    chirality: Option<ChiralityArg>,
}

impl BundleArgs {
    fn bundle(&self) -> Result<BundleSpec> {
        let family = match self.family {
            FamilyArg::Symmetric => Family::Symmetric,
            FamilyArg::Form => Family::Form,
        };
        let chirality = match (self.n % 2, self.chirality) {
            (0, None) => Some(Chirality::Plus),
            (_, Some(ChiralityArg::Plus)) => Some(Chirality::Plus),
            (_, Some(ChiralityArg::Minus)) => Some(Chirality::Minus),
            (_, None) => None,
        };
        BundleSpec::new(self.n, self.k, family, chirality)
    }
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    bundle: BundleArgs,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    /// Operator order 2r (odd); required for Z and D-odd
    #[arg(long = "order-2r", required_if_eq_any([("operator", "Z"), ("operator", "D-odd")]))]
    order_2r: Option<u64>,
    /// Largest j level to include
    #[arg(long)]
    jmax: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the document here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fail without emitting a table when a pole is encountered
    #[arg(long)]
    strict: bool,
    /// Worker threads (0 = all cores, 1 = serial); never changes the bytes
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct EigenArgs {
    #[command(flatten)]
    bundle: BundleArgs,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    /// Operator order 2r (odd); required for Z and D-odd
    #[arg(long = "order-2r")]
    order_2r: Option<u64>,
    /// Arbitrary real order 2r > 0; floating evaluation, Z only
    #[arg(long = "order-2r-real", conflicts_with = "order_2r")]
    order_2r_real: Option<f64>,
    #[arg(long)]
    j: u32,
    #[arg(long)]
    q: Option<u32>,
    /// Summand sign, +1 or -1; odd n only
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    /// Also print a decimal rendering
    #[arg(long)]
    float: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Diagrams,
    Lichnerowicz,
    #[value(name = "closed-vs-engine")]
    ClosedVsEngine,
    #[value(name = "factored-identity")]
    FactoredIdentity,
    Proportionality,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Inclusive sphere-dimension range, e.g. 3..9
    #[arg(long = "n-range", default_value = "3..9")]
    n_range: String,
    #[arg(long = "k-max", default_value_t = 3)]
    k_max: u32,
    #[arg(long = "l-max", default_value_t = 3)]
    l_max: u32,
    #[arg(long, default_value_t = 10)]
    jmax: u32,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Pole(_) => EXIT_POLE,
        _ => EXIT_DOMAIN,
    }
}

fn fail(err: &Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(err)
}

fn table_operator(op: OperatorArg, order_2r: Option<u64>) -> Result<TableOperator> {
    match (op, order_2r) {
        (OperatorArg::Z, Some(two_r)) => Ok(TableOperator::SpectralZ { two_r }),
        (OperatorArg::DOdd, Some(two_r)) => Ok(TableOperator::DOdd { two_r }),
        (OperatorArg::Z | OperatorArg::DOdd, None) => {
            Err(Error::domain("Z and D-odd need --order-2r"))
        }
        (_, Some(_)) => Err(Error::domain("--order-2r only applies to Z and D-odd")),
        (OperatorArg::HigherSpin, None) => Ok(TableOperator::HigherSpin),
        (OperatorArg::HigherSpinSquared, None) => Ok(TableOperator::HigherSpinSquared),
        (OperatorArg::Pk, None) => Ok(TableOperator::Pk),
        (OperatorArg::TTstar, None) => Ok(TableOperator::TTstar),
    }
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> i32 {
    let doc = (|| -> Result<_> {
        let bundle = args.bundle.bundle()?;
        let operator = table_operator(args.operator, args.order_2r)?;
        build_table(&TableRequest { bundle, operator, j_max: args.jmax, threads: args.threads })
    })();
    let doc = match doc {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let has_poles = doc.has_poles();
    if has_poles && args.strict {
        eprintln!("error: table contains pole-marked entries (strict mode)");
        return EXIT_POLE;
    }
    let bytes = match args.format {
        FormatArg::Json => to_json_bytes(&doc),
        FormatArg::Csv => to_csv_bytes(&doc),
    };
    if let Some(path) = &args.out {
        if let Err(e) = fs::write(path, &bytes) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    } else if out.write_all(&bytes).is_err() {
        return EXIT_USAGE;
    }
    if has_poles {
        EXIT_POLE
    } else {
        EXIT_OK
    }
}

fn parse_eps(raw: Option<&str>) -> Result<Option<Sign>> {
    match raw {
        None => Ok(None),
        Some("+1") | Some("1") => Ok(Some(Sign::Plus)),
        Some("-1") => Ok(Some(Sign::Minus)),
        Some(other) => Err(Error::domain(format!("--eps must be +1 or -1, got {other}"))),
    }
}

fn eigen_label(bundle: &BundleSpec, j: u32, q: Option<u32>, eps: Option<Sign>) -> Result<IsotypicLabel> {
    let q = match (bundle.family(), bundle.k(), q) {
        (Family::Symmetric, 0, None) => Some(0),
        (Family::Symmetric, _, Some(q)) => Some(q),
        (Family::Symmetric, _, None) => {
            return Err(Error::domain("--q is required for the symmetric family with k >= 1"))
        }
        (Family::Form, 0, None) => None,
        (Family::Form, 0, Some(_)) => {
            return Err(Error::domain("k = 0 forms carry no q coordinate"))
        }
        (Family::Form, _, Some(q)) => Some(q),
        (Family::Form, _, None) => {
            return Err(Error::domain("--q is required for the form family with k >= 1"))
        }
    };
    let label = IsotypicLabel::new(eps, j, q);
    bundle.validate_label(&label)?;
    Ok(label)
}

fn cmd_eigen(args: &EigenArgs, out: &mut dyn Write) -> i32 {
    if matches!(args.operator, OperatorArg::Z | OperatorArg::DOdd)
        && args.order_2r.is_none()
        && args.order_2r_real.is_none()
    {
        eprintln!("error: Z and D-odd need --order-2r (or --order-2r-real for Z)");
        return EXIT_USAGE;
    }
    let result = (|| -> Result<String> {
        let bundle = args.bundle.bundle()?;
        let mut eps = parse_eps(args.eps.as_deref())?;
        // TTstar acts the same on both signed summands; accept the label
        // without an explicit --eps.
        if eps.is_none() && bundle.is_odd() && args.operator == OperatorArg::TTstar {
            eps = Some(Sign::Plus);
        }
        let label = eigen_label(&bundle, args.j, args.q, eps)?;
        if let Some(two_r_real) = args.order_2r_real {
            if args.operator != OperatorArg::Z {
                return Err(Error::domain("--order-2r-real only applies to Z"));
            }
            if bundle.family() != Family::Form {
                return Err(Error::domain("Z lives on the form family"));
            }
            let variant = match (bundle.is_odd(), bundle.k()) {
                (true, 0) => ZVariant::SpinorOdd { eps: eps.unwrap_or(Sign::Plus) },
                (false, 0) => ZVariant::SpinorEven,
                (true, k) => ZVariant::FormOdd { k, q: label.q.unwrap(), eps: eps.unwrap_or(Sign::Plus) },
                (false, k) => ZVariant::FormEven { k, q: label.q.unwrap() },
            };
            let value = spectral_z_float(bundle.n(), args.j, two_r_real / 2.0, &variant)?;
            return Ok(format!("{value}\n"));
        }
        let operator = table_operator(args.operator, args.order_2r)?;
        match closed_eigenvalue(&bundle, &operator, &label)? {
            Some(v) => {
                let mut line = format!("{}/{}", v.numer(), v.denom());
                if args.float {
                    let f = v.to_f64().unwrap_or(f64::NAN);
                    line.push_str(&format!(" {f}"));
                }
                line.push('\n');
                Ok(line)
            }
            None => Err(Error::pole("eigenvalue is pole-marked at this summand")),
        }
    })();
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}

#[derive(Serialize)]
struct VerifyDocument {
    schema_version: u32,
    suites: Vec<SuiteReport>,
    pass: bool,
}

fn parse_n_range(raw: &str) -> Result<(u32, u32)> {
    let parts: Vec<&str> = raw.split("..").collect();
    let bad = || Error::domain(format!("--n-range expects a..b (inclusive), got {raw}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let lo: u32 = parts[0].parse().map_err(|_| bad())?;
    let hi: u32 = parts[1].parse().map_err(|_| bad())?;
    if lo < 3 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> i32 {
    let (n_min, n_max) = match parse_n_range(&args.n_range) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let opts = VerifyOptions { n_min, n_max, k_max: args.k_max, l_max: args.l_max, j_max: args.jmax };
    let kinds: &[SuiteKind] = match args.suite {
        SuiteArg::Diagrams => &[SuiteKind::Diagrams],
        SuiteArg::Lichnerowicz => &[SuiteKind::Lichnerowicz],
        SuiteArg::ClosedVsEngine => &[SuiteKind::ClosedVsEngine],
        SuiteArg::FactoredIdentity => &[SuiteKind::FactoredIdentity],
        SuiteArg::Proportionality => &[SuiteKind::Proportionality],
        SuiteArg::All => &SuiteKind::ALL,
    };
    let suites = run_suites(kinds, &opts);
    let pass = suites.iter().all(|s| s.pass);
    let doc = VerifyDocument { schema_version: 1, suites, pass };
    let mut bytes = serde_json::to_vec_pretty(&doc).expect("report serializes");
    bytes.push(b'\n');
    if out.write_all(&bytes).is_err() {
        return EXIT_USAGE;
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

/// Parses `std::env::args` and runs one subcommand, returning the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Table(args) => cmd_table(args, &mut out),
        Command::Eigen(args) => cmd_eigen(args, &mut out),
        Command::Verify(args) => cmd_verify(args, &mut out),
    }
}
