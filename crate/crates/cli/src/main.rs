//! `igusa`: root counts mod `p^k`, Poincare series and local zeta functions
//! of integer polynomials from the command line.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use igusa_core::json::{CountJson, RepRootJson, RepRootsJson, ReportJson, SeriesJson};
use igusa_core::oracle::{verify_instance, DEFAULT_BUDGET};
use igusa_core::{
    count_roots, parse_poly, poincare_series, rep_roots, report, zeta_function, Error, IntPoly,
    Prime,
};
use serde::Serialize;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "igusa", version, about)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Largest modulus p^k the brute-force oracle will enumerate.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Instance {
    /// Integer polynomial in x, e.g. "2*x^2 + 3*x + 1".
    #[arg(long, value_name = "S", allow_hyphen_values = true)]
    poly: String,

    /// A prime number.
    #[arg(long, value_name = "P")]
    prime: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Number of roots of f modulo p^k.
    Count {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        k: u32,
    },
    /// Maximal representative-roots of f modulo p^k.
    RepRoots {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        k: u32,
    },
    /// Poincare series P(t) as a reduced rational function.
    Poincare {
        #[command(flatten)]
        instance: Instance,
    },
    /// Local zeta function Z(t), t = p^-s, as a reduced rational function.
    Zeta {
        #[command(flatten)]
        instance: Instance,
    },
    /// Full analysis of (f, p) as JSON.
    Report {
        #[command(flatten)]
        instance: Instance,
    },
    /// Check the pipeline against brute-force enumeration up to k = KMAX.
    Verify {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_name = "KMAX")]
        kmax: u32,
    },
}

enum Failure {
    Verification,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Variable { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn load(instance: &Instance) -> Result<(IntPoly, Prime), Error> {
    let f = parse_poly(&instance.poly)?;
    let p = Prime::new(instance.prime)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok((f, p))
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("JSON wire types always serialize"));
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Count { instance, k } => {
            let (f, p) = load(instance)?;
            let n = count_roots(&f, p, *k)?;
            if cli.json {
                emit(
                    &CountJson {
                        poly: f.to_string(),
                        prime: p.to_string(),
                        k: *k,
                        count: n.to_string(),
                    },
                    false,
                );
            } else {
                println!("{n}");
            }
        }
        Command::RepRoots { instance, k } => {
            let (f, p) = load(instance)?;
            let roots = rep_roots(&f, p, *k)?;
            if cli.json {
                emit(
                    &RepRootsJson {
                        poly: f.to_string(),
                        prime: p.to_string(),
                        k: *k,
                        rep_roots: roots.iter().map(RepRootJson::from).collect(),
                    },
                    false,
                );
            } else {
                for r in &roots {
                    println!("{r}");
                }
            }
        }
        Command::Poincare { instance } | Command::Zeta { instance } => {
            let (f, p) = load(instance)?;
            let r = match cli.command {
                Command::Poincare { .. } => poincare_series(&f, p)?,
                _ => zeta_function(&f, p)?,
            };
            if cli.json {
                emit(&SeriesJson::new(&f, p.get(), &r), false);
            } else {
                println!("{r}");
            }
        }
        Command::Report { instance } => {
            let (f, p) = load(instance)?;
            let r = report(&f, p)?;
            emit(&ReportJson::from(&r), !cli.json);
        }
        Command::Verify { instance, kmax } => {
            let (f, p) = load(instance)?;
            let v = verify_instance(&f, p, *kmax, cli.budget);
            if cli.json {
                emit(&v, false);
            } else {
                for c in &v.checks {
                    let status = if c.pass { "ok  " } else { "FAIL" };
                    println!("{status} {}: expected {}, got {}", c.name, c.expected, c.actual);
                }
                let failed = v.failures().count();
                println!("{} checks, {failed} failed", v.checks.len());
            }
            if !v.all_pass() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap reports usage errors itself, with exit status 2
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
