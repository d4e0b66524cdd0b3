//! Command-line front end: single-domain reports, parameter sweeps, and
//! engine-vs-oracle verification runs.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 verification
//! inconsistency. A mismatch between d_ma and the printed closed-form bound
//! is diagnostic output and never changes the exit code.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use flag_concavity::concavity::report;
use flag_concavity::domains::DomainSpec;

use flag_concavity_cli::render::{self, OutputFormat};
use flag_concavity_cli::{sweep, verify};

#[derive(Parser)]
#[command(
    name = "flag-concavity",
    version,
    about = "Root-combinatoric pseudoconcavity lower bounds for flag domains of SU(p,p') and Sp(2n,R) in Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SuParams {
    /// Positive part of the Hermitian signature
    #[arg(long)]
    p: u32,
    /// Negative part of the Hermitian signature
    #[arg(long)]
    p_prime: u32,
    /// Positive signature of the plane
    #[arg(long)]
    r: u32,
    /// Negative signature of the plane
    #[arg(long)]
    r_prime: u32,
}

#[derive(Args)]
struct SpParams {
    /// Rank of Sp(2n,R)
    #[arg(long)]
    n: u32,
    /// Positive signature of the isotropic plane
    #[arg(long)]
    p: u32,
    /// Negative signature of the isotropic plane
    #[arg(long)]
    q: u32,
}

#[derive(Args)]
struct FormatOpt {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Attractiveness sizes, d_ma and the closed-form bounds for one domain
    Bound {
        #[command(subcommand)]
        family: DomainCmd,
    },
    /// The five root sets lambda_k, lambda_q0, lambda_u_minus, gamma, phi
    Partition {
        #[command(subcommand)]
        family: DomainCmd,
    },
    /// One report row per valid parameter tuple up to a size cap
    Sweep {
        #[command(subcommand)]
        family: SweepCmd,
    },
    /// Engine-vs-oracle consistency checks over a sweep range
    Verify {
        #[command(subcommand)]
        family: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum DomainCmd {
    /// SU(p,p') flag domain D_{r,r'} in Gr_{r+r'}(C^{p+p'})
    Su {
        #[command(flatten)]
        params: SuParams,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Sp(2n,R) domain of isotropic (p+q)-planes of signature (p,q)
    Sp {
        #[command(flatten)]
        params: SpParams,
        #[command(flatten)]
        format: FormatOpt,
    },
}

#[derive(Subcommand)]
enum SweepCmd {
    /// All valid (p, p', r, r') with p + p' <= max-n
    Su {
        #[arg(long)]
        max_n: u32,
        #[command(flatten)]
        format: FormatOpt,
        /// Write the table to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All valid (n, p, q) with n <= max-n
    Sp {
        #[arg(long)]
        max_n: u32,
        #[command(flatten)]
        format: FormatOpt,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Su {
        #[arg(long)]
        max_n: u32,
        /// Seeded random functionals per instance
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Sp {
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn checked_spec(spec: DomainSpec) -> Result<DomainSpec, String> {
    let violations = spec.validate();
    if violations.is_empty() {
        return Ok(spec);
    }
    let joined: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    Err(joined.join("; "))
}

fn domain_target(cmd: DomainCmd) -> Result<(DomainSpec, OutputFormat), String> {
    match cmd {
        DomainCmd::Su { params, format } => Ok((
            checked_spec(DomainSpec::su(
                params.p,
                params.p_prime,
                params.r,
                params.r_prime,
            ))?,
            format.format,
        )),
        DomainCmd::Sp { params, format } => Ok((
            checked_spec(DomainSpec::sp(params.n, params.p, params.q))?,
            format.format,
        )),
    }
}

fn emit(rendered: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|err| format!("cannot write {}: {err}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Bound { family } => {
            let (spec, format) = domain_target(family)?;
            let rep = report(&spec).map_err(|err| err.to_string())?;
            print!("{}", render::render_report(&rep, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition { family } => {
            let (spec, format) = domain_target(family)?;
            let part = spec.partition().map_err(|err| err.to_string())?;
            print!("{}", render::render_partition(&part, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { family } => {
            let (reports, format, out) = match family {
                SweepCmd::Su { max_n, format, out } => {
                    (sweep::su_reports(max_n), format.format, out)
                }
                SweepCmd::Sp { max_n, format, out } => {
                    (sweep::sp_reports(max_n), format.format, out)
                }
            };
            emit(&render::render_sweep(&reports, format), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { family } => {
            let (specs, trials, seed) = match family {
                VerifyCmd::Su {
                    max_n,
                    trials,
                    seed,
                } => (DomainSpec::enumerate_su(max_n), trials, seed),
                VerifyCmd::Sp {
                    max_n,
                    trials,
                    seed,
                } => (DomainSpec::enumerate_sp(max_n), trials, seed),
            };
            if specs.is_empty() {
                return Err("empty verification range: no valid instances at this max-n".into());
            }
            let outcome = verify::run(&specs, trials, seed).map_err(|err| err.to_string())?;
            print!("{}", render::render_verify(&outcome));
            Ok(if outcome.is_consistent() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}
