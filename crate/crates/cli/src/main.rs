use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hv_cli::{emit, run_suite, Command, Format, RunConfig};

/// Exact verification of twisted Heisenberg-Virasoro modules.
#[derive(Parser)]
#[command(name = "hv", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Module parameters as JSON.
    #[arg(long, global = true)]
    params: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Mode window.
    #[arg(long, global = true, allow_negative_numbers = true)]
    window: Option<i64>,
    /// Exponent and depth cutoffs, as `e,d`.
    #[arg(long, global = true, value_parser = parse_cutoff)]
    cutoff: Option<(u32, u32)>,
    #[arg(long, global = true)]
    trials: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Algebra and module-axiom checks.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Applies a generator to a vector.
    Act {
        #[arg(long)]
        family: String,
        #[arg(long = "gen")]
        generator: String,
        #[arg(long = "vec", allow_hyphen_values = true)]
        vector: String,
    },
    /// Verifies a structural statement on an instance.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Recovers tensor-product invariants from the action and compares them.
    Fingerprint {
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Compares two tensor-product parameter sets (`{"a": .., "b": ..}`).
    Iso,
    /// Searches for a property separating two modules (`{"a": {"family", "params"}, "b": ..}`).
    Distinguish,
    /// Runs a default instance of every check.
    Suite,
}

#[derive(Subcommand)]
enum CheckCmd {
    Jacobi,
    Axioms {
        #[arg(long)]
        family: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    SubmoduleChain {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long, allow_hyphen_values = true)]
        b1: String,
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
        #[arg(long, allow_hyphen_values = true)]
        b2: String,
        #[arg(long, default_value_t = 3)]
        smax: u32,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
    },
    Irreducibility {
        #[arg(long = "vec", allow_hyphen_values = true)]
        vector: Option<String>,
    },
    TOperator {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, allow_negative_numbers = true, requires = "m")]
        l: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "l")]
        m: Option<i64>,
        #[arg(long = "vec", allow_hyphen_values = true)]
        vector: Option<String>,
        /// Expect a nonzero result instead of zero.
        #[arg(long)]
        nonzero: bool,
    },
    Nilpotency {
        #[arg(long)]
        family: String,
        #[arg(long = "gen")]
        generator: String,
        #[arg(long = "vec", allow_hyphen_values = true)]
        vector: Option<String>,
        #[arg(long, default_value_t = 20)]
        max_iter: usize,
        /// Expect the generator not to act nilpotently.
        #[arg(long)]
        not_nilpotent: bool,
    },
}

fn parse_cutoff(s: &str) -> Result<(u32, u32), String> {
    let (e, d) = s.split_once(',').ok_or("expected `e,d`")?;
    let n = |x: &str| x.trim().parse::<u32>().map_err(|e| e.to_string());
    Ok((n(e)?, n(d)?))
}

fn command(cmd: Cmd) -> Command {
    match cmd {
        Cmd::Check {
            what: CheckCmd::Jacobi,
        } => Command::Jacobi,
        Cmd::Check {
            what: CheckCmd::Axioms { family },
        } => Command::Axioms { family },
        Cmd::Act {
            family,
            generator,
            vector,
        } => Command::Act {
            family,
            generator,
            vector,
        },
        Cmd::Verify { what } => match what {
            VerifyCmd::SubmoduleChain {
                lambda,
                a1,
                b1,
                a2,
                b2,
                smax,
                nmax,
            } => Command::SubmoduleChain {
                lambda,
                a1,
                b1,
                a2,
                b2,
                smax,
                nmax,
            },
            VerifyCmd::Irreducibility { vector } => Command::Irreducibility { vector },
            VerifyCmd::TOperator {
                family,
                s,
                l,
                m,
                vector,
                nonzero,
            } => Command::TOperator {
                family,
                s,
                modes: l.zip(m),
                vector,
                expect_zero: !nonzero,
            },
            VerifyCmd::Nilpotency {
                family,
                generator,
                vector,
                max_iter,
                not_nilpotent,
            } => Command::Nilpotency {
                family,
                generator,
                vector,
                max_iter,
                expect_nilpotent: !not_nilpotent,
            },
        },
        Cmd::Fingerprint { bound } => Command::Fingerprint { bound },
        Cmd::Iso => Command::Iso,
        Cmd::Distinguish => Command::Distinguish,
        Cmd::Suite => Command::Suite,
    }
}

const USAGE_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let params = match cli.common.params.as_deref().map(serde_json::from_str) {
        None => serde_json::Value::Object(Default::default()),
        Some(Ok(v)) => v,
        Some(Err(e)) => {
            eprintln!("error: --params is not valid JSON: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let format = match cli.common.format {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    };
    let cfg = RunConfig {
        command: command(cli.command),
        params,
        window: cli.common.window,
        cutoff: cli.common.cutoff,
        trials: cli.common.trials,
        seed: cli.common.seed,
        format,
    };
    match run_suite(&cfg) {
        Ok(outcome) => {
            print!("{}", emit(&outcome, format));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
