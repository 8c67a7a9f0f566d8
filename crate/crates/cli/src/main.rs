use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sptlab::tables::{self, TableId};
use sptlab::verify::{self, Fault, Subjects, Suite, VerifyConfig};
use sptlab::{
    classes, compute_spt, map, render_spt, CliError, Direction, Format, SptLimits, SptMethod,
    DEFAULT_COMMAND_MAX_N,
};
use sptlab_core::qseries::DEFAULT_ORDER;
use sptlab_core::spt::DEFAULT_S_PARTITION_CAP;

/// Exact computations with the spt-function, its crank, and the bijections
/// between marked and doubly marked partitions.
#[derive(Parser)]
#[command(name = "sptlab", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Largest weight a command may enumerate (verify: the top of each range).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Truncation order for q-series.
    #[arg(long, global = true, env = "SPTLAB_SERIES_ORDER", default_value_t = DEFAULT_ORDER)]
    series_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Gf,
    Bijections,
    Congruences,
    Recurrence,
    Dyson,
    Obrien,
}

#[derive(Subcommand)]
enum Command {
    /// Compute spt(n).
    Spt {
        n: usize,
        #[arg(long, value_enum, default_value_t = SptMethod::Weighted)]
        method: SptMethod,
        /// Largest weight for S-partition enumeration.
        #[arg(long, default_value_t = DEFAULT_S_PARTITION_CAP)]
        s_partition_cap: usize,
    },
    /// Print one of the reference tables: 2.1, 3.1 or 3.2.
    Table { which: String },
    /// Split the marked partitions of n by spt-crank modulo t.
    Classes {
        n: usize,
        #[arg(long)]
        modulus: u64,
    },
    /// Apply Δ to a marked partition or Λ to a doubly marked partition, given as JSON.
    Map {
        #[arg(value_enum)]
        direction: Direction,
        input: String,
        /// Include every intermediate step.
        #[arg(long)]
        trace: bool,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest n_index for the mod-13 rank identities (weight 13·n_index + 6).
        #[arg(long, default_value_t = verify::DEFAULT_OBRIEN_INDEX)]
        obrien_index: usize,
        /// Swap one subject for a broken version, to confirm the checks notice.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let command_max_n = cli.max_n.unwrap_or(DEFAULT_COMMAND_MAX_N);
    match cli.command {
        Command::Spt {
            n,
            method,
            s_partition_cap,
        } => {
            let limits = SptLimits {
                max_n: command_max_n,
                s_partition_cap,
                series_order: cli.series_order,
            };
            let value = compute_spt(n, method, limits)?;
            Ok(render_spt(n, method, value, cli.format))
        }
        Command::Table { which } => tables::render(which.parse::<TableId>()?, cli.format),
        Command::Classes { n, modulus } => classes(n, modulus, command_max_n, cli.format),
        Command::Map {
            direction,
            input,
            trace,
        } => map(direction, &input, trace, command_max_n, cli.format),
        Command::Verify {
            suite,
            obrien_index,
            inject_fault,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Gf => vec![Suite::Gf],
                SuiteArg::Bijections => vec![Suite::Bijections],
                SuiteArg::Congruences => vec![Suite::Congruences],
                SuiteArg::Recurrence => vec![Suite::Recurrence],
                SuiteArg::Dyson => vec![Suite::Dyson],
                SuiteArg::Obrien => vec![Suite::Obrien],
            };
            let subjects = match inject_fault {
                Some(name) => Subjects::with_fault(name.parse::<Fault>()?),
                None => Subjects::default(),
            };
            let cfg = VerifyConfig {
                max_n: cli.max_n.unwrap_or(verify::DEFAULT_MAX_N),
                series_order: cli.series_order,
                obrien_index,
            };
            let report = verify::run(&suites, cfg, subjects);
            let rendered = report.render(cli.format);
            match report.first_failure() {
                None => Ok(rendered),
                Some(check) => {
                    print!("{rendered}");
                    Err(CliError::Failed(format!(
                        "{}: {}",
                        check.name,
                        check.counterexample.as_deref().unwrap_or("")
                    )))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
