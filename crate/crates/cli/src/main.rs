use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use charpoly::characters::{character_mn, CycleType};
use charpoly::render::{primaries_table, render_expansion, ExpansionTable, OutputFormat};
use charpoly::stability::char_poly;
use charpoly::verify::{self, Fault, VerifyConfig};
use charpoly::Partition;
use clap::{Parser, Subcommand, ValueEnum};

/// Character polynomials of symmetric groups on cycles.
#[derive(Debug, Parser)]
#[command(name = "charpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expansion of chi^(n-k,lambda) on an r-cycle in the basis C(n-r, m).
    Expand {
        /// Comma-separated parts, e.g. "3,3"; empty for the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// The r-primary partitions of sizes 0..=max-h with their signs.
    Primaries {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long)]
        max_h: usize,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// A single character value by the Murnaghan-Nakayama rule.
    Char {
        #[arg(long)]
        mu: Partition,
        /// Cycle type, as a partition of the same size.
        #[arg(long)]
        ct: CycleType,
    },
    /// Cross-check every evaluator over bounded sweeps.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_r: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        n_window: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// One expansion row per r, plus the dimension row.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_delimiter = ',', required = true,
              value_parser = clap::value_parser!(u64).range(1..))]
        r_list: Vec<u64>,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FaultArg {
    SignFlip,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Expand { lambda, r, format } => {
            let e = char_poly(&lambda, r as usize);
            write!(out, "{}", render_expansion(&e, format))
        }
        Command::Primaries { r, max_h, format } => {
            write!(out, "{}", primaries_table(r as usize, max_h, format))
        }
        Command::Char { mu, ct } => match character_mn(&mu, &ct) {
            Ok(v) => writeln!(out, "{v}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Command::Table {
            lambda,
            r_list,
            format,
        } => {
            let rs: Vec<usize> = r_list.into_iter().map(|r| r as usize).collect();
            write!(
                out,
                "{}",
                ExpansionTable::build(&lambda, &rs).render(format)
            )
        }
        Command::Verify {
            max_k,
            max_r,
            n_window,
            jobs,
            inject_fault,
        } => {
            let config = VerifyConfig {
                max_k: max_k as usize,
                max_r: max_r as usize,
                n_window: n_window as usize,
                jobs: jobs as usize,
                fault: inject_fault.map(|FaultArg::SignFlip| Fault::FlipSign),
            };
            let start = Instant::now();
            let report = verify::run(config);
            eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            if let Err(e) = write!(out, "{}", report.render()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if let Some(p) = report.first_failure() {
                eprintln!(
                    "verification failed in {}: {}",
                    p.name,
                    p.first_failure.as_deref().unwrap_or("")
                );
                return ExitCode::from(1);
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
