use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fpfi_cli::bench::{self, BenchOptions};
use fpfi_cli::{commands, CliError, OutputFormat};

/// Enumerate, rank and verify fixed-point-free involutions on {1..size}.
#[derive(Parser)]
#[command(name = "fpfi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of involutions on a ground set of SIZE elements.
    Count { size: usize },
    /// Print involutions in rank order.
    List {
        size: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// First rank to print.
        #[arg(long)]
        start: Option<u128>,
        /// Maximum number of lines.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Check one involution per line from FILE or standard input.
    Verify {
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        file: Option<PathBuf>,
    },
    /// Print the rank of each involution read from standard input.
    Rank {
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the involution at RANK on a ground set of SIZE elements.
    Unrank {
        size: usize,
        rank: u128,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Time the enumerator, optionally against permutation filtering.
    Bench {
        size: usize,
        #[arg(long)]
        compare_oracle: bool,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Worker threads for the direct enumerator.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count { size } => commands::count(size, &mut out)?,
        Command::List {
            size,
            format,
            start,
            limit,
        } => commands::list(size, format, start, limit, &mut out)?,
        Command::Verify { format, file } => {
            let input: Box<dyn BufRead> = match file {
                Some(path) => Box::new(BufReader::new(File::open(&path).map_err(|e| {
                    CliError::Range(format!("cannot open {}: {e}", path.display()))
                })?)),
                None => Box::new(io::stdin().lock()),
            };
            commands::verify(input, format, &mut out)?
        }
        Command::Rank { format } => commands::rank(io::stdin().lock(), format, &mut out)?,
        Command::Unrank { size, rank, format } => commands::unrank(size, rank, format, &mut out)?,
        Command::Bench {
            size,
            compare_oracle,
            reps,
            jobs,
        } => {
            let rows = bench::run(&BenchOptions {
                size,
                compare_oracle,
                reps,
                jobs,
            })?;
            bench::write_report(&rows, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fpfi: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
