mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Output};
use output::Format;

/// Exact restricted partition counts p_A(n) and their quasi-polynomial structure.
#[derive(Parser)]
#[command(name = "denumerant", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Worker threads for per-residue work; output does not depend on it.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p_A(n) for a single n.
    Count {
        /// Comma-separated parts, e.g. 1,2,3.
        #[arg(
            short = 'A',
            long = "parts",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        parts: Vec<i64>,
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
    },
    /// p_A(n) for n = 0..=n_max.
    Table {
        #[arg(
            short = 'A',
            long = "parts",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        parts: Vec<i64>,
        #[arg(short = 'm', long = "n-max", allow_negative_numbers = true)]
        n_max: i64,
    },
    /// Constituent polynomials over the period a_1 a_2 ... a_k.
    Quasipoly {
        #[arg(
            short = 'A',
            long = "parts",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        parts: Vec<i64>,
        /// Samples per residue beyond the k used for interpolation.
        #[arg(short = 'e', long = "extra-samples", default_value_t = denumerant::quasipoly::DEFAULT_EXTRA_SAMPLES)]
        extra_samples: u64,
        /// Fit constituents of at most this degree instead of k-1; a residual
        /// failure (exit 3) then shows the true degree is higher.
        #[arg(long = "assume-degree")]
        assume_degree: Option<usize>,
    },
    /// Check the recurrence identities; exits 4 if any fails.
    Verify {
        #[arg(
            short = 'A',
            long = "parts",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        parts: Vec<i64>,
        #[arg(long = "l-max", default_value_t = 3)]
        l_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Ratio of p_A(n) to n^(k-1) / (a_1...a_k (k-1)!) along n = T * 2^j.
    Asymptote {
        #[arg(
            short = 'A',
            long = "parts",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        parts: Vec<i64>,
        #[arg(short = 'p', long = "n-points", default_value_t = 10)]
        n_points: u32,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Count { parts, n } => commands::count(parts, *n),
        Command::Table { parts, n_max } => commands::table(parts, *n_max),
        Command::Quasipoly {
            parts,
            extra_samples,
            assume_degree,
        } => commands::quasipoly(parts, *extra_samples, *assume_degree, cli.threads as usize),
        Command::Verify { parts, l_max, seed } => commands::verify(parts, *l_max, *seed),
        Command::Asymptote { parts, n_points } => commands::asymptote(parts, *n_points),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = output
                .rendered
                .write_to(cli.format, &mut stdout)
                .and_then(|_| stdout.flush())
            {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if output.identity_failure {
                eprintln!("error: at least one identity check failed");
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Residual(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
