//! Command-line front end: evaluate expressions, run verification suites,
//! and export structure-constant tables. Exit codes: 0 success, 1 a
//! verification suite failed, 2 bad input or usage. Thread count follows
//! RAYON_NUM_THREADS.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use smashalg::tables::{self, TableAlgebra, TableOp};
use smashalg::{expr, verify};

#[derive(Parser)]
#[command(
    name = "smashalg",
    version,
    about = "Smash products on permutations, noncommutative symmetric, symmetric, and quasi-symmetric functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. 'X[2,1] # X[3]' or 'pair(M[1].M[1], X[1,1])'
    Eval {
        /// Expression over atoms X[..], h[..], M[..], s[..], P<digits> with
        /// operators # * o . + - and functions coprod, coprodCirc,
        /// coprodStar, coprodSmash, antipode, phi, psi, embed, pair, schur
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one verification suite up to a degree bound
    Verify {
        /// One of: interpolation, oracle, closure, hopf, duality, alphabet,
        /// antipode, phi, psi, assoc
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_degree: usize,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Export a structure-constant table as JSON
    Tables {
        /// One of: smash, conv, internal
        #[arg(long)]
        op: String,
        /// One of: nsym, sym
        #[arg(long)]
        algebra: String,
        /// The two degrees, e.g. --degrees 2 3
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        degrees: Vec<usize>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval { expr: text, format } => match expr::run(&text) {
            Ok(value) => {
                match format {
                    Format::Text => println!("{}", expr::render_text(&value)),
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&expr::render_json(&value))
                            .expect("valid json")
                    ),
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify {
            suite,
            max_degree,
            json,
        } => match verify::run_suite(&suite, max_degree) {
            Ok(report) => {
                if json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.to_json()).expect("valid json")
                    );
                } else {
                    println!("{}", report.render_text());
                }
                if report.passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Tables {
            op,
            algebra,
            degrees,
        } => {
            let result = TableOp::from_name(&op).and_then(|o| {
                TableAlgebra::from_name(&algebra)
                    .and_then(|a| tables::table(o, a, degrees[0], degrees[1]))
            });
            match result {
                Ok(table) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&table).expect("valid json")
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
