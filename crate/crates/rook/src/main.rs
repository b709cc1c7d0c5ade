//! Command-line front-end. JSON on stdout, error JSON on stderr.
//!
//! Exit codes: 0 = affirmative result, 1 = well-formed negative answer
//! (inverse rejection), 2 = input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use rook::{
    canonical_increasing, check_necessary_conditions, enumerate_ferrers,
    enumerate_increasing_ferrers, rook_equivalent, rook_polynomial_ferrers,
    rook_polynomial_general, solve_inverse, Board, FerrersBoard, Polynomial,
};

#[derive(Parser)]
#[command(name = "rook", version, about = "Rook polynomials of Ferrers and generalized boards, and the inverse problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rook polynomial of a Ferrers board (--heights) or a general board (--matrix-file)
    Rookpoly {
        /// Comma-separated nondecreasing column heights h_1,...,h_c ("" for the empty board)
        #[arg(long, conflicts_with = "matrix_file")]
        heights: Option<String>,
        /// JSON file {"rows": m, "cols": n, "ones": [[col,row],...]} with 1-based indices
        #[arg(long)]
        matrix_file: Option<PathBuf>,
    },
    /// Reconstruct the increasing Ferrers board with the given rook polynomial, if any
    Inverse {
        /// Comma-separated coefficients r_0,r_1,... in ascending degree
        #[arg(long)]
        coeffs: String,
    },
    /// Canonical increasing Ferrers board rook-equivalent to the given board
    Canon {
        #[arg(long)]
        heights: String,
    },
    /// Decide rook equivalence of two Ferrers boards
    Equiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Enumerate increasing Ferrers boards with the given cell count
    Enumerate {
        #[arg(long)]
        cells: u64,
        /// Group all Ferrers boards with that cell count by canonical representative
        #[arg(long)]
        classes: bool,
    },
    /// Check the necessary coefficient conditions on a candidate rook polynomial
    Check {
        #[arg(long)]
        coeffs: String,
    },
    /// n-height and n-structure vectors of a Ferrers board
    Structure {
        #[arg(long)]
        heights: String,
        #[arg(long)]
        n: usize,
    },
}

struct CliError(String);

macro_rules! cli_error_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        }
    )*};
}

cli_error_from!(
    rook::BoardError,
    rook::RookError,
    rook::CanonError,
    rook::PolynomialError,
    std::io::Error,
    serde_json::Error,
    &str
);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(message)) => {
            eprintln!("{}", json!({ "error": message }));
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Rookpoly {
            heights,
            matrix_file,
        } => {
            let q = match (heights, matrix_file) {
                (Some(h), None) => rook_polynomial_ferrers(&parse_board(&h)?),
                (None, Some(path)) => rook_polynomial_general(&read_matrix(&path)?)?,
                _ => return Err("exactly one of --heights or --matrix-file is required".into()),
            };
            println!("{}", json!({ "coeffs": coeff_strings(&q) }));
            Ok(0)
        }
        Command::Inverse { coeffs } => {
            let q = parse_poly(&coeffs)?;
            match solve_inverse(&q) {
                Ok(sol) => {
                    println!(
                        "{}",
                        json!({
                            "heights": sol.board.heights(),
                            "n": sol.n,
                            "t": bigint_value(&sol.t),
                            "u": sol.u.iter().map(bigint_value).collect::<Vec<_>>(),
                        })
                    );
                    Ok(0)
                }
                Err(rej) => {
                    let mut obj = json!({
                        "rejected": true,
                        "reason": rej.reason(),
                        "stage": rej.stage(),
                    });
                    if let rook::Rejection::NecessaryConditionFailed(report) = &rej {
                        obj["violations"] = violations_value(report);
                    }
                    println!("{obj}");
                    Ok(1)
                }
            }
        }
        Command::Canon { heights } => {
            let b = parse_board(&heights)?;
            let canon = canonical_increasing(&b)?;
            println!("{}", json!({ "heights": canon.heights() }));
            Ok(0)
        }
        Command::Equiv { a, b } => {
            let equivalent = rook_equivalent(&parse_board(&a)?, &parse_board(&b)?);
            println!("{}", json!({ "equivalent": equivalent }));
            Ok(0)
        }
        Command::Enumerate { cells, classes } => {
            if classes {
                let mut by_canon: std::collections::BTreeMap<Vec<u64>, Vec<Vec<u64>>> =
                    Default::default();
                for b in enumerate_ferrers(cells) {
                    let canon = canonical_increasing(&b)?;
                    by_canon
                        .entry(canon.heights().to_vec())
                        .or_default()
                        .push(b.heights().to_vec());
                }
                for (canon, members) in by_canon {
                    println!("{}", json!({ "canonical": canon, "members": members }));
                }
            } else {
                for b in enumerate_increasing_ferrers(cells) {
                    println!("{}", json!({ "heights": b.heights() }));
                }
            }
            Ok(0)
        }
        Command::Check { coeffs } => {
            let report = check_necessary_conditions(&parse_poly(&coeffs)?);
            println!(
                "{}",
                json!({ "passed": report.passed(), "violations": violations_value(&report) })
            );
            Ok(0)
        }
        Command::Structure { heights, n } => {
            let sd = parse_board(&heights)?.structure_data(n)?;
            println!(
                "{}",
                json!({ "n_heights": sd.n_heights, "n_structure": sd.n_structure })
            );
            Ok(0)
        }
    }
}

fn parse_board(heights: &str) -> Result<FerrersBoard, CliError> {
    let parsed = parse_list::<i64>(heights, "height")?;
    Ok(FerrersBoard::from_heights(&parsed)?)
}

fn parse_poly(coeffs: &str) -> Result<Polynomial, CliError> {
    Ok(Polynomial::from_coeffs(parse_list::<BigInt>(
        coeffs,
        "coefficient",
    )?))
}

fn parse_list<T: FromStr>(input: &str, what: &str) -> Result<Vec<T>, CliError> {
    let input = input.trim();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    input
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| CliError(format!("malformed {what}: {tok:?}")))
        })
        .collect()
}

#[derive(Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    ones: Vec<(usize, usize)>,
}

fn read_matrix(path: &PathBuf) -> Result<Board, CliError> {
    let text = fs::read_to_string(path)?;
    let m: MatrixFile = serde_json::from_str(&text)?;
    Ok(Board::from_ones(m.rows, m.cols, &m.ones)?)
}

fn coeff_strings(q: &Polynomial) -> Vec<String> {
    if q.is_zero() {
        return vec!["0".into()];
    }
    q.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Serialize an exact integer as a JSON number, falling back to a decimal
/// string outside the i64 range.
fn bigint_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn violations_value(report: &rook::NecessityReport) -> Value {
    json!(report
        .violations
        .iter()
        .map(|v| json!({ "condition": v.condition, "description": v.description }))
        .collect::<Vec<_>>())
}
