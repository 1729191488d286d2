use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qfact_cli::commands::{self, CliError, GraphKind};
use qfact_cli::scan::{scan, ScanBounds};
use qfact_cli::{EXIT_INVARIANT, EXIT_PARSE};
use qfact_core::DEFAULT_QUOCHAIN_BOUND;

/// Factorization tools for Drinfeld polynomials of type A.
///
/// Polynomials are written as `A3; w[1,3] w[2,0]^2 kr[3,1,2]` and read from
/// the argument, or from stdin when it is omitted.
#[derive(Parser)]
#[command(name = "qfact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-factorization as a list of KR factors
    Qfact { poly: Option<String> },
    /// fundamental or q-factorization graph
    Graph {
        poly: Option<String>,
        #[arg(long, value_enum, default_value = "qfact")]
        kind: GraphKind,
        #[arg(long)]
        dot: bool,
    },
    /// whether the polynomial is a (prime) snake polynomial
    IsPrimeSnake { poly: Option<String> },
    /// whether the radical is a prime snake polynomial
    SnakeSupport { poly: Option<String> },
    /// maximal totally ordered subsets
    Mtos {
        poly: Option<String>,
        #[arg(long, value_enum, default_value = "qfact")]
        kind: GraphKind,
    },
    /// the greedy mtos-quochain, or all of them
    Quochains {
        poly: Option<String>,
        #[arg(long, value_enum, default_value = "qfact")]
        kind: GraphKind,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_QUOCHAIN_BOUND)]
        bound: usize,
    },
    /// prime factorization through the first applicable route
    Factorize { poly: Option<String> },
    /// fuse two vertices in special position
    Fuse {
        v: u32,
        w: u32,
        poly: Option<String>,
        #[arg(long, value_enum, default_value = "fund")]
        kind: GraphKind,
    },
    /// three-vertex route only
    Check3 { poly: Option<String> },
    /// property sweep over seeded random polynomials
    Scan {
        /// e.g. `n=5,factors=8,centers=-10:10,snake`
        #[arg(long, default_value = "")]
        bounds: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: u64,
    },
}

fn input(poly: Option<String>) -> Result<qfact_core::DrinfeldPolynomial, CliError> {
    let text = match poly {
        Some(p) => p,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::new(EXIT_PARSE, e.to_string()))?;
            s
        }
    };
    commands::parse(&text)
}

fn run(command: Command) -> Result<(String, i32), CliError> {
    let out = match command {
        Command::Qfact { poly } => commands::qfact(&input(poly)?)?,
        Command::Graph { poly, kind, dot } => commands::graph(&input(poly)?, kind, dot)?,
        Command::IsPrimeSnake { poly } => commands::is_prime_snake(&input(poly)?)?,
        Command::SnakeSupport { poly } => commands::snake_support(&input(poly)?)?,
        Command::Mtos { poly, kind } => commands::mtos(&input(poly)?, kind)?,
        Command::Quochains { poly, kind, all, bound } => commands::quochains(&input(poly)?, kind, all, bound)?,
        Command::Factorize { poly } => commands::factorize(&input(poly)?)?,
        Command::Fuse { v, w, poly, kind } => commands::fuse(&input(poly)?, kind, v, w)?,
        Command::Check3 { poly } => commands::check3(&input(poly)?)?,
        Command::Scan { bounds, seed, count } => {
            let bounds: ScanBounds = bounds.parse().map_err(|e| CliError::new(EXIT_PARSE, e))?;
            let report = scan(bounds, seed, count);
            let code = if report.violations.is_empty() {
                0
            } else {
                EXIT_INVARIANT
            };
            let json = serde_json::to_string(&report).map_err(|e| CliError::new(EXIT_INVARIANT, e.to_string()))?;
            return Ok((json + "\n", code));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("qfact: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
