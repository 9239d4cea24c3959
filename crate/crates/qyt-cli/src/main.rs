//! `qyt` — exact counting, enumeration, and verification for
//! quasi-Yamanouchi tableaux.
//!
//! Exit codes are a stable contract: 0 success, 1 property violation,
//! 2 input error, 3 method inapplicable.

mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use qyt_core::formula::{prime_evidence, qyt_count_with_method, CountMethod};
use qyt_core::tableau::{count_qyt_brute, qyt_max_entry_range, witness_for};
use qyt_core::{CountMode, Partition};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INAPPLICABLE: u8 = 3;

const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "qyt",
    version,
    about = "Exact counting and enumeration of quasi-Yamanouchi tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Formula,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count quasi-Yamanouchi fillings of a shape.
    Count {
        /// Shape as comma-separated parts, e.g. "4,2" or "6,4,2^2,1".
        shape: String,
        /// Largest value exactly M.
        #[arg(long, value_name = "M", conflicts_with = "le")]
        eq: Option<u32>,
        /// Entries at most M.
        #[arg(long, value_name = "M")]
        le: Option<u32>,
        /// Evaluation method; `formula` fails on shapes of Durfee size > 2.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Also print the method used and the feasible max-entry range.
        #[arg(long)]
        explain: bool,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
        /// Abort brute-force enumeration after N partial fillings
        /// (default 10^7; QYT_MAX_STATES overrides).
        #[arg(long, value_name = "N")]
        max_states: Option<u64>,
    },
    /// Print the table of exact-max counts for every partition of N.
    Table {
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
        /// Brute-force budget for rows of Durfee size > 2.
        #[arg(long, value_name = "N")]
        max_states: Option<u64>,
    },
    /// Run a verification suite; exits 1 on any violated property.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Largest partition size swept (suite-specific default).
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
    },
    /// Print an explicit quasi-Yamanouchi filling with largest value M.
    Witness {
        shape: String,
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Count and fully factor, reporting the primes that appear.
    Primes {
        shape: String,
        #[arg(long, value_name = "M", conflicts_with = "le")]
        eq: Option<u32>,
        #[arg(long, value_name = "M")]
        le: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            shape,
            eq,
            le,
            method,
            explain,
            json,
            max_states,
        } => cmd_count(&shape, eq, le, method, explain, json, max_states),
        Command::Table {
            n,
            format,
            max_states,
        } => cmd_table(n, format, budget(max_states)),
        Command::Verify { suite, max_n } => verify::cmd_verify(suite, max_n),
        Command::Witness { shape, m, json } => cmd_witness(&shape, m, json),
        Command::Primes {
            shape,
            eq,
            le,
            json,
        } => cmd_primes(&shape, eq, le, json),
    }
}

fn budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("QYT_MAX_STATES")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_STATES)
}

fn parse_shape(text: &str) -> Result<Partition, ExitCode> {
    text.parse().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_INPUT)
    })
}

fn parse_mode(eq: Option<u32>, le: Option<u32>) -> Result<CountMode, ExitCode> {
    match (eq, le) {
        (Some(m), None) => Ok(CountMode::Eq(m)),
        (None, Some(m)) => Ok(CountMode::Le(m)),
        _ => {
            eprintln!("error: exactly one of --eq or --le is required");
            Err(ExitCode::from(EXIT_INPUT))
        }
    }
}

fn cmd_count(
    shape: &str,
    eq: Option<u32>,
    le: Option<u32>,
    method: Method,
    explain: bool,
    json: bool,
    max_states: Option<u64>,
) -> ExitCode {
    let shape = match parse_shape(shape) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mode = match parse_mode(eq, le) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let (count, used): (BigUint, CountMethod) = match method {
        Method::Auto => qyt_count_with_method(&shape, mode),
        Method::Formula => match shape.durfee_size() {
            0..=2 => {
                let (count, used) = qyt_count_with_method(&shape, mode);
                debug_assert!(used != CountMethod::BruteForce);
                (count, used)
            }
            d => {
                eprintln!(
                    "error: no closed formula for Durfee size {d} (shape {shape}); \
                     use --method auto or brute"
                );
                return ExitCode::from(EXIT_INAPPLICABLE);
            }
        },
        Method::Brute => match count_qyt_brute(&shape, mode, Some(budget(max_states))) {
            Ok(c) => (c, CountMethod::BruteForce),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
        },
    };
    let range = qyt_max_entry_range(&shape);
    if json {
        let out = json!({
            "shape": shape.to_string(),
            "mode": mode.label(),
            "m": mode.bound(),
            "count": count.to_string(),
            "method": used.label(),
            "feasible_range": range.map(|(lo, hi)| vec![lo, hi]),
        });
        println!("{out}");
    } else {
        println!("{count}");
        if explain {
            println!("method: {}", used.label());
            match range {
                Some((lo, hi)) => println!("feasible max-entry range: [{lo}, {hi}]"),
                None => println!("feasible max-entry range: empty shape"),
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_table(n: usize, format: TableFormat, budget: u64) -> ExitCode {
    match table::build(n, budget) {
        Ok(t) => {
            match format {
                TableFormat::Markdown => print!("{}", t.to_markdown()),
                TableFormat::Csv => print!("{}", t.to_csv()),
                TableFormat::Json => println!("{}", t.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn cmd_witness(shape: &str, m: u32, json: bool) -> ExitCode {
    let shape = match parse_shape(shape) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match witness_for(&shape, m) {
        Ok(t) => {
            if json {
                println!("{}", serde_json::to_string(&t).unwrap());
            } else {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn cmd_primes(shape: &str, eq: Option<u32>, le: Option<u32>, json: bool) -> ExitCode {
    let shape = match parse_shape(shape) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mode = match parse_mode(eq, le) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let report = prime_evidence(&shape, mode);
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
        return ExitCode::SUCCESS;
    }
    if report.factors.is_empty() {
        if report.count == "1" {
            println!("1 (unit)");
        } else {
            println!("{}", report.count);
        }
    } else {
        let factorization = report
            .factors
            .iter()
            .map(|f| {
                if f.exponent == 1 {
                    f.prime.clone()
                } else {
                    format!("{}^{}", f.prime, f.exponent)
                }
            })
            .collect::<Vec<_>>()
            .join(" * ");
        if report.is_prime {
            println!("{} = {} (prime)", report.count, factorization);
        } else {
            println!("{} = {}", report.count, factorization);
        }
    }
    ExitCode::SUCCESS
}
