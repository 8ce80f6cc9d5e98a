//! `fermatx` — factor naturals and test primality with a difference-of-squares
//! search, with trial division as the benchmark baseline.
//!
//! Exit codes: 0 success (or prime), 1 composite / benchmark disagreement,
//! 2 candidate budget exhausted, 3 invalid input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fermatx::{
    check_square, factorize_with_stats, fermat_split, is_prime, trial_division_factorize_with_count,
    Error, Natural, SearchStats, SplitKind,
};

mod targets;

/// Candidates tested per split before giving up, unless overridden.
const DEFAULT_BUDGET: u64 = 100_000_000;

const EXIT_COMPOSITE: i32 = 1;
const EXIT_DISAGREEMENT: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_INVALID: i32 = 3;

#[derive(Parser)]
#[command(
    name = "fermatx",
    version,
    about = "Factor naturals and test primality with a difference-of-squares search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the complete prime factorization of N
    Factor {
        /// Decimal natural number, N >= 1
        n: String,
        /// Emit JSON (all naturals as decimal strings)
        #[arg(long)]
        json: bool,
        /// Append the aggregate search statistics to the text output
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether N is prime (exit 0) or composite (exit 1)
    Isprime {
        /// Decimal natural number, N >= 2
        n: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Test whether N is a perfect square
    Issquare {
        /// Decimal natural number
        n: String,
    },
    /// Run one difference-of-squares split of an odd non-square P >= 3
    Split {
        /// Decimal odd non-square natural, P >= 3
        p: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Factor each target with both methods, check agreement, write CSV
    Bench {
        /// Targets: numbers, ranges `LO..HI`, or odd-only ranges `LO..HI odd`
        #[arg(required = true)]
        targets: Vec<String>,
        /// Write the CSV to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Cap on candidates tested per split [default: 100000000]
    #[arg(long, conflicts_with = "unbounded")]
    budget: Option<u64>,
    /// Remove the candidate cap entirely
    #[arg(long)]
    unbounded: bool,
}

impl BudgetArgs {
    fn resolve(&self) -> Option<u64> {
        if self.unbounded {
            None
        } else {
            Some(self.budget.unwrap_or(DEFAULT_BUDGET))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INVALID,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Factor {
            n,
            json,
            stats,
            budget,
        } => cmd_factor(&n, json, stats, budget.resolve()),
        Command::Isprime { n, budget } => cmd_isprime(&n, budget.resolve()),
        Command::Issquare { n } => cmd_issquare(&n),
        Command::Split { p, budget } => cmd_split(&p, budget.resolve()),
        Command::Bench {
            targets,
            out,
            budget,
        } => cmd_bench(&targets, out.as_deref(), budget.resolve()),
    }
}

fn parse_natural(s: &str) -> Result<Natural, i32> {
    Natural::from_str(s).map_err(|_| {
        eprintln!("error: '{s}' is not a decimal natural number");
        EXIT_INVALID
    })
}

fn report(err: &Error) -> i32 {
    eprintln!("error: {err}");
    match err {
        Error::BudgetExhausted { .. } => EXIT_BUDGET,
        Error::InvalidInput { .. } => EXIT_INVALID,
    }
}

fn stats_line(stats: &SearchStats) -> String {
    format!(
        "candidates_tested={} filter_rejections={} isqrt_confirmations={}",
        stats.candidates_tested, stats.filter_rejections, stats.isqrt_confirmations
    )
}

fn stats_json(stats: &SearchStats) -> serde_json::Value {
    serde_json::json!({
        "candidates_tested": stats.candidates_tested,
        "filter_rejections": stats.filter_rejections,
        "isqrt_confirmations": stats.isqrt_confirmations,
    })
}

fn cmd_factor(n_str: &str, json: bool, with_stats: bool, budget: Option<u64>) -> i32 {
    let n = match parse_natural(n_str) {
        Ok(n) => n,
        Err(code) => return code,
    };
    match factorize_with_stats(&n, budget) {
        Ok((factorization, stats)) => {
            if json {
                let factors: Vec<serde_json::Value> = factorization
                    .factors
                    .iter()
                    .map(|pp| {
                        serde_json::json!({"p": pp.prime.to_string(), "e": pp.exponent})
                    })
                    .collect();
                let doc = serde_json::json!({
                    "n": factorization.input.to_string(),
                    "factors": factors,
                    "stats": stats_json(&stats),
                });
                println!("{doc}");
            } else {
                if factorization.factors.is_empty() {
                    println!("1 (empty product)");
                } else {
                    println!("{factorization}");
                }
                if with_stats {
                    println!("{}", stats_line(&stats));
                }
            }
            0
        }
        Err(err) => report(&err),
    }
}

fn cmd_isprime(n_str: &str, budget: Option<u64>) -> i32 {
    let n = match parse_natural(n_str) {
        Ok(n) => n,
        Err(code) => return code,
    };
    match is_prime(&n, budget) {
        Ok(true) => {
            println!("prime");
            0
        }
        Ok(false) => {
            println!("composite");
            EXIT_COMPOSITE
        }
        Err(err @ Error::BudgetExhausted { .. }) => {
            println!("unresolved");
            eprintln!("error: {err}");
            EXIT_BUDGET
        }
        Err(err) => report(&err),
    }
}

fn cmd_issquare(n_str: &str) -> i32 {
    let n = match parse_natural(n_str) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let check = check_square(&n);
    match (check.passes_filter, check.root) {
        (_, Some(root)) => println!("square root={root}"),
        (false, None) => println!("non-square (filter)"),
        (true, None) => println!("non-square (confirmed)"),
    }
    0
}

fn cmd_split(p_str: &str, budget: Option<u64>) -> i32 {
    let p = match parse_natural(p_str) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match fermat_split(&p, budget) {
        Ok(outcome) => {
            match outcome.kind {
                SplitKind::NontrivialSplit => println!(
                    "b={} c={} factors={},{}",
                    outcome.b, outcome.c, outcome.factor_hi, outcome.factor_lo
                ),
                SplitKind::Prime => {
                    println!("prime verdict at b={} c={}", outcome.b, outcome.c)
                }
            }
            println!("{}", stats_line(&outcome.stats));
            0
        }
        Err(err) => report(&err),
    }
}

fn cmd_bench(target_args: &[String], out: Option<&std::path::Path>, budget: Option<u64>) -> i32 {
    let targets = match targets::parse(target_args) {
        Ok(targets) => targets,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INVALID;
        }
    };
    if targets.is_empty() {
        eprintln!("error: no benchmark targets given");
        return EXIT_INVALID;
    }
    let two = Natural::from(2u32);
    if let Some(bad) = targets.iter().find(|t| **t < two) {
        eprintln!("error: benchmark target {bad} is below 2");
        return EXIT_INVALID;
    }

    let mut writer: BufWriter<Box<dyn Write>> = match out {
        Some(path) => match File::create(path) {
            Ok(file) => BufWriter::new(Box::new(file)),
            Err(err) => {
                eprintln!("error: cannot write '{}': {err}", path.display());
                return EXIT_INVALID;
            }
        },
        None => BufWriter::new(Box::new(io::stdout())),
    };

    let outcome = run_bench(&targets, budget, &mut writer);
    if writer.flush().is_err() {
        eprintln!("error: could not flush benchmark output");
        return EXIT_INVALID;
    }
    match outcome {
        Ok(0) => 0,
        Ok(disagreements) => {
            eprintln!("error: {disagreements} benchmark target(s) disagreed");
            EXIT_DISAGREEMENT
        }
        Err(err) => report(&err),
    }
}

/// Writes one CSV record per target; returns the number of disagreements.
fn run_bench(
    targets: &[Natural],
    budget: Option<u64>,
    writer: &mut impl Write,
) -> Result<u64, Error> {
    writeln!(
        writer,
        "n,fermat_candidates,fermat_time_ns,trial_divisions,trial_time_ns,agree"
    )
    .map_err(io_error)?;

    let mut disagreements = 0u64;
    for n in targets {
        let started = Instant::now();
        let (fermat_result, stats) = factorize_with_stats(n, budget)?;
        let fermat_time_ns = started.elapsed().as_nanos();

        let started = Instant::now();
        let (trial_result, trial_divisions) =
            trial_division_factorize_with_count(n).expect("targets are >= 2");
        let trial_time_ns = started.elapsed().as_nanos();

        let agree =
            fermat_result.factors == trial_result.factors && fermat_result.input == trial_result.input;
        if !agree {
            disagreements += 1;
            eprintln!("error: factorization disagreement on {n}: {fermat_result} vs {trial_result}");
        }
        writeln!(
            writer,
            "{},{},{},{},{},{}",
            n, stats.candidates_tested, fermat_time_ns, trial_divisions, trial_time_ns, agree
        )
        .map_err(io_error)?;
    }

    Ok(disagreements)
}

fn io_error(err: io::Error) -> Error {
    Error::InvalidInput {
        reason: format!("benchmark output failed: {err}"),
    }
}
