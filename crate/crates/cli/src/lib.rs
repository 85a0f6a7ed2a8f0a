//! `flagfib` command-line front end. Every subcommand prints one JSON value
//! on standard output.
//!
//! Exit codes: 0 when everything requested passes, 1 when a verification
//! fails, 2 for usage and resource errors (one diagnostic line on standard
//! error).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use flagfib_core::combinatorics::{
    enumerate_dimvecs, enumerate_partitions, kostka_number, DimVector, Partition,
};
use flagfib_core::flaggeo::{fiber_count_brute, CountCache, FiberCounter, DEFAULT_BUDGET};
use flagfib_core::qpoly::{kostka_foulkes, modified_kostka_foulkes};
use flagfib_core::verifier::{
    run_suite, verify_schur_weyl, Convention, Mode, SuiteConfig, SuiteError, Verifier,
};

/// Environment variable naming the default count cache.
pub const CACHE_ENV: &str = "FLAGFIB_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "flagfib",
    version,
    about = "Point counts of Spaltenstein fibers and Kostka-Foulkes identities"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Grid {
    /// Maximum Jordan block size (number of flag steps).
    #[arg(long)]
    n: usize,
    /// Dimension of the underlying space.
    #[arg(long)]
    d: usize,
}

#[derive(Args, Debug)]
struct Counting {
    /// JSONL file of previously computed counts.
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Maximum subspaces examined per count.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl Counting {
    fn counter(&self) -> Result<FiberCounter, Failure> {
        let counter = FiberCounter::new().with_budget(self.budget);
        match &self.cache {
            Some(path) => Ok(counter.with_cache(CountCache::open(path).map_err(usage)?)),
            None => Ok(counter),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partitions of d with parts at most n.
    Partitions(Grid),
    /// Dimension vectors of length n summing to d.
    Dimvecs(Grid),
    /// Number of semistandard tableaux of a shape and weight.
    Kostka {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        weight: DimVector,
    },
    /// Kostka-Foulkes polynomial and its modified form.
    KostkaFoulkes {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        weight: Partition,
    },
    /// Number of F_q-points of one fiber.
    FiberCount {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        dimvec: DimVector,
        #[arg(long)]
        q: u64,
        /// Enumerate all subspaces directly instead of recursing.
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        counting: Counting,
    },
    /// Point-count polynomial of one fiber.
    FiberPoly {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        dimvec: DimVector,
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[command(flatten)]
        counting: Counting,
    },
    /// Solve for the stalk polynomials from fiber counts.
    Bootstrap {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = Convention::Standard)]
        convention: Convention,
        #[command(flatten)]
        counting: Counting,
    },
    /// Run the full verification suite and print its report.
    Verify {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = Mode::Polynomial)]
        mode: Mode,
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = Convention::Standard)]
        convention: Convention,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print counter statistics as JSON on standard error.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        counting: Counting,
    },
    /// Schur-Weyl dimension identities.
    SchurWeyl(Grid),
}

enum Failure {
    Usage(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

struct Output {
    value: Value,
    passed: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output {
            value,
            passed: true,
        }
    }
}

fn to_value(x: &impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("values serialize")
}

fn check_sizes(left: usize, right: usize, what: &str) -> Result<(), Failure> {
    if left == right {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{what}: sizes {left} and {right} differ"
        )))
    }
}

fn execute(command: Command, stderr: &mut dyn Write) -> Result<Output, Failure> {
    match command {
        Command::Partitions(g) => {
            let ps = enumerate_partitions(g.n, g.d).map_err(usage)?;
            Ok(Output::ok(json!({ "partitions": to_value(&ps) })))
        }
        Command::Dimvecs(g) => {
            let vs = enumerate_dimvecs(g.n, g.d).map_err(usage)?;
            Ok(Output::ok(json!({ "dimvecs": to_value(&vs) })))
        }
        Command::Kostka { shape, weight } => {
            check_sizes(shape.size(), weight.total(), "kostka")?;
            Ok(Output::ok(
                json!({ "kostka": kostka_number(&shape, weight.entries()) }),
            ))
        }
        Command::KostkaFoulkes { shape, weight } => {
            check_sizes(shape.size(), weight.size(), "kostka-foulkes")?;
            Ok(Output::ok(json!({
                "kostka_foulkes": kostka_foulkes(&shape, &weight).to_string(),
                "modified": modified_kostka_foulkes(&shape, &weight).to_string(),
            })))
        }
        Command::FiberCount {
            lambda,
            dimvec,
            q,
            brute,
            counting,
        } => {
            let record = if brute {
                fiber_count_brute(&lambda, &dimvec, q, counting.budget)
            } else {
                counting.counter()?.fiber_count(&lambda, &dimvec, q)
            }
            .map_err(usage)?;
            Ok(Output::ok(json!({ "count": record.count })))
        }
        Command::FiberPoly {
            lambda,
            dimvec,
            primes,
            counting,
        } => {
            let fp = counting
                .counter()?
                .fiber_polynomial(&lambda, &dimvec, primes.as_deref())
                .map_err(usage)?;
            Ok(Output::ok(json!({
                "lambda": to_value(&fp.lambda),
                "dimvec": to_value(&fp.dimvec),
                "degree_bound": fp.degree_bound,
                "primes": fp.primes(),
                "poly": fp.poly.to_string(),
            })))
        }
        Command::Bootstrap {
            grid,
            convention,
            counting,
        } => {
            let counter = counting.counter()?;
            let verifier = Verifier::new(grid.n, grid.d, &counter)
                .map_err(usage)?
                .with_convention(convention);
            if let Some(e) = verifier
                .fiber_table()
                .values()
                .find_map(|r| r.as_ref().err().filter(|e| e.is_resource()))
            {
                return Err(usage(e));
            }
            let (check, table) = verifier.verify_bootstrap();
            let stalks: Vec<Value> = table
                .iter()
                .flat_map(|t| &t.entries)
                .map(|((p, l), t)| json!({ "p": to_value(p), "lambda": to_value(l), "t": t.to_string() }))
                .collect();
            let passed = check.passed();
            Ok(Output {
                value: json!({ "check": to_value(&check), "stalks": stalks }),
                passed,
            })
        }
        Command::Verify {
            grid,
            mode,
            primes,
            convention,
            report,
            stats,
            counting,
        } => {
            let counter = counting.counter()?;
            let config = SuiteConfig {
                n: grid.n,
                d: grid.d,
                mode,
                primes,
                convention,
            };
            let result = run_suite(&config, &counter).map_err(|e| match e {
                SuiteError::Parameters(e) => usage(e),
                SuiteError::Resource(e) => usage(e),
            })?;
            if stats {
                let s = counter.stats();
                let _ = writeln!(
                    stderr,
                    "{}",
                    json!({
                        "cache_hits": s.cache_hits,
                        "memo_hits": s.memo_hits,
                        "examined": s.examined,
                        "computed": s.computed,
                    })
                );
            }
            if let Some(path) = report {
                let mut text = result.to_json_pretty();
                text.push('\n');
                std::fs::write(&path, text)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            Ok(Output {
                value: to_value(&result),
                passed: result.passed(),
            })
        }
        Command::SchurWeyl(g) => {
            enumerate_dimvecs(g.n, g.d).map_err(usage)?;
            let check = verify_schur_weyl(g.n, g.d);
            let passed = check.status != flagfib_core::verifier::Status::Fail;
            Ok(Output {
                value: to_value(&check),
                passed,
            })
        }
    }
}

/// Parses `args` (including the program name), runs the subcommand, and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return 2;
        }
    };
    match execute(cli.command, stderr) {
        Ok(out) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&out.value)
            } else {
                serde_json::to_string(&out.value)
            }
            .expect("values serialize");
            let _ = writeln!(stdout, "{text}");
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {}", msg.lines().next().unwrap_or_default());
            2
        }
    }
}
