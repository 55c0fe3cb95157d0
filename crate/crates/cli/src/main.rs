//! `dedekind`: exact Dedekind sums, inversion counts, and theorem sweeps from
//! the command line.
//!
//! Exit status is 0 on success, 1 when a `verify` sweep finds violations, and
//! 2 for usage or domain errors.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dedekind_core::confrac::cf_expand;
use dedekind_core::dedekind::{dedekind_sum_bhk, dedekind_sum_def, mu};
use dedekind_core::exactmath::{jacobi, CoprimePair};
use dedekind_core::permutation::{inversions_meyer, InversionMethod};
use dedekind_core::scan::{scan, ScanPredicate, ScanRecord};
use dedekind_core::theorems::classify_pair;
use dedekind_core::verify::{verify, Theorem};
use dedekind_core::{confrac, Error};

use crate::render::{Format, SumReport};

#[derive(Parser)]
#[command(name = "dedekind", version, about = "Exact Dedekind sums and congruence checks")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit JSON (one object per line for streams)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with a header row
    #[arg(long, global = true)]
    csv: bool,
    /// Evaluator: def|bhk for `sum`, naive|fast|meyer for `inv`
    #[arg(long, global = true)]
    method: Option<String>,
    /// Worker threads for `verify` and `scan` (0 = all cores, 1 = sequential)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Dedekind sum s(a, b)
    Sum {
        a: u64,
        b: u64,
        /// Also print T, D, a*, mu and I
        #[arg(long)]
        all: bool,
    },
    /// Inversion count I(a, b) of x -> a*x mod b
    Inv { a: u64, b: u64 },
    /// Odd-length continued fraction of a/b with T and D
    Cf { a: u64, b: u64 },
    /// Jacobi symbol (a/b) for odd b
    Jacobi { a: i64, b: u64 },
    /// Classify 12s(a1,b) - 12s(a2,b)
    Check { a1: u64, a2: u64, b: u64 },
    /// Sweep a theorem over all coprime inputs with b_min <= b <= b_max
    Verify {
        /// zolotarev | meyer | salie | bhk | lerch | necCond | altsum | girstmair
        theorem: String,
        b_min: u64,
        b_max: u64,
    },
    /// List pairs a1 < a2 < b matching a predicate
    Scan {
        b_min: u64,
        b_max: u64,
        /// equal | cond-c-not-equal | ladder=none|1|2|4|8
        predicate: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    }) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, Failure> {
    let g = cli.global;
    let format = if g.json {
        Format::Json
    } else if g.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let method = g.method.as_deref();

    match cli.command {
        Command::Sum { a, b, all } => {
            let value = match method.unwrap_or("bhk") {
                "bhk" => dedekind_sum_bhk(a, b)?,
                "def" => dedekind_sum_def(a, b)?,
                other => return Err(usage(format!("unknown sum method `{other}` (def|bhk)"))),
            };
            let mut report = SumReport::new(value);
            if all {
                let pair = CoprimePair::new(a, b)?;
                report.extras = Some(render::SumExtras {
                    t: confrac::alt_sum(a, b)?,
                    d: confrac::digit_sum(a, b)?,
                    a_star: pair.inverse(),
                    mu: mu(a, b)?,
                    inversions: inversions_meyer(a, b)?,
                });
            }
            render::write_sum(out, format, &report)?;
        }
        Command::Inv { a, b } => {
            let m: InversionMethod = method.unwrap_or("fast").parse().map_err(usage)?;
            let count = m.count(a, b)?;
            render::write_inv(out, format, a, b, m, count)?;
        }
        Command::Cf { a, b } => {
            let cf = cf_expand(a, b)?;
            render::write_cf(out, format, a, b, &cf)?;
        }
        Command::Jacobi { a, b } => {
            let j = jacobi(a, b)?;
            render::write_jacobi(out, format, a, b, j)?;
        }
        Command::Check { a1, a2, b } => {
            let record = ScanRecord::from(classify_pair(a1, a2, b)?);
            render::write_check(out, format, &record)?;
        }
        Command::Verify {
            theorem,
            b_min,
            b_max,
        } => {
            let theorem: Theorem = theorem.parse().map_err(usage)?;
            eprintln!("verifying {theorem} for {b_min} <= b <= {b_max}");
            let report = with_threads(g.threads, |parallel| {
                verify(theorem, b_min, b_max, parallel)
            })??;
            render::write_verify(out, format, &report)?;
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan {
            b_min,
            b_max,
            predicate,
        } => {
            let predicate: ScanPredicate = predicate.parse().map_err(usage)?;
            eprintln!("scanning {predicate} for {b_min} <= b <= {b_max}");
            let rows = with_threads(g.threads, |parallel| scan(b_min, b_max, predicate, parallel))??;
            eprintln!("{} matching pairs", rows.len());
            render::write_scan(out, format, &rows)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn usage(msg: String) -> Failure {
    Failure::Usage(msg)
}

/// Runs `f` sequentially for one thread, otherwise inside a rayon pool.
fn with_threads<T: Send>(
    threads: usize,
    f: impl FnOnce(bool) -> T + Send,
) -> Result<T, Failure> {
    if threads == 1 {
        return Ok(f(false));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| usage(e.to_string()))?;
    Ok(pool.install(|| f(true)))
}
