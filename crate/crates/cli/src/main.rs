//! `pathbetti`: Betti tables, homology and verification for path ideals of
//! cycles and lines.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 resource.

mod output;

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pathbetti_core::betti::{betti_hochster_with_cap, DEFAULT_MAX_SUBSET_BITS};
use pathbetti_core::verify::{verify_matrix, VerifyConfig};
use pathbetti_core::{
    betti_closed_cycle, betti_closed_line, build_path_complex, build_run_complement,
    homology_cycle_complement, homology_run_sequence, reduced_homology_dims, Error, FieldSpec,
    PathFamilySpec, PathKind, RunSequence,
};

use output::{DiffRecord, HomologyRecord, OutputRecord};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

const CAP_ENV: &str = "PATHBETTI_MAX_SUBSET_BITS";

#[derive(Parser)]
#[command(name = "pathbetti", version, about = "Graded Betti numbers of path ideals of cycles and lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graded Betti table.
    Betti(BettiArgs),
    /// Reduced homology of a run-sequence complement or a full cycle complement.
    Homology(HomologyArgs),
    /// Run the oracle-versus-closed-form verification matrix.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cycle,
    Line,
}

impl From<Kind> for PathKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cycle => PathKind::Cycle,
            Kind::Line => PathKind::Line,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Closed,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value = "closed")]
    method: MethodArg,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value = "0")]
    characteristic: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct HomologyArgs {
    /// Comma-separated run lengths, e.g. `4` or `1,2`.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["kind", "n"])]
    runs: Option<Vec<usize>>,
    #[arg(long, value_enum, requires = "n")]
    kind: Option<Kind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: usize,
    /// Also compute homology from boundary-matrix ranks and compare.
    #[arg(long)]
    explicit: bool,
    #[arg(long = "char", default_value = "0")]
    characteristic: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Inclusive range of path lengths, `a..b`.
    #[arg(long, default_value = "2..5", value_parser = parse_range)]
    t_range: RangeInclusive<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0,2,32003")]
    char_list: Vec<u64>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a range like 2..5, got {s:?}"))?;
    let lo = a.trim().parse().map_err(|_| format!("invalid range start {a:?}"))?;
    let hi = b.trim().parse().map_err(|_| format!("invalid range end {b:?}"))?;
    Ok(lo..=hi)
}

/// A failure that maps onto a stable exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_USAGE,
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Structural(_) => EXIT_VERIFY,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn oracle_cap() -> Result<u32, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{CAP_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_SUBSET_BITS),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize")
}

/// Prints the record and returns the exit code.
fn cmd_betti(args: &BettiArgs) -> Result<u8, Failure> {
    let spec = PathFamilySpec::new(args.kind.into(), args.n, args.t)?;
    let field = FieldSpec::new(args.characteristic)?;
    let cap = oracle_cap()?;
    let start = Instant::now();
    let closed = || match spec.kind() {
        PathKind::Cycle => betti_closed_cycle(spec),
        PathKind::Line => betti_closed_line(spec),
    };
    let oracle = || betti_hochster_with_cap(&build_path_complex(spec), field, cap);
    let (mut record, agree) = match args.method {
        MethodArg::Oracle => (OutputRecord::new(spec, "oracle", field.characteristic(), &oracle()?), true),
        MethodArg::Closed => (OutputRecord::new(spec, "closed", field.characteristic(), &closed()?), true),
        MethodArg::Both => {
            let (c, o) = (closed()?, oracle()?);
            let diff: Vec<DiffRecord> = c
                .diff(&o)
                .into_iter()
                .map(|(i, j, closed, oracle)| DiffRecord { i, j, closed, oracle })
                .collect();
            let agree = diff.is_empty();
            let mut rec = OutputRecord::new(spec, "both", field.characteristic(), &c);
            rec.diff = Some(diff);
            (rec, agree)
        }
    };
    record.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    match args.format {
        Format::Json => println!("{}", to_json(&record)),
        Format::Csv => print!("{}", record.to_csv().map_err(|e| usage(e.to_string()))?),
        Format::Pretty => print!("{}", record.to_pretty()),
    }
    if !agree {
        eprintln!("error: oracle and closed-form tables differ");
        return Ok(EXIT_VERIFY);
    }
    Ok(0)
}

fn cmd_homology(args: &HomologyArgs) -> Result<u8, Failure> {
    let field = FieldSpec::new(args.characteristic)?;
    let record = match (&args.runs, args.kind, args.n) {
        (Some(runs), _, _) => {
            if args.t < 2 {
                return Err(usage("t must be at least 2"));
            }
            let seq = RunSequence::new(runs.clone())?;
            let closed = homology_run_sequence(args.t, &seq).to_vector();
            let explicit = if args.explicit {
                Some(reduced_homology_dims(&build_run_complement(&seq, args.t)?, field))
            } else {
                None
            };
            HomologyRecord {
                t: args.t,
                runs: Some(runs.clone()),
                spec: None,
                field_characteristic: field.characteristic(),
                agree: explicit.as_ref().is_none_or(|e| *e == closed),
                closed,
                explicit,
            }
        }
        (None, Some(Kind::Cycle), Some(n)) => {
            let spec = PathFamilySpec::cycle(n, args.t)?;
            let closed = homology_cycle_complement(spec)?.to_vector();
            let explicit = if args.explicit {
                let cx = build_path_complex(spec);
                Some(reduced_homology_dims(&cx.complement(cx.ambient())?, field))
            } else {
                None
            };
            HomologyRecord {
                t: args.t,
                runs: None,
                spec: Some(spec.into()),
                field_characteristic: field.characteristic(),
                agree: explicit.as_ref().is_none_or(|e| *e == closed),
                closed,
                explicit,
            }
        }
        (None, Some(Kind::Line), _) => return Err(usage("full-complement homology is only defined for cycles")),
        _ => return Err(usage("give either --runs or --kind cycle --n")),
    };
    match args.format {
        Format::Json | Format::Csv => println!("{}", to_json(&record)),
        Format::Pretty => print!("{}", record.to_pretty()),
    }
    if !record.agree {
        eprintln!("error: closed form and explicit homology differ");
        return Ok(EXIT_VERIFY);
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let fields = args
        .char_list
        .iter()
        .map(|&c| FieldSpec::new(c))
        .collect::<Result<Vec<_>, _>>()?;
    if fields.is_empty() {
        return Err(usage("--char-list needs at least one field"));
    }
    let config = VerifyConfig {
        max_n: args.max_n,
        t_range: args.t_range.clone(),
        fields,
        max_subset_bits: oracle_cap()?,
    };
    let reports = verify_matrix(&config)?;
    if reports.is_empty() {
        eprintln!("warning: the requested range contains no cells");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    match args.format {
        Format::Json => println!("{}", to_json(&reports)),
        Format::Csv => {
            println!("kind,n,t,check,passed");
            for r in &reports {
                println!("{},{},{},{},{}", r.kind, r.n, r.t, r.check, r.passed);
            }
        }
        Format::Pretty => {
            for r in &reports {
                println!("{r}");
            }
            println!("{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Betti(a) => cmd_betti(a),
        Command::Homology(a) => cmd_homology(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
