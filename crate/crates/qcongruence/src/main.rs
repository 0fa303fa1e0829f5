//! Thin command-line front end over [`qcongruence::runner`].
//!
//! Exit codes: 0 when every check passed, 1 when any check failed or was
//! undefined, 2 on usage errors (unknown ids, malformed ranges).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcongruence::runner::{emit_format, run, Cache, Format, TaskKind, TaskSpec};
use qcongruence::QcError;

#[derive(Parser)]
#[command(name = "qcongruence", version, about = "Exact verification of q-congruences, q-series identities and supercongruences")]
struct Cli {
    /// Output format: text, json or csv
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Worker threads (defaults to the number of logical CPUs)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cache file (JSON lines, append-only); QCONG_CACHE is used when unset
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Recompute even items recorded as passes in the cache
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a proved or conjectural statement family
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Scan canonical residues of a truncated sum
    Scan {
        #[command(subcommand)]
        what: ScanCommand,
    },
    /// List eta-product coefficients and optional cross-checks
    Modform(ModformArgs),
    /// Verify a supercongruence family over a prime range
    Supercong {
        /// One of: B2, A2, cong2, gamma
        #[arg(long)]
        id: String,
        /// Prime range A:B (inclusive)
        #[arg(long)]
        p_range: String,
    },
    /// Floating-point sanity checks of the archimedean limits
    Numeric {
        /// One of: bauer, H1, H2, Lchi4
        #[arg(long)]
        id: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// One of: 3.1, 3.2, 3.2a, 3.3, 3.4, 3.5, 4.14, obs
    Theorem(RangeArgs),
    /// One of: 4.1, 4.2
    Conjecture(ConjectureArgs),
    /// Only: 3.6
    Problem(RangeArgs),
    /// A named summation or product identity
    Identity(IdentityArgs),
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long)]
    id: String,
    /// Modulus index range A:B (inclusive)
    #[arg(long)]
    n_range: String,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    id: String,
    #[arg(long)]
    n_range: String,
    /// Largest repetition parameter r to test (default 1)
    #[arg(long, default_value_t = 1)]
    r_max: u64,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long)]
    id: String,
    /// Series truncation order for product identities
    #[arg(long)]
    order: Option<usize>,
    /// Comma-separated key=value integer parameters, e.g. m=3,n=5
    #[arg(long)]
    params: Option<String>,
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Report the canonical residue of the half truncation per modulus index
    Residue {
        /// Summand preset name, e.g. S5
        #[arg(long)]
        series: String,
        #[arg(long)]
        n_range: String,
        /// Modulus power k in Phi_n^k (default 1)
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
}

#[derive(Args)]
struct ModformArgs {
    /// f1 or f2
    #[arg(long)]
    form: String,
    /// Number of coefficients (a(1)..a(limit-1))
    #[arg(long, default_value_t = 100)]
    limit: usize,
    /// Also compare prime coefficients against the quadratic-form closed form
    #[arg(long)]
    check_closed_form: bool,
    /// Also report a numeric L-value estimate at integer s
    #[arg(long)]
    l_value: Option<u32>,
}

fn parse_range(s: &str) -> Result<(u64, u64), QcError> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| QcError::Parse(format!("range '{s}' must look like A:B")))?;
    let lo = a.parse().map_err(|_| QcError::Parse(format!("bad range bound '{a}'")))?;
    let hi = b.parse().map_err(|_| QcError::Parse(format!("bad range bound '{b}'")))?;
    if lo > hi {
        return Err(QcError::Parse(format!("empty range '{s}'")));
    }
    Ok((lo, hi))
}

fn parse_params(s: &str) -> Result<BTreeMap<String, i64>, QcError> {
    let mut out = BTreeMap::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| QcError::Parse(format!("parameter '{part}' must look like key=value")))?;
        let v = v
            .parse()
            .map_err(|_| QcError::Parse(format!("parameter '{part}' has a non-integer value")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn build_task(command: &Command) -> Result<TaskSpec, QcError> {
    Ok(match command {
        Command::Verify { what } => match what {
            VerifyCommand::Theorem(a) => {
                let mut t = TaskSpec::new(TaskKind::Theorem, &a.id);
                t.n_range = Some(parse_range(&a.n_range)?);
                t
            }
            VerifyCommand::Conjecture(a) => {
                let mut t = TaskSpec::new(TaskKind::Conjecture, &a.id);
                t.n_range = Some(parse_range(&a.n_range)?);
                t.r_max = Some(a.r_max);
                t
            }
            VerifyCommand::Problem(a) => {
                let mut t = TaskSpec::new(TaskKind::Problem, &a.id);
                t.n_range = Some(parse_range(&a.n_range)?);
                t
            }
            VerifyCommand::Identity(a) => {
                let mut t = TaskSpec::new(TaskKind::Identity, &a.id);
                t.order = a.order;
                if let Some(p) = &a.params {
                    t.params = parse_params(p)?;
                }
                t
            }
        },
        Command::Scan { what } => {
            let ScanCommand::Residue { series, n_range, power } = what;
            let mut t = TaskSpec::new(TaskKind::Scan, "residue");
            t.series = Some(series.clone());
            t.n_range = Some(parse_range(n_range)?);
            t.power = Some(*power);
            t
        }
        Command::Modform(a) => {
            let mut t = TaskSpec::new(TaskKind::Modform, &a.form);
            t.limit = Some(a.limit);
            t.check_closed_form = a.check_closed_form;
            t.l_value_s = a.l_value;
            t
        }
        Command::Supercong { id, p_range } => {
            let mut t = TaskSpec::new(TaskKind::Supercong, id);
            t.p_range = Some(parse_range(p_range)?);
            t
        }
        Command::Numeric { id } => TaskSpec::new(TaskKind::Numeric, id),
    })
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache
        .clone()
        .or_else(|| std::env::var_os("QCONG_CACHE").map(PathBuf::from))
}

fn real_main() -> Result<bool, QcError> {
    let cli = Cli::parse();
    let format = Format::parse(&cli.format)?;
    let task = build_task(&cli.command)?;
    let jobs = cli.jobs.unwrap_or_else(num_cpus);
    let report = match cache_path(&cli) {
        Some(path) => {
            let mut cache = Cache::load(&path)?;
            run(&task, jobs, Some(&mut cache), cli.force)?
        }
        None => run(&task, jobs, None, cli.force)?,
    };
    print!("{}", emit_format(&report, format)?);
    Ok(report.all_ok())
}

fn num_cpus() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ (QcError::Parse(_) | QcError::UnknownPreset(_))) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
