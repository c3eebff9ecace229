//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 brute-force budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;

use crate::args::{parse_int_list, parse_range};
use crate::bellpoly::{bell_oracle, bell_recurrence, BellArgs, Identity};
use crate::bfile::{compare, parse_bfile};
use crate::families::{Family, FamilyParams};
use crate::output::{emit, Format};
use crate::seqtransform::{invert_m, invert_m_via_bell, Seq};
use crate::wordmodel::{enumerate_blockwords_by_blocks, BlockSystem, Selector, DEFAULT_BUDGET};
use crate::Error;

mod suites;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Environment variable overriding the default brute-force budget.
pub const BUDGET_ENV: &str = "BELLWORDS_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "bellwords",
    version,
    about = "Count restricted words with the invert transform and partial Bell polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a range of word counts for a family or a raw f0 prefix.
    Seq(SeqArgs),
    /// Run verification suites or cross-verify one family.
    Verify(VerifyArgs),
    /// Evaluate a partial Bell polynomial.
    Bell(BellCmd),
    /// Compare family terms against a local b-file.
    BfileCompare(BfileArgs),
    /// List the block words of a given length.
    Enumerate(EnumerateArgs),
}

/// Where the f0 sequence comes from.
#[derive(Debug, Args, Clone)]
struct SourceArgs {
    /// Named restriction family.
    #[arg(long, conflicts_with = "f0")]
    family: Option<String>,
    /// Raw admissible block counts f0(1), f0(2), ... as a comma list.
    #[arg(long, allow_hyphen_values = true)]
    f0: Option<String>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

enum Source {
    Family(Family),
    /// Terms indexed directly by the transform index.
    Prefix(Seq),
}

impl SourceArgs {
    fn resolve(&self) -> Result<Source, Error> {
        match (&self.family, &self.f0) {
            (Some(name), None) => Family::from_name(
                name,
                FamilyParams {
                    ell: self.ell,
                    r: self.r,
                    q: self.q,
                },
            )
            .map(Source::Family),
            (None, Some(list)) => Ok(Source::Prefix(Seq::new(parse_int_list(list)?)?)),
            _ => Err(Error::invalid("give exactly one of --family or --f0")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqMethod {
    /// Generating-function recurrence (fast).
    Transform,
    /// Partial Bell polynomial sum.
    Bell,
    /// The family's closed-form expression.
    ClosedForm,
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    m: u32,
    /// Index range, `a..b` (inclusive) or a single index.
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_enum, default_value_t = SeqMethod::Transform)]
    method: SeqMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Bell,
    Transforms,
    Chebyshev,
    Families,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, conflicts_with = "family")]
    suite: Option<Suite>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// m range for family checks, `a..b` or a single value.
    #[arg(long)]
    m: Option<String>,
    /// n range for family checks.
    #[arg(long)]
    n: Option<String>,
    /// Largest n for the identity, Bell and Chebyshev suites.
    #[arg(long)]
    n_max: Option<usize>,
    /// Sequence length for the transform suite.
    #[arg(long, default_value_t = 20)]
    len: usize,
    /// Largest m for the transform suite.
    #[arg(long, default_value_t = 4)]
    m_max: u32,
    /// Brute-force budget (candidate words); overrides BELLWORDS_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BellMethod {
    Oracle,
    Recurrence,
    Identity,
}

#[derive(Debug, Args)]
struct BellCmd {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Arguments z_1, z_2, ... as a comma list.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "identity")]
    z: Option<String>,
    /// Use the argument vector of closed-form identity 1-4.
    #[arg(long)]
    identity: Option<u32>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Evaluation route; defaults to `identity` with --identity, else `recurrence`.
    #[arg(long, value_enum)]
    method: Option<BellMethod>,
}

#[derive(Debug, Args)]
struct BfileArgs {
    #[arg(long)]
    file: PathBuf,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    m: u32,
    /// b-file index = family index + offset.
    #[arg(long, allow_hyphen_values = true)]
    offset: i64,
    /// Ignore b-file rows whose family index exceeds this.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Block head letter for a raw --f0 (lexicographic block choice).
    #[arg(long, default_value_t = 1)]
    b: u8,
    #[arg(long)]
    m: u32,
    /// Length of the block words.
    #[arg(long)]
    n: usize,
    /// Prefix each word with its number of blocks.
    #[arg(long)]
    by_blocks: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u64>,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_budget() {
            EXIT_BUDGET
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    let value = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| usage(format!("{BUDGET_ENV}={s:?} is not a positive integer")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    if value == 0 {
        return Err(usage("budget must be positive"));
    }
    Ok(value)
}

/// Runs the command line `argv` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Seq(a) => cmd_seq(a, out),
        Command::Verify(a) => suites::cmd_verify(a, out),
        Command::Bell(a) => cmd_bell(a, out),
        Command::BfileCompare(a) => cmd_bfile_compare(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Terms of `source` for every index in `ns`.
fn source_terms(
    source: &Source,
    m: u32,
    ns: RangeInclusive<usize>,
    method: SeqMethod,
) -> Result<Vec<(usize, BigInt)>, Failure> {
    match source {
        Source::Family(f) => match method {
            SeqMethod::Transform => Ok(f.counts(m, ns)?),
            SeqMethod::ClosedForm => {
                if *ns.start() < f.min_n() {
                    return Err(usage(format!(
                        "{} is defined for n >= {}",
                        f.label(),
                        f.min_n()
                    )));
                }
                Ok(ns.map(|n| (n, f.closed_form(m, n))).collect())
            }
            SeqMethod::Bell => {
                let idx_max = f.transform_index(*ns.end()).max(1);
                let terms = invert_m_via_bell(&f.f0_prefix(idx_max), m as i64)?;
                if *ns.start() < f.min_n() {
                    return Err(usage(format!(
                        "{} is defined for n >= {}",
                        f.label(),
                        f.min_n()
                    )));
                }
                Ok(ns
                    .map(|n| {
                        let idx = f.transform_index(n);
                        let v = if idx == 0 {
                            BigInt::one()
                        } else {
                            terms[idx].clone()
                        };
                        (n, v)
                    })
                    .collect())
            }
        },
        Source::Prefix(f0) => {
            if *ns.end() > f0.len() {
                return Err(usage(format!(
                    "f0 lists {} terms but index {} was requested; supply a longer prefix",
                    f0.len(),
                    ns.end()
                )));
            }
            let terms = match method {
                SeqMethod::Transform => invert_m(f0, m as i64)?,
                SeqMethod::Bell => invert_m_via_bell(f0, m as i64)?,
                SeqMethod::ClosedForm => {
                    return Err(usage(
                        "a raw f0 has no closed form; use --method transform or bell",
                    ))
                }
            };
            Ok(ns
                .map(|n| {
                    let v = if n == 0 {
                        BigInt::one()
                    } else {
                        terms[n].clone()
                    };
                    (n, v)
                })
                .collect())
        }
    }
}

fn cmd_seq(a: SeqArgs, out: &mut dyn Write) -> CmdResult {
    let source = a.source.resolve()?;
    let ns = parse_range::<usize>(&a.n)?;
    if a.m == 0 && !matches!(source, Source::Prefix(_)) {
        return Err(usage("--m must be >= 1 for a family"));
    }
    let terms = source_terms(&source, a.m, ns, a.method)?;
    let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(n, v)| (n as i64, v)).collect();
    write!(out, "{}", emit(a.format, &terms)).map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_bell(a: BellCmd, out: &mut dyn Write) -> CmdResult {
    let identity = a
        .identity
        .map(|i| Identity::from_number(i, a.ell, a.r))
        .transpose()?;
    let method = a.method.unwrap_or(if identity.is_some() {
        BellMethod::Identity
    } else {
        BellMethod::Recurrence
    });
    let value = match (&identity, &a.z, method) {
        (Some(id), _, BellMethod::Identity) => id.closed_form(a.n, a.k)?,
        (None, _, BellMethod::Identity) => return Err(usage("--method identity needs --identity")),
        (Some(id), _, m) => {
            let z = id.args(a.n.max(1))?;
            eval_bell(m, a.n, a.k, &z)?
        }
        (None, Some(list), m) => {
            let z = BellArgs::new(parse_int_list(list)?)?;
            eval_bell(m, a.n, a.k, &z)?
        }
        (None, None, _) => return Err(usage("give --z or --identity")),
    };
    writeln!(out, "{value}").map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn eval_bell(method: BellMethod, n: usize, k: usize, z: &BellArgs) -> Result<BigInt, Error> {
    match method {
        BellMethod::Oracle => bell_oracle(n, k, z),
        _ => bell_recurrence(n, k, z),
    }
}

fn cmd_bfile_compare(a: BfileArgs, out: &mut dyn Write) -> CmdResult {
    let source = a.source.resolve()?;
    let text = std::fs::read_to_string(&a.file)
        .map_err(|e| usage(format!("{}: {e}", a.file.display())))?;
    let table = parse_bfile(&text).map_err(|e| usage(format!("{}: {e}", a.file.display())))?;
    let min_n = match &source {
        Source::Family(f) => f.min_n() as i64,
        Source::Prefix(_) => 0,
    };
    let mut hi = match (table.last_index(), &source) {
        (Some(last), _) => last - a.offset,
        (None, _) => -1,
    };
    if let Source::Prefix(f0) = &source {
        hi = hi.min(f0.len() as i64);
    }
    if let Some(cap) = a.n_max {
        hi = hi.min(cap as i64);
    }
    let lo = table.first_index().map_or(0, |f| f - a.offset).max(min_n);
    if table.is_empty() || lo > hi {
        return Err(usage("no overlapping indices"));
    }
    let terms = source_terms(
        &source,
        a.m,
        lo as usize..=hi as usize,
        SeqMethod::Transform,
    )?;
    let shifted: Vec<(i64, BigInt)> = terms
        .into_iter()
        .map(|(n, v)| (n as i64 + a.offset, v))
        .collect();
    let result = compare(&table, &shifted);
    if result.overlap == 0 {
        return Err(usage("no overlapping indices"));
    }
    let write =
        |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(|e| usage(e.to_string()));
    match result.first_mismatch {
        None => {
            write(
                out,
                format!("match: {} overlapping indices", result.overlap),
            )?;
            Ok(EXIT_OK)
        }
        Some((idx, expected, found)) => {
            write(
                out,
                format!(
                    "mismatch at b-file index {idx} (n={}): b-file {expected}, computed {found}",
                    idx - a.offset
                ),
            )?;
            Ok(EXIT_MISMATCH)
        }
    }
}

fn cmd_enumerate(a: EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let budget = budget(a.budget)?;
    let system = match a.source.resolve()? {
        Source::Family(f) => f.block_system().clone(),
        Source::Prefix(f0) => {
            let counts = f0
                .terms()
                .iter()
                .map(|t| u64::try_from(t).map_err(|_| usage("f0 terms must be nonnegative")))
                .collect::<Result<Vec<_>, _>>()?;
            if a.n > counts.len() {
                return Err(usage(format!(
                    "f0 lists {} terms but length {} was requested",
                    counts.len(),
                    a.n
                )));
            }
            BlockSystem::from_prefix(a.b, counts, Selector::Lex)?
        }
    };
    let groups = enumerate_blockwords_by_blocks(&system, a.m, a.n, budget)?;
    let mut rows: Vec<(usize, String)> = groups
        .into_iter()
        .flat_map(|(k, words)| words.into_iter().map(move |w| (k, w.to_string())))
        .collect();
    if !a.by_blocks {
        rows.sort_by(|x, y| x.1.cmp(&y.1));
    }
    let text = if a.json {
        let value: serde_json::Value = if a.by_blocks {
            rows.iter()
                .map(|(k, w)| serde_json::json!({ "blocks": k, "word": w }))
                .collect()
        } else {
            rows.iter().map(|(_, w)| serde_json::json!(w)).collect()
        };
        format!("{value}\n")
    } else {
        rows.iter()
            .map(|(k, w)| {
                if a.by_blocks {
                    format!("{k} {w}\n")
                } else {
                    format!("{w}\n")
                }
            })
            .collect()
    };
    write!(out, "{text}").map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}
