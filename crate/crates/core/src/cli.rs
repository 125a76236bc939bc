//! Command-line front end. [`run`] parses arguments and returns the exit code
//! together with everything that would be printed, so the binary is a thin
//! wrapper and tests can drive commands in-process.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::BigInt;

use crate::charpoly::{e_poly, h_poly, specht_binomial, weyl_poly};
use crate::error::{Error, Result};
use crate::moments::{invariant_dim, kronecker_stable, moment_of_product, restriction_table};
use crate::partitions::{character_table, partitions_of, seed_character_values, Partition};
use crate::poly::{to_binomial_basis, BinomialExpansion, Polynomial};
use crate::rational::format_rational;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

/// Refused above this size; the restriction table grows quickly.
pub const TABLE_MAX: u32 = 9;

#[derive(Parser, Debug)]
#[command(
    name = "charpoly",
    version,
    about = "Character polynomials, moments and stable restriction coefficients"
)]
struct Cli {
    /// Directory holding cached character tables (one JSON file per degree)
    #[arg(long, env = "CHARPOLY_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character polynomial of a representation family
    Charpoly {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        opts: PolyOpts,
    },
    /// Shorthand for `charpoly weyl`
    Weyl(PolyOpts),
    /// Shorthand for `charpoly specht`
    Specht(PolyOpts),
    /// Shorthand for `charpoly sym`
    Sym(PolyOpts),
    /// Shorthand for `charpoly alt`
    Alt(PolyOpts),
    /// Stable restriction coefficients for all shapes up to a size
    RestrictionTable {
        #[arg(long, default_value_t = 5)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (defaults to all cores); output does not depend on it
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Moment of a product of character polynomials
    Moments(MomentArgs),
    /// Dimensions of invariants of a Weyl module over a range of n
    Invariants {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        /// Inclusive range `a..b`
        #[arg(long, value_parser = parse_range)]
        n_range: (u32, u32),
    },
    /// Stable Kronecker coefficient of three partitions of one size
    Kronecker {
        #[arg(value_parser = parse_partition, num_args = 3, required = true)]
        shapes: Vec<Partition>,
    },
    /// Recompute known identities and report pass/fail for each
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Size bound for the suite (each suite has its own default)
        #[arg(long)]
        max: Option<u32>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Weyl,
    Specht,
    Sym,
    Alt,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    Monomial,
    Binomial,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    All,
    Table1,
    Matrix,
    Genfun,
    Oracle,
    Duality,
    Criteria,
}

#[derive(Args, Debug)]
struct PolyOpts {
    #[arg(long, value_parser = parse_partition)]
    shape: Option<Partition>,
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Basis::Monomial)]
    basis: Basis,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("at").required(true).args(["n", "stable"])))]
struct MomentArgs {
    #[arg(long = "shape-weyl", value_parser = parse_partition)]
    weyl: Vec<Partition>,
    #[arg(long = "shape-specht", value_parser = parse_partition)]
    specht: Vec<Partition>,
    /// Factor `H_d`
    #[arg(long)]
    sym: Vec<u32>,
    /// Factor `E_d`
    #[arg(long)]
    alt: Vec<u32>,
    /// Factor read from a file (JSON or text polynomial)
    #[arg(long)]
    file: Vec<PathBuf>,
    #[arg(long)]
    n: Option<u32>,
    /// Evaluate at the graded degree of the product
    #[arg(long)]
    stable: bool,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let bad = || format!("expected a range like 1..8, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_) | Error::LengthBound { .. } => EXIT_INFEASIBLE,
        Error::Internal(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    let cache = cli.cache_dir.as_deref();
    match cli.command {
        Command::Charpoly { kind, opts } => cmd_charpoly(kind, opts, cache),
        Command::Weyl(opts) => cmd_charpoly(Kind::Weyl, opts, cache),
        Command::Specht(opts) => cmd_charpoly(Kind::Specht, opts, cache),
        Command::Sym(opts) => cmd_charpoly(Kind::Sym, opts, cache),
        Command::Alt(opts) => cmd_charpoly(Kind::Alt, opts, cache),
        Command::RestrictionTable { max, format, out, jobs } => {
            if max > TABLE_MAX {
                return Err(Error::Infeasible(format!("--max above {TABLE_MAX} is not supported")));
            }
            prepare_cache(cache, max)?;
            let table = restriction_table(max, jobs)?;
            let text = match format {
                Format::Text => table.to_text(),
                Format::Json => table.to_json() + "\n",
                Format::Csv => table.to_csv()?,
            };
            emit(text, out.as_deref())
        }
        Command::Moments(args) => cmd_moments(args, cache),
        Command::Invariants { shape, n_range: (a, b) } => {
            let dims: Vec<u64> = (a..=b).map(|n| invariant_dim(&shape, n)).collect::<Result<_>>()?;
            Ok(Outcome::ok(dims.iter().join(" ") + "\n"))
        }
        Command::Kronecker { shapes } => {
            prepare_cache(cache, shapes[0].size())?;
            let g = kronecker_stable(&shapes[0], &shapes[1], &shapes[2])?;
            Ok(Outcome::ok(format!("{g}\n")))
        }
        Command::Verify { suite, max } => cmd_verify(suite, max, cache),
    }
}

fn emit(text: String, out: Option<&Path>) -> Result<Outcome> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn cmd_charpoly(kind: Kind, opts: PolyOpts, cache: Option<&Path>) -> Result<Outcome> {
    let poly = match (kind, &opts.shape, opts.degree) {
        (Kind::Weyl, Some(shape), None) => weyl_poly(shape),
        (Kind::Specht, Some(shape), None) => {
            prepare_cache(cache, shape.size())?;
            crate::poly::from_binomial_basis(&specht_binomial(shape))
        }
        (Kind::Sym, None, Some(d)) => h_poly(d as i64),
        (Kind::Alt, None, Some(d)) => e_poly(d as i64),
        (Kind::Weyl | Kind::Specht, _, _) => {
            return Err(Error::Parse("weyl and specht take --shape (and no --degree)".into()))
        }
        (Kind::Sym | Kind::Alt, _, _) => {
            return Err(Error::Parse("sym and alt take --degree (and no --shape)".into()))
        }
    };
    let text = match (opts.basis, opts.format) {
        (Basis::Monomial, Format::Text) => format!("{poly}\n"),
        (Basis::Monomial, Format::Json) => poly.to_json() + "\n",
        (Basis::Monomial, Format::Csv) => monomial_csv(&poly)?,
        (Basis::Binomial, Format::Text) => format!("{}\n", to_binomial_basis(&poly)),
        (Basis::Binomial, Format::Json) => to_binomial_basis(&poly).to_json() + "\n",
        (Basis::Binomial, Format::Csv) => binomial_csv(&to_binomial_basis(&poly))?,
    };
    emit(text, opts.out.as_deref())
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// Columns `coeff,X1,...,Xk` holding exponents, terms in canonical order.
fn monomial_csv(p: &Polynomial) -> Result<String> {
    let k = p.terms().map(|(m, _)| m.exps().len()).max().unwrap_or(0);
    let mut rows = vec![std::iter::once("coeff".to_string()).chain((1..=k).map(|i| format!("X{i}"))).collect()];
    for (m, c) in p.terms().rev() {
        let mut row = vec![format_rational(c)];
        row.extend((1..=k as u32).map(|i| m.exponent(i).to_string()));
        rows.push(row);
    }
    csv_string(rows)
}

/// Columns `coeff,partition` with partitions spelled `2+1`.
fn binomial_csv(e: &BinomialExpansion) -> Result<String> {
    let mut rows = vec![vec!["coeff".to_string(), "partition".to_string()]];
    for (key, c) in e.raw_terms().collect::<Vec<_>>().into_iter().rev() {
        rows.push(vec![format_rational(c), crate::moments::partition_label(&key.to_partition())]);
    }
    csv_string(rows)
}

fn read_polynomial(path: &Path) -> Result<Polynomial> {
    let text = fs::read_to_string(path)?;
    let text = text.trim();
    if text.starts_with('{') {
        Polynomial::from_json(text)
    } else {
        text.parse()
    }
}

fn cmd_moments(args: MomentArgs, cache: Option<&Path>) -> Result<Outcome> {
    let specht_size = args.specht.iter().map(Partition::size).max().unwrap_or(0);
    prepare_cache(cache, specht_size)?;
    let mut factors: Vec<BinomialExpansion> = Vec::new();
    factors.extend(args.weyl.iter().map(|l| to_binomial_basis(&weyl_poly(l))));
    factors.extend(args.specht.iter().map(specht_binomial));
    factors.extend(args.sym.iter().map(|&d| to_binomial_basis(&h_poly(d as i64))));
    factors.extend(args.alt.iter().map(|&d| to_binomial_basis(&e_poly(d as i64))));
    for path in &args.file {
        factors.push(to_binomial_basis(&read_polynomial(path)?));
    }
    let n = match args.n {
        Some(n) => n,
        None => {
            let mut total = 0;
            for f in &factors {
                match f.raw_terms().map(|(k, _)| k.graded_degree()).max() {
                    Some(d) => total += d,
                    None => return Ok(Outcome::ok("0\n".into())),
                }
            }
            total
        }
    };
    let refs: Vec<&BinomialExpansion> = factors.iter().collect();
    Ok(Outcome::ok(format_rational(&moment_of_product(&refs, n)) + "\n"))
}

fn cmd_verify(suite: SuiteArg, max: Option<u32>, cache: Option<&Path>) -> Result<Outcome> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Table1 => vec![Suite::Table1],
        SuiteArg::Matrix => vec![Suite::Matrix],
        SuiteArg::Genfun => vec![Suite::Genfun],
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::Duality => vec![Suite::Duality],
        SuiteArg::Criteria => vec![Suite::Criteria],
    };
    // refuse infeasible bounds before anything runs
    for s in &suites {
        let m = max.unwrap_or(s.default_max());
        if m > s.feasible_max() {
            return Err(Error::Infeasible(format!(
                "suite {} accepts --max up to {}, got {m}",
                s.name(),
                s.feasible_max()
            )));
        }
    }
    prepare_cache(cache, suites.iter().map(|s| max.unwrap_or(s.default_max()).min(8)).max().unwrap_or(0))?;
    let mut out = String::new();
    let mut all_passed = true;
    for s in suites {
        for c in run_suite(s, max)? {
            all_passed &= c.passed;
            out.push_str(&c.to_string());
            out.push('\n');
        }
    }
    let code = if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { code, stdout: out, stderr: String::new() })
}

fn cache_file(dir: &Path, d: u32) -> PathBuf {
    dir.join(format!("characters-{d}.json"))
}

fn cache_key(lambda: &Partition, alpha: &Partition) -> String {
    format!(
        "{}|{}",
        serde_json::to_string(lambda).expect("partition serializes"),
        serde_json::to_string(alpha).expect("partition serializes")
    )
}

/// Reads a cached table for degree `d`; `None` if it is missing or malformed.
fn read_cache(dir: &Path, d: u32) -> Option<Vec<(Partition, Partition, BigInt)>> {
    let text = fs::read_to_string(cache_file(dir, d)).ok()?;
    let map: BTreeMap<String, String> = serde_json::from_str(&text).ok()?;
    let expected = partitions_of(d).len().pow(2);
    if map.len() != expected {
        return None;
    }
    let mut values = Vec::with_capacity(expected);
    for (key, value) in map {
        let (l, a) = key.split_once('|')?;
        let l: Partition = serde_json::from_str(l).ok()?;
        let a: Partition = serde_json::from_str(a).ok()?;
        if l.size() != d || a.size() != d {
            return None;
        }
        values.push((l, a, value.parse().ok()?));
    }
    Some(values)
}

fn write_cache(dir: &Path, d: u32, table: &[(Partition, Partition, BigInt)]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let map: BTreeMap<String, String> =
        table.iter().map(|(l, a, v)| (cache_key(l, a), v.to_string())).collect();
    let path = cache_file(dir, d);
    let tmp = path.with_extension("json.tmp");
    let mut f = fs::File::create(&tmp)?;
    f.write_all(serde_json::to_string_pretty(&map)?.as_bytes())?;
    f.write_all(b"\n")?;
    drop(f);
    fs::rename(tmp, path)?;
    Ok(())
}

/// Loads character tables of degree `0..=max_degree` from the cache directory,
/// computing and storing any that are missing. Without a directory this does
/// nothing; characters are then computed on demand.
pub fn prepare_cache(dir: Option<&Path>, max_degree: u32) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    for d in 0..=max_degree {
        match read_cache(dir, d) {
            Some(values) => seed_character_values(values),
            None => write_cache(dir, d, &character_table(d))?,
        }
    }
    Ok(())
}
