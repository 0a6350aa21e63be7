use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qpair::durfee::{count_d, count_d_tilde, k_conjugate};
use qpair::frobenius::{
    count_c, count_c_tilde, enumerate_symbols, joichi_stanton, joichi_stanton_inverse, rank_window, tally_symbols,
    FrobeniusSymbol, JoichiStanton, DEFAULT_SYMBOL_BOUND,
};
use qpair::hypergeometric::{
    multisum_d, multisum_d_tilde, series_h_tilde, series_j_tilde, series_r, series_r_bilateral, series_r_tilde,
    series_r_tilde_bilateral, HyperError, SeriesParams,
};
use qpair::overpartition::{
    count_b, count_b_tilde, enumerate_pairs, CountTable, EnumError, Overpartition, DEFAULT_PAIR_BOUND,
};
use qpair::paths::{
    count_e, count_e_tilde, enumerate_paths, path_to_symbol, symbol_to_path, LatticePath, DEFAULT_PATH_BOUND,
};
use qpair::series::{GaussInt, SeriesError, Specialization, TruncatedSeries, Var};
use qpair::verify::{run_suite, Fault, Suite, VerificationReport, VerifyConfig, VerifyError};

#[derive(Parser)]
#[command(name = "qpair", version, about = "Overpartition-pair series, enumeration, bijections and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "QPAIR_FORMAT")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a truncated generating series.
    Series(SeriesArgs),
    /// Count or list objects of a family.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to a JSON object read from stdin.
    Biject(BijectArgs),
    /// Run an identity-checking suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Write series and count tables for a grid to a directory.
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesFamily {
    #[value(name = "R")]
    R,
    #[value(name = "Rtilde")]
    Rtilde,
    #[value(name = "Htilde")]
    Htilde,
    #[value(name = "Jtilde")]
    Jtilde,
    #[value(name = "bilateral-R")]
    BilateralR,
    #[value(name = "bilateral-Rtilde")]
    BilateralRtilde,
    #[value(name = "multisum-D")]
    MultisumD,
    #[value(name = "multisum-Dtilde")]
    MultisumDtilde,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    family: SeriesFamily,
    #[arg(long, env = "QPAIR_K")]
    k: u32,
    #[arg(long, env = "QPAIR_I", allow_hyphen_values = true)]
    i: i64,
    /// Exclusive bound on the power of q.
    #[arg(long, default_value_t = 12, env = "QPAIR_CUTOFF")]
    cutoff: i64,
    /// Degree cap for a, b and x (defaults to the cutoff).
    #[arg(long)]
    cap: Option<u32>,
    /// Substitute for a: `0`, or a unit (1, -1, i, -i) times an optional power of q, e.g. `-q^-1`.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Replace q by q^p after substituting.
    #[arg(long, default_value_t = 1)]
    q_power: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumFamily {
    #[value(name = "B")]
    B,
    #[value(name = "Btilde")]
    Btilde,
    #[value(name = "C")]
    C,
    #[value(name = "Ctilde")]
    Ctilde,
    #[value(name = "D")]
    D,
    #[value(name = "Dtilde")]
    Dtilde,
    #[value(name = "E")]
    E,
    #[value(name = "Etilde")]
    Etilde,
    Pairs,
    Symbols,
    Paths,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shape {
    CountTable,
    Objects,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    family: EnumFamily,
    #[arg(long, env = "QPAIR_K")]
    k: Option<u32>,
    #[arg(long, env = "QPAIR_I")]
    i: Option<u32>,
    /// Weight: the largest weight for a count table, the exact weight for a listing.
    #[arg(long)]
    n: u32,
    #[arg(long = "as", value_enum, default_value_t = Shape::CountTable)]
    shape: Shape,
    /// Paths under the even conditions, symbols with the narrower rank window.
    #[arg(long)]
    even: bool,
    /// Largest weight accepted (defaults per family).
    #[arg(long, env = "QPAIR_BOUND")]
    bound: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    PathToSymbol,
    SymbolToPath,
    KConjugate,
    JoichiStanton,
    JsInverse,
}

#[derive(Args)]
struct BijectArgs {
    #[arg(value_enum)]
    direction: Direction,
    #[arg(long, env = "QPAIR_K")]
    k: Option<u32>,
    #[arg(long, env = "QPAIR_I")]
    i: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    /// Comma-separated list of k values.
    #[arg(long, value_delimiter = ',', env = "QPAIR_K")]
    k: Option<Vec<u32>>,
    #[arg(long, env = "QPAIR_I")]
    i: Option<u32>,
    #[arg(long, env = "QPAIR_CUTOFF")]
    cutoff: Option<i64>,
    #[arg(long, env = "QPAIR_N_MAX")]
    n_max: Option<u32>,
    /// Double the cutoff and weight bounds.
    #[arg(long, env = "QPAIR_DEEP")]
    deep: bool,
    /// Corrupt a computation on purpose (`rank-window`) to confirm the suite can fail.
    #[arg(long)]
    fault: Option<String>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    dir: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "2,3", env = "QPAIR_K")]
    k: Vec<u32>,
    #[arg(long, default_value_t = 12, env = "QPAIR_CUTOFF")]
    cutoff: i64,
    #[arg(long, default_value_t = 8, env = "QPAIR_N_MAX")]
    n_max: u32,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            CliError::Enum(EnumError::BoundExceeded { .. })
            | CliError::Verify(VerifyError::Enum(EnumError::BoundExceeded { .. })) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Series(a) => cmd_series(&a, cli.format),
        Command::Enumerate(a) => cmd_enumerate(&a, cli.format),
        Command::Biject(a) => cmd_biject(&a),
        Command::Verify(a) => cmd_verify(&a, cli.format),
        Command::Export(a) => cmd_export(&a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// `0`, or `[±][i]` followed by an optional `q`, `q^e`.
fn parse_sub(text: &str) -> Result<Option<(GaussInt, i64)>> {
    let bad = || CliError::Usage(format!("cannot read substitution '{text}'"));
    let t = text.trim();
    if t == "0" {
        return Ok(None);
    }
    let (neg, rest) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (imag, rest) = match rest.strip_prefix('i') {
        Some(r) => (true, r),
        None => (false, rest.strip_prefix('1').unwrap_or(rest)),
    };
    let shift = match rest {
        "" => 0,
        "q" => 1,
        r => r.strip_prefix("q^").and_then(|e| e.parse().ok()).ok_or_else(bad)?,
    };
    let unit = match (neg, imag) {
        (false, false) => GaussInt::from(1),
        (true, false) => GaussInt::from(-1),
        (false, true) => GaussInt::i(),
        (true, true) => GaussInt::new(0, -1),
    };
    Ok(Some((unit, shift)))
}

fn specialization(a: &SeriesArgs) -> Result<Option<Specialization>> {
    let mut spec = Specialization::new();
    let mut any = a.q_power != 1;
    for (v, text) in [(Var::A, &a.a), (Var::B, &a.b), (Var::X, &a.x)] {
        if let Some(text) = text {
            any = true;
            spec = match parse_sub(text)? {
                None => spec.kill(v),
                Some((unit, shift)) => spec.set(v, unit, shift),
            };
        }
    }
    Ok(any.then(|| spec.q_power(a.q_power)))
}

fn series_csv(s: &TruncatedSeries) -> String {
    let mut out = String::from("a,b,x,q,re,im\n");
    for (e, c) in s.iter() {
        out.push_str(&format!("{},{},{},{},{},{}\n", e.a, e.b, e.x, e.q, c.re, c.im));
    }
    out
}

fn build_series(family: SeriesFamily, p: &SeriesParams) -> Result<TruncatedSeries> {
    Ok(match family {
        SeriesFamily::R => series_r(p)?,
        SeriesFamily::Rtilde => series_r_tilde(p)?,
        SeriesFamily::Htilde => series_h_tilde(p)?,
        SeriesFamily::Jtilde => series_j_tilde(p)?,
        SeriesFamily::BilateralR => series_r_bilateral(p)?,
        SeriesFamily::BilateralRtilde => series_r_tilde_bilateral(p)?,
        SeriesFamily::MultisumD => multisum_d(p)?,
        SeriesFamily::MultisumDtilde => multisum_d_tilde(p)?,
    })
}

fn cmd_series(a: &SeriesArgs, format: Format) -> Result<()> {
    let mut p = SeriesParams::new(a.k, a.i, a.cutoff);
    if let Some(cap) = a.cap {
        p = p.with_cap(cap);
    }
    let mut s = build_series(a.family, &p)?;
    if let Some(spec) = specialization(a)? {
        s = s.specialize(&spec)?;
    }
    match format {
        Format::Json => println!("{}", s.to_json()),
        Format::Csv => print!("{}", series_csv(&s)),
    }
    Ok(())
}

fn need(v: Option<u32>, name: &str) -> Result<u32> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
}

fn print_table(t: &CountTable, format: Format) {
    match format {
        Format::Json => println!("{}", t.to_json()),
        Format::Csv => print!("{}", t.to_csv()),
    }
}

fn print_objects<T: Serialize + ToString>(items: &[T], format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(items).expect("objects serialize")),
        Format::Csv => {
            println!("index,object");
            for (idx, item) in items.iter().enumerate() {
                println!("{idx},\"{}\"", item.to_string().replace('"', "\"\""));
            }
        }
    }
}

fn cmd_enumerate(a: &EnumerateArgs, format: Format) -> Result<()> {
    use EnumFamily::*;
    let n = a.n;
    let ki = || Ok::<_, CliError>((need(a.k, "k")?, need(a.i, "i")?));
    let bound = a.bound.unwrap_or(match a.family {
        B | Btilde | Pairs => DEFAULT_PAIR_BOUND,
        C | Ctilde | D | Dtilde | Symbols => DEFAULT_SYMBOL_BOUND,
        E | Etilde | Paths => DEFAULT_PATH_BOUND,
    });
    if a.shape == Shape::Objects {
        match a.family {
            Pairs => print_objects(&enumerate_pairs(n, bound)?, format),
            Symbols => {
                let mut all = enumerate_symbols(n, bound)?;
                if let (Some(k), Some(i)) = (a.k, a.i) {
                    let (lo, hi) = rank_window(k, i, a.even);
                    all.retain(|f| f.ranks_within(lo, hi));
                }
                print_objects(&all, format);
            }
            Paths => {
                let (k, i) = ki()?;
                print_objects(&enumerate_paths(k, i, n, a.even, bound)?, format);
            }
            _ => return Err(CliError::Usage("object listings exist for pairs, symbols and paths".into())),
        }
        return Ok(());
    }
    let table = match a.family {
        B => {
            let (k, i) = ki()?;
            count_b(k, i, n, bound)?
        }
        Btilde => {
            let (k, i) = ki()?;
            count_b_tilde(k, i, n, bound)?
        }
        C => {
            let (k, i) = ki()?;
            count_c(k, i, n, bound)?
        }
        Ctilde => {
            let (k, i) = ki()?;
            count_c_tilde(k, i, n, bound)?
        }
        D => {
            let (k, i) = ki()?;
            count_d(k, i, n, bound)?
        }
        Dtilde => {
            let (k, i) = ki()?;
            count_d_tilde(k, i, n, bound)?
        }
        E => {
            let (k, i) = ki()?;
            count_e(k, i, n, bound)?
        }
        Etilde => {
            let (k, i) = ki()?;
            count_e_tilde(k, i, n, bound)?
        }
        Paths => {
            let (k, i) = ki()?;
            if a.even {
                count_e_tilde(k, i, n, bound)?
            } else {
                count_e(k, i, n, bound)?
            }
        }
        Symbols => tally_symbols(n, bound, |_| true)?,
        Pairs => {
            let mut t = CountTable::new(n);
            let one = GaussInt::from(1);
            for w in 0..=n {
                for p in enumerate_pairs(w, bound)? {
                    let st = p.stats();
                    t.add(st.s, st.t, w, &one);
                }
            }
            t
        }
    };
    print_table(&table, format);
    Ok(())
}

fn read_stdin<T: serde::de::DeserializeOwned>() -> Result<T> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn emit<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("objects serialize"));
}

fn cmd_biject(a: &BijectArgs) -> Result<()> {
    let input = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());
    match a.direction {
        Direction::PathToSymbol => {
            let p: LatticePath = read_stdin()?;
            emit(&path_to_symbol(&p, need(a.k, "k")?, need(a.i, "i")?).map_err(|e| input(&e))?);
        }
        Direction::SymbolToPath => {
            let f: FrobeniusSymbol = read_stdin()?;
            emit(&symbol_to_path(&f, need(a.k, "k")?, need(a.i, "i")?).map_err(|e| input(&e))?);
        }
        Direction::KConjugate => {
            let f: FrobeniusSymbol = read_stdin()?;
            let k = need(a.k, "k")?;
            if k < 2 {
                return Err(CliError::Usage("k-conjugation needs k >= 2".into()));
            }
            emit(&k_conjugate(&f, k));
        }
        Direction::JoichiStanton => {
            let o: Overpartition = read_stdin()?;
            emit(&joichi_stanton(&o));
        }
        Direction::JsInverse => {
            let d: JoichiStanton = read_stdin()?;
            emit(&joichi_stanton_inverse(&d).map_err(|e| input(&e))?);
        }
    }
    Ok(())
}

fn verify_config(a: &VerifyArgs) -> Result<VerifyConfig> {
    let d = VerifyConfig::default();
    Ok(VerifyConfig {
        ks: a.k.clone().unwrap_or(d.ks),
        i: a.i,
        cutoff: a.cutoff.unwrap_or(d.cutoff),
        n_max: a.n_max.unwrap_or(d.n_max),
        deep: a.deep,
        fault: a.fault.as_deref().map(str::parse::<Fault>).transpose()?,
    })
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> Result<()> {
    let cfg = verify_config(a)?;
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let reports = suites.iter().map(|&s| run_suite(s, &cfg)).collect::<std::result::Result<Vec<_>, _>>()?;
    match format {
        Format::Json if reports.len() == 1 => println!("{}", reports[0].to_json()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
        Format::Csv => {
            for (idx, r) in reports.iter().enumerate() {
                let csv = r.to_csv();
                print!("{}", if idx == 0 { &csv[..] } else { csv.split_once('\n').map_or("", |(_, rest)| rest) });
            }
        }
    }
    for r in &reports {
        eprintln!("{}: {} checks, {} failures, {} ms", r.suite, r.checks_run, r.failures.len(), r.wall_time_ms);
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn write(dir: &Path, name: String, body: String, manifest: &mut Vec<String>) -> Result<()> {
    fs::write(dir.join(&name), body)?;
    manifest.push(name);
    Ok(())
}

fn cmd_export(a: &ExportArgs) -> Result<()> {
    fs::create_dir_all(&a.dir)?;
    let mut manifest = Vec::new();
    let n = a.n_max;
    for &k in &a.k {
        for i in 1..=k {
            let p = SeriesParams::new(k, i64::from(i), a.cutoff);
            write(&a.dir, format!("R_k{k}_i{i}.json"), series_r(&p)?.to_json(), &mut manifest)?;
            write(&a.dir, format!("Rtilde_k{k}_i{i}.json"), series_r_tilde(&p)?.to_json(), &mut manifest)?;
            let tables = [
                ("B", count_b(k, i, n, n)?),
                ("Btilde", count_b_tilde(k, i, n, n)?),
                ("C", count_c(k, i, n, n)?),
                ("Ctilde", count_c_tilde(k, i, n, n)?),
                ("D", count_d(k, i, n, n)?),
                ("Dtilde", count_d_tilde(k, i, n, n)?),
                ("E", count_e(k, i, n, n)?),
                ("Etilde", count_e_tilde(k, i, n, n)?),
            ];
            for (name, t) in tables {
                write(&a.dir, format!("{name}_k{k}_i{i}.csv"), t.to_csv(), &mut manifest)?;
            }
        }
    }
    let listing = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(a.dir.join("manifest.json"), listing)?;
    eprintln!("wrote {} files to {}", manifest.len() + 1, a.dir.display());
    Ok(())
}
