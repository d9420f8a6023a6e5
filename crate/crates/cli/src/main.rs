//! `qsig`: iterated-sums signatures of CSV time series plus a calculator
//! for the quasi-shuffle word algebra.

mod csvio;
mod sigjson;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qsig_core::*;

/// Relative tolerance for float-mode property checks; exact mode compares
/// exactly.
const FLOAT_REL_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "qsig",
    version,
    about = "Iterated-sums signatures and the quasi-shuffle word algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the iterated-sums signature of a CSV time series as JSON
    Sig(SigArgs),
    /// Word algebra calculator
    Qsh {
        #[command(subcommand)]
        op: QshOp,
    },
    /// Hoffman exponential and logarithm
    Hoffman {
        #[command(subcommand)]
        op: HoffmanOp,
    },
    /// Weight-graded dimension table with enumeration cross-check
    Dims {
        /// Alphabet size
        #[arg(long)]
        d: u32,
        /// Largest weight to tabulate
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Area of two words (shuffle side; --discrete for the quasi-shuffle side)
    Area {
        u: String,
        v: String,
        /// Use the discrete area built from the quasi-shuffle half-shuffle
        #[arg(long)]
        discrete: bool,
        /// Alphabet size; defaults to the largest letter mentioned
        #[arg(long)]
        d: Option<u32>,
    },
    /// Property checks on data; exit 0 on pass, 1 on violation
    Check(CheckArgs),
}

#[derive(Args)]
struct SigArgs {
    /// CSV input path
    input: PathBuf,
    /// Truncation weight
    #[arg(long = "max-weight", default_value_t = 3, env = "QSIG_MAX_WEIGHT")]
    max_weight: u32,
    /// Window start (default 0)
    #[arg(long)]
    from: Option<usize>,
    /// Window end (default: number of rows after the base point)
    #[arg(long)]
    to: Option<usize>,
    /// Exact rational arithmetic; cells may be integers or p/q
    #[arg(long)]
    exact: bool,
    /// Restrict output to this word (repeatable)
    #[arg(long = "words", value_name = "WORD")]
    words: Vec<String>,
    /// Number of chunks computed independently and Chen-merged
    #[arg(long, default_value_t = 1)]
    chunks: usize,
}

#[derive(Subcommand)]
enum QshOp {
    /// Quasi-shuffle product of two words
    Prod {
        u: String,
        v: String,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Shuffle product of two words
    Shuffle {
        u: String,
        v: String,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Antipode of a word
    Antipode {
        w: String,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Deconcatenation coproduct of a word
    Coproduct {
        w: String,
        #[arg(long)]
        d: Option<u32>,
    },
}

#[derive(Subcommand)]
enum HoffmanOp {
    /// Hoffman exponential of a word
    Exp {
        w: String,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Hoffman logarithm of a word
    Log {
        w: String,
        #[arg(long)]
        d: Option<u32>,
    },
}

#[derive(Args)]
struct CheckArgs {
    property: CheckKind,
    /// CSV time series; `character` also accepts an emitted signature JSON
    input: PathBuf,
    /// Truncation weight
    #[arg(long = "max-weight", default_value_t = 3, env = "QSIG_MAX_WEIGHT")]
    max_weight: u32,
    /// Exact rational arithmetic
    #[arg(long)]
    exact: bool,
}

#[derive(ValueEnum, Copy, Clone, Debug)]
enum CheckKind {
    Invariance,
    Character,
    Chen,
    HoffmanTransfer,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Sig(args) => cmd_sig(args),
        Command::Qsh { op } => cmd_qsh(op),
        Command::Hoffman { op } => cmd_hoffman(op),
        Command::Dims { d, max_n } => cmd_dims(d, max_n),
        Command::Area { u, v, discrete, d } => cmd_area(&u, &v, discrete, d),
        Command::Check(args) => cmd_check(args),
    }
}

fn parse_cli_word(text: &str, d: Option<u32>) -> Result<Word> {
    let word = match d {
        Some(d) => parse_word(text, d)?,
        None => parse_word_any(text)?,
    };
    Ok(word)
}

fn cmd_sig(args: SigArgs) -> Result<ExitCode> {
    let x = csvio::read_series(&args.input, args.exact)?;
    let from = args.from.unwrap_or(0);
    let to = args.to.unwrap_or(x.len());
    let sig = if args.chunks <= 1 {
        iterated_sums_signature(&x, from, to, args.max_weight)?
    } else {
        parallel_signature_window(&x, from, to, args.max_weight, args.chunks)?
    };
    let restrict = if args.words.is_empty() {
        None
    } else {
        let words = args
            .words
            .iter()
            .map(|text| {
                let w = parse_word(text, x.dim())?;
                if w.weight() > args.max_weight {
                    return Err(Error::BeyondTruncation {
                        word: w.to_string(),
                        weight: w.weight(),
                        max_weight: args.max_weight,
                    });
                }
                Ok(w)
            })
            .collect::<qsig_core::Result<Vec<Word>>>()?;
        Some(words)
    };
    println!("{}", sigjson::emit(&sig, restrict.as_deref()));
    Ok(ExitCode::SUCCESS)
}

fn cmd_qsh(op: QshOp) -> Result<ExitCode> {
    match op {
        QshOp::Prod { u, v, d } => {
            let u = parse_cli_word(&u, d)?;
            let v = parse_cli_word(&v, d)?;
            println!("{}", quasi_shuffle(&u, &v));
        }
        QshOp::Shuffle { u, v, d } => {
            let u = parse_cli_word(&u, d)?;
            let v = parse_cli_word(&v, d)?;
            println!("{}", shuffle(&u, &v));
        }
        QshOp::Antipode { w, d } => {
            let w = parse_cli_word(&w, d)?;
            println!("{}", antipode(&w));
        }
        QshOp::Coproduct { w, d } => {
            let w = parse_cli_word(&w, d)?;
            println!("{}", coproduct(&w));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hoffman(op: HoffmanOp) -> Result<ExitCode> {
    match op {
        HoffmanOp::Exp { w, d } => {
            let w = parse_cli_word(&w, d)?;
            println!("{}", hoffman_exp(&w));
        }
        HoffmanOp::Log { w, d } => {
            let w = parse_cli_word(&w, d)?;
            println!("{}", hoffman_log(&w));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dims(d: u32, max_n: usize) -> Result<ExitCode> {
    if d < 1 {
        bail!("the alphabet needs at least one letter");
    }
    let dims: Vec<String> = (0..=max_n).map(|n| hilbert_dim(d, n).to_string()).collect();
    let ns: Vec<String> = (0..=max_n).map(|n| n.to_string()).collect();
    let widths: Vec<usize> = ns
        .iter()
        .zip(&dims)
        .map(|(n, dim)| n.len().max(dim.len()))
        .collect();
    let row = |label: &str, cells: &[String]| {
        let mut line = format!("{label:<5}");
        for (cell, width) in cells.iter().zip(&widths) {
            line.push(' ');
            line.push_str(&format!("{cell:>width$}"));
        }
        line
    };
    println!("{}", row("n:", &ns));
    println!("{}", row("dim:", &dims));
    let consistent =
        (0..=max_n).all(|n| dims[n] == enumerate_words(d, n).len().to_string());
    println!(
        "enumeration cross-check: {}",
        if consistent { "ok" } else { "MISMATCH" }
    );
    Ok(if consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_area(u: &str, v: &str, discrete: bool, d: Option<u32>) -> Result<ExitCode> {
    let u = parse_cli_word(u, d)?;
    let v = parse_cli_word(v, d)?;
    let result = if discrete {
        darea(&u, &v)?
    } else {
        area(&u, &v)?
    };
    println!("{result}");
    Ok(ExitCode::SUCCESS)
}

fn scalars_close(a: &Scalar, b: &Scalar) -> bool {
    match (a, b) {
        (Scalar::Float(x), Scalar::Float(y)) => {
            let scale = x.abs().max(y.abs()).max(1.0);
            (x - y).abs() <= FLOAT_REL_TOL * scale
        }
        _ => a == b,
    }
}

fn violation(message: String) -> Result<ExitCode> {
    println!("violation: {message}");
    Ok(ExitCode::from(1))
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    match args.property {
        CheckKind::Invariance => check_invariance(&args),
        CheckKind::Character => check_character(&args),
        CheckKind::Chen => check_chen(&args),
        CheckKind::HoffmanTransfer => check_hoffman_transfer(&args),
    }
}

fn check_invariance(args: &CheckArgs) -> Result<ExitCode> {
    let x = csvio::read_series(&args.input, args.exact)?;
    let w = args.max_weight;
    let reference = iterated_sums_signature(&x, 0, x.len(), w)?;
    let words = words_up_to_weight(x.dim(), w);
    for n in 1..=x.len() {
        let warped = x.time_warp(n);
        let warped_sig = iterated_sums_signature(&warped, 0, warped.len(), w)?;
        for word in &words {
            let a = reference.coeff(word)?;
            let b = warped_sig.coeff(word)?;
            if !scalars_close(&a, &b) {
                return violation(format!(
                    "time warping at n={n} changes <{word}>: {a} vs {b}"
                ));
            }
        }
    }
    println!(
        "ok: signature invariant under time warping at every n in 1..={}, weight {w}",
        x.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn load_functional(args: &CheckArgs) -> Result<DualFunctional> {
    if args.input.extension().is_some_and(|ext| ext == "json") {
        let text = std::fs::read_to_string(&args.input)
            .with_context(|| format!("cannot read {}", args.input.display()))?;
        let (functional, _, _) = sigjson::load(&text)?;
        Ok(functional)
    } else {
        let x = csvio::read_series(&args.input, args.exact)?;
        Ok(iterated_sums_signature(&x, 0, x.len(), args.max_weight)?.into_functional())
    }
}

fn check_character(args: &CheckArgs) -> Result<ExitCode> {
    let functional = load_functional(args)?;
    match functional.character_violation(FLOAT_REL_TOL)? {
        None => {
            println!(
                "ok: character property holds for all pairs up to weight {}",
                functional.max_weight()
            );
            Ok(ExitCode::SUCCESS)
        }
        Some((u, v)) => {
            let lhs = functional.pair(&quasi_shuffle(&u, &v))?;
            let rhs = &functional.coeff(&u)? * &functional.coeff(&v)?;
            violation(format!(
                "character property fails at u={u}, v={v}: <u*v> = {lhs}, <u><v> = {rhs}"
            ))
        }
    }
}

fn check_chen(args: &CheckArgs) -> Result<ExitCode> {
    let x = csvio::read_series(&args.input, args.exact)?;
    let w = args.max_weight;
    let n = x.len();
    let full = iterated_sums_signature(&x, 0, n, w)?;
    let words = words_up_to_weight(x.dim(), w);
    for k in 0..=n {
        let left = iterated_sums_signature(&x, 0, k, w)?;
        let right = iterated_sums_signature(&x, k, n, w)?;
        let merged = chen_merge(&left, &right)?;
        for word in &words {
            let a = full.coeff(word)?;
            let b = merged.coeff(word)?;
            if !scalars_close(&a, &b) {
                return violation(format!(
                    "chen property fails at split {k} on <{word}>: {a} vs {b}"
                ));
            }
        }
    }
    println!("ok: chen property holds at every split point, weight {w}");
    Ok(ExitCode::SUCCESS)
}

fn check_hoffman_transfer(args: &CheckArgs) -> Result<ExitCode> {
    let x = csvio::read_series(&args.input, args.exact)?;
    let w = args.max_weight;
    let ds = iterated_sums_signature(&x, 0, x.len(), w)?;
    let lifted = iterated_integrals_signature_pl(&x, w)?;
    for word in words_up_to_weight(x.dim(), w) {
        let through_hoffman = ds.pair(&hoffman_exp(&word))?;
        let direct = lifted.coeff(&word)?;
        if !scalars_close(&through_hoffman, &direct) {
            return violation(format!(
                "hoffman transfer fails on <{word}>: {through_hoffman} vs {direct}"
            ));
        }
    }
    println!("ok: hoffman transfer holds for all words up to weight {w}");
    Ok(ExitCode::SUCCESS)
}
