use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cealg::format::{load_ring, save_ring, write_ring};
use cealg::verify::{
    corpus_run, exhaustive_search, parse_corpus, product_pair, random_search, Construction, CorpusMember, Tally,
    DEFAULT_CORPUS,
};
use cealg::{analyze, Budget, Error, Result};
use clap::{Args, Parser, Subcommand};

/// Construct finite algebras, analyze their centers, radicals and socles, and
/// check central essentiality.
#[derive(Parser, Debug)]
#[command(name = "cealg", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Output path: the ring file for `construct`, the report for `analyze`,
    /// and the directory for emitted or reproduction files otherwise.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Largest number of elements any single scan may visit.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    cap: u64,
    /// Report scan-order-minimal witnesses from parallel scans.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    det: bool,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a structure-constant file, e.g. `construct exterior 3 3`.
    /// `product` takes two or more ring files.
    Construct {
        kind: String,
        params: Vec<String>,
    },
    /// Print the analysis report of a ring file.
    Analyze {
        path: PathBuf,
        /// Print JSON instead of key=value lines.
        #[arg(long)]
        json: bool,
    },
    /// Analyze every member of a corpus description (the shipped corpus by default).
    Verify { corpus: Option<PathBuf> },
    /// Analyze random algebras, or every unital table with `-n all`.
    Search {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'd')]
        dim: usize,
        /// Number of random algebras, or `all`.
        #[arg(short = 'n', default_value = "100")]
        count: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    if e.is_theorem_violation() {
        4
    } else if e.is_cap() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget {
        enumeration_cap: cli.common.cap,
        deterministic: cli.common.det,
        ..Budget::default()
    };
    match run(&cli, &budget) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli, budget: &Budget) -> Result<()> {
    let out = cli.common.output.as_deref();
    match &cli.command {
        Command::Construct { kind, params } => construct(kind, params, out, budget),
        Command::Analyze { path, json } => analyze_file(path, *json, out, budget),
        Command::Verify { corpus } => verify(corpus.as_deref(), out, budget),
        Command::Search { p, dim, count } => search(*p, *dim, count, cli.common.seed, out, budget),
    }
}

fn construct(kind: &str, params: &[String], out: Option<&Path>, budget: &Budget) -> Result<()> {
    let (alg, grading) = if kind == "product" {
        if params.len() < 2 {
            return Err(Error::InvalidParameters("product needs at least two ring files".into()));
        }
        let mut parts = params.iter().map(|p| load_ring(Path::new(p), budget));
        let first = parts.next().expect("checked length")?;
        parts.try_fold(first, |acc, next| product_pair(acc, next?, budget))?
    } else {
        let mut words = vec![kind];
        words.extend(params.iter().map(String::as_str));
        Construction::parse(&words)?.build(budget)?
    };
    match out {
        Some(path) => save_ring(path, &alg, grading.as_ref()),
        None => {
            print!("{}", write_ring(&alg, grading.as_ref()));
            Ok(())
        }
    }
}

fn analyze_file(path: &Path, json: bool, out: Option<&Path>, budget: &Budget) -> Result<()> {
    let (alg, grading) = load_ring(path, budget)?;
    let report = match analyze(&alg, grading.as_ref(), budget) {
        Ok(r) => r,
        Err(e) if e.is_theorem_violation() => {
            let repro = path.with_extension("violation.ring");
            save_ring(&repro, &alg, grading.as_ref())?;
            return Err(Error::TheoremViolation(format!("{e} (reproduction written to {})", repro.display())));
        }
        Err(e) => return Err(e),
    };
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
        s.push('\n');
        s
    } else {
        report.to_string()
    };
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(corpus: Option<&Path>, out: Option<&Path>, budget: &Budget) -> Result<()> {
    let (text, base) = match corpus {
        Some(path) => (
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            path.parent().map(Path::to_path_buf).unwrap_or_default(),
        ),
        None => (DEFAULT_CORPUS.to_string(), PathBuf::from(".")),
    };
    let entries = parse_corpus(&text, &base)?;
    let repro_dir = out.unwrap_or(Path::new("."));
    std::fs::create_dir_all(repro_dir)?;
    let outcome = corpus_run(&entries, budget, Some(repro_dir))?;
    print!("{}", summary_table(&outcome.members));
    println!();
    print!("{}", outcome.tally);
    Ok(())
}

fn summary_table(members: &[CorpusMember]) -> String {
    let yn = |b: bool| if b { "y" } else { "n" };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<40} {:>3} {:>4} {:>6} {:>7} {:>6} {:>5} {:>5} {:>16} {:>5} {:>7} {:>7}",
        "ring", "p", "dim", "center", "radical", "socle", "comm", "ce", "method", "local", "soc=R_R", "R=C+J"
    );
    for m in members {
        match &m.outcome {
            Ok(r) => {
                let _ = writeln!(
                    s,
                    "{:<40} {:>3} {:>4} {:>6} {:>7} {:>6} {:>5} {:>5} {:>16} {:>5} {:>7} {:>7}",
                    m.label,
                    r.p,
                    r.dim,
                    r.dim_center,
                    r.dim_radical,
                    r.dim_socle_center,
                    yn(r.commutative),
                    yn(r.centrally_essential),
                    r.ce_method.as_str(),
                    yn(r.local),
                    yn(r.socles_equal),
                    yn(r.r_equals_c_plus_j)
                );
            }
            Err(e) => {
                let _ = writeln!(s, "{:<40} skipped: {e}", m.label);
            }
        }
    }
    s
}

fn search(p: u64, d: usize, count: &str, seed: u64, out: Option<&Path>, budget: &Budget) -> Result<()> {
    let repro_dir = out.unwrap_or(Path::new("."));
    std::fs::create_dir_all(repro_dir)?;
    let outcome = if count == "all" {
        exhaustive_search(p, d, budget, Some(repro_dir))?
    } else {
        let n: u64 = count
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("count must be a number or 'all', got {count:?}")))?;
        random_search(p, d, n, seed, budget, Some(repro_dir))?
    };
    if let Some(dir) = out {
        for alg in &outcome.hits {
            save_ring(&dir.join(format!("{}.ring", file_stem(alg.name()))), alg, None)?;
        }
    }
    println!("visited={}", outcome.visited);
    println!("algebras={}", outcome.members.len());
    println!("noncommutative_ce_written={}", if out.is_some() { outcome.hits.len() } else { 0 });
    print!("{}", tally_without_observations(&outcome.tally));
    Ok(())
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect::<String>()
        .trim_matches('_')
        .to_string()
}

/// Searches can visit thousands of algebras; per-ring observations are left
/// out of the tally block and counted instead.
fn tally_without_observations(t: &Tally) -> String {
    let mut t = t.clone();
    let count = t.open_question_observations.len();
    t.open_question_observations.clear();
    format!("{t}open_question_observations={count}\n")
}
