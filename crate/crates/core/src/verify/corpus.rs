use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::constructors::{
    direct_product, exterior_algebra, group_algebra, matrix_algebra, product_grading, triangular_algebra,
    triangular_grading, truncated_polynomial,
};
use crate::error::{Error, Result};
use crate::format::{load_ring, write_ring};
use crate::graded::Grading;
use crate::group::GroupTable;
use crate::search::random_algebra;

use super::{analyze, AnalysisReport};

/// The corpus shipped with the library.
pub const DEFAULT_CORPUS: &str = include_str!("../../data/default.corpus");

/// A constructor invocation, written `<kind> <params>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Exterior { p: u64, n: usize },
    Matrix { p: u64, n: usize },
    Triangular { p: u64, n: usize },
    Field { p: u64 },
    Truncated { p: u64, k: usize },
    Group { p: u64, group: String },
    /// Factors separated by `,`.
    Product(Vec<Construction>),
    Random { p: u64, d: usize, seed: u64 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn number<T: std::str::FromStr>(word: &str, what: &str) -> Result<T> {
    word.parse().map_err(|_| invalid(format!("bad {what} {word:?}")))
}

impl Construction {
    pub fn parse(words: &[&str]) -> Result<Self> {
        let (kind, args) = words.split_first().ok_or_else(|| invalid("missing constructor kind"))?;
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(invalid(format!("{kind} takes {n} parameters, got {}", args.len())))
            }
        };
        Ok(match *kind {
            "exterior" | "matrix" | "triangular" | "truncated" => {
                arity(2)?;
                let p = number(args[0], "prime")?;
                let n = number(args[1], "size")?;
                match *kind {
                    "exterior" => Construction::Exterior { p, n },
                    "matrix" => Construction::Matrix { p, n },
                    "triangular" => Construction::Triangular { p, n },
                    _ => Construction::Truncated { p, k: n },
                }
            }
            "field" => {
                arity(1)?;
                Construction::Field {
                    p: number(args[0], "prime")?,
                }
            }
            "group" => {
                arity(2)?;
                Construction::Group {
                    p: number(args[0], "prime")?,
                    group: args[1].to_string(),
                }
            }
            "random" => {
                arity(3)?;
                Construction::Random {
                    p: number(args[0], "prime")?,
                    d: number(args[1], "dimension")?,
                    seed: number(args[2], "seed")?,
                }
            }
            "product" => {
                let factors = args
                    .split(|w| *w == ",")
                    .map(Construction::parse)
                    .collect::<Result<Vec<_>>>()?;
                if factors.len() < 2 {
                    return Err(invalid("product needs at least two factors separated by ','"));
                }
                Construction::Product(factors)
            }
            other => return Err(invalid(format!("unknown constructor {other:?}"))),
        })
    }

    /// Builds the algebra, with a grading when the constructor has a natural one.
    pub fn build(&self, budget: &Budget) -> Result<(FiniteAlgebra, Option<Grading>)> {
        Ok(match self {
            Construction::Exterior { p, n } => {
                let (a, g) = exterior_algebra(*p, *n, budget)?;
                (a, Some(g))
            }
            Construction::Matrix { p, n } => (matrix_algebra(*p, *n, budget)?, None),
            Construction::Triangular { p, n } => (triangular_algebra(*p, *n, budget)?, Some(triangular_grading(*n))),
            Construction::Field { p } => (matrix_algebra(*p, 1, budget)?, None),
            Construction::Truncated { p, k } => {
                let (a, g) = truncated_polynomial(*p, *k, budget)?;
                (a, Some(g))
            }
            Construction::Group { p, group } => {
                let table = GroupTable::named(group)?;
                let a = group_algebra(*p, &table, budget)?.with_name(format!("F{p}[{group}]"));
                (a, None)
            }
            Construction::Random { p, d, seed } => (random_algebra(*p, *d, *seed, budget)?, None),
            Construction::Product(factors) => {
                let mut parts = factors.iter().map(|f| f.build(budget));
                let first = parts.next().expect("at least two factors")?;
                parts.try_fold(first, |acc, next| {
                    let (b, gb) = next?;
                    product_pair(acc, (b, gb), budget)
                })?
            }
        })
    }
}

/// Direct product keeping a grading only when both factors have one.
pub fn product_pair(
    a: (FiniteAlgebra, Option<Grading>),
    b: (FiniteAlgebra, Option<Grading>),
    budget: &Budget,
) -> Result<(FiniteAlgebra, Option<Grading>)> {
    let alg = direct_product(&a.0, &b.0, budget)?;
    let g = match (a.1, b.1) {
        (Some(ga), Some(gb)) => Some(product_grading(&ga, &gb)),
        _ => None,
    };
    Ok((alg, g))
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Exterior { p, n } => write!(f, "exterior {p} {n}"),
            Construction::Matrix { p, n } => write!(f, "matrix {p} {n}"),
            Construction::Triangular { p, n } => write!(f, "triangular {p} {n}"),
            Construction::Field { p } => write!(f, "field {p}"),
            Construction::Truncated { p, k } => write!(f, "truncated {p} {k}"),
            Construction::Group { p, group } => write!(f, "group {p} {group}"),
            Construction::Random { p, d, seed } => write!(f, "random {p} {d} {seed}"),
            Construction::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(|c| c.to_string()).collect();
                write!(f, "product {}", parts.join(" , "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusEntry {
    Construct(Construction),
    Load(PathBuf),
}

impl CorpusEntry {
    pub fn label(&self) -> String {
        match self {
            CorpusEntry::Construct(c) => c.to_string(),
            CorpusEntry::Load(p) => format!("load {}", p.display()),
        }
    }

    pub fn build(&self, budget: &Budget) -> Result<(FiniteAlgebra, Option<Grading>)> {
        match self {
            CorpusEntry::Construct(c) => c.build(budget),
            CorpusEntry::Load(path) => load_ring(path, budget),
        }
    }
}

/// Parses a corpus description. Relative `load` paths are resolved against
/// `base_dir`.
pub fn parse_corpus(text: &str, base_dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let at_line = |e: Error| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        };
        let words: Vec<&str> = content.split_whitespace().collect();
        let entry = match words[0] {
            "construct" => CorpusEntry::Construct(Construction::parse(&words[1..]).map_err(at_line)?),
            "load" if words.len() == 2 => CorpusEntry::Load(base_dir.join(words[1])),
            "load" => return Err(at_line(invalid("load takes exactly one path"))),
            other => return Err(at_line(invalid(format!("unknown directive {other:?}")))),
        };
        entries.push(entry);
    }
    Ok(entries)
}

/// One corpus line and what became of it. Only budget errors are kept here;
/// any other error aborts the run.
#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub label: String,
    pub outcome: std::result::Result<AnalysisReport, Error>,
}

/// Aggregate counts over a corpus run.
///
/// The two open-question probes are tallied over the centrally essential
/// members; `quotient_commutative` is tallied over every analyzed member.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub members: usize,
    pub analyzed: usize,
    pub capped: usize,
    pub centrally_essential: usize,
    pub noncommutative_ce: usize,
    pub r_equals_c_plus_j: (usize, usize),
    pub socles_equal: (usize, usize),
    pub quotient_commutative: (usize, usize),
    pub quasi_identity_counterexamples: usize,
    /// Centrally essential members where an open-question probe came out false.
    pub open_question_observations: Vec<String>,
}

impl Tally {
    pub fn from_members(members: &[CorpusMember]) -> Self {
        let mut t = Tally {
            members: members.len(),
            ..Tally::default()
        };
        let bump = |slot: &mut (usize, usize), v: bool| {
            if v {
                slot.0 += 1
            } else {
                slot.1 += 1
            }
        };
        for m in members {
            let Ok(r) = &m.outcome else {
                t.capped += 1;
                continue;
            };
            t.analyzed += 1;
            bump(&mut t.quotient_commutative, r.quotient_commutative);
            if matches!(r.quasi_identity, super::ProbeOutcome::Counterexample { .. }) {
                t.quasi_identity_counterexamples += 1;
            }
            if !r.centrally_essential {
                continue;
            }
            t.centrally_essential += 1;
            if !r.commutative {
                t.noncommutative_ce += 1;
            }
            bump(&mut t.r_equals_c_plus_j, r.r_equals_c_plus_j);
            bump(&mut t.socles_equal, r.socles_equal);
            let mut failed = Vec::new();
            if !r.r_equals_c_plus_j {
                failed.push("r_equals_c_plus_j");
            }
            if !r.socles_equal {
                failed.push("socles_equal");
            }
            if !failed.is_empty() {
                t.open_question_observations.push(format!("{} ({})", m.label, failed.join(", ")));
            }
        }
        t
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = |(a, b): (usize, usize)| format!("{a} true, {b} false");
        writeln!(f, "members={}", self.members)?;
        writeln!(f, "analyzed={}", self.analyzed)?;
        writeln!(f, "capped={}", self.capped)?;
        writeln!(f, "centrally_essential={}", self.centrally_essential)?;
        writeln!(f, "noncommutative_ce={}", self.noncommutative_ce)?;
        writeln!(f, "ce_r_equals_c_plus_j={}", pair(self.r_equals_c_plus_j))?;
        writeln!(f, "ce_socles_equal={}", pair(self.socles_equal))?;
        writeln!(f, "quotient_commutative={}", pair(self.quotient_commutative))?;
        writeln!(f, "quasi_identity_counterexamples={}", self.quasi_identity_counterexamples)?;
        for obs in &self.open_question_observations {
            writeln!(f, "open_question_observation={obs}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CorpusOutcome {
    pub members: Vec<CorpusMember>,
    pub tally: Tally,
}

/// Builds and analyzes every entry, in parallel, reporting in corpus order.
///
/// Budget errors are recorded per member. Any other build or analysis error
/// aborts the run; for a theorem violation the offending algebra is first
/// written to `repro_dir` (when given) so the failure can be replayed with
/// `analyze`.
pub fn corpus_run(entries: &[CorpusEntry], budget: &Budget, repro_dir: Option<&Path>) -> Result<CorpusOutcome> {
    let built: Vec<Result<(FiniteAlgebra, Option<Grading>)>> = entries.iter().map(|e| e.build(budget)).collect();
    let results: Vec<Result<AnalysisReport>> = built
        .par_iter()
        .map(|b| match b {
            Ok((alg, g)) => analyze(alg, g.as_ref(), budget),
            Err(e) => Err(e.clone()),
        })
        .collect();

    let mut members = Vec::with_capacity(entries.len());
    for (idx, ((entry, b), result)) in entries.iter().zip(&built).zip(results).enumerate() {
        let label = entry.label();
        match result {
            Ok(report) => members.push(CorpusMember {
                label,
                outcome: Ok(report),
            }),
            Err(e) if e.is_cap() => members.push(CorpusMember { label, outcome: Err(e) }),
            Err(e) if e.is_theorem_violation() => {
                let mut msg = format!("{label}: {e}");
                if let (Some(dir), Ok((alg, g))) = (repro_dir, b) {
                    let path = dir.join(format!("violation-{idx}.ring"));
                    std::fs::write(&path, write_ring(alg, g.as_ref()))?;
                    msg.push_str(&format!(" (reproduction written to {})", path.display()));
                }
                return Err(Error::TheoremViolation(msg));
            }
            Err(e) => return Err(e),
        }
    }
    let tally = Tally::from_members(&members);
    Ok(CorpusOutcome { members, tally })
}
