use std::path::Path;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::format::write_ring;
use crate::search::{random_algebra, unital_table, unital_table_count};

use super::corpus::{CorpusMember, Tally};
use super::analyze;

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Candidates generated (for the exhaustive walk, tables inspected).
    pub visited: u64,
    pub members: Vec<CorpusMember>,
    /// Noncommutative centrally essential algebras, in generation order.
    pub hits: Vec<FiniteAlgebra>,
    pub tally: Tally,
}

/// Analyzes `count` random algebras. Member `i` is generated from the `i`-th
/// output of a ChaCha8 stream seeded with `seed`, so runs are reproducible.
pub fn random_search(
    p: u64,
    d: usize,
    count: u64,
    seed: u64,
    budget: &Budget,
    repro_dir: Option<&Path>,
) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..count).map(|_| rng.gen()).collect();
    let algebras = seeds
        .iter()
        .map(|&s| random_algebra(p, d, s, budget))
        .collect::<Result<Vec<_>>>()?;
    finish(count, algebras, budget, repro_dir)
}

/// Analyzes every associative table with `e_0` as unit in dimension `d`.
pub fn exhaustive_search(p: u64, d: usize, budget: &Budget, repro_dir: Option<&Path>) -> Result<SearchOutcome> {
    let total = unital_table_count(p, d, budget)?;
    let found: Vec<Option<FiniteAlgebra>> = (0..total)
        .into_par_iter()
        .map(|i| unital_table(p, d, i))
        .collect::<Result<_>>()?;
    finish(total, found.into_iter().flatten().collect(), budget, repro_dir)
}

fn finish(visited: u64, algebras: Vec<FiniteAlgebra>, budget: &Budget, repro_dir: Option<&Path>) -> Result<SearchOutcome> {
    let results: Vec<Result<_>> = algebras.par_iter().map(|a| analyze(a, None, budget)).collect();
    let mut members = Vec::with_capacity(algebras.len());
    let mut hits = Vec::new();
    for (alg, result) in algebras.iter().zip(results) {
        let label = alg.name().to_string();
        match result {
            Ok(r) => {
                if r.centrally_essential && !r.commutative {
                    hits.push(alg.clone());
                }
                members.push(CorpusMember { label, outcome: Ok(r) });
            }
            Err(e) if e.is_cap() => members.push(CorpusMember { label, outcome: Err(e) }),
            Err(e) if e.is_theorem_violation() => {
                let mut msg = e.to_string();
                if let Some(dir) = repro_dir {
                    let path = dir.join(format!("violation-{label}.ring"));
                    std::fs::write(&path, write_ring(alg, None))?;
                    msg.push_str(&format!(" (reproduction written to {})", path.display()));
                }
                return Err(Error::TheoremViolation(msg));
            }
            Err(e) => return Err(e),
        }
    }
    let tally = Tally::from_members(&members);
    Ok(SearchOutcome {
        visited,
        members,
        hits,
        tally,
    })
}
