//! Plain-text structure-constant files.
//!
//! ```text
//! # Lambda(F_3^1)
//! p 3
//! dim 2
//! unit 1 0
//! table
//! 1 0
//! 0 1
//! 0 1
//! 0 0
//! grading 0 1
//! name exterior(3,1)
//! ```
//!
//! `table` is followed by `dim * dim` rows, row `i * dim + j` holding the
//! coordinates of `e_i e_j`. `grading` and `name` are optional. Fields may
//! appear in any order; `#` starts a comment that runs to the end of the line.

use std::fmt::Write as _;
use std::path::Path;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graded::Grading;
use crate::linalg::PrimeField;

/// Serializes an algebra (and optional grading) in canonical field order.
pub fn write_ring(alg: &FiniteAlgebra, grading: Option<&Grading>) -> String {
    let join = |v: &[u32]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "p {}", alg.p());
    let _ = writeln!(out, "dim {}", alg.dim());
    let _ = writeln!(out, "unit {}", join(&alg.unit().into_coords()));
    out.push_str("table\n");
    for row in alg.table_rows() {
        let _ = writeln!(out, "{}", join(row));
    }
    if let Some(g) = grading {
        let _ = writeln!(out, "grading {}", join(g.degrees()));
    }
    if !alg.name().is_empty() {
        let _ = writeln!(out, "name {}", alg.name());
    }
    out
}

pub fn save_ring(path: &Path, alg: &FiniteAlgebra, grading: Option<&Grading>) -> Result<()> {
    std::fs::write(path, write_ring(alg, grading))?;
    Ok(())
}

pub fn load_ring(path: &Path, budget: &Budget) -> Result<(FiniteAlgebra, Option<Grading>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ring(&text, budget)
}

#[derive(Default)]
struct Fields {
    p: Option<(usize, u64)>,
    dim: Option<(usize, usize)>,
    unit: Option<(usize, Vec<u64>)>,
    table: Option<(usize, Vec<Vec<u64>>)>,
    grading: Option<(usize, Vec<u64>)>,
    name: Option<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn integers(line: usize, words: &[&str]) -> Result<Vec<u64>> {
    words
        .iter()
        .map(|w| w.parse::<u64>().map_err(|_| parse_err(line, format!("expected a nonnegative integer, found {w:?}"))))
        .collect()
}

fn single<T: std::str::FromStr>(line: usize, key: &str, words: &[&str]) -> Result<T> {
    match words {
        [w] => w.parse().map_err(|_| parse_err(line, format!("bad value {w:?} for {key}"))),
        _ => Err(parse_err(line, format!("{key} takes exactly one value"))),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<()> {
    if slot.is_some() {
        return Err(parse_err(line, format!("duplicate field {key}")));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses the text format. The dimension is checked against the budget
/// before the table is validated.
pub fn parse_ring(text: &str, budget: &Budget) -> Result<(FiniteAlgebra, Option<Grading>)> {
    let mut fields = Fields::default();
    let mut in_table = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let key = words[0];
        if in_table && key.parse::<u64>().is_ok() {
            let row = integers(line, &words)?;
            fields.table.as_mut().expect("table started").1.push(row);
            continue;
        }
        in_table = false;
        let rest = &words[1..];
        match key {
            "p" => set_once(&mut fields.p, (line, single(line, key, rest)?), line, key)?,
            "dim" => set_once(&mut fields.dim, (line, single(line, key, rest)?), line, key)?,
            "unit" => set_once(&mut fields.unit, (line, integers(line, rest)?), line, key)?,
            "grading" => set_once(&mut fields.grading, (line, integers(line, rest)?), line, key)?,
            "name" => {
                let name = content[key.len()..].trim().to_string();
                set_once(&mut fields.name, name, line, key)?
            }
            "table" => {
                if !rest.is_empty() {
                    return Err(parse_err(line, "table rows start on the next line"));
                }
                set_once(&mut fields.table, (line, Vec::new()), line, key)?;
                in_table = true;
            }
            other => return Err(parse_err(line, format!("unknown field {other:?}"))),
        }
    }
    build(fields, budget)
}

fn build(fields: Fields, budget: &Budget) -> Result<(FiniteAlgebra, Option<Grading>)> {
    let (_, p) = fields.p.ok_or_else(|| parse_err(0, "missing field p"))?;
    let (dim_line, dim) = fields.dim.ok_or_else(|| parse_err(0, "missing field dim"))?;
    let (unit_line, unit) = fields.unit.ok_or_else(|| parse_err(0, "missing field unit"))?;
    let (table_line, table) = fields.table.ok_or_else(|| parse_err(0, "missing field table"))?;
    let field = PrimeField::new(p)?;
    if dim == 0 {
        return Err(parse_err(dim_line, "dim must be positive"));
    }
    budget.check_dim("ring file", dim)?;
    if unit.len() != dim {
        return Err(parse_err(unit_line, format!("unit has {} entries, expected {dim}", unit.len())));
    }
    if table.len() != dim * dim {
        return Err(parse_err(table_line, format!("table has {} rows, expected {}", table.len(), dim * dim)));
    }
    let reduce = |v: Vec<u64>| -> Result<Vec<u32>> { v.into_iter().map(|c| field.check_reduced(c)).collect() };
    let unit = reduce(unit)?;
    let table = table.into_iter().map(reduce).collect::<Result<Vec<_>>>()?;
    let mut alg = FiniteAlgebra::new(field, dim, table, unit)?;
    if let Some(name) = fields.name {
        alg = alg.with_name(name);
    }
    let grading = match fields.grading {
        Some((line, degrees)) => {
            if degrees.len() != dim {
                return Err(parse_err(line, format!("grading has {} entries, expected {dim}", degrees.len())));
            }
            let degrees = degrees
                .into_iter()
                .map(|d| u32::try_from(d).map_err(|_| parse_err(line, format!("degree {d} is too large"))))
                .collect::<Result<Vec<_>>>()?;
            Some(Grading::new(degrees))
        }
        None => None,
    };
    Ok((alg, grading))
}
