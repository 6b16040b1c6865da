//! Generators of small algebras: seeded random local algebras and an
//! exhaustive walk over all unital tables of a tiny dimension.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::constructors::direct_product;
use crate::enumerate::decode;
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Random algebra of dimension `d` over F_p, reproducible from `seed`.
///
/// Mostly local: `e_0` is the unit and `e_i e_j` for `i, j >= 1` is a random
/// sparse combination of `e_k` with `k > max(i, j)`, so the span of
/// `e_1..e_{d-1}` is a nilpotent ideal. Associativity failures are repaired
/// by zeroing one of the offending products until the table is associative.
/// With probability 1/4 (and `d >= 2`) the result is instead a product of
/// two smaller random local algebras.
pub fn random_algebra(p: u64, d: usize, seed: u64, budget: &Budget) -> Result<FiniteAlgebra> {
    let field = PrimeField::new(p)?;
    if d == 0 {
        return Err(Error::InvalidParameters("random algebra needs dimension >= 1".into()));
    }
    budget.check_dim("random algebra", d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = if d >= 2 && rng.gen_ratio(1, 4) {
        let d1 = rng.gen_range(1..d);
        let a = random_local(field, d1, &mut rng)?;
        let b = random_local(field, d - d1, &mut rng)?;
        direct_product(&a, &b, budget)?
    } else {
        random_local(field, d, &mut rng)?
    };
    Ok(alg.with_name(format!("random({p},{d},{seed})")))
}

fn random_local(field: PrimeField, d: usize, rng: &mut ChaCha8Rng) -> Result<FiniteAlgebra> {
    let p = field.modulus();
    let mut table = unit_first_table(d);
    for i in 1..d {
        for j in 1..d {
            let row = &mut table[i * d + j];
            for slot in row.iter_mut().skip(i.max(j) + 1) {
                if rng.gen_bool(0.5) {
                    *slot = rng.gen_range(1..p);
                }
            }
        }
    }
    while let Some((a, b, c)) = first_violation(field, d, &table) {
        let ab = a * d + b;
        let bc = b * d + c;
        let ab_nonzero = table[ab].iter().any(|&v| v != 0);
        let bc_nonzero = table[bc].iter().any(|&v| v != 0);
        let kill = match (ab_nonzero, bc_nonzero) {
            (true, true) => {
                if rng.gen_bool(0.5) {
                    ab
                } else {
                    bc
                }
            }
            (true, false) => ab,
            _ => bc,
        };
        table[kill].iter_mut().for_each(|v| *v = 0);
    }
    let mut unit = vec![0; d];
    unit[0] = 1;
    FiniteAlgebra::new(field, d, table, unit)
}

/// Table with `e_0` as unit and every other product zero.
fn unit_first_table(d: usize) -> Vec<Vec<u32>> {
    let mut table = vec![vec![0u32; d]; d * d];
    for i in 0..d {
        table[i][i] = 1;
        table[i * d][i] = 1;
    }
    table
}

/// First basis triple with `(e_a e_b) e_c != e_a (e_b e_c)`. If both products
/// `e_a e_b` and `e_b e_c` vanish the two sides are zero, so at least one of
/// them is nonzero.
fn first_violation(field: PrimeField, d: usize, table: &[Vec<u32>]) -> Option<(usize, usize, usize)> {
    let times_basis = |v: &[u32], c: usize| -> Vec<u32> {
        let mut out = vec![0; d];
        for (k, &x) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (o, &y) in out.iter_mut().zip(&table[k * d + c]) {
                *o = field.add(*o, field.mul(x, y));
            }
        }
        out
    };
    let basis_times = |a: usize, v: &[u32]| -> Vec<u32> {
        let mut out = vec![0; d];
        for (k, &x) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (o, &y) in out.iter_mut().zip(&table[a * d + k]) {
                *o = field.add(*o, field.mul(x, y));
            }
        }
        out
    };
    for a in 1..d {
        for b in 1..d {
            for c in 1..d {
                if times_basis(&table[a * d + b], c) != basis_times(a, &table[b * d + c]) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Number of candidate tables with `e_0` as unit: `p^(d (d-1)^2)`.
pub fn unital_table_count(p: u64, d: usize, budget: &Budget) -> Result<u64> {
    let field = PrimeField::new(p)?;
    if d == 0 {
        return Err(Error::InvalidParameters("dimension must be >= 1".into()));
    }
    budget.check_enumeration("exhaustive table search", field.modulus(), d * (d - 1) * (d - 1))
}

/// The candidate table with the given index, if it is associative.
///
/// Every unital algebra has a basis starting with its unit, so walking all
/// indices below [`unital_table_count`] visits every `d`-dimensional unital
/// algebra over F_p (many times, once per such basis).
pub fn unital_table(p: u64, d: usize, index: u64) -> Result<Option<FiniteAlgebra>> {
    let field = PrimeField::new(p)?;
    let m = d.saturating_sub(1);
    let mut free = vec![0u32; d * m * m];
    decode(index, field.modulus(), &mut free);
    let mut table = unit_first_table(d);
    for (n, chunk) in free.chunks(d).enumerate() {
        let (i, j) = (n / m + 1, n % m + 1);
        table[i * d + j].copy_from_slice(chunk);
    }
    let mut unit = vec![0; d];
    unit[0] = 1;
    match FiniteAlgebra::new(field, d, table, unit) {
        Ok(alg) => Ok(Some(alg.with_name(format!("table({p},{d},{index})")))),
        Err(Error::NotAssociative(..) | Error::UnitLaw(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
