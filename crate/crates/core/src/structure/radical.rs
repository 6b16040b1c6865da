use rayon::prelude::*;

use crate::algebra::{Element, FiniteAlgebra};
use crate::budget::Budget;
use crate::enumerate::{decode, is_projective_rep};
use crate::error::{Error, Result};
use crate::graded::{check_grading, Grading};
use crate::ideal::{is_two_sided_ideal, quotient_algebra, subalgebra, Ideal};
use crate::linalg::{kernel_unchecked, Subspace};

use super::product_space;

const PARALLEL_THRESHOLD: u64 = 4096;

/// Jacobson radical with all postconditions checked.
///
/// The unit criterion is the reference whenever `p^dim` fits the budget. The
/// trace form route runs whenever `p > dim`; when both run they must agree.
pub fn jacobson_radical(alg: &FiniteAlgebra, budget: &Budget) -> Result<Subspace> {
    let j = radical_unchecked(alg, budget)?;
    check_radical_postconditions(alg, &j, budget)?;
    Ok(j)
}

fn radical_unchecked(alg: &FiniteAlgebra, budget: &Budget) -> Result<Subspace> {
    let oracle = if budget.allows(alg.p(), alg.dim()) {
        Some(radical_by_units(alg, budget)?)
    } else {
        None
    };
    let trace = if (alg.p() as usize) > alg.dim() {
        Some(radical_by_trace(alg)?)
    } else {
        None
    };
    match (oracle, trace) {
        (Some(a), Some(b)) if a != b => Err(Error::TheoremViolation(format!(
            "unit-criterion radical (dim {}) differs from trace-form radical (dim {})",
            a.dim(),
            b.dim()
        ))),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(Error::cap(
            "Jacobson radical (no trace route since p <= dim)",
            format!("{}^{}", alg.p(), alg.dim()),
            budget.enumeration_cap,
        )),
    }
}

/// `J(A)` is a two-sided ideal, nilpotent, and `A/J` has zero radical.
fn check_radical_postconditions(alg: &FiniteAlgebra, j: &Subspace, budget: &Budget) -> Result<()> {
    if !is_two_sided_ideal(alg, j) {
        return Err(Error::TheoremViolation("radical is not a two-sided ideal".into()));
    }
    if nilpotency_index(alg, j).is_none() {
        return Err(Error::TheoremViolation("radical is not nilpotent".into()));
    }
    if !j.is_zero() {
        let q = quotient_algebra(alg, &Ideal::new(alg, j.clone())?)?;
        if !radical_unchecked(&q.algebra, budget)?.is_zero() {
            return Err(Error::TheoremViolation("A/J(A) has a nonzero radical".into()));
        }
    }
    Ok(())
}

/// Radical of a graded algebra: `J(R_0) + sum_{n>0} R_n`.
///
/// The positive part is a nilpotent ideal with quotient `R_0`, so only the
/// degree-zero subalgebra needs a radical computation. This reaches algebras
/// such as exterior algebras far beyond the enumeration cap.
pub fn jacobson_radical_graded(alg: &FiniteAlgebra, g: &Grading, budget: &Budget) -> Result<Subspace> {
    if !check_grading(alg, g)? {
        return Err(Error::InvalidGrading("radical needs a valid grading".into()));
    }
    let f = alg.field();
    let d = alg.dim();
    let zero_idx = g.indices_of_degree(0);
    let r0_space = Subspace::coordinate(f, d, zero_idx.iter().copied());
    let r0 = subalgebra(alg, &r0_space, &alg.unit())?;
    let j0 = radical_unchecked(&r0, budget)?;
    let mut rows: Vec<Vec<u32>> = j0
        .basis()
        .iter()
        .map(|coef| {
            let mut v = vec![0; d];
            for (&i, &c) in zero_idx.iter().zip(coef) {
                v[i] = c;
            }
            v
        })
        .collect();
    rows.extend((0..d).filter(|&i| g.degrees()[i] > 0).map(|i| alg.basis_element(i).into_coords()));
    let j = Subspace::from_rows_unchecked(rows, f, d);
    check_radical_postconditions(alg, &j, budget)?;
    Ok(j)
}

/// Reference radical: `x ∈ J` iff `1 - y` is a unit for every `y ∈ A x`.
///
/// The span is grown greedily in lexicographic order. Only vectors that are
/// zero on the pivot columns found so far and whose leading coordinate is 1
/// are tested; every other vector is a scalar multiple of one of those plus
/// an element already known to lie in the radical.
pub fn radical_by_units(alg: &FiniteAlgebra, budget: &Budget) -> Result<Subspace> {
    let d = alg.dim();
    let p = alg.p();
    let total = budget.check_enumeration("Jacobson radical scan", p, d)?;
    let mut j = Subspace::zero(alg.field(), d);
    let mut x = vec![0u32; d];
    for t in 1..total {
        decode(t, p, &mut x);
        if !is_projective_rep(&x) || j.pivots().iter().any(|&c| x[c] != 0) {
            continue;
        }
        if member_unchecked(alg, &x) {
            let mut rows = j.basis().to_vec();
            rows.push(x.clone());
            j = Subspace::from_rows_unchecked(rows, alg.field(), d);
        }
    }
    Ok(j)
}

/// Unit-criterion membership of a single element.
pub fn radical_member(alg: &FiniteAlgebra, x: &Element, budget: &Budget) -> Result<bool> {
    let x = alg.element(x.coords().to_vec())?;
    let left = alg.left_ideal_of(&x);
    budget.check_enumeration("radical membership", alg.p(), left.dim())?;
    Ok(member_unchecked(alg, x.coords()))
}

fn member_unchecked(alg: &FiniteAlgebra, x: &[u32]) -> bool {
    let left = alg.left_ideal_of(&Element::from_raw(x.to_vec()));
    let p = alg.p();
    let k = left.dim();
    let count = (p as u64).pow(k as u32);
    let one = alg.unit_coords();
    let test = |t: u64| {
        let mut coef = vec![0u32; k];
        decode(t, p, &mut coef);
        let y = left.combination(&coef);
        alg.is_unit_raw(&alg.sub_raw(one, &y))
    };
    if count >= PARALLEL_THRESHOLD {
        (0..count).into_par_iter().all(test)
    } else {
        (0..count).all(test)
    }
}

/// Radical of the trace form `(x, y) -> tr(L_{xy})`, which equals `J(A)`
/// when `p > dim`.
pub fn radical_by_trace(alg: &FiniteAlgebra) -> Result<Subspace> {
    let d = alg.dim();
    let f = alg.field();
    if (alg.p() as usize) <= d {
        return Err(Error::InvalidParameters(format!(
            "trace form radical needs p > dim (p = {}, dim = {d})",
            alg.p()
        )));
    }
    // tr(L_{e_k}) = sum_m c[k][m][m]
    let traces: Vec<u32> = (0..d)
        .map(|k| (0..d).fold(0, |acc, m| f.add(acc, alg.basis_product(k, m)[m])))
        .collect();
    let form: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    alg.basis_product(i, j)
                        .iter()
                        .zip(&traces)
                        .fold(0, |acc, (&c, &t)| f.add(acc, f.mul(c, t)))
                })
                .collect()
        })
        .collect();
    // x is in the radical iff sum_i x_i form[i][j] = 0 for every j
    let equations: Vec<Vec<u32>> = (0..d).map(|j| (0..d).map(|i| form[i][j]).collect()).collect();
    Ok(kernel_unchecked(equations, d, f))
}

/// Smallest `k` with `I^k = 0`, if it is at most `dim + 1`.
pub fn nilpotency_index(alg: &FiniteAlgebra, ideal: &Subspace) -> Option<usize> {
    let mut power = ideal.clone();
    for k in 1..=alg.dim() + 1 {
        if power.is_zero() {
            return Some(k);
        }
        power = product_space(alg, &power, ideal);
        if power.is_zero() {
            return Some(k + 1);
        }
    }
    None
}
