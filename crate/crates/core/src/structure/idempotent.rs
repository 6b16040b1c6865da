use rayon::prelude::*;

use crate::algebra::{Element, FiniteAlgebra};
use crate::budget::Budget;
use crate::enumerate::decode;
use crate::error::{Error, Result};
use crate::ideal::{quotient_algebra, subalgebra, Ideal};
use crate::linalg::Subspace;

use super::{center, jacobson_radical};

const CHUNK: u64 = 1 << 12;

/// All idempotents of `alg`, in lexicographic coordinate order.
pub fn idempotents(alg: &FiniteAlgebra, budget: &Budget) -> Result<Vec<Element>> {
    idempotents_in(alg, &alg.full_space(), budget)
}

/// Idempotents lying in a subspace, in lexicographic coordinate order.
///
/// The basis is in reduced echelon form, so coefficient order and
/// coordinate order agree; chunks are scanned in parallel and concatenated
/// in order.
pub fn idempotents_in(alg: &FiniteAlgebra, space: &Subspace, budget: &Budget) -> Result<Vec<Element>> {
    let p = alg.p();
    let k = space.dim();
    let total = budget.check_enumeration("idempotent scan", p, k)?;
    let chunks = total.div_ceil(CHUNK);
    let found: Vec<Vec<Element>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut coef = vec![0; k];
            let mut out = Vec::new();
            for t in c * CHUNK..((c + 1) * CHUNK).min(total) {
                decode(t, p, &mut coef);
                let x = space.combination(&coef);
                if alg.mul_raw(&x, &x) == x {
                    out.push(Element::from_raw(x));
                }
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// A finite ring is local iff every element outside `J` is a unit. Checked
/// on coset representatives of `A/J` inside `A`, and again as "no zero
/// divisors" on the quotient table; the two must agree.
pub fn is_local(alg: &FiniteAlgebra, budget: &Budget) -> Result<bool> {
    let j = jacobson_radical(alg, budget)?;
    is_local_with_radical(alg, &j, budget)
}

pub fn is_local_with_radical(alg: &FiniteAlgebra, j: &Subspace, budget: &Budget) -> Result<bool> {
    let p = alg.p();
    let free = j.free_columns();
    let q = free.len();
    let total = budget.check_enumeration("locality scan", p, q)?;

    let mut coef = vec![0; q];
    let mut x = vec![0; alg.dim()];
    let mut outside_are_units = true;
    for t in 1..total {
        decode(t, p, &mut coef);
        for (&c, &v) in free.iter().zip(&coef) {
            x[c] = v;
        }
        if !alg.is_unit_raw(&x) {
            outside_are_units = false;
            break;
        }
    }

    let quotient = quotient_algebra(alg, &Ideal::new(alg, j.clone())?)?.algebra;
    let no_zero_divisors = (1..total).all(|t| {
        decode(t, p, &mut coef);
        quotient.is_unit_raw(&coef)
    });

    if outside_are_units != no_zero_divisors {
        return Err(Error::TheoremViolation(
            "locality by units disagrees with the quotient zero-divisor test".into(),
        ));
    }
    Ok(outside_are_units)
}

/// Whether every idempotent is central. A local ring has no idempotents
/// besides 0 and 1, so the exhaustive scan is only needed otherwise.
pub fn idempotents_central(alg: &FiniteAlgebra, budget: &Budget) -> Result<bool> {
    if is_local(alg, budget)? {
        return Ok(true);
    }
    let c = center(alg);
    Ok(idempotents(alg, budget)?.iter().all(|e| c.contains_unchecked(e.coords())))
}

/// Central idempotents `e != 0` admitting no decomposition `e = f + (e - f)`
/// into orthogonal nonzero central idempotents.
pub fn primitive_central_idempotents(alg: &FiniteAlgebra, center: &Subspace, budget: &Budget) -> Result<Vec<Element>> {
    let all = idempotents_in(alg, center, budget)?;
    let primitive = all
        .iter()
        .filter(|e| !e.is_zero())
        .filter(|e| {
            !all.iter().any(|f| {
                !f.is_zero() && f != *e && alg.mul_raw(f.coords(), e.coords()) == f.coords()
            })
        })
        .cloned()
        .collect();
    Ok(primitive)
}

/// Splits `alg` along its primitive central idempotents into the corner
/// algebras `eA`, whose direct product is `alg`.
///
/// Requires every idempotent to be central; otherwise the factors would not
/// be local and the split is refused.
pub fn local_decomposition(alg: &FiniteAlgebra, budget: &Budget) -> Result<Vec<FiniteAlgebra>> {
    if !idempotents_central(alg, budget)? {
        return Err(Error::DecompositionUnavailable("the algebra has a noncentral idempotent".into()));
    }
    decompose_along_center(alg, &center(alg), budget)
}

pub(crate) fn decompose_along_center(alg: &FiniteAlgebra, c: &Subspace, budget: &Budget) -> Result<Vec<FiniteAlgebra>> {
    let primitive = primitive_central_idempotents(alg, c, budget)?;
    let d = alg.dim();
    let mut factors = Vec::with_capacity(primitive.len());
    let mut total_dim = 0;
    let mut sum = alg.zero().into_coords();
    for (n, e) in primitive.iter().enumerate() {
        let rows = (0..d).map(|i| alg.mul_raw(e.coords(), alg.basis_element(i).coords())).collect();
        let corner = Subspace::from_rows_unchecked(rows, alg.field(), d);
        total_dim += corner.dim();
        sum = alg.add_raw(&sum, e.coords());
        let name = if primitive.len() == 1 {
            alg.name().to_string()
        } else {
            format!("{}[{n}]", alg.name())
        };
        factors.push(subalgebra(alg, &corner, e)?.with_name(name));
    }
    if total_dim != d || sum != alg.unit_coords() {
        return Err(Error::TheoremViolation(format!(
            "central idempotent decomposition does not reconstruct the algebra (dims sum to {total_dim} of {d})"
        )));
    }
    Ok(factors)
}
