//! Central essentiality: `R_C` is an essential extension of `C_C`.
//!
//! Two independent deciders exist. The exhaustive one scans ring elements;
//! the graded one evaluates the degree criterion. [`ce_decide`] runs every
//! applicable decider and refuses to answer if they disagree.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Element, FiniteAlgebra};
use crate::budget::Budget;
use crate::enumerate::{decode, decode_vec, is_projective_rep};
use crate::error::{Error, Result};
use crate::graded::{graded_ce_criterion, Grading};
use crate::linalg::{kernel_unchecked, rank_of, row_reduce, Subspace};
use crate::structure::center;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CeMethod {
    Exhaustive,
    GradedCriterion,
    Both,
}

impl CeMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            CeMethod::Exhaustive => "exhaustive",
            CeMethod::GradedCriterion => "graded-criterion",
            CeMethod::Both => "both",
        }
    }
}

/// Outcome of an essentiality decision. A negative verdict carries a
/// nonzero `x` with `xC ∩ C = 0` whenever one was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CeVerdict {
    pub value: bool,
    pub method: CeMethod,
    pub witness: Option<Element>,
}

/// Rows of `x c` for the center basis.
fn x_times_center(alg: &FiniteAlgebra, x: &[u32], c: &Subspace) -> Vec<Vec<u32>> {
    alg.right_multiples(x, c.basis())
}

/// `xC ∩ C != 0`, via `dim(xC ∩ C) = rank(xC) - rank(xC mod C)`.
pub(crate) fn meets_center(alg: &FiniteAlgebra, x: &[u32], c: &Subspace) -> bool {
    let rows = x_times_center(alg, x, c);
    let reduced: Vec<Vec<u32>> = rows.iter().map(|r| c.reduce(r)).collect();
    let f = alg.field();
    let d = alg.dim();
    rank_of(rows, &f, d) > rank_of(reduced, &f, d)
}

/// Re-checks a negative witness with an explicit subspace intersection.
pub fn verify_witness(alg: &FiniteAlgebra, x: &Element, c: &Subspace) -> Result<bool> {
    let x = alg.element(x.coords().to_vec())?;
    if x.is_zero() {
        return Ok(false);
    }
    let xc = Subspace::from_rows_unchecked(x_times_center(alg, x.coords(), c), alg.field(), alg.dim());
    Ok(xc.intersect(c)?.is_zero())
}

/// Exhaustive decision over all nonzero elements.
///
/// The submodule of `R_C` generated by `x` is `xC` because `C` is unital and
/// commutative, and a module is essential over `C` once every nonzero cyclic
/// submodule meets `C`. Scalar multiples give the same `xC`, so only vectors
/// with leading coordinate 1 are scanned, and elements of `C` meet `C`
/// trivially and are skipped.
pub fn ce_exhaustive(alg: &FiniteAlgebra, budget: &Budget) -> Result<CeVerdict> {
    let c = center(alg);
    ce_exhaustive_with_center(alg, &c, budget)
}

pub(crate) fn ce_exhaustive_with_center(alg: &FiniteAlgebra, c: &Subspace, budget: &Budget) -> Result<CeVerdict> {
    let p = alg.p();
    let d = alg.dim();
    let total = budget
        .check_enumeration("exhaustive essentiality scan", p, d)
        .map_err(|e| Error::Undecidable(format!("{e}; supply a grading to use the graded criterion")))?;
    let witness_at = |t: u64| -> Option<Vec<u32>> {
        let x = decode_vec(t, p, d);
        if !is_projective_rep(&x) || c.contains_unchecked(&x) || meets_center(alg, &x, c) {
            None
        } else {
            Some(x)
        }
    };
    let witness = if budget.deterministic {
        (1..total).into_par_iter().find_map_first(witness_at)
    } else {
        (1..total).into_par_iter().find_map_any(witness_at)
    };
    let witness = witness.map(Element::from_raw);
    if let Some(w) = &witness {
        if !verify_witness(alg, w, c)? {
            return Err(Error::TheoremViolation(format!("essentiality witness {w} does not re-verify")));
        }
    }
    Ok(CeVerdict {
        value: witness.is_none(),
        method: CeMethod::Exhaustive,
        witness,
    })
}

/// Decides essentiality by every applicable route.
///
/// The graded criterion applies when `g` satisfies its hypotheses; the
/// exhaustive scan applies within the enumeration cap. When both apply they
/// must agree, otherwise a theorem violation is reported.
pub fn ce_decide(alg: &FiniteAlgebra, g: Option<&Grading>, budget: &Budget) -> Result<CeVerdict> {
    let c = center(alg);
    let graded = match g {
        Some(g) => match graded_ce_criterion(alg, g) {
            Ok(v) => Some(v),
            Err(Error::Hypothesis(_) | Error::InvalidGrading(_)) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };
    let exhaustive = if budget.allows(alg.p(), alg.dim()) {
        Some(ce_exhaustive_with_center(alg, &c, budget)?)
    } else {
        None
    };
    match (graded, exhaustive) {
        (Some(gv), Some(ev)) => {
            if gv != ev.value {
                return Err(Error::TheoremViolation(format!(
                    "graded criterion says {gv} but exhaustive scan says {} for {}",
                    ev.value,
                    alg.name()
                )));
            }
            Ok(CeVerdict {
                method: CeMethod::Both,
                ..ev
            })
        }
        (None, Some(ev)) => Ok(ev),
        (Some(gv), None) => {
            let witness = if gv {
                None
            } else {
                Some(graded_witness(alg, g.expect("graded verdict needs a grading"), &c)?)
            };
            Ok(CeVerdict {
                value: gv,
                method: CeMethod::GradedCriterion,
                witness,
            })
        }
        (None, None) => Err(Error::Undecidable(format!(
            "{}^{} exceeds the enumeration cap {} and no applicable grading was supplied",
            alg.p(),
            alg.dim(),
            budget.enumeration_cap
        ))),
    }
}

/// When the criterion fails, any nonzero degree-1 element has `xC` inside
/// the odd part while `C` is the even part, so the first degree-1 basis
/// vector is a witness.
fn graded_witness(alg: &FiniteAlgebra, g: &Grading, c: &Subspace) -> Result<Element> {
    let i = *g
        .indices_of_degree(1)
        .first()
        .ok_or_else(|| Error::TheoremViolation("noncentrally-essential graded algebra without degree 1".into()))?;
    let x = alg.basis_element(i);
    if !verify_witness(alg, &x, c)? {
        return Err(Error::TheoremViolation(format!("degree-1 witness {x} meets the center")));
    }
    Ok(x)
}

/// A tuple with `sum x_i y_i = 1`, `sum x_i r y_i = 0` and `r != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiIdentityCounterexample {
    pub xs: Vec<Element>,
    pub ys: Vec<Element>,
    pub r: Element,
}

/// Direct evaluation of the two relations for one tuple.
pub fn is_quasi_identity_counterexample(
    alg: &FiniteAlgebra,
    xs: &[Element],
    ys: &[Element],
    r: &Element,
) -> Result<bool> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameters("xs and ys must have equal length".into()));
    }
    let mut sum = alg.zero();
    let mut sandwich = alg.zero();
    for (x, y) in xs.iter().zip(ys) {
        sum = alg.add(&sum, &alg.mul(x, y)?)?;
        sandwich = alg.add(&sandwich, &alg.mul(&alg.mul(x, r)?, y)?)?;
    }
    Ok(sum == alg.unit() && sandwich.is_zero() && !r.is_zero())
}

/// Visits every `(x, y)` tuple of length `n` with `sum x_i y_i = 1` whose map
/// `r -> sum x_i r y_i` has a nonzero kernel, in lexicographic order of the
/// concatenated coordinates. The callback gets the kernel.
pub fn for_each_quasi_identity_violation(
    alg: &FiniteAlgebra,
    n: usize,
    budget: &Budget,
    mut visit: impl FnMut(&[Element], &[Element], &Subspace) -> ControlFlow<()>,
) -> Result<()> {
    let x_count = check_probe_budget(alg, n, budget)?;
    for tx in 0..x_count {
        for (xs, ys, k) in hits_for_xs(alg, n, tx) {
            if visit(&xs, &ys, &k).is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Checks the budget `p^((2n+1) dim)` and returns the number of `x` tuples.
fn check_probe_budget(alg: &FiniteAlgebra, n: usize, budget: &Budget) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameters("quasi-identity length must be at least 1".into()));
    }
    let d = alg.dim();
    budget.check_enumeration("quasi-identity probe", alg.p(), (2 * n + 1) * d)?;
    Ok((alg.p() as u64).pow((n * d) as u32))
}

type ProbeHit = (Vec<Element>, Vec<Element>, Subspace);

/// All concatenated `(y_1, ..., y_n)` with `sum x_i y_i = 1`, sorted.
///
/// For fixed `x` the condition is an affine system in the `y`, so only its
/// solutions are listed instead of scanning every `y`.
fn unit_solutions(alg: &FiniteAlgebra, xs: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let d = alg.dim();
    let f = alg.field();
    let p = alg.p();
    let cols = xs.len() * d;
    let lefts: Vec<Vec<Vec<u32>>> = xs.iter().map(|x| alg.left_matrix(x)).collect();
    let system: Vec<Vec<u32>> = (0..d)
        .map(|k| lefts.iter().flat_map(|l| l[k].iter().copied()).collect())
        .collect();
    let mut augmented: Vec<Vec<u32>> = system
        .iter()
        .zip(alg.unit_coords())
        .map(|(row, &u)| row.iter().copied().chain([u]).collect())
        .collect();
    let pivots = row_reduce(&mut augmented, &f, cols + 1);
    if pivots.last() == Some(&cols) {
        return Vec::new();
    }
    let mut particular = vec![0; cols];
    for (row, &pc) in augmented.iter().zip(&pivots) {
        particular[pc] = row[cols];
    }
    let homogeneous = kernel_unchecked(system, cols, f);
    let mut coef = vec![0; homogeneous.dim()];
    let count = (p as u64).pow(homogeneous.dim() as u32);
    let mut out: Vec<Vec<u32>> = (0..count)
        .map(|t| {
            decode(t, p, &mut coef);
            let k = homogeneous.combination(&coef);
            particular.iter().zip(&k).map(|(&a, &b)| f.add(a, b)).collect()
        })
        .collect();
    out.sort_unstable();
    out
}

/// Counterexample tuples whose `x` part has index `tx`, in order of `y`.
fn hits_for_xs(alg: &FiniteAlgebra, n: usize, tx: u64) -> impl Iterator<Item = ProbeHit> + '_ {
    let d = alg.dim();
    let xs: Vec<Vec<u32>> = decode_vec(tx, alg.p(), n * d).chunks(d).map(|c| c.to_vec()).collect();
    // x_i e_m for every i and m
    let x_basis: Vec<Vec<Vec<u32>>> = xs
        .iter()
        .map(|x| (0..d).map(|m| alg.mul_raw(x, alg.basis_element(m).coords())).collect())
        .collect();
    unit_solutions(alg, &xs).into_iter().filter_map(move |ypart| {
        let ys: Vec<&[u32]> = ypart.chunks(d).collect();
        // column m of the sandwich map is sum_i x_i e_m y_i
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|m| {
                x_basis.iter().zip(&ys).fold(vec![0; d], |acc, (xe, y)| alg.add_raw(&acc, &alg.mul_raw(&xe[m], y)))
            })
            .collect();
        let matrix: Vec<Vec<u32>> = (0..d).map(|k| cols.iter().map(|c| c[k]).collect()).collect();
        let kernel = kernel_unchecked(matrix, d, alg.field());
        if kernel.is_zero() {
            return None;
        }
        let wrap = |parts: Vec<&[u32]>| parts.into_iter().map(|s| Element::from_raw(s.to_vec())).collect();
        let xs = xs.iter().map(|x| Element::from_raw(x.clone())).collect();
        Some((xs, wrap(ys), kernel))
    })
}

/// Searches for a counterexample to the quasi-identity with `n = 1..=n_max`
/// terms. Returns the first one in scan order: by `n`, then by the
/// concatenated `(x, y)` coordinates, then the lexicographically least
/// nonzero `r` (the last row of the kernel's echelon basis).
///
/// `None` only means no counterexample exists up to `n_max`; it does not
/// prove the quasi-identity.
pub fn quasi_identity_probe(
    alg: &FiniteAlgebra,
    n_max: usize,
    budget: &Budget,
) -> Result<Option<QuasiIdentityCounterexample>> {
    for n in 1..=n_max {
        check_probe_budget(alg, n, budget)?;
    }
    for n in 1..=n_max {
        let x_count = check_probe_budget(alg, n, budget)?;
        let hit = (0..x_count)
            .into_par_iter()
            .find_map_first(|tx| hits_for_xs(alg, n, tx).next());
        if let Some((xs, ys, kernel)) = hit {
            let r = kernel.basis().last().expect("nonzero kernel").clone();
            return Ok(Some(QuasiIdentityCounterexample {
                xs,
                ys,
                r: Element::from_raw(r),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn commutative_algebras_are_ce() {
        let (t, _) = truncated_polynomial(3, 3, &b()).unwrap();
        let v = ce_exhaustive(&t, &b()).unwrap();
        assert!(v.value);
        assert_eq!(v.witness, None);
    }

    #[test]
    fn exterior_three_is_ce() {
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(ce_exhaustive(&lam, &b()).unwrap().value);
        let v = ce_decide(&lam, Some(&g), &b()).unwrap();
        assert!(v.value);
        assert_eq!(v.method, CeMethod::Both);
    }

    #[test]
    fn matrix_witness() {
        let m = matrix_algebra(2, 2, &b()).unwrap();
        let v = ce_exhaustive(&m, &b()).unwrap();
        assert!(!v.value);
        let w = v.witness.unwrap();
        // first projective representative outside the center in scan order
        // is e22 = (0,0,0,1); e12 is also a witness
        assert!(verify_witness(&m, &w, &center(&m)).unwrap());
        assert!(verify_witness(&m, &m.basis_element(1), &center(&m)).unwrap());
        assert_eq!(w.coords(), &[0, 0, 0, 1]);
    }

    #[test]
    fn graded_only_and_undecidable() {
        let (lam5, g5) = exterior_algebra(3, 5, &b()).unwrap();
        let v = ce_decide(&lam5, Some(&g5), &b()).unwrap();
        assert!(v.value);
        assert_eq!(v.method, CeMethod::GradedCriterion);

        let (lam4, g4) = exterior_algebra(3, 4, &b()).unwrap();
        let v = ce_decide(&lam4, Some(&g4), &b()).unwrap();
        assert!(!v.value);
        assert_eq!(v.method, CeMethod::GradedCriterion);
        assert_eq!(v.witness, Some(lam4.basis_element(1)));

        assert!(matches!(ce_decide(&lam4, None, &b()), Err(Error::Undecidable(_))));
        assert!(ce_exhaustive(&lam4, &b()).unwrap_err().is_cap());
    }

    #[test]
    fn probe_on_commutative_and_n1() {
        let (t, _) = truncated_polynomial(2, 2, &b()).unwrap();
        assert_eq!(quasi_identity_probe(&t, 2, &b()).unwrap(), None);
        let m = matrix_algebra(2, 2, &b()).unwrap();
        assert_eq!(quasi_identity_probe(&m, 1, &b()).unwrap(), None);
    }

    #[test]
    fn probe_finds_matrix_counterexample() {
        let m = matrix_algebra(2, 2, &b()).unwrap();
        let cx = quasi_identity_probe(&m, 2, &b()).unwrap().unwrap();
        assert!(is_quasi_identity_counterexample(&m, &cx.xs, &cx.ys, &cx.r).unwrap());
        let (e11, e12, e22) = (m.basis_element(0), m.basis_element(1), m.basis_element(3));
        let xs = [e11.clone(), e22.clone()];
        assert!(is_quasi_identity_counterexample(&m, &xs, &xs, &e12).unwrap());
    }

    #[test]
    fn probe_budget() {
        let m = matrix_algebra(3, 2, &b()).unwrap();
        // 3^(5*4) > 2^24
        assert!(quasi_identity_probe(&m, 2, &b()).unwrap_err().is_cap());
        assert!(quasi_identity_probe(&m, 0, &b()).is_ok());
    }
}
