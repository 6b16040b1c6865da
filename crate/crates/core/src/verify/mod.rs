//! Full analysis of an algebra with every known implication between the
//! computed invariants checked at runtime, and the corpus runner built on it.
//!
//! A finite ring is artinian, so its prime radical equals `J` and
//! semiprimeness is decided as `J = 0`; it is also semiperfect with nilpotent
//! (hence T-nilpotent) radical, so the results stated for semiperfect or
//! perfect rings apply to every algebra handled here.

mod corpus;
mod explore;
mod report;

pub use corpus::{
    corpus_run, parse_corpus, product_pair, Construction, CorpusEntry, CorpusMember, CorpusOutcome, Tally,
    DEFAULT_CORPUS,
};
pub use explore::{exhaustive_search, random_search, SearchOutcome};
pub use report::{AnalysisReport, ProbeOutcome};

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::essentiality::{ce_decide, quasi_identity_probe};
use crate::graded::{check_graded_hypotheses, check_grading, graded_center_predicted, Grading};
use crate::ideal::{quotient_algebra, Ideal};
use crate::linalg::Subspace;
use crate::structure::{
    center, idempotents, is_local, is_local_with_radical, jacobson_radical, jacobson_radical_graded,
    nilpotency_index, socles,
};

/// Number of terms the quasi-identity probe tries.
pub const PROBE_TERMS: usize = 2;

/// Radical by the enumeration routes, or by the graded route when those are
/// out of budget. When both are available they must agree.
fn radical(alg: &FiniteAlgebra, g: Option<&Grading>, budget: &Budget) -> Result<Subspace> {
    let graded = g.map(|g| jacobson_radical_graded(alg, g, budget));
    match jacobson_radical(alg, budget) {
        Ok(j) => {
            if let Some(Ok(gj)) = &graded {
                if *gj != j {
                    return Err(Error::TheoremViolation(format!(
                        "graded radical (dim {}) differs from the ungraded one (dim {})",
                        gj.dim(),
                        j.dim()
                    )));
                }
            }
            Ok(j)
        }
        Err(e) if e.is_cap() => graded.unwrap_or(Err(e)),
        Err(e) => Err(e),
    }
}

fn violation(alg: &FiniteAlgebra, what: &str) -> Error {
    Error::TheoremViolation(format!("{}: {what}", display_name(alg)))
}

fn display_name(alg: &FiniteAlgebra) -> String {
    if alg.name().is_empty() {
        "unnamed".into()
    } else {
        alg.name().into()
    }
}

/// Computes every invariant in [`AnalysisReport`] and checks:
///
/// * essential implies all idempotents central;
/// * essential and `J = 0`, or essential and `J(C) = 0`, implies commutative;
/// * essential implies `A/J` commutative, `Soc(R_C) ⊆ C`, equal left and right
///   socles, and no quasi-identity counterexample;
/// * essential iff every local factor is essential (when the factors exist),
///   and every factor is local;
/// * essential iff `Soc(R_C) ⊆ C` and all idempotents are central;
/// * for a grading: the center is homogeneous, and under the graded
///   hypotheses it equals the predicted subspace and the graded criterion
///   agrees with the exhaustive decider.
///
/// Any failure is [`Error::TheoremViolation`].
pub fn analyze(alg: &FiniteAlgebra, g: Option<&Grading>, budget: &Budget) -> Result<AnalysisReport> {
    budget.check_dim("analysis", alg.dim())?;
    if let Some(g) = g {
        if !check_grading(alg, g)? {
            return Err(Error::InvalidGrading("degrees are not compatible with the table".into()));
        }
    }
    let c = center(alg);
    let j = radical(alg, g, budget)?;
    let nilpotency = nilpotency_index(alg, &j).ok_or_else(|| violation(alg, "radical is not nilpotent"))?;
    let soc = socles(alg, &c, &j)?;
    let local = is_local_with_radical(alg, &j, budget)?;
    let idempotents_central = local || idempotents(alg, budget)?.iter().all(|e| c.contains_unchecked(e.coords()));
    let ce = ce_decide(alg, g, budget)?;

    let (local_factor_dims, factors_local_ce) = if !idempotents_central {
        (None, None)
    } else if local {
        (Some(vec![alg.dim()]), Some(ce.value))
    } else {
        let factors = crate::structure::decompose_along_center(alg, &c, budget)?;
        let mut all_local = true;
        let mut all_ce = true;
        for f in &factors {
            all_local &= is_local(f, budget)?;
            all_ce &= ce_decide(f, None, budget)?.value;
        }
        if !all_local {
            return Err(violation(alg, "a primitive central idempotent gives a nonlocal factor"));
        }
        if all_ce != ce.value {
            return Err(violation(alg, "essentiality differs from that of the local factors"));
        }
        (Some(factors.iter().map(|f| f.dim()).collect()), Some(all_ce))
    };

    let quotient_commutative = if j.is_zero() {
        alg.is_commutative()
    } else {
        quotient_algebra(alg, &Ideal::new(alg, j.clone())?)?.algebra.is_commutative()
    };

    let (graded_hypotheses, center_homogeneous, center_matches_prediction) = match g {
        None => (None, None, None),
        Some(g) => {
            let homogeneous = g.homogeneous_decomposition(&c)? == c;
            match check_graded_hypotheses(alg, g) {
                Ok(()) => (Some(true), Some(homogeneous), Some(graded_center_predicted(alg, g)? == c)),
                Err(Error::Hypothesis(_)) => (Some(false), Some(homogeneous), None),
                Err(e) => return Err(e),
            }
        }
    };

    let quasi_identity = if budget.allows(alg.p(), (2 * PROBE_TERMS + 1) * alg.dim()) {
        quasi_identity_probe(alg, PROBE_TERMS, budget)?.into()
    } else {
        ProbeOutcome::Skipped
    };

    let socle_in_center = c.contains_subspace(&soc.over_center)?;
    let report = AnalysisReport {
        name: display_name(alg),
        p: alg.p(),
        dim: alg.dim(),
        cardinality: format!("{}^{}", alg.p(), alg.dim()),
        commutative: alg.is_commutative(),
        dim_center: c.dim(),
        dim_radical: j.dim(),
        nilpotency_index: nilpotency,
        semiprime: j.is_zero(),
        dim_center_radical: soc.center_radical.dim(),
        center_semiprime: soc.center_radical.is_zero(),
        local,
        idempotents_central,
        local_factor_dims,
        factors_local_ce,
        dim_socle_center: soc.over_center.dim(),
        socle_in_center,
        dim_socle_right: soc.right.dim(),
        dim_socle_left: soc.left.dim(),
        one_sided_socles_equal: soc.right == soc.left,
        quotient_commutative,
        centrally_essential: ce.value,
        ce_method: ce.method,
        witness: ce.witness,
        graded_hypotheses,
        center_homogeneous,
        center_matches_prediction,
        r_equals_c_plus_j: c.sum(&j)?.is_full(),
        socles_equal: soc.over_center == soc.right,
        quasi_identity,
        characterization_holds: ce.value == (socle_in_center && idempotents_central),
    };
    check_implications(alg, &report)?;
    Ok(report)
}

fn check_implications(alg: &FiniteAlgebra, r: &AnalysisReport) -> Result<()> {
    let ce = r.centrally_essential;
    let checks = [
        (r.commutative && !ce, "commutative but not centrally essential"),
        (ce && !r.idempotents_central, "centrally essential with a noncentral idempotent"),
        (ce && r.semiprime && !r.commutative, "centrally essential, semiprime and noncommutative"),
        (
            ce && r.center_semiprime && !r.commutative,
            "centrally essential with semiprime center and noncommutative",
        ),
        (ce && !r.quotient_commutative, "centrally essential with noncommutative A/J"),
        (ce && !r.socle_in_center, "centrally essential with Soc(R_C) outside the center"),
        (ce && !r.one_sided_socles_equal, "centrally essential with different left and right socles"),
        (ce && r.factors_local_ce != Some(true), "centrally essential but a local factor is not"),
        (
            ce && matches!(r.quasi_identity, ProbeOutcome::Counterexample { .. }),
            "centrally essential ring violates the quasi-identity",
        ),
        (!r.characterization_holds, "essentiality differs from socle-in-center and central idempotents"),
        (r.center_homogeneous == Some(false), "center of a graded algebra is not homogeneous"),
        (r.center_matches_prediction == Some(false), "center differs from the graded prediction"),
    ];
    match checks.iter().find(|(failed, _)| *failed) {
        Some((_, what)) => Err(violation(alg, what)),
        None => Ok(()),
    }
}

/// Compares essentiality with "`Soc(R_C) ⊆ C` and every idempotent central".
/// Returns `true` when they agree and a theorem violation otherwise.
pub fn theorem3_check(alg: &FiniteAlgebra, g: Option<&Grading>, budget: &Budget) -> Result<bool> {
    let c = center(alg);
    let j = radical(alg, g, budget)?;
    let soc = socles(alg, &c, &j)?;
    let socle_in_center = c.contains_subspace(&soc.over_center)?;
    let central = is_local_with_radical(alg, &j, budget)?
        || idempotents(alg, budget)?.iter().all(|e| c.contains_unchecked(e.coords()));
    let lhs = ce_decide(alg, g, budget)?.value;
    if lhs != (socle_in_center && central) {
        return Err(violation(
            alg,
            &format!(
                "essential = {lhs} but socle in center = {socle_in_center}, idempotents central = {central}"
            ),
        ));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn exterior_three_report() {
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        let r = analyze(&lam, Some(&g), &b()).unwrap();
        assert_eq!((r.dim, r.dim_center, r.dim_radical, r.dim_socle_center), (8, 5, 7, 4));
        assert_eq!(r.cardinality, "3^8");
        assert!(r.centrally_essential && r.local && !r.commutative);
        assert_eq!(r.ce_method, crate::CeMethod::Both);
        assert_eq!(r.center_matches_prediction, Some(true));
        // 3^(5 * 8) tuples
        assert_eq!(r.quasi_identity, ProbeOutcome::Skipped);
        // the socle over the center is degrees 2 and 3, the right socle only degree 3
        assert_eq!(r.dim_socle_right, 1);
        assert!(!r.socles_equal);
        assert!(r.r_equals_c_plus_j);
    }

    #[test]
    fn matrix_report() {
        let m = matrix_algebra(3, 2, &b()).unwrap();
        let r = analyze(&m, None, &b()).unwrap();
        assert!(!r.centrally_essential && r.semiprime && !r.commutative);
        assert!(r.witness.is_some());
        assert!(!r.idempotents_central);
        assert_eq!(r.local_factor_dims, None);
    }

    #[test]
    fn field_report() {
        let f5 = matrix_algebra(5, 1, &b()).unwrap();
        let r = analyze(&f5, None, &b()).unwrap();
        assert!(r.commutative && r.centrally_essential && r.local && r.semiprime);
        assert_eq!(r.local_factor_dims, Some(vec![1]));
        assert!(r.to_string().starts_with("name=field(5)\np=5\ndim=1\n"));
    }

    #[test]
    fn graded_only_analysis() {
        let (lam, g) = exterior_algebra(3, 5, &b()).unwrap();
        let r = analyze(&lam, Some(&g), &b()).unwrap();
        assert!(r.centrally_essential);
        assert_eq!(r.dim_center, 17);
        assert_eq!(r.quasi_identity, ProbeOutcome::Skipped);
        assert!(analyze(&lam, None, &b()).unwrap_err().is_cap());
    }

    #[test]
    fn characterization_examples() {
        let (lam, _) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(theorem3_check(&lam, None, &b()).unwrap());
        assert!(theorem3_check(&matrix_algebra(2, 2, &b()).unwrap(), None, &b()).unwrap());
        assert!(theorem3_check(&triangular_algebra(3, 2, &b()).unwrap(), None, &b()).unwrap());
    }

    #[test]
    fn bad_grading_is_rejected() {
        let f3 = matrix_algebra(3, 1, &b()).unwrap();
        let ff = direct_product(&f3, &f3, &b()).unwrap();
        let err = analyze(&ff, Some(&Grading::new(vec![0, 1])), &b()).unwrap_err();
        assert!(matches!(err, Error::InvalidGrading(_)));
    }
}
