use std::fmt;

use serde::Serialize;

use crate::algebra::Element;
use crate::essentiality::{CeMethod, QuasiIdentityCounterexample};

/// Outcome of the bounded quasi-identity search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeOutcome {
    /// No counterexample with at most this many terms.
    NoneUpTo(usize),
    Counterexample {
        xs: Vec<Element>,
        ys: Vec<Element>,
        r: Element,
    },
    /// The tuple enumeration does not fit the budget.
    Skipped,
}

impl From<Option<QuasiIdentityCounterexample>> for ProbeOutcome {
    fn from(found: Option<QuasiIdentityCounterexample>) -> Self {
        match found {
            None => ProbeOutcome::NoneUpTo(super::PROBE_TERMS),
            Some(c) => ProbeOutcome::Counterexample {
                xs: c.xs,
                ys: c.ys,
                r: c.r,
            },
        }
    }
}

/// Everything [`analyze`](super::analyze) learns about one algebra.
///
/// `Option` fields are `None` when the question does not apply, for example
/// the graded fields of an algebra analyzed without a grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    /// `p^dim`, kept symbolic.
    pub cardinality: String,
    pub commutative: bool,
    pub dim_center: usize,
    pub dim_radical: usize,
    pub nilpotency_index: usize,
    /// `J = 0`, which for a finite ring is semiprimeness.
    pub semiprime: bool,
    pub dim_center_radical: usize,
    /// `J(C) = 0`.
    pub center_semiprime: bool,
    pub local: bool,
    pub idempotents_central: bool,
    /// Dimensions of the factors `eA` for the primitive central idempotents
    /// `e`, when every idempotent is central.
    pub local_factor_dims: Option<Vec<usize>>,
    /// Every factor is local and centrally essential.
    pub factors_local_ce: Option<bool>,
    pub dim_socle_center: usize,
    pub socle_in_center: bool,
    pub dim_socle_right: usize,
    pub dim_socle_left: usize,
    pub one_sided_socles_equal: bool,
    /// `A / J` is commutative.
    pub quotient_commutative: bool,
    pub centrally_essential: bool,
    pub ce_method: CeMethod,
    pub witness: Option<Element>,
    /// The supplied grading satisfies the hypotheses of the graded formulas.
    pub graded_hypotheses: Option<bool>,
    pub center_homogeneous: Option<bool>,
    pub center_matches_prediction: Option<bool>,
    /// `dim(C + J) = dim A`.
    pub r_equals_c_plus_j: bool,
    /// `Soc(R_C) = Soc(R_R)`.
    pub socles_equal: bool,
    pub quasi_identity: ProbeOutcome,
    /// Essentiality agrees with "socle over the center inside the center and
    /// all idempotents central".
    pub characterization_holds: bool,
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> String) -> String {
    v.as_ref().map(f).unwrap_or_else(|| "n/a".into())
}

fn coords(e: &Element) -> String {
    e.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn list(v: &[usize]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl AnalysisReport {
    /// Flat `key=value` lines in a fixed order.
    pub fn pairs(&self) -> Vec<(&'static str, String)> {
        let probe = match &self.quasi_identity {
            ProbeOutcome::NoneUpTo(n) => format!("none-up-to-{n}"),
            ProbeOutcome::Counterexample { xs, ys, r } => {
                let side = |v: &[Element]| v.iter().map(coords).collect::<Vec<_>>().join(";");
                format!("x={} y={} r={}", side(xs), side(ys), coords(r))
            }
            ProbeOutcome::Skipped => "skipped".into(),
        };
        vec![
            ("name", self.name.clone()),
            ("p", self.p.to_string()),
            ("dim", self.dim.to_string()),
            ("cardinality", self.cardinality.clone()),
            ("commutative", flag(self.commutative).into()),
            ("dim_center", self.dim_center.to_string()),
            ("dim_radical", self.dim_radical.to_string()),
            ("nilpotency_index", self.nilpotency_index.to_string()),
            ("semiprime", flag(self.semiprime).into()),
            ("dim_center_radical", self.dim_center_radical.to_string()),
            ("center_semiprime", flag(self.center_semiprime).into()),
            ("local", flag(self.local).into()),
            ("idempotents_central", flag(self.idempotents_central).into()),
            ("local_factor_dims", opt(&self.local_factor_dims, |v| list(v))),
            ("factors_local_ce", opt(&self.factors_local_ce, |b| flag(*b).into())),
            ("dim_socle_center", self.dim_socle_center.to_string()),
            ("socle_in_center", flag(self.socle_in_center).into()),
            ("dim_socle_right", self.dim_socle_right.to_string()),
            ("dim_socle_left", self.dim_socle_left.to_string()),
            ("one_sided_socles_equal", flag(self.one_sided_socles_equal).into()),
            ("quotient_commutative", flag(self.quotient_commutative).into()),
            ("centrally_essential", flag(self.centrally_essential).into()),
            ("ce_method", self.ce_method.as_str().into()),
            ("witness", opt(&self.witness, coords)),
            ("graded_hypotheses", opt(&self.graded_hypotheses, |b| flag(*b).into())),
            ("center_homogeneous", opt(&self.center_homogeneous, |b| flag(*b).into())),
            ("center_matches_prediction", opt(&self.center_matches_prediction, |b| flag(*b).into())),
            ("r_equals_c_plus_j", flag(self.r_equals_c_plus_j).into()),
            ("socles_equal", flag(self.socles_equal).into()),
            ("quasi_identity", probe),
            ("characterization_holds", flag(self.characterization_holds).into()),
        ]
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.pairs() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
