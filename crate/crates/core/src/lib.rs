//! Finite-dimensional unital associative algebras over prime fields, given by
//! structure constants, together with exact computations of the center, the
//! Jacobson radical, socles and idempotents, and two independent deciders for
//! central essentiality.
//!
//! Every exhaustive routine is gated by a [`Budget`]. Results that follow
//! from one another are cross-checked at runtime, and a mismatch surfaces as
//! [`Error::TheoremViolation`] rather than a wrong answer.

pub mod algebra;
pub mod budget;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod essentiality;
pub mod format;
pub mod graded;
pub mod group;
pub mod ideal;
pub mod linalg;
pub mod search;
pub mod structure;
pub mod verify;

pub use algebra::{Element, FiniteAlgebra};
pub use budget::Budget;
pub use error::{Error, Result};
pub use essentiality::{ce_decide, ce_exhaustive, quasi_identity_probe, CeMethod, CeVerdict};
pub use graded::Grading;
pub use group::GroupTable;
pub use ideal::{ideal_closure, quotient_algebra, Ideal, Quotient};
pub use linalg::{PrimeField, Subspace};
pub use verify::{analyze, corpus_run, theorem3_check, AnalysisReport};
