//! Exact linear algebra over prime fields.

mod field;
mod subspace;

pub use field::{is_prime, PrimeField};
pub use subspace::{intersect, kernel, member, rref, Subspace};

pub(crate) use subspace::{kernel_unchecked, rank_of, row_reduce, unit_vector};
