//! Center, Jacobson radical, socles, idempotents and the decomposition into
//! local factors.

mod idempotent;
mod radical;
mod socle;

pub use idempotent::{
    idempotents, idempotents_central, idempotents_in, is_local, is_local_with_radical, local_decomposition,
    primitive_central_idempotents,
};
pub use radical::{
    jacobson_radical, jacobson_radical_graded, nilpotency_index, radical_by_trace, radical_by_units, radical_member,
};
pub(crate) use idempotent::decompose_along_center;
pub use socle::{annihilator_left, annihilator_right, socle_over_center, socle_over_center_bruteforce, socles, Socles};

use crate::algebra::FiniteAlgebra;
use crate::linalg::{kernel_unchecked, Subspace};

/// `{x : [e_i, x] = 0 for every basis vector e_i}`, one kernel computation
/// over the stacked matrices of `x -> e_i x - x e_i`.
pub fn center(alg: &FiniteAlgebra) -> Subspace {
    let d = alg.dim();
    let f = alg.field();
    let mut equations = Vec::new();
    for i in 0..d {
        for k in 0..d {
            let row: Vec<u32> = (0..d)
                .map(|j| f.sub(alg.basis_product(i, j)[k], alg.basis_product(j, i)[k]))
                .collect();
            if row.iter().any(|&c| c != 0) {
                equations.push(row);
            }
        }
    }
    let c = kernel_unchecked(equations, d, f);
    debug_assert!(c.contains_unchecked(alg.unit_coords()));
    debug_assert!(is_commutative_subalgebra(alg, &c));
    c
}

/// Products of basis vectors stay in `space` and commute.
pub fn is_commutative_subalgebra(alg: &FiniteAlgebra, space: &Subspace) -> bool {
    let b = space.basis();
    b.iter().all(|x| {
        b.iter().all(|y| {
            let xy = alg.mul_raw(x, y);
            space.contains_unchecked(&xy) && xy == alg.mul_raw(y, x)
        })
    })
}

/// Span of all products `a b` with `a` in `x`, `b` in `y`.
pub fn product_space(alg: &FiniteAlgebra, x: &Subspace, y: &Subspace) -> Subspace {
    let rows = x
        .basis()
        .iter()
        .flat_map(|a| y.basis().iter().map(move |b| alg.mul_raw(a, b)))
        .collect();
    Subspace::from_rows_unchecked(rows, alg.field(), alg.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructors::{exterior_algebra, matrix_algebra, truncated_polynomial};

    #[test]
    fn centers() {
        let b = Budget::default();
        let (t, _) = truncated_polynomial(5, 3, &b).unwrap();
        assert!(center(&t).is_full());

        let (lam, _) = exterior_algebra(3, 3, &b).unwrap();
        let c = center(&lam);
        assert_eq!(c.dim(), 5);
        assert_eq!(c, Subspace::coordinate(lam.field(), 8, [0, 4, 5, 6, 7]));
        assert!(is_commutative_subalgebra(&lam, &c));

        let m = matrix_algebra(3, 2, &b).unwrap();
        let c = center(&m);
        assert_eq!(c.basis(), &[vec![1, 0, 0, 1]]);
    }
}
