use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::enumerate::decode;
use crate::error::Result;
use crate::linalg::{kernel_unchecked, Subspace};

use super::{center, jacobson_radical};

/// Socles computed from the center and the radical.
///
/// Over an artinian ring the socle of a module is the annihilator of the
/// radical, and a finite commutative ring is artinian. So `Soc(R_C)` is the
/// set of `x` with `x J(C) = 0`, where `J(C) = C ∩ J(R)`, and the right and
/// left socles of `R` annihilate `J(R)` from the corresponding side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Socles {
    pub center_radical: Subspace,
    pub over_center: Subspace,
    /// `Soc(R_R) = {x : x J = 0}`
    pub right: Subspace,
    /// `Soc(_R R) = {x : J x = 0}`
    pub left: Subspace,
}

pub fn socles(alg: &FiniteAlgebra, center: &Subspace, radical: &Subspace) -> Result<Socles> {
    let center_radical = center.intersect(radical)?;
    Ok(Socles {
        over_center: annihilator_right(alg, &center_radical),
        right: annihilator_right(alg, radical),
        left: annihilator_left(alg, radical),
        center_radical,
    })
}

/// `Soc(R_C)` for the center `C`.
pub fn socle_over_center(alg: &FiniteAlgebra, budget: &Budget) -> Result<Subspace> {
    let c = center(alg);
    let j = jacobson_radical(alg, budget)?;
    Ok(socles(alg, &c, &j)?.over_center)
}

/// `{x : x s = 0 for all s in space}`.
pub fn annihilator_right(alg: &FiniteAlgebra, space: &Subspace) -> Subspace {
    annihilator(alg, space, false)
}

/// `{x : s x = 0 for all s in space}`.
pub fn annihilator_left(alg: &FiniteAlgebra, space: &Subspace) -> Subspace {
    annihilator(alg, space, true)
}

fn annihilator(alg: &FiniteAlgebra, space: &Subspace, from_left: bool) -> Subspace {
    let d = alg.dim();
    let mut equations = Vec::new();
    for s in space.basis() {
        // column i holds e_i s (or s e_i)
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let e = alg.basis_element(i);
                if from_left {
                    alg.mul_raw(s, e.coords())
                } else {
                    alg.mul_raw(e.coords(), s)
                }
            })
            .collect();
        for k in 0..d {
            let row: Vec<u32> = cols.iter().map(|c| c[k]).collect();
            if row.iter().any(|&c| c != 0) {
                equations.push(row);
            }
        }
    }
    kernel_unchecked(equations, d, alg.field())
}

/// Sum of the simple submodules of `R_C`, found by brute force.
///
/// Every simple submodule is cyclic, and `xC` is simple exactly when every
/// nonzero `y ∈ xC` generates all of it. Used to guard the annihilator
/// shortcut on small rings.
pub fn socle_over_center_bruteforce(alg: &FiniteAlgebra, budget: &Budget) -> Result<Subspace> {
    let d = alg.dim();
    let p = alg.p();
    let total = budget.check_enumeration("brute-force socle", p, d)?;
    let c = center(alg);
    let cyclic = |x: &[u32]| Subspace::from_rows_unchecked(alg.right_multiples(x, c.basis()), alg.field(), d);
    let mut soc = Subspace::zero(alg.field(), d);
    let mut x = vec![0; d];
    for t in 1..total {
        decode(t, p, &mut x);
        if soc.contains_unchecked(&x) {
            continue;
        }
        let xc = cyclic(&x);
        let k = xc.dim();
        let mut coef = vec![0; k];
        let simple = (1..(p as u64).pow(k as u32)).all(|s| {
            decode(s, p, &mut coef);
            cyclic(&xc.combination(&coef)).dim() == k
        });
        if simple {
            soc = soc.sum(&xc)?;
        }
    }
    Ok(soc)
}
