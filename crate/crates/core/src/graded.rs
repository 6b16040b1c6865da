//! N_0-gradings aligned with the basis, and the predicates and center/
//! essentiality formulas that hold for generalized anticommutative,
//! homogeneously faithful graded algebras without 2-torsion.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_unchecked, PrimeField, Subspace};
use crate::structure::center;

/// Degree of each basis vector. The homogeneous component `R_n` is the span
/// of the basis vectors of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Grading {
    degrees: Vec<u32>,
}

impl Grading {
    pub fn new(degrees: Vec<u32>) -> Self {
        Grading { degrees }
    }

    /// Everything in degree 0.
    pub fn trivial(dim: usize) -> Self {
        Grading { degrees: vec![0; dim] }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0)
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn indices_of_degree(&self, n: u32) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == n).collect()
    }

    /// Whether `R_n` is nonzero.
    pub fn has_degree(&self, n: u32) -> bool {
        self.degrees.contains(&n)
    }

    pub fn component(&self, field: PrimeField, n: u32) -> Subspace {
        Subspace::coordinate(field, self.degrees.len(), self.indices_of_degree(n))
    }

    /// `R_(0)`, the span of the even-degree basis vectors.
    pub fn even_part(&self, field: PrimeField) -> Subspace {
        self.parity_part(field, 0)
    }

    /// `R_(1)`, the span of the odd-degree basis vectors.
    pub fn odd_part(&self, field: PrimeField) -> Subspace {
        self.parity_part(field, 1)
    }

    fn parity_part(&self, field: PrimeField, parity: u32) -> Subspace {
        let idx = (0..self.degrees.len()).filter(|&i| self.degrees[i] % 2 == parity);
        Subspace::coordinate(field, self.degrees.len(), idx)
    }

    /// `sum_n (space ∩ R_n)`.
    pub fn homogeneous_decomposition(&self, space: &Subspace) -> Result<Subspace> {
        let field = space.field();
        let mut acc = Subspace::zero(field, space.ambient_dim());
        for n in 0..=self.max_degree() {
            if self.has_degree(n) {
                acc = acc.sum(&space.intersect(&self.component(field, n))?)?;
            }
        }
        Ok(acc)
    }
}

fn check_len(alg: &FiniteAlgebra, g: &Grading) -> Result<()> {
    if g.len() == alg.dim() {
        Ok(())
    } else {
        Err(Error::Dimension {
            expected: alg.dim(),
            found: g.len(),
        })
    }
}

/// `R_m R_n ⊆ R_{m+n}` on basis products, and the unit lies in `R_0`.
pub fn check_grading(alg: &FiniteAlgebra, g: &Grading) -> Result<bool> {
    check_len(alg, g)?;
    let d = alg.dim();
    let deg = g.degrees();
    if alg.unit_coords().iter().zip(deg).any(|(&u, &dg)| u != 0 && dg != 0) {
        return Ok(false);
    }
    for i in 0..d {
        for j in 0..d {
            let row = alg.basis_product(i, j);
            if row.iter().zip(deg).any(|(&c, &dk)| c != 0 && dk != deg[i] + deg[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require_grading(alg: &FiniteAlgebra, g: &Grading) -> Result<()> {
    if check_grading(alg, g)? {
        Ok(())
    } else {
        Err(Error::InvalidGrading("basis products or unit are not compatible with the degrees".into()))
    }
}

/// `e_j e_i = (-1)^(deg i * deg j) e_i e_j` for all basis pairs.
pub fn check_generalized_anticommutative(alg: &FiniteAlgebra, g: &Grading) -> Result<bool> {
    require_grading(alg, g)?;
    let f = alg.field();
    let deg = g.degrees();
    let d = alg.dim();
    for i in 0..d {
        for j in i..d {
            let ij = alg.basis_product(i, j);
            let ji = alg.basis_product(j, i);
            let odd = deg[i] % 2 == 1 && deg[j] % 2 == 1;
            let ok = if odd {
                ji.iter().zip(ij).all(|(&a, &b)| a == f.neg(b))
            } else {
                ji == ij
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Condition (*): whenever `R_{m+n} != 0`, `R_m != 0` and no nonzero
/// `x ∈ R_m` has `x R_n = 0`. The annihilator is the kernel of the linear
/// map `x -> (x e_j)_{e_j ∈ R_n}` on `R_m`, so no elements are enumerated.
pub fn check_homogeneously_faithful(alg: &FiniteAlgebra, g: &Grading) -> Result<bool> {
    require_grading(alg, g)?;
    let top = g.max_degree();
    for m in 0..=top {
        for n in 0..=(top - m) {
            if !g.has_degree(m + n) {
                continue;
            }
            let rm = g.indices_of_degree(m);
            if rm.is_empty() {
                return Ok(false);
            }
            if annihilator_dim(alg, &rm, &g.indices_of_degree(n)) > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of `{x ∈ span(rm) : x e_j = 0 for all j in rn}`.
fn annihilator_dim(alg: &FiniteAlgebra, rm: &[usize], rn: &[usize]) -> usize {
    let d = alg.dim();
    let mut equations = Vec::with_capacity(rn.len() * d);
    for &j in rn {
        for k in 0..d {
            let row: Vec<u32> = rm.iter().map(|&i| alg.basis_product(i, j)[k]).collect();
            if row.iter().any(|&c| c != 0) {
                equations.push(row);
            }
        }
    }
    kernel_unchecked(equations, rm.len(), alg.field()).dim()
}

/// Checks every hypothesis of the graded center and essentiality formulas.
pub fn check_graded_hypotheses(alg: &FiniteAlgebra, g: &Grading) -> Result<()> {
    if alg.p() == 2 {
        return Err(Error::Hypothesis("characteristic 2 algebras have additive 2-torsion".into()));
    }
    if !check_grading(alg, g)? {
        return Err(Error::Hypothesis("not a grading of this algebra".into()));
    }
    if !check_generalized_anticommutative(alg, g)? {
        return Err(Error::Hypothesis("not generalized anticommutative".into()));
    }
    if !check_homogeneously_faithful(alg, g)? {
        return Err(Error::Hypothesis("not homogeneously faithful".into()));
    }
    Ok(())
}

/// Odd `n` with `R_n != 0` and `R_{n+1} = 0`. Under (*) the nonzero
/// components are exactly `0..=top`, so only the top degree can qualify.
fn odd_top(g: &Grading) -> Result<Option<u32>> {
    let top = g.max_degree();
    if let Some(gap) = (0..=top).find(|&n| !g.has_degree(n)) {
        return Err(Error::TheoremViolation(format!(
            "homogeneously faithful grading has an empty component in degree {gap} below the top {top}"
        )));
    }
    let candidates: Vec<u32> = (1..=top)
        .filter(|&n| n % 2 == 1 && g.has_degree(n) && !g.has_degree(n + 1))
        .collect();
    Ok(candidates.first().copied())
}

/// `C(R) = R_(0) + R_n` when an odd `n` has `R_n != 0 = R_{n+1}`, else `R_(0)`.
pub fn graded_center_predicted(alg: &FiniteAlgebra, g: &Grading) -> Result<Subspace> {
    check_graded_hypotheses(alg, g)?;
    let f = alg.field();
    let even = g.even_part(f);
    match odd_top(g)? {
        Some(n) => even.sum(&g.component(f, n)),
        None => Ok(even),
    }
}

/// Central essentiality of a graded algebra satisfying the hypotheses:
/// `R = R_0`, or an odd `n` has `R_n != 0` and `R_{n+1} = 0`.
pub fn graded_ce_criterion(alg: &FiniteAlgebra, g: &Grading) -> Result<bool> {
    check_graded_hypotheses(alg, g)?;
    if g.is_trivial() {
        return Ok(true);
    }
    Ok(odd_top(g)?.is_some())
}

/// Whether the center splits into its homogeneous parts.
pub fn center_is_homogeneous(alg: &FiniteAlgebra, g: &Grading) -> Result<bool> {
    require_grading(alg, g)?;
    let c = center(alg);
    Ok(g.homogeneous_decomposition(&c)? == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructors::{direct_product, exterior_algebra, matrix_algebra, triangular_algebra};
    use crate::ideal::{ideal_closure, quotient_algebra};
    use crate::linalg::unit_vector;

    fn b() -> Budget {
        Budget::default()
    }

    /// Basis 1, x, y, z with deg 0, 1, 1, 2 and every product of x, y, z zero.
    fn faithless() -> (FiniteAlgebra, Grading) {
        let f = PrimeField::new(3).unwrap();
        let alg = FiniteAlgebra::from_products(f, 4, unit_vector(4, 0), |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, 1)],
            _ => vec![],
        })
        .unwrap();
        (alg, Grading::new(vec![0, 1, 1, 2]))
    }

    #[test]
    fn grading_checks() {
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(check_grading(&lam, &Grading::trivial(8)).unwrap());
        assert!(check_grading(&lam, &g).unwrap());
        let f3 = matrix_algebra(3, 1, &b()).unwrap();
        let ff = direct_product(&f3, &f3, &b()).unwrap();
        assert!(!check_grading(&ff, &Grading::new(vec![0, 1])).unwrap());
        assert!(check_grading(&ff, &Grading::new(vec![0])).is_err());
    }

    #[test]
    fn anticommutativity() {
        let f3 = matrix_algebra(3, 1, &b()).unwrap();
        let ff = direct_product(&f3, &f3, &b()).unwrap();
        assert!(check_generalized_anticommutative(&ff, &Grading::trivial(2)).unwrap());
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(check_generalized_anticommutative(&lam, &g).unwrap());
        let t = triangular_algebra(3, 2, &b()).unwrap();
        assert!(!check_generalized_anticommutative(&t, &Grading::new(vec![0, 0, 1])).unwrap());
        assert!(matches!(
            check_generalized_anticommutative(&ff, &Grading::new(vec![0, 1])),
            Err(Error::InvalidGrading(_))
        ));
    }

    #[test]
    fn faithfulness() {
        let f3 = matrix_algebra(3, 1, &b()).unwrap();
        assert!(check_homogeneously_faithful(&f3, &Grading::trivial(1)).unwrap());
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(check_homogeneously_faithful(&lam, &g).unwrap());

        let top = ideal_closure(&lam, &[lam.basis_element(7)]).unwrap();
        let q = quotient_algebra(&lam, &top).unwrap();
        assert!(check_homogeneously_faithful(&q.algebra, &q.induced_grading(&g)).unwrap());

        let deg2 = ideal_closure(&lam, &[lam.basis_element(4), lam.basis_element(5), lam.basis_element(6)]).unwrap();
        let q = quotient_algebra(&lam, &deg2).unwrap();
        assert_eq!(q.algebra.dim(), 4);
        assert!(check_homogeneously_faithful(&q.algebra, &q.induced_grading(&g)).unwrap());

        let (alg, g) = faithless();
        assert!(check_grading(&alg, &g).unwrap());
        assert!(!check_homogeneously_faithful(&alg, &g).unwrap());
    }

    #[test]
    fn predicted_centers() {
        let (lam3, g3) = exterior_algebra(3, 3, &b()).unwrap();
        let c = graded_center_predicted(&lam3, &g3).unwrap();
        assert_eq!(c, Subspace::coordinate(lam3.field(), 8, [0, 4, 5, 6, 7]));

        let (lam1, g1) = exterior_algebra(3, 1, &b()).unwrap();
        assert!(graded_center_predicted(&lam1, &g1).unwrap().is_full());

        let (lam2, g2) = exterior_algebra(3, 2, &b()).unwrap();
        let c = graded_center_predicted(&lam2, &g2).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c, center(&lam2));
    }

    #[test]
    fn criterion_examples() {
        let (lam3, g3) = exterior_algebra(3, 3, &b()).unwrap();
        assert!(graded_ce_criterion(&lam3, &g3).unwrap());
        let (lam2, g2) = exterior_algebra(3, 2, &b()).unwrap();
        assert!(!graded_ce_criterion(&lam2, &g2).unwrap());
        let f3 = matrix_algebra(3, 1, &b()).unwrap();
        assert!(graded_ce_criterion(&f3, &Grading::trivial(1)).unwrap());
    }

    #[test]
    fn hypotheses_are_enforced() {
        let (lam2, g) = exterior_algebra(2, 3, &b()).unwrap();
        assert!(matches!(graded_ce_criterion(&lam2, &g), Err(Error::Hypothesis(_))));
        let (alg, g) = faithless();
        assert!(matches!(graded_center_predicted(&alg, &g), Err(Error::Hypothesis(_))));
        let m = matrix_algebra(3, 2, &b()).unwrap();
        assert!(matches!(graded_ce_criterion(&m, &Grading::trivial(4)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn parts() {
        let (lam, g) = exterior_algebra(3, 3, &b()).unwrap();
        let f = lam.field();
        assert_eq!(g.even_part(f), Subspace::coordinate(f, 8, [0, 4, 5, 6]));
        assert_eq!(g.odd_part(f), Subspace::coordinate(f, 8, [1, 2, 3, 7]));
        assert!(center_is_homogeneous(&lam, &g).unwrap());
    }
}
