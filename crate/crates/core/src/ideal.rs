//! Two-sided ideals, quotients and subalgebras.

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::graded::Grading;
use crate::linalg::Subspace;

/// A subspace verified to be closed under multiplication by the algebra on
/// both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn new(alg: &FiniteAlgebra, space: Subspace) -> Result<Self> {
        check_ambient(alg, &space)?;
        if !is_two_sided_ideal(alg, &space) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal { space })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn check_ambient(alg: &FiniteAlgebra, space: &Subspace) -> Result<()> {
    alg.field().same(&space.field())?;
    if space.ambient_dim() != alg.dim() {
        return Err(Error::Dimension {
            expected: alg.dim(),
            found: space.ambient_dim(),
        });
    }
    Ok(())
}

pub(crate) fn is_two_sided_ideal(alg: &FiniteAlgebra, space: &Subspace) -> bool {
    let d = alg.dim();
    space.basis().iter().all(|v| {
        (0..d).all(|i| {
            let e = alg.basis_element(i);
            space.contains_unchecked(&alg.mul_raw(e.coords(), v)) && space.contains_unchecked(&alg.mul_raw(v, e.coords()))
        })
    })
}

/// Smallest two-sided ideal containing `gens`.
///
/// Each round multiplies the current basis by every `e_i` on the left, then
/// on the right, and stops once the dimension is stable.
pub fn ideal_closure(alg: &FiniteAlgebra, gens: &[Element]) -> Result<Ideal> {
    for g in gens {
        if g.len() != alg.dim() {
            return Err(Error::Dimension {
                expected: alg.dim(),
                found: g.len(),
            });
        }
    }
    let field = alg.field();
    let d = alg.dim();
    let mut space = Subspace::from_rows_unchecked(gens.iter().map(|g| g.coords().to_vec()).collect(), field, d);
    loop {
        let before = space.dim();
        let mut rows = space.basis().to_vec();
        for v in space.basis() {
            for i in 0..d {
                rows.push(alg.mul_raw(alg.basis_element(i).coords(), v));
            }
        }
        space = Subspace::from_rows_unchecked(rows, field, d);
        let mut rows = space.basis().to_vec();
        for v in space.basis() {
            for i in 0..d {
                rows.push(alg.mul_raw(v, alg.basis_element(i).coords()));
            }
        }
        space = Subspace::from_rows_unchecked(rows, field, d);
        if space.dim() == before {
            break;
        }
    }
    Ideal::new(alg, space)
}

/// `A / I` together with the projection data.
///
/// The quotient basis is the image of `e_c` for the non-pivot columns `c` of
/// the ideal; reducing a vector to its normal form modulo `I` and reading off
/// those columns gives quotient coordinates.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    pub complement: Vec<usize>,
    pub ideal: Subspace,
}

impl Quotient {
    pub fn project(&self, x: &Element) -> Element {
        Element::from_raw(self.project_raw(x.coords()))
    }

    pub(crate) fn project_raw(&self, x: &[u32]) -> Vec<u32> {
        let r = self.ideal.reduce(x);
        self.complement.iter().map(|&c| r[c]).collect()
    }

    /// Lifts a quotient element back to a representative in the parent.
    pub fn lift(&self, x: &Element, parent_dim: usize) -> Element {
        let mut v = vec![0; parent_dim];
        for (&c, &val) in self.complement.iter().zip(x.coords()) {
            v[c] = val;
        }
        Element::from_raw(v)
    }

    /// Grading inherited by the complement basis. Meaningful when the ideal
    /// is spanned by homogeneous basis vectors.
    pub fn induced_grading(&self, g: &Grading) -> Grading {
        Grading::new(self.complement.iter().map(|&c| g.degrees()[c]).collect())
    }
}

pub fn quotient_algebra(alg: &FiniteAlgebra, ideal: &Ideal) -> Result<Quotient> {
    let space = ideal.space();
    check_ambient(alg, space)?;
    if space.is_full() {
        return Err(Error::DegenerateQuotient);
    }
    let complement = space.free_columns();
    let project = |v: &[u32]| -> Vec<u32> {
        let r = space.reduce(v);
        complement.iter().map(|&c| r[c]).collect()
    };
    let q = complement.len();
    let table: Vec<Vec<u32>> = complement
        .iter()
        .flat_map(|&a| complement.iter().map(move |&b| (a, b)))
        .map(|(a, b)| project(alg.basis_product(a, b)))
        .collect();
    let unit = project(alg.unit_coords());
    let algebra = FiniteAlgebra::new(alg.field(), q, table, unit)?.with_name(format!("{}/I", alg.name()));
    let quotient = Quotient {
        algebra,
        complement,
        ideal: space.clone(),
    };
    // projection is multiplicative on all basis pairs
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = quotient.project_raw(alg.basis_product(i, j));
            let pi = quotient.project_raw(alg.basis_element(i).coords());
            let pj = quotient.project_raw(alg.basis_element(j).coords());
            if lhs != quotient.algebra.mul_raw(&pi, &pj) {
                return Err(Error::NotAnIdeal);
            }
        }
    }
    Ok(quotient)
}

/// The algebra structure on a subspace that is closed under multiplication
/// and contains `unit` (which acts as identity on it, e.g. a corner `eAe`).
/// Coordinates are taken in the canonical basis of `space`.
pub fn subalgebra(alg: &FiniteAlgebra, space: &Subspace, unit: &Element) -> Result<FiniteAlgebra> {
    check_ambient(alg, space)?;
    let coords = |v: &[u32]| space.coordinates_of(v).ok_or_else(|| Error::InvalidParameters("subspace is not closed under multiplication".into()));
    let basis = space.basis();
    let mut table = Vec::with_capacity(basis.len() * basis.len());
    for a in basis {
        for b in basis {
            table.push(coords(&alg.mul_raw(a, b))?);
        }
    }
    let unit = coords(unit.coords())?;
    FiniteAlgebra::new(alg.field(), basis.len(), table, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructors::{exterior_algebra, triangular_algebra};

    #[test]
    fn closure_examples() {
        let (a, _) = exterior_algebra(3, 3, &Budget::default()).unwrap();
        assert_eq!(ideal_closure(&a, &[]).unwrap().dim(), 0);
        assert_eq!(ideal_closure(&a, &[a.unit()]).unwrap().dim(), 8);
        let i = ideal_closure(&a, &[a.basis_element(1)]).unwrap();
        // e1, e1^e2, e1^e3, e1^e2^e3
        assert_eq!(i.space(), &Subspace::coordinate(a.field(), 8, [1, 4, 5, 7]));
    }

    #[test]
    fn non_ideal_rejected() {
        let t = triangular_algebra(2, 2, &Budget::default()).unwrap();
        // span{e11} is not an ideal: e11 e12 = e12
        let s = Subspace::coordinate(t.field(), 3, [0]);
        assert_eq!(Ideal::new(&t, s), Err(Error::NotAnIdeal));
    }

    #[test]
    fn quotients() {
        let (a, g) = exterior_algebra(3, 3, &Budget::default()).unwrap();
        let zero = Ideal::new(&a, Subspace::zero(a.field(), 8)).unwrap();
        let q = quotient_algebra(&a, &zero).unwrap();
        assert_eq!(q.algebra, a);

        let positive = ideal_closure(&a, &[a.basis_element(1), a.basis_element(2), a.basis_element(3)]).unwrap();
        assert_eq!(positive.dim(), 7);
        let q = quotient_algebra(&a, &positive).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.induced_grading(&g).degrees(), &[0]);

        let full = ideal_closure(&a, &[a.unit()]).unwrap();
        assert!(matches!(quotient_algebra(&a, &full), Err(Error::DegenerateQuotient)));
    }

    #[test]
    fn triangular_mod_strict_upper_is_commutative() {
        let t = triangular_algebra(2, 2, &Budget::default()).unwrap();
        let j = ideal_closure(&t, &[t.basis_element(2)]).unwrap();
        assert_eq!(j.dim(), 1);
        let q = quotient_algebra(&t, &j).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_commutative());
    }

    #[test]
    fn quotient_kills_generators() {
        let (a, _) = exterior_algebra(5, 3, &Budget::default()).unwrap();
        let gens = [a.basis_element(4), a.element(vec![0, 1, 0, 2, 0, 0, 0, 0]).unwrap()];
        let i = ideal_closure(&a, &gens).unwrap();
        let q = quotient_algebra(&a, &i).unwrap();
        for g in &gens {
            assert!(q.project(g).is_zero());
        }
        assert_eq!(q.project(&a.unit()), q.algebra.unit());
    }
}
