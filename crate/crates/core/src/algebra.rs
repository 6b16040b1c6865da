//! Finite-dimensional unital associative algebras given by structure constants.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank_of, row_reduce, PrimeField, Subspace};

/// Coordinates of an algebra element in the basis `e_0, ..., e_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_raw(coords: Vec<u32>) -> Self {
        Element(coords)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A unital associative algebra over F_p with basis `e_0..e_{d-1}`.
///
/// `e_i * e_j = sum_k c[i][j][k] e_k`. The constructor verifies associativity
/// on all basis triples and the unit law on all basis vectors, so every value
/// of this type is a genuine ring with `p^d` elements.
#[derive(Clone)]
pub struct FiniteAlgebra {
    field: PrimeField,
    dim: usize,
    // c[i][j][k] at (i * dim + j) * dim + k
    table: Vec<u32>,
    // nonzero entries of each e_i e_j
    sparse: Vec<Vec<(usize, u32)>>,
    unit: Vec<u32>,
    name: String,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Eq for FiniteAlgebra {}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({:?}, {} over {:?})", self.name, self.dim, self.field)
    }
}

impl FiniteAlgebra {
    /// Builds an algebra from `dim * dim` product rows (`table[i * dim + j]`
    /// holds the coordinates of `e_i e_j`) and a unit vector.
    pub fn new(field: PrimeField, dim: usize, table: Vec<Vec<u32>>, unit: Vec<u32>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameters("algebra dimension must be positive".into()));
        }
        if table.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                found: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in &table {
            if row.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: row.len(),
                });
            }
            for &v in row {
                flat.push(field.check_reduced(v as u64)?);
            }
        }
        if unit.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: unit.len(),
            });
        }
        for &v in &unit {
            field.check_reduced(v as u64)?;
        }
        let alg = Self::from_flat_unchecked(field, dim, flat, unit);
        alg.verify_unit_law()?;
        alg.verify_associativity()?;
        Ok(alg)
    }

    /// Builds from a closure giving the sparse product of two basis vectors.
    pub(crate) fn from_products(
        field: PrimeField,
        dim: usize,
        unit: Vec<u32>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, u32)>,
    ) -> Result<Self> {
        let mut table = vec![vec![0u32; dim]; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in product(i, j) {
                    let row = &mut table[i * dim + j];
                    row[k] = field.add(row[k], c);
                }
            }
        }
        Self::new(field, dim, table, unit)
    }

    fn from_flat_unchecked(field: PrimeField, dim: usize, table: Vec<u32>, unit: Vec<u32>) -> Self {
        let sparse = table
            .chunks(dim)
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (k, c))
                    .collect()
            })
            .collect();
        FiniteAlgebra {
            field,
            dim,
            table,
            sparse,
            unit,
            name: String::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of ring elements, `p^dim`, when it fits in a `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        crate::budget::power(self.p(), self.dim)
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    /// All `dim * dim` product rows in `(i, j)` row-major order.
    pub fn table_rows(&self) -> impl Iterator<Item = &[u32]> {
        self.table.chunks(self.dim)
    }

    pub fn unit(&self) -> Element {
        Element(self.unit.clone())
    }

    pub(crate) fn unit_coords(&self) -> &[u32] {
        &self.unit
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.dim])
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        Element(v)
    }

    /// Validates coordinates and wraps them as an element.
    pub fn element(&self, coords: Vec<u32>) -> Result<Element> {
        self.check_len(&coords)?;
        for &c in &coords {
            self.field.check_reduced(c as u64)?;
        }
        Ok(Element(coords))
    }

    /// Reduces arbitrary integer coordinates mod p.
    pub fn element_from_ints(&self, coords: &[i64]) -> Result<Element> {
        self.check_len(coords)?;
        Ok(Element(coords.iter().map(|&c| self.field.reduce(c)).collect()))
    }

    fn check_len<T>(&self, v: &[T]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(&x.0)?;
        self.check_len(&y.0)?;
        Ok(Element(self.mul_raw(&x.0, &y.0)))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(&x.0)?;
        self.check_len(&y.0)?;
        Ok(Element(self.add_raw(&x.0, &y.0)))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(&x.0)?;
        self.check_len(&y.0)?;
        Ok(Element(self.sub_raw(&x.0, &y.0)))
    }

    pub fn scale(&self, c: u32, x: &Element) -> Element {
        let c = c % self.p();
        Element(x.0.iter().map(|&v| self.field.mul(c, v)).collect())
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_len(&a.0)?;
        self.check_len(&b.0)?;
        Ok(Element(self.commutator_raw(&a.0, &b.0)))
    }

    /// Two-sided invertibility. In a finite ring a one-sided inverse is
    /// two-sided, so this is injectivity of left multiplication.
    pub fn is_unit(&self, x: &Element) -> Result<bool> {
        self.check_len(&x.0)?;
        Ok(self.is_unit_raw(&x.0))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Inverse of a unit, by solving `x y = 1`.
    pub fn inverse(&self, x: &Element) -> Result<Option<Element>> {
        self.check_len(&x.0)?;
        if !self.is_unit_raw(&x.0) {
            return Ok(None);
        }
        // Augmented system L_x y = 1, with L_x invertible.
        let d = self.dim;
        let lx = self.left_matrix(&x.0);
        let mut rows: Vec<Vec<u32>> = lx
            .into_iter()
            .zip(&self.unit)
            .map(|(mut row, &u)| {
                row.push(u);
                row
            })
            .collect();
        row_reduce(&mut rows, &self.field, d + 1);
        Ok(Some(Element(rows.iter().map(|r| r[d]).collect())))
    }

    pub(crate) fn mul_raw(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let d = self.dim;
        // at most d^3 terms below p^2 < 2^32 each, so no overflow
        let mut acc = vec![0u64; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = self.field.mul(xi, yj);
                for &(k, v) in &self.sparse[i * d + j] {
                    acc[k] += (c * v) as u64;
                }
            }
        }
        acc.into_iter().map(|a| self.field.reduce_u64(a)).collect()
    }

    pub(crate) fn add_raw(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub(crate) fn sub_raw(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub(crate) fn commutator_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.sub_raw(&self.mul_raw(a, b), &self.mul_raw(b, a))
    }

    /// Matrix of `y -> x y`: entry `[k][j]` is coordinate `k` of `x e_j`.
    pub(crate) fn left_matrix(&self, x: &[u32]) -> Vec<Vec<u32>> {
        let d = self.dim;
        let mut m = vec![vec![0u64; d]; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, products) in self.sparse[i * d..(i + 1) * d].iter().enumerate() {
                for &(k, v) in products {
                    m[k][j] += xi as u64 * v as u64;
                }
            }
        }
        m.into_iter()
            .map(|row| row.into_iter().map(|a| self.field.reduce_u64(a)).collect())
            .collect()
    }

    pub(crate) fn is_unit_raw(&self, x: &[u32]) -> bool {
        rank_of(self.left_matrix(x), &self.field, self.dim) == self.dim
    }

    /// `x c` for each row `c`.
    pub(crate) fn right_multiples(&self, x: &[u32], by: &[Vec<u32>]) -> Vec<Vec<u32>> {
        by.iter().map(|c| self.mul_raw(x, c)).collect()
    }

    /// Subspace spanned by `{e_i x}`, i.e. the left ideal `A x`.
    pub fn left_ideal_of(&self, x: &Element) -> Subspace {
        let rows = (0..self.dim)
            .map(|i| {
                let e = self.basis_element(i);
                self.mul_raw(&e.0, &x.0)
            })
            .collect();
        Subspace::from_rows_unchecked(rows, self.field, self.dim)
    }

    /// The whole ring as a subspace.
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    fn verify_unit_law(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis_element(i);
            if self.mul_raw(&self.unit, &e.0) != e.0 || self.mul_raw(&e.0, &self.unit) != e.0 {
                return Err(Error::UnitLaw(i));
            }
        }
        Ok(())
    }

    fn verify_associativity(&self) -> Result<()> {
        let d = self.dim;
        let p = self.p() as u64;
        let mut lhs = vec![0u64; d];
        let mut rhs = vec![0u64; d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    lhs.iter_mut().for_each(|v| *v = 0);
                    rhs.iter_mut().for_each(|v| *v = 0);
                    // (e_i e_j) e_k
                    for &(m, c) in &self.sparse[i * d + j] {
                        for &(t, v) in &self.sparse[m * d + k] {
                            lhs[t] += (c * v) as u64;
                        }
                    }
                    // e_i (e_j e_k)
                    for &(m, c) in &self.sparse[j * d + k] {
                        for &(t, v) in &self.sparse[i * d + m] {
                            rhs[t] += (c * v) as u64;
                        }
                    }
                    if lhs.iter().zip(&rhs).any(|(a, b)| a % p != b % p) {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}
