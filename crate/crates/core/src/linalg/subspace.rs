use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// A coordinate subspace of F_p^n, stored as the reduced row echelon form of
/// any spanning set. Two values are equal exactly when the subspaces are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

/// Gauss-Jordan elimination in place. Drops zero rows, leaves the rest in
/// reduced row echelon form and returns the pivot columns.
pub(crate) fn row_reduce(rows: &mut Vec<Vec<u32>>, field: &PrimeField, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(rows[rank][col]);
        if inv != 1 {
            for v in rows[rank][col..].iter_mut() {
                *v = field.mul(*v, inv);
            }
        }
        let pivot_row = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let factor = row[col];
            if factor != 0 {
                let neg = field.neg(factor);
                for c in col..ncols {
                    if pivot_row[c] != 0 {
                        row[c] = field.add(row[c], field.mul(neg, pivot_row[c]));
                    }
                }
            }
        }
        rows[rank] = pivot_row;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

fn check_rows(rows: &[Vec<u32>], ncols: usize, field: &PrimeField) -> Result<()> {
    for row in rows {
        if row.len() != ncols {
            return Err(Error::Dimension {
                expected: ncols,
                found: row.len(),
            });
        }
        for &v in row {
            field.check_reduced(v as u64)?;
        }
    }
    Ok(())
}

/// Canonical subspace spanned by `rows`.
pub fn rref(rows: &[Vec<u32>], field: PrimeField, ambient_dim: usize) -> Result<Subspace> {
    check_rows(rows, ambient_dim, &field)?;
    Ok(Subspace::from_rows_unchecked(rows.to_vec(), field, ambient_dim))
}

/// Right null space `{v : matrix * v = 0}` of a `rows x ncols` matrix.
pub fn kernel(matrix: &[Vec<u32>], ncols: usize, field: PrimeField) -> Result<Subspace> {
    check_rows(matrix, ncols, &field)?;
    Ok(kernel_unchecked(matrix.to_vec(), ncols, field))
}

pub(crate) fn kernel_unchecked(mut matrix: Vec<Vec<u32>>, ncols: usize, field: PrimeField) -> Subspace {
    let pivots = row_reduce(&mut matrix, &field, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in matrix.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    Subspace::from_rows_unchecked(basis, field, ncols)
}

/// Rank of a matrix given by rows.
pub(crate) fn rank_of(mut rows: Vec<Vec<u32>>, field: &PrimeField, ncols: usize) -> usize {
    row_reduce(&mut rows, field, ncols).len()
}

/// Intersection through the null space of the stacked generators: a
/// relation `sum l_i a_i + sum m_j b_j = 0` exhibits `sum l_i a_i` as a
/// common vector, and every common vector arises this way.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_compatible(b)?;
    let field = a.field;
    let n = a.ambient_dim;
    let (ka, kb) = (a.dim(), b.dim());
    if ka == 0 || kb == 0 {
        return Ok(Subspace::zero(field, n));
    }
    // Column r of the relation matrix is generator r.
    let relation: Vec<Vec<u32>> = (0..n)
        .map(|c| {
            a.basis
                .iter()
                .chain(b.basis.iter())
                .map(|row| row[c])
                .collect()
        })
        .collect();
    let relations = kernel_unchecked(relation, ka + kb, field);
    let rows = relations
        .basis
        .iter()
        .map(|coef| combine(&a.basis, &coef[..ka], &field, n))
        .collect();
    Ok(Subspace::from_rows_unchecked(rows, field, n))
}

/// Membership of `v` in `s`.
pub fn member(v: &[u32], s: &Subspace) -> Result<bool> {
    if v.len() != s.ambient_dim {
        return Err(Error::Dimension {
            expected: s.ambient_dim,
            found: v.len(),
        });
    }
    Ok(s.contains_unchecked(v))
}

fn combine(rows: &[Vec<u32>], coef: &[u32], field: &PrimeField, n: usize) -> Vec<u32> {
    let mut acc = vec![0u64; n];
    for (row, &c) in rows.iter().zip(coef) {
        if c == 0 {
            continue;
        }
        for (a, &v) in acc.iter_mut().zip(row) {
            *a += (c * v) as u64;
        }
    }
    acc.into_iter().map(|a| field.reduce_u64(a)).collect()
}

impl Subspace {
    pub(crate) fn from_rows_unchecked(mut rows: Vec<Vec<u32>>, field: PrimeField, ambient_dim: usize) -> Self {
        let pivots = row_reduce(&mut rows, &field, ambient_dim);
        Subspace {
            field,
            ambient_dim,
            basis: rows,
            pivots,
        }
    }

    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of a subset of the standard basis vectors.
    pub fn coordinate(field: PrimeField, ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let rows = indices.into_iter().map(|i| unit_vector(ambient_dim, i)).collect();
        Subspace::from_rows_unchecked(rows, field, ambient_dim)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows = self.basis.iter().chain(other.basis.iter()).cloned().collect();
        Ok(Subspace::from_rows_unchecked(rows, self.field, self.ambient_dim))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        intersect(self, other)
    }

    /// `other` is a subspace of `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis.iter().all(|v| self.contains_unchecked(v)))
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        member(v, self)
    }

    pub(crate) fn contains_unchecked(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Normal form of `v` modulo this subspace: the unique vector in
    /// `v + self` that vanishes on every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &r) in out.iter_mut().zip(row).skip(pc) {
                if r != 0 {
                    *o = f.add(*o, f.mul(neg, r));
                }
            }
        }
        out
    }

    /// Coefficients of `v` in the canonical basis; `v` must lie in the span.
    pub fn coordinates_of(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Linear combination of the basis rows.
    pub fn combination(&self, coef: &[u32]) -> Vec<u32> {
        combine(&self.basis, coef, &self.field, self.ambient_dim)
    }

    /// Number of vectors in the subspace, if it fits in a `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        (self.field.modulus() as u64).checked_pow(self.dim() as u32)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        self.field.same(&other.field)?;
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({:?}^{}, basis={:?})", self.field, self.ambient_dim, self.basis)
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let z = rref(&[], f(3), 4).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(z.basis().is_empty());

        let id: Vec<Vec<u32>> = (0..3).map(|i| unit_vector(3, i)).collect();
        let full = rref(&id, f(2), 3).unwrap();
        assert_eq!(full.basis(), id.as_slice());
        assert!(full.is_full());

        let s = rref(&[vec![1, 2], vec![2, 4]], f(5), 2).unwrap();
        assert_eq!(s.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn rref_rejects_bad_rows() {
        assert!(matches!(
            rref(&[vec![1, 2, 3]], f(5), 2),
            Err(Error::Dimension { expected: 2, found: 3 })
        ));
        assert!(matches!(rref(&[vec![7, 0]], f(5), 2), Err(Error::NotReduced { .. })));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&[vec![0, 0, 0], vec![0, 0, 0]], 3, f(3)).unwrap();
        assert_eq!(k.dim(), 3);
        let id: Vec<Vec<u32>> = (0..3).map(|i| unit_vector(3, i)).collect();
        assert_eq!(kernel(&id, 3, f(3)).unwrap().dim(), 0);
        let k = kernel(&[vec![1, 1]], 2, f(2)).unwrap();
        assert_eq!(k.basis(), &[vec![1, 1]]);
        assert!(matches!(
            kernel(&[vec![1, 1], vec![1]], 2, f(2)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn intersect_examples() {
        let a = rref(&[vec![1, 0, 0], vec![0, 1, 0]], f(3), 3).unwrap();
        let b = rref(&[vec![0, 1, 0], vec![0, 0, 1]], f(3), 3).unwrap();
        assert_eq!(intersect(&a, &b).unwrap().basis(), &[vec![0, 1, 0]]);
        assert_eq!(intersect(&a, &a).unwrap(), a);
        let z = Subspace::zero(f(3), 3);
        assert_eq!(intersect(&a, &z).unwrap(), z);
        let other = Subspace::zero(f(3), 4);
        assert!(intersect(&a, &other).is_err());
        let other_field = Subspace::zero(f(5), 3);
        assert!(matches!(intersect(&a, &other_field), Err(Error::FieldMismatch(3, 5))));
    }

    #[test]
    fn member_examples() {
        let s = rref(&[vec![0, 1]], f(3), 2).unwrap();
        assert!(member(&[0, 0], &s).unwrap());
        assert!(!member(&[1, 0], &s).unwrap());
        let s = rref(&[vec![1, 2, 0]], f(5), 3).unwrap();
        assert!(member(&[2, 4, 0], &s).unwrap());
        assert!(member(&[2, 4], &s).is_err());
    }

    #[test]
    fn reduce_and_coordinates() {
        let s = rref(&[vec![1, 1, 0], vec![0, 0, 1]], f(3), 3).unwrap();
        assert_eq!(s.pivots(), &[0, 2]);
        assert_eq!(s.free_columns(), vec![1]);
        assert_eq!(s.reduce(&[2, 0, 1]), vec![0, 1, 0]);
        assert_eq!(s.coordinates_of(&[2, 2, 1]), Some(vec![2, 1]));
        assert_eq!(s.coordinates_of(&[2, 0, 1]), None);
        assert_eq!(s.combination(&[2, 1]), vec![2, 2, 1]);
    }
}
