//! Standard algebras: exterior, matrix, upper triangular, group algebras,
//! truncated polynomial rings and direct products.

use crate::algebra::FiniteAlgebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graded::Grading;
use crate::group::GroupTable;
use crate::linalg::{unit_vector, PrimeField};

/// Basis subsets of `{0..n-1}` as bitmasks, ordered by cardinality and then
/// lexicographically on the ascending element lists.
pub fn exterior_basis(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), elements(m)));
    masks
}

fn elements(mask: u32) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// Parity of the number of pairs `(s, t)` with `s` in `a`, `t` in `b`,
/// `s > t`: the sign of sorting the concatenation of the two index lists.
pub fn exterior_sign_is_negative(a: u32, b: u32) -> bool {
    let mut inversions = 0;
    for t in elements(b) {
        // elements of a strictly above t
        inversions += (a >> (t + 1)).count_ones();
    }
    inversions % 2 == 1
}

/// Exterior algebra of F_p^n with its degree grading.
///
/// `e_S e_T = 0` when `S` and `T` meet, otherwise `sign(S, T) e_{S u T}`;
/// generator squares vanish by construction, also at p = 2.
pub fn exterior_algebra(p: u64, n: usize, budget: &Budget) -> Result<(FiniteAlgebra, Grading)> {
    let field = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::InvalidParameters("exterior algebra needs n >= 1".into()));
    }
    if n >= 31 {
        return Err(Error::cap("exterior algebra dimension", format!("2^{n}"), budget.max_dim));
    }
    let dim = 1usize << n;
    budget.check_dim("exterior algebra", dim)?;
    let basis = exterior_basis(n);
    let mut index = vec![0usize; dim];
    for (i, &m) in basis.iter().enumerate() {
        index[m as usize] = i;
    }
    let minus_one = field.neg(1);
    let alg = FiniteAlgebra::from_products(field, dim, unit_vector(dim, 0), |i, j| {
        let (a, b) = (basis[i], basis[j]);
        if a & b != 0 {
            return vec![];
        }
        let c = if exterior_sign_is_negative(a, b) { minus_one } else { 1 };
        vec![(index[(a | b) as usize], c)]
    })?
    .with_name(format!("exterior({p},{n})"));
    let grading = Grading::new(basis.iter().map(|m| m.count_ones()).collect());
    Ok((alg, grading))
}

/// Full matrix algebra M_n(F_p), basis `e_ij` at index `i * n + j`.
pub fn matrix_algebra(p: u64, n: usize, budget: &Budget) -> Result<FiniteAlgebra> {
    let field = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::InvalidParameters("matrix algebra needs n >= 1".into()));
    }
    let dim = n * n;
    budget.check_dim("matrix algebra", dim)?;
    let mut unit = vec![0; dim];
    for i in 0..n {
        unit[i * n + i] = 1;
    }
    let name = if n == 1 { format!("field({p})") } else { format!("matrix({p},{n})") };
    Ok(FiniteAlgebra::from_products(field, dim, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, 1)]
        } else {
            vec![]
        }
    })?
    .with_name(name))
}

/// Basis positions `(i, j)`, `i <= j`, of the upper triangular matrices,
/// ordered by `(j - i, i)`: diagonal first, then each superdiagonal.
pub fn triangular_positions(n: usize) -> Vec<(usize, usize)> {
    let mut pos: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    pos.sort_by_key(|&(i, j)| (j - i, i));
    pos
}

/// Upper triangular matrices T_n(F_p).
pub fn triangular_algebra(p: u64, n: usize, budget: &Budget) -> Result<FiniteAlgebra> {
    let field = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::InvalidParameters("triangular algebra needs n >= 1".into()));
    }
    let pos = triangular_positions(n);
    let dim = pos.len();
    budget.check_dim("triangular algebra", dim)?;
    let index = |i: usize, j: usize| pos.iter().position(|&q| q == (i, j)).expect("upper position");
    let mut unit = vec![0; dim];
    for i in 0..n {
        unit[index(i, i)] = 1;
    }
    Ok(FiniteAlgebra::from_products(field, dim, unit, |a, b| {
        let (i, j) = pos[a];
        let (k, l) = pos[b];
        if j == k {
            vec![(index(i, l), 1)]
        } else {
            vec![]
        }
    })?
    .with_name(format!("triangular({p},{n})")))
}

/// The degree grading `j - i` on T_n(F_p).
pub fn triangular_grading(n: usize) -> Grading {
    Grading::new(triangular_positions(n).iter().map(|&(i, j)| (j - i) as u32).collect())
}

/// Group algebra F_p[G] with the group elements as basis.
pub fn group_algebra(p: u64, group: &GroupTable, budget: &Budget) -> Result<FiniteAlgebra> {
    let field = PrimeField::new(p)?;
    let dim = group.order();
    budget.check_dim("group algebra", dim)?;
    FiniteAlgebra::from_products(field, dim, unit_vector(dim, group.identity()), |a, b| {
        vec![(group.op(a, b), 1)]
    })
}

/// F_p[x]/(x^k) with basis `1, x, ..., x^{k-1}` and the degree grading.
pub fn truncated_polynomial(p: u64, k: usize, budget: &Budget) -> Result<(FiniteAlgebra, Grading)> {
    let field = PrimeField::new(p)?;
    if k == 0 {
        return Err(Error::InvalidParameters("truncated polynomial ring needs k >= 1".into()));
    }
    budget.check_dim("truncated polynomial ring", k)?;
    let alg = FiniteAlgebra::from_products(field, k, unit_vector(k, 0), |i, j| {
        if i + j < k {
            vec![(i + j, 1)]
        } else {
            vec![]
        }
    })?
    .with_name(format!("truncated({p},{k})"));
    Ok((alg, Grading::new((0..k as u32).collect())))
}

/// Direct product with componentwise operations; the basis of `a` comes
/// first and the unit is `(1, 1)`.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra, budget: &Budget) -> Result<FiniteAlgebra> {
    a.field().same(&b.field())?;
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    budget.check_dim("direct product", dim)?;
    let mut unit = a.unit().into_coords();
    unit.extend(b.unit().into_coords());
    let sparse = |row: &[u32], offset: usize| -> Vec<(usize, u32)> {
        row.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + offset, c))
            .collect()
    };
    Ok(FiniteAlgebra::from_products(a.field(), dim, unit, |i, j| {
        if i < da && j < da {
            sparse(a.basis_product(i, j), 0)
        } else if i >= da && j >= da {
            sparse(b.basis_product(i - da, j - da), da)
        } else {
            vec![]
        }
    })?
    .with_name(format!("{}*{}", a.name(), b.name())))
}

/// Concatenated gradings of the factors of a direct product.
pub fn product_grading(a: &Grading, b: &Grading) -> Grading {
    Grading::new(a.degrees().iter().chain(b.degrees()).copied().collect())
}
