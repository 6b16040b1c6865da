//! Brute-force oracles. They use only the multiplication table and plain
//! enumeration, never the crate's linear algebra.

#![allow(dead_code)]

use cealg::FiniteAlgebra;

/// Every vector of `F_p^d`, coordinate 0 most significant.
pub fn all_vectors(p: u32, d: usize) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(d as u32);
    (0..total)
        .map(|mut t| {
            let mut v = vec![0; d];
            for slot in v.iter_mut().rev() {
                *slot = (t % p as usize) as u32;
                t /= p as usize;
            }
            v
        })
        .collect()
}

pub fn mul(alg: &FiniteAlgebra, x: &[u32], y: &[u32]) -> Vec<u32> {
    let (p, d) = (alg.p() as u64, alg.dim());
    let mut out = vec![0u64; d];
    for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
        for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
            for (o, &c) in out.iter_mut().zip(alg.basis_product(i, j)) {
                *o = (*o + a as u64 * b as u64 % p * c as u64) % p;
            }
        }
    }
    out.into_iter().map(|v| v as u32).collect()
}

pub fn add(p: u32, x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(a, b)| (a + b) % p).collect()
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&c| c == 0)
}

pub fn unit(alg: &FiniteAlgebra) -> Vec<u32> {
    alg.unit().coords().to_vec()
}

pub fn center(alg: &FiniteAlgebra) -> Vec<Vec<u32>> {
    let d = alg.dim();
    let basis: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|k| (i == k) as u32).collect()).collect();
    all_vectors(alg.p(), d)
        .into_iter()
        .filter(|x| basis.iter().all(|e| mul(alg, x, e) == mul(alg, e, x)))
        .collect()
}

pub fn is_unit(alg: &FiniteAlgebra, elements: &[Vec<u32>], x: &[u32]) -> bool {
    let one = unit(alg);
    elements.iter().any(|y| mul(alg, x, y) == one)
}

/// `J = {x : 1 + a x is a unit for every a}`.
pub fn radical(alg: &FiniteAlgebra) -> Vec<Vec<u32>> {
    let p = alg.p();
    let elements = all_vectors(p, alg.dim());
    let one = unit(alg);
    elements
        .iter()
        .filter(|x| elements.iter().all(|a| is_unit(alg, &elements, &add(p, &one, &mul(alg, a, x)))))
        .cloned()
        .collect()
}

/// `{x : x s = 0 for all s in set}`, as a sorted list.
pub fn right_annihilator(alg: &FiniteAlgebra, set: &[Vec<u32>]) -> Vec<Vec<u32>> {
    all_vectors(alg.p(), alg.dim())
        .into_iter()
        .filter(|x| set.iter().all(|s| is_zero(&mul(alg, x, s))))
        .collect()
}

pub fn left_annihilator(alg: &FiniteAlgebra, set: &[Vec<u32>]) -> Vec<Vec<u32>> {
    all_vectors(alg.p(), alg.dim())
        .into_iter()
        .filter(|x| set.iter().all(|s| is_zero(&mul(alg, s, x))))
        .collect()
}

/// First `x` in lexicographic order with `xC ∩ C = 0`, if any.
pub fn first_non_essential(alg: &FiniteAlgebra) -> Option<Vec<u32>> {
    let c = center(alg);
    all_vectors(alg.p(), alg.dim())
        .into_iter()
        .filter(|x| !is_zero(x))
        .find(|x| {
            !c.iter().any(|z| {
                let xz = mul(alg, x, z);
                !is_zero(&xz) && c.contains(&xz)
            })
        })
}

/// Elements of the span of `basis`.
pub fn span(p: u32, basis: &[Vec<u32>], d: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = all_vectors(p, basis.len())
        .into_iter()
        .map(|coef| {
            let mut v = vec![0; d];
            for (c, b) in coef.iter().zip(basis) {
                for (o, &x) in v.iter_mut().zip(b) {
                    *o = (*o + c * x) % p;
                }
            }
            v
        })
        .collect();
    out.sort();
    out
}

pub type Tuple = Vec<Vec<u32>>;

/// First `(xs, ys)` in lexicographic order with `sum x_i y_i = 1` and a
/// nonzero `r` with `sum x_i r y_i = 0`.
pub fn first_quasi_identity_violation(alg: &FiniteAlgebra, n: usize) -> Option<(Tuple, Tuple)> {
    let (p, d) = (alg.p(), alg.dim());
    let elements = all_vectors(p, d);
    let one = unit(alg);
    let tuples: Vec<Vec<Vec<u32>>> = all_vectors(elements.len() as u32, n)
        .into_iter()
        .map(|idx| idx.iter().map(|&i| elements[i as usize].clone()).collect())
        .collect();
    let nonzero: Vec<&Vec<u32>> = elements.iter().filter(|r| !is_zero(r)).collect();
    for xs in &tuples {
        for ys in &tuples {
            let total = xs.iter().zip(ys).fold(vec![0; d], |acc, (x, y)| add(p, &acc, &mul(alg, x, y)));
            if total != one {
                continue;
            }
            let sandwich_zero = |r: &Vec<u32>| {
                let s = xs
                    .iter()
                    .zip(ys)
                    .fold(vec![0; d], |acc, (x, y)| add(p, &acc, &mul(alg, &mul(alg, x, r), y)));
                is_zero(&s)
            };
            if nonzero.iter().any(|r| sandwich_zero(r)) {
                return Some((xs.clone(), ys.clone()));
            }
        }
    }
    None
}
