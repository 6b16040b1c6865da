mod common;

use cealg::constructors::matrix_algebra;
use cealg::essentiality::{ce_exhaustive, verify_witness};
use cealg::linalg::{kernel, rref};
use cealg::search::random_algebra;
use cealg::structure::{center, idempotents};
use cealg::{analyze, ideal_closure, quotient_algebra, Budget, FiniteAlgebra, PrimeField};
use proptest::prelude::*;

fn b() -> Budget {
    Budget::default()
}

fn matrix_strategy() -> impl Strategy<Value = (u32, usize, Vec<Vec<u32>>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1usize..6, 1usize..6).prop_flat_map(|(p, rows, cols)| {
        let row = prop::collection::vec(0..p, cols);
        (Just(p), Just(cols), prop::collection::vec(row, rows))
    })
}

fn algebra_strategy() -> impl Strategy<Value = FiniteAlgebra> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..5, any::<u64>())
        .prop_map(|(p, d, seed)| random_algebra(p, d, seed, &Budget::default()).unwrap())
}

fn dot(p: u32, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (x, y)| (acc + x * y) % p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity((p, cols, rows) in matrix_strategy()) {
        let f = PrimeField::new(p as u64).unwrap();
        let row_space = rref(&rows, f, cols).unwrap();
        let ker = kernel(&rows, cols, f).unwrap();
        prop_assert_eq!(row_space.dim() + ker.dim(), cols);
        for v in ker.basis() {
            prop_assert!(rows.iter().all(|r| dot(p, r, v) == 0));
        }
        for r in &rows {
            prop_assert!(row_space.contains(r).unwrap());
        }
        let again = rref(row_space.basis(), f, cols).unwrap();
        prop_assert_eq!(again.basis(), row_space.basis());
    }

    #[test]
    fn sum_and_intersection_dimensions((p, cols, rows) in matrix_strategy(), split in 0usize..6) {
        let f = PrimeField::new(p as u64).unwrap();
        let split = split.min(rows.len());
        let a = rref(&rows[..split], f, cols).unwrap();
        let c = rref(&rows[split..], f, cols).unwrap();
        let sum = a.sum(&c).unwrap();
        let meet = a.intersect(&c).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + c.dim());
        prop_assert!(a.contains_subspace(&meet).unwrap() && c.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn random_algebras_are_associative(alg in algebra_strategy(), triples in prop::collection::vec(any::<u64>(), 100)) {
        let (p, d) = (alg.p(), alg.dim());
        let element = |seed: u64| -> Vec<u32> {
            (0..d).map(|i| ((seed >> (i * 5)) % p as u64) as u32).collect()
        };
        for t in triples {
            let (x, y, z) = (element(t), element(t.rotate_left(21)), element(t.rotate_left(42)));
            let left = common::mul(&alg, &common::mul(&alg, &x, &y), &z);
            let right = common::mul(&alg, &x, &common::mul(&alg, &y, &z));
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn mutated_tables_are_rejected_iff_broken(pos in 0usize..64, delta in 1u32..3) {
        let m = matrix_algebra(3, 2, &b()).unwrap();
        let mut table: Vec<Vec<u32>> = m.table_rows().map(<[u32]>::to_vec).collect();
        let (row, col) = (pos / 4, pos % 4);
        table[row][col] = (table[row][col] + delta) % 3;
        let unit = m.unit().coords().to_vec();
        let built = FiniteAlgebra::new(m.field(), 4, table.clone(), unit.clone());

        // Oracle: evaluate the axioms directly on basis vectors.
        let prod = |x: &[u32], y: &[u32]| -> Vec<u32> {
            let mut out = vec![0u32; 4];
            for i in 0..4 {
                for j in 0..4 {
                    for k in 0..4 {
                        out[k] = (out[k] + x[i] * y[j] % 3 * table[i * 4 + j][k]) % 3;
                    }
                }
            }
            out
        };
        let e = |i: usize| -> Vec<u32> { (0..4).map(|k| (k == i) as u32).collect() };
        let unital = (0..4).all(|i| prod(&unit, &e(i)) == e(i) && prod(&e(i), &unit) == e(i));
        let associative = (0..64).all(|t| {
            let (i, j, k) = (t / 16, t / 4 % 4, t % 4);
            prod(&prod(&e(i), &e(j)), &e(k)) == prod(&e(i), &prod(&e(j), &e(k)))
        });
        prop_assert_eq!(built.is_ok(), unital && associative);
        prop_assert!(built.is_err());
    }

    #[test]
    fn quotient_by_closure_is_multiplicative(alg in algebra_strategy(), seeds in any::<(u64, u64, u64)>()) {
        let (p, d) = (alg.p(), alg.dim());
        let element = |seed: u64| {
            alg.element((0..d).map(|i| ((seed >> (i * 7)) % p as u64) as u32).collect()).unwrap()
        };
        let (g, x, y) = (element(seeds.0), element(seeds.1), element(seeds.2));
        let ideal = ideal_closure(&alg, std::slice::from_ref(&g)).unwrap();
        prop_assert!(ideal.space().contains(g.coords()).unwrap());
        for i in 0..d {
            for v in ideal.space().basis() {
                let e = alg.basis_element(i);
                prop_assert!(ideal.space().contains(&common::mul(&alg, e.coords(), v)).unwrap());
                prop_assert!(ideal.space().contains(&common::mul(&alg, v, e.coords())).unwrap());
            }
        }
        if ideal.dim() == d {
            prop_assert!(quotient_algebra(&alg, &ideal).is_err());
            return Ok(());
        }
        let q = quotient_algebra(&alg, &ideal).unwrap();
        prop_assert_eq!(q.algebra.dim(), d - ideal.dim());
        let xy = alg.mul(&x, &y).unwrap();
        prop_assert_eq!(q.project(&xy), q.algebra.mul(&q.project(&x), &q.project(&y)).unwrap());
        prop_assert_eq!(q.project(&alg.unit()), q.algebra.unit());
    }

    #[test]
    fn commutative_algebras_are_essential(alg in algebra_strategy()) {
        if alg.is_commutative() {
            prop_assert!(ce_exhaustive(&alg, &b()).unwrap().value);
        }
    }

    #[test]
    fn essential_algebras_have_central_idempotents(alg in algebra_strategy()) {
        let v = ce_exhaustive(&alg, &b()).unwrap();
        let c = center(&alg);
        match v.witness {
            Some(w) => prop_assert!(verify_witness(&alg, &w, &c).unwrap()),
            None => {
                for e in idempotents(&alg, &b()).unwrap() {
                    prop_assert!(c.contains(e.coords()).unwrap());
                }
            }
        }
    }

    #[test]
    fn reports_are_deterministic(alg in algebra_strategy()) {
        let first = analyze(&alg, None, &b()).unwrap();
        let second = analyze(&alg, None, &b()).unwrap();
        prop_assert_eq!(first.to_string(), second.to_string());
        let loose = Budget { deterministic: false, ..Budget::default() };
        let third = analyze(&alg, None, &loose).unwrap();
        prop_assert_eq!(third.centrally_essential, first.centrally_essential);
        prop_assert_eq!(third.dim_center, first.dim_center);
    }
}
