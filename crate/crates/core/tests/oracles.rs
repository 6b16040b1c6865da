mod common;

use cealg::constructors::{
    direct_product, exterior_algebra, group_algebra, matrix_algebra, triangular_algebra, truncated_polynomial,
};
use cealg::essentiality::{ce_exhaustive, quasi_identity_probe};
use cealg::search::random_algebra;
use cealg::structure::{center, jacobson_radical, radical_by_trace, radical_by_units, socles};
use cealg::{Budget, FiniteAlgebra, GroupTable, Subspace};

fn b() -> Budget {
    Budget::default()
}

/// Algebras with at most 81 elements.
fn small_algebras() -> Vec<FiniteAlgebra> {
    let mut v = vec![
        matrix_algebra(2, 2, &b()).unwrap(),
        triangular_algebra(2, 2, &b()).unwrap(),
        triangular_algebra(3, 2, &b()).unwrap(),
        exterior_algebra(2, 2, &b()).unwrap().0,
        exterior_algebra(3, 2, &b()).unwrap().0,
        truncated_polynomial(3, 3, &b()).unwrap().0,
        truncated_polynomial(2, 4, &b()).unwrap().0,
        group_algebra(2, &GroupTable::symmetric(3).unwrap(), &b()).unwrap(),
        group_algebra(3, &GroupTable::cyclic(3).unwrap(), &b()).unwrap(),
        group_algebra(2, &GroupTable::cyclic(4).unwrap(), &b()).unwrap(),
        direct_product(
            &truncated_polynomial(2, 2, &b()).unwrap().0,
            &truncated_polynomial(2, 2, &b()).unwrap().0,
            &b(),
        )
        .unwrap(),
    ];
    for seed in 0..8 {
        v.push(random_algebra(2, 4, seed, &b()).unwrap());
        v.push(random_algebra(3, 3, 100 + seed, &b()).unwrap());
        v.push(random_algebra(2, 3, 200 + seed, &b()).unwrap());
    }
    v
}

fn elements_of(s: &Subspace) -> Vec<Vec<u32>> {
    common::span(s.field().modulus(), s.basis(), s.ambient_dim())
}

#[test]
fn center_matches_enumeration() {
    for alg in small_algebras() {
        assert_eq!(elements_of(&center(&alg)), common::center(&alg), "{}", alg.name());
    }
}

#[test]
fn radical_matches_enumeration() {
    for alg in small_algebras() {
        let expected = common::radical(&alg);
        assert_eq!(elements_of(&jacobson_radical(&alg, &b()).unwrap()), expected, "{}", alg.name());
        assert_eq!(elements_of(&radical_by_units(&alg, &b()).unwrap()), expected, "{}", alg.name());
        if alg.p() as usize > alg.dim() {
            assert_eq!(elements_of(&radical_by_trace(&alg).unwrap()), expected, "{}", alg.name());
        }
    }
}

#[test]
fn socles_match_enumeration() {
    for alg in small_algebras() {
        let c = center(&alg);
        let j = jacobson_radical(&alg, &b()).unwrap();
        let soc = socles(&alg, &c, &j).unwrap();
        let cj: Vec<Vec<u32>> = common::center(&alg)
            .into_iter()
            .filter(|x| common::radical(&alg).contains(x))
            .collect();
        let jj = common::radical(&alg);
        assert_eq!(elements_of(&soc.over_center), common::right_annihilator(&alg, &cj), "{}", alg.name());
        assert_eq!(elements_of(&soc.right), common::right_annihilator(&alg, &jj), "{}", alg.name());
        assert_eq!(elements_of(&soc.left), common::left_annihilator(&alg, &jj), "{}", alg.name());
    }
}

#[test]
fn essentiality_matches_full_scan() {
    for alg in small_algebras() {
        let v = ce_exhaustive(&alg, &b()).unwrap();
        let expected = common::first_non_essential(&alg);
        assert_eq!(v.value, expected.is_none(), "{}", alg.name());
        assert_eq!(v.witness.map(|w| w.coords().to_vec()), expected, "{}", alg.name());
    }
}

#[test]
fn parallel_scan_finds_a_valid_witness() {
    let budget = Budget {
        deterministic: false,
        ..Budget::default()
    };
    for alg in small_algebras() {
        let v = ce_exhaustive(&alg, &budget).unwrap();
        assert_eq!(v.value, common::first_non_essential(&alg).is_none(), "{}", alg.name());
        if let Some(w) = v.witness {
            let c = common::center(&alg);
            assert!(!w.is_zero());
            assert!(c.iter().all(|z| {
                let wz = common::mul(&alg, w.coords(), z);
                common::is_zero(&wz) || !c.contains(&wz)
            }));
        }
    }
}

#[test]
fn probe_matches_brute_force() {
    for alg in small_algebras() {
        let size = (alg.p() as u64).pow(alg.dim() as u32);
        let max_n = if size <= 16 { 2 } else { 1 };
        for n in 1..=max_n {
            let found = quasi_identity_probe(&alg, n, &b()).unwrap();
            let expected = common::first_quasi_identity_violation(&alg, n);
            let got = found.map(|c| {
                let raw = |v: &[cealg::Element]| v.iter().map(|e| e.coords().to_vec()).collect::<Vec<_>>();
                (raw(&c.xs), raw(&c.ys))
            });
            assert_eq!(got, expected, "{} n={n}", alg.name());
            if got.is_some() {
                break;
            }
        }
    }
}
