//! Library results against brute-force and closed-form oracles.

mod common;

use std::collections::HashSet;

use cliffroots::catalog;
use cliffroots::induction::{pinor_closure, spin_subgroup};
use cliffroots::roots::{close_roots, flatten_tau, reflect};
use cliffroots::{Metric, Multivector, QuadScalar, Scalar, Vector, Versor};
use common::*;

fn int_set(vs: impl IntoIterator<Item = Vec<i64>>, den: i64) -> HashSet<Vec<<QuadScalar as Scalar>::Key>> {
    vs.into_iter()
        .map(|v| Vector(v.into_iter().map(|c| QuadScalar::from_ratio(c, den)).collect::<Vec<_>>()).key())
        .collect()
}

/// `±e_i ± e_j`, `i < j`, scaled by `den`.
fn pm_pairs(n: usize, den: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = a * den;
                v[j] = b * den;
                out.push(v);
            }
        }
    }
    out
}

fn axis(n: usize, den: i64) -> Vec<Vec<i64>> {
    (0..n)
        .flat_map(|i| {
            [1, -1].into_iter().map(move |s| {
                let mut v = vec![0; n];
                v[i] = s * den;
                v
            })
        })
        .collect()
}

/// `(±1, ..., ±1)` with the number of minus signs in `parity` (None = any).
fn all_signs(n: usize, parity: Option<usize>) -> Vec<Vec<i64>> {
    (0..1usize << n)
        .filter(|m| parity.is_none_or(|p| (m.count_ones() as usize) % 2 == p))
        .map(|m| (0..n).map(|i| if m & (1 << i) != 0 { -1 } else { 1 }).collect())
        .collect()
}

fn closed(name: &str) -> HashSet<Vec<<QuadScalar as Scalar>::Key>> {
    as_key_set(catalog::lookup(name).unwrap().close().unwrap().roots())
}

#[test]
fn coordinate_enumerations() {
    assert_eq!(closed("D6"), int_set(pm_pairs(6, 1), 1));
    assert_eq!(closed("B4"), int_set(pm_pairs(4, 1).into_iter().chain(axis(4, 1)), 1));
    let f4 = pm_pairs(4, 2).into_iter().chain(axis(4, 2)).chain(all_signs(4, None));
    assert_eq!(closed("F4"), int_set(f4, 2));
    let d4 = axis(4, 2).into_iter().chain(all_signs(4, None));
    assert_eq!(closed("D4"), int_set(d4, 2));
    let e8 = pm_pairs(8, 2).into_iter().chain(all_signs(8, Some(0)));
    assert_eq!(closed("E8-cl8"), int_set(e8, 2));
    assert_eq!(closed("A1^3"), int_set(axis(3, 1), 1));
}

#[test]
fn exact_counts_agree_with_float_orbits() {
    for name in catalog::NAMES {
        let exact = catalog::lookup(name).unwrap().close().unwrap().len();
        assert_eq!(float_orbit_count(&oracle_simple_roots(name)), exact, "{name}");
    }
}

#[test]
fn h4_closure_is_the_printed_list() {
    assert_eq!(closed("H4"), as_key_set(&h4_printed_list()));
    assert_eq!(h4_printed_list().len(), 120);
}

#[test]
fn flattened_e8_simple_roots_are_independent_over_q() {
    let rows = catalog::e8_reduced_simple_roots().iter().map(|r| flatten_tau(r).unwrap()).collect();
    assert_eq!(rational_rank(rows), 8);
    let h4_rows = catalog::h4_simple_roots().iter().map(|r| flatten_tau(r).unwrap()).collect();
    assert_eq!(rational_rank(h4_rows), 4);
}

/// Classes by conjugating every element by every element.
fn brute_force_class_sizes(elements: &[Multivector<QuadScalar>]) -> Vec<usize> {
    let keys: Vec<_> = elements.iter().map(Multivector::hash_key).collect();
    let mut assigned = vec![false; elements.len()];
    let mut sizes = Vec::new();
    for i in 0..elements.len() {
        if assigned[i] {
            continue;
        }
        let mut class = HashSet::new();
        for g in elements {
            // unit spinors: g^{-1} = reverse(g)
            let c = g.reverse().geometric_product(&elements[i]).unwrap().geometric_product(g).unwrap();
            class.insert(c.hash_key());
        }
        for (k, key) in keys.iter().enumerate() {
            if class.contains(key) {
                assigned[k] = true;
            }
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn conjugacy_classes_match_brute_force() {
    let expected = [
        ("A1^3", vec![1, 1, 2, 2, 2]),
        ("A3", vec![1, 1, 4, 4, 4, 4, 6]),
        ("B3", vec![1, 1, 6, 6, 8, 8, 12, 6]),
        ("H3", vec![1, 1, 12, 12, 12, 12, 20, 20, 30]),
    ];
    for (name, mut want) in expected {
        want.sort_unstable();
        let rs = catalog::lookup(name).unwrap().close().unwrap();
        let spin = spin_subgroup(&pinor_closure(&rs).unwrap());
        let brute = brute_force_class_sizes(spin.elements());
        assert_eq!(brute, want, "{name} brute force");
        let mut lib: Vec<usize> = spin.conjugacy_classes().iter().map(|c| c.size()).collect();
        lib.sort_unstable();
        assert_eq!(lib, brute, "{name} library");
    }
}

#[test]
fn sandwich_matches_the_reflection_formula() {
    let h3 = catalog::lookup("H3").unwrap().close().unwrap();
    for a in h3.roots().iter().take(15) {
        // every H3 root has unit length, so `a` is already a unit versor
        let v = Versor::new(a.to_multivector()).unwrap();
        for l in h3.roots() {
            let by_versor = Vector(v.sandwich(&l.to_multivector()).unwrap().vector_part());
            let two_la = l.dot(a) + &l.dot(a);
            let by_formula = l.sub(&a.scale(&two_la));
            assert_eq!(by_versor, by_formula);
            assert_eq!(reflect(l, a, Metric::Standard).unwrap(), by_formula);
        }
    }
}

#[test]
fn pin_group_doubles_the_reflection_group() {
    for (name, order) in [("A1^3", 16), ("A3", 48), ("B3", 96), ("H3", 240)] {
        let rs = catalog::lookup(name).unwrap().close().unwrap();
        let pin = pinor_closure(&rs).unwrap();
        assert_eq!(pin.len(), order, "{name}");
        let rep = cliffroots::induction::double_cover_report(&pin, &rs).unwrap();
        assert_eq!(rep.distinct_actions * 2, order);
        assert!(rep.fibres_are_pairs);
    }
}

#[test]
fn reduced_closure_needs_the_golden_field() {
    let simple = catalog::e8_reduced_simple_roots();
    let float: Vec<Vector<f64>> = simple.iter().map(Vector::to_float).collect();
    assert!(close_roots(&float, Metric::ReducedTau).is_err());
}
