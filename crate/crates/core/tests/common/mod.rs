//! Test-side oracles, written without the library's closure, product or
//! factorisation code.
#![allow(dead_code)]

use std::collections::HashSet;

use cliffroots::catalog;
use cliffroots::{Metric, QuadScalar, Scalar, Vector};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(s: &str) -> QuadScalar {
    s.parse().expect("test scalar")
}

pub fn qv(coords: &[&str]) -> Vector<QuadScalar> {
    Vector(coords.iter().map(|c| q(c)).collect())
}

fn round_key(v: &[f64]) -> Vec<i64> {
    v.iter().map(|x| (x * 1e7).round() as i64).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orbit of the simple roots under the reflections in every root found so far,
/// in plain `f64` coordinates, repeated until a full pass adds nothing.
pub fn float_orbit_count(simple: &[Vec<f64>]) -> usize {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut roots: Vec<Vec<f64>> = Vec::new();
    for s in simple {
        if seen.insert(round_key(s)) {
            roots.push(s.clone());
        }
    }
    loop {
        let before = roots.len();
        for i in 0..roots.len() {
            let a = roots[i].clone();
            let aa = dot(&a, &a);
            for j in 0..roots.len() {
                let l = &roots[j];
                let c = 2.0 * dot(l, &a) / aa;
                let img: Vec<f64> = l.iter().zip(&a).map(|(x, y)| x - c * y).collect();
                if seen.insert(round_key(&img)) {
                    roots.push(img);
                }
            }
            assert!(roots.len() < 20_000, "oracle orbit runaway");
        }
        if roots.len() == before {
            return roots.len();
        }
    }
}

/// Float simple roots of a catalog entry; golden coordinates `p + q tau` become
/// the pair `(p, q)` when the entry uses the reduced metric.
pub fn oracle_simple_roots(name: &str) -> Vec<Vec<f64>> {
    let e = catalog::lookup(name).unwrap();
    e.simple_roots
        .iter()
        .map(|r| match e.metric {
            Metric::Standard => r.0.iter().map(Scalar::to_f64).collect(),
            Metric::ReducedTau => {
                let pairs: Vec<(f64, f64)> = r
                    .0
                    .iter()
                    .map(|c| {
                        let (p, qq) = c.to_tau_basis().unwrap();
                        (rat_f64(&p), rat_f64(&qq))
                    })
                    .collect();
                pairs.iter().map(|p| p.0).chain(pairs.iter().map(|p| p.1)).collect()
            }
        })
        .collect()
}

pub fn rat_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

/// Rank of a rational matrix by fraction-exact elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The three printed families of the 120 `H4` roots: `(±1,0,0,0)` permutations,
/// `(±1,±1,±1,±1)/2`, and even permutations of `(0,±1,±sigma,±tau)/2`.
pub fn h4_printed_list() -> Vec<Vector<QuadScalar>> {
    let mut out = Vec::new();
    for i in 0..4 {
        for s in [1, -1] {
            let mut v = vec![QuadScalar::from_int(0); 4];
            v[i] = QuadScalar::from_int(s);
            out.push(Vector(v));
        }
    }
    for mask in 0..16 {
        let v = (0..4)
            .map(|i| QuadScalar::from_ratio(if mask & (1 << i) == 0 { 1 } else { -1 }, 2))
            .collect();
        out.push(Vector(v));
    }
    let half = QuadScalar::from_ratio(1, 2);
    let base = [QuadScalar::from_int(0), QuadScalar::from_int(1), QuadScalar::sigma(), QuadScalar::tau()];
    for perm in even_permutations(4) {
        for mask in 0..8 {
            let signed: Vec<QuadScalar> = (0..4)
                .map(|k| {
                    let s = if k > 0 && mask & (1 << (k - 1)) != 0 { -base[k].clone() } else { base[k].clone() };
                    s * &half
                })
                .collect();
            let mut v = vec![QuadScalar::from_int(0); 4];
            for (k, &slot) in perm.iter().enumerate() {
                v[slot] = signed[k].clone();
            }
            out.push(Vector(v));
        }
    }
    out
}

/// Permutations of `0..n` with an even number of inversions.
pub fn even_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            if inv % 2 == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

pub fn as_key_set(vs: &[Vector<QuadScalar>]) -> HashSet<Vec<<QuadScalar as Scalar>::Key>> {
    vs.iter().map(Vector::key).collect()
}

pub fn one() -> BigRational {
    BigRational::one()
}
