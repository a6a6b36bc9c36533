use std::f64::consts::PI;

use crate::clifford::Versor;
use crate::error::{Error, Result};
use crate::roots::{RootSystem, Vector};

use super::factorize::CoxeterFactorization;
use super::fold::root_permutation;
use super::plane::CoxeterPlane;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectedPoint {
    pub root_index: usize,
    pub x: f64,
    pub y: f64,
    pub radius: f64,
    pub orbit_id: usize,
}

/// Gram-Schmidt on `(a, b)`.
fn orthonormal_pair(a: &Vector<f64>, b: &Vector<f64>) -> Result<(Vector<f64>, Vector<f64>)> {
    let na = a.dot(a).sqrt();
    if na < 1e-12 {
        return Err(Error::DegeneratePlane);
    }
    let u1 = a.scale(&(1.0 / na));
    let r = b.sub(&u1.scale(&b.dot(&u1)));
    let nr = r.dot(&r).sqrt();
    if nr < 1e-12 {
        return Err(Error::DegeneratePlane);
    }
    Ok((u1, r.scale(&(1.0 / nr))))
}

/// Orbits of the roots under `w`, numbered by first appearance.
fn orbits(roots: &[Vector<f64>], w: &Versor<f64>) -> Result<Vec<usize>> {
    let perm = root_permutation(roots, w)?;
    let mut id = vec![usize::MAX; roots.len()];
    let mut next = 0;
    for start in 0..roots.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let mut i = start;
        while id[i] == usize::MAX {
            id[i] = next;
            i = perm[i];
        }
        next += 1;
    }
    Ok(id)
}

/// Projects the unit-normalised roots onto the plane spanned by `a, b`.
///
/// Orbit ids group roots cycled into each other by `w`.
pub fn project_onto(rs: &RootSystem<f64>, a: &Vector<f64>, b: &Vector<f64>, w: &Versor<f64>) -> Result<Vec<ProjectedPoint>> {
    let (u1, u2) = orthonormal_pair(a, b)?;
    let ids = orbits(rs.roots(), w)?;
    Ok(rs
        .roots()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let unit = r.scale(&(1.0 / r.dot(r).sqrt()));
            let (x, y) = (unit.dot(&u1), unit.dot(&u2));
            ProjectedPoint { root_index: i, x, y, radius: x.hypot(y), orbit_id: ids[i] }
        })
        .collect())
}

pub fn project_to_plane(rs: &RootSystem<f64>, plane: &CoxeterPlane) -> Result<Vec<ProjectedPoint>> {
    project_onto(rs, &plane.v1, &plane.w1, &plane.coxeter)
}

/// Distinct radii (ascending) with their multiplicities.
pub fn distinct_radii(points: &[ProjectedPoint], tol: f64) -> Vec<(f64, usize)> {
    let mut r: Vec<f64> = points.iter().map(|p| p.radius).collect();
    r.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, usize)> = Vec::new();
    for x in r {
        match out.last_mut() {
            Some((y, n)) if (x - *y).abs() <= tol => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct PlaneProjection {
    pub exponent: u32,
    pub points: Vec<ProjectedPoint>,
    /// The Coxeter element moves each projected root by `±2 pi m / h` about the origin.
    pub rotation_verified: bool,
}

/// One projection per rotation plane of the factorisation.
pub fn eigenplane_projections(
    rs: &RootSystem<f64>,
    fact: &CoxeterFactorization,
    w: &Versor<f64>,
) -> Result<Vec<PlaneProjection>> {
    let perm = root_permutation(rs.roots(), w)?;
    fact.planes
        .iter()
        .map(|p| {
            let points = project_onto(rs, &p.u, &p.v, w)?;
            let angle = 2.0 * PI * f64::from(p.exponents.0) / f64::from(fact.h);
            let rotated = |q: &ProjectedPoint, sign: f64| {
                let (s, c) = (sign * angle).sin_cos();
                (c * q.x - s * q.y, s * q.x + c * q.y)
            };
            let verify = |sign: f64| {
                points.iter().all(|q| {
                    let img = &points[perm[q.root_index]];
                    let (x, y) = rotated(q, sign);
                    (x - img.x).abs() < 1e-8 && (y - img.y).abs() < 1e-8
                })
            };
            Ok(PlaneProjection { exponent: p.exponents.0, rotation_verified: verify(1.0) || verify(-1.0), points })
        })
        .collect()
}
