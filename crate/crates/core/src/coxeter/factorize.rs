use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::clifford::{exp_bivector, Multivector};
use crate::error::{Error, Result};
use crate::roots::Vector;
use crate::scalars::Scalar;

use super::plane::plane_bivector;
use super::CoxeterVersor;

pub const RESIDUAL_TOL: f64 = 1e-8;
pub const EXPONENT_TOL: f64 = 1e-6;
const EIGEN_TOL: f64 = 1e-6;

/// One invariant plane of the Coxeter element.
#[derive(Debug, Clone)]
pub struct EigenPlane {
    /// Unit bivector oriented so that `exp(theta/2 B)` reproduces the action.
    pub bivector: Multivector<f64>,
    /// Rotation angle in `(0, pi)`.
    pub theta: f64,
    pub exponents: (u32, u32),
    /// Orthonormal pair with `u -> cos(theta) u + sin(theta) v`.
    pub u: Vector<f64>,
    pub v: Vector<f64>,
}

#[derive(Debug, Clone)]
pub struct CoxeterFactorization {
    pub h: u32,
    pub planes: Vec<EigenPlane>,
    /// Orthonormal pairs spanning the `-1` eigenspace; factor `u1 u2` each.
    pub reflection_pairs: Vec<(Vector<f64>, Vector<f64>)>,
    /// Left over `-1` eigenvector in odd dimension; factor is the vector itself.
    pub lone_reflection: Option<Vector<f64>>,
    pub residual: f64,
}

impl CoxeterFactorization {
    /// Exponents in ascending order, `h/2` once per reflection direction.
    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.planes.iter().flat_map(|p| [p.exponents.0, p.exponents.1]).collect();
        let flips = 2 * self.reflection_pairs.len() + usize::from(self.lone_reflection.is_some());
        e.extend(std::iter::repeat_n(self.h / 2, flips));
        e.sort_unstable();
        e
    }

    /// Largest grade-0 or grade-2 coefficient of `B_i B_j` over distinct planes.
    pub fn max_plane_overlap(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.planes.iter().enumerate() {
            for b in &self.planes[i + 1..] {
                let p = &a.bivector * &b.bivector;
                for (blade, c) in p.terms() {
                    if blade.grade() == 0 || blade.grade() == 2 {
                        worst = worst.max(c.abs());
                    }
                }
            }
        }
        worst
    }

    /// Factors multiplied back together.
    pub fn reassemble(&self, dim: usize) -> Result<Multivector<f64>> {
        let mut acc = Multivector::one(dim);
        for p in &self.planes {
            acc = acc.geometric_product(exp_bivector(&p.bivector, p.theta / 2.0)?.mv())?;
        }
        for (u1, u2) in &self.reflection_pairs {
            acc = acc.geometric_product(&(&u1.to_multivector() * &u2.to_multivector()))?;
        }
        if let Some(u) = &self.lone_reflection {
            acc = acc.geometric_product(&u.to_multivector())?;
        }
        Ok(acc)
    }
}

fn apply(m: &DMatrix<f64>, u: &Vector<f64>) -> Vector<f64> {
    let n = u.dim();
    Vector((0..n).map(|i| (0..n).map(|j| m[(i, j)] * u.0[j]).sum()).collect())
}

fn norm(u: &Vector<f64>) -> f64 {
    u.dot(u).sqrt()
}

/// Orthonormal vectors of `space` completing `used` inside it, picked greedily.
fn next_direction(space: &[Vector<f64>], used: &[Vector<f64>]) -> Option<Vector<f64>> {
    space.iter().find_map(|e| {
        let mut r = e.clone();
        for q in used {
            r = r.sub(&q.scale(&r.dot(q)));
        }
        let n = norm(&r);
        (n > 1e-6).then(|| r.scale(&(1.0 / n)))
    })
}

/// Splits `W` into commuting rotations in orthogonal planes and reflection factors.
///
/// The action matrix `M` is orthogonal, so its symmetric part `(M + M^T)/2` has
/// eigenvalue `cos(theta)` on each rotation plane and `±1` on the fixed and
/// flipped directions, which gives the block decomposition without a Schur step.
pub fn factorize_versor<S: Scalar>(cv: &CoxeterVersor<S>) -> Result<CoxeterFactorization> {
    let w = &cv.w;
    let h = cv.order_h;
    let rows = w.action_matrix()?;
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let sym = (&m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut groups: Vec<(f64, Vec<Vector<f64>>)> = Vec::new();
    for i in idx {
        let lambda = eig.eigenvalues[i];
        let vec = Vector(eig.eigenvectors.column(i).iter().copied().collect());
        match groups.last_mut() {
            Some((l, vs)) if (lambda - *l).abs() < EIGEN_TOL => vs.push(vec),
            _ => groups.push((lambda, vec![vec])),
        }
    }

    let mut planes = Vec::new();
    let mut minus_one = Vec::new();
    for (lambda, space) in groups {
        if lambda > 1.0 - EIGEN_TOL {
            return Err(Error::FixedVector);
        }
        if lambda < -1.0 + EIGEN_TOL {
            let mut used: Vec<Vector<f64>> = Vec::new();
            while let Some(u) = next_direction(&space, &used) {
                used.push(u);
            }
            minus_one.extend(used);
            continue;
        }
        let theta = lambda.clamp(-1.0, 1.0).acos();
        let (c, s) = (theta.cos(), theta.sin());
        let mut used: Vec<Vector<f64>> = Vec::new();
        while let Some(u) = next_direction(&space, &used) {
            let v = apply(&m, &u).sub(&u.scale(&c)).scale(&(1.0 / s));
            let mut bivector = plane_bivector(&u, &v)?;
            let r = exp_bivector(&bivector, theta / 2.0)?;
            let image = Vector(r.sandwich(&u.to_multivector())?.vector_part());
            let target = u.scale(&c).add(&v.scale(&s));
            if norm(&image.sub(&target)) > 1e-8 {
                bivector = -&bivector;
            }
            let mf = theta * f64::from(h) / (2.0 * PI);
            let mi = mf.round();
            if (mf - mi).abs() > EXPONENT_TOL {
                return Err(Error::NonIntegerExponent(mf));
            }
            let mi = mi as u32;
            used.push(u.clone());
            used.push(v.clone());
            planes.push(EigenPlane { bivector, theta, exponents: (mi, h - mi), u, v });
        }
    }
    planes.sort_by_key(|a| a.exponents);

    let mut reflection_pairs = Vec::new();
    let mut it = minus_one.into_iter();
    let mut lone_reflection = None;
    while let Some(u1) = it.next() {
        match it.next() {
            Some(u2) => reflection_pairs.push((u1, u2)),
            None => lone_reflection = Some(u1),
        }
    }

    let mut f = CoxeterFactorization { h, planes, reflection_pairs, lone_reflection, residual: f64::INFINITY };
    let product = f.reassemble(n)?;
    let plus = product.max_abs_diff(w.mv());
    let minus = product.max_abs_diff(&-w.mv());
    f.residual = plus.min(minus);
    if f.residual > RESIDUAL_TOL {
        return Err(Error::ResidualTooLarge(f.residual));
    }
    Ok(f)
}
