//! Coxeter elements as versors and what can be read off them.

mod factorize;
mod fold;
mod plane;
mod project;

pub use factorize::{factorize_versor, CoxeterFactorization, EigenPlane};
pub use fold::{fold_diagram, FoldingMap, FOLD_ORDER_CAP};
pub use plane::{bicolor, coxeter_plane, pf_eigenvector, CoxeterPlane};
pub use project::{distinct_radii, eigenplane_projections, project_onto, project_to_plane, PlaneProjection, ProjectedPoint};

use crate::clifford::{Multivector, Versor};
use crate::error::{Error, Result};
use crate::roots::{Metric, RootSystem, Vector};
use crate::scalars::Scalar;

/// Largest power tried when looking for `W^h = ±1`.
pub const ORDER_CAP: u32 = 1000;
pub const ORDER_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CoxeterVersor<S: Scalar> {
    /// Normalised product in the input scalar layer.
    pub exact: Versor<S>,
    pub w: Versor<f64>,
    pub order_h: u32,
    /// Sign of `W^h`.
    pub power_sign: i8,
    /// 1-based simple-root indices, in product order.
    pub simple_root_order: Vec<usize>,
}

fn check_order(order: &[usize], rank: usize) -> Result<()> {
    let mut seen = vec![false; rank];
    if order.len() != rank {
        return Err(Error::InvalidOrder(order.to_vec()));
    }
    for &i in order {
        if i == 0 || i > rank || std::mem::replace(&mut seen[i - 1], true) {
            return Err(Error::InvalidOrder(order.to_vec()));
        }
    }
    Ok(())
}

/// `Some(±1)` when every coefficient of `m` is within `tol` of `±1` (scalar) or 0.
pub fn is_plus_minus_one(m: &Multivector<f64>, tol: f64) -> Option<i8> {
    let c = m.coeffs();
    if c[1..].iter().any(|x| x.abs() > tol) {
        return None;
    }
    if (c[0] - 1.0).abs() <= tol {
        Some(1)
    } else if (c[0] + 1.0).abs() <= tol {
        Some(-1)
    } else {
        None
    }
}

/// Smallest `h` with `W^h = ±1`.
pub fn versor_order(w: &Multivector<f64>) -> Result<(u32, i8)> {
    let mut acc = w.clone();
    for h in 1..=ORDER_CAP {
        if let Some(s) = is_plus_minus_one(&acc, ORDER_TOL) {
            return Ok((h, s));
        }
        acc = &acc * w;
    }
    Err(Error::OrderNotFound { cap: ORDER_CAP as usize })
}

/// Product of the simple roots in `order` (1-based), scaled to a unit versor.
///
/// Systems under the reduced metric must be flattened to a standard-metric
/// system first (see `RootSystem::to_standard_form`).
pub fn coxeter_versor<S: Scalar>(rs: &RootSystem<S>, order: &[usize]) -> Result<CoxeterVersor<S>> {
    if rs.metric() != Metric::Standard {
        return Err(Error::NeedsGoldenField);
    }
    let simple = rs.simple_roots();
    check_order(order, simple.len())?;
    let factors: Vec<Multivector<S>> = order.iter().map(|&i| simple[i - 1].to_multivector()).collect();
    let raw = Versor::from_vectors(&factors)?;
    let exact = raw.normalize_in(rs.field()).or_else(|_| {
        // no exact square root of the product of norms: normalise each factor instead
        let unit = crate::induction::unit_generators(
            &order.iter().map(|&i| simple[i - 1].clone()).collect::<Vec<_>>(),
            rs.field(),
        )?;
        Versor::from_vectors(&unit)
    })?;
    let w = Versor::new(exact.mv().to_float())?;
    let (order_h, power_sign) = versor_order(w.mv())?;
    Ok(CoxeterVersor { exact, w, order_h, power_sign, simple_root_order: order.to_vec() })
}

/// Float-only Coxeter versor from unnormalised float simple roots.
pub fn coxeter_versor_float(simple: &[Vector<f64>], order: &[usize]) -> Result<CoxeterVersor<f64>> {
    let rs = RootSystem::from_roots(simple[0].dim(), simple.to_vec(), Metric::Standard)
        .with_simple_roots(simple.to_vec());
    coxeter_versor(&rs, order)
}

/// White simple roots followed by black ones, for a bicoloured tree diagram.
pub fn bipartite_order<S: Scalar>(rs: &RootSystem<S>) -> Result<Vec<usize>> {
    let a = rs.cartan_matrix()?;
    let (white, black) = bicolor(&crate::roots::extract_diagram(&a)?)?;
    Ok(white.into_iter().chain(black).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn order_validation() {
        assert!(check_order(&[2, 1, 3], 3).is_ok());
        assert_eq!(check_order(&[1, 1, 3], 3), Err(Error::InvalidOrder(vec![1, 1, 3])));
        assert!(check_order(&[1, 2], 3).is_err());
        assert!(check_order(&[0, 1, 2], 3).is_err());
    }

    #[test]
    fn dihedral_closed_form() {
        for n in 3..=12u32 {
            let simple = catalog::dihedral_simple_roots(n).unwrap();
            let cv = coxeter_versor_float(&simple, &[1, 2]).unwrap();
            let th = std::f64::consts::PI / f64::from(n);
            let c = cv.w.mv().coeffs();
            assert!((c[0] + th.cos()).abs() < 1e-12);
            assert!((c[3] - th.sin()).abs() < 1e-12);
            assert_eq!(cv.order_h, n);
        }
    }

    #[test]
    fn h3_versor_is_exact() {
        let rs = catalog::lookup("H3").unwrap().close().unwrap();
        let cv = coxeter_versor(&rs, &[1, 2, 3]).unwrap();
        let two_w = cv.exact.mv().scale(&crate::scalars::QuadScalar::from_int(2));
        let pairs = two_w.to_text_pairs();
        assert_eq!(
            pairs,
            vec![
                ("e2".to_string(), "-t".to_string()),
                ("e3".to_string(), "-1".to_string()),
                ("e123".to_string(), "-1+t".to_string()),
            ]
        );
        assert_eq!(cv.order_h, 10);
    }
}
