//! Named systems with their simple roots, in exact coordinates.

use crate::error::{Error, Result};
use crate::roots::{close_roots, Metric, RootSystem, Vector};
use crate::scalars::QuadScalar;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub simple_roots: Vec<Vector<QuadScalar>>,
    pub metric: Metric,
    /// Radicand of the field used for square roots (0 for `Q`).
    pub field: u32,
    /// Simple-root order (1-based) used for the Coxeter element by default.
    pub default_order: Vec<usize>,
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn dim(&self) -> usize {
        self.simple_roots[0].dim()
    }

    pub fn close(&self) -> Result<RootSystem<QuadScalar>> {
        Ok(close_roots(&self.simple_roots, self.metric)?
            .with_name(self.name)
            .with_field(self.field))
    }
}

pub const NAMES: &[&str] = &["A1^3", "A3", "B3", "H3", "A4", "B4", "D4", "F4", "H4", "D6", "E8", "E8-cl8"];

fn vec(coords: &[&str]) -> Vector<QuadScalar> {
    Vector(coords.iter().map(|c| c.parse().expect("catalog scalar")).collect())
}

fn int_vec(coords: &[i64]) -> Vector<QuadScalar> {
    Vector(coords.iter().map(|&c| QuadScalar::from_int(c)).collect())
}

/// The four `H4` simple roots in the 4D golden-field embedding.
pub fn h4_simple_roots() -> Vec<Vector<QuadScalar>> {
    vec![
        vec(&["-1/2+1/2*t", "-1/2*t", "0", "-1/2"]),
        vec(&["0", "-1/2+1/2*t", "-1/2*t", "1/2"]),
        vec(&["0", "1/2", "-1/2+1/2*t", "-1/2*t"]),
        vec(&["0", "-1/2", "-1/2+1/2*t", "1/2*t"]),
    ]
}

/// `E8` simple roots in 4D golden coordinates, chain `1..7` with node 8 on node 5.
pub fn e8_reduced_simple_roots() -> Vec<Vector<QuadScalar>> {
    let a = h4_simple_roots();
    let t = QuadScalar::tau();
    vec![
        a[0].clone(),
        a[1].clone(),
        a[2].clone(),
        a[3].scale(&t),
        a[2].scale(&t),
        a[1].scale(&t),
        a[0].scale(&t),
        a[3].clone(),
    ]
}

fn natural(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let entry = |name, simple_roots: Vec<Vector<QuadScalar>>, metric, field, order: Option<Vec<usize>>| {
        let n = simple_roots.len();
        CatalogEntry {
            name,
            simple_roots,
            metric,
            field,
            default_order: order.unwrap_or_else(|| natural(n)),
        }
    };
    use Metric::Standard;
    let e = match name.to_ascii_uppercase().as_str() {
        "A1^3" | "A1XA1XA1" | "A1A1A1" => entry(
            "A1^3",
            vec![int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1])],
            Standard,
            0,
            None,
        ),
        "A3" => entry(
            "A3",
            vec![int_vec(&[1, -1, 0]), int_vec(&[0, 1, -1]), int_vec(&[0, 1, 1])],
            Standard,
            2,
            None,
        ),
        "B3" => entry(
            "B3",
            vec![int_vec(&[1, -1, 0]), int_vec(&[0, 1, -1]), int_vec(&[0, 0, 1])],
            Standard,
            2,
            None,
        ),
        "H3" => entry(
            "H3",
            vec![
                int_vec(&[0, 1, 0]),
                vec(&["1/2-1/2*t", "-1/2", "-1/2*t"]),
                int_vec(&[0, 0, 1]),
            ],
            Standard,
            5,
            None,
        ),
        "A4" => entry(
            "A4",
            vec![
                int_vec(&[-1, 1, 0, 0]),
                int_vec(&[0, -1, 1, 0]),
                int_vec(&[0, 0, -1, 1]),
                vec(&["1/2*t", "1/2*t", "1/2*t", "1/2*t-1"]),
            ],
            Standard,
            5,
            Some(vec![3, 1, 2, 4]),
        ),
        "B4" => entry(
            "B4",
            vec![
                int_vec(&[1, -1, 0, 0]),
                int_vec(&[0, 1, -1, 0]),
                int_vec(&[0, 0, 1, -1]),
                int_vec(&[0, 0, 0, 1]),
            ],
            Standard,
            2,
            None,
        ),
        "D4" => entry(
            "D4",
            vec![
                int_vec(&[1, 0, 0, 0]),
                int_vec(&[0, 1, 0, 0]),
                int_vec(&[0, 0, 1, 0]),
                vec(&["-1/2", "-1/2", "-1/2", "1/2"]),
            ],
            Standard,
            0,
            None,
        ),
        "F4" => entry(
            "F4",
            vec![
                int_vec(&[0, 1, -1, 0]),
                int_vec(&[0, 0, 1, -1]),
                int_vec(&[0, 0, 0, 1]),
                vec(&["1/2", "-1/2", "-1/2", "-1/2"]),
            ],
            Standard,
            2,
            None,
        ),
        "H4" => entry("H4", h4_simple_roots(), Standard, 5, None),
        "D6" => entry(
            "D6",
            vec![
                int_vec(&[1, -1, 0, 0, 0, 0]),
                int_vec(&[0, 1, -1, 0, 0, 0]),
                int_vec(&[0, 0, 1, -1, 0, 0]),
                int_vec(&[0, 0, 0, 1, -1, 0]),
                int_vec(&[0, 0, 0, 0, 1, -1]),
                int_vec(&[0, 0, 0, 0, 1, 1]),
            ],
            Standard,
            2,
            None,
        ),
        "E8" => entry("E8", e8_reduced_simple_roots(), Metric::ReducedTau, 5, None),
        "E8-CL8" | "E8CL8" => entry(
            "E8-cl8",
            vec![
                int_vec(&[0, 0, 0, 0, 0, -1, 1, 0]),
                int_vec(&[0, 0, 0, 0, -1, 1, 0, 0]),
                int_vec(&[0, 0, 0, -1, 1, 0, 0, 0]),
                int_vec(&[0, 0, -1, 1, 0, 0, 0, 0]),
                int_vec(&[0, -1, 1, 0, 0, 0, 0, 0]),
                int_vec(&[-1, 1, 0, 0, 0, 0, 0, 0]),
                vec(&["1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "1/2"]),
                int_vec(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ],
            Standard,
            2,
            Some(vec![2, 4, 6, 8, 3, 5, 1, 7]),
        ),
        _ => return Err(Error::UnknownSystem(name.to_string())),
    };
    Ok(e)
}

/// Parses `I2(n)`, returning `n`.
pub fn parse_dihedral(name: &str) -> Option<u32> {
    let inner = name.strip_prefix("I2(")?.strip_suffix(')')?;
    inner.parse().ok().filter(|&n| n >= 2)
}

/// Dihedral simple roots at angle `pi - pi/n`; float only.
pub fn dihedral_simple_roots(n: u32) -> Result<Vec<Vector<f64>>> {
    if n < 2 {
        return Err(Error::UnknownSystem(format!("I2({n})")));
    }
    let th = std::f64::consts::PI / f64::from(n);
    Ok(vec![Vector(vec![1.0, 0.0]), Vector(vec![-th.cos(), th.sin()])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::cartan_matrix;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            let e = lookup(n).unwrap();
            assert_eq!(e.default_order.len(), e.rank());
            let mut o = e.default_order.clone();
            o.sort_unstable();
            assert_eq!(o, natural(e.rank()));
        }
        assert!(matches!(lookup("Z9"), Err(Error::UnknownSystem(_))));
    }

    #[test]
    fn h4_roots_are_unit() {
        for a in h4_simple_roots() {
            assert_eq!(a.dot(&a), QuadScalar::one());
        }
    }

    #[test]
    fn a4_roots_share_one_length() {
        let e = lookup("A4").unwrap();
        for a in &e.simple_roots {
            assert_eq!(a.dot(a), QuadScalar::from_int(2));
        }
        let c = cartan_matrix(&e.simple_roots, Metric::Standard).unwrap();
        assert_eq!(c.entries[2][3], QuadScalar::from_int(-1));
        assert_eq!(c.entries[0][3], QuadScalar::zero());
    }

    #[test]
    fn dihedral_names() {
        assert_eq!(parse_dihedral("I2(5)"), Some(5));
        assert_eq!(parse_dihedral("I2(1)"), None);
        assert_eq!(parse_dihedral("H3"), None);
        assert_eq!(dihedral_simple_roots(4).unwrap().len(), 2);
    }

    use crate::scalars::Scalar;
}
