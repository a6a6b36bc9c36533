use std::collections::VecDeque;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::clifford::{Multivector, Versor};
use crate::error::{Error, Result};
use crate::roots::{extract_diagram, CartanMatrix, CoxeterDiagram, RootSystem, Vector};
use crate::scalars::Scalar;

use super::coxeter_versor;

/// The plane on which the Coxeter element acts as rotation by `2 pi / h`.
#[derive(Debug, Clone)]
pub struct CoxeterPlane {
    /// Unit bivector, `B_C^2 = -1`.
    pub b_c: Multivector<f64>,
    pub v1: Vector<f64>,
    pub w1: Vector<f64>,
    pub pf_vector: Vec<f64>,
    /// 1-based simple-root indices of each colour class.
    pub white: Vec<usize>,
    pub black: Vec<usize>,
    /// Coxeter versor in bipartite order (white roots, then black).
    pub coxeter: Versor<f64>,
}

impl CoxeterPlane {
    /// `W~ B_C W` equals `B_C` coefficientwise within `tol`.
    pub fn invariant_under(&self, w: &Versor<f64>, tol: f64) -> bool {
        let image = &(&w.mv().reverse() * &self.b_c) * w.mv();
        image.approx_eq(&self.b_c, tol)
    }
}

/// Two-colouring of a forest by breadth-first traversal from the lowest node of each tree.
pub fn bicolor(d: &CoxeterDiagram) -> Result<(Vec<usize>, Vec<usize>)> {
    if !d.is_forest() {
        return Err(Error::CyclicDiagram);
    }
    let mut colour: Vec<Option<bool>> = vec![None; d.nodes.iter().max().map_or(0, |&m| m + 1)];
    for &start in &d.nodes {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            let c = colour[n].expect("coloured on push");
            for m in d.neighbours(n) {
                if colour[m].is_none() {
                    colour[m] = Some(!c);
                    queue.push_back(m);
                }
            }
        }
    }
    let white = d.nodes.iter().copied().filter(|&n| colour[n] == Some(true)).collect();
    let black = d.nodes.iter().copied().filter(|&n| colour[n] == Some(false)).collect();
    Ok((white, black))
}

fn components(d: &CoxeterDiagram) -> Vec<Vec<usize>> {
    let mut seen = vec![false; d.nodes.len() + 1];
    let mut out = Vec::new();
    for (pos, &start) in d.nodes.iter().enumerate() {
        if seen[pos] {
            continue;
        }
        let mut comp = vec![pos];
        seen[pos] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            for m in d.neighbours(n) {
                let p = d.nodes.iter().position(|&x| x == m).expect("edge endpoint is a node");
                if !seen[p] {
                    seen[p] = true;
                    comp.push(p);
                    queue.push_back(m);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Positive eigenvector of the Cartan matrix for its smallest eigenvalue, first entry 1.
///
/// The symmetrised matrix is diagonalised and the result rescaled by the
/// relative root lengths, which recovers the eigenvector of `A` itself.
/// Reducible diagrams get one such vector per connected component.
pub fn pf_eigenvector<S: Scalar>(a: &CartanMatrix<S>) -> Result<Vec<f64>> {
    let f = a.to_f64();
    let sym = a.symmetrized();
    let d = extract_diagram(a)?;
    let k = f.len();
    let mut out = vec![0.0; k];
    for comp in components(&d) {
        let n = comp.len();
        let m = DMatrix::from_fn(n, n, |i, j| sym[comp[i]][comp[j]]);
        let eig = SymmetricEigen::new(m);
        let (imin, _) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.total_cmp(y.1))
            .expect("non-empty component");
        let mut x: Vec<f64> = eig.eigenvectors.column(imin).iter().copied().collect();
        if x[0] < 0.0 {
            x.iter_mut().for_each(|c| *c = -*c);
        }
        // squared lengths relative to the first node: |a_j|^2/|a_i|^2 = A_ji/A_ij along bonds
        let mut len2 = vec![f64::NAN; n];
        len2[0] = 1.0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if len2[j].is_nan() && f[comp[i]][comp[j]].abs() > 1e-12 {
                    len2[j] = len2[i] * f[comp[j]][comp[i]] / f[comp[i]][comp[j]];
                    queue.push_back(j);
                }
            }
        }
        let scaled: Vec<f64> = x.iter().zip(&len2).map(|(c, l)| c * l.sqrt()).collect();
        if scaled.iter().any(|&c| c <= 1e-12) {
            return Err(Error::NonPositivePerronFrobenius);
        }
        for (p, &i) in comp.iter().enumerate() {
            out[i] = scaled[p] / scaled[0];
        }
    }
    Ok(out)
}

/// Reciprocal frame `a^i` with `a^i . a_j = delta_ij`, within the span of the roots.
pub fn reciprocal_frame(simple: &[Vector<f64>]) -> Result<Vec<Vector<f64>>> {
    let k = simple.len();
    let g = DMatrix::from_fn(k, k, |i, j| simple[i].dot(&simple[j]));
    let inv = g.try_inverse().ok_or(Error::DegenerateSimpleRoots)?;
    Ok((0..k)
        .map(|i| {
            let mut v = Vector::zero(simple[0].dim());
            for j in 0..k {
                v = v.add(&simple[j].scale(&inv[(i, j)]));
            }
            v
        })
        .collect())
}

/// Unit bivector of the plane spanned by `u` and `v`.
pub fn plane_bivector(u: &Vector<f64>, v: &Vector<f64>) -> Result<Multivector<f64>> {
    let b = u.to_multivector().wedge(&v.to_multivector())?;
    let n2 = -(&b * &b).scalar_part();
    if n2 <= 1e-24 {
        return Err(Error::DegeneratePlane);
    }
    Ok(b.scale(&(1.0 / n2.sqrt())))
}

/// Coxeter plane from the Perron-Frobenius vector and the reciprocal frame.
///
/// `rs` must use the standard metric (flatten reduced systems first).
pub fn coxeter_plane<S: Scalar>(rs: &RootSystem<S>, a: &CartanMatrix<S>) -> Result<CoxeterPlane> {
    let (white, black) = bicolor(&extract_diagram(a)?)?;
    let pf_vector = pf_eigenvector(a)?;
    let simple: Vec<Vector<f64>> = rs.simple_roots().iter().map(Vector::to_float).collect();
    let recip = reciprocal_frame(&simple)?;
    let combo = |nodes: &[usize]| {
        nodes
            .iter()
            .fold(Vector::zero(rs.dim()), |acc, &i| acc.add(&recip[i - 1].scale(&pf_vector[i - 1])))
    };
    let v1 = combo(&white);
    let w1 = combo(&black);
    let b_c = plane_bivector(&v1, &w1)?;
    let order: Vec<usize> = white.iter().chain(&black).copied().collect();
    let coxeter = coxeter_versor(rs, &order)?.w;
    Ok(CoxeterPlane { b_c, v1, w1, pf_vector, white, black, coxeter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::roots::cartan_matrix;

    const TAU: f64 = 1.618_033_988_749_895;

    #[test]
    fn pf_of_a4_is_golden() {
        let e = catalog::lookup("A4").unwrap();
        let a = cartan_matrix(&e.simple_roots, e.metric).unwrap();
        let c = pf_eigenvector(&a).unwrap();
        for (x, want) in c.iter().zip([1.0, TAU, TAU, 1.0]) {
            assert!((x - want).abs() < 1e-10, "{c:?}");
        }
    }

    #[test]
    fn pf_small_cases() {
        let a1 = CartanMatrix { labels: vec![1], entries: vec![vec![2.0]] };
        assert_eq!(pf_eigenvector(&a1).unwrap(), vec![1.0]);
        let a2 = CartanMatrix { labels: vec![1, 2], entries: vec![vec![2.0, -1.0], vec![-1.0, 2.0]] };
        let c = pf_eigenvector(&a2).unwrap();
        assert!((c[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pf_of_b3_is_an_eigenvector_of_the_cartan_matrix() {
        let e = catalog::lookup("B3").unwrap();
        let a = cartan_matrix(&e.simple_roots, e.metric).unwrap();
        let c = pf_eigenvector(&a).unwrap();
        let f = a.to_f64();
        let ac: Vec<f64> = (0..3).map(|i| (0..3).map(|j| f[i][j] * c[j]).sum()).collect();
        let lambda = ac[0] / c[0];
        for i in 0..3 {
            assert!((ac[i] - lambda * c[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn affine_a2_is_cyclic() {
        let d = CoxeterDiagram { nodes: vec![1, 2, 3], edges: vec![(1, 2, 3), (2, 3, 3), (1, 3, 3)] };
        assert_eq!(bicolor(&d), Err(Error::CyclicDiagram));
    }

    #[test]
    fn chain_colouring_alternates() {
        let d = CoxeterDiagram { nodes: vec![1, 2, 3, 4], edges: vec![(1, 2, 3), (2, 3, 3), (3, 4, 3)] };
        assert_eq!(bicolor(&d).unwrap(), (vec![1, 3], vec![2, 4]));
    }

    #[test]
    fn dihedral_plane_is_e12() {
        let simple = catalog::dihedral_simple_roots(7).unwrap();
        let rs = RootSystem::from_roots(2, simple.clone(), crate::roots::Metric::Standard).with_simple_roots(simple);
        let a = rs.cartan_matrix().unwrap();
        let p = coxeter_plane(&rs, &a).unwrap();
        assert!((p.b_c.coeffs()[3].abs() - 1.0).abs() < 1e-12);
        assert!(p.invariant_under(&p.coxeter, 1e-9));
    }
}
