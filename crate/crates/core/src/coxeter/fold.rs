use crate::clifford::{Multivector, Versor};
use crate::error::{Error, Result};
use crate::roots::{RootSystem, Vector};

/// Largest order tried for a product of two folded generators.
pub const FOLD_ORDER_CAP: u32 = 60;

#[derive(Debug, Clone)]
pub struct FoldingMap {
    /// 1-based simple-root pairs.
    pub pairs: Vec<(usize, usize)>,
    pub folded_generators: Vec<Versor<f64>>,
    /// `m_ab`: order of `s_a s_b` acting on the roots (1 on the diagonal).
    pub target_coxeter_matrix: Vec<Vec<u32>>,
}

impl FoldingMap {
    /// Orders along consecutive generators, `m_{12}, m_{23}, ...`.
    pub fn chain_orders(&self) -> Vec<u32> {
        (1..self.pairs.len()).map(|i| self.target_coxeter_matrix[i - 1][i]).collect()
    }

    /// Product of the folded generators in the given (0-based) order.
    pub fn product(&self, order: &[usize]) -> Result<Multivector<f64>> {
        let dim = self.folded_generators[0].mv().dim();
        order.iter().try_fold(Multivector::one(dim), |acc, &i| {
            acc.geometric_product(self.folded_generators[i].mv())
        })
    }
}

/// Index of the root closest to `v` (within `1e-8`).
pub(crate) fn match_root(roots: &[Vector<f64>], v: &Vector<f64>) -> Option<usize> {
    roots
        .iter()
        .position(|r| r.0.iter().zip(&v.0).all(|(a, b)| (a - b).abs() < 1e-8))
}

/// Permutation of the root list under the sandwich action of `g`.
pub(crate) fn root_permutation(roots: &[Vector<f64>], g: &Versor<f64>) -> Result<Vec<usize>> {
    roots
        .iter()
        .map(|r| {
            let img = Vector(g.sandwich(&r.to_multivector())?.vector_part());
            match_root(roots, &img).ok_or_else(|| Error::Pipeline("versor action leaves the root set".into()))
        })
        .collect()
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // apply p, then q
    p.iter().map(|&i| q[i]).collect()
}

fn permutation_order(p: &[usize], cap: u32) -> Result<u32> {
    let mut acc = p.to_vec();
    for k in 1..=cap {
        if acc.iter().enumerate().all(|(i, &j)| i == j) {
            return Ok(k);
        }
        acc = compose(&acc, p);
    }
    Err(Error::OrderNotFound { cap: cap as usize })
}

fn unit(v: &Vector<f64>) -> Multivector<f64> {
    v.scale(&(1.0 / v.dot(v).sqrt())).to_multivector()
}

/// Replaces each orthogonal pair `(i, j)` by the generator `a_i a_j` and reads
/// off the Coxeter matrix of the group they generate.
///
/// `rs` is a float standard-metric system with simple roots.
pub fn fold_diagram(rs: &RootSystem<f64>, pairs: &[(usize, usize)]) -> Result<FoldingMap> {
    let simple = rs.simple_roots();
    let rank = simple.len();
    let mut folded_generators = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        if i == 0 || j == 0 || i > rank || j > rank || i == j {
            return Err(Error::InvalidOrder(vec![i, j]));
        }
        let (a, b) = (&simple[i - 1], &simple[j - 1]);
        if a.dot(b).abs() > 1e-9 {
            return Err(Error::NonOrthogonalPair(i, j));
        }
        folded_generators.push(Versor::new(&unit(a) * &unit(b))?);
    }
    let roots = rs.roots();
    let perms = folded_generators
        .iter()
        .map(|g| root_permutation(roots, g))
        .collect::<Result<Vec<_>>>()?;
    let k = perms.len();
    let mut matrix = vec![vec![1u32; k]; k];
    for a in 0..k {
        if permutation_order(&perms[a], 2)? != 2 {
            return Err(Error::Pipeline(format!("folded generator {} is not an involution", a + 1)));
        }
        for b in a + 1..k {
            let m = permutation_order(&compose(&perms[a], &perms[b]), FOLD_ORDER_CAP)?;
            matrix[a][b] = m;
            matrix[b][a] = m;
        }
    }
    Ok(FoldingMap { pairs: pairs.to_vec(), folded_generators, target_coxeter_matrix: matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_pair_is_an_involution() {
        let rs = catalog::lookup("A1^3").unwrap().close().unwrap().to_float().unwrap();
        let f = fold_diagram(&rs, &[(1, 2)]).unwrap();
        assert_eq!(f.target_coxeter_matrix, vec![vec![1]]);
    }

    #[test]
    fn adjacent_pair_is_rejected() {
        let rs = catalog::lookup("A4").unwrap().close().unwrap().to_float().unwrap();
        assert_eq!(fold_diagram(&rs, &[(2, 3)]).unwrap_err(), Error::NonOrthogonalPair(2, 3));
        let f = fold_diagram(&rs, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(f.chain_orders(), vec![5]);
    }

    #[test]
    fn identity_has_order_one() {
        assert_eq!(permutation_order(&[0, 1, 2], 5).unwrap(), 1);
        assert_eq!(permutation_order(&[1, 2, 0], 5).unwrap(), 3);
        assert!(permutation_order(&[1, 2, 0], 2).is_err());
    }
}
