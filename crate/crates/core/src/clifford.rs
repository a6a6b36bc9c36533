//! Dense multivectors of the Euclidean Clifford algebra `Cl(n)`, `1 <= n <= 8`.
//!
//! Coefficients are indexed by blade bitmask: bit `i` set means the basis
//! vector `e_{i+1}` is a factor, always in ascending order. Every basis vector
//! squares to `+1`, so a blade product only picks up the permutation sign.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub const MAX_DIM: usize = 8;

/// A basis blade `e_{i1} e_{i2} ... e_{ik}` with `i1 < i2 < ... < ik`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u16);

impl Blade {
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Sign of `self * other` after reordering into canonical order.
    pub fn product_sign(self, other: Blade) -> i8 {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `"1"` for the scalar blade, otherwise e.g. `"e13"`.
    pub fn label(self) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        let mut s = String::from("e");
        for i in 0..16 {
            if self.0 & (1 << i) != 0 {
                s.push_str(&(i + 1).to_string());
            }
        }
        s
    }

    pub fn parse(label: &str) -> Option<Blade> {
        if label == "1" {
            return Some(Blade(0));
        }
        let digits = label.strip_prefix('e')?;
        let mut mask = 0u16;
        let mut last = 0u32;
        for c in digits.chars() {
            let i = c.to_digit(10)?;
            if i == 0 || i <= last {
                return None;
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Some(Blade(mask))
    }
}

fn sign_table(dim: usize) -> &'static [i8] {
    static TABLES: [OnceLock<Vec<i8>>; MAX_DIM + 1] = [const { OnceLock::new() }; MAX_DIM + 1];
    TABLES[dim].get_or_init(|| {
        let size = 1usize << dim;
        let mut t = vec![0i8; size * size];
        for a in 0..size {
            for b in 0..size {
                t[(a << dim) | b] = Blade(a as u16).product_sign(Blade(b as u16));
            }
        }
        t
    })
}

/// Even or odd grade content of a homogeneous multivector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    dim: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "Cl({dim}) unsupported");
        Self { dim, coeffs: vec![S::zero(); 1 << dim] }
    }

    pub fn try_zero(dim: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self::zero(dim))
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[0] = s;
        m
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn blade(dim: usize, blade: Blade, s: S) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[blade.0 as usize] = s;
        m
    }

    /// Basis vector `e_{i+1}` (zero-based `i`).
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        Self::blade(dim, Blade(1 << i), S::one())
    }

    /// The unit pseudoscalar `e_1 e_2 ... e_n`.
    pub fn pseudoscalar(dim: usize) -> Self {
        Self::blade(dim, Blade(((1u32 << dim) - 1) as u16), S::one())
    }

    pub fn from_vector(coords: &[S]) -> Self {
        let mut m = Self::zero(coords.len());
        for (i, c) in coords.iter().enumerate() {
            m.coeffs[1 << i] = c.clone();
        }
        m
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != 1 << dim {
            return Err(Error::DimensionMismatch { left: 1 << dim, right: coeffs.len() });
        }
        Ok(Self { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &S {
        &self.coeffs[blade.0 as usize]
    }

    pub fn set(&mut self, blade: Blade, s: S) {
        self.coeffs[blade.0 as usize] = s;
    }

    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn vector_part(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.coeffs[1 << i].clone()).collect()
    }

    /// Non-zero terms in ascending bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Blade(m as u16), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn near_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.near_zero())
    }

    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms().map(|(b, _)| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn is_grade(&self, k: usize) -> bool {
        self.terms().all(|(b, c)| b.grade() == k || c.near_zero())
    }

    /// `None` for zero or mixed-parity multivectors.
    pub fn parity(&self) -> Option<Parity> {
        let mut even = false;
        let mut odd = false;
        for (b, c) in self.terms() {
            if c.near_zero() {
                continue;
            }
            if b.grade() % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let table = sign_table(n);
        let mut out = Self::zero(n);
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x.clone() * y;
                if table[(a << n) | b] > 0 {
                    out.coeffs[a ^ b] += &p;
                } else {
                    out.coeffs[a ^ b] -= &p;
                }
            }
        }
        Ok(out)
    }

    /// Outer product: the blade products with disjoint factors.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let table = sign_table(n);
        let mut out = Self::zero(n);
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() || a & b != 0 {
                    continue;
                }
                let p = x.clone() * y;
                if table[(a << n) | b] > 0 {
                    out.coeffs[a | b] += &p;
                } else {
                    out.coeffs[a | b] -= &p;
                }
            }
        }
        Ok(out)
    }

    /// Grade-`k` part multiplied by `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Self {
        self.map_by_grade(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Grade-`k` part multiplied by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_by_grade(|k| k % 2 == 1)
    }

    fn map_by_grade(&self, negate: impl Fn(usize) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if !c.is_zero() && negate(Blade(m as u16).grade()) {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        Self { dim: self.dim, coeffs }
    }

    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange { grade: k, dim: self.dim });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| if Blade(m as u16).grade() == k { c.clone() } else { S::zero() })
            .collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    /// Scalar part of `u v` for grade-1 arguments.
    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.check_dim(other)?;
        if !self.is_grade(1) || !other.is_grade(1) {
            return Err(Error::WrongGrade { expected: 1 });
        }
        let mut acc = S::zero();
        for i in 0..self.dim {
            acc += &(self.coeffs[1 << i].clone() * &other.coeffs[1 << i]);
        }
        Ok(acc)
    }

    /// Multiplication by `I = e1 e2 e3`.
    pub fn hodge_dual_3d(&self) -> Result<Self> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { left: self.dim, right: 3 });
        }
        self.geometric_product(&Self::pseudoscalar(3))
    }

    /// Scalar part of `x x~`; the squared norm for versors and vectors.
    pub fn norm_squared(&self) -> S {
        self.geometric_product(&self.reverse())
            .expect("same dimension")
            .coeffs
            .swap_remove(0)
    }

    pub fn scale(&self, s: &S) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.clone() * s).collect();
        Self { dim: self.dim, coeffs }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector { dim: self.dim, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn to_float(&self) -> Multivector<f64> {
        self.map(|c| c.to_f64())
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }

    /// `(blade label, coefficient text)` pairs in ascending bitmask order.
    pub fn to_text_pairs(&self) -> Vec<(String, String)> {
        self.terms().map(|(b, c)| (b.label(), c.render())).collect()
    }

    pub fn hash_key(&self) -> Vec<S::Key> {
        self.coeffs.iter().map(Scalar::key).collect()
    }
}

impl Multivector<f64> {
    /// Equality up to an absolute tolerance on every coefficient.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// Euclidean norm of the coefficient array.
    pub fn magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.to_text_pairs();
        if pairs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = pairs.iter().map(|(b, c)| format!("({c}){b}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.geometric_product(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b).collect();
        Multivector { dim: self.dim, coeffs }
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b).collect();
        Multivector { dim: self.dim, coeffs }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector { dim: self.dim, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// A homogeneous-parity product of vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Versor<S: Scalar> {
    mv: Multivector<S>,
    parity: Parity,
    normalized: bool,
}

impl<S: Scalar> Versor<S> {
    /// Wraps `mv`; marks it normalized when `mv mv~ = 1` (within tolerance for floats).
    pub fn new(mv: Multivector<S>) -> Result<Self> {
        let parity = mv.parity().ok_or(Error::MixedParity)?;
        let normalized = (mv.norm_squared() - S::one()).near_zero();
        Ok(Self { mv, parity, normalized })
    }

    /// Product of the given vectors, left to right.
    pub fn from_vectors(vectors: &[Multivector<S>]) -> Result<Self> {
        let first = vectors.first().ok_or(Error::ZeroRoot)?;
        let mut acc = Multivector::one(first.dim());
        for v in vectors {
            if !v.is_grade(1) {
                return Err(Error::WrongGrade { expected: 1 });
            }
            acc = acc.geometric_product(v)?;
        }
        Self::new(acc)
    }

    pub fn mv(&self) -> &Multivector<S> {
        &self.mv
    }

    pub fn into_mv(self) -> Multivector<S> {
        self.mv
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Divides by the exact (or float) square root of `A A~` in `Q(sqrt field)`.
    pub fn normalize_in(&self, field: u32) -> Result<Self> {
        let n2 = self.mv.norm_squared();
        let n = n2.sqrt_in(field).ok_or_else(|| Error::NoSquareRoot(n2.render()))?;
        let inv = S::one().checked_div(&n)?;
        Self::new(self.mv.scale(&inv))
    }

    /// `A~ v A` for even `A`, `-A~ v A` for odd `A`; requires a unit versor.
    pub fn sandwich(&self, v: &Multivector<S>) -> Result<Multivector<S>> {
        if !self.normalized {
            return Err(Error::NonUnitVersor);
        }
        if !v.is_grade(1) {
            return Err(Error::WrongGrade { expected: 1 });
        }
        let out = self.mv.reverse().geometric_product(v)?.geometric_product(&self.mv)?;
        Ok(match self.parity {
            Parity::Even => out,
            Parity::Odd => -&out,
        })
    }

    /// The same action for a non-unit versor, `±A^{-1} v A` with `A^{-1} = A~/(A A~)`.
    pub fn apply(&self, v: &Multivector<S>) -> Result<Multivector<S>> {
        if self.normalized {
            return self.sandwich(v);
        }
        let inv = S::one().checked_div(&self.mv.norm_squared())?;
        let out = self.mv.reverse().geometric_product(v)?.geometric_product(&self.mv)?.scale(&inv);
        Ok(match self.parity {
            Parity::Even => out,
            Parity::Odd => -&out,
        })
    }

    /// Matrix of the vector action; column `j` is the image of `e_{j+1}`.
    pub fn action_matrix(&self) -> Result<Vec<Vec<S>>> {
        let n = self.mv.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.apply(&Multivector::basis_vector(n, j))?.vector_part());
        }
        Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
    }
}

/// `cos(theta) + B sin(theta)` for a unit bivector `B` (`B^2 = -1`).
pub fn exp_bivector(b: &Multivector<f64>, theta: f64) -> Result<Versor<f64>> {
    if !b.is_grade(2) {
        return Err(Error::NotARotationPlane);
    }
    let sq = b * b;
    let minus_one = Multivector::scalar(b.dim(), -1.0);
    if !sq.approx_eq(&minus_one, 1e-10) {
        return Err(Error::NotARotationPlane);
    }
    let mv = &Multivector::scalar(b.dim(), theta.cos()) + &b.scale(&theta.sin());
    Versor::new(mv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QuadScalar;

    type Mv = Multivector<QuadScalar>;

    fn e(dim: usize, i: usize) -> Mv {
        Mv::basis_vector(dim, i - 1)
    }

    fn q(s: &str) -> QuadScalar {
        s.parse().unwrap()
    }

    fn h3_roots() -> [Mv; 3] {
        let a1 = e(3, 2);
        let a2 = Mv::from_vector(&[q("1/2-1/2*t"), q("-1/2"), q("-1/2*t")]);
        let a3 = e(3, 3);
        [a1, a2, a3]
    }

    #[test]
    fn basis_products() {
        assert_eq!(&e(3, 1) * &e(3, 1), Mv::one(3));
        let e12 = Mv::blade(3, Blade(0b011), QuadScalar::one());
        assert_eq!(&e(3, 1) * &e(3, 2), e12);
        assert_eq!(&e(3, 2) * &e(3, 1), -&e12);
    }

    #[test]
    fn h3_root_products_match_printed_spinors() {
        let [a1, a2, a3] = h3_roots();
        // -1/2 (1 - (t-1) e12 + t e23)
        let mut want = Mv::scalar(3, q("-1/2"));
        want.set(Blade(0b011), q("1/2*t-1/2"));
        want.set(Blade(0b110), q("-1/2*t"));
        assert_eq!(&a1 * &a2, want);
        // -1/2 (t - (t-1) e31 + e23), e31 = -e13
        let mut want = Mv::scalar(3, q("-1/2*t"));
        want.set(Blade(0b101), q("1/2-1/2*t"));
        want.set(Blade(0b110), q("-1/2"));
        assert_eq!(&a2 * &a3, want);
    }

    #[test]
    fn reverse_examples() {
        let s = Mv::scalar(3, q("3/2"));
        assert_eq!(s.reverse(), s);
        let e12 = &e(3, 1) * &e(3, 2);
        assert_eq!(e12.reverse(), &e(3, 2) * &e(3, 1));
        let [a1, a2, a3] = h3_roots();
        let fwd = &(&a1 * &a2) * &a3;
        let back = &(&a3 * &a2) * &a1;
        assert_eq!(fwd.reverse(), back);
    }

    #[test]
    fn sandwich_reflects() {
        let a = Versor::new(e(3, 1)).unwrap();
        assert_eq!(a.sandwich(&e(3, 1)).unwrap(), -&e(3, 1));
        assert_eq!(a.sandwich(&e(3, 3)).unwrap(), e(3, 3));
        let two = Versor::new(e(3, 1).scale(&QuadScalar::from_int(2))).unwrap();
        assert_eq!(two.sandwich(&e(3, 3)), Err(Error::NonUnitVersor));
        assert_eq!(two.apply(&e(3, 1)).unwrap(), -&e(3, 1));
    }

    #[test]
    fn exp_bivector_examples() {
        let e12 = Multivector::<f64>::blade(2, Blade(0b11), 1.0);
        for n in 3..=12 {
            let th = std::f64::consts::PI / n as f64;
            let r = exp_bivector(&e12, th).unwrap();
            assert!((r.mv().scalar_part() - th.cos()).abs() < 1e-15);
            assert!((r.mv().coeff(Blade(0b11)) - th.sin()).abs() < 1e-15);
        }
        assert!(exp_bivector(&e12, 0.0).unwrap().mv().approx_eq(&Multivector::one(2), 0.0));
        let p = exp_bivector(&e12, 0.7).unwrap();
        let m = exp_bivector(&e12, -0.7).unwrap();
        assert!((p.mv() * m.mv()).approx_eq(&Multivector::one(2), 1e-15));
        let not_unit = e12.scale(&2.0);
        assert_eq!(exp_bivector(&not_unit, 0.3).unwrap_err(), Error::NotARotationPlane);
    }

    #[test]
    fn small_helpers() {
        assert_eq!(e(3, 1).inner_product(&e(3, 2)).unwrap(), QuadScalar::zero());
        assert_eq!(Mv::one(3).hodge_dual_3d().unwrap(), Mv::pseudoscalar(3));
        assert!(Mv::one(4).hodge_dual_3d().is_err());
        assert!(Mv::one(3).grade_project(4).is_err());
        assert_eq!(Blade(0b101).label(), "e13");
        assert_eq!(Blade::parse("e13"), Some(Blade(0b101)));
        assert_eq!(Blade::parse("e31"), None);
        assert!(e(3, 1).geometric_product(&e(4, 1)).is_err());
        let w = e(3, 1).wedge(&e(3, 1)).unwrap();
        assert!(w.is_zero());
    }
}
