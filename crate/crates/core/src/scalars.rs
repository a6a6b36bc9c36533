//! Scalar layer: exact arithmetic in real quadratic fields `Q(sqrt d)` and a
//! binary64 stand-in with the same [`Scalar`] interface.
//!
//! [`QuadScalar`] stores `a + b*sqrt(d)` with arbitrary-precision rational
//! coefficients. A value whose irrational part vanishes is a plain rational and
//! belongs to every field; its `d` is normalised to `0`. Two values with
//! non-zero irrational parts over different `d` cannot be combined.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Tolerance used by the float layer for "is this zero" decisions.
pub const FLOAT_EPS: f64 = 1e-9;

/// Operations every coefficient type of the algebra must provide.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Hashable identity; exact for exact layers, rounded for floats.
    type Key: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact zero test (`== 0.0` for floats).
    fn is_zero(&self) -> bool;
    /// Zero up to the layer's tolerance.
    fn near_zero(&self) -> bool;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    /// Square root inside `Q(sqrt field)` when one exists.
    fn sqrt_in(&self, field: u32) -> Option<Self>;
    /// -1, 0 or 1 (0 for near-zero floats).
    fn signum(&self) -> i8;
    /// Membership of `Z`, or of `Z[tau]` for golden-field values.
    fn is_integral(&self) -> bool;
    /// Whether the value lies in `Q` (floats always report true).
    fn is_rational(&self) -> bool;
    fn to_f64(&self) -> f64;
    fn key(&self) -> Self::Key;
    /// The tau-free part `a` of `a + b*tau`.
    fn reduce_tau(&self) -> Result<Self>;
    /// Radicand of the field the value lives in, 0 when rational or float.
    fn field(&self) -> u32;
    /// Text form used in CSV/JSON output.
    fn render(&self) -> String;
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn is_square_free(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

fn join_fields(left: u32, right: u32) -> Result<u32> {
    match (left, right) {
        (0, d) | (d, 0) => Ok(d),
        (l, r) if l == r => Ok(l),
        (l, r) => Err(Error::FieldMismatch { left: l, right: r }),
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact element `a + b*sqrt(d)` of a real quadratic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: BigRational,
    b: BigRational,
    d: u32,
}

impl QuadScalar {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::NotSquareFree(d));
        }
        Ok(Self::canonical(a, b, d))
    }

    fn canonical(a: BigRational, b: BigRational, d: u32) -> Self {
        let d = if b.is_zero() { 0 } else { d };
        Self { a, b, d }
    }

    pub fn rational(a: BigRational) -> Self {
        Self::canonical(a, BigRational::zero(), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(ratio(num, den))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: u32) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    /// The golden ratio `(1 + sqrt 5)/2`.
    pub fn tau() -> Self {
        Self::canonical(ratio(1, 2), ratio(1, 2), 5)
    }

    /// The Galois conjugate of tau, `(1 - sqrt 5)/2`.
    pub fn sigma() -> Self {
        Self::canonical(ratio(1, 2), ratio(-1, 2), 5)
    }

    /// Builds `p + q*tau`.
    pub fn from_tau_basis(p: BigRational, q: BigRational) -> Self {
        let half = ratio(1, 2);
        let b = &q * &half;
        Self::canonical(p + &b, b, 5)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// `Some(d)` when the value has a non-zero irrational part.
    pub fn radicand(&self) -> Option<u32> {
        (self.d != 0).then_some(self.d)
    }

    /// Coordinates `(p, q)` with `self = p + q*tau`.
    pub fn to_tau_basis(&self) -> Result<(BigRational, BigRational)> {
        match self.d {
            0 | 5 => {
                let q = &self.b * BigRational::from_integer(2.into());
                Ok((&self.a - &self.b, q))
            }
            d => Err(Error::FieldMismatch { left: d, right: 5 }),
        }
    }

    /// Galois conjugation `b -> -b`.
    pub fn conjugate(&self) -> Self {
        Self::canonical(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.into()) * &self.b * &self.b
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let d = join_fields(self.d, rhs.d)?;
        Ok(Self::canonical(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let d = join_fields(self.d, rhs.d)?;
        Ok(Self::canonical(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let d = join_fields(self.d, rhs.d)?;
        if self.d == 0 && rhs.d == 0 {
            return Ok(Self::rational(&self.a * &rhs.a));
        }
        let dd = BigRational::from_integer(d.into());
        let a = &self.a * &rhs.a + dd * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        Ok(Self::canonical(a, b, d))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.a / &n, -(&self.b / &n), self.d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Exact sign of `a + b*sqrt(d)`.
    pub fn sign(&self) -> i8 {
        fn s(r: &BigRational) -> i8 {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        }
        let (sa, sb) = (s(&self.a), s(&self.b));
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = BigRational::from_integer(self.d.into()) * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.d == 0 {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * f64::from(self.d).sqrt()
    }

    /// `a+b*sqrt(d)` form.
    pub fn to_sqrt_string(&self) -> String {
        let sym = format!("sqrt({})", self.d);
        render_terms(&self.a, &self.b, &sym)
    }

    /// `p+q*t` form (`t` = tau). Fails outside `Q(sqrt 5)`.
    pub fn to_tau_string(&self) -> Result<String> {
        let (p, q) = self.to_tau_basis()?;
        Ok(render_terms(&p, &q, "t"))
    }

    fn sqrt_exact(&self, field: u32) -> Option<Self> {
        if !self.b.is_zero() {
            return None;
        }
        if let Some(r) = rational_sqrt(&self.a) {
            return Some(Self::rational(r));
        }
        if field >= 2 && is_square_free(field) {
            let scaled = &self.a / BigRational::from_integer(field.into());
            return rational_sqrt(&scaled).map(|r| Self::canonical(BigRational::zero(), r, field));
        }
        None
    }
}

fn render_terms(a: &BigRational, b: &BigRational, sym: &str) -> String {
    if b.is_zero() {
        return format_rational(a);
    }
    let coeff = if b.is_one() {
        sym.to_string()
    } else if *b == -BigRational::one() {
        format!("-{sym}")
    } else {
        format!("{}*{sym}", format_rational(b))
    };
    if a.is_zero() {
        coeff
    } else if coeff.starts_with('-') {
        format!("{}{coeff}", format_rational(a))
    } else {
        format!("{}+{coeff}", format_rational(a))
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            5 => f.write_str(&self.to_tau_string().expect("golden field")),
            _ => f.write_str(&self.to_sqrt_string()),
        }
    }
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::from_int(0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        Self::canonical(-self.a, -self.b, self.d)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, rhs: &QuadScalar) {
        self.d = join_fields(self.d, rhs.d).unwrap_or_else(|e| panic!("{e}"));
        self.a += &rhs.a;
        self.b += &rhs.b;
        if self.b.is_zero() {
            self.d = 0;
        }
    }
}

impl SubAssign<&QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, rhs: &QuadScalar) {
        self.d = join_fields(self.d, rhs.d).unwrap_or_else(|e| panic!("{e}"));
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        if self.b.is_zero() {
            self.d = 0;
        }
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for QuadScalar {
    fn from(r: BigRational) -> Self {
        Self::rational(r)
    }
}

impl Scalar for QuadScalar {
    type Key = QuadScalar;

    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        QuadScalar::from_ratio(num, den)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn near_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        QuadScalar::checked_div(self, rhs)
    }
    fn sqrt_in(&self, field: u32) -> Option<Self> {
        self.sqrt_exact(field)
    }
    fn signum(&self) -> i8 {
        self.sign()
    }
    fn is_integral(&self) -> bool {
        match self.d {
            0 => self.a.is_integer(),
            5 => self
                .to_tau_basis()
                .map(|(p, q)| p.is_integer() && q.is_integer())
                .unwrap_or(false),
            _ => false,
        }
    }
    fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
    fn to_f64(&self) -> f64 {
        QuadScalar::to_f64(self)
    }
    fn key(&self) -> Self::Key {
        self.clone()
    }
    fn reduce_tau(&self) -> Result<Self> {
        let (p, _) = self.to_tau_basis()?;
        Ok(Self::rational(p))
    }
    fn field(&self) -> u32 {
        self.d
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Binary64 scalar layer. Comparisons go through explicit tolerances.
pub type FloatScalar = f64;

/// 12 significant digits, no exponent for desk-scale magnitudes.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || x.abs() < 1e-300 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-6..=15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

impl Scalar for f64 {
    type Key = i64;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn near_zero(&self) -> bool {
        self.abs() < FLOAT_EPS
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.near_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
    fn sqrt_in(&self, _field: u32) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn signum(&self) -> i8 {
        if self.near_zero() {
            0
        } else if *self > 0.0 {
            1
        } else {
            -1
        }
    }
    fn is_integral(&self) -> bool {
        (self - self.round()).abs() < 1e-6
    }
    fn is_rational(&self) -> bool {
        true
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn key(&self) -> i64 {
        (self * 1e8).round() as i64
    }
    fn reduce_tau(&self) -> Result<Self> {
        Err(Error::NeedsGoldenField)
    }
    fn field(&self) -> u32 {
        0
    }
    fn render(&self) -> String {
        format_float(*self)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }
    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }
    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.s[start..self.pos])
                .expect("ascii")
                .parse()
                .expect("digits")
        })
    }
    fn rational(&mut self) -> Result<Option<BigRational>, String> {
        let Some(n) = self.integer() else {
            return Ok(None);
        };
        if self.eat("/") {
            let d = self.integer().ok_or("expected denominator")?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            return Ok(Some(BigRational::new(n, d)));
        }
        Ok(Some(BigRational::from_integer(n)))
    }
}

enum Atom {
    Tau,
    Sigma,
    Sqrt(u32),
}

impl FromStr for QuadScalar {
    type Err = String;

    /// Parses `a+b*sqrt(d)` or `p+q*t` (terms in any order, spaces ignored);
    /// `s` stands for `sigma = 1 - tau`.
    fn from_str(s: &str) -> Result<Self, String> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err("empty scalar".into());
        }
        let mut cur = Cursor { s: cleaned.as_bytes(), pos: 0 };
        let mut acc = QuadScalar::zero();
        let mut first = true;
        while cur.peek().is_some() {
            let negative = if cur.eat("-") {
                true
            } else {
                if !cur.eat("+") && !first {
                    return Err(format!("expected sign at offset {}", cur.pos));
                }
                false
            };
            first = false;
            let coeff = cur.rational()?;
            let atom = if coeff.is_none() || cur.eat("*") {
                if cur.eat("tau") || cur.eat("t") {
                    Some(Atom::Tau)
                } else if cur.eat("sqrt(") {
                    let d = cur.integer().ok_or("expected radicand")?;
                    if !cur.eat(")") {
                        return Err("unclosed sqrt(".into());
                    }
                    let d = d.to_u32().ok_or("radicand too large")?;
                    Some(Atom::Sqrt(d))
                } else if cur.eat("sigma") || cur.eat("s") {
                    Some(Atom::Sigma)
                } else {
                    return Err(format!("unexpected input at offset {}", cur.pos));
                }
            } else {
                None
            };
            let c = coeff.unwrap_or_else(BigRational::one);
            let term = match atom {
                None => QuadScalar::rational(c),
                Some(Atom::Tau) => QuadScalar::from_tau_basis(BigRational::zero(), c),
                Some(Atom::Sigma) => QuadScalar::from_tau_basis(c.clone(), -c),
                Some(Atom::Sqrt(d)) => {
                    QuadScalar::new(BigRational::zero(), c, d).map_err(|e| e.to_string())?
                }
            };
            let term = if negative { -term } else { term };
            acc = acc.checked_add(&term).map_err(|e| e.to_string())?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadScalar {
        s.parse().unwrap()
    }

    #[test]
    fn tau_squared_is_tau_plus_one() {
        let t = QuadScalar::tau();
        let sq = t.checked_mul(&t).unwrap();
        assert_eq!(*sq.rational_part(), ratio(3, 2));
        assert_eq!(*sq.irrational_part(), ratio(1, 2));
        assert_eq!(sq, t.clone() + QuadScalar::one());
    }

    #[test]
    fn multiplicative_identity() {
        let x = q("3/7-2/3*sqrt(5)");
        assert_eq!(x.checked_mul(&QuadScalar::one()).unwrap(), x);
    }

    #[test]
    fn sigma_times_tau_is_minus_one() {
        let p = QuadScalar::sigma().checked_mul(&QuadScalar::tau()).unwrap();
        assert_eq!(p, QuadScalar::from_int(-1));
        assert_eq!(p.radicand(), None);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let r2 = QuadScalar::sqrt_of(2).unwrap();
        let r5 = QuadScalar::sqrt_of(5).unwrap();
        assert_eq!(r2.checked_mul(&r5), Err(Error::FieldMismatch { left: 2, right: 5 }));
        assert!(r2.checked_add(&r5).is_err());
        // rationals embed in every field
        assert!(r2.checked_mul(&QuadScalar::from_ratio(1, 2)).is_ok());
    }

    #[test]
    fn non_square_free_radicand_rejected() {
        assert_eq!(QuadScalar::sqrt_of(8), Err(Error::NotSquareFree(8)));
        assert!(QuadScalar::sqrt_of(1).is_err());
    }

    #[test]
    fn rational_part_examples() {
        assert_eq!(*q("3/2+1/2*sqrt(5)").rational_part(), ratio(3, 2));
        assert_eq!(*QuadScalar::zero().rational_part(), ratio(0, 1));
        let minus_half_tau = -(QuadScalar::tau() * QuadScalar::from_ratio(1, 2));
        assert_eq!(minus_half_tau, q("-1/4-1/4*sqrt(5)"));
        assert_eq!(*minus_half_tau.rational_part(), ratio(-1, 4));
    }

    #[test]
    fn tau_basis_examples() {
        assert_eq!(QuadScalar::tau().to_tau_basis().unwrap(), (ratio(0, 1), ratio(1, 1)));
        let x = -(QuadScalar::tau() * QuadScalar::from_ratio(1, 2));
        assert_eq!(x.to_tau_basis().unwrap(), (ratio(0, 1), ratio(-1, 2)));
        let two_tau_plus_one = QuadScalar::tau() * QuadScalar::from_int(2) + QuadScalar::one();
        let y = -(two_tau_plus_one * QuadScalar::from_ratio(1, 2));
        assert_eq!(y.to_tau_basis().unwrap(), (ratio(-1, 2), ratio(-1, 1)));
        assert!(q("1+sqrt(2)").to_tau_basis().is_err());
    }

    #[test]
    fn inverse_and_sign() {
        let t = QuadScalar::tau();
        assert_eq!(t.inverse().unwrap(), t.clone() - QuadScalar::one());
        assert_eq!(QuadScalar::from_int(2).inverse().unwrap(), QuadScalar::from_ratio(1, 2));
        assert_eq!(QuadScalar::zero().inverse(), Err(Error::DivisionByZero));
        assert_eq!(QuadScalar::sigma().sign(), -1);
        assert_eq!(t.sign(), 1);
        assert_eq!(q("3-sqrt(5)").sign(), 1);
        assert_eq!(q("2-sqrt(5)").sign(), -1);
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(QuadScalar::from_ratio(9, 4).sqrt_in(0), Some(QuadScalar::from_ratio(3, 2)));
        assert_eq!(QuadScalar::from_int(2).sqrt_in(2), Some(QuadScalar::sqrt_of(2).unwrap()));
        assert_eq!(QuadScalar::from_int(8).sqrt_in(2), Some(q("2*sqrt(2)")));
        assert_eq!(QuadScalar::from_int(2).sqrt_in(5), None);
        assert_eq!(QuadScalar::from_int(-4).sqrt_in(0), None);
    }

    #[test]
    fn text_forms() {
        assert_eq!(QuadScalar::tau().to_string(), "t");
        assert_eq!(QuadScalar::sigma().to_string(), "1-t");
        assert_eq!(q("3/2+1/2*sqrt(5)").to_sqrt_string(), "3/2+1/2*sqrt(5)");
        assert_eq!(q("-1/2*sqrt(2)").to_string(), "-1/2*sqrt(2)");
        assert_eq!(q("-1/2-t").to_tau_string().unwrap(), "-1/2-t");
        assert_eq!(q("2*t-1"), q("sqrt(5)"));
        assert!("1+".parse::<QuadScalar>().is_err());
        assert!("sqrt(4)".parse::<QuadScalar>().is_err());
        assert!("1/0".parse::<QuadScalar>().is_err());
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(format_float(1.5), "1.5");
        assert_eq!(format_float(1.618033988749895), "1.61803398875");
        assert_eq!(format_float(-21.771), "-21.771");
    }
}
