//! Root systems: reflection closure, Cartan matrices, Coxeter diagrams and
//! verification of the root-system axioms, under either the standard pairing
//! or the reduced pairing `(a + tau b)_tau = a` on golden-field vectors.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_rational::BigRational;

use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::scalars::{QuadScalar, Scalar};

/// Closure gives up past this many roots.
pub const CLOSURE_CAP: usize = 10_000;

/// A coordinate vector over a scalar layer.
#[derive(Clone, PartialEq)]
pub struct Vector<S>(pub Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![S::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::near_zero)
    }

    pub fn dot(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a.clone() * b);
            }
        }
        acc
    }

    pub fn scale(&self, s: &S) -> Self {
        Self(self.0.iter().map(|c| c.clone() * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn key(&self) -> Vec<S::Key> {
        self.0.iter().map(Scalar::key).collect()
    }

    pub fn to_multivector(&self) -> Multivector<S> {
        Multivector::from_vector(&self.0)
    }

    pub fn to_float(&self) -> Vector<f64> {
        Vector(self.0.iter().map(Scalar::to_f64).collect())
    }

    /// `Some(c)` with `other = c * self`, when the two are parallel.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        let k = self.0.iter().position(|c| !c.near_zero())?;
        let c = other.0[k].checked_div(&self.0[k]).ok()?;
        let parallel = self
            .0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| (a.clone() * &c - b).near_zero());
        parallel.then_some(c)
    }

    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(Scalar::render).collect()
    }
}

impl<S: Scalar> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// The bilinear form roots are reflected in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Standard,
    /// Keep only the rational part of the golden-field pairing written in the
    /// basis `{1, tau}`.
    ReducedTau,
}

impl Metric {
    pub fn pair<S: Scalar>(self, x: &Vector<S>, y: &Vector<S>) -> Result<S> {
        let d = x.dot(y);
        match self {
            Metric::Standard => Ok(d),
            Metric::ReducedTau => d.reduce_tau(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Standard => "standard",
            Metric::ReducedTau => "reduced",
        }
    }
}

/// `lambda - 2 (lambda|alpha)/(alpha|alpha) alpha` in the chosen metric.
pub fn reflect<S: Scalar>(lambda: &Vector<S>, alpha: &Vector<S>, metric: Metric) -> Result<Vector<S>> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let aa = metric.pair(alpha, alpha)?;
    if aa.near_zero() {
        return Err(Error::ZeroReducedNorm);
    }
    let la = metric.pair(lambda, alpha)?;
    if la.is_zero() {
        return Ok(lambda.clone());
    }
    let c = (la.clone() + &la).checked_div(&aa)?;
    Ok(lambda.sub(&alpha.scale(&c)))
}

/// The tau-free part of the golden-field dot product.
pub fn reduced_inner_product(x: &Vector<QuadScalar>, y: &Vector<QuadScalar>) -> Result<BigRational> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { left: x.dim(), right: y.dim() });
    }
    let (p, _) = x.dot(y).to_tau_basis()?;
    Ok(p)
}

/// Splits each coordinate `p + q tau` into `(p_1..p_n, q_1..q_n)`.
///
/// The standard rational dot product of two flattened vectors equals their
/// reduced inner product, because `tau^2 = tau + 1` has rational part 1.
pub fn flatten_tau(x: &Vector<QuadScalar>) -> Result<Vec<BigRational>> {
    let n = x.dim();
    let mut out = vec![BigRational::from_integer(0.into()); 2 * n];
    for (i, c) in x.0.iter().enumerate() {
        let (p, q) = c.to_tau_basis()?;
        out[i] = p;
        out[n + i] = q;
    }
    Ok(out)
}

/// Rational-coded vector of a flattened golden-field vector.
pub fn flatten_tau_vector(x: &Vector<QuadScalar>) -> Result<Vector<QuadScalar>> {
    Ok(Vector(flatten_tau(x)?.into_iter().map(QuadScalar::rational).collect()))
}

#[derive(Clone)]
pub struct RootSystem<S: Scalar> {
    dim: usize,
    simple_roots: Vec<Vector<S>>,
    roots: Vec<Vector<S>>,
    index: HashMap<Vec<S::Key>, usize>,
    metric: Metric,
    field: u32,
    name: Option<String>,
}

impl<S: Scalar> fmt::Debug for RootSystem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("rank", &self.simple_roots.len())
            .field("roots", &self.roots.len())
            .field("metric", &self.metric)
            .finish()
    }
}

fn infer_field<S: Scalar>(vs: &[Vector<S>]) -> u32 {
    vs.iter().flat_map(|v| v.0.iter()).map(Scalar::field).max().unwrap_or(0)
}

/// Smallest reflection-closed set containing the simple roots.
///
/// Only simple reflections are applied; they generate the whole group, so the
/// orbit of the simple roots under them is the full root set.
pub fn close_roots<S: Scalar>(simple_roots: &[Vector<S>], metric: Metric) -> Result<RootSystem<S>> {
    close_roots_capped(simple_roots, metric, CLOSURE_CAP)
}

pub fn close_roots_capped<S: Scalar>(simple_roots: &[Vector<S>], metric: Metric, cap: usize) -> Result<RootSystem<S>> {
    let dim = simple_roots.first().ok_or(Error::DegenerateSimpleRoots)?.dim();
    for (i, a) in simple_roots.iter().enumerate() {
        if a.is_zero() || a.dim() != dim {
            return Err(Error::DegenerateSimpleRoots);
        }
        if simple_roots[..i].iter().any(|b| b.key() == a.key()) {
            return Err(Error::DegenerateSimpleRoots);
        }
    }
    let mut rs = RootSystem::empty(dim, metric);
    rs.field = infer_field(simple_roots);
    rs.simple_roots = simple_roots.to_vec();
    let mut queue = VecDeque::new();
    for a in simple_roots {
        if rs.insert(a.clone()) {
            queue.push_back(a.clone());
        }
    }
    while let Some(r) = queue.pop_front() {
        for a in simple_roots {
            let img = reflect(&r, a, metric)?;
            if rs.insert(img.clone()) {
                if rs.roots.len() > cap {
                    return Err(Error::ClosureCap { cap });
                }
                queue.push_back(img);
            }
        }
    }
    Ok(rs)
}

impl<S: Scalar> RootSystem<S> {
    fn empty(dim: usize, metric: Metric) -> Self {
        Self {
            dim,
            simple_roots: Vec::new(),
            roots: Vec::new(),
            index: HashMap::new(),
            metric,
            field: 0,
            name: None,
        }
    }

    /// A root system given by its full root set (no simple roots recorded).
    pub fn from_roots(dim: usize, roots: Vec<Vector<S>>, metric: Metric) -> Self {
        let mut rs = Self::empty(dim, metric);
        rs.field = infer_field(&roots);
        for r in roots {
            rs.insert(r);
        }
        rs
    }

    fn insert(&mut self, v: Vector<S>) -> bool {
        let key = v.key();
        if self.index.contains_key(&key) {
            return false;
        }
        self.index.insert(key, self.roots.len());
        self.roots.push(v);
        true
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Field in which normalisation square roots are taken.
    pub fn with_field(mut self, field: u32) -> Self {
        self.field = field;
        self
    }

    pub fn with_simple_roots(mut self, simple: Vec<Vector<S>>) -> Self {
        self.simple_roots = simple;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vector<S>] {
        &self.simple_roots
    }

    pub fn roots(&self) -> &[Vector<S>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn index_of(&self, v: &Vector<S>) -> Option<usize> {
        self.index.get(&v.key()).copied()
    }

    pub fn contains(&self, v: &Vector<S>) -> bool {
        self.index_of(v).is_some()
    }

    /// Root sets compared as sets.
    pub fn same_roots(&self, other: &Self) -> bool {
        self.len() == other.len() && other.roots.iter().all(|r| self.contains(r))
    }

    pub fn cartan_matrix(&self) -> Result<CartanMatrix<S>> {
        cartan_matrix(&self.simple_roots, self.metric)
    }

    /// Coefficients of `root` in the simple-root basis.
    pub fn simple_coordinates(&self, root: &Vector<S>) -> Result<Vec<S>> {
        let k = self.simple_roots.len();
        let mut gram = vec![vec![S::zero(); k + 1]; k];
        for i in 0..k {
            for j in 0..k {
                gram[i][j] = self.metric.pair(&self.simple_roots[i], &self.simple_roots[j])?;
            }
            gram[i][k] = self.metric.pair(&self.simple_roots[i], root)?;
        }
        let c = solve_augmented(gram)?;
        let mut back = Vector::zero(self.dim);
        for (ci, a) in c.iter().zip(&self.simple_roots) {
            back = back.add(&a.scale(ci));
        }
        if back.sub(root).is_zero() {
            Ok(c)
        } else {
            Err(Error::Pipeline("root outside the span of the simple roots".into()))
        }
    }

    pub fn to_float(&self) -> Result<RootSystem<f64>> {
        if self.metric == Metric::ReducedTau {
            return Err(Error::NeedsGoldenField);
        }
        let conv = |v: &Vector<S>| v.to_float();
        let mut rs = RootSystem::from_roots(self.dim, self.roots.iter().map(conv).collect(), Metric::Standard)
            .with_simple_roots(self.simple_roots.iter().map(conv).collect());
        rs.name = self.name.clone();
        Ok(rs)
    }
}

impl RootSystem<QuadScalar> {
    /// The same system in rational coordinates of twice the dimension, where
    /// the reduced pairing becomes the standard one.
    pub fn flatten_tau(&self) -> Result<RootSystem<QuadScalar>> {
        let roots = self.roots.iter().map(flatten_tau_vector).collect::<Result<Vec<_>>>()?;
        let simple = self.simple_roots.iter().map(flatten_tau_vector).collect::<Result<Vec<_>>>()?;
        let mut rs = RootSystem::from_roots(2 * self.dim, roots, Metric::Standard).with_simple_roots(simple);
        rs.name = self.name.clone();
        Ok(rs)
    }

    /// This system if it already uses the standard metric, else its flattening.
    pub fn to_standard_form(&self) -> Result<RootSystem<QuadScalar>> {
        match self.metric {
            Metric::Standard => Ok(self.clone()),
            Metric::ReducedTau => Ok(self.flatten_tau()?.with_field(self.field)),
        }
    }

    /// Float coordinates with the standard metric, flattening reduced systems first.
    pub fn to_standard_float(&self) -> Result<RootSystem<f64>> {
        match self.metric {
            Metric::Standard => self.to_float(),
            Metric::ReducedTau => self.flatten_tau()?.to_float(),
        }
    }
}

fn solve_augmented<S: Scalar>(mut m: Vec<Vec<S>>) -> Result<Vec<S>> {
    let k = m.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].near_zero()).ok_or(Error::DegenerateSimpleRoots)?;
        m.swap(col, pivot);
        let inv = S::one().checked_div(&m[col][col])?;
        for c in col..=k {
            m[col][c] = m[col][c].clone() * &inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let delta = f.clone() * &m[col][c];
                    m[r][c] -= &delta;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[k].clone()).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CartanMatrix<S> {
    pub labels: Vec<usize>,
    pub entries: Vec<Vec<S>>,
}

/// `A_ij = 2 (a_i|a_j) / (a_j|a_j)`.
pub fn cartan_matrix<S: Scalar>(simple_roots: &[Vector<S>], metric: Metric) -> Result<CartanMatrix<S>> {
    let k = simple_roots.len();
    let mut entries = vec![vec![S::zero(); k]; k];
    for j in 0..k {
        let jj = metric.pair(&simple_roots[j], &simple_roots[j])?;
        for i in 0..k {
            let ij = metric.pair(&simple_roots[i], &simple_roots[j])?;
            entries[i][j] = (ij.clone() + &ij).checked_div(&jj)?;
        }
    }
    Ok(CartanMatrix { labels: (1..=k).collect(), entries })
}

impl<S: Scalar> CartanMatrix<S> {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries.iter().map(|r| r.iter().map(Scalar::to_f64).collect()).collect()
    }

    /// `sign(A_ij) sqrt(A_ij A_ji)`, i.e. twice the Gram matrix of unit roots.
    pub fn symmetrized(&self) -> Vec<Vec<f64>> {
        let a = self.to_f64();
        let k = a.len();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let p = (a[i][j] * a[j][i]).max(0.0).sqrt();
                        if a[i][j] < 0.0 {
                            -p
                        } else {
                            p
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Nodes are simple-root indices (1-based); edges carry the bond order `m >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize, u32)>,
}

impl CoxeterDiagram {
    pub fn neighbours(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j, _)| {
            if i == node {
                Some(j)
            } else if j == node {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
            .map_or(2, |e| e.2)
    }

    pub fn is_forest(&self) -> bool {
        let mut parent: HashMap<usize, usize> = self.nodes.iter().map(|&n| (n, n)).collect();
        fn find(p: &mut HashMap<usize, usize>, x: usize) -> usize {
            let up = p[&x];
            if up == x {
                return x;
            }
            let r = find(p, up);
            p.insert(x, r);
            r
        }
        for &(i, j, _) in &self.edges {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                return false;
            }
            parent.insert(ri, rj);
        }
        true
    }
}

/// Largest bond order recognised by [`extract_diagram`].
pub const MAX_BOND: u32 = 60;

/// Reads bond orders from `A_ij A_ji = 4 cos^2(pi/m)`.
pub fn extract_diagram<S: Scalar>(a: &CartanMatrix<S>) -> Result<CoxeterDiagram> {
    let f = a.to_f64();
    let k = f.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let p = f[i][j] * f[j][i];
            let m = (2..=MAX_BOND)
                .find(|&m| {
                    let c = (std::f64::consts::PI / f64::from(m)).cos();
                    (p - 4.0 * c * c).abs() < 1e-9
                })
                .ok_or(Error::UnrecognizedAngle(p))?;
            if m > 2 {
                if f[i][j] > 0.0 {
                    return Err(Error::UnrecognizedAngle(p));
                }
                edges.push((a.labels[i], a.labels[j], m));
            }
        }
    }
    Ok(CoxeterDiagram { nodes: a.labels.clone(), edges })
}

/// Counterexample found by [`verify_root_axioms`].
#[derive(Debug, Clone, PartialEq)]
pub enum AxiomWitness<S: Scalar> {
    MissingNegative(Vector<S>),
    ScalarMultiple { root: Vector<S>, multiple: Vector<S> },
    NotClosed { root: Vector<S>, mirror: Vector<S>, image: Vector<S> },
    BadExpansion { root: Vector<S>, coefficients: Vec<S> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Check<S: Scalar> {
    Pass,
    Fail(AxiomWitness<S>),
    Skipped,
}

impl<S: Scalar> Check<S> {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&AxiomWitness<S>> {
        match self {
            Check::Fail(w) => Some(w),
            _ => None,
        }
    }
}

/// Outcome of the axiom checks.
///
/// No-multiples is reported over the coordinate field and over `Q`. For the
/// reduced metric the rational reading is the one that applies: `rho` and
/// `tau rho` are independent over `Q` and both appear in the `E8` set.
#[derive(Debug, Clone)]
pub struct RootAxiomReport<S: Scalar> {
    pub metric: Metric,
    pub negatives: Check<S>,
    pub multiples_over_field: Check<S>,
    pub multiples_over_rationals: Check<S>,
    pub reflection_closed: Check<S>,
    pub simple_expansion: Check<S>,
}

impl<S: Scalar> RootAxiomReport<S> {
    pub fn axiom1(&self) -> bool {
        let multiples = match self.metric {
            Metric::Standard => &self.multiples_over_field,
            Metric::ReducedTau => &self.multiples_over_rationals,
        };
        self.negatives.passed() && multiples.passed()
    }

    pub fn axiom2(&self) -> bool {
        self.reflection_closed.passed()
    }

    pub fn passes(&self) -> bool {
        self.axiom1() && self.axiom2()
    }
}

pub fn verify_root_axioms<S: Scalar>(rs: &RootSystem<S>) -> RootAxiomReport<S> {
    let roots = rs.roots();
    let negatives = roots
        .iter()
        .find(|r| !rs.contains(&r.neg()))
        .map_or(Check::Pass, |r| Check::Fail(AxiomWitness::MissingNegative(r.clone())));

    let mut over_field = Check::Pass;
    let mut over_q = Check::Pass;
    'outer: for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            let Some(c) = a.ratio_to(b) else { continue };
            if (c.clone() + S::one()).near_zero() || (c.clone() - S::one()).near_zero() {
                continue;
            }
            let w = AxiomWitness::ScalarMultiple { root: a.clone(), multiple: b.clone() };
            if over_field.passed() {
                over_field = Check::Fail(w.clone());
            }
            if c.is_rational() && over_q.passed() {
                over_q = Check::Fail(w);
                break 'outer;
            }
        }
    }

    let mut closed = Check::Pass;
    'closure: for mirror in roots {
        for r in roots {
            match reflect(r, mirror, rs.metric()) {
                Ok(img) if rs.contains(&img) => {}
                Ok(img) => {
                    closed = Check::Fail(AxiomWitness::NotClosed {
                        root: r.clone(),
                        mirror: mirror.clone(),
                        image: img,
                    });
                    break 'closure;
                }
                Err(_) => {
                    closed = Check::Fail(AxiomWitness::NotClosed {
                        root: r.clone(),
                        mirror: mirror.clone(),
                        image: Vector::zero(rs.dim()),
                    });
                    break 'closure;
                }
            }
        }
    }

    let simple_expansion = if rs.rank() == 0 {
        Check::Skipped
    } else {
        let mut out = Check::Pass;
        for r in roots {
            let coefficients = match rs.simple_coordinates(r) {
                Ok(c) => c,
                Err(_) => {
                    out = Check::Fail(AxiomWitness::BadExpansion { root: r.clone(), coefficients: vec![] });
                    break;
                }
            };
            let integral = coefficients.iter().all(Scalar::is_integral);
            let signs: Vec<i8> = coefficients.iter().map(Scalar::signum).filter(|&s| s != 0).collect();
            let uniform = signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0);
            if !integral || !uniform {
                out = Check::Fail(AxiomWitness::BadExpansion { root: r.clone(), coefficients });
                break;
            }
        }
        out
    };

    RootAxiomReport {
        metric: rs.metric(),
        negatives,
        multiples_over_field: over_field,
        multiples_over_rationals: over_q,
        reflection_closed: closed,
        simple_expansion,
    }
}
