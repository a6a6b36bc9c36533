//! Pinor groups generated by 3D root systems and the 4D root systems they
//! induce by reading the spinor components `(e12, e23, e31, 1)` as a 4D vector.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::catalog;
use crate::clifford::{Blade, Multivector, Parity, Versor};
use crate::error::{Error, Result};
use crate::roots::{cartan_matrix, close_roots, verify_root_axioms, CartanMatrix, Metric, RootAxiomReport, RootSystem, Vector};
use crate::scalars::{QuadScalar, Scalar};

/// Group closure gives up past this many elements.
pub const GROUP_CAP: usize = 10_000;

const E23: Blade = Blade(0b110);
const E13: Blade = Blade(0b101);
const E12: Blade = Blade(0b011);

/// A finite set of unit versors closed under the geometric product.
#[derive(Debug, Clone)]
pub struct VersorGroup<S: Scalar> {
    dim: usize,
    elements: Vec<Multivector<S>>,
    index: HashMap<Vec<S::Key>, usize>,
}

impl<S: Scalar> VersorGroup<S> {
    pub fn from_elements(dim: usize, elements: impl IntoIterator<Item = Multivector<S>>) -> Self {
        let mut g = Self { dim, elements: Vec::new(), index: HashMap::new() };
        for e in elements {
            g.insert(e);
        }
        g
    }

    fn insert(&mut self, m: Multivector<S>) -> bool {
        let key = m.hash_key();
        if self.index.contains_key(&key) {
            return false;
        }
        self.index.insert(key, self.elements.len());
        self.elements.push(m);
        true
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Multivector<S>] {
        &self.elements
    }

    pub fn index_of(&self, m: &Multivector<S>) -> Option<usize> {
        self.index.get(&m.hash_key()).copied()
    }

    pub fn contains(&self, m: &Multivector<S>) -> bool {
        self.index_of(m).is_some()
    }

    /// Elements of the even subalgebra, in their original order.
    pub fn even_part(&self) -> Self {
        Self::from_elements(
            self.dim,
            self.elements.iter().filter(|m| m.parity() == Some(Parity::Even)).cloned(),
        )
    }

    pub fn odd_part(&self) -> Vec<Multivector<S>> {
        self.elements.iter().filter(|m| m.parity() == Some(Parity::Odd)).cloned().collect()
    }

    /// First product `a b` that falls outside the set, if any.
    pub fn closure_witness(&self) -> Option<(usize, usize)> {
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if !self.contains(&(a * b)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.closure_witness().is_none()
    }

    /// Left and right multiplication by every element permutes the set.
    pub fn symmetric_under_multiplication(&self) -> bool {
        self.elements.iter().all(|g| {
            let mut left = vec![false; self.len()];
            let mut right = vec![false; self.len()];
            for x in &self.elements {
                match (self.index_of(&(g * x)), self.index_of(&(x * g))) {
                    (Some(l), Some(r)) => {
                        left[l] = true;
                        right[r] = true;
                    }
                    _ => return false,
                }
            }
            left.into_iter().chain(right).all(|b| b)
        })
    }

    /// Conjugacy classes `{g^-1 x g}`, sorted by size, then scalar part, then first member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let inverses: Vec<Multivector<S>> = self.elements.iter().map(Multivector::reverse).collect();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for x in 0..self.len() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for (g, gi) in self.elements.iter().zip(&inverses) {
                let c = &(gi * &self.elements[x]) * g;
                let k = self.index_of(&c).expect("conjugate of a group element lies in the group");
                if class_of[k] == usize::MAX {
                    class_of[k] = id;
                    members.push(k);
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: x, members });
        }
        let scalar = |c: &ConjugacyClass| self.elements[c.representative].scalar_part().to_f64();
        classes.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then(scalar(a).total_cmp(&scalar(b)))
                .then(a.representative.cmp(&b.representative))
        });
        classes
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.elements.iter().map(multivector_json).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index of the first member in the group's element order.
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn multivector_json<S: Scalar>(m: &Multivector<S>) -> Value {
    Value::Array(m.to_text_pairs().into_iter().map(|(b, c)| json!([b, c])).collect())
}

pub fn classes_json<S: Scalar>(group: &VersorGroup<S>, classes: &[ConjugacyClass]) -> Value {
    Value::Array(
        classes
            .iter()
            .map(|c| {
                json!({
                    "size": c.size(),
                    "representative": multivector_json(&group.elements()[c.representative]),
                })
            })
            .collect(),
    )
}

/// Simple roots scaled to unit length, taking square roots in `Q(sqrt field)`.
pub fn unit_generators<S: Scalar>(simple_roots: &[Vector<S>], field: u32) -> Result<Vec<Multivector<S>>> {
    simple_roots
        .iter()
        .map(|a| {
            let n2 = a.dot(a);
            if n2.near_zero() {
                return Err(Error::ZeroRoot);
            }
            let n = n2.sqrt_in(field).ok_or_else(|| Error::NoSquareRoot(n2.render()))?;
            Ok(a.scale(&S::one().checked_div(&n)?).to_multivector())
        })
        .collect()
}

/// All products of the unit simple roots, found breadth-first from `1`.
///
/// Square roots for normalisation are taken in the system's field.
pub fn pinor_closure<S: Scalar>(rs: &RootSystem<S>) -> Result<VersorGroup<S>> {
    pinor_closure_of(rs.simple_roots(), rs.field())
}

pub fn pinor_closure_of<S: Scalar>(simple_roots: &[Vector<S>], field: u32) -> Result<VersorGroup<S>> {
    let gens = unit_generators(simple_roots, field)?;
    let dim = simple_roots.first().ok_or(Error::DegenerateSimpleRoots)?.dim();
    let mut group = VersorGroup::from_elements(dim, [Multivector::one(dim)]);
    let mut next = 0;
    while next < group.len() {
        let x = group.elements[next].clone();
        next += 1;
        for g in &gens {
            if group.insert(&x * g) && group.len() > GROUP_CAP {
                return Err(Error::ClosureCap { cap: GROUP_CAP });
            }
        }
    }
    Ok(group)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoverReport {
    pub pinors: usize,
    pub distinct_actions: usize,
    /// Every action arises from exactly the pair `±A`.
    pub fibres_are_pairs: bool,
}

/// Compares the pinor group with the permutations it induces on the roots.
pub fn double_cover_report<S: Scalar>(group: &VersorGroup<S>, roots: &RootSystem<S>) -> Result<DoubleCoverReport> {
    let mut fibres: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, g) in group.elements().iter().enumerate() {
        let v = Versor::new(g.clone())?;
        let perm = roots
            .roots()
            .iter()
            .map(|r| {
                let img = v.sandwich(&r.to_multivector())?;
                roots
                    .index_of(&Vector(img.vector_part()))
                    .ok_or_else(|| Error::Pipeline("pinor action leaves the root set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        fibres.entry(perm).or_default().push(i);
    }
    let fibres_are_pairs = fibres.values().all(|f| {
        f.len() == 2 && {
            let (a, b) = (&group.elements()[f[0]], &group.elements()[f[1]]);
            (a + b).near_zero()
        }
    });
    Ok(DoubleCoverReport { pinors: group.len(), distinct_actions: fibres.len(), fibres_are_pairs })
}

/// `x1 e12 + x2 e23 + x3 e31 + x4 -> (x1, x2, x3, x4)`.
///
/// With this order `alpha1 alpha2` of `H3` lands on the `H4` simple root `a1`.
pub fn spinor_to_4d<S: Scalar>(spinor: &Multivector<S>) -> Result<Vector<S>> {
    if spinor.dim() != 3 {
        return Err(Error::DimensionMismatch { left: spinor.dim(), right: 3 });
    }
    match spinor.parity() {
        Some(Parity::Even) => {}
        Some(Parity::Odd) => return Err(Error::WrongGrade { expected: 0 }),
        None if spinor.is_zero() => {}
        None => return Err(Error::MixedParity),
    }
    Ok(Vector(vec![
        spinor.coeff(E12).clone(),
        spinor.coeff(E23).clone(),
        -spinor.coeff(E13).clone(),
        spinor.scalar_part().clone(),
    ]))
}

/// Inverse of [`spinor_to_4d`].
pub fn spinor_from_4d<S: Scalar>(v: &Vector<S>) -> Result<Multivector<S>> {
    if v.dim() != 4 {
        return Err(Error::DimensionMismatch { left: v.dim(), right: 4 });
    }
    let c = v.coords();
    let mut m = Multivector::scalar(3, c[3].clone());
    m.set(E12, c[0].clone());
    m.set(E23, c[1].clone());
    m.set(E13, -c[2].clone());
    Ok(m)
}

/// Scalar part of `A B~`.
pub fn spinor_inner<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> Result<S> {
    Ok(a.geometric_product(&b.reverse())?.scalar_part().clone())
}

pub fn spin_subgroup<S: Scalar>(g: &VersorGroup<S>) -> VersorGroup<S> {
    g.even_part()
}

/// A spin group of `Cl(3)` read as a set of 4D vectors.
#[derive(Debug, Clone)]
pub struct Induced4DRootSystem<S: Scalar> {
    pub source: VersorGroup<S>,
    /// Image of each spinor, in the group's element order.
    pub vectors4d: Vec<Vector<S>>,
    pub rootsystem: RootSystem<S>,
}

/// Reads each spinor as a 4D vector and checks the root-system axioms on the result.
pub fn induce_4d<S: Scalar>(spin: &VersorGroup<S>) -> Result<Induced4DRootSystem<S>> {
    if spin.dim() != 3 {
        return Err(Error::UnsupportedDimension(spin.dim()));
    }
    let vectors4d = spin.elements().iter().map(spinor_to_4d).collect::<Result<Vec<_>>>()?;
    let rootsystem = RootSystem::from_roots(4, vectors4d.clone(), Metric::Standard);
    if rootsystem.len() != vectors4d.len() {
        return Err(Error::Pipeline("spinors collide in 4D".into()));
    }
    if !verify_root_axioms(&rootsystem).passes() {
        return Err(Error::Pipeline("induced vectors violate the root-system axioms".into()));
    }
    Ok(Induced4DRootSystem { source: spin.clone(), vectors4d, rootsystem })
}

/// Pin group, spin group and induced 4D system of a 3D root system.
pub fn induce_from_3d<S: Scalar>(rs: &RootSystem<S>) -> Result<(VersorGroup<S>, Induced4DRootSystem<S>)> {
    if rs.dim() != 3 {
        return Err(Error::UnsupportedDimension(rs.dim()));
    }
    let pin = pinor_closure(rs)?;
    let induced = induce_4d(&spin_subgroup(&pin))?;
    Ok((pin, induced))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    pub left: bool,
    pub right: bool,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.left && self.right
    }
}

/// Checks that `x -> R x` and `x -> x R` permute the induced 4D vectors for every `R`.
pub fn spinorial_symmetry_check<S: Scalar>(spin: &VersorGroup<S>) -> Result<SymmetryReport> {
    let induced = induce_4d(spin)?;
    let set = &induced.rootsystem;
    let permutes = |act: &dyn Fn(&Multivector<S>, &Multivector<S>) -> Multivector<S>| -> Result<bool> {
        for r in spin.elements() {
            let mut hit = vec![false; set.len()];
            for x in spin.elements() {
                match set.index_of(&spinor_to_4d(&act(r, x))?) {
                    Some(k) if !hit[k] => hit[k] = true,
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    };
    Ok(SymmetryReport {
        left: permutes(&|r, x| r * x)?,
        right: permutes(&|r, x| x * r)?,
    })
}

/// Cartan matrix of `E8` with the chain `1..7` and node 8 bonded to node 5.
pub fn e8_reference_cartan() -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; 8]; 8];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

/// Outcome of building the 240 `E8` roots from the `H3` pinors.
#[derive(Debug, Clone)]
pub struct E8Construction {
    pub pin_group: usize,
    pub spin_group: usize,
    pub h4: RootSystem<QuadScalar>,
    /// `tau I p` over the odd pinors reproduces `tau H4`.
    pub tau_left_matches: bool,
    /// Same for `tau p I`.
    pub tau_right_matches: bool,
    pub e8: RootSystem<QuadScalar>,
    /// The reduced-metric closure of the simple roots equals the assembled set.
    pub closure_matches: bool,
    pub axioms: RootAxiomReport<QuadScalar>,
    pub cartan: CartanMatrix<QuadScalar>,
    pub cartan_matches_reference: bool,
}

pub fn e8_from_h3() -> Result<E8Construction> {
    let h3 = catalog::lookup("H3")?.close()?;
    let (pinors, induced) = induce_from_3d(&h3)?;
    let spinors = induced.source;
    let h4 = induced.rootsystem;
    let tau = QuadScalar::tau();
    let tau_h4: Vec<Vector<QuadScalar>> = h4.roots().iter().map(|r| r.scale(&tau)).collect();
    let tau_set = RootSystem::from_roots(4, tau_h4.clone(), Metric::Standard);
    let i3 = Multivector::<QuadScalar>::pseudoscalar(3);
    let odd = pinors.odd_part();
    let side = |left: bool| -> Result<bool> {
        let imgs = odd
            .iter()
            .map(|p| {
                let prod = if left { &i3 * p } else { p * &i3 };
                Ok(spinor_to_4d(&prod)?.scale(&tau))
            })
            .collect::<Result<Vec<_>>>()?;
        let set = RootSystem::from_roots(4, imgs, Metric::Standard);
        Ok(set.same_roots(&tau_set))
    };
    let tau_left_matches = side(true)?;
    let tau_right_matches = side(false)?;

    let simple = catalog::e8_reduced_simple_roots();
    let all: Vec<Vector<QuadScalar>> = h4.roots().iter().cloned().chain(tau_h4).collect();
    let e8 = RootSystem::from_roots(4, all, Metric::ReducedTau)
        .with_simple_roots(simple.clone())
        .with_name("E8")
        .with_field(5);
    let closed = close_roots(&simple, Metric::ReducedTau)?;
    let closure_matches = closed.same_roots(&e8);
    let axioms = verify_root_axioms(&e8);
    let cartan = cartan_matrix(&simple, Metric::ReducedTau)?;
    let reference = e8_reference_cartan();
    let cartan_matches_reference = cartan
        .entries
        .iter()
        .zip(&reference)
        .all(|(row, want)| row.iter().zip(want).all(|(a, &b)| *a == QuadScalar::from_int(b)));
    Ok(E8Construction {
        pin_group: pinors.len(),
        spin_group: spinors.len(),
        h4: h4.with_name("H4"),
        tau_left_matches,
        tau_right_matches,
        e8,
        closure_matches,
        axioms,
        cartan,
        cartan_matches_reference,
    })
}
