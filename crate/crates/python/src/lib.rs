//! Python bindings: exact scalars, multivectors, root systems and the Coxeter pipelines.

use cliffroots::catalog;
use cliffroots::cli::{self, CommandConfig};
use cliffroots::coxeter::{coxeter_plane, coxeter_versor, factorize_versor, fold_diagram, project_onto, project_to_plane};
use cliffroots::induction::{self, VersorGroup};
use cliffroots::roots::{close_roots, extract_diagram, verify_root_axioms};
use cliffroots::{Blade, Error, Metric, Multivector, QuadScalar, RootSystem as CoreRootSystem, Scalar as _, Vector};
use clap::Parser;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(cliffroots_py, CliffrootsError, PyException);

fn err(e: Error) -> PyErr {
    CliffrootsError::new_err(format!("{}: {e}", e.kind()))
}

fn parse_scalar(text: &str) -> PyResult<QuadScalar> {
    text.parse::<QuadScalar>().map_err(|m| CliffrootsError::new_err(format!("parse: {m}")))
}

fn parse_metric(metric: Option<&str>) -> PyResult<Option<Metric>> {
    match metric {
        None => Ok(None),
        Some("standard") => Ok(Some(Metric::Standard)),
        Some("reduced") => Ok(Some(Metric::ReducedTau)),
        Some(other) => Err(CliffrootsError::new_err(format!("unknown metric `{other}`"))),
    }
}

/// Exact element of `Q(sqrt d)`; golden-field values print as `p+q*t`.
#[pyclass(name = "Scalar", module = "cliffroots_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyScalar(QuadScalar);

#[pymethods]
impl PyScalar {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_scalar(text).map(Self)
    }

    #[staticmethod]
    fn tau() -> Self {
        Self(QuadScalar::tau())
    }

    fn __str__(&self) -> String {
        self.0.render()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0.render())
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __neg__(&self) -> Self {
        Self(-self.0.clone())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(Self).map_err(err)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(Self).map_err(err)
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    /// `(p, q)` with value `p + q tau`, as strings.
    fn tau_basis(&self) -> PyResult<(String, String)> {
        let (p, q) = self.0.to_tau_basis().map_err(err)?;
        Ok((p.to_string(), q.to_string()))
    }

    /// The tau-free part used by the reduced metric.
    fn reduced(&self) -> PyResult<Self> {
        self.0.reduce_tau().map(Self).map_err(err)
    }
}

/// Dense exact multivector of `Cl(dim)`.
#[pyclass(name = "Multivector", module = "cliffroots_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMultivector(Multivector<QuadScalar>);

#[pymethods]
impl PyMultivector {
    /// `terms` maps blade labels such as `"e12"` or `"1"` to scalar strings.
    #[new]
    #[pyo3(signature = (dim, terms = Vec::new()))]
    fn new(dim: usize, terms: Vec<(String, String)>) -> PyResult<Self> {
        let mut m = Multivector::try_zero(dim).map_err(err)?;
        for (label, c) in terms {
            let blade = Blade::parse(&label)
                .filter(|b| usize::from(b.0) < (1 << dim))
                .ok_or_else(|| CliffrootsError::new_err(format!("bad blade `{label}`")))?;
            m.set(blade, parse_scalar(&c)?);
        }
        Ok(Self(m))
    }

    #[staticmethod]
    fn vector(coords: Vec<String>) -> PyResult<Self> {
        let v: Vec<QuadScalar> = coords.iter().map(|c| parse_scalar(c)).collect::<PyResult<_>>()?;
        Ok(Self(Multivector::from_vector(&v)))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn terms(&self) -> Vec<(String, String)> {
        self.0.to_text_pairs()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.geometric_product(&other.0).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn wedge(&self, other: &Self) -> PyResult<Self> {
        self.0.wedge(&other.0).map(Self).map_err(err)
    }

    fn reverse(&self) -> Self {
        Self(self.0.reverse())
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.0.grade_project(k).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        let body: Vec<String> = self.0.to_text_pairs().into_iter().map(|(b, c)| format!("({c}){b}")).collect();
        if body.is_empty() {
            "Multivector(0)".into()
        } else {
            format!("Multivector({})", body.join(" + "))
        }
    }
}

/// Closed root system over exact scalars.
#[pyclass(name = "RootSystem", module = "cliffroots_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRootSystem(CoreRootSystem<QuadScalar>);

fn rows(vs: &[Vector<QuadScalar>]) -> Vec<Vec<String>> {
    vs.iter().map(Vector::render).collect()
}

impl PyRootSystem {
    fn standard(&self) -> PyResult<CoreRootSystem<QuadScalar>> {
        let mut s = self.0.to_standard_form().map_err(err)?;
        if let Some(n) = self.0.name() {
            s = s.with_name(n);
        }
        Ok(s)
    }

    fn default_order(&self, order: Option<Vec<usize>>) -> Vec<usize> {
        order.unwrap_or_else(|| {
            self.0
                .name()
                .and_then(|n| catalog::lookup(n).ok())
                .map(|e| e.default_order)
                .unwrap_or_else(|| (1..=self.0.rank()).collect())
        })
    }
}

fn float_system(rs: &CoreRootSystem<QuadScalar>) -> CoreRootSystem<f64> {
    CoreRootSystem::from_roots(rs.dim(), rs.roots().iter().map(Vector::to_float).collect(), Metric::Standard)
        .with_simple_roots(rs.simple_roots().iter().map(Vector::to_float).collect())
}

#[pymethods]
impl PyRootSystem {
    /// One of `A1^3, A3, B3, H3, A4, B4, D4, F4, H4, D6, E8, E8-cl8`.
    #[staticmethod]
    #[pyo3(signature = (name, metric = None))]
    fn catalog(name: &str, metric: Option<&str>) -> PyResult<Self> {
        let e = catalog::lookup(name).map_err(err)?;
        let metric = parse_metric(metric)?.unwrap_or(e.metric);
        let rs = close_roots(&e.simple_roots, metric).map_err(err)?;
        Ok(Self(rs.with_name(e.name).with_field(e.field)))
    }

    #[staticmethod]
    #[pyo3(signature = (simple_roots, metric = None))]
    fn from_simple_roots(simple_roots: Vec<Vec<String>>, metric: Option<&str>) -> PyResult<Self> {
        let simple = simple_roots
            .iter()
            .map(|r| r.iter().map(|c| parse_scalar(c)).collect::<PyResult<Vec<_>>>().map(Vector))
            .collect::<PyResult<Vec<_>>>()?;
        let metric = parse_metric(metric)?.unwrap_or(Metric::Standard);
        close_roots(&simple, metric).map(Self).map_err(err)
    }

    #[staticmethod]
    fn names() -> Vec<&'static str> {
        catalog::NAMES.to_vec()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.0.name().map(str::to_string)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn metric(&self) -> &'static str {
        self.0.metric().name()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn roots(&self) -> Vec<Vec<String>> {
        rows(self.0.roots())
    }

    fn simple_roots(&self) -> Vec<Vec<String>> {
        rows(self.0.simple_roots())
    }

    fn cartan_matrix(&self) -> PyResult<Vec<Vec<String>>> {
        let a = self.0.cartan_matrix().map_err(err)?;
        Ok(a.entries.iter().map(|r| r.iter().map(|x| x.render()).collect()).collect())
    }

    /// Diagram edges `(i, j, m)` with 1-based nodes.
    fn diagram(&self) -> PyResult<Vec<(usize, usize, u32)>> {
        let d = extract_diagram(&self.0.cartan_matrix().map_err(err)?).map_err(err)?;
        Ok(d.edges)
    }

    fn verify_axioms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = verify_root_axioms(&self.0);
        let d = PyDict::new(py);
        d.set_item("axiom1", r.axiom1())?;
        d.set_item("axiom2", r.axiom2())?;
        d.set_item("multiples_over_field", r.multiples_over_field.passed())?;
        d.set_item("multiples_over_rationals", r.multiples_over_rationals.passed())?;
        d.set_item("passes", r.passes())?;
        Ok(d)
    }

    fn pinor_group(&self) -> PyResult<PyVersorGroup> {
        induction::pinor_closure(&self.0).map(PyVersorGroup).map_err(err)
    }

    /// Coxeter versor data; `order` is 1-based, defaulting to the catalog order.
    #[pyo3(signature = (order = None, factorize = false))]
    fn coxeter<'py>(&self, py: Python<'py>, order: Option<Vec<usize>>, factorize: bool) -> PyResult<Bound<'py, PyDict>> {
        let rs = self.standard()?;
        let order = self.default_order(order);
        let cv = coxeter_versor(&rs, &order).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("h", cv.order_h)?;
        d.set_item("power_sign", cv.power_sign)?;
        d.set_item("versor", cv.exact.mv().to_text_pairs())?;
        if factorize {
            let f = factorize_versor(&cv).map_err(err)?;
            d.set_item("exponents", f.exponents())?;
            d.set_item("residual", f.residual)?;
            let planes: Vec<(u32, u32, f64)> =
                f.planes.iter().map(|p| (p.exponents.0, p.exponents.1, p.theta)).collect();
            d.set_item("planes", planes)?;
        }
        Ok(d)
    }

    /// `(root_index, x, y, radius, orbit_id)` on the Coxeter plane or the eigenplane of exponent `m`.
    #[pyo3(signature = (m = None))]
    fn project(&self, m: Option<u32>) -> PyResult<Vec<(usize, f64, f64, f64, usize)>> {
        let rs = self.standard()?;
        let rsf = float_system(&rs);
        let points = match m {
            None => project_to_plane(&rsf, &coxeter_plane(&rs, &rs.cartan_matrix().map_err(err)?).map_err(err)?),
            Some(m) => {
                let cv = coxeter_versor(&rs, &self.default_order(None)).map_err(err)?;
                let f = factorize_versor(&cv).map_err(err)?;
                let p = f
                    .planes
                    .iter()
                    .find(|p| p.exponents.0 == m || p.exponents.1 == m)
                    .ok_or_else(|| CliffrootsError::new_err(format!("no eigenplane with exponent {m}")))?;
                project_onto(&rsf, &p.u, &p.v, &cv.w)
            }
        }
        .map_err(err)?;
        Ok(points.iter().map(|p| (p.root_index, p.x, p.y, p.radius, p.orbit_id)).collect())
    }

    /// Coxeter matrix of the group generated by products of orthogonal simple-root pairs.
    fn fold(&self, pairs: Vec<(usize, usize)>) -> PyResult<Vec<Vec<u32>>> {
        let rs = float_system(&self.standard()?);
        fold_diagram(&rs, &pairs).map(|f| f.target_coxeter_matrix).map_err(err)
    }
}

/// Finite group of exact versors.
#[pyclass(name = "VersorGroup", module = "cliffroots_py", frozen)]
struct PyVersorGroup(VersorGroup<QuadScalar>);

#[pymethods]
impl PyVersorGroup {
    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn elements(&self) -> Vec<PyMultivector> {
        self.0.elements().iter().cloned().map(PyMultivector).collect()
    }

    fn __contains__(&self, m: &PyMultivector) -> bool {
        self.0.contains(&m.0)
    }

    fn is_closed(&self) -> bool {
        self.0.is_closed()
    }

    fn spin(&self) -> Self {
        Self(induction::spin_subgroup(&self.0))
    }

    fn conjugacy_class_sizes(&self) -> Vec<usize> {
        self.0.conjugacy_classes().iter().map(|c| c.size()).collect()
    }

    /// The spinors read as 4D vectors, closed into a root system.
    fn induce_4d(&self) -> PyResult<PyRootSystem> {
        induction::induce_4d(&self.0).map(|i| PyRootSystem(i.rootsystem)).map_err(err)
    }
}

/// Builds the 240 `E8` roots from the `H3` pinors and reports every check.
#[pyfunction]
fn e8_from_h3<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let e = induction::e8_from_h3().map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("pin_group", e.pin_group)?;
    d.set_item("spin_group", e.spin_group)?;
    d.set_item("roots", e.e8.len())?;
    d.set_item("closure_matches", e.closure_matches)?;
    d.set_item("axioms", e.axioms.passes())?;
    d.set_item("cartan_matches_reference", e.cartan_matches_reference)?;
    let cartan: Vec<Vec<String>> = e.cartan.entries.iter().map(|r| r.iter().map(|x| x.render()).collect()).collect();
    d.set_item("cartan", cartan)?;
    d.set_item("system", PyRootSystem(e.e8).into_pyobject(py)?)?;
    Ok(d)
}

/// Runs a CLI command (arguments without the program name) and returns the artifact text.
#[pyfunction]
fn run(args: Vec<String>) -> PyResult<String> {
    let argv = std::iter::once("cliffroots".to_string()).chain(args);
    let cfg = CommandConfig::try_parse_from(argv).map_err(|e| CliffrootsError::new_err(e.to_string()))?;
    cli::run(&cfg).map(|a| a.contents).map_err(err)
}

#[pymodule]
pub fn cliffroots_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyMultivector>()?;
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyVersorGroup>()?;
    m.add_function(wrap_pyfunction!(e8_from_h3, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add("CliffrootsError", m.py().get_type::<CliffrootsError>())?;
    Ok(())
}
