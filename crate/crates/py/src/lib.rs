//! Python module `helly`.
//!
//! Rationals go in as `int`, `fractions.Fraction` or `"n/d"` strings and
//! come back as `Fraction`. Structured results (regions, closest pairs)
//! are returned as the same dictionaries the CLI prints as JSON.

#![allow(clippy::useless_conversion)]

use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use helly_core::disks::{self, HellyOutcome};
use helly_core::exactq::Rat;
use helly_core::instance::Instance;
use helly_core::linear::{self, Equation, HellyCertificate};
use helly_core::{generate, report, svg, Error};

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rat(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    let text = obj.str()?.to_string();
    Rat::from_str(text.trim()).map_err(|_| PyValueError::new_err(format!("not a rational: {text}")))
}

fn from_rat(py: Python<'_>, q: &Rat) -> PyResult<PyObject> {
    let fraction = py.import_bound("fractions")?.getattr("Fraction")?;
    Ok(fraction.call1((q.to_string(),))?.unbind())
}

fn from_rats(py: Python<'_>, v: &[Rat]) -> PyResult<PyObject> {
    let items = v
        .iter()
        .map(|q| from_rat(py, q))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(PyList::new_bound(py, items).into_any().unbind())
}

fn from_json(py: Python<'_>, v: &serde_json::Value) -> PyResult<PyObject> {
    let loads = py.import_bound("json")?.getattr("loads")?;
    Ok(loads.call1((v.to_string(),))?.unbind())
}

/// Linear system `A x = b` over the rationals.
#[pyclass(module = "helly", name = "LinearSystem", frozen)]
#[derive(Clone)]
struct PyLinearSystem(linear::LinearSystem);

#[pymethods]
impl PyLinearSystem {
    /// `equations` is a list of `(coeffs, rhs)` pairs.
    #[new]
    fn new(unknowns: usize, equations: &Bound<'_, PyList>) -> PyResult<Self> {
        let mut eqs = Vec::with_capacity(equations.len());
        for item in equations.iter() {
            let (coeffs, rhs): (Vec<Bound<'_, PyAny>>, Bound<'_, PyAny>) = item.extract()?;
            let coeffs = coeffs.iter().map(to_rat).collect::<PyResult<Vec<_>>>()?;
            eqs.push(Equation::new(coeffs, to_rat(&rhs)?));
        }
        linear::LinearSystem::new(unknowns, eqs)
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn tetrahedron() -> Self {
        Self(generate::tetrahedron())
    }

    #[staticmethod]
    fn random(n: usize, k: usize, seed: u64) -> Self {
        Self(generate::random_linear(n, k, seed))
    }

    /// System with a planted solution; returns `(system, solution)`.
    #[staticmethod]
    fn consistent(py: Python<'_>, n: usize, k: usize, seed: u64) -> PyResult<(Self, PyObject)> {
        let (s, x) = generate::consistent_linear(n, k, seed);
        Ok((Self(s), from_rats(py, &x)?))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match Instance::from_json(text).map_err(value_error)? {
            Instance::Linear(s) => Ok(Self(s)),
            other => Err(PyValueError::new_err(format!(
                "expected linear, found {}",
                other.kind()
            ))),
        }
    }

    fn to_json(&self) -> String {
        Instance::Linear(self.0.clone()).to_json()
    }

    #[getter]
    fn unknowns(&self) -> usize {
        self.0.unknowns()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Minimum inconsistent subsystem or a witness for the whole system.
    fn certify(&self) -> Certificate {
        Certificate(linear::helly_certify(&self.0))
    }

    /// Solution set of the listed equations as `(point, basis)`, or `None`.
    fn solve(
        &self,
        py: Python<'_>,
        indices: Vec<usize>,
    ) -> PyResult<Option<(PyObject, Vec<PyObject>)>> {
        match linear::check_subsystem(&self.0, &indices).map_err(value_error)? {
            linear::SubsystemVerdict::Consistent(w) => {
                let basis = w
                    .basis
                    .iter()
                    .map(|b| from_rats(py, b))
                    .collect::<PyResult<_>>()?;
                Ok(Some((from_rats(py, &w.point)?, basis)))
            }
            linear::SubsystemVerdict::Inconsistent => Ok(None),
        }
    }

    /// Random subsystem test; returns the report as a dict.
    fn sample(&self, py: Python<'_>, size: usize, trials: usize, seed: u64) -> PyResult<PyObject> {
        let r = linear::sample_consistency(&self.0, size, trials, seed).map_err(value_error)?;
        from_json(py, &report::sampling_json(&r))
    }

    fn __repr__(&self) -> String {
        format!(
            "LinearSystem(unknowns={}, equations={})",
            self.0.unknowns(),
            self.0.len()
        )
    }
}

#[pyclass(module = "helly", frozen)]
struct Certificate(HellyCertificate);

#[pymethods]
impl Certificate {
    #[getter]
    fn consistent(&self) -> bool {
        self.0.is_consistent()
    }

    /// Indices of a minimum inconsistent subsystem, or `None`.
    #[getter]
    fn subsystem(&self) -> Option<Vec<usize>> {
        match &self.0 {
            HellyCertificate::Inconsistent { subsystem } => Some(subsystem.clone()),
            HellyCertificate::Consistent { .. } => None,
        }
    }

    /// A solution of the whole system, or `None`.
    #[getter]
    fn witness(&self, py: Python<'_>) -> PyResult<Option<PyObject>> {
        match &self.0 {
            HellyCertificate::Consistent { witness } => Ok(Some(from_rats(py, &witness.point)?)),
            HellyCertificate::Inconsistent { .. } => Ok(None),
        }
    }

    /// Re-checks the certificate against `system`.
    fn verify(&self, system: &PyLinearSystem) -> bool {
        self.0.verify(&system.0)
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<PyObject> {
        from_json(py, &report::certificate_json(&self.0))
    }

    fn __repr__(&self) -> String {
        match &self.0 {
            HellyCertificate::Consistent { witness } => {
                format!("Certificate(consistent, dimension={})", witness.dimension())
            }
            HellyCertificate::Inconsistent { subsystem } => {
                format!("Certificate(inconsistent, subsystem={subsystem:?})")
            }
        }
    }
}

/// Closed disk with rational center and positive rational radius.
#[pyclass(module = "helly", name = "Disk", frozen)]
#[derive(Clone)]
struct PyDisk(disks::Disk);

#[pymethods]
impl PyDisk {
    #[new]
    fn new(
        x: &Bound<'_, PyAny>,
        y: &Bound<'_, PyAny>,
        radius: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let center = disks::Point::new(to_rat(x)?, to_rat(y)?);
        disks::Disk::new(center, to_rat(radius)?)
            .map(Self)
            .map_err(value_error)
    }

    #[getter]
    fn center(&self, py: Python<'_>) -> PyResult<(PyObject, PyObject)> {
        let c = self.0.center();
        Ok((from_rat(py, &c.x)?, from_rat(py, &c.y)?))
    }

    #[getter]
    fn radius(&self, py: Python<'_>) -> PyResult<PyObject> {
        from_rat(py, self.0.radius())
    }

    fn contains(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.0.contains(&disks::Point::new(to_rat(x)?, to_rat(y)?)))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        let c = self.0.center();
        format!("Disk({}, {}, {})", c.x, c.y, self.0.radius())
    }
}

fn family(ds: Vec<PyDisk>) -> Vec<disks::Disk> {
    ds.into_iter().map(|d| d.0).collect()
}

#[pyfunction]
fn pair_relation(a: &PyDisk, b: &PyDisk) -> &'static str {
    report::relation_name(&disks::pair_relation(&a.0, &b.0))
}

#[pyfunction]
fn triple_meet(a: &PyDisk, b: &PyDisk, c: &PyDisk) -> bool {
    disks::triple_meet(&a.0, &b.0, &c.0)
}

/// `("common-point", (x, y))` with float coordinates, or
/// `("violating-triple", (i, j, k))`.
#[pyfunction]
fn helly_check(py: Python<'_>, family_: Vec<PyDisk>) -> PyResult<(&'static str, PyObject)> {
    let fam = family(family_);
    match disks::minimalist_helly_check(&fam).map_err(value_error)? {
        HellyOutcome::CommonPoint(p) => Ok(("common-point", p.to_f64().into_py(py))),
        HellyOutcome::ViolatingTriple([i, j, k]) => Ok(("violating-triple", (i, j, k).into_py(py))),
    }
}

#[pyfunction]
#[pyo3(signature = (family_, precision = 53))]
fn intersect_region(py: Python<'_>, family_: Vec<PyDisk>, precision: u32) -> PyResult<PyObject> {
    let region = disks::intersect_region(&family(family_)).map_err(value_error)?;
    from_json(py, &report::region_json(&region, precision))
}

/// Closest pair and separating line between `t` and the intersection of
/// `family_`. Disk indices in the result refer to `family_`.
#[pyfunction]
#[pyo3(signature = (t, family_, precision = 53))]
fn closest_pair(
    py: Python<'_>,
    t: &PyDisk,
    family_: Vec<PyDisk>,
    precision: u32,
) -> PyResult<PyObject> {
    let region = disks::intersect_region(&family(family_)).map_err(value_error)?;
    let cp = disks::closest_pair(&t.0, &region, precision).map_err(value_error)?;
    let line = disks::separating_line(&t.0, &region).map_err(value_error)?;
    from_json(
        py,
        &serde_json::json!({
            "closest_pair": report::closest_pair_json(&cp, precision),
            "separating_line": report::separating_line_json(&line, precision),
        }),
    )
}

#[pyfunction]
fn render_svg(family_: Vec<PyDisk>) -> PyResult<String> {
    let fam = family(family_);
    let region = disks::intersect_region(&fam).map_err(value_error)?;
    Ok(svg::render(&fam, &region, None))
}

#[pyfunction]
fn helly_disks(py: Python<'_>, n: usize, seed: u64) -> PyResult<(Vec<PyDisk>, PyObject)> {
    let (ds, p) = generate::helly_disks(n, seed);
    Ok((
        ds.into_iter().map(PyDisk).collect(),
        (from_rat(py, &p.x)?, from_rat(py, &p.y)?).into_py(py),
    ))
}

#[pyfunction]
fn random_disks(n: usize, seed: u64) -> Vec<PyDisk> {
    generate::random_disks(n, seed)
        .into_iter()
        .map(PyDisk)
        .collect()
}

#[pymodule]
fn helly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinearSystem>()?;
    m.add_class::<Certificate>()?;
    m.add_class::<PyDisk>()?;
    m.add_function(wrap_pyfunction!(pair_relation, m)?)?;
    m.add_function(wrap_pyfunction!(triple_meet, m)?)?;
    m.add_function(wrap_pyfunction!(helly_check, m)?)?;
    m.add_function(wrap_pyfunction!(intersect_region, m)?)?;
    m.add_function(wrap_pyfunction!(closest_pair, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(helly_disks, m)?)?;
    m.add_function(wrap_pyfunction!(random_disks, m)?)?;
    Ok(())
}
