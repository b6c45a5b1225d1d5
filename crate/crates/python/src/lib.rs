//! Python bindings. Matrices cross the boundary as `Matrix` objects built
//! from entry strings; reports come back as plain dicts, mirroring the JSON
//! the command line prints.

// pyo3 0.22's generated wrappers convert PyErr into itself.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;
use similitude::jordan::{self, SegreMode};
use similitude::rigidity::{self, Relation, Variety};
use similitude::{similarity, smith, sylvester, vars, Error, GaussianRational, PolyMatrix, ScalarMatrix};

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &impl Serialize) -> PyResult<PyObject> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyModule::import_bound(py, "json")?.call_method1("loads", (text,))?.unbind())
}

fn scalar(s: &str) -> PyResult<GaussianRational> {
    s.trim().parse().map_err(err)
}

fn point(p: Vec<String>) -> PyResult<Vec<GaussianRational>> {
    p.iter().map(|s| scalar(s)).collect()
}

/// Square or rectangular matrix of polynomials over Q(i).
#[pyclass(name = "Matrix", module = "similitude", frozen)]
#[derive(Clone)]
struct PyMatrix(PolyMatrix);

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (rows, variables = vec!["z".to_string()]))]
    fn new(rows: Vec<Vec<String>>, variables: Vec<String>) -> PyResult<Self> {
        PolyMatrix::parse(vars(&variables), &rows).map(PyMatrix).map_err(err)
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    /// Entries in canonical printed form.
    fn rows(&self) -> Vec<Vec<String>> {
        self.0.to_strings()
    }

    /// Value at a point, one coordinate per variable.
    fn eval(&self, point: Vec<String>) -> PyResult<Vec<Vec<String>>> {
        let m = self.0.eval(&self::point(point)?).map_err(err)?;
        Ok(m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?}, variables={:?})", self.0.to_strings(), self.0.vars().to_vec())
    }
}

fn constant(m: &PyMatrix) -> PyResult<ScalarMatrix> {
    m.0.constant_value().map_err(err)
}

/// Local Smith form of a univariate matrix at `point`.
#[pyfunction]
fn local_smith(py: Python<'_>, m: &PyMatrix, point: &str) -> PyResult<PyObject> {
    to_py(py, &smith::local_smith(&m.0, &scalar(point)?).map_err(err)?)
}

/// Basis of the commutant of `a` evaluated at `point`.
#[pyfunction]
fn commutant_basis(py: Python<'_>, a: &PyMatrix, point: Vec<String>) -> PyResult<PyObject> {
    to_py(py, &sylvester::commutant_basis_at(&a.0, &self::point(point)?).map_err(err)?)
}

/// Whether the intertwiner dimension of `(a, b)` is constant near `point`.
#[pyfunction]
fn wasow_check(py: Python<'_>, a: &PyMatrix, b: &PyMatrix, point: &str) -> PyResult<PyObject> {
    to_py(py, &similarity::wasow_check(&a.0, &b.0, &scalar(point)?).map_err(err)?)
}

/// Holomorphic `H` with `aH = Hb` near `point` and `H(point) = phi`.
#[pyfunction]
fn local_similarity(py: Python<'_>, a: &PyMatrix, b: &PyMatrix, point: &str, phi: &PyMatrix) -> PyResult<PyObject> {
    to_py(py, &similarity::local_similarity(&a.0, &b.0, &scalar(point)?, &constant(phi)?).map_err(err)?)
}

/// Similarity of two constant matrices, optionally with a witness.
#[pyfunction]
#[pyo3(signature = (a, b, witness = false, seed = 0))]
fn pointwise_similar(py: Python<'_>, a: &PyMatrix, b: &PyMatrix, witness: bool, seed: u64) -> PyResult<PyObject> {
    to_py(py, &similarity::pointwise_similar(&constant(a)?, &constant(b)?, witness, seed).map_err(err)?)
}

/// Finite set of points where Jordan stability may fail.
#[pyfunction]
fn jordan_candidates(py: Python<'_>, a: &PyMatrix) -> PyResult<PyObject> {
    to_py(py, &jordan::jordan_instability_candidates(&a.0).map_err(err)?)
}

/// Jordan stability of a univariate family at `point`.
#[pyfunction]
#[pyo3(signature = (a, point, probes = jordan::DEFAULT_PROBES, tolerance = jordan::DEFAULT_TOLERANCE))]
fn is_jordan_stable(py: Python<'_>, a: &PyMatrix, point: &str, probes: usize, tolerance: f64) -> PyResult<PyObject> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(PyValueError::new_err("tolerance must be positive"));
    }
    let r = jordan::is_jordan_stable_with(&a.0, &scalar(point)?, probes, SegreMode::Numeric { tolerance });
    to_py(py, &r.map_err(err)?)
}

/// Jet rigidity of `relation` ("AHeqHB" or "AHeqHA") on `variety`
/// ("full", "cusp:P,Q" or "lines:t1,...") for the family with parameter `ell`.
#[pyfunction]
#[pyo3(signature = (ell, relation, variety, order = None))]
fn jet_rigidity(py: Python<'_>, ell: u32, relation: &str, variety: &str, order: Option<u32>) -> PyResult<PyObject> {
    let relation: Relation = relation.parse().map_err(err)?;
    let variety: Variety = variety.parse().map_err(err)?;
    let f = rigidity::build_family(ell);
    let order = order.unwrap_or_else(|| variety.default_order(ell));
    to_py(py, &rigidity::jet_rigidity(&f.a, &f.b, relation, &variety, order).map_err(err)?)
}

/// All exact checks on the counterexample family.
#[pyfunction]
fn verify_paper(py: Python<'_>, ell: u32) -> PyResult<PyObject> {
    to_py(py, &rigidity::verify_paper(ell).map_err(err)?)
}

/// Winding number around 0 of a closed curve given by complex samples.
#[pyfunction]
fn winding_number(samples: Vec<num_complex::Complex64>) -> PyResult<i64> {
    rigidity::winding_number(&samples).map_err(err)
}

/// Grid evaluation of the clutching determinant.
#[pyfunction]
fn clutching(py: Python<'_>, epsilon: f64, grid: usize) -> PyResult<PyObject> {
    if !(epsilon > 0.0 && epsilon < 0.5) || grid < 2 {
        return Err(PyValueError::new_err("need 0 < epsilon < 1/2 and grid >= 2"));
    }
    to_py(py, &rigidity::clutching_invertibility(epsilon, grid))
}

#[pymodule]
#[pyo3(name = "similitude")]
fn similitude_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(local_smith, m)?)?;
    m.add_function(wrap_pyfunction!(commutant_basis, m)?)?;
    m.add_function(wrap_pyfunction!(wasow_check, m)?)?;
    m.add_function(wrap_pyfunction!(local_similarity, m)?)?;
    m.add_function(wrap_pyfunction!(pointwise_similar, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(is_jordan_stable, m)?)?;
    m.add_function(wrap_pyfunction!(jet_rigidity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add_function(wrap_pyfunction!(winding_number, m)?)?;
    m.add_function(wrap_pyfunction!(clutching, m)?)?;
    Ok(())
}
