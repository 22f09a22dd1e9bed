//! Python bindings. Structured values cross the boundary as the same JSON
//! documents the command-line tool reads and writes.

use mirabolic::rep::Signs;
use mirabolic::{ExactMatrix, Field, Scalar};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn from_json<T: DeserializeOwned>(s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(value_err)
}

fn to_json<T: Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(value_err)
}

fn parse_field(s: &str) -> PyResult<Field> {
    s.parse().map_err(value_err)
}

fn parse_matrix(rows: Vec<Vec<String>>) -> PyResult<ExactMatrix> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| s.parse::<Scalar>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_err)?;
    ExactMatrix::from_rows(rows).map_err(value_err)
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

/// A GL_n coadjoint orbit given by eigenvalue classes and partitions.
#[pyclass(name = "Orbit", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyOrbit(mirabolic::OrbitDatum);

#[pymethods]
impl PyOrbit {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        from_json(s).map(PyOrbit)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.0)
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn centralizer_dim(&self) -> usize {
        self.0.centralizer_dim()
    }

    /// `xi` as rows of rational strings.
    fn realize(&self) -> Vec<Vec<String>> {
        matrix_rows(&self.0.realize_xi())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Orbit({})", self.0)
    }
}

/// A P_n coadjoint orbit: a depth and the orbit of the reduced block.
#[pyclass(name = "MirabolicOrbit", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyMirabolicOrbit(mirabolic::MirabolicOrbitDatum);

#[pymethods]
impl PyMirabolicOrbit {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        from_json(s).map(PyMirabolicOrbit)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.0)
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    #[getter]
    fn a_part(&self) -> PyOrbit {
        PyOrbit(self.0.a_part().clone())
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn realize(&self) -> Vec<Vec<String>> {
        matrix_rows(&self.0.realize())
    }

    fn predicted_stabilizer_dim(&self) -> usize {
        self.0.predicted_stabilizer_dim()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MirabolicOrbit({})", self.0)
    }
}

/// Selected blocks and offsets, keyed by class and block index.
#[pyclass(name = "Selection", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySelection(mirabolic::IndexSelection);

#[pymethods]
impl PySelection {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        from_json(s).map(PySelection)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.0)
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.0.triples()
    }

    fn positions(&self, orbit: &PyOrbit) -> Vec<usize> {
        self.0.positions(&orbit.0)
    }

    fn __repr__(&self) -> String {
        format!("Selection({})", self.0)
    }
}

#[pyclass(name = "RepLabel", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRepLabel(mirabolic::RepLabel);

#[pymethods]
impl PyRepLabel {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        from_json(s).map(PyRepLabel)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.0)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn times(&self, other: &PyRepLabel) -> PyResult<PyRepLabel> {
        self.0.times(&other.0).map(PyRepLabel).map_err(value_err)
    }

    fn restrict_to_p(&self) -> PyResult<PyPRepLabel> {
        self.0.restrict_to_p().map(PyPRepLabel).map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RepLabel({})", self.0)
    }
}

#[pyclass(name = "PRepLabel", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPRepLabel(mirabolic::PRepLabel);

#[pymethods]
impl PyPRepLabel {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        from_json(s).map(PyPRepLabel)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.0)
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    #[getter]
    fn adduced(&self) -> PyRepLabel {
        PyRepLabel(self.0.adduced().clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PRepLabel({})", self.0)
    }
}

/// Normal form of a functional given as rows of rational strings. Without
/// `eigen`, candidates are found automatically where possible.
#[pyfunction]
#[pyo3(signature = (matrix, field = "C", eigen = None))]
fn classify(
    matrix: Vec<Vec<String>>,
    field: &str,
    eigen: Option<Vec<String>>,
) -> PyResult<PyMirabolicOrbit> {
    let x = parse_matrix(matrix)?;
    let field = parse_field(field)?;
    let c = match eigen {
        Some(e) => {
            let hints = e
                .iter()
                .map(|s| s.parse::<Scalar>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(value_err)?;
            mirabolic::classify_with_certificate(&x, field, &hints)
        }
        None => mirabolic::classify_auto(&x, field),
    };
    c.map(|c| PyMirabolicOrbit(c.datum)).map_err(value_err)
}

#[pyfunction]
fn stabilizer_dim(matrix: Vec<Vec<String>>) -> PyResult<usize> {
    Ok(mirabolic::stabilizer_dim(&parse_matrix(matrix)?))
}

#[pyfunction]
fn enumerate_selections(orbit: &PyOrbit) -> Vec<PySelection> {
    mirabolic::enumerate_selections(&orbit.0)
        .into_iter()
        .map(PySelection)
        .collect()
}

#[pyfunction]
fn dense_selection(orbit: &PyOrbit) -> PySelection {
    PySelection(mirabolic::dense_selection(&orbit.0))
}

#[pyfunction]
fn symbolic_image(orbit: &PyOrbit, selection: &PySelection) -> PyResult<PyMirabolicOrbit> {
    mirabolic::symbolic_image(&orbit.0, &selection.0)
        .map(PyMirabolicOrbit)
        .map_err(value_err)
}

/// The image computed by classifying the moved point directly.
#[pyfunction]
fn oracle_image(orbit: &PyOrbit, selection: &PySelection) -> PyResult<PyMirabolicOrbit> {
    mirabolic::oracle_image(&orbit.0, &selection.0)
        .map(PyMirabolicOrbit)
        .map_err(value_err)
}

/// Geometric report over all selections, as JSON.
#[pyfunction]
fn check_geometry(orbit: &PyOrbit) -> PyResult<String> {
    to_json(&mirabolic::check_geometry(&orbit.0).map_err(value_err)?)
}

#[pyfunction]
#[pyo3(signature = (orbit, signs = None))]
fn attach_rep_gl(orbit: &PyOrbit, signs: Option<Signs>) -> PyResult<PyRepLabel> {
    mirabolic::attach_rep_gl(&orbit.0, signs.as_ref())
        .map(PyRepLabel)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (orbit, signs = None))]
fn attach_rep_p(orbit: &PyMirabolicOrbit, signs: Option<Signs>) -> PyResult<PyPRepLabel> {
    mirabolic::attach_rep_p(&orbit.0, signs.as_ref())
        .map(PyPRepLabel)
        .map_err(value_err)
}

/// Restriction versus attachment to the dense image, as a JSON report.
#[pyfunction]
#[pyo3(signature = (orbit, signs = None))]
fn verify_duflo(orbit: &PyOrbit, signs: Option<Signs>) -> PyResult<String> {
    to_json(&mirabolic::verify_duflo(&orbit.0, signs.as_ref()).map_err(value_err)?)
}

#[pymodule]
fn mirabolic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrbit>()?;
    m.add_class::<PyMirabolicOrbit>()?;
    m.add_class::<PySelection>()?;
    m.add_class::<PyRepLabel>()?;
    m.add_class::<PyPRepLabel>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer_dim, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_selections, m)?)?;
    m.add_function(wrap_pyfunction!(dense_selection, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_image, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_image, m)?)?;
    m.add_function(wrap_pyfunction!(check_geometry, m)?)?;
    m.add_function(wrap_pyfunction!(attach_rep_gl, m)?)?;
    m.add_function(wrap_pyfunction!(attach_rep_p, m)?)?;
    m.add_function(wrap_pyfunction!(verify_duflo, m)?)?;
    Ok(())
}
