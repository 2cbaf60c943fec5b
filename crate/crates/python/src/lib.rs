//! Python bindings. Rationals cross the boundary as exact strings (`"p/q"`).

use std::collections::BTreeMap;

use lieconf::catalog::{self, Params};
use lieconf::conformal::conformal_space;
use lieconf::document::InstanceDocument;
use lieconf::exact::{format_rational, format_vec, parse_rational, Matrix, Rational, Subspace};
use lieconf::geometry::scalar_curvature;
use lieconf::report::analyze;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: lieconf::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(s: &str) -> PyResult<Rational> {
    parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("`{s}` is not an exact rational")))
}

fn matrix(rows: Vec<Vec<String>>) -> PyResult<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse(s)).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(py_err)
}

fn basis(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| format_vec(v)).collect()
}

/// A Lie algebra with a left-invariant pseudo-Riemannian metric.
#[pyclass(name = "Instance", frozen)]
struct PyInstance {
    inner: catalog::Instance,
}

#[pymethods]
impl PyInstance {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = InstanceDocument::from_json(text)
            .and_then(|d| d.to_instance())
            .map_err(py_err)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        InstanceDocument::from_instance(&self.inner).to_json()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.algebra.dim()
    }

    fn is_unimodular(&self) -> bool {
        self.inner.algebra.is_unimodular()
    }

    /// `(p, q)`.
    fn signature(&self) -> (usize, usize) {
        (self.inner.metric.p(), self.inner.metric.q())
    }

    fn center(&self) -> Vec<Vec<String>> {
        basis(&self.inner.algebra.center())
    }

    fn commutator_ideal(&self) -> Vec<Vec<String>> {
        basis(&self.inner.algebra.commutator_ideal())
    }

    /// Basis of the solution space in coordinates `(x_1, …, x_n, rho)`.
    fn conformal_space(&self) -> PyResult<Vec<Vec<String>>> {
        let c = conformal_space(&self.inner.algebra, &self.inner.metric).map_err(py_err)?;
        Ok(basis(c.space()))
    }

    fn killing_space(&self) -> PyResult<Vec<Vec<String>>> {
        let c = conformal_space(&self.inner.algebra, &self.inner.metric).map_err(py_err)?;
        Ok(basis(&c.killing_space()))
    }

    fn nonkilling_exists(&self) -> PyResult<bool> {
        let c = conformal_space(&self.inner.algebra, &self.inner.metric).map_err(py_err)?;
        Ok(c.nonkilling_exists())
    }

    fn scalar_curvature(&self) -> PyResult<String> {
        scalar_curvature(&self.inner.algebra, &self.inner.metric)
            .map(|r| format_rational(&r))
            .map_err(py_err)
    }

    #[pyo3(signature = (seed = 0, samples = 8))]
    fn analyze_json(&self, seed: u64, samples: usize) -> PyResult<String> {
        analyze(&self.inner, seed, samples).map(|r| r.to_json()).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Instance({})", self.inner.label())
    }
}

#[pyfunction]
fn list_families() -> Vec<&'static str> {
    catalog::family_names()
}

#[pyfunction]
#[pyo3(signature = (name, params = None))]
fn instantiate(name: &str, params: Option<BTreeMap<String, String>>) -> PyResult<PyInstance> {
    let params = params
        .unwrap_or_default()
        .into_iter()
        .map(|(k, v)| Ok((k, parse(&v)?)))
        .collect::<PyResult<Params>>()?;
    let inner = catalog::instantiate(name, &params).map_err(py_err)?;
    Ok(PyInstance { inner })
}

/// Canonical (reduced echelon) basis of the kernel of a rational matrix.
#[pyfunction]
fn kernel(rows: Vec<Vec<String>>) -> PyResult<Vec<Vec<String>>> {
    Ok(basis(&matrix(rows)?.kernel()))
}

/// `(positive, negative, zero)` inertia of a symmetric rational matrix.
#[pyfunction]
fn signature(rows: Vec<Vec<String>>) -> PyResult<(usize, usize, usize)> {
    let m = matrix(rows)?;
    if !m.is_symmetric() {
        return Err(py_err(lieconf::Error::NotSymmetric));
    }
    let s = m.signature().map_err(py_err)?;
    Ok((s.positive, s.negative, s.zero))
}

#[pymodule]
fn pylieconf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(list_families, m)?)?;
    m.add_function(wrap_pyfunction!(instantiate, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(signature, m)?)?;
    Ok(())
}
