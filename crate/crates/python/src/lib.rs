//! Python bindings. Results that are structured on the Rust side are
//! returned as plain dicts and lists.

use edgemu::coloring::{self, EdgeColoring, DEFAULT_CHROMATIC_BUDGET};
use edgemu::families::{FamilyError, FamilySpec};
use edgemu::solver::{self, SolverConfig};
use edgemu::{Error, Graph};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

create_exception!(edgemu, BudgetExhausted, PyRuntimeError, "A search ran out of its node budget.");

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NodeBudget { .. } => BudgetExhausted::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn config(workers: usize, node_budget: u64) -> PyResult<SolverConfig> {
    if workers == 0 {
        return Err(PyValueError::new_err("workers must be at least 1"));
    }
    Ok(SolverConfig::default().with_workers(workers).with_node_budget(node_budget))
}

/// Converts any serializable value into Python objects via `json.loads`.
fn to_python<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple connected graph with numbered edges.
#[pyclass(name = "Graph", module = "edgemu", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = Graph::new(n, edges).map_err(|e| to_py_err(e.into()))?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = edgemu::parse_graph6(text).map_err(|e| to_py_err(e.into()))?;
        Ok(PyGraph { inner })
    }

    /// Parses an edge list; returns the graph and the original labels.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<(Self, Vec<u64>)> {
        let parsed = edgemu::parse_edge_list(text).map_err(|e| to_py_err(e.into()))?;
        Ok((PyGraph { inner: parsed.graph }, parsed.labels))
    }

    /// Family member such as `cycle:7` or `complete_bipartite:3,3`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(|e: FamilyError| to_py_err(e.into()))?;
        Ok(PyGraph { inner: spec.generate() })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    #[getter]
    fn regular_degree(&self) -> Option<usize> {
        self.inner.regular_degree()
    }

    fn to_graph6(&self) -> String {
        edgemu::to_graph6(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_CHROMATIC_BUDGET))]
fn chromatic_index(py: Python<'_>, g: &PyGraph, budget: u64) -> PyResult<usize> {
    py.detach(|| coloring::chromatic_index(&g.inner, budget)).map_err(to_py_err)
}

/// Number of vertices whose spectrum under `colors` is an interval.
#[pyfunction]
fn f(g: &PyGraph, colors: Vec<u32>) -> PyResult<usize> {
    let t = colors.iter().copied().max().unwrap_or(0);
    coloring::f(&g.inner, &EdgeColoring::new(t, colors)).map_err(to_py_err)
}

/// `(value, witness colors)` for the minimum of `f` over `t`-colorings.
#[pyfunction]
#[pyo3(signature = (g, t, workers = 1, node_budget = 100_000_000))]
fn mu1(py: Python<'_>, g: &PyGraph, t: u32, workers: usize, node_budget: u64) -> PyResult<(usize, Vec<u32>)> {
    let config = config(workers, node_budget)?;
    let e = py.detach(|| solver::mu1(&g.inner, t, &config)).map_err(to_py_err)?;
    Ok((e.value, e.witness.into_colors()))
}

/// `(value, witness colors)` for the maximum of `f` over `t`-colorings.
#[pyfunction]
#[pyo3(signature = (g, t, workers = 1, node_budget = 100_000_000))]
fn mu2(py: Python<'_>, g: &PyGraph, t: u32, workers: usize, node_budget: u64) -> PyResult<(usize, Vec<u32>)> {
    let config = config(workers, node_budget)?;
    let e = py.detach(|| solver::mu2(&g.inner, t, &config)).map_err(to_py_err)?;
    Ok((e.value, e.witness.into_colors()))
}

/// The full table and summary as a dict.
#[pyfunction]
#[pyo3(signature = (g, workers = 1, node_budget = 100_000_000))]
fn mu_all<'py>(py: Python<'py>, g: &PyGraph, workers: usize, node_budget: u64) -> PyResult<Bound<'py, PyAny>> {
    let config = config(workers, node_budget)?;
    let result = py.detach(|| solver::mu_all(&g.inner, &config)).map_err(to_py_err)?;
    to_python(py, &result)
}

/// True, False, or None when the search was cut off.
#[pyfunction]
#[pyo3(signature = (g, node_budget = 100_000_000))]
fn is_interval_colorable(py: Python<'_>, g: &PyGraph, node_budget: u64) -> PyResult<Option<bool>> {
    let config = config(1, node_budget)?;
    Ok(py.detach(|| solver::is_interval_colorable(&g.inner, &config)).as_bool())
}

#[pyfunction]
fn rainbow_bound(r: usize, n: usize) -> PyResult<usize> {
    solver::rainbow_bound(r, n).map_err(to_py_err)
}

/// Runs every applicable check on a family range such as `cycle:3..8`.
#[pyfunction]
#[pyo3(signature = (spec, workers = 1, node_budget = 100_000_000))]
fn verify_family<'py>(py: Python<'py>, spec: &str, workers: usize, node_budget: u64) -> PyResult<Bound<'py, PyAny>> {
    let config = config(workers, node_budget)?;
    let report = py
        .detach(|| edgemu::verifier::verify_family(spec, &config))
        .map_err(to_py_err)?;
    to_python(py, &report)
}

#[pymodule]
#[pyo3(name = "edgemu")]
fn edgemu_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add_function(wrap_pyfunction!(chromatic_index, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(mu1, m)?)?;
    m.add_function(wrap_pyfunction!(mu2, m)?)?;
    m.add_function(wrap_pyfunction!(mu_all, m)?)?;
    m.add_function(wrap_pyfunction!(is_interval_colorable, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    Ok(())
}
