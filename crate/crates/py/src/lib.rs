//! Python bindings for the `kpath` engines.

use kpath::algebraic::{field_make, FieldElement, FieldSpec};
use kpath::color_coding::{colorful_walk_count_ie, Coloring};
use kpath::graph::{enumerate_k_paths, parse_graph as parse_edge_list};
use kpath::{hom, Algorithm, Graph, TrialReport};
use kpath_cli::dispatch::{self, CountAlgo};
use kpath_cli::verify::{run_verify, VerifyConfig};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn check_k(k: usize) -> PyResult<()> {
    if k == 0 {
        return Err(PyValueError::new_err("k must be at least 1"));
    }
    Ok(())
}

/// A simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "kpath", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges, directed = false))]
    fn new(n: usize, edges: Vec<(usize, usize)>, directed: bool) -> PyResult<Self> {
        let inner = Graph::new(n, directed, &edges).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    /// Parses the `n m directed|undirected` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = parse_edge_list(text).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_arc(u, v)
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, directed={})",
            self.inner.n(),
            self.inner.edge_count(),
            if self.inner.is_directed() {
                "True"
            } else {
                "False"
            }
        )
    }
}

/// Outcome of one engine run.
#[pyclass(name = "TrialReport", module = "kpath", frozen)]
struct PyTrialReport {
    inner: TrialReport,
}

#[pymethods]
impl PyTrialReport {
    #[getter]
    fn algorithm(&self) -> &'static str {
        self.inner.algorithm.name()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed
    }

    #[getter]
    fn trials_run(&self) -> u64 {
        self.inner.trials_run
    }

    /// "YES" or "NO".
    #[getter]
    fn decision(&self) -> &'static str {
        if self.inner.decision.is_yes() {
            "YES"
        } else {
            "NO"
        }
    }

    #[getter]
    fn is_yes(&self) -> bool {
        self.inner.decision.is_yes()
    }

    #[getter]
    fn witness(&self) -> Option<Vec<usize>> {
        self.inner.witness.as_ref().map(|w| w.vertices().to_vec())
    }

    #[getter]
    fn count(&self) -> Option<BigUint> {
        self.inner.count.clone()
    }

    #[getter]
    fn wall_time(&self) -> f64 {
        self.inner.wall_time
    }

    /// The single-line JSON form printed by the command-line tool.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "TrialReport(algorithm={:?}, k={}, decision={:?}, trials_run={})",
            self.inner.algorithm.name(),
            self.inner.k,
            self.decision(),
            self.inner.trials_run
        )
    }
}

/// The field GF(2^s) used by the algebraic engine for a given k.
#[pyclass(name = "Field", module = "kpath", frozen)]
struct PyField {
    spec: FieldSpec,
}

impl PyField {
    fn elem(&self, value: u64) -> PyResult<FieldElement> {
        self.spec.element(value).map_err(value_error)
    }
}

#[pymethods]
impl PyField {
    #[new]
    fn new(k: usize) -> PyResult<Self> {
        Ok(PyField {
            spec: field_make(k).map_err(value_error)?,
        })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.spec.degree()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.spec.modulus()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.spec.order()
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.spec.add(self.elem(a)?, self.elem(b)?).bits())
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.spec.mul(self.elem(a)?, self.elem(b)?).bits())
    }

    fn pow(&self, a: u64, e: u64) -> PyResult<u32> {
        Ok(self.spec.pow(self.elem(a)?, e).bits())
    }

    /// Multiplicative inverse, or `None` for zero.
    fn inv(&self, a: u64) -> PyResult<Option<u32>> {
        Ok(self.spec.inv(self.elem(a)?).map(FieldElement::bits))
    }

    fn __repr__(&self) -> String {
        format!(
            "Field(degree={}, modulus={:#x})",
            self.spec.degree(),
            self.spec.modulus()
        )
    }
}

fn coloring(g: &Graph, colors: Vec<u32>, k: usize) -> PyResult<Coloring> {
    if colors.len() != g.n() {
        return Err(PyValueError::new_err(format!(
            "colors has {} entries but the graph has {} vertices",
            colors.len(),
            g.n()
        )));
    }
    let palette = colors.iter().copied().max().unwrap_or(1).max(k as u32);
    Coloring::new(palette, colors).map_err(value_error)
}

/// Number of simple k-vertex paths, by exhaustive search.
#[pyfunction]
fn count_paths(py: Python<'_>, g: &PyGraph, k: usize) -> PyResult<BigUint> {
    check_k(k)?;
    Ok(py.detach(|| enumerate_k_paths(&g.inner, k, Some(0)).count))
}

/// Up to `limit` k-vertex paths as vertex lists (all of them when `limit` is None).
#[pyfunction]
#[pyo3(signature = (g, k, limit = None))]
fn enumerate_paths(
    py: Python<'_>,
    g: &PyGraph,
    k: usize,
    limit: Option<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    check_k(k)?;
    let e = py.detach(|| enumerate_k_paths(&g.inner, k, limit));
    Ok(e.witnesses
        .into_iter()
        .map(|w| w.vertices().to_vec())
        .collect())
}

/// Homomorphisms from the k-vertex path (k-vertex walks).
#[pyfunction]
fn hom_path(py: Python<'_>, g: &PyGraph, k: usize) -> PyResult<BigUint> {
    check_k(k)?;
    Ok(py.detach(|| hom::hom_path(&g.inner, k)))
}

/// Injective homomorphisms from the k-vertex path.
#[pyfunction]
fn inj_path(py: Python<'_>, g: &PyGraph, k: usize) -> PyResult<BigUint> {
    check_k(k)?;
    Ok(py.detach(|| hom::inj_path(&g.inner, k)))
}

/// Number of k-vertex path subgraphs, by inclusion-exclusion.
#[pyfunction]
fn sub_path(py: Python<'_>, g: &PyGraph, k: usize) -> PyResult<BigUint> {
    check_k(k)?;
    Ok(py.detach(|| hom::sub_path(&g.inner, k)))
}

/// Colorful k-vertex path sequences under `colors` (1-based, one per vertex),
/// counted with k-walks over color subsets.
#[pyfunction]
fn colorful_walk_count(
    py: Python<'_>,
    g: &PyGraph,
    colors: Vec<u32>,
    k: usize,
) -> PyResult<BigUint> {
    check_k(k)?;
    let phi = coloring(&g.inner, colors, k)?;
    Ok(py.detach(|| colorful_walk_count_ie(&g.inner, &phi, k)))
}

/// Colorful injective homomorphisms from the k-vertex path under `colors`.
#[pyfunction]
fn col_inj(py: Python<'_>, g: &PyGraph, colors: Vec<u32>, k: usize) -> PyResult<BigUint> {
    check_k(k)?;
    let phi = coloring(&g.inner, colors, k)?;
    if phi.palette_size() >= 64 {
        return Err(PyValueError::new_err("at most 63 colors are supported"));
    }
    Ok(py.detach(|| hom::col_inj(&g.inner, &phi, k)))
}

/// Runs a decision engine: dfs, color-coding, divide-color, count-ie,
/// count-colorful or algebraic.
#[pyfunction]
#[pyo3(signature = (g, k, algo = "algebraic", trials = None, seed = 0, witness = false))]
fn decide(
    py: Python<'_>,
    g: &PyGraph,
    k: usize,
    algo: &str,
    trials: Option<u64>,
    seed: u64,
    witness: bool,
) -> PyResult<PyTrialReport> {
    let algo: Algorithm = algo.parse().map_err(value_error)?;
    let inner = py
        .detach(|| dispatch::decide(&g.inner, k, algo, trials, seed, witness))
        .map_err(value_error)?;
    Ok(PyTrialReport { inner })
}

/// Exact count with one of dfs, ie, colorful-ie or appendix-a. Colorful
/// variants use `colors` or draw a coloring from `seed`.
#[pyfunction]
#[pyo3(signature = (g, k, algo = "ie", colors = None, seed = 0))]
fn count(
    py: Python<'_>,
    g: &PyGraph,
    k: usize,
    algo: &str,
    colors: Option<Vec<u32>>,
    seed: u64,
) -> PyResult<PyTrialReport> {
    let algo = match algo {
        "dfs" => CountAlgo::Dfs,
        "ie" => CountAlgo::Ie,
        "colorful-ie" => CountAlgo::ColorfulIe,
        "appendix-a" => CountAlgo::AppendixA,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown counting algorithm {other:?}"
            )))
        }
    };
    let inner = py
        .detach(|| dispatch::count(&g.inner, k, algo, colors, seed))
        .map_err(value_error)?;
    Ok(PyTrialReport { inner })
}

/// Cross-checks every engine on generated graphs. Returns
/// `(check, passed, cases)` triples.
#[pyfunction]
#[pyo3(signature = (max_n = 7, graphs = 200, seed = 0))]
fn verify(
    py: Python<'_>,
    max_n: usize,
    graphs: usize,
    seed: u64,
) -> Vec<(&'static str, bool, u64)> {
    let cfg = VerifyConfig {
        max_n,
        graphs,
        seed,
        inject_fault: false,
    };
    let summary = py.detach(|| run_verify(&cfg));
    summary
        .outcomes
        .iter()
        .map(|o| (o.check.name(), o.passed(), o.cases))
        .collect()
}

#[pymodule]
#[pyo3(name = "kpath")]
fn kpath_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTrialReport>()?;
    m.add_class::<PyField>()?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(hom_path, m)?)?;
    m.add_function(wrap_pyfunction!(inj_path, m)?)?;
    m.add_function(wrap_pyfunction!(sub_path, m)?)?;
    m.add_function(wrap_pyfunction!(colorful_walk_count, m)?)?;
    m.add_function(wrap_pyfunction!(col_inj, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
