//! Python bindings: a `Hypergraph` class plus the engine entry points.
//! Reports and tables come back as plain dicts.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use engine::atlas::{self, CanonicalForm, FamilySpec};
use engine::betti::{self, EngineConfig};
use engine::bounds::{self, TheoremId};
use engine::document::{self, IdealFormat};
use engine::homology::{self, FieldSpec, DEFAULT_FACE_CAP};
use engine::hypercomb;

create_exception!(bettilab, BettilabError, PyException);

fn err(e: engine::Error) -> PyErr {
    BettilabError::new_err(e.to_string())
}

fn parse_field(name: &str) -> PyResult<FieldSpec> {
    name.parse().map_err(err)
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| BettilabError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Squarefree monomial ideal, stored as its minimal generators over `1..=n`.
#[pyclass(frozen, skip_from_py_object, name = "Hypergraph", module = "bettilab")]
#[derive(Clone)]
struct PyHypergraph(hypercomb::Hypergraph);

#[pymethods]
impl PyHypergraph {
    #[new]
    #[pyo3(signature = (n, edges, minimalize = false))]
    fn new(n: usize, edges: Vec<Vec<usize>>, minimalize: bool) -> PyResult<Self> {
        hypercomb::Hypergraph::new(n, &edges, minimalize).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.0.edge_lists()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn is_pure(&self) -> bool {
        self.0.is_pure()
    }

    fn is_hypertree(&self) -> PyResult<bool> {
        self.0.is_hypertree().map_err(err)
    }

    fn is_hyperforest(&self) -> PyResult<bool> {
        self.0.is_hyperforest().map_err(err)
    }

    fn diameter(&self) -> PyResult<usize> {
        self.0.diameter().map_err(err)
    }

    fn induced(&self, w: Vec<usize>) -> PyResult<Self> {
        self.0.induced(w.into_iter().collect()).map(Self).map_err(err)
    }

    fn link(&self, v: usize) -> PyResult<Self> {
        self.0.link(v).map(Self).map_err(err)
    }

    fn antistar(&self, v: usize) -> PyResult<Self> {
        self.0.antistar(v).map(Self).map_err(err)
    }

    /// Color of each vertex `1..=n` in the unique proper `d`-coloring, or None.
    #[pyo3(signature = (d = None))]
    fn proper_coloring(&self, d: Option<usize>) -> PyResult<Option<BTreeMap<usize, usize>>> {
        let d = d.unwrap_or(self.0.degree());
        let c = self.0.proper_coloring(d).map_err(err)?;
        Ok(c.map(|c| c.pairs().into_iter().collect()))
    }

    /// `{(i, a): β_{i,a}}` of the minimal resolution.
    #[pyo3(signature = (field = "Q"))]
    fn betti_table(&self, field: &str) -> PyResult<BTreeMap<(usize, usize), u64>> {
        let table = betti::betti_table(&self.0, parse_field(field)?, &EngineConfig::default()).map_err(err)?;
        Ok(table.entries().collect())
    }

    #[pyo3(signature = (field = "Q"))]
    fn total_betti(&self, field: &str) -> PyResult<Vec<u64>> {
        let table = betti::betti_table(&self.0, parse_field(field)?, &EngineConfig::default()).map_err(err)?;
        Ok(table.total())
    }

    #[pyo3(signature = (i, a, field = "Q"))]
    fn graded_betti(&self, i: usize, a: usize, field: &str) -> PyResult<u64> {
        let f = parse_field(field)?;
        betti::hochster_graded_betti(&self.0, i, a, f, &EngineConfig::default()).map_err(err)
    }

    fn taylor_table(&self) -> PyResult<BTreeMap<(usize, usize), u64>> {
        let table = betti::taylor_table(&self.0, &EngineConfig::default()).map_err(err)?;
        Ok(table.entries().collect())
    }

    fn taylor_betti(&self, i: usize, j: usize) -> u64 {
        betti::taylor_graded_betti(&self.0, i, j)
    }

    /// Nonzero reduced Betti numbers `{p: dim}` of the complex whose minimal
    /// nonfaces are the edges.
    #[pyo3(signature = (field = "Q"))]
    fn reduced_homology(&self, field: &str) -> PyResult<BTreeMap<i64, u64>> {
        let h = homology::reduced_betti(&self.0.complex(), parse_field(field)?, DEFAULT_FACE_CAP).map_err(err)?;
        Ok(h.nonzero().into_iter().collect())
    }

    /// Hex certificate; equal iff isomorphic.
    fn canonical_form(&self) -> String {
        CanonicalForm::of(&self.0).to_hex()
    }

    fn is_isomorphic(&self, other: &PyHypergraph) -> bool {
        atlas::is_isomorphic(&self.0, &other.0)
    }

    #[pyo3(signature = (theorem, field = "Q"))]
    fn check<'py>(&self, py: Python<'py>, theorem: &str, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let id: TheoremId = theorem.parse().map_err(err)?;
        let report = bounds::verify_bound(id, &self.0, parse_field(field)?, &EngineConfig::default()).map_err(err)?;
        let out = to_py(py, &report)?;
        out.set_item("verdict", to_py(py, &report.verdict())?)?;
        Ok(out)
    }

    fn witness<'py>(&self, py: Python<'py>, blue: usize, b_prime: Vec<usize>) -> PyResult<Bound<'py, PyAny>> {
        let coloring = self
            .0
            .proper_coloring(self.0.degree())
            .map_err(err)?
            .ok_or_else(|| BettilabError::new_err("no proper coloring"))?;
        let w = bounds::witness_subset(&self.0, &coloring, blue, b_prime.into_iter().collect()).map_err(err)?;
        to_py(py, &w)
    }

    /// Monomial text with `# vertices:` header.
    #[pyo3(signature = (format = "monomials"))]
    fn to_text(&self, format: &str) -> PyResult<String> {
        let fmt: IdealFormat = format.parse().map_err(err)?;
        Ok(document::format_ideal(&document::IdealDocument::from_hypergraph(&self.0), fmt))
    }

    fn __len__(&self) -> usize {
        self.0.edge_count()
    }

    fn __eq__(&self, other: &PyHypergraph) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.edge_lists().hash(&mut h);
        self.0.n().hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, edges={:?})", self.0.n(), self.0.edge_lists())
    }
}

#[pyfunction]
#[pyo3(signature = (text, format = "auto"))]
fn parse_ideal(text: &str, format: &str) -> PyResult<PyHypergraph> {
    let fmt: IdealFormat = format.parse().map_err(err)?;
    let doc = document::parse_ideal(text, fmt).map_err(err)?;
    doc.hypergraph().map(PyHypergraph).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (family, *params))]
fn generate(family: &str, params: &Bound<'_, PyTuple>) -> PyResult<PyHypergraph> {
    let params: Vec<usize> = params.extract()?;
    let spec = FamilySpec::from_args(family, &params).map_err(err)?;
    atlas::generate(&spec).map(PyHypergraph).map_err(err)
}

#[pyfunction]
fn turan(n: usize, k: usize, l: usize) -> PyResult<u64> {
    bounds::turan_number(n, k, l).map_err(err)
}

#[pyfunction]
fn nearly_even_partition(r: u64, d: u64) -> PyResult<Vec<u64>> {
    bounds::nearly_even_partition(r, d).map(|p| p.parts).map_err(err)
}

#[pyfunction]
fn enumerate_pure(d: usize, t: usize) -> PyResult<Vec<PyHypergraph>> {
    let classes = atlas::enumerate_pure_hypergraphs(d, t, atlas::DEFAULT_BUDGET).map_err(err)?;
    Ok(classes.into_iter().map(PyHypergraph).collect())
}

#[pyfunction]
fn enumerate_hypertrees(d: usize, t: usize) -> PyResult<Vec<PyHypergraph>> {
    let classes = atlas::enumerate_hypertrees(d, t, atlas::DEFAULT_BUDGET).map_err(err)?;
    Ok(classes.into_iter().map(PyHypergraph).collect())
}

#[pyfunction]
#[pyo3(signature = (field = "Q"))]
fn reproduce_section4<'py>(py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
    let f = parse_field(field)?;
    let report = py
        .detach(|| atlas::reproduce_section4(f, &EngineConfig::default(), atlas::DEFAULT_BUDGET, None))
        .map_err(err)?;
    let out = to_py(py, &report)?;
    out.set_item("verdict", to_py(py, &report.verdict())?)?;
    Ok(out)
}

#[pymodule]
fn bettilab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add("BettilabError", m.py().get_type::<BettilabError>())?;
    m.add("THEOREMS", TheoremId::ALL.iter().map(|t| t.as_str()).collect::<Vec<_>>())?;
    m.add("FAMILIES", FamilySpec::NAMES.to_vec())?;
    m.add_function(wrap_pyfunction!(parse_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(turan, m)?)?;
    m.add_function(wrap_pyfunction!(nearly_even_partition, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pure, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_hypertrees, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_section4, m)?)?;
    Ok(())
}
