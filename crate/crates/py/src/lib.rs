//! Python bindings: `qfact.Polynomial`, `qfact.KrFactor`, `qfact.Graph` and
//! the top-level analyses.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qfact_core as core;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Drinfeld polynomial over a type A diagram.
#[pyclass(module = "qfact", name = "Polynomial", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial(core::DrinfeldPolynomial);

#[pymethods]
impl Polynomial {
    /// Parses `"A3; w[1,3] w[2,0]^2 kr[3,1,2]"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        core::parse_polynomial(text).map(Self).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.diagram().rank()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Fundamental factors `(i, a)` with repetition.
    fn fundamentals(&self) -> Vec<(usize, i64)> {
        self.0.fundamentals().map(|w| (w.node, w.center)).collect()
    }

    fn support(&self) -> Vec<usize> {
        self.0.support().into_iter().collect()
    }

    fn bar(&self) -> Self {
        Self(self.0.bar())
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn codual(&self) -> Self {
        Self(self.0.codual())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.times(&other.0).map(Self).map_err(err)
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.divides(&other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.0.to_string())
    }
}

/// KR polynomial `ω_{i,a,r}`.
#[pyclass(module = "qfact", name = "KrFactor", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrFactor(core::KrFactor);

#[pymethods]
impl KrFactor {
    #[new]
    fn new(i: usize, a: i64, r: u32) -> PyResult<Self> {
        core::KrFactor::new(i, a, r).map(Self).map_err(err)
    }

    #[getter]
    fn i(&self) -> usize {
        self.0.node
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.center
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.length
    }

    fn expand(&self, rank: usize) -> PyResult<Polynomial> {
        let d = core::DynkinA::new(rank).map_err(err)?;
        self.0.expand(d).map(Polynomial).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("KrFactor({}, {}, {})", self.0.node, self.0.center, self.0.length)
    }
}

/// Pseudo q-factorization graph.
#[pyclass(module = "qfact", name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Graph(core::PQGraph);

#[pymethods]
impl Graph {
    /// One vertex per fundamental factor.
    #[staticmethod]
    fn fund(p: &Polynomial) -> Self {
        Self(core::PQGraph::fundamental(&p.0))
    }

    /// One vertex per q-factor.
    #[staticmethod]
    fn qfact(p: &Polynomial) -> Self {
        Self(core::PQGraph::q_factorization(&p.0))
    }

    fn vertices(&self) -> Vec<(u32, KrFactor)> {
        self.0.vertices().map(|(v, k)| (v.0, KrFactor(k))).collect()
    }

    fn arrows(&self) -> Vec<(u32, u32)> {
        self.0.arrows().map(|(v, w)| (v.0, w.0)).collect()
    }

    fn is_totally_ordered(&self) -> bool {
        self.0.is_totally_ordered()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn mtos(&self) -> PyResult<Vec<Vec<u32>>> {
        let sets = core::enumerate_mtos(&self.0).map_err(err)?;
        Ok(sets.into_iter().map(|s| s.into_iter().map(|v| v.0).collect()).collect())
    }

    fn fuse(&self, v: u32, w: u32) -> PyResult<Self> {
        self.0
            .fuse_vertices(core::VertexId(v), core::VertexId(w))
            .map(Self)
            .map_err(err)
    }

    fn polynomial(&self) -> Polynomial {
        Polynomial(self.0.polynomial())
    }

    fn dot(&self) -> String {
        self.0.to_dot()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyfunction]
fn parse(text: &str) -> PyResult<Polynomial> {
    Polynomial::new(text)
}

#[pyfunction]
fn q_factorization(p: &Polynomial) -> Vec<KrFactor> {
    core::q_factorization(&p.0).into_iter().map(KrFactor).collect()
}

/// `(status, factors)` from the first applicable route.
#[pyfunction]
fn factorize(p: &Polynomial) -> PyResult<(String, Vec<Polynomial>)> {
    let r = core::prime_factorize_small(&p.0).map_err(err)?;
    Ok((
        r.status.as_str().to_string(),
        r.factors.into_iter().map(Polynomial).collect(),
    ))
}

#[pyfunction]
fn has_snake_support(p: &Polynomial) -> bool {
    core::has_snake_support(&p.0)
}

#[pyfunction]
fn is_prime_snake(p: &Polynomial) -> bool {
    core::is_prime_snake_polynomial(&p.0)
}

#[pymodule]
fn qfact(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<KrFactor>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(has_snake_support, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime_snake, m)?)?;
    Ok(())
}
