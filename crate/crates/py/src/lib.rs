//! Python bindings: operators, seeds, reports and the evaluators.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use skeindaha::cluster::{parse_script, Seed};
use skeindaha::daha::{e_sided, word_eval, GenPoly};
use skeindaha::qdiff::{make_g, make_k};
use skeindaha::skein::{curve_operator, CurveSpec};
use skeindaha::Suite;

fn err(e: skeindaha::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

/// q-difference operator with exact rational-function coefficients.
#[pyclass(name = "Operator", frozen)]
pub struct PyOperator(skeindaha::Operator);

#[pymethods]
impl PyOperator {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyOperator(skeindaha::Operator::from_json(&v).map_err(err)?))
    }

    fn to_json(&self) -> String {
        pretty(&self.0.to_json())
    }

    fn to_latex(&self) -> String {
        self.0.to_latex()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn term_count(&self) -> usize {
        self.0.term_count()
    }

    /// Right multiplication by the idempotent.
    fn e_sided(&self) -> Self {
        PyOperator(e_sided(&self.0))
    }

    fn __add__(&self, o: &Self) -> Self {
        PyOperator(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyOperator(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyOperator(&self.0 * &o.0)
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __str__(&self) -> String {
        self.0.render()
    }

    fn __repr__(&self) -> String {
        format!("Operator({} terms)", self.0.len())
    }
}

/// Seed of six y-variables and an exchange matrix.
#[pyclass(name = "Seed", frozen)]
pub struct PySeed(Seed);

#[pymethods]
impl PySeed {
    #[staticmethod]
    fn initial() -> Self {
        PySeed(Seed::initial())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PySeed(Seed::from_json(&v).map_err(err)?))
    }

    /// Mutation at vertex `k` (1-based).
    fn mutate(&self, k: usize) -> PyResult<Self> {
        Ok(PySeed(self.0.mutate(k).map_err(err)?))
    }

    fn permute(&self, i: usize, j: usize) -> PyResult<Self> {
        Ok(PySeed(self.0.permute(i, j).map_err(err)?))
    }

    /// Applies a script such as `"2,3,s(3,5),1"`.
    fn run(&self, script: &str) -> PyResult<Self> {
        let steps = parse_script(script).map_err(err)?;
        Ok(PySeed(self.0.run(&steps).map_err(err)?))
    }

    fn to_json(&self) -> String {
        pretty(&self.0.to_json())
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

/// Outcome of a suite run.
#[pyclass(name = "Report", frozen)]
pub struct PyReport(skeindaha::Report);

#[pymethods]
impl PyReport {
    fn all_pass(&self) -> bool {
        self.0.all_pass()
    }

    fn total(&self) -> usize {
        self.0.total()
    }

    fn passed(&self) -> usize {
        self.0.passed()
    }

    fn ids(&self) -> Vec<String> {
        self.0.checks.iter().map(|c| c.id.clone()).collect()
    }

    /// `(pass, level)` of one check.
    fn get(&self, id: &str) -> PyResult<(bool, String)> {
        let c = self.0.get(id).ok_or_else(|| PyKeyError::new_err(id.to_string()))?;
        Ok((c.pass, c.level.as_str().to_string()))
    }

    fn table(&self) -> String {
        self.0.render_table()
    }

    fn to_json(&self) -> String {
        pretty(&self.0.to_json())
    }
}

/// Runs `qdiff`, `daha`, `skein`, `cluster`, `pi1` or `all`.
#[pyfunction]
fn verify(suite: &str) -> PyResult<PyReport> {
    let s = Suite::from_name(suite).map_err(err)?;
    Ok(PyReport(s.run()))
}

#[pyfunction]
#[pyo3(signature = (word, e_sided = false))]
fn eval_word(word: &str, e_sided: bool) -> PyResult<PyOperator> {
    let op = word_eval(&GenPoly::parse(word).map_err(err)?);
    Ok(PyOperator(if e_sided { skeindaha::daha::e_sided(&op) } else { op }))
}

#[pyfunction]
#[pyo3(signature = (base, twists = ""))]
fn eval_curve(base: &str, twists: &str) -> PyResult<PyOperator> {
    let spec = CurveSpec::parse(base, twists).map_err(err)?;
    Ok(PyOperator(curve_operator(&spec).map_err(err)?))
}

#[pyfunction]
fn g_operator(n: i32) -> PyOperator {
    PyOperator(make_g(n))
}

#[pyfunction]
fn k_operator(n: i32) -> PyOperator {
    PyOperator(make_k(n))
}

#[pymodule]
fn pyskeindaha(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOperator>()?;
    m.add_class::<PySeed>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(eval_word, m)?)?;
    m.add_function(wrap_pyfunction!(eval_curve, m)?)?;
    m.add_function(wrap_pyfunction!(g_operator, m)?)?;
    m.add_function(wrap_pyfunction!(k_operator, m)?)?;
    Ok(())
}
