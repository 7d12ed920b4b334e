//! Python bindings for `conic-mori`.
//!
//! Rationals go in as `int`, `fractions.Fraction` or `"p/q"` strings.
//! Structured results come back as the same dictionaries the CLI prints.

use std::collections::BTreeMap;

use conic_mori::chamber::{self, DivisorCombo, Generator, NMode};
use conic_mori::conic::{self as cc, LambdaFamily};
use conic_mori::kronecker::{self as kr, LinearForm};
use conic_mori::linalg::parse_rat;
use conic_mori::motivic::{self, SpaceId};
use conic_mori::{json, Error, Rat};
use num_bigint::BigInt;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyString;

pyo3::create_exception!(conic_mori_py, ConicMoriError, PyException);

fn to_py(e: Error) -> PyErr {
    ConicMoriError::new_err((e.code(), e.to_string()))
}

fn rat_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(s) = obj.cast::<PyString>() {
        return parse_rat(s.to_str()?).map_err(to_py);
    }
    obj.extract::<Rat>()
}

fn linear_arg(obj: &Bound<'_, PyAny>) -> PyResult<LinearForm> {
    let coeffs = obj
        .try_iter()?
        .map(|c| rat_arg(&c?))
        .collect::<PyResult<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(to_py(Error::InvalidInput("empty linear form".into())));
    }
    Ok(LinearForm::new(coeffs))
}

fn two<'py>(obj: &Bound<'py, PyAny>) -> PyResult<[Bound<'py, PyAny>; 2]> {
    let items = obj.try_iter()?.collect::<PyResult<Vec<_>>>()?;
    <[_; 2]>::try_from(items).map_err(|_| to_py(Error::InvalidInput("expected exactly two entries".into())))
}

fn loads<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn parse_json(text: &str) -> PyResult<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| to_py(Error::Parse(e.to_string())))
}

/// Integer polynomial in `q`.
#[pyclass(name = "QPoly", module = "conic_mori_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQPoly(conic_mori::QPoly);

#[pymethods]
impl PyQPoly {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> Self {
        PyQPoly(conic_mori::QPoly::new(coeffs))
    }

    /// Ascending coefficients.
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn eval_at_one(&self) -> BigInt {
        self.0.eval_at_one()
    }

    fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }

    fn exact_div(&self, other: &PyQPoly) -> PyResult<PyQPoly> {
        self.0.exact_div(&other.0).map(PyQPoly).map_err(to_py)
    }

    fn __add__(&self, other: &PyQPoly) -> PyQPoly {
        PyQPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyQPoly) -> PyQPoly {
        PyQPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyQPoly) -> PyQPoly {
        PyQPoly(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPoly({})", self.0)
    }
}

/// `space` is one of `Pn`, `Gr`, `MbarP`, `MbarGr`, `Sym2`, `T4`, `MP2-4m+2`.
#[pyfunction]
#[pyo3(signature = (space, n=None, k=None))]
fn poincare(space: &str, n: Option<usize>, k: Option<usize>) -> PyResult<PyQPoly> {
    let need = |v: Option<usize>, f: &str| v.ok_or_else(|| to_py(Error::InvalidInput(format!("{space} needs {f}"))));
    let id = match space {
        "Pn" => SpaceId::ProjSpace(need(n, "n")?),
        "Gr" => SpaceId::Grassmannian { k: need(k, "k")?, n: need(n, "n")? },
        "MbarP" => SpaceId::KontsevichProj(need(n, "n")?),
        "MbarGr" => SpaceId::MbarGr(need(n, "n")?),
        "Sym2" => SpaceId::Sym2Of(Box::new(SpaceId::ProjSpace(need(n, "n")?))),
        "T4" => SpaceId::T4(need(n, "n")?),
        "MP2-4m+2" => SpaceId::MP2FourMPlusTwo,
        _ => return Err(to_py(Error::InvalidInput(format!("unknown space {space:?}")))),
    };
    motivic::poincare(&id).map(PyQPoly).map_err(to_py)
}

/// 2×2 matrix of linear forms, `matrix[r][c]` the coefficients of `x₀ … x_n`.
#[pyclass(name = "KroneckerModule", module = "conic_mori_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyKronecker(kr::KroneckerModule);

#[pymethods]
impl PyKronecker {
    #[new]
    fn new(matrix: &Bound<'_, PyAny>) -> PyResult<Self> {
        let [r0, r1] = two(matrix)?;
        let row = |r: &Bound<'_, PyAny>| -> PyResult<[LinearForm; 2]> {
            let [a, b] = two(r)?;
            Ok([linear_arg(&a)?, linear_arg(&b)?])
        };
        kr::KroneckerModule::new([row(&r0)?, row(&r1)?]).map(PyKronecker).map_err(to_py)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        json::module_from_json(&parse_json(text)?).map(PyKronecker).map_err(to_py)
    }

    fn to_json(&self) -> String {
        json::module_to_json(&self.0).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// `{"verdict", "closed_orbit", "stabilizer", "witness", ...}`.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        loads(py, &json::stability_to_json(&kr::classify_stability(&self.0)))
    }

    fn stratify(&self) -> &'static str {
        kr::stratify(&self.0).as_str()
    }

    fn det_rank(&self) -> usize {
        kr::quadric_rank(&kr::det_quadric(&self.0))
    }

    fn plucker_conic(&self) -> PyPlucker {
        PyPlucker(cc::plucker_conic(&self.0))
    }

    fn transform(&self, a: [[Bound<'_, PyAny>; 2]; 2], b: [[Bound<'_, PyAny>; 2]; 2]) -> PyResult<Self> {
        let conv = |m: [[Bound<'_, PyAny>; 2]; 2]| -> PyResult<[[Rat; 2]; 2]> {
            let [[a, b], [c, d]] = m;
            Ok([[rat_arg(&a)?, rat_arg(&b)?], [rat_arg(&c)?, rat_arg(&d)?]])
        };
        self.0.transform(&conv(a)?, &conv(b)?).map(PyKronecker).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("KroneckerModule({})", self.to_json())
    }
}

/// Plücker coordinates of a conic, one binary quadratic per `(i, j)`.
#[pyclass(name = "PluckerConic", module = "conic_mori_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPlucker(cc::PluckerConic);

#[pymethods]
impl PyPlucker {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        json::conic_from_json(&parse_json(text)?).map(PyPlucker).map_err(to_py)
    }

    fn to_json(&self) -> String {
        json::conic_to_json(&self.0).to_string()
    }

    /// `{(i, j): [c_ss, c_st, c_tt]}` with rational strings.
    fn coords(&self) -> BTreeMap<(usize, usize), Vec<String>> {
        self.0
            .coords()
            .iter()
            .map(|(&k, f)| (k, f.coeffs().iter().map(conic_mori::linalg::rat_to_string).collect()))
            .collect()
    }

    fn relations_vanish(&self) -> bool {
        self.0.plucker_relations().iter().all(|(_, f)| f.is_zero())
    }

    fn envelope_dim(&self) -> PyResult<usize> {
        cc::envelope(&self.0).map(|e| e.dim()).map_err(to_py)
    }

    fn degree(&self) -> PyResult<usize> {
        cc::conic_degree(&self.0).map_err(to_py)
    }
}

/// Elementary modification of a λ-family given as a JSON document.
#[pyfunction]
fn modify_family<'py>(py: Python<'py>, family_json: &str) -> PyResult<Bound<'py, PyAny>> {
    let f: LambdaFamily = json::family_from_json(&parse_json(family_json)?).map_err(to_py)?;
    loads(py, &json::modification_to_json(&cc::modify_family(&f).map_err(to_py)?))
}

fn combo_arg(coeffs: BTreeMap<String, Bound<'_, PyAny>>, n_mode: &str) -> PyResult<DivisorCombo> {
    let mode: NMode = n_mode.parse().map_err(to_py)?;
    let items = coeffs
        .iter()
        .map(|(k, v)| Ok((k.parse::<Generator>().map_err(to_py)?, rat_arg(v)?)))
        .collect::<PyResult<Vec<_>>>()?;
    DivisorCombo::new(items, mode).map_err(to_py)
}

/// Mori chamber verdict for `{"H11": 1, "T": "2/3", ...}`.
#[pyfunction]
#[pyo3(signature = (coeffs, n_mode="gt3"))]
fn resolve_chamber<'py>(
    py: Python<'py>,
    coeffs: BTreeMap<String, Bound<'py, PyAny>>,
    n_mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let d = combo_arg(coeffs, n_mode)?;
    loads(py, &json::verdict_to_json(&chamber::resolve(&d).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (coeffs, n_mode="gt3"))]
fn duality_reflect(coeffs: BTreeMap<String, Bound<'_, PyAny>>, n_mode: &str) -> PyResult<BTreeMap<String, String>> {
    let d = chamber::duality_reflect(&combo_arg(coeffs, n_mode)?);
    Ok(d.coeffs()
        .iter()
        .map(|(g, c)| (g.as_str().to_string(), conic_mori::linalg::rat_to_string(c)))
        .collect())
}

#[pymodule]
fn conic_mori_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ConicMoriError", m.py().get_type::<ConicMoriError>())?;
    m.add_class::<PyQPoly>()?;
    m.add_class::<PyKronecker>()?;
    m.add_class::<PyPlucker>()?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(modify_family, m)?)?;
    m.add_function(wrap_pyfunction!(resolve_chamber, m)?)?;
    m.add_function(wrap_pyfunction!(duality_reflect, m)?)?;
    Ok(())
}
