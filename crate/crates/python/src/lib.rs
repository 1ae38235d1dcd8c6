use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use confluent::expr::{parse_laurent, to_latex};
use confluent::verify::{self, CheckConfig, Mode, Suite};
use confluent::{AlgebraId, FamilyKind, HeckeError, LaurentPoly, NCExpression, ParamRat, Params, Representation};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A Laurent polynomial in `z` with coefficients rational in `s, a, b, c`.
#[pyclass(name = "Laurent", module = "confluent_py", frozen)]
#[derive(Clone)]
struct PyLaurent {
    inner: LaurentPoly<ParamRat>,
}

#[pymethods]
impl PyLaurent {
    /// Parses inline text such as `"z + q*z^-1 - q*a"` or the JSON form.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyLaurent {
            inner: parse_laurent(text).map_err(value_error)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent('{}')", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Self) -> Self {
        PyLaurent {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyLaurent {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyLaurent {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> Self {
        PyLaurent { inner: self.inner.neg() }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Coefficient of `z^k` as text.
    fn coeff(&self, k: i64) -> String {
        self.inner.coeff(k).to_string()
    }

    /// `(exponent, coefficient text)` pairs by ascending exponent.
    fn terms(&self) -> Vec<(i64, String)> {
        self.inner.terms().map(|(k, c)| (k, c.to_string())).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("serializable")
    }

    fn to_latex(&self) -> String {
        to_latex(&self.inner)
    }
}

/// One of the four polynomial families, with generic parameters.
#[pyclass(name = "Family", module = "confluent_py", frozen)]
struct PyFamily {
    inner: confluent::FamilyCache<ParamRat>,
}

#[pymethods]
impl PyFamily {
    /// `kind` is one of dual-q-hahn, al-salam-chihara, big-q-hermite, q-hermite.
    #[new]
    fn new(kind: &str) -> PyResult<Self> {
        let kind: FamilyKind = kind.parse().map_err(value_error)?;
        Ok(PyFamily {
            inner: confluent::FamilyCache::new(confluent::Family::symbolic(kind)),
        })
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.family().kind().name()
    }

    fn sym_poly(&self, py: Python<'_>, n: i64) -> PyResult<PyLaurent> {
        let f = py.allow_threads(|| self.inner.sym_poly(n)).map_err(value_error)?;
        Ok(PyLaurent { inner: (*f).clone() })
    }

    fn dagger_poly(&self, py: Python<'_>, n: i64) -> PyResult<PyLaurent> {
        let f = py.allow_threads(|| self.inner.dagger_poly(n)).map_err(value_error)?;
        Ok(PyLaurent { inner: (*f).clone() })
    }

    /// The non-symmetric polynomial `E_idx`.
    fn nonsym_poly(&self, py: Python<'_>, idx: i64) -> PyResult<PyLaurent> {
        let f = py.allow_threads(|| self.inner.nonsym_poly(idx)).map_err(value_error)?;
        Ok(PyLaurent { inner: (*f).clone() })
    }

    /// `(low_exp, low_coeff, high_exp, high_coeff)` of `E_idx`.
    fn leading_data(&self, idx: i64) -> PyResult<(i64, String, i64, String)> {
        let d = self.inner.family().leading_data(idx).map_err(value_error)?;
        Ok((d.low_exp, d.low_coeff.to_string(), d.high_exp, d.high_coeff.to_string()))
    }
}

/// The basic representation of one algebra.
#[pyclass(name = "Algebra", module = "confluent_py", frozen)]
struct PyAlgebra {
    inner: Representation<ParamRat>,
}

#[pymethods]
impl PyAlgebra {
    /// `name` is one of v, iii, iii-d7, iii-d8.
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let alg: AlgebraId = name.parse().map_err(value_error)?;
        Ok(PyAlgebra {
            inner: Representation::new(alg, &Params::symbolic()),
        })
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.inner.algebra().name()
    }

    /// Applies a word or combination of words, e.g. `"T1*T0 + 1"`.
    fn apply(&self, py: Python<'_>, word: &str, f: &PyLaurent) -> PyResult<PyLaurent> {
        let expr: NCExpression<ParamRat> = word.parse().map_err(value_error)?;
        let expr = expr.at(self.inner.params()).map_err(value_error)?;
        match py.allow_threads(|| self.inner.eval_word(&expr, &f.inner)) {
            Ok(inner) => Ok(PyLaurent { inner }),
            Err(e @ HeckeError::OperatorNotPolynomial { .. }) => Err(PyArithmeticError::new_err(e.to_string())),
            Err(e) => Err(value_error(e)),
        }
    }
}

/// Runs verification suites and returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (algebra, suites = "all", nmax = 6, seed = None, trials = 3))]
fn run_verify(
    py: Python<'_>,
    algebra: &str,
    suites: &str,
    nmax: u32,
    seed: Option<u64>,
    trials: u32,
) -> PyResult<String> {
    let alg: AlgebraId = algebra.parse().map_err(value_error)?;
    let suites: Vec<Suite> = if suites == "all" {
        Suite::all_for(alg)
    } else {
        suites
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(value_error)?
    };
    let mode = match seed {
        Some(seed) => Mode::Specialized { seed, trials },
        None => Mode::Symbolic,
    };
    let cfg = CheckConfig::new(alg, suites, nmax, mode);
    let report = py.allow_threads(|| verify::run(&cfg)).map_err(value_error)?;
    Ok(report.to_json())
}

#[pymodule]
fn confluent_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
