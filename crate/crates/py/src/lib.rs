//! Python bindings for the `updown` crate.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use updown::basis::{self, ConstructMethod, ValueRoute};
use updown::signature::{self, Signature};
use updown::{alternant, lab, oracle, output, series, triangle, verify, Error};

create_exception!(updown, BudgetExceeded, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Budget { .. } => BudgetExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_sig(s: &str) -> PyResult<Signature> {
    s.parse().map_err(to_py)
}

fn route_of(name: &str) -> PyResult<ValueRoute> {
    let name = match name {
        "niven1" => "niven",
        "det14" => "places",
        "det40" => "exponents",
        "lambda66" => "lambda",
        other => other,
    };
    ValueRoute::ALL
        .into_iter()
        .find(|r| r.name() == name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown route {name:?}")))
}

fn method_of(name: &str) -> PyResult<ConstructMethod> {
    let name = match name {
        "explicit15" => "permanent",
        "symmetric30" => "symmetric",
        "recursion37" => "recursion",
        "system46" => "system",
        "step47" => "step",
        other => other,
    };
    ConstructMethod::ALL
        .into_iter()
        .find(|m| m.name() == name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown method {name:?}")))
}

/// The basis polynomial `{n\k}` in the binomial basis.
#[pyclass(name = "BasisPolynomial", frozen)]
struct PyBasisPolynomial {
    inner: basis::BasisPolynomial,
}

#[pymethods]
impl PyBasisPolynomial {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: text.parse().map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: output::poly_from_json(text).map_err(to_py)?,
        })
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.k()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn constant(&self) -> i32 {
        self.inner.constant()
    }

    /// `[(t, c), ...]` with `t` descending.
    #[getter]
    fn terms(&self) -> Vec<(u32, BigInt)> {
        self.inner.terms().to_vec()
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.inner.exponents()
    }

    fn evaluate(&self, n: i64) -> BigInt {
        self.inner.evaluate(n)
    }

    /// `t_1! * P` as integer monomial coefficients, lowest degree first.
    fn integer_monomial(&self) -> Vec<BigInt> {
        self.inner.integer_monomial()
    }

    fn positive_roots(&self) -> Vec<u32> {
        basis::positive_roots(self.inner.k())
    }

    fn to_json(&self) -> String {
        output::poly_to_json(&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BasisPolynomial({})", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __call__(&self, n: i64) -> BigInt {
        self.inner.evaluate(n)
    }
}

/// Number of permutations with the given signature, e.g. `"-1,1,1,-1,1"` or `"d,u,u,d,u"`.
///
/// `mask` is `"ones"`, `"no-fixed"` or `"endpoint:l,m"`; masks need the oracle or alternant method.
#[pyfunction]
#[pyo3(signature = (signature, mask=None, method="oracle"))]
fn count(signature: &str, mask: Option<&str>, method: &str) -> PyResult<BigInt> {
    let sig = parse_sig(signature)?;
    let n = sig.order();
    let route = route_of(method)?;
    let Some(mask) = mask else {
        let k = signature::encode_index(&sig).map_err(to_py)?.value();
        return basis::value(n, k, route).map_err(to_py);
    };
    let endpoint = |spec: &str| -> PyResult<(u32, u32)> {
        spec.strip_prefix("endpoint:")
            .and_then(|r| r.split_once(','))
            .and_then(|(l, m)| Some((l.trim().parse().ok()?, m.trim().parse().ok()?)))
            .ok_or_else(|| PyValueError::new_err(format!("bad mask {spec:?}")))
    };
    match route {
        ValueRoute::Oracle => {
            let m = match mask {
                "ones" => oracle::PositionMask::ones(n),
                "no-fixed" => oracle::PositionMask::no_fixed(n),
                spec => {
                    let (l, m) = endpoint(spec)?;
                    oracle::PositionMask::endpoints(n, l, m).map_err(to_py)?
                }
            };
            oracle::count_signature(&sig, Some(&m)).map_err(to_py)
        }
        ValueRoute::Alternant => {
            let kind = match mask {
                "ones" => alternant::WeightKind::Ones,
                "no-fixed" => alternant::WeightKind::OnesMinusIdentity,
                spec => {
                    let (l, m) = endpoint(spec)?;
                    alternant::WeightKind::Endpoint { l, m }
                }
            };
            let a = alternant::build_weight(kind, n).map_err(to_py)?;
            alternant::alt_memo(&a, &sig).map_err(to_py)
        }
        _ => Err(PyValueError::new_err(
            "masks need method 'oracle' or 'alternant'",
        )),
    }
}

/// `{n\k}` by the named route.
#[pyfunction]
#[pyo3(signature = (n, k, route="poly"))]
fn value(n: u32, k: u64, route: &str) -> PyResult<BigInt> {
    basis::value(n, k, route_of(route)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, method="recursion"))]
fn construct(k: u64, method: &str) -> PyResult<PyBasisPolynomial> {
    Ok(PyBasisPolynomial {
        inner: basis::construct(k, method_of(method)?),
    })
}

#[pyfunction]
fn encode_index(signature: &str) -> PyResult<u64> {
    Ok(signature::encode_index(&parse_sig(signature)?)
        .map_err(to_py)?
        .value())
}

/// Steps of the signature with index `k`, as `+1`/`-1`.
#[pyfunction]
fn decode_index(n: u32, k: u64) -> PyResult<Vec<i32>> {
    Ok(signature::decode_index(n, k).map_err(to_py)?.signs())
}

#[pyfunction]
fn counts_all(n: u32) -> PyResult<Vec<BigInt>> {
    oracle::counts_all(n).map_err(to_py)
}

#[pyfunction]
fn witness(n: u32, k: u64) -> PyResult<Vec<u32>> {
    Ok(oracle::witness_permutation(n, k)
        .map_err(to_py)?
        .values()
        .to_vec())
}

#[pyfunction]
fn triangle_rows(signature: &str) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(triangle::triangle_rows(&parse_sig(signature)?)
        .rows()
        .to_vec())
}

#[pyfunction]
fn formal_value(a: u32, k: u64) -> BigInt {
    basis::formal_value(a, k)
}

#[pyfunction]
fn row_sequence(a: u32, length: usize) -> Vec<BigInt> {
    basis::row_sequence(a, length)
}

/// Coefficients of `P_n(x)`, lowest degree first.
#[pyfunction]
fn row_polynomial(n: u32) -> PyResult<Vec<BigInt>> {
    Ok(series::pn_polynomial(n).map_err(to_py)?.coeffs().to_vec())
}

#[pyfunction]
fn euler_number(m: u32) -> PyResult<BigInt> {
    series::euler_determinant(m).map_err(to_py)
}

/// `B_2m` as `(numerator, denominator)`.
#[pyfunction]
fn bernoulli(m: u32) -> PyResult<(BigInt, BigInt)> {
    let b = series::bernoulli_recover(m).map_err(to_py)?;
    Ok((b.numer().clone(), b.denom().clone()))
}

/// Real-root profile of `{n\k}` as a dict.
#[pyfunction]
fn root_profile(py: Python<'_>, k: u64) -> PyResult<Py<PyAny>> {
    let p = lab::real_root_profile(k).map_err(to_py)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("k", p.k)?;
    d.set_item("degree", p.degree)?;
    d.set_item("real_count", p.real_count)?;
    d.set_item("real_with_multiplicity", p.real_with_multiplicity)?;
    let roots: Vec<(BigInt, BigInt)> = p
        .rational_roots
        .iter()
        .map(|r| (r.numer().clone(), r.denom().clone()))
        .collect();
    d.set_item("rational_roots", roots)?;
    d.set_item("all_real", p.all_real)?;
    d.set_item("zero_bits", p.zero_bits)?;
    Ok(d.into_any().unbind())
}

/// Runs a self-check suite; returns `(passed, failed, report)`.
#[pyfunction]
#[pyo3(signature = (suite="core", n_max=6))]
fn run_verify(suite: &str, n_max: u32) -> PyResult<(usize, usize, String)> {
    let suite = match suite {
        "all" => verify::Suite::All,
        "core" => verify::Suite::Core,
        "identities" => verify::Suite::Identities,
        "roots" => verify::Suite::Roots,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    let report = verify::run(suite, n_max, &verify::default_table()).map_err(to_py)?;
    Ok((report.passed(), report.failed(), report.to_string()))
}

#[pymodule]
#[pyo3(name = "updown")]
fn updown_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<PyBasisPolynomial>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(value, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(encode_index, m)?)?;
    m.add_function(wrap_pyfunction!(decode_index, m)?)?;
    m.add_function(wrap_pyfunction!(counts_all, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_rows, m)?)?;
    m.add_function(wrap_pyfunction!(formal_value, m)?)?;
    m.add_function(wrap_pyfunction!(row_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(row_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(euler_number, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(root_profile, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
