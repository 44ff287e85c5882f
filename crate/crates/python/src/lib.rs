//! Python bindings: `import pyunivoque`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use univoque::expansions::{self, BetaValue};
use univoque::poly::{parse_rational, rational_to_f64};
use univoque::trapezoid::{self, Itinerary, TrapezoidParams};
use univoque::{oracle, thresholds, Error, PeriodicSeq};

create_exception!(pyunivoque, UndecidedError, PyException, "Digit or precision budget exhausted.");

fn err(e: Error) -> PyErr {
    if e.is_undecided() {
        UndecidedError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// A base in (1, 2), either a float or an exact algebraic number.
#[pyclass(name = "Beta", frozen, from_py_object)]
#[derive(Clone)]
struct PyBeta(BetaValue);

#[pymethods]
impl PyBeta {
    /// Parses `float:1.8`, `1.8` or `poly:[-1,-1,1]@(1,2)`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyBeta).map_err(err)
    }

    fn __float__(&self) -> f64 {
        self.0.approx()
    }

    fn is_algebraic(&self) -> bool {
        self.0.is_algebraic()
    }

    /// -1, 0 or 1; raises `UndecidedError` when floats are too close to order.
    fn compare(&self, other: &PyBeta) -> PyResult<i8> {
        self.0.compare(&other.0).map(|o| o as i8).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Beta('{}')", self.0)
    }
}

/// An eventually periodic 0-1 sequence, e.g. `1(10)^w`.
#[pyclass(name = "Seq", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySeq(PeriodicSeq);

#[pymethods]
impl PySeq {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PySeq).map_err(err)
    }

    fn prefix(&self, n: usize) -> String {
        self.0.prefix(n).to_string()
    }

    fn period_len(&self) -> usize {
        self.0.period_len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Seq('{}')", self.0)
    }
}

#[derive(FromPyObject)]
enum BetaArg {
    Beta(PyBeta),
    Float(f64),
    Text(String),
}

impl BetaArg {
    fn value(self) -> PyResult<BetaValue> {
        match self {
            BetaArg::Beta(b) => Ok(b.0),
            BetaArg::Float(v) => BetaValue::float(v).map_err(err),
            BetaArg::Text(s) => s.parse().map_err(err),
        }
    }
}

#[derive(FromPyObject)]
enum SeqArg {
    Seq(PySeq),
    Text(String),
}

impl SeqArg {
    fn value(self) -> PyResult<PeriodicSeq> {
        match self {
            SeqArg::Seq(s) => Ok(s.0),
            SeqArg::Text(s) => s.parse().map_err(err),
        }
    }
}

/// Smallest base admitting a unique expansion of smallest period `k`.
#[pyfunction]
#[pyo3(signature = (k, eps = 1e-8))]
fn beta_n(k: u64, eps: f64) -> PyResult<PyBeta> {
    thresholds::beta_n(k, eps).map(PyBeta).map_err(err)
}

/// The extremal period-`k` sequence; `method` is `recursive` or `explicit`.
#[pyfunction]
#[pyo3(signature = (k, method = "recursive"))]
fn a_k(k: u64, method: &str) -> PyResult<PySeq> {
    let s = match method {
        "recursive" => thresholds::a_k_recursive(k),
        "explicit" => thresholds::a_k_explicit(k),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    s.map(PySeq).map_err(err)
}

/// The defining polynomial, e.g. `x^2 - x - 1`.
#[pyfunction]
fn beta_poly(k: u64) -> PyResult<String> {
    thresholds::beta_poly(k).map(|p| p.to_string()).map_err(err)
}

/// -1 when `k` precedes `l` in the Sharkovskii order, 1 when it follows.
#[pyfunction]
fn sharkovskii_cmp(k: u64, l: u64) -> i8 {
    thresholds::sharkovskii_cmp(k, l) as i8
}

/// Certified `(lo, hi)` enclosure of the Komornik-Loreti constant.
#[pyfunction]
#[pyo3(signature = (eps = 1e-8))]
fn beta_kl(eps: f64) -> PyResult<(f64, f64)> {
    let b = thresholds::beta_kl_bracket(eps).map_err(err)?;
    Ok((rational_to_f64(&b.lo), rational_to_f64(&b.hi)))
}

#[pyfunction]
fn below_kl(k: u64) -> PyResult<bool> {
    thresholds::below_kl(k).map_err(err)
}

/// Rows of the threshold table as dicts.
#[pyfunction]
#[pyo3(signature = (n_max = 8, eps = 1e-8))]
fn table<'py>(py: Python<'py>, n_max: u64, eps: f64) -> PyResult<Vec<Bound<'py, PyDict>>> {
    thresholds::table(n_max, eps)
        .map_err(err)?
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("d_beta_n", r.d_beta_n)?;
            d.set_item("defining_poly", r.defining_poly)?;
            d.set_item("minimal_poly_if_divides", r.minimal_poly_if_divides)?;
            d.set_item("beta_n", r.beta_n)?;
            d.set_item("below_kl", r.below_kl)?;
            Ok(d)
        })
        .collect()
}

/// First `n` greedy digits of `x` (a rational like `3/4`) in base `beta`.
#[pyfunction]
#[pyo3(signature = (beta, x = "1", n = 32))]
fn greedy_expansion(beta: BetaArg, x: &str, n: usize) -> PyResult<String> {
    let x = parse_rational(x).map_err(err)?;
    expansions::greedy_expansion(&beta.value()?, &x, n)
        .map(|w| w.to_string())
        .map_err(err)
}

#[pyfunction]
fn quasi_greedy(beta: BetaArg) -> PyResult<PySeq> {
    expansions::quasi_greedy(&beta.value()?).map(PySeq).map_err(err)
}

#[pyfunction]
fn pi_beta(beta: BetaArg, seq: SeqArg) -> PyResult<f64> {
    Ok(expansions::pi_beta(&beta.value()?, &seq.value()?))
}

/// The base in which `seq` evaluates to 1.
#[pyfunction]
fn solve_base(seq: SeqArg) -> PyResult<PyBeta> {
    expansions::solve_base(&seq.value()?).map(PyBeta).map_err(err)
}

#[pyfunction]
fn is_parry_admissible(seq: SeqArg) -> PyResult<bool> {
    Ok(expansions::is_parry_admissible(&seq.value()?))
}

#[pyfunction]
fn is_unique_expansion(beta: BetaArg, seq: SeqArg) -> PyResult<bool> {
    expansions::is_unique_expansion(&beta.value()?, &seq.value()?).map_err(err)
}

/// The itinerary coding of a 0-1 sequence, e.g. `(RL)^w`.
#[pyfunction]
fn h_encode(seq: SeqArg) -> PyResult<String> {
    Ok(trapezoid::h_encode(&seq.value()?).to_string())
}

#[pyfunction]
fn h_decode(itinerary: &str) -> PyResult<PySeq> {
    let it: Itinerary = itinerary.parse().map_err(err)?;
    trapezoid::h_decode(&it).map(PySeq).map_err(err)
}

/// `(itinerary, points)` for each plateau-avoiding cycle of period `n`.
#[pyfunction]
fn find_lr_cycles(beta: BetaArg, n: usize) -> PyResult<Vec<(String, Vec<f64>)>> {
    let cycles = trapezoid::find_lr_cycle_points(&TrapezoidParams::new(beta.value()?), n).map_err(err)?;
    Ok(cycles.into_iter().map(|c| (c.itinerary.to_string(), c.points)).collect())
}

/// A 3-cycle `(x, S x, S^2 x)` of the continuous extension.
#[pyfunction]
fn extension_3cycle(beta: BetaArg) -> PyResult<(f64, f64, f64)> {
    let c = trapezoid::extension_3cycle(&beta.value()?).map_err(err)?;
    Ok((c.orbit[0], c.orbit[1], c.orbit[2]))
}

/// `(lo, hi, witness)` bracketing the threshold for period `n` by direct search.
#[pyfunction]
#[pyo3(signature = (n, eps = 1e-7))]
fn min_beta_for_period(n: usize, eps: f64) -> PyResult<(f64, f64, String)> {
    let r = oracle::min_beta_for_period(n, eps).map_err(err)?;
    Ok((r.beta_lo, r.beta_hi, r.witness_sequence))
}

/// `(violations, chain)` comparing the threshold order with the Sharkovskii order.
#[pyfunction]
fn verify_ordering(n_max: u64) -> PyResult<(Vec<(u64, u64)>, Vec<u64>)> {
    let r = oracle::verify_ordering(n_max).map_err(err)?;
    Ok((r.violations, r.chain))
}

#[pymodule]
fn pyunivoque(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBeta>()?;
    m.add_class::<PySeq>()?;
    m.add("UndecidedError", m.py().get_type::<UndecidedError>())?;
    m.add_function(wrap_pyfunction!(beta_n, m)?)?;
    m.add_function(wrap_pyfunction!(a_k, m)?)?;
    m.add_function(wrap_pyfunction!(beta_poly, m)?)?;
    m.add_function(wrap_pyfunction!(sharkovskii_cmp, m)?)?;
    m.add_function(wrap_pyfunction!(beta_kl, m)?)?;
    m.add_function(wrap_pyfunction!(below_kl, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(quasi_greedy, m)?)?;
    m.add_function(wrap_pyfunction!(pi_beta, m)?)?;
    m.add_function(wrap_pyfunction!(solve_base, m)?)?;
    m.add_function(wrap_pyfunction!(is_parry_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(is_unique_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(h_encode, m)?)?;
    m.add_function(wrap_pyfunction!(h_decode, m)?)?;
    m.add_function(wrap_pyfunction!(find_lr_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(extension_3cycle, m)?)?;
    m.add_function(wrap_pyfunction!(min_beta_for_period, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ordering, m)?)?;
    Ok(())
}
