//! Python bindings for the quintic mirror-theorem computations.
//!
//! Exact values cross the boundary as `int` and `fractions.Fraction`.
//! Fixed points are indexed from 0 as in the Rust API.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};

use quintic::cli::run_args;
use quintic::cohomology::WeightSpec;
use quintic::exact::Rational;
use quintic::hypergeom::{i_series, i_series_equivariant, verify_ode as ode_report};
use quintic::mirror::{apply_mirror, build_mirror_map, yukawa as yukawa_series};
use quintic::recursion as rec;

create_exception!(quintic_py, QuinticError, PyException);

fn err(e: quintic::Error) -> PyErr {
    QuinticError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Five distinct rational weights summing to zero.
#[pyclass(name = "WeightSpec", frozen, module = "quintic_py")]
pub struct PyWeightSpec {
    inner: WeightSpec,
}

#[pymethods]
impl PyWeightSpec {
    /// Accepts `"1,2,3,-1,-5"` or a sequence of five ints, strings or fractions.
    #[new]
    #[pyo3(signature = (lambdas = None))]
    fn new(lambdas: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let Some(obj) = lambdas else { return Ok(PyWeightSpec { inner: WeightSpec::default() }) };
        let text = if let Ok(s) = obj.cast::<PyString>() {
            s.to_str()?.to_string()
        } else {
            let parts = obj.try_iter()?.map(|x| x?.str().map(|s| s.to_string())).collect::<PyResult<Vec<_>>>()?;
            parts.join(",")
        };
        WeightSpec::parse(&text).map(|inner| PyWeightSpec { inner }).map_err(err)
    }

    fn lambdas<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.inner.lambdas())
    }

    /// The genericity checks through `d_max`, or `QuinticError` naming the
    /// colliding pole locations.
    fn validate(&self, d_max: usize) -> PyResult<Vec<String>> {
        rec::validate_weights(&self.inner, d_max).map(|c| c.checks).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("WeightSpec('{}')", self.inner.to_strings().join(","))
    }
}

fn weights(w: Option<PyRef<'_, PyWeightSpec>>) -> WeightSpec {
    w.map(|w| w.inner.clone()).unwrap_or_default()
}

/// `[(d, N_d, n_d), ...]` for `d = 1..=max_degree`.
#[pyfunction]
#[pyo3(signature = (max_degree = 10))]
fn instanton_numbers<'py>(py: Python<'py>, max_degree: usize) -> PyResult<Vec<(usize, Bound<'py, PyAny>, BigInt)>> {
    let table = py.detach(|| quintic::instanton::instanton_numbers(max_degree)).map_err(err)?;
    table.rows.into_iter().map(|r| Ok((r.d, fraction(py, &r.gw)?, r.n))).collect()
}

/// Coefficient lists of `f0`, `g = f1/f0` and the inverse shift `ghat`.
#[pyfunction]
#[pyo3(signature = (order = 10))]
fn mirror_map<'py>(py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyDict>> {
    let m = build_mirror_map(order);
    let out = PyDict::new(py);
    out.set_item("f0", fractions(py, &m.f0.q_coeffs())?)?;
    out.set_item("g", fractions(py, &m.g.q_coeffs())?)?;
    out.set_item("ghat", fractions(py, &m.inverse_shift().q_coeffs())?)?;
    Ok(out)
}

/// Yukawa coupling coefficients `K_0..K_order` in the mirror coordinate.
#[pyfunction]
#[pyo3(signature = (order = 10))]
fn yukawa<'py>(py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyList>> {
    let k = py
        .detach(|| {
            let j = apply_mirror(&i_series(order), &build_mirror_map(order))?;
            yukawa_series(&j, order)
        })
        .map_err(err)?;
    fractions(py, &k.q_coeffs())
}

#[pyfunction]
#[pyo3(signature = (order = 10))]
fn verify_ode(py: Python<'_>, order: usize) -> bool {
    py.detach(|| ode_report(&i_series(order), order).pass)
}

#[pyfunction]
#[pyo3(signature = (max_degree = 5, z_order = 3))]
fn verify_sigma_model(py: Python<'_>, max_degree: usize, z_order: usize) -> PyResult<bool> {
    py.detach(|| quintic::sigma_model::verify_theorem_a(max_degree, z_order)).map(|r| r.pass).map_err(err)
}

/// Negative parts of the equivariant two-point series, keyed by `(q, z)`;
/// all empty strings means the check passed.
#[pyfunction]
#[pyo3(signature = (weights = None, q_order = 3, z_order = 3))]
fn verify_polynomiality(
    py: Python<'_>,
    weights: Option<PyRef<'_, PyWeightSpec>>,
    q_order: usize,
    z_order: usize,
) -> BTreeMap<(usize, usize), String> {
    let w = self::weights(weights);
    let report = py.detach(|| rec::verify_polynomiality(&i_series_equivariant(q_order, &w), &w, q_order, z_order));
    report.cells.into_iter().map(|c| ((c.q, c.z), if c.vanishes { String::new() } else { c.negative_part })).collect()
}

/// `{(alpha, beta, m): C}` for the hypergeometric series.
#[pyfunction]
#[pyo3(signature = (weights = None, d_max = 3))]
fn recursion_coefficients<'py>(
    py: Python<'py>,
    weights: Option<PyRef<'_, PyWeightSpec>>,
    d_max: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let w = self::weights(weights);
    let data = py
        .detach(|| {
            let cert = rec::validate_weights(&w, d_max)?;
            rec::extract_recursion(&i_series_equivariant(d_max, &w), &cert, d_max)
        })
        .map_err(err)?;
    let out = PyDict::new(py);
    for (key, c) in &data.c {
        out.set_item(*key, fraction(py, c)?)?;
    }
    Ok(out)
}

/// Rebuilds the mirror-transformed series from recursion coefficients,
/// polynomiality and anchors; one dict per degree.
#[pyfunction]
#[pyo3(signature = (weights = None, q_order = 3, z_order = None))]
fn reconstruct<'py>(
    py: Python<'py>,
    weights: Option<PyRef<'_, PyWeightSpec>>,
    q_order: usize,
    z_order: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let w = self::weights(weights);
    let z_order = z_order.unwrap_or_else(|| rec::minimal_z_order(q_order));
    let (solution, target) = py
        .detach(|| {
            let cert = rec::validate_weights(&w, q_order)?;
            let z = i_series_equivariant(q_order, &w);
            let data = rec::extract_recursion(&z, &cert, q_order)?;
            let (target, _) = rec::check_theorem_f(&z, &build_mirror_map(q_order), &cert, q_order, q_order)?;
            let solution = rec::solve_unique(&data.c, &rec::anchors_of(&target, q_order), &w, q_order, z_order)?;
            Ok((solution, target))
        })
        .map_err(err)?;
    solution
        .degrees
        .iter()
        .map(|s| {
            let d = PyDict::new(py);
            d.set_item("degree", s.degree)?;
            d.set_item("unknowns", s.unknowns)?;
            d.set_item("nullity", s.nullity)?;
            d.set_item("nullity_per_alpha", s.nullity_per_alpha.to_vec())?;
            d.set_item("top_two_only", s.top_two_only)?;
            let matches = (0..5).all(|a| solution.series.coeff(a, s.degree) == target.coeff(a, s.degree));
            d.set_item("matches", matches)?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn count_lines_on_quintic() -> BigInt {
    quintic::schubert::count_lines_on_quintic()
}

/// Lines on a generic hypersurface of degree `2n-5` in `P^{n-1}`.
#[pyfunction]
fn lines_on_hypersurface(n: usize) -> PyResult<BigInt> {
    if n < 3 {
        return Err(QuinticError::new_err("need n >= 3"));
    }
    Ok(quintic::schubert::lines_on_hypersurface(n))
}

/// Runs the command line with `args` (without the program name) and returns
/// `(exit_code, output)`.
#[pyfunction]
fn run(py: Python<'_>, args: Vec<String>) -> (i32, String) {
    let outcome = py.detach(|| run_args(args));
    (outcome.exit_code, outcome.output)
}

#[pymodule]
fn quintic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QuinticError", m.py().get_type::<QuinticError>())?;
    m.add_class::<PyWeightSpec>()?;
    m.add_function(wrap_pyfunction!(instanton_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(mirror_map, m)?)?;
    m.add_function(wrap_pyfunction!(yukawa, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ode, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sigma_model, m)?)?;
    m.add_function(wrap_pyfunction!(verify_polynomiality, m)?)?;
    m.add_function(wrap_pyfunction!(recursion_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(count_lines_on_quintic, m)?)?;
    m.add_function(wrap_pyfunction!(lines_on_hypersurface, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
