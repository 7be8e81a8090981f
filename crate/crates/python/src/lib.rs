//! Python bindings for the Dowling-polynomial toolkit.
//!
//! Exposes the exact triangles, polynomial families, enumeration oracles,
//! identity suites, asymptotics and quadrature as plain functions. Exact
//! integers cross the boundary as Python ints; rationals as (numerator,
//! denominator) pairs; high-precision decimals as strings.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dowling_core::asymptotics;
use dowling_core::dowling::{self, DowlingParams};
use dowling_core::exact::int;
use dowling_core::gbell::{self, BellIdentity};
use dowling_core::gstirling::{self as gstirling_mod, GStirlingParams};
use dowling_core::hurwitz::HurwitzSeries;
use dowling_core::oracle;
use dowling_core::quadrature;
use dowling_core::report::GridConfig;

fn to_py_err(e: dowling_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn stirling_params(alpha: i64, beta: i64, r: i64) -> PyResult<GStirlingParams> {
    GStirlingParams::from_i64(alpha, beta, r).map_err(to_py_err)
}

fn dowling_params(m: i64, r: i64, alpha: i64) -> PyResult<DowlingParams> {
    DowlingParams::from_i64(m, r, alpha).map_err(to_py_err)
}

/// S(n,k;alpha,beta,r) by the triangle recurrence.
#[pyfunction]
fn gstirling(n: u32, k: i64, alpha: i64, beta: i64, r: i64) -> PyResult<BigInt> {
    let params = stirling_params(alpha, beta, r)?;
    Ok(gstirling_mod::gstirling_table(&params, n).value(n, k))
}

/// The full triangle S(n,k) for 0 <= k <= n <= n_max, as a list of rows.
#[pyfunction]
fn gstirling_triangle(alpha: i64, beta: i64, r: i64, n_max: u32) -> PyResult<Vec<Vec<BigInt>>> {
    let params = stirling_params(alpha, beta, r)?;
    let t = gstirling_mod::gstirling_table(&params, n_max);
    Ok((0..=n_max).map(|n| t.row(n).to_vec()).collect())
}

/// S(n,k;alpha,beta,r) by the explicit alternating sum (beta >= 1).
#[pyfunction]
fn gstirling_explicit(n: u32, k: u32, alpha: i64, beta: i64, r: i64) -> PyResult<BigInt> {
    let params = stirling_params(alpha, beta, r)?;
    gstirling_mod::gstirling_explicit(n, k, &params).map_err(to_py_err)
}

/// Coefficients of the Bell polynomial B_n(x;alpha,beta,r), index k.
#[pyfunction]
fn gbell_coefficients(n: u32, alpha: i64, beta: i64, r: i64) -> PyResult<Vec<BigInt>> {
    let params = stirling_params(alpha, beta, r)?;
    let poly = gbell::gbell_poly(n, &params);
    Ok((0..=n).map(|k| poly.coeff(k)).collect())
}

/// B_n(x0;alpha,beta,r).
#[pyfunction]
fn gbell_eval(n: u32, alpha: i64, beta: i64, r: i64, x: i64) -> PyResult<BigInt> {
    let params = stirling_params(alpha, beta, r)?;
    Ok(gbell::gbell_poly(n, &params).eval(&int(x)))
}

/// Diagonal coefficients of D^{l,x}_{m,r}(n;alpha): entry k multiplies (x*l)^k.
#[pyfunction]
fn dowling_coefficients(n: u32, m: i64, r: i64, alpha: i64) -> PyResult<Vec<BigInt>> {
    let params = dowling_params(m, r, alpha)?;
    let value = dowling::dowling_poly(n, &params);
    Ok((0..=n).map(|k| value.poly.coeff(k, k)).collect())
}

/// D^{l,x}_{m,r}(n;alpha) at integer (x, lambda).
#[pyfunction]
fn dowling_eval(n: u32, m: i64, r: i64, alpha: i64, x: i64, lam: i64) -> PyResult<BigInt> {
    let params = dowling_params(m, r, alpha)?;
    Ok(dowling::dowling_poly(n, &params).eval(&int(x), &int(lam)))
}

/// Canonical monomial rendering of the Dowling polynomial.
#[pyfunction]
fn dowling_render(n: u32, m: i64, r: i64, alpha: i64) -> PyResult<String> {
    let params = dowling_params(m, r, alpha)?;
    Ok(dowling::dowling_poly(n, &params).poly.render())
}

/// c_0..c_{n_max} of the Dowling EGF at integer (x, lambda); must agree with
/// dowling_eval.
#[pyfunction]
fn dowling_egf_values(
    n_max: u32,
    m: i64,
    r: i64,
    alpha: i64,
    x: i64,
    lam: i64,
) -> PyResult<Vec<BigInt>> {
    let params = dowling_params(m, r, alpha)?;
    dowling::dowling_via_egf(n_max, &params, &int(x), &int(lam)).map_err(to_py_err)
}

/// Hurwitz coefficients of 1/(2-e^z)^(bars+1): barred preferential
/// arrangement counts.
#[pyfunction]
fn bpa_series(bars: u32, n_max: u32) -> PyResult<Vec<BigInt>> {
    let series = HurwitzSeries::bpa(bars, n_max as usize);
    (0..=n_max as usize)
        .map(|n| {
            dowling_core::exact::to_integer(series.coeff(n).map_err(to_py_err)?, "bpa")
                .map_err(to_py_err)
        })
        .collect()
}

/// Exhaustive count of barred preferential arrangements (n <= 8, bars <= 4).
#[pyfunction]
fn enum_bpa_count(n: u32, bars: u32) -> PyResult<BigInt> {
    oracle::enum_bpa_count(n, bars).map_err(to_py_err)
}

/// Colored-partition oracle for the r-Whitney numbers (n <= 7).
#[pyfunction]
fn count_rwhitney(n: u32, k: u32, m: i64, r: i64) -> PyResult<BigInt> {
    oracle::count_rwhitney(n, k, m, r).map_err(to_py_err)
}

/// Weighted colored-partition oracle for the Dowling polynomial (n <= 7).
#[pyfunction]
fn count_rmxl(n: u32, m: i64, r: i64, x: i64, lam: i64) -> PyResult<BigInt> {
    oracle::count_rmxl(n, m, r, x, lam).map_err(to_py_err)
}

/// Exact W(n,e) as a (numerator, denominator) pair.
#[pyfunction]
fn w_value(n: u32, e: u32, m: i64, r: i64, alpha: i64, x: i64) -> PyResult<(BigInt, BigInt)> {
    let params = dowling_params(m, r, alpha)?;
    let w = asymptotics::w_value(n, e, &params, &int(x)).map_err(to_py_err)?;
    Ok((w.numer().clone(), w.denom().clone()))
}

/// Asymptotic estimate vs the exact Hurwitz-power reference; returns
/// (estimate, exact, rel_error) as 40-significant-digit decimal strings.
#[pyfunction]
fn dowling_asymptotic(
    n: u32,
    lam: u64,
    e_max: u32,
    m: i64,
    r: i64,
    alpha: i64,
    x: i64,
) -> PyResult<(String, String, String)> {
    let params = dowling_params(m, r, alpha)?;
    let est =
        asymptotics::dowling_asymptotic(n, lam, e_max, &params, &int(x)).map_err(to_py_err)?;
    Ok((est.value_decimal, est.exact_decimal, est.rel_error_decimal))
}

/// Numeric check of the base integral identity; returns
/// (value, nodes_used, est_abs_error).
#[pyfunction]
#[pyo3(signature = (j, n, nodes=None))]
fn casado_check(j: u32, n: u32, nodes: Option<usize>) -> PyResult<(f64, usize, f64)> {
    let q = quadrature::casado_check_with_nodes(j, n, nodes.unwrap_or(quadrature::DEFAULT_NODES))
        .map_err(to_py_err)?;
    Ok((q.value, q.nodes_used, q.est_abs_error))
}

/// Closed form (pi/2) j^n / n! of the base integral identity.
#[pyfunction]
fn casado_exact(j: u32, n: u32) -> f64 {
    quadrature::casado_exact(j, n)
}

/// Integral representation of B_n(x;0,m,r).
#[pyfunction]
#[pyo3(signature = (n, x, m, r, nodes=None))]
fn bell_integral(
    n: u32,
    x: f64,
    m: f64,
    r: i64,
    nodes: Option<usize>,
) -> PyResult<(f64, usize, f64)> {
    let q = quadrature::bell_integral_with_nodes(
        n,
        x,
        m,
        r,
        nodes.unwrap_or(quadrature::DEFAULT_NODES),
    )
    .map_err(to_py_err)?;
    Ok((q.value, q.nodes_used, q.est_abs_error))
}

/// Integral representation of the Dowling polynomial at (x, lambda).
#[pyfunction]
#[pyo3(signature = (n, x, lam, m, r, nodes=None))]
fn dowling_integral(
    n: u32,
    x: f64,
    lam: f64,
    m: f64,
    r: i64,
    nodes: Option<usize>,
) -> PyResult<(f64, usize, f64)> {
    let q = quadrature::dowling_integral_with_nodes(
        n,
        x,
        lam,
        m,
        r,
        nodes.unwrap_or(quadrature::DEFAULT_NODES),
    )
    .map_err(to_py_err)?;
    Ok((q.value, q.nodes_used, q.est_abs_error))
}

/// Run an identity suite ("bell", "dowling" or "unfair") over the default
/// grids up to n_max; returns (all_unflagged_pass, report_json).
#[pyfunction]
#[pyo3(signature = (suite, n_max=None))]
fn check_identities(suite: &str, n_max: Option<u32>) -> PyResult<(bool, String)> {
    let grid = GridConfig::with_n_max(n_max.unwrap_or(8));
    let report = match suite {
        "bell" => gbell::check_bell_identities(&BellIdentity::ALL, &grid),
        "dowling" => dowling::check_dowling_identities(&dowling::DowlingIdentity::ALL, &grid),
        "unfair" => {
            let mut agg = dowling_core::report::IdentityReport::default();
            for &a in &grid.alphas {
                for &m in &grid.ms {
                    for &r in &grid.rs {
                        if grid.n_max == 0 {
                            continue;
                        }
                        let rep = gstirling_mod::check_unfair_identities(grid.n_max, a, m, r)
                            .map_err(to_py_err)?;
                        if agg.checks.is_empty() {
                            agg = rep;
                        } else {
                            for (bc, rc) in agg.checks.iter_mut().zip(rep.checks) {
                                bc.cells += rc.cells;
                                bc.mismatches.extend(rc.mismatches);
                            }
                        }
                    }
                }
            }
            agg
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown suite {other:?}; expected bell, dowling or unfair"
            )))
        }
    };
    let json =
        serde_json::to_string_pretty(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((report.all_unflagged_pass(), json))
}

#[pymodule]
fn dowling_kit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(gstirling, m)?)?;
    m.add_function(wrap_pyfunction!(gstirling_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(gstirling_explicit, m)?)?;
    m.add_function(wrap_pyfunction!(gbell_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(gbell_eval, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_eval, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_render, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_egf_values, m)?)?;
    m.add_function(wrap_pyfunction!(bpa_series, m)?)?;
    m.add_function(wrap_pyfunction!(enum_bpa_count, m)?)?;
    m.add_function(wrap_pyfunction!(count_rwhitney, m)?)?;
    m.add_function(wrap_pyfunction!(count_rmxl, m)?)?;
    m.add_function(wrap_pyfunction!(w_value, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(casado_check, m)?)?;
    m.add_function(wrap_pyfunction!(casado_exact, m)?)?;
    m.add_function(wrap_pyfunction!(bell_integral, m)?)?;
    m.add_function(wrap_pyfunction!(dowling_integral, m)?)?;
    m.add_function(wrap_pyfunction!(check_identities, m)?)?;
    Ok(())
}
