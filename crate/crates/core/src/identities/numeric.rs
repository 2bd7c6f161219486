//! The two floating-point spot checks: the theta-function modular
//! transformation and its Tri/Box special case. Everything else in this
//! crate is exact; these two run in `f64` complex arithmetic with
//! truncated products (both nomes are well below 1 for the h-grid used,
//! so 60 factors are far more than enough).

use super::{base_params, IdentityError, Params};
use crate::report::{Discrepancy, VerifyReport};
use num_complex::Complex64;
use serde_json::json;
use std::f64::consts::PI;

const RESIDUAL_BOUND: f64 = 1e-9;

fn qpoch_num(q: Complex64, terms: usize) -> Complex64 {
    // (q; q)_inf truncated
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qk = q;
    for _ in 0..terms {
        acc *= Complex64::new(1.0, 0.0) - qk;
        qk *= q;
    }
    acc
}

fn theta_num(x: Complex64, q: Complex64, terms: usize) -> Complex64 {
    // (x; q)_inf (q/x; q)_inf truncated
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qk = Complex64::new(1.0, 0.0);
    for _ in 0..terms {
        acc *= (Complex64::new(1.0, 0.0) - x * qk) * (Complex64::new(1.0, 0.0) - q * qk / x);
        qk *= q;
    }
    acc
}

/// Residual of the theta modular transformation at real `x` and modulus
/// parameter `h`.
pub fn modular_theta_residual(h: f64, x: f64, terms: usize) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let q_left = Complex64::new((-2.0 * PI / h).exp(), 0.0);
    let q_right = Complex64::new((-2.0 * PI * h).exp(), 0.0);
    let lhs = theta_num((2.0 * PI * x * i).exp(), q_left, terms);
    let prefactor = -i
        * h.sqrt()
        * Complex64::new((-PI / 4.0 * (h - 1.0 / h)).exp(), 0.0)
        * (qpoch_num(q_right, terms) / qpoch_num(q_left, terms))
        * (PI * x * (i + Complex64::new(h * (1.0 - x), 0.0))).exp();
    let rhs = prefactor * theta_num(Complex64::new((-2.0 * PI * h * x).exp(), 0.0), q_right, terms);
    (lhs - rhs).norm()
}

fn box_num(q: f64, terms: usize) -> f64 {
    let mut acc = 1.0;
    for n in 1..=terms {
        acc += 2.0 * q.powi((n * n) as i32);
    }
    acc
}

fn tri_num(q: f64, terms: usize) -> f64 {
    let mut acc = 0.0;
    for n in 0..=terms {
        acc += q.powi((n * (n + 1) / 2) as i32);
    }
    acc
}

/// Residual of `Tri(e^{-2 pi / h}) = (sqrt h / 2) e^{pi/4h} Box(-e^{-pi h})`.
pub fn modular_tri_residual(h: f64, terms: usize) -> f64 {
    let lhs = tri_num((-2.0 * PI / h).exp(), terms);
    let rhs = h.sqrt() / 2.0 * (PI / (4.0 * h)).exp() * box_num(-((-PI * h).exp()), terms);
    (lhs - rhs).abs()
}

fn grid_report(
    id: &str,
    cases: Vec<(String, f64)>,
    terms: usize,
    extra: &[(&str, serde_json::Value)],
) -> VerifyReport {
    let mut params = base_params(extra);
    params.insert("terms".into(), json!(terms));
    params.insert("residual_bound".into(), json!(RESIDUAL_BOUND));
    let worst = cases
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .expect("grid is nonempty");
    let (idx, (label, residual)) = worst;
    params.insert("max_residual_at".into(), json!(label));
    params.insert("max_residual".into(), json!(format!("{residual:.15e}")));
    if *residual < RESIDUAL_BOUND {
        VerifyReport::pass(id, params, terms as i64)
    } else {
        VerifyReport::fail(
            id,
            params,
            terms as i64,
            Discrepancy {
                at: idx as i64,
                lhs: format!("{residual:.15e}"),
                rhs: format!("< {RESIDUAL_BOUND:e}"),
            },
        )
    }
}

pub fn run_mtt(params: &Params) -> Result<Vec<VerifyReport>, IdentityError> {
    let terms = params.order.unwrap_or(60).max(60);
    let mut cases = Vec::new();
    for h in [0.7f64, 1.0, 1.3] {
        for x in [0.3f64, 0.5] {
            cases.push((
                format!("h={h},x={x}"),
                modular_theta_residual(h, x, terms),
            ));
        }
    }
    Ok(vec![grid_report(
        "mtt_numeric",
        cases,
        terms,
        &[("h_grid", json!([0.7, 1.0, 1.3])), ("x_grid", json!([0.3, 0.5]))],
    )])
}

pub fn run_mts(params: &Params) -> Result<Vec<VerifyReport>, IdentityError> {
    let terms = params.order.unwrap_or(60).max(60);
    let cases: Vec<(String, f64)> = [0.7f64, 1.0, 1.3]
        .iter()
        .map(|&h| (format!("h={h}"), modular_tri_residual(h, terms)))
        .collect();
    Ok(vec![grid_report(
        "mts_numeric",
        cases,
        terms,
        &[("h_grid", json!([0.7, 1.0, 1.3]))],
    )])
}
