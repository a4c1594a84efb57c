use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Method, MinkowskiResult, Ray};
use crate::error::{PickError, Result};
use crate::linalg::hermitian_spectrum;
use crate::pick::psd_tolerance;

/// Relative PSD slack when filtering candidate roots.
const ROOT_PSD_REL_TOL: f64 = 1e-9;
/// Chebyshev coefficients below this fraction of the largest are dropped.
const TRIM_REL: f64 = 1e-13;
/// Roots with a larger imaginary part (in the `[-1, 1]` variable) are complex.
const IMAG_TOL: f64 = 1e-6;

/// Half-widths, relative to the root, of the brackets tried when refining.
const REFINE_START: f64 = 1e-6;
const REFINE_MAX: f64 = 1e-1;

/// Shrinking rounds allowed before the root search.
const MAX_ROUNDS: usize = 16;

/// `t = 1/μ` as the largest root of `q(s) = det P(√s)` whose matrix is PSD.
///
/// `q` has degree at most `n`. It is sampled at `n + 1` Chebyshev points of
/// `[0, b]`, interpolated in the Chebyshev basis, and its roots are the
/// eigenvalues of the colleague matrix. The interval starts at
/// `b = 1/max|α|²`; while a sample in its lower half is already not PSD, `b`
/// shrinks to that sample, so that roots near 0 are resolved.
pub fn mu_det_roots(ray: &Ray) -> Result<MinkowskiResult> {
    if ray.is_constant() {
        return Ok(MinkowskiResult::constant(ray, Method::DetRoots));
    }
    let n = ray.len();
    let samples = n + 1;
    let mut s_max = ray.bracket().powi(2);

    for _ in 0..MAX_ROUNDS {
        let to_s = |u: f64| 0.5 * s_max * (u + 1.0);
        let mut values = Vec::with_capacity(samples);
        let mut first_infeasible = f64::INFINITY;
        for k in 0..samples {
            let s = to_s((PI * (k as f64 + 0.5) / samples as f64).cos());
            let pencil = ray.pencil(s.sqrt());
            let eig = hermitian_spectrum(&pencil)?;
            if eig[0] < -psd_tolerance(ROOT_PSD_REL_TOL, &pencil) {
                first_infeasible = first_infeasible.min(s);
            }
            values.push(eig.iter().product::<f64>());
        }
        if first_infeasible < 0.5 * s_max {
            s_max = first_infeasible;
            continue;
        }
        if values.iter().all(|&v| v == 0.0) {
            return Err(PickError::DegeneratePolynomial);
        }

        let mut coeffs = chebyshev_coefficients(&values);
        let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() <= TRIM_REL * scale) {
            coeffs.pop();
        }

        let mut best: Option<f64> = None;
        for root in colleague_roots(&coeffs) {
            if root.im.abs() > IMAG_TOL || root.re.abs() > 1.0 + IMAG_TOL {
                continue;
            }
            let u = newton_polish(&coeffs, root.re.clamp(-1.0, 1.0));
            let s = to_s(u).clamp(0.0, s_max);
            if s <= 0.0 {
                continue;
            }
            let s = refine_on_pencil(ray, s, s_max)?;
            let pencil = ray.pencil(s.sqrt());
            let eig = hermitian_spectrum(&pencil)?;
            if eig[0] >= -psd_tolerance(ROOT_PSD_REL_TOL, &pencil) && best.is_none_or(|b| s > b) {
                best = Some(s);
            }
        }
        let s = best.ok_or(PickError::NoAdmissibleRoot)?;
        return Ok(MinkowskiResult::from_t(ray, s.sqrt(), Method::DetRoots));
    }
    Err(PickError::NoAdmissibleRoot)
}

/// `q(s)` evaluated from the pencil spectrum.
fn det_at(ray: &Ray, s: f64) -> Result<f64> {
    Ok(hermitian_spectrum(&ray.pencil(s.sqrt()))?.iter().product())
}

/// Sharpens an interpolated root against `q` itself. The interpolant loses
/// relative accuracy when `q` is tiny over a wide range, which happens when
/// two nodes are close. Without a sign change nearby the root is kept.
fn refine_on_pencil(ray: &Ray, s: f64, s_max: f64) -> Result<f64> {
    let q0 = det_at(ray, s)?;
    if q0 == 0.0 {
        return Ok(s);
    }
    let mut width = REFINE_START * s;
    while width <= REFINE_MAX * s {
        let (a, b) = ((s - width).max(0.0), (s + width).min(s_max));
        let (qa, qb) = (det_at(ray, a)?, det_at(ray, b)?);
        // nearest sign change first
        let bracket = if qa * q0 <= 0.0 && qa != q0 {
            Some(((a, qa), (s, q0)))
        } else if qb * q0 <= 0.0 && qb != q0 {
            Some(((s, q0), (b, qb)))
        } else {
            None
        };
        if let Some(((lo, qlo), (hi, qhi))) = bracket {
            return illinois(ray, lo, qlo, hi, qhi);
        }
        width *= 10.0;
    }
    Ok(s)
}

fn illinois(ray: &Ray, mut a: f64, mut qa: f64, mut b: f64, mut qb: f64) -> Result<f64> {
    if qa == 0.0 {
        return Ok(a);
    }
    if qb == 0.0 {
        return Ok(b);
    }
    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() <= 4.0 * f64::EPSILON * b.abs() {
            break;
        }
        let mut c = (a * qb - b * qa) / (qb - qa);
        if !(c > a.min(b) && c < a.max(b)) {
            c = 0.5 * (a + b);
        }
        let qc = det_at(ray, c)?;
        if qc == 0.0 {
            return Ok(c);
        }
        if qc * qb < 0.0 {
            a = b;
            qa = qb;
            side = 0;
        } else {
            if side == 1 {
                qa *= 0.5;
            }
            side = 1;
        }
        b = c;
        qb = qc;
    }
    Ok(b)
}

/// Coefficients `c_k` of `Σ c_k T_k` interpolating `values` at the
/// Chebyshev points `cos(π (k + ½) / N)`, `k = 0..N`.
pub fn chebyshev_coefficients(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|j| {
            let sum: f64 = values
                .iter()
                .enumerate()
                .map(|(k, v)| v * (PI * j as f64 * (k as f64 + 0.5) / n as f64).cos())
                .sum();
            let c = 2.0 * sum / n as f64;
            if j == 0 {
                0.5 * c
            } else {
                c
            }
        })
        .collect()
}

/// Roots of `Σ c_k T_k` from the colleague matrix.
pub fn colleague_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let degree = coeffs.len().saturating_sub(1);
    match degree {
        0 => Vec::new(),
        1 => vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)],
        _ => {
            let lead = coeffs[degree];
            let mut m = DMatrix::<f64>::zeros(degree, degree);
            m[(0, 1)] = 1.0;
            for i in 1..degree {
                m[(i, i - 1)] = 0.5;
                if i + 1 < degree {
                    m[(i, i + 1)] = 0.5;
                }
            }
            for k in 0..degree {
                m[(degree - 1, k)] -= coeffs[k] / (2.0 * lead);
            }
            m.complex_eigenvalues().iter().copied().collect()
        }
    }
}

/// Value and derivative of `Σ c_k T_k` at `u`.
fn chebyshev_eval(coeffs: &[f64], u: f64) -> (f64, f64) {
    let (mut t_prev, mut t_cur) = (1.0, u);
    let (mut u_prev, mut u_cur) = (1.0, 2.0 * u); // U_{k-1}, U_k
    let mut value = coeffs[0];
    let mut deriv = 0.0;
    if coeffs.len() > 1 {
        value += coeffs[1] * u;
        deriv += coeffs[1];
    }
    for (k, &c) in coeffs.iter().enumerate().skip(2) {
        let t_next = 2.0 * u * t_cur - t_prev;
        value += c * t_next;
        deriv += c * k as f64 * u_cur;
        t_prev = t_cur;
        t_cur = t_next;
        let u_next = 2.0 * u * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    (value, deriv)
}

fn newton_polish(coeffs: &[f64], mut u: f64) -> f64 {
    for _ in 0..4 {
        let (v, d) = chebyshev_eval(coeffs, u);
        if d == 0.0 || !v.is_finite() {
            break;
        }
        let next = u - v / d;
        if !next.is_finite() || (next - u).abs() > 1e-3 {
            break;
        }
        u = next;
    }
    u
}
