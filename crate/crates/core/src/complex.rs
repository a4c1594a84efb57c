//! The scalar type and a few tolerance helpers.
//!
//! Complex numbers serialize as two-element arrays `[re, im]`.

use num_complex::Complex64;

use crate::error::{PickError, Result};

pub type ComplexPoint = Complex64;

/// Default absolute tolerance for equality of complex numbers.
pub const EQ_TOL: f64 = 1e-12;

pub fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

pub fn approx_eq(a: ComplexPoint, b: ComplexPoint, tol: f64) -> bool {
    (a - b).norm() <= tol
}

pub fn check_finite(z: ComplexPoint, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(PickError::NonFinite { what: what.to_string() })
    }
}

/// Require `|z| < 1`.
pub fn check_open_disc(z: ComplexPoint, what: &str) -> Result<()> {
    check_finite(z, what)?;
    let modulus = z.norm();
    if modulus < 1.0 {
        Ok(())
    } else {
        Err(PickError::Domain { what: what.to_string(), modulus })
    }
}

/// Require `|z| <= 1 + slack`.
pub fn check_closed_disc(z: ComplexPoint, what: &str, slack: f64) -> Result<()> {
    check_finite(z, what)?;
    let modulus = z.norm();
    if modulus <= 1.0 + slack {
        Ok(())
    } else {
        Err(PickError::Domain { what: what.to_string(), modulus })
    }
}

pub fn max_modulus(values: &[ComplexPoint]) -> f64 {
    values.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// True when every entry equals the first within `tol`.
pub fn all_equal(values: &[ComplexPoint], tol: f64) -> bool {
    match values.first() {
        None => true,
        Some(&first) => values.iter().all(|&v| approx_eq(v, first, tol)),
    }
}
