use super::{Method, MinkowskiResult, Ray};
use crate::error::{PickError, Result};
use crate::linalg::min_eigenvalue;

/// Largest `x` in `[0, 1/max|α|]` with `P(x)` PSD, by bisection.
///
/// The feasible set is an interval containing 0 (the body is convex and
/// balanced), so the PSD test is a monotone predicate in `x`.
pub fn mu_bisection(ray: &Ray, tol: f64) -> Result<MinkowskiResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(PickError::InvalidArgument(format!("bisection tolerance must be positive, got {tol}")));
    }
    if ray.is_constant() {
        return Ok(MinkowskiResult::constant(ray, Method::Bisection));
    }
    let mut lo = 0.0;
    let mut hi = ray.bracket();
    while hi - lo > tol * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if min_eigenvalue(&ray.pencil(mid))? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(MinkowskiResult::from_t(ray, lo, Method::Bisection))
}
