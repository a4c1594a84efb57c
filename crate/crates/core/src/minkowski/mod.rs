//! The Minkowski functional `μ` of the Pick body.
//!
//! For nodes `z` and a direction `α ≠ 0`, `t = 1/μ(α)` is the largest
//! `x ≥ 0` for which `P(x) = ((1 − x² α_i ᾱ_j) / (1 − z_i z̄_j))` is positive
//! semidefinite; `t·α` is then the boundary point of the body on the ray.
//! Three routes compute it:
//!
//! * [`mu_bisection`]: bisection on the smallest eigenvalue of `P(x)`, the
//!   reference route.
//! * [`mu_det_roots`]: roots of the polynomial `s ↦ det P(√s)`.
//! * [`mu_closed_form`]: closed forms for directions with one or two non-zero
//!   entries.

mod bisection;
mod closed_form;
mod det_roots;

use serde::{Deserialize, Serialize};

pub use bisection::mu_bisection;
pub use closed_form::{mu_closed_form, ClosedForm, ClosedFormExtremal};
pub use det_roots::{chebyshev_coefficients, colleague_roots, mu_det_roots};

use crate::complex::{check_finite, max_modulus, ComplexPoint};
use crate::error::{PickError, Result};
use crate::linalg::HermitianMatrix;
use crate::pick::{pick_entries, NodeSet};

/// Default relative tolerance of the bisection.
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;
/// Default half-width of the boundary band used by [`membership`].
pub const DEFAULT_BAND: f64 = 1e-8;

/// Nodes together with a non-zero direction `α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    nodes: NodeSet,
    alpha: Vec<ComplexPoint>,
}

impl Ray {
    pub fn new(nodes: NodeSet, alpha: Vec<ComplexPoint>) -> Result<Self> {
        if nodes.len() != alpha.len() {
            return Err(PickError::LengthMismatch { left: nodes.len(), right: alpha.len() });
        }
        for (k, &a) in alpha.iter().enumerate() {
            check_finite(a, &format!("alpha {k}"))?;
        }
        if max_modulus(&alpha) == 0.0 {
            return Err(PickError::ZeroAlpha);
        }
        Ok(Self { nodes, alpha })
    }

    pub fn from_points(nodes: Vec<ComplexPoint>, alpha: Vec<ComplexPoint>) -> Result<Self> {
        Self::new(NodeSet::new(nodes)?, alpha)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn alpha(&self) -> &[ComplexPoint] {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// `α` is a constant tuple (relative tolerance 1e-13).
    pub fn is_constant(&self) -> bool {
        let scale = max_modulus(&self.alpha);
        self.alpha.iter().all(|&a| (a - self.alpha[0]).norm() <= 1e-13 * scale)
    }

    /// Upper bracket for `t`: beyond `1 / max|α_i|` a diagonal entry of
    /// `P(x)` is negative.
    pub fn bracket(&self) -> f64 {
        1.0 / max_modulus(&self.alpha)
    }

    /// `P(x)` for this ray.
    pub fn pencil(&self, x: f64) -> HermitianMatrix {
        let scaled: Vec<ComplexPoint> = self.alpha.iter().map(|&a| a * x).collect();
        pick_entries(self.nodes.as_slice(), &scaled)
    }

    pub fn scaled(&self, factor: ComplexPoint) -> Result<Self> {
        Self::new(self.nodes.clone(), self.alpha.iter().map(|&a| a * factor).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bisection,
    DetRoots,
    ClosedForm,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Bisection => "bisection",
            Method::DetRoots => "det_roots",
            Method::ClosedForm => "closed_form",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinkowskiResult {
    pub mu: f64,
    pub t: f64,
    pub boundary_point: Vec<ComplexPoint>,
    pub method: Method,
}

impl MinkowskiResult {
    pub(crate) fn from_t(ray: &Ray, t: f64, method: Method) -> Self {
        Self { mu: 1.0 / t, t, boundary_point: ray.alpha.iter().map(|&a| a * t).collect(), method }
    }

    pub(crate) fn constant(ray: &Ray, method: Method) -> Self {
        Self::from_t(ray, 1.0 / ray.alpha[0].norm(), method)
    }
}

/// `μ(w)` for any tuple, including `μ(0) = 0`.
pub fn minkowski_functional(nodes: &NodeSet, w: &[ComplexPoint], tol: f64) -> Result<f64> {
    if nodes.len() != w.len() {
        return Err(PickError::LengthMismatch { left: nodes.len(), right: w.len() });
    }
    if max_modulus(w) == 0.0 {
        return Ok(0.0);
    }
    Ok(mu_bisection(&Ray::new(nodes.clone(), w.to_vec())?, tol)?.mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Interior,
    Boundary,
    Exterior,
}

pub fn classify_mu(mu: f64, band: f64) -> Membership {
    if (mu - 1.0).abs() <= band {
        Membership::Boundary
    } else if mu < 1.0 {
        Membership::Interior
    } else {
        Membership::Exterior
    }
}

/// Position of `w` relative to the Pick body of `nodes`.
pub fn membership(nodes: &NodeSet, w: &[ComplexPoint], band: f64) -> Result<Membership> {
    Ok(classify_mu(minkowski_functional(nodes, w, DEFAULT_BISECTION_TOL)?, band))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;

    fn real(xs: &[f64]) -> Vec<ComplexPoint> {
        xs.iter().map(|&x| c(x, 0.0)).collect()
    }

    #[test]
    fn membership_examples() {
        let nodes = NodeSet::new(real(&[0.0, 0.5])).unwrap();
        assert_eq!(membership(&nodes, &real(&[0.0, 0.5]), DEFAULT_BAND).unwrap(), Membership::Boundary);
        assert_eq!(membership(&nodes, &real(&[0.0, 0.2]), DEFAULT_BAND).unwrap(), Membership::Interior);
        assert_eq!(membership(&nodes, &real(&[0.0, 0.9]), DEFAULT_BAND).unwrap(), Membership::Exterior);
        assert!((minkowski_functional(&nodes, &real(&[0.0, 0.2]), 1e-13).unwrap() - 0.4).abs() < 1e-11);
        assert!((minkowski_functional(&nodes, &real(&[0.0, 0.9]), 1e-13).unwrap() - 1.8).abs() < 1e-11);
        assert_eq!(minkowski_functional(&nodes, &real(&[0.0, 0.0]), 1e-13).unwrap(), 0.0);
    }

    #[test]
    fn ray_validation() {
        assert!(matches!(Ray::from_points(real(&[0.0, 0.5]), real(&[0.0, 0.0])), Err(PickError::ZeroAlpha)));
        assert!(matches!(Ray::from_points(real(&[0.0, 0.5]), real(&[1.0])), Err(PickError::LengthMismatch { .. })));
        assert!(Ray::from_points(real(&[0.0, 0.5]), vec![c(f64::NAN, 0.0), c(1.0, 0.0)]).is_err());
    }
}
