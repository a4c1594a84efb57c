//! The polydisc layer, for `𝔻^m` with `m ∈ {2, 3}`.
//!
//! Holomorphic maps into `𝔻^m` are tuples of disc maps, so an analytic disc
//! through given points exists exactly when every coordinate interpolation
//! problem is solvable. This turns the Lempert-type function `δ` into a
//! three-parameter search over disc nodes (see [`delta_upper`]). The invariant
//! `d` of the polydisc is bounded below by composing disc extremals with a
//! coordinate projection (see [`graph_disc_certificate`]).

mod certificate;
mod delta;
pub mod simplex;

use serde::{Deserialize, Serialize};

pub use certificate::{d_lower_polydisc, graph_disc_certificate, SandwichCertificate, DEFAULT_CERTIFICATE_TOL};
pub use delta::{delta_upper, DeltaOptions, DeltaUpper, DiscConfiguration};

use crate::complex::{check_open_disc, ComplexPoint};
use crate::error::{PickError, Result};
use crate::minkowski::Membership;
use crate::moebius::{pseudo_distance, pseudo_distance_unchecked, DiscMap};

/// Tolerance for matching a candidate disc against the points it should hit.
pub const CANDIDATE_TOL: f64 = 1e-9;

/// A point of `𝔻^m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ComplexPoint>", into = "Vec<ComplexPoint>")]
pub struct PolyPoint {
    coords: Vec<ComplexPoint>,
}

impl PolyPoint {
    pub fn new(coords: Vec<ComplexPoint>) -> Result<Self> {
        if !(2..=3).contains(&coords.len()) {
            return Err(PickError::InvalidArgument(format!(
                "polydisc dimension must be 2 or 3, got {}",
                coords.len()
            )));
        }
        for (k, &z) in coords.iter().enumerate() {
            check_open_disc(z, &format!("coordinate {k}"))?;
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ComplexPoint] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> ComplexPoint {
        self.coords[k]
    }
}

impl TryFrom<Vec<ComplexPoint>> for PolyPoint {
    type Error = PickError;

    fn try_from(v: Vec<ComplexPoint>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PolyPoint> for Vec<ComplexPoint> {
    fn from(p: PolyPoint) -> Self {
        p.coords
    }
}

/// All points share one dimension; returns it.
pub(crate) fn common_dim(points: &[PolyPoint]) -> Result<usize> {
    let first = points.first().ok_or(PickError::Empty)?.dim();
    for p in points {
        if p.dim() != first {
            return Err(PickError::DimensionMismatch { left: first, right: p.dim() });
        }
    }
    Ok(first)
}

/// `k`-th coordinates of all points.
pub(crate) fn coordinate(points: &[PolyPoint], k: usize) -> Vec<ComplexPoint> {
    points.iter().map(|p| p.coord(k)).collect()
}

/// Carathéodory pseudodistance of the polydisc: the largest coordinate
/// distance.
pub fn c_star_polydisc(a: &PolyPoint, b: &PolyPoint) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(PickError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(a.coords.iter().zip(&b.coords).map(|(&x, &y)| pseudo_distance_unchecked(x, y)).fold(0.0, f64::max))
}

/// Position of `w` relative to the two-point Pick body of `z1, z2`, which is
/// `{ m(w₁, w₂) < c*(z1, z2) }`.
pub fn two_point_body_membership(
    z1: &PolyPoint,
    z2: &PolyPoint,
    w: [ComplexPoint; 2],
    band: f64,
) -> Result<Membership> {
    let r = c_star_polydisc(z1, z2)?;
    let m = pseudo_distance(w[0], w[1])?;
    Ok(if (m - r).abs() <= band {
        Membership::Boundary
    } else if m < r {
        Membership::Interior
    } else {
        Membership::Exterior
    })
}

/// `λ ↦ Σ c_k λ^k`, for candidate coordinate maps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    pub coeffs: Vec<ComplexPoint>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<ComplexPoint>) -> Self {
        Self { coeffs }
    }

    pub fn identity() -> Self {
        Self::new(vec![ComplexPoint::new(0.0, 0.0), ComplexPoint::new(1.0, 0.0)])
    }
}

impl DiscMap for Polynomial {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        self.coeffs.iter().rev().fold(ComplexPoint::new(0.0, 0.0), |acc, &c| acc * lambda + c)
    }
}

/// Whether the analytic disc `λ ↦ (φ_1(λ), …, φ_m(λ))` through the points
/// (`φ(λ_j) = z_j`) is a Carathéodory geodesic in the graph sense: one
/// coordinate is the identity, so its projection is a left inverse, and the
/// Carathéodory distance of every pair equals `m(λ_i, λ_j)`. On such a disc
/// the Pick body of the points coincides with the disc body of the `λ`s.
pub fn geodesic_body_check(points: &[PolyPoint], lambdas: &[ComplexPoint], candidate: &[&dyn DiscMap]) -> Result<bool> {
    let m = common_dim(points)?;
    if lambdas.len() != points.len() {
        return Err(PickError::LengthMismatch { left: points.len(), right: lambdas.len() });
    }
    if candidate.len() != m {
        return Err(PickError::DimensionMismatch { left: m, right: candidate.len() });
    }
    for (j, (&l, p)) in lambdas.iter().zip(points).enumerate() {
        check_open_disc(l, &format!("lambda {j}"))?;
        for (k, f) in candidate.iter().enumerate() {
            let miss = (f.value_at(l) - p.coord(k)).norm();
            if miss.is_nan() || miss > CANDIDATE_TOL {
                return Err(PickError::InvalidCandidate(format!(
                    "coordinate {k} misses point {j} by {miss:e}"
                )));
            }
        }
    }
    if points.len() < 2 {
        return Ok(true);
    }
    let probes = [
        ComplexPoint::new(0.0, 0.0),
        ComplexPoint::new(0.5, 0.0),
        ComplexPoint::new(-0.3, 0.6),
        ComplexPoint::new(0.1, -0.8),
    ];
    let has_identity = candidate
        .iter()
        .any(|f| probes.iter().all(|&p| (f.value_at(p) - p).norm() <= CANDIDATE_TOL));
    if !has_identity {
        return Ok(false);
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let c = c_star_polydisc(&points[i], &points[j])?;
            if (c - pseudo_distance(lambdas[i], lambdas[j])?).abs() > CANDIDATE_TOL {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
