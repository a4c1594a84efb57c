use serde::{Deserialize, Serialize};

use super::{common_dim, coordinate, PolyPoint};
use crate::complex::ComplexPoint;
use crate::error::{PickError, Result};
use crate::interpolator::central_solve;
use crate::invariants::{d_disc, InvariantQuery};
use crate::minkowski::Ray;
use crate::moebius::{phi, DiscMap};
use crate::pick::{diagnose, InterpolationProblem, NodeSet};

/// Default gap below which a sandwich counts as an equality.
pub const DEFAULT_CERTIFICATE_TOL: f64 = 1e-6;

/// Two-sided bound `lower ≤ d ≤ δ ≤ upper` for three points of `𝔻^m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SandwichCertificate {
    /// `m(F(z_i), F(z_j))` for the realised `F = f ∘ π_k`.
    pub lower: f64,
    /// `d^𝔻_{(λ, α)}(λ_i, λ_j)` on the graph disc.
    pub upper: f64,
    pub gap: f64,
    pub certified: bool,
    pub tolerance: f64,
    /// Slot `k` carrying the identity in the graph disc (0-based).
    pub coordinate: usize,
    pub lambdas: Vec<ComplexPoint>,
    /// Composition traces: the extremal disc function first, then each
    /// coordinate map of the graph disc.
    pub construction: Vec<String>,
}

fn check_pair(n: usize, i: usize, j: usize, alpha: &[ComplexPoint]) -> Result<()> {
    if alpha.len() != n {
        return Err(PickError::LengthMismatch { left: n, right: alpha.len() });
    }
    for index in [i, j] {
        if index >= n {
            return Err(PickError::IndexOutOfRange { index, len: n });
        }
    }
    if i == j {
        return Err(PickError::SameIndex(i));
    }
    Ok(())
}

fn graph_nodes(points: &[PolyPoint], k: usize) -> Result<NodeSet> {
    NodeSet::new(coordinate(points, k)).map_err(|e| PickError::InfeasibleGraphDisc {
        coordinate: k,
        reason: format!("coordinate values are not distinct nodes: {e}"),
    })
}

/// Lower bound for `d` from the coordinate `k` alone: the disc extremal `f`
/// of `(z_{·k}, α)` composed with the projection `π_k` maps `𝔻^m` into `𝔻`
/// and sends the points onto `ℂ·α`. Returns the realised value and the trace
/// of `f`.
fn realised_lower(points: &[PolyPoint], alpha: &[ComplexPoint], i: usize, j: usize, k: usize) -> Result<(f64, Vec<String>)> {
    let nodes = graph_nodes(points, k)?;
    let value = d_disc(&InvariantQuery::new(Ray::new(nodes, alpha.to_vec())?, i, j)?)?;
    let f = &value.witness.interpolant;
    let (fi, fj) = (f.value_at(points[i].coord(k)), f.value_at(points[j].coord(k)));
    let realised = if fi == fj { 0.0 } else { phi(fi, fj).norm() };
    Ok((realised, f.trace()))
}

/// Equality certificate `d = δ` through the graph disc of coordinate `k`.
///
/// The disc `λ ↦ (g_1(λ), …, λ, …, g_m(λ))` with `λ` in slot `k` passes
/// through the points when each problem `z_{·k} ↦ z_{·l}` is solvable; its
/// disc invariant bounds `δ` from above. The extremal of that same disc
/// problem, composed with `π_k`, bounds `d` from below by the same number.
pub fn graph_disc_certificate(
    points: &[PolyPoint],
    alpha: &[ComplexPoint],
    i: usize,
    j: usize,
    k: usize,
    tolerance: f64,
) -> Result<SandwichCertificate> {
    let m = common_dim(points)?;
    check_pair(points.len(), i, j, alpha)?;
    if k >= m {
        return Err(PickError::IndexOutOfRange { index: k, len: m });
    }
    let nodes = graph_nodes(points, k)?;
    let mut construction = Vec::new();
    let mut maps = Vec::new();
    for l in 0..m {
        if l == k {
            maps.push(format!("slot {l}: lambda"));
            continue;
        }
        let p = InterpolationProblem::new(nodes.clone(), coordinate(points, l))?;
        if !diagnose(&p, None)?.solvable {
            return Err(PickError::InfeasibleGraphDisc {
                coordinate: k,
                reason: format!("coordinate {l} is not an interpolable function of coordinate {k}"),
            });
        }
        let g = central_solve(&p)?;
        maps.push(format!("slot {l}: {}", g.interpolant.trace().join(" ; ")));
    }

    let ray = Ray::new(nodes.clone(), alpha.to_vec())?;
    let upper = crate::invariants::d_value(&ray, i, j)?.0;
    let (lower, trace) = realised_lower(points, alpha, i, j, k)?;
    construction.push(format!("extremal: {}", trace.join(" ; ")));
    construction.extend(maps);
    let gap = upper - lower;
    Ok(SandwichCertificate {
        lower,
        upper,
        gap,
        certified: gap.abs() <= tolerance,
        tolerance,
        coordinate: k,
        lambdas: nodes.as_slice().to_vec(),
        construction,
    })
}

/// Best realised lower bound for `d^{𝔻^m}_{(z, α)}(z_i, z_j)` over the
/// coordinate projections with pairwise distinct values.
pub fn d_lower_polydisc(points: &[PolyPoint], alpha: &[ComplexPoint], i: usize, j: usize) -> Result<f64> {
    let m = common_dim(points)?;
    check_pair(points.len(), i, j, alpha)?;
    let mut best: f64 = 0.0;
    for k in 0..m {
        match realised_lower(points, alpha, i, j, k) {
            Ok((v, _)) => best = best.max(v),
            Err(PickError::InfeasibleGraphDisc { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::moebius::pseudo_distance;

    fn diagonal() -> Vec<PolyPoint> {
        [c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)].iter().map(|&l| PolyPoint::new(vec![l, l]).unwrap()).collect()
    }

    #[test]
    fn diagonal_certificate() {
        let alpha = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let cert = graph_disc_certificate(&diagonal(), &alpha, 0, 2, 0, DEFAULT_CERTIFICATE_TOL).unwrap();
        assert!(cert.certified);
        assert!(cert.gap.abs() <= 1e-10);
        assert!((cert.upper - 0.34300).abs() < 5e-6);
        assert!(cert.lower <= cert.upper + 1e-12);
        assert!((d_lower_polydisc(&diagonal(), &alpha, 0, 2).unwrap() - cert.lower).abs() < 1e-12);
    }

    #[test]
    fn repeated_coordinate_is_not_applicable() {
        let pts: Vec<_> = [[c(0.1, 0.0), c(0.0, 0.0)], [c(0.1, 0.0), c(0.5, 0.0)], [c(0.3, 0.0), c(0.0, 0.5)]]
            .iter()
            .map(|p| PolyPoint::new(p.to_vec()).unwrap())
            .collect();
        let alpha = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert!(matches!(
            graph_disc_certificate(&pts, &alpha, 0, 2, 0, DEFAULT_CERTIFICATE_TOL),
            Err(PickError::InfeasibleGraphDisc { coordinate: 0, .. })
        ));
    }

    #[test]
    fn alpha_equal_to_coordinate() {
        // second coordinate = half the first, so the graph disc over slot 0 exists
        let pts: Vec<_> = [c(0.1, 0.2), c(-0.3, 0.1), c(0.2, -0.4)]
            .iter()
            .map(|&z| PolyPoint::new(vec![z, z * 0.5]).unwrap())
            .collect();
        let alpha = coordinate(&pts, 0);
        let cert = graph_disc_certificate(&pts, &alpha, 0, 1, 0, DEFAULT_CERTIFICATE_TOL).unwrap();
        assert!(cert.certified);
        assert!((cert.upper - pseudo_distance(alpha[0], alpha[1]).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn infeasible_graph_disc() {
        // the second coordinate separates the points more than the first
        let pts: Vec<_> = [[c(0.0, 0.0), c(0.0, 0.0)], [c(0.1, 0.0), c(0.9, 0.0)], [c(0.0, 0.1), c(0.0, 0.9)]]
            .iter()
            .map(|p| PolyPoint::new(p.to_vec()).unwrap())
            .collect();
        let alpha = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert!(matches!(
            graph_disc_certificate(&pts, &alpha, 0, 2, 0, DEFAULT_CERTIFICATE_TOL),
            Err(PickError::InfeasibleGraphDisc { .. })
        ));
        assert!(graph_disc_certificate(&pts, &alpha, 0, 2, 1, DEFAULT_CERTIFICATE_TOL).unwrap().certified);
    }
}
