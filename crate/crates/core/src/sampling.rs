//! Seeded random instances for the property batteries.
//!
//! All generators take the caller's RNG, so a single seed reproduces a whole
//! suite.

use std::f64::consts::TAU;

use rand::Rng;

use crate::complex::ComplexPoint;
use crate::error::Result;
use crate::minkowski::{mu_bisection, Ray};
use crate::moebius::{BlaschkeProduct, DiscMap, MoebiusMap};
use crate::pick::{InterpolationProblem, NodeSet};
use crate::polydisc::PolyPoint;

/// Minimum pairwise distance between generated nodes.
pub const NODE_SEPARATION: f64 = 1e-3;
/// Relative tolerance of the bisection behind [`boundary_tuple`].
pub const BOUNDARY_TOL: f64 = 1e-14;

/// Uniform point of the disc of the given radius.
pub fn disc_point(rng: &mut impl Rng, radius: f64) -> ComplexPoint {
    ComplexPoint::from_polar(radius * rng.random::<f64>().sqrt(), rng.random_range(0.0..TAU))
}

pub fn disc_points(rng: &mut impl Rng, n: usize, radius: f64) -> Vec<ComplexPoint> {
    (0..n).map(|_| disc_point(rng, radius)).collect()
}

/// `n` nodes in the disc of the given radius, pairwise at least
/// [`NODE_SEPARATION`] apart.
pub fn nodes(rng: &mut impl Rng, n: usize, radius: f64) -> NodeSet {
    loop {
        let z = disc_points(rng, n, radius);
        let separated = (0..n).all(|i| (i + 1..n).all(|j| (z[i] - z[j]).norm() >= NODE_SEPARATION));
        if separated {
            return NodeSet::new(z).expect("separated nodes in the disc");
        }
    }
}

/// Nodes and targets drawn independently from discs of radius `radius`.
pub fn problem(rng: &mut impl Rng, n: usize, radius: f64) -> InterpolationProblem {
    let z = nodes(rng, n, radius);
    InterpolationProblem::new(z, disc_points(rng, n, radius)).expect("targets in the disc")
}

/// A ray with nodes of modulus below `radius` and a non-zero direction.
pub fn ray(rng: &mut impl Rng, n: usize, radius: f64) -> Ray {
    let z = nodes(rng, n, radius);
    loop {
        let alpha = disc_points(rng, n, 1.0);
        if let Ok(r) = Ray::new(z.clone(), alpha) {
            return r;
        }
    }
}

pub fn automorphism(rng: &mut impl Rng, radius: f64) -> MoebiusMap {
    MoebiusMap::new(disc_point(rng, radius), rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
        .expect("centre in the disc")
}

pub fn blaschke(rng: &mut impl Rng, degree: usize, radius: f64) -> BlaschkeProduct {
    BlaschkeProduct::new(ComplexPoint::from_polar(1.0, rng.random_range(0.0..TAU)), disc_points(rng, degree, radius))
        .expect("zeros in the disc")
}

/// The boundary point `t·α` of the Pick body on the given ray.
pub fn boundary_tuple(ray: &Ray) -> Result<Vec<ComplexPoint>> {
    Ok(mu_bisection(ray, BOUNDARY_TOL)?.boundary_point)
}

/// A coordinate map for [`analytic_disc_points`]: an automorphism, or a
/// degree-two Blaschke product scaled by a factor in `[0.6, 1]`.
struct CoordinateMap {
    product: BlaschkeProduct,
    scale: f64,
}

impl DiscMap for CoordinateMap {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        self.product.value_at(lambda) * self.scale
    }
}

/// Three points of `𝔻^m` on a random analytic disc: each coordinate is an
/// automorphism or a scaled degree-two Blaschke product, evaluated at three
/// random nodes of modulus below 0.9. Returns `None` when the points are not
/// admissible (a coordinate value on the circle, or coincident points).
pub fn analytic_disc_points(rng: &mut impl Rng, m: usize) -> Option<Vec<PolyPoint>> {
    let lambdas = disc_points(rng, 3, 0.9);
    let maps: Vec<CoordinateMap> = (0..m)
        .map(|_| {
            if rng.random_bool(0.5) {
                CoordinateMap { product: blaschke(rng, 1, 0.9), scale: 1.0 }
            } else {
                CoordinateMap { product: blaschke(rng, 2, 0.9), scale: rng.random_range(0.6..=1.0) }
            }
        })
        .collect();
    let points: Vec<PolyPoint> = lambdas
        .iter()
        .map(|&l| PolyPoint::new(maps.iter().map(|f| f.value_at(l)).collect()).ok())
        .collect::<Option<_>>()?;
    let distinct = (0..3).all(|a| (a + 1..3).all(|b| points[a] != points[b]));
    distinct.then_some(points)
}

/// Three independent uniform points of `𝔻^m` (radius 0.9 per coordinate).
pub fn uniform_points(rng: &mut impl Rng, m: usize) -> Vec<PolyPoint> {
    (0..3).map(|_| PolyPoint::new(disc_points(rng, m, 0.9)).expect("coordinates in the disc")).collect()
}

/// A non-constant boundary tuple of length 3: the values of a random Blaschke
/// product of degree 1 or 2 at three random nodes.
pub fn boundary_alpha(rng: &mut impl Rng) -> Vec<ComplexPoint> {
    loop {
        let degree = rng.random_range(1..=2);
        let b = blaschke(rng, degree, 0.9);
        let alpha: Vec<_> = disc_points(rng, 3, 0.9).into_iter().map(|l| b.value_at(l)).collect();
        if (alpha[0] - alpha[1]).norm() > 1e-6 && (alpha[0] - alpha[2]).norm() > 1e-6 {
            return alpha;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_seeded() {
        let a = problem(&mut ChaCha8Rng::seed_from_u64(5), 4, 0.9);
        let b = problem(&mut ChaCha8Rng::seed_from_u64(5), 4, 0.9);
        assert_eq!(a, b);
    }

    #[test]
    fn boundary_tuples_have_unit_mu() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let r = ray(&mut rng, 4, 0.9);
            let w = boundary_tuple(&r).unwrap();
            let mu = crate::minkowski::minkowski_functional(r.nodes(), &w, 1e-13).unwrap();
            assert!((mu - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn disc_points_stay_in_the_polydisc() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            if let Some(pts) = analytic_disc_points(&mut rng, 3) {
                assert!(pts.iter().all(|p| p.coords().iter().all(|z| z.norm() < 1.0)));
            }
        }
    }
}
