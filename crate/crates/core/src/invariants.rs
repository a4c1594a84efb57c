//! The invariant function `d` on the disc.
//!
//! For nodes `z` and a direction `α`, `d_α(z_i, z_j)` is the supremum of
//! `m(f(z_i), f(z_j))` over holomorphic `f: 𝔻 → 𝔻` whose value tuple lies on
//! the complex line `ℂ·α`. It is attained at the boundary point `t·α` of the
//! Pick body, so `d_α(z_i, z_j) = m(t α_i, t α_j)` with `t = 1/μ(α)`.

use serde::{Deserialize, Serialize};

use crate::complex::{all_equal, ComplexPoint, EQ_TOL};
use crate::error::{PickError, Result};
use crate::interpolator::{solve_boundary_problem, SolveReport};
use crate::minkowski::{classify_mu, mu_bisection, mu_closed_form, Membership, Method, Ray, DEFAULT_BISECTION_TOL};
use crate::moebius::{phi, pseudo_distance};
use crate::pick::InterpolationProblem;

/// A ray together with a pair of distinct node indices (0-based).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantQuery {
    ray: Ray,
    i: usize,
    j: usize,
}

impl InvariantQuery {
    pub fn new(ray: Ray, i: usize, j: usize) -> Result<Self> {
        let len = ray.len();
        for index in [i, j] {
            if index >= len {
                return Err(PickError::IndexOutOfRange { index, len });
            }
        }
        if i == j {
            return Err(PickError::SameIndex(i));
        }
        Ok(Self { ray, i, j })
    }

    pub fn ray(&self) -> &Ray {
        &self.ray
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub value: f64,
    pub t: f64,
    pub method: Method,
    /// The extremal interpolant of `t·α`.
    pub witness: SolveReport,
}

/// `t = 1/μ(α)`, from a closed form when one applies and by bisection
/// otherwise.
pub fn extremal_scale(ray: &Ray) -> Result<(f64, Method)> {
    if let Some(cf) = mu_closed_form(ray)? {
        return Ok((cf.result.t, Method::ClosedForm));
    }
    let r = mu_bisection(ray, DEFAULT_BISECTION_TOL)?;
    Ok((r.t, r.method))
}

/// `m(t α_i, t α_j)` for a known scale `t`.
fn pair_value(alpha: &[ComplexPoint], t: f64, i: usize, j: usize) -> f64 {
    if alpha[i] == alpha[j] {
        return 0.0;
    }
    phi(alpha[i] * t, alpha[j] * t).norm().min(1.0)
}

/// `d_α(z_i, z_j)` with its scale and method, without building a witness.
pub fn d_value(ray: &Ray, i: usize, j: usize) -> Result<(f64, f64, Method)> {
    let (t, method) = extremal_scale(ray)?;
    Ok((pair_value(ray.alpha(), t, i, j), t, method))
}

pub fn d_disc(q: &InvariantQuery) -> Result<InvariantValue> {
    let (i, j) = q.pair();
    let (value, t, method) = d_value(&q.ray, i, j)?;
    let boundary: Vec<ComplexPoint> = q.ray.alpha().iter().map(|&a| a * t).collect();
    let witness = solve_boundary_problem(&InterpolationProblem::new(q.ray.nodes().clone(), boundary)?)?;
    Ok(InvariantValue { value, t, method, witness })
}

/// Carathéodory pseudodistance of the disc, which is `m` itself.
pub fn c_star_disc(a: ComplexPoint, b: ComplexPoint) -> Result<f64> {
    pseudo_distance(a, b)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvabilityViaD {
    pub solvable: bool,
    /// A pair `(i, j)` (0-based) with `w_i ≠ w_j` and `m(w_i, w_j) = d(z_i, z_j)`.
    pub equality_pair: Option<(usize, usize)>,
    /// `μ(w)`, or `None` when the targets are constant.
    pub mu: Option<f64>,
}

/// Solvability through `d`: the targets are constant, or some pair with
/// `w_i ≠ w_j` has `m(w_i, w_j) ≤ d_w(z_i, z_j)`.
///
/// The pair used for the comparison is the one with the largest
/// `|w_i − w_j|`. Equality is declared exactly when `w` lies in the boundary
/// band of the Pick body, so it agrees with [`crate::minkowski::membership`].
pub fn solvable_via_d(p: &InterpolationProblem, band: f64) -> Result<SolvabilityViaD> {
    let w = p.targets();
    if all_equal(w, EQ_TOL) {
        return Ok(SolvabilityViaD { solvable: true, equality_pair: None, mu: None });
    }
    if p.has_unimodular_target() {
        return Ok(SolvabilityViaD { solvable: false, equality_pair: None, mu: None });
    }
    let ray = Ray::new(p.nodes().clone(), w.to_vec())?;
    let (t, _) = extremal_scale(&ray)?;
    let mu = 1.0 / t;

    let n = w.len();
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let (bi, bj) = pairs
        .clone()
        .max_by(|a, b| (w[a.0] - w[a.1]).norm().total_cmp(&(w[b.0] - w[b.1]).norm()))
        .expect("at least two nodes");
    let m = phi(w[bi], w[bj]).norm();
    let d = pair_value(w, t, bi, bj);

    let on_boundary = classify_mu(mu, band) == Membership::Boundary;
    let equality_pair = if on_boundary { pairs.clone().find(|&(i, j)| (w[i] - w[j]).norm() > EQ_TOL) } else { None };
    Ok(SolvabilityViaD { solvable: on_boundary || m <= d, equality_pair, mu: Some(mu) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::minkowski::DEFAULT_BAND;
    use crate::moebius::MoebiusMap;
    use crate::pick::diagnose;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn real(xs: &[f64]) -> Vec<ComplexPoint> {
        xs.iter().map(|&x| c(x, 0.0)).collect()
    }

    fn rand_disc(rng: &mut impl Rng, r: f64) -> ComplexPoint {
        ComplexPoint::from_polar(r * rng.random::<f64>().sqrt(), rng.random_range(0.0..std::f64::consts::TAU))
    }

    fn query(nodes: Vec<ComplexPoint>, alpha: Vec<ComplexPoint>, i: usize, j: usize) -> InvariantQuery {
        InvariantQuery::new(Ray::from_points(nodes, alpha).unwrap(), i, j).unwrap()
    }

    #[test]
    fn d_examples() {
        let z = vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)];
        let v = d_disc(&query(z.clone(), z.clone(), 0, 1)).unwrap();
        assert!((v.value - 0.5).abs() < 1e-10);

        let v = d_disc(&query(z.clone(), real(&[0.0, 0.0, 1.0]), 0, 2)).unwrap();
        assert!((v.value - 0.34300).abs() < 5e-6);
        assert_eq!(v.method, Method::ClosedForm);
        assert!(v.witness.max_residual() < 1e-9);
        assert_eq!(d_disc(&query(z.clone(), real(&[0.0, 0.0, 1.0]), 0, 1)).unwrap().value, 0.0);

        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(d_disc(&query(z.clone(), vec![c(0.2, 0.1); 3], i, j)).unwrap().value, 0.0);
        }
    }

    #[test]
    fn query_validation() {
        let ray = Ray::from_points(real(&[0.0, 0.5]), real(&[0.0, 1.0])).unwrap();
        assert!(matches!(InvariantQuery::new(ray.clone(), 0, 0), Err(PickError::SameIndex(0))));
        assert!(matches!(InvariantQuery::new(ray, 0, 2), Err(PickError::IndexOutOfRange { index: 2, len: 2 })));
    }

    #[test]
    fn c_star_examples() {
        assert!((c_star_disc(c(0.0, 0.0), c(0.5, 0.0)).unwrap() - 0.5).abs() < 1e-15);
        assert!((c_star_disc(c(0.5, 0.0), c(-0.5, 0.0)).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn invariant_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let n = rng.random_range(2..=5);
            let z: Vec<_> = (0..n).map(|_| rand_disc(&mut rng, 0.9)).collect();
            let alpha: Vec<_> = (0..n).map(|_| rand_disc(&mut rng, 1.0)).collect();
            let (i, j) = (0, 1 + rng.random_range(0..n - 1));
            let ray = Ray::from_points(z.clone(), alpha.clone()).unwrap();
            let (d, _, _) = d_value(&ray, i, j).unwrap();
            assert!((0.0..1.0).contains(&d));
            assert!(d <= c_star_disc(z[i], z[j]).unwrap() + 1e-10);

            let scale = ComplexPoint::from_polar(rng.random_range(0.1..5.0), rng.random_range(-3.0..3.0));
            let (ds, _, _) = d_value(&ray.scaled(scale).unwrap(), i, j).unwrap();
            assert!((d - ds).abs() < 1e-10);

            let (dz, _, _) = d_value(&Ray::from_points(z.clone(), z.clone()).unwrap(), i, j).unwrap();
            assert!((dz - c_star_disc(z[i], z[j]).unwrap()).abs() < 1e-10);

            let f = MoebiusMap::new(rand_disc(&mut rng, 0.6), rng.random_range(-3.0..3.0)).unwrap();
            let fz: Vec<_> = z.iter().map(|&v| f.apply(v)).collect();
            let (df, _, _) = d_value(&Ray::from_points(fz, alpha.clone()).unwrap(), i, j).unwrap();
            assert!((d - df).abs() < 1e-10);

            let two = Ray::from_points(z[..2].to_vec(), alpha[..2].to_vec()).unwrap();
            assert!((d_value(&two, 0, 1).unwrap().0 - c_star_disc(z[0], z[1]).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn solvable_via_d_examples() {
        let constant = InterpolationProblem::from_points(real(&[0.0, 0.5, -0.5]), real(&[0.3, 0.3, 0.3])).unwrap();
        let r = solvable_via_d(&constant, DEFAULT_BAND).unwrap();
        assert!(r.solvable && r.equality_pair.is_none());

        let identity = InterpolationProblem::from_points(real(&[0.0, 0.5]), real(&[0.0, 0.5])).unwrap();
        let r = solvable_via_d(&identity, DEFAULT_BAND).unwrap();
        assert!(r.solvable);
        assert_eq!(r.equality_pair, Some((0, 1)));

        let far = InterpolationProblem::from_points(real(&[0.0, 0.5]), real(&[0.0, 0.9])).unwrap();
        assert!(!solvable_via_d(&far, DEFAULT_BAND).unwrap().solvable);
    }

    #[test]
    fn agrees_with_pick_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..500 {
            let n = rng.random_range(2..=5);
            let z: Vec<_> = (0..n).map(|_| rand_disc(&mut rng, 0.9)).collect();
            let w: Vec<_> = (0..n).map(|_| rand_disc(&mut rng, 0.9)).collect();
            let p = InterpolationProblem::from_points(z, w).unwrap();
            let via = solvable_via_d(&p, DEFAULT_BAND).unwrap();
            if via.mu.is_some_and(|mu| (mu - 1.0).abs() <= DEFAULT_BAND) {
                continue;
            }
            assert_eq!(via.solvable, diagnose(&p, None).unwrap().solvable);
        }
    }
}
