use serde::{Deserialize, Serialize};

use super::{Method, MinkowskiResult, Ray};
use crate::complex::ComplexPoint;
use crate::error::Result;
use crate::moebius::{phi, BlaschkeProduct, DiscMap, MoebiusMap};

/// Relative tolerance for deciding that the two normalized entries agree.
const EQUAL_REL_TOL: f64 = 1e-14;

/// The extremal map of the closed forms: a Blaschke product over the nodes
/// with vanishing `α`, optionally multiplied by a disc automorphism.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormExtremal {
    pub product: BlaschkeProduct,
    pub automorphism: Option<MoebiusMap>,
}

impl ClosedFormExtremal {
    pub fn degree(&self) -> usize {
        self.product.degree() + usize::from(self.automorphism.is_some())
    }
}

impl DiscMap for ClosedFormExtremal {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        let base = self.product.value_at(lambda);
        match &self.automorphism {
            Some(a) => base * a.apply(lambda),
            None => base,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub result: MinkowskiResult,
    pub extremal: ClosedFormExtremal,
}

/// Closed forms for `α` with exactly one or two non-zero entries.
///
/// Entries may sit anywhere in the tuple; the functional is invariant under
/// permuting nodes and entries together. Returns `None` for other patterns.
///
/// * one non-zero entry `α_p`: `t = ∏_{l≠p} m(z_l, z_p) / |α_p|`, extremal
///   `c · ∏_{l≠p} φ_{z_l}`.
/// * two non-zero entries `α_p, α_q`: with `f₀ = ∏_{l∉{p,q}} φ_{z_l}` and
///   `α'_k = α_k / f₀(z_k)`, either `α'_p = α'_q` and `f₀` (rotated) is
///   extremal with `t = 1/|α'_p|`, or `t` solves
///   `m(t α'_p, t α'_q) = m(z_p, z_q)` and the extremal is `φ_t · f₀` where
///   `φ_t` is the automorphism with `φ_t(z_k) = t α'_k`.
pub fn mu_closed_form(ray: &Ray) -> Result<Option<ClosedForm>> {
    let z = ray.nodes().as_slice();
    let alpha = ray.alpha();
    let support: Vec<usize> = (0..alpha.len()).filter(|&k| alpha[k].norm() > 0.0).collect();
    if z.len() < 2 {
        return Ok(None);
    }
    let zero_nodes = |skip: &[usize]| -> Vec<ComplexPoint> {
        (0..z.len()).filter(|k| !skip.contains(k)).map(|k| z[k]).collect()
    };

    match *support.as_slice() {
        [p] => {
            let zeros = zero_nodes(&[p]);
            let f0_at_p = zeros.iter().fold(ComplexPoint::new(1.0, 0.0), |acc, &a| acc * phi(a, z[p]));
            let t = f0_at_p.norm() / alpha[p].norm();
            // f(z_p) = t α_p fixes the unimodular constant
            let constant = alpha[p] * t / f0_at_p;
            let product = BlaschkeProduct::new(constant / constant.norm(), zeros)?;
            Ok(Some(ClosedForm {
                result: MinkowskiResult::from_t(ray, t, Method::ClosedForm),
                extremal: ClosedFormExtremal { product, automorphism: None },
            }))
        }
        [p, q] => {
            let zeros = zero_nodes(&[p, q]);
            let f0 = BlaschkeProduct::new(ComplexPoint::new(1.0, 0.0), zeros.clone())?;
            let a = alpha[p] / f0.value_at(z[p]);
            let b = alpha[q] / f0.value_at(z[q]);
            if (a - b).norm() <= EQUAL_REL_TOL * a.norm().max(b.norm()) {
                let t = 1.0 / a.norm();
                let product = BlaschkeProduct::new(a / a.norm(), zeros)?;
                return Ok(Some(ClosedForm {
                    result: MinkowskiResult::from_t(ray, t, Method::ClosedForm),
                    extremal: ClosedFormExtremal { product, automorphism: None },
                }));
            }
            let t = two_point_scale(a, b, phi(z[p], z[q]).norm());
            let automorphism = MoebiusMap::through_two_points(z[p], z[q], a * t, b * t)?;
            Ok(Some(ClosedForm {
                result: MinkowskiResult::from_t(ray, t, Method::ClosedForm),
                extremal: ClosedFormExtremal { product: f0, automorphism: Some(automorphism) },
            }))
        }
        _ => Ok(None),
    }
}

/// Smallest `t > 0` with `m(t a, t b) = r`, for `a ≠ b`.
///
/// With `s = t²` and `c = ā b` the condition is the quadratic
/// `r²|c|² s² − (2 r² Re c + |a − b|²) s + r² = 0`; the smaller root is
/// taken in its cancellation-free form.
pub(crate) fn two_point_scale(a: ComplexPoint, b: ComplexPoint, r: f64) -> f64 {
    let c = a.conj() * b;
    let r2 = r * r;
    let lin = 2.0 * r2 * c.re + (a - b).norm_sqr();
    let disc = (lin * lin - 4.0 * r2 * r2 * c.norm_sqr()).max(0.0);
    let s = 2.0 * r2 / (lin + disc.sqrt());
    s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::moebius::pseudo_distance;

    #[test]
    fn single_entry_example() {
        let nodes = vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)];
        let ray = Ray::from_points(nodes.clone(), vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let cf = mu_closed_form(&ray).unwrap().unwrap();
        // |0.5i| · |(0.5 − 0.5i)/(1 − 0.25i)|
        let expected = 0.5 * (c(0.5, -0.5) / c(1.0, -0.25)).norm();
        assert!((cf.result.t - expected).abs() < 1e-15);
        assert!((cf.result.t - 0.34300).abs() < 5e-6);
        for (k, &z) in nodes.iter().enumerate() {
            assert!((cf.extremal.value_at(z) - cf.result.boundary_point[k]).norm() < 1e-14);
        }
        assert_eq!(cf.extremal.degree(), 2);

        let ray = Ray::from_points(vec![c(0.0, 0.0), c(0.5, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((mu_closed_form(&ray).unwrap().unwrap().result.t - 0.5).abs() < 1e-15);
    }

    #[test]
    fn equal_branch_example() {
        // f₀(λ) = φ_0(λ) = −λ, α = (0, f₀(0.5), f₀(0.5i))
        let nodes = vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)];
        let ray = Ray::from_points(nodes, vec![c(0.0, 0.0), c(-0.5, 0.0), c(0.0, -0.5)]).unwrap();
        let cf = mu_closed_form(&ray).unwrap().unwrap();
        assert!((cf.result.t - 1.0).abs() < 1e-14);
        assert!(cf.extremal.automorphism.is_none());
    }

    #[test]
    fn unequal_branch_interpolates() {
        let nodes = vec![c(0.1, 0.2), c(-0.4, 0.3), c(0.5, -0.2), c(0.0, -0.6)];
        let alpha = vec![c(0.0, 0.0), c(0.0, 0.0), c(0.3, 0.4), c(-0.7, 0.1)];
        let ray = Ray::from_points(nodes.clone(), alpha).unwrap();
        let cf = mu_closed_form(&ray).unwrap().unwrap();
        for (k, &z) in nodes.iter().enumerate() {
            assert!((cf.extremal.value_at(z) - cf.result.boundary_point[k]).norm() < 1e-12);
        }
        assert_eq!(cf.extremal.degree(), 3);
    }

    #[test]
    fn two_point_scale_solves_condition() {
        let (a, b, r) = (c(0.3, -0.2), c(-0.5, 0.4), 0.6);
        let t = two_point_scale(a, b, r);
        assert!((pseudo_distance(a * t, b * t).unwrap() - r).abs() < 1e-14);
    }

    #[test]
    fn other_patterns_not_applicable() {
        let ray = Ray::from_points(vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)], vec![c(0.1, 0.0), c(0.2, 0.0), c(0.3, 0.0)])
            .unwrap();
        assert!(mu_closed_form(&ray).unwrap().is_none());
        let single = Ray::from_points(vec![c(0.3, 0.0)], vec![c(0.6, 0.0)]).unwrap();
        assert!(mu_closed_form(&single).unwrap().is_none());
    }
}
