//! Pseudohyperbolic geometry of the unit disc.
//!
//! Everything here is built from the involution
//! `φ_u(v) = (u − v) / (1 − ū v)`, which swaps `u` and `0`. Disc
//! automorphisms are stored as a centre and a rotation, Blaschke products as
//! a unimodular constant times `φ`-factors, and the interpolants produced by
//! the boundary recursion as a lazy composition tree.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::complex::{check_closed_disc, check_finite, check_open_disc, ComplexPoint};
use crate::error::{PickError, Result};

/// Default number of boundary samples used by [`boundary_sup_probe`].
pub const DEFAULT_PROBE_GRID: usize = 256;

/// `φ_u(v)` without any domain checks.
#[inline]
pub fn phi(u: ComplexPoint, v: ComplexPoint) -> ComplexPoint {
    (u - v) / (ComplexPoint::new(1.0, 0.0) - u.conj() * v)
}

/// Pseudohyperbolic distance `m(a, b) = |(a − b) / (1 − ā b)|`.
pub fn pseudo_distance(a: ComplexPoint, b: ComplexPoint) -> Result<f64> {
    check_open_disc(a, "first argument")?;
    check_open_disc(b, "second argument")?;
    Ok(pseudo_distance_unchecked(a, b))
}

/// `m(a, b)` without domain checks, exactly symmetric in its arguments.
#[inline]
pub fn pseudo_distance_unchecked(a: ComplexPoint, b: ComplexPoint) -> f64 {
    (a - b).norm() / (ComplexPoint::new(1.0, 0.0) - a.conj() * b).norm()
}

/// The automorphism `v ↦ e^{iθ} (u − v) / (1 − ū v)` with `|u| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap {
    center: ComplexPoint,
    rotation: f64,
}

impl MoebiusMap {
    pub fn new(center: ComplexPoint, rotation: f64) -> Result<Self> {
        check_open_disc(center, "automorphism centre")?;
        if !rotation.is_finite() {
            return Err(PickError::NonFinite { what: "rotation".into() });
        }
        Ok(Self { center, rotation })
    }

    /// The involution `φ_u`.
    pub fn involution(center: ComplexPoint) -> Result<Self> {
        Self::new(center, 0.0)
    }

    /// The automorphism sending `from` to `to` and `from_other` to
    /// `to_other`. Requires `m(from, from_other) = m(to, to_other)`; the
    /// rotation is chosen from the phases and the moduli are not rechecked.
    pub fn through_two_points(
        from: ComplexPoint,
        from_other: ComplexPoint,
        to: ComplexPoint,
        to_other: ComplexPoint,
    ) -> Result<Self> {
        check_open_disc(from, "source point")?;
        check_open_disc(to, "target point")?;
        // φ_to(e^{iθ} φ_from(λ)) hits `to` at `from`; θ aligns the second pair.
        let a = phi(from, from_other);
        let b = phi(to, to_other);
        let theta = if a.norm() == 0.0 || b.norm() == 0.0 { 0.0 } else { b.arg() - a.arg() };
        let first = Self::new(from, theta)?;
        Ok(Self::involution(to)?.compose(&first))
    }

    pub fn center(&self) -> ComplexPoint {
        self.center
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    pub fn is_involution(&self) -> bool {
        self.rotation.rem_euclid(2.0 * PI) == 0.0
    }

    /// Evaluation without domain checks; the denominator never vanishes on
    /// the closed disc because `|u| < 1`.
    #[inline]
    pub fn apply(&self, v: ComplexPoint) -> ComplexPoint {
        ComplexPoint::from_polar(1.0, self.rotation) * phi(self.center, v)
    }

    /// The inverse automorphism `w ↦ φ_u(e^{−iθ} w)`, again in
    /// centre/rotation form.
    pub fn inverse(&self) -> Self {
        Self {
            center: self.center * ComplexPoint::from_polar(1.0, self.rotation),
            rotation: -self.rotation,
        }
    }

    /// `self ∘ other` as a single automorphism.
    pub fn compose(&self, other: &Self) -> Self {
        // g = e^{iθ} φ_a with a = g⁻¹(0), and g(0) = e^{iθ} a.
        let pre_zero = other.inverse().apply(self.center);
        let at_zero = self.apply(other.apply(ComplexPoint::new(0.0, 0.0)));
        let rotation = if pre_zero.norm() > 1e-300 {
            (at_zero / pre_zero).arg()
        } else {
            // a = 0, so g(v) = -e^{iθ} v
            let probe = ComplexPoint::new(0.5, 0.0);
            let image = self.apply(other.apply(probe));
            (image / phi(ComplexPoint::new(0.0, 0.0), probe)).arg()
        };
        Self { center: pre_zero, rotation }
    }
}

/// `moebius_eval`: evaluate an automorphism at a point of the closed disc.
pub fn moebius_eval(map: &MoebiusMap, v: ComplexPoint) -> Result<ComplexPoint> {
    check_closed_disc(v, "evaluation point", 1e-12)?;
    let denom = ComplexPoint::new(1.0, 0.0) - map.center.conj() * v;
    if denom.norm() <= f64::EPSILON {
        return Err(PickError::Pole { u: map.center.to_string(), v: v.to_string() });
    }
    Ok(map.apply(v))
}

/// Holomorphic self-maps of the closed disc that can be evaluated pointwise.
pub trait DiscMap {
    /// Raw evaluation. Callers outside the closed disc get whatever the
    /// formula yields; use [`interpolant_eval`] for a checked version.
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint;
}

impl DiscMap for MoebiusMap {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        self.apply(lambda)
    }
}

/// `c · ∏ φ_{a_k}(λ)` with `|c| = 1` and `|a_k| < 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    constant: ComplexPoint,
    zeros: Vec<ComplexPoint>,
}

impl BlaschkeProduct {
    pub fn new(constant: ComplexPoint, zeros: Vec<ComplexPoint>) -> Result<Self> {
        check_finite(constant, "Blaschke constant")?;
        if (constant.norm() - 1.0).abs() > 1e-12 {
            return Err(PickError::Domain { what: "Blaschke constant".into(), modulus: constant.norm() });
        }
        for (k, &a) in zeros.iter().enumerate() {
            check_open_disc(a, &format!("Blaschke zero {k}"))?;
        }
        Ok(Self { constant: constant / constant.norm(), zeros })
    }

    pub fn constant(&self) -> ComplexPoint {
        self.constant
    }

    pub fn zeros(&self) -> &[ComplexPoint] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }
}

impl DiscMap for BlaschkeProduct {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        self.zeros.iter().fold(self.constant, |acc, &a| acc * phi(a, lambda))
    }
}

/// Lazy composition tree produced by the boundary recursion:
/// `Node { target: u, node: z, inner: g }` is `λ ↦ φ_u(φ_z(λ) · g(λ))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComposedInterpolant {
    Constant(ComplexPoint),
    Node {
        target: ComplexPoint,
        node: ComplexPoint,
        inner: Box<ComposedInterpolant>,
    },
}

impl ComposedInterpolant {
    pub fn constant(value: ComplexPoint) -> Result<Self> {
        check_closed_disc(value, "leaf constant", 1e-12)?;
        Ok(Self::Constant(value))
    }

    pub fn node(target: ComplexPoint, node: ComplexPoint, inner: Self) -> Result<Self> {
        check_open_disc(target, "node target")?;
        check_open_disc(node, "node")?;
        Ok(Self::Node { target, node, inner: Box::new(inner) })
    }

    /// Number of `Node` layers.
    pub fn depth(&self) -> usize {
        let mut depth = 0;
        let mut cur = self;
        while let Self::Node { inner, .. } = cur {
            depth += 1;
            cur = inner;
        }
        depth
    }

    pub fn leaf(&self) -> ComplexPoint {
        let mut cur = self;
        loop {
            match cur {
                Self::Constant(v) => return *v,
                Self::Node { inner, .. } => cur = inner,
            }
        }
    }

    /// A unimodular leaf makes the whole tree a finite Blaschke product.
    pub fn is_blaschke(&self, tol: f64) -> bool {
        (self.leaf().norm() - 1.0).abs() <= tol
    }

    /// Blaschke degree (= depth) when the leaf is unimodular.
    pub fn blaschke_degree(&self, tol: f64) -> Option<usize> {
        self.is_blaschke(tol).then(|| self.depth())
    }

    /// Human-readable composition trace, outermost layer first.
    pub fn trace(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                Self::Constant(v) => {
                    out.push(format!("const {v}"));
                    return out;
                }
                Self::Node { target, node, inner } => {
                    out.push(format!("phi[{target}](phi[{node}](lambda) * inner(lambda))"));
                    cur = inner;
                }
            }
        }
    }
}

impl DiscMap for ComposedInterpolant {
    fn value_at(&self, lambda: ComplexPoint) -> ComplexPoint {
        match self {
            Self::Constant(v) => *v,
            Self::Node { target, node, inner } => phi(*target, phi(*node, lambda) * inner.value_at(lambda)),
        }
    }
}

/// Checked evaluation of any [`DiscMap`] at `|λ| <= 1`.
pub fn interpolant_eval<F: DiscMap + ?Sized>(f: &F, lambda: ComplexPoint) -> Result<ComplexPoint> {
    check_closed_disc(lambda, "evaluation point", 1e-12)?;
    let value = f.value_at(lambda);
    check_finite(value, "interpolant value")?;
    Ok(value)
}

/// `Φ_φ(w_1, …, w_n) = (φ(w_1), …, φ(w_n))`.
pub fn apply_automorphism_to_tuple(map: &MoebiusMap, w: &[ComplexPoint]) -> Result<Vec<ComplexPoint>> {
    w.iter()
        .enumerate()
        .map(|(k, &v)| {
            check_open_disc(v, &format!("tuple entry {k}"))?;
            Ok(map.apply(v))
        })
        .collect()
}

/// Maximum of `|f(e^{iθ_k})|` over a uniform grid of the unit circle.
pub fn boundary_sup_probe<F: DiscMap + ?Sized>(f: &F, grid_size: usize) -> f64 {
    let grid_size = grid_size.max(8);
    (0..grid_size)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / grid_size as f64;
            f.value_at(ComplexPoint::from_polar(1.0, theta)).norm()
        })
        .fold(0.0, f64::max)
}
