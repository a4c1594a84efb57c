//! Interpolants built by the Schur-type reduction.
//!
//! Eliminating the last node `z_n` replaces the targets by
//! `w'_j = φ_{w_n}(w_j) / φ_{z_n}(z_j)`; any solution `g` of the reduced
//! problem gives the solution `λ ↦ φ_{w_n}(φ_{z_n}(λ) g(λ))` of the original
//! one. Boundary data stays on the boundary under the reduction, so it ends in
//! a unimodular constant and the result is a finite Blaschke product.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{all_equal, ComplexPoint};
use crate::error::{PickError, Result};
use crate::minkowski::{minkowski_functional, DEFAULT_BAND, DEFAULT_BISECTION_TOL};
use crate::moebius::{phi, ComposedInterpolant, DiscMap};
use crate::pick::{diagnose, InterpolationProblem, NodeSet};

/// Leaves within this distance of the unit circle are snapped onto it.
pub const SNAP_BAND: f64 = 1e-6;
/// Reduced targets overshooting the closed disc by at most this much are
/// pulled back onto the circle.
const REDUCE_OVERSHOOT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    InteriorCentral,
    BoundaryUnique,
    Constant,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub interpolant: ComposedInterpolant,
    pub degree_bound: usize,
    /// `|f(z_j) − w_j|` per node.
    pub residuals: Vec<f64>,
    pub classification: Classification,
}

impl SolveReport {
    fn new(interpolant: ComposedInterpolant, p: &InterpolationProblem, classification: Classification) -> Self {
        let residuals = p
            .nodes()
            .as_slice()
            .iter()
            .zip(p.targets())
            .map(|(&z, &w)| (interpolant.value_at(z) - w).norm())
            .collect();
        Self { degree_bound: interpolant.depth(), interpolant, residuals, classification }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// `φ_{w_n}(w_j) / φ_{z_n}(z_j)` for `j < n`, without domain checks.
pub fn reduce_targets(nodes: &[ComplexPoint], targets: &[ComplexPoint]) -> Vec<ComplexPoint> {
    let n = nodes.len();
    let (zn, wn) = (nodes[n - 1], targets[n - 1]);
    (0..n - 1).map(|j| phi(wn, targets[j]) / phi(zn, nodes[j])).collect()
}

/// Drop the last node and transform the remaining targets.
pub fn reduce(p: &InterpolationProblem) -> Result<InterpolationProblem> {
    let n = p.len();
    if n < 2 {
        return Err(PickError::InvalidArgument("reduction needs at least two nodes".into()));
    }
    let wn = p.targets()[n - 1];
    if wn.norm() >= 1.0 {
        return Err(PickError::Domain { what: "last target".into(), modulus: wn.norm() });
    }
    let targets = reduce_targets(p.nodes().as_slice(), p.targets())
        .into_iter()
        .map(|w| {
            let r = w.norm();
            if r > 1.0 && r <= 1.0 + REDUCE_OVERSHOOT {
                w / r
            } else {
                w
            }
        })
        .collect();
    InterpolationProblem::new(p.nodes().without_last()?, targets)
}

enum Leaf {
    Interior,
    Snapped,
}

/// Run the reduction to the end. With `snap`, a stage whose targets agree
/// on a value of modulus `≥ 1 − SNAP_BAND` becomes a unimodular leaf.
fn recurse(nodes: &[ComplexPoint], targets: &[ComplexPoint], snap: bool) -> Result<(ComposedInterpolant, Leaf)> {
    let n = nodes.len();
    let last = targets[n - 1];
    if snap && last.norm() >= 1.0 - SNAP_BAND && all_equal(targets, SNAP_BAND) {
        return Ok((ComposedInterpolant::Constant(last / last.norm()), Leaf::Snapped));
    }
    if last.norm() >= 1.0 {
        return Err(PickError::Unsolvable);
    }
    if n == 1 {
        let leaf = if last.norm() > 1.0 { last / last.norm() } else { last };
        return Ok((ComposedInterpolant::Constant(leaf), Leaf::Interior));
    }
    let reduced = reduce_targets(nodes, targets);
    let (inner, leaf) = recurse(&nodes[..n - 1], &reduced, snap)?;
    Ok((ComposedInterpolant::node(last, nodes[n - 1], inner)?, leaf))
}

/// A solution of a solvable problem.
///
/// Unique problems get their Blaschke solution via [`boundary_solve`];
/// interior problems get the central solution whose final free value is the
/// reduced target itself, so its sup norm stays below one.
pub fn central_solve(p: &InterpolationProblem) -> Result<SolveReport> {
    let diag = diagnose(p, None)?;
    if !diag.solvable {
        return Err(PickError::Unsolvable);
    }
    if p.targets_constant() {
        return Ok(SolveReport::new(ComposedInterpolant::Constant(p.targets()[0]), p, Classification::Constant));
    }
    if diag.unique {
        return solve_boundary_problem(p);
    }
    match recurse(p.nodes().as_slice(), p.targets(), false) {
        Ok((f, _)) => Ok(SolveReport::new(f, p, Classification::InteriorCentral)),
        // a reduced target reached the circle: the data is extremal after all
        Err(PickError::Unsolvable) => solve_boundary_problem(p),
        Err(e) => Err(e),
    }
}

/// The unique (Blaschke) solution for data on the boundary of the Pick body.
pub fn boundary_solve(nodes: &NodeSet, w: &[ComplexPoint]) -> Result<SolveReport> {
    boundary_solve_with_band(nodes, w, DEFAULT_BAND)
}

pub fn boundary_solve_with_band(nodes: &NodeSet, w: &[ComplexPoint], band: f64) -> Result<SolveReport> {
    let mu = minkowski_functional(nodes, w, DEFAULT_BISECTION_TOL)?;
    if (mu - 1.0).abs() > band {
        return Err(PickError::NotOnBoundary { mu });
    }
    let p = InterpolationProblem::new(nodes.clone(), w.to_vec())?;
    solve_boundary_problem(&p)
}

pub(crate) fn solve_boundary_problem(p: &InterpolationProblem) -> Result<SolveReport> {
    let not_on_boundary = || PickError::NotOnBoundary { mu: f64::NAN };
    let (f, leaf) = recurse(p.nodes().as_slice(), p.targets(), true).map_err(|e| match e {
        PickError::Unsolvable => not_on_boundary(),
        other => other,
    })?;
    match leaf {
        Leaf::Snapped if f.depth() == 0 => Ok(SolveReport::new(f, p, Classification::Constant)),
        Leaf::Snapped => Ok(SolveReport::new(f, p, Classification::BoundaryUnique)),
        Leaf::Interior => Err(PickError::NotOnBoundary { mu: f.leaf().norm() }),
    }
}

/// Lexicographically ordered `k`-subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

/// Blaschke degree of the boundary solution, read off as `k − 1` for the
/// least `k` such that some `k` of the data points already lie on the
/// boundary of their own Pick body. Costs up to `2ⁿ` evaluations of `μ`.
pub fn minimal_degree(nodes: &NodeSet, w: &[ComplexPoint], band: f64) -> Result<usize> {
    let mu = minkowski_functional(nodes, w, DEFAULT_BISECTION_TOL)?;
    if (mu - 1.0).abs() > band {
        return Err(PickError::NotOnBoundary { mu });
    }
    let n = nodes.len();
    for k in 1..=n {
        let hit = subsets(n, k).into_par_iter().find_first(|idx| {
            let sub: Vec<ComplexPoint> = idx.iter().map(|&i| w[i]).collect();
            minkowski_functional(&nodes.select(idx), &sub, DEFAULT_BISECTION_TOL)
                .map(|m| (m - 1.0).abs() <= band)
                .unwrap_or(false)
        });
        if hit.is_some() {
            return Ok(k - 1);
        }
    }
    Err(PickError::NotOnBoundary { mu })
}
