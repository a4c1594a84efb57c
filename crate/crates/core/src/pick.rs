//! Pick matrices and the solvability / uniqueness diagnosis.
//!
//! A problem `z_j ↦ w_j` on the disc is solvable exactly when the Pick matrix
//! `((1 − w_i w̄_j) / (1 − z_i z̄_j))` is positive semidefinite, and its
//! solution is unique exactly when that matrix is singular.

use serde::{Deserialize, Serialize};

use crate::complex::{all_equal, check_closed_disc, check_open_disc, ComplexPoint};
use crate::error::{PickError, Result};
use crate::linalg::{hermitian_spectrum, HermitianMatrix};

pub const MAX_NODES: usize = 15;
pub const DEFAULT_SEPARATION: f64 = 1e-10;
/// Relative PSD tolerance; scaled by `n · max diagonal entry`.
pub const DEFAULT_PSD_REL_TOL: f64 = 1e-10;
/// Targets within this distance of the unit circle count as unimodular.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// Mutually distinct points of the open disc, at most [`MAX_NODES`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ComplexPoint>", into = "Vec<ComplexPoint>")]
pub struct NodeSet {
    nodes: Vec<ComplexPoint>,
}

impl NodeSet {
    pub fn new(nodes: Vec<ComplexPoint>) -> Result<Self> {
        Self::with_separation(nodes, DEFAULT_SEPARATION)
    }

    pub fn with_separation(nodes: Vec<ComplexPoint>, floor: f64) -> Result<Self> {
        if nodes.is_empty() {
            return Err(PickError::Empty);
        }
        if nodes.len() > MAX_NODES {
            return Err(PickError::TooManyNodes { count: nodes.len(), max: MAX_NODES });
        }
        for (k, &z) in nodes.iter().enumerate() {
            check_open_disc(z, &format!("node {k}"))?;
        }
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                let separation = (nodes[i] - nodes[j]).norm();
                if separation <= floor {
                    return Err(PickError::NodeCollision { i, j, separation, floor });
                }
            }
        }
        Ok(Self { nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn as_slice(&self) -> &[ComplexPoint] {
        &self.nodes
    }

    pub fn get(&self, k: usize) -> ComplexPoint {
        self.nodes[k]
    }

    /// Sub-node set on the given indices (distinctness is inherited).
    pub fn select(&self, idx: &[usize]) -> Self {
        Self { nodes: idx.iter().map(|&k| self.nodes[k]).collect() }
    }

    /// All but the last node.
    pub fn without_last(&self) -> Result<Self> {
        if self.nodes.len() < 2 {
            return Err(PickError::Empty);
        }
        Ok(Self { nodes: self.nodes[..self.nodes.len() - 1].to_vec() })
    }
}

impl TryFrom<Vec<ComplexPoint>> for NodeSet {
    type Error = PickError;

    fn try_from(v: Vec<ComplexPoint>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<NodeSet> for Vec<ComplexPoint> {
    fn from(n: NodeSet) -> Self {
        n.nodes
    }
}

/// Nodes plus target values `|w_j| <= 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpolationProblem {
    nodes: NodeSet,
    targets: Vec<ComplexPoint>,
}

impl InterpolationProblem {
    pub fn new(nodes: NodeSet, targets: Vec<ComplexPoint>) -> Result<Self> {
        if nodes.len() != targets.len() {
            return Err(PickError::LengthMismatch { left: nodes.len(), right: targets.len() });
        }
        for (k, &w) in targets.iter().enumerate() {
            check_closed_disc(w, &format!("target {k}"), UNIMODULAR_TOL)?;
        }
        Ok(Self { nodes, targets })
    }

    pub fn from_points(nodes: Vec<ComplexPoint>, targets: Vec<ComplexPoint>) -> Result<Self> {
        Self::new(NodeSet::new(nodes)?, targets)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn targets(&self) -> &[ComplexPoint] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn has_unimodular_target(&self) -> bool {
        self.targets.iter().any(|w| w.norm() >= 1.0 - UNIMODULAR_TOL)
    }

    pub fn targets_constant(&self) -> bool {
        all_equal(&self.targets, UNIMODULAR_TOL)
    }

    /// Keep only the given indices.
    pub fn select(&self, idx: &[usize]) -> Self {
        Self { nodes: self.nodes.select(idx), targets: idx.iter().map(|&k| self.targets[k]).collect() }
    }
}

/// The Pick matrix with its spectral diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PickMatrix {
    pub entries: HermitianMatrix,
    pub eigenvalues: Vec<f64>,
    pub min_eigenvalue: f64,
    pub determinant: f64,
    pub numeric_rank: usize,
    pub tolerance: f64,
}

/// `((1 − w_i w̄_j) / (1 − z_i z̄_j))` for arbitrary complex `w`.
pub fn pick_entries(nodes: &[ComplexPoint], targets: &[ComplexPoint]) -> HermitianMatrix {
    HermitianMatrix::from_fn(nodes.len(), |i, j| {
        (ComplexPoint::new(1.0, 0.0) - targets[i] * targets[j].conj())
            / (ComplexPoint::new(1.0, 0.0) - nodes[i] * nodes[j].conj())
    })
}

/// Absolute PSD tolerance for a matrix of size `n`.
pub fn psd_tolerance(rel: f64, m: &HermitianMatrix) -> f64 {
    rel * m.dim() as f64 * m.max_diagonal().abs().max(f64::MIN_POSITIVE)
}

pub fn build_pick_matrix(p: &InterpolationProblem) -> Result<PickMatrix> {
    build_pick_matrix_with(p, DEFAULT_PSD_REL_TOL)
}

pub fn build_pick_matrix_with(p: &InterpolationProblem, rel_tol: f64) -> Result<PickMatrix> {
    let entries = pick_entries(p.nodes().as_slice(), p.targets());
    let eigenvalues = hermitian_spectrum(&entries)?;
    let tolerance = psd_tolerance(rel_tol, &entries);
    Ok(PickMatrix {
        min_eigenvalue: eigenvalues[0],
        determinant: eigenvalues.iter().product(),
        numeric_rank: eigenvalues.iter().filter(|&&e| e > tolerance).count(),
        eigenvalues,
        tolerance,
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnosis {
    pub solvable: bool,
    pub unique: bool,
    pub min_eigenvalue: f64,
    pub numeric_rank: usize,
    /// Absolute tolerance used for the PSD and rank decisions.
    pub tolerance: f64,
}

/// Decide solvability and uniqueness. `rel_tol` defaults to
/// [`DEFAULT_PSD_REL_TOL`] and is scaled by `n · max diagonal entry`.
pub fn diagnose(p: &InterpolationProblem, rel_tol: Option<f64>) -> Result<Diagnosis> {
    let rel_tol = rel_tol.unwrap_or(DEFAULT_PSD_REL_TOL);
    if rel_tol <= 0.0 || !rel_tol.is_finite() {
        return Err(PickError::InvalidArgument(format!("tolerance must be positive, got {rel_tol}")));
    }
    if p.has_unimodular_target() {
        // maximum modulus: only a unimodular constant can reach the circle
        let constant = p.targets_constant();
        return Ok(Diagnosis {
            solvable: constant,
            unique: constant,
            min_eigenvalue: if constant { 0.0 } else { f64::NEG_INFINITY },
            numeric_rank: 0,
            tolerance: 0.0,
        });
    }
    let m = build_pick_matrix_with(p, rel_tol)?;
    let solvable = m.min_eigenvalue >= -m.tolerance;
    Ok(Diagnosis {
        solvable,
        unique: solvable && m.numeric_rank < p.len(),
        min_eigenvalue: m.min_eigenvalue,
        numeric_rank: m.numeric_rank,
        tolerance: m.tolerance,
    })
}
