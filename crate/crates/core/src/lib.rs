//! Finite Pick interpolation on the unit disc.
//!
//! The crate decides solvability and uniqueness of interpolation problems
//! `z_j ↦ w_j` between points of the open unit disc, computes the Minkowski
//! functional of the Pick body (the set of value tuples reachable by maps of
//! sup-norm below one), evaluates the associated invariant function `d` and
//! builds the Blaschke-product interpolants that realise boundary points.
//! A polydisc layer compares `d` with its Lempert-type counterpart `δ` for
//! three points in the bidisc and tridisc.
//!
//! Modules map onto the layers of the computation:
//!
//! * [`moebius`]: pseudohyperbolic distance, disc automorphisms, Blaschke
//!   products and composed interpolants.
//! * [`linalg`]: the Hermitian eigenvalue kernel used for every PSD decision.
//! * [`pick`]: Pick matrices and the solvability/uniqueness diagnosis.
//! * [`minkowski`]: the Minkowski functional by bisection, determinant roots
//!   and closed forms.
//! * [`invariants`]: the invariant function `d` on the disc.
//! * [`interpolator`]: recursive construction of interpolants.
//! * [`polydisc`]: Carathéodory distance, `δ` upper bounds and graph-disc
//!   equality certificates on `𝔻^m`.
//! * [`sampling`]: seeded random instance generators shared by the test
//!   batteries.

pub mod complex;
pub mod error;
pub mod interpolator;
pub mod invariants;
pub mod linalg;
pub mod minkowski;
pub mod moebius;
pub mod pick;
pub mod polydisc;
pub mod sampling;

pub use complex::ComplexPoint;
pub use error::{PickError, Result};
