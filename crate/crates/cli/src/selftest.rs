//! Seeded property battery over every module.
//!
//! Each property draws from its own ChaCha stream, so outcomes do not depend
//! on which other properties run. A tolerance override replaces the default
//! tolerance of every measured property; exact checks (agreement of
//! decisions, degrees) are unaffected.

use std::fmt::Display;

use pickbody::complex::{c, ComplexPoint};
use pickbody::interpolator::{central_solve, minimal_degree, reduce, Classification};
use pickbody::invariants::{c_star_disc, d_value, solvable_via_d};
use pickbody::linalg::hermitian_spectrum;
use pickbody::minkowski::{
    minkowski_functional, mu_bisection, mu_closed_form, mu_det_roots, Ray, DEFAULT_BAND,
};
use pickbody::moebius::{apply_automorphism_to_tuple, boundary_sup_probe, phi, pseudo_distance, DiscMap};
use pickbody::pick::{diagnose, pick_entries, InterpolationProblem};
use pickbody::polydisc::{c_star_polydisc, delta_upper, graph_disc_certificate, DeltaOptions};
use pickbody::sampling;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 20_250_611;
/// Minimum fraction of sandwich instances that must be certified.
pub const MIN_COVERAGE: f64 = 0.6;
const MU_TOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// Largest measured quantity, compared against `tolerance`.
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Fraction of instances certified, for the sandwich suites.
    pub coverage: Option<f64>,
    /// The first failure, if any.
    pub note: Option<String>,
}

impl PropertyOutcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {}: {} trials, {} failures, worst {:.3e} (tol {:.1e})",
            self.name, self.trials, self.failures, self.worst, self.tolerance
        );
        if let Some(c) = self.coverage {
            s.push_str(&format!(", coverage {:.0}%", 100.0 * c));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" [{n}]"));
        }
        s
    }
}

struct Tally {
    name: String,
    trials: usize,
    failures: usize,
    worst: f64,
    tolerance: f64,
    note: Option<String>,
}

impl Tally {
    fn new(name: &str, tolerance: f64) -> Self {
        Self { name: name.to_string(), trials: 0, failures: 0, worst: 0.0, tolerance, note: None }
    }

    fn fail(&mut self, why: impl Display) {
        self.failures += 1;
        if self.note.is_none() {
            self.note = Some(format!("trial {}: {why}", self.trials));
        }
    }

    /// `measure` must not exceed the tolerance.
    fn within(&mut self, measure: f64) {
        let ok = measure <= self.tolerance;
        self.record(measure, ok);
    }

    fn record(&mut self, measure: f64, ok: bool) {
        self.trials += 1;
        if measure.is_finite() {
            self.worst = self.worst.max(measure);
        }
        if !ok || !measure.is_finite() {
            self.fail(format!("measured {measure:e}"));
        }
    }

    fn flag(&mut self, ok: bool, why: impl Display) {
        self.trials += 1;
        if !ok {
            self.fail(why);
        }
    }

    fn error(&mut self, e: impl Display) {
        self.trials += 1;
        self.fail(e);
    }

    fn finish(self) -> PropertyOutcome {
        PropertyOutcome {
            passed: self.failures == 0,
            name: self.name,
            trials: self.trials,
            failures: self.failures,
            worst: self.worst,
            tolerance: self.tolerance,
            coverage: None,
            note: self.note,
        }
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Involution, invariance of `m` under automorphisms, and unimodularity of
/// Blaschke products on the circle.
pub fn moebius_laws(seed: u64, trials: usize, tol: Option<f64>) -> PropertyOutcome {
    let mut rng = stream(seed, 1);
    let mut t = Tally::new("moebius: involution, invariance, unimodularity", tol.unwrap_or(1e-10));
    for _ in 0..trials {
        let (u, v) = (sampling::disc_point(&mut rng, 0.95), sampling::disc_point(&mut rng, 0.95));
        let g = sampling::automorphism(&mut rng, 0.9);
        let degree = rng.random_range(1..=4);
        let b = sampling::blaschke(&mut rng, degree, 0.9);
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let moved = pseudo_distance(g.apply(u), g.apply(v)).and_then(|x| Ok(x - pseudo_distance(u, v)?));
        match moved {
            Ok(dm) => {
                let inv = (phi(u, phi(u, v)) - v).norm();
                let circle = (b.value_at(ComplexPoint::from_polar(1.0, theta)).norm() - 1.0).abs();
                t.within(inv.max(dm.abs()).max(circle));
            }
            Err(e) => t.error(e),
        }
    }
    t.finish()
}

/// Eigenvalues of the Pick matrix are ascending and sum to its trace.
pub fn pick_spectrum(seed: u64, trials: usize, tol: Option<f64>) -> PropertyOutcome {
    let mut rng = stream(seed, 2);
    let mut t = Tally::new("pick: spectrum sums to the trace", tol.unwrap_or(1e-10));
    for _ in 0..trials {
        let n = rng.random_range(1..=8);
        let p = sampling::problem(&mut rng, n, 0.95);
        let m = pick_entries(p.nodes().as_slice(), p.targets());
        match hermitian_spectrum(&m) {
            Ok(ev) => {
                let sorted = ev.windows(2).all(|w| w[0] <= w[1]);
                let err = (ev.iter().sum::<f64>() - m.trace()).abs() / (n as f64 * m.frobenius_norm().max(1.0));
                t.record(err, sorted && err <= t.tolerance);
            }
            Err(e) => t.error(e),
        }
    }
    t.finish()
}

/// Pick-matrix solvability agrees with the `d` comparison outside the band.
pub fn solvability_agreement(seed: u64, trials: usize, band: f64) -> PropertyOutcome {
    let mut rng = stream(seed, 3);
    let mut t = Tally::new("solvability: Pick matrix and d agree", band);
    let mut skipped = 0;
    while t.trials < trials {
        let n = rng.random_range(1..=5);
        let p = if rng.random_bool(0.5) {
            sampling::problem(&mut rng, n, 0.95)
        } else {
            // a boundary tuple pushed in or out
            let ray = sampling::ray(&mut rng, n, 0.95);
            let s = rng.random_range(0.5..1.5);
            let w: Vec<_> = match sampling::boundary_tuple(&ray) {
                Ok(w) => w.iter().map(|&x| x * s).collect(),
                Err(e) => {
                    t.error(e);
                    continue;
                }
            };
            match InterpolationProblem::new(ray.nodes().clone(), w) {
                Ok(p) => p,
                Err(_) => continue,
            }
        };
        let (via, pick) = match (solvable_via_d(&p, band), diagnose(&p, None)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                t.error(e);
                continue;
            }
        };
        if via.mu.is_some_and(|mu| (mu - 1.0).abs() <= band) {
            skipped += 1;
            continue;
        }
        t.flag(via.solvable == pick.solvable, format!("Pick says {}, d says {}", pick.solvable, via.solvable));
    }
    let mut out = t.finish();
    if out.note.is_none() && skipped > 0 {
        out.note = Some(format!("{skipped} problems inside the band skipped"));
    }
    out
}

/// Bisection, determinant roots and closed forms agree (relative error).
pub fn mu_oracles(seed: u64, trials: usize, tol: Option<f64>) -> PropertyOutcome {
    let mut rng = stream(seed, 4);
    let mut t = Tally::new("mu: bisection, det_roots and closed forms agree", tol.unwrap_or(1e-8));

    let oracle_3 = 0.5 * pseudo_distance(c(0.5, 0.0), c(0.0, 0.5)).expect("disc points");
    let examples = [
        (vec![c(0.0, 0.0), c(0.5, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)], 0.5),
        (vec![c(0.0, 0.0), c(0.5, 0.0), c(0.0, 0.5)], vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], oracle_3),
        (vec![c(0.1, 0.0), c(-0.4, 0.3), c(0.2, 0.6)], vec![c(0.3, -0.4); 3], 2.0),
    ];
    for (z, a, expected_t) in examples {
        let ray = Ray::from_points(z, a).expect("example ray");
        let mut err = 0.0f64;
        match (mu_bisection(&ray, MU_TOL), mu_det_roots(&ray)) {
            (Ok(b), Ok(d)) => err = err.max(rel(b.t, expected_t)).max(rel(d.t, expected_t)),
            (Err(e), _) | (_, Err(e)) => {
                t.error(e);
                continue;
            }
        }
        if let Ok(Some(cf)) = mu_closed_form(&ray) {
            err = err.max(rel(cf.result.t, expected_t));
        }
        t.within(err);
    }

    for _ in 0..trials {
        let n = rng.random_range(1..=6);
        let ray = sampling::ray(&mut rng, n, 0.95);
        // also a sparse copy with one or two entries, for the closed forms
        let keep: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).take(2).collect();
        let mut rays = vec![ray.clone()];
        if n >= 2 && !keep.is_empty() {
            let sparse = (0..n).map(|k| if keep.contains(&k) { ray.alpha()[k] } else { c(0.0, 0.0) }).collect();
            rays.push(Ray::new(ray.nodes().clone(), sparse).expect("non-zero sparse alpha"));
        }
        let mut err = 0.0f64;
        let mut failed = None;
        for r in &rays {
            match (mu_bisection(r, MU_TOL), mu_det_roots(r), mu_closed_form(r)) {
                (Ok(b), Ok(d), Ok(cf)) => {
                    err = err.max(rel(d.mu, b.mu));
                    if let Some(cf) = cf {
                        err = err.max(rel(cf.result.mu, b.mu));
                    }
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => failed = Some(e),
            }
        }
        match failed {
            Some(e) => t.error(e),
            None => t.within(err),
        }
    }
    t.finish()
}

/// Homogeneity, triangle inequality and sub-multiplicativity of `μ`.
pub fn norm_axioms(seed: u64, trials: usize, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut rng = stream(seed, 5);
    let mut hom = Tally::new("mu: homogeneity", tol.unwrap_or(1e-10));
    let mut tri = Tally::new("mu: triangle inequality", tol.unwrap_or(1e-8));
    let mut sub = Tally::new("mu: sub-multiplicativity", tol.unwrap_or(1e-8));
    for _ in 0..trials {
        let n = rng.random_range(1..=5);
        let nodes = sampling::nodes(&mut rng, n, 0.9);
        let a = sampling::disc_points(&mut rng, n, 1.0);
        let b = sampling::disc_points(&mut rng, n, 1.0);
        let s = ComplexPoint::from_polar(rng.random_range(0.01..10.0), rng.random_range(-3.0..3.0));
        let mu = |w: &[ComplexPoint]| minkowski_functional(&nodes, w, MU_TOL);
        let sa: Vec<_> = a.iter().map(|&v| v * s).collect();
        let sum: Vec<_> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let prod: Vec<_> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        match (mu(&a), mu(&b), mu(&sa), mu(&sum), mu(&prod)) {
            (Ok(ma), Ok(mb), Ok(msa), Ok(msum), Ok(mprod)) => {
                hom.within(rel(msa, s.norm() * ma));
                tri.within(msum - ma - mb);
                sub.within(mprod - ma * mb);
            }
            (Err(e), ..) | (_, Err(e), ..) | (.., Err(e), _, _) | (.., Err(e), _) | (.., Err(e)) => {
                hom.error(&e);
                tri.error(&e);
                sub.error(e);
            }
        }
    }
    vec![hom.finish(), tri.finish(), sub.finish()]
}

/// Boundary tuples stay on the boundary under the one-step reduction and
/// under automorphisms of the target disc; interior tuples stay inside.
pub fn boundary_recursion(seed: u64, trials: usize, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut rng = stream(seed, 6);
    let mut red = Tally::new("mu: reduction preserves the boundary", tol.unwrap_or(1e-7));
    let mut aut = Tally::new("mu: automorphisms preserve the boundary", tol.unwrap_or(1e-7));
    while red.trials < trials {
        let n = rng.random_range(2..=6);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let w = match sampling::boundary_tuple(&ray) {
            Ok(w) => w,
            Err(e) => {
                red.error(e);
                continue;
            }
        };
        if w[n - 1].norm() >= 1.0 {
            continue;
        }
        let s = rng.random_range(0.1..0.95);
        let map = sampling::automorphism(&mut rng, 0.7);
        let reduced = |w: Vec<ComplexPoint>| -> pickbody::Result<f64> {
            let r = reduce(&InterpolationProblem::new(ray.nodes().clone(), w)?)?;
            minkowski_functional(r.nodes(), r.targets(), MU_TOL)
        };
        match (reduced(w.clone()), reduced(w.iter().map(|&v| v * s).collect())) {
            (Ok(mu), Ok(inner)) => {
                let drift = (mu - 1.0).abs();
                red.record(drift, drift <= red.tolerance && inner < 1.0 - DEFAULT_BAND);
            }
            (Err(e), _) | (_, Err(e)) => red.error(e),
        }
        match apply_automorphism_to_tuple(&map, &w).and_then(|m| minkowski_functional(ray.nodes(), &m, MU_TOL)) {
            Ok(mu) => aut.within((mu - 1.0).abs()),
            Err(e) => aut.error(e),
        }
    }
    vec![red.finish(), aut.finish()]
}

/// Residuals, strict contractivity of central solutions, and the degree law
/// for boundary solutions.
pub fn interpolant_soundness(seed: u64, trials: usize, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut rng = stream(seed, 7);
    let mut res = Tally::new("solve: residuals", tol.unwrap_or(1e-9));
    let mut sup = Tally::new("solve: interior solutions map into the open disc", 1.0);
    let mut deg = Tally::new("solve: boundary solutions are Blaschke of least degree", 0.0);
    for _ in 0..trials {
        let n = rng.random_range(1..=6);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let boundary = rng.random_bool(0.5);
        let s = if boundary { 1.0 } else { rng.random_range(0.05..0.99) };
        let p = match sampling::boundary_tuple(&ray)
            .and_then(|w| InterpolationProblem::new(ray.nodes().clone(), w.iter().map(|&v| v * s).collect()))
        {
            Ok(p) => p,
            Err(e) => {
                res.error(e);
                continue;
            }
        };
        let r = match central_solve(&p) {
            Ok(r) => r,
            Err(e) => {
                res.error(e);
                continue;
            }
        };
        res.within(r.max_residual());
        match r.classification {
            Classification::InteriorCentral => {
                let m = boundary_sup_probe(&r.interpolant, 256);
                sup.record(m, m < 1.0);
            }
            Classification::BoundaryUnique => match r.interpolant.blaschke_degree(1e-12) {
                Some(d) => match minimal_degree(p.nodes(), p.targets(), DEFAULT_BAND) {
                    Ok(least) => deg.flag(d < n && d == least, format!("degree {d}, least {least}, n {n}")),
                    Err(e) => deg.error(e),
                },
                None => deg.flag(false, "boundary solution is not a Blaschke product"),
            },
            Classification::Constant => {}
        }
    }
    vec![res.finish(), sup.finish(), deg.finish()]
}

/// Laws of the invariant `d`: domination by `c*`, scaling invariance, the
/// two-point collapse, the case `α = z`, and equality on boundary data.
pub fn invariant_laws(seed: u64, trials: usize, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut rng = stream(seed, 8);
    let tol10 = tol.unwrap_or(1e-10);
    let mut dom = Tally::new("d: bounded by c*", tol10);
    let mut scale = Tally::new("d: invariant under alpha -> c alpha", tol10);
    let mut two = Tally::new("d: equals m(z1, z2) for two points", tol10);
    let mut diag = Tally::new("d: equals m(z_i, z_j) when alpha = z", tol10);
    let mut eq = Tally::new("d: attained by m(w_i, w_j) on boundary data", tol.unwrap_or(1e-8));
    for _ in 0..trials {
        let n = rng.random_range(2..=5);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let z = ray.nodes().as_slice();
        let cs = c_star_disc(z[i], z[j]).expect("disc nodes");
        let factor = ComplexPoint::from_polar(rng.random_range(0.05..20.0), rng.random_range(-3.0..3.0));

        match d_value(&ray, i, j) {
            Ok((d, _, _)) => {
                dom.within(d - cs);
                match ray.scaled(factor).and_then(|r| d_value(&r, i, j)) {
                    Ok((ds, _, _)) => scale.within((d - ds).abs()),
                    Err(e) => scale.error(e),
                }
            }
            Err(e) => {
                dom.error(&e);
                scale.error(e);
            }
        }

        let pair = Ray::new(ray.nodes().select(&[i, j]), vec![ray.alpha()[i], ray.alpha()[j]]);
        match pair.and_then(|r| d_value(&r, 0, 1)) {
            Ok((d, _, _)) if (ray.alpha()[i] - ray.alpha()[j]).norm() > 1e-9 => two.within((d - cs).abs()),
            Ok(_) => {}
            Err(e) => two.error(e),
        }

        match Ray::new(ray.nodes().clone(), z.to_vec()).and_then(|r| d_value(&r, i, j)) {
            Ok((d, _, _)) => diag.within((d - cs).abs()),
            Err(e) => diag.error(e),
        }

        let w = match sampling::boundary_tuple(&ray) {
            Ok(w) => w,
            Err(e) => {
                eq.error(e);
                continue;
            }
        };
        if (w[i] - w[j]).norm() > 1e-9 {
            match Ray::new(ray.nodes().clone(), w.clone()).and_then(|r| d_value(&r, i, j)) {
                Ok((d, _, _)) => eq.within((pseudo_distance(w[i], w[j]).unwrap_or(f64::NAN) - d).abs()),
                Err(e) => eq.error(e),
            }
        }
    }
    vec![dom.finish(), scale.finish(), two.finish(), diag.finish(), eq.finish()]
}

/// Two-node boundary tuples lie on `{m(w₁, w₂) = m(z₁, z₂)}`, and `c*` on
/// the polydisc is a symmetric pseudodistance.
pub fn two_point_body(seed: u64, trials: usize, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut rng = stream(seed, 9);
    let mut body = Tally::new("disc: two-point body is the c* ball", tol.unwrap_or(1e-8));
    let mut cstar = Tally::new("polydisc: c* is a symmetric pseudodistance", tol.unwrap_or(1e-12));
    for _ in 0..trials {
        let ray = sampling::ray(&mut rng, 2, 0.95);
        let z = ray.nodes().as_slice();
        match sampling::boundary_tuple(&ray) {
            Ok(w) if w.iter().all(|v| v.norm() < 1.0) => {
                let gap = pseudo_distance(w[0], w[1]).unwrap_or(f64::NAN) - pseudo_distance(z[0], z[1]).unwrap_or(f64::NAN);
                body.within(gap.abs());
            }
            Ok(_) => {}
            Err(e) => body.error(e),
        }

        let m = rng.random_range(2..=3);
        let pts = sampling::uniform_points(&mut rng, m);
        let d = |a: usize, b: usize| c_star_polydisc(&pts[a], &pts[b]).unwrap_or(f64::NAN);
        let asym = (d(0, 1) - d(1, 0)).abs();
        let excess = (d(0, 2) - d(0, 1) - d(1, 2)).max(0.0);
        let own = d(0, 0);
        cstar.record(asym.max(excess), asym == 0.0 && excess <= cstar.tolerance && own == 0.0);
    }
    vec![body.finish(), cstar.finish()]
}

/// Graph-disc sandwiches for three points of `𝔻^m` on random analytic discs
/// with boundary `α`. Every feasible certificate must close within the
/// tolerance, its lower bound may not exceed the `δ` search bound, and at
/// least [`MIN_COVERAGE`] of the instances must be certified.
pub fn sandwich(seed: u64, instances: usize, m: usize, tol: Option<f64>) -> PropertyOutcome {
    let mut rng = stream(seed, 10 + m as u64);
    let gap_tol = tol.unwrap_or(1e-6);
    let slack = tol.unwrap_or(1e-8);
    let mut t = Tally::new(&format!("polydisc: graph-disc sandwich closes in D^{m}"), gap_tol);
    let mut certified = 0;
    let mut generated = 0;
    while generated < instances {
        let Some(points) = sampling::analytic_disc_points(&mut rng, m) else { continue };
        generated += 1;
        let alpha = sampling::boundary_alpha(&mut rng);
        let i = rng.random_range(0..3);
        let j = (i + rng.random_range(1..3)) % 3;
        let certs: Vec<_> = (0..m).filter_map(|k| graph_disc_certificate(&points, &alpha, i, j, k, gap_tol).ok()).collect();
        if certs.is_empty() {
            continue;
        }
        let gap = certs.iter().map(|c| c.gap.abs()).fold(0.0, f64::max);
        let all_closed = certs.iter().all(|c| c.certified);
        if all_closed {
            certified += 1;
        }
        let upper = match delta_upper(&points, &alpha, i, j, &DeltaOptions::default()) {
            Ok(u) => u.value,
            Err(e) => {
                t.error(e);
                continue;
            }
        };
        let lower = certs.iter().map(|c| c.lower).fold(f64::NEG_INFINITY, f64::max);
        let best_cert = certs.iter().map(|c| c.upper).fold(f64::INFINITY, f64::min);
        let ordered = lower <= upper + slack && upper <= best_cert + slack;
        if !ordered {
            t.flag(false, format!("lower {lower}, delta search {upper}, certificate {best_cert}"));
        } else {
            t.record(gap, all_closed);
        }
    }
    let coverage = certified as f64 / instances.max(1) as f64;
    let mut out = t.finish();
    out.coverage = Some(coverage);
    if coverage < MIN_COVERAGE {
        out.passed = false;
        out.note.get_or_insert_with(|| format!("coverage {certified}/{instances} below {MIN_COVERAGE}"));
    }
    out
}

/// The whole battery at full size.
pub fn run_all(seed: u64, tol: Option<f64>) -> Vec<PropertyOutcome> {
    let mut out = vec![
        moebius_laws(seed, 500, tol),
        pick_spectrum(seed, 300, tol),
        solvability_agreement(seed, 1000, DEFAULT_BAND),
        mu_oracles(seed, 200, tol),
    ];
    out.extend(norm_axioms(seed, 200, tol));
    out.extend(boundary_recursion(seed, 200, tol));
    out.extend(interpolant_soundness(seed, 500, tol));
    out.extend(invariant_laws(seed, 200, tol));
    out.extend(two_point_body(seed, 200, tol));
    out.push(sandwich(seed, 50, 2, tol));
    out.push(sandwich(seed, 50, 3, tol));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_passes() {
        for o in [moebius_laws(1, 50, None), pick_spectrum(1, 50, None), mu_oracles(1, 30, None)] {
            assert!(o.passed, "{}", o.line());
        }
        for o in norm_axioms(1, 30, None).into_iter().chain(invariant_laws(1, 30, None)) {
            assert!(o.passed, "{}", o.line());
        }
    }

    #[test]
    fn tight_tolerance_is_reported_as_failure() {
        let o = moebius_laws(1, 50, Some(1e-300));
        assert!(!o.passed && o.failures > 0 && o.note.is_some());
    }

    #[test]
    fn streams_are_reproducible() {
        assert_eq!(norm_axioms(3, 20, None), norm_axioms(3, 20, None));
        assert_ne!(norm_axioms(3, 20, None)[0].worst, norm_axioms(4, 20, None)[0].worst);
    }
}
