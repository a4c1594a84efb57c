use pickbody::complex::{c, ComplexPoint};
use pickbody::interpolator::{central_solve, Classification};
use pickbody::invariants::{c_star_disc, d_disc, solvable_via_d, InvariantQuery};
use pickbody::minkowski::{
    classify_mu, mu_bisection, mu_closed_form, mu_det_roots, Method, DEFAULT_BAND, DEFAULT_BISECTION_TOL,
};
use pickbody::moebius::interpolant_eval;
use pickbody::pick::{diagnose as pick_diagnose, DEFAULT_PSD_REL_TOL};
use pickbody::polydisc::{
    c_star_polydisc, d_lower_polydisc, delta_upper, graph_disc_certificate, DeltaOptions, SandwichCertificate,
    DEFAULT_CERTIFICATE_TOL,
};
use pickbody::PickError;
use serde_json::json;

use crate::problem::{Domain, ProblemFile};
use crate::report::{CommandEcho, ExitStatus, NumericResult, Report};
use crate::selftest;
use crate::CliError;

/// Relative accuracy claimed for closed-form values.
const CLOSED_FORM_TOL: f64 = 1e-14;
/// Relative accuracy claimed for determinant-root values.
const DET_ROOTS_TOL: f64 = 1e-9;
/// Residual bound reported for interpolants.
const RESIDUAL_TOL: f64 = 1e-9;
/// Extra evaluation points for `solve` when the file gives none.
const DEFAULT_SAMPLES: [(f64, f64); 5] = [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.9)];

/// Command-line tunables; `None` means the module default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub input: Option<String>,
    pub tol: Option<f64>,
    pub band: Option<f64>,
    pub grid: Option<usize>,
    pub seed: Option<u64>,
}

impl Settings {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [("--tol", self.tol), ("--band", self.band)] {
            if let Some(x) = v {
                if !(x.is_finite() && x > 0.0) {
                    return Err(CliError::Input(format!("{name} must be positive and finite, got {x}")));
                }
            }
        }
        if self.grid == Some(0) {
            return Err(CliError::Input("--grid must be positive".into()));
        }
        Ok(())
    }

    pub fn band(&self) -> f64 {
        self.band.unwrap_or(DEFAULT_BAND)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(selftest::DEFAULT_SEED)
    }

    fn echo(&self, command: &str, tol: Option<f64>, grid: Option<usize>) -> CommandEcho {
        CommandEcho {
            command: command.to_string(),
            input: self.input.clone(),
            tol,
            band: self.band(),
            grid,
            seed: self.seed(),
        }
    }
}

fn method_tol(method: Method, bisection_tol: f64) -> f64 {
    match method {
        Method::Bisection => bisection_tol,
        Method::DetRoots => DET_ROOTS_TOL,
        Method::ClosedForm => CLOSED_FORM_TOL,
    }
}

/// Solvability and uniqueness from the Pick matrix, cross-checked against `d`.
pub fn diagnose(file: &ProblemFile, s: &Settings) -> Result<Report, CliError> {
    let p = file.interpolation_problem()?;
    let rel = s.tol.unwrap_or(DEFAULT_PSD_REL_TOL);
    let mut report = Report::new(s.echo("diagnose", Some(rel), None));
    let d = pick_diagnose(&p, Some(rel))?;
    report.push(NumericResult::new("min_eigenvalue", d.min_eigenvalue, "jacobi", d.tolerance));
    report.push(NumericResult::new("rank", d.numeric_rank as f64, "jacobi", d.tolerance));
    let via = solvable_via_d(&p, s.band())?;
    if let Some(mu) = via.mu {
        report.push(NumericResult::new("mu", mu, Method::Bisection, DEFAULT_BISECTION_TOL));
    }
    if via.solvable != d.solvable {
        report.diagnostics.push(format!(
            "Pick matrix says solvable = {}, d comparison says {} (mu within the band?)",
            d.solvable, via.solvable
        ));
    }
    report.details = json!({
        "solvable": d.solvable,
        "unique": d.unique,
        "rank": d.numeric_rank,
        "min_eigenvalue": d.min_eigenvalue,
        "solvable_via_d": via.solvable,
        "equality_pair": via.equality_pair.map(|(i, j)| [i + 1, j + 1]),
    });
    report.exit_status = if d.solvable { ExitStatus::Ok } else { ExitStatus::Unsolvable };
    Ok(report)
}

/// Minkowski functional along `alpha`, by every applicable method.
pub fn mu(file: &ProblemFile, s: &Settings) -> Result<Report, CliError> {
    let ray = file.ray()?;
    let tol = s.tol.unwrap_or(DEFAULT_BISECTION_TOL);
    let mut report = Report::new(s.echo("mu", Some(tol), None));
    let b = mu_bisection(&ray, tol)?;
    report.push(NumericResult::new("mu", b.mu, b.method, tol));
    report.push(NumericResult::new("t", b.t, b.method, tol));
    match mu_det_roots(&ray) {
        Ok(r) => report.push(NumericResult::new("mu", r.mu, r.method, DET_ROOTS_TOL)),
        Err(e) => report.diagnostics.push(format!("det_roots: {e}")),
    }
    if let Some(cf) = mu_closed_form(&ray)? {
        report.push(NumericResult::new("mu", cf.result.mu, cf.result.method, CLOSED_FORM_TOL));
    }
    report.details = json!({
        "membership": classify_mu(b.mu, s.band()),
        "boundary_point": b.boundary_point,
    });
    Ok(report)
}

/// The invariant `d` for the pair in the file.
pub fn d(file: &ProblemFile, s: &Settings) -> Result<Report, CliError> {
    let (i, j) = file.pair()?;
    let tol = s.tol.unwrap_or(DEFAULT_BISECTION_TOL);
    let mut report = Report::new(s.echo("d", Some(tol), None));
    match file.domain {
        Domain::Disc => {
            let q = InvariantQuery::new(file.ray()?, i, j)?;
            let v = d_disc(&q)?;
            let nodes = q.ray().nodes();
            report.push(NumericResult::new("d", v.value, v.method, method_tol(v.method, DEFAULT_BISECTION_TOL)));
            report.push(NumericResult::new("t", v.t, v.method, method_tol(v.method, DEFAULT_BISECTION_TOL)));
            report.push(NumericResult::new("c_star", c_star_disc(nodes.get(i), nodes.get(j))?, "formula", CLOSED_FORM_TOL));
            report.details = json!({
                "pair": [i + 1, j + 1],
                "witness": {
                    "classification": v.witness.classification,
                    "trace": v.witness.interpolant.trace(),
                    "max_residual": v.witness.max_residual(),
                },
            });
        }
        Domain::Polydisc => {
            let points = file.poly_points()?;
            let alpha = file.direction()?;
            let lower = d_lower_polydisc(&points, &alpha, i, j)?;
            report.push(NumericResult::new("d_lower", lower, "coordinate projection", RESIDUAL_TOL));
            let upper = c_star_polydisc(&points[i], &points[j])?;
            report.push(NumericResult::new("c_star", upper, "formula", CLOSED_FORM_TOL));
            report.details = json!({ "pair": [i + 1, j + 1] });
        }
    }
    Ok(report)
}

/// Interpolant construction: the composition trace plus sampled values.
pub fn solve(file: &ProblemFile, s: &Settings) -> Result<Report, CliError> {
    let p = file.interpolation_problem()?;
    let rel = s.tol.unwrap_or(DEFAULT_PSD_REL_TOL);
    let mut report = Report::new(s.echo("solve", Some(rel), None));
    let diag = pick_diagnose(&p, Some(rel))?;
    report.push(NumericResult::new("min_eigenvalue", diag.min_eigenvalue, "jacobi", diag.tolerance));
    if !diag.solvable {
        report.diagnostics.push(PickError::Unsolvable.to_string());
        report.exit_status = ExitStatus::Unsolvable;
        return Ok(report);
    }
    let sol = match central_solve(&p) {
        Err(PickError::Unsolvable) => {
            report.diagnostics.push("recursion left the disc: problem is numerically unsolvable".into());
            report.exit_status = ExitStatus::Unsolvable;
            return Ok(report);
        }
        other => other?,
    };
    let method = match sol.classification {
        Classification::InteriorCentral => "central recursion",
        Classification::BoundaryUnique => "boundary recursion",
        Classification::Constant => "constant",
    };
    report.push(NumericResult::new("max_residual", sol.max_residual(), method, RESIDUAL_TOL));
    if sol.max_residual() > RESIDUAL_TOL {
        report.diagnostics.push(format!("residual {:e} exceeds {RESIDUAL_TOL:e}", sol.max_residual()));
    }

    let samples: Vec<ComplexPoint> = match &file.samples {
        Some(v) => v.clone(),
        None => p.nodes().as_slice().iter().copied().chain(DEFAULT_SAMPLES.iter().map(|&(x, y)| c(x, y))).collect(),
    };
    let mut values = Vec::with_capacity(samples.len());
    for (k, &l) in samples.iter().enumerate() {
        let v = interpolant_eval(&sol.interpolant, l).map_err(|e| CliError::Input(format!("field `samples[{k}]`: {e}")))?;
        values.push(json!({ "lambda": l, "value": v }));
    }
    report.details = json!({
        "classification": sol.classification,
        "degree_bound": sol.degree_bound,
        "blaschke_degree": sol.interpolant.blaschke_degree(1e-12),
        "trace": sol.interpolant.trace(),
        "residuals": sol.residuals,
        "samples": values,
    });
    Ok(report)
}

/// Upper bound for `δ` and the graph-disc equality certificate.
pub fn delta(file: &ProblemFile, s: &Settings) -> Result<Report, CliError> {
    if file.domain != Domain::Polydisc {
        return Err(CliError::Input("`delta` needs a polydisc problem".into()));
    }
    let points = file.poly_points()?;
    let alpha = file.direction()?;
    let (i, j) = file.pair()?;
    let m = points[0].dim();
    let tol = s.tol.unwrap_or(DEFAULT_CERTIFICATE_TOL);
    let options = DeltaOptions { grid: s.grid.unwrap_or(DeltaOptions::default().grid), ..DeltaOptions::default() };
    let mut report = Report::new(s.echo("delta", Some(tol), Some(options.grid)));

    let upper = delta_upper(&points, &alpha, i, j, &options)?;
    report.push(NumericResult::new("delta_upper", upper.value, "grid + simplex search", tol));
    let lower = d_lower_polydisc(&points, &alpha, i, j)?;
    report.push(NumericResult::new("d_lower", lower, "coordinate projection", tol));

    let slots: Vec<usize> = match file.coordinate()? {
        Some(k) => vec![k],
        None => (0..m).collect(),
    };
    let mut best: Option<SandwichCertificate> = None;
    for k in slots {
        match graph_disc_certificate(&points, &alpha, i, j, k, tol) {
            Ok(cert) => {
                let better = best
                    .as_ref()
                    .is_none_or(|b| (cert.certified, -cert.gap.abs()) > (b.certified, -b.gap.abs()));
                if better {
                    best = Some(cert);
                }
            }
            Err(e @ PickError::InfeasibleGraphDisc { .. }) => report.diagnostics.push(e.to_string()),
            Err(e) => return Err(e.into()),
        }
    }
    let search = json!({
        "evaluations": upper.evaluations,
        "feasible_grid_points": upper.feasible_grid_points,
        "lambdas": upper.best.lambdas,
    });
    match best {
        Some(cert) => {
            report.push(NumericResult::new("certificate_upper", cert.upper, "graph disc", tol));
            report.push(NumericResult::new("certificate_lower", cert.lower, "graph disc", tol));
            report.push(NumericResult::new("certificate_gap", cert.gap, "graph disc", tol));
            report.details = json!({ "pair": [i + 1, j + 1], "certificate": cert, "search": search });
        }
        None => {
            report.diagnostics.push("no feasible graph-disc certificate; delta_upper is the fallback bound".into());
            report.details = json!({ "pair": [i + 1, j + 1], "certificate": null, "search": search });
            report.exit_status = ExitStatus::InfeasibleCertificate;
        }
    }
    Ok(report)
}

/// The property battery; exit status 1 when any property fails.
pub fn selftest(s: &Settings) -> Report {
    let outcomes = selftest::run_all(s.seed(), s.tol);
    let mut report = Report::new(s.echo("selftest", s.tol, None));
    for o in &outcomes {
        report.push(NumericResult::new(&o.name, o.worst, "property battery", o.tolerance));
    }
    if outcomes.iter().any(|o| !o.passed) {
        report.exit_status = ExitStatus::SelftestFailed;
    }
    report.details = json!({ "properties": outcomes });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(text: &str) -> ProblemFile {
        ProblemFile::parse(text).unwrap()
    }

    #[test]
    fn mu_example() {
        let r = mu(&file(r#"{"nodes": [[0,0],[0.5,0]], "alpha": [[0,0],[1,0]]}"#), &Settings::default()).unwrap();
        assert!((r.result("mu").unwrap().value - 2.0).abs() < 1e-10);
        assert!((r.result("t").unwrap().value - 0.5).abs() < 1e-10);
        assert_eq!(r.results.iter().filter(|x| x.name == "mu").count(), 3);
    }

    #[test]
    fn d_example() {
        let f = file(r#"{"nodes": [[0,0],[0.5,0],[0,0.5]], "alpha": [[0,0],[0,0],[1,0]], "pair": [1, 3]}"#);
        let r = d(&f, &Settings::default()).unwrap();
        let v = r.result("d").unwrap();
        assert!((v.value - 0.34300).abs() < 5e-6);
        assert_eq!(v.method, "closed_form");
    }

    #[test]
    fn diagnose_statuses() {
        let ok = diagnose(&file(r#"{"nodes": [[0,0],[0.5,0]], "targets": [[0,0],[0.5,0]]}"#), &Settings::default());
        let ok = ok.unwrap();
        assert_eq!(ok.exit_status, ExitStatus::Ok);
        assert_eq!(ok.details["unique"], true);
        let bad = diagnose(&file(r#"{"nodes": [[0,0],[0.5,0]], "targets": [[0,0],[0.9,0]]}"#), &Settings::default());
        assert_eq!(bad.unwrap().exit_status, ExitStatus::Unsolvable);
    }

    #[test]
    fn solve_reports_trace_and_samples() {
        let f = file(r#"{"nodes": [[0,0],[0.5,0]], "targets": [[0,0],[0.25,0]]}"#);
        let r = solve(&f, &Settings::default()).unwrap();
        assert_eq!(r.exit_status, ExitStatus::Ok);
        assert!(r.result("max_residual").unwrap().value < 1e-12);
        assert_eq!(r.details["samples"].as_array().unwrap().len(), 7);
        assert!(!r.details["trace"].as_array().unwrap().is_empty());
    }

    #[test]
    fn settings_validation() {
        assert!(Settings { tol: Some(-1.0), ..Settings::default() }.validate().is_err());
        assert!(Settings { grid: Some(0), ..Settings::default() }.validate().is_err());
        assert!(Settings::default().validate().is_ok());
    }
}
