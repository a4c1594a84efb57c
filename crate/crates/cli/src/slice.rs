//! Planar slices of the Pick body for contour plots.

use std::io::Write;

use pickbody::complex::ComplexPoint;
use pickbody::minkowski::{minkowski_functional, DEFAULT_BISECTION_TOL};
use serde::{Deserialize, Serialize};

use crate::problem::ProblemFile;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SliceRow {
    pub x: f64,
    pub y: f64,
    pub mu: f64,
}

fn real_dot(a: &[ComplexPoint], b: &[ComplexPoint]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p.re * q.re + p.im * q.im).sum()
}

fn axis(range: [f64; 2], count: usize) -> Vec<f64> {
    let step = (range[1] - range[0]) / (count - 1) as f64;
    (0..count).map(|k| range[0] + step * k as f64).collect()
}

/// `μ(base + x·u + y·v)` on a `resolution × resolution` grid, row-major in
/// `y` then `x`. `grid` overrides the resolution in the file.
pub fn sample(file: &ProblemFile, grid: Option<usize>, tol: Option<f64>) -> Result<Vec<SliceRow>, CliError> {
    let nodes = file.node_set()?;
    let spec = file.slice.as_ref().ok_or_else(|| CliError::Input("missing `slice`".into()))?;
    let n = nodes.len();
    let base = spec.base.clone().unwrap_or_else(|| vec![ComplexPoint::new(0.0, 0.0); n]);
    let [u, v] = &spec.directions;
    for (name, t) in [("slice.base", &base), ("slice.directions[0]", u), ("slice.directions[1]", v)] {
        if t.len() != n {
            return Err(CliError::Input(format!("field `{name}`: expected {n} entries, got {}", t.len())));
        }
        if t.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CliError::Input(format!("field `{name}`: entries must be finite")));
        }
    }
    let (uu, vv, uv) = (real_dot(u, u), real_dot(v, v), real_dot(u, v));
    if uu == 0.0 || vv == 0.0 || uu * vv - uv * uv <= 1e-12 * uu * vv {
        return Err(CliError::Input("degenerate slice: directions must be non-zero and independent".into()));
    }
    for (name, r) in [("slice.x_range", spec.x_range), ("slice.y_range", spec.y_range)] {
        if !(r[0].is_finite() && r[1].is_finite() && r[0] < r[1]) {
            return Err(CliError::Input(format!("field `{name}`: need finite lo < hi")));
        }
    }
    let resolution = grid.unwrap_or(spec.resolution);
    if resolution < 2 {
        return Err(CliError::Input(format!("slice resolution must be at least 2, got {resolution}")));
    }
    let tol = tol.unwrap_or(DEFAULT_BISECTION_TOL);

    let (xs, ys) = (axis(spec.x_range, resolution), axis(spec.y_range, resolution));
    let mut rows = Vec::with_capacity(resolution * resolution);
    let mut w = vec![ComplexPoint::new(0.0, 0.0); n];
    for &y in &ys {
        for &x in &xs {
            for k in 0..n {
                w[k] = base[k] + u[k] * x + v[k] * y;
            }
            rows.push(SliceRow { x, y, mu: minkowski_functional(&nodes, &w, tol)? });
        }
    }
    Ok(rows)
}

pub fn write_csv(rows: &[SliceRow], out: impl Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(directions: &str) -> ProblemFile {
        ProblemFile::parse(&format!(
            r#"{{"nodes": [[0,0],[0.5,0]], "slice": {{"directions": {directions}, "x_range": [-1, 1], "y_range": [-1, 1], "resolution": 5}}}}"#
        ))
        .unwrap()
    }

    #[test]
    fn origin_has_zero_mu() {
        let rows = sample(&file("[[[1,0],[0,0]], [[0,0],[1,0]]]"), None, None).unwrap();
        assert_eq!(rows.len(), 25);
        let origin = rows.iter().find(|r| r.x == 0.0 && r.y == 0.0).unwrap();
        assert_eq!(origin.mu, 0.0);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("x,y,mu\n"));
        assert_eq!(text.lines().count(), 26);
    }

    #[test]
    fn degenerate_directions() {
        assert!(sample(&file("[[[0,0],[0,0]], [[0,0],[1,0]]]"), None, None).is_err());
        assert!(sample(&file("[[[1,0],[1,0]], [[2,0],[2,0]]]"), None, None).is_err());
        assert!(sample(&file("[[[1,0]], [[0,0],[1,0]]]"), None, None).is_err());
        // complex multiples are independent over the reals
        assert!(sample(&file("[[[1,0],[1,0]], [[0,1],[0,1]]]"), None, None).is_ok());
    }
}
