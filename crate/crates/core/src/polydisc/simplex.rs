//! A small Nelder–Mead minimiser. Objectives may return `+∞` to reject a
//! point; such vertices simply sort last.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub initial_step: f64,
    pub max_evaluations: usize,
    /// Stop once the spread of vertex values falls below this.
    pub f_tol: f64,
    /// Stop once every vertex is this close to the best one.
    pub x_tol: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self { initial_step: 0.1, max_evaluations: 400, f_tol: 1e-12, x_tol: 1e-10 }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

pub fn nelder_mead(mut f: impl FnMut(&[f64]) -> f64, start: &[f64], options: &SimplexOptions) -> SimplexResult {
    let dim = start.len();
    let mut evaluations = 0;
    let mut eval = |x: &[f64], count: &mut usize| {
        *count += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let v0 = eval(start, &mut evaluations);
    simplex.push((start.to_vec(), v0));
    for k in 0..dim {
        let mut x = start.to_vec();
        x[k] += options.initial_step;
        let v = eval(&x, &mut evaluations);
        simplex.push((x, v));
    }

    let point = |c: &[f64], toward: &[f64], coef: f64| -> Vec<f64> {
        c.iter().zip(toward).map(|(&a, &b)| a + coef * (b - a)).collect()
    };

    while evaluations < options.max_evaluations {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, worst) = (simplex[0].1, simplex[dim].1);
        let spread = simplex
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if spread <= options.x_tol || (worst.is_finite() && worst - best <= options.f_tol) {
            break;
        }

        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..dim] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / dim as f64;
            }
        }
        let worst_x = simplex[dim].0.clone();
        // reflection moves away from the worst vertex through the centroid
        let reflected = point(&centroid, &worst_x, -REFLECT);
        let fr = eval(&reflected, &mut evaluations);

        if fr < best {
            let expanded = point(&centroid, &worst_x, -EXPAND);
            let fe = eval(&expanded, &mut evaluations);
            simplex[dim] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[dim - 1].1 {
            simplex[dim] = (reflected, fr);
        } else {
            let (toward, ft) = if fr < worst { (&reflected, fr) } else { (&worst_x, worst) };
            let contracted = point(&centroid, toward, CONTRACT);
            let fc = eval(&contracted, &mut evaluations);
            if fc < ft {
                simplex[dim] = (contracted, fc);
            } else {
                let anchor = simplex[0].0.clone();
                for vertex in simplex.iter_mut().skip(1) {
                    let x = point(&anchor, &vertex.0, SHRINK);
                    let v = eval(&x, &mut evaluations);
                    *vertex = (x, v);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    SimplexResult { x, value, evaluations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimises_rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let opts = SimplexOptions { max_evaluations: 4000, f_tol: 1e-16, x_tol: 1e-10, initial_step: 0.5 };
        let r = nelder_mead(f, &[-1.2, 1.0], &opts);
        assert!((r.x[0] - 1.0).abs() < 1e-4 && (r.x[1] - 1.0).abs() < 1e-4, "{:?}", r.x);
    }

    #[test]
    fn respects_infinite_barrier() {
        // minimum of (x - 2)² subject to x <= 1
        let f = |x: &[f64]| if x[0] > 1.0 { f64::INFINITY } else { (x[0] - 2.0).powi(2) };
        let r = nelder_mead(f, &[0.0], &SimplexOptions::default());
        assert!(r.x[0] <= 1.0 && (r.x[0] - 1.0).abs() < 1e-6, "{:?}", r.x);
    }
}
