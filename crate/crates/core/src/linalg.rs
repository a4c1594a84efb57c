//! Dense Hermitian matrices and a cyclic Jacobi eigenvalue solver.
//!
//! All PSD decisions, numeric ranks and determinants in the crate go through
//! [`hermitian_spectrum`]. Matrices are at most 15×15 here, where the Jacobi
//! method is both accurate and fast enough.

use serde::{Deserialize, Serialize};

use crate::complex::ComplexPoint;
use crate::error::{PickError, Result};

const MAX_SWEEPS: usize = 100;

/// Row-major square complex matrix. Hermitian by construction when built
/// through [`HermitianMatrix::from_fn`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<ComplexPoint>,
}

impl HermitianMatrix {
    /// Fills the upper triangle from `entry(i, j)` and mirrors it, so the
    /// result is exactly Hermitian with a real diagonal.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> ComplexPoint) -> Self {
        let mut data = vec![ComplexPoint::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = ComplexPoint::new(entry(i, i).re, 0.0);
            for j in (i + 1)..n {
                let v = entry(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v.conj();
            }
        }
        Self { n, data }
    }

    /// Wraps arbitrary row-major data; Hermitian symmetry is checked later by
    /// [`hermitian_spectrum`].
    pub fn from_rows(rows: &[Vec<ComplexPoint>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(PickError::DimensionMismatch { left: row.len(), right: n });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ComplexPoint::new(1.0, 0.0) } else { ComplexPoint::new(0.0, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ComplexPoint {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<ComplexPoint>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    pub fn max_diagonal(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|a_ij − conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |a, b| self.get(idx[a], idx[b]))
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic two-sided Jacobi: each rotation `U` acts on rows and columns
/// `p, q` and annihilates `a_pq`. For `a_pq = |a_pq| e^{iφ}`, `U` is the real
/// rotation of the symmetric case with the phase `e^{iφ}` folded into the
/// off-diagonal entries of `U`.
pub fn hermitian_spectrum(m: &HermitianMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let deviation = m.hermitian_deviation();
    if deviation > 1e-12 * scale.max(1.0) {
        return Err(PickError::NonHermitian { deviation });
    }
    if m.data.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(PickError::NonFinite { what: "matrix entry".into() });
    }

    let mut a = m.data.clone();
    for i in 0..n {
        a[i * n + i] = ComplexPoint::new(a[i * n + i].re, 0.0);
    }
    let idx = |i: usize, j: usize| i * n + j;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| a[idx(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-3 * f64::EPSILON * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                let r = apq.norm();
                if r <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[idx(p, p)].re;
                let aqq = a[idx(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                let phase = apq / r;
                // U_pp = U_qq = c, U_pq = s e^{iφ}, U_qp = −s e^{−iφ}
                let upq = phase * sn;
                let uqp = -phase.conj() * sn;
                // A ← A U
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = akp * cs + akq * uqp;
                    a[idx(k, q)] = akp * upq + akq * cs;
                }
                // A ← Uᴴ A
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = apk * cs + aqk * uqp.conj();
                    a[idx(q, k)] = apk * upq.conj() + aqk * cs;
                }
                a[idx(p, q)] = ComplexPoint::new(0.0, 0.0);
                a[idx(q, p)] = ComplexPoint::new(0.0, 0.0);
                a[idx(p, p)] = ComplexPoint::new(a[idx(p, p)].re, 0.0);
                a[idx(q, q)] = ComplexPoint::new(a[idx(q, q)].re, 0.0);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[idx(i, i)].re).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    Ok(eig)
}

/// Smallest eigenvalue; `+∞` for the empty matrix.
pub fn min_eigenvalue(m: &HermitianMatrix) -> Result<f64> {
    Ok(hermitian_spectrum(m)?.first().copied().unwrap_or(f64::INFINITY))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spectrum_examples() {
        let ones = HermitianMatrix::from_fn(2, |_, _| c(1.0, 0.0));
        let e = hermitian_spectrum(&ones).unwrap();
        assert!(e[0].abs() < 1e-15 && (e[1] - 2.0).abs() < 1e-15);

        let e = hermitian_spectrum(&HermitianMatrix::identity(3)).unwrap();
        assert_eq!(e, vec![1.0, 1.0, 1.0]);

        let m = HermitianMatrix::from_fn(2, |i, j| if i == j { c(2.0, 0.0) } else { c(1.0, 0.0) });
        let e = hermitian_spectrum(&m).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn complex_two_by_two_matches_closed_form() {
        // [[a, b], [b̄, d]]: eigenvalues (a+d)/2 ± sqrt(((a−d)/2)² + |b|²)
        let (a, d, b) = (1.3, -0.4, c(0.7, -1.1));
        let m = HermitianMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(a, 0.0),
            (1, 1) => c(d, 0.0),
            _ => b,
        });
        let e = hermitian_spectrum(&m).unwrap();
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        assert!((e[0] - (mid - rad)).abs() < 1e-14);
        assert!((e[1] - (mid + rad)).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = HermitianMatrix::from_rows(&[vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert!(matches!(hermitian_spectrum(&m), Err(PickError::NonHermitian { .. })));
    }

    #[test]
    fn trace_and_frobenius_are_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..=15);
            let m = HermitianMatrix::from_fn(n, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
            let e = hermitian_spectrum(&m).unwrap();
            let norm = m.frobenius_norm();
            assert!((e.iter().sum::<f64>() - m.trace()).abs() <= 1e-10 * n as f64 * norm);
            let fro: f64 = e.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((fro - norm).abs() <= 1e-12 * n as f64 * norm);
            assert!(e.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn eigenvalues_of_similarity_transform() {
        // Q diag(λ) Qᴴ with Q a product of Givens-like unitaries.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.random_range(2..=8);
            let lambdas: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let mut q = vec![vec![c(0.0, 0.0); n]; n];
            for (i, row) in q.iter_mut().enumerate() {
                row[i] = c(1.0, 0.0);
            }
            for _ in 0..3 * n {
                let p = rng.random_range(0..n);
                let r = (p + 1 + rng.random_range(0..n - 1)) % n;
                let th: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let ph = ComplexPoint::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                for row in q.iter_mut() {
                    let (x, y) = (row[p], row[r]);
                    row[p] = x * th.cos() - y * ph.conj() * th.sin();
                    row[r] = x * ph * th.sin() + y * th.cos();
                }
            }
            let m = HermitianMatrix::from_fn(n, |i, j| (0..n).map(|k| q[i][k] * lambdas[k] * q[j][k].conj()).sum());
            let e = hermitian_spectrum(&m).unwrap();
            let mut expected = lambdas.clone();
            expected.sort_by(|a, b| a.total_cmp(b));
            for (x, y) in e.iter().zip(&expected) {
                assert!((x - y).abs() < 1e-12, "{x} vs {y}");
            }
        }
    }
}
