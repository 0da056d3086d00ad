use crate::error::{Error, Result};
use crate::matrix::{dot, Matrix};
use crate::rng::Rng;
use crate::scalar::Scalar;

const POWER_ITERS: usize = 200;
const EIG_REL_TOL: f64 = 1e-10;
// fixed start-vector seed keeps the fit deterministic
const START_SEED: u64 = 0x70CA_2025;

/// Top-2 principal-component fit.
///
/// Uses the Gram matrix (method of snapshots) with power iteration, so the
/// cost scales with the number of rows rather than the flattened feature
/// dimension. Components are orthonormalized feature-space directions;
/// `singular_values` are the corresponding singular values of the centered
/// data matrix.
#[derive(Debug, Clone)]
pub struct Pca2<T> {
    pub mean: Vec<T>,
    pub components: [Vec<T>; 2],
    pub singular_values: [T; 2],
}

impl<T: Scalar> Pca2<T> {
    pub fn fit(samples: &Matrix<T>) -> Result<Self> {
        let n = samples.rows();
        let d = samples.cols();
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "pca needs at least 3 rows, got {n}"
            )));
        }
        let n_t = T::from_usize(n).unwrap();
        let mut mean = vec![T::zero(); d];
        for i in 0..n {
            for (m, &v) in mean.iter_mut().zip(samples.row(i)) {
                *m = *m + v;
            }
        }
        for m in &mut mean {
            *m = *m / n_t;
        }
        let centered = Matrix::from_fn(n, d, |i, j| samples.get(i, j) - mean[j]);

        // Gram matrix G = A A^T (n x n)
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let g = dot(centered.row(i), centered.row(j));
                gram.set(i, j, g);
                gram.set(j, i, g);
            }
        }

        let mut rng = Rng::new(START_SEED);
        let (v1, lambda1) = power_iterate(&gram, &mut rng);
        // deflate and repeat
        for i in 0..n {
            for j in 0..n {
                let g = gram.get(i, j) - lambda1 * v1[i] * v1[j];
                gram.set(i, j, g);
            }
        }
        let (v2, lambda2) = power_iterate(&gram, &mut rng);

        let s1 = lambda1.max(T::zero()).sqrt();
        let s2 = lambda2.max(T::zero()).sqrt();

        let mut comp1 = feature_direction(&centered, &v1);
        let mut comp2 = feature_direction(&centered, &v2);
        let tiny = T::lit(1e-12);
        if !normalize(&mut comp1) {
            // degenerate (all rows identical): any orthonormal pair works
            comp1 = unit_axis(d, 0);
        }
        // re-orthogonalize against comp1; rank-deficient data gets a
        // deterministic orthonormal filler
        gram_schmidt(&mut comp2, &comp1);
        if !normalize(&mut comp2) || s1 > T::zero() && s2 / s1 < tiny {
            comp2 = orthonormal_filler(&comp1, &mut rng);
        }

        Ok(Pca2 {
            mean,
            components: [comp1, comp2],
            singular_values: [s1, s2],
        })
    }

    /// Project rows onto the two fitted directions (centering with the fit mean).
    pub fn project(&self, rows: &Matrix<T>) -> Result<Matrix<T>> {
        let d = self.mean.len();
        if rows.cols() != d {
            return Err(Error::DimMismatch(format!(
                "pca project: {} cols, fit on {d}",
                rows.cols()
            )));
        }
        let mut out = Matrix::zeros(rows.rows(), 2);
        let mut buf = vec![T::zero(); d];
        for i in 0..rows.rows() {
            for (b, (&x, &m)) in buf.iter_mut().zip(rows.row(i).iter().zip(&self.mean)) {
                *b = x - m;
            }
            out.set(i, 0, dot(&buf, &self.components[0]));
            out.set(i, 1, dot(&buf, &self.components[1]));
        }
        Ok(out)
    }
}

/// Fit on `samples` and return (components as a 2 x d matrix, projection of
/// the fit set as an n x 2 matrix).
pub fn pca_top2<T: Scalar>(samples: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let fit = Pca2::fit(samples)?;
    let d = fit.mean.len();
    let components = Matrix::from_fn(2, d, |i, j| fit.components[i][j]);
    let projected = fit.project(samples)?;
    Ok((components, projected))
}

fn power_iterate<T: Scalar>(gram: &Matrix<T>, rng: &mut Rng) -> (Vec<T>, T) {
    let n = gram.rows();
    let mut v: Vec<T> = (0..n).map(|_| T::lit(rng.normal(0.0, 1.0))).collect();
    normalize(&mut v);
    let mut lambda = T::zero();
    let mut buf = vec![T::zero(); n];
    for _ in 0..POWER_ITERS {
        buf.iter_mut().for_each(|b| *b = T::zero());
        gram.matvec_add(&v, &mut buf);
        let norm = dot(&buf, &buf).sqrt();
        if norm < T::lit(1e-300) {
            return (v, T::zero());
        }
        for (vi, &bi) in v.iter_mut().zip(&buf) {
            *vi = bi / norm;
        }
        let prev = lambda;
        lambda = norm; // for unit v, |Gv| is the Rayleigh quotient of PSD G
        let denom = lambda.abs().max(T::lit(1e-300));
        if (lambda - prev).abs() / denom < T::lit(EIG_REL_TOL) {
            break;
        }
    }
    (v, lambda)
}

fn feature_direction<T: Scalar>(centered: &Matrix<T>, v: &[T]) -> Vec<T> {
    let mut dir = vec![T::zero(); centered.cols()];
    centered.matvec_t_add(v, &mut dir);
    dir
}

fn normalize<T: Scalar>(v: &mut [T]) -> bool {
    let norm = dot(v, v).sqrt();
    if norm < T::lit(1e-150) {
        return false;
    }
    for x in v.iter_mut() {
        *x = *x / norm;
    }
    true
}

fn gram_schmidt<T: Scalar>(v: &mut [T], against: &[T]) {
    let proj = dot(v, against);
    for (vi, &ai) in v.iter_mut().zip(against) {
        *vi = *vi - proj * ai;
    }
}

fn unit_axis<T: Scalar>(d: usize, axis: usize) -> Vec<T> {
    let mut v = vec![T::zero(); d];
    v[axis % d] = T::one();
    v
}

fn orthonormal_filler<T: Scalar>(against: &[T], rng: &mut Rng) -> Vec<T> {
    let d = against.len();
    for _ in 0..16 {
        let mut v: Vec<T> = (0..d).map(|_| T::lit(rng.normal(0.0, 1.0))).collect();
        gram_schmidt(&mut v, against);
        if normalize(&mut v) {
            return v;
        }
    }
    // d == 1 has no orthogonal complement; return the zero vector
    vec![T::zero(); d]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Jacobi eigendecomposition of a small symmetric matrix (test oracle).
    fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
        let n = a.len();
        let mut v = vec![vec![0.0; n]; n];
        (0..n).for_each(|i| v[i][i] = 1.0);
        for _ in 0..200 {
            // largest off-diagonal element
            let (mut p, mut q, mut max) = (0, 1, 0.0);
            for i in 0..n {
                for j in i + 1..n {
                    if a[i][j].abs() > max {
                        max = a[i][j].abs();
                        p = i;
                        q = j;
                    }
                }
            }
            if max < 1e-14 {
                break;
            }
            let theta = 0.5 * (2.0 * a[p][q]).atan2(a[p][p] - a[q][q]);
            let (c, s) = (theta.cos(), theta.sin());
            for k in 0..n {
                let (akp, akq) = (a[k][p], a[k][q]);
                a[k][p] = c * akp + s * akq;
                a[k][q] = -s * akp + c * akq;
            }
            for k in 0..n {
                let (apk, aqk) = (a[p][k], a[q][k]);
                a[p][k] = c * apk + s * aqk;
                a[q][k] = -s * apk + c * aqk;
            }
            for k in 0..n {
                let (vkp, vkq) = (v[k][p], v[k][q]);
                v[k][p] = c * vkp + s * vkq;
                v[k][q] = -s * vkp + c * vkq;
            }
        }
        let eigvals = (0..n).map(|i| a[i][i]).collect();
        (eigvals, v)
    }

    #[test]
    fn collinear_rows_have_vanishing_second_singular_value() {
        // rows on a line through the centroid
        let dir = [1.0, -2.0, 0.5, 3.0];
        let m = Matrix::from_fn(6, 4, |i, j| (i as f64 - 2.5) * dir[j]);
        let fit = Pca2::fit(&m).unwrap();
        assert!(fit.singular_values[1] < 1e-8 * fit.singular_values[0]);
        let proj = fit.project(&m).unwrap();
        for i in 0..6 {
            assert!(proj.get(i, 1).abs() < 1e-8);
        }
    }

    #[test]
    fn matches_dense_eigendecomposition_oracle() {
        let mut rng = Rng::new(1234);
        let samples = Matrix::from_fn(10, 4, |_, _| rng.normal(0.0, 1.0));
        let fit = Pca2::fit(&samples).unwrap();

        // oracle: eigendecompose the 4x4 covariance directly
        let n = samples.rows();
        let d = samples.cols();
        let mean: Vec<f64> = (0..d)
            .map(|j| (0..n).map(|i| samples.get(i, j)).sum::<f64>() / n as f64)
            .collect();
        let mut cov = vec![vec![0.0; d]; d];
        for i in 0..n {
            for a in 0..d {
                for b in 0..d {
                    cov[a][b] +=
                        (samples.get(i, a) - mean[a]) * (samples.get(i, b) - mean[b]);
                }
            }
        }
        let (eigvals, eigvecs) = jacobi_eigen(cov);
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&a, &b| eigvals[b].partial_cmp(&eigvals[a]).unwrap());

        for (c, &idx) in fit.components.iter().zip(order.iter().take(2)) {
            let oracle: Vec<f64> = (0..d).map(|k| eigvecs[k][idx]).collect();
            // equal up to sign
            let sign = if dot(c, &oracle) >= 0.0 { 1.0 } else { -1.0 };
            for (a, b) in c.iter().zip(&oracle) {
                assert!((a - sign * b).abs() < 1e-8, "{a} vs {b}");
            }
        }
        // projections also match up to the same sign convention
        let proj = fit.project(&samples).unwrap();
        for i in 0..n {
            for (col, &idx) in order.iter().take(2).enumerate() {
                let oracle_dir: Vec<f64> = (0..d).map(|k| eigvecs[k][idx]).collect();
                let mut p = 0.0;
                for j in 0..d {
                    p += (samples.get(i, j) - mean[j]) * oracle_dir[j];
                }
                let sign = if dot(&fit.components[col], &oracle_dir) >= 0.0 {
                    1.0
                } else {
                    -1.0
                };
                assert!((proj.get(i, col) - sign * p).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn projected_variance_is_ordered() {
        let mut rng = Rng::new(55);
        let samples = Matrix::from_fn(40, 6, |_, j| rng.normal(0.0, 1.0 + j as f64));
        let (_, proj) = pca_top2(&samples).unwrap();
        let var = |col: usize| {
            let vals: Vec<f64> = (0..proj.rows()).map(|i| proj.get(i, col)).collect();
            let m = vals.iter().sum::<f64>() / vals.len() as f64;
            vals.iter().map(|v| (v - m) * (v - m)).sum::<f64>()
        };
        assert!(var(0) >= var(1));
    }

    #[test]
    fn components_orthonormal() {
        let mut rng = Rng::new(91);
        let samples = Matrix::from_fn(25, 8, |_, _| rng.normal(0.0, 1.0));
        let fit = Pca2::fit(&samples).unwrap();
        let c0 = &fit.components[0];
        let c1 = &fit.components[1];
        assert!((dot(c0, c0) - 1.0).abs() < 1e-8);
        assert!((dot(c1, c1) - 1.0).abs() < 1e-8);
        assert!(dot(c0, c1).abs() < 1e-8);
    }

    #[test]
    fn too_few_rows_rejected() {
        let m = Matrix::<f64>::zeros(2, 4);
        assert!(Pca2::fit(&m).is_err());
    }
}
