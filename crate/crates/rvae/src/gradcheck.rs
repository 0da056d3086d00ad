use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Central-difference gradient of a scalar function, `(f(x+h e_i) - f(x-h e_i)) / 2h`.
///
/// The independent oracle used to verify every analytic gradient in the crate.
pub fn finite_diff_grad<T, F>(mut f: F, theta: &[T], h: T) -> Result<Vec<T>>
where
    T: Scalar,
    F: FnMut(&[T]) -> T,
{
    if h <= T::zero() {
        return Err(Error::InvalidArgument("finite_diff_grad: h must be > 0".into()));
    }
    let mut probe = theta.to_vec();
    let mut grad = Vec::with_capacity(theta.len());
    for i in 0..theta.len() {
        probe[i] = theta[i] + h;
        let fp = f(&probe);
        probe[i] = theta[i] - h;
        let fm = f(&probe);
        probe[i] = theta[i];
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::Numerical(format!(
                "finite_diff_grad: f non-finite near coordinate {i}"
            )));
        }
        grad.push((fp - fm) / (T::lit(2.0) * h));
    }
    Ok(grad)
}

/// Elementwise relative error between an analytic gradient and the central
/// difference oracle, with an absolute floor for near-zero entries.
pub fn max_rel_error<T: Scalar>(analytic: &[T], numeric: &[T]) -> T {
    let floor = T::lit(1e-6);
    analytic
        .iter()
        .zip(numeric)
        .map(|(&a, &n)| (a - n).abs() / a.abs().max(n.abs()).max(floor))
        .fold(T::zero(), |m, e| m.max(e))
}
