use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One-sided power spectrum.
///
/// `freqs[k] = k/n` in cycles per sample (0 ..= 0.5), `power[k] = |X_k|^2 / n`
/// with the mean removed before the transform.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub freqs: Vec<T>,
    pub power: Vec<T>,
    /// Length of the signal the spectrum was computed from.
    pub signal_len: usize,
}

impl<T: Scalar> Spectrum<T> {
    /// Total power under the chosen normalization: interior bins carry their
    /// conjugate twins, the whole sum is divided by n. Equals the biased
    /// variance of the mean-removed signal (Parseval).
    pub fn total_power(&self) -> T {
        let n = self.signal_len;
        let mut sum = T::zero();
        for (k, &p) in self.power.iter().enumerate() {
            let doubled = k != 0 && !(n % 2 == 0 && k == n / 2);
            sum = sum + if doubled { T::lit(2.0) * p } else { p };
        }
        sum / T::from_usize(n).unwrap()
    }
}

/// Discrete Fourier transform of arbitrary length.
///
/// Forward is non-normalized (`X_k = sum x_n e^{-2pi i nk/N}`), inverse
/// carries the `1/N` factor so `dft(dft(x), true) == x`. Power-of-two sizes
/// run on an iterative radix-2 kernel; everything else goes through the
/// Bluestein chirp-z reduction onto a padded radix-2 convolution, so any
/// length is O(n log n).
pub fn dft<T: Scalar>(x: &[Complex<T>], inverse: bool) -> Result<Vec<Complex<T>>> {
    if x.is_empty() {
        return Err(Error::InvalidArgument("dft of empty input".into()));
    }
    let n = x.len();
    if n == 1 {
        return Ok(x.to_vec());
    }
    let mut out = if n.is_power_of_two() {
        let mut buf = x.to_vec();
        radix2_in_place(&mut buf, inverse);
        buf
    } else {
        bluestein(x, inverse)
    };
    if inverse {
        let scale = T::one() / T::from_usize(n).unwrap();
        for v in &mut out {
            *v = *v * scale;
        }
    }
    Ok(out)
}

fn radix2_in_place<T: Scalar>(buf: &mut [Complex<T>], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    // bit-reversal permutation
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = (i.reverse_bits() >> (usize::BITS - bits)) as usize;
        if j > i {
            buf.swap(i, j);
        }
    }
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * std::f64::consts::TAU / len as f64;
        let wlen = Complex::new(T::lit(ang.cos()), T::lit(ang.sin()));
        for start in (0..n).step_by(len) {
            let mut w = Complex::new(T::one(), T::zero());
            for k in 0..len / 2 {
                let u = buf[start + k];
                let v = buf[start + k + len / 2] * w;
                buf[start + k] = u + v;
                buf[start + k + len / 2] = u - v;
                w = w * wlen;
            }
        }
        len <<= 1;
    }
}

/// Chirp factor e^{sign * pi i m^2 / n}, with m^2 reduced mod 2n to keep the
/// angle argument small and exact.
fn chirp<T: Scalar>(m: usize, n: usize, sign: f64) -> Complex<T> {
    let m2 = ((m as u128 * m as u128) % (2 * n as u128)) as f64;
    let ang = sign * std::f64::consts::PI * m2 / n as f64;
    Complex::new(T::lit(ang.cos()), T::lit(ang.sin()))
}

fn bluestein<T: Scalar>(x: &[Complex<T>], inverse: bool) -> Vec<Complex<T>> {
    let n = x.len();
    let sign = if inverse { 1.0 } else { -1.0 };
    let m = (2 * n - 1).next_power_of_two();

    // a_k = x_k * e^{sign pi i k^2/n}, zero-padded to m
    let mut a = vec![Complex::new(T::zero(), T::zero()); m];
    for (k, &xv) in x.iter().enumerate() {
        a[k] = xv * chirp::<T>(k, n, sign);
    }
    // b holds the conjugate chirp, wrapped for circular convolution
    let mut b = vec![Complex::new(T::zero(), T::zero()); m];
    b[0] = chirp::<T>(0, n, -sign);
    for k in 1..n {
        let c = chirp::<T>(k, n, -sign);
        b[k] = c;
        b[m - k] = c;
    }

    radix2_in_place(&mut a, false);
    radix2_in_place(&mut b, false);
    for (av, bv) in a.iter_mut().zip(&b) {
        *av = *av * *bv;
    }
    radix2_in_place(&mut a, true);
    let scale = T::one() / T::from_usize(m).unwrap();

    (0..n)
        .map(|k| a[k] * scale * chirp::<T>(k, n, sign))
        .collect()
}

/// Raw mean-detrended periodogram at bins k = 0 ..= n/2.
pub fn periodogram<T: Scalar>(x: &[T]) -> Result<Spectrum<T>> {
    let n = x.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "periodogram needs length >= 2, got {n}"
        )));
    }
    let mean = x.iter().fold(T::zero(), |s, &v| s + v) / T::from_usize(n).unwrap();
    let buf: Vec<Complex<T>> = x
        .iter()
        .map(|&v| Complex::new(v - mean, T::zero()))
        .collect();
    let spec = dft(&buf, false)?;
    let n_t = T::from_usize(n).unwrap();
    let bins = n / 2 + 1;
    let mut freqs = Vec::with_capacity(bins);
    let mut power = Vec::with_capacity(bins);
    for (k, s) in spec.iter().take(bins).enumerate() {
        freqs.push(T::from_usize(k).unwrap() / n_t);
        power.push(s.norm_sqr() / n_t);
    }
    Ok(Spectrum {
        freqs,
        power,
        signal_len: n,
    })
}
