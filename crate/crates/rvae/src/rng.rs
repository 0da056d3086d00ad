use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Deterministic 64-bit PRNG (SplitMix64).
///
/// State update: `s += 0x9E3779B97F4A7C15`, output = finalizer of `s`
/// (xor-shift/multiply mix). The generator identity is frozen by
/// golden-value tests; identical seeds produce identical streams on every
/// platform. Floats are derived as `(u64 >> 11) * 2^-53` in `[0, 1)` and
/// Gaussians via Box-Muller on that stream.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
    spare_normal: Option<f64>,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: seed,
            spare_normal: None,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Standard normal via Box-Muller; draws come in pairs, the second is cached.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        // u1 in (0, 1] keeps the log finite.
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        self.spare_normal = Some(r * theta.sin());
        r * theta.cos()
    }

    pub fn normal(&mut self, mean: f64, std: f64) -> f64 {
        mean + std * self.standard_normal()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            items.swap(i, j);
        }
    }
}

/// `n` i.i.d. Gaussian draws, deterministic per seed.
pub fn rng_normal<T: Scalar>(rng: &mut Rng, n: usize, mean: f64, std: f64) -> Result<Vec<T>> {
    if std < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "normal std must be >= 0, got {std}"
        )));
    }
    Ok((0..n).map(|_| T::lit(rng.normal(mean, std))).collect())
}

/// `n` i.i.d. uniform draws in [lo, hi).
pub fn rng_uniform<T: Scalar>(rng: &mut Rng, n: usize, lo: f64, hi: f64) -> Result<Vec<T>> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "uniform bounds inverted: lo={lo} > hi={hi}"
        )));
    }
    Ok((0..n).map(|_| T::lit(rng.uniform(lo, hi))).collect())
}

/// Derive a sub-stream seed from a master seed, a component name, and an index.
///
/// FNV-1a hashes the component name; the result is folded with the master
/// seed and index and passed once through the SplitMix64 output function.
/// This is the single seed-derivation rule used everywhere (training phases,
/// epoch shuffles, evaluation repetitions).
pub fn derive_seed(master: u64, component: &str, index: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in component.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut rng = Rng::new(master ^ h ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.next_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    // The generator identity is part of the on-disk/reproducibility contract;
    // these values were produced once by this implementation and must never
    // change.
    #[test]
    fn golden_u64_stream() {
        let mut rng = Rng::new(1);
        let got: Vec<u64> = (0..4).map(|_| rng.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                0x910A_2DEC_8902_5CC1,
                0xBEEB_8DA1_658E_AEC9,
                0xF893_A2EE_A4D5_627C,
                0x71C1_8690_EE86_C963,
            ]
        );
    }

    #[test]
    fn determinism_per_seed() {
        let a: Vec<f64> = {
            let mut r = Rng::new(99);
            (0..16).map(|_| r.normal(0.0, 1.0)).collect()
        };
        let b: Vec<f64> = {
            let mut r = Rng::new(99);
            (0..16).map(|_| r.normal(0.0, 1.0)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_gaussian() {
        let mut rng = Rng::new(3);
        let v: Vec<f64> = rng_normal(&mut rng, 4, 3.0, 0.0).unwrap();
        assert_eq!(v, vec![3.0; 4]);
    }

    #[test]
    fn negative_std_rejected() {
        let mut rng = Rng::new(3);
        assert!(rng_normal::<f64>(&mut rng, 1, 0.0, -1.0).is_err());
    }

    #[test]
    fn normal_moments() {
        let mut rng = Rng::new(2024);
        let n = 100_000;
        let v: Vec<f64> = rng_normal(&mut rng, n, 0.0, 1.0).unwrap();
        let mean = v.iter().sum::<f64>() / n as f64;
        let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var.sqrt() - 1.0).abs() < 0.02, "std {}", var.sqrt());
    }

    #[test]
    fn uniform_degenerate_and_range() {
        let mut rng = Rng::new(5);
        let v: Vec<f64> = rng_uniform(&mut rng, 8, 2.0, 2.0).unwrap();
        assert_eq!(v, vec![2.0; 8]);
        let w: Vec<f64> = rng_uniform(&mut rng, 10_000, -0.25, 1.5).unwrap();
        assert!(w.iter().all(|&x| (-0.25..1.5).contains(&x)));
    }

    #[test]
    fn uniform_mean() {
        let mut rng = Rng::new(77);
        let v: Vec<f64> = rng_uniform(&mut rng, 100_000, 0.0, 1.0).unwrap();
        let mean = v.iter().sum::<f64>() / v.len() as f64;
        assert!((mean - 0.5).abs() < 0.01, "mean {mean}");
    }

    #[test]
    fn inverted_bounds_rejected() {
        let mut rng = Rng::new(5);
        assert!(rng_uniform::<f64>(&mut rng, 1, 1.0, 0.0).is_err());
    }

    #[test]
    fn derive_seed_is_stable_and_separating() {
        let a = derive_seed(1, "shuffle", 0);
        let b = derive_seed(1, "shuffle", 1);
        let c = derive_seed(1, "init", 0);
        assert_eq!(a, derive_seed(1, "shuffle", 0));
        assert_ne!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = Rng::new(11);
        let mut v: Vec<usize> = (0..50).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<_>>());
    }
}
