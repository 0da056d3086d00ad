//! Recurrent variational autoencoder for long time-series generation.
//!
//! The model couples a stacked-LSTM encoder with a repeat-vector decoder and
//! a shared per-timestep output projection; its parameter count does not
//! depend on sequence length, which is what makes progressive
//! sequence-length training (train to saturation, re-chunk longer, continue)
//! possible. The crate also carries the supporting numerics (deterministic
//! RNG, arbitrary-length DFT, snapshot PCA, finite-difference checks), the
//! synthetic dataset generators, and the evaluation suite (washout curves,
//! sliding-window ELBO, discriminative score, spectral comparison).
//!
//! The numerical core is generic over [`Scalar`] (f32 or f64); the aliases
//! below fix f64 for the trainers, the checkpoint format, and the CLI.

pub mod adam;
pub mod checkpoint;
pub mod data;
pub mod dft;
pub mod error;
pub mod eval;
pub mod gradcheck;
pub mod gru;
pub mod lstm;
pub mod matrix;
pub mod model;
pub mod pca;
pub mod rng;
pub mod scalar;
pub mod series;
pub mod stack;
pub mod train;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Scalar type used by everything downstream of the core: trainers,
/// checkpoints, metrics, CLI.
pub type Real = f64;

pub type Mat = matrix::Matrix<Real>;
pub type Batch = series::SeriesBatch<Real>;
pub type Series = series::RawSeries<Real>;
pub type Model = model::RvaeParams<Real>;
