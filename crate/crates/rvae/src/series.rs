use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Rank-3 batch of sequences: samples x time x channels, row-major.
/// The universal data carrier between generators, trainers, and metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesBatch<T> {
    n_samples: usize,
    len: usize,
    channels: usize,
    data: Vec<T>,
}

impl<T: Scalar> SeriesBatch<T> {
    pub fn zeros(n_samples: usize, len: usize, channels: usize) -> Self {
        SeriesBatch {
            n_samples,
            len,
            channels,
            data: vec![T::zero(); n_samples * len * channels],
        }
    }

    pub fn from_vec(n_samples: usize, len: usize, channels: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n_samples * len * channels {
            return Err(Error::DimMismatch(format!(
                "batch data length {} != {n_samples}x{len}x{channels}",
                data.len()
            )));
        }
        Ok(SeriesBatch {
            n_samples,
            len,
            channels,
            data,
        })
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.n_samples == 0
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    /// Flat time x channels slice for one sample.
    pub fn sample(&self, s: usize) -> &[T] {
        let stride = self.len * self.channels;
        &self.data[s * stride..(s + 1) * stride]
    }

    pub fn sample_mut(&mut self, s: usize) -> &mut [T] {
        let stride = self.len * self.channels;
        &mut self.data[s * stride..(s + 1) * stride]
    }

    pub fn value(&self, s: usize, t: usize, c: usize) -> T {
        self.data[(s * self.len + t) * self.channels + c]
    }

    /// Copy of the window [t0, t0+len) of one sample.
    pub fn window(&self, s: usize, t0: usize, len: usize) -> Vec<T> {
        let c = self.channels;
        let sample = self.sample(s);
        sample[t0 * c..(t0 + len) * c].to_vec()
    }

    /// New batch holding the selected samples, in the given order.
    pub fn select(&self, indices: &[usize]) -> SeriesBatch<T> {
        let stride = self.len * self.channels;
        let mut data = Vec::with_capacity(indices.len() * stride);
        for &s in indices {
            data.extend_from_slice(self.sample(s));
        }
        SeriesBatch {
            n_samples: indices.len(),
            len: self.len,
            channels: self.channels,
            data,
        }
    }

    /// Single-channel view of one channel, as a new batch.
    pub fn channel(&self, c: usize) -> Result<SeriesBatch<T>> {
        if c >= self.channels {
            return Err(Error::InvalidArgument(format!(
                "channel {c} out of range ({} channels)",
                self.channels
            )));
        }
        let mut data = Vec::with_capacity(self.n_samples * self.len);
        for s in 0..self.n_samples {
            for t in 0..self.len {
                data.push(self.value(s, t, c));
            }
        }
        Ok(SeriesBatch {
            n_samples: self.n_samples,
            len: self.len,
            channels: 1,
            data,
        })
    }

    /// Rows = samples, columns = flattened time x channels (for PCA).
    pub fn flatten_rows(&self) -> crate::matrix::Matrix<T> {
        crate::matrix::Matrix::from_vec(
            self.n_samples,
            self.len * self.channels,
            self.data.clone(),
        )
        .expect("consistent by construction")
    }
}

/// One long multichannel recording: time x channels.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSeries<T> {
    len: usize,
    channels: usize,
    pub channel_names: Vec<String>,
    data: Vec<T>,
}

impl<T: Scalar> RawSeries<T> {
    pub fn new(channel_names: Vec<String>, data: Vec<T>) -> Result<Self> {
        let channels = channel_names.len();
        if channels == 0 || data.len() % channels != 0 {
            return Err(Error::DimMismatch(format!(
                "raw series: {} values not divisible into {} channels",
                data.len(),
                channels
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "raw series contains non-finite values".into(),
            ));
        }
        Ok(RawSeries {
            len: data.len() / channels,
            channels,
            channel_names,
            data,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn value(&self, t: usize, c: usize) -> T {
        self.data[t * self.channels + c]
    }

    pub fn row(&self, t: usize) -> &[T] {
        &self.data[t * self.channels..(t + 1) * self.channels]
    }
}
