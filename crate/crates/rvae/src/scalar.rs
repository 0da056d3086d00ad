use std::fmt::Debug;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the numerical core is generic over: f32 or f64.
///
/// Everything downstream of the crate-root aliases runs on f64; f32 exists
/// for callers that want the smaller footprint and accept the precision.
pub trait Scalar: Float + FromPrimitive + Debug + Default + Send + Sync + 'static {
    /// Convert an f64 constant into the scalar type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal not representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
