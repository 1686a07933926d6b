//! Scalar abstraction: every numeric quantity in this crate (feature values,
//! offsets, costs, distances, model parameters) is generic over [`Real`].
//!
//! `f64` is the default used by the crate-root aliases; `f32` works wherever
//! reduced precision is acceptable.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::distr::uniform::SampleUniform;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point scalar usable throughout the crate.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + SampleUniform
    + Sum
    + Default
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, for literals and defaults.
    fn real(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal must convert into the scalar type")
    }

    /// Lossy conversion to `f64`, for reporting and provenance records.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Euclidean norm of a dense vector.
pub fn l2_norm<F: Real>(v: &[F]) -> F {
    v.iter().map(|x| *x * *x).sum::<F>().sqrt()
}

/// Dot product of two equal-length vectors.
pub fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

/// Squared Euclidean distance between two equal-length vectors.
pub fn sq_dist<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = *x - *y;
            d * d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_and_dot() {
        assert_eq!(l2_norm(&[3.0f64, 4.0]), 5.0);
        assert_eq!(dot(&[1.0f64, 2.0], &[3.0, 4.0]), 11.0);
        assert_eq!(sq_dist(&[0.0f32, 0.0], &[3.0, 4.0]), 25.0);
    }

    #[test]
    fn real_roundtrip() {
        assert_eq!(f64::real(0.25), 0.25);
        assert_eq!(0.25f32.as_f64(), 0.25);
    }
}
