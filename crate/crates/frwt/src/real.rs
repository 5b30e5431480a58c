use std::fmt::Display;
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rustfft::FftNum;

/// Scalar type the whole crate is generic over.
///
/// Implemented for `f32` and `f64` through the blanket impl below; all
/// quadrature, transform and estimator code is written against this trait so
/// the concrete precision is chosen at the call site (see the type aliases at
/// the crate root).
pub trait Real:
    Float + FloatConst + FromPrimitive + FftNum + NumAssign + AddAssign + Sum<Self> + Display
{
    /// Converts an `f64` constant into `Self`. Panics only if the value is not
    /// representable, which cannot happen for finite literals.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal converts to any float type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("float converts to f64")
    }

    /// Sign function with the `sgn(0) = 0` convention used by the transform
    /// kernel (note that `f64::signum(0.0)` is `1.0`, which is not what the
    /// kernel wants).
    #[inline]
    fn sgn(self) -> Self {
        if self == Self::zero() {
            Self::zero()
        } else {
            self.signum()
        }
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + FftNum + NumAssign + AddAssign + Sum<T> + Display
{
}
