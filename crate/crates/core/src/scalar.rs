//! Real scalar abstraction so the core math runs at any float width.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar underlying all matrices, signals and integrators.
///
/// `f64` is the working precision for everything quantitative; `f32` is
/// supported for quick low-precision runs.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Convert an `f64` literal into `Self`, panicking only on NaN inputs
    /// that cannot be represented (never the case for the constants used
    /// in this crate).
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("f64 constant must convert to the scalar type")
    }

    /// Lossy view of the scalar as `f64`, used for diagnostics and errors.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex scalar over the crate's real type.
pub type Cx<T> = Complex<T>;

/// i as a complex constant.
pub fn imag_unit<T: Real>() -> Cx<T> {
    Complex::new(T::zero(), T::one())
}

/// Real number promoted to a complex scalar.
pub fn re<T: Real>(x: T) -> Cx<T> {
    Complex::new(x, T::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        assert_eq!(f64::lit(0.25), 0.25);
        assert_eq!(f32::lit(0.25), 0.25_f32);
        assert_eq!(imag_unit::<f64>() * imag_unit::<f64>(), re(-1.0));
    }
}
