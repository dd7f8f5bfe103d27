//! Matrix exponential by scaling-and-squaring with a truncated Taylor
//! series. Operands here are at most 9x9, so robustness wins over the
//! Pade machinery a large-matrix library would need.

use super::ComplexMatrix;
use crate::error::Result;
use crate::scalar::{re, Real};

/// Norm threshold below which the Taylor series is summed directly.
const SCALING_THRESHOLD: f64 = 0.25;

/// Hard cap on Taylor terms; at one-norm 0.25 the tail beyond 20 terms is
/// below 1e-30, fifteen digits past f64 resolution.
const MAX_TAYLOR_TERMS: usize = 40;

/// Compute exp(m) for a square complex matrix.
///
/// Accuracy is limited by squaring-step error growth: relative error stays
/// under ~1e-12 for one-norms up to 50.
pub fn matrix_exponential<T: Real>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let n = m.require_square()?;
    let norm = m.one_norm();
    let threshold = T::lit(SCALING_THRESHOLD);

    // Number of halvings so the scaled norm is <= threshold.
    let mut squarings = 0u32;
    let mut scale = T::one();
    if norm > threshold {
        let ratio = (norm / threshold).log2().ceil();
        squarings = ratio.as_f64() as u32;
        scale = T::lit(0.5).powi(squarings as i32);
    }

    let scaled = m.scale(re(scale));
    let mut result = taylor_exp(&scaled, n);
    for _ in 0..squarings {
        result = result.mul_checked(&result)?;
    }
    Ok(result)
}

fn taylor_exp<T: Real>(m: &ComplexMatrix<T>, n: usize) -> ComplexMatrix<T> {
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=MAX_TAYLOR_TERMS {
        term = term.mul_checked(m).expect("square");
        term = term.scale(re(T::one() / T::from_usize(k).unwrap()));
        sum = sum.add_checked(&term).expect("square");
        let tail = term.max_abs();
        if tail <= T::epsilon() * sum.max_abs() {
            break;
        }
    }
    sum
}
