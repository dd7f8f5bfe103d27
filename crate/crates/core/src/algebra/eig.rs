//! Eigenvalues of small Hermitian matrices via cyclic Jacobi rotations.
//!
//! The complex off-diagonal entry is first rotated onto the real axis by a
//! phase, then annihilated by a standard real Jacobi rotation. Quadratic
//! convergence makes a handful of sweeps enough for n <= 9.

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

const MAX_SWEEPS: usize = 60;

/// Ascending eigenvalues of a Hermitian matrix.
///
/// The input is symmetrized first; callers are expected to pass matrices
/// that are Hermitian up to round-off.
pub fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.symmetrize();
    if n == 1 {
        return Ok(vec![a[(0, 0)].re]);
    }

    let scale = a.max_abs().max(T::one());
    let tol = T::epsilon() * scale;

    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= tol {
            let mut eigs: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
            eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
            return Ok(eigs);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q, tol);
            }
        }
    }
    Err(Error::InvalidState(
        "Jacobi eigensolver failed to converge".into(),
    ))
}

/// Smallest eigenvalue, a convenience for positivity checks.
pub fn min_eigenvalue<T: Real>(m: &ComplexMatrix<T>) -> Result<T> {
    Ok(hermitian_eigenvalues(m)?[0])
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, p: usize, q: usize, tol: T) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag <= tol {
        a[(p, q)] = Cx::new(T::zero(), T::zero());
        a[(q, p)] = Cx::new(T::zero(), T::zero());
        return;
    }
    let n = a.rows();
    let phase = apq / Cx::new(mag, T::zero());

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (mag + mag);
    let t = {
        let sign = if tau >= T::zero() { T::one() } else { -T::one() };
        sign / (tau.abs() + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // Column rotation. The unitary acts as
    //   col_p <- c * col_p - conj(phase) s * col_q... expressed via rows below.
    let cs = Cx::new(c, T::zero());
    let sp = phase.scale(s);
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * cs - akq * sp.conj();
        a[(k, q)] = akq * cs + akp * sp;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * cs - aqk * sp;
        a[(q, k)] = aqk * cs + apk * sp.conj();
    }
    // Annihilated pair, cleaned to keep the off-diagonal scan honest.
    a[(p, q)] = Cx::new(T::zero(), T::zero());
    a[(q, p)] = Cx::new(T::zero(), T::zero());
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{angular_momentum_triplet, cx, pauli_matrices};

    type M = ComplexMatrix<f64>;

    #[test]
    fn pauli_eigenvalues() {
        for s in pauli_matrices::<f64>() {
            let e = hermitian_eigenvalues(&s).unwrap();
            assert!((e[0] + 1.0).abs() < 1e-14);
            assert!((e[1] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn spin_one_generator_eigenvalues() {
        let [ax, ay, az] = angular_momentum_triplet::<f64>();
        for a in [ax, ay, az] {
            let e = hermitian_eigenvalues(&a).unwrap();
            assert!((e[0] + 1.0).abs() < 1e-13);
            assert!(e[1].abs() < 1e-13);
            assert!((e[2] - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn diagonal_passthrough() {
        let m = M::diagonal(&[cx(0.3, 0.0), cx(-1.5, 0.0), cx(2.0, 0.0)]);
        let e = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(e, vec![-1.5, 0.3, 2.0]);
    }

    #[test]
    fn trace_and_square_trace_preserved() {
        // Eigenvalues must reproduce tr(M) and tr(M^2) for random Hermitian M.
        let mut seed = 0xdeadbeefcafe1234_u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for n in 2..=5 {
            let entries: Vec<_> = (0..n * n).map(|_| Cx::new(next(), next())).collect();
            let raw = M::from_entries(n, n, entries).unwrap();
            let h = raw.symmetrize();
            let eigs = hermitian_eigenvalues(&h).unwrap();
            let tr: f64 = eigs.iter().sum();
            let tr2: f64 = eigs.iter().map(|l| l * l).sum();
            assert!((tr - h.trace().re).abs() < 1e-12);
            let h2 = h.mul_checked(&h).unwrap();
            assert!((tr2 - h2.trace().re).abs() < 1e-12);
        }
    }
}
