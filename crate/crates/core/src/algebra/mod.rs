//! Small dense complex linear algebra: the carrier type for density
//! matrices, Lindblad operators and Liouville-Bloch generators, plus the
//! fixed operator bases, matrix exponential and Lie-closure search built
//! on top of it.

mod bases;
mod closure;
mod eig;
mod expm;

pub use bases::{angular_momentum_triplet, lowering_op, pauli_matrices, raising_op, su3_octet};
pub use closure::{lie_closure, span_coefficients, ClosureOverflow, LieClosure, SpanFit};
pub use eig::hermitian_eigenvalues;
pub use expm::matrix_exponential;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{re, Cx, Real};

/// Dense complex matrix in row-major order. Everything in this crate is
/// tiny (n <= 9), so no structure beyond a flat buffer is warranted.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Cx<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Cx::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(T::one());
        }
        m
    }

    /// Build from a row-major slice of complex entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Cx<T>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Build from row-major `(re, im)` pairs given as `f64` literals.
    pub fn from_f64_rows(rows: usize, cols: usize, data: &[(f64, f64)]) -> Result<Self> {
        let entries = data
            .iter()
            .map(|&(a, b)| Cx::new(T::lit(a), T::lit(b)))
            .collect();
        Self::from_entries(rows, cols, entries)
    }

    pub fn diagonal(diag: &[Cx<T>]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Cx<T>] {
        &self.entries
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Cx<T> {
        let n = self.rows.min(self.cols);
        (0..n).fold(Cx::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, factor: Cx<T>) -> Self {
        let entries = self.entries.iter().map(|e| *e * factor).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Frobenius inner product `<A, B> = Tr(A^dag B)`.
    pub fn frobenius_inner(&self, other: &Self) -> Result<Cx<T>> {
        self.require_same_shape(other)?;
        let mut acc = Cx::new(T::zero(), T::zero());
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            acc = acc + a.conj() * *b;
        }
        Ok(acc)
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, e| acc + e.norm_sqr())
            .sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, e| acc.max(e.norm()))
    }

    /// Maximum absolute column sum (the induced 1-norm).
    pub fn one_norm(&self) -> T {
        let mut best = T::zero();
        for j in 0..self.cols {
            let mut sum = T::zero();
            for i in 0..self.rows {
                sum = sum + self[(i, j)].norm();
            }
            best = best.max(sum);
        }
        best
    }

    /// `max |M - M^dag|`, zero for Hermitian matrices.
    pub fn hermiticity_defect(&self) -> T {
        self.sub_checked(&self.adjoint())
            .map(|d| d.max_abs())
            .unwrap_or_else(|_| T::infinity())
    }

    /// `max |M + M^dag|`, zero for anti-Hermitian matrices.
    pub fn anti_hermiticity_defect(&self) -> T {
        self.add_checked(&self.adjoint())
            .map(|d| d.max_abs())
            .unwrap_or_else(|_| T::infinity())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.hermiticity_defect() <= tol
    }

    /// Hermitian part `(M + M^dag) / 2`.
    pub fn symmetrize(&self) -> Self {
        let half = re(T::lit(0.5));
        self.add_checked(&self.adjoint())
            .expect("square matrix")
            .scale(half)
    }

    pub fn add_checked(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| *a + *b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub_checked(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| *a - *b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul_checked(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Cx<T>]) -> Result<Vec<Cx<T>>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Cx::new(T::zero(), T::zero()); self.rows];
        for i in 0..self.rows {
            let mut acc = Cx::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc = acc + self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Anticommutator `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        let ab = self.mul_checked(other)?;
        let ba = other.mul_checked(self)?;
        ab.add_checked(&ba)
    }
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Cx<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Cx<T> {
        &self.entries[i * self.cols + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cx<T> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        self.add_checked(rhs).expect("matrix shapes must match")
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        self.sub_checked(rhs).expect("matrix shapes must match")
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.mul_checked(rhs).expect("matrix shapes must match")
    }
}

impl<T: Real> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn neg(self) -> ComplexMatrix<T> {
        self.scale(re(-T::one()))
    }
}

impl<T: Real> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let e = self[(i, j)];
                write!(f, "{:+.4e}{:+.4e}i  ", e.re.as_f64(), e.im.as_f64())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    a.require_square()?;
    b.require_square()?;
    a.require_same_shape(b)?;
    let ab = a.mul_checked(b)?;
    let ba = b.mul_checked(a)?;
    ab.sub_checked(&ba)
}

/// Ordered list of same-shaped, linearly independent operators.
#[derive(Clone, Debug)]
pub struct OperatorBasis<T> {
    label: String,
    members: Vec<ComplexMatrix<T>>,
}

/// Linear-independence test threshold on Gram-matrix singular values.
const INDEPENDENCE_SV_CUTOFF: f64 = 1e-10;

impl<T: Real> OperatorBasis<T> {
    /// Validates shapes and linear independence (Gram matrix of Frobenius
    /// inner products must have full rank at singular-value cutoff 1e-10).
    pub fn new(label: impl Into<String>, members: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let label = label.into();
        if members.is_empty() {
            return Err(Error::InvalidBasis(format!("basis '{label}' has no members")));
        }
        let (r, c) = (members[0].rows(), members[0].cols());
        for (k, m) in members.iter().enumerate() {
            if m.rows() != r || m.cols() != c {
                return Err(Error::InvalidBasis(format!(
                    "basis '{label}' member {k} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let gram = gram_matrix(&members)?;
        let eigs = hermitian_eigenvalues(&gram)?;
        let cutoff = T::lit(INDEPENDENCE_SV_CUTOFF);
        if eigs.iter().any(|&l| l.abs() < cutoff) {
            return Err(Error::InvalidBasis(format!(
                "basis '{label}' members are not linearly independent"
            )));
        }
        Ok(Self { label, members })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn members(&self) -> &[ComplexMatrix<T>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_dim(&self) -> usize {
        self.members[0].rows()
    }
}

/// Gram matrix of Frobenius inner products; Hermitian positive semidefinite.
pub(crate) fn gram_matrix<T: Real>(members: &[ComplexMatrix<T>]) -> Result<ComplexMatrix<T>> {
    let k = members.len();
    let mut g = ComplexMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = members[i].frobenius_inner(&members[j])?;
        }
    }
    Ok(g)
}

/// Convenience constructor for complex scalars from f64 literals.
pub fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::imag_unit;

    type M = ComplexMatrix<f64>;

    #[test]
    fn commutator_of_paulis() {
        let [sx, sy, sz] = pauli_matrices::<f64>();
        let c = commutator(&sx, &sy).unwrap();
        let expected = sz.scale(cx(0.0, 2.0));
        assert!((&c - &expected).max_abs() < 1e-15, "[sx, sy] must be 2i sz");
    }

    #[test]
    fn self_commutator_vanishes() {
        let [_, _, az] = angular_momentum_triplet::<f64>();
        let c = commutator(&az, &az).unwrap();
        assert_eq!(c.max_abs(), 0.0);
    }

    #[test]
    fn coherence_basis_triplet_closes_like_angular_momentum() {
        let [ax, ay, az] = angular_momentum_triplet::<f64>();
        let c = commutator(&ax, &ay).unwrap();
        let expected = az.scale(imag_unit());
        assert!((&c - &expected).max_abs() < 1e-15, "[Ax, Ay] must be i Az");
    }

    #[test]
    fn commutator_rejects_mismatched_dims() {
        let a = M::identity(2);
        let b = M::identity(3);
        assert!(matches!(
            commutator(&a, &b),
            Err(Error::DimensionMismatch(_))
        ));
        let rect = M::zeros(2, 3);
        assert!(matches!(commutator(&rect, &rect), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn hermiticity_defects() {
        let [sx, sy, _] = pauli_matrices::<f64>();
        assert!(sx.hermiticity_defect() < 1e-15);
        assert!(sy.hermiticity_defect() < 1e-15);
        let anti = sy.scale(imag_unit());
        assert!(anti.anti_hermiticity_defect() < 1e-15);
        assert!(anti.hermiticity_defect() > 1.0);
    }

    #[test]
    fn basis_rejects_dependent_members() {
        let [sx, _, _] = pauli_matrices::<f64>();
        let doubled = sx.scale(cx(2.0, 0.0));
        let err = OperatorBasis::new("dependent", vec![sx, doubled]);
        assert!(matches!(err, Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn basis_accepts_pauli_set() {
        let b = OperatorBasis::new("pauli", pauli_matrices::<f64>().to_vec()).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.member_dim(), 2);
    }

    #[test]
    fn trace_and_inner_product() {
        let [sx, _, sz] = pauli_matrices::<f64>();
        assert_eq!(sz.trace(), cx(0.0, 0.0));
        // Paulis are Frobenius-orthogonal with norm^2 = 2.
        assert_eq!(sx.frobenius_inner(&sz).unwrap(), cx(0.0, 0.0));
        assert_eq!(sx.frobenius_inner(&sx).unwrap(), cx(2.0, 0.0));
    }
}
