//! Fixed operator sets: Pauli matrices, the spin-1 triplet acting on the
//! n = 2 coherence vector, and the su(3) octet built from it.

use super::ComplexMatrix;
use crate::scalar::Real;

/// Pauli matrices (sigma_x, sigma_y, sigma_z).
pub fn pauli_matrices<T: Real>() -> [ComplexMatrix<T>; 3] {
    let sx = ComplexMatrix::from_f64_rows(2, 2, &[(0., 0.), (1., 0.), (1., 0.), (0., 0.)]).unwrap();
    let sy =
        ComplexMatrix::from_f64_rows(2, 2, &[(0., 0.), (0., -1.), (0., 1.), (0., 0.)]).unwrap();
    let sz =
        ComplexMatrix::from_f64_rows(2, 2, &[(1., 0.), (0., 0.), (0., 0.), (-1., 0.)]).unwrap();
    [sx, sy, sz]
}

/// Qubit raising operator |1><2| (maps the second basis state onto the first).
pub fn raising_op<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_f64_rows(2, 2, &[(0., 0.), (1., 0.), (0., 0.), (0., 0.)]).unwrap()
}

/// Qubit lowering operator |2><1|.
pub fn lowering_op<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_f64_rows(2, 2, &[(0., 0.), (0., 0.), (1., 0.), (0., 0.)]).unwrap()
}

/// Angular-momentum triplet (Ax, Ay, Az) in the representation acting on the
/// n = 2 coherence vector (sum, difference, population-imbalance ordering).
/// Satisfies [A_i, A_j] = i eps_ijk A_k, with Az coupling the first two
/// components and Ax the last two.
pub fn angular_momentum_triplet<T: Real>() -> [ComplexMatrix<T>; 3] {
    let ax = ComplexMatrix::from_f64_rows(
        3,
        3,
        &[
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (1., 0.),
            (0., 0.),
            (1., 0.),
            (0., 0.),
        ],
    )
    .unwrap();
    let ay = ComplexMatrix::from_f64_rows(
        3,
        3,
        &[
            (0., 0.),
            (0., 0.),
            (0., -1.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (0., 1.),
            (0., 0.),
            (0., 0.),
        ],
    )
    .unwrap();
    let az = ComplexMatrix::from_f64_rows(
        3,
        3,
        &[
            (0., 0.),
            (1., 0.),
            (0., 0.),
            (1., 0.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
            (0., 0.),
        ],
    )
    .unwrap();
    [ax, ay, az]
}

/// Ladder operators A+/- = Ax +/- i Ay built on the coherence-basis triplet.
pub fn ladder_ops<T: Real>() -> (ComplexMatrix<T>, ComplexMatrix<T>) {
    let [ax, ay, _] = angular_momentum_triplet::<T>();
    let i = crate::scalar::imag_unit::<T>();
    let a_plus = ax.add_checked(&ay.scale(i)).unwrap();
    let a_minus = ax.sub_checked(&ay.scale(i)).unwrap();
    (a_plus, a_minus)
}

/// Octet of su(3) operators in the order
/// (Az, A+, A-, Az^2, A+^2, A-^2, {A+,Az}, {A-,Az}),
/// indexed 1..=8 by the closure subcommands.
pub fn su3_octet<T: Real>() -> [ComplexMatrix<T>; 8] {
    let [_, _, az] = angular_momentum_triplet::<T>();
    let (ap, am) = ladder_ops::<T>();
    let az2 = az.mul_checked(&az).unwrap();
    let ap2 = ap.mul_checked(&ap).unwrap();
    let am2 = am.mul_checked(&am).unwrap();
    let ap_az = ap.anticommutator(&az).unwrap();
    let am_az = am.anticommutator(&az).unwrap();
    [az, ap, am, az2, ap2, am2, ap_az, am_az]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, OperatorBasis};
    use crate::scalar::imag_unit;

    #[test]
    fn triplet_satisfies_su2_relations() {
        let [ax, ay, az] = angular_momentum_triplet::<f64>();
        let pairs = [
            (&ax, &ay, &az),
            (&ay, &az, &ax),
            (&az, &ax, &ay),
        ];
        for (a, b, c) in pairs {
            let lhs = commutator(a, b).unwrap();
            let rhs = c.scale(imag_unit());
            assert!((&lhs - &rhs).max_abs() < 1e-15);
        }
    }

    #[test]
    fn ladder_commutator_is_twice_az() {
        let (ap, am) = ladder_ops::<f64>();
        let [_, _, az] = angular_momentum_triplet::<f64>();
        let c = commutator(&ap, &am).unwrap();
        let expected = az.scale(crate::algebra::cx(2.0, 0.0));
        assert!((&c - &expected).max_abs() < 1e-14);
    }

    #[test]
    fn ladder_cubes_vanish() {
        // Spin-1 representation: third powers of the ladder operators are zero.
        let (ap, am) = ladder_ops::<f64>();
        let ap3 = ap.mul_checked(&ap).unwrap().mul_checked(&ap).unwrap();
        let am3 = am.mul_checked(&am).unwrap().mul_checked(&am).unwrap();
        assert!(ap3.max_abs() < 1e-15);
        assert!(am3.max_abs() < 1e-15);
    }

    #[test]
    fn octet_is_linearly_independent() {
        let octet = su3_octet::<f64>();
        let basis = OperatorBasis::new("su3-octet", octet.to_vec()).unwrap();
        assert_eq!(basis.len(), 8);
    }
}
