//! Small dense complex matrices: 2x2 and 4x4 unitaries for gate
//! definitions and brute-force verification, plus a d x d matrix used by
//! the verification helpers.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// 2x2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary2(pub [[Complex64; 2]; 2]);

impl Unitary2 {
    pub fn identity() -> Self {
        Unitary2([[C_ONE, C_ZERO], [C_ZERO, C_ONE]])
    }

    pub fn h() -> Self {
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Unitary2([[s, s], [s, -s]])
    }

    pub fn x() -> Self {
        Unitary2([[C_ZERO, C_ONE], [C_ONE, C_ZERO]])
    }

    pub fn y() -> Self {
        Unitary2([[C_ZERO, -C_I], [C_I, C_ZERO]])
    }

    pub fn z() -> Self {
        Unitary2([[C_ONE, C_ZERO], [C_ZERO, -C_ONE]])
    }

    pub fn s() -> Self {
        Unitary2([[C_ONE, C_ZERO], [C_ZERO, C_I]])
    }

    pub fn t() -> Self {
        Unitary2([[C_ONE, C_ZERO], [C_ZERO, Complex64::from_polar(1.0, FRAC_PI_4)]])
    }

    /// `rx(phi) = e^{-i phi X / 2}`.
    pub fn rx(phi: f64) -> Self {
        let c = Complex64::new((phi / 2.0).cos(), 0.0);
        let s = Complex64::new(0.0, -(phi / 2.0).sin());
        Unitary2([[c, s], [s, c]])
    }

    /// `ry(phi) = e^{-i phi Y / 2}`.
    pub fn ry(phi: f64) -> Self {
        let c = Complex64::new((phi / 2.0).cos(), 0.0);
        let s = Complex64::new((phi / 2.0).sin(), 0.0);
        Unitary2([[c, -s], [s, c]])
    }

    /// `rz(phi) = e^{-i phi Z / 2}`.
    pub fn rz(phi: f64) -> Self {
        Unitary2([
            [Complex64::from_polar(1.0, -phi / 2.0), C_ZERO],
            [C_ZERO, Complex64::from_polar(1.0, phi / 2.0)],
        ])
    }

    /// `e^{i theta Z} = diag(e^{i theta}, e^{-i theta})` - the phase gate.
    pub fn phase_z(theta: f64) -> Self {
        Unitary2([
            [Complex64::from_polar(1.0, theta), C_ZERO],
            [C_ZERO, Complex64::from_polar(1.0, -theta)],
        ])
    }

    /// `e^{i theta X}`.
    pub fn phase_x(theta: f64) -> Self {
        let c = Complex64::new(theta.cos(), 0.0);
        let s = Complex64::new(0.0, theta.sin());
        Unitary2([[c, s], [s, c]])
    }

    pub fn mul(&self, rhs: &Unitary2) -> Unitary2 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[C_ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Unitary2(out)
    }

    pub fn scale(&self, factor: Complex64) -> Unitary2 {
        let mut out = self.0;
        for row in &mut out {
            for entry in row {
                *entry *= factor;
            }
        }
        Unitary2(out)
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn dagger(&self) -> Unitary2 {
        let a = &self.0;
        Unitary2([
            [a[0][0].conj(), a[1][0].conj()],
            [a[0][1].conj(), a[1][1].conj()],
        ])
    }

    /// Largest entrywise deviation of `U† U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger().mul(self);
        let id = Unitary2::identity();
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((p.0[i][j] - id.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn max_diff(&self, other: &Unitary2) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }
}

/// 4x4 complex matrix, row-major. The 2-bit basis order is little-endian
/// in the two qubits it is applied to: local index = bit(first) + 2 * bit(second).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary4(pub [[Complex64; 4]; 4]);

impl Unitary4 {
    pub fn identity() -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = C_ONE;
        }
        Unitary4(m)
    }

    pub fn diag(entries: [Complex64; 4]) -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = entries[i];
        }
        Unitary4(m)
    }

    /// The native two-qubit generator: diag(-1, 1, 1, 1).
    pub fn cz4() -> Self {
        Unitary4::diag([-C_ONE, C_ONE, C_ONE, C_ONE])
    }

    /// Standard controlled-Z: diag(1, 1, 1, -1).
    pub fn cz_std() -> Self {
        Unitary4::diag([C_ONE, C_ONE, C_ONE, -C_ONE])
    }

    /// Controlled phase: diag(1, 1, 1, e^{i theta}).
    pub fn cphase(theta: f64) -> Self {
        Unitary4::diag([C_ONE, C_ONE, C_ONE, Complex64::from_polar(1.0, theta)])
    }

    /// CNOT with the control on the *first* (low) local bit.
    pub fn cnot_control_first() -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        m[0][0] = C_ONE; // 00 -> 00
        m[3][1] = C_ONE; // control=1, target=0 -> target flips: 01 -> 11
        m[2][2] = C_ONE; // 10 -> 10
        m[1][3] = C_ONE; // 11 -> 01
        Unitary4(m)
    }

    pub fn swap() -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        m[0][0] = C_ONE;
        m[2][1] = C_ONE;
        m[1][2] = C_ONE;
        m[3][3] = C_ONE;
        Unitary4(m)
    }

    pub fn mul(&self, rhs: &Unitary4) -> Unitary4 {
        let mut out = [[C_ZERO; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for j in 0..4 {
                let mut acc = C_ZERO;
                for (k, rhs_row) in rhs.0.iter().enumerate() {
                    acc += self.0[i][k] * rhs_row[j];
                }
                row[j] = acc;
            }
        }
        Unitary4(out)
    }

    pub fn dagger(&self) -> Unitary4 {
        let mut out = [[C_ZERO; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.0[j][i].conj();
            }
        }
        Unitary4(out)
    }

    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger().mul(self);
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { C_ONE } else { C_ZERO };
                worst = worst.max((p.0[i][j] - expect).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }
}

/// Square d x d complex matrix, row-major, for small-n verification only.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![C_ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = C_ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut Complex64 {
        &mut self.data[row * self.dim + col]
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::invalid_input("matrix dimension mismatch"));
        }
        let d = self.dim;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a == C_ZERO {
                    continue;
                }
                for j in 0..d {
                    *out.at_mut(i, j) += a * rhs.at(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn dagger(&self) -> DenseMatrix {
        let d = self.dim;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                *out.at_mut(i, j) = self.at(j, i).conj();
            }
        }
        out
    }

    /// Largest entrywise deviation of `M† M` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger().mul(self).expect("same dim");
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expect = if i == j { C_ONE } else { C_ZERO };
                worst = worst.max((p.at(i, j) - expect).norm());
            }
        }
        worst
    }

    pub fn max_diff(&self, other: &DenseMatrix) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Whether `self = e^{i phi} * other` for some phase; returns the
    /// residual after aligning the phase on the largest entry.
    pub fn phase_aligned_diff(&self, other: &DenseMatrix) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        // Align on the entry of `other` with the largest magnitude.
        let mut pivot = 0;
        let mut best = 0.0;
        for (idx, e) in other.data.iter().enumerate() {
            if e.norm() > best {
                best = e.norm();
                pivot = idx;
            }
        }
        if best == 0.0 {
            return self.data.iter().map(|a| a.norm()).fold(0.0, f64::max);
        }
        let ratio = self.data[pivot] / other.data[pivot];
        let phase = if ratio.norm() == 0.0 {
            C_ONE
        } else {
            ratio / ratio.norm()
        };
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - phase * b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_gates_are_unitary() {
        for u in [
            Unitary2::identity(),
            Unitary2::h(),
            Unitary2::x(),
            Unitary2::y(),
            Unitary2::z(),
            Unitary2::s(),
            Unitary2::t(),
            Unitary2::rx(0.37),
            Unitary2::ry(-1.2),
            Unitary2::rz(2.9),
            Unitary2::phase_z(0.3),
            Unitary2::phase_x(-0.8),
        ] {
            assert!(u.is_unitary(1e-12));
        }
    }

    #[test]
    fn h_conjugation_turns_z_phase_into_x_phase() {
        let theta = 0.42;
        let lhs = Unitary2::h()
            .mul(&Unitary2::phase_z(theta))
            .mul(&Unitary2::h());
        assert!(lhs.max_diff(&Unitary2::phase_x(theta)) < 1e-12);
    }

    #[test]
    fn rz_is_phase_z_with_negated_half_angle() {
        let phi = 1.234;
        assert!(Unitary2::rz(phi).max_diff(&Unitary2::phase_z(-phi / 2.0)) < 1e-15);
    }

    #[test]
    fn cnot_matrix_action() {
        // In the little-endian local basis, control = low bit:
        // 00 -> 00, 01(control set) -> 11, 10 -> 10, 11 -> 01.
        let c = Unitary4::cnot_control_first();
        assert_eq!(c.0[3][1], C_ONE);
        assert_eq!(c.0[1][3], C_ONE);
        assert!(c.is_unitary(1e-15));
        assert!(Unitary4::swap().is_unitary(1e-15));
    }

    #[test]
    fn dense_identity_multiplication() {
        let id = DenseMatrix::identity(8);
        let prod = id.mul(&id).unwrap();
        assert!(prod.max_diff(&id) < 1e-15);
        assert!(id.unitarity_defect() < 1e-15);
    }

    #[test]
    fn phase_aligned_diff_ignores_global_phase() {
        let id = DenseMatrix::identity(4);
        let mut rotated = id.clone();
        let phase = Complex64::from_polar(1.0, 0.9);
        for i in 0..4 {
            *rotated.at_mut(i, i) = phase;
        }
        assert!(rotated.phase_aligned_diff(&id) < 1e-15);
        assert!(rotated.max_diff(&id) > 0.5);
    }
}
