//! Independent reference simulator.
//!
//! Gates are applied by generic bit-strided tensor contraction over the
//! mode index, written without reusing any code from the photonic-op
//! implementations in [`crate::elementary`]. Keeping the two paths
//! separate is what gives the equivalence tests their teeth.

use crate::circuit::{CircuitIR, Gate};
use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use crate::matrix::{Unitary2, Unitary4};
use crate::state::OamState;
use num_complex::Complex64;

/// Largest register accepted by the dense DFT reference.
pub const MAX_DFT_QUBITS: usize = 12;

fn check_qubit(n: QubitCount, q: usize) -> Result<()> {
    if !n.contains_qubit(q) {
        return Err(Error::invalid_input(format!(
            "qubit index {q} out of range 1..={n}"
        )));
    }
    Ok(())
}

/// Apply a 2x2 unitary to qubit `target` (1-indexed, bit `target - 1` of
/// the mode index).
pub fn apply_1q(state: &mut OamState, u: &Unitary2, target: usize) -> Result<()> {
    check_qubit(state.qubit_count(), target)?;
    let bit = 1usize << (target - 1);
    let m = u.0;
    let amp = state.amplitudes_mut();
    for i in 0..amp.len() {
        if i & bit == 0 {
            let lo = amp[i];
            let hi = amp[i | bit];
            amp[i] = m[0][0] * lo + m[0][1] * hi;
            amp[i | bit] = m[1][0] * lo + m[1][1] * hi;
        }
    }
    Ok(())
}

/// Apply a 4x4 unitary to the qubit pair `(a, b)`.
///
/// The local 2-bit basis is little-endian in the argument order:
/// local index = bit(a) + 2 * bit(b). This is fixed here once and probed
/// by the SWAP test below.
pub fn apply_2q(state: &mut OamState, u: &Unitary4, a: usize, b: usize) -> Result<()> {
    let n = state.qubit_count();
    check_qubit(n, a)?;
    check_qubit(n, b)?;
    if a == b {
        return Err(Error::invalid_input(format!(
            "two-qubit gate needs distinct qubits, got ({a}, {a})"
        )));
    }
    let bit_a = 1usize << (a - 1);
    let bit_b = 1usize << (b - 1);
    let m = u.0;
    let amp = state.amplitudes_mut();
    for i in 0..amp.len() {
        if i & bit_a == 0 && i & bit_b == 0 {
            let idx = [i, i | bit_a, i | bit_b, i | bit_a | bit_b];
            let v = [amp[idx[0]], amp[idx[1]], amp[idx[2]], amp[idx[3]]];
            for (row, &out_i) in idx.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (col, &vc) in v.iter().enumerate() {
                    acc += m[row][col] * vc;
                }
                amp[out_i] = acc;
            }
        }
    }
    Ok(())
}

/// Run a circuit gate by gate through the tensor applicators.
pub fn run_circuit(state: &mut OamState, circ: &CircuitIR) -> Result<()> {
    if state.qubit_count() != circ.n {
        return Err(Error::invalid_input(format!(
            "circuit is for {} qubits but the state has {}",
            circ.n,
            state.qubit_count()
        )));
    }
    let violations = circ.validate();
    if !violations.is_empty() {
        return Err(Error::invalid_input(violations.join("; ")));
    }
    for gate in &circ.gates {
        match gate {
            Gate::Cnot { control, target } => {
                apply_2q(state, &Unitary4::cnot_control_first(), *control, *target)?;
            }
            Gate::CzStd { control, target } => {
                apply_2q(state, &Unitary4::cz_std(), *control, *target)?;
            }
            Gate::CPhase {
                theta,
                control,
                target,
            } => {
                apply_2q(state, &Unitary4::cphase(*theta), *control, *target)?;
            }
            one_qubit => {
                let (u, q) = one_qubit
                    .as_one_qubit()
                    .expect("all two-qubit gates handled above");
                apply_1q(state, &u, q)?;
            }
        }
    }
    Ok(())
}

/// Global-phase-insensitive overlap `|<a|b>|`.
pub fn fidelity(a: &OamState, b: &OamState) -> Result<f64> {
    Ok(a.inner(b)?.norm())
}

/// Reference discrete Fourier transform on mode indices:
/// `amp'[j] = (1/sqrt(d)) * sum_k e^{2 pi i j k / d} amp[k]`.
///
/// Deliberately the naive O(d^2) sum so it stays independent of every
/// other code path; guarded to small registers.
pub fn dft_apply(state: &mut OamState) -> Result<()> {
    let n = state.qubit_count();
    if n.get() > MAX_DFT_QUBITS {
        return Err(Error::resource(format!(
            "dense DFT is limited to {MAX_DFT_QUBITS} qubits, got {n}"
        )));
    }
    let d = state.dim();
    let scale = 1.0 / (d as f64).sqrt();
    let base = 2.0 * std::f64::consts::PI / d as f64;
    let old = state.amplitudes().to_vec();
    let amp = state.amplitudes_mut();
    for (j, out) in amp.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &a) in old.iter().enumerate() {
            // j*k can exceed 2^53 only far beyond the qubit guard.
            let phase = base * ((j * k) % d) as f64;
            acc += Complex64::from_polar(1.0, phase) * a;
        }
        *out = acc * scale;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{apply_cz, apply_hadamard, apply_phase};
    use crate::matrix::{C_ONE, C_ZERO};
    use crate::rng::SplitMix64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn qc(n: usize) -> QubitCount {
        QubitCount::new(n).unwrap()
    }

    #[test]
    fn identity_leaves_state_unchanged() {
        let mut rng = SplitMix64::new(3);
        let s0 = OamState::random(qc(3), &mut rng);
        let mut s = s0.clone();
        apply_1q(&mut s, &Unitary2::identity(), 2).unwrap();
        assert!(s.max_amplitude_diff(&s0) < 1e-15);
    }

    #[test]
    fn h_on_first_qubit_matches_elementary_hadamard() {
        let mut rng = SplitMix64::new(4);
        let s0 = OamState::random(qc(4), &mut rng);
        let mut via_oracle = s0.clone();
        apply_1q(&mut via_oracle, &Unitary2::h(), 1).unwrap();
        let mut via_elementary = s0;
        apply_hadamard(&mut via_elementary);
        assert!(via_oracle.max_amplitude_diff(&via_elementary) < 1e-12);
    }

    #[test]
    fn x_on_qubit_two_flips_the_second_bit() {
        let n = qc(2);
        let mut s = OamState::basis(n, 0).unwrap();
        apply_1q(&mut s, &Unitary2::x(), 2).unwrap();
        assert_eq!(s.amplitudes()[2], C_ONE);
        // Exhaustive permutation check on all four basis states.
        for m in 0..4 {
            let mut s = OamState::basis(n, m).unwrap();
            apply_1q(&mut s, &Unitary2::x(), 2).unwrap();
            assert_eq!(s.amplitudes()[m ^ 2], C_ONE, "mode {m}");
        }
    }

    #[test]
    fn one_qubit_index_out_of_range() {
        let mut s = OamState::basis(qc(2), 0).unwrap();
        assert!(apply_1q(&mut s, &Unitary2::h(), 3).is_err());
        assert!(apply_1q(&mut s, &Unitary2::h(), 0).is_err());
    }

    #[test]
    fn two_qubit_identity_and_index_checks() {
        let mut s = OamState::basis(qc(3), 5).unwrap();
        let s0 = s.clone();
        apply_2q(&mut s, &Unitary4::identity(), 1, 3).unwrap();
        assert!(s.max_amplitude_diff(&s0) < 1e-15);
        assert!(apply_2q(&mut s, &Unitary4::identity(), 2, 2).is_err());
        assert!(apply_2q(&mut s, &Unitary4::identity(), 0, 1).is_err());
        assert!(apply_2q(&mut s, &Unitary4::identity(), 1, 4).is_err());
    }

    #[test]
    fn cz4_matrix_on_first_two_matches_elementary_cz() {
        let mut rng = SplitMix64::new(12);
        let s0 = OamState::random(qc(3), &mut rng);
        let mut via_oracle = s0.clone();
        apply_2q(&mut via_oracle, &Unitary4::cz4(), 1, 2).unwrap();
        let mut via_elementary = s0;
        apply_cz(&mut via_elementary).unwrap();
        assert!(via_oracle.max_amplitude_diff(&via_elementary) < 1e-12);
    }

    #[test]
    fn swap_probes_the_local_basis_order() {
        // |1> has qubit 1 set; swapping qubits 1 and 2 must give |2>.
        let n = qc(2);
        for (m, expect) in [(0usize, 0usize), (1, 2), (2, 1), (3, 3)] {
            let mut s = OamState::basis(n, m).unwrap();
            apply_2q(&mut s, &Unitary4::swap(), 1, 2).unwrap();
            assert_eq!(s.amplitudes()[expect], C_ONE, "mode {m}");
        }
    }

    #[test]
    fn phase_gate_matches_elementary_phase_on_qubit_one() {
        let theta = 1.1;
        let mut rng = SplitMix64::new(21);
        let s0 = OamState::random(qc(5), &mut rng);
        let mut via_oracle = s0.clone();
        apply_1q(&mut via_oracle, &Unitary2::phase_z(theta), 1).unwrap();
        let mut via_elementary = s0;
        apply_phase(&mut via_elementary, theta);
        assert!(via_oracle.max_amplitude_diff(&via_elementary) < 1e-12);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let circ = CircuitIR::new(qc(2));
        let mut s = OamState::basis(qc(2), 1).unwrap();
        let s0 = s.clone();
        run_circuit(&mut s, &circ).unwrap();
        assert!(s.max_amplitude_diff(&s0) < 1e-15);
    }

    #[test]
    fn bell_circuit_from_frozen_matrix_product() {
        // Independent 4x4 oracle: CNOT(1,2) * (H on qubit 1) applied to e0
        // gives (1/sqrt2, 0, 0, 1/sqrt2). Frozen here.
        let mut circ = CircuitIR::new(qc(2));
        circ.gates.push(Gate::H(1));
        circ.gates.push(Gate::Cnot {
            control: 1,
            target: 2,
        });
        let mut s = OamState::basis(qc(2), 0).unwrap();
        run_circuit(&mut s, &circ).unwrap();
        let expect = [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            C_ZERO,
            C_ZERO,
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ];
        for (a, e) in s.amplitudes().iter().zip(expect) {
            assert!((a - e).norm() < 1e-12);
        }
    }

    #[test]
    fn double_x_is_identity() {
        let mut circ = CircuitIR::new(qc(1));
        circ.gates.push(Gate::X(1));
        circ.gates.push(Gate::X(1));
        let mut s = OamState::basis(qc(1), 0).unwrap();
        run_circuit(&mut s, &circ).unwrap();
        assert_eq!(s.amplitudes()[0], C_ONE);
    }

    #[test]
    fn fidelity_examples() {
        let a = OamState::basis(qc(2), 0).unwrap();
        let b = OamState::basis(qc(2), 1).unwrap();
        assert!((fidelity(&a, &a).unwrap() - 1.0).abs() < 1e-15);
        assert!(fidelity(&a, &b).unwrap() < 1e-15);
        let mut c = a.clone();
        c.scale_phase(0.9);
        assert!((fidelity(&a, &c).unwrap() - 1.0).abs() < 1e-15);
        // Symmetry.
        let mut rng = SplitMix64::new(14);
        let x = OamState::random(qc(3), &mut rng);
        let y = OamState::random(qc(3), &mut rng);
        assert!((fidelity(&x, &y).unwrap() - fidelity(&y, &x).unwrap()).abs() < 1e-15);
        // Dimension mismatch.
        let z = OamState::basis(qc(3), 0).unwrap();
        assert!(fidelity(&a, &z).is_err());
    }

    #[test]
    fn dft_column_zero_is_uniform() {
        let n = qc(3);
        let mut s = OamState::basis(n, 0).unwrap();
        dft_apply(&mut s).unwrap();
        let expect = 1.0 / (8f64).sqrt();
        for a in s.amplitudes() {
            assert!((a.re - expect).abs() < 1e-12);
            assert!(a.im.abs() < 1e-12);
        }
        // And back: the DFT of the real uniform vector is |0>.
        dft_apply(&mut s).unwrap();
        assert!((s.amplitudes()[0] - C_ONE).norm() < 1e-12);
    }

    #[test]
    fn dft_on_one_qubit_is_hadamard() {
        let mut rng = SplitMix64::new(15);
        let s0 = OamState::random(qc(1), &mut rng);
        let mut via_dft = s0.clone();
        dft_apply(&mut via_dft).unwrap();
        let mut via_h = s0;
        apply_1q(&mut via_h, &Unitary2::h(), 1).unwrap();
        assert!(via_dft.max_amplitude_diff(&via_h) < 1e-12);
    }

    #[test]
    fn dft_preserves_norm() {
        let mut rng = SplitMix64::new(16);
        let mut s = OamState::random(qc(6), &mut rng);
        dft_apply(&mut s).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dft_guard() {
        let mut s = OamState::basis(qc(13), 0).unwrap();
        assert!(dft_apply(&mut s).is_err());
    }
}
