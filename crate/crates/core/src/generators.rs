//! Built-in circuit generators: QFT, GHZ, and seeded random circuits.

use crate::circuit::{CircuitIR, Gate};
use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use crate::matrix::Unitary2;
use crate::rng::SplitMix64;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Compile-only circuits may be generated up to this register size.
pub const MAX_GENERATE_QUBITS: usize = 16;

/// Quantum Fourier transform over the mode index, bit-reversal swaps
/// included, so that running the circuit equals the dense DFT reference
/// up to global phase.
///
/// With qubit 1 as the least-significant index bit the phase ladder runs
/// from the top qubit down: for q = n..1, H on q then controlled phases
/// `cphase(2 pi / 2^k)` with control `q - k + 1`. The final reversal is a
/// swap network, each swap lowered to three CNOTs.
pub fn qft_circuit(n: QubitCount) -> Result<CircuitIR> {
    if n.get() > MAX_GENERATE_QUBITS {
        return Err(Error::resource(format!(
            "QFT generation is limited to {MAX_GENERATE_QUBITS} qubits, got {n}"
        )));
    }
    let nn = n.get();
    let mut circ = CircuitIR::new(n);
    for q in (1..=nn).rev() {
        circ.push(Gate::H(q));
        for k in 2..=q {
            circ.push(Gate::CPhase {
                theta: 2.0 * PI / (1u64 << k) as f64,
                control: q - k + 1,
                target: q,
            });
        }
    }
    for q in 1..=nn / 2 {
        push_swap(&mut circ, q, nn + 1 - q);
    }
    Ok(circ)
}

/// SWAP as the three-CNOT ladder (the IR has no native swap).
fn push_swap(circ: &mut CircuitIR, a: usize, b: usize) {
    circ.push(Gate::Cnot {
        control: a,
        target: b,
    });
    circ.push(Gate::Cnot {
        control: b,
        target: a,
    });
    circ.push(Gate::Cnot {
        control: a,
        target: b,
    });
}

/// H on qubit 1 followed by a CNOT chain; maps |0...0> to
/// `(|0> + |d-1>) / sqrt(2)`.
pub fn ghz_circuit(n: QubitCount) -> Result<CircuitIR> {
    if n.get() < 2 {
        return Err(Error::invalid_input("GHZ needs at least 2 qubits"));
    }
    if n.get() > MAX_GENERATE_QUBITS {
        return Err(Error::resource(format!(
            "GHZ generation is limited to {MAX_GENERATE_QUBITS} qubits, got {n}"
        )));
    }
    let mut circ = CircuitIR::new(n);
    circ.push(Gate::H(1));
    for q in 1..n.get() {
        circ.push(Gate::Cnot {
            control: q,
            target: q + 1,
        });
    }
    Ok(circ)
}

/// Which gates a random circuit draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateSet {
    /// The named sugar set: H X Y Z S T RX RY RZ plus CNOT, CZ, CPHASE.
    Named,
    /// The named set plus Haar-random explicit 2x2 unitaries.
    NamedAndUnitary,
}

/// Deterministic random-circuit recipe; the same spec always produces the
/// same circuit (SplitMix64 stream, fixed draw order).
#[derive(Clone, Copy, Debug)]
pub struct RandomSpec {
    pub n: QubitCount,
    pub depth: usize,
    pub seed: u64,
    pub gate_set: GateSet,
}

/// Haar-like random 2x2 unitary from four uniform draws.
pub fn random_unitary2(rng: &mut SplitMix64) -> Unitary2 {
    let alpha = rng.next_angle();
    let psi = rng.next_angle();
    let chi = rng.next_angle();
    let theta = rng.next_f64().sqrt().asin();
    let (c, s) = (theta.cos(), theta.sin());
    Unitary2([
        [
            Complex64::from_polar(c, psi),
            Complex64::from_polar(s, chi),
        ],
        [
            -Complex64::from_polar(s, -chi),
            Complex64::from_polar(c, -psi),
        ],
    ])
    .scale(Complex64::from_polar(1.0, alpha))
}

fn draw_qubit(rng: &mut SplitMix64, n: usize) -> usize {
    rng.next_below(n as u64) as usize + 1
}

fn draw_distinct_pair(rng: &mut SplitMix64, n: usize) -> (usize, usize) {
    let a = draw_qubit(rng, n);
    loop {
        let b = draw_qubit(rng, n);
        if b != a {
            return (a, b);
        }
    }
}

/// Generate a random circuit. One-qubit register sizes only draw
/// 1-qubit gates.
pub fn random_circuit(spec: &RandomSpec) -> Result<CircuitIR> {
    if spec.n.get() > MAX_GENERATE_QUBITS {
        return Err(Error::resource(format!(
            "random generation is limited to {MAX_GENERATE_QUBITS} qubits, got {}",
            spec.n
        )));
    }
    let n = spec.n.get();
    let mut rng = SplitMix64::new(spec.seed);
    let mut circ = CircuitIR::new(spec.n);
    // Gate menu: 0..9 are the named 1q gates, 9..12 the 2q gates, 12 the
    // explicit random unitary.
    let named_1q = 9u64;
    let menu = match (spec.gate_set, n >= 2) {
        (GateSet::Named, true) => 12,
        (GateSet::Named, false) => named_1q,
        (GateSet::NamedAndUnitary, true) => 13,
        (GateSet::NamedAndUnitary, false) => named_1q + 1,
    };
    for _ in 0..spec.depth {
        let mut pick = rng.next_below(menu);
        if n < 2 && pick >= named_1q {
            pick = 12; // the only non-named option for n = 1 is the unitary
        }
        let gate = match pick {
            0 => Gate::H(draw_qubit(&mut rng, n)),
            1 => Gate::X(draw_qubit(&mut rng, n)),
            2 => Gate::Y(draw_qubit(&mut rng, n)),
            3 => Gate::Z(draw_qubit(&mut rng, n)),
            4 => Gate::S(draw_qubit(&mut rng, n)),
            5 => Gate::T(draw_qubit(&mut rng, n)),
            6 => Gate::Rx(rng.next_angle(), draw_qubit(&mut rng, n)),
            7 => Gate::Ry(rng.next_angle(), draw_qubit(&mut rng, n)),
            8 => Gate::Rz(rng.next_angle(), draw_qubit(&mut rng, n)),
            9 => {
                let (control, target) = draw_distinct_pair(&mut rng, n);
                Gate::Cnot { control, target }
            }
            10 => {
                let (control, target) = draw_distinct_pair(&mut rng, n);
                Gate::CzStd { control, target }
            }
            11 => {
                let theta = rng.next_angle();
                let (control, target) = draw_distinct_pair(&mut rng, n);
                Gate::CPhase {
                    theta,
                    control,
                    target,
                }
            }
            _ => Gate::Unitary(random_unitary2(&mut rng), draw_qubit(&mut rng, n)),
        };
        circ.push(gate);
    }
    Ok(circ)
}
