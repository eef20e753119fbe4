//! Compiler and simulator for n-qubit circuits carried by a single photon.
//!
//! An n-qubit register is encoded in the first `2^n` orbital-angular-
//! momentum modes of one photon. Four elementary operations on the mode
//! amplitudes - a parity phase, a pairwise Hadamard butterfly, a cyclic
//! permutation of the qubit labels, and a mode-divisible-by-4 sign flip -
//! generate universal computation. This crate lowers arbitrary circuits
//! to words over those four generators, executes the words on a dense
//! amplitude vector, verifies them against an independent tensor-product
//! simulator, and measures the polynomial op-count overhead of the
//! lowering.

pub mod circuit;
pub mod compiler;
pub mod costmodel;
pub mod elementary;
pub mod encoding;
pub mod error;
pub mod generators;
pub mod matrix;
pub mod oracle;
pub mod rng;
pub mod state;

pub use num_complex::Complex64;

pub use circuit::{CircuitIR, Gate};
pub use compiler::{compile_circuit, optimize, CompileStats, EulerAngles};
pub use costmodel::{ComponentTable, CostReport};
pub use elementary::{ElementaryOp, ElementaryProgram, OpCounts, OpKind};
pub use encoding::{bits_of_mode, mode_of_bits, BitString, QubitCount};
pub use error::{Error, Result};
pub use matrix::{Unitary2, Unitary4};
pub use oracle::fidelity;
pub use rng::SplitMix64;
pub use state::OamState;
