//! Qubit / mode-index encoding.
//!
//! An n-qubit register lives on a single photon as a superposition of the
//! first `d = 2^n` orbital-angular-momentum modes. The identification
//! between a bit string `c_1 c_2 ... c_n` (qubit 1 first) and a mode index
//! `m` is fixed once, here, for the entire crate:
//!
//! ```text
//! m = sum over k of c_k * 2^(k-1)        (qubit 1 = least-significant bit)
//! ```
//!
//! This is the convention anchor for everything else. Note the parity law
//! it implies: `m` is even exactly when qubit 1 is 0, which is what makes
//! the phase gate "multiply even modes by e^{i theta}" the same operation
//! as `e^{i theta Z}` on qubit 1. Qubit labels are 1-indexed; mode indices
//! are 0-indexed.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Number of qubits, with the derived mode count `d = 2^n`.
///
/// `n >= 1` always holds. Compile-only paths work to at least n = 16,
/// simulation to at least n = 12; the hard cap below only exists to keep
/// `1 << n` well inside `usize` and state allocations sane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct QubitCount(usize);

/// Largest register the crate will represent at all (2^24 amplitudes).
pub const MAX_QUBITS: usize = 24;

impl QubitCount {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid_input("qubit count must be at least 1"));
        }
        if n > MAX_QUBITS {
            return Err(Error::resource(format!(
                "qubit count {n} exceeds the supported maximum {MAX_QUBITS}"
            )));
        }
        Ok(QubitCount(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of OAM modes, `d = 2^n`.
    pub fn dim(self) -> usize {
        1 << self.0
    }

    /// True when `q` is a valid 1-indexed qubit label.
    pub fn contains_qubit(self, q: usize) -> bool {
        (1..=self.0).contains(&q)
    }
}

impl TryFrom<usize> for QubitCount {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        QubitCount::new(n)
    }
}

impl From<QubitCount> for usize {
    fn from(n: QubitCount) -> usize {
        n.0
    }
}

impl std::fmt::Display for QubitCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bit string `c_1 ... c_n`, qubit 1 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    /// Build from 0/1 integers; anything else is rejected.
    pub fn from_ints(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::invalid_input(format!("bit value {other} is not 0 or 1"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(BitString)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of qubit `q` (1-indexed).
    pub fn qubit(&self, q: usize) -> bool {
        self.0[q - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl std::fmt::Display for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Mode index of a bit string: `m = sum c_k 2^(k-1)`.
pub fn mode_of_bits(c: &BitString, n: QubitCount) -> Result<usize> {
    if c.len() != n.get() {
        return Err(Error::invalid_input(format!(
            "bit string has length {}, expected {}",
            c.len(),
            n.get()
        )));
    }
    let mut m = 0usize;
    for (k, &bit) in c.bits().iter().enumerate() {
        if bit {
            m |= 1 << k;
        }
    }
    Ok(m)
}

/// Bit string of a mode index; inverse of [`mode_of_bits`].
pub fn bits_of_mode(m: usize, n: QubitCount) -> Result<BitString> {
    if m >= n.dim() {
        return Err(Error::invalid_input(format!(
            "mode index {m} out of range for {} modes",
            n.dim()
        )));
    }
    Ok(BitString((0..n.get()).map(|k| (m >> k) & 1 == 1).collect()))
}
