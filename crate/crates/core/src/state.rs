//! Dense state vector over the `d = 2^n` OAM modes.

use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use num_complex::Complex64;

/// How far `from_amplitudes` lets the squared norm stray from 1.
const NORM_TOLERANCE: f64 = 1e-6;

/// The photon's quantum state: one complex amplitude per OAM mode.
///
/// Operations mutate the vector in place; a state must not be mutated from
/// several threads at once, but moving it across threads is fine.
#[derive(Clone, Debug)]
pub struct OamState {
    n: QubitCount,
    amp: Vec<Complex64>,
}

impl OamState {
    /// Basis state `|mode>`.
    pub fn basis(n: QubitCount, mode: usize) -> Result<Self> {
        if mode >= n.dim() {
            return Err(Error::invalid_input(format!(
                "mode {mode} out of range for {} modes",
                n.dim()
            )));
        }
        let mut amp = vec![Complex64::new(0.0, 0.0); n.dim()];
        amp[mode] = Complex64::new(1.0, 0.0);
        Ok(OamState { n, amp })
    }

    /// Build from an explicit amplitude vector; must have length `2^n` and
    /// be normalized to within 1e-6.
    pub fn from_amplitudes(n: QubitCount, amp: Vec<Complex64>) -> Result<Self> {
        if amp.len() != n.dim() {
            return Err(Error::invalid_input(format!(
                "amplitude vector has length {}, expected {}",
                amp.len(),
                n.dim()
            )));
        }
        let norm_sq: f64 = amp.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::invalid_input(format!(
                "state is not normalized (norm = {})",
                norm_sq.sqrt()
            )));
        }
        Ok(OamState { n, amp })
    }

    /// Haar-like random state: i.i.d. complex Gaussian amplitudes, normalized.
    pub fn random(n: QubitCount, rng: &mut SplitMix64) -> Self {
        let mut amp = Vec::with_capacity(n.dim());
        for _ in 0..n.dim() {
            let (re, im) = rng.next_gaussian_pair();
            amp.push(Complex64::new(re, im));
        }
        let norm: f64 = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amp {
            *a /= norm;
        }
        OamState { n, amp }
    }

    pub fn qubit_count(&self) -> QubitCount {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amp.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amp
    }

    /// Replace the buffer with another of the same length (used by the
    /// cyclic permutation, whose scratch buffer becomes the new state).
    pub(crate) fn replace_amplitudes(&mut self, mut new_amp: Vec<Complex64>) {
        debug_assert_eq!(new_amp.len(), self.amp.len());
        std::mem::swap(&mut self.amp, &mut new_amp);
    }

    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &OamState) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::invalid_input(format!(
                "state dimension mismatch: {} vs {} qubits",
                self.n, other.n
            )));
        }
        Ok(self
            .amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest entrywise amplitude difference to another state.
    pub fn max_amplitude_diff(&self, other: &OamState) -> f64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Multiply every amplitude by `e^{i phi}`.
    pub fn scale_phase(&mut self, phi: f64) {
        let factor = Complex64::from_polar(1.0, phi);
        for a in &mut self.amp {
            *a *= factor;
        }
    }
}
