//! Shared fixtures for the benchmark targets.

use oamc_core::encoding::QubitCount;
use oamc_core::generators::{random_circuit, GateSet, RandomSpec};
use oamc_core::rng::SplitMix64;
use oamc_core::state::OamState;
use oamc_core::CircuitIR;

pub fn qc(n: usize) -> QubitCount {
    QubitCount::new(n).unwrap()
}

pub fn seeded_state(n: usize, seed: u64) -> OamState {
    let mut rng = SplitMix64::new(seed);
    OamState::random(qc(n), &mut rng)
}

pub fn fuzz_circuit(n: usize, depth: usize, seed: u64) -> CircuitIR {
    random_circuit(&RandomSpec {
        n: qc(n),
        depth,
        seed,
        gate_set: GateSet::NamedAndUnitary,
    })
    .unwrap()
}
