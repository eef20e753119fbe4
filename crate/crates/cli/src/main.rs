//! `oamc` - compile n-qubit circuits to single-photon mode operations,
//! simulate the compiled programs, verify them against the reference
//! simulator, generate demo circuits, and report op/component costs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 internal error.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

pub const EXIT_VERIFY_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "oamc", version, about = "Single-photon OAM circuit compiler and simulator")]
struct Cli {
    /// Emit a single JSON document on stdout instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    Qft,
    Ghz,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum GateSetArg {
    /// Named gates only (h x y z s t rx ry rz cnot cz cphase).
    Named,
    /// Named gates plus random explicit 2x2 unitaries.
    NamedUnitary,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalingArg {
    /// H on the middle qubit: routed 1-qubit gate.
    OneQubitWorst,
    /// CNOT between the end qubits: worst 2-qubit pair.
    TwoQubitWorst,
    /// H on qubit 1: constant baseline.
    OneQubitFront,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a circuit file to an elementary program.
    Compile {
        /// Circuit file (text format, `qubits <n>` header).
        circuit: PathBuf,
        /// Write the program here (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the compile stats JSON here.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Keep the raw emission; skip the peephole pass.
        #[arg(long)]
        no_optimize: bool,
    },
    /// Run an elementary program on an initial state and list amplitudes.
    Simulate {
        /// Program file (text format, `n <qubits>` header).
        program: PathBuf,
        /// Start from this basis mode.
        #[arg(long, default_value_t = 0)]
        initial_mode: usize,
        /// Start from an amplitude file (`<mode> <re> <im>` per line).
        #[arg(long, conflicts_with = "initial_mode")]
        state_file: Option<PathBuf>,
        /// Hide modes with probability below this in human output.
        #[arg(long, default_value_t = 1e-12)]
        threshold: f64,
    },
    /// Compile a circuit and compare against the reference simulator on
    /// random states; exits 1 when the worst fidelity misses the bar.
    Verify {
        circuit: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Seed for the random input states.
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        #[arg(long)]
        no_optimize: bool,
        /// Drop this op (0-based) from the compiled program first - a
        /// deliberate corruption for negative controls.
        #[arg(long)]
        skip_op: Option<usize>,
    },
    /// Generate a built-in circuit.
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        /// Register size.
        #[arg(short = 'n', long = "qubits")]
        qubits: usize,
        /// Gate count for random circuits.
        #[arg(long, default_value_t = 20)]
        depth: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GateSetArg::Named)]
        gate_set: GateSetArg,
        /// Write the circuit here (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report op counts and the optical bill of materials, or scaling fits.
    Cost {
        /// Elementary program file to report on.
        #[arg(long, conflicts_with_all = ["circuit", "scaling"])]
        program: Option<PathBuf>,
        /// Circuit file: compiled (optimized) first, then reported on.
        #[arg(long, conflicts_with = "scaling")]
        circuit: Option<PathBuf>,
        /// Component table file (defaults to built-in estimates; the
        /// OAMC_COMPONENTS environment variable also works).
        #[arg(long)]
        components: Option<PathBuf>,
        /// Compile-only scaling measurement instead of a single report.
        #[arg(long, value_enum)]
        scaling: Option<ScalingArg>,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Compile {
            circuit,
            output,
            stats,
            no_optimize,
        } => commands::compile(&circuit, output.as_deref(), stats.as_deref(), no_optimize, json),
        Command::Simulate {
            program,
            initial_mode,
            state_file,
            threshold,
        } => commands::simulate(&program, initial_mode, state_file.as_deref(), threshold, json),
        Command::Verify {
            circuit,
            trials,
            tolerance,
            seed,
            no_optimize,
            skip_op,
        } => commands::verify(&circuit, trials, tolerance, seed, no_optimize, skip_op, json),
        Command::Generate {
            kind,
            qubits,
            depth,
            seed,
            gate_set,
            output,
        } => {
            let gate_set = match gate_set {
                GateSetArg::Named => oamc_core::generators::GateSet::Named,
                GateSetArg::NamedUnitary => oamc_core::generators::GateSet::NamedAndUnitary,
            };
            let kind = match kind {
                GenerateKind::Qft => commands::Generator::Qft,
                GenerateKind::Ghz => commands::Generator::Ghz,
                GenerateKind::Random => commands::Generator::Random { depth, seed, gate_set },
            };
            commands::generate(kind, qubits, output.as_deref())
        }
        Command::Cost {
            program,
            circuit,
            components,
            scaling,
            n_min,
            n_max,
        } => {
            let scaling = scaling.map(|s| match s {
                ScalingArg::OneQubitWorst => oamc_core::costmodel::ScalingCase::OneQubitWorst,
                ScalingArg::TwoQubitWorst => oamc_core::costmodel::ScalingCase::TwoQubitWorst,
                ScalingArg::OneQubitFront => oamc_core::costmodel::ScalingCase::OneQubitFront,
            });
            commands::cost(
                program.as_deref(),
                circuit.as_deref(),
                components.as_deref(),
                scaling,
                n_min,
                n_max,
                json,
            )
        }
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
