//! Subcommand implementations.

use crate::{EXIT_INPUT, EXIT_INTERNAL, EXIT_VERIFY_FAIL};
use oamc_core::circuit::CircuitIR;
use oamc_core::compiler::{compile_circuit, optimize, CompileStats};
use oamc_core::costmodel::{
    cost_report, scaling_report, ComponentTable, CostReport, ScalingCase,
};
use oamc_core::elementary::{apply_program, ElementaryProgram};
use oamc_core::encoding::QubitCount;
use oamc_core::generators::{ghz_circuit, qft_circuit, random_circuit, GateSet, RandomSpec};
use oamc_core::oracle::{fidelity, run_circuit};
use oamc_core::rng::SplitMix64;
use oamc_core::state::OamState;
use oamc_core::{Complex64, Error as CoreError};
use serde_json::json;
use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Internal(msg) => f.write_str(msg),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Internal(format!("serialization failed: {err}"))
    }
}

type CliResult = Result<ExitCode, CliError>;

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn load_circuit(path: &Path) -> Result<CircuitIR, CliError> {
    let circ = CircuitIR::parse_text(&read_file(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let violations = circ.validate();
    if !violations.is_empty() {
        return Err(CliError::Input(format!(
            "{}: invalid circuit: {}",
            path.display(),
            violations.join("; ")
        )));
    }
    Ok(circ)
}

fn load_program(path: &Path) -> Result<ElementaryProgram, CliError> {
    let text = read_file(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        ElementaryProgram::from_json(&text)
    } else {
        ElementaryProgram::parse_text(&text)
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_component_table(path: Option<&Path>) -> Result<ComponentTable, CliError> {
    let from_env = std::env::var_os("OAMC_COMPONENTS").map(std::path::PathBuf::from);
    let chosen = path.map(Path::to_path_buf).or(from_env);
    match chosen {
        Some(p) => ComponentTable::parse_text(&read_file(&p)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => Ok(ComponentTable::defaults()),
    }
}

fn stats_json(stats: &CompileStats) -> serde_json::Value {
    serde_json::to_value(stats).expect("stats serialize")
}

pub fn compile(
    circuit_path: &Path,
    output: Option<&Path>,
    stats_path: Option<&Path>,
    no_optimize: bool,
    json: bool,
) -> CliResult {
    let circ = load_circuit(circuit_path)?;
    let (raw, mut stats) = compile_circuit(&circ)?;
    let program = if no_optimize { raw } else { optimize(&raw) };
    stats.totals = oamc_core::costmodel::count_ops(&program);

    let text = program.to_text();
    if let Some(path) = output {
        write_file(path, &text)?;
    }
    if let Some(path) = stats_path {
        write_file(path, &serde_json::to_string_pretty(&stats_json(&stats))?)?;
    }
    if json {
        let doc = json!({
            "program": serde_json::from_str::<serde_json::Value>(&program.to_json())?,
            "stats": stats_json(&stats),
            "optimized": !no_optimize,
        });
        println!("{doc}");
    } else {
        if output.is_none() {
            print!("{text}");
        }
        eprintln!(
            "compiled {} gates -> {} ops (PHASE {}, H {}, CPERM {}, CZ {}), global phase {}",
            circ.len(),
            stats.totals.total(),
            stats.totals.phase,
            stats.totals.h,
            stats.totals.cperm,
            stats.totals.cz,
            stats.global_phase,
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn load_initial_state(
    n: QubitCount,
    initial_mode: usize,
    state_file: Option<&Path>,
) -> Result<OamState, CliError> {
    match state_file {
        None => Ok(OamState::basis(n, initial_mode)?),
        Some(path) => {
            let mut amp = vec![Complex64::new(0.0, 0.0); n.dim()];
            for (idx, raw) in read_file(path)?.lines().enumerate() {
                let line = raw.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 3 {
                    return Err(CliError::Input(format!(
                        "{}:{}: expected `<mode> <re> <im>`",
                        path.display(),
                        idx + 1
                    )));
                }
                let mode: usize = tokens[0].parse().map_err(|_| {
                    CliError::Input(format!("{}:{}: bad mode index", path.display(), idx + 1))
                })?;
                if mode >= n.dim() {
                    return Err(CliError::Input(format!(
                        "{}:{}: mode {mode} out of range for {} modes",
                        path.display(),
                        idx + 1,
                        n.dim()
                    )));
                }
                let re: f64 = tokens[1].parse().map_err(|_| {
                    CliError::Input(format!("{}:{}: bad real part", path.display(), idx + 1))
                })?;
                let im: f64 = tokens[2].parse().map_err(|_| {
                    CliError::Input(format!("{}:{}: bad imaginary part", path.display(), idx + 1))
                })?;
                amp[mode] = Complex64::new(re, im);
            }
            Ok(OamState::from_amplitudes(n, amp)?)
        }
    }
}

pub fn simulate(
    program_path: &Path,
    initial_mode: usize,
    state_file: Option<&Path>,
    threshold: f64,
    json: bool,
) -> CliResult {
    let program = load_program(program_path)?;
    let mut state = load_initial_state(program.n, initial_mode, state_file)?;
    apply_program(&mut state, &program)?;

    if json {
        let amplitudes: Vec<[f64; 2]> = state.amplitudes().iter().map(|a| [a.re, a.im]).collect();
        let modes: Vec<serde_json::Value> = state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() >= threshold)
            .map(|(m, a)| json!({"mode": m, "probability": a.norm_sqr(), "re": a.re, "im": a.im}))
            .collect();
        let doc = json!({
            "n": program.n.get(),
            "ops": program.len(),
            "norm": state.norm(),
            "amplitudes": amplitudes,
            "modes": modes,
        });
        println!("{doc}");
    } else {
        println!("n = {} ({} modes), {} ops", program.n, program.n.dim(), program.len());
        for (m, a) in state.amplitudes().iter().enumerate() {
            let p = a.norm_sqr();
            if p >= threshold {
                println!("mode {m}  p={p}  amp={}{}{}i", a.re, if a.im < 0.0 { "" } else { "+" }, a.im);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(
    circuit_path: &Path,
    trials: usize,
    tolerance: f64,
    seed: u64,
    no_optimize: bool,
    skip_op: Option<usize>,
    json: bool,
) -> CliResult {
    let circ = load_circuit(circuit_path)?;
    let (raw, _) = compile_circuit(&circ)?;
    let mut program = if no_optimize { raw } else { optimize(&raw) };
    if let Some(k) = skip_op {
        if k >= program.len() {
            return Err(CliError::Input(format!(
                "--skip-op {k} out of range: program has {} ops",
                program.len()
            )));
        }
        program.ops.remove(k);
    }

    let mut rng = SplitMix64::new(seed);
    let mut min_fidelity: f64 = 1.0;
    for _ in 0..trials.max(1) {
        let s0 = OamState::random(circ.n, &mut rng);
        let mut compiled = s0.clone();
        apply_program(&mut compiled, &program)?;
        let mut reference = s0;
        run_circuit(&mut reference, &circ)?;
        min_fidelity = min_fidelity.min(fidelity(&compiled, &reference)?);
    }
    let pass = min_fidelity >= 1.0 - tolerance;

    if json {
        let doc = json!({
            "trials": trials.max(1),
            "tolerance": tolerance,
            "min_fidelity": min_fidelity,
            "ops": program.len(),
            "pass": pass,
        });
        println!("{doc}");
    } else {
        println!(
            "verify: {} trials, min fidelity {min_fidelity}, tolerance {tolerance}: {}",
            trials.max(1),
            if pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    })
}

pub enum Generator {
    Qft,
    Ghz,
    Random {
        depth: usize,
        seed: u64,
        gate_set: GateSet,
    },
}

pub fn generate(kind: Generator, qubits: usize, output: Option<&Path>) -> CliResult {
    let n = QubitCount::new(qubits)?;
    let circ = match kind {
        Generator::Qft => qft_circuit(n)?,
        Generator::Ghz => ghz_circuit(n)?,
        Generator::Random { depth, seed, gate_set } => random_circuit(&RandomSpec {
            n,
            depth,
            seed,
            gate_set,
        })?,
    };
    let text = circ.to_text();
    match output {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_cost_report(report: &CostReport, json: bool) -> Result<(), CliError> {
    if json {
        println!("{}", serde_json::to_value(report)?);
        return Ok(());
    }
    let t = &report.totals;
    println!(
        "ops: total {} (PHASE {}, H {}, CPERM {}, CZ {})",
        t.total(),
        t.phase,
        t.h,
        t.cperm,
        t.cz
    );
    println!("bill of materials (configured estimates, not normative):");
    if report.bill_of_materials.is_empty() {
        println!("  (empty)");
    }
    for (component, count) in &report.bill_of_materials {
        println!("  {:<22} {count}", component.name());
    }
    if let Some(scaling) = &report.scaling {
        println!("scaling case: {}", scaling.case);
        println!("  n    total  phase      h  cperm     cz");
        for s in &scaling.samples {
            println!(
                "  {:<4} {:<6} {:<6} {:<6} {:<6} {:<6}",
                s.n, s.total, s.counts.phase, s.counts.h, s.counts.cperm, s.counts.cz
            );
        }
        println!(
            "  total-op fit: exponent {} (rms residual {})",
            scaling.total_fit.exponent, scaling.total_fit.residual
        );
        match &scaling.cperm_fit {
            Some(fit) => println!(
                "  cperm-op fit: exponent {} (rms residual {})",
                fit.exponent, fit.residual
            ),
            None => println!("  cperm-op fit: n/a (some samples use no cyclic permutation)"),
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cost(
    program: Option<&Path>,
    circuit: Option<&Path>,
    components: Option<&Path>,
    scaling: Option<ScalingCase>,
    n_min: usize,
    n_max: usize,
    json: bool,
) -> CliResult {
    if let Some(case) = scaling {
        let report = scaling_report(case, n_min, n_max)?;
        print_cost_report(&report, json)?;
        return Ok(ExitCode::SUCCESS);
    }
    let table = load_component_table(components)?;
    let prog = match (program, circuit) {
        (Some(path), None) => load_program(path)?,
        (None, Some(path)) => {
            let circ = load_circuit(path)?;
            let (raw, _) = compile_circuit(&circ)?;
            optimize(&raw)
        }
        _ => {
            return Err(CliError::Input(
                "cost needs exactly one of --program, --circuit, or --scaling".into(),
            ))
        }
    };
    let report = cost_report(&prog, &table)?;
    print_cost_report(&report, json)?;
    Ok(ExitCode::SUCCESS)
}
