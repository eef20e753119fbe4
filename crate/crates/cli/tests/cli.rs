//! End-to-end tests running the `oamc` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn oamc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oamc"))
}

fn run(args: &[&str]) -> Output {
    oamc().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("oamc-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        TempDir(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn compile_bell_writes_program_and_matching_stats() {
    let dir = TempDir::new("bell");
    let circuit = dir.write("bell.qc", "qubits 2\nh 1\ncnot 1 2\n");
    let program = dir.path("bell.ops");
    let stats = dir.path("bell.stats.json");
    let out = run(&[
        "compile",
        circuit.to_str().unwrap(),
        "-o",
        program.to_str().unwrap(),
        "--stats",
        stats.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let program_text = read(&program);
    assert!(program_text.starts_with("n 2\n"));
    let stats: serde_json::Value = serde_json::from_str(&read(&stats)).unwrap();
    let totals = &stats["totals"];
    let mut counted = serde_json::Map::new();
    for line in program_text.lines().skip(1) {
        let kind = line.split_whitespace().next().unwrap().to_string();
        *counted.entry(kind).or_insert(serde_json::json!(0)) =
            serde_json::json!(counted.get(line.split_whitespace().next().unwrap()).and_then(|v| v.as_u64()).unwrap_or(0) + 1);
    }
    assert_eq!(
        totals["phase"].as_u64().unwrap(),
        counted.get("PHASE").and_then(|v| v.as_u64()).unwrap_or(0)
    );
    assert_eq!(
        totals["h"].as_u64().unwrap(),
        counted.get("H").and_then(|v| v.as_u64()).unwrap_or(0)
    );
    assert_eq!(
        totals["cperm"].as_u64().unwrap(),
        counted.get("CPERM").and_then(|v| v.as_u64()).unwrap_or(0)
    );
    assert_eq!(
        totals["cz"].as_u64().unwrap(),
        counted.get("CZ").and_then(|v| v.as_u64()).unwrap_or(0)
    );
    assert_eq!(stats["per_gate_costs"].as_array().unwrap().len(), 2);
}

#[test]
fn compile_malformed_gate_line_exits_2_and_names_line() {
    let dir = TempDir::new("badline");
    let circuit = dir.write("bad.qc", "qubits 2\nh\n");
    let out = run(&["compile", circuit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn compile_zero_qubits_exits_2() {
    let dir = TempDir::new("zeroq");
    let circuit = dir.write("zero.qc", "qubits 0\n");
    let out = run(&["compile", circuit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at least 1"), "{}", stderr(&out));
}

#[test]
fn compile_missing_file_exits_2() {
    let out = run(&["compile", "/nonexistent/path.qc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_hadamard_splits_mode_zero() {
    let dir = TempDir::new("simh");
    let program = dir.write("h.ops", "n 1\nH\n");
    let out = run(&["simulate", program.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mode 0"), "{text}");
    assert!(text.contains("mode 1"), "{text}");
    for line in text.lines().filter(|l| l.starts_with("mode")) {
        assert!(line.contains("p=0.5"), "{line}");
    }
}

#[test]
fn simulate_empty_program_keeps_initial_mode() {
    let dir = TempDir::new("simempty");
    let program = dir.write("id.ops", "n 3\n");
    let out = run(&[
        "simulate",
        program.to_str().unwrap(),
        "--initial-mode",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mode_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("mode")).collect();
    assert_eq!(mode_lines.len(), 1);
    assert!(mode_lines[0].starts_with("mode 5"));
    assert!(mode_lines[0].contains("p=1"));
}

#[test]
fn simulate_compiled_ghz_gives_extreme_modes() {
    let dir = TempDir::new("simghz");
    let circuit = dir.path("ghz.qc");
    let program = dir.path("ghz.ops");
    assert!(run(&[
        "generate",
        "ghz",
        "-n",
        "3",
        "-o",
        circuit.to_str().unwrap()
    ])
    .status
    .success());
    assert!(run(&[
        "compile",
        circuit.to_str().unwrap(),
        "-o",
        program.to_str().unwrap()
    ])
    .status
    .success());
    let out = run(&["simulate", program.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let modes = doc["modes"].as_array().unwrap();
    assert_eq!(modes.len(), 2);
    assert_eq!(modes[0]["mode"], 0);
    assert_eq!(modes[1]["mode"], 7);
    for m in modes {
        assert!((m["probability"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    }
    assert_eq!(doc["amplitudes"].as_array().unwrap().len(), 8);
}

#[test]
fn simulate_accepts_state_file() {
    let dir = TempDir::new("simstate");
    let program = dir.write("id.ops", "n 2\n");
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let state = dir.write("in.state", &format!("0 {s} 0\n3 0 {s}\n"));
    let out = run(&[
        "simulate",
        program.to_str().unwrap(),
        "--state-file",
        state.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["modes"].as_array().unwrap().len(), 2);

    let bad = dir.write("bad.state", "0 0.9 0\n");
    let out = run(&[
        "simulate",
        program.to_str().unwrap(),
        "--state-file",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "unnormalized state must be rejected");
}

#[test]
fn verify_qft4_passes_at_default_tolerance() {
    let dir = TempDir::new("vqft");
    let circuit = dir.path("qft4.qc");
    assert!(run(&[
        "generate",
        "qft",
        "-n",
        "4",
        "-o",
        circuit.to_str().unwrap()
    ])
    .status
    .success());
    let out = run(&["verify", circuit.to_str().unwrap(), "--trials", "20", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], true);
    assert!(doc["min_fidelity"].as_f64().unwrap() >= 1.0 - 1e-9);
}

#[test]
fn verify_random_circuit_passes() {
    let dir = TempDir::new("vrand");
    let circuit = dir.path("rand.qc");
    assert!(run(&[
        "generate",
        "random",
        "-n",
        "5",
        "--depth",
        "25",
        "--seed",
        "7",
        "-o",
        circuit.to_str().unwrap()
    ])
    .status
    .success());
    for extra in [&[][..], &["--no-optimize"][..]] {
        let mut args = vec!["verify", circuit.to_str().unwrap(), "--trials", "10"];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert!(out.status.success(), "{:?}: {}", extra, stderr(&out));
    }
}

#[test]
fn verify_corrupted_program_fails_with_exit_1() {
    let dir = TempDir::new("vneg");
    let circuit = dir.path("ghz.qc");
    assert!(run(&[
        "generate",
        "ghz",
        "-n",
        "2",
        "-o",
        circuit.to_str().unwrap()
    ])
    .status
    .success());
    let out = run(&[
        "verify",
        circuit.to_str().unwrap(),
        "--trials",
        "5",
        "--skip-op",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn generate_qft1_is_single_h_line() {
    let out = run(&["generate", "qft", "-n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "qubits 1\nh 1\n");
}

#[test]
fn generate_is_deterministic_per_seed() {
    let a = run(&["generate", "random", "-n", "4", "--depth", "30", "--seed", "42"]);
    let b = run(&["generate", "random", "-n", "4", "--depth", "30", "--seed", "42"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["generate", "random", "-n", "4", "--depth", "30", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn generate_ghz3_has_one_h_two_cnots() {
    let out = run(&["generate", "ghz", "-n", "3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("h ")).count(), 1);
    assert_eq!(text.lines().filter(|l| l.starts_with("cnot ")).count(), 2);
}

#[test]
fn cost_empty_program_is_all_zero() {
    let dir = TempDir::new("costempty");
    let program = dir.write("empty.ops", "n 2\n");
    let out = run(&["cost", "--program", program.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["totals"]["phase"], 0);
    assert_eq!(doc["totals"]["h"], 0);
    assert_eq!(doc["totals"]["cperm"], 0);
    assert_eq!(doc["totals"]["cz"], 0);
}

#[test]
fn cost_totals_match_compile_stats() {
    let dir = TempDir::new("costbell");
    let circuit = dir.write("bell.qc", "qubits 2\nh 1\ncnot 1 2\n");
    let program = dir.path("bell.ops");
    let stats_path = dir.path("bell.stats.json");
    assert!(run(&[
        "compile",
        circuit.to_str().unwrap(),
        "-o",
        program.to_str().unwrap(),
        "--stats",
        stats_path.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&["cost", "--program", program.to_str().unwrap(), "--json"]);
    let cost: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let stats: serde_json::Value = serde_json::from_str(&read(&stats_path)).unwrap();
    assert_eq!(cost["totals"], stats["totals"]);
}

#[test]
fn cost_scaling_two_qubit_worst_fits_quadratic_window() {
    let out = run(&[
        "cost",
        "--scaling",
        "two-qubit-worst",
        "--n-min",
        "4",
        "--n-max",
        "16",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let exponent = doc["scaling"]["total_fit"]["exponent"].as_f64().unwrap();
    assert!((1.5..=2.2).contains(&exponent), "exponent {exponent}");
}

#[test]
fn cost_custom_component_table() {
    let dir = TempDir::new("costtable");
    let table = dir.write(
        "components.tab",
        "PHASE phase_plate 1\nH bs 7\nCPERM mode_sorter 2\nCZ dove_prism 3\n",
    );
    let program = dir.write("p.ops", "n 2\nH\nH\nCZ\n");
    let out = run(&[
        "cost",
        "--program",
        program.to_str().unwrap(),
        "--components",
        table.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["bill_of_materials"]["bs"], 14);
    assert_eq!(doc["bill_of_materials"]["dove_prism"], 3);

    // Missing row for an op kind present in the program is an input error.
    let sparse = dir.write("sparse.tab", "PHASE phase_plate 1\n");
    let out = run(&[
        "cost",
        "--program",
        program.to_str().unwrap(),
        "--components",
        sparse.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_and_human_verify_agree() {
    let dir = TempDir::new("jsonhuman");
    let circuit = dir.path("qft3.qc");
    assert!(run(&["generate", "qft", "-n", "3", "-o", circuit.to_str().unwrap()])
        .status
        .success());
    let human = run(&["verify", circuit.to_str().unwrap(), "--trials", "5"]);
    let json = run(&["verify", circuit.to_str().unwrap(), "--trials", "5", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let min_fidelity = doc["min_fidelity"].as_f64().unwrap();
    // Same seed, same trials: the human line must carry the same number.
    assert!(
        stdout(&human).contains(&format!("{min_fidelity}")),
        "human: {} json: {min_fidelity}",
        stdout(&human)
    );
}

#[test]
fn generated_circuits_round_trip_through_verify() {
    let dir = TempDir::new("roundtrip");
    for (kind, n) in [("qft", "3"), ("ghz", "4"), ("random", "4")] {
        let circuit = dir.path(&format!("{kind}.qc"));
        assert!(run(&["generate", kind, "-n", n, "-o", circuit.to_str().unwrap()])
            .status
            .success());
        let out = run(&["verify", circuit.to_str().unwrap(), "--trials", "8"]);
        assert!(out.status.success(), "{kind}: {}", stderr(&out));
    }
}
