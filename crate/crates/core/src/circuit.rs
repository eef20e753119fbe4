//! Abstract n-qubit circuit IR and its line-oriented text format.
//!
//! Format: `#` starts a comment, tokens are whitespace-separated. The
//! first line is `qubits <n>`, then one gate per line:
//!
//! ```text
//! h|x|y|z|s|t <q>
//! rx|ry|rz <theta> <q>
//! cnot <control> <target>
//! cz <control> <target>
//! cphase <theta> <control> <target>
//! u <q> <re,im> <re,im> <re,im> <re,im>     # row-major 2x2
//! ```
//!
//! Angles are radians in decimal notation. Qubit labels are 1-indexed.

use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use crate::matrix::Unitary2;

/// Unitarity tolerance for explicit 2x2 matrices entering the IR.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

/// One abstract gate. The named 1-qubit gates are sugar for a fixed 2x2
/// matrix; [`Gate::as_one_qubit`] performs the lowering.
#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Y(usize),
    Z(usize),
    S(usize),
    T(usize),
    Rx(f64, usize),
    Ry(f64, usize),
    Rz(f64, usize),
    Unitary(Unitary2, usize),
    Cnot { control: usize, target: usize },
    CzStd { control: usize, target: usize },
    CPhase { theta: f64, control: usize, target: usize },
}

impl Gate {
    /// Matrix and target of a 1-qubit gate; `None` for 2-qubit gates.
    pub fn as_one_qubit(&self) -> Option<(Unitary2, usize)> {
        match self {
            Gate::H(q) => Some((Unitary2::h(), *q)),
            Gate::X(q) => Some((Unitary2::x(), *q)),
            Gate::Y(q) => Some((Unitary2::y(), *q)),
            Gate::Z(q) => Some((Unitary2::z(), *q)),
            Gate::S(q) => Some((Unitary2::s(), *q)),
            Gate::T(q) => Some((Unitary2::t(), *q)),
            Gate::Rx(theta, q) => Some((Unitary2::rx(*theta), *q)),
            Gate::Ry(theta, q) => Some((Unitary2::ry(*theta), *q)),
            Gate::Rz(theta, q) => Some((Unitary2::rz(*theta), *q)),
            Gate::Unitary(u, q) => Some((*u, *q)),
            Gate::Cnot { .. } | Gate::CzStd { .. } | Gate::CPhase { .. } => None,
        }
    }

    /// Control/target for 2-qubit gates.
    pub fn as_two_qubit(&self) -> Option<(usize, usize)> {
        match self {
            Gate::Cnot { control, target }
            | Gate::CzStd { control, target }
            | Gate::CPhase {
                control, target, ..
            } => Some((*control, *target)),
            _ => None,
        }
    }

    fn check(&self, n: QubitCount, position: usize, errors: &mut Vec<String>) {
        let mut check_index = |q: usize| {
            if !n.contains_qubit(q) {
                errors.push(format!(
                    "gate {position}: qubit index {q} out of range 1..={n}"
                ));
            }
        };
        if let Some((control, target)) = self.as_two_qubit() {
            check_index(control);
            check_index(target);
            if control == target {
                errors.push(format!("gate {position}: control equals target ({control})"));
            }
        } else {
            let (u, q) = self.as_one_qubit().expect("gate is 1q or 2q");
            check_index(q);
            if !u.is_unitary(UNITARY_TOLERANCE) {
                errors.push(format!(
                    "gate {position}: matrix is non-unitary (defect {:.3e})",
                    u.unitarity_defect()
                ));
            }
        }
        if let Gate::Rx(theta, _) | Gate::Ry(theta, _) | Gate::Rz(theta, _)
        | Gate::CPhase { theta, .. } = self
        {
            if !theta.is_finite() {
                errors.push(format!("gate {position}: angle must be finite"));
            }
        }
    }

    /// Text-format line for this gate.
    pub fn to_line(&self) -> String {
        fn c(v: num_complex::Complex64) -> String {
            format!("{},{}", v.re, v.im)
        }
        match self {
            Gate::H(q) => format!("h {q}"),
            Gate::X(q) => format!("x {q}"),
            Gate::Y(q) => format!("y {q}"),
            Gate::Z(q) => format!("z {q}"),
            Gate::S(q) => format!("s {q}"),
            Gate::T(q) => format!("t {q}"),
            Gate::Rx(theta, q) => format!("rx {theta} {q}"),
            Gate::Ry(theta, q) => format!("ry {theta} {q}"),
            Gate::Rz(theta, q) => format!("rz {theta} {q}"),
            Gate::Unitary(u, q) => format!(
                "u {q} {} {} {} {}",
                c(u.0[0][0]),
                c(u.0[0][1]),
                c(u.0[1][0]),
                c(u.0[1][1])
            ),
            Gate::Cnot { control, target } => format!("cnot {control} {target}"),
            Gate::CzStd { control, target } => format!("cz {control} {target}"),
            Gate::CPhase {
                theta,
                control,
                target,
            } => format!("cphase {theta} {control} {target}"),
        }
    }
}

/// Ordered gate list over a fixed register size.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitIR {
    pub n: QubitCount,
    pub gates: Vec<Gate>,
}

impl CircuitIR {
    pub fn new(n: QubitCount) -> Self {
        CircuitIR { n, gates: Vec::new() }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Collect *all* violations; an empty list means the circuit is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut errors = Vec::new();
        for (i, gate) in self.gates.iter().enumerate() {
            gate.check(self.n, i + 1, &mut errors);
        }
        errors
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {}\n", self.n);
        for gate in &self.gates {
            out.push_str(&gate.to_line());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        let mut n: Option<QubitCount> = None;
        let mut gates = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if n.is_none() {
                if tokens[0] != "qubits" {
                    return Err(Error::parse(line_no, "expected header `qubits <n>`"));
                }
                if tokens.len() != 2 {
                    return Err(Error::parse(line_no, "header is `qubits <n>`"));
                }
                let value: usize = tokens[1]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "qubit count is not an integer"))?;
                n = Some(QubitCount::new(value).map_err(|e| Error::parse(line_no, e.to_string()))?);
                continue;
            }
            gates.push(parse_gate_line(&tokens, line_no)?);
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing header `qubits <n>`"))?;
        Ok(CircuitIR { n, gates })
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("`{token}` is not a qubit index")))
}

fn parse_angle(token: &str, line: usize) -> Result<f64> {
    let v: f64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("`{token}` is not an angle")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, "angle must be finite"));
    }
    Ok(v)
}

fn parse_complex(token: &str, line: usize) -> Result<num_complex::Complex64> {
    let (re, im) = token
        .split_once(',')
        .ok_or_else(|| Error::parse(line, format!("`{token}` is not `re,im`")))?;
    let re: f64 = re
        .parse()
        .map_err(|_| Error::parse(line, format!("`{re}` is not a number")))?;
    let im: f64 = im
        .parse()
        .map_err(|_| Error::parse(line, format!("`{im}` is not a number")))?;
    Ok(num_complex::Complex64::new(re, im))
}

fn parse_gate_line(tokens: &[&str], line: usize) -> Result<Gate> {
    let arity_err = |expect: &str| Error::parse(line, format!("`{}` takes {expect}", tokens[0]));
    match tokens[0] {
        name @ ("h" | "x" | "y" | "z" | "s" | "t") => {
            if tokens.len() != 2 {
                return Err(arity_err("one qubit index"));
            }
            let q = parse_index(tokens[1], line)?;
            Ok(match name {
                "h" => Gate::H(q),
                "x" => Gate::X(q),
                "y" => Gate::Y(q),
                "z" => Gate::Z(q),
                "s" => Gate::S(q),
                _ => Gate::T(q),
            })
        }
        name @ ("rx" | "ry" | "rz") => {
            if tokens.len() != 3 {
                return Err(arity_err("an angle and a qubit index"));
            }
            let theta = parse_angle(tokens[1], line)?;
            let q = parse_index(tokens[2], line)?;
            Ok(match name {
                "rx" => Gate::Rx(theta, q),
                "ry" => Gate::Ry(theta, q),
                _ => Gate::Rz(theta, q),
            })
        }
        "cnot" | "cz" => {
            if tokens.len() != 3 {
                return Err(arity_err("control and target indices"));
            }
            let control = parse_index(tokens[1], line)?;
            let target = parse_index(tokens[2], line)?;
            Ok(if tokens[0] == "cnot" {
                Gate::Cnot { control, target }
            } else {
                Gate::CzStd { control, target }
            })
        }
        "cphase" => {
            if tokens.len() != 4 {
                return Err(arity_err("an angle, control and target"));
            }
            Ok(Gate::CPhase {
                theta: parse_angle(tokens[1], line)?,
                control: parse_index(tokens[2], line)?,
                target: parse_index(tokens[3], line)?,
            })
        }
        "u" => {
            if tokens.len() != 6 {
                return Err(arity_err("a qubit index and four `re,im` entries"));
            }
            let q = parse_index(tokens[1], line)?;
            let mut entries = [num_complex::Complex64::new(0.0, 0.0); 4];
            for (slot, token) in entries.iter_mut().zip(&tokens[2..6]) {
                *slot = parse_complex(token, line)?;
            }
            Ok(Gate::Unitary(
                Unitary2([[entries[0], entries[1]], [entries[2], entries[3]]]),
                q,
            ))
        }
        other => Err(Error::parse(line, format!("unknown gate `{other}`"))),
    }
}
