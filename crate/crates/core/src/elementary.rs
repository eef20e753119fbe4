//! The four elementary single-photon operations and programs over them.
//!
//! On the mode amplitudes these act as:
//!
//! * `PHASE(theta)` - multiply even modes by `e^{i theta}` and odd modes by
//!   `e^{-i theta}`; equals `e^{i theta Z}` on qubit 1.
//! * `H` - butterfly each pair `(2m, 2m+1)` with the Hadamard matrix;
//!   equals `H` on qubit 1.
//! * `CPERM` - the cyclic permutation: mode `l` moves to `2l` when
//!   `l < d/2` and to `2l - d + 1` otherwise. On mode bits this is a
//!   left rotation (the old top bit becomes the new bottom bit), i.e. the
//!   value of qubit `k` moves to qubit `k + 1` and qubit `n` wraps to
//!   qubit 1. Only this direction exists as a primitive; the inverse is
//!   `CPERM^(n-1)`.
//! * `CZ` - negate amplitudes of modes divisible by 4; equals
//!   `diag(-1, 1, 1, 1)` on qubits 1 and 2.
//!
//! The index-map definitions above are authoritative for this crate; the
//! qubit-relabelling reading of `CPERM` stated here is the one consistent
//! with the index map and is checked exhaustively in tests.

use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::state::OamState;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_1_SQRT_2;

/// Largest register for which a dense `d x d` operator may be extracted.
pub const MAX_UNITARY_QUBITS: usize = 10;

/// One elementary operation. `theta` is stored as given (unreduced);
/// comparisons happen modulo 2*pi where relevant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ElementaryOp {
    #[serde(rename = "PHASE")]
    Phase { theta: f64 },
    #[serde(rename = "H")]
    Had,
    #[serde(rename = "CPERM")]
    Cperm,
    #[serde(rename = "CZ")]
    Cz4,
}

/// Operation kind without parameters, used for tallies and cost tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum OpKind {
    Phase,
    H,
    Cperm,
    Cz,
}

impl OpKind {
    pub const ALL: [OpKind; 4] = [OpKind::Phase, OpKind::H, OpKind::Cperm, OpKind::Cz];

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Phase => "PHASE",
            OpKind::H => "H",
            OpKind::Cperm => "CPERM",
            OpKind::Cz => "CZ",
        }
    }

    pub fn parse(s: &str) -> Option<OpKind> {
        match s {
            "PHASE" => Some(OpKind::Phase),
            "H" => Some(OpKind::H),
            "CPERM" => Some(OpKind::Cperm),
            "CZ" => Some(OpKind::Cz),
            _ => None,
        }
    }
}

impl std::fmt::Display for OpKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl ElementaryOp {
    pub fn kind(&self) -> OpKind {
        match self {
            ElementaryOp::Phase { .. } => OpKind::Phase,
            ElementaryOp::Had => OpKind::H,
            ElementaryOp::Cperm => OpKind::Cperm,
            ElementaryOp::Cz4 => OpKind::Cz,
        }
    }
}

/// Tallies per operation kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub phase: usize,
    pub h: usize,
    pub cperm: usize,
    pub cz: usize,
}

impl OpCounts {
    pub fn tally(ops: &[ElementaryOp]) -> Self {
        let mut counts = OpCounts::default();
        for op in ops {
            counts.add(op.kind());
        }
        counts
    }

    pub fn add(&mut self, kind: OpKind) {
        match kind {
            OpKind::Phase => self.phase += 1,
            OpKind::H => self.h += 1,
            OpKind::Cperm => self.cperm += 1,
            OpKind::Cz => self.cz += 1,
        }
    }

    pub fn get(&self, kind: OpKind) -> usize {
        match kind {
            OpKind::Phase => self.phase,
            OpKind::H => self.h,
            OpKind::Cperm => self.cperm,
            OpKind::Cz => self.cz,
        }
    }

    pub fn total(&self) -> usize {
        self.phase + self.h + self.cperm + self.cz
    }

    pub fn accumulate(&mut self, other: &OpCounts) {
        self.phase += other.phase;
        self.h += other.h;
        self.cperm += other.cperm;
        self.cz += other.cz;
    }
}

/// Ordered sequence of elementary operations, applied left to right.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementaryProgram {
    pub n: QubitCount,
    pub ops: Vec<ElementaryOp>,
}

impl ElementaryProgram {
    pub fn new(n: QubitCount) -> Self {
        ElementaryProgram { n, ops: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Check structural invariants (currently: CZ needs n >= 2, finite angles).
    pub fn validate(&self) -> Result<()> {
        for (i, op) in self.ops.iter().enumerate() {
            match op {
                ElementaryOp::Cz4 if self.n.get() < 2 => {
                    return Err(Error::invalid_op(format!(
                        "op {}: CZ requires at least 2 qubits, program has {}",
                        i + 1,
                        self.n
                    )));
                }
                ElementaryOp::Phase { theta } if !theta.is_finite() => {
                    return Err(Error::invalid_input(format!(
                        "op {}: PHASE angle must be finite",
                        i + 1
                    )));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Line-oriented text form: header `n <int>`, one op per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for op in &self.ops {
            match op {
                ElementaryOp::Phase { theta } => out.push_str(&format!("PHASE {theta}\n")),
                ElementaryOp::Had => out.push_str("H\n"),
                ElementaryOp::Cperm => out.push_str("CPERM\n"),
                ElementaryOp::Cz4 => out.push_str("CZ\n"),
            }
        }
        out
    }

    /// Parse the text form. Blank lines and `#` comments are accepted.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut n: Option<QubitCount> = None;
        let mut ops = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let head = parts.next().expect("non-empty line");
            if n.is_none() {
                if head != "n" {
                    return Err(Error::parse(line_no, "expected header `n <qubits>`"));
                }
                let value: usize = parts
                    .next()
                    .ok_or_else(|| Error::parse(line_no, "missing qubit count"))?
                    .parse()
                    .map_err(|_| Error::parse(line_no, "qubit count is not an integer"))?;
                if parts.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens after header"));
                }
                n = Some(QubitCount::new(value).map_err(|e| Error::parse(line_no, e.to_string()))?);
                continue;
            }
            let op = match head {
                "PHASE" => {
                    let theta: f64 = parts
                        .next()
                        .ok_or_else(|| Error::parse(line_no, "PHASE needs an angle"))?
                        .parse()
                        .map_err(|_| Error::parse(line_no, "PHASE angle is not a number"))?;
                    if !theta.is_finite() {
                        return Err(Error::parse(line_no, "PHASE angle must be finite"));
                    }
                    ElementaryOp::Phase { theta }
                }
                "H" => ElementaryOp::Had,
                "CPERM" => ElementaryOp::Cperm,
                "CZ" => ElementaryOp::Cz4,
                other => {
                    return Err(Error::parse(line_no, format!("unknown operation `{other}`")));
                }
            };
            if parts.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after operation"));
            }
            ops.push(op);
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing header `n <qubits>`"))?;
        let prog = ElementaryProgram { n, ops };
        prog.validate()?;
        Ok(prog)
    }

    /// Structured form: `{"n": 3, "ops": [{"kind": "PHASE", "theta": 0.5}, ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("program serialization cannot fail")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let prog: ElementaryProgram = serde_json::from_str(input)
            .map_err(|e| Error::parse(e.line().max(1), e.to_string()))?;
        prog.validate()?;
        Ok(prog)
    }
}

/// Multiply even-mode amplitudes by `e^{i theta}` and odd-mode amplitudes
/// by `e^{-i theta}`.
pub fn apply_phase(state: &mut OamState, theta: f64) {
    let even = Complex64::from_polar(1.0, theta);
    let odd = even.conj();
    for (m, a) in state.amplitudes_mut().iter_mut().enumerate() {
        *a *= if m % 2 == 0 { even } else { odd };
    }
}

/// Hadamard butterfly on each `(2m, 2m+1)` pair, in place.
pub fn apply_hadamard(state: &mut OamState) {
    let amp = state.amplitudes_mut();
    let inv_sqrt2 = Complex64::new(FRAC_1_SQRT_2, 0.0);
    for pair in amp.chunks_exact_mut(2) {
        let lo = pair[0];
        let hi = pair[1];
        pair[0] = (lo + hi) * inv_sqrt2;
        pair[1] = (lo - hi) * inv_sqrt2;
    }
}

/// Destination of mode `l` under one cyclic permutation: a left rotation
/// of the n-bit index.
pub fn cperm_index(l: usize, n: QubitCount) -> usize {
    let d = n.dim();
    if l < d / 2 {
        2 * l
    } else {
        2 * l - d + 1
    }
}

/// Cyclic permutation of all qubit labels, in place, using one scratch
/// buffer of size d (the permutation is not an involution).
pub fn apply_cperm(state: &mut OamState) {
    let n = state.qubit_count();
    if n.get() == 1 {
        return; // d = 2: the rotation is the identity
    }
    let d = state.dim();
    let mut scratch = vec![Complex64::new(0.0, 0.0); d];
    for (l, &a) in state.amplitudes().iter().enumerate() {
        scratch[cperm_index(l, n)] = a;
    }
    state.replace_amplitudes(scratch);
}

/// Negate the amplitude of every mode divisible by 4.
pub fn apply_cz(state: &mut OamState) -> Result<()> {
    if state.qubit_count().get() < 2 {
        return Err(Error::invalid_op(
            "CZ acts on the first two qubits and needs n >= 2",
        ));
    }
    for a in state.amplitudes_mut().iter_mut().step_by(4) {
        *a = -*a;
    }
    Ok(())
}

/// Apply a single operation.
pub fn apply_op(state: &mut OamState, op: &ElementaryOp) -> Result<()> {
    match op {
        ElementaryOp::Phase { theta } => {
            apply_phase(state, *theta);
            Ok(())
        }
        ElementaryOp::Had => {
            apply_hadamard(state);
            Ok(())
        }
        ElementaryOp::Cperm => {
            apply_cperm(state);
            Ok(())
        }
        ElementaryOp::Cz4 => apply_cz(state),
    }
}

/// Run a whole program left to right.
pub fn apply_program(state: &mut OamState, prog: &ElementaryProgram) -> Result<()> {
    if state.qubit_count() != prog.n {
        return Err(Error::invalid_input(format!(
            "program is for {} qubits but the state has {}",
            prog.n,
            state.qubit_count()
        )));
    }
    for op in &prog.ops {
        apply_op(state, op)?;
    }
    Ok(())
}

/// Dense `d x d` operator of one elementary operation, built column by
/// column by applying the operation to each basis state. Verification
/// aid; guarded to small registers.
pub fn elementary_unitary(op: &ElementaryOp, n: QubitCount) -> Result<DenseMatrix> {
    if n.get() > MAX_UNITARY_QUBITS {
        return Err(Error::resource(format!(
            "dense operator extraction is limited to {MAX_UNITARY_QUBITS} qubits, got {n}"
        )));
    }
    let d = n.dim();
    let mut m = DenseMatrix::zeros(d);
    for col in 0..d {
        let mut state = OamState::basis(n, col)?;
        apply_op(&mut state, op)?;
        for (row, &a) in state.amplitudes().iter().enumerate() {
            *m.at_mut(row, col) = a;
        }
    }
    Ok(m)
}

/// Dense `d x d` operator of a whole program (verification aid, small n).
pub fn program_unitary(prog: &ElementaryProgram) -> Result<DenseMatrix> {
    if prog.n.get() > MAX_UNITARY_QUBITS {
        return Err(Error::resource(format!(
            "dense operator extraction is limited to {MAX_UNITARY_QUBITS} qubits, got {}",
            prog.n
        )));
    }
    let d = prog.n.dim();
    let mut m = DenseMatrix::zeros(d);
    for col in 0..d {
        let mut state = OamState::basis(prog.n, col)?;
        apply_program(&mut state, prog)?;
        for (row, &a) in state.amplitudes().iter().enumerate() {
            *m.at_mut(row, col) = a;
        }
    }
    Ok(m)
}
