//! Op counting, optical bill of materials, and scaling reports.
//!
//! The per-op component counts are configuration, not physics: the
//! shipped defaults are order-of-magnitude estimates of what each
//! elementary operation takes on an optical bench and are explicitly
//! non-normative. Load a table file to model a concrete setup.

use crate::circuit::{CircuitIR, Gate};
use crate::compiler::compile_circuit;
use crate::elementary::{ElementaryProgram, OpCounts, OpKind};
use crate::encoding::QubitCount;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Optical component kinds appearing in the elementary-gate schematics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    PhasePlate,
    OamBs,
    Bs,
    DovePrism,
    ModeSorter,
    ModeSorterReversed,
    DoubleTransformation,
}

impl Component {
    pub const ALL: [Component; 7] = [
        Component::PhasePlate,
        Component::OamBs,
        Component::Bs,
        Component::DovePrism,
        Component::ModeSorter,
        Component::ModeSorterReversed,
        Component::DoubleTransformation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::PhasePlate => "phase_plate",
            Component::OamBs => "oam_bs",
            Component::Bs => "bs",
            Component::DovePrism => "dove_prism",
            Component::ModeSorter => "mode_sorter",
            Component::ModeSorterReversed => "mode_sorter_reversed",
            Component::DoubleTransformation => "double_transformation",
        }
    }

    pub fn parse(s: &str) -> Option<Component> {
        Component::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl std::fmt::Display for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-op-kind component counts. File format: one `<op> <component>
/// <count>` triple per line, `#` comments allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTable {
    rows: BTreeMap<OpKind, BTreeMap<Component, u64>>,
}

impl ComponentTable {
    pub fn empty() -> Self {
        ComponentTable {
            rows: BTreeMap::new(),
        }
    }

    /// Default estimates (non-normative): a parity sorter in and out with
    /// a phase plate per arm for PHASE; parity sorter pair around one
    /// mode-independent beam splitter for H; double transformation plus a
    /// mode sorter and a reversed one for CPERM; a dove prism between a
    /// parity-sorter pair for CZ.
    pub fn defaults() -> Self {
        let mut table = ComponentTable::empty();
        table.set(OpKind::Phase, Component::OamBs, 2);
        table.set(OpKind::Phase, Component::PhasePlate, 2);
        table.set(OpKind::H, Component::OamBs, 2);
        table.set(OpKind::H, Component::Bs, 1);
        table.set(OpKind::Cperm, Component::DoubleTransformation, 1);
        table.set(OpKind::Cperm, Component::ModeSorter, 1);
        table.set(OpKind::Cperm, Component::ModeSorterReversed, 1);
        table.set(OpKind::Cz, Component::OamBs, 2);
        table.set(OpKind::Cz, Component::DovePrism, 1);
        table
    }

    pub fn set(&mut self, op: OpKind, component: Component, count: u64) {
        self.rows.entry(op).or_default().insert(component, count);
    }

    pub fn row(&self, op: OpKind) -> Option<&BTreeMap<Component, u64>> {
        self.rows.get(&op)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# op_kind component count\n");
        for (op, row) in &self.rows {
            for (component, count) in row {
                out.push_str(&format!("{op} {component} {count}\n"));
            }
        }
        out
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        let mut table = ComponentTable::empty();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 3 {
                return Err(Error::parse(
                    line_no,
                    "expected `<op_kind> <component> <count>`",
                ));
            }
            let op = OpKind::parse(tokens[0])
                .ok_or_else(|| Error::parse(line_no, format!("unknown op kind `{}`", tokens[0])))?;
            let component = Component::parse(tokens[1]).ok_or_else(|| {
                Error::parse(line_no, format!("unknown component `{}`", tokens[1]))
            })?;
            let count: u64 = tokens[2]
                .parse()
                .map_err(|_| Error::parse(line_no, "count is not a non-negative integer"))?;
            table.set(op, component, count);
        }
        Ok(table)
    }
}

impl Default for ComponentTable {
    fn default() -> Self {
        ComponentTable::defaults()
    }
}

/// Exact per-kind tallies of a program.
pub fn count_ops(prog: &ElementaryProgram) -> OpCounts {
    OpCounts::tally(&prog.ops)
}

/// Linear component tally of a program under a table. Every op kind
/// present in the program must have a table row.
pub fn optical_bill_of_materials(
    prog: &ElementaryProgram,
    table: &ComponentTable,
) -> Result<BTreeMap<Component, u64>> {
    let counts = count_ops(prog);
    let mut bom = BTreeMap::new();
    for kind in OpKind::ALL {
        let uses = counts.get(kind) as u64;
        if uses == 0 {
            continue;
        }
        let row = table.row(kind).ok_or_else(|| {
            Error::invalid_input(format!("component table has no row for op kind {kind}"))
        })?;
        for (&component, &per_op) in row {
            *bom.entry(component).or_insert(0) += uses * per_op;
        }
    }
    Ok(bom)
}

/// The single-gate compile cases the scaling harness measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalingCase {
    /// H on qubit ceil(n/2): a routed 1-qubit gate, linear routing cost.
    OneQubitWorst,
    /// CNOT(1, n): the longest-distance pair, quadratic bubble cost.
    TwoQubitWorst,
    /// H on qubit 1: no routing at all, constant cost baseline.
    OneQubitFront,
}

impl ScalingCase {
    pub fn name(self) -> &'static str {
        match self {
            ScalingCase::OneQubitWorst => "one-qubit-worst",
            ScalingCase::TwoQubitWorst => "two-qubit-worst",
            ScalingCase::OneQubitFront => "one-qubit-front",
        }
    }

    pub fn parse(s: &str) -> Option<ScalingCase> {
        match s {
            "one-qubit-worst" => Some(ScalingCase::OneQubitWorst),
            "two-qubit-worst" => Some(ScalingCase::TwoQubitWorst),
            "one-qubit-front" => Some(ScalingCase::OneQubitFront),
            _ => None,
        }
    }

    /// The representative single-gate circuit for register size n.
    pub fn circuit(self, n: QubitCount) -> Result<CircuitIR> {
        let nn = n.get();
        let mut circ = CircuitIR::new(n);
        match self {
            ScalingCase::OneQubitWorst => circ.push(Gate::H(nn.div_ceil(2))),
            ScalingCase::TwoQubitWorst => {
                if nn < 2 {
                    return Err(Error::invalid_input(
                        "two-qubit scaling case needs n >= 2",
                    ));
                }
                circ.push(Gate::Cnot {
                    control: 1,
                    target: nn,
                });
            }
            ScalingCase::OneQubitFront => circ.push(Gate::H(1)),
        }
        Ok(circ)
    }
}

impl std::fmt::Display for ScalingCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One scaling measurement.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScalingSample {
    pub n: usize,
    pub counts: OpCounts,
    pub total: usize,
}

/// Least-squares power-law fit `count ~ A * n^exponent` in log-log space.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PowerFit {
    pub exponent: f64,
    /// RMS residual of log(count) around the fit.
    pub residual: f64,
}

/// Scaling measurements plus fitted exponents for the total op count and
/// for the cyclic-permutation count alone (the routing overhead proper;
/// `None` when some sample has zero such ops).
#[derive(Clone, Debug, Serialize)]
pub struct ScalingReport {
    pub case: String,
    pub samples: Vec<ScalingSample>,
    pub total_fit: PowerFit,
    pub cperm_fit: Option<PowerFit>,
}

/// Cost report: totals and bill of materials always; scaling data when
/// produced by [`scaling_report`] (then totals and the bill are summed
/// over all compiled sample programs).
#[derive(Clone, Debug, Serialize)]
pub struct CostReport {
    pub totals: OpCounts,
    pub bill_of_materials: BTreeMap<Component, u64>,
    pub scaling: Option<ScalingReport>,
}

/// Plain cost report for one program.
pub fn cost_report(prog: &ElementaryProgram, table: &ComponentTable) -> Result<CostReport> {
    Ok(CostReport {
        totals: count_ops(prog),
        bill_of_materials: optical_bill_of_materials(prog, table)?,
        scaling: None,
    })
}

pub fn fit_power_law(points: &[(f64, f64)]) -> Result<PowerFit> {
    if points.len() < 4 {
        return Err(Error::invalid_input(format!(
            "power-law fit needs at least 4 points, got {}",
            points.len()
        )));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let mut cov = 0.0;
    let mut var = 0.0;
    for &(x, y) in &logs {
        cov += (x - mean_x) * (y - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    if var == 0.0 {
        return Err(Error::invalid_input("all sample sizes are equal"));
    }
    let exponent = cov / var;
    let intercept = mean_y - exponent * mean_x;
    let ss: f64 = logs
        .iter()
        .map(|&(x, y)| {
            let e = y - (intercept + exponent * x);
            e * e
        })
        .sum();
    Ok(PowerFit {
        exponent,
        residual: (ss / k).sqrt(),
    })
}

/// Compile the representative gate of `case` for every n in
/// `n_min..=n_max` (compile only, no simulation), record raw op counts,
/// and fit `log(count)` against `log(n)`.
///
/// Two exponents are reported. `total_fit` covers the whole emitted word;
/// for 1-qubit cases its value sits below 1 because the constant Euler
/// core (3-5 ops) dampens the log-log slope over small n. `cperm_fit`
/// covers the cyclic-permutation count alone, which is the routing
/// overhead that actually grows with n.
pub fn scaling_report(case: ScalingCase, n_min: usize, n_max: usize) -> Result<CostReport> {
    if n_max < n_min || n_max - n_min + 1 < 4 {
        return Err(Error::invalid_input(
            "scaling range must contain at least 4 sizes",
        ));
    }
    let mut samples = Vec::new();
    let mut totals = OpCounts::default();
    for n in n_min..=n_max {
        let qn = QubitCount::new(n)?;
        let circ = case.circuit(qn)?;
        let (prog, _) = compile_circuit(&circ)?;
        let counts = count_ops(&prog);
        totals.accumulate(&counts);
        samples.push(ScalingSample {
            n,
            counts,
            total: counts.total(),
        });
    }
    let total_fit = fit_power_law(
        &samples
            .iter()
            .map(|s| (s.n as f64, s.total as f64))
            .collect::<Vec<_>>(),
    )?;
    let cperm_fit = if samples.iter().all(|s| s.counts.cperm > 0) {
        Some(fit_power_law(
            &samples
                .iter()
                .map(|s| (s.n as f64, s.counts.cperm as f64))
                .collect::<Vec<_>>(),
        )?)
    } else {
        None
    };
    let table = ComponentTable::defaults();
    let mut bill = BTreeMap::new();
    for kind in OpKind::ALL {
        let uses = totals.get(kind) as u64;
        if uses == 0 {
            continue;
        }
        if let Some(row) = table.row(kind) {
            for (&component, &per_op) in row {
                *bill.entry(component).or_insert(0) += uses * per_op;
            }
        }
    }
    Ok(CostReport {
        totals,
        bill_of_materials: bill,
        scaling: Some(ScalingReport {
            case: case.name().to_string(),
            samples,
            total_fit,
            cperm_fit,
        }),
    })
}
