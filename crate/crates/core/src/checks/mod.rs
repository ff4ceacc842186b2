//! A registry of named executable checks over a spectrum context.
//!
//! Each check guards its hypotheses explicitly and reports the first unmet
//! one by name; a `fail` on a guarded check signals an implementation bug
//! and carries a witness the core operations can replay.

mod registry;

pub use registry::{registry, CheckDef};

use crate::lattice::{Classification, ElemId};
use crate::spectrum::{IntervalData, SpectrumContext, XTopStatus};
use crate::topology::{FiniteTopology, PropertyReport};
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check_id: &'static str,
    pub status: CheckStatus,
    /// Counterexample on `fail`; the first unmet hypothesis on
    /// `not_applicable`.
    pub witness: Option<String>,
    /// Extra information on a pass (emitted decompositions, which reading
    /// of an ambiguous statement held).
    pub detail: Option<String>,
    pub elapsed: Duration,
}

/// Internal outcome before timing is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    PassWith(String),
    Fail(String),
    NotApplicable(String),
}

impl Outcome {
    fn fail(msg: impl Into<String>) -> Outcome {
        Outcome::Fail(msg.into())
    }

    fn na(msg: impl Into<String>) -> Outcome {
        Outcome::NotApplicable(msg.into())
    }
}

/// A context with every derived artifact the checks consult, computed once.
pub struct CheckContext<'a> {
    pub ctx: &'a SpectrumContext,
    pub tcl: FiniteTopology,
    pub tfp: FiniteTopology,
    pub tcl_report: PropertyReport,
    pub tfp_report: PropertyReport,
    pub xtop: XTopStatus,
    pub interval: IntervalData,
    pub lattice_class: Classification,
    pub radical_class: Classification,
    pub seed: u64,
    /// Set when the context is the prime spectrum of a module.
    pub module_prime: bool,
}

impl<'a> CheckContext<'a> {
    pub fn new(ctx: &'a SpectrumContext, seed: u64) -> Self {
        let tcl = FiniteTopology::classical_zariski(ctx);
        let tfp = FiniteTopology::finer_patch(ctx);
        let tcl_report = tcl.property_report();
        let tfp_report = tfp.property_report();
        let xtop = ctx.x_top();
        let interval = ctx.interval_data(&tcl);
        let lattice_class = ctx.lattice().classify();
        let radical_class = ctx.radical_sublattice().lattice.classify();
        CheckContext {
            ctx,
            tcl,
            tfp,
            tcl_report,
            tfp_report,
            xtop,
            interval,
            lattice_class,
            radical_class,
            seed,
            module_prime: false,
        }
    }

    pub fn with_module_prime(mut self, yes: bool) -> Self {
        self.module_prime = yes;
        self
    }

    pub fn label(&self, e: ElemId) -> &str {
        self.ctx.lattice().label(e)
    }

    pub fn labels_of(&self, ids: &[ElemId]) -> String {
        let parts: Vec<&str> = ids.iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Point set rendered through element labels.
    pub fn point_set_label(&self, set: &fixedbitset::FixedBitSet) -> String {
        let ids: Vec<ElemId> = set.ones().map(|i| self.ctx.point_elem(i)).collect();
        self.labels_of(&ids)
    }

    /// Whether a parent element is strongly irreducible in the radical
    /// sublattice.
    pub fn si_in_radical(&self, parent_id: ElemId) -> bool {
        match self.ctx.radical_sublattice().position(parent_id) {
            Some(sub) => self.radical_class.strongly_irreducible.contains(&sub),
            None => false,
        }
    }

    /// Strongly irreducible elements of the radical sublattice, as parent
    /// element ids.
    pub fn radical_si_parents(&self) -> Vec<ElemId> {
        self.radical_class
            .strongly_irreducible
            .iter()
            .map(|&i| self.ctx.radical_sublattice().parent[i])
            .collect()
    }

    /// Description of the X-top failure witness, for NA messages.
    pub fn xtop_witness_label(&self) -> String {
        match self.xtop.witness {
            Some((x, y, p)) => format!(
                "X-top fails: witness x={}, y={}, p={}",
                self.label(x),
                self.label(y),
                self.label(p)
            ),
            None => "X-top fails".into(),
        }
    }
}

/// Runs one check by name.
pub fn run_check(id: &str, cc: &CheckContext) -> Result<CheckResult, CheckError> {
    let def = registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| CheckError::UnknownCheck(id.to_string()))?;
    Ok(execute(def, cc))
}

/// Runs the whole registry in its deterministic order.
pub fn run_all(cc: &CheckContext) -> Vec<CheckResult> {
    registry().iter().map(|d| execute(d, cc)).collect()
}

fn execute(def: &CheckDef, cc: &CheckContext) -> CheckResult {
    let start = Instant::now();
    let outcome = (def.run)(cc);
    let elapsed = start.elapsed();
    let (status, witness, detail) = match outcome {
        Outcome::Pass => (CheckStatus::Pass, None, None),
        Outcome::PassWith(d) => (CheckStatus::Pass, None, Some(d)),
        Outcome::Fail(w) => (CheckStatus::Fail, Some(w), None),
        Outcome::NotApplicable(w) => (CheckStatus::NotApplicable, Some(w), None),
    };
    CheckResult {
        check_id: def.id,
        status,
        witness,
        detail,
        elapsed,
    }
}

/// The constructive decomposition behind reducible varieties: when `V(x)`
/// is reducible, `V(x)` is the union of the proper subvarieties
/// `V(p \/ x)` over the points `p` of `V(x)`. Returns the deduplicated
/// part elements, or `None` when `V(x)` is irreducible or empty.
pub fn variety_decomposition(
    ctx: &SpectrumContext,
    tcl: &FiniteTopology,
    x: ElemId,
) -> Option<Vec<ElemId>> {
    let v = ctx.variety(x).ok()?;
    if v.count_ones(..) == 0 || tcl.is_irreducible(v) {
        return None;
    }
    let mut parts: Vec<ElemId> = v
        .ones()
        .map(|i| ctx.lattice().join(ctx.point_elem(i), x))
        .collect();
    parts.sort_unstable();
    parts.dedup();
    Some(parts)
}

#[cfg(test)]
mod tests;
