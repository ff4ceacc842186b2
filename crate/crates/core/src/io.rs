//! JSON input schemas (`latspec/1`), X selectors, and context construction.

use crate::groups::{group_lattice, GroupError, GroupSpectrumKind, GroupTable};
use crate::lattice::{ElemId, Lattice, LatticeError};
use crate::modules::{FiniteModule, ModuleError, SpectrumKind, SubmoduleLattice};
use crate::spectrum::{Orientation, SpectrumContext, SpectrumError};
use crate::Caps;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const SCHEMA: &str = "latspec/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema: {0}")]
    Schema(String),
    #[error("unknown selector `{selector}` for {kind} input")]
    UnknownSelector { selector: String, kind: &'static str },
    #[error("selector `{0}` is {1}; the requested orientation conflicts with it")]
    OrientationConflict(String, &'static str),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeInput {
    #[serde(default = "default_schema")]
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    /// Hasse covers; closed transitively exactly like `leq`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(usize, usize)>>,
    /// Full (or partial) order pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(usize, usize)>>,
    /// Optional explicit point set, by label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleInput {
    #[serde(default = "default_schema")]
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupInput {
    #[serde(default = "default_schema")]
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

fn default_schema() -> String {
    SCHEMA.to_string()
}

/// Any accepted input file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputFile {
    Lattice(LatticeInput),
    Module(ModuleInput),
    Group(GroupInput),
}

impl InputFile {
    pub fn from_lattice(l: &Lattice, name: &str) -> InputFile {
        InputFile::Lattice(LatticeInput {
            schema: SCHEMA.to_string(),
            name: Some(name.to_string()),
            elements: l.labels().to_vec(),
            covers: Some(l.covers()),
            leq: None,
            x: None,
        })
    }

    pub fn from_module(modulus: u64, invariant_factors: Vec<u64>, name: &str) -> InputFile {
        InputFile::Module(ModuleInput {
            schema: SCHEMA.to_string(),
            name: Some(name.to_string()),
            modulus,
            invariant_factors,
        })
    }

    pub fn from_group(table: &GroupTable, name: &str) -> InputFile {
        let order = table.order();
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| table.mul(a, b)).collect())
            .collect();
        InputFile::Group(GroupInput {
            schema: SCHEMA.to_string(),
            name: Some(name.to_string()),
            order,
            table: rows,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            InputFile::Lattice(_) => "lattice",
            InputFile::Module(_) => "module",
            InputFile::Group(_) => "group",
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            InputFile::Lattice(i) => i.name.as_deref(),
            InputFile::Module(i) => i.name.as_deref(),
            InputFile::Group(i) => i.name.as_deref(),
        }
    }

    /// Canonical JSON of the parsed input: sorted keys, compact.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("inputs serialize");
        value.to_string()
    }

    /// Stable hex digest of the canonical form.
    pub fn digest(&self) -> String {
        let bytes = Sha256::digest(self.canonical_json().as_bytes());
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Parses an input file, with schema diagnostics.
pub fn parse_input(text: &str) -> Result<InputFile, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Schema("input must be a JSON object".into()))?;
    if let Some(schema) = obj.get("schema").and_then(|v| v.as_str()) {
        if schema != SCHEMA {
            return Err(IoError::Schema(format!(
                "unsupported schema `{schema}` (expected `{SCHEMA}`)"
            )));
        }
    }
    let input = if obj.contains_key("elements") {
        let lattice: LatticeInput = serde_json::from_value(value)?;
        if lattice.covers.is_none() && lattice.leq.is_none() {
            return Err(IoError::Schema(
                "lattice input needs a `covers` or `leq` field".into(),
            ));
        }
        InputFile::Lattice(lattice)
    } else if obj.contains_key("invariant_factors") || obj.contains_key("modulus") {
        InputFile::Module(serde_json::from_value(value)?)
    } else if obj.contains_key("table") {
        let group: GroupInput = serde_json::from_value(value)?;
        if group.table.len() != group.order {
            return Err(IoError::Schema(format!(
                "group table has {} rows but order is {}",
                group.table.len(),
                group.order
            )));
        }
        InputFile::Group(group)
    } else {
        return Err(IoError::Schema(
            "object has none of the fields `elements`, `modulus`, `table`".into(),
        ));
    };
    Ok(input)
}

/// How to pick the point set of a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XSelector {
    Explicit(Vec<String>),
    Max,
    Min,
    Si,
    Sh,
    SpecP,
    SpecC,
    SpecS,
    SpecF,
    Normal,
    Center,
    FiniteCenter,
}

impl XSelector {
    /// Named selectors by keyword; anything else is an explicit
    /// comma-separated label list.
    pub fn parse(s: &str) -> XSelector {
        match s {
            "max" => XSelector::Max,
            "min" => XSelector::Min,
            "si" => XSelector::Si,
            "sh" => XSelector::Sh,
            "spec_p" => XSelector::SpecP,
            "spec_c" => XSelector::SpecC,
            "spec_s" => XSelector::SpecS,
            "spec_f" => XSelector::SpecF,
            "normal" => XSelector::Normal,
            "center" => XSelector::Center,
            "finite_center" => XSelector::FiniteCenter,
            "explicit" => XSelector::Explicit(Vec::new()),
            other => XSelector::Explicit(
                other
                    .split(',')
                    .map(|t| t.trim().to_string())
                    .filter(|t| !t.is_empty())
                    .collect(),
            ),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            XSelector::Explicit(labels) => format!("explicit:{{{}}}", labels.join(",")),
            XSelector::Max => "max".into(),
            XSelector::Min => "min".into(),
            XSelector::Si => "si".into(),
            XSelector::Sh => "sh".into(),
            XSelector::SpecP => "spec_p".into(),
            XSelector::SpecC => "spec_c".into(),
            XSelector::SpecS => "spec_s".into(),
            XSelector::SpecF => "spec_f".into(),
            XSelector::Normal => "normal".into(),
            XSelector::Center => "center".into(),
            XSelector::FiniteCenter => "finite_center".into(),
        }
    }

    /// The orientation a named selector carries; explicit lists default to
    /// primal and may be flipped with the dual flag.
    fn natural_orientation(&self) -> Option<Orientation> {
        match self {
            XSelector::Explicit(_) => None,
            XSelector::Max | XSelector::Si | XSelector::SpecP | XSelector::SpecC => {
                Some(Orientation::Primal)
            }
            XSelector::Min | XSelector::Sh | XSelector::SpecS | XSelector::SpecF => {
                Some(Orientation::Dual)
            }
            XSelector::Normal | XSelector::Center | XSelector::FiniteCenter => {
                Some(Orientation::Primal)
            }
        }
    }
}

/// A context built from an input plus selector, with its provenance.
pub struct BuiltContext {
    pub ctx: SpectrumContext,
    pub descriptor: String,
    /// Set when the points are the prime spectrum of a module.
    pub module_prime: bool,
}

fn resolve_orientation(selector: &XSelector, dual: bool) -> Result<Orientation, IoError> {
    match (selector.natural_orientation(), dual) {
        (None, false) => Ok(Orientation::Primal),
        (None, true) => Ok(Orientation::Dual),
        (Some(o), false) => Ok(o),
        (Some(Orientation::Dual), true) => Ok(Orientation::Dual),
        (Some(Orientation::Primal), true) => {
            Err(IoError::OrientationConflict(selector.describe(), "primal"))
        }
    }
}

fn labels_to_ids(lattice: &Lattice, labels: &[String]) -> Result<Vec<ElemId>, IoError> {
    labels
        .iter()
        .map(|l| {
            lattice
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| IoError::UnknownLabel(l.clone()))
        })
        .collect()
}

/// Selector evaluation on a bare lattice. The named selectors read off the
/// working (orientation-adjusted) lattice, so `min` is `max` of the dual
/// and `sh` is `si` of the dual.
fn lattice_points(
    lattice: &Lattice,
    selector: &XSelector,
    orientation: Orientation,
    explicit_fallback: Option<&[String]>,
) -> Result<Vec<ElemId>, IoError> {
    let working = match orientation {
        Orientation::Primal => lattice.clone(),
        Orientation::Dual => lattice.dualize(),
    };
    let class = working.classify();
    match selector {
        XSelector::Max | XSelector::Min => Ok(class.maximal),
        XSelector::Si | XSelector::Sh => Ok(class.strongly_irreducible),
        XSelector::Explicit(labels) if labels.is_empty() => match explicit_fallback {
            Some(labels) => labels_to_ids(lattice, labels),
            None => Ok(Vec::new()),
        },
        XSelector::Explicit(labels) => labels_to_ids(lattice, labels),
        other => Err(IoError::UnknownSelector {
            selector: other.describe(),
            kind: "lattice",
        }),
    }
}

/// Builds the spectrum context for an input plus selector.
pub fn build_context(
    input: &InputFile,
    selector: &XSelector,
    dual: bool,
    caps: &Caps,
) -> Result<BuiltContext, IoError> {
    let descriptor = selector.describe();
    match input {
        InputFile::Lattice(li) => {
            let orientation = resolve_orientation(selector, dual)?;
            let lattice = build_lattice(li, caps)?;
            let points = lattice_points(&lattice, selector, orientation, li.x.as_deref())?;
            let ctx = SpectrumContext::new(lattice, points, orientation)?;
            Ok(BuiltContext {
                ctx,
                descriptor,
                module_prime: false,
            })
        }
        InputFile::Module(mi) => {
            let orientation = resolve_orientation(selector, dual)?;
            let subs = build_module(mi, caps)?;
            let (points, module_prime) = match selector {
                XSelector::SpecP => (subs.spectrum(SpectrumKind::Prime), true),
                XSelector::SpecC => (subs.spectrum(SpectrumKind::Coprime), false),
                XSelector::SpecS => (subs.spectrum(SpectrumKind::Second), false),
                XSelector::SpecF => (subs.spectrum(SpectrumKind::First), false),
                other => (
                    lattice_points(&subs.lattice, other, orientation, None)?,
                    false,
                ),
            };
            let ctx = SpectrumContext::new(subs.lattice, points, orientation)?;
            Ok(BuiltContext {
                ctx,
                descriptor,
                module_prime,
            })
        }
        InputFile::Group(gi) => {
            let kind = match selector {
                XSelector::Normal => GroupSpectrumKind::Normal,
                XSelector::Center => GroupSpectrumKind::Center,
                XSelector::FiniteCenter => GroupSpectrumKind::FiniteCenter,
                other => {
                    return Err(IoError::UnknownSelector {
                        selector: other.describe(),
                        kind: "group",
                    })
                }
            };
            if dual {
                return Err(IoError::OrientationConflict(descriptor, "primal"));
            }
            let group = GroupTable::new(gi.table.clone())?;
            let gctx = group_lattice(&group, kind, caps)?;
            let points = gctx.points.clone();
            let ctx = SpectrumContext::new(gctx.lattice, points.clone(), Orientation::Primal)?;
            if matches!(
                kind,
                GroupSpectrumKind::Center | GroupSpectrumKind::FiniteCenter
            ) {
                // the radical elements of a center context are exactly the
                // points plus the whole group
                let mut expected: Vec<ElemId> = points;
                expected.push(ctx.lattice().top());
                expected.sort_unstable();
                expected.dedup();
                if ctx.radical_elements() != expected {
                    return Err(IoError::Internal(
                        "center context: radical elements differ from X plus the whole group"
                            .into(),
                    ));
                }
            }
            Ok(BuiltContext {
                ctx,
                descriptor,
                module_prime: false,
            })
        }
    }
}

pub fn build_lattice(li: &LatticeInput, caps: &Caps) -> Result<Lattice, IoError> {
    let mut pairs = Vec::new();
    if let Some(covers) = &li.covers {
        pairs.extend_from_slice(covers);
    }
    if let Some(leq) = &li.leq {
        pairs.extend_from_slice(leq);
    }
    Ok(Lattice::from_order_pairs(
        li.elements.clone(),
        &pairs,
        caps.lattice,
    )?)
}

pub fn build_module(mi: &ModuleInput, caps: &Caps) -> Result<SubmoduleLattice, IoError> {
    let module = FiniteModule::new(mi.modulus, mi.invariant_factors.clone(), caps)?;
    Ok(module.submodules(caps)?)
}

/// Selectors the corpus runner applies to an input, by kind.
pub fn applicable_selectors(input: &InputFile) -> Vec<XSelector> {
    match input {
        InputFile::Lattice(li) => {
            let mut out = Vec::new();
            if li.x.is_some() {
                out.push(XSelector::Explicit(Vec::new()));
            }
            out.push(XSelector::Max);
            out.push(XSelector::Si);
            out
        }
        InputFile::Module(_) => vec![
            XSelector::Max,
            XSelector::Si,
            XSelector::SpecP,
            XSelector::SpecC,
            XSelector::SpecS,
            XSelector::SpecF,
        ],
        InputFile::Group(_) => vec![XSelector::Normal, XSelector::Center],
    }
}
