//! JSON file formats for set systems, set functions, and linkage functions.
//!
//! All writers emit canonically sorted content — sets by (size, numeric
//! mask), linkage entries by (mask, element index) — so that re-serializing a
//! parsed file is a fixpoint and diffs stay meaningful. Semantic problems
//! (unknown labels, duplicates, missing coverage) are hard errors carrying
//! the offending field.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duality::{LinkageFunction, SetFunction};
use crate::error::Error as CoreError;
use crate::rational::Rational;
use crate::system::{GroundSet, SetFamily, Subset};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
}

impl FormatError {
    fn invalid(context: impl Into<String>, message: impl ToString) -> Self {
        FormatError::Invalid {
            context: context.into(),
            message: message.to_string(),
        }
    }
}

pub type FormatResult<T> = std::result::Result<T, FormatError>;

/// `{"ground": ["1","2"], "family": [[], ["1"], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SystemFile {
    pub ground: Vec<String>,
    pub family: Vec<Vec<String>>,
}

impl SystemFile {
    pub fn from_family(family: &SetFamily) -> Self {
        SystemFile {
            ground: family.ground().labels().to_vec(),
            family: family
                .members()
                .map(|m| m.labels().iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_family(&self) -> FormatResult<SetFamily> {
        let ground =
            GroundSet::new(self.ground.clone()).map_err(|e| FormatError::invalid("ground", e))?;
        let mut subsets = Vec::with_capacity(self.family.len());
        for (i, labels) in self.family.iter().enumerate() {
            let subset = ground
                .subset(labels)
                .map_err(|e| FormatError::invalid(format!("family[{i}]"), e))?;
            subsets.push(subset);
        }
        SetFamily::from_subsets(&ground, &subsets).map_err(|e| FormatError::invalid("family", e))
    }
}

/// One valued set: `{"set": ["1"], "value": "3/2"}`. Values may be JSON
/// integers or `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctionEntry {
    pub set: Vec<String>,
    pub value: Rational,
}

/// `{"values": [{"set": [...], "value": ...}, ...]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctionFile {
    pub values: Vec<FunctionEntry>,
}

impl FunctionFile {
    pub fn from_function(f: &SetFunction) -> Self {
        FunctionFile {
            values: f
                .domain()
                .map(|set| FunctionEntry {
                    set: set.labels().iter().map(|s| s.to_string()).collect(),
                    value: f.value(&set).expect("domain set"),
                })
                .collect(),
        }
    }

    /// Binds the entries to a system at truncation level `k`; coverage of
    /// `𝓕_{k−1}` (optionally all of `𝓕_k`) is mandatory and duplicates are
    /// rejected.
    pub fn to_function(&self, system: &SetFamily, k: usize) -> FormatResult<SetFunction> {
        let ground = system.ground();
        let mut pairs = Vec::with_capacity(self.values.len());
        for (i, entry) in self.values.iter().enumerate() {
            let set = ground
                .subset(&entry.set)
                .map_err(|e| FormatError::invalid(format!("values[{i}].set"), e))?;
            pairs.push((set, entry.value));
        }
        SetFunction::on_family(system, k, pairs).map_err(|e| FormatError::invalid("values", e))
    }
}

/// One linkage entry: `{"x": "2", "set": [], "value": "2"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LinkageEntry {
    pub x: String,
    pub set: Vec<String>,
    pub value: Rational,
}

/// `{"ground": [...], "entries": [...], "default": "1"}`
///
/// `default` fills every unlisted pair; without it the entries must cover all
/// `n · 2^n` pairs. `ground` may be omitted when the file is read alongside a
/// system file that fixes the ground set; writers always emit it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LinkageFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    pub entries: Vec<LinkageEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub default: Option<Rational>,
}

impl LinkageFile {
    /// Fully explicit table, canonical order, ground embedded.
    pub fn from_linkage(pi: &LinkageFunction) -> Self {
        LinkageFile {
            ground: Some(pi.ground().labels().to_vec()),
            entries: pi
                .entries()
                .map(|(x, set, value)| LinkageEntry {
                    x: pi.ground().label(x).to_string(),
                    set: set.labels().iter().map(|s| s.to_string()).collect(),
                    value,
                })
                .collect(),
            default: None,
        }
    }

    pub fn to_linkage(&self, bound_ground: Option<&GroundSet>) -> FormatResult<LinkageFunction> {
        let ground = match (&self.ground, bound_ground) {
            (Some(labels), maybe) => {
                let own = GroundSet::new(labels.clone())
                    .map_err(|e| FormatError::invalid("ground", e))?;
                if let Some(bound) = maybe {
                    if &own != bound {
                        return Err(FormatError::invalid(
                            "ground",
                            "linkage ground set differs from the system's",
                        ));
                    }
                }
                own
            }
            (None, Some(bound)) => bound.clone(),
            (None, None) => {
                return Err(FormatError::invalid(
                    "ground",
                    "no ground set: embed one or supply a system file",
                ))
            }
        };
        let n = ground.n();
        let pairs = n << n;
        let mut table: Vec<Option<Rational>> = vec![None; pairs];
        for (i, entry) in self.entries.iter().enumerate() {
            let context = format!("entries[{i}]");
            let x = ground.index_of(&entry.x).ok_or_else(|| {
                FormatError::invalid(&context, format!("unknown element {:?}", entry.x))
            })?;
            let set = ground
                .subset(&entry.set)
                .map_err(|e| FormatError::invalid(&context, e))?;
            let slot = &mut table[set.mask() as usize * n + x];
            if slot.is_some() {
                return Err(FormatError::invalid(
                    &context,
                    format!("duplicate pair (x={}, set={set})", entry.x),
                ));
            }
            *slot = Some(entry.value);
        }
        let values: Vec<Rational> = match self.default {
            Some(d) => table.into_iter().map(|v| v.unwrap_or(d)).collect(),
            None => {
                let mut out = Vec::with_capacity(pairs);
                for (i, v) in table.into_iter().enumerate() {
                    match v {
                        Some(v) => out.push(v),
                        None => {
                            let mask = (i / n) as u32;
                            let set = Subset::from_mask(&ground, mask).expect("mask in range");
                            return Err(FormatError::invalid(
                                "entries",
                                format!(
                                    "no value for (x={}, set={set}) and no default",
                                    ground.label(i % n)
                                ),
                            ));
                        }
                    }
                }
                out
            }
        };
        Ok(LinkageFunction::from_fn(&ground, |x, set| {
            values[set.mask() as usize * n + x]
        }))
    }
}

fn to_pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_system(text: &str) -> FormatResult<SetFamily> {
    let file: SystemFile = serde_json::from_str(text)?;
    file.to_family()
}

/// Canonical pretty JSON for a family.
pub fn system_to_json(family: &SetFamily) -> String {
    to_pretty(&SystemFile::from_family(family))
}

/// Compact single-line JSON, used when streaming many systems.
pub fn system_to_compact_json(family: &SetFamily) -> String {
    serde_json::to_string(&SystemFile::from_family(family)).expect("serializable")
}

pub fn parse_function(text: &str, system: &SetFamily, k: usize) -> FormatResult<SetFunction> {
    let file: FunctionFile = serde_json::from_str(text)?;
    file.to_function(system, k)
}

pub fn function_to_json(f: &SetFunction) -> String {
    to_pretty(&FunctionFile::from_function(f))
}

pub fn parse_linkage(text: &str, ground: Option<&GroundSet>) -> FormatResult<LinkageFunction> {
    let file: LinkageFile = serde_json::from_str(text)?;
    file.to_linkage(ground)
}

pub fn linkage_to_json(pi: &LinkageFunction) -> String {
    to_pretty(&LinkageFile::from_linkage(pi))
}

impl From<CoreError> for FormatError {
    fn from(e: CoreError) -> Self {
        FormatError::invalid("input", e)
    }
}
