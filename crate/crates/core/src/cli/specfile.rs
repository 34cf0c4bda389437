//! On-disk ring descriptions (TOML).
//!
//! ```toml
//! conical = ["x*z", "x*y"]      # optional
//!
//! [group]
//! rank = 2
//! torsion = []
//!
//! [[variables]]
//! name = "x"
//! degree = { free = [1, 0], torsion = [] }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::ringspec::RingSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conical: Option<Vec<String>>,
    pub group: GroupSection,
    #[serde(default)]
    pub variables: Vec<VariableEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expect: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableEntry {
    pub name: String,
    pub degree: DegreeEntry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeEntry {
    #[serde(default)]
    pub free: Vec<i64>,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

/// A stored command and its expected rendering, used by `--fixtures`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub command: String,
    #[serde(default)]
    pub args: Vec<String>,
    pub output: String,
}

impl RingSpecFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let (line, col) = e.span().map(|s| line_col(text, s.start)).unwrap_or((1, 1));
            Error::Parse { line, col, message: e.message().to_string() }
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files always serialize")
    }

    /// Normalizes the torsion and validates effectiveness and `B`.
    pub fn build(&self) -> Result<RingSpec> {
        let (group, change) = FgAbGroup::normalizing(self.group.rank, &self.group.torsion)?;
        let mut vars = Vec::with_capacity(self.variables.len());
        for v in &self.variables {
            if v.degree.free.len() != self.group.rank {
                return Err(Error::DimensionMismatch { expected: self.group.rank, got: v.degree.free.len() });
            }
            let torsion = if v.degree.torsion.is_empty() && !self.group.torsion.is_empty() {
                vec![0; self.group.torsion.len()]
            } else {
                v.degree.torsion.clone()
            };
            vars.push((v.name.clone(), change.apply(&group, v.degree.free.clone(), &torsion)?));
        }
        let spec = RingSpec::new(group, vars)?;
        match &self.conical {
            None => Ok(spec),
            Some(b) => {
                let b = b
                    .iter()
                    .map(|t| spec.parse_monomial(t).map_err(|_| Error::BadConicalIdeal(t.clone())))
                    .collect::<Result<Vec<_>>>()?;
                spec.with_conical(b)
            }
        }
    }
}

/// Parses and validates a spec document.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    RingSpecFile::from_toml(text)?.build()
}

/// 1-based line and column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

/// Best-effort location of the token an error refers to.
pub fn locate(text: &str, err: &Error) -> Option<(usize, usize)> {
    let needle = match err {
        Error::Parse { line, col, .. } => return Some((*line, *col)),
        Error::BadConicalIdeal(t) | Error::DuplicateVariable(t) | Error::UnknownVariable(t) => format!("\"{t}\""),
        Error::NotEffective { .. } => "[[variables]]".to_string(),
        Error::BadTorsionOrder(_) => "torsion".to_string(),
        _ => return None,
    };
    let offset = match err {
        Error::DuplicateVariable(_) => text.rfind(&needle)?,
        _ => text.find(&needle).or_else(|| text.find("[group]"))?,
    };
    Some(line_col(text, offset))
}
