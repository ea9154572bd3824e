//! JSON scheme files.
//!
//! ```json
//! {"group": "dihedral_infinite", "name": "orbit-D(1)",
//!  "templates": [{"mod": 1, "res": 0,
//!                 "members": [{"a": 1, "b": 0, "flip": 1}, {"a": -1, "b": 1, "flip": 1}]}]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dihedral::Sign;

use super::{ClassTemplate, DefinitionError, GroupKind, Member, PartitionScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Semantic(#[from] DefinitionError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScheme {
    group: String,
    #[serde(default)]
    name: String,
    templates: Vec<RawTemplate>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTemplate {
    #[serde(rename = "mod")]
    modulus: i64,
    res: i64,
    members: Vec<RawMember>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMember {
    a: i64,
    b: i64,
    flip: i64,
}

pub fn parse_scheme(text: &str) -> Result<PartitionScheme, FormatError> {
    let raw: RawScheme = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let group = match raw.group.as_str() {
        "dihedral_infinite" => GroupKind::DihedralInfinite,
        "integer_line" => GroupKind::IntegerLine,
        other => return Err(DefinitionError::UnknownGroup(other.to_string()).into()),
    };
    let mut templates = Vec::with_capacity(raw.templates.len());
    for t in raw.templates {
        if t.modulus <= 0 {
            return Err(DefinitionError::NonPositiveModulus(t.modulus).into());
        }
        if t.res < 0 || t.res >= t.modulus {
            return Err(DefinitionError::ResidueOutOfRange {
                modulus: t.modulus,
                residue: t.res,
            }
            .into());
        }
        let members = t
            .members
            .iter()
            .map(|m| {
                let sign = Sign::from_i64(m.a).ok_or(DefinitionError::CoefficientNotUnit(m.a))?;
                let flip = match m.flip {
                    0 => false,
                    1 => true,
                    other => return Err(DefinitionError::FlipNotBit(other)),
                };
                Ok(Member::new(sign, m.b, flip))
            })
            .collect::<Result<Vec<_>, DefinitionError>>()?;
        templates.push(ClassTemplate::new(t.modulus as u64, t.res as u64, members)?);
    }
    Ok(PartitionScheme::new(group, raw.name, templates)?)
}

/// Canonical pretty-printed JSON; templates and members appear in canonical
/// order, so equal schemes print identically.
pub fn print_scheme(scheme: &PartitionScheme) -> String {
    let raw = RawScheme {
        group: scheme.group().as_str().to_string(),
        name: scheme.name().to_string(),
        templates: scheme
            .templates()
            .iter()
            .map(|t| RawTemplate {
                modulus: t.modulus() as i64,
                res: t.residue() as i64,
                members: t
                    .members()
                    .iter()
                    .map(|m| RawMember {
                        a: m.sign.as_i64(),
                        b: m.offset,
                        flip: m.flip as i64,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("scheme serialization is infallible");
    out.push('\n');
    out
}
