//! Subgroup-level invariants and structural results built on top of
//! verification: `Stab`, A-sets, the reflection-spread criteria, the
//! classification when `⟨z⟩` is an A-subgroup, finite quotients, and
//! evidence about traditional constructions.

use serde::Serialize;
use thiserror::Error;

use crate::dihedral::Overflow;
use crate::report::Witness;
use crate::scheme::LookupError;
use crate::subgroup::Subgroup;

pub mod classify;
pub mod criteria;
pub mod quotient;
pub mod subgroups;
pub mod traditional;

pub use classify::{classify, Classification, ClassifyError};
pub use criteria::{reflection_criteria_report, Criterion, ReflectionCriteriaReport, Spread};
pub use quotient::{quotient_scheme, verify_finite, FiniteCheck, FiniteClass, QuotientReport};
pub use subgroups::{is_a_set, stab, stab_table, support_subgroup, window_a_set, ASetEvidence, Decision, SetQuery, StabEntry};
pub use traditional::{traditionality_evidence, OrbitMatch, TraditionalityEvidence, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum AnalysisError {
    #[error("the zero element has no support")]
    ZeroElement,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("kernel {kernel} is not an A-subgroup")]
    KernelNotASubgroup {
        kernel: Subgroup,
        evidence: Box<ASetEvidence>,
    },
    #[error("{}", .0)]
    Lookup(Box<Witness>),
}

impl AnalysisError {
    pub fn to_witness(&self, context: &str) -> Witness {
        match self {
            AnalysisError::Lookup(w) => (**w).clone(),
            AnalysisError::KernelNotASubgroup { evidence, .. } if evidence.witness.is_some() => {
                evidence.witness.clone().expect("checked")
            }
            other => Witness::Overflow {
                context: format!("{context}: {other}"),
            },
        }
    }
}

impl From<LookupError> for AnalysisError {
    fn from(e: LookupError) -> Self {
        AnalysisError::Lookup(Box::new(e.to_witness("analysis")))
    }
}

impl From<Overflow> for AnalysisError {
    fn from(o: Overflow) -> Self {
        AnalysisError::Lookup(Box::new(Witness::Overflow {
            context: o.to_string(),
        }))
    }
}
