//! Images of schemes in the finite dihedral quotients `D∞ / ⟨z^n⟩`.
//!
//! When `⟨z^n⟩` is an A-subgroup, the image of a Schur ring under the natural
//! map is a Schur ring over the quotient. The image partition is computed from
//! the classes meeting `|power| ≤ max(radius, n)`, which already contains a
//! preimage of every quotient element, and then verified exhaustively.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::finite::{quotient_map, FiniteElem};
use crate::scheme::{GroupKind, PartitionScheme};
use crate::subgroup::Subgroup;

use super::subgroups::{is_a_set, ASetEvidence, SetQuery};
use super::AnalysisError;

/// A class of the image partition, sorted.
pub type FiniteClass = Vec<FiniteElem>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteCheck {
    pub passed: bool,
    pub checked: u64,
    pub witness: Option<String>,
}

impl FiniteCheck {
    fn pass(checked: u64) -> Self {
        Self {
            passed: true,
            checked,
            witness: None,
        }
    }

    fn fail(checked: u64, witness: String) -> Self {
        Self {
            passed: false,
            checked,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for FiniteCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict} ({} checked)", self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FiniteConstant {
    #[serde(rename = "C")]
    pub left: FiniteElem,
    #[serde(rename = "D")]
    pub right: FiniteElem,
    #[serde(rename = "E")]
    pub target: FiniteElem,
    pub lambda: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub n: u64,
    /// Order of the quotient group: `2n` over `D∞`, `n` over `ℤ`.
    pub group_order: u64,
    pub kernel: Subgroup,
    pub kernel_evidence: ASetEvidence,
    pub classes: Vec<FiniteClass>,
    pub partition: FiniteCheck,
    pub star: FiniteCheck,
    pub closure: FiniteCheck,
    pub constants: Vec<FiniteConstant>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.partition.passed && self.star.passed && self.closure.passed
    }
}

fn show(class: &[FiniteElem]) -> String {
    let parts: Vec<String> = class.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Exhaustive Schur-ring check of a partition of a finite dihedral group (or
/// of its rotation subgroup, when `rotations_only`).
pub fn verify_finite(
    n: u64,
    rotations_only: bool,
    classes: &[FiniteClass],
) -> (FiniteCheck, FiniteCheck, FiniteCheck, Vec<FiniteConstant>) {
    let size = 2 * n as usize;
    let group: Vec<FiniteElem> = FiniteElem::all(n).filter(|g| !rotations_only || !g.flip()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; size];
    let mut checked = 0;
    let mut partition = None;
    'outer: for (ci, class) in classes.iter().enumerate() {
        for g in class {
            checked += 1;
            if rotations_only && g.flip() {
                partition = Some(FiniteCheck::fail(checked, format!("{g} is not in the group")));
                break 'outer;
            }
            if let Some(prev) = owner[g.index()] {
                partition = Some(FiniteCheck::fail(
                    checked,
                    format!("{g} lies in both {} and {}", show(&classes[prev]), show(class)),
                ));
                break 'outer;
            }
            owner[g.index()] = Some(ci);
        }
    }
    let partition = partition.unwrap_or_else(|| {
        if let Some(g) = group.iter().find(|g| owner[g.index()].is_none()) {
            return FiniteCheck::fail(checked, format!("{g} lies in no class"));
        }
        let one = FiniteElem::identity(n);
        let own = &classes[owner[one.index()].expect("covered")];
        if own.len() != 1 {
            return FiniteCheck::fail(checked, format!("class of 1 is {}", show(own)));
        }
        FiniteCheck::pass(checked)
    });
    if !partition.passed {
        let skipped = FiniteCheck::fail(0, "partition check failed".into());
        return (partition, skipped.clone(), skipped, Vec::new());
    }

    let mut star = FiniteCheck::pass(classes.len() as u64);
    for class in classes {
        let mut inv: FiniteClass = class.iter().map(|g| g.inverse()).collect();
        inv.sort();
        let found = &classes[owner[inv[0].index()].expect("covered")];
        if *found != inv {
            star = FiniteCheck::fail(
                classes.len() as u64,
                format!("{}* = {} is not a class", show(class), show(&inv)),
            );
            break;
        }
    }

    let mut constants = Vec::new();
    let mut pairs = 0;
    let mut closure = None;
    let mut counts = vec![0u64; size];
    'pairs: for left in classes {
        for right in classes {
            pairs += 1;
            counts.iter_mut().for_each(|c| *c = 0);
            for x in left {
                for y in right {
                    counts[x.mul(*y).index()] += 1;
                }
            }
            for target in classes {
                let lambda = counts[target[0].index()];
                if let Some(g) = target.iter().find(|g| counts[g.index()] != lambda) {
                    closure = Some(FiniteCheck::fail(
                        pairs,
                        format!(
                            "{}·{}: coefficients on {} differ ({} has {lambda}, {g} has {})",
                            show(left),
                            show(right),
                            show(target),
                            target[0],
                            counts[g.index()]
                        ),
                    ));
                    break 'pairs;
                }
                if lambda > 0 {
                    constants.push(FiniteConstant {
                        left: left[0],
                        right: right[0],
                        target: target[0],
                        lambda,
                    });
                }
            }
        }
    }
    constants.sort();
    let closure = closure.unwrap_or(FiniteCheck::pass(pairs));
    (partition, star, closure, constants)
}

/// The image partition over `D∞ / ⟨z^n⟩`, verified exhaustively.
pub fn quotient_scheme(scheme: &PartitionScheme, n: u64, radius: u64) -> Result<QuotientReport, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::InvalidArgument("quotient modulus must be positive".into()));
    }
    let kernel = Subgroup::translations(n);
    let kernel_evidence = is_a_set(scheme, &SetQuery::Subgroup(kernel), radius.max(n));
    if !kernel_evidence.holds {
        return Err(AnalysisError::KernelNotASubgroup {
            kernel,
            evidence: Box::new(kernel_evidence),
        });
    }
    let window = scheme.enumerate_classes(radius.max(n))?;
    let images: BTreeSet<FiniteClass> = window
        .iter()
        .map(|c| {
            let img: BTreeSet<FiniteElem> = c.iter().map(|g| quotient_map(g, n)).collect();
            img.into_iter().collect()
        })
        .collect();
    // deterministic order: by least element
    let mut classes: Vec<FiniteClass> = images.into_iter().collect();
    classes.sort_by_key(|c| c[0]);
    let rotations_only = scheme.group() == GroupKind::IntegerLine;
    let (partition, star, closure, constants) = verify_finite(n, rotations_only, &classes);
    Ok(QuotientReport {
        n,
        group_order: if rotations_only { n } else { 2 * n },
        kernel,
        kernel_evidence,
        classes,
        partition,
        star,
        closure,
        constants,
    })
}

impl fmt::Display for QuotientReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quotient by {} (order {})", self.kernel, self.group_order)?;
        let shown: Vec<String> = self.classes.iter().map(|c| show(c)).collect();
        writeln!(f, "classes: {}", shown.join(" "))?;
        writeln!(f, "partition: {}", self.partition)?;
        writeln!(f, "star:      {}", self.star)?;
        writeln!(f, "closure:   {}", self.closure)?;
        write!(
            f,
            "verdict: {}",
            if self.passed() { "Schur ring" } else { "NOT a Schur ring" }
        )
    }
}
