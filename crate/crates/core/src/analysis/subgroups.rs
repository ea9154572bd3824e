//! `Stab(α)`, the subgroup generated by a support, and A-set tests.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::dihedral::{Elem, Overflow};
use crate::report::Witness;
use crate::scheme::{BasicSet, LookupError, PartitionScheme};
use crate::subgroup::{generated_subgroup, Subgroup};

use super::AnalysisError;

/// `{g : g·α = α}`.
///
/// Any such `g` maps `supp(α)` onto itself, so `g = y·x₀⁻¹` for a fixed
/// `x₀ ∈ supp(α)` and some `y ∈ supp(α)`. Each candidate is checked by
/// translating `α`.
pub fn stab(alpha: &AlgebraElement) -> Result<Subgroup, AnalysisError> {
    let support = alpha.support();
    let Some(&x0) = support.iter().next() else {
        return Err(AnalysisError::ZeroElement);
    };
    let x0_inv = x0.try_inverse()?;
    let mut fixers = Vec::new();
    for &y in &support {
        let g = y.try_mul(x0_inv)?;
        if alpha.left_translate(g)? == *alpha {
            fixers.push(g);
        }
    }
    Ok(generated_subgroup(fixers)?)
}

/// The subgroup generated by `supp(α)`.
pub fn support_subgroup(alpha: &AlgebraElement) -> Result<Subgroup, AnalysisError> {
    if alpha.is_zero() {
        return Err(AnalysisError::ZeroElement);
    }
    Ok(generated_subgroup(alpha.support())?)
}

/// The set tested by [`is_a_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetQuery {
    Finite(BTreeSet<Elem>),
    Subgroup(Subgroup),
}

impl SetQuery {
    fn contains(&self, g: Elem) -> bool {
        match self {
            SetQuery::Finite(s) => s.contains(&g),
            SetQuery::Subgroup(h) => h.contains(g),
        }
    }
}

/// How an A-set verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    /// Holds for the whole group.
    Exact,
    /// Only the classes meeting the window were examined.
    WindowBounded { radius: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ASetEvidence {
    pub holds: bool,
    pub decision: Decision,
    /// Number of classes examined.
    pub classes_checked: u64,
    pub witness: Option<Witness>,
}

impl ASetEvidence {
    fn exact(checked: u64, witness: Option<Witness>) -> Self {
        Self {
            holds: witness.is_none(),
            decision: Decision::Exact,
            classes_checked: checked,
            witness,
        }
    }
}

/// Period bound above which the subgroup test falls back to the window.
const MAX_PERIOD: u64 = 1 << 20;

/// The first pair `(inside, outside)` of elements of `class`, if it is split.
fn split(class: &BasicSet, set: &SetQuery) -> Option<Witness> {
    let inside = class.iter().find(|g| set.contains(*g))?;
    let outside = class.iter().find(|g| !set.contains(*g))?;
    Some(Witness::SplitClass {
        class: class.clone(),
        inside,
        outside,
    })
}

fn lookup_witness(e: LookupError) -> Witness {
    e.to_witness("A-set test")
}

/// Whether `set` is a union of classes.
///
/// A finite set is decided exactly by looking up the class of each element.
/// For a subgroup `H` with translation part `⟨z^M⟩`, membership of
/// `z^(±j+b) s^f` in `H` depends only on `j mod M`, so each template is
/// checked on one period of its parameter. When `M = 0` only the finitely
/// many `j` placing some member inside `H` can matter. Periods above
/// `2^20` fall back to the window.
pub fn is_a_set(scheme: &PartitionScheme, set: &SetQuery, fallback_radius: u64) -> ASetEvidence {
    match set {
        SetQuery::Finite(elems) => {
            let mut checked = 0;
            for &g in elems {
                checked += 1;
                match scheme.class_of(g) {
                    Ok(class) => {
                        if let Some(w) = split(&class, set) {
                            return ASetEvidence::exact(checked, Some(w));
                        }
                    }
                    Err(e) => return ASetEvidence::exact(checked, Some(lookup_witness(e))),
                }
            }
            ASetEvidence::exact(checked, None)
        }
        SetQuery::Subgroup(h) if h.modulus() > MAX_PERIOD => window_a_set(scheme, set, fallback_radius),
        SetQuery::Subgroup(h) => match subgroup_a_set(scheme, set, *h) {
            Ok(ev) => ev,
            Err(_) => window_a_set(scheme, set, fallback_radius),
        },
    }
}

fn subgroup_a_set(scheme: &PartitionScheme, set: &SetQuery, h: Subgroup) -> Result<ASetEvidence, Overflow> {
    let period = h.modulus() as i64;
    let mut checked = 0;
    for t in scheme.templates() {
        let params: Vec<i64> = if period > 0 {
            let step = t.modulus() as i64;
            let r = t.residue() as i64;
            (0..period)
                .map(|u| step.checked_mul(u).and_then(|x| x.checked_add(r)))
                .collect::<Option<_>>()
                .ok_or(Overflow::new("A-set period"))?
        } else {
            let mut js = BTreeSet::new();
            for m in t.members() {
                for g in h.generators().into_iter().chain([Elem::IDENTITY]) {
                    if let Some(j) = m.solve(g)? {
                        if t.admits(j) {
                            js.insert(j);
                        }
                    }
                }
            }
            js.into_iter().collect()
        };
        for j in params {
            let class = t.class_at(j)?;
            checked += 1;
            if let Some(w) = split(&class, set) {
                return Ok(ASetEvidence::exact(checked, Some(w)));
            }
        }
    }
    Ok(ASetEvidence::exact(checked, None))
}

/// Checks only the classes meeting the window.
pub fn window_a_set(scheme: &PartitionScheme, set: &SetQuery, radius: u64) -> ASetEvidence {
    let bounded = |checked, witness: Option<Witness>| ASetEvidence {
        holds: witness.is_none(),
        decision: Decision::WindowBounded { radius },
        classes_checked: checked,
        witness,
    };
    let classes = match scheme.enumerate_classes(radius) {
        Ok(c) => c,
        Err(e) => return bounded(0, Some(lookup_witness(e))),
    };
    let mut checked = 0;
    for class in &classes {
        checked += 1;
        if let Some(w) = split(class, set) {
            return bounded(checked, Some(w));
        }
    }
    bounded(checked, None)
}

/// `Stab` of the simple quantity of every window class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabEntry {
    pub class: BasicSet,
    pub stab: Subgroup,
    pub order: Option<u64>,
}

pub fn stab_table(scheme: &PartitionScheme, radius: u64) -> Result<Vec<StabEntry>, AnalysisError> {
    let classes = scheme.enumerate_classes(radius)?;
    classes
        .into_iter()
        .map(|class| {
            let sq = AlgebraElement::simple_quantity(class.iter()).expect("classes are nonempty");
            let stab = stab(&sq)?;
            Ok(StabEntry {
                order: stab.order(),
                stab,
                class,
            })
        })
        .collect()
}
