//! Evidence for or against the traditional constructions: orbit Schur rings,
//! wedge products and tensor products.
//!
//! Each search is exhaustive over explicitly bounded candidates, and every
//! negative verdict records its bounds.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dihedral::Sign;
use crate::scheme::{BasicSet, GroupKind, PartitionScheme};
use crate::subgroup::{finite_subgroups_up_to, generated_subgroup, Subgroup};

use super::subgroups::{is_a_set, SetQuery};
use super::AnalysisError;

/// An automorphism group whose orbits are exactly the window classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrbitMatch {
    /// The trivial group: every class is a singleton.
    Trivial,
    /// `⟨φ_k⟩` with `φ_k(z) = z⁻¹`, `φ_k(s) = z^k s`.
    Involution { k: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitVerdict {
    /// `|k|` bound of the sweep.
    pub k_bound: u64,
    pub matches: Vec<OrbitMatch>,
    /// A class larger than any orbit of an involution, if one exists.
    pub oversized_class: Option<BasicSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeCandidate {
    pub kernel: Subgroup,
    pub top: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeVerdict {
    /// Bound on `|power|` of the enumerated finite subgroups.
    pub finite_bound: u64,
    pub finite_subgroups_checked: usize,
    pub finite_normal_nontrivial: Vec<Subgroup>,
    /// Bound on `m` for the kernels `⟨z^m⟩`.
    pub kernel_bound: u64,
    pub kernels_checked: usize,
    pub kernels_a_subgroups: usize,
    pub pairs_checked: usize,
    /// Pairs `K ≤ H` satisfying the coset condition on the window.
    pub decompositions: Vec<WedgeCandidate>,
    /// One rejected pair with a class that is not a union of `K`-cosets.
    pub sample_rejection: Option<(WedgeCandidate, BasicSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorVerdict {
    /// Bound on the parameters of the enumerated subgroups.
    pub bound: u64,
    pub subgroups: usize,
    pub pairs_checked: u64,
    pub commuting_pairs: u64,
    pub factors: Vec<(Subgroup, Subgroup)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    TraditionalWithinEvidence,
    NoTraditionalFormFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TraditionalWithinEvidence => "traditional within evidence",
            Verdict::NoTraditionalFormFound => "no traditional form found within radius",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraditionalityEvidence {
    pub radius: u64,
    pub orbit: OrbitVerdict,
    pub wedge: WedgeVerdict,
    pub tensor: TensorVerdict,
    pub verdict: Verdict,
}

fn is_orbit_partition(classes: &[BasicSet], eps: Sign, k: i64) -> bool {
    classes.iter().all(|c| {
        let g = c.representative();
        match g.try_apply_automorphism(eps, k) {
            Ok(h) => *c == BasicSet::new([g, h]),
            Err(_) => false,
        }
    })
}

fn orbit_check(scheme: &PartitionScheme, classes: &[BasicSet], radius: u64) -> OrbitVerdict {
    let mut matches = Vec::new();
    if classes.iter().all(|c| c.len() == 1) {
        matches.push(OrbitMatch::Trivial);
    }
    let oversized_class = classes.iter().find(|c| c.len() > 2).cloned();
    if oversized_class.is_none() {
        let r = radius.min(i64::MAX as u64) as i64;
        let ks: Vec<i64> = match scheme.group() {
            // k only moves reflections
            GroupKind::IntegerLine => vec![0],
            GroupKind::DihedralInfinite => (-r..=r).collect(),
        };
        let mut found: Vec<OrbitMatch> = ks
            .into_par_iter()
            .filter(|&k| is_orbit_partition(classes, Sign::Minus, k))
            .map(|k| OrbitMatch::Involution { k })
            .collect();
        found.sort();
        matches.extend(found);
    }
    OrbitVerdict {
        k_bound: radius,
        matches,
        oversized_class,
    }
}

/// Proper subgroups of `D∞` containing `⟨z^m⟩`.
fn subgroups_over(m: u64, group: GroupKind) -> Vec<Subgroup> {
    let mut out = Vec::new();
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        if d > 1 || group == GroupKind::IntegerLine {
            out.push(Subgroup::translations(d));
        }
        if group == GroupKind::DihedralInfinite {
            if d == 1 {
                out.push(Subgroup::TRANSLATIONS);
                continue;
            }
            for b in 0..d as i64 {
                out.push(Subgroup::with_reflection(d, b));
            }
        }
    }
    if group == GroupKind::IntegerLine {
        // over ℤ the whole group is ⟨z⟩ itself
        out.retain(|h| h.modulus() > 1);
    }
    out
}

/// The first class outside `top` that is not a union of `kernel`-cosets.
fn coset_failure(classes: &[BasicSet], kernel: Subgroup, top: Subgroup) -> Result<Option<BasicSet>, ()> {
    let gens = kernel.generators();
    let mut outside = 0;
    for c in classes.iter().filter(|c| c.iter().any(|g| !top.contains(g))) {
        outside += 1;
        for x in c.iter() {
            for &k in &gens {
                match x.try_mul(k) {
                    Ok(y) if c.contains(y) => {}
                    _ => return Ok(Some(c.clone())),
                }
            }
        }
    }
    // nothing outside H meets the window: the condition is undecided here
    if outside == 0 {
        Err(())
    } else {
        Ok(None)
    }
}

fn wedge_check(scheme: &PartitionScheme, classes: &[BasicSet], radius: u64) -> WedgeVerdict {
    let finite = finite_subgroups_up_to(radius);
    let finite_normal_nontrivial: Vec<Subgroup> = finite
        .iter()
        .filter(|h| !h.is_trivial() && h.is_normal())
        .filter(|h| scheme.group() == GroupKind::DihedralInfinite || h.reflection_offset().is_none())
        .copied()
        .collect();

    let mut kernels: Vec<Subgroup> = (1..=radius).map(Subgroup::translations).collect();
    if scheme.group() == GroupKind::DihedralInfinite && radius >= 1 {
        kernels.push(Subgroup::with_reflection(2, 0));
        kernels.push(Subgroup::with_reflection(2, 1));
    }
    if scheme.group() == GroupKind::IntegerLine {
        // ⟨z⟩ is not proper in ℤ
        kernels.retain(|k| k.modulus() > 1);
    }
    let a_subgroup = |h: Subgroup| is_a_set(scheme, &SetQuery::Subgroup(h), radius).holds;
    let kernels_checked = kernels.len();
    let a_kernels: Vec<Subgroup> = kernels.into_iter().filter(|k| a_subgroup(*k)).collect();

    let results: Vec<(usize, Vec<WedgeCandidate>, Option<(WedgeCandidate, BasicSet)>)> = a_kernels
        .par_iter()
        .map(|&kernel| {
            let tops = if kernel.reflection_offset().is_some() {
                vec![kernel]
            } else {
                subgroups_over(kernel.modulus(), scheme.group())
            };
            let mut pairs = 0;
            let mut found = Vec::new();
            let mut rejection = None;
            for top in tops.into_iter().filter(|h| a_subgroup(*h)) {
                pairs += 1;
                match coset_failure(classes, kernel, top) {
                    Ok(None) => found.push(WedgeCandidate { kernel, top }),
                    Ok(Some(c)) if rejection.is_none() => rejection = Some((WedgeCandidate { kernel, top }, c)),
                    _ => {}
                }
            }
            (pairs, found, rejection)
        })
        .collect();

    let mut pairs_checked = 0;
    let mut decompositions = Vec::new();
    let mut sample_rejection = None;
    for (pairs, found, rejection) in results {
        pairs_checked += pairs;
        decompositions.extend(found);
        if sample_rejection.is_none() {
            sample_rejection = rejection;
        }
    }
    WedgeVerdict {
        finite_bound: radius,
        finite_subgroups_checked: finite.len(),
        finite_normal_nontrivial,
        kernel_bound: radius,
        kernels_checked,
        kernels_a_subgroups: a_kernels.len(),
        pairs_checked,
        decompositions,
        sample_rejection,
    }
}

/// Nontrivial subgroups with parameters bounded by `bound`.
fn bounded_subgroups(bound: u64, group: GroupKind) -> Vec<Subgroup> {
    let r = bound.min(i64::MAX as u64 / 2) as i64;
    let mut out: Vec<Subgroup> = (1..=bound).map(Subgroup::translations).collect();
    if group == GroupKind::DihedralInfinite {
        out.extend((-r..=r).map(|b| Subgroup::with_reflection(0, b)));
        for m in 1..=bound {
            for b in 0..m as i64 {
                out.push(Subgroup::with_reflection(m, b));
            }
        }
    }
    out
}

fn commute(h: &Subgroup, k: &Subgroup) -> bool {
    h.generators().iter().all(|&x| {
        k.generators()
            .iter()
            .all(|&y| matches!((x.try_mul(y), y.try_mul(x)), (Ok(a), Ok(b)) if a == b))
    })
}

fn trivial_intersection(h: &Subgroup, k: &Subgroup) -> bool {
    if h.modulus() > 0 && k.modulus() > 0 {
        // both contain z^lcm
        return false;
    }
    let (finite, other) = if h.modulus() == 0 { (h, k) } else { (k, h) };
    finite.generators().iter().all(|g| !other.contains(*g))
}

fn tensor_check(scheme: &PartitionScheme, radius: u64) -> TensorVerdict {
    let subgroups = bounded_subgroups(radius, scheme.group());
    let whole = match scheme.group() {
        GroupKind::DihedralInfinite => Subgroup::WHOLE,
        GroupKind::IntegerLine => Subgroup::TRANSLATIONS,
    };
    let per_row: Vec<(u64, u64, Vec<(Subgroup, Subgroup)>)> = (0..subgroups.len())
        .into_par_iter()
        .map(|i| {
            let h = &subgroups[i];
            let mut pairs = 0;
            let mut commuting = 0;
            let mut factors = Vec::new();
            for k in &subgroups[i + 1..] {
                pairs += 1;
                if !commute(h, k) {
                    continue;
                }
                commuting += 1;
                if !trivial_intersection(h, k) {
                    continue;
                }
                let joint = generated_subgroup(h.generators().into_iter().chain(k.generators()));
                if joint.is_ok_and(|j| j == whole)
                    && is_a_set(scheme, &SetQuery::Subgroup(*h), radius).holds
                    && is_a_set(scheme, &SetQuery::Subgroup(*k), radius).holds
                {
                    factors.push((*h, *k));
                }
            }
            (pairs, commuting, factors)
        })
        .collect();
    let mut verdict = TensorVerdict {
        bound: radius,
        subgroups: subgroups.len(),
        pairs_checked: 0,
        commuting_pairs: 0,
        factors: Vec::new(),
    };
    for (pairs, commuting, factors) in per_row {
        verdict.pairs_checked += pairs;
        verdict.commuting_pairs += commuting;
        verdict.factors.extend(factors);
    }
    verdict
}

/// Runs the three searches on the classes meeting the window. The scheme is
/// expected to verify at `radius`.
pub fn traditionality_evidence(
    scheme: &PartitionScheme,
    radius: u64,
) -> Result<TraditionalityEvidence, AnalysisError> {
    let classes = scheme.enumerate_classes(radius)?;
    let orbit = orbit_check(scheme, &classes, radius);
    let wedge = wedge_check(scheme, &classes, radius);
    let tensor = tensor_check(scheme, radius);
    let verdict = if !orbit.matches.is_empty()
        || !wedge.decompositions.is_empty()
        || !wedge.finite_normal_nontrivial.is_empty()
        || !tensor.factors.is_empty()
    {
        Verdict::TraditionalWithinEvidence
    } else {
        Verdict::NoTraditionalFormFound
    };
    Ok(TraditionalityEvidence {
        radius,
        orbit,
        wedge,
        tensor,
        verdict,
    })
}

impl fmt::Display for TraditionalityEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.orbit;
        if o.matches.is_empty() {
            write!(f, "orbit:  no phi_k matches for |k| <= {}", o.k_bound)?;
            if let Some(c) = &o.oversized_class {
                write!(f, " (class {c} has {} elements, orbits have at most 2)", c.len())?;
            }
            writeln!(f)?;
        } else {
            let shown: Vec<String> = o
                .matches
                .iter()
                .map(|m| match m {
                    OrbitMatch::Trivial => "trivial group".to_string(),
                    OrbitMatch::Involution { k } => format!("k={k}"),
                })
                .collect();
            writeln!(f, "orbit:  matches {}", shown.join(", "))?;
        }
        let w = &self.wedge;
        writeln!(
            f,
            "wedge:  {} nontrivial finite normal subgroups among {} with |power| <= {}; {} of {} kernels (m <= {}) are A-subgroups, {} (K, H) pairs checked, {} satisfy the coset condition",
            w.finite_normal_nontrivial.len(),
            w.finite_subgroups_checked,
            w.finite_bound,
            w.kernels_a_subgroups,
            w.kernels_checked,
            w.kernel_bound,
            w.pairs_checked,
            w.decompositions.len()
        )?;
        if let Some((pair, class)) = &w.sample_rejection {
            writeln!(
                f,
                "        e.g. K={}, H={}: class {class} is not a union of K-cosets",
                pair.kernel, pair.top
            )?;
        }
        let t = &self.tensor;
        writeln!(
            f,
            "tensor: {} factor pairs among {} subgroups (bound {}), {} pairs checked, {} commute",
            t.factors.len(),
            t.subgroups,
            t.bound,
            t.pairs_checked,
            t.commuting_pairs
        )?;
        write!(f, "verdict: {}", self.verdict)
    }
}
