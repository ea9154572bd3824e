//! Sufficient criteria for `⟨z⟩` to be an A-subgroup, read off the class of
//! `z` and the spread of reflection exponents inside classes.
//!
//! Writing `t` for the least and `l` for the greatest `|i − j|` over pairs of
//! reflections `z^i s ≠ z^j s` sharing a class:
//!
//! * if the class of `z` lies in `⟨z⟩`, then `⟨z⟩` is an A-subgroup;
//! * if the class of `z` meets the reflections, it holds at least two of them;
//! * if `l` is odd and `t > 2`, then `⟨z⟩` is an A-subgroup.
//!
//! `t` is computed exactly from the templates. `l` is unbounded as soon as a
//! template pairs `z^(j+b) s` with `z^(-j+c) s`, so only its window value is
//! reported.

use serde::Serialize;

use crate::dihedral::{Elem, Overflow, Sign};
use crate::scheme::{BasicSet, ClassTemplate, PartitionScheme};
use crate::subgroup::Subgroup;

use super::subgroups::{is_a_set, ASetEvidence, SetQuery};
use super::AnalysisError;

/// A spread value together with a class attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spread {
    pub value: u64,
    pub class: BasicSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Criterion {
    /// The hypothesis fails; nothing follows.
    NotApplicable { reason: String },
    /// The hypothesis holds and the conclusion was checked.
    Fires { confirmed: bool },
    /// A necessary condition holds.
    Satisfied,
    /// A necessary condition fails: the scheme cannot be a Schur ring.
    Violated { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionCriteriaReport {
    pub radius: u64,
    pub class_of_z: BasicSet,
    pub class_in_translations: bool,
    pub reflection_count: usize,
    /// Exponents `m` of the reflections `z^m s` in the class of `z`.
    pub reflection_exponents: Vec<i64>,
    pub class_criterion: Criterion,
    pub reflection_count_criterion: Criterion,
    /// Exact minimum spread; absent when no class holds two reflections.
    pub t: Option<Spread>,
    /// Maximum spread over the window classes.
    pub l_window: Option<Spread>,
    pub l_window_bounded: bool,
    /// Some template produces classes of arbitrarily large spread.
    pub l_unbounded: bool,
    /// `l_window` is odd at both `radius` and `2·radius + 1`.
    pub l_parity_stable: bool,
    pub spread_criterion: Criterion,
    /// Exact A-set test of `⟨z⟩`, for comparison with the criteria.
    pub translations: ASetEvidence,
}

impl ReflectionCriteriaReport {
    /// Whether some criterion fired and confirmed that `⟨z⟩` is an A-subgroup.
    pub fn concludes_a_subgroup(&self) -> bool {
        [&self.class_criterion, &self.spread_criterion]
            .iter()
            .any(|c| matches!(c, Criterion::Fires { confirmed: true }))
    }
}

/// Least nonzero `|x|` with `x ≡ base (mod step)`, as a signed value.
fn least_nonzero_in_progression(base: i128, step: i128) -> i128 {
    let x = base.rem_euclid(step);
    if x == 0 {
        step
    } else if x <= step - x {
        x
    } else {
        x - step
    }
}

/// Least spread of the reflection pairs generated by one template, with the
/// parameter attaining it.
fn template_min_spread(t: &ClassTemplate) -> Option<(u64, i64)> {
    let refl: Vec<_> = t.members().iter().filter(|m| m.flip).collect();
    let r = t.residue() as i128;
    let step = t.modulus() as i128;
    let mut best: Option<(u64, i64)> = None;
    for (idx, p) in refl.iter().enumerate() {
        for q in &refl[idx + 1..] {
            let candidate = if p.sign == q.sign {
                // constant spread |b₁ − b₂|, attained at every admissible j
                ((p.offset as i128 - q.offset as i128).unsigned_abs(), r)
            } else {
                let (plus, minus) = if p.sign == Sign::Plus { (p, q) } else { (q, p) };
                // spread (j + b₁) − (−j + b₂) = 2j + c over j ≡ r (mod step)
                let c = plus.offset as i128 - minus.offset as i128;
                let v = least_nonzero_in_progression(2 * r + c, 2 * step);
                (v.unsigned_abs(), (v - c) / 2)
            };
            let (Ok(value), Ok(j)) = (u64::try_from(candidate.0), i64::try_from(candidate.1)) else {
                continue;
            };
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, j));
            }
        }
    }
    best
}

/// Exact `t` with an attaining class.
pub fn min_reflection_spread(scheme: &PartitionScheme) -> Result<Option<Spread>, Overflow> {
    let mut best: Option<Spread> = None;
    for t in scheme.templates() {
        if let Some((value, j)) = template_min_spread(t) {
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(Spread {
                    value,
                    class: t.class_at(j)?,
                });
            }
        }
    }
    Ok(best)
}

fn class_spread(class: &BasicSet) -> Option<u64> {
    let powers: Vec<i64> = class.iter().filter(|g| g.flip).map(|g| g.power).collect();
    if powers.len() < 2 {
        return None;
    }
    let lo = *powers.iter().min().unwrap();
    let hi = *powers.iter().max().unwrap();
    Some((hi as i128 - lo as i128) as u64)
}

/// `l` restricted to the classes meeting the window.
pub fn window_max_spread(scheme: &PartitionScheme, radius: u64) -> Result<Option<Spread>, AnalysisError> {
    let mut best: Option<Spread> = None;
    for class in scheme.enumerate_classes(radius)? {
        if let Some(value) = class_spread(&class) {
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(Spread { value, class });
            }
        }
    }
    Ok(best)
}

fn unbounded_spread(scheme: &PartitionScheme) -> bool {
    scheme.templates().iter().any(|t| {
        let refl = t.members().iter().filter(|m| m.flip);
        refl.clone().any(|m| m.sign == Sign::Plus) && refl.clone().any(|m| m.sign == Sign::Minus)
    })
}

/// Computes the report. The scheme is expected to verify at `radius`; the
/// criteria are only meaningful for Schur rings.
pub fn reflection_criteria_report(
    scheme: &PartitionScheme,
    radius: u64,
) -> Result<ReflectionCriteriaReport, AnalysisError> {
    let class_of_z = scheme.class_of(Elem::Z)?;
    let reflection_exponents: Vec<i64> = class_of_z.iter().filter(|g| g.flip).map(|g| g.power).collect();
    let reflection_count = reflection_exponents.len();
    let class_in_translations = reflection_count == 0;
    let translations = is_a_set(scheme, &SetQuery::Subgroup(Subgroup::TRANSLATIONS), radius);

    let class_criterion = if class_in_translations {
        Criterion::Fires {
            confirmed: translations.holds,
        }
    } else {
        Criterion::NotApplicable {
            reason: format!("class of z {class_of_z} meets the reflections"),
        }
    };
    let reflection_count_criterion = match reflection_count {
        0 => Criterion::NotApplicable {
            reason: "class of z holds no reflection".into(),
        },
        1 => Criterion::Violated {
            reason: format!("class of z {class_of_z} holds a single reflection"),
        },
        _ => Criterion::Satisfied,
    };

    let t = min_reflection_spread(scheme)?;
    let l_window = window_max_spread(scheme, radius)?;
    let wide = window_max_spread(scheme, radius.saturating_mul(2).saturating_add(1))?;
    let odd = |s: &Option<Spread>| s.as_ref().is_some_and(|s| s.value % 2 == 1);
    let l_parity_stable = odd(&l_window) && odd(&wide);

    let spread_criterion = match (&t, l_parity_stable) {
        (None, _) => Criterion::NotApplicable {
            reason: "no class holds two reflections".into(),
        },
        (Some(t), _) if t.value <= 2 => Criterion::NotApplicable {
            reason: format!("t = {} is not greater than 2", t.value),
        },
        (Some(_), false) => Criterion::NotApplicable {
            reason: "l is not stably odd on the window".into(),
        },
        (Some(_), true) => Criterion::Fires {
            confirmed: translations.holds,
        },
    };

    Ok(ReflectionCriteriaReport {
        radius,
        class_of_z,
        class_in_translations,
        reflection_count,
        reflection_exponents,
        class_criterion,
        reflection_count_criterion,
        t,
        l_window,
        l_window_bounded: true,
        l_unbounded: unbounded_spread(scheme),
        l_parity_stable,
        spread_criterion,
        translations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Sign::{Minus, Plus};
    use crate::scheme::{builtin_scheme, Builtin, GroupKind, Member};

    fn set(xs: &[&str]) -> BasicSet {
        BasicSet::new(xs.iter().map(|x| x.parse::<Elem>().unwrap()))
    }

    #[test]
    fn nontraditional_report() {
        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        let rep = reflection_criteria_report(&nt, 16).unwrap();
        assert_eq!(rep.class_of_z, set(&["z", "z^-1", "z*s", "z^-1*s"]));
        assert_eq!(rep.reflection_count, 2);
        assert_eq!(rep.reflection_exponents, vec![-1, 1]);
        assert_eq!(rep.reflection_count_criterion, Criterion::Satisfied);
        let t = rep.t.as_ref().unwrap();
        assert_eq!(t.value, 2);
        assert_eq!(t.class, rep.class_of_z);
        assert!(matches!(rep.spread_criterion, Criterion::NotApplicable { .. }));
        assert!(!rep.translations.holds);
        assert!(!rep.concludes_a_subgroup());
        assert!(rep.l_unbounded);
        // {z^16 s, z^-16 s} is the widest window class
        assert_eq!(rep.l_window.unwrap().value, 32);
    }

    #[test]
    fn class_criterion_fires() {
        for b in [Builtin::DiscreteD, Builtin::OrbitD(3), Builtin::HalfShiftD(4), Builtin::OrbitD(0)] {
            let rep = reflection_criteria_report(&builtin_scheme(&b).unwrap(), 8).unwrap();
            assert!(rep.class_in_translations, "{b}");
            assert_eq!(rep.class_criterion, Criterion::Fires { confirmed: true }, "{b}");
        }
        let d = reflection_criteria_report(&builtin_scheme(&Builtin::DiscreteD).unwrap(), 4).unwrap();
        assert_eq!(d.class_of_z, set(&["z"]));
        assert!(d.t.is_none());
    }

    #[test]
    fn exact_t_matches_window_minimum() {
        for b in Builtin::catalogue() {
            let sch = builtin_scheme(&b).unwrap();
            let exact = min_reflection_spread(&sch).unwrap().map(|s| s.value);
            let window = sch
                .enumerate_classes(40)
                .unwrap()
                .iter()
                .filter_map(|c| {
                    let p: Vec<i64> = c.iter().filter(|g| g.flip).map(|g| g.power).collect();
                    let mut best = None::<u64>;
                    for (i, x) in p.iter().enumerate() {
                        for y in &p[i + 1..] {
                            let d = x.abs_diff(*y);
                            best = Some(best.map_or(d, |b| b.min(d)));
                        }
                    }
                    best
                })
                .min();
            assert_eq!(exact, window, "{b}");
        }
    }

    #[test]
    fn orbit_t_values() {
        let t = |i| {
            min_reflection_spread(&builtin_scheme(&Builtin::OrbitD(i)).unwrap())
                .unwrap()
                .unwrap()
        };
        assert_eq!(t(5).value, 1);
        assert_eq!(t(6).value, 2);
        assert_eq!(t(6).class, set(&["z^2*s", "z^4*s"]));
    }

    #[test]
    fn spread_criterion_mechanics() {
        // pairs {z^j s, z^(j+3) s}: t = l = 3; not a Schur ring, but the
        // hypotheses hold and ⟨z⟩ is a union of classes
        let refl = |b| Member::new(Plus, b, true);
        let sym = ClassTemplate::unrestricted(vec![Member::new(Plus, 0, false), Member::new(Minus, 0, false)]).unwrap();
        let templates = (0..3)
            .map(|r| ClassTemplate::new(6, r, vec![refl(0), refl(3)]).unwrap())
            .chain([sym])
            .collect();
        let sch = PartitionScheme::new(GroupKind::DihedralInfinite, "gap3", templates).unwrap();
        assert!(sch.validate_partition(20).passed);
        let rep = reflection_criteria_report(&sch, 8).unwrap();
        assert_eq!(rep.t.as_ref().unwrap().value, 3);
        assert_eq!(rep.l_window.as_ref().unwrap().value, 3);
        assert!(!rep.l_unbounded);
        assert!(rep.l_parity_stable);
        assert_eq!(rep.spread_criterion, Criterion::Fires { confirmed: true });
    }

    #[test]
    fn progression_minimum() {
        assert_eq!(least_nonzero_in_progression(0, 4), 4);
        assert_eq!(least_nonzero_in_progression(3, 4), -1);
        assert_eq!(least_nonzero_in_progression(-5, 4), -1);
        assert_eq!(least_nonzero_in_progression(2, 4), 2);
    }
}
