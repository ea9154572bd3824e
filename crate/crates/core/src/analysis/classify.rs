//! Classification of Schur rings over `ℤ`, and over `D∞` when `⟨z⟩` is an
//! A-subgroup.
//!
//! Over `ℤ` every Schur ring is discrete or symmetric. Over `D∞` with `⟨z⟩`
//! an A-subgroup, the restriction to `⟨z⟩` is again discrete or symmetric.
//! A discrete restriction forces the full group algebra. A symmetric one
//! forces the classes `{z^j, z^-j}` and `{z^j s, z^(i-j) s}` for the `i` with
//! `{s, z^i s}` the class of `s`; the class of `s` can never have three or
//! more elements.

use std::fmt;

use serde::Serialize;

use crate::dihedral::Elem;
use crate::report::{VerificationReport, Witness};
use crate::scheme::{BasicSet, GroupKind, PartitionScheme};
use crate::subgroup::Subgroup;
use crate::verify::{structure_constant, verify_axioms};

use super::subgroups::{is_a_set, ASetEvidence, SetQuery};
use super::AnalysisError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// `ℤ` with singleton classes.
    IntegerDiscrete,
    /// `ℤ` with classes `{z^j, z^-j}`.
    IntegerSymmetric,
    /// All classes of `D∞` are singletons.
    FullGroupAlgebra,
    /// Classes `{z^j, z^-j}` and `{z^j s, z^(i-j) s}`.
    OrbitFamily {
        i: i64,
        /// For even nonzero `i`, the one reflection class of size one (when it
        /// lies in the window).
        singleton_reflection: Option<Elem>,
    },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::IntegerDiscrete => f.write_str("discrete Schur ring over Z"),
            Classification::IntegerSymmetric => f.write_str("symmetric Schur ring over Z"),
            Classification::FullGroupAlgebra => f.write_str("full group algebra F[Z⋊Z2]"),
            Classification::OrbitFamily { i, .. } => write!(f, "orbit family, i={i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ClassifyError {
    /// `⟨z⟩` is not a union of classes.
    TranslationsNotASubgroup { evidence: Box<ASetEvidence> },
    /// The scheme fails verification on the window.
    NotVerified { report: Box<VerificationReport> },
    /// The class of `s` has three or more elements. Such a scheme cannot be a
    /// Schur ring; `witness` is the concrete failure.
    LargeReflectionClass {
        class_of_s: BasicSet,
        witness: Option<Box<Witness>>,
    },
    /// The restriction to `⟨z⟩` is neither discrete nor symmetric.
    RestrictionNeither { class: BasicSet },
    /// A class differs from the one forced by the restriction.
    Mismatch { expected: BasicSet, found: BasicSet },
    /// Two reflection classes of size one (beyond what is forced).
    ExtraSingleton { element: Elem },
    /// Class lookup or arithmetic failed.
    Lookup { witness: Box<Witness> },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::TranslationsNotASubgroup { evidence } => {
                write!(f, "<z> is not an A-subgroup")?;
                if let Some(w) = &evidence.witness {
                    write!(f, ": {w}")?;
                }
                Ok(())
            }
            ClassifyError::NotVerified { report } => {
                write!(f, "scheme does not verify at radius {}", report.radius)?;
                if let Some(w) = report.witnesses.first() {
                    write!(f, ": {w}")?;
                }
                Ok(())
            }
            ClassifyError::LargeReflectionClass { class_of_s, witness } => {
                write!(f, "class of s is {class_of_s} with {} elements, which is impossible", class_of_s.len())?;
                if let Some(w) = witness {
                    write!(f, ": {w}")?;
                }
                Ok(())
            }
            ClassifyError::RestrictionNeither { class } => {
                write!(f, "restriction to <z> is neither discrete nor symmetric (class {class})")
            }
            ClassifyError::Mismatch { expected, found } => {
                write!(f, "expected class {expected}, found {found}")
            }
            ClassifyError::ExtraSingleton { element } => {
                write!(f, "unexpected singleton reflection class {{{element}}}")
            }
            ClassifyError::Lookup { witness } => write!(f, "{witness}"),
        }
    }
}

impl From<AnalysisError> for ClassifyError {
    fn from(e: AnalysisError) -> Self {
        ClassifyError::Lookup {
            witness: Box::new(e.to_witness("classification")),
        }
    }
}

fn lookup(scheme: &PartitionScheme, g: Elem) -> Result<BasicSet, ClassifyError> {
    scheme.class_of(g).map_err(|e| ClassifyError::Lookup {
        witness: Box::new(e.to_witness("classification")),
    })
}

/// `true` when the window classes inside `⟨z⟩` are all singletons, `false`
/// when they are all of the form `{z^j, z^-j}`.
fn restriction_kind(classes: &[BasicSet]) -> Result<bool, ClassifyError> {
    let rotations: Vec<&BasicSet> = classes.iter().filter(|c| c.iter().all(|g| !g.flip)).collect();
    if rotations.iter().all(|c| c.len() == 1) {
        return Ok(true);
    }
    for c in rotations {
        let g = c.representative();
        let expected = BasicSet::new([g, Elem::rotation(-g.power)]);
        if *c != expected {
            return Err(ClassifyError::RestrictionNeither { class: c.clone() });
        }
    }
    Ok(false)
}

/// Looks for the concrete failure behind a class of `s` with three or more
/// elements: `λ(C, D, D)` for `C = {z^i, z^-i}` must be 1 when `z^i s ∈ D`.
fn large_class_witness(scheme: &PartitionScheme, class_of_s: &BasicSet, radius: u64) -> Option<Witness> {
    for g in class_of_s.iter().filter(|g| g.power != 0) {
        let Ok(c) = scheme.class_of(Elem::rotation(g.power)) else { continue };
        match structure_constant(scheme, &c, class_of_s, class_of_s) {
            Ok(1) => {}
            Ok(lambda) => {
                return Some(Witness::UnexpectedConstant {
                    left: c,
                    right: class_of_s.clone(),
                    target: class_of_s.clone(),
                    lambda,
                    expected: 1,
                })
            }
            Err(e) => return Some(e.to_witness("classification")),
        }
    }
    verify_axioms(scheme, radius).witnesses.into_iter().next()
}

/// Classifies `scheme` from its classes meeting the window.
pub fn classify(scheme: &PartitionScheme, radius: u64) -> Result<Classification, ClassifyError> {
    if !scheme.validate_partition(radius).passed {
        return Err(ClassifyError::NotVerified {
            report: Box::new(verify_axioms(scheme, radius)),
        });
    }
    if scheme.group() == GroupKind::DihedralInfinite {
        let evidence = is_a_set(scheme, &SetQuery::Subgroup(Subgroup::TRANSLATIONS), radius);
        if !evidence.holds {
            return Err(ClassifyError::TranslationsNotASubgroup { evidence: Box::new(evidence) });
        }
        let class_of_s = lookup(scheme, Elem::S)?;
        if class_of_s.len() >= 3 {
            let witness = large_class_witness(scheme, &class_of_s, radius);
            return Err(ClassifyError::LargeReflectionClass {
                class_of_s,
                witness: witness.map(Box::new),
            });
        }
    }
    let report = verify_axioms(scheme, radius);
    if !report.passed() {
        return Err(ClassifyError::NotVerified {
            report: Box::new(report),
        });
    }
    let classes = scheme.enumerate_classes(radius).map_err(AnalysisError::from)?;
    let discrete = restriction_kind(&classes)?;

    if scheme.group() == GroupKind::IntegerLine {
        return Ok(if discrete {
            Classification::IntegerDiscrete
        } else {
            Classification::IntegerSymmetric
        });
    }

    if discrete {
        if let Some(c) = classes.iter().find(|c| c.len() > 1) {
            return Err(ClassifyError::Mismatch {
                expected: BasicSet::singleton(c.representative()),
                found: c.clone(),
            });
        }
        return Ok(Classification::FullGroupAlgebra);
    }

    let class_of_s = lookup(scheme, Elem::S)?;
    let i = match class_of_s.as_slice() {
        [_] => 0,
        [a, b] => {
            let other = if *a == Elem::S { b } else { a };
            other.power
        }
        _ => unreachable!("checked above"),
    };
    let mut singleton_reflection = None;
    for c in &classes {
        let g = c.representative();
        let expected = if g.flip {
            let partner = i.checked_sub(g.power).ok_or_else(|| ClassifyError::Lookup {
                witness: Box::new(Witness::Overflow {
                    context: "orbit partner".into(),
                }),
            })?;
            BasicSet::new([g, Elem::reflection(partner)])
        } else {
            BasicSet::new([g, Elem::rotation(-g.power)])
        };
        if *c != expected {
            return Err(ClassifyError::Mismatch {
                expected,
                found: c.clone(),
            });
        }
        if g.flip && c.len() == 1 && i != 0 {
            if singleton_reflection.is_some() {
                return Err(ClassifyError::ExtraSingleton { element: g });
            }
            singleton_reflection = Some(g);
        }
    }
    Ok(Classification::OrbitFamily {
        i,
        singleton_reflection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Sign::{Minus, Plus};
    use crate::scheme::{builtin_scheme, orbit_scheme, Builtin, ClassTemplate, Member};

    #[test]
    fn builtin_classifications() {
        let c = |b| classify(&builtin_scheme(&b).unwrap(), 12).unwrap();
        assert_eq!(c(Builtin::DiscreteD), Classification::FullGroupAlgebra);
        assert_eq!(c(Builtin::DiscreteD).to_string(), "full group algebra F[Z⋊Z2]");
        assert_eq!(c(Builtin::OrbitD(3)).to_string(), "orbit family, i=3");
        assert_eq!(c(Builtin::OrbitD(0)).to_string(), "orbit family, i=0");
        assert_eq!(
            c(Builtin::HalfShiftD(2)),
            Classification::OrbitFamily {
                i: 2,
                singleton_reflection: Some(Elem::reflection(1)),
            }
        );
        assert_eq!(c(Builtin::DiscreteZ), Classification::IntegerDiscrete);
        assert_eq!(c(Builtin::SymmetricZ), Classification::IntegerSymmetric);
    }

    #[test]
    fn orbit_schemes_recover_parameter() {
        for k in -5..=5 {
            match classify(&orbit_scheme(k), 10).unwrap() {
                Classification::OrbitFamily { i, .. } => assert_eq!(i, k),
                other => panic!("k = {k}: {other}"),
            }
        }
    }

    #[test]
    fn nontraditional_is_rejected() {
        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        match classify(&nt, 8) {
            Err(ClassifyError::TranslationsNotASubgroup { evidence }) => assert!(evidence.witness.is_some()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn large_reflection_class_has_witness() {
        // symmetric rotations with reflection triples {z^j s, z^(j+1) s, z^(j+2) s}
        let refl = |b| Member::new(Plus, b, true);
        let sym = ClassTemplate::unrestricted(vec![Member::new(Plus, 0, false), Member::new(Minus, 0, false)]).unwrap();
        let triples = ClassTemplate::new(3, 0, vec![refl(0), refl(1), refl(2)]).unwrap();
        let sch = PartitionScheme::new(GroupKind::DihedralInfinite, "triples", vec![sym, triples]).unwrap();
        assert!(sch.validate_partition(20).passed);
        match classify(&sch, 8) {
            Err(ClassifyError::LargeReflectionClass { class_of_s, witness }) => {
                assert_eq!(class_of_s.len(), 3);
                assert!(witness.is_some());
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
