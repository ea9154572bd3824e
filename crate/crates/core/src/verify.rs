//! Exact verification of the Schur-ring axioms and structure constants.
//!
//! A scheme is checked on a window: the classes meeting `|power| ≤ radius` are
//! enumerated, and every ordered pair of them is multiplied exactly. Products
//! may leave the window; since class lookup is global, each pair check is a
//! complete statement about that pair.

use std::collections::{BTreeMap, HashSet};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraElement, Rational};
use crate::dihedral::{Elem, Overflow};
use crate::report::{CheckOutcome, StructureConstantRecord, VerificationReport, Witness};
use crate::scheme::{BasicSet, LookupError, PartitionScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Lookup(#[from] LookupError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("{0}")]
    Failed(Box<Witness>),
}

impl VerifyError {
    fn failed(w: Witness) -> Self {
        VerifyError::Failed(Box::new(w))
    }

    pub fn to_witness(&self, context: &str) -> Witness {
        match self {
            VerifyError::Lookup(e) => e.to_witness(context),
            VerifyError::Overflow(o) => Witness::Overflow {
                context: format!("{context}: {o}"),
            },
            VerifyError::Failed(w) => (**w).clone(),
        }
    }
}

fn simple_quantity(c: &BasicSet) -> AlgebraElement {
    AlgebraElement::simple_quantity(c.iter()).expect("classes are nonempty")
}

fn require_class(scheme: &PartitionScheme, set: &BasicSet) -> Result<(), VerifyError> {
    let found = scheme.class_of(set.representative())?;
    if found != *set {
        return Err(VerifyError::failed(Witness::NotAClass {
            set: set.clone(),
            found,
        }));
    }
    Ok(())
}

/// Number of pairs `(x, y) ∈ C × D` with `xy = e`.
pub fn pair_count(left: &BasicSet, right: &BasicSet, e: Elem) -> Result<u64, Overflow> {
    let mut count = 0;
    for x in left.iter() {
        if right.contains(x.try_inverse()?.try_mul(e)?) {
            count += 1;
        }
    }
    Ok(count)
}

/// `λ_CDE`, the common value of the pair count over `e ∈ E`.
pub fn structure_constant(
    scheme: &PartitionScheme,
    left: &BasicSet,
    right: &BasicSet,
    target: &BasicSet,
) -> Result<u64, VerifyError> {
    for c in [left, right, target] {
        require_class(scheme, c)?;
    }
    let first = target.representative();
    let value = pair_count(left, right, first)?;
    for e in target.iter().skip(1) {
        let other = pair_count(left, right, e)?;
        if other != value {
            return Err(VerifyError::failed(Witness::NonConstantCount {
                left: left.clone(),
                right: right.clone(),
                class: target.clone(),
                element_a: first,
                count_a: value,
                element_b: e,
                count_b: other,
            }));
        }
    }
    Ok(value)
}

/// `underline(C) · underline(D) = Σ λ_CDE underline(E)`, as `(E, λ)` pairs
/// sorted by canonical representative.
pub fn product_decomposition(
    scheme: &PartitionScheme,
    left: &BasicSet,
    right: &BasicSet,
) -> Result<Vec<(BasicSet, u64)>, VerifyError> {
    let product = simple_quantity(left).convolve(&simple_quantity(right))?;
    let mut seen: HashSet<Elem> = HashSet::new();
    let mut parts: BTreeMap<Elem, (BasicSet, u64)> = BTreeMap::new();
    for (g, coeff) in product.terms() {
        if seen.contains(&g) {
            continue;
        }
        let class = scheme.class_of(g)?;
        for h in class.iter() {
            let other = product.coeff(h);
            if other != *coeff {
                return Err(VerifyError::failed(Witness::NotClassConstant {
                    left: left.clone(),
                    right: right.clone(),
                    class: class.clone(),
                    element_a: g,
                    coeff_a: coeff.to_string(),
                    element_b: h,
                    coeff_b: other.to_string(),
                }));
            }
        }
        seen.extend(class.iter());
        // coefficients of a product of simple quantities are positive integers
        let lambda = coeff.to_integer().to_u64().expect("pair counts fit in u64");
        parts.insert(class.representative(), (class, lambda));
    }
    Ok(parts.into_values().collect())
}

/// Coordinates of `alpha` in the span of the class simple quantities, or a
/// witness class on which its coefficients are not constant.
pub fn span_coordinates(
    scheme: &PartitionScheme,
    alpha: &AlgebraElement,
) -> Result<Vec<(BasicSet, Rational)>, VerifyError> {
    let mut seen: HashSet<Elem> = HashSet::new();
    let mut out = Vec::new();
    for (g, coeff) in alpha.terms() {
        if seen.contains(&g) {
            continue;
        }
        let class = scheme.class_of(g)?;
        for h in class.iter() {
            let other = alpha.coeff(h);
            if other != *coeff {
                return Err(VerifyError::failed(Witness::NotInSpan {
                    class: class.clone(),
                    element_a: g,
                    coeff_a: coeff.to_string(),
                    element_b: h,
                    coeff_b: other.to_string(),
                }));
            }
        }
        seen.extend(class.iter());
        out.push((class, coeff.clone()));
    }
    out.sort_by_key(|(c, _)| c.representative());
    Ok(out)
}

pub fn in_span(scheme: &PartitionScheme, alpha: &AlgebraElement) -> Result<bool, LookupError> {
    match span_coordinates(scheme, alpha) {
        Ok(_) => Ok(true),
        Err(VerifyError::Failed(_)) => Ok(false),
        Err(VerifyError::Lookup(e)) => Err(e),
        Err(VerifyError::Overflow(o)) => Err(LookupError::Overflow(o)),
    }
}

/// `gD` for a singleton class `{g}`, checked to be a class again.
pub fn translate_class(
    scheme: &PartitionScheme,
    g: Elem,
    class: &BasicSet,
) -> Result<BasicSet, VerifyError> {
    let own = scheme.class_of(g)?;
    if own != BasicSet::singleton(g) {
        return Err(VerifyError::failed(Witness::NotSingleton { element: g, class: own }));
    }
    let moved = class.left_translate(g)?;
    require_class(scheme, &moved)?;
    Ok(moved)
}

/// Partition validity, star closure and product closure over all ordered pairs
/// of window classes, with the nonzero structure constants.
pub fn verify_axioms(scheme: &PartitionScheme, radius: u64) -> VerificationReport {
    let partition = scheme.validate_partition(radius);
    let mut witnesses: Vec<Witness> = partition.witness.iter().cloned().collect();

    let classes = match scheme.enumerate_classes(radius) {
        Ok(c) => c,
        Err(e) => {
            let w = e.to_witness("class enumeration");
            witnesses.push(w.clone());
            return VerificationReport {
                scheme: scheme.name().to_string(),
                radius,
                partition,
                star: CheckOutcome::fail(0, w.clone()),
                closure: CheckOutcome::fail(0, w),
                constants: Vec::new(),
                witnesses,
            };
        }
    };

    let mut star_failures = Vec::new();
    for c in &classes {
        let result = c
            .star()
            .map_err(VerifyError::from)
            .and_then(|star| {
                let found = scheme.class_of(star.representative())?;
                if found == star {
                    Ok(())
                } else {
                    Err(VerifyError::failed(Witness::StarNotClass {
                        class: c.clone(),
                        star,
                        found,
                    }))
                }
            });
        if let Err(e) = result {
            star_failures.push(e.to_witness("star closure"));
        }
    }
    let star = match star_failures.first() {
        None => CheckOutcome::pass(classes.len() as u64),
        Some(w) => CheckOutcome::fail(classes.len() as u64, w.clone()),
    };
    witnesses.extend(star_failures);

    let rows: Vec<Vec<Result<Vec<(BasicSet, u64)>, Witness>>> = classes
        .par_iter()
        .map(|c| {
            classes
                .iter()
                .map(|d| product_decomposition(scheme, c, d).map_err(|e| e.to_witness("product closure")))
                .collect()
        })
        .collect();

    let mut constants = Vec::new();
    let mut closure_failures = Vec::new();
    for (c, row) in classes.iter().zip(rows) {
        for (d, result) in classes.iter().zip(row) {
            match result {
                Ok(parts) => constants.extend(parts.into_iter().map(|(e, lambda)| {
                    StructureConstantRecord {
                        left: c.representative(),
                        right: d.representative(),
                        target: e.representative(),
                        lambda,
                    }
                })),
                Err(w) => closure_failures.push(w),
            }
        }
    }
    let pairs = (classes.len() * classes.len()) as u64;
    let closure = match closure_failures.first() {
        None => CheckOutcome::pass(pairs),
        Some(w) => CheckOutcome::fail(pairs, w.clone()),
    };
    witnesses.extend(closure_failures);
    constants.sort();

    VerificationReport {
        scheme: scheme.name().to_string(),
        radius,
        partition,
        star,
        closure,
        constants,
        witnesses,
    }
}

/// Multiplicity of `target` in a decomposition, zero when absent.
pub fn multiplicity(parts: &[(BasicSet, u64)], target: &BasicSet) -> u64 {
    parts
        .iter()
        .find(|(c, _)| c == target)
        .map(|(_, l)| *l)
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Sign;
    use crate::scheme::{builtin_scheme, Builtin, ClassTemplate, GroupKind, Member};

    fn set(xs: &[&str]) -> BasicSet {
        BasicSet::new(xs.iter().map(|x| x.parse::<Elem>().unwrap()))
    }

    #[test]
    fn structure_constant_examples() {
        let o1 = builtin_scheme(&Builtin::OrbitD(1)).unwrap();
        let c = set(&["z", "z^-1"]);
        let d = set(&["s", "z*s"]);
        assert_eq!(structure_constant(&o1, &c, &d, &d).unwrap(), 1);
        assert_eq!(structure_constant(&o1, &set(&["1"]), &d, &d).unwrap(), 1);

        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        let odd = set(&["z", "z^-1", "z*s", "z^-1*s"]);
        assert_eq!(structure_constant(&nt, &odd, &odd, &set(&["z^2", "z^-2"])).unwrap(), 2);
    }

    #[test]
    fn structure_constant_rejects_non_classes() {
        let o1 = builtin_scheme(&Builtin::OrbitD(1)).unwrap();
        let err = structure_constant(&o1, &set(&["z"]), &set(&["s", "z*s"]), &set(&["s", "z*s"]));
        assert!(matches!(err, Err(VerifyError::Failed(w)) if matches!(*w, Witness::NotAClass { .. })));
    }

    #[test]
    fn decomposition_examples() {
        let o1 = builtin_scheme(&Builtin::OrbitD(1)).unwrap();
        let parts = product_decomposition(&o1, &set(&["s", "z*s"]), &set(&["z^2", "z^-2"])).unwrap();
        assert_eq!(
            parts,
            vec![(set(&["z^-2*s", "z^3*s"]), 1), (set(&["z^-1*s", "z^2*s"]), 1)]
        );

        let d = set(&["z^5*s", "z^-4*s"]);
        assert_eq!(product_decomposition(&o1, &set(&["1"]), &d).unwrap(), vec![(d.clone(), 1)]);

        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        let parts = product_decomposition(
            &nt,
            &set(&["z", "z^-1", "z*s", "z^-1*s"]),
            &set(&["z^3", "z^-3", "z^3*s", "z^-3*s"]),
        )
        .unwrap();
        assert_eq!(
            parts,
            vec![
                (set(&["z^-4", "z^4"]), 2),
                (set(&["z^-4*s", "z^4*s"]), 2),
                (set(&["z^-2", "z^2"]), 2),
                (set(&["z^-2*s", "z^2*s"]), 2),
            ]
        );
    }

    #[test]
    fn builtins_verify() {
        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        let report = verify_axioms(&nt, 32);
        assert!(report.passed(), "{report}");
        assert!(report.witnesses.is_empty());
        for i in [0, 1, 2, 5] {
            let sch = builtin_scheme(&Builtin::OrbitD(i)).unwrap();
            assert!(verify_axioms(&sch, 32).passed(), "orbit-D({i})");
        }
    }

    #[test]
    fn broken_schemes_fail_with_witnesses() {
        let t_rot = ClassTemplate::unrestricted(vec![
            Member::new(Sign::Plus, 0, false),
            Member::new(Sign::Minus, 0, false),
        ])
        .unwrap();
        // reflections paired as {z^(2t) s, z^(2t+1) s}: a partition, but not closed
        let t_pairs = ClassTemplate::new(2, 0, vec![
            Member::new(Sign::Plus, 0, true),
            Member::new(Sign::Plus, 1, true),
        ])
        .unwrap();
        let broken =
            PartitionScheme::new(GroupKind::DihedralInfinite, "broken", vec![t_rot.clone(), t_pairs]).unwrap();
        let report = verify_axioms(&broken, 4);
        assert!(report.partition.passed);
        assert!(report.star.passed);
        assert!(!report.closure.passed);
        assert!(matches!(report.closure.witness, Some(Witness::NotClassConstant { .. })));

        // reflections as singletons under symmetric rotations: {z^j s}·{z^k s} = z^(j-k) alone
        let t_single = ClassTemplate::unrestricted(vec![Member::new(Sign::Plus, 0, true)]).unwrap();
        let lopsided =
            PartitionScheme::new(GroupKind::DihedralInfinite, "lopsided", vec![t_rot, t_single]).unwrap();
        let report = verify_axioms(&lopsided, 4);
        assert!(report.partition.passed);
        assert!(!report.closure.passed);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn translation_of_classes() {
        let dd = builtin_scheme(&Builtin::DiscreteD).unwrap();
        assert_eq!(
            translate_class(&dd, Elem::Z, &set(&["z^3*s"])).unwrap(),
            set(&["z^4*s"])
        );
        let hs = builtin_scheme(&Builtin::HalfShiftD(2)).unwrap();
        let g: Elem = "z*s".parse().unwrap();
        assert_eq!(
            translate_class(&hs, g, &set(&["z^2", "z^-2"])).unwrap(),
            set(&["z^-1*s", "z^3*s"])
        );
        let d = set(&["z^4", "z^-4"]);
        assert_eq!(translate_class(&hs, Elem::IDENTITY, &d).unwrap(), d);
        assert!(translate_class(&hs, Elem::Z, &d).is_err());
    }

    #[test]
    fn span_membership() {
        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        let odd: AlgebraElement = "z + z^-1 + z*s + z^-1*s + 3/2*z^2 + 3/2*z^-2".parse().unwrap();
        assert!(in_span(&nt, &odd).unwrap());
        let coords = span_coordinates(&nt, &odd).unwrap();
        assert_eq!(coords.len(), 2);
        let split: AlgebraElement = "z + z^-1".parse().unwrap();
        assert!(!in_span(&nt, &split).unwrap());
    }
}
