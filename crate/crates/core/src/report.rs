//! Report types shared by partition validation, axiom verification and the
//! command-line front end.

use std::fmt;

use serde::Serialize;

use crate::dihedral::Elem;
use crate::scheme::BasicSet;

/// A concrete counterexample attached to a failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// No template produces a class containing `element`.
    NotCovered { element: Elem },
    /// Two different classes contain `element`.
    Ambiguous {
        element: Elem,
        first: BasicSet,
        second: BasicSet,
    },
    /// The element is not in the group the scheme lives on.
    NotInGroup { element: Elem },
    /// The class of the identity is not `{1}`.
    IdentityNotSingleton { class: BasicSet },
    /// `class*` is not itself a class; `found` is the class of its first element.
    StarNotClass {
        class: BasicSet,
        star: BasicSet,
        found: BasicSet,
    },
    /// In `left · right`, two elements of `class` carry different coefficients.
    NotClassConstant {
        left: BasicSet,
        right: BasicSet,
        class: BasicSet,
        element_a: Elem,
        coeff_a: String,
        element_b: Elem,
        coeff_b: String,
    },
    /// The pair count `|{(x,y) ∈ C×D : xy = e}|` differs across `e ∈ E`.
    NonConstantCount {
        left: BasicSet,
        right: BasicSet,
        class: BasicSet,
        element_a: Elem,
        count_a: u64,
        element_b: Elem,
        count_b: u64,
    },
    /// An algebra element whose coefficients are not constant on `class`.
    NotInSpan {
        class: BasicSet,
        element_a: Elem,
        coeff_a: String,
        element_b: Elem,
        coeff_b: String,
    },
    /// `λ_CDE` has a value other than the one forced by the argument at hand.
    UnexpectedConstant {
        left: BasicSet,
        right: BasicSet,
        target: BasicSet,
        lambda: u64,
        expected: u64,
    },
    /// `g` is not alone in its class.
    NotSingleton { element: Elem, class: BasicSet },
    /// A set that was expected to be a class is not one.
    NotAClass { set: BasicSet, found: BasicSet },
    /// A class that is split by a set which should be a union of classes.
    SplitClass { class: BasicSet, inside: Elem, outside: Elem },
    /// Exponent arithmetic overflowed while computing `context`.
    Overflow { context: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotCovered { element } => write!(f, "{element} lies in no class"),
            Witness::Ambiguous {
                element,
                first,
                second,
            } => write!(f, "{element} lies in both {first} and {second}"),
            Witness::NotInGroup { element } => write!(f, "{element} is not in the group"),
            Witness::IdentityNotSingleton { class } => {
                write!(f, "class of 1 is {class}, not {{1}}")
            }
            Witness::StarNotClass { class, star, found } => {
                write!(f, "{class}* = {star} is not a class (class of its first element is {found})")
            }
            Witness::NotClassConstant {
                left,
                right,
                class,
                element_a,
                coeff_a,
                element_b,
                coeff_b,
            } => write!(
                f,
                "{left}·{right}: coefficients on {class} differ ({element_a} has {coeff_a}, {element_b} has {coeff_b})"
            ),
            Witness::NonConstantCount {
                left,
                right,
                class,
                element_a,
                count_a,
                element_b,
                count_b,
            } => write!(
                f,
                "pair count for {left}×{right} over {class} is not constant ({element_a}: {count_a}, {element_b}: {count_b})"
            ),
            Witness::NotInSpan {
                class,
                element_a,
                coeff_a,
                element_b,
                coeff_b,
            } => write!(
                f,
                "coefficients on {class} differ ({element_a} has {coeff_a}, {element_b} has {coeff_b})"
            ),
            Witness::UnexpectedConstant {
                left,
                right,
                target,
                lambda,
                expected,
            } => write!(
                f,
                "λ({left}, {right}, {target}) = {lambda}, expected {expected}"
            ),
            Witness::NotSingleton { element, class } => {
                write!(f, "{element} is not a singleton class (class is {class})")
            }
            Witness::NotAClass { set, found } => {
                write!(f, "{set} is not a class (class of its first element is {found})")
            }
            Witness::SplitClass {
                class,
                inside,
                outside,
            } => write!(f, "class {class} is split ({inside} inside, {outside} outside)"),
            Witness::Overflow { context } => write!(f, "exponent overflow in {context}"),
        }
    }
}

/// Outcome of one family of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Number of individual items (elements, classes or class pairs) examined.
    pub checked: u64,
    /// First failure, in deterministic order.
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass(checked: u64) -> Self {
        Self {
            passed: true,
            checked,
            witness: None,
        }
    }

    pub fn fail(checked: u64, witness: Witness) -> Self {
        Self {
            passed: false,
            checked,
            witness: Some(witness),
        }
    }
}

/// `λ_CDE` keyed by canonical class representatives.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StructureConstantRecord {
    #[serde(rename = "C")]
    pub left: Elem,
    #[serde(rename = "D")]
    pub right: Elem,
    #[serde(rename = "E")]
    pub target: Elem,
    pub lambda: u64,
}

/// Result of verifying the Schur-ring axioms on a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scheme: String,
    pub radius: u64,
    pub partition: CheckOutcome,
    pub star: CheckOutcome,
    pub closure: CheckOutcome,
    /// Nonzero structure constants over all ordered pairs of window classes.
    pub constants: Vec<StructureConstantRecord>,
    /// Every failure found, in deterministic order.
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.partition.passed && self.star.passed && self.closure.passed
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict} ({} checked)", self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme: {}", self.scheme)?;
        writeln!(f, "radius: {}", self.radius)?;
        writeln!(f, "partition: {}", self.partition)?;
        writeln!(f, "star:      {}", self.star)?;
        writeln!(f, "closure:   {}", self.closure)?;
        writeln!(f, "structure constants: {} nonzero", self.constants.len())?;
        if !self.witnesses.is_empty() {
            writeln!(f, "witnesses:")?;
            for w in &self.witnesses {
                writeln!(f, "  - {w}")?;
            }
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "Schur ring on window" } else { "NOT a Schur ring" }
        )
    }
}
