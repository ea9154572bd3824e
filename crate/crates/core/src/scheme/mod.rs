//! Finite descriptions of finite-support partitions of `D∞` and `ℤ`.
//!
//! A partition is given by affine class templates. A template carries a
//! congruence `j ≡ r (mod m)` and a list of members `(a, b, e)` with
//! `a = ±1`; each admissible `j` generates the class
//! `{ z^(a·j + b) s^e : (a, b, e) ∈ members }`.
//!
//! Because every member is invertible in `j`, the class of any element can be
//! found globally by solving `a·j + b = i`; no window is involved.

mod builtin;
mod format;

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dihedral::{Elem, Overflow, Sign};
use crate::report::{CheckOutcome, Witness};

pub use builtin::{automorphism_orbit_scheme, builtin_scheme, orbit_scheme, Builtin};
pub use format::{parse_scheme, print_scheme, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    /// `D∞ = ⟨z, s⟩`.
    DihedralInfinite,
    /// `ℤ = ⟨z⟩`, embedded in `D∞` as the elements without `s`.
    IntegerLine,
}

impl GroupKind {
    pub fn contains(&self, g: Elem) -> bool {
        match self {
            GroupKind::DihedralInfinite => true,
            GroupKind::IntegerLine => !g.flip,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupKind::DihedralInfinite => "dihedral_infinite",
            GroupKind::IntegerLine => "integer_line",
        }
    }
}

/// A finite set of group elements, kept sorted and duplicate-free.
///
/// The first element is the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasicSet(Vec<Elem>);

impl BasicSet {
    pub fn new<I: IntoIterator<Item = Elem>>(elems: I) -> Self {
        let mut v: Vec<Elem> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn singleton(g: Elem) -> Self {
        Self(vec![g])
    }

    /// Least element in the `(power, flip)` order.
    ///
    /// Panics on the empty set, which never arises as a class.
    pub fn representative(&self) -> Elem {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_subset_of(&self, other: &BasicSet) -> bool {
        self.iter().all(|g| other.contains(g))
    }

    /// `C* = {g⁻¹ : g ∈ C}`.
    pub fn star(&self) -> Result<BasicSet, Overflow> {
        Ok(Self::new(self.iter().map(|g| g.try_inverse()).collect::<Result<Vec<_>, _>>()?))
    }

    /// `gC`.
    pub fn left_translate(&self, g: Elem) -> Result<BasicSet, Overflow> {
        Ok(Self::new(self.iter().map(|h| g.try_mul(h)).collect::<Result<Vec<_>, _>>()?))
    }

    /// Number of reflections `z^i s` in the set.
    pub fn reflection_count(&self) -> usize {
        self.0.iter().filter(|g| g.flip).count()
    }
}

impl fmt::Display for BasicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, g) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for BasicSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

/// One affine member `z^(a·j + b) s^flip` of a template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Member {
    pub sign: Sign,
    pub offset: i64,
    pub flip: bool,
}

impl Member {
    pub const fn new(sign: Sign, offset: i64, flip: bool) -> Self {
        Self { sign, offset, flip }
    }

    fn key(&self) -> (i64, i64, bool) {
        (self.sign.as_i64(), self.offset, self.flip)
    }

    pub fn at(&self, j: i64) -> Result<Elem, Overflow> {
        let scaled = match self.sign {
            Sign::Plus => Some(j),
            Sign::Minus => j.checked_neg(),
        };
        let power = scaled
            .and_then(|x| x.checked_add(self.offset))
            .ok_or(Overflow::new("template member"))?;
        Ok(Elem::new(power, self.flip))
    }

    /// The parameter `j` with `self.at(j) == g`, if the flip matches.
    pub fn solve(&self, g: Elem) -> Result<Option<i64>, Overflow> {
        if g.flip != self.flip {
            return Ok(None);
        }
        let diff = g
            .power
            .checked_sub(self.offset)
            .ok_or(Overflow::new("template solve"))?;
        let j = match self.sign {
            Sign::Plus => Some(diff),
            Sign::Minus => diff.checked_neg(),
        }
        .ok_or(Overflow::new("template solve"))?;
        Ok(Some(j))
    }
}

impl PartialOrd for Member {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Member {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefinitionError {
    #[error("template modulus must be positive, got {0}")]
    NonPositiveModulus(i64),
    #[error("template residue {residue} must lie in [0, {modulus})")]
    ResidueOutOfRange { modulus: i64, residue: i64 },
    #[error("coefficient must be ±1, got {0}")]
    CoefficientNotUnit(i64),
    #[error("flip must be 0 or 1, got {0}")]
    FlipNotBit(i64),
    #[error("template has no members")]
    EmptyMembers,
    #[error("template lists member (a={a}, b={b}, flip={flip}) twice")]
    DuplicateMember { a: i64, b: i64, flip: u8 },
    #[error("no templates")]
    NoTemplates,
    #[error("integer_line schemes cannot contain reflections")]
    ReflectionInIntegerScheme,
    #[error("unknown group {0:?} (expected \"dihedral_infinite\" or \"integer_line\")")]
    UnknownGroup(String),
    #[error("{0}")]
    InvalidParameter(String),
}

/// Congruence-constrained affine rule generating a family of classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassTemplate {
    modulus: u64,
    residue: u64,
    members: Vec<Member>,
}

impl ClassTemplate {
    pub fn new(modulus: u64, residue: u64, mut members: Vec<Member>) -> Result<Self, DefinitionError> {
        if modulus == 0 || modulus > i64::MAX as u64 {
            return Err(DefinitionError::NonPositiveModulus(modulus as i64));
        }
        if residue >= modulus {
            return Err(DefinitionError::ResidueOutOfRange {
                modulus: modulus as i64,
                residue: residue as i64,
            });
        }
        if members.is_empty() {
            return Err(DefinitionError::EmptyMembers);
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(DefinitionError::DuplicateMember {
                a: w[0].sign.as_i64(),
                b: w[0].offset,
                flip: w[0].flip as u8,
            });
        }
        Ok(Self {
            modulus,
            residue,
            members,
        })
    }

    /// Template with no congruence restriction (`j ≡ 0 mod 1`).
    pub fn unrestricted(members: Vec<Member>) -> Result<Self, DefinitionError> {
        Self::new(1, 0, members)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn admits(&self, j: i64) -> bool {
        (j as i128).rem_euclid(self.modulus as i128) == self.residue as i128
    }

    /// The class generated by an admissible `j` (duplicates collapsed).
    pub fn class_at(&self, j: i64) -> Result<BasicSet, Overflow> {
        Ok(BasicSet::new(
            self.members.iter().map(|m| m.at(j)).collect::<Result<Vec<_>, _>>()?,
        ))
    }

    fn sort_key(&self) -> (u64, u64, &[Member]) {
        (self.modulus, self.residue, &self.members)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error("{0} is not an element of the scheme's group")]
    NotInGroup(Elem),
    #[error("{0} is not covered by any template")]
    NotCovered(Elem),
    #[error("{element} lies in two different classes {first} and {second}")]
    Ambiguous {
        element: Elem,
        first: BasicSet,
        second: BasicSet,
    },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

impl LookupError {
    pub fn to_witness(&self, context: &str) -> Witness {
        match self {
            LookupError::NotInGroup(g) => Witness::NotInGroup { element: *g },
            LookupError::NotCovered(g) => Witness::NotCovered { element: *g },
            LookupError::Ambiguous {
                element,
                first,
                second,
            } => Witness::Ambiguous {
                element: *element,
                first: first.clone(),
                second: second.clone(),
            },
            LookupError::Overflow(o) => Witness::Overflow {
                context: format!("{context}: {o}"),
            },
        }
    }
}

/// A partition of `D∞` (or `ℤ`) described by finitely many templates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionScheme {
    group: GroupKind,
    name: String,
    templates: Vec<ClassTemplate>,
}

impl PartitionScheme {
    /// Templates are stored in canonical order: by `(modulus, residue)`, then
    /// by member list.
    pub fn new(
        group: GroupKind,
        name: impl Into<String>,
        mut templates: Vec<ClassTemplate>,
    ) -> Result<Self, DefinitionError> {
        if templates.is_empty() {
            return Err(DefinitionError::NoTemplates);
        }
        if group == GroupKind::IntegerLine
            && templates.iter().flat_map(|t| t.members.iter()).any(|m| m.flip)
        {
            return Err(DefinitionError::ReflectionInIntegerScheme);
        }
        templates.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(Self {
            group,
            name: name.into(),
            templates,
        })
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn templates(&self) -> &[ClassTemplate] {
        &self.templates
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The unique class containing `g`.
    pub fn class_of(&self, g: Elem) -> Result<BasicSet, LookupError> {
        if !self.group.contains(g) {
            return Err(LookupError::NotInGroup(g));
        }
        let mut found: Option<BasicSet> = None;
        for t in &self.templates {
            for m in &t.members {
                let Some(j) = m.solve(g)? else { continue };
                if !t.admits(j) {
                    continue;
                }
                let class = t.class_at(j)?;
                match &found {
                    None => found = Some(class),
                    Some(prev) if *prev == class => {}
                    Some(prev) => {
                        return Err(LookupError::Ambiguous {
                            element: g,
                            first: prev.clone(),
                            second: class,
                        })
                    }
                }
            }
        }
        found.ok_or(LookupError::NotCovered(g))
    }

    /// Whether `set` is exactly one class.
    pub fn is_class(&self, set: &BasicSet) -> Result<bool, LookupError> {
        if set.is_empty() {
            return Ok(false);
        }
        Ok(self.class_of(set.representative())? == *set)
    }

    /// Group elements with `|power| ≤ radius`, walked outward from the
    /// identity: `1, s, z, zs, z⁻¹, z⁻¹s, z², …` (reflections skipped for `ℤ`).
    pub fn window_elements(&self, radius: u64) -> Vec<Elem> {
        let r = radius.min(i64::MAX as u64) as i64;
        let flips: &[bool] = match self.group {
            GroupKind::DihedralInfinite => &[false, true],
            GroupKind::IntegerLine => &[false],
        };
        let mut out = Vec::new();
        for n in 0..=r {
            let powers: &[i64] = if n == 0 { &[0] } else { &[n, -n] };
            for &p in powers {
                for &f in flips {
                    out.push(Elem::new(p, f));
                }
            }
        }
        out
    }

    /// All distinct classes meeting the window, in order of first appearance
    /// along [`PartitionScheme::window_elements`].
    pub fn enumerate_classes(&self, radius: u64) -> Result<Vec<BasicSet>, LookupError> {
        let mut seen: HashSet<Elem> = HashSet::new();
        let mut classes = Vec::new();
        for g in self.window_elements(radius) {
            if seen.contains(&g) {
                continue;
            }
            let class = self.class_of(g)?;
            seen.extend(class.iter());
            classes.push(class);
        }
        Ok(classes)
    }

    /// Checks on the window that every element is covered exactly once, that
    /// class membership is consistent, and that `{1}` is a class.
    pub fn validate_partition(&self, radius: u64) -> CheckOutcome {
        let mut checked = 0;
        for g in self.window_elements(radius) {
            checked += 1;
            let class = match self.class_of(g) {
                Ok(c) => c,
                Err(e) => return CheckOutcome::fail(checked, e.to_witness("partition")),
            };
            if g.is_identity() && class != BasicSet::singleton(g) {
                return CheckOutcome::fail(checked, Witness::IdentityNotSingleton { class });
            }
            for h in class.clone().iter().filter(|h| *h != g) {
                match self.class_of(h) {
                    Ok(other) if other == class => {}
                    Ok(other) => {
                        return CheckOutcome::fail(
                            checked,
                            Witness::Ambiguous {
                                element: h,
                                first: class,
                                second: other,
                            },
                        )
                    }
                    Err(e) => return CheckOutcome::fail(checked, e.to_witness("partition")),
                }
            }
        }
        CheckOutcome::pass(checked)
    }
}

impl fmt::Display for PartitionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.name.is_empty() { "<unnamed>" } else { &self.name };
        write!(f, "{name} [{}]", self.group.as_str())?;
        for t in &self.templates {
            write!(f, "\n  j ≡ {} (mod {}): {{", t.residue, t.modulus)?;
            for (n, m) in t.members.iter().enumerate() {
                if n > 0 {
                    f.write_str(", ")?;
                }
                let a = if m.sign == Sign::Plus { "" } else { "-" };
                write!(f, "z^({a}j{:+})", m.offset)?;
                if m.flip {
                    f.write_str("*s")?;
                }
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}
