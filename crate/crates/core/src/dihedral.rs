//! Normal-form arithmetic in the infinite dihedral group
//! `D∞ = ⟨z, s : s² = 1, s⁻¹zs = z⁻¹⟩`.
//!
//! Every element is written uniquely as `z^i s^e` with `i ∈ ℤ` and `e ∈ {0, 1}`.
//! The infinite cyclic group `ℤ = ⟨z⟩` is the subgroup with `e = 0`.
//!
//! Exponents are `i64` with checked arithmetic. Any operation that would leave
//! the `i64` range reports [`Overflow`] instead of wrapping.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exponent arithmetic left the representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("exponent overflow in {op}")]
pub struct Overflow {
    pub op: &'static str,
}

impl Overflow {
    pub(crate) const fn new(op: &'static str) -> Self {
        Self { op }
    }
}

/// An element `z^power s^flip` of `D∞`.
///
/// The derived ordering is lexicographic on `(power, flip)`, which is the
/// canonical ordering used everywhere for printing and for picking class
/// representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem {
    pub power: i64,
    pub flip: bool,
}

impl Elem {
    pub const IDENTITY: Elem = Elem { power: 0, flip: false };
    pub const S: Elem = Elem { power: 0, flip: true };
    pub const Z: Elem = Elem { power: 1, flip: false };

    pub const fn new(power: i64, flip: bool) -> Self {
        Self { power, flip }
    }

    /// `z^i`.
    pub const fn rotation(power: i64) -> Self {
        Self { power, flip: false }
    }

    /// `z^i s`.
    pub const fn reflection(power: i64) -> Self {
        Self { power, flip: true }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Whether the element lies in the translation subgroup `⟨z⟩`.
    pub fn is_rotation(&self) -> bool {
        !self.flip
    }

    /// Normal form of `self · rhs`.
    ///
    /// `(i,0)(j,e) = (i+j, e)` and `(i,1)(j,e) = (i−j, 1⊕e)`.
    pub fn try_mul(self, rhs: Elem) -> Result<Elem, Overflow> {
        let power = if self.flip {
            self.power.checked_sub(rhs.power)
        } else {
            self.power.checked_add(rhs.power)
        }
        .ok_or(Overflow::new("multiply"))?;
        Ok(Elem::new(power, self.flip ^ rhs.flip))
    }

    pub fn try_inverse(self) -> Result<Elem, Overflow> {
        if self.flip {
            Ok(self)
        } else {
            let power = self.power.checked_neg().ok_or(Overflow::new("inverse"))?;
            Ok(Elem::rotation(power))
        }
    }

    /// `h⁻¹ · self · h`.
    pub fn try_conjugate(self, h: Elem) -> Result<Elem, Overflow> {
        h.try_inverse()?.try_mul(self)?.try_mul(h)
    }

    /// Panicking form of [`Elem::try_mul`]; overflow aborts with a message.
    pub fn mul(self, rhs: Elem) -> Elem {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}: {self} * {rhs}"))
    }

    pub fn inverse(self) -> Elem {
        self.try_inverse().unwrap_or_else(|e| panic!("{e}: {self}"))
    }

    pub fn conjugate(self, h: Elem) -> Elem {
        self.try_conjugate(h).unwrap_or_else(|e| panic!("{e}: {self} by {h}"))
    }

    /// Apply the automorphism `z ↦ z^eps, s ↦ z^k s` (with `eps = ±1`).
    ///
    /// `z^i s^e ↦ z^(eps·i + e·k) s^e`.
    pub fn try_apply_automorphism(self, eps: Sign, k: i64) -> Result<Elem, Overflow> {
        let op = Overflow::new("automorphism");
        let mut power = match eps {
            Sign::Plus => self.power,
            Sign::Minus => self.power.checked_neg().ok_or(op)?,
        };
        if self.flip {
            power = power.checked_add(k).ok_or(op)?;
        }
        Ok(Elem::new(power, self.flip))
    }

    pub fn apply_automorphism(self, eps: Sign, k: i64) -> Elem {
        self.try_apply_automorphism(eps, k)
            .unwrap_or_else(|e| panic!("{e}: {self}"))
    }

    /// Order of the element: 1 for the identity, 2 for reflections, `None` for
    /// non-trivial translations.
    pub fn order(&self) -> Option<u64> {
        match (self.power, self.flip) {
            (0, false) => Some(1),
            (_, true) => Some(2),
            _ => None,
        }
    }
}

/// Multiplier `±1` of an affine exponent map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.power, self.flip) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("s"),
            (i, false) => write!(f, "z^{i}"),
            (i, true) => write!(f, "z^{i}*s"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse group element {input:?}: {reason}")]
pub struct ParseElemError {
    pub input: String,
    pub reason: &'static str,
}

impl FromStr for Elem {
    type Err = ParseElemError;

    /// Accepts the canonical forms `1`, `s`, `z^i`, `z^i*s` and the shorthands
    /// `z`, `z*s`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseElemError {
            input: input.to_string(),
            reason,
        };
        let t = input.trim();
        match t {
            "1" => return Ok(Elem::IDENTITY),
            "s" => return Ok(Elem::S),
            "" => return Err(err("empty")),
            _ => {}
        }
        let (head, flip) = match t.strip_suffix("*s") {
            Some(h) => (h.trim_end(), true),
            None => (t, false),
        };
        let rest = head
            .strip_prefix('z')
            .ok_or_else(|| err("expected `1`, `s` or a power of z"))?;
        let power = if rest.is_empty() {
            1
        } else {
            let exp = rest.strip_prefix('^').ok_or_else(|| err("expected `^` after z"))?;
            exp.parse::<i64>().map_err(|_| err("exponent is not an integer"))?
        };
        Ok(Elem::new(power, flip))
    }
}

impl Serialize for Elem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
