//! Closed-form subgroups of `D∞`.
//!
//! Every subgroup of `D∞` is either a translation subgroup `⟨z^m⟩`, or a
//! translation subgroup together with one coset of reflections
//! `{z^(b + km) s : k ∈ ℤ}`. The case `m = 0` covers `{1}` and the order-2
//! subgroups `⟨z^b s⟩`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::dihedral::{Elem, Overflow};

/// Canonical description of a subgroup of `D∞`.
///
/// When `modulus > 0` the reflection offset is reduced into `[0, modulus)`.
/// When `modulus == 0` the offset (if any) is the exact exponent of the single
/// reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Subgroup {
    modulus: u64,
    reflection_offset: Option<i64>,
}

impl Subgroup {
    pub const TRIVIAL: Subgroup = Subgroup {
        modulus: 0,
        reflection_offset: None,
    };

    /// The whole group `D∞ = ⟨z, s⟩`.
    pub const WHOLE: Subgroup = Subgroup {
        modulus: 1,
        reflection_offset: Some(0),
    };

    /// The translation subgroup `⟨z⟩`.
    pub const TRANSLATIONS: Subgroup = Subgroup {
        modulus: 1,
        reflection_offset: None,
    };

    /// `⟨z^m⟩`.
    pub const fn translations(modulus: u64) -> Self {
        Self {
            modulus,
            reflection_offset: None,
        }
    }

    /// `⟨z^m, z^b s⟩`, with the offset reduced modulo `m` when `m > 0`.
    pub fn with_reflection(modulus: u64, offset: i64) -> Self {
        let offset = if modulus == 0 {
            offset
        } else {
            // moduli above i64::MAX are rejected by generated_subgroup
            i64::try_from((offset as i128).rem_euclid(modulus as i128))
                .expect("subgroup modulus exceeds i64 range")
        };
        Self {
            modulus,
            reflection_offset: Some(offset),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reflection_offset(&self) -> Option<i64> {
        self.reflection_offset
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::TRIVIAL
    }

    /// `Some(order)` for the finite subgroups (`{1}` and `⟨z^b s⟩`).
    pub fn order(&self) -> Option<u64> {
        match (self.modulus, self.reflection_offset) {
            (0, None) => Some(1),
            (0, Some(_)) => Some(2),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn contains(&self, g: Elem) -> bool {
        let m = self.modulus as i128;
        if !g.flip {
            return if m == 0 {
                g.power == 0
            } else {
                (g.power as i128).rem_euclid(m) == 0
            };
        }
        match self.reflection_offset {
            None => false,
            Some(b) if m == 0 => g.power == b,
            Some(b) => (g.power as i128 - b as i128).rem_euclid(m) == 0,
        }
    }

    /// A generating set: `z^m` (when `m > 0`) and `z^b s` (when present).
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::with_capacity(2);
        if self.modulus > 0 {
            gens.push(Elem::rotation(self.modulus as i64));
        }
        if let Some(b) = self.reflection_offset {
            gens.push(Elem::reflection(b));
        }
        gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.generators().into_iter().all(|g| other.contains(g))
    }

    /// Exact normality test in `D∞`.
    ///
    /// Pure translation subgroups are characteristic in `⟨z⟩` and hence normal.
    /// Conjugating `z^b s` by `z` gives `z^(b-2) s`, so a subgroup holding a
    /// reflection is normal iff its modulus divides 2.
    pub fn is_normal(&self) -> bool {
        match (self.modulus, self.reflection_offset) {
            (_, None) => true,
            (m, Some(_)) => m == 1 || m == 2,
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.modulus, self.reflection_offset) {
            (0, None) => f.write_str("{1}"),
            (0, Some(b)) => write!(f, "<{}>", Elem::reflection(b)),
            (m, None) => write!(f, "<{}>", Elem::rotation(m as i64)),
            (m, Some(b)) => write!(f, "<{}, {}>", Elem::rotation(m as i64), Elem::reflection(b)),
        }
    }
}

/// Smallest subgroup containing `gens`.
///
/// The translation part is generated by the rotation exponents together with
/// the pairwise differences of the reflection exponents (`z^a s · z^b s = z^(a-b)`).
pub fn generated_subgroup<I>(gens: I) -> Result<Subgroup, Overflow>
where
    I: IntoIterator<Item = Elem>,
{
    let mut modulus: u128 = 0;
    let mut first_reflection: Option<i64> = None;
    for g in gens {
        let step = if g.flip {
            match first_reflection {
                None => {
                    first_reflection = Some(g.power);
                    0
                }
                Some(b) => (g.power as i128 - b as i128).unsigned_abs(),
            }
        } else {
            (g.power as i128).unsigned_abs()
        };
        modulus = modulus.gcd(&step);
    }
    let modulus = i64::try_from(modulus).map_err(|_| Overflow::new("generated subgroup"))? as u64;
    Ok(match first_reflection {
        None => Subgroup::translations(modulus),
        Some(b) => Subgroup::with_reflection(modulus, b),
    })
}

/// The trivial subgroup followed by every `⟨z^b s⟩` with `|b| ≤ radius`.
///
/// These are exactly the finite subgroups of `D∞` whose reflection lies in the
/// window; the remaining finite subgroups differ only by offset.
pub fn finite_subgroups_up_to(radius: u64) -> Vec<Subgroup> {
    let r = radius.min(i64::MAX as u64) as i64;
    std::iter::once(Subgroup::TRIVIAL)
        .chain((-r..=r).map(|b| Subgroup::with_reflection(0, b)))
        .collect()
}
