//! Built-in partition schemes.

use std::fmt;
use std::str::FromStr;

use crate::dihedral::Sign;

use super::{ClassTemplate, DefinitionError, GroupKind, Member, PartitionScheme};

/// Named families of schemes shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Singleton classes on `ℤ`.
    DiscreteZ,
    /// Classes `{z^j, z^-j}` on `ℤ`.
    SymmetricZ,
    /// Singleton classes on `D∞` (the full group algebra).
    DiscreteD,
    /// `{z^j s, z^(i-j) s}` and `{z^j, z^-j}`.
    OrbitD(i64),
    /// `{z^(j+i/2) s, z^(i/2-j) s}` and `{z^j, z^-j}`, for even `i`.
    HalfShiftD(i64),
    /// `{z^i, z^-i, z^i s, z^-i s}` for odd `i`, `{z^i s^e, z^-i s^e}` for even `i`.
    Nontraditional,
}

impl Builtin {
    /// One representative of every family, used for sweeping tests.
    pub fn catalogue() -> Vec<Builtin> {
        vec![
            Builtin::DiscreteZ,
            Builtin::SymmetricZ,
            Builtin::DiscreteD,
            Builtin::OrbitD(0),
            Builtin::OrbitD(1),
            Builtin::OrbitD(-3),
            Builtin::HalfShiftD(2),
            Builtin::HalfShiftD(-4),
            Builtin::Nontraditional,
        ]
    }

    /// Resolve a family name plus `key=value` parameters.
    ///
    /// `orbit-D` and `half-shift-D` take `i` (default 0 and 2 respectively);
    /// the parameterless families reject any parameter.
    pub fn from_name(name: &str, params: &[(String, String)]) -> Result<Builtin, DefinitionError> {
        let param_i = |default: i64| -> Result<i64, DefinitionError> {
            let mut value = default;
            for (k, v) in params {
                if k != "i" && k != "k" {
                    return Err(DefinitionError::InvalidParameter(format!(
                        "{name} has no parameter {k:?}"
                    )));
                }
                value = v.parse().map_err(|_| {
                    DefinitionError::InvalidParameter(format!("parameter {k}={v:?} is not an integer"))
                })?;
            }
            Ok(value)
        };
        let no_params = |b: Builtin| -> Result<Builtin, DefinitionError> {
            match params.first() {
                Some((k, _)) => Err(DefinitionError::InvalidParameter(format!(
                    "{name} takes no parameters, got {k:?}"
                ))),
                None => Ok(b),
            }
        };
        match name {
            "discrete-Z" => no_params(Builtin::DiscreteZ),
            "symmetric-Z" => no_params(Builtin::SymmetricZ),
            "discrete-D" => no_params(Builtin::DiscreteD),
            "nontraditional-2305b" => no_params(Builtin::Nontraditional),
            "orbit-D" => Ok(Builtin::OrbitD(param_i(0)?)),
            "half-shift-D" => Ok(Builtin::HalfShiftD(param_i(2)?)),
            _ => name.parse(),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::DiscreteZ => f.write_str("discrete-Z"),
            Builtin::SymmetricZ => f.write_str("symmetric-Z"),
            Builtin::DiscreteD => f.write_str("discrete-D"),
            Builtin::OrbitD(i) => write!(f, "orbit-D({i})"),
            Builtin::HalfShiftD(i) => write!(f, "half-shift-D({i})"),
            Builtin::Nontraditional => f.write_str("nontraditional-2305b"),
        }
    }
}

impl FromStr for Builtin {
    type Err = DefinitionError;

    /// Parses the display form, e.g. `orbit-D(3)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || DefinitionError::InvalidParameter(format!("unknown built-in scheme {s:?}"));
        let with_arg = |prefix: &str| -> Option<Result<i64, DefinitionError>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse().map_err(|_| unknown()))
        };
        if let Some(i) = with_arg("orbit-D") {
            return Ok(Builtin::OrbitD(i?));
        }
        if let Some(i) = with_arg("half-shift-D") {
            return Ok(Builtin::HalfShiftD(i?));
        }
        match s {
            "discrete-Z" => Ok(Builtin::DiscreteZ),
            "symmetric-Z" => Ok(Builtin::SymmetricZ),
            "discrete-D" => Ok(Builtin::DiscreteD),
            "nontraditional-2305b" => Ok(Builtin::Nontraditional),
            _ => Err(unknown()),
        }
    }
}

const fn rot(sign: Sign, offset: i64) -> Member {
    Member::new(sign, offset, false)
}

const fn refl(sign: Sign, offset: i64) -> Member {
    Member::new(sign, offset, true)
}

fn symmetric_rotations() -> ClassTemplate {
    ClassTemplate::unrestricted(vec![rot(Sign::Plus, 0), rot(Sign::Minus, 0)]).expect("static template")
}

pub fn builtin_scheme(which: &Builtin) -> Result<PartitionScheme, DefinitionError> {
    use Sign::{Minus, Plus};
    let (group, templates) = match *which {
        Builtin::DiscreteZ => (
            GroupKind::IntegerLine,
            vec![ClassTemplate::unrestricted(vec![rot(Plus, 0)])?],
        ),
        Builtin::SymmetricZ => (GroupKind::IntegerLine, vec![symmetric_rotations()]),
        Builtin::DiscreteD => (
            GroupKind::DihedralInfinite,
            vec![
                ClassTemplate::unrestricted(vec![rot(Plus, 0)])?,
                ClassTemplate::unrestricted(vec![refl(Plus, 0)])?,
            ],
        ),
        Builtin::OrbitD(i) => (
            GroupKind::DihedralInfinite,
            vec![
                symmetric_rotations(),
                ClassTemplate::unrestricted(vec![refl(Plus, 0), refl(Minus, i)])?,
            ],
        ),
        Builtin::HalfShiftD(i) => {
            if i % 2 != 0 {
                return Err(DefinitionError::InvalidParameter(format!(
                    "half-shift-D needs an even parameter, got {i}"
                )));
            }
            let h = i / 2;
            (
                GroupKind::DihedralInfinite,
                vec![
                    symmetric_rotations(),
                    ClassTemplate::unrestricted(vec![refl(Plus, h), refl(Minus, h)])?,
                ],
            )
        }
        Builtin::Nontraditional => (
            GroupKind::DihedralInfinite,
            vec![
                ClassTemplate::new(
                    2,
                    1,
                    vec![rot(Plus, 0), rot(Minus, 0), refl(Plus, 0), refl(Minus, 0)],
                )?,
                ClassTemplate::new(2, 0, vec![rot(Plus, 0), rot(Minus, 0)])?,
                ClassTemplate::new(2, 0, vec![refl(Plus, 0), refl(Minus, 0)])?,
            ],
        ),
    };
    PartitionScheme::new(group, which.to_string(), templates)
}

/// Orbits of the automorphism group generated by `z ↦ z^eps, s ↦ z^k s`.
///
/// Only finite automorphism groups give finite classes: the identity
/// (`eps = +1, k = 0`) and the involutions `eps = -1`. The orbit of each seed
/// member `z^j`, `z^j s` is computed symbolically on the affine exponents.
pub fn automorphism_orbit_scheme(eps: Sign, k: i64) -> Result<PartitionScheme, DefinitionError> {
    if eps == Sign::Plus && k != 0 {
        return Err(DefinitionError::InvalidParameter(format!(
            "z -> z, s -> z^{k} s has infinite order"
        )));
    }
    let image = |m: Member| -> Result<Member, DefinitionError> {
        let overflow = || DefinitionError::InvalidParameter("orbit offset overflows".into());
        let sign = Sign::from_i64(m.sign.as_i64() * eps.as_i64()).expect("unit");
        let mut offset = m.offset.checked_mul(eps.as_i64()).ok_or_else(overflow)?;
        if m.flip {
            offset = offset.checked_add(k).ok_or_else(overflow)?;
        }
        Ok(Member::new(sign, offset, m.flip))
    };
    let mut templates = Vec::new();
    for flip in [false, true] {
        let seed = Member::new(Sign::Plus, 0, flip);
        let mut orbit = vec![seed];
        let mut next = image(seed)?;
        while next != seed {
            orbit.push(next);
            next = image(next)?;
        }
        templates.push(ClassTemplate::unrestricted(orbit)?);
    }
    let name = match eps {
        Sign::Plus => "orbit(identity)".to_string(),
        Sign::Minus => format!("orbit({k})"),
    };
    PartitionScheme::new(GroupKind::DihedralInfinite, name, templates)
}

/// Orbits of `⟨φ_k⟩` with `φ_k(z) = z⁻¹`, `φ_k(s) = z^k s`.
pub fn orbit_scheme(k: i64) -> PartitionScheme {
    automorphism_orbit_scheme(Sign::Minus, k).expect("involutions always give finite orbits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Elem;
    use crate::scheme::BasicSet;

    fn set(xs: &[&str]) -> BasicSet {
        BasicSet::new(xs.iter().map(|x| x.parse::<Elem>().unwrap()))
    }

    #[test]
    fn orbit_family_examples() {
        let o0 = builtin_scheme(&Builtin::OrbitD(0)).unwrap();
        assert_eq!(o0.class_of("z^3*s".parse().unwrap()).unwrap(), set(&["z^3*s", "z^-3*s"]));
        let hs = builtin_scheme(&Builtin::HalfShiftD(2)).unwrap();
        assert_eq!(hs.class_of("z*s".parse().unwrap()).unwrap(), set(&["z*s"]));
        let nt = builtin_scheme(&Builtin::Nontraditional).unwrap();
        assert_eq!(nt.class_of(Elem::Z).unwrap(), set(&["z", "z^-1", "z*s", "z^-1*s"]));
    }

    #[test]
    fn half_shift_rejects_odd() {
        assert!(builtin_scheme(&Builtin::HalfShiftD(3)).is_err());
    }

    #[test]
    fn orbit_scheme_matches_builtin() {
        for k in -6..=6 {
            let sym = orbit_scheme(k);
            let named = builtin_scheme(&Builtin::OrbitD(k)).unwrap();
            assert_eq!(sym.templates(), named.templates(), "k = {k}");
        }
        let o1 = orbit_scheme(1);
        assert_eq!(o1.class_of(Elem::S).unwrap(), set(&["s", "z*s"]));
        assert_eq!(o1.class_of("z^3".parse().unwrap()).unwrap(), set(&["z^3", "z^-3"]));
        assert_eq!(o1.class_of(Elem::IDENTITY).unwrap(), set(&["1"]));
    }

    #[test]
    fn identity_automorphism_gives_discrete() {
        let d = automorphism_orbit_scheme(Sign::Plus, 0).unwrap();
        assert_eq!(d.templates(), builtin_scheme(&Builtin::DiscreteD).unwrap().templates());
        assert!(automorphism_orbit_scheme(Sign::Plus, 2).is_err());
    }

    #[test]
    fn names_round_trip() {
        for b in Builtin::catalogue() {
            assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
        }
        let p = vec![("i".to_string(), "5".to_string())];
        assert_eq!(Builtin::from_name("orbit-D", &p).unwrap(), Builtin::OrbitD(5));
        assert!(Builtin::from_name("discrete-D", &p).is_err());
        assert!(Builtin::from_name("orbit-D", &[("q".into(), "1".into())]).is_err());
        assert!(Builtin::from_name("nope", &[]).is_err());
    }
}
