//! Finitely supported formal sums over `D∞` with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dihedral::{Elem, Overflow, ParseElemError};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a simple quantity needs a nonempty set")]
    EmptySet,
    #[error("level sets are only defined for nonzero values")]
    ZeroLevel,
    #[error("coefficient map {0} does not send 0 to 0")]
    NotZeroPreserving(String),
    #[error("coefficient map {map} needs integer coefficients, got {value}")]
    NonIntegerCoefficient { map: String, value: String },
    #[error("coefficient map {0} is not well defined")]
    InvalidMap(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// An element `Σ α_g g` of `ℚ[D∞]` with finitely many nonzero `α_g`.
///
/// Zero coefficients are never stored, so structural equality is
/// coefficient-wise equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Elem, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_elem(Elem::IDENTITY)
    }

    pub fn from_elem(g: Elem) -> Self {
        Self::from_terms([(g, Rational::one())])
    }

    /// Sums repeated elements and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Elem, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    /// The simple quantity `underline(C) = Σ_{g ∈ C} g`.
    pub fn simple_quantity<I: IntoIterator<Item = Elem>>(set: I) -> Result<Self, AlgebraError> {
        let terms: BTreeMap<Elem, Rational> =
            set.into_iter().map(|g| (g, Rational::one())).collect();
        if terms.is_empty() {
            return Err(AlgebraError::EmptySet);
        }
        Ok(Self { terms })
    }

    fn add_term(&mut self, g: Elem, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Elem) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &Rational)> + '_ {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn support(&self) -> BTreeSet<Elem> {
        self.terms.keys().copied().collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(g, a)| (*g, a * c)).collect(),
        }
    }

    /// Group-ring product `Σ_{g,h} α_g β_h (gh)`.
    pub fn convolve(&self, other: &Self) -> Result<Self, Overflow> {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.try_mul(*h)?, a * b);
            }
        }
        Ok(out)
    }

    /// `g · self`.
    pub fn left_translate(&self, g: Elem) -> Result<Self, Overflow> {
        let terms = self
            .terms
            .iter()
            .map(|(h, c)| Ok((g.try_mul(*h)?, c.clone())))
            .collect::<Result<BTreeMap<_, _>, Overflow>>()?;
        Ok(Self { terms })
    }

    /// `α* = Σ α_g g⁻¹`.
    pub fn try_star(&self) -> Result<Self, Overflow> {
        let terms = self
            .terms
            .iter()
            .map(|(g, c)| Ok((g.try_inverse()?, c.clone())))
            .collect::<Result<BTreeMap<_, _>, Overflow>>()?;
        Ok(Self { terms })
    }

    pub fn star(&self) -> Self {
        self.try_star().unwrap_or_else(|e| panic!("{e}"))
    }

    /// Coefficient-wise product `α ∘ β`.
    pub fn hadamard(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Self {
            terms: small
                .terms
                .iter()
                .filter_map(|(g, a)| large.terms.get(g).map(|b| (*g, a * b)))
                .collect(),
        }
    }

    /// `f(α) = Σ f(α_g) g` for a catalogued `f` with `f(0) = 0`.
    pub fn coeff_transform(&self, f: &CoeffFn) -> Result<Self, AlgebraError> {
        if !f.eval(&Rational::zero())?.is_zero() {
            return Err(AlgebraError::NotZeroPreserving(f.to_string()));
        }
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(*g, f.eval(c)?);
        }
        Ok(out)
    }

    /// `{g : α_g = c}` for `c ≠ 0`.
    pub fn level_set(&self, c: &Rational) -> Result<BTreeSet<Elem>, AlgebraError> {
        if c.is_zero() {
            return Err(AlgebraError::ZeroLevel);
        }
        Ok(self
            .terms
            .iter()
            .filter(|(_, a)| *a == c)
            .map(|(g, _)| *g)
            .collect())
    }

    /// Distinct nonzero coefficient values, ascending.
    pub fn values(&self) -> BTreeSet<Rational> {
        self.terms.values().cloned().collect()
    }
}

/// The coefficient maps `f: ℚ → ℚ` that may be applied coefficient-wise.
///
/// Only maps from this fixed catalogue are accepted so that every transform
/// appearing in a report can be reproduced from its description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffFn {
    /// `x ↦ x^n`.
    Power(u32),
    /// `x ↦ 1` if `x = value`, else `0`.
    Indicator(Rational),
    /// Integer `x ↦ x mod p`, lifted to `[0, p)`.
    ModLift(u64),
    /// `x ↦ c`.
    Constant(Rational),
}

impl CoeffFn {
    pub fn eval(&self, x: &Rational) -> Result<Rational, AlgebraError> {
        Ok(match self {
            CoeffFn::Power(n) => num_traits::pow(x.clone(), *n as usize),
            CoeffFn::Indicator(v) => {
                if x == v {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            CoeffFn::ModLift(p) => {
                if *p == 0 {
                    return Err(AlgebraError::InvalidMap(self.to_string()));
                }
                if !x.is_integer() {
                    return Err(AlgebraError::NonIntegerCoefficient {
                        map: self.to_string(),
                        value: x.to_string(),
                    });
                }
                let p = BigInt::from(*p);
                let r = x.to_integer() % &p;
                let r = if r.is_negative() { r + p } else { r };
                Rational::from_integer(r)
            }
            CoeffFn::Constant(c) => c.clone(),
        })
    }
}

impl fmt::Display for CoeffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffFn::Power(n) => write!(f, "x^{n}"),
            CoeffFn::Indicator(v) => write!(f, "[x = {v}]"),
            CoeffFn::ModLift(p) => write!(f, "x mod {p}"),
            CoeffFn::Constant(c) => write!(f, "const {c}"),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*z^{}", g.power)?;
            if g.flip {
                f.write_str("*s")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseAlgebraError {
    #[error("empty term in {0:?}")]
    EmptyTerm(String),
    #[error(transparent)]
    Element(#[from] ParseElemError),
}

impl FromStr for AlgebraElement {
    type Err = ParseAlgebraError;

    /// Parses `<coef>*z^<i>[*s]` terms joined by `+`. A term without a
    /// coefficient has coefficient 1; a bare rational is a multiple of 1.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let t = input.trim();
        if t == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for term in t.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(ParseAlgebraError::EmptyTerm(input.to_string()));
            }
            if let Ok(c) = term.parse::<Rational>() {
                out.add_term(Elem::IDENTITY, c);
                continue;
            }
            let (coef, elem) = match term.split_once('*') {
                Some((head, rest)) => match head.trim().parse::<Rational>() {
                    Ok(c) => (c, rest),
                    Err(_) => (Rational::one(), term),
                },
                None => (Rational::one(), term),
            };
            out.add_term(elem.parse()?, coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> AlgebraElement {
        s.parse().unwrap()
    }

    fn sq(xs: &[&str]) -> AlgebraElement {
        AlgebraElement::simple_quantity(xs.iter().map(|x| x.parse::<Elem>().unwrap())).unwrap()
    }

    #[test]
    fn add_and_scale() {
        assert_eq!(a("2*z + s").add(&a("-2*z")), a("s"));
        assert!(a("3*z^4 + 1/2*s").scale(&rational(0)).is_zero());
        assert_eq!(a("z + z^-1").add(&a("z + z^-1")), a("2*z + 2*z^-1"));
    }

    #[test]
    fn convolve_examples() {
        // {s, zs}·{z², z⁻²}
        let lhs = sq(&["s", "z*s"]).convolve(&sq(&["z^2", "z^-2"])).unwrap();
        assert_eq!(lhs, sq(&["z^-2*s", "z^2*s", "z^-1*s", "z^3*s"]));

        // odd·odd product with i₁ = 1, i₂ = 3
        let c1 = sq(&["z", "z^-1", "z*s", "z^-1*s"]);
        let c3 = sq(&["z^3", "z^-3", "z^3*s", "z^-3*s"]);
        let expected = a("2*z^4 + 2*z^-4 + 2*z^4*s + 2*z^-4*s + 2*z^-2 + 2*z^2 + 2*z^-2*s + 2*z^2*s");
        assert_eq!(c1.convolve(&c3).unwrap(), expected);

        let x = a("3*z^5*s + -1/2*z^-2");
        assert_eq!(x.convolve(&AlgebraElement::one()).unwrap(), x);
    }

    #[test]
    fn convolve_reports_overflow() {
        let big = AlgebraElement::from_elem(Elem::rotation(i64::MAX));
        assert!(big.convolve(&a("z")).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(a("2*z^3 + s").star(), a("2*z^-3 + s"));
        let x = a("1/3*z^2 + 5*z^-7*s + z^4");
        assert_eq!(x.star().star(), x);
        assert_eq!(sq(&["s", "z^5*s"]).star(), sq(&["s", "z^5*s"]));
    }

    #[test]
    fn hadamard_examples() {
        assert_eq!(a("2*z + 3*s").hadamard(&a("z + s")), a("2*z + 3*s"));
        assert!(a("2*z").hadamard(&AlgebraElement::zero()).is_zero());
        assert_eq!(a("z + z^-1").hadamard(&a("z + -1*z^-1")), a("z + -1*z^-1"));
    }

    #[test]
    fn simple_quantities() {
        assert_eq!(sq(&["1"]), AlgebraElement::one());
        assert_eq!(sq(&["z", "z^-1"]), a("z + z^-1"));
        assert_eq!(sq(&["s", "z^2*s"]), a("s + z^2*s"));
        assert_eq!(
            AlgebraElement::simple_quantity(std::iter::empty()),
            Err(AlgebraError::EmptySet)
        );
    }

    #[test]
    fn coeff_transform_examples() {
        let x = a("2*z + 3*s");
        assert_eq!(x.coeff_transform(&CoeffFn::Power(2)).unwrap(), a("4*z + 9*s"));
        let y = a("2*z^4 + 2*z^-4 + z^2");
        assert_eq!(
            y.coeff_transform(&CoeffFn::Indicator(rational(2))).unwrap(),
            a("z^4 + z^-4")
        );
        assert!(x.coeff_transform(&CoeffFn::Constant(rational(0))).unwrap().is_zero());
        assert!(matches!(
            x.coeff_transform(&CoeffFn::Constant(rational(1))),
            Err(AlgebraError::NotZeroPreserving(_))
        ));
        assert!(matches!(
            x.coeff_transform(&CoeffFn::Power(0)),
            Err(AlgebraError::NotZeroPreserving(_))
        ));
        assert_eq!(
            a("-3*z + 4*s + 2*z^2").coeff_transform(&CoeffFn::ModLift(2)).unwrap(),
            a("z")
        );
        assert!(matches!(
            a("1/2*z").coeff_transform(&CoeffFn::ModLift(2)),
            Err(AlgebraError::NonIntegerCoefficient { .. })
        ));
    }

    #[test]
    fn level_sets() {
        let y = a("2*z^4 + 2*z^-4 + z^2");
        let two: BTreeSet<Elem> = ["z^4", "z^-4"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(y.level_set(&rational(2)).unwrap(), two);
        assert!(y.level_set(&rational(7)).unwrap().is_empty());
        assert_eq!(y.level_set(&rational(0)), Err(AlgebraError::ZeroLevel));
    }

    #[test]
    fn text_form() {
        let x = a("3/4*z^-2*s + -2*z^0 + z");
        assert_eq!(x.to_string(), "3/4*z^-2*s + -2*z^0 + 1*z^1");
        assert_eq!(a(&x.to_string()), x);
        assert_eq!(AlgebraElement::zero().to_string(), "0");
        assert_eq!(a("0"), AlgebraElement::zero());
        assert!("z + + s".parse::<AlgebraElement>().is_err());
    }
}
