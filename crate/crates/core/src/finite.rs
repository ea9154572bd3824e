//! The finite dihedral groups `D∞ / ⟨z^n⟩` of order `2n`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::dihedral::Elem;

/// `x^power y^flip` in the dihedral group of order `2·order`, with
/// `power ∈ [0, order)`. For `order = 1` this is the cyclic group of order 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteElem {
    order: u64,
    power: u64,
    flip: bool,
}

impl FiniteElem {
    pub fn new(order: u64, power: i64, flip: bool) -> Self {
        assert!(order >= 1, "finite dihedral order must be positive");
        let power = (power as i128).rem_euclid(order as i128) as u64;
        Self { order, power, flip }
    }

    pub fn identity(order: u64) -> Self {
        Self::new(order, 0, false)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn mul(self, rhs: FiniteElem) -> FiniteElem {
        assert_eq!(self.order, rhs.order, "mixed finite dihedral groups");
        let n = self.order as i128;
        let power = if self.flip {
            self.power as i128 - rhs.power as i128
        } else {
            self.power as i128 + rhs.power as i128
        };
        FiniteElem {
            order: self.order,
            power: power.rem_euclid(n) as u64,
            flip: self.flip ^ rhs.flip,
        }
    }

    pub fn inverse(self) -> FiniteElem {
        if self.flip {
            self
        } else {
            FiniteElem {
                order: self.order,
                power: (self.order - self.power) % self.order,
                flip: false,
            }
        }
    }

    /// Dense index in `[0, 2·order)`, used for table-based checks.
    pub fn index(&self) -> usize {
        (self.power * 2 + self.flip as u64) as usize
    }

    pub fn from_index(order: u64, index: usize) -> Self {
        Self {
            order,
            power: index as u64 / 2,
            flip: index % 2 == 1,
        }
    }

    /// All `2·order` elements in index order.
    pub fn all(order: u64) -> impl Iterator<Item = FiniteElem> {
        (0..(2 * order) as usize).map(move |i| FiniteElem::from_index(order, i))
    }
}

/// The natural map `D∞ → D∞/⟨z^n⟩`, `z^i s^e ↦ x^(i mod n) y^e`.
pub fn quotient_map(g: Elem, n: u64) -> FiniteElem {
    FiniteElem::new(n, g.power, g.flip)
}

impl fmt::Display for FiniteElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.power, self.flip) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("y"),
            (p, false) => write!(f, "x^{p}"),
            (p, true) => write!(f, "x^{p}*y"),
        }
    }
}

impl Serialize for FiniteElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Elem {
        s.parse().unwrap()
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_map(e("z^7"), 4), FiniteElem::new(4, 3, false));
        assert_eq!(quotient_map(e("z^4*s"), 4), FiniteElem::new(4, 0, true));
        let (a, b) = (e("z^3*s"), e("z^2"));
        let direct = quotient_map(a.mul(b), 4);
        let mapped = quotient_map(a, 4).mul(quotient_map(b, 4));
        assert_eq!(direct, mapped);
        assert_eq!(direct, FiniteElem::new(4, 1, true));
    }

    #[test]
    fn negative_powers_reduce() {
        let g = quotient_map(e("z^-5*s"), 3);
        assert_eq!(g.power(), 1);
        assert!(g.flip());
        assert_eq!(g.to_string(), "x^1*y");
    }

    #[test]
    fn order_one_is_cyclic_of_order_two() {
        let all: Vec<_> = FiniteElem::all(1).collect();
        assert_eq!(all.len(), 2);
        let y = all[1];
        assert_eq!(y.mul(y), FiniteElem::identity(1));
    }

    #[test]
    fn inverses() {
        for g in FiniteElem::all(6) {
            assert_eq!(g.mul(g.inverse()), FiniteElem::identity(6));
            assert_eq!(FiniteElem::from_index(6, g.index()), g);
        }
    }
}
