use proptest::prelude::*;

use schur_core::dihedral::Sign;
use schur_core::{quotient_map, Elem};

fn elem() -> impl Strategy<Value = Elem> {
    (-1_000_000i64..=1_000_000, any::<bool>()).prop_map(|(p, f)| Elem::new(p, f))
}

proptest! {
    #[test]
    fn associative(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
    }

    #[test]
    fn inverse_law(a in elem()) {
        prop_assert_eq!(a.mul(a.inverse()), Elem::IDENTITY);
        prop_assert_eq!(a.inverse().mul(a), Elem::IDENTITY);
        prop_assert_eq!(a.mul(Elem::IDENTITY), a);
    }

    #[test]
    fn relations_hold(a in elem()) {
        // s z s = z⁻¹ and reflections are involutions
        prop_assert_eq!(Elem::S.mul(Elem::Z).mul(Elem::S), Elem::Z.inverse());
        if a.flip {
            prop_assert_eq!(a.mul(a), Elem::IDENTITY);
        }
    }

    #[test]
    fn quotient_is_homomorphism(a in elem(), b in elem(), n in 1u64..40) {
        prop_assert_eq!(quotient_map(a.mul(b), n), quotient_map(a, n).mul(quotient_map(b, n)));
        prop_assert_eq!(quotient_map(a.inverse(), n), quotient_map(a, n).inverse());
    }

    #[test]
    fn automorphisms_preserve_products(a in elem(), b in elem(), k in -50i64..50, minus in any::<bool>()) {
        let eps = if minus { Sign::Minus } else { Sign::Plus };
        let phi = |g: Elem| g.apply_automorphism(eps, k);
        prop_assert_eq!(phi(a.mul(b)), phi(a).mul(phi(b)));
    }

    #[test]
    fn display_round_trips(a in elem()) {
        prop_assert_eq!(a.to_string().parse::<Elem>().unwrap(), a);
    }
}

#[test]
fn overflow_is_reported() {
    let big = Elem::rotation(i64::MAX);
    assert!(big.try_mul(Elem::Z).is_err());
    assert!(Elem::rotation(i64::MIN).try_inverse().is_err());
    assert!(Elem::reflection(i64::MIN).try_mul(Elem::Z).is_err());
}
