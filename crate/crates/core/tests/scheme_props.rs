use std::collections::HashSet;

use schur_core::dihedral::Sign;
use schur_core::scheme::{parse_scheme, print_scheme};
use schur_core::{builtin_scheme, orbit_scheme, BasicSet, Builtin, Elem};

fn catalogue() -> Vec<Builtin> {
    let mut all = Builtin::catalogue();
    all.extend([Builtin::OrbitD(7), Builtin::OrbitD(-8), Builtin::HalfShiftD(10)]);
    all
}

#[test]
fn class_lookup_is_consistent() {
    for b in catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        for g in sch.window_elements(200) {
            let class = sch.class_of(g).unwrap();
            assert!(class.contains(g), "{b}: {g}");
            for h in class.iter() {
                assert_eq!(sch.class_of(h).unwrap(), class, "{b}: {g} vs {h}");
            }
        }
    }
}

#[test]
fn classes_are_closed_under_star() {
    for b in catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        for g in sch.window_elements(60) {
            let class = sch.class_of(g).unwrap();
            assert_eq!(sch.class_of(g.inverse()).unwrap(), class.star().unwrap(), "{b}: {g}");
        }
    }
}

#[test]
fn orbit_classes_are_permuted() {
    for k in -10..=10 {
        let sch = orbit_scheme(k);
        for c in sch.enumerate_classes(40).unwrap() {
            let image = BasicSet::new(c.iter().map(|g| g.apply_automorphism(Sign::Minus, k)));
            assert_eq!(image, c, "k = {k}");
        }
    }
}

#[test]
fn enumeration_grows_monotonically() {
    for b in catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        let mut prev = Vec::new();
        for r in 0..30 {
            let now = sch.enumerate_classes(r).unwrap();
            assert_eq!(&now[..prev.len()], &prev[..], "{b} at radius {r}");
            let mut seen = HashSet::new();
            for c in &now {
                for g in c.iter() {
                    assert!(seen.insert(g), "{b}: {g} in two classes");
                }
            }
            prev = now;
        }
    }
}

#[test]
fn identity_class_and_validation() {
    for b in catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        assert_eq!(sch.class_of(Elem::IDENTITY).unwrap(), BasicSet::singleton(Elem::IDENTITY));
        assert!(sch.validate_partition(100).passed, "{b}");
        assert_eq!(parse_scheme(&print_scheme(&sch)).unwrap(), sch);
    }
}
