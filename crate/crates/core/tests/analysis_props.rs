use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::algebra::rational;
use schur_core::analysis::{is_a_set, stab, window_a_set, Decision, SetQuery};
use schur_core::verify::{structure_constant, translate_class};
use schur_core::{builtin_scheme, verify_axioms, AlgebraElement, BasicSet, Builtin, Elem, Subgroup};

fn sq(c: &BasicSet) -> AlgebraElement {
    AlgebraElement::simple_quantity(c.iter()).unwrap()
}

#[test]
fn constants_respect_star() {
    // λ(C, D, E) = λ(D*, C*, E*)
    for b in Builtin::catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        let classes = sch.enumerate_classes(5).unwrap();
        for c in &classes {
            for d in &classes {
                for e in &classes {
                    let l = structure_constant(&sch, c, d, e).unwrap();
                    let r = structure_constant(&sch, &d.star().unwrap(), &c.star().unwrap(), &e.star().unwrap()).unwrap();
                    assert_eq!(l, r, "{b}: {c} {d} {e}");
                }
            }
        }
    }
}

#[test]
fn level_sets_are_unions_of_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for b in Builtin::catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        let classes = sch.enumerate_classes(6).unwrap();
        for _ in 0..200 {
            let mut span = AlgebraElement::zero();
            for _ in 0..3 {
                let c = &classes[rng.gen_range(0..classes.len())];
                span = span.add(&sq(c).scale(&rational(rng.gen_range(-4..=4))));
            }
            let alpha = span.convolve(&span.star()).unwrap();
            for v in alpha.values() {
                let set = alpha.level_set(&v).unwrap();
                assert!(is_a_set(&sch, &SetQuery::Finite(set), 0).holds, "{b}");
            }
        }
    }
}

#[test]
fn stab_is_small_and_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for b in Builtin::catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        for c in sch.enumerate_classes(32).unwrap() {
            let alpha = sq(&c);
            let h = stab(&alpha).unwrap();
            assert!(h.order().is_some_and(|o| o <= 2), "{b}: {c}");
            for g in h.generators() {
                assert_eq!(alpha.left_translate(g).unwrap(), alpha);
            }
            for _ in 0..10 {
                let g = Elem::new(rng.gen_range(-40..=40), rng.gen_bool(0.5));
                assert_eq!(h.contains(g), alpha.left_translate(g).unwrap() == alpha, "{b}: {c}, {g}");
            }
        }
    }
}

#[test]
fn exact_and_window_a_set_agree() {
    let mut subgroups = vec![Subgroup::TRANSLATIONS, Subgroup::TRIVIAL];
    subgroups.extend((2..=6).map(Subgroup::translations));
    subgroups.extend([Subgroup::with_reflection(2, 0), Subgroup::with_reflection(0, 1)]);
    for b in Builtin::catalogue() {
        let sch = builtin_scheme(&b).unwrap();
        for h in &subgroups {
            let exact = is_a_set(&sch, &SetQuery::Subgroup(*h), 64);
            assert_eq!(exact.decision, Decision::Exact);
            let window = window_a_set(&sch, &SetQuery::Subgroup(*h), 64);
            assert_eq!(exact.holds, window.holds, "{b}: {h}");
        }
    }
}

#[test]
fn singleton_translates_are_classes() {
    for b in [Builtin::DiscreteD, Builtin::HalfShiftD(2), Builtin::HalfShiftD(6)] {
        let sch = builtin_scheme(&b).unwrap();
        assert!(verify_axioms(&sch, 8).passed());
        let classes = sch.enumerate_classes(12).unwrap();
        for g in classes.iter().filter(|c| c.len() == 1).map(|c| c.representative()) {
            for d in &classes {
                let moved = translate_class(&sch, g, d).unwrap();
                assert_eq!(moved.len(), d.len());
            }
        }
    }
}
