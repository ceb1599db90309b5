mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangleduct::duality::{strong_duality, StrongOptions};
use tangleduct::essential::{essential_core, essentialize_stree, expand_to_f};
use tangleduct::generate::{random_set_system, random_standard_family, random_stree, shift_closure};
use tangleduct::oracle::{enumerate, DEFAULT_CAP};
use tangleduct::stree::validate_stree;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tree_lemmas_hold(seed in any::<u64>(), n in 3usize..=6, nodes in 2usize..=9) {
        let rt = random_stree(&mut ChaCha8Rng::seed_from_u64(seed), n, nodes).unwrap();
        prop_assert_eq!(common::tree_lemmas(&rt), Ok(()));
    }

    #[test]
    fn constructed_shifts_obey_the_lemma(seed in any::<u64>(), n in 3usize..=5, nodes in 2usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rt = random_stree(&mut rng, n, nodes).unwrap();
        if let Some(rec) = common::constructed_shift(&mut rng, &rt) {
            prop_assert_eq!(rec.and_then(|rec| common::shift_lemma(&rt.su.system, &rec)), Ok(()));
        }
    }

    #[test]
    fn engine_shifts_obey_the_lemma(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let su = random_set_system(&mut rng, 4, 5).unwrap();
        let f = shift_closure(&su.system, &random_standard_family(&mut rng, &su.system, 4), 64);
        if let Ok(run) = strong_duality(&su.system, &f, StrongOptions::default()) {
            for rec in &run.trace {
                prop_assert_eq!(common::shift_lemma(&su.system, rec), Ok(()));
            }
        }
    }

    #[test]
    fn essential_core_keeps_the_tangles(seed in any::<u64>(), n in 3usize..=5, seps in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let su = random_set_system(&mut rng, n, seps).unwrap();
        let f = random_standard_family(&mut rng, &su.system, 5);
        let core = essential_core(&f, &su.system);
        let a = enumerate(&su.system, &f, DEFAULT_CAP).unwrap();
        let b = enumerate(&su.system, &core, DEFAULT_CAP).unwrap();
        prop_assert_eq!(a.f_tangles, b.f_tangles);
    }

    #[test]
    fn essentialize_then_expand(seed in any::<u64>(), nodes in 2usize..=8) {
        let rt = random_stree(&mut ChaCha8Rng::seed_from_u64(seed), 5, nodes).unwrap();
        let sys = &rt.su.system;
        let e = essentialize_stree(&rt.tree, sys).unwrap();
        prop_assert!(validate_stree(&e, sys).unwrap().is_essential);
        prop_assert!(common::over(&e, &essential_core(&rt.family, sys)));
        let back = expand_to_f(&e, &rt.family, sys).unwrap();
        prop_assert!(validate_stree(&back, sys).unwrap().is_stree);
        prop_assert!(common::over(&back, &rt.family));
    }
}
