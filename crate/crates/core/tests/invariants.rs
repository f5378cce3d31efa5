//! Structural properties of profiles, special factors and verdicts.

use proptest::prelude::*;
use subword_complexity::complexity::{classify, is_fiatc, profile, special_factors};
use subword_complexity::langspec::{Generator, LanguageSource};
use subword_complexity::verifier::oracle::factor_sets;
use subword_complexity::verifier::RandomRegularSpec;
use subword_complexity::words::{rho_parent, Alphabet};

const N: usize = 9;

fn spec_strategy() -> impl Strategy<Value = RandomRegularSpec> {
    (any::<u64>(), 1usize..=8, 1usize..=3, 0.05f64..0.6, 0.1f64..1.0)
        .prop_map(|(seed, n, k, d, f)| RandomRegularSpec::new(seed, n, k, d, f).unwrap())
}

fn small_word_source() -> impl Strategy<Value = LanguageSource> {
    prop_oneof![
        ("[ab]{0,5}", "[ab]{1,6}").prop_map(|(p, c)| {
            let ab = Alphabet::ab();
            let g = Generator::eventually_periodic(ab.word(&p).unwrap(), ab.word(&c).unwrap()).unwrap();
            LanguageSource::infinite(ab, g).unwrap()
        }),
        (prop::collection::vec(1u32..4, 0..3), prop::collection::vec(1u32..4, 1..3)).prop_map(|(d, t)| {
            LanguageSource::infinite(Alphabet::ab(), Generator::sturmian_cf(d, t).unwrap()).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn parent_map_is_onto_for_extendable(spec in spec_strategy()) {
        let inst = spec.instance();
        prop_assume!(inst.source.is_extendable().unwrap());
        let sets = factor_sets(&inst.source.to_regular().unwrap(), N);
        for n in 0..N {
            let parents: std::collections::BTreeSet<_> = sets[n + 1].iter().map(|w| rho_parent(w).unwrap()).collect();
            for w in &sets[n] {
                prop_assert!(parents.contains(w));
            }
        }
        let p = profile(&inst.source, N, None).unwrap();
        prop_assert!(p.values().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn no_specials_means_no_growth(spec in spec_strategy()) {
        let src = spec.instance().source;
        let p = profile(&src, N, None).unwrap();
        for n in 0..N {
            if special_factors(&src, n, None).unwrap().count() == 0 {
                prop_assert!(p.get(n + 1) <= p.get(n));
            }
        }
    }

    #[test]
    fn suffixes_of_specials_are_special(spec in spec_strategy()) {
        let src = spec.instance().source;
        let reports: Vec<_> = (0..=7).map(|n| special_factors(&src, n, None).unwrap()).collect();
        for r in &reports {
            for w in &r.specials {
                for (k, shorter) in reports.iter().enumerate().take(w.len()) {
                    prop_assert!(shorter.specials.contains(&w.suffix(k)));
                }
            }
        }
    }

    #[test]
    fn extendable_profiles_increase_then_settle(spec in spec_strategy()) {
        let src = spec.instance().source;
        prop_assume!(src.is_extendable().unwrap());
        let p = profile(&src, N, None).unwrap();
        prop_assert!(p.is_strictly_increasing() || is_fiatc(&p).unwrap().is_fiatc, "{:?}", p.values());
    }

    #[test]
    fn regular_sources_get_exactly_one_proven_verdict(spec in spec_strategy()) {
        let v = classify(&spec.instance().source, N, None).unwrap();
        prop_assert!(v.is_bounded_proven() != v.is_linear_proven(), "{:?}", v);
    }

    #[test]
    fn word_sources_never_get_both_verdicts(src in small_word_source()) {
        let v = classify(&src, 30, None).unwrap();
        prop_assert!(!(v.is_bounded_proven() && v.is_linear_proven()));
        prop_assert!(!v.is_linear_proven());
    }

    #[test]
    fn vanishing_specials_mean_eventual_period(prefix in "[ab]{0,5}", cycle in "[ab]{1,6}") {
        let ab = Alphabet::ab();
        let cycle_word = ab.word(&cycle).unwrap();
        let g = Generator::eventually_periodic(ab.word(&prefix).unwrap(), cycle_word.clone()).unwrap();
        let src = LanguageSource::infinite(ab, g).unwrap();
        let last_special = (0..=20).filter(|&n| special_factors(&src, n, None).unwrap().count() > 0).max();
        let p = profile(&src, 21, None).unwrap();
        // past the last special factor the count stays flat
        let from = last_special.map_or(0, |l| l + 1);
        prop_assert!(p.values()[from..].windows(2).all(|w| w[0] == w[1]));
        prop_assert!(p.get(21) >= cycle_word.primitive_root_len() as u64);
    }
}
