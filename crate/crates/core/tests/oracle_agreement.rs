//! The automata pipeline against the brute-force oracles.

use proptest::prelude::*;
use subword_complexity::complexity::{profile, special_counts, special_factors};
use subword_complexity::langspec::{Builtin, Generator, LanguageSource};
use subword_complexity::verifier::oracle::{factor_counts, factor_sets, oracle_counts, oracle_factors, truncate};
use subword_complexity::verifier::RandomRegularSpec;
use subword_complexity::words::{rho_parent, Alphabet, FactorSet, Word};

fn spec_strategy() -> impl Strategy<Value = RandomRegularSpec> {
    (any::<u64>(), 1usize..=8, 1usize..=3, 0.05f64..0.6, 0.1f64..1.0)
        .prop_map(|(seed, n, k, d, f)| RandomRegularSpec::new(seed, n, k, d, f).unwrap())
}

/// Right-special factors read off the next level of factors.
fn specials_from(next: &FactorSet, n: usize) -> FactorSet {
    let mut parents = std::collections::BTreeMap::new();
    for w in next {
        *parents.entry(rho_parent(w).unwrap()).or_insert(0) += 1;
    }
    FactorSet::from_words(n, parents.into_iter().filter(|&(_, c)| c > 1).map(|(w, _)| w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn regular_profiles_match_oracle(spec in spec_strategy()) {
        let inst = spec.instance();
        let nfa = inst.source.to_regular().unwrap();
        let p = profile(&inst.source, 10, None).unwrap();
        prop_assert_eq!(p.values(), &factor_counts(&nfa, 10)[..], "{}", inst.name);
    }

    #[test]
    fn special_counts_match_oracle(spec in spec_strategy()) {
        let inst = spec.instance();
        let nfa = inst.source.to_regular().unwrap();
        let sets = factor_sets(&nfa, 9);
        let (s, _) = special_counts(&inst.source, 8, None).unwrap();
        for n in 0..=8 {
            let expected = specials_from(&sets[n + 1], n);
            prop_assert_eq!(s[n], expected.len() as u64, "n = {} in {}", n, inst.name);
            let listed = special_factors(&inst.source, n, None).unwrap();
            prop_assert_eq!(listed.specials, expected);
        }
    }

    #[test]
    fn truncation_is_a_lower_bound(spec in spec_strategy()) {
        prop_assume!(spec.alphabet_size <= 2);
        let nfa = spec.automaton();
        let lower = oracle_counts(&truncate(&nfa, 12).unwrap(), 8);
        let exact = factor_counts(&nfa, 8);
        for n in 0..=8 {
            prop_assert!(lower[n] <= exact[n]);
        }
    }

    #[test]
    fn finite_profiles_match_windows(words in prop::collection::vec("[ab]{0,9}", 1..6)) {
        let ab = Alphabet::ab();
        let words: Vec<Word> = words.iter().map(|s| ab.word(s).unwrap()).collect();
        let src = LanguageSource::finite(ab, words.clone()).unwrap();
        let p = profile(&src, 10, None).unwrap();
        prop_assert_eq!(p.values(), &oracle_counts(&words, 10)[..]);
    }

    #[test]
    fn eventually_periodic_matches_long_prefix(prefix in "[ab]{0,6}", cycle in "[ab]{1,6}") {
        let ab = Alphabet::ab();
        let g = Generator::eventually_periodic(ab.word(&prefix).unwrap(), ab.word(&cycle).unwrap()).unwrap();
        let long = g.expand_prefix(2000);
        let src = LanguageSource::infinite(ab, g).unwrap();
        let p = profile(&src, 12, None).unwrap();
        prop_assert_eq!(p.values(), &oracle_counts(&[long], 12)[..]);
    }
}

#[test]
fn builtin_words_match_long_prefixes() {
    for b in [Builtin::Fibonacci, Builtin::ThueMorse] {
        let LanguageSource::Infinite { generator, .. } = b.expand() else { panic!("{b:?}") };
        let long = generator.expand_prefix(20_000);
        let p = profile(&LanguageSource::Builtin(b), 20, None).unwrap();
        for n in 0..=20 {
            assert_eq!(p.get(n), oracle_factors(std::slice::from_ref(&long), n).len() as u64, "{} n = {n}", b.name());
        }
    }
}

#[test]
fn thue_morse_small_values() {
    let p = profile(&LanguageSource::Builtin(Builtin::ThueMorse), 3, None).unwrap();
    assert_eq!(p.values(), &[1, 2, 4, 6]);
}

/// For the regular builtins every factor of length <= 10 already occurs in an
/// accepted word of length <= 14, so the truncated oracle is exact there.
#[test]
fn regular_builtins_match_truncated_oracle() {
    for b in [Builtin::U, Builtin::Baab, Builtin::Mix, Builtin::Akb] {
        let nfa = b.expand().to_regular().unwrap();
        let words = truncate(&nfa, 14).unwrap();
        let p = profile(&LanguageSource::Builtin(b), 10, None).unwrap();
        assert_eq!(p.values(), &oracle_counts(&words, 10)[..], "{}", b.name());
    }
}
