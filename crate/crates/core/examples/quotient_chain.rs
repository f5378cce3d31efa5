//! The chain of quotients L_k (words that extend by k letters inside L) and
//! its limit, whose factor language is extendable.

use subword_complexity::automata::{
    count_words_per_length, factor_closure, factor_dfa, shift_finals, stabilize_lprime,
};
use subword_complexity::langspec::{Builtin, LanguageSource};

fn main() {
    for b in [Builtin::Akb, Builtin::Baab, Builtin::Mix] {
        let nfa = b.expand().to_regular().unwrap();
        println!("{}", b.name());
        for k in 0..4 {
            let fact = factor_dfa(&shift_finals(&nfa, k)).unwrap();
            let counts: Vec<String> = count_words_per_length(&fact, 8).iter().map(|c| c.to_string()).collect();
            println!("  k = {k}: |F_n(L_k)| = {}", counts.join(","));
        }
        let limit = stabilize_lprime(&nfa);
        let src = LanguageSource::Regular { automaton: factor_closure(&limit.automaton) };
        println!(
            "  limit reached at k = {} (cycle {}), extendable: {}",
            limit.index,
            limit.period,
            src.is_extendable().unwrap()
        );
    }
}
