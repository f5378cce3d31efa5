//! Finite automata and the regular-language side of the gap theorem.
//!
//! The pipeline for a regular language `L` is: take the factor closure,
//! determinize, minimize, then count words per length (the complexity
//! function) or decide boundedness with [`decide_bounded`]. The right
//! quotients `L_k` and their stable limit are built with [`shift_finals`] and
//! [`stabilize_lprime`].

mod certificate;
mod cover;
mod dfa;
mod nfa;
pub mod scc;

use std::collections::{BTreeSet, HashMap};

pub use certificate::{decide_bounded, GapCertificate, Triple, UnboundedWitness};
pub use cover::{cover_nfa, verify_triple_cover, CoverMode, CoverOutcome};
pub use dfa::{count_words_per_length, determinize, determinize_with_cap, equivalent, minimize, Dfa, SUBSET_CAP};
pub use nfa::{Nfa, StateId};

use crate::error::Result;

/// Automaton for every factor of every word of `L`: trim, then make every
/// remaining state both initial and final.
pub fn factor_closure(nfa: &Nfa) -> Nfa {
    let mut t = nfa.trim();
    let all: BTreeSet<StateId> = (0..t.state_count()).collect();
    t.set_starts(all.clone());
    t.set_finals(all);
    t
}

/// Minimal DFA of the factor language.
pub fn factor_dfa(nfa: &Nfa) -> Result<Dfa> {
    Ok(minimize(&determinize(&factor_closure(nfa))?))
}

/// One backward step: states with a transition into `finals`.
fn predecessors_of(nfa: &Nfa, finals: &BTreeSet<StateId>) -> BTreeSet<StateId> {
    (0..nfa.state_count())
        .filter(|&q| nfa.alphabet().symbols().any(|a| nfa.successors(q, a).iter().any(|r| finals.contains(r))))
        .collect()
}

/// Automaton for `L_k = { w : w A^k ∩ L ≠ ∅ }`.
pub fn shift_finals(nfa: &Nfa, k: usize) -> Nfa {
    let mut finals = nfa.finals().clone();
    for _ in 0..k {
        finals = predecessors_of(nfa, &finals);
    }
    let mut out = nfa.clone();
    out.set_finals(finals);
    out
}

/// Result of [`stabilize_lprime`].
#[derive(Debug, Clone)]
pub struct LPrime {
    /// First `k` whose final-state set reappears later; the factor chain is constant from here.
    pub index: usize,
    /// Length of the cycle the final-state sets enter.
    pub period: usize,
    /// Automaton accepting the factor language of `L'`.
    pub automaton: Nfa,
}

/// Builds the factor language of `L'`, the words that are factors of every `L_k`.
///
/// The sets of final states of `L_0, L_1, ...` evolve deterministically, so they
/// eventually cycle; since factor sets only shrink along the chain, the factor
/// language is constant from the first repeated set on.
pub fn stabilize_lprime(nfa: &Nfa) -> LPrime {
    let mut seen: HashMap<BTreeSet<StateId>, usize> = HashMap::new();
    let mut finals = nfa.finals().clone();
    let mut k = 0;
    let (index, period) = loop {
        if let Some(&first) = seen.get(&finals) {
            break (first, k - first);
        }
        seen.insert(finals.clone(), k);
        finals = predecessors_of(nfa, &finals);
        k += 1;
    };
    LPrime { index, period, automaton: factor_closure(&shift_finals(nfa, index)) }
}
