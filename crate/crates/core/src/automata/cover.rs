//! Checking `L ⊆ ∪ x y^n z` for a triple set.

use std::collections::VecDeque;

use super::certificate::Triple;
use super::dfa::{determinize, Dfa};
use super::nfa::{Nfa, StateId};
use crate::words::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// Exact inclusion test through automata.
    Formal,
    /// Exhaustive test of every word of `L` up to a length.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    Covered,
    /// A shortest uncovered word of `L`.
    Counterexample(Word),
    CapExceeded,
}

impl CoverOutcome {
    pub fn is_covered(&self) -> bool {
        matches!(self, CoverOutcome::Covered)
    }
}

/// Automaton for the union of `x y* z` (or `x z` alone for zero-exponent triples).
pub fn cover_nfa(alphabet: &Alphabet, triples: &[Triple]) -> Nfa {
    let mut m = Nfa::new(alphabet.clone(), 0);
    for t in triples {
        let start = m.add_state();
        m.add_start(start).expect("fresh state");
        let chain = |m: &mut Nfa, from: StateId, w: &Word| -> StateId {
            let mut q = from;
            for &a in w.symbols() {
                let r = m.add_state();
                m.add_transition(q, a, r).expect("fresh state");
                q = r;
            }
            q
        };
        let mut q = chain(&mut m, start, &t.x);
        if !t.zero_exponent {
            // loop reading y, returning to q
            let ys = t.y.symbols();
            let mut p = q;
            for (i, &a) in ys.iter().enumerate() {
                let r = if i + 1 == ys.len() { q } else { m.add_state() };
                m.add_transition(p, a, r).expect("fresh state");
                p = r;
            }
        }
        q = chain(&mut m, q, &t.z);
        m.add_final(q).expect("fresh state");
    }
    m
}

pub fn verify_triple_cover(nfa: &Nfa, triples: &[Triple], mode: CoverMode, sample_max: usize) -> CoverOutcome {
    match mode {
        CoverMode::Sampled => {
            for w in nfa.accepted_words_up_to(sample_max) {
                if !triples.iter().any(|t| t.generates(&w)) {
                    return CoverOutcome::Counterexample(w);
                }
            }
            CoverOutcome::Covered
        }
        CoverMode::Formal => match determinize(&cover_nfa(nfa.alphabet(), triples)) {
            Ok(cover) => formal_inclusion(nfa, &cover),
            Err(_) => CoverOutcome::CapExceeded,
        },
    }
}

/// Breadth-first search of the product of `nfa` with the complement of `cover`.
fn formal_inclusion(nfa: &Nfa, cover: &Dfa) -> CoverOutcome {
    // cover state `None` is the implicit rejecting sink
    let sink = cover.state_count();
    let width = sink + 1;
    let encode = |q: StateId, d: Option<StateId>| q * width + d.unwrap_or(sink);
    let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; nfa.state_count() * width];
    let mut seen = vec![false; nfa.state_count() * width];
    let mut queue = VecDeque::new();
    for &s in nfa.starts() {
        let id = encode(s, cover.start());
        if !seen[id] {
            seen[id] = true;
            queue.push_back((s, cover.start()));
        }
    }
    while let Some((q, d)) = queue.pop_front() {
        let id = encode(q, d);
        if nfa.is_final(q) && !d.is_some_and(|d| cover.is_final(d)) {
            let mut symbols = Vec::new();
            let mut cur = id;
            while let Some((prev, a)) = parent[cur] {
                symbols.push(a);
                cur = prev;
            }
            symbols.reverse();
            return CoverOutcome::Counterexample(Word::from_symbols(symbols));
        }
        for a in nfa.alphabet().symbols() {
            let nd = d.and_then(|d| cover.next(d, a));
            for &r in nfa.successors(q, a) {
                let rid = encode(r, nd);
                if !seen[rid] {
                    seen[rid] = true;
                    parent[rid] = Some((id, a));
                    queue.push_back((r, nd));
                }
            }
        }
    }
    CoverOutcome::Covered
}
