//! Brute-force oracles.
//!
//! Nothing here calls the automata pipeline: regular languages are simulated
//! directly on the raw transition relation with state bitsets, and factor
//! sets of explicit word lists are read off sliding windows.

use std::collections::BTreeSet;

use crate::automata::Nfa;
use crate::error::{Error, Result};
use crate::words::{FactorSet, Symbol, Word};

/// Longest truncation [`truncate`] accepts.
pub const MAX_TRUNCATION: usize = 14;

/// Length-`n` blocks of the given words, by sliding windows.
pub fn oracle_factors(words: &[Word], n: usize) -> FactorSet {
    let mut set = FactorSet::new(n);
    for w in words {
        let s = w.symbols();
        if s.len() < n {
            continue;
        }
        for i in 0..=s.len() - n {
            set.insert(Word::from_symbols(s[i..i + n].to_vec()));
        }
    }
    set
}

/// Counts `|F_n|` for `n = 0..=n_max` over explicit words.
pub fn oracle_counts(words: &[Word], n_max: usize) -> Vec<u64> {
    (0..=n_max).map(|n| oracle_factors(words, n).len() as u64).collect()
}

/// State set as a bitset of `u64` words.
type States = Vec<u64>;

fn is_empty(set: &States) -> bool {
    set.iter().all(|&w| w == 0)
}

fn intersects(a: &States, b: &States) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn and(a: &States, b: &States) -> States {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn members(set: &States) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let q = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                i * 64 + q
            })
        })
    })
}

/// Bit-parallel view of the transition relation.
struct Masks {
    succ: Vec<Vec<States>>,
    starts: States,
    finals: States,
    width: usize,
    alphabet_size: usize,
}

impl Masks {
    fn new(nfa: &Nfa) -> Self {
        let n = nfa.state_count();
        let width = n.div_ceil(64).max(1);
        let alphabet_size = nfa.alphabet().size();
        let mut succ = vec![vec![vec![0u64; width]; alphabet_size]; n];
        for (p, a, q) in nfa.transitions() {
            succ[p][a as usize][q / 64] |= 1 << (q % 64);
        }
        let bits = |set: &BTreeSet<usize>| {
            let mut m = vec![0u64; width];
            for &q in set {
                m[q / 64] |= 1 << (q % 64);
            }
            m
        };
        Masks { succ, starts: bits(nfa.starts()), finals: bits(nfa.finals()), width, alphabet_size }
    }

    fn step(&self, set: &States, a: usize) -> States {
        let mut out = vec![0u64; self.width];
        for q in members(set) {
            for (o, t) in out.iter_mut().zip(&self.succ[q][a]) {
                *o |= t;
            }
        }
        out
    }

    fn closure(&self, seed: &States, forward: bool) -> States {
        let mut seen = seed.clone();
        loop {
            let mut next = seen.clone();
            for (p, row) in self.succ.iter().enumerate() {
                let p_seen = seen[p / 64] & (1 << (p % 64)) != 0;
                for targets in row {
                    if forward && p_seen {
                        for (o, t) in next.iter_mut().zip(targets) {
                            *o |= t;
                        }
                    }
                    if !forward && intersects(&seen, targets) {
                        next[p / 64] |= 1 << (p % 64);
                    }
                }
            }
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    /// States both reachable from a start and co-reachable to a final state.
    fn useful(&self) -> States {
        and(&self.closure(&self.starts, true), &self.closure(&self.finals, false))
    }
}

/// Every accepted word of length at most `l_max` (at most [`MAX_TRUNCATION`]), sorted.
pub fn truncate(nfa: &Nfa, l_max: usize) -> Result<Vec<Word>> {
    if l_max > MAX_TRUNCATION {
        return Err(Error::TruncationTooLong { requested: l_max, limit: MAX_TRUNCATION });
    }
    let m = Masks::new(nfa);
    let coreach = m.closure(&m.finals, false);
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<Symbol>::new(), and(&m.starts, &coreach))];
    while let Some((w, set)) = stack.pop() {
        if is_empty(&set) {
            continue;
        }
        if intersects(&set, &m.finals) {
            out.push(Word::from_symbols(w.clone()));
        }
        if w.len() < l_max {
            for a in 0..m.alphabet_size {
                let mut v = w.clone();
                v.push(a as Symbol);
                stack.push((v, and(&m.step(&set, a), &coreach)));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Exact `|F_n(L)|` for `n = 0..=n_max`, by walking the tree of factors.
///
/// A word is a factor iff it labels a path between two useful states; each
/// tree node keeps only the set of useful states the word can end in, so
/// every distinct factor is visited exactly once.
pub fn factor_counts(nfa: &Nfa, n_max: usize) -> Vec<u64> {
    let m = Masks::new(nfa);
    let useful = m.useful();
    let mut counts = Vec::with_capacity(n_max + 1);
    let mut level = if is_empty(&useful) { Vec::new() } else { vec![useful.clone()] };
    for n in 0..=n_max {
        counts.push(level.len() as u64);
        if n == n_max {
            break;
        }
        let mut next = Vec::with_capacity(level.len() * 2);
        for set in &level {
            for a in 0..m.alphabet_size {
                let t = and(&m.step(set, a), &useful);
                if !is_empty(&t) {
                    next.push(t);
                }
            }
        }
        level = next;
    }
    counts
}

/// Exact `F_n(L)` for `n = 0..=n_max`, same walk as [`factor_counts`] but keeping the words.
pub fn factor_sets(nfa: &Nfa, n_max: usize) -> Vec<FactorSet> {
    let m = Masks::new(nfa);
    let useful = m.useful();
    let mut sets = Vec::with_capacity(n_max + 1);
    let mut level: Vec<(Vec<Symbol>, States)> =
        if is_empty(&useful) { Vec::new() } else { vec![(Vec::new(), useful.clone())] };
    for n in 0..=n_max {
        sets.push(FactorSet::from_words(n, level.iter().map(|(w, _)| Word::from_symbols(w.clone()))));
        if n == n_max {
            break;
        }
        let mut next = Vec::new();
        for (w, set) in &level {
            for a in 0..m.alphabet_size {
                let t = and(&m.step(set, a), &useful);
                if !is_empty(&t) {
                    let mut v = w.clone();
                    v.push(a as Symbol);
                    next.push((v, t));
                }
            }
        }
        level = next;
    }
    sets
}

/// Whether `w` is a factor of the language of `nfa`.
pub fn is_factor_of(nfa: &Nfa, w: &Word) -> bool {
    let m = Masks::new(nfa);
    let useful = m.useful();
    let mut set = useful.clone();
    for &a in w.symbols() {
        set = and(&m.step(&set, a as usize), &useful);
    }
    !is_empty(&set)
}

/// Whether `nfa` accepts `w`.
pub fn accepts(nfa: &Nfa, w: &Word) -> bool {
    let m = Masks::new(nfa);
    let mut set = m.starts.clone();
    for &a in w.symbols() {
        set = m.step(&set, a as usize);
    }
    intersects(&set, &m.finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    fn u() -> Nfa {
        Nfa::from_transitions(ab(), 2, &[(0, 0, 0), (0, 1, 1), (1, 1, 1)], &[0], &[0, 1]).unwrap()
    }

    #[test]
    fn window_examples() {
        let words = truncate(&u(), 6).unwrap();
        assert_eq!(oracle_factors(&words, 3).render(&ab()), vec!["aaa", "aab", "abb", "bbb"]);
        assert_eq!(oracle_factors(&[ab().word("ab").unwrap()], 1).render(&ab()), vec!["a", "b"]);
        assert!(oracle_factors(&[], 2).is_empty());
        assert!(oracle_factors(&[], 0).is_empty());
    }

    #[test]
    fn truncation_limit() {
        assert_eq!(truncate(&u(), 15), Err(Error::TruncationTooLong { requested: 15, limit: 14 }));
        assert_eq!(truncate(&u(), 14).unwrap().len(), (0..=14).map(|l| l + 1).sum::<usize>());
    }

    #[test]
    fn counts_of_u_and_full() {
        assert_eq!(factor_counts(&u(), 8), (1..=9).collect::<Vec<u64>>());
        assert_eq!(factor_counts(&Nfa::universal(ab()), 10), (0..=10).map(|n| 1u64 << n).collect::<Vec<_>>());
        assert_eq!(factor_counts(&Nfa::empty(ab()), 3), vec![0; 4]);
    }

    #[test]
    fn sets_match_truncation_on_finite() {
        let words: Vec<Word> = ["abba", "b", "aab"].iter().map(|s| ab().word(s).unwrap()).collect();
        let nfa = Nfa::from_words(ab(), &words);
        let sets = factor_sets(&nfa, 5);
        for (n, set) in sets.iter().enumerate() {
            assert_eq!(set, &oracle_factors(&words, n));
        }
        assert!(is_factor_of(&nfa, &ab().word("bb").unwrap()));
        assert!(!is_factor_of(&nfa, &ab().word("bab").unwrap()));
        assert!(accepts(&nfa, &ab().word("b").unwrap()));
        assert!(!accepts(&nfa, &ab().word("bb").unwrap()));
    }

    #[test]
    fn more_than_64_states() {
        let long = Word::from_symbols((0..150).map(|i| (i % 3 == 0) as Symbol).collect());
        let nfa = Nfa::from_words(ab(), std::slice::from_ref(&long));
        assert!(nfa.state_count() > 128);
        let counts = factor_counts(&nfa, 12);
        assert_eq!(counts, oracle_counts(std::slice::from_ref(&long), 12));
        assert!(accepts(&nfa, &long));
        assert_eq!(truncate(&nfa, 14).unwrap(), Vec::<Word>::new());
    }
}
