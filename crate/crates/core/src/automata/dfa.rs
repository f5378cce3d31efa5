use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::nfa::{Nfa, StateId};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol, Word};

/// Hard limit on subset states produced by [`determinize`].
pub const SUBSET_CAP: usize = 1 << 20;

/// Deterministic automaton with a partial transition function.
///
/// The empty language is represented with zero states and no start state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<Option<StateId>>>,
    start: Option<StateId>,
    finals: Vec<bool>,
    trim: bool,
}

impl Dfa {
    pub fn from_parts(
        alphabet: Alphabet,
        delta: Vec<Vec<Option<StateId>>>,
        start: Option<StateId>,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let n = delta.len();
        if finals.len() != n {
            return Err(Error::Spec("final flags do not match state count".into()));
        }
        for row in &delta {
            if row.len() != alphabet.size() {
                return Err(Error::Spec("transition row width does not match alphabet".into()));
            }
            for &q in row.iter().flatten() {
                if q >= n {
                    return Err(Error::StateOutOfRange { state: q, states: n });
                }
            }
        }
        if let Some(s) = start {
            if s >= n {
                return Err(Error::StateOutOfRange { state: s, states: n });
            }
        }
        let mut dfa = Dfa { alphabet, delta, start, finals, trim: false };
        dfa.trim = dfa.is_structurally_trim();
        Ok(dfa)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> Option<StateId> {
        self.start
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn next(&self, q: StateId, a: Symbol) -> Option<StateId> {
        self.delta[q][a as usize]
    }

    /// Whether the trim flag is set.
    pub fn is_trim(&self) -> bool {
        self.trim
    }

    pub fn out_degree(&self, q: StateId) -> usize {
        self.delta[q].iter().flatten().count()
    }

    /// Outgoing transitions of `q` in symbol order.
    pub fn edges(&self, q: StateId) -> impl Iterator<Item = (Symbol, StateId)> + '_ {
        self.delta[q].iter().enumerate().filter_map(|(a, t)| t.map(|r| (a as Symbol, r)))
    }

    pub fn run(&self, w: &Word) -> Option<StateId> {
        let mut q = self.start?;
        for &a in w.symbols() {
            q = self.delta[q][a as usize]?;
        }
        Some(q)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).is_some_and(|q| self.finals[q])
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        if let Some(s) = self.start {
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(p) = queue.pop_front() {
                for (_, q) in self.edges(p) {
                    if !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for p in 0..n {
            for (_, q) in self.edges(p) {
                rev[q].push(p);
            }
        }
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<StateId> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Every state reachable from the start and co-reachable to a final state.
    pub fn is_structurally_trim(&self) -> bool {
        match self.start {
            None => self.state_count() == 0,
            Some(_) => {
                let r = self.reachable();
                let c = self.coreachable();
                (0..self.state_count()).all(|q| r[q] && c[q])
            }
        }
    }

    /// Renumbers the states kept by `keep` in breadth-first order from the start.
    fn renumber(&self, keep: &[bool]) -> Dfa {
        let empty =
            Dfa { alphabet: self.alphabet.clone(), delta: Vec::new(), start: None, finals: Vec::new(), trim: true };
        let Some(s) = self.start.filter(|&s| keep[s]) else {
            return empty;
        };
        let mut index = vec![usize::MAX; self.state_count()];
        let mut order = vec![s];
        index[s] = 0;
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            i += 1;
            for (_, q) in self.edges(p) {
                if keep[q] && index[q] == usize::MAX {
                    index[q] = order.len();
                    order.push(q);
                }
            }
        }
        let delta = order
            .iter()
            .map(|&p| self.delta[p].iter().map(|t| t.filter(|&q| keep[q]).map(|q| index[q])).collect())
            .collect();
        let finals = order.iter().map(|&p| self.finals[p]).collect();
        let mut out = Dfa { alphabet: self.alphabet.clone(), delta, start: Some(0), finals, trim: false };
        out.trim = out.is_structurally_trim();
        out
    }

    /// Drops unreachable and dead states; state 0 becomes the start.
    pub fn trim(&self) -> Dfa {
        let r = self.reachable();
        let c = self.coreachable();
        let keep: Vec<bool> = r.iter().zip(&c).map(|(a, b)| *a && *b).collect();
        self.renumber(&keep)
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut m = Nfa::new(self.alphabet.clone(), self.state_count());
        for p in 0..self.state_count() {
            for (a, q) in self.edges(p) {
                m.add_transition(p, a, q).expect("valid dfa transition");
            }
            if self.finals[p] {
                m.add_final(p).expect("valid state");
            }
        }
        if let Some(s) = self.start {
            m.add_start(s).expect("valid state");
        }
        m
    }

    /// Number of paths of each length `0..=n_max` from the start to a state in `targets`.
    pub fn count_paths(&self, n_max: usize, targets: &[bool]) -> Vec<BigUint> {
        let n = self.state_count();
        let mut out = Vec::with_capacity(n_max + 1);
        let Some(s) = self.start else {
            return vec![BigUint::zero(); n_max + 1];
        };
        let mut cur = vec![BigUint::zero(); n];
        cur[s] = BigUint::one();
        for len in 0..=n_max {
            let total = (0..n).filter(|&q| targets[q]).fold(BigUint::zero(), |acc, q| acc + &cur[q]);
            out.push(total);
            if len == n_max {
                break;
            }
            let mut next = vec![BigUint::zero(); n];
            for (p, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (_, q) in self.edges(p) {
                    next[q] += c;
                }
            }
            cur = next;
        }
        out
    }

    /// Saturating variant of [`Dfa::count_paths`] towards final states.
    pub(crate) fn count_accepted_saturating(&self, n_max: usize) -> Vec<u64> {
        let n = self.state_count();
        let Some(s) = self.start else {
            return vec![0; n_max + 1];
        };
        let mut cur = vec![0u64; n];
        cur[s] = 1;
        let mut out = Vec::with_capacity(n_max + 1);
        for len in 0..=n_max {
            out.push((0..n).filter(|&q| self.finals[q]).fold(0u64, |a, q| a.saturating_add(cur[q])));
            if len == n_max {
                break;
            }
            let mut next = vec![0u64; n];
            for (p, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (_, q) in self.edges(p) {
                    next[q] = next[q].saturating_add(c);
                }
            }
            cur = next;
        }
        out
    }

    /// Accepted words of length exactly `n`, in lexicographic order.
    pub fn words_of_length(&self, n: usize) -> Vec<Word> {
        let states = self.state_count();
        let Some(s) = self.start else {
            return Vec::new();
        };
        // alive[r][q]: some word of length r leads from q to a final state
        let mut alive = vec![self.finals.clone()];
        for r in 1..=n {
            let row = (0..states).map(|q| self.edges(q).any(|(_, t)| alive[r - 1][t])).collect();
            alive.push(row);
        }
        let mut out = Vec::new();
        if !alive[n][s] {
            return out;
        }
        let mut stack = vec![(s, Word::empty())];
        while let Some((q, w)) = stack.pop() {
            if w.len() == n {
                out.push(w);
                continue;
            }
            let remaining = n - w.len() - 1;
            for (a, t) in self.edges(q).collect::<Vec<_>>().into_iter().rev() {
                if alive[remaining][t] {
                    stack.push((t, w.appended(a)));
                }
            }
        }
        out
    }

    /// Shortest word leading from `from` to a state satisfying `target`, moving only
    /// through states satisfying `allowed`. Ties are broken by symbol order.
    pub fn shortest_path(
        &self,
        from: StateId,
        allowed: impl Fn(StateId) -> bool,
        target: impl Fn(StateId) -> bool,
    ) -> Option<(Word, StateId)> {
        let n = self.state_count();
        let mut parent: Vec<Option<(StateId, Symbol)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        let mut found = None;
        while let Some(p) = queue.pop_front() {
            if target(p) {
                found = Some(p);
                break;
            }
            for (a, q) in self.edges(p) {
                if !seen[q] && allowed(q) {
                    seen[q] = true;
                    parent[q] = Some((p, a));
                    queue.push_back(q);
                }
            }
        }
        let end = found?;
        let mut symbols = Vec::new();
        let mut cur = end;
        while let Some((p, a)) = parent[cur] {
            symbols.push(a);
            cur = p;
        }
        symbols.reverse();
        Some((Word::from_symbols(symbols), end))
    }
}

/// Accessible subset construction.
pub fn determinize(nfa: &Nfa) -> Result<Dfa> {
    determinize_with_cap(nfa, SUBSET_CAP)
}

pub fn determinize_with_cap(nfa: &Nfa, cap: usize) -> Result<Dfa> {
    let alphabet = nfa.alphabet().clone();
    let start: Vec<StateId> = nfa.starts().iter().copied().collect();
    if start.is_empty() {
        return Ok(Dfa { alphabet, delta: Vec::new(), start: None, finals: Vec::new(), trim: true });
    }
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = Vec::with_capacity(alphabet.size());
        for a in alphabet.symbols() {
            let succ = nfa.step(&subsets[i], a);
            if succ.is_empty() {
                row.push(None);
                continue;
            }
            let id = match index.get(&succ) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= cap {
                        return Err(Error::DeterminizationCap(cap));
                    }
                    let id = subsets.len();
                    index.insert(succ.clone(), id);
                    subsets.push(succ);
                    id
                }
            };
            row.push(Some(id));
        }
        delta.push(row);
        i += 1;
    }
    let finals = subsets.iter().map(|s| s.iter().any(|&q| nfa.is_final(q))).collect();
    let mut dfa = Dfa { alphabet, delta, start: Some(0), finals, trim: false };
    dfa.trim = dfa.is_structurally_trim();
    Ok(dfa)
}

/// Minimal trim automaton, canonically numbered; two automata accept the same
/// language iff their minimizations are equal.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let t = dfa.trim();
    let n = t.state_count();
    if n == 0 {
        return t;
    }
    let mut class: Vec<usize> = t.finals.iter().map(|&f| usize::from(f)).collect();
    let mut classes = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
    loop {
        let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next = Vec::with_capacity(n);
        for q in 0..n {
            let sig = (class[q], t.delta[q].iter().map(|s| s.map(|r| class[r])).collect());
            let len = ids.len();
            next.push(*ids.entry(sig).or_insert(len));
        }
        let count = ids.len();
        class = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut delta = vec![Vec::new(); classes];
    let mut finals = vec![false; classes];
    for q in 0..n {
        let c = class[q];
        if delta[c].is_empty() {
            delta[c] = t.delta[q].iter().map(|s| s.map(|r| class[r])).collect();
            finals[c] = t.finals[q];
        }
    }
    let quotient = Dfa { alphabet: t.alphabet.clone(), delta, start: Some(class[0]), finals, trim: true };
    quotient.renumber(&vec![true; classes])
}

/// Language equivalence through canonical minimal automata.
pub fn equivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    Ok(minimize(&determinize(a)?) == minimize(&determinize(b)?))
}

/// Exact number of accepted words of each length `0..=n_max`.
pub fn count_words_per_length(dfa: &Dfa, n_max: usize) -> Vec<BigUint> {
    dfa.count_paths(n_max, &dfa.finals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    /// a-loop on 0, a-transition-free move 0 -b-> 1, b-loop on 1, both final.
    pub(crate) fn u_nfa() -> Nfa {
        Nfa::from_transitions(ab(), 2, &[(0, 0, 0), (0, 1, 1), (1, 1, 1)], &[0], &[0, 1]).unwrap()
    }

    #[test]
    fn single_state_star() {
        let m = Nfa::from_transitions(ab(), 1, &[(0, 0, 0)], &[0], &[0]).unwrap();
        let d = determinize(&m).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(d.accepts(&ab().word("aaa").unwrap()));
        assert!(!d.accepts(&ab().word("b").unwrap()));
    }

    #[test]
    fn u_determinizes_to_two_states() {
        let d = determinize(&u_nfa()).unwrap();
        assert_eq!(d.state_count(), 2);
        assert_eq!(minimize(&d).state_count(), 2);
        for w in ab().all_words(4) {
            let s = ab().render(&w);
            let expected = !s.contains("ba");
            assert_eq!(d.accepts(&w), expected, "{s}");
        }
    }

    #[test]
    fn empty_language() {
        let m = Nfa::from_transitions(ab(), 2, &[(0, 0, 1)], &[0], &[]).unwrap();
        let d = determinize(&m).unwrap();
        assert!(d.finals().iter().all(|f| !f));
        let t = d.trim();
        assert_eq!(t.state_count(), 0);
        assert!(t.is_trim());
        assert_eq!(minimize(&d).state_count(), 0);
    }

    #[test]
    fn nondeterministic_blowup_is_capped() {
        // (a|b)* a (a|b)^k needs 2^(k+1) subset states
        let k = 6;
        let mut m = Nfa::new(ab(), k + 2);
        m.add_start(0).unwrap();
        m.add_transition(0, 0, 0).unwrap();
        m.add_transition(0, 1, 0).unwrap();
        m.add_transition(0, 0, 1).unwrap();
        for i in 1..=k {
            m.add_transition(i, 0, i + 1).unwrap();
            m.add_transition(i, 1, i + 1).unwrap();
        }
        m.add_final(k + 1).unwrap();
        assert_eq!(determinize(&m).unwrap().state_count(), 1 << (k + 1));
        assert_eq!(determinize_with_cap(&m, 10), Err(Error::DeterminizationCap(10)));
    }

    #[test]
    fn minimize_idempotent_and_canonical() {
        let d = determinize(&u_nfa()).unwrap();
        let m1 = minimize(&d);
        assert_eq!(minimize(&m1), m1);
        // redundant copy of the a-loop state
        let bloated =
            Nfa::from_transitions(ab(), 3, &[(0, 0, 2), (2, 0, 0), (0, 1, 1), (2, 1, 1), (1, 1, 1)], &[0], &[0, 1, 2])
                .unwrap();
        assert_eq!(minimize(&determinize(&bloated).unwrap()), m1);
    }

    #[test]
    fn counts_for_a_star_b_star() {
        let d = determinize(&u_nfa()).unwrap();
        let c = count_words_per_length(&d, 10);
        for (n, v) in c.iter().enumerate() {
            assert_eq!(*v, BigUint::from(n + 1));
        }
    }

    #[test]
    fn counts_for_full_language_are_exact_big_integers() {
        let d = determinize(&Nfa::universal(ab())).unwrap();
        let c = count_words_per_length(&d, 100);
        assert_eq!(c[100], BigUint::one() << 100usize);
        assert_eq!(c[3], BigUint::from(8u32));
    }

    #[test]
    fn words_of_length_lexicographic() {
        let d = determinize(&u_nfa()).unwrap();
        let w: Vec<String> = d.words_of_length(2).iter().map(|w| ab().render(w)).collect();
        assert_eq!(w, vec!["aa", "ab", "bb"]);
    }
}
