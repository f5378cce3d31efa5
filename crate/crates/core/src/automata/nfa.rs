use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol, Word};

pub type StateId = usize;

/// Nondeterministic automaton without epsilon moves.
///
/// Successor lists are kept sorted and deduplicated so that every traversal
/// visits states and symbols in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    delta: Vec<Vec<Vec<StateId>>>,
    starts: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        let width = alphabet.size();
        Nfa { alphabet, delta: vec![vec![Vec::new(); width]; states], starts: BTreeSet::new(), finals: BTreeSet::new() }
    }

    /// Automaton for the empty language (no states at all).
    pub fn empty(alphabet: Alphabet) -> Self {
        Nfa::new(alphabet, 0)
    }

    /// One state accepting every word.
    pub fn universal(alphabet: Alphabet) -> Self {
        let mut m = Nfa::new(alphabet, 1);
        for a in m.alphabet.symbols().collect::<Vec<_>>() {
            m.delta[0][a as usize].push(0);
        }
        m.starts.insert(0);
        m.finals.insert(0);
        m
    }

    pub fn from_transitions(
        alphabet: Alphabet,
        states: usize,
        transitions: &[(StateId, Symbol, StateId)],
        starts: &[StateId],
        finals: &[StateId],
    ) -> Result<Self> {
        let mut m = Nfa::new(alphabet, states);
        for &(p, a, q) in transitions {
            m.add_transition(p, a, q)?;
        }
        for &s in starts {
            m.add_start(s)?;
        }
        for &f in finals {
            m.add_final(f)?;
        }
        Ok(m)
    }

    /// Prefix-tree automaton accepting exactly `words`.
    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(alphabet: Alphabet, words: I) -> Self {
        let mut m = Nfa::new(alphabet, 1);
        m.starts.insert(0);
        let mut any = false;
        for w in words {
            any = true;
            let mut q = 0;
            for &a in w.symbols() {
                q = match m.delta[q][a as usize].first() {
                    Some(&r) => r,
                    None => {
                        let r = m.add_state();
                        m.delta[q][a as usize].push(r);
                        r
                    }
                };
            }
            m.finals.insert(q);
        }
        if !any {
            return Nfa::empty(m.alphabet);
        }
        m
    }

    pub fn add_state(&mut self) -> StateId {
        self.delta.push(vec![Vec::new(); self.alphabet.size()]);
        self.delta.len() - 1
    }

    fn check_state(&self, q: StateId) -> Result<()> {
        if q < self.delta.len() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, states: self.delta.len() })
        }
    }

    pub fn add_transition(&mut self, from: StateId, a: Symbol, to: StateId) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        self.alphabet.check(a)?;
        let succ = &mut self.delta[from][a as usize];
        if let Err(pos) = succ.binary_search(&to) {
            succ.insert(pos, to);
        }
        Ok(())
    }

    pub fn add_start(&mut self, q: StateId) -> Result<()> {
        self.check_state(q)?;
        self.starts.insert(q);
        Ok(())
    }

    pub fn add_final(&mut self, q: StateId) -> Result<()> {
        self.check_state(q)?;
        self.finals.insert(q);
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn starts(&self) -> &BTreeSet<StateId> {
        &self.starts
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn successors(&self, q: StateId, a: Symbol) -> &[StateId] {
        &self.delta[q][a as usize]
    }

    /// All transitions in `(state, symbol, target)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter().enumerate().flat_map(move |(a, succ)| succ.iter().map(move |&q| (p, a as Symbol, q)))
        })
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    pub(crate) fn set_finals(&mut self, finals: BTreeSet<StateId>) {
        self.finals = finals;
    }

    pub(crate) fn set_starts(&mut self, starts: BTreeSet<StateId>) {
        self.starts = starts;
    }

    /// Subset step: states reachable from `set` by reading `a`.
    pub fn step(&self, set: &[StateId], a: Symbol) -> Vec<StateId> {
        let mut out: Vec<StateId> = set.iter().flat_map(|&q| self.delta[q][a as usize].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut cur: Vec<StateId> = self.starts.iter().copied().collect();
        for &a in w.symbols() {
            if cur.is_empty() {
                return false;
            }
            cur = self.step(&cur, a);
        }
        cur.iter().any(|q| self.finals.contains(q))
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue: VecDeque<StateId> = self.starts.iter().copied().collect();
        for &s in &self.starts {
            seen[s] = true;
        }
        while let Some(p) = queue.pop_front() {
            for succ in &self.delta[p] {
                for &q in succ {
                    if !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        seen
    }

    /// Minimum number of steps from each state to a final state.
    pub fn distance_to_final(&self) -> Vec<Option<usize>> {
        let n = self.state_count();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            rev[q].push(p);
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for &f in &self.finals {
            dist[f] = Some(0);
            queue.push_back(f);
        }
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap();
            for &p in &rev[q] {
                if dist[p].is_none() {
                    dist[p] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// Keeps only states that are reachable and co-reachable, renumbered in index order.
    pub fn trim(&self) -> Nfa {
        let reach = self.reachable();
        let dist = self.distance_to_final();
        let keep: Vec<bool> = (0..self.state_count()).map(|q| reach[q] && dist[q].is_some()).collect();
        let mut index = vec![usize::MAX; self.state_count()];
        let mut next = 0;
        for q in 0..self.state_count() {
            if keep[q] {
                index[q] = next;
                next += 1;
            }
        }
        let mut out = Nfa::new(self.alphabet.clone(), next);
        for (p, a, q) in self.transitions() {
            if keep[p] && keep[q] {
                out.delta[index[p]][a as usize].push(index[q]);
            }
        }
        out.starts = self.starts.iter().filter(|&&q| keep[q]).map(|&q| index[q]).collect();
        out.finals = self.finals.iter().filter(|&&q| keep[q]).map(|&q| index[q]).collect();
        out
    }

    pub fn is_empty_language(&self) -> bool {
        let dist = self.distance_to_final();
        self.starts.iter().all(|&s| dist[s].is_none())
    }

    /// Disjoint union.
    pub fn union(&self, other: &Nfa) -> Nfa {
        assert_eq!(self.alphabet, other.alphabet, "union over different alphabets");
        let offset = self.state_count();
        let mut out = self.clone();
        for row in &other.delta {
            out.delta.push(row.iter().map(|succ| succ.iter().map(|q| q + offset).collect()).collect());
        }
        out.starts.extend(other.starts.iter().map(|q| q + offset));
        out.finals.extend(other.finals.iter().map(|q| q + offset));
        out
    }

    /// Every accepted word of length at most `max_len`, in length-lexicographic order.
    pub fn accepted_words_up_to(&self, max_len: usize) -> Vec<Word> {
        let dist = self.distance_to_final();
        let viable = |set: &[StateId], remaining: usize| set.iter().any(|&q| dist[q].is_some_and(|d| d <= remaining));
        let mut out = Vec::new();
        let start: Vec<StateId> = self.starts.iter().copied().collect();
        if !viable(&start, max_len) {
            return out;
        }
        let mut level = vec![(Word::empty(), start)];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, set) in &level {
                if set.iter().any(|q| self.finals.contains(q)) {
                    out.push(w.clone());
                }
                if len == max_len {
                    continue;
                }
                for a in self.alphabet.symbols() {
                    let succ = self.step(set, a);
                    if !succ.is_empty() && viable(&succ, max_len - len - 1) {
                        next.push((w.appended(a), succ));
                    }
                }
            }
            level = next;
        }
        out
    }
}
