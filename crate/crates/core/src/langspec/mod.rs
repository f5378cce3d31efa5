//! Uniform sources of languages: finite sets, regular languages, and the
//! languages of right-infinite and bi-infinite words.
//!
//! Every source can enumerate its length-`n` factors. Regular and finite
//! sources are always exact. Generated words are materialized up to a
//! horizon, and the result is flagged exact only when the horizon provably
//! contains every factor (eventually periodic generators); otherwise the
//! flag records that the set is a lower approximation.

mod builtin;
mod generator;
pub mod json;

use std::borrow::Cow;
use std::collections::BTreeSet;

pub use builtin::Builtin;
pub use generator::Generator;

use crate::automata::{determinize, factor_dfa, Nfa};
use crate::error::{Error, Result};
use crate::words::{add_factors_of_slice, Alphabet, FactorSet, Word};

/// Default horizon for materializing generated words when looking at factors of length `n`.
pub fn default_horizon(n: usize) -> usize {
    (64 * n).max(4096)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSource {
    Finite {
        alphabet: Alphabet,
        words: BTreeSet<Word>,
    },
    Regular {
        automaton: Nfa,
    },
    /// The language (set of factors) of a right-infinite word.
    Infinite {
        alphabet: Alphabet,
        generator: Generator,
    },
    /// The language of the bi-infinite word `... l(2) l(1) l(0) r(0) r(1) r(2) ...`.
    BiInfinite {
        alphabet: Alphabet,
        left: Generator,
        right: Generator,
    },
    Builtin(Builtin),
}

/// A factor set together with its exactness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factors {
    pub set: FactorSet,
    /// False when the set was read off a finite window and may miss factors.
    pub exact: bool,
}

impl LanguageSource {
    pub fn finite(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            for &s in w.symbols() {
                alphabet.check(s)?;
            }
        }
        Ok(LanguageSource::Finite { alphabet, words })
    }

    pub fn infinite(alphabet: Alphabet, generator: Generator) -> Result<Self> {
        check_generator(&alphabet, &generator)?;
        Ok(LanguageSource::Infinite { alphabet, generator })
    }

    pub fn bi_infinite(alphabet: Alphabet, left: Generator, right: Generator) -> Result<Self> {
        check_generator(&alphabet, &left)?;
        check_generator(&alphabet, &right)?;
        Ok(LanguageSource::BiInfinite { alphabet, left, right })
    }

    /// The bi-infinite word `... c c c ...` whose period is `cycle`.
    pub fn periodic_bi_infinite(alphabet: Alphabet, cycle: Word) -> Result<Self> {
        let left = Generator::periodic(cycle.reversed())?;
        let right = Generator::periodic(cycle)?;
        Self::bi_infinite(alphabet, left, right)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Ok(LanguageSource::Builtin(name.parse()?))
    }

    /// Builtins replaced by their definition; other sources unchanged.
    pub fn resolved(&self) -> Cow<'_, LanguageSource> {
        match self {
            LanguageSource::Builtin(b) => Cow::Owned(b.expand()),
            other => Cow::Borrowed(other),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            LanguageSource::Finite { alphabet, .. }
            | LanguageSource::Infinite { alphabet, .. }
            | LanguageSource::BiInfinite { alphabet, .. } => alphabet.clone(),
            LanguageSource::Regular { automaton } => automaton.alphabet().clone(),
            LanguageSource::Builtin(b) => b.expand().alphabet(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.resolved().as_ref() {
            LanguageSource::Finite { .. } => "finite",
            LanguageSource::Regular { .. } => "regular",
            LanguageSource::Infinite { .. } => "infinite",
            LanguageSource::BiInfinite { .. } => "bi_infinite",
            LanguageSource::Builtin(_) => unreachable!("resolved"),
        }
    }

    /// Whether the source is the language of an (bi-)infinite word.
    pub fn is_word_language(&self) -> bool {
        matches!(self.resolved().as_ref(), LanguageSource::Infinite { .. } | LanguageSource::BiInfinite { .. })
    }

    /// The materialized window used for generated words, if this source has one.
    pub fn window(&self, horizon: usize) -> Option<Word> {
        match self.resolved().as_ref() {
            LanguageSource::Infinite { generator, .. } => Some(generator.expand_prefix(horizon)),
            LanguageSource::BiInfinite { left, right, .. } => {
                Some(left.expand_prefix(horizon).reversed().concat(&right.expand_prefix(horizon)))
            }
            _ => None,
        }
    }

    /// Whether a window of `horizon` contains every length-`n` factor.
    pub fn window_is_exact(&self, n: usize, horizon: usize) -> bool {
        match self.resolved().as_ref() {
            LanguageSource::Infinite { generator, .. } => generator.exact_horizon(n).is_some_and(|h| horizon >= h),
            LanguageSource::BiInfinite { left, right, .. } => {
                [left, right].iter().all(|g| g.exact_horizon(n).is_some_and(|h| horizon >= h))
            }
            _ => true,
        }
    }

    /// `F_n(L)` with its exactness flag. `horizon` defaults to [`default_horizon`].
    pub fn enumerate_factors(&self, n: usize, horizon: Option<usize>) -> Result<Factors> {
        let source = self.resolved();
        match source.as_ref() {
            LanguageSource::Finite { words, .. } => {
                let mut set = FactorSet::new(n);
                if n == 0 && words.is_empty() {
                    return Ok(Factors { set, exact: true });
                }
                for w in words {
                    add_factors_of_slice(&mut set, w.symbols());
                }
                Ok(Factors { set, exact: true })
            }
            LanguageSource::Regular { automaton } => {
                let dfa = factor_dfa(automaton)?;
                Ok(Factors { set: FactorSet::from_words(n, dfa.words_of_length(n)), exact: true })
            }
            LanguageSource::Infinite { .. } | LanguageSource::BiInfinite { .. } => {
                let horizon = horizon.unwrap_or_else(|| default_horizon(n));
                if horizon < n {
                    return Err(Error::HorizonTooSmall { horizon, n });
                }
                let window = source.window(horizon).expect("word source");
                let mut set = FactorSet::new(n);
                add_factors_of_slice(&mut set, window.symbols());
                Ok(Factors { set, exact: source.window_is_exact(n, horizon) })
            }
            LanguageSource::Builtin(_) => unreachable!("resolved"),
        }
    }

    /// Whether every word of the language has a one-letter right extension inside it.
    pub fn is_extendable(&self) -> Result<bool> {
        match self.resolved().as_ref() {
            LanguageSource::Finite { words, alphabet } => {
                Ok(words.iter().all(|w| alphabet.symbols().any(|a| words.contains(&w.appended(a)))))
            }
            LanguageSource::Regular { automaton } => {
                let dfa = determinize(automaton)?.trim();
                Ok((0..dfa.state_count())
                    .filter(|&q| dfa.is_final(q))
                    .all(|q| dfa.edges(q).any(|(_, r)| dfa.is_final(r))))
            }
            LanguageSource::Infinite { .. } | LanguageSource::BiInfinite { .. } => Ok(true),
            LanguageSource::Builtin(_) => unreachable!("resolved"),
        }
    }

    /// An automaton whose factor language equals this source's factor language,
    /// when one exists: finite and regular sources, and words whose generators
    /// are all eventually periodic.
    pub fn to_regular(&self) -> Option<Nfa> {
        match self.resolved().as_ref() {
            LanguageSource::Finite { alphabet, words } => Some(Nfa::from_words(alphabet.clone(), words)),
            LanguageSource::Regular { automaton } => Some(automaton.clone()),
            LanguageSource::Infinite { alphabet, generator } => {
                let (p, c) = periodic_parts(generator)?;
                // p c*
                Some(chain_with_loops(alphabet, &[(p, false), (c, true)]))
            }
            LanguageSource::BiInfinite { alphabet, left, right } => {
                let (lp, lc) = periodic_parts(left)?;
                let (rp, rc) = periodic_parts(right)?;
                // rev(lc)* rev(lc) rev(lp) rp rc rc*: the explicit copies keep the two loops
                // on distinct states without changing the factor language
                let middle = lc.reversed().concat(&lp.reversed()).concat(&rp).concat(&rc);
                Some(chain_with_loops(alphabet, &[(lc.reversed(), true), (middle, false), (rc, true)]))
            }
            LanguageSource::Builtin(_) => unreachable!("resolved"),
        }
    }
}

fn check_generator(alphabet: &Alphabet, g: &Generator) -> Result<()> {
    if g.min_alphabet() > alphabet.size() {
        return Err(Error::InvalidGenerator(format!(
            "generator needs {} symbols, alphabet has {}",
            g.min_alphabet(),
            alphabet.size()
        )));
    }
    Ok(())
}

fn periodic_parts(g: &Generator) -> Option<(Word, Word)> {
    match g {
        Generator::EventuallyPeriodic { prefix, cycle } => Some((prefix.clone(), cycle.clone())),
        _ => None,
    }
}

/// Concatenation of segments, each either read once or starred.
fn chain_with_loops(alphabet: &Alphabet, segments: &[(Word, bool)]) -> Nfa {
    let mut m = Nfa::new(alphabet.clone(), 1);
    m.add_start(0).expect("state 0");
    let mut q = 0;
    for (w, starred) in segments {
        if *starred {
            let mut p = q;
            for (i, &a) in w.symbols().iter().enumerate() {
                let r = if i + 1 == w.len() { q } else { m.add_state() };
                m.add_transition(p, a, r).expect("fresh state");
                p = r;
            }
        } else {
            for &a in w.symbols() {
                let r = m.add_state();
                m.add_transition(q, a, r).expect("fresh state");
                q = r;
            }
        }
    }
    m.add_final(q).expect("state exists");
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::equivalent;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    fn w(s: &str) -> Word {
        ab().word(s).unwrap()
    }

    fn rendered(f: &Factors) -> Vec<String> {
        f.set.render(&ab())
    }

    #[test]
    fn u_factors() {
        let f = Builtin::U.expand().enumerate_factors(2, None).unwrap();
        assert_eq!(rendered(&f), vec!["aa", "ab", "bb"]);
        assert!(f.exact);
    }

    #[test]
    fn akb_factors() {
        let f = LanguageSource::builtin("AKB").unwrap().enumerate_factors(3, None).unwrap();
        assert_eq!(rendered(&f), vec!["aaa", "aab"]);
    }

    #[test]
    fn aaabbb_factors() {
        let f = LanguageSource::builtin("AAABBB").unwrap().enumerate_factors(2, Some(10)).unwrap();
        assert_eq!(rendered(&f), vec!["aa", "ab", "bb"]);
        assert!(f.exact);
    }

    #[test]
    fn horizon_checks() {
        let fib = Builtin::Fibonacci.expand();
        assert_eq!(fib.enumerate_factors(5, Some(3)), Err(Error::HorizonTooSmall { horizon: 3, n: 5 }));
        assert!(!fib.enumerate_factors(5, None).unwrap().exact);
        let ep = LanguageSource::infinite(ab(), Generator::eventually_periodic(w("b"), w("a")).unwrap()).unwrap();
        assert!(!ep.enumerate_factors(3, Some(4)).unwrap().exact);
        assert!(ep.enumerate_factors(3, Some(5)).unwrap().exact);
        assert_eq!(rendered(&ep.enumerate_factors(3, Some(5)).unwrap()), vec!["aaa", "baa"]);
    }

    #[test]
    fn empty_word_count() {
        let empty = LanguageSource::finite(ab(), []).unwrap();
        assert_eq!(empty.enumerate_factors(0, None).unwrap().set.len(), 0);
        let reg_empty = LanguageSource::Regular { automaton: Nfa::empty(ab()) };
        assert_eq!(reg_empty.enumerate_factors(0, None).unwrap().set.len(), 0);
        for b in Builtin::ALL {
            assert_eq!(b.expand().enumerate_factors(0, None).unwrap().set.len(), 1, "{b}");
        }
    }

    #[test]
    fn extendability() {
        let fin = LanguageSource::finite(ab(), [w("a"), w("ab")]).unwrap();
        assert!(!fin.is_extendable().unwrap());
        assert!(Builtin::Fibonacci.expand().is_extendable().unwrap());
        assert!(Builtin::Aaabbb.expand().is_extendable().unwrap());
        assert!(Builtin::U.expand().is_extendable().unwrap());
        assert!(!Builtin::Akb.expand().is_extendable().unwrap());
    }

    #[test]
    fn generated_words_as_regular() {
        let aaabbb = Builtin::Aaabbb.expand().to_regular().unwrap();
        let u = Builtin::U.expand().to_regular().unwrap();
        let fa = crate::automata::factor_closure(&aaabbb);
        assert!(equivalent(&fa, &u).unwrap());
        assert!(Builtin::Fibonacci.expand().to_regular().is_none());
    }

    #[test]
    fn fibonacci_is_sturmian() {
        let fib = LanguageSource::infinite(ab(), Generator::sturmian_cf(vec![], vec![1]).unwrap()).unwrap();
        let window = fib.window(default_horizon(200)).unwrap();
        for n in 1..=200 {
            let mut set = FactorSet::new(n);
            add_factors_of_slice(&mut set, window.symbols());
            assert_eq!(set.len(), n + 1, "n = {n}");
        }
    }

    #[test]
    fn periodic_factor_count_is_least_period() {
        for (cycle, period) in [("ab", 2), ("abab", 2), ("aab", 3), ("aabab", 5), ("a", 1)] {
            let src = LanguageSource::infinite(ab(), Generator::periodic(w(cycle)).unwrap()).unwrap();
            assert_eq!(w(cycle).primitive_root_len(), period);
            let f = src.enumerate_factors(12, None).unwrap();
            assert!(f.exact);
            assert_eq!(f.set.len(), period, "{cycle}");
        }
    }

    #[test]
    fn windows_are_monotone() {
        let tm = Builtin::ThueMorse.expand();
        for n in [3, 6, 9] {
            let small = tm.enumerate_factors(n, Some(40)).unwrap().set;
            let large = tm.enumerate_factors(n, Some(400)).unwrap().set;
            assert!(small.is_subset(&large));
        }
    }
}
