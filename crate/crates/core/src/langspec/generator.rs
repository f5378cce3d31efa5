use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol, Word};

/// A finite description of a right-infinite word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `prefix · cycle^ω`
    EventuallyPeriodic { prefix: Word, cycle: Word },
    /// Fixed point of a prolongable morphism, optionally passed through a letter-to-letter coding.
    Morphic { rules: Vec<Word>, seed: Symbol, coding: Option<Vec<Symbol>> },
    /// Limit of the standard words `s_k = s_{k-1}^{d_k} s_{k-2}` with `s_{-1} = 1`, `s_0 = 0`,
    /// where the partial quotients `d_k` are `directive` followed by `repeated_tail` forever.
    SturmianCf { directive: Vec<u32>, repeated_tail: Vec<u32> },
}

impl Generator {
    pub fn eventually_periodic(prefix: Word, cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidGenerator("cycle must be non-empty".into()));
        }
        Ok(Generator::EventuallyPeriodic { prefix, cycle })
    }

    pub fn periodic(cycle: Word) -> Result<Self> {
        Self::eventually_periodic(Word::empty(), cycle)
    }

    pub fn morphic(alphabet: &Alphabet, rules: Vec<Word>, seed: Symbol, coding: Option<Vec<Symbol>>) -> Result<Self> {
        if rules.len() != alphabet.size() {
            return Err(Error::InvalidGenerator(format!(
                "morphism needs one image per symbol ({} given, {} expected)",
                rules.len(),
                alphabet.size()
            )));
        }
        alphabet.check(seed)?;
        for (s, image) in rules.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::InvalidGenerator(format!("image of {:?} is empty", alphabet.char_of(s as Symbol))));
            }
            for &a in image.symbols() {
                alphabet.check(a)?;
            }
        }
        let image = &rules[seed as usize];
        if image.len() < 2 || image.symbols()[0] != seed {
            return Err(Error::NonProlongable(alphabet.char_of(seed)));
        }
        if let Some(c) = &coding {
            if c.len() != alphabet.size() {
                return Err(Error::InvalidGenerator("coding needs one image per symbol".into()));
            }
            for &a in c {
                alphabet.check(a)?;
            }
        }
        Ok(Generator::Morphic { rules, seed, coding })
    }

    pub fn sturmian_cf(directive: Vec<u32>, repeated_tail: Vec<u32>) -> Result<Self> {
        if repeated_tail.is_empty() {
            return Err(Error::InvalidGenerator("repeated tail must be non-empty".into()));
        }
        if directive.iter().chain(&repeated_tail).any(|&d| d == 0) {
            return Err(Error::InvalidGenerator("partial quotients must be at least 1".into()));
        }
        Ok(Generator::SturmianCf { directive, repeated_tail })
    }

    /// Smallest alphabet size the generator needs.
    pub(crate) fn min_alphabet(&self) -> usize {
        match self {
            Generator::EventuallyPeriodic { prefix, cycle } => {
                prefix.symbols().iter().chain(cycle.symbols()).map(|&s| s as usize + 1).max().unwrap_or(1)
            }
            Generator::Morphic { rules, .. } => rules.len(),
            Generator::SturmianCf { .. } => 2,
        }
    }

    pub fn is_eventually_periodic(&self) -> bool {
        matches!(self, Generator::EventuallyPeriodic { .. })
    }

    /// Horizon from which every length-`n` factor has provably been seen, if any.
    pub(crate) fn exact_horizon(&self, n: usize) -> Option<usize> {
        match self {
            Generator::EventuallyPeriodic { prefix, cycle } => Some(prefix.len() + cycle.len() + n),
            _ => None,
        }
    }

    /// The first `len` symbols of the generated word.
    pub fn expand_prefix(&self, len: usize) -> Word {
        match self {
            Generator::EventuallyPeriodic { prefix, cycle } => {
                let mut out: Vec<Symbol> = prefix.symbols().iter().copied().take(len).collect();
                out.extend(cycle.symbols().iter().cycle().take(len - out.len()));
                Word::from_symbols(out)
            }
            Generator::Morphic { rules, seed, coding } => {
                let mut buf: Vec<Symbol> = rules[*seed as usize].symbols().to_vec();
                // u = φ(u): keep appending φ(u_i); buf stays ahead of i since |φ(seed)| ≥ 2
                let mut i = 1;
                while buf.len() < len {
                    let a = buf[i];
                    buf.extend_from_slice(rules[a as usize].symbols());
                    i += 1;
                }
                buf.truncate(len);
                if let Some(c) = coding {
                    for s in &mut buf {
                        *s = c[*s as usize];
                    }
                }
                Word::from_symbols(buf)
            }
            Generator::SturmianCf { directive, repeated_tail } => {
                let mut quotients = directive.iter().chain(repeated_tail.iter().cycle());
                let mut prev: Vec<Symbol> = vec![1];
                let mut cur: Vec<Symbol> = vec![0];
                while cur.len() < len {
                    let d = *quotients.next().expect("tail is infinite") as usize;
                    let mut next = Vec::with_capacity(cur.len() * d + prev.len());
                    for _ in 0..d {
                        next.extend_from_slice(&cur);
                    }
                    next.extend_from_slice(&prev);
                    prev = std::mem::replace(&mut cur, next);
                }
                cur.truncate(len);
                Word::from_symbols(cur)
            }
        }
    }
}
