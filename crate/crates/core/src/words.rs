//! Words over a small explicit alphabet, and the factor primitives built on them.
//!
//! Words store symbol *indices* into an [`Alphabet`], so the alphabet order is
//! the symbol order. Rendering back to text always goes through the alphabet.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its alphabet.
pub type Symbol = u8;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 64;

/// Token used for the empty word in human-facing output.
pub const EPSILON: &str = "ε";

/// An ordered, explicitly declared set of single-character symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() || symbols.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "size must be between 1 and {MAX_ALPHABET}, got {}",
                symbols.len()
            )));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_control() || c.is_whitespace() || c.to_string() == EPSILON {
                return Err(Error::InvalidAlphabet(format!("symbol {c:?} is not printable")));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Parses an alphabet written as a run of characters, e.g. `"ab"`.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    /// The binary alphabet `{a, b}` used by the builtin catalog.
    pub fn ab() -> Self {
        Alphabet { symbols: vec!['a', 'b'] }
    }

    /// The first `size` lowercase letters.
    pub fn first_letters(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(Error::InvalidAlphabet(format!("cannot build {size} letters")));
        }
        Self::new((b'a'..b'a' + size as u8).map(char::from))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.symbols.len()).map(|i| i as Symbol)
    }

    pub fn index_of(&self, c: char) -> Option<Symbol> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as Symbol)
    }

    pub fn char_of(&self, s: Symbol) -> char {
        self.symbols[s as usize]
    }

    pub fn check(&self, s: Symbol) -> Result<()> {
        if (s as usize) < self.symbols.len() {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange { index: s as usize, size: self.symbols.len() })
        }
    }

    /// Parses a word; every character must belong to the alphabet.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.chars().map(|c| self.index_of(c).ok_or(Error::UnknownSymbol(c))).collect::<Result<Vec<_>>>().map(Word)
    }

    /// Parses a single-symbol string.
    pub fn symbol(&self, text: &str) -> Result<Symbol> {
        let mut it = text.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => self.index_of(c).ok_or(Error::UnknownSymbol(c)),
            _ => Err(Error::Spec(format!("expected a single symbol, got {text:?}"))),
        }
    }

    /// Machine rendering: the empty word is `""`.
    pub fn render(&self, w: &Word) -> String {
        w.0.iter().map(|&s| self.char_of(s)).collect()
    }

    /// Human rendering: the empty word is `ε`.
    pub fn render_human(&self, w: &Word) -> String {
        if w.is_empty() {
            EPSILON.to_string()
        } else {
            self.render(w)
        }
    }

    /// All words of length `n`, in lexicographic order.
    pub fn all_words(&self, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out.iter().flat_map(|w| self.symbols().map(move |a| w.appended(a))).collect();
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A finite word. Ordered length-first, then lexicographically by symbol index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn appended(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(a);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The block `[start, start + len)`.
    pub fn window(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.window(0, len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.window(self.0.len() - len, len)
    }

    /// Rotation starting at offset `k`: `w[k..] w[..k]`.
    pub fn rotated(&self, k: usize) -> Word {
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Smallest `q ≥ 1` with `w[i] = w[i + q]` wherever both are defined.
    pub fn least_period(&self) -> usize {
        let n = self.0.len();
        (1..=n.max(1)).find(|&q| (0..n.saturating_sub(q)).all(|i| self.0[i] == self.0[i + q])).unwrap_or(1)
    }

    /// Length of the primitive root, i.e. the least `d | |w|` with `w = r^(|w|/d)`.
    pub fn primitive_root_len(&self) -> usize {
        let n = self.0.len();
        (1..=n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| self.0[i] == self.0[i - d])).unwrap_or(0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

/// The set `F_n` of distinct length-`n` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    n: usize,
    members: BTreeSet<Word>,
}

impl FactorSet {
    pub fn new(n: usize) -> Self {
        FactorSet { n, members: BTreeSet::new() }
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(n: usize, words: I) -> Self {
        let mut set = FactorSet::new(n);
        set.extend(words);
        set
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// Panics if `w` does not have length `n`.
    pub fn insert(&mut self, w: Word) -> bool {
        assert_eq!(w.len(), self.n, "factor length mismatch");
        self.members.insert(w)
    }

    pub fn extend<I: IntoIterator<Item = Word>>(&mut self, words: I) {
        for w in words {
            self.insert(w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn into_members(self) -> BTreeSet<Word> {
        self.members
    }

    pub fn is_subset(&self, other: &FactorSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        self.members.iter().map(|w| alphabet.render(w)).collect()
    }
}

impl<'a> IntoIterator for &'a FactorSet {
    type Item = &'a Word;
    type IntoIter = std::collections::btree_set::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// The parent map: drops the last symbol.
pub fn rho_parent(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::RhoOnEmptyWord);
    }
    Ok(w.prefix(w.len() - 1))
}

pub fn is_prefix(x: &Word, y: &Word) -> bool {
    y.symbols().starts_with(x.symbols())
}

pub fn is_suffix(x: &Word, y: &Word) -> bool {
    y.symbols().ends_with(x.symbols())
}

/// True iff `x` occurs as a contiguous block of `y`.
pub fn is_factor(x: &Word, y: &Word) -> bool {
    x.is_empty() || y.symbols().windows(x.len()).any(|win| win == x.symbols())
}

/// All distinct length-`n` blocks of `y`.
pub fn factors_of_word(y: &Word, n: usize) -> FactorSet {
    let mut set = FactorSet::new(n);
    add_factors_of_slice(&mut set, y.symbols());
    set
}

pub(crate) fn add_factors_of_slice(set: &mut FactorSet, y: &[Symbol]) {
    let n = set.n;
    if n == 0 {
        set.members.insert(Word::empty());
    } else if n <= y.len() {
        for win in y.windows(n) {
            if !set.members.contains(win) {
                set.members.insert(Word(win.to_vec()));
            }
        }
    }
}

impl std::borrow::Borrow<[Symbol]> for Word {
    fn borrow(&self) -> &[Symbol] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Alphabet::ab().word(s).unwrap()
    }

    #[test]
    fn rho_parent_examples() {
        assert_eq!(rho_parent(&w("ab")).unwrap(), w("a"));
        assert_eq!(rho_parent(&w("a")).unwrap(), Word::empty());
        assert_eq!(rho_parent(&w("baab")).unwrap(), w("baa"));
        assert_eq!(rho_parent(&Word::empty()), Err(Error::RhoOnEmptyWord));
        assert_eq!(Error::RhoOnEmptyWord.to_string(), "rho undefined on empty word");
    }

    #[test]
    fn is_factor_examples() {
        let abc = Alphabet::from_chars("abc").unwrap();
        assert!(is_factor(&Word::empty(), &abc.word("abc").unwrap()));
        assert!(is_factor(&w("aab"), &w("baabb")));
        assert!(!is_factor(&w("ba"), &w("aab")));
    }

    #[test]
    fn factors_of_word_examples() {
        let ab = Alphabet::ab();
        assert_eq!(factors_of_word(&w("aabb"), 2).render(&ab), vec!["aa", "ab", "bb"]);
        let f0 = factors_of_word(&w("abba"), 0);
        assert_eq!(f0.len(), 1);
        assert!(f0.contains(&Word::empty()));
        assert!(factors_of_word(&w("ab"), 3).is_empty());
    }

    #[test]
    fn prefix_suffix_examples() {
        assert!(is_prefix(&w("a"), &w("ab")));
        assert!(is_suffix(&w("b"), &w("ab")));
        assert!(!is_prefix(&w("ab"), &w("a")));
        assert!(!is_suffix(&w("ab"), &w("a")));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::from_chars("").is_err());
        assert!(Alphabet::from_chars("aa").is_err());
        assert!(Alphabet::from_chars("a b").is_err());
        assert!(Alphabet::new((0..65).map(|i| char::from_u32(0x100 + i).unwrap())).is_err());
        let ab = Alphabet::ab();
        assert_eq!(ab.word("abc"), Err(Error::UnknownSymbol('c')));
        assert_eq!(ab.render_human(&Word::empty()), "ε");
        assert_eq!(ab.render(&Word::empty()), "");
    }

    #[test]
    fn length_lexicographic_order() {
        let mut v = vec![w("b"), w("aa"), w("a"), w(""), w("ab")];
        v.sort();
        assert_eq!(v, vec![w(""), w("a"), w("b"), w("aa"), w("ab")]);
    }

    #[test]
    fn periods() {
        assert_eq!(w("abab").primitive_root_len(), 2);
        assert_eq!(w("aab").primitive_root_len(), 3);
        assert_eq!(w("abaab").least_period(), 3);
        assert_eq!(w("aaaa").least_period(), 1);
    }

    fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..2, 0..max).prop_map(Word::from_symbols)
    }

    proptest! {
        #[test]
        fn rho_is_a_prefix(v in word_strategy(12)) {
            prop_assume!(!v.is_empty());
            let r = rho_parent(&v).unwrap();
            prop_assert!(is_prefix(&r, &v));
            prop_assert_eq!(r.len(), v.len() - 1);
        }

        #[test]
        fn factor_test_matches_factor_set(x in word_strategy(5), y in word_strategy(12)) {
            prop_assert_eq!(is_factor(&x, &y), factors_of_word(&y, x.len()).contains(&x));
        }

        #[test]
        fn factor_count_bound(y in word_strategy(14), n in 0usize..8) {
            prop_assume!(n <= y.len());
            let bound = (2usize.pow(n as u32)).min(y.len() - n + 1);
            prop_assert!(factors_of_word(&y, n).len() <= bound);
        }

        #[test]
        fn factor_transitive(x in word_strategy(3), y in word_strategy(6), z in word_strategy(12)) {
            if is_factor(&x, &y) && is_factor(&y, &z) {
                prop_assert!(is_factor(&x, &z));
            }
        }
    }
}
