//! Complexity profiles `p(0..=N)`, special factors, and the gap verdict.

mod bounds;
mod verdict;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

pub use bounds::{
    bb_bound_check, convolution_bound_check, is_fiatc, least_period_biinfinite, phi, ps_check_values,
    special_inequality_check, BbViolation, ConvolutionReport, ConvolutionViolation, FiatcResult, PsReport, PsViolation,
};
pub use verdict::{classify, BoundCertificate, GapVerdict};

use crate::automata::{count_words_per_length, factor_dfa, Dfa};
use crate::error::{Error, Result};
use crate::langspec::LanguageSource;
use crate::words::{rho_parent, FactorSet, Word};

/// The values `p(0), ..., p(N)` with a per-entry exactness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    values: Vec<u64>,
    exact: Vec<bool>,
    alphabet_size: usize,
}

impl ComplexityProfile {
    pub fn new(values: Vec<u64>, exact: Vec<bool>, alphabet_size: usize) -> Self {
        assert_eq!(values.len(), exact.len(), "one flag per entry");
        assert!(!values.is_empty(), "profile covers at least n = 0");
        ComplexityProfile { values, exact, alphabet_size }
    }

    /// A profile whose entries are all exact.
    pub fn exact(values: Vec<u64>, alphabet_size: usize) -> Self {
        let exact = vec![true; values.len()];
        Self::new(values, exact, alphabet_size)
    }

    /// Largest `n` covered.
    pub fn horizon(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, n: usize) -> u64 {
        self.values[n]
    }

    pub fn is_exact(&self, n: usize) -> bool {
        self.exact[n]
    }

    pub fn all_exact(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn sup(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Truncates to `0..=n`.
    pub fn truncated(&self, n: usize) -> Self {
        let k = (n + 1).min(self.values.len());
        Self::new(self.values[..k].to_vec(), self.exact[..k].to_vec(), self.alphabet_size)
    }
}

/// Right-special factors of one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFactorReport {
    pub n: usize,
    pub specials: FactorSet,
    /// False when computed from a finite window; factors at the window's end
    /// whose extensions were not observed are then reported as non-special.
    pub exact: bool,
}

impl SpecialFactorReport {
    pub fn count(&self) -> usize {
        self.specials.len()
    }
}

fn to_u64(counts: Vec<num_bigint::BigUint>) -> Result<Vec<u64>> {
    counts.into_iter().enumerate().map(|(n, c)| c.to_u64().ok_or(Error::CountOverflow(n))).collect()
}

/// `p(n)` for `n = 0..=n_max`.
///
/// Regular and finite sources go through the minimal DFA of their factor
/// language; generated words are read off a window of `horizon` symbols
/// (default [`crate::langspec::default_horizon`] per `n`).
pub fn profile(src: &LanguageSource, n_max: usize, horizon: Option<usize>) -> Result<ComplexityProfile> {
    let alphabet_size = src.alphabet().size();
    let source = src.resolved();
    match source.as_ref() {
        LanguageSource::Regular { automaton } => {
            let dfa = factor_dfa(automaton)?;
            Ok(ComplexityProfile::exact(to_u64(count_words_per_length(&dfa, n_max))?, alphabet_size))
        }
        _ => {
            let mut values = Vec::with_capacity(n_max + 1);
            let mut exact = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let f = source.enumerate_factors(n, horizon)?;
                values.push(f.set.len() as u64);
                exact.push(f.exact);
            }
            Ok(ComplexityProfile::new(values, exact, alphabet_size))
        }
    }
}

/// Groups `F_{n+1}` under the parent map; words with two or more preimages are special.
fn specials_from_extensions(n: usize, extensions: &FactorSet) -> FactorSet {
    let mut children: BTreeMap<Word, usize> = BTreeMap::new();
    for w in extensions {
        *children.entry(rho_parent(w).expect("non-empty")).or_default() += 1;
    }
    FactorSet::from_words(n, children.into_iter().filter(|&(_, c)| c >= 2).map(|(w, _)| w))
}

pub fn special_factors(src: &LanguageSource, n: usize, horizon: Option<usize>) -> Result<SpecialFactorReport> {
    let ext = src.enumerate_factors(n + 1, horizon)?;
    Ok(SpecialFactorReport { n, specials: specials_from_extensions(n, &ext.set), exact: ext.exact })
}

/// Number of special factors `s(n)` for `n = 0..=n_max`, with exactness flags.
///
/// For regular sources this counts paths into branching states of the
/// factor DFA, without listing the factors.
pub fn special_counts(src: &LanguageSource, n_max: usize, horizon: Option<usize>) -> Result<(Vec<u64>, Vec<bool>)> {
    let source = src.resolved();
    match source.as_ref() {
        LanguageSource::Regular { automaton } => {
            let dfa = factor_dfa(automaton)?;
            Ok((branching_counts(&dfa, n_max)?, vec![true; n_max + 1]))
        }
        _ => {
            let mut counts = Vec::with_capacity(n_max + 1);
            let mut exact = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let r = special_factors(&source, n, horizon)?;
                counts.push(r.count() as u64);
                exact.push(r.exact);
            }
            Ok((counts, exact))
        }
    }
}

/// In the trim DFA of a factor-closed language, `w` is special iff it leads to a
/// state with at least two outgoing transitions.
fn branching_counts(factor_dfa: &Dfa, n_max: usize) -> Result<Vec<u64>> {
    let branching: Vec<bool> = (0..factor_dfa.state_count()).map(|q| factor_dfa.out_degree(q) >= 2).collect();
    to_u64(factor_dfa.count_paths(n_max, &branching))
}
