//! The verification harness: every statement of the theory, checked against
//! builtins, seeded random regular languages and brute-force oracles.
//!
//! Each check yields a [`CheckReport`]. Suites run their checks in parallel
//! and return reports in a fixed order, so a seed determines the report
//! stream byte for byte.

mod checks;
pub mod oracle;
mod suites;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

pub use checks::{
    check_aperiodic, check_claims_chain, check_claims_with, check_convolution, check_cover_negative_control,
    check_eventually_periodic, check_gap_theorem, check_growth_bound, check_pair_decomposition,
    check_pair_negative_control, check_periodic_biinfinite, check_special_inequalities, check_triple_cover,
    finitely_many_specials, gap_crosscheck, pair_decomposition, ConvolutionInstance, PairDecomposition,
};
pub use suites::{run_suite, Suite, SuiteConfig};

use crate::automata::Nfa;
use crate::error::{Error, Result};
use crate::langspec::{Builtin, LanguageSource};
use crate::words::Alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Undetermined,
}

/// One check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub outcome: Outcome,
    /// Certificate or counterexample.
    pub details: Value,
}

impl CheckReport {
    pub fn new(check: &str, instance: &str, outcome: Outcome, details: Value) -> Self {
        CheckReport { check: check.into(), instance: instance.into(), outcome, details }
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// A named language to run checks on.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub source: LanguageSource,
}

impl Instance {
    pub fn new(name: impl Into<String>, source: LanguageSource) -> Self {
        Instance { name: name.into(), source }
    }

    pub fn builtin(b: Builtin) -> Self {
        Instance::new(format!("builtin {}", b.name()), LanguageSource::Builtin(b))
    }
}

/// Parameters of a random automaton. The automaton is a pure function of these.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomRegularSpec {
    pub seed: u64,
    pub state_count: usize,
    pub alphabet_size: usize,
    /// Probability of each possible transition `(p, a, q)`.
    pub transition_density: f64,
    /// Probability that a state is final.
    pub final_density: f64,
}

pub const MAX_RANDOM_STATES: usize = 8;
pub const MAX_RANDOM_ALPHABET: usize = 3;

impl RandomRegularSpec {
    pub fn new(
        seed: u64,
        state_count: usize,
        alphabet_size: usize,
        transition_density: f64,
        final_density: f64,
    ) -> Result<Self> {
        if !(1..=MAX_RANDOM_STATES).contains(&state_count) {
            return Err(Error::Spec(format!("state count must be in 1..={MAX_RANDOM_STATES}")));
        }
        if !(1..=MAX_RANDOM_ALPHABET).contains(&alphabet_size) {
            return Err(Error::Spec(format!("alphabet size must be in 1..={MAX_RANDOM_ALPHABET}")));
        }
        if !(0.0..=1.0).contains(&transition_density) {
            return Err(Error::Spec("transition density must lie in [0, 1]".into()));
        }
        if !(final_density > 0.0 && final_density <= 1.0) {
            return Err(Error::Spec("final density must lie in (0, 1]".into()));
        }
        Ok(RandomRegularSpec { seed, state_count, alphabet_size, transition_density, final_density })
    }

    /// Draws parameters biased towards sparse automata, so that both sides of
    /// the gap show up in a batch.
    pub fn sample<R: Rng>(rng: &mut R) -> Self {
        let seed = rng.gen();
        let state_count = rng.gen_range(1..=MAX_RANDOM_STATES);
        let alphabet_size = if rng.gen_bool(0.1) { 1 } else { rng.gen_range(2..=MAX_RANDOM_ALPHABET) };
        let out_degree: f64 = rng.gen_range(1.0..2.4);
        let transition_density = (out_degree / (state_count * alphabet_size) as f64).min(1.0);
        let final_density = rng.gen_range(0.3..0.9);
        RandomRegularSpec { seed, state_count, alphabet_size, transition_density, final_density }
    }

    /// `count` specs drawn from a generator seeded with `seed`.
    pub fn batch(seed: u64, count: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| Self::sample(&mut rng)).collect()
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::first_letters(self.alphabet_size).expect("at most three letters")
    }

    /// The automaton: start state 0, each transition and final flag drawn independently.
    pub fn automaton(&self) -> Nfa {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let n = self.state_count;
        let mut m = Nfa::new(self.alphabet(), n);
        m.add_start(0).expect("state 0 exists");
        for p in 0..n {
            for a in 0..self.alphabet_size {
                for q in 0..n {
                    if rng.gen_bool(self.transition_density) {
                        m.add_transition(p, a as u8, q).expect("in range");
                    }
                }
            }
        }
        for q in 0..n {
            if rng.gen_bool(self.final_density) {
                m.add_final(q).expect("in range");
            }
        }
        m
    }

    pub fn describe(&self) -> String {
        format!(
            "random seed={:#018x} states={} alphabet={} density={:.3} finals={:.3}",
            self.seed, self.state_count, self.alphabet_size, self.transition_density, self.final_density
        )
    }

    pub fn instance(&self) -> Instance {
        Instance::new(self.describe(), LanguageSource::Regular { automaton: self.automaton() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_automaton() {
        let a = RandomRegularSpec::batch(7, 20);
        let b = RandomRegularSpec::batch(7, 20);
        assert_eq!(a, b);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.automaton(), y.automaton());
        }
        assert_ne!(RandomRegularSpec::batch(8, 1), a[..1]);
    }

    #[test]
    fn spec_bounds_are_enforced() {
        assert!(RandomRegularSpec::new(0, 9, 2, 0.5, 0.5).is_err());
        assert!(RandomRegularSpec::new(0, 3, 4, 0.5, 0.5).is_err());
        assert!(RandomRegularSpec::new(0, 3, 2, 1.5, 0.5).is_err());
        assert!(RandomRegularSpec::new(0, 3, 2, 0.5, 0.0).is_err());
        let s = RandomRegularSpec::new(0xDEADBEEF, 3, 2, 0.5, 0.5).unwrap();
        assert_eq!(s.automaton().state_count(), 3);
    }

    #[test]
    fn report_lines_are_ordered_json() {
        let r = CheckReport::new("gap", "builtin U", Outcome::Pass, serde_json::json!({"n": 1}));
        assert_eq!(r.to_json_line(), r#"{"check":"gap","instance":"builtin U","outcome":"pass","details":{"n":1}}"#);
    }
}
