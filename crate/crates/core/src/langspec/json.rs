//! The JSON language-spec file format.
//!
//! ```json
//! {"alphabet": ["a", "b"], "source": {"type": "morphic", "rules": {"a": "ab", "b": "a"}, "seed": "a"}}
//! ```
//!
//! Source types: `finite`, `regular`, `morphic`, `eventually_periodic`,
//! `sturmian_cf`, `bi_infinite` and `builtin`. The alphabet may be omitted
//! for builtins only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Builtin, Generator, LanguageSource};
use crate::automata::Nfa;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alphabet: Vec<String>,
    pub source: SourceSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SourceSpec {
    Finite {
        words: Vec<String>,
    },
    Regular {
        states: usize,
        start: Vec<usize>,
        finals: Vec<usize>,
        transitions: Vec<(usize, String, usize)>,
    },
    Morphic {
        rules: BTreeMap<String, String>,
        seed: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coding: Option<BTreeMap<String, String>>,
    },
    EventuallyPeriodic {
        prefix: String,
        cycle: String,
    },
    SturmianCf {
        directive: Vec<u32>,
        repeated_tail: Vec<u32>,
    },
    BiInfinite {
        left: Box<SourceSpec>,
        right: Box<SourceSpec>,
    },
    Builtin {
        name: String,
    },
}

/// Parses a spec file into a source.
pub fn parse(text: &str) -> Result<LanguageSource> {
    let file: SpecFile = serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
    file.to_source()
}

/// Serializes a source in the spec-file format.
pub fn to_string(src: &LanguageSource) -> String {
    serde_json::to_string(&SpecFile::from_source(src)).expect("spec files always serialize")
}

impl SpecFile {
    pub fn to_source(&self) -> Result<LanguageSource> {
        if let SourceSpec::Builtin { name } = &self.source {
            let b: Builtin = name.parse()?;
            if !self.alphabet.is_empty() && self.alphabet != alphabet_strings(&b.expand().alphabet()) {
                return Err(Error::Spec(format!("builtin {b} is defined over {{a,b}}")));
            }
            return Ok(LanguageSource::Builtin(b));
        }
        let alphabet = parse_alphabet(&self.alphabet)?;
        match &self.source {
            SourceSpec::Finite { words } => {
                let words = words.iter().map(|w| alphabet.word(w)).collect::<Result<Vec<_>>>()?;
                LanguageSource::finite(alphabet, words)
            }
            SourceSpec::Regular { states, start, finals, transitions } => {
                let transitions = transitions
                    .iter()
                    .map(|(p, a, q)| Ok((*p, alphabet.symbol(a)?, *q)))
                    .collect::<Result<Vec<_>>>()?;
                let automaton = Nfa::from_transitions(alphabet, *states, &transitions, start, finals)?;
                Ok(LanguageSource::Regular { automaton })
            }
            SourceSpec::BiInfinite { left, right } => {
                let left = generator(&alphabet, left)?;
                let right = generator(&alphabet, right)?;
                LanguageSource::bi_infinite(alphabet, left, right)
            }
            SourceSpec::Builtin { .. } => unreachable!("handled above"),
            g => {
                let g = generator(&alphabet, g)?;
                LanguageSource::infinite(alphabet, g)
            }
        }
    }

    pub fn from_source(src: &LanguageSource) -> Self {
        let alphabet = src.alphabet();
        let source = match src {
            LanguageSource::Builtin(b) => {
                return SpecFile { alphabet: Vec::new(), source: SourceSpec::Builtin { name: b.name().into() } }
            }
            LanguageSource::Finite { words, .. } => {
                SourceSpec::Finite { words: words.iter().map(|w| alphabet.render(w)).collect() }
            }
            LanguageSource::Regular { automaton } => SourceSpec::Regular {
                states: automaton.state_count(),
                start: automaton.starts().iter().copied().collect(),
                finals: automaton.finals().iter().copied().collect(),
                transitions: automaton.transitions().map(|(p, a, q)| (p, alphabet.char_of(a).to_string(), q)).collect(),
            },
            LanguageSource::Infinite { generator, .. } => generator_spec(&alphabet, generator),
            LanguageSource::BiInfinite { left, right, .. } => SourceSpec::BiInfinite {
                left: Box::new(generator_spec(&alphabet, left)),
                right: Box::new(generator_spec(&alphabet, right)),
            },
        };
        SpecFile { alphabet: alphabet_strings(&alphabet), source }
    }
}

fn alphabet_strings(alphabet: &Alphabet) -> Vec<String> {
    alphabet.chars().iter().map(|c| c.to_string()).collect()
}

fn parse_alphabet(symbols: &[String]) -> Result<Alphabet> {
    let chars = symbols
        .iter()
        .map(|s| {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::InvalidAlphabet(format!("{s:?} is not a single character"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Alphabet::new(chars)
}

fn symbol_map(alphabet: &Alphabet, map: &BTreeMap<String, String>, what: &str) -> Result<Vec<Word>> {
    for key in map.keys() {
        alphabet.symbol(key)?;
    }
    alphabet
        .symbols()
        .map(|a| {
            let key = alphabet.char_of(a).to_string();
            let image =
                map.get(&key).ok_or_else(|| Error::InvalidGenerator(format!("{what} has no image for {key:?}")))?;
            alphabet.word(image)
        })
        .collect()
}

fn generator(alphabet: &Alphabet, spec: &SourceSpec) -> Result<Generator> {
    match spec {
        SourceSpec::Morphic { rules, seed, coding } => {
            let rules = symbol_map(alphabet, rules, "morphism")?;
            let coding = match coding {
                Some(c) => Some(
                    symbol_map(alphabet, c, "coding")?
                        .into_iter()
                        .map(|w| match w.symbols() {
                            [s] => Ok(*s),
                            _ => Err(Error::InvalidGenerator("coding images must be single symbols".into())),
                        })
                        .collect::<Result<Vec<Symbol>>>()?,
                ),
                None => None,
            };
            Generator::morphic(alphabet, rules, alphabet.symbol(seed)?, coding)
        }
        SourceSpec::EventuallyPeriodic { prefix, cycle } => {
            Generator::eventually_periodic(alphabet.word(prefix)?, alphabet.word(cycle)?)
        }
        SourceSpec::SturmianCf { directive, repeated_tail } => {
            Generator::sturmian_cf(directive.clone(), repeated_tail.clone())
        }
        other => Err(Error::Spec(format!("{} is not a word generator", type_name(other)))),
    }
}

fn type_name(spec: &SourceSpec) -> &'static str {
    match spec {
        SourceSpec::Finite { .. } => "finite",
        SourceSpec::Regular { .. } => "regular",
        SourceSpec::Morphic { .. } => "morphic",
        SourceSpec::EventuallyPeriodic { .. } => "eventually_periodic",
        SourceSpec::SturmianCf { .. } => "sturmian_cf",
        SourceSpec::BiInfinite { .. } => "bi_infinite",
        SourceSpec::Builtin { .. } => "builtin",
    }
}

fn generator_spec(alphabet: &Alphabet, g: &Generator) -> SourceSpec {
    let map = |images: &mut dyn Iterator<Item = String>| -> BTreeMap<String, String> {
        alphabet.chars().iter().map(|c| c.to_string()).zip(images).collect()
    };
    match g {
        Generator::EventuallyPeriodic { prefix, cycle } => {
            SourceSpec::EventuallyPeriodic { prefix: alphabet.render(prefix), cycle: alphabet.render(cycle) }
        }
        Generator::Morphic { rules, seed, coding } => SourceSpec::Morphic {
            rules: map(&mut rules.iter().map(|w| alphabet.render(w))),
            seed: alphabet.char_of(*seed).to_string(),
            coding: coding.as_ref().map(|c| map(&mut c.iter().map(|&s| alphabet.char_of(s).to_string()))),
        },
        Generator::SturmianCf { directive, repeated_tail } => {
            SourceSpec::SturmianCf { directive: directive.clone(), repeated_tail: repeated_tail.clone() }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_every_type() {
        let cases = [
            r#"{"alphabet":["a","b"],"source":{"type":"finite","words":["ab","","ba"]}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"regular","states":2,"start":[0],"finals":[0,1],
                "transitions":[[0,"a",0],[0,"b",1],[1,"b",1]]}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"morphic","rules":{"a":"ab","b":"a"},"seed":"a"}}"#,
            r#"{"alphabet":["a","b","c"],"source":{"type":"morphic","rules":{"a":"ab","b":"c","c":"a"},"seed":"a",
                "coding":{"a":"a","b":"b","c":"b"}}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"eventually_periodic","prefix":"b","cycle":"a"}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"sturmian_cf","directive":[1,1],"repeated_tail":[1]}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"bi_infinite",
                "left":{"type":"eventually_periodic","prefix":"","cycle":"a"},
                "right":{"type":"eventually_periodic","prefix":"","cycle":"b"}}}"#,
            r#"{"source":{"type":"builtin","name":"U"}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"builtin","name":"akb"}}"#,
        ];
        let kinds =
            ["finite", "regular", "infinite", "infinite", "infinite", "infinite", "bi_infinite", "regular", "regular"];
        for (text, kind) in cases.iter().zip(kinds) {
            let src = parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
            assert_eq!(src.kind(), kind);
            assert_eq!(parse(&to_string(&src)).unwrap(), src);
        }
    }

    #[test]
    fn rejects_malformed() {
        for text in [
            "not json",
            r#"{"alphabet":["a","b"],"source":{"type":"finite","words":["abc"]}}"#,
            r#"{"alphabet":["ab"],"source":{"type":"finite","words":[]}}"#,
            r#"{"alphabet":["a","a"],"source":{"type":"finite","words":[]}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"regular","states":1,"start":[0],"finals":[1],"transitions":[]}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"morphic","rules":{"a":"ba","b":"a"},"seed":"a"}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"morphic","rules":{"a":"ab"},"seed":"a"}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"bi_infinite","left":{"type":"finite","words":[]},
                "right":{"type":"eventually_periodic","prefix":"","cycle":"b"}}}"#,
            r#"{"alphabet":["a","b"],"source":{"type":"eventually_periodic","prefix":"","cycle":""}}"#,
            r#"{"alphabet":["x"],"source":{"type":"builtin","name":"U"}}"#,
            r#"{"source":{"type":"builtin","name":"NOPE"}}"#,
            r#"{"source":{"type":"finite","words":[]}}"#,
            r#"{"alphabet":["a"],"source":{"type":"finite","words":[],"extra":1}}"#,
        ] {
            assert!(parse(text).is_err(), "{text}");
        }
    }

    fn arb_word(k: usize, max: usize) -> impl Strategy<Value = String> {
        proptest::collection::vec(0..k, 0..max).prop_map(|v| v.into_iter().map(|i| (b'a' + i as u8) as char).collect())
    }

    proptest! {
        #[test]
        fn finite_round_trip(words in proptest::collection::vec(arb_word(3, 6), 0..6)) {
            let alphabet = Alphabet::first_letters(3).unwrap();
            let src = LanguageSource::finite(alphabet.clone(), words.iter().map(|w| alphabet.word(w).unwrap())).unwrap();
            prop_assert_eq!(parse(&to_string(&src)).unwrap(), src);
        }

        #[test]
        fn regular_round_trip(states in 1usize..6, edges in proptest::collection::vec((0usize..6, 0u8..2, 0usize..6), 0..12)) {
            let alphabet = Alphabet::ab();
            let edges: Vec<_> = edges.into_iter().map(|(p, a, q)| (p % states, a, q % states)).collect();
            let nfa = Nfa::from_transitions(alphabet, states, &edges, &[0], &[states - 1]).unwrap();
            let src = LanguageSource::Regular { automaton: nfa };
            prop_assert_eq!(parse(&to_string(&src)).unwrap(), src);
        }

        #[test]
        fn periodic_round_trip(prefix in arb_word(2, 5), cycle in arb_word(2, 5)) {
            prop_assume!(!cycle.is_empty());
            let ab = Alphabet::ab();
            let g = Generator::eventually_periodic(ab.word(&prefix).unwrap(), ab.word(&cycle).unwrap()).unwrap();
            let src = LanguageSource::infinite(ab, g).unwrap();
            prop_assert_eq!(parse(&to_string(&src)).unwrap(), src);
        }
    }
}
