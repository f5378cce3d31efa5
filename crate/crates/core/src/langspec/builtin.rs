use std::fmt;
use std::str::FromStr;

use super::{Generator, LanguageSource};
use crate::automata::Nfa;
use crate::error::{Error, Result};
use crate::words::Alphabet;

/// Named sources over `{a, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    U,
    Aaabbb,
    Baab,
    Mix,
    Akb,
    Fibonacci,
    ThueMorse,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::U,
        Builtin::Aaabbb,
        Builtin::Baab,
        Builtin::Mix,
        Builtin::Akb,
        Builtin::Fibonacci,
        Builtin::ThueMorse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::U => "U",
            Builtin::Aaabbb => "AAABBB",
            Builtin::Baab => "BAAB",
            Builtin::Mix => "MIX",
            Builtin::Akb => "AKB",
            Builtin::Fibonacci => "FIBONACCI",
            Builtin::ThueMorse => "THUEMORSE",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Builtin::U => "regular a*b*; p(n) = n+1",
            Builtin::Aaabbb => "bi-infinite ...aaabbb...; its language is a*b*, p(n) = n+1",
            Builtin::Baab => {
                "regular b(aa)*b; p(n) = 3 for odd n >= 3, 4 for even n >= 2, \
                 and p(1) = 2 because ba^0 and a^0b coincide"
            }
            Builtin::Mix => {
                "regular a*b* | a(bb)*a | b(aa)*b; p(1) = 2, p(2) = 4, \
                 p(n) = n+3 for odd n >= 3, n+5 for even n >= 4"
            }
            Builtin::Akb => "regular a*b; bounded p(n) = 2 with special factors a^n for every n",
            Builtin::Fibonacci => "Fibonacci word, fixed point of a->ab, b->a; Sturmian, p(n) = n+1",
            Builtin::ThueMorse => "Thue-Morse word, fixed point of a->ab, b->ba",
        }
    }

    pub fn expand(self) -> LanguageSource {
        let ab = Alphabet::ab();
        let w = |s: &str| ab.word(s).expect("builtin words are over {a,b}");
        let regular =
            |states, transitions: &[(usize, u8, usize)], starts: &[usize], finals: &[usize]| LanguageSource::Regular {
                automaton: Nfa::from_transitions(ab.clone(), states, transitions, starts, finals)
                    .expect("builtin automaton is well formed"),
            };
        let (a, b) = (0u8, 1u8);
        match self {
            Builtin::U => regular(2, &[(0, a, 0), (0, b, 1), (1, b, 1)], &[0], &[0, 1]),
            Builtin::Aaabbb => LanguageSource::BiInfinite {
                alphabet: ab.clone(),
                left: Generator::periodic(w("a")).expect("non-empty cycle"),
                right: Generator::periodic(w("b")).expect("non-empty cycle"),
            },
            Builtin::Baab => regular(4, &[(0, b, 1), (1, a, 2), (2, a, 1), (1, b, 3)], &[0], &[3]),
            Builtin::Mix => regular(
                10,
                &[
                    // a*b*
                    (0, a, 0),
                    (0, b, 1),
                    (1, b, 1),
                    // a(bb)*a
                    (2, a, 3),
                    (3, b, 4),
                    (4, b, 3),
                    (3, a, 5),
                    // b(aa)*b
                    (6, b, 7),
                    (7, a, 8),
                    (8, a, 7),
                    (7, b, 9),
                ],
                &[0, 2, 6],
                &[0, 1, 5, 9],
            ),
            Builtin::Akb => regular(2, &[(0, a, 0), (0, b, 1)], &[0], &[1]),
            Builtin::Fibonacci => LanguageSource::Infinite {
                alphabet: ab.clone(),
                generator: Generator::morphic(&ab, vec![w("ab"), w("a")], a, None).expect("prolongable"),
            },
            Builtin::ThueMorse => LanguageSource::Infinite {
                alphabet: ab.clone(),
                generator: Generator::morphic(&ab, vec![w("ab"), w("ba")], a, None).expect("prolongable"),
            },
        }
    }

    /// Names and one-line descriptions, in catalog order.
    pub fn catalog() -> Vec<(&'static str, &'static str)> {
        Self::ALL.iter().map(|b| (b.name(), b.description())).collect()
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}
