//! Subword complexity of languages and infinite words.
//!
//! The complexity function of a language counts its distinct factors of each
//! length. It is either bounded or greater than `n` at every `n`; for regular
//! languages this crate decides which, and backs the answer with a
//! certificate: a finite set of triples `(x, y, z)` whose words `x y^k z`
//! cover every factor, or a pair of cycles that forces linear growth.
//!
//! ```
//! use subword_complexity::complexity::{classify, profile};
//! use subword_complexity::langspec::{Builtin, LanguageSource};
//!
//! let akb = LanguageSource::Builtin(Builtin::Akb);
//! assert_eq!(profile(&akb, 5, None).unwrap().values(), &[1, 2, 2, 2, 2, 2]);
//! assert_eq!(classify(&akb, 12, None).unwrap().bound(), Some(2));
//! ```
//!
//! Modules, bottom up:
//!
//! - [`words`]: alphabets, words, factor sets and the parent map.
//! - [`langspec`]: language sources (finite, regular, morphic, Sturmian,
//!   eventually periodic, bi-infinite, builtins) and their JSON form.
//! - [`automata`]: NFAs, DFAs, factor closures, the gap decision and cover checks.
//! - [`complexity`]: profiles, special factors, verdicts and the numeric bounds.
//! - [`verifier`]: brute-force oracles and the seeded check suites.
//! - [`cli`]: the `subcx` command line.

pub mod automata;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod langspec;
pub mod verifier;
pub mod words;
