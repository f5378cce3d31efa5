use serde_json::{json, Value};

use super::profile;
use crate::automata::{decide_bounded, factor_dfa, GapCertificate, Triple, UnboundedWitness};
use crate::error::Result;
use crate::langspec::LanguageSource;
use crate::words::Alphabet;

/// What backs a boundedness claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundCertificate {
    /// The factor language is contained in `∪ x y^n z`.
    Triples(Vec<Triple>),
    /// An extendable language with `p(m + 1) = p(m)` on exact data: no special
    /// factor of length `m`, hence none longer, hence `p` constant from `m`.
    Plateau { m: usize },
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapVerdict {
    BoundedProven {
        bound: u64,
        certificate: BoundCertificate,
    },
    LinearLowerBoundProven {
        witness: UnboundedWitness,
    },
    /// `p(n) > n` was observed for every `n` up to the horizon.
    ConsistentWithLinear {
        checked_up_to: usize,
    },
    UndeterminedAtHorizon {
        reason: String,
    },
}

impl GapVerdict {
    pub fn is_bounded_proven(&self) -> bool {
        matches!(self, GapVerdict::BoundedProven { .. })
    }

    pub fn is_linear_proven(&self) -> bool {
        matches!(self, GapVerdict::LinearLowerBoundProven { .. })
    }

    pub fn bound(&self) -> Option<u64> {
        match self {
            GapVerdict::BoundedProven { bound, .. } => Some(*bound),
            _ => None,
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        match self {
            GapVerdict::BoundedProven { bound, certificate: BoundCertificate::Triples(triples) } => {
                GapCertificate::Bounded { triples: triples.clone(), bound: *bound }.to_json(alphabet)
            }
            GapVerdict::BoundedProven { bound, certificate: BoundCertificate::Plateau { m } } => json!({
                "verdict": "bounded",
                "bound": bound,
                "plateau": m,
            }),
            GapVerdict::LinearLowerBoundProven { witness } => json!({
                "verdict": "unbounded",
                "witness": witness.to_json(alphabet),
            }),
            GapVerdict::ConsistentWithLinear { checked_up_to } => json!({
                "verdict": "consistent_with_linear",
                "checked_up_to": checked_up_to,
            }),
            GapVerdict::UndeterminedAtHorizon { reason } => json!({
                "verdict": "undetermined",
                "reason": reason,
            }),
        }
    }
}

/// Places the source on one side of the gap.
///
/// Finite and regular sources get an exact decision with a certificate.
/// Languages of generated words are extendable, so an exact plateau proves
/// boundedness; otherwise the verdict only reports what the horizon shows.
pub fn classify(src: &LanguageSource, n_max: usize, horizon: Option<usize>) -> Result<GapVerdict> {
    let source = src.resolved();
    if matches!(source.as_ref(), LanguageSource::Finite { .. } | LanguageSource::Regular { .. }) {
        let nfa = source.to_regular().expect("finite and regular sources are regular");
        return Ok(match decide_bounded(&factor_dfa(&nfa)?)? {
            GapCertificate::Bounded { triples, bound } => {
                GapVerdict::BoundedProven { bound, certificate: BoundCertificate::Triples(triples) }
            }
            GapCertificate::Unbounded { witness } => GapVerdict::LinearLowerBoundProven { witness },
        });
    }

    let prof = profile(&source, n_max, horizon)?;
    let values = prof.values();
    for m in 0..n_max {
        if values[m + 1] == values[m] {
            if prof.is_exact(m) && prof.is_exact(m + 1) {
                return Ok(GapVerdict::BoundedProven {
                    bound: values[m],
                    certificate: BoundCertificate::Plateau { m },
                });
            }
            return Ok(GapVerdict::UndeterminedAtHorizon {
                reason: format!("plateau at n = {m} observed on horizon-limited data"),
            });
        }
    }
    // window counts never exceed the true counts
    if values.iter().enumerate().all(|(n, &p)| p > n as u64) {
        Ok(GapVerdict::ConsistentWithLinear { checked_up_to: n_max })
    } else {
        Ok(GapVerdict::UndeterminedAtHorizon { reason: format!("no plateau and p(n) > n fails within n <= {n_max}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::{Builtin, Generator};

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    #[test]
    fn u_is_linear() {
        assert!(classify(&Builtin::U.expand(), 10, None).unwrap().is_linear_proven());
    }

    #[test]
    fn akb_is_bounded_by_two() {
        let v = classify(&Builtin::Akb.expand(), 10, None).unwrap();
        assert_eq!(v.bound(), Some(2));
        let j = v.to_json(&ab());
        assert_eq!(j["verdict"], "bounded");
        assert_eq!(j["bound"], 2);
    }

    #[test]
    fn fibonacci_is_consistent_with_linear() {
        let v = classify(&Builtin::Fibonacci.expand(), 50, None).unwrap();
        assert_eq!(v, GapVerdict::ConsistentWithLinear { checked_up_to: 50 });
    }

    #[test]
    fn periodic_word_plateaus() {
        let src = LanguageSource::infinite(ab(), Generator::periodic(ab().word("ab").unwrap()).unwrap()).unwrap();
        let v = classify(&src, 10, None).unwrap();
        assert_eq!(v, GapVerdict::BoundedProven { bound: 2, certificate: BoundCertificate::Plateau { m: 1 } });
    }

    #[test]
    fn horizon_limited_plateau_is_not_proof() {
        let tm = Builtin::ThueMorse.expand();
        let v = classify(&tm, 20, Some(20)).unwrap();
        assert!(matches!(v, GapVerdict::UndeterminedAtHorizon { .. }), "{v:?}");
    }

    #[test]
    fn finite_sources_are_bounded() {
        let src = LanguageSource::finite(ab(), ["aab", "ba"].map(|s| ab().word(s).unwrap())).unwrap();
        let v = classify(&src, 5, None).unwrap();
        // p = 1, 2, 3, 1
        assert_eq!(v.bound(), Some(3));
        let empty = LanguageSource::finite(ab(), []).unwrap();
        assert_eq!(classify(&empty, 5, None).unwrap().bound(), Some(0));
    }
}
