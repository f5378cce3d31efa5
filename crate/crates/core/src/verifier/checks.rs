use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::oracle;
use super::{CheckReport, Instance, Outcome};
use crate::automata::scc::tarjan;
use crate::automata::{
    cover_nfa, decide_bounded, determinize, factor_closure, factor_dfa, minimize, shift_finals, stabilize_lprime,
    verify_triple_cover, CoverMode, CoverOutcome, Dfa, GapCertificate, LPrime, Nfa, Triple,
};
use crate::complexity::{
    bb_bound_check, classify, convolution_bound_check, is_fiatc, least_period_biinfinite, profile,
    special_inequality_check, ComplexityProfile, ConvolutionViolation, GapVerdict, PsReport, PsViolation,
};
use crate::error::{Error, Result};
use crate::langspec::{default_horizon, Generator, LanguageSource};
use crate::words::{Alphabet, Word};

fn report(check: &str, inst: &str, outcome: Outcome, details: Value) -> CheckReport {
    CheckReport::new(check, inst, outcome, details)
}

fn undetermined(check: &str, inst: &str, e: &Error) -> CheckReport {
    report(check, inst, Outcome::Undetermined, json!({ "reason": e.to_string() }))
}

/// The automaton of a finite or regular source.
fn regular_nfa(src: &LanguageSource) -> Option<Nfa> {
    let resolved = src.resolved();
    match resolved.as_ref() {
        LanguageSource::Finite { .. } | LanguageSource::Regular { .. } => resolved.to_regular(),
        _ => None,
    }
}

/// Checks a verdict against true (or lower-bound) factor counts; returns a counterexample.
pub fn gap_crosscheck(verdict: &GapVerdict, counts: &[u64]) -> Option<Value> {
    match verdict {
        GapVerdict::BoundedProven { bound, .. } => counts
            .iter()
            .enumerate()
            .find(|&(_, &p)| p > *bound)
            .map(|(n, &p)| json!({ "n": n, "p": p, "bound": bound })),
        GapVerdict::LinearLowerBoundProven { .. } | GapVerdict::ConsistentWithLinear { .. } => counts
            .iter()
            .enumerate()
            .find(|&(n, &p)| p <= n as u64)
            .map(|(n, &p)| json!({ "n": n, "p": p, "required": n + 1 })),
        GapVerdict::UndeterminedAtHorizon { .. } => None,
    }
}

/// Either bounded or `p(n) > n` for all `n`, cross-checked against the oracle up to `n_max`.
pub fn check_gap_theorem(inst: &Instance, n_max: usize) -> CheckReport {
    const CHECK: &str = "gap";
    let alphabet = inst.source.alphabet();
    let verdict = match classify(&inst.source, n_max, None) {
        Ok(v) => v,
        Err(e) => return undetermined(CHECK, &inst.name, &e),
    };
    let vjson = verdict.to_json(&alphabet);
    match regular_nfa(&inst.source) {
        Some(nfa) => {
            let counts = oracle::factor_counts(&nfa, n_max);
            if !(verdict.is_bounded_proven() || verdict.is_linear_proven()) {
                return report(CHECK, &inst.name, Outcome::Fail, json!({ "verdict": vjson, "reason": "undecided" }));
            }
            if let Some(cex) = gap_crosscheck(&verdict, &counts) {
                return report(CHECK, &inst.name, Outcome::Fail, json!({ "verdict": vjson, "counterexample": cex }));
            }
            if let GapVerdict::LinearLowerBoundProven { witness } = &verdict {
                if let Some(w) = witness.sample_words(2).into_iter().find(|w| !oracle::is_factor_of(&nfa, w)) {
                    return report(
                        CHECK,
                        &inst.name,
                        Outcome::Fail,
                        json!({ "verdict": vjson, "witness_word_not_a_factor": alphabet.render(&w) }),
                    );
                }
            }
            report(CHECK, &inst.name, Outcome::Pass, json!({ "verdict": vjson, "oracle_counts": counts }))
        }
        None => {
            let window = inst.source.window(default_horizon(n_max)).expect("word source");
            let counts = oracle::oracle_counts(&[window], n_max);
            if let Some(cex) = gap_crosscheck(&verdict, &counts) {
                return report(CHECK, &inst.name, Outcome::Fail, json!({ "verdict": vjson, "counterexample": cex }));
            }
            let outcome = match verdict {
                GapVerdict::UndeterminedAtHorizon { .. } => Outcome::Undetermined,
                _ => Outcome::Pass,
            };
            report(CHECK, &inst.name, outcome, json!({ "verdict": vjson, "window_counts": counts }))
        }
    }
}

fn cover_failure(outcome: &CoverOutcome) -> Option<&Word> {
    match outcome {
        CoverOutcome::Counterexample(w) => Some(w),
        _ => None,
    }
}

/// `Σ (|x|+|y|+|z|+1)(|z|+2)`: at most that many factors of each length in `∪ x y* z`.
fn cover_factor_limit(triples: &[Triple]) -> u64 {
    triples.iter().map(|t| ((t.x.len() + t.y.len() + t.z.len() + 1) * (t.z.len() + 2)) as u64).sum()
}

fn bounded_certificate(nfa: &Nfa) -> Result<Option<(Vec<Triple>, u64)>> {
    Ok(match decide_bounded(&factor_dfa(nfa)?)? {
        GapCertificate::Bounded { triples, bound } => Some((triples, bound)),
        GapCertificate::Unbounded { .. } => None,
    })
}

/// Round trip of the triple certificate on a bounded regular source:
/// the factor language is covered in both modes, its counts stay under the
/// bound, and the cover language itself has bounded complexity.
/// `None` when the source is not regular or not bounded.
pub fn check_triple_cover(inst: &Instance, sample_max: usize) -> Option<CheckReport> {
    const CHECK: &str = "cover";
    let nfa = regular_nfa(&inst.source)?;
    let alphabet = nfa.alphabet().clone();
    let (triples, bound) = match bounded_certificate(&nfa) {
        Ok(Some(c)) => c,
        Ok(None) => return None,
        Err(e) => return Some(undetermined(CHECK, &inst.name, &e)),
    };
    let cert = GapCertificate::Bounded { triples: triples.clone(), bound }.to_json(&alphabet);
    let closure = factor_closure(&nfa);
    let sampled = verify_triple_cover(&closure, &triples, CoverMode::Sampled, sample_max);
    let formal = verify_triple_cover(&closure, &triples, CoverMode::Formal, 0);
    for (mode, outcome) in [("sampled", &sampled), ("formal", &formal)] {
        if let Some(w) = cover_failure(outcome) {
            return Some(report(
                CHECK,
                &inst.name,
                Outcome::Fail,
                json!({ "certificate": cert, "mode": mode, "uncovered": alphabet.render(w) }),
            ));
        }
    }
    let counts = oracle::factor_counts(&nfa, sample_max);
    if let Some((n, &p)) = counts.iter().enumerate().find(|&(_, &p)| p > bound) {
        return Some(report(
            CHECK,
            &inst.name,
            Outcome::Fail,
            json!({ "certificate": cert, "n": n, "p": p, "bound": bound }),
        ));
    }

    let cover = cover_nfa(&alphabet, &triples);
    let limit = cover_factor_limit(&triples);
    let cover_counts = oracle::factor_counts(&cover, sample_max);
    if let Some((n, &p)) = cover_counts.iter().enumerate().find(|&(_, &p)| p > limit) {
        return Some(report(
            CHECK,
            &inst.name,
            Outcome::Fail,
            json!({ "certificate": cert, "cover_n": n, "cover_p": p, "cover_limit": limit }),
        ));
    }
    match bounded_certificate(&cover) {
        Ok(Some(_)) => {}
        Ok(None) => {
            return Some(report(
                CHECK,
                &inst.name,
                Outcome::Fail,
                json!({ "certificate": cert, "reason": "cover language has unbounded complexity" }),
            ))
        }
        Err(e) => return Some(undetermined(CHECK, &inst.name, &e)),
    }
    let formal_note = if formal == CoverOutcome::CapExceeded { "cap_exceeded" } else { "covered" };
    Some(report(
        CHECK,
        &inst.name,
        Outcome::Pass,
        json!({
            "certificate": cert,
            "sampled_up_to": sample_max,
            "formal": formal_note,
            "cover_limit": limit,
            "cover_counts": cover_counts,
        }),
    ))
}

/// Deletes each triple in turn; every deletion must leave a word uncovered.
pub fn check_cover_negative_control(inst: &Instance, sample_max: usize) -> Option<CheckReport> {
    const CHECK: &str = "cover_negative_control";
    let nfa = regular_nfa(&inst.source)?;
    let alphabet = nfa.alphabet().clone();
    let (triples, _) = bounded_certificate(&nfa).ok()??;
    if triples.is_empty() {
        return None;
    }
    let closure = factor_closure(&nfa);
    let mut detected = Vec::new();
    for i in 0..triples.len() {
        let mut reduced = triples.clone();
        let deleted = reduced.remove(i);
        let found = [CoverMode::Sampled, CoverMode::Formal]
            .into_iter()
            .find_map(|mode| cover_failure(&verify_triple_cover(&closure, &reduced, mode, sample_max)).cloned());
        match found {
            Some(w) if oracle::is_factor_of(&nfa, &w) && !reduced.iter().any(|t| t.generates(&w)) => {
                detected.push(json!({ "deleted": deleted.to_json(&alphabet), "uncovered": alphabet.render(&w) }));
            }
            _ => {
                return Some(report(
                    CHECK,
                    &inst.name,
                    Outcome::Fail,
                    json!({ "undetected_deletion": deleted.to_json(&alphabet) }),
                ))
            }
        }
    }
    Some(report(CHECK, &inst.name, Outcome::Pass, json!({ "deletions": detected })))
}

/// A periodic bi-infinite word has a FIATC profile whose supremum is its least period.
pub fn check_periodic_biinfinite(inst: &Instance, n_max: usize, least_period: usize) -> CheckReport {
    const CHECK: &str = "periodic_bi_infinite";
    let prof = match profile(&inst.source, n_max, None) {
        Ok(p) => p,
        Err(e) => return undetermined(CHECK, &inst.name, &e),
    };
    let values = prof.values().to_vec();
    let fiatc = match is_fiatc(&prof) {
        Ok(f) => f,
        Err(e) => return undetermined(CHECK, &inst.name, &e),
    };
    if !fiatc.is_fiatc {
        let outcome = if prof.is_strictly_increasing() { Outcome::Undetermined } else { Outcome::Fail };
        return report(CHECK, &inst.name, outcome, json!({ "reason": "profile is not FIATC", "profile": values }));
    }
    if prof.sup() != least_period as u64 {
        return report(
            CHECK,
            &inst.name,
            Outcome::Fail,
            json!({ "sup": prof.sup(), "least_period": least_period, "profile": values }),
        );
    }
    match least_period_biinfinite(&inst.source, n_max, None) {
        Ok(q) if q == least_period => report(
            CHECK,
            &inst.name,
            Outcome::Pass,
            json!({ "plateau": fiatc.m, "sup": prof.sup(), "least_period": least_period }),
        ),
        Ok(q) => {
            report(CHECK, &inst.name, Outcome::Fail, json!({ "reported_period": q, "least_period": least_period }))
        }
        Err(e @ Error::NoPlateau(_)) => undetermined(CHECK, &inst.name, &e),
        Err(e) => report(CHECK, &inst.name, Outcome::Fail, json!({ "error": e.to_string() })),
    }
}

/// An eventually periodic one-sided word has a FIATC profile whose supremum is
/// at least the least period of its cycle.
pub fn check_eventually_periodic(inst: &Instance, n_max: usize) -> CheckReport {
    const CHECK: &str = "eventually_periodic";
    let resolved = inst.source.resolved();
    let LanguageSource::Infinite { generator: Generator::EventuallyPeriodic { cycle, .. }, .. } = resolved.as_ref()
    else {
        return report(
            CHECK,
            &inst.name,
            Outcome::Undetermined,
            json!({ "reason": "not an eventually periodic word" }),
        );
    };
    let period = cycle.primitive_root_len();
    let prof = match profile(&inst.source, n_max, None) {
        Ok(p) => p,
        Err(e) => return undetermined(CHECK, &inst.name, &e),
    };
    let values = prof.values().to_vec();
    match is_fiatc(&prof) {
        Err(e) => undetermined(CHECK, &inst.name, &e),
        Ok(f) if !f.is_fiatc => {
            let outcome = if prof.is_strictly_increasing() { Outcome::Undetermined } else { Outcome::Fail };
            report(CHECK, &inst.name, outcome, json!({ "reason": "profile is not FIATC", "profile": values }))
        }
        Ok(_) if prof.sup() < period as u64 => {
            report(CHECK, &inst.name, Outcome::Fail, json!({ "sup": prof.sup(), "period": period, "profile": values }))
        }
        Ok(f) => {
            report(CHECK, &inst.name, Outcome::Pass, json!({ "plateau": f.m, "sup": prof.sup(), "period": period }))
        }
    }
}

/// An aperiodic word's profile increases strictly (and equals `n + 1` when Sturmian)
/// within the horizon.
pub fn check_aperiodic(inst: &Instance, n_max: usize, sturmian: bool) -> CheckReport {
    const CHECK: &str = "aperiodic";
    let prof = match profile(&inst.source, n_max, None) {
        Ok(p) => p,
        Err(e) => return undetermined(CHECK, &inst.name, &e),
    };
    let v = prof.values();
    if let Some(n) = v.windows(2).position(|w| w[0] >= w[1]) {
        return report(CHECK, &inst.name, Outcome::Fail, json!({ "n": n, "p_n": v[n], "p_next": v[n + 1] }));
    }
    if sturmian {
        if let Some((n, &p)) = v.iter().enumerate().find(|&(n, &p)| p != n as u64 + 1) {
            return report(CHECK, &inst.name, Outcome::Fail, json!({ "n": n, "p": p, "expected": n + 1 }));
        }
    }
    report(
        CHECK,
        &inst.name,
        Outcome::Pass,
        json!({ "checked_up_to": n_max, "exact": prof.all_exact(), "p_last": v[n_max] }),
    )
}

/// The quotient chain `L_k`, its stable limit `L'`, and the facts relating them,
/// with `k` running up to `max(k_max, index + period)`. `None` for sources
/// without a regular form (morphic and Sturmian words).
pub fn check_claims_chain(inst: &Instance, n_max: usize, k_max: usize) -> Option<CheckReport> {
    let nfa = inst.source.resolved().to_regular()?;
    let lp = stabilize_lprime(&nfa);
    Some(check_claims_with(&inst.name, &nfa, &lp, n_max, k_max))
}

/// [`check_claims_chain`] against a supplied limit automaton.
pub fn check_claims_with(name: &str, nfa: &Nfa, lp: &LPrime, n_max: usize, k_max: usize) -> CheckReport {
    const CHECK: &str = "quotients";
    let alphabet = nfa.alphabet().clone();
    let fail = |details: Value| report(CHECK, name, Outcome::Fail, details);
    let top = k_max.max(lp.index + lp.period);
    let quotients: Vec<Nfa> = (0..=top).map(|k| shift_finals(nfa, k)).collect();
    let chain: Vec<_> = quotients.iter().map(|q| oracle::factor_sets(q, n_max)).collect();

    for (k, pair) in chain.windows(2).enumerate() {
        for (n, (longer, shorter)) in pair[0].iter().zip(&pair[1]).enumerate() {
            if let Some(w) = shorter.iter().find(|w| !longer.contains(w)) {
                return fail(json!({ "claim": "factor chain decreases", "k": k, "n": n, "word": alphabet.render(w) }));
            }
        }
    }

    let limit = oracle::factor_sets(&lp.automaton, n_max);
    for n in 0..n_max {
        if let Some(w) = limit[n].iter().find(|w| !alphabet.symbols().any(|a| limit[n + 1].contains(&w.appended(a)))) {
            return fail(json!({ "claim": "limit is extendable", "word": alphabet.render(w) }));
        }
    }
    match (LanguageSource::Regular { automaton: lp.automaton.clone() }).is_extendable() {
        Ok(true) => {}
        Ok(false) => return fail(json!({ "claim": "limit is extendable", "reason": "automaton check" })),
        Err(e) => return undetermined(CHECK, name, &e),
    }

    let mut stabilized_at = Vec::new();
    for n in 0..=n_max {
        for (k, sets) in chain.iter().enumerate() {
            if let Some(w) = limit[n].iter().find(|w| !sets[n].contains(w)) {
                return fail(json!({ "claim": "limit lies in every quotient", "k": k, "word": alphabet.render(w) }));
            }
        }
        match (0..=lp.index).find(|&k| chain[k][n].is_subset(&limit[n])) {
            Some(k) => stabilized_at.push(k),
            None => return fail(json!({ "claim": "stabilization", "n": n, "index": lp.index })),
        }
    }

    let bounded = |m: &Nfa| bounded_certificate(m).map(|c| c.is_some());
    let p_bounded = match bounded(nfa) {
        Ok(b) => b,
        Err(e) => return undetermined(CHECK, name, &e),
    };
    let mut bounded_quotients = Vec::new();
    for (k, q) in quotients.iter().enumerate() {
        match bounded(q) {
            Ok(true) => bounded_quotients.push(k),
            Ok(false) => {}
            Err(e) => return undetermined(CHECK, name, &e),
        }
    }
    if let (Some(&k), false) = (bounded_quotients.first(), p_bounded) {
        return fail(json!({ "claim": "a bounded quotient bounds the language", "k": k }));
    }

    report(
        CHECK,
        name,
        Outcome::Pass,
        json!({
            "index": lp.index,
            "period": lp.period,
            "stabilized_at": stabilized_at,
            "bounded_quotients": bounded_quotients,
            "bounded": p_bounded,
        }),
    )
}

/// Whether the factor language has finitely many special factors: no branching
/// state of its minimal DFA is reachable from a cycle.
pub fn finitely_many_specials(factor_dfa: &Dfa) -> bool {
    let n = factor_dfa.state_count();
    let succ: Vec<Vec<usize>> = (0..n).map(|q| factor_dfa.edges(q).map(|(_, r)| r).collect()).collect();
    let comps = tarjan(&succ);
    let on_cycle = |q: usize| comps.members[comps.component[q]].len() > 1 || succ[q].contains(&q);
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&q| on_cycle(q)).collect();
    while let Some(q) = stack.pop() {
        if std::mem::replace(&mut seen[q], true) {
            continue;
        }
        if factor_dfa.out_degree(q) >= 2 {
            return false;
        }
        stack.extend(succ[q].iter().copied().filter(|&r| !seen[r]));
    }
    true
}

/// Outcome of [`pair_decomposition`].
#[derive(Debug, Clone, PartialEq)]
pub enum PairDecomposition {
    /// Pairs `(x, y)` encoded as triples with empty `z`; zero-exponent ones stand for `x` alone.
    Pairs(Vec<Triple>),
    NotApplicable {
        reason: String,
    },
    /// The automaton contradicts the precondition; should never happen.
    Contradiction {
        details: Value,
    },
}

/// `L ⊆ ∪ x y^n` for a language whose factor language has finitely many special factors.
///
/// Read off the triple certificate of the minimal DFA of `L`: no path can leave a
/// cycle, so each `z` is a prefix `u` of the cycle label `y = uv`, and
/// `x y^n u = (x u) (v u)^n`.
pub fn pair_decomposition(nfa: &Nfa) -> Result<PairDecomposition> {
    if !finitely_many_specials(&factor_dfa(nfa)?) {
        return Ok(PairDecomposition::NotApplicable { reason: "infinitely many special factors".into() });
    }
    let alphabet = nfa.alphabet();
    let dfa = minimize(&determinize(nfa)?);
    let triples = match decide_bounded(&dfa)? {
        GapCertificate::Bounded { triples, .. } => triples,
        GapCertificate::Unbounded { witness } => {
            return Ok(PairDecomposition::Contradiction { details: json!({ "witness": witness.to_json(alphabet) }) })
        }
    };
    let mut pairs = Vec::with_capacity(triples.len());
    for t in triples {
        if t.zero_exponent {
            pairs.push(t);
        } else if t.z.len() < t.y.len() && t.y.prefix(t.z.len()) == t.z {
            pairs.push(Triple::new(t.x.concat(&t.z), t.y.rotated(t.z.len()), Word::empty()));
        } else {
            return Ok(PairDecomposition::Contradiction {
                details: json!({ "path_leaves_cycle": t.to_json(alphabet) }),
            });
        }
    }
    Ok(PairDecomposition::Pairs(pairs))
}

fn pairs_json(alphabet: &Alphabet, pairs: &[Triple]) -> Value {
    let zero: Vec<usize> = pairs.iter().enumerate().filter(|(_, p)| p.zero_exponent).map(|(i, _)| i).collect();
    json!({
        "pairs": pairs.iter().map(|p| json!([alphabet.render(&p.x), alphabet.render(&p.y)])).collect::<Vec<_>>(),
        "zero_exponent": zero,
    })
}

/// Coverage (sampled and formal) and soundness of a pair set; returns a counterexample.
fn pair_counterexample(nfa: &Nfa, pairs: &[Triple], sample_max: usize) -> Option<Value> {
    let alphabet = nfa.alphabet();
    for mode in [CoverMode::Sampled, CoverMode::Formal] {
        if let Some(w) = cover_failure(&verify_triple_cover(nfa, pairs, mode, sample_max)) {
            return Some(json!({ "uncovered": alphabet.render(w) }));
        }
    }
    for p in pairs {
        let reps = if p.zero_exponent { 0 } else { 3 };
        if let Some(w) = (0..=reps).map(|n| p.instance(n)).find(|w| !oracle::accepts(nfa, w)) {
            return Some(
                json!({ "pair": [alphabet.render(&p.x), alphabet.render(&p.y)], "not_in_language": alphabet.render(&w) }),
            );
        }
    }
    None
}

/// Pair-form decomposition where finitely many special factors are certified;
/// undetermined otherwise. `None` for non-regular sources.
pub fn check_pair_decomposition(inst: &Instance, sample_max: usize) -> Option<CheckReport> {
    const CHECK: &str = "pairs";
    let nfa = regular_nfa(&inst.source)?;
    let alphabet = nfa.alphabet().clone();
    Some(match pair_decomposition(&nfa) {
        Err(e) => undetermined(CHECK, &inst.name, &e),
        Ok(PairDecomposition::NotApplicable { reason }) => {
            report(CHECK, &inst.name, Outcome::Undetermined, json!({ "reason": reason }))
        }
        Ok(PairDecomposition::Contradiction { details }) => report(CHECK, &inst.name, Outcome::Fail, details),
        Ok(PairDecomposition::Pairs(pairs)) => match pair_counterexample(&nfa, &pairs, sample_max) {
            Some(cex) => report(
                CHECK,
                &inst.name,
                Outcome::Fail,
                json!({ "decomposition": pairs_json(&alphabet, &pairs), "counterexample": cex }),
            ),
            None => report(CHECK, &inst.name, Outcome::Pass, pairs_json(&alphabet, &pairs)),
        },
    })
}

/// Deletes each pair in turn; every deletion must leave a word uncovered.
pub fn check_pair_negative_control(inst: &Instance, sample_max: usize) -> Option<CheckReport> {
    const CHECK: &str = "pairs_negative_control";
    let nfa = regular_nfa(&inst.source)?;
    let alphabet = nfa.alphabet().clone();
    let Ok(PairDecomposition::Pairs(pairs)) = pair_decomposition(&nfa) else { return None };
    if pairs.is_empty() {
        return None;
    }
    let mut detected = Vec::new();
    for i in 0..pairs.len() {
        let mut reduced = pairs.clone();
        let deleted = reduced.remove(i);
        let del = json!([alphabet.render(&deleted.x), alphabet.render(&deleted.y)]);
        match pair_counterexample(&nfa, &reduced, sample_max) {
            Some(cex) => detected.push(json!({ "deleted": del, "counterexample": cex })),
            None => return Some(report(CHECK, &inst.name, Outcome::Fail, json!({ "undetected_deletion": del }))),
        }
    }
    Some(report(CHECK, &inst.name, Outcome::Pass, json!({ "deletions": detected })))
}

fn ps_violation_json(v: &PsViolation) -> Value {
    match *v {
        PsViolation::Upper { n, delta, s } => json!({ "bound": "upper", "n": n, "difference": delta as i64, "s": s }),
        PsViolation::Lower { n, delta, s } => json!({ "bound": "lower", "n": n, "difference": delta as i64, "s": s }),
    }
}

pub(crate) fn ps_report(check: &str, inst: &str, r: &PsReport) -> CheckReport {
    if let Some(v) = r.violations.first() {
        return report(check, inst, Outcome::Fail, ps_violation_json(v));
    }
    if r.checked.is_empty() {
        return report(check, inst, Outcome::Undetermined, json!({ "reason": "no exact entries" }));
    }
    report(
        check,
        inst,
        Outcome::Pass,
        json!({ "extendable": r.extendable, "alphabet_size": r.alphabet_size, "checked": r.checked.len() }),
    )
}

/// `p(n+1) - p(n) <= (α-1) s(n)`, and `>= s(n)` when extendable, for `n < n_max`.
pub fn check_special_inequalities(inst: &Instance, n_max: usize) -> CheckReport {
    const CHECK: &str = "specials";
    match special_inequality_check(&inst.source, n_max, None) {
        Ok(r) => ps_report(CHECK, &inst.name, &r),
        Err(e) => undetermined(CHECK, &inst.name, &e),
    }
}

/// A finite product `XY` given by explicit word lists.
#[derive(Debug, Clone)]
pub struct ConvolutionInstance {
    pub name: String,
    pub x: Vec<Word>,
    pub y: Vec<Word>,
}

impl ConvolutionInstance {
    pub fn product(&self) -> Vec<Word> {
        let set: BTreeSet<Word> = self.x.iter().flat_map(|u| self.y.iter().map(move |v| u.concat(v))).collect();
        set.into_iter().collect()
    }
}

/// `h(n) <= Σ f(n-k) g(k)` with all three profiles computed by the window oracle.
pub fn check_convolution(ci: &ConvolutionInstance, n_max: usize, alphabet_size: usize) -> CheckReport {
    const CHECK: &str = "convolution";
    let prof = |words: &[Word]| ComplexityProfile::exact(oracle::oracle_counts(words, n_max), alphabet_size);
    let (f, g, h) = (prof(&ci.x), prof(&ci.y), prof(&ci.product()));
    let r = convolution_bound_check(&f, &g, &h, n_max);
    match r.first_violation {
        Some(ConvolutionViolation::Convolution { n, h, sum }) => {
            report(CHECK, &ci.name, Outcome::Fail, json!({ "n": n, "h": h, "convolution": sum as u64 }))
        }
        Some(ConvolutionViolation::Monotone { n, f, h }) => {
            report(CHECK, &ci.name, Outcome::Fail, json!({ "n": n, "f": f, "h": h }))
        }
        None => report(
            CHECK,
            &ci.name,
            Outcome::Pass,
            json!({ "sup_f": r.sup_f, "sum_g": r.sum_g as u64, "h": h.values() }),
        ),
    }
}

/// `p(m) <= m` forces `p(n + p(m) + m) <= φ(p(m))` on every exact entry.
pub fn check_growth_bound(name: &str, prof: &ComplexityProfile) -> CheckReport {
    const CHECK: &str = "growth_bound";
    let violations = bb_bound_check(prof);
    match violations.first() {
        Some(v) => {
            report(CHECK, name, Outcome::Fail, json!({ "m": v.m, "n": v.n, "value": v.value, "bound": v.bound }))
        }
        None => {
            let premises = (0..=prof.horizon()).filter(|&m| prof.is_exact(m) && prof.get(m) <= m as u64).count();
            report(CHECK, name, Outcome::Pass, json!({ "horizon": prof.horizon(), "premises": premises }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::Builtin;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    fn regular(states: usize, edges: &[(usize, u8, usize)], finals: &[usize]) -> Instance {
        let nfa = Nfa::from_transitions(ab(), states, edges, &[0], finals).unwrap();
        Instance::new("test", LanguageSource::Regular { automaton: nfa })
    }

    #[test]
    fn gap_on_builtins() {
        for b in Builtin::ALL {
            let r = check_gap_theorem(&Instance::builtin(b), 12);
            assert!(r.is_pass(), "{r:?}");
        }
    }

    #[test]
    fn gap_crosscheck_catches_wrong_bound() {
        let v =
            GapVerdict::BoundedProven { bound: 1, certificate: crate::complexity::BoundCertificate::Plateau { m: 0 } };
        assert_eq!(gap_crosscheck(&v, &[1, 2, 2]), Some(json!({"n": 1, "p": 2, "bound": 1})));
    }

    #[test]
    fn cover_round_trip_and_negative_control() {
        let akb = Instance::builtin(Builtin::Akb);
        assert!(check_triple_cover(&akb, 12).unwrap().is_pass());
        assert!(check_cover_negative_control(&akb, 12).unwrap().is_pass());
        let baab = Instance::builtin(Builtin::Baab);
        assert!(check_triple_cover(&baab, 20).unwrap().is_pass());
        assert!(check_triple_cover(&Instance::builtin(Builtin::U), 12).is_none());
    }

    #[test]
    fn periodic_words() {
        let ab = ab();
        let src = LanguageSource::periodic_bi_infinite(ab.clone(), ab.word("aab").unwrap()).unwrap();
        let inst = Instance::new("aab", src);
        assert!(check_periodic_biinfinite(&inst, 10, 3).is_pass());
        assert!(check_periodic_biinfinite(&inst, 10, 2).is_fail());

        let g = Generator::eventually_periodic(ab.word("b").unwrap(), ab.word("a").unwrap()).unwrap();
        let inst = Instance::new("baaa", LanguageSource::infinite(ab.clone(), g).unwrap());
        let r = check_eventually_periodic(&inst, 10);
        assert!(r.is_pass(), "{r:?}");
        assert_eq!(r.details["sup"], 2);

        assert!(check_aperiodic(&Instance::builtin(Builtin::Fibonacci), 50, true).is_pass());
        assert!(check_aperiodic(&Instance::builtin(Builtin::ThueMorse), 50, false).is_pass());
        assert!(check_aperiodic(&Instance::builtin(Builtin::ThueMorse), 10, true).is_fail());
    }

    #[test]
    fn claims_on_examples() {
        for b in [Builtin::U, Builtin::Akb, Builtin::Baab, Builtin::Mix] {
            let r = check_claims_chain(&Instance::builtin(b), 8, 8).unwrap();
            assert!(r.is_pass(), "{r:?}");
        }
        let ab_only = Instance::new("ab", LanguageSource::finite(ab(), [ab().word("ab").unwrap()]).unwrap());
        let r = check_claims_chain(&ab_only, 8, 8).unwrap();
        assert!(r.is_pass(), "{r:?}");
        assert_eq!(r.details["index"], 3);

        let akb = regular_nfa(&Builtin::Akb.expand()).unwrap();
        let corrupt = LPrime { index: 0, period: 1, automaton: factor_closure(&akb) };
        let r = check_claims_with("akb", &akb, &corrupt, 8, 8);
        assert!(r.is_fail());
        assert_eq!(r.details["word"], "b");
    }

    #[test]
    fn pair_examples() {
        let r = check_pair_decomposition(&Instance::builtin(Builtin::Akb), 12).unwrap();
        assert_eq!(r.outcome, Outcome::Undetermined);

        // b a*
        let ba = regular(2, &[(0, 1, 1), (1, 0, 1)], &[1]);
        let r = check_pair_decomposition(&ba, 12).unwrap();
        assert!(r.is_pass(), "{r:?}");
        assert_eq!(r.details["pairs"], json!([["b", "a"]]));
        assert!(check_pair_negative_control(&ba, 12).unwrap().is_pass());

        let fin = Instance::new(
            "a|aa|aaa",
            LanguageSource::finite(ab(), ["a", "aa", "aaa"].map(|s| ab().word(s).unwrap())).unwrap(),
        );
        let r = check_pair_decomposition(&fin, 12).unwrap();
        assert!(r.is_pass(), "{r:?}");

        // (ab)* a : pairs rotate the cycle
        let abab = regular(2, &[(0, 0, 1), (1, 1, 0)], &[1]);
        let r = check_pair_decomposition(&abab, 12).unwrap();
        assert!(r.is_pass(), "{r:?}");
        assert_eq!(r.details["pairs"], json!([["a", "ba"]]));
    }

    #[test]
    fn special_inequalities() {
        for b in Builtin::ALL {
            let r = check_special_inequalities(&Instance::builtin(b), 11);
            assert_ne!(r.outcome, Outcome::Fail, "{r:?}");
        }
    }

    #[test]
    fn convolution_and_growth() {
        let w = |s: &str| ab().word(s).unwrap();
        let ci = ConvolutionInstance { name: "x".into(), x: vec![w("aab"), w("ab")], y: vec![w("a"), w("b")] };
        assert!(check_convolution(&ci, 10, 2).is_pass());
        let bad = ComplexityProfile::exact(vec![1, 2, 2, 2, 3], 2);
        assert!(check_growth_bound("bad", &bad).is_fail());
    }
}
