use super::{profile, special_counts, ComplexityProfile};
use crate::error::{Error, Result};
use crate::langspec::{Generator, LanguageSource};

/// `⌈(x+1)/2⌉ · ⌊(x+1)/2⌋`.
pub fn phi(x: u64) -> u64 {
    (x / 2 + 1) * x.div_ceil(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiatcResult {
    pub is_fiatc: bool,
    /// Plateau index when `is_fiatc`.
    pub m: Option<usize>,
}

/// Strictly increasing up to some `m < N`, then constant through `N`.
///
/// A profile that never stops increasing within the horizon is reported as
/// not FIATC: no plateau was observed.
pub fn is_fiatc(prof: &ComplexityProfile) -> Result<FiatcResult> {
    if !prof.all_exact() {
        return Err(Error::InexactProfile);
    }
    let v = prof.values();
    let m = v.windows(2).position(|w| w[0] >= w[1]);
    let no = FiatcResult { is_fiatc: false, m: None };
    Ok(match m {
        Some(m) if v[m..].iter().all(|&x| x == v[m]) => FiatcResult { is_fiatc: true, m: Some(m) },
        _ => no,
    })
}

/// Least period of a periodic bi-infinite word, read off its profile plateau.
///
/// Both sides must be eventually periodic and the whole word periodic, which is
/// checked on a window long enough to contain both transients and two cycles.
pub fn least_period_biinfinite(src: &LanguageSource, n_max: usize, horizon: Option<usize>) -> Result<usize> {
    let source = src.resolved();
    let LanguageSource::BiInfinite { left, right, .. } = source.as_ref() else {
        return Err(Error::NotPeriodic);
    };
    let parts = |g: &Generator| match g {
        Generator::EventuallyPeriodic { prefix, cycle } => Ok((prefix.len(), cycle.len())),
        _ => Err(Error::NotPeriodic),
    };
    let (lp, lc) = parts(left)?;
    let (rp, rc) = parts(right)?;
    let h = lp + rp + 2 * (lc + rc);
    let window = source.window(h).expect("word source");
    let q = window.least_period();
    // the least period of a periodic word divides every eventual period of its tails
    if lc % q != 0 || rc % q != 0 {
        return Err(Error::NotPeriodic);
    }

    let prof = profile(&source, n_max, horizon)?;
    let v = prof.values();
    match (0..n_max).find(|&m| v[m] == v[m + 1] && prof.is_exact(m) && prof.is_exact(m + 1)) {
        Some(_) => Ok(prof.sup() as usize),
        None => Err(Error::NoPlateau(n_max)),
    }
}

/// A pair `(m, n)` with `p(m) <= m` and `p(n + p(m) + m) > φ(p(m))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BbViolation {
    pub m: usize,
    pub n: usize,
    pub value: u64,
    pub bound: u64,
}

/// Scans every `(m, n)` covered by the profile. Inexact entries are skipped.
pub fn bb_bound_check(prof: &ComplexityProfile) -> Vec<BbViolation> {
    let top = prof.horizon();
    let mut out = Vec::new();
    for m in 0..=top {
        let pm = prof.get(m);
        if !prof.is_exact(m) || pm > m as u64 {
            continue;
        }
        let bound = phi(pm);
        let start = m + pm as usize;
        for idx in start..=top {
            if prof.is_exact(idx) && prof.get(idx) > bound {
                out.push(BbViolation { m, n: idx - start, value: prof.get(idx), bound });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvolutionViolation {
    /// `h(n) > Σ_k f(n-k) g(k)`.
    Convolution { n: usize, h: u64, sum: u128 },
    /// `f(n) > h(n)` although `Y` is non-empty.
    Monotone { n: usize, f: u64, h: u64 },
}

/// Outcome of [`convolution_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionReport {
    pub holds: bool,
    pub first_violation: Option<ConvolutionViolation>,
    /// `max f` over the checked range.
    pub sup_f: u64,
    /// `Σ g` over the checked range.
    pub sum_g: u128,
}

/// Checks `h(n) <= Σ_{k=0}^{n} f(n-k) g(k)` for `n <= n_max`, where `f`, `g`, `h`
/// are the profiles of `X`, `Y` and `XY`. When `Y` is non-empty (`g(0) = 1`) it
/// also checks `f(n) <= h(n)`.
pub fn convolution_bound_check(
    f: &ComplexityProfile,
    g: &ComplexityProfile,
    h: &ComplexityProfile,
    n_max: usize,
) -> ConvolutionReport {
    let top = n_max.min(f.horizon()).min(g.horizon()).min(h.horizon());
    let y_nonempty = g.get(0) > 0;
    let mut first = None;
    for n in 0..=top {
        let sum: u128 = (0..=n).map(|k| f.get(n - k) as u128 * g.get(k) as u128).sum();
        if h.get(n) as u128 > sum {
            first = Some(ConvolutionViolation::Convolution { n, h: h.get(n), sum });
            break;
        }
        if y_nonempty && f.get(n) > h.get(n) {
            first = Some(ConvolutionViolation::Monotone { n, f: f.get(n), h: h.get(n) });
            break;
        }
    }
    ConvolutionReport {
        holds: first.is_none(),
        first_violation: first,
        sup_f: f.values()[..=top].iter().copied().max().unwrap_or(0),
        sum_g: g.values()[..=top].iter().map(|&x| x as u128).sum(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsViolation {
    /// `p(n+1) - p(n) > (α-1) s(n)`.
    Upper { n: usize, delta: i128, s: u64 },
    /// `p(n+1) - p(n) < s(n)` on an extendable language.
    Lower { n: usize, delta: i128, s: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsReport {
    pub extendable: bool,
    pub alphabet_size: usize,
    /// Values of `n` whose entries were exact and therefore checked.
    pub checked: Vec<usize>,
    pub violations: Vec<PsViolation>,
}

impl PsReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Relates the first difference of `p` to the number of special factors:
/// `s(n) <= p(n+1) - p(n)` for extendable languages, and
/// `p(n+1) - p(n) <= (α-1) s(n)` always. Checked for `n < n_max` on exact entries.
pub fn special_inequality_check(src: &LanguageSource, n_max: usize, horizon: Option<usize>) -> Result<PsReport> {
    let source = src.resolved();
    let extendable = source.is_extendable()?;
    let prof = profile(&source, n_max, horizon)?;
    let (s, s_exact) = special_counts(&source, n_max.saturating_sub(1), horizon)?;
    Ok(ps_check_values(&prof, &s, &s_exact, extendable))
}

/// The same inequalities on precomputed values; `s[n]` is checked for `n < |p| - 1`.
pub fn ps_check_values(prof: &ComplexityProfile, s: &[u64], s_exact: &[bool], extendable: bool) -> PsReport {
    let alphabet_size = prof.alphabet_size();
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for n in 0..prof.horizon().min(s.len()) {
        if !(prof.is_exact(n) && prof.is_exact(n + 1) && s_exact[n]) {
            continue;
        }
        checked.push(n);
        let delta = prof.get(n + 1) as i128 - prof.get(n) as i128;
        if delta > (alphabet_size as i128 - 1) * s[n] as i128 {
            violations.push(PsViolation::Upper { n, delta, s: s[n] });
        }
        if extendable && delta < s[n] as i128 {
            violations.push(PsViolation::Lower { n, delta, s: s[n] });
        }
    }
    PsReport { extendable, alphabet_size, checked, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Nfa;
    use crate::langspec::Builtin;
    use crate::words::Alphabet;

    fn exact(v: &[u64]) -> ComplexityProfile {
        ComplexityProfile::exact(v.to_vec(), 2)
    }

    #[test]
    fn phi_values() {
        assert_eq!([0, 1, 2, 3, 4, 5].map(phi), [0, 1, 2, 4, 6, 9]);
    }

    #[test]
    fn fiatc_examples() {
        assert_eq!(is_fiatc(&exact(&[1, 2, 3, 3, 3])).unwrap(), FiatcResult { is_fiatc: true, m: Some(2) });
        assert!(!is_fiatc(&exact(&[1, 2, 1])).unwrap().is_fiatc);
        assert!(!is_fiatc(&exact(&[1, 2, 3, 4])).unwrap().is_fiatc);
        assert!(!is_fiatc(&exact(&[1, 2, 2, 3])).unwrap().is_fiatc);
        assert_eq!(is_fiatc(&exact(&[1, 1])).unwrap().m, Some(0));
        let inexact = ComplexityProfile::new(vec![1, 2], vec![true, false], 2);
        assert_eq!(is_fiatc(&inexact), Err(Error::InexactProfile));
        let aaabbb = profile(&Builtin::Aaabbb.expand(), 12, None).unwrap();
        assert!(!is_fiatc(&aaabbb).unwrap().is_fiatc);
    }

    #[test]
    fn least_periods() {
        let ab = Alphabet::ab();
        for (cycle, period) in [("ab", 2), ("abab", 2), ("aab", 3), ("a", 1)] {
            let src = LanguageSource::periodic_bi_infinite(ab.clone(), ab.word(cycle).unwrap()).unwrap();
            assert_eq!(least_period_biinfinite(&src, 8, None).unwrap(), period, "{cycle}");
        }
        let aaabbb = Builtin::Aaabbb.expand();
        assert_eq!(least_period_biinfinite(&aaabbb, 8, None), Err(Error::NotPeriodic));
        let long = LanguageSource::periodic_bi_infinite(ab.clone(), ab.word("aaaaaaab").unwrap()).unwrap();
        assert_eq!(least_period_biinfinite(&long, 4, None), Err(Error::NoPlateau(4)));
    }

    #[test]
    fn bb_examples() {
        for b in [Builtin::Akb, Builtin::Baab, Builtin::U, Builtin::Mix] {
            assert!(bb_bound_check(&profile(&b.expand(), 24, None).unwrap()).is_empty(), "{b}");
        }
        // p(2) = 2 <= 2 forces p(4 + n) <= 2
        let bad = exact(&[1, 2, 2, 2, 3]);
        assert_eq!(bb_bound_check(&bad), vec![BbViolation { m: 2, n: 0, value: 3, bound: 2 }]);
    }

    #[test]
    fn convolution_examples() {
        let ab = Alphabet::ab();
        let f = profile(&Builtin::Akb.expand(), 10, None).unwrap();
        let akb_times_letter = {
            let mut m = Nfa::new(ab.clone(), 3);
            m.add_start(0).unwrap();
            m.add_transition(0, 0, 0).unwrap();
            m.add_transition(0, 1, 1).unwrap();
            m.add_transition(1, 0, 2).unwrap();
            m.add_transition(1, 1, 2).unwrap();
            m.add_final(2).unwrap();
            m
        };
        let h = profile(&LanguageSource::Regular { automaton: akb_times_letter }, 10, None).unwrap();
        let g = profile(&LanguageSource::finite(ab.clone(), ab.all_words(1)).unwrap(), 10, None).unwrap();
        let r = convolution_bound_check(&f, &g, &h, 10);
        assert!(r.holds, "{r:?}");
        assert_eq!(r.sup_f, 2);
        assert_eq!(r.sum_g, 3);

        let eps =
            profile(&LanguageSource::finite(ab.clone(), [crate::words::Word::empty()]).unwrap(), 10, None).unwrap();
        assert!(convolution_bound_check(&f, &eps, &f, 10).holds);

        let zero = exact(&[0; 11]);
        assert!(convolution_bound_check(&zero, &g, &zero, 10).holds);

        // h larger than the convolution
        let r = convolution_bound_check(&zero, &g, &f, 10);
        assert_eq!(r.first_violation, Some(ConvolutionViolation::Convolution { n: 0, h: 1, sum: 0 }));
        // f larger than h with Y non-empty
        let r = convolution_bound_check(&f, &g, &zero, 10);
        assert!(!r.holds);
    }

    #[test]
    fn ps_examples() {
        let u = special_inequality_check(&Builtin::U.expand(), 10, None).unwrap();
        assert!(u.extendable && u.holds() && u.checked.len() == 10);
        let akb = special_inequality_check(&Builtin::Akb.expand(), 10, None).unwrap();
        assert!(!akb.extendable && akb.holds());
        let full = LanguageSource::Regular { automaton: Nfa::universal(Alphabet::ab()) };
        assert!(special_inequality_check(&full, 8, None).unwrap().holds());
        let fib = special_inequality_check(&Builtin::Fibonacci.expand(), 10, None).unwrap();
        assert!(fib.checked.is_empty());
    }
}
