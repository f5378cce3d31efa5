use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::checks::{self, ps_report, ConvolutionInstance};
use super::oracle;
use super::{CheckReport, Instance, Outcome, RandomRegularSpec};
use crate::automata::{factor_closure, stabilize_lprime, LPrime, Nfa};
use crate::complexity::{profile, ps_check_values, special_counts, BoundCertificate, ComplexityProfile, GapVerdict};
use crate::error::{Error, Result};
use crate::langspec::{Builtin, Generator, LanguageSource};
use crate::words::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gap,
    Cover,
    Periodicity,
    Quotients,
    Pairs,
    Specials,
    Convolution,
    Growth,
    All,
}

impl Suite {
    /// Every individual suite, in the order `all` runs them.
    pub const EACH: [Suite; 8] = [
        Suite::Gap,
        Suite::Cover,
        Suite::Periodicity,
        Suite::Quotients,
        Suite::Pairs,
        Suite::Specials,
        Suite::Convolution,
        Suite::Growth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gap => "gap",
            Suite::Cover => "cover",
            Suite::Periodicity => "periodicity",
            Suite::Quotients => "quotients",
            Suite::Pairs => "pairs",
            Suite::Specials => "specials",
            Suite::Convolution => "convolution",
            Suite::Growth => "growth",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Spec(format!("unknown suite {s:?}")))
    }
}

/// Sizes and lengths used by the suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub random_languages: usize,
    pub quotient_languages: usize,
    pub convolution_pairs: usize,
    pub periodic_cycles: usize,
    /// Largest `n` for regular sources.
    pub n_max: usize,
    /// Largest `n` for generated words.
    pub word_n_max: usize,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig {
            seed,
            random_languages: 500,
            quotient_languages: 100,
            convolution_pairs: 100,
            periodic_cycles: 50,
            n_max: 12,
            word_n_max: 50,
        }
    }

    fn random_instances(&self) -> Vec<Instance> {
        RandomRegularSpec::batch(self.seed, self.random_languages).iter().map(|s| s.instance()).collect()
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn regular_builtins() -> Vec<Instance> {
    [Builtin::U, Builtin::Baab, Builtin::Mix, Builtin::Akb].map(Instance::builtin).to_vec()
}

fn all_builtins() -> Vec<Instance> {
    Builtin::ALL.map(Instance::builtin).to_vec()
}

fn small_examples() -> Vec<Instance> {
    let ab = Alphabet::ab();
    let w = |s: &str| ab.word(s).expect("letters a and b");
    let b_astar = Nfa::from_transitions(ab.clone(), 2, &[(0, 1, 1), (1, 0, 1)], &[0], &[1]).expect("valid");
    vec![
        Instance::new("finite {ab}", LanguageSource::finite(ab.clone(), [w("ab")]).expect("valid")),
        Instance::new(
            "finite {a,aa,aaa}",
            LanguageSource::finite(ab.clone(), [w("a"), w("aa"), w("aaa")]).expect("valid"),
        ),
        Instance::new("regular ba*", LanguageSource::Regular { automaton: b_astar }),
    ]
}

/// Wraps the report of a deliberately corrupted input: rejecting it is a pass.
fn negative_control(corrupted: CheckReport) -> CheckReport {
    let check = format!("{}_negative_control", corrupted.check);
    if corrupted.is_fail() {
        CheckReport::new(&check, &corrupted.instance, Outcome::Pass, json!({ "rejected": corrupted.details }))
    } else {
        CheckReport::new(&check, &corrupted.instance, Outcome::Fail, json!({ "accepted": corrupted.details }))
    }
}

fn par_map<T: Sync, F>(items: &[T], f: F) -> Vec<CheckReport>
where
    F: Fn(&T) -> Vec<CheckReport> + Sync + Send,
{
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn gap(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances = all_builtins();
    instances.extend(cfg.random_instances());
    let mut out = par_map(&instances, |i| vec![checks::check_gap_theorem(i, cfg.n_max)]);

    // AKB with its bound understated
    let akb = Builtin::Akb.expand().to_regular().expect("regular");
    let wrong = GapVerdict::BoundedProven { bound: 1, certificate: BoundCertificate::Plateau { m: 0 } };
    let counts = oracle::factor_counts(&akb, cfg.n_max);
    let corrupted = match checks::gap_crosscheck(&wrong, &counts) {
        Some(cex) => CheckReport::new("gap", "builtin AKB with bound 1", Outcome::Fail, cex),
        None => CheckReport::new("gap", "builtin AKB with bound 1", Outcome::Pass, json!({ "counts": counts })),
    };
    out.push(negative_control(corrupted));
    out
}

fn cover(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances: Vec<(Instance, usize)> =
        vec![(Instance::builtin(Builtin::Akb), cfg.n_max), (Instance::builtin(Builtin::Baab), 20)];
    instances.extend(cfg.random_instances().into_iter().map(|i| (i, cfg.n_max)));
    par_map(&instances, |(i, len)| {
        checks::check_triple_cover(i, *len).into_iter().chain(checks::check_cover_negative_control(i, *len)).collect()
    })
}

fn random_primitive_cycle<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    loop {
        let len = rng.gen_range(1..=max_len);
        let w = Word::from_symbols((0..len).map(|_| rng.gen_range(0..2) as Symbol).collect());
        if w.primitive_root_len() == len {
            return w;
        }
    }
}

fn periodicity(cfg: &SuiteConfig) -> Vec<CheckReport> {
    enum Job {
        Periodic(Instance, usize),
        Eventually(Instance),
        Aperiodic(Instance, bool),
        Corrupted(Instance, usize),
    }
    let ab = Alphabet::ab();
    let mut rng = cfg.rng(2);
    let mut jobs = Vec::new();
    for _ in 0..cfg.periodic_cycles {
        let cycle = random_primitive_cycle(&mut rng, 8);
        let name = format!("bi-infinite periodic cycle={}", ab.render(&cycle));
        let src = LanguageSource::periodic_bi_infinite(ab.clone(), cycle.clone()).expect("non-empty cycle");
        jobs.push(Job::Periodic(Instance::new(name, src), cycle.len()));

        let plen = rng.gen_range(0..=4);
        let prefix = Word::from_symbols((0..plen).map(|_| rng.gen_range(0..2) as Symbol).collect());
        let name = format!("eventually periodic prefix={} cycle={}", ab.render(&prefix), ab.render(&cycle));
        let g = Generator::eventually_periodic(prefix, cycle).expect("non-empty cycle");
        jobs.push(Job::Eventually(Instance::new(name, LanguageSource::infinite(ab.clone(), g).expect("binary"))));
    }
    for _ in 0..5 {
        let directive: Vec<u32> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(1..=3)).collect();
        let tail: Vec<u32> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=3)).collect();
        let name = format!("sturmian directive={directive:?} tail={tail:?}");
        let g = Generator::sturmian_cf(directive, tail).expect("positive quotients");
        jobs.push(Job::Aperiodic(Instance::new(name, LanguageSource::infinite(ab.clone(), g).expect("binary")), true));
    }
    jobs.push(Job::Aperiodic(Instance::builtin(Builtin::Fibonacci), true));
    jobs.push(Job::Aperiodic(Instance::builtin(Builtin::ThueMorse), false));
    jobs.push(Job::Aperiodic(Instance::builtin(Builtin::Aaabbb), false));
    let aab = LanguageSource::periodic_bi_infinite(ab.clone(), ab.word("aab").expect("binary")).expect("non-empty");
    jobs.push(Job::Corrupted(Instance::new("bi-infinite periodic cycle=aab claimed period 2", aab), 2));

    let n = cfg.word_n_max;
    par_map(&jobs, |job| {
        vec![match job {
            Job::Periodic(i, p) => checks::check_periodic_biinfinite(i, n, *p),
            Job::Eventually(i) => checks::check_eventually_periodic(i, n),
            Job::Aperiodic(i, sturmian) => checks::check_aperiodic(i, n, *sturmian),
            Job::Corrupted(i, p) => negative_control(checks::check_periodic_biinfinite(i, n, *p)),
        }]
    })
}

fn quotients(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances = all_builtins();
    instances.extend(small_examples());
    instances.extend(cfg.random_instances().into_iter().take(cfg.quotient_languages));
    let mut out = par_map(&instances, |i| checks::check_claims_chain(i, 8, 8).into_iter().collect());

    // AKB paired with its own factor language, which is not extendable
    let akb = Builtin::Akb.expand().to_regular().expect("regular");
    let stable = stabilize_lprime(&akb);
    let wrong = LPrime { index: stable.index, period: stable.period, automaton: factor_closure(&akb) };
    out.push(negative_control(checks::check_claims_with("builtin AKB with limit Fact(L)", &akb, &wrong, 8, 8)));
    out
}

fn pairs(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances = regular_builtins();
    instances.extend(small_examples());
    instances.extend(cfg.random_instances());
    par_map(&instances, |i| {
        checks::check_pair_decomposition(i, cfg.n_max)
            .into_iter()
            .chain(checks::check_pair_negative_control(i, cfg.n_max))
            .collect()
    })
}

fn specials(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances = all_builtins();
    instances.extend(cfg.random_instances());
    // checks n < n_max, i.e. n <= 11 by default
    let n = cfg.n_max;
    let mut out = par_map(&instances, |i| vec![checks::check_special_inequalities(i, n)]);

    // U declared over a one-letter alphabet: the upper bound collapses to 0
    let u = Builtin::U.expand();
    let corrupted = (|| -> Result<CheckReport> {
        let p = profile(&u, n, None)?;
        let (s, s_exact) = special_counts(&u, n - 1, None)?;
        let p1 = ComplexityProfile::new(p.values().to_vec(), vec![true; n + 1], 1);
        let r = ps_check_values(&p1, &s, &s_exact, true);
        Ok(ps_report("specials", "builtin U with alphabet size 1", &r))
    })();
    out.push(match corrupted {
        Ok(r) => negative_control(r),
        Err(e) => {
            CheckReport::new("specials_negative_control", "builtin U", Outcome::Fail, json!({ "error": e.to_string() }))
        }
    });
    out
}

fn convolution(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut rng = cfg.rng(1);
    let mut jobs = Vec::with_capacity(cfg.convolution_pairs);
    for _ in 0..cfg.convolution_pairs {
        let spec = RandomRegularSpec::sample(&mut rng);
        let k = spec.alphabet_size;
        let x = oracle::truncate(&spec.automaton(), 8).expect("within limit");
        let y: Vec<Word> = (0..rng.gen_range(1..=5))
            .map(|_| Word::from_symbols((0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..k) as Symbol).collect()))
            .collect();
        let alphabet = spec.alphabet();
        let rendered: Vec<String> = y.iter().map(|w| alphabet.render_human(w)).collect();
        let name = format!("X = {} truncated at 8, Y = {{{}}}", spec.describe(), rendered.join(","));
        jobs.push((ConvolutionInstance { name, x, y }, k));
    }
    let n = cfg.n_max.min(10);
    let mut out = par_map(&jobs, |(ci, k)| vec![checks::check_convolution(ci, n, *k)]);

    // h of X{a,b} against g of {ε}
    let ab = Alphabet::ab();
    let w = |s: &str| ab.word(s).expect("binary");
    let x = vec![w("aab"), w("ab")];
    let xy = ConvolutionInstance { name: String::new(), x: x.clone(), y: vec![w("a"), w("b")] }.product();
    let corrupted =
        ConvolutionInstance { name: "X = {aab,ab}, Y = {ε}, XY taken as X{a,b}".into(), x, y: vec![Word::empty()] };
    let f = ComplexityProfile::exact(oracle::oracle_counts(&corrupted.x, n), 2);
    let g = ComplexityProfile::exact(oracle::oracle_counts(&corrupted.y, n), 2);
    let h = ComplexityProfile::exact(oracle::oracle_counts(&xy, n), 2);
    let r = crate::complexity::convolution_bound_check(&f, &g, &h, n);
    let outcome = if r.holds { Outcome::Pass } else { Outcome::Fail };
    let details = json!({ "first_violation": format!("{:?}", r.first_violation) });
    out.push(negative_control(CheckReport::new("convolution", &corrupted.name, outcome, details)));
    out
}

fn growth(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances: Vec<(Instance, usize)> = all_builtins()
        .into_iter()
        .map(|i| {
            let n = if i.source.is_word_language() { cfg.word_n_max } else { 64 };
            (i, n)
        })
        .collect();
    instances.extend(cfg.random_instances().into_iter().map(|i| (i, cfg.n_max)));
    let mut out = par_map(&instances, |(i, n)| {
        vec![match profile(&i.source, *n, None) {
            Ok(p) => checks::check_growth_bound(&i.name, &p),
            Err(e) => {
                CheckReport::new("growth_bound", &i.name, Outcome::Undetermined, json!({ "reason": e.to_string() }))
            }
        }]
    });
    let corrupted = ComplexityProfile::exact(vec![1, 2, 2, 2, 3], 2);
    out.push(negative_control(checks::check_growth_bound("profile 1,2,2,2,3", &corrupted)));
    out
}

/// Runs a suite; reports come back in a fixed order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Gap => gap(cfg),
        Suite::Cover => cover(cfg),
        Suite::Periodicity => periodicity(cfg),
        Suite::Quotients => quotients(cfg),
        Suite::Pairs => pairs(cfg),
        Suite::Specials => specials(cfg),
        Suite::Convolution => convolution(cfg),
        Suite::Growth => growth(cfg),
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
    }
}
