//! Periodic bi-infinite words: the profile rises by one per length until it
//! reaches the least period, then stays there.

use subword_complexity::complexity::{bb_bound_check, is_fiatc, least_period_biinfinite, phi, profile};
use subword_complexity::langspec::{Builtin, LanguageSource};
use subword_complexity::words::Alphabet;

fn main() {
    let ab = Alphabet::ab();
    for cycle in ["a", "ab", "aab", "abaab", "aababb", "abababb"] {
        let src = LanguageSource::periodic_bi_infinite(ab.clone(), ab.word(cycle).unwrap()).unwrap();
        let p = profile(&src, 12, None).unwrap();
        let fiatc = is_fiatc(&p).unwrap();
        let period = least_period_biinfinite(&src, 12, None).unwrap();
        println!("(…{cycle}{cycle}…)  p = {:?}  plateau from {:?}, least period {period}", p.values(), fiatc.m);
    }

    // a bounded profile can never sit above phi of an earlier small value
    println!("phi(0..8) = {:?}", (0..8).map(phi).collect::<Vec<_>>());
    for b in Builtin::ALL {
        let p = profile(&LanguageSource::Builtin(b), 30, None).unwrap();
        println!(
            "{:<10} strictly increasing: {:<5}  growth-bound violations: {}",
            b.name(),
            p.is_strictly_increasing(),
            bb_bound_check(&p).len()
        );
    }
}
