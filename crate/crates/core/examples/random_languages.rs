//! Classifies a seeded batch of random regular languages and prints how the
//! verdicts and bounds are distributed.
//!
//! cargo run --example random_languages -- [seed] [count]

use std::collections::BTreeMap;

use subword_complexity::complexity::{classify, GapVerdict};
use subword_complexity::verifier::RandomRegularSpec;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(500);

    let mut bounds: BTreeMap<u64, usize> = BTreeMap::new();
    let mut linear = 0;
    for spec in RandomRegularSpec::batch(seed, count) {
        match classify(&spec.instance().source, 12, None).expect("regular sources classify") {
            GapVerdict::BoundedProven { bound, .. } => *bounds.entry(bound).or_default() += 1,
            GapVerdict::LinearLowerBoundProven { .. } => linear += 1,
            other => panic!("regular source left open: {other:?}"),
        }
    }
    println!("seed {seed}, {count} languages");
    println!("linear lower bound: {linear}");
    for (bound, k) in bounds {
        println!("bounded by {bound:>3}: {k}");
    }
}
