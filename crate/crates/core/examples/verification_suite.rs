//! Runs the verification suites with a reduced batch size and prints a
//! summary per suite.
//!
//! cargo run --example verification_suite -- [seed]

use std::collections::BTreeMap;

use subword_complexity::verifier::{run_suite, Outcome, Suite, SuiteConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let cfg =
        SuiteConfig { random_languages: 100, quotient_languages: 20, convolution_pairs: 20, ..SuiteConfig::new(seed) };
    for suite in Suite::EACH {
        let reports = run_suite(suite, &cfg);
        let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
        for r in &reports {
            let key = match r.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "fail",
                Outcome::Undetermined => "undetermined",
            };
            *tally.entry(key).or_default() += 1;
        }
        println!("{suite:<12} {tally:?}");
        for r in reports.iter().filter(|r| r.is_fail()) {
            println!("  {}", r.to_json_line());
        }
    }
}
