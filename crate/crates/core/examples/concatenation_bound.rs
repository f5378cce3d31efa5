//! Factor counts of a concatenation XY against the convolution of the counts
//! of X and Y.

use subword_complexity::complexity::{convolution_bound_check, ComplexityProfile};
use subword_complexity::verifier::oracle::oracle_counts;
use subword_complexity::words::{Alphabet, Word};

fn main() {
    let ab = Alphabet::ab();
    let words = |list: &[&str]| -> Vec<Word> { list.iter().map(|s| ab.word(s).unwrap()).collect() };
    let x = words(&["aab", "abba", "b"]);
    let y = words(&["", "ba", "bbb"]);
    let xy: Vec<Word> = x.iter().flat_map(|u| y.iter().map(move |v| u.concat(v))).collect();

    let n = 8;
    let f = ComplexityProfile::exact(oracle_counts(&x, n), 2);
    let g = ComplexityProfile::exact(oracle_counts(&y, n), 2);
    let h = ComplexityProfile::exact(oracle_counts(&xy, n), 2);
    for i in 0..=n {
        let conv: u64 = (0..=i).map(|k| f.get(i - k) * g.get(k)).sum();
        println!("n = {i}: h = {:>2}  sum f(n-k) g(k) = {conv:>3}", h.get(i));
    }
    let report = convolution_bound_check(&f, &g, &h, n);
    println!("holds: {}  (sup f = {}, total g = {})", report.holds, report.sup_f, report.sum_g);
}
