//! Prints p(n) and s(n) for every builtin and for the sample specs in
//! `examples/data`.
//!
//! cargo run --example complexity_profiles -- [n]

use std::fs;
use std::path::Path;

use subword_complexity::complexity::{profile, special_counts};
use subword_complexity::langspec::{json, Builtin, LanguageSource};

fn show(name: &str, src: &LanguageSource, n: usize) {
    let p = profile(src, n, None).expect("profile");
    let (s, _) = special_counts(src, n, None).expect("special factors");
    let mark = if p.all_exact() { "" } else { "  (window)" };
    println!("{name:<28} p = {:?}{mark}", p.values());
    println!("{:<28} s = {s:?}", "");
}

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);

    for b in Builtin::ALL {
        show(b.name(), &LanguageSource::Builtin(b), n);
    }

    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut files: Vec<_> = fs::read_dir(&data).expect("examples/data").flatten().map(|e| e.path()).collect();
    files.sort();
    for path in files {
        let src = json::parse(&fs::read_to_string(&path).expect("readable")).expect("valid spec");
        show(&path.file_name().unwrap().to_string_lossy(), &src, n);
    }
}
