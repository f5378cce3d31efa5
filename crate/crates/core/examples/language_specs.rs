//! Builds sources in code, writes them as JSON specs and reads them back.

use subword_complexity::complexity::profile;
use subword_complexity::langspec::{json, Generator, LanguageSource};
use subword_complexity::words::Alphabet;

fn main() {
    let abc = Alphabet::from_chars("abc").unwrap();
    let tribonacci = Generator::morphic(
        &abc,
        vec![abc.word("ab").unwrap(), abc.word("ac").unwrap(), abc.word("a").unwrap()],
        0,
        None,
    )
    .unwrap();
    let sources = [
        LanguageSource::infinite(abc.clone(), tribonacci).unwrap(),
        LanguageSource::finite(abc.clone(), [abc.word("abc").unwrap(), abc.word("cab").unwrap()]).unwrap(),
        LanguageSource::builtin("baab").unwrap(),
    ];
    for src in &sources {
        let text = json::to_string(src);
        let back = json::parse(&text).unwrap();
        let p = profile(&back, 8, None).unwrap();
        println!("{text}\n  p = {:?}", p.values());
    }
}
