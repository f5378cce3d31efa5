//! Decides the bounded/linear gap for a few regular languages, then checks
//! each triple certificate against the factor language in both cover modes.

use subword_complexity::automata::{
    decide_bounded, factor_closure, factor_dfa, verify_triple_cover, CoverMode, GapCertificate, Nfa,
};
use subword_complexity::langspec::{json, Builtin};

fn report(name: &str, nfa: &Nfa) {
    let alphabet = nfa.alphabet();
    let cert = decide_bounded(&factor_dfa(nfa).expect("under cap")).expect("trim");
    println!("{name}: {}", cert.to_json(alphabet));
    match &cert {
        GapCertificate::Bounded { triples, .. } => {
            let closure = factor_closure(nfa);
            let sampled = verify_triple_cover(&closure, triples, CoverMode::Sampled, 12);
            let formal = verify_triple_cover(&closure, triples, CoverMode::Formal, 0);
            println!("  sampled cover up to 12: {sampled:?}, formal cover: {formal:?}");
        }
        GapCertificate::Unbounded { witness } => {
            let words: Vec<String> = witness.sample_words(2).iter().map(|w| alphabet.render(w)).collect();
            println!("  words from the witness: {}", words.join(" "));
        }
    }
}

fn main() {
    for b in [Builtin::U, Builtin::Baab, Builtin::Mix, Builtin::Akb] {
        report(b.name(), &b.expand().to_regular().expect("regular builtin"));
    }
    let spec = r#"{"alphabet":["a","b","c"],"source":{"type":"regular","states":3,"start":[0],"finals":[2],
        "transitions":[[0,"a",0],[0,"c",1],[1,"b",1],[1,"c",2]]}}"#;
    report("a*cb*c", &json::parse(spec).unwrap().to_regular().unwrap());
}
