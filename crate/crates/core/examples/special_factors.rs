//! Lists right-special factors and checks p(n+1) - p(n) against s(n).

use subword_complexity::complexity::{special_factors, special_inequality_check};
use subword_complexity::langspec::{Builtin, LanguageSource};

fn main() {
    let ab = subword_complexity::words::Alphabet::ab();
    for b in [Builtin::Akb, Builtin::Fibonacci, Builtin::ThueMorse] {
        let src = LanguageSource::Builtin(b);
        println!("{}", b.name());
        for n in 0..=6 {
            let r = special_factors(&src, n, None).expect("within horizon");
            println!("  s({n}) = {}  {:?}", r.count(), r.specials.render(&ab));
        }
        let ps = special_inequality_check(&src, 11, None).expect("profile");
        println!(
            "  extendable: {}, exact lengths checked: {}, violations: {}",
            ps.extendable,
            ps.checked.len(),
            ps.violations.len()
        );
    }
}
