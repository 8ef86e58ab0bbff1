//! Prints the rule trace for each argument using the shipped Wolof data.

use latin2ajami::{data, transliterate_traced, TranslitOptions};

fn main() {
    let (profile, table) = data::wolof().expect("shipped data loads");
    for word in std::env::args().skip(1) {
        let (out, trace) = transliterate_traced(&word, &profile, &table, &TranslitOptions::default());
        println!("{word} -> {}", out.text);
        print!("{}", trace.render());
    }
}
