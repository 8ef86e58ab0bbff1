//! Input generation for the throughput benchmarks.

use latin2ajami::data;

/// Wolof-looking running text of at least `bytes` bytes, built from the
/// shipped lexicon with sentence breaks, commas and line feeds.
pub fn synthetic_text(bytes: usize) -> String {
    let words: Vec<&str> = data::lexicon().collect();
    let mut out = String::with_capacity(bytes + 64);
    let mut i = 0usize;
    while out.len() < bytes {
        let word = words[(i * 7919) % words.len()];
        if i.is_multiple_of(12) && !out.is_empty() {
            out.push_str(". ");
            let mut cs = word.chars();
            if let Some(first) = cs.next() {
                out.extend(first.to_uppercase());
                out.push_str(cs.as_str());
            }
        } else {
            out.push_str(word);
        }
        out.push_str(if i % 5 == 4 { ", " } else { " " });
        if i % 40 == 39 {
            out.push('\n');
        }
        i += 1;
    }
    out
}
