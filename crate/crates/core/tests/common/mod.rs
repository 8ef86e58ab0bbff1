#![allow(dead_code)]

pub mod oracle;

use latin2ajami::marks::{MADDA_ALIF, SHADDA};
use latin2ajami::{data, transliterate, transliterate_traced, GlyphTable, LanguageProfile, TranslitOptions};

/// Small alphabet exercising every rule: two vowels, lam, nasals that open
/// prenasal pairs (mb, nd, nk), plain consonants, a space and a period.
pub const TEST_ALPHABET: [char; 10] = ['a', 'o', 'b', 'd', 'k', 'l', 'm', 'n', ' ', '.'];

pub fn wolof() -> (LanguageProfile, GlyphTable) {
    data::wolof().expect("shipped Wolof data loads")
}

pub fn glyph(table: &GlyphTable, c: char) -> String {
    table.get(c).expect("mapped").iter().collect()
}

/// Checks the structural laws on one input under default options.
///
/// Inputs are expected to be made of profile letters, spaces and mapped
/// punctuation (in either case), so that preprocessing is length-preserving
/// and trace row `p + 1` belongs to input scalar `p`.
pub fn check_laws(text: &str, profile: &LanguageProfile, table: &GlyphTable) -> Result<(), String> {
    let options = TranslitOptions::default();
    let (result, trace) = transliterate_traced(text, profile, table, &options);
    let out = &result.text;

    // determinism
    let again = transliterate(text, profile, table, &options);
    if &again.text != out {
        return Err(format!("non-deterministic output for {text:?}"));
    }

    // trace completeness
    if &trace.output() != out {
        return Err(format!("trace emissions differ from output for {text:?}"));
    }

    let s: Vec<char> = text.chars().flat_map(char::to_lowercase).collect();
    if trace.rows.len() != s.len() + 2 {
        return Err(format!("expected {} trace rows for {text:?}", s.len() + 2));
    }
    let emitted = |p: usize| trace.rows[p + 1].emitted.as_str();
    let boundary = |p: usize| p == 0 || !(profile.is_vowel(s[p - 1]) || profile.is_consonant(s[p - 1]));

    let mut p = 0;
    while p + 1 < s.len() {
        let c = s[p];
        if s[p + 1] != c {
            p += 1;
            continue;
        }
        if profile.is_consonant(c) && !profile.nasals().contains(&c) {
            // geminate law
            let base = glyph(table, c);
            let pair = format!("{}{}", emitted(p), emitted(p + 1));
            if !emitted(p).starts_with(&base) || emitted(p + 1) != SHADDA.to_string() || pair.matches(&base).count() != 1 {
                return Err(format!("geminate law broken at {p} in {text:?}: {pair:?}"));
            }
        } else if profile.is_vowel(c) {
            // long-vowel law
            let pair = format!("{}{}", emitted(p), emitted(p + 1));
            if c == profile.alif_vowel() && boundary(p) {
                // word-initial doubled alif vowel fuses into a single madda
                if pair != MADDA_ALIF.to_string() {
                    return Err(format!("madda expected at {p} in {text:?}: {pair:?}"));
                }
            } else {
                let mark = glyph(table, c);
                let carrier = profile.carrier(c).unwrap().letter();
                if pair.matches(&mark).count() != 1 || pair.matches(carrier).count() != 1 {
                    return Err(format!("long-vowel law broken at {p} in {text:?}: {pair:?}"));
                }
            }
        }
        p += 2;
    }

    // no residual Latin
    if let Some(bad) = out
        .chars()
        .find(|&c| ('\u{41}'..='\u{7A}').contains(&c) || profile.is_vowel(c) || profile.is_consonant(c))
    {
        return Err(format!("residual Latin {bad:?} in output of {text:?}"));
    }
    Ok(())
}

/// Letters, spaces and mapped punctuation of the Wolof profile, upper- and
/// lowercase, for law testing.
pub fn law_alphabet(profile: &LanguageProfile) -> Vec<char> {
    let mut chars: Vec<char> = profile.vowels().iter().chain(profile.consonants()).copied().collect();
    let upper: Vec<char> = chars.iter().flat_map(|c| c.to_uppercase()).collect();
    chars.extend(upper.into_iter().filter(|u| u.to_lowercase().count() == 1));
    chars.extend([' ', ' ', ' ', ',', '.', '?']);
    chars
}

/// Wolof-looking running text of at least `bytes` bytes built from the
/// shipped lexicon.
pub fn synthetic_text(bytes: usize) -> String {
    let words: Vec<&str> = data::lexicon().collect();
    let mut out = String::with_capacity(bytes + 64);
    let mut i = 0usize;
    while out.len() < bytes {
        let w = words[(i * 7919) % words.len()];
        if i.is_multiple_of(12) && !out.is_empty() {
            out.push_str(". ");
            let mut cs = w.chars();
            if let Some(f) = cs.next() {
                out.extend(f.to_uppercase());
                out.push_str(cs.as_str());
            }
        } else {
            out.push_str(w);
        }
        out.push_str(if i % 5 == 4 { ", " } else { " " });
        if i % 40 == 39 {
            out.push('\n');
        }
        i += 1;
    }
    out
}
