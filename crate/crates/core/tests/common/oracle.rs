//! Naive, branch-by-branch transcription of the consonant and vowel
//! flowcharts, written against a 1-based string `S` with in-place
//! replacement, the way the original macro walked its buffer.
//!
//! It shares nothing with the engine besides the data: the table text is
//! parsed here into a plain map, and the profile is read through its public
//! sets only. Default options only (lowercasing is the sole preprocessing).

use std::collections::HashMap;

use latin2ajami::LanguageProfile;

const SHADDA: char = '\u{0651}';
const SUKUN: char = '\u{0652}';
const ALIF: char = '\u{0627}';
const MADDA: char = '\u{0622}';

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tag {
    Orig,
    Pad,
    Shadda,
    Carrier,
    Eaten(&'static str),
}

pub struct Oracle {
    glyph: HashMap<u32, String>,
    vowels: Vec<char>,
    consonants: Vec<char>,
    nasals: Vec<char>,
    punct: Vec<char>,
    pairs: Vec<(char, char)>,
    carriers: HashMap<char, char>,
    lam: char,
    alif_vowel: char,
}

impl Oracle {
    pub fn new(table_text: &str, profile: &LanguageProfile) -> Oracle {
        let mut glyph = HashMap::new();
        for line in table_text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut halves = line.split(',');
            let latin = u32::from_str_radix(halves.next().unwrap().trim(), 16).unwrap();
            let ajami: String = halves
                .next()
                .unwrap()
                .split(';')
                .map(|h| char::from_u32(u32::from_str_radix(h.trim(), 16).unwrap()).unwrap())
                .collect();
            glyph.insert(latin, ajami);
        }
        let carriers = profile
            .vowels()
            .iter()
            .map(|&v| (v, profile.carrier(v).unwrap().letter()))
            .collect();
        Oracle {
            glyph,
            vowels: profile.vowels().iter().copied().collect(),
            consonants: profile.consonants().iter().copied().collect(),
            nasals: profile.nasals().iter().copied().collect(),
            punct: profile.punctuation().iter().copied().collect(),
            pairs: profile.prenasal_pairs().iter().copied().collect(),
            carriers,
            lam: profile.lam(),
            alif_vowel: profile.alif_vowel(),
        }
    }

    fn is_space(c: char) -> bool {
        c == ' ' || c == '\t' || c == '\n' || c == '\r'
    }

    fn vowel(&self, c: Option<char>) -> bool {
        c.is_some_and(|c| self.vowels.contains(&c) && !Self::is_space(c))
    }

    fn consonant(&self, c: char) -> bool {
        self.consonants.contains(&c) && !self.vowels.contains(&c) && !Self::is_space(c) && !c.is_ascii_digit()
    }

    fn punct_or_space(&self, c: char) -> bool {
        Self::is_space(c)
            || (self.punct.contains(&c)
                && !c.is_ascii_digit()
                && !self.vowels.contains(&c)
                && !self.consonants.contains(&c))
    }

    /// Branch h / f: code in 0..=&H2FF with an entry -> table, else as-is.
    fn lookup(&self, c: char) -> (String, bool) {
        if (c as u32) <= 0x2FF {
            if let Some(g) = self.glyph.get(&(c as u32)) {
                return (g.clone(), true);
            }
        }
        (c.to_string(), false)
    }

    /// Returns the output and one label per scanned position.
    pub fn run(&self, text: &str) -> (String, Vec<String>) {
        // S = chr(32) & chr(32) & text & chr(32), 1-based
        let mut s: Vec<char> = vec!['\0'];
        let mut tag: Vec<Tag> = vec![Tag::Pad];
        s.push(' ');
        tag.push(Tag::Pad);
        s.push(' ');
        tag.push(Tag::Pad);
        for c in text.chars() {
            for l in c.to_lowercase() {
                s.push(l);
                tag.push(Tag::Orig);
            }
        }
        s.push(' ');
        tag.push(Tag::Pad);
        let len = s.len() - 1;

        let mut result = String::new();
        let mut labels = Vec::new();
        let mut i = 2;
        while i <= len {
            let b = s[i - 1];
            let c = s[i];
            let d = if i < len { Some(s[i + 1]) } else { None };
            let d_orig = i < len && tag[i + 1] == Tag::Orig;
            let b_boundary = tag[i - 1] == Tag::Pad || (tag[i - 1] == Tag::Orig && self.punct_or_space(b));

            let mut out = String::new();
            let label: String;

            if let Tag::Eaten(by) = tag[i] {
                label = by.to_string();
            } else if tag[i] == Tag::Shadda {
                out.push(c);
                label = "i".into();
            } else if tag[i] == Tag::Carrier {
                out.push(c);
                label = "h".into();
            } else if tag[i] == Tag::Pad || self.punct_or_space(c) {
                // vowel branch a, else plain lookup
                let dd = if i + 1 < len { Some(s[i + 2]) } else { None };
                let word_opens_with_aa = d == Some(self.alif_vowel) && d_orig && dd == Some(self.alif_vowel) && tag[i + 2] == Tag::Orig;
                let (g, mapped) = self.lookup(c);
                if tag[i] != Tag::Pad {
                    out.push_str(&g);
                }
                let hl = if mapped { "h" } else { "i" };
                if d_orig && self.vowel(d) && !word_opens_with_aa {
                    out.push(ALIF);
                    label = format!("a,{hl}");
                } else {
                    label = hl.into();
                }
            } else if self.consonant(c) {
                let d_vowel = d_orig && self.vowel(d);
                let (g, mapped) = self.lookup(c);
                let hl = if mapped { "h" } else { "i" };
                if d_orig && d == Some(c) {
                    // c) geminate: shadda in place of the second consonant
                    s[i + 1] = SHADDA;
                    tag[i + 1] = Tag::Shadda;
                    out.push_str(&g);
                    label = format!("c,{hl}");
                } else if self.nasals.contains(&c) && !b_boundary {
                    // d) nasal: no diacritic
                    out.push_str(&g);
                    label = format!("d,{hl}");
                } else if tag[i - 1] == Tag::Orig && self.pairs.contains(&(b, c)) && !d_vowel {
                    // e) prenasal, D not a vowel
                    out.push_str(&g);
                    out.push(SHADDA);
                    label = format!("e,{hl}");
                } else if d_orig && self.pairs.contains(&(c, d.unwrap())) {
                    // f) prenasal pair
                    out.push_str(&g);
                    out.push(SHADDA);
                    label = format!("f,{hl}");
                } else if !d_vowel {
                    // g) isolated, no vowel: sukun
                    out.push_str(&g);
                    out.push(SUKUN);
                    label = format!("g,{hl}");
                } else {
                    // h) / i)
                    out.push_str(&g);
                    label = hl.into();
                }
            } else if self.vowel(Some(c)) {
                let (g, mapped) = self.lookup(c);
                let fl = if mapped { "f" } else { "g" };
                let aa = c == self.alif_vowel && d_orig && d == Some(c);
                let lam_before = tag[i - 1] == Tag::Orig && b == self.lam;
                let lam_geminated =
                    tag[i - 1] == Tag::Shadda && i >= 3 && tag[i - 2] == Tag::Orig && s[i - 2] == self.lam;
                if aa && b_boundary {
                    // b) word starting with aa -> madda
                    out.push(MADDA);
                    tag[i + 1] = Tag::Eaten("b");
                    label = "b".into();
                } else if aa && lam_before {
                    // c) lam not geminated, then aa
                    out.push(ALIF);
                    out.push_str(&g);
                    tag[i + 1] = Tag::Eaten("c");
                    label = format!("c,{fl}");
                } else if aa && lam_geminated {
                    // d) geminated lam, then aa
                    out.push(ALIF);
                    out.push_str(&g);
                    tag[i + 1] = Tag::Eaten("d");
                    label = format!("d,{fl}");
                } else if d_orig && d == Some(c) {
                    // e) long vowel: consonant in place of the second vowel
                    s[i + 1] = self.carriers[&c];
                    tag[i + 1] = Tag::Carrier;
                    out.push_str(&g);
                    label = format!("e,{fl}");
                } else {
                    out.push_str(&g);
                    label = fl.into();
                }
            } else {
                let (g, mapped) = self.lookup(c);
                out.push_str(&g);
                label = if mapped { "h" } else { "i" }.into();
            }

            result.push_str(&out);
            labels.push(label);
            i += 1;
        }
        (result, labels)
    }
}
