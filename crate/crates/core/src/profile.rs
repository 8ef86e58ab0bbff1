//! Per-language character classification consulted by the rule engine.
//!
//! Profiles are INI-style files:
//!
//! ```text
//! [profile]
//! name = wolof
//! lam = l
//! alif_vowel = a
//!
//! [letters]
//! vowels = a, à, e, é, ë, i, o, ó, u
//! consonants = b, c, d, ...
//! nasals = m, n, ñ, ŋ
//! punctuation = U+002C, ;, ?, .
//!
//! [prenasal]
//! pairs = mb, nd, ng
//!
//! [vv_carrier]
//! a = ALIF
//! o = WAW
//! ```
//!
//! List items are separated by commas; an item is either a literal scalar or
//! `U+XXXX` (needed to list the comma itself).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::marks;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown section [{section}]")]
    UnknownSection { line: usize, section: String },
    #[error("line {line}: unknown key `{key}` in [{section}]")]
    UnknownKey {
        line: usize,
        section: String,
        key: String,
    },
    #[error("line {line}: `{token}` is not a single scalar or U+XXXX code")]
    BadScalar { line: usize, token: String },
    #[error("line {line}: `{token}` is not a two-letter prenasal pair")]
    BadPair { line: usize, token: String },
    #[error("line {line}: unknown carrier `{value}` (expected ALIF, YA or WAW)")]
    UnknownCarrier { line: usize, value: String },
    #[error("U+{cp:04X} ({0}) is listed as both {1} and {2}", cp = *.0 as u32)]
    Overlap(char, &'static str, &'static str),
    #[error("nasal U+{cp:04X} ({0}) is not listed as a consonant", cp = *.0 as u32)]
    NasalNotConsonant(char),
    #[error("prenasal pair {0}{1}: first letter must be a nasal")]
    PairNotNasal(char, char),
    #[error("prenasal pair {0}{1}: second letter must be a consonant")]
    PairNotConsonant(char, char),
    #[error("vowel U+{cp:04X} ({0}) has no vv_carrier entry", cp = *.0 as u32)]
    MissingCarrier(char),
    #[error("vv_carrier entry for U+{cp:04X} ({0}), which is not a vowel", cp = *.0 as u32)]
    CarrierForNonVowel(char),
    #[error("U+{cp:04X} is reserved (whitespace, ASCII digit or tatweel) and cannot be listed", cp = *.0 as u32)]
    Reserved(char),
    #[error("U+{cp:04X} ({0}) is uppercase; profiles list lowercase forms only", cp = *.0 as u32)]
    Uppercase(char),
}

/// The Ajami letter written in place of the second vowel of a long vowel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Carrier {
    Alif,
    Ya,
    Waw,
}

impl Carrier {
    pub fn letter(self) -> char {
        match self {
            Carrier::Alif => marks::ALIF,
            Carrier::Ya => marks::YA,
            Carrier::Waw => marks::WAW,
        }
    }
}

impl FromStr for Carrier {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "ALIF" => Ok(Carrier::Alif),
            "YA" => Ok(Carrier::Ya),
            "WAW" => Ok(Carrier::Waw),
            _ => Err(()),
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Carrier::Alif => "ALIF",
            Carrier::Ya => "YA",
            Carrier::Waw => "WAW",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    Vowel,
    Consonant { nasal: bool },
    Punctuation,
    Space,
    Digit,
    Other,
}

impl CharClass {
    pub fn is_letter(self) -> bool {
        matches!(self, CharClass::Vowel | CharClass::Consonant { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    name: String,
    vowels: BTreeSet<char>,
    consonants: BTreeSet<char>,
    nasals: BTreeSet<char>,
    punctuation: BTreeSet<char>,
    prenasal_pairs: BTreeSet<(char, char)>,
    carriers: BTreeMap<char, Carrier>,
    lam: char,
    alif_vowel: char,
}

/// Space-class scalars. Newlines count so that no rule window sees across a
/// line break as if it were inside a word.
pub fn is_space(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\n' | '\r')
}

impl LanguageProfile {
    pub fn parse(text: &str) -> Result<Self, ProfileError> {
        let mut name = String::from("unnamed");
        let mut lam = 'l';
        let mut alif_vowel = 'a';
        let mut vowels = BTreeSet::new();
        let mut consonants = BTreeSet::new();
        let mut nasals = BTreeSet::new();
        let mut punctuation = BTreeSet::new();
        let mut prenasal_pairs = BTreeSet::new();
        let mut carriers = BTreeMap::new();

        let mut section: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }

            if let Some(rest) = content.strip_prefix('[') {
                let header = rest.strip_suffix(']').ok_or_else(|| ProfileError::Syntax {
                    line,
                    message: format!("unterminated section header `{content}`"),
                })?;
                let header = header.trim();
                match header {
                    "profile" | "letters" | "prenasal" | "vv_carrier" => {
                        section = Some(header.to_string())
                    }
                    _ => {
                        return Err(ProfileError::UnknownSection {
                            line,
                            section: header.to_string(),
                        })
                    }
                }
                continue;
            }

            let (key, value) = content.split_once('=').ok_or_else(|| ProfileError::Syntax {
                line,
                message: format!("expected `key = value`, found `{content}`"),
            })?;
            let key = key.trim();
            let value = value.trim();
            let Some(sect) = section.as_deref() else {
                return Err(ProfileError::Syntax {
                    line,
                    message: "key outside of any section".into(),
                });
            };
            let unknown = || ProfileError::UnknownKey {
                line,
                section: sect.to_string(),
                key: key.to_string(),
            };

            match sect {
                "profile" => match key {
                    "name" => name = value.to_string(),
                    "lam" => lam = parse_scalar(value, line)?,
                    "alif_vowel" => alif_vowel = parse_scalar(value, line)?,
                    _ => return Err(unknown()),
                },
                "letters" => {
                    let target = match key {
                        "vowels" => &mut vowels,
                        "consonants" => &mut consonants,
                        "nasals" => &mut nasals,
                        "punctuation" => &mut punctuation,
                        _ => return Err(unknown()),
                    };
                    for token in list_items(value) {
                        target.insert(parse_scalar(token, line)?);
                    }
                }
                "prenasal" => match key {
                    "pairs" => {
                        for token in list_items(value) {
                            let mut chars = token.chars();
                            match (chars.next(), chars.next(), chars.next()) {
                                (Some(a), Some(b), None) => {
                                    prenasal_pairs.insert((a, b));
                                }
                                _ => {
                                    return Err(ProfileError::BadPair {
                                        line,
                                        token: token.to_string(),
                                    })
                                }
                            }
                        }
                    }
                    _ => return Err(unknown()),
                },
                "vv_carrier" => {
                    let vowel = parse_scalar(key, line)?;
                    let carrier =
                        value
                            .parse::<Carrier>()
                            .map_err(|_| ProfileError::UnknownCarrier {
                                line,
                                value: value.to_string(),
                            })?;
                    carriers.insert(vowel, carrier);
                }
                _ => unreachable!("section names are checked on entry"),
            }
        }

        let profile = LanguageProfile {
            name,
            vowels,
            consonants,
            nasals,
            punctuation,
            prenasal_pairs,
            carriers,
            lam,
            alif_vowel,
        };
        profile.check()?;
        Ok(profile)
    }

    fn check(&self) -> Result<(), ProfileError> {
        let named: [(&'static str, &BTreeSet<char>); 3] = [
            ("vowel", &self.vowels),
            ("consonant", &self.consonants),
            ("punctuation", &self.punctuation),
        ];
        for set in [&self.vowels, &self.consonants, &self.punctuation, &self.nasals] {
            for &c in set {
                if is_space(c) || c.is_ascii_digit() || c == marks::TATWEEL {
                    return Err(ProfileError::Reserved(c));
                }
                if c.is_uppercase() {
                    return Err(ProfileError::Uppercase(c));
                }
            }
        }
        for (i, (a_name, a)) in named.iter().enumerate() {
            for (b_name, b) in &named[i + 1..] {
                if let Some(&c) = a.intersection(b).next() {
                    return Err(ProfileError::Overlap(c, a_name, b_name));
                }
            }
        }
        if let Some(&c) = self.nasals.difference(&self.consonants).next() {
            return Err(ProfileError::NasalNotConsonant(c));
        }
        for &(first, second) in &self.prenasal_pairs {
            if !self.nasals.contains(&first) {
                return Err(ProfileError::PairNotNasal(first, second));
            }
            if !self.consonants.contains(&second) {
                return Err(ProfileError::PairNotConsonant(first, second));
            }
        }
        if let Some(&v) = self.vowels.iter().find(|v| !self.carriers.contains_key(v)) {
            return Err(ProfileError::MissingCarrier(v));
        }
        if let Some(&c) = self.carriers.keys().find(|c| !self.vowels.contains(c)) {
            return Err(ProfileError::CarrierForNonVowel(c));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vowels(&self) -> &BTreeSet<char> {
        &self.vowels
    }

    pub fn consonants(&self) -> &BTreeSet<char> {
        &self.consonants
    }

    pub fn nasals(&self) -> &BTreeSet<char> {
        &self.nasals
    }

    pub fn punctuation(&self) -> &BTreeSet<char> {
        &self.punctuation
    }

    pub fn prenasal_pairs(&self) -> &BTreeSet<(char, char)> {
        &self.prenasal_pairs
    }

    /// The Latin letter whose Ajami image is lam.
    pub fn lam(&self) -> char {
        self.lam
    }

    /// The vowel written with alif: word-initial doubling becomes madda and
    /// the lam rules look for it.
    pub fn alif_vowel(&self) -> char {
        self.alif_vowel
    }

    pub fn carrier(&self, vowel: char) -> Option<Carrier> {
        self.carriers.get(&vowel).copied()
    }

    pub fn classify(&self, c: char) -> CharClass {
        if is_space(c) {
            CharClass::Space
        } else if c.is_ascii_digit() {
            CharClass::Digit
        } else if self.vowels.contains(&c) {
            CharClass::Vowel
        } else if self.consonants.contains(&c) {
            CharClass::Consonant {
                nasal: self.nasals.contains(&c),
            }
        } else if self.punctuation.contains(&c) {
            CharClass::Punctuation
        } else {
            CharClass::Other
        }
    }

    pub fn is_vowel(&self, c: char) -> bool {
        self.vowels.contains(&c)
    }

    pub fn is_consonant(&self, c: char) -> bool {
        self.consonants.contains(&c)
    }

    pub fn is_prenasal_pair(&self, first: char, second: char) -> bool {
        self.prenasal_pairs.contains(&(first, second))
    }
}

fn strip_comment(line: &str) -> &str {
    // only whole-line comments, so '#' can still be listed as punctuation
    if line.trim_start().starts_with('#') {
        ""
    } else {
        line
    }
}

fn list_items(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn parse_scalar(token: &str, line: usize) -> Result<char, ProfileError> {
    let bad = || ProfileError::BadScalar {
        line,
        token: token.to_string(),
    };
    if let Some(hex) = token
        .strip_prefix("U+")
        .or_else(|| token.strip_prefix("u+"))
    {
        if hex.is_empty() || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(bad());
        }
        let value = u32::from_str_radix(hex, 16).map_err(|_| bad())?;
        return char::from_u32(value).ok_or_else(bad);
    }
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "\
[letters]
vowels = a
consonants = b
nasals =
[vv_carrier]
a = ALIF
[profile]
lam = l
";

    #[test]
    fn minimal_loads() {
        let p = LanguageProfile::parse(MINIMAL).unwrap();
        assert_eq!(p.name(), "unnamed");
        assert_eq!(p.lam(), 'l');
        assert!(p.is_vowel('a'));
        assert!(p.is_consonant('b'));
        assert!(p.nasals().is_empty());
        assert_eq!(p.carrier('a'), Some(Carrier::Alif));
    }

    #[test]
    fn overlap_rejected() {
        let err = LanguageProfile::parse(
            "[letters]\nvowels = a, m\nconsonants = m\n[vv_carrier]\na=ALIF\nm=ALIF\n",
        )
        .unwrap_err();
        assert_eq!(err, ProfileError::Overlap('m', "vowel", "consonant"));
    }

    #[test]
    fn invariant_errors() {
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = b\nnasals = m\n").unwrap_err(),
            ProfileError::NasalNotConsonant('m')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nvowels = a\n").unwrap_err(),
            ProfileError::MissingCarrier('a')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = b, d\n[prenasal]\npairs = bd\n")
                .unwrap_err(),
            ProfileError::PairNotNasal('b', 'd')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = m\nnasals = m\n[prenasal]\npairs = mx\n")
                .unwrap_err(),
            ProfileError::PairNotConsonant('m', 'x')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = b\n[vv_carrier]\nb = WAW\n").unwrap_err(),
            ProfileError::CarrierForNonVowel('b')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = B\n").unwrap_err(),
            ProfileError::Uppercase('B')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\nconsonants = U+0640\n").unwrap_err(),
            ProfileError::Reserved('\u{0640}')
        );
        assert_eq!(
            LanguageProfile::parse("[letters]\npunctuation = 1\n").unwrap_err(),
            ProfileError::Reserved('1')
        );
    }

    #[test]
    fn unknown_key_and_section() {
        assert!(matches!(
            LanguageProfile::parse("[letters]\nsemivowels = w\n"),
            Err(ProfileError::UnknownKey { line: 2, .. })
        ));
        assert!(matches!(
            LanguageProfile::parse("[tones]\n"),
            Err(ProfileError::UnknownSection { line: 1, .. })
        ));
        assert!(matches!(
            LanguageProfile::parse("vowels = a\n"),
            Err(ProfileError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            LanguageProfile::parse("[letters]\nvowels = ab\n"),
            Err(ProfileError::BadScalar { line: 2, .. })
        ));
        assert!(matches!(
            LanguageProfile::parse("[vv_carrier]\na = HAMZA\n"),
            Err(ProfileError::UnknownCarrier { line: 2, .. })
        ));
    }

    #[test]
    fn hex_items_and_hash_punctuation() {
        let p = LanguageProfile::parse("[letters]\n# comment\npunctuation = U+002C, #, ;\n")
            .unwrap();
        assert_eq!(
            p.punctuation().iter().copied().collect::<Vec<_>>(),
            vec!['#', ',', ';']
        );
    }

    #[test]
    fn classify_partition() {
        let p = LanguageProfile::parse(
            "[letters]\nvowels = a\nconsonants = b, m\nnasals = m\npunctuation = ?\n[vv_carrier]\na = ALIF\n",
        )
        .unwrap();
        assert_eq!(p.classify('a'), CharClass::Vowel);
        assert_eq!(p.classify('b'), CharClass::Consonant { nasal: false });
        assert_eq!(p.classify('m'), CharClass::Consonant { nasal: true });
        assert_eq!(p.classify('?'), CharClass::Punctuation);
        assert_eq!(p.classify('%'), CharClass::Other);
        assert_eq!(p.classify(' '), CharClass::Space);
        assert_eq!(p.classify('\t'), CharClass::Space);
        assert_eq!(p.classify('\n'), CharClass::Space);
        assert_eq!(p.classify('7'), CharClass::Digit);
        assert_eq!(p.classify(marks::TATWEEL), CharClass::Other);
    }
}
