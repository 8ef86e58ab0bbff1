//! The parameterized passes applied before scanning, in fixed order:
//! lowercase fold, final-dot style, digit style, tatweel insertion.

use std::str::FromStr;

use crate::marks;
use crate::profile::LanguageProfile;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum FinalDot {
    #[default]
    Simple,
    /// Every `.` becomes U+061E.
    Triple,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum DigitStyle {
    #[default]
    Western,
    /// U+0660..=U+0669.
    ArabicIndic,
}

impl FromStr for FinalDot {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simple" => Ok(FinalDot::Simple),
            "triple" => Ok(FinalDot::Triple),
            _ => Err(format!("unknown final-dot style `{s}` (simple|triple)")),
        }
    }
}

impl FromStr for DigitStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "western" => Ok(DigitStyle::Western),
            "arabic-indic" => Ok(DigitStyle::ArabicIndic),
            _ => Err(format!("unknown digit style `{s}` (western|arabic-indic)")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TranslitOptions {
    pub final_dot: FinalDot,
    pub digit_style: DigitStyle,
    pub tatweel: bool,
}

const ARABIC_INDIC_OFFSET: u32 = 0x0660 - 0x0030;

/// Simple (1:1) lowercase mapping of every scalar.
pub fn lowercase_fold(text: &str) -> String {
    text.chars().map(simple_lowercase).collect()
}

fn simple_lowercase(c: char) -> char {
    // U+0130 is the only scalar whose full lowercase mapping differs from
    // its simple one ("i̇" vs "i")
    if c == '\u{0130}' {
        return 'i';
    }
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

pub fn apply_final_dot(text: &str, mode: FinalDot) -> String {
    match mode {
        FinalDot::Simple => text.to_string(),
        FinalDot::Triple => text.replace('.', "\u{061E}"),
    }
}

pub fn map_digits(text: &str, style: DigitStyle) -> String {
    match style {
        DigitStyle::Western => text.to_string(),
        DigitStyle::ArabicIndic => text
            .chars()
            .map(|c| {
                if c.is_ascii_digit() {
                    // stays within U+0660..=U+0669
                    char::from_u32(c as u32 + ARABIC_INDIC_OFFSET).unwrap()
                } else {
                    c
                }
            })
            .collect(),
    }
}

/// Inserts U+0640 between every two adjacent profile consonants.
pub fn insert_tatweel(text: &str, profile: &LanguageProfile) -> String {
    let mut out = String::with_capacity(text.len() + text.len() / 4);
    let mut prev_consonant = false;
    for c in text.chars() {
        let consonant = profile.is_consonant(c);
        if consonant && prev_consonant {
            out.push(marks::TATWEEL);
        }
        out.push(c);
        prev_consonant = consonant;
    }
    out
}

/// Runs all four passes in order.
pub fn preprocess(text: &str, profile: &LanguageProfile, options: &TranslitOptions) -> String {
    let text = lowercase_fold(text);
    let text = apply_final_dot(&text, options.final_dot);
    let text = map_digits(&text, options.digit_style);
    if options.tatweel {
        insert_tatweel(&text, profile)
    } else {
        text
    }
}
