//! Per-window record of which rule branch fired.
//!
//! Row indices are 1-based positions in the padded string, so a trace of
//! `dëkkandoo` runs from `I = 2` (second leading pad) to `I = 12` (trailing
//! pad).

use std::fmt;
use std::fmt::Write as _;

use crate::marks;

/// A rule branch. Consonant and vowel chains reuse letters, so each variant
/// knows its own label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// Consonant `c`: doubled consonant, the second one becomes shadda.
    Geminate,
    /// Consonant `d`: nasal inside a word, no mark added.
    Nasal,
    /// Consonant `e`: second half of a prenasal pair not followed by a vowel.
    PrenasalClosing,
    /// Consonant `f`: nasal opening a prenasal pair.
    PrenasalPair,
    /// Consonant `g`: no vowel follows, sukun added.
    Isolated,
    /// Consonant `h`: table lookup. Also used for spaces, punctuation and
    /// inserted carrier letters.
    ConsonantLookup,
    /// Consonant `i`: passed through unchanged.
    ConsonantRaw,
    /// Vowel `a`: boundary before a word-initial vowel, alif inserted.
    BoundaryAlif,
    /// Vowel `b`: word-initial doubled alif vowel, written as madda.
    Madda,
    /// Vowel `c`: lam followed by a long alif vowel.
    Lam,
    /// Vowel `d`: geminated lam followed by a long alif vowel.
    LamGeminate,
    /// Vowel `e`: long vowel, the second one becomes a carrier letter.
    LongVowel,
    /// Vowel `f`: table lookup.
    VowelLookup,
    /// Vowel `g`: passed through unchanged.
    VowelRaw,
}

impl Branch {
    pub const ALL: [Branch; 14] = [
        Branch::Geminate,
        Branch::Nasal,
        Branch::PrenasalClosing,
        Branch::PrenasalPair,
        Branch::Isolated,
        Branch::ConsonantLookup,
        Branch::ConsonantRaw,
        Branch::BoundaryAlif,
        Branch::Madda,
        Branch::Lam,
        Branch::LamGeminate,
        Branch::LongVowel,
        Branch::VowelLookup,
        Branch::VowelRaw,
    ];

    pub fn label(self) -> char {
        match self {
            Branch::Geminate => 'c',
            Branch::Nasal => 'd',
            Branch::PrenasalClosing => 'e',
            Branch::PrenasalPair => 'f',
            Branch::Isolated => 'g',
            Branch::ConsonantLookup => 'h',
            Branch::ConsonantRaw => 'i',
            Branch::BoundaryAlif => 'a',
            Branch::Madda => 'b',
            Branch::Lam => 'c',
            Branch::LamGeminate => 'd',
            Branch::LongVowel => 'e',
            Branch::VowelLookup => 'f',
            Branch::VowelRaw => 'g',
        }
    }

    pub fn is_consonant_rule(self) -> bool {
        matches!(
            self,
            Branch::Geminate
                | Branch::Nasal
                | Branch::PrenasalClosing
                | Branch::PrenasalPair
                | Branch::Isolated
                | Branch::ConsonantLookup
                | Branch::ConsonantRaw
        )
    }

    /// Stable name used in statistics output, e.g. `consonant.c`.
    pub fn qualified_name(self) -> String {
        let chain = if self.is_consonant_rule() {
            "consonant"
        } else {
            "vowel"
        };
        format!("{chain}.{}", self.label())
    }
}

/// Content of one cell of the padded working buffer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Pad,
    Text(char),
    /// Written into the buffer by an earlier rule (shadda, carrier).
    Inserted(char),
    /// Absorbed by an earlier rule; emits nothing.
    Consumed,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slot::Pad => f.write_str("␣"),
            Slot::Text(c) => f.write_str(&display_scalar(c)),
            Slot::Inserted(c) => f.write_str(&display_scalar(c)),
            Slot::Consumed => f.write_str("·"),
        }
    }
}

fn display_scalar(c: char) -> String {
    match c {
        ' ' => "␣".into(),
        marks::SHADDA => "shadda".into(),
        marks::SUKUN => "sukun".into(),
        marks::ALIF => "alif".into(),
        marks::WAW => "waw".into(),
        marks::YA => "ya".into(),
        c if (c as u32) <= 0x2FF && !c.is_control() && !is_combining(c) => c.to_string(),
        c => format!("U+{:04X}", c as u32),
    }
}

fn is_combining(c: char) -> bool {
    matches!(c as u32, 0x0300..=0x036F)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanWindow {
    /// 1-based position of `curr` in the padded string.
    pub index: usize,
    pub prev: Slot,
    pub curr: Slot,
    /// `None` past the trailing pad.
    pub next: Option<Slot>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub window: ScanWindow,
    pub branches: Vec<Branch>,
    pub emitted: String,
}

impl TraceRow {
    /// Branch labels joined with commas, e.g. `c,h`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, b) in self.branches.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push(b.label());
        }
        s
    }

    pub fn is_pad(&self) -> bool {
        self.window.curr == Slot::Pad
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTrace {
    pub rows: Vec<TraceRow>,
}

impl RuleTrace {
    pub fn labels(&self) -> Vec<String> {
        self.rows.iter().map(TraceRow::label).collect()
    }

    /// Concatenation of every row's emission; equals the engine output.
    pub fn output(&self) -> String {
        self.rows.iter().map(|r| r.emitted.as_str()).collect()
    }

    /// Aligned text table with columns `I B C D rule output`.
    pub fn render(&self) -> String {
        let mut lines: Vec<[String; 6]> = vec![[
            "I".into(),
            "B".into(),
            "C".into(),
            "D".into(),
            "rule".into(),
            "output".into(),
        ]];
        for row in &self.rows {
            let w = &row.window;
            let output = if row.emitted.is_empty() {
                "-".to_string()
            } else {
                row.emitted
                    .chars()
                    .map(|c| format!("U+{:04X}", c as u32))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            lines.push([
                w.index.to_string(),
                w.prev.to_string(),
                w.curr.to_string(),
                w.next.map(|s| s.to_string()).unwrap_or_default(),
                row.label(),
                output,
            ]);
        }

        let mut widths = [0usize; 6];
        for line in &lines {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for line in &lines {
            let mut rendered = String::new();
            for (i, cell) in line.iter().enumerate() {
                if i + 1 == line.len() {
                    rendered.push_str(cell);
                } else {
                    let pad = widths[i] - cell.chars().count();
                    let _ = write!(rendered, "{cell}{}  ", " ".repeat(pad));
                }
            }
            out.push_str(rendered.trim_end());
            out.push('\n');
        }
        out
    }
}
