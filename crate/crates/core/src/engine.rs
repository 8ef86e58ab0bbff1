//! The windowed rule scanner.
//!
//! The preprocessed text is padded as `␣␣text␣` and scanned one cell at a
//! time from the second leading pad through the trailing pad. At each step
//! the window is (previous, current, next). Consonants run the consonant
//! chain, vowels the vowel chain, and spaces/punctuation the boundary check
//! before falling through to table lookup. The first matching branch wins.
//!
//! Some branches act on the *next* cell of the buffer: a geminate writes a
//! shadda over the second consonant, a long vowel writes its carrier letter
//! over the second vowel, and the madda/lam branches absorb the second `a`.
//! When the scan reaches such a cell it emits what was written there. The
//! index always advances by one.

use std::collections::BTreeMap;

use crate::glyph_table::{GlyphTable, Lookup};
use crate::marks::{ALIF, MADDA_ALIF, SHADDA, SUKUN};
use crate::preprocess::{preprocess, TranslitOptions};
use crate::profile::{CharClass, LanguageProfile};
use crate::trace::{Branch, RuleTrace, ScanWindow, Slot, TraceRow};

/// Pads text the way the scanner sees it: two leading spaces, one trailing.
pub fn pad(text: &str) -> String {
    let mut s = String::with_capacity(text.len() + 3);
    s.push_str("  ");
    s.push_str(text);
    s.push(' ');
    s
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TranslitStats {
    pub input_scalars: usize,
    pub output_scalars: usize,
    /// In-range input scalars with no table entry, passed through unchanged.
    pub unmapped: usize,
    pub branches: BTreeMap<Branch, usize>,
}

impl TranslitStats {
    pub fn merge(&mut self, other: &TranslitStats) {
        self.input_scalars += other.input_scalars;
        self.output_scalars += other.output_scalars;
        self.unmapped += other.unmapped;
        for (b, n) in &other.branches {
            *self.branches.entry(*b).or_default() += n;
        }
    }

    fn count(&mut self, b: Branch) {
        *self.branches.entry(b).or_default() += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transliteration {
    pub text: String,
    pub stats: TranslitStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Pad,
    Text(char),
    /// Shadda written over a geminate's second consonant.
    Mark(char),
    /// Carrier letter written over a long vowel's second vowel.
    Carrier(char),
    Consumed(Branch),
}

impl Cell {
    fn slot(self) -> Slot {
        match self {
            Cell::Pad => Slot::Pad,
            Cell::Text(c) => Slot::Text(c),
            Cell::Mark(c) | Cell::Carrier(c) => Slot::Inserted(c),
            Cell::Consumed(_) => Slot::Consumed,
        }
    }
}

type Fired = (Branch, Option<Branch>);

/// A profile, table and option set bundled for repeated use.
#[derive(Debug, Clone, Copy)]
pub struct Transliterator<'a> {
    profile: &'a LanguageProfile,
    table: &'a GlyphTable,
    options: TranslitOptions,
}

impl<'a> Transliterator<'a> {
    pub fn new(profile: &'a LanguageProfile, table: &'a GlyphTable, options: TranslitOptions) -> Self {
        Transliterator {
            profile,
            table,
            options,
        }
    }

    pub fn profile(&self) -> &'a LanguageProfile {
        self.profile
    }

    pub fn table(&self) -> &'a GlyphTable {
        self.table
    }

    pub fn options(&self) -> TranslitOptions {
        self.options
    }

    pub fn transliterate(&self, text: &str) -> Transliteration {
        self.run(text, None)
    }

    pub fn transliterate_traced(&self, text: &str) -> (Transliteration, RuleTrace) {
        let mut rows = Vec::new();
        let result = self.run(text, Some(&mut rows));
        (result, RuleTrace { rows })
    }

    fn run(&self, text: &str, mut trace: Option<&mut Vec<TraceRow>>) -> Transliteration {
        let prepared = preprocess(text, self.profile, &self.options);

        let mut buf = Vec::with_capacity(prepared.len() + 3);
        buf.extend([Cell::Pad, Cell::Pad]);
        buf.extend(prepared.chars().map(Cell::Text));
        buf.push(Cell::Pad);

        let mut out = String::with_capacity(prepared.len() * 2);
        let mut stats = TranslitStats {
            input_scalars: text.chars().count(),
            ..Default::default()
        };

        for i in 1..buf.len() {
            let start = out.len();
            let window = trace.as_ref().map(|_| ScanWindow {
                index: i + 1,
                prev: buf[i - 1].slot(),
                curr: buf[i].slot(),
                next: buf.get(i + 1).map(|c| c.slot()),
            });

            let (first, second) = self.step(&mut buf, i, &mut out, &mut stats);
            stats.count(first);
            if let Some(b) = second {
                stats.count(b);
            }

            if let (Some(rows), Some(window)) = (trace.as_deref_mut(), window) {
                let mut branches = vec![first];
                branches.extend(second);
                rows.push(TraceRow {
                    window,
                    branches,
                    emitted: out[start..].to_string(),
                });
            }
        }

        stats.output_scalars = out.chars().count();
        Transliteration { text: out, stats }
    }

    fn step(&self, buf: &mut [Cell], i: usize, out: &mut String, stats: &mut TranslitStats) -> Fired {
        match buf[i] {
            Cell::Consumed(by) => (by, None),
            Cell::Mark(c) => {
                out.push(c);
                (Branch::ConsonantRaw, None)
            }
            Cell::Carrier(c) => {
                out.push(c);
                (Branch::ConsonantLookup, None)
            }
            Cell::Pad => self.boundary(buf, i, None, out, stats),
            Cell::Text(c) => match self.profile.classify(c) {
                CharClass::Consonant { nasal } => self.consonant(buf, i, c, nasal, out, stats),
                CharClass::Vowel => self.vowel(buf, i, c, out, stats),
                CharClass::Space | CharClass::Punctuation => {
                    self.boundary(buf, i, Some(c), out, stats)
                }
                CharClass::Digit | CharClass::Other => {
                    (consonant_emission(self.push_glyph(c, out, stats)), None)
                }
            },
        }
    }

    fn consonant(
        &self,
        buf: &mut [Cell],
        i: usize,
        c: char,
        nasal: bool,
        out: &mut String,
        stats: &mut TranslitStats,
    ) -> Fired {
        let prev = buf[i - 1];
        let next = buf.get(i + 1).copied();

        let (action, mark) = if next == Some(Cell::Text(c)) {
            buf[i + 1] = Cell::Mark(SHADDA);
            (Some(Branch::Geminate), None)
        } else if nasal && !self.is_boundary(prev) {
            (Some(Branch::Nasal), None)
        } else if matches!(prev, Cell::Text(p) if self.profile.is_prenasal_pair(p, c))
            && !self.is_vowel(next)
        {
            (Some(Branch::PrenasalClosing), Some(SHADDA))
        } else if matches!(next, Some(Cell::Text(n)) if self.profile.is_prenasal_pair(c, n)) {
            (Some(Branch::PrenasalPair), Some(SHADDA))
        } else if !self.is_vowel(next) {
            (Some(Branch::Isolated), Some(SUKUN))
        } else {
            (None, None)
        };

        let emission = consonant_emission(self.push_glyph(c, out, stats));
        out.extend(mark);
        match action {
            Some(a) => (a, Some(emission)),
            None => (emission, None),
        }
    }

    fn vowel(&self, buf: &mut [Cell], i: usize, v: char, out: &mut String, stats: &mut TranslitStats) -> Fired {
        let prev = buf[i - 1];
        let doubled = buf.get(i + 1) == Some(&Cell::Text(v));

        if doubled && v == self.profile.alif_vowel() {
            let lam = Cell::Text(self.profile.lam());
            if self.is_boundary(prev) {
                out.push(MADDA_ALIF);
                buf[i + 1] = Cell::Consumed(Branch::Madda);
                return (Branch::Madda, None);
            }
            let lam_branch = if prev == lam {
                Some(Branch::Lam)
            } else if prev == Cell::Mark(SHADDA) && i >= 2 && buf[i - 2] == lam {
                Some(Branch::LamGeminate)
            } else {
                None
            };
            if let Some(branch) = lam_branch {
                out.push(ALIF);
                let emission = vowel_emission(self.push_glyph(v, out, stats));
                buf[i + 1] = Cell::Consumed(branch);
                return (branch, Some(emission));
            }
        }

        if doubled {
            // every profile vowel has a carrier
            if let Some(carrier) = self.profile.carrier(v) {
                buf[i + 1] = Cell::Carrier(carrier.letter());
                let emission = vowel_emission(self.push_glyph(v, out, stats));
                return (Branch::LongVowel, Some(emission));
            }
        }

        (vowel_emission(self.push_glyph(v, out, stats)), None)
    }

    /// Spaces, punctuation and pads. A following word-initial vowel gets an
    /// alif carrier, unless the word opens with the doubled alif vowel
    /// (written as a single madda by the vowel chain).
    fn boundary(
        &self,
        buf: &mut [Cell],
        i: usize,
        scalar: Option<char>,
        out: &mut String,
        stats: &mut TranslitStats,
    ) -> Fired {
        let next = buf.get(i + 1).copied();
        let av = Cell::Text(self.profile.alif_vowel());
        let madda_ahead = next == Some(av) && buf.get(i + 2) == Some(&av);
        let alif = self.is_vowel(next) && !madda_ahead;

        let emission = match scalar {
            Some(c) => consonant_emission(self.push_glyph(c, out, stats)),
            // the pad's own image never reaches the output
            None => consonant_emission(self.table.get(' ').is_some()),
        };
        if alif {
            out.push(ALIF);
            (Branch::BoundaryAlif, Some(emission))
        } else {
            (emission, None)
        }
    }

    /// Pushes the table image of `c`, or `c` itself. Returns true if mapped.
    fn push_glyph(&self, c: char, out: &mut String, stats: &mut TranslitStats) -> bool {
        match self.table.lookup(c) {
            Lookup::Mapped(seq) => {
                out.extend(seq.iter());
                true
            }
            Lookup::Unmapped => {
                stats.unmapped += 1;
                out.push(c);
                false
            }
            Lookup::OutOfRange => {
                out.push(c);
                false
            }
        }
    }

    fn is_boundary(&self, cell: Cell) -> bool {
        match cell {
            Cell::Pad => true,
            Cell::Text(c) => matches!(
                self.profile.classify(c),
                CharClass::Space | CharClass::Punctuation
            ),
            _ => false,
        }
    }

    fn is_vowel(&self, cell: Option<Cell>) -> bool {
        matches!(cell, Some(Cell::Text(c)) if self.profile.is_vowel(c))
    }
}

fn consonant_emission(mapped: bool) -> Branch {
    if mapped {
        Branch::ConsonantLookup
    } else {
        Branch::ConsonantRaw
    }
}

fn vowel_emission(mapped: bool) -> Branch {
    if mapped {
        Branch::VowelLookup
    } else {
        Branch::VowelRaw
    }
}

pub fn transliterate(
    text: &str,
    profile: &LanguageProfile,
    table: &GlyphTable,
    options: &TranslitOptions,
) -> Transliteration {
    Transliterator::new(profile, table, *options).transliterate(text)
}

pub fn transliterate_traced(
    text: &str,
    profile: &LanguageProfile,
    table: &GlyphTable,
    options: &TranslitOptions,
) -> (Transliteration, RuleTrace) {
    Transliterator::new(profile, table, *options).transliterate_traced(text)
}
