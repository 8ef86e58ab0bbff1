//! The Latin → Ajami codepoint correspondence table.
//!
//! The table is a dense array indexed by the Latin scalar value, covering
//! `U+0000..=U+02FF`. Each populated slot holds a short sequence of output
//! scalars (a base letter, a combining mark, or both). Everything above
//! `U+02FF` bypasses the table.
//!
//! On disk the table is a line-oriented text file:
//!
//! ```text
//! # comment
//! 2C,60C          # , -> ،
//! 61,64E          # a -> fatha
//! E0,E004         # à -> private-use vowel mark
//! ```
//!
//! Hex digits are case-insensitive, carry no `0x`/`U+` prefix, and multiple
//! output scalars are separated with `;`.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::profile::LanguageProfile;

/// Number of slots in the table (`U+0000..=U+02FF`).
pub const TABLE_SIZE: usize = 0x300;

/// Highest Latin scalar the table can map.
pub const TABLE_MAX: u32 = (TABLE_SIZE - 1) as u32;

/// Longest output sequence a single row may carry.
pub const MAX_OUTPUT_LEN: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlyphError {
    #[error("line {line}: expected `LATIN_HEX,AJAMI_HEX[;AJAMI_HEX...]`, found `{text}`")]
    MalformedRow { line: usize, text: String },
    #[error("line {line}: malformed hex value `{text}`")]
    BadHex { line: usize, text: String },
    #[error("line {line}: {value:X} is not a Unicode scalar value")]
    InvalidScalar { line: usize, value: u32 },
    #[error("line {line}: U+{value:04X} is above the table bound U+02FF")]
    OutOfRange { line: usize, value: u32 },
    #[error("line {line}: duplicate mapping for U+{value:04X} (first defined on line {first})")]
    Duplicate { line: usize, first: usize, value: u32 },
    #[error("line {line}: empty Ajami output for U+{value:04X}")]
    EmptyOutput { line: usize, value: u32 },
    #[error("line {line}: output for U+{value:04X} has {len} scalars, at most 4 allowed")]
    OutputTooLong { line: usize, value: u32, len: usize },
}

/// One parsed table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlyphRow {
    pub latin: char,
    pub ajami: Vec<char>,
}

impl fmt::Display for GlyphRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:X},", self.latin as u32)?;
        for (i, c) in self.ajami.iter().enumerate() {
            if i > 0 {
                f.write_char(';')?;
            }
            write!(f, "{:X}", *c as u32)?;
        }
        Ok(())
    }
}

/// Result of a table lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup<'a> {
    Mapped(&'a [char]),
    /// In range but no row for it.
    Unmapped,
    /// Above `U+02FF`; the caller passes it through.
    OutOfRange,
}

/// A coverage gap found by [`GlyphTable::validate_against_profile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageWarning {
    pub scalar: char,
    pub class: &'static str,
}

impl fmt::Display for CoverageWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cp = self.scalar as u32;
        if cp > TABLE_MAX {
            write!(f, "{} U+{cp:04X} ({}) is above the table bound", self.class, self.scalar)
        } else {
            write!(f, "{} U+{cp:04X} ({}) has no table entry", self.class, self.scalar)
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GlyphTable {
    entries: Vec<Option<Box<[char]>>>,
    source_name: String,
}

impl fmt::Debug for GlyphTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GlyphTable")
            .field("source_name", &self.source_name)
            .field("populated", &self.populated())
            .finish()
    }
}

impl GlyphTable {
    /// Parses table file contents. `source_name` is only used for diagnostics.
    pub fn parse(text: &str, source_name: impl Into<String>) -> Result<Self, GlyphError> {
        let mut entries: Vec<Option<Box<[char]>>> = vec![None; TABLE_SIZE];
        let mut first_line = vec![0usize; TABLE_SIZE];

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let Some(row) = parse_row(raw, line)? else {
                continue;
            };
            let slot = row.latin as usize;
            if entries[slot].is_some() {
                return Err(GlyphError::Duplicate {
                    line,
                    first: first_line[slot],
                    value: row.latin as u32,
                });
            }
            first_line[slot] = line;
            entries[slot] = Some(row.ajami.into_boxed_slice());
        }

        Ok(GlyphTable {
            entries,
            source_name: source_name.into(),
        })
    }

    /// Builds a table from already-validated rows. Later rows for the same
    /// scalar are rejected like in [`GlyphTable::parse`].
    pub fn from_rows<I>(rows: I, source_name: impl Into<String>) -> Result<Self, GlyphError>
    where
        I: IntoIterator<Item = GlyphRow>,
    {
        let mut text = String::new();
        for row in rows {
            let _ = writeln!(text, "{row}");
        }
        Self::parse(&text, source_name)
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn lookup(&self, c: char) -> Lookup<'_> {
        match self.entries.get(c as usize) {
            Some(Some(seq)) => Lookup::Mapped(seq),
            Some(None) => Lookup::Unmapped,
            None => Lookup::OutOfRange,
        }
    }

    /// The mapped output for `c`, if any.
    pub fn get(&self, c: char) -> Option<&[char]> {
        match self.lookup(c) {
            Lookup::Mapped(seq) => Some(seq),
            _ => None,
        }
    }

    pub fn populated(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// Populated rows in ascending Latin order.
    pub fn rows(&self) -> impl Iterator<Item = GlyphRow> + '_ {
        self.entries.iter().enumerate().filter_map(|(i, e)| {
            e.as_ref().map(|seq| GlyphRow {
                // every index is below 0x300, so never a surrogate
                latin: char::from_u32(i as u32).unwrap(),
                ajami: seq.to_vec(),
            })
        })
    }

    /// Serializes to the table file format; re-parsing yields the same entries.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.source_name);
        for row in self.rows() {
            let _ = writeln!(out, "{row}");
        }
        out
    }

    /// Lists every profile letter or punctuation mark with no populated entry.
    pub fn validate_against_profile(&self, profile: &LanguageProfile) -> Vec<CoverageWarning> {
        let classes: [(&'static str, _); 3] = [
            ("vowel", profile.vowels()),
            ("consonant", profile.consonants()),
            ("punctuation", profile.punctuation()),
        ];
        let mut warnings = Vec::new();
        for (class, set) in classes {
            for &scalar in set {
                if self.get(scalar).is_none() {
                    warnings.push(CoverageWarning { scalar, class });
                }
            }
        }
        warnings
    }
}

fn parse_row(raw: &str, line: usize) -> Result<Option<GlyphRow>, GlyphError> {
    let content = match raw.find('#') {
        Some(pos) => &raw[..pos],
        None => raw,
    };
    // `lines()` leaves the '\r' of CRLF endings on the line
    let content = content.trim();
    if content.is_empty() {
        return Ok(None);
    }

    let malformed = || GlyphError::MalformedRow {
        line,
        text: content.to_string(),
    };
    let (latin, ajami) = content.split_once(',').ok_or_else(malformed)?;
    if ajami.contains(',') {
        return Err(malformed());
    }

    let latin_value = parse_hex(latin.trim(), line)?;
    if latin_value > TABLE_MAX {
        return Err(GlyphError::OutOfRange {
            line,
            value: latin_value,
        });
    }
    let latin = char::from_u32(latin_value).ok_or(GlyphError::InvalidScalar {
        line,
        value: latin_value,
    })?;

    let ajami = ajami.trim();
    if ajami.is_empty() {
        return Err(GlyphError::EmptyOutput {
            line,
            value: latin_value,
        });
    }
    let mut seq = Vec::new();
    for part in ajami.split(';') {
        let part = part.trim();
        if part.is_empty() {
            return Err(GlyphError::EmptyOutput {
                line,
                value: latin_value,
            });
        }
        let value = parse_hex(part, line)?;
        let c = char::from_u32(value).ok_or(GlyphError::InvalidScalar { line, value })?;
        seq.push(c);
    }
    if seq.len() > MAX_OUTPUT_LEN {
        return Err(GlyphError::OutputTooLong {
            line,
            value: latin_value,
            len: seq.len(),
        });
    }

    Ok(Some(GlyphRow { latin, ajami: seq }))
}

fn parse_hex(text: &str, line: usize) -> Result<u32, GlyphError> {
    let bad = || GlyphError::BadHex {
        line,
        text: text.to_string(),
    };
    // from_str_radix alone would accept a leading '+'
    if text.is_empty() || text.len() > 6 || !text.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(bad());
    }
    u32::from_str_radix(text, 16).map_err(|_| bad())
}
