//! Rule-based transliteration of Latin-script Wolof (and related languages)
//! into Arabic-script Ajami.
//!
//! The pipeline has three data-driven pieces:
//!
//! * a [`GlyphTable`] mapping Latin scalars `U+0000..=U+02FF` to Ajami output,
//! * a [`LanguageProfile`] classifying letters (vowels, nasals, prenasal
//!   pairs, long-vowel carriers),
//! * [`TranslitOptions`] for the preprocessing passes.
//!
//! ```
//! use latin2ajami::{data, transliterate, TranslitOptions};
//!
//! let (profile, table) = data::wolof().unwrap();
//! let out = transliterate(",", &profile, &table, &TranslitOptions::default());
//! assert_eq!(out.text, "\u{060C}");
//! ```

pub mod data;
pub mod engine;
pub mod glyph_table;
pub mod marks;
pub mod preprocess;
pub mod profile;
pub mod trace;

pub use engine::{pad, transliterate, transliterate_traced, Transliteration, TranslitStats, Transliterator};
pub use glyph_table::{CoverageWarning, GlyphError, GlyphRow, GlyphTable, Lookup};
pub use preprocess::{DigitStyle, FinalDot, TranslitOptions};
pub use profile::{Carrier, CharClass, LanguageProfile, ProfileError};
pub use trace::{Branch, RuleTrace, ScanWindow, Slot, TraceRow};
