//! Data files shipped with the crate.

use crate::glyph_table::{GlyphError, GlyphTable};
use crate::profile::{LanguageProfile, ProfileError};

pub const WOLOF_GLYPH: &str = include_str!("../data/wolof.glyph");
pub const WOLOF_PROFILE: &str = include_str!("../data/wolof.profile");
pub const MINIMAL_PROFILE: &str = include_str!("../data/minimal.profile");
/// One word per line; `#` lines are comments.
pub const WOLOF_LEXICON: &str = include_str!("../data/wolof.lexicon");

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("shipped table: {0}")]
    Table(#[from] GlyphError),
    #[error("shipped profile: {0}")]
    Profile(#[from] ProfileError),
}

/// The shipped Wolof profile and table.
pub fn wolof() -> Result<(LanguageProfile, GlyphTable), DataError> {
    let profile = LanguageProfile::parse(WOLOF_PROFILE)?;
    let table = GlyphTable::parse(WOLOF_GLYPH, "wolof.glyph")?;
    Ok((profile, table))
}

pub fn lexicon() -> impl Iterator<Item = &'static str> {
    WOLOF_LEXICON
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}
