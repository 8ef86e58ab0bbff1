//! Arabic-block scalars the rule engine writes directly.

pub const SHADDA: char = '\u{0651}';
pub const SUKUN: char = '\u{0652}';
pub const ALIF: char = '\u{0627}';
pub const MADDA_ALIF: char = '\u{0622}';
pub const FATHA: char = '\u{064E}';
pub const WAW: char = '\u{0648}';
pub const YA: char = '\u{064A}';
pub const TATWEEL: char = '\u{0640}';

/// ARABIC TRIPLE DOT PUNCTUATION MARK, used for the triple final dot.
pub const TRIPLE_DOT: char = '\u{061E}';
