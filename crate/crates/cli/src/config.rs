use std::path::PathBuf;

use clap::Parser;
use latin2ajami::{DigitStyle, FinalDot, TranslitOptions};

use crate::error::CliError;

/// Environment variable naming the default data directory.
pub const DATA_ENV: &str = "LATIN2AJAMI_DATA";

/// Transliterate Latin-script Wolof text into Ajami.
///
/// Reads UTF-8 text from the given files (or standard input) and writes the
/// Ajami transliteration. Without --table/--profile, `wolof.glyph` and
/// `wolof.profile` are taken from the directory named by LATIN2AJAMI_DATA.
#[derive(Debug, Parser)]
#[command(name = "latin2ajami", version)]
pub struct Args {
    /// Glyph table file (LATIN_HEX,AJAMI_HEX rows)
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,

    /// Language profile file
    #[arg(long, value_name = "PATH")]
    pub profile: Option<PathBuf>,

    /// Final dot style
    #[arg(long, value_name = "STYLE", default_value = "simple", value_parser = ["simple", "triple"])]
    pub final_dot: String,

    /// Digit style
    #[arg(long, value_name = "STYLE", default_value = "western", value_parser = ["western", "arabic-indic"])]
    pub digits: String,

    /// Insert tatweel between adjacent consonants
    #[arg(long)]
    pub tatweel: bool,

    /// Print the rule trace to standard error (single input only)
    #[arg(long)]
    pub trace: bool,

    /// Print statistics to standard error
    #[arg(long)]
    pub stats: bool,

    /// NFC-normalize input before transliterating
    #[arg(long)]
    pub nfc: bool,

    /// Output file or directory; `-` or absent for standard output
    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Input files; `-` or none for standard input
    #[arg(value_name = "INPUT")]
    pub inputs: Vec<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Stdout,
    Path(PathBuf),
}

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub table_path: PathBuf,
    pub profile_path: PathBuf,
    pub inputs: Vec<Input>,
    pub output: Output,
    pub options: TranslitOptions,
    pub emit_trace: bool,
    pub emit_stats: bool,
    pub nfc: bool,
}

impl CliConfig {
    pub fn from_args(args: Args, data_dir: Option<PathBuf>) -> Result<Self, CliError> {
        let resolve = |given: Option<PathBuf>, file: &str, flag: &str| {
            given
                .or_else(|| data_dir.as_ref().map(|d| d.join(file)))
                .ok_or_else(|| CliError::Usage(format!("--{flag} is required (or set {DATA_ENV})")))
        };
        let table_path = resolve(args.table, "wolof.glyph", "table")?;
        let profile_path = resolve(args.profile, "wolof.profile", "profile")?;

        let mut inputs: Vec<Input> = args
            .inputs
            .into_iter()
            .map(|p| if p.as_os_str() == "-" { Input::Stdin } else { Input::File(p) })
            .collect();
        if inputs.is_empty() {
            inputs.push(Input::Stdin);
        }
        if inputs.iter().filter(|i| **i == Input::Stdin).count() > 1 {
            return Err(CliError::Usage("standard input can be read only once".into()));
        }
        if args.trace && inputs.len() != 1 {
            return Err(CliError::Usage("--trace takes exactly one input".into()));
        }

        let output = match args.output {
            None => Output::Stdout,
            Some(p) if p.as_os_str() == "-" => Output::Stdout,
            Some(p) => Output::Path(p),
        };

        let options = TranslitOptions {
            final_dot: args.final_dot.parse::<FinalDot>().map_err(CliError::Usage)?,
            digit_style: args.digits.parse::<DigitStyle>().map_err(CliError::Usage)?,
            tatweel: args.tatweel,
        };

        Ok(CliConfig {
            table_path,
            profile_path,
            inputs,
            output,
            options,
            emit_trace: args.trace,
            emit_stats: args.stats,
            nfc: args.nfc,
        })
    }
}
