use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use latin2ajami::{GlyphTable, LanguageProfile, TranslitStats, Transliterator};
use rayon::prelude::*;
use tempfile::NamedTempFile;
use unicode_normalization::UnicodeNormalization;

use crate::config::{CliConfig, Input, Output};
use crate::error::CliError;

const BOM: char = '\u{FEFF}';
const STDIN_NAME: &str = "<stdin>";

pub fn run(cfg: &CliConfig) -> Result<(), CliError> {
    let table = load_table(&cfg.table_path)?;
    let profile = load_profile(&cfg.profile_path)?;
    let mut stderr = io::stderr().lock();
    for warning in table.validate_against_profile(&profile) {
        let _ = writeln!(stderr, "warning: {}: {warning}", cfg.table_path.display());
    }
    drop(stderr);

    let engine = Transliterator::new(&profile, &table, cfg.options);

    // stdin is read up front so file inputs can run in parallel
    let sources: Vec<(Input, String)> = cfg
        .inputs
        .iter()
        .map(|input| read_input(input, cfg.nfc).map(|text| (input.clone(), text)))
        .collect::<Result<_, _>>()?;

    if cfg.emit_trace {
        let (input, text) = &sources[0];
        let (result, trace) = engine.transliterate_traced(text);
        if trace.output() != result.text {
            return Err(CliError::Internal(format!(
                "{}: trace disagrees with output",
                input_name(input)
            )));
        }
        eprint!("{}", trace.render());
    }

    let results: Vec<_> = sources
        .par_iter()
        .map(|(input, text)| (input, engine.transliterate(text)))
        .collect();

    if cfg.emit_stats {
        let mut total = TranslitStats::default();
        for (_, r) in &results {
            total.merge(&r.stats);
        }
        eprint!("{}", format_stats(&total));
    }

    match &cfg.output {
        Output::Stdout => {
            let mut out = io::stdout().lock();
            for (_, r) in &results {
                out.write_all(r.text.as_bytes())
                    .map_err(|e| CliError::io("<stdout>", e))?;
            }
            out.flush().map_err(|e| CliError::io("<stdout>", e))
        }
        Output::Path(dir) if dir.is_dir() => results.par_iter().try_for_each(|(input, r)| {
            write_atomic(&dir.join(output_name(input)), r.text.as_bytes())
        }),
        Output::Path(file) => {
            let joined: String = results.iter().map(|(_, r)| r.text.as_str()).collect();
            write_atomic(file, joined.as_bytes())
        }
    }
}

fn load_table(path: &Path) -> Result<GlyphTable, CliError> {
    let text = read_utf8(path)?;
    GlyphTable::parse(&text, path.display().to_string()).map_err(|source| CliError::Table {
        path: path.to_owned(),
        source,
    })
}

fn load_profile(path: &Path) -> Result<LanguageProfile, CliError> {
    let text = read_utf8(path)?;
    LanguageProfile::parse(&text).map_err(|source| CliError::Profile {
        path: path.to_owned(),
        source,
    })
}

fn read_utf8(path: &Path) -> Result<String, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    decode(path, bytes)
}

fn decode(path: &Path, bytes: Vec<u8>) -> Result<String, CliError> {
    String::from_utf8(bytes).map_err(|e| CliError::InvalidUtf8 {
        path: path.to_owned(),
        offset: e.utf8_error().valid_up_to(),
    })
}

fn read_input(input: &Input, nfc: bool) -> Result<String, CliError> {
    let mut text = match input {
        Input::Stdin => {
            let mut bytes = Vec::new();
            io::stdin()
                .lock()
                .read_to_end(&mut bytes)
                .map_err(|e| CliError::io(STDIN_NAME, e))?;
            decode(Path::new(STDIN_NAME), bytes)?
        }
        Input::File(path) => read_utf8(path)?,
    };
    if text.starts_with(BOM) {
        text.drain(..BOM.len_utf8());
    }
    if nfc {
        text = text.nfc().collect();
    }
    Ok(text)
}

fn input_name(input: &Input) -> String {
    match input {
        Input::Stdin => STDIN_NAME.into(),
        Input::File(p) => p.display().to_string(),
    }
}

/// `notes.txt` becomes `notes.ajami.txt`; standard input becomes `stdin.ajami.txt`.
pub fn output_name(input: &Input) -> PathBuf {
    let stem = match input {
        Input::Stdin => "stdin".into(),
        Input::File(p) => p
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "output".into()),
    };
    PathBuf::from(format!("{stem}.ajami.txt"))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

pub fn format_stats(stats: &TranslitStats) -> String {
    let mut s = format!(
        "input scalars: {}\noutput scalars: {}\nunmapped: {}\n",
        stats.input_scalars, stats.output_scalars, stats.unmapped
    );
    for (branch, n) in &stats.branches {
        s.push_str(&format!("{}: {n}\n", branch.qualified_name()));
    }
    s
}
