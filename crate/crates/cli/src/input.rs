//! Reading graphs from the command line and from graph6 corpus files.

use std::fs;
use std::path::Path;

use isolation_core::{parse_graph6, Graph};

use crate::CliError;

/// A graph together with the graph6 text it was read from.
pub struct Named {
    pub id: String,
    pub graph: Graph,
}

const HEADER: &str = ">>graph6<<";

/// Parses graph6 lines, skipping blank lines and an optional header.
/// Errors name the 1-based line number.
pub fn parse_corpus(text: &str, source: &str) -> Result<Vec<Named>, CliError> {
    let mut out = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let graph =
            parse_graph6(line).map_err(|e| CliError::Parse(format!("{source}:{}: {e}: {line:?}", index + 1)))?;
        out.push(Named { id: line.to_string(), graph });
    }
    Ok(out)
}

pub fn read_corpus(path: &Path) -> Result<Vec<Named>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_corpus(&text, &path.display().to_string())
}

/// An existing file is read as a corpus; anything else is parsed as a
/// single graph6 string.
pub fn graphs_from_arg(arg: &str) -> Result<Vec<Named>, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_corpus(path);
    }
    parse_corpus(arg, "argument").and_then(|graphs| {
        if graphs.is_empty() {
            Err(CliError::Parse("empty graph argument".into()))
        } else {
            Ok(graphs)
        }
    })
}
