//! Instance files: one string per line, `#` starts a comment line, blank
//! lines are skipped. Strings are printable ASCII without whitespace.

use std::fmt;
use std::fs;
use std::path::Path;

use scs_core::Text;

#[derive(Debug)]
pub enum InputError {
    Io(std::io::Error),
    NotUtf8,
    BadSymbol { line: usize, column: usize },
    Empty,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(e) => write!(f, "cannot read input: {e}"),
            InputError::NotUtf8 => f.write_str("input is not UTF-8"),
            InputError::BadSymbol { line, column } => {
                write!(f, "line {line}, column {column}: only printable non-whitespace ASCII is allowed")
            }
            InputError::Empty => f.write_str("input contains no strings"),
        }
    }
}

impl std::error::Error for InputError {}

pub fn parse_instance(src: &str) -> Result<Vec<Text>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(col) = line.bytes().position(|b| !b.is_ascii_graphic()) {
            return Err(InputError::BadSymbol { line: i + 1, column: col + 1 });
        }
        out.push(line.as_bytes().to_vec());
    }
    if out.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(out)
}

pub fn read_instance(path: &Path) -> Result<Vec<Text>, InputError> {
    let bytes = fs::read(path).map_err(InputError::Io)?;
    let src = String::from_utf8(bytes).map_err(|_| InputError::NotUtf8)?;
    parse_instance(&src)
}

pub fn render_instance(strings: &[Text]) -> String {
    let mut out = String::new();
    for s in strings {
        out.push_str(&String::from_utf8_lossy(s));
        out.push('\n');
    }
    out
}
