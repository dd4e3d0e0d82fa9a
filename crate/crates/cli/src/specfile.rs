//! Reading and writing `.spec` input documents (TOML).

use std::path::Path;

use ncreflect_core::input::{InputSpec, LoadError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{origin}: cannot read: {message}")]
    Io { origin: String, message: String },
    #[error("{origin}:{line}:{column}: syntax error: {message}")]
    Syntax {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// Shape errors carry a JSON-pointer path and, when known, a position.
    #[error("{origin}{}: schema error at {pointer}: {message}", position.map(|(l, c)| format!(":{l}:{c}")).unwrap_or_default())]
    Schema {
        origin: String,
        pointer: String,
        position: Option<(usize, usize)>,
        message: String,
    },
}

/// 1-based line and column of a byte offset.
pub fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

/// `action.generators[0].matrix` → `/action/generators/0/matrix`.
pub fn pointer(path: &str) -> String {
    if path.is_empty() || path == "." {
        return "/".into();
    }
    let mut out = String::new();
    for part in path.split('.') {
        let mut rest = part;
        if let Some(k) = rest.find('[') {
            if k > 0 {
                out.push('/');
                out.push_str(&rest[..k]);
            }
            rest = &rest[k..];
            while let Some(stripped) = rest.strip_prefix('[') {
                let end = stripped.find(']').unwrap_or(stripped.len());
                out.push('/');
                out.push_str(&stripped[..end]);
                rest = stripped.get(end + 1..).unwrap_or("");
            }
        } else {
            out.push('/');
            out.push_str(rest);
        }
    }
    out
}

/// Parse a document and check its shape; unknown keys are rejected.
pub fn parse_str(text: &str, origin: &str) -> Result<InputSpec, SpecError> {
    let de = toml::Deserializer::parse(text).map_err(|e| {
        let (line, column) = line_column(text, e.span().map_or(0, |s| s.start));
        SpecError::Syntax {
            origin: origin.into(),
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer(&e.path().to_string());
        let inner = e.into_inner();
        SpecError::Schema {
            origin: origin.into(),
            pointer,
            position: inner.span().map(|s| line_column(text, s.start)),
            message: inner.message().trim().to_string(),
        }
    })
}

pub fn read(path: &Path) -> Result<InputSpec, SpecError> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        origin: origin.clone(),
        message: e.to_string(),
    })?;
    parse_str(&text, &origin)
}

/// Serialize a spec as a document accepted by [`parse_str`]. Arrays of arrays
/// are written one inner array per line.
pub fn to_string(spec: &InputSpec) -> String {
    layout(&toml::to_string(spec).expect("input specs serialize"))
}

/// Break long array values of a compact TOML document into one element per line.
pub fn layout(compact: &str) -> String {
    let mut out = String::new();
    for line in compact.lines() {
        out.push_str(&reflow(line));
        out.push('\n');
    }
    out
}

/// Top-level elements of the array literal in `s` (which starts with `[`), if it is one.
fn split_array(s: &str) -> Option<Vec<&str>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    let mut parts = Vec::new();
    let (mut depth, mut quoted, mut start) = (0i32, false, 0);
    for (k, c) in inner.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '[' | '{' if !quoted => depth += 1,
            ']' | '}' if !quoted => depth -= 1,
            ',' if !quoted && depth == 0 => {
                parts.push(inner[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    let last = inner[start..].trim();
    if !last.is_empty() {
        parts.push(last);
    }
    Some(parts)
}

fn reflow(line: &str) -> String {
    const WIDTH: usize = 100;
    let Some((key, value)) = line.split_once(" = ") else {
        return line.to_string();
    };
    if line.len() <= WIDTH {
        return line.to_string();
    }
    match split_array(value.trim()) {
        Some(parts) if !parts.is_empty() => {
            let mut out = format!("{key} = [\n");
            for p in parts {
                out.push_str(&format!("    {p},\n"));
            }
            out.push(']');
            out
        }
        _ => line.to_string(),
    }
}

/// Translate a semantic load error into a spec error with a pointer path.
pub fn load_error(origin: &str, e: &LoadError) -> Option<SpecError> {
    match e {
        LoadError::Schema { path, message } => Some(SpecError::Schema {
            origin: origin.into(),
            pointer: pointer(path),
            position: None,
            message: message.clone(),
        }),
        LoadError::Verification(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointers() {
        assert_eq!(
            pointer("action.generators[0].matrix"),
            "/action/generators/0/matrix"
        );
        assert_eq!(pointer("action.table[1][2]"), "/action/table/1/2");
        assert_eq!(pointer("options.nakayama.u"), "/options/nakayama/u");
        assert_eq!(pointer(""), "/");
    }

    #[test]
    fn positions() {
        assert_eq!(line_column("ab\ncd", 0), (1, 1));
        assert_eq!(line_column("ab\ncd", 4), (2, 2));
    }
}
