//! Plain-text multiplication tables.
//!
//! A table is a grid of whitespace-separated entries, one row per vertex in
//! label order. An entry is `0` or a vertex label. Rows may carry their own
//! label before a `|`, and a header line of column labels may precede them:
//!
//! ```text
//!     1 2 3
//! 1 | 1 0 1
//! 2 | 0 0 0
//! 3 | 1 0 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;
use zdg_core::{Element, MulTable, TableError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableTextError {
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: unknown entry {token:?}")]
    UnknownEntry { line: usize, token: String },
    #[error("line {line}: row labelled {found:?} where {expected:?} was expected")]
    RowLabel { line: usize, expected: String, found: String },
    #[error("line {line}: header does not match the vertex labels")]
    Header { line: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Labels `1..=n`, the default for tables over graph6 inputs.
pub fn numeric_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Parses a grid over `labels`. The table is returned exactly as written;
/// use [`zdg_core::verify_witness`] to check it.
pub fn parse_table(text: &str, labels: &[String]) -> Result<MulTable, TableTextError> {
    let n = labels.len();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let labelled = lines.iter().any(|(_, l)| l.contains('|'));
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        let body = match text.split_once('|') {
            Some((label, body)) => {
                let expected = labels.get(rows.len()).map_or("", String::as_str);
                if label.trim() != expected {
                    return Err(TableTextError::RowLabel {
                        line,
                        expected: expected.to_string(),
                        found: label.trim().to_string(),
                    });
                }
                body
            }
            None if labelled || (rows.is_empty() && is_header(text, labels)) => {
                if !is_header(text, labels) {
                    return Err(TableTextError::Header { line });
                }
                continue;
            }
            None => text,
        };
        let row = parse_row(line, body, labels)?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(TableTextError::RowCount { expected: n, found: rows.len() });
    }
    Ok(MulTable::from_rows(&rows)?)
}

fn is_header(text: &str, labels: &[String]) -> bool {
    // The row of a zero-divisor contains 0, so a line equal to the label
    // list can only be a header.
    text.split_whitespace().eq(labels.iter().map(String::as_str))
}

fn parse_row(line: usize, body: &str, labels: &[String]) -> Result<Vec<Option<Element>>, TableTextError> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != labels.len() {
        return Err(TableTextError::RowLength { line, expected: labels.len(), found: tokens.len() });
    }
    tokens
        .into_iter()
        .map(|tok| {
            parse_entry(tok, labels).ok_or_else(|| TableTextError::UnknownEntry { line, token: tok.to_string() })
        })
        .collect()
}

/// `0` is zero unless it is itself a vertex label.
pub fn parse_entry(token: &str, labels: &[String]) -> Option<Option<Element>> {
    if token == "." || token == "?" {
        return Some(None);
    }
    if let Some(v) = labels.iter().position(|l| l == token) {
        return Some(Some(Element::Vertex(v)));
    }
    (token == "0").then_some(Some(Element::Zero))
}

/// Renders `t` in the labelled form accepted by [`parse_table`]; unassigned
/// entries print as `.`.
pub fn format_table(t: &MulTable, labels: &[String]) -> String {
    let width = labels.iter().map(String::len).max().unwrap_or(1);
    let name = |e: Option<Element>| match e {
        None => ".".to_string(),
        Some(Element::Zero) => "0".to_string(),
        Some(Element::Vertex(v)) => labels[v].clone(),
    };
    let mut out = String::new();
    let _ = write!(out, "{:width$}  ", "");
    for l in labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    for (x, l) in labels.iter().enumerate() {
        let _ = write!(out, "{l:>width$} |");
        for y in 0..labels.len() {
            let _ = write!(out, " {:>width$}", name(t.product(x, y)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(s: &str) -> Vec<String> {
        s.chars().map(String::from).collect()
    }

    #[test]
    fn bare_grid() {
        let t = parse_table("0 1\n1 2\n", &numeric_labels(2)).unwrap();
        assert_eq!(t.product(0, 0), Some(Element::Zero));
        assert_eq!(t.product(0, 1), Some(Element::Vertex(0)));
        assert_eq!(t.product(1, 1), Some(Element::Vertex(1)));
    }

    #[test]
    fn roundtrip() {
        let l = labels("abx");
        let text = "# K2 plus an end\na x b\n\na | a 0 a\nb | 0 b b\nx | a b x\n";
        assert_eq!(parse_table(text, &l), Err(TableTextError::Header { line: 2 }));
        let text = "# K2 plus an end\na b\tx\n\na | a 0 a\nb | 0 b b\nx | a b x\n";
        let t = parse_table(text, &l).unwrap();
        assert_eq!(parse_table(&format_table(&t, &l), &l).unwrap(), t);
    }

    #[test]
    fn header_detection() {
        // First row reads like a header only when it lists the labels.
        let l = numeric_labels(2);
        let t = parse_table("1 2\n0 1\n1 2\n", &l).unwrap();
        assert_eq!(t.product(0, 1), Some(Element::Vertex(0)));
        assert_eq!(parse_table("1 2\n0 1\n", &l), Err(TableTextError::RowCount { expected: 2, found: 1 }));
    }

    #[test]
    fn errors() {
        let l = numeric_labels(2);
        assert_eq!(parse_table("0 1\n1\n", &l), Err(TableTextError::RowLength { line: 2, expected: 2, found: 1 }));
        assert_eq!(parse_table("0 1\n1 q\n", &l), Err(TableTextError::UnknownEntry { line: 2, token: "q".into() }));
        assert!(matches!(parse_table("2 | 0 1\n1 | 1 2\n", &l), Err(TableTextError::RowLabel { line: 1, .. })));
    }

    #[test]
    fn unassigned_entries() {
        let t = parse_table("0 .\n. 2\n", &numeric_labels(2)).unwrap();
        assert_eq!(t.product(0, 1), None);
        assert!(format_table(&t, &numeric_labels(2)).contains(" ."));
    }
}
