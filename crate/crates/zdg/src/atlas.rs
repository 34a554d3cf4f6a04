//! Optional map from canonical codes to atlas identifiers such as `G270`.
//!
//! The index is a text file of `<atlas_id> <graph6>` lines. Blank lines and
//! `#` comments are skipped. Graphs may be given under any labeling.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use thiserror::Error;
use zdg_core::{canonical_form, parse_graph6, CanonicalCode};

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected `<atlas_id> <graph6>`")]
    Malformed { line: usize },
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: zdg_core::Graph6Error },
    #[error("line {line}: atlas id {id} already names a different graph")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: graph already indexed as {existing}")]
    DuplicateGraph { line: usize, existing: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtlasIndex {
    by_code: BTreeMap<CanonicalCode, String>,
}

impl AtlasIndex {
    pub fn parse(text: &str) -> Result<Self, AtlasError> {
        let mut by_code: BTreeMap<CanonicalCode, String> = BTreeMap::new();
        let mut by_id: BTreeMap<String, CanonicalCode> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let mut parts = raw.split_whitespace();
            let (Some(id), Some(g6), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(AtlasError::Malformed { line });
            };
            let g = parse_graph6(g6).map_err(|source| AtlasError::Graph6 { line, source })?;
            let code = canonical_form(&g);
            match by_id.get(id) {
                Some(c) if *c == code => continue,
                Some(_) => return Err(AtlasError::DuplicateId { line, id: id.to_string() }),
                None => {}
            }
            if let Some(existing) = by_code.get(&code) {
                return Err(AtlasError::DuplicateGraph { line, existing: existing.clone() });
            }
            by_id.insert(id.to_string(), code.clone());
            by_code.insert(code, id.to_string());
        }
        Ok(AtlasIndex { by_code })
    }

    pub fn lookup(&self, code: &CanonicalCode) -> Option<&str> {
        self.by_code.get(code).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.by_code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_code.is_empty()
    }
}

pub fn ingest_atlas_index(path: &Path) -> Result<AtlasIndex, AtlasError> {
    AtlasIndex::parse(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use zdg_core::{emit_graph6, Graph};

    use super::*;

    #[test]
    fn tags_any_labeling() {
        // K_{1,6} with the center last rather than first.
        let edges: Vec<(usize, usize)> = (0..6).map(|v| (v, 6)).collect();
        let g = Graph::from_edges(7, &edges).unwrap();
        let index = AtlasIndex::parse(&format!("# stars\nG270 {}\n", emit_graph6(&g))).unwrap();
        assert_eq!(index.lookup(&canonical_form(&Graph::star(6).unwrap())), Some("G270"));
        assert_eq!(index.lookup(&canonical_form(&Graph::path(7).unwrap())), None);
    }

    #[test]
    fn empty_index() {
        assert!(AtlasIndex::parse("").unwrap().is_empty());
        assert!(AtlasIndex::parse("\n# nothing\n").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let k2 = emit_graph6(&Graph::complete(2).unwrap());
        let p3 = emit_graph6(&Graph::path(3).unwrap());
        assert!(matches!(AtlasIndex::parse("G1\n"), Err(AtlasError::Malformed { line: 1 })));
        assert!(matches!(AtlasIndex::parse(&format!("\nG1 {k2} x\n")), Err(AtlasError::Malformed { line: 2 })));
        assert!(matches!(AtlasIndex::parse("G1 ~~~\n"), Err(AtlasError::Graph6 { line: 1, .. })));
        let dup = format!("G1 {k2}\nG1 {p3}\n");
        assert!(matches!(AtlasIndex::parse(&dup), Err(AtlasError::DuplicateId { line: 2, .. })));
        let twice = format!("G1 {k2}\nG2 {k2}\n");
        assert!(matches!(AtlasIndex::parse(&twice), Err(AtlasError::DuplicateGraph { line: 2, .. })));
        assert_eq!(AtlasIndex::parse(&format!("G1 {k2}\nG1 {k2}\n")).unwrap().len(), 1);
    }
}
