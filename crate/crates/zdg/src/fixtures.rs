//! Transcribed example graphs with their expected verdicts.
//!
//! Each fixture is a TOML file:
//!
//! ```toml
//! name = "G319"
//! expected = "ZDG"
//! note = "optional free text"
//! labels = ["1", "2", "3", "4", "5", "6", "7"]
//! adjacency = ["1: 2 3", "2: 1 4", ...]
//! table_trusted = true
//! table = ["1 0 0 4 4 4 4", ...]
//! ```
//!
//! Adjacency lines must list every label once, in `labels` order, and must
//! be symmetric. The optional table rows follow the same order.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;
use zdg_core::{classify, verify_witness, Category, ClassifyOptions, Graph, MulTable, VertexSet};

use crate::table_text::{parse_table, TableTextError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Toml { path: PathBuf, source: toml::de::Error },
    #[error("{name}: {reason}")]
    Invalid { name: String, reason: String },
    #[error("bad fixture pattern: {0}")]
    Pattern(#[from] glob::PatternError),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    name: String,
    expected: String,
    note: Option<String>,
    labels: Vec<String>,
    adjacency: Vec<String>,
    table: Option<Vec<String>>,
    #[serde(default)]
    table_trusted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceTable {
    /// Exactly as transcribed; may fail verification.
    pub table: MulTable,
    pub trusted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: String,
    pub labels: Vec<String>,
    pub graph: Graph,
    pub expected: Category,
    pub note: Option<String>,
    pub table: Option<SourceTable>,
}

impl FixtureEntry {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let file: FixtureFile =
            toml::from_str(text).map_err(|source| FixtureError::Toml { path: PathBuf::new(), source })?;
        let invalid = |reason: String| FixtureError::Invalid { name: file.name.clone(), reason };
        let expected = Category::from_name(&file.expected)
            .ok_or_else(|| invalid(format!("unknown verdict {:?}", file.expected)))?;
        let labels = &file.labels;
        if file.adjacency.len() != labels.len() {
            return Err(invalid(format!("{} labels but {} adjacency lines", labels.len(), file.adjacency.len())));
        }
        let index = |l: &str| labels.iter().position(|m| m == l);
        let mut rows = Vec::with_capacity(labels.len());
        for (label, line) in labels.iter().zip(&file.adjacency) {
            let (head, rest) = line.split_once(':').ok_or_else(|| invalid(format!("missing ':' in {line:?}")))?;
            if head.trim() != label {
                return Err(invalid(format!("adjacency line {line:?} out of order, expected {label}")));
            }
            let mut set = VertexSet::EMPTY;
            for tok in rest.split_whitespace() {
                set.insert(index(tok).ok_or_else(|| invalid(format!("unknown neighbor {tok:?} of {label}")))?);
            }
            rows.push(set);
        }
        let graph = Graph::from_neighborhoods(&rows).map_err(|e| {
            invalid(match e {
                zdg_core::GraphError::Asymmetric { u, v } => {
                    format!("{} lists {} but not the other way round", labels[u], labels[v])
                }
                e => e.to_string(),
            })
        })?;
        let table = match &file.table {
            None => None,
            Some(rows) => {
                let t = parse_table(&rows.join("\n"), labels)
                    .map_err(|e: TableTextError| invalid(format!("table: {e}")))?;
                Some(SourceTable { table: t, trusted: file.table_trusted })
            }
        };
        Ok(FixtureEntry { name: file.name, labels: file.labels, graph, expected, note: file.note, table })
    }

    pub fn load(path: &Path) -> Result<Self, FixtureError> {
        let text = fs::read_to_string(path).map_err(|source| FixtureError::Io { path: path.into(), source })?;
        FixtureEntry::parse(&text).map_err(|e| match e {
            FixtureError::Toml { source, .. } => FixtureError::Toml { path: path.into(), source },
            e => e,
        })
    }
}

/// The corpus shipped with this crate.
pub fn default_pattern() -> String {
    format!("{}/fixtures/*.toml", env!("CARGO_MANIFEST_DIR"))
}

/// Loads every fixture matching `pattern`, in path order.
pub fn load_fixtures(pattern: &str) -> Result<Vec<FixtureEntry>, FixtureError> {
    let mut paths: Vec<PathBuf> = glob::glob(pattern)?.filter_map(Result::ok).collect();
    paths.sort();
    paths.iter().map(|p| FixtureEntry::load(p)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableCheck {
    Absent,
    Verified,
    /// The transcribed table fails; the reason names the first violation.
    Discrepancy(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: String,
    pub expected: Category,
    pub got: Option<Category>,
    pub method: String,
    pub trusted: bool,
    pub table: TableCheck,
}

impl FixtureOutcome {
    pub fn verdict_ok(&self) -> bool {
        self.got == Some(self.expected)
    }

    /// A failing table only counts against the fixture when it is trusted.
    pub fn passed(&self) -> bool {
        self.verdict_ok() && !(self.trusted && matches!(self.table, TableCheck::Discrepancy(_)))
    }
}

pub fn check_table(g: &Graph, labels: &[String], t: &MulTable) -> TableCheck {
    match verify_witness(g, t) {
        Ok(()) => TableCheck::Verified,
        Err(e) => TableCheck::Discrepancy(describe(e, labels)),
    }
}

fn describe(e: zdg_core::semigroup::WitnessError, labels: &[String]) -> String {
    use zdg_core::semigroup::WitnessError as W;
    use zdg_core::{Element, TableError};
    let el = |e: Element| e.vertex().map_or("0".to_string(), |v| labels[v].clone());
    match e {
        W::NotAssociative([x, y, z]) => {
            let (x, y, z) = (el(x), el(y), el(z));
            format!("not associative: ({x}{y}){z} != {x}({y}{z})")
        }
        W::EdgeMismatch { u, v, adjacent } => format!(
            "{}{} is {}zero but the vertices are {}adjacent",
            labels[u],
            labels[v],
            if adjacent { "non" } else { "" },
            if adjacent { "" } else { "not " }
        ),
        W::Table(TableError::NotCommutative { x, y }) => {
            format!("not commutative: {}{} != {}{}", labels[x], labels[y], labels[y], labels[x])
        }
        e => e.to_string(),
    }
}

pub fn run_fixture(f: &FixtureEntry, options: &ClassifyOptions) -> FixtureOutcome {
    let c = classify(&f.graph, options);
    let (table, trusted) = match &f.table {
        None => (TableCheck::Absent, false),
        Some(p) => (check_table(&f.graph, &f.labels, &p.table), p.trusted),
    };
    FixtureOutcome {
        name: f.name.clone(),
        expected: f.expected,
        got: c.category,
        method: c.method.to_string(),
        trusted,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G319: &str = r#"
name = "G319"
expected = "ZDG"
labels = ["1", "2", "3", "4", "5", "6", "7"]
adjacency = ["1: 2 3", "2: 1 4", "3: 1 4", "4: 2 3 5 6 7", "5: 4", "6: 4", "7: 4"]
table_trusted = true
table = [
    "1 0 0 4 4 4 4",
    "0 2 2 0 2 2 2",
    "0 2 2 0 2 2 2",
    "4 0 0 0 0 0 0",
    "4 2 2 0 2 2 2",
    "4 2 2 0 2 2 2",
    "4 2 2 0 2 2 2",
]
"#;

    #[test]
    fn parse_and_run() {
        let f = FixtureEntry::parse(G319).unwrap();
        assert_eq!(f.graph.edge_count(), 7);
        let out = run_fixture(&f, &ClassifyOptions::default());
        assert_eq!(out.table, TableCheck::Verified);
        assert!(out.passed());

        // 1·5 = 1 instead of 4.
        let typo = G319.replace("\"1 0 0 4 4 4 4\"", "\"1 0 0 4 1 4 4\"");
        let out = run_fixture(&FixtureEntry::parse(&typo).unwrap(), &ClassifyOptions::default());
        assert_eq!(out.table, TableCheck::Discrepancy("not commutative: 15 != 51".into()));
        assert!(out.verdict_ok());
        assert!(!out.passed());
    }

    #[test]
    fn rejects_bad_files() {
        let asym = G319.replace("\"2: 1 4\"", "\"2: 4\"");
        let e = FixtureEntry::parse(&asym).unwrap_err().to_string();
        assert!(e.contains("1 lists 2"), "{e}");
        let order = G319.replace("\"3: 1 4\"", "\"5: 1 4\"");
        assert!(FixtureEntry::parse(&order).unwrap_err().to_string().contains("out of order"));
        let verdict = G319.replace("expected = \"ZDG\"", "expected = \"zdg\"");
        assert!(FixtureEntry::parse(&verdict).unwrap_err().to_string().contains("unknown verdict"));
        assert!(FixtureEntry::parse("name = 1").is_err());
    }

    #[test]
    fn untrusted_discrepancy_still_passes() {
        let typo = G319.replace("\"1 0 0 4 4 4 4\"", "\"1 0 0 4 1 4 4\"");
        let f = FixtureEntry::parse(&typo.replace("table_trusted = true", "table_trusted = false")).unwrap();
        let out = run_fixture(&f, &ClassifyOptions::default());
        assert!(out.passed());
    }
}
