//! Certificate files: one JSON document per classified graph.
//!
//! A `sat` certificate carries the full table as element codes (0 is zero,
//! `k` is the `k`-th vertex of the graph6 string). An `unsat` certificate
//! records the solver's node count and whether the search was exhaustive.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zdg_core::{parse_graph6, verify_witness, CanonicalCode, Element, Graph, MulTable, WitnessCertificate};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad graph6 in certificate: {0}")]
    Graph6(#[from] zdg_core::Graph6Error),
    #[error("bad table in certificate: {0}")]
    Table(#[from] zdg_core::TableError),
    #[error("certificate is missing its {0}")]
    Missing(&'static str),
    #[error("table does not witness the graph: {0}")]
    Witness(#[from] zdg_core::semigroup::WitnessError),
    #[error("search was cut off by its budget")]
    NotExhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Sat,
    Unsat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub graph6: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exhaustive: Option<bool>,
}

/// File name for the certificate of the graph with canonical code `code`.
pub fn file_name(code: &CanonicalCode) -> String {
    format!("cert_{}.json", code.to_hex())
}

impl CertificateFile {
    pub fn new(g: &Graph, cert: &WitnessCertificate) -> Self {
        let graph6 = zdg_core::emit_graph6(g);
        match cert {
            WitnessCertificate::Sat(t) => CertificateFile {
                graph6,
                verdict: Verdict::Sat,
                table: Some(
                    (0..g.n())
                        .map(|x| {
                            (0..g.n()).map(|y| t.product(x, y).expect("witness tables are total").code()).collect()
                        })
                        .collect(),
                ),
                nodes_explored: None,
                exhaustive: None,
            },
            &WitnessCertificate::Unsat { nodes_explored, exhaustive } => CertificateFile {
                graph6,
                verdict: Verdict::Unsat,
                table: None,
                nodes_explored: Some(nodes_explored),
                exhaustive: Some(exhaustive),
            },
        }
    }

    pub fn graph(&self) -> Result<Graph, CertificateError> {
        Ok(parse_graph6(&self.graph6)?)
    }

    pub fn certificate(&self) -> Result<WitnessCertificate, CertificateError> {
        match self.verdict {
            Verdict::Sat => {
                let rows = self.table.as_ref().ok_or(CertificateError::Missing("table"))?;
                let rows: Vec<Vec<Option<Element>>> =
                    rows.iter().map(|r| r.iter().map(|&c| Some(Element::from_code(c))).collect()).collect();
                Ok(WitnessCertificate::Sat(MulTable::from_rows(&rows)?))
            }
            Verdict::Unsat => Ok(WitnessCertificate::Unsat {
                nodes_explored: self.nodes_explored.ok_or(CertificateError::Missing("node count"))?,
                exhaustive: self.exhaustive.ok_or(CertificateError::Missing("exhaustive flag"))?,
            }),
        }
    }

    /// Sat: the table witnesses the graph. Unsat: the search was exhaustive.
    pub fn check(&self) -> Result<(), CertificateError> {
        let g = self.graph()?;
        match self.certificate()? {
            WitnessCertificate::Sat(t) => Ok(verify_witness(&g, &t)?),
            cert if cert.is_exhaustive_unsat() => Ok(()),
            _ => Err(CertificateError::NotExhaustive),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<(), CertificateError> {
        Ok(fs::write(path, self.to_json())?)
    }

    pub fn read(path: &Path) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }
}
