//! JSONL classification records.
//!
//! Vertex numbers in records are 1-based positions in the record's graph6
//! string.

use serde::{Deserialize, Serialize};
use zdg_core::{Classification, ConditionReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarWitnesses {
    pub pair: [usize; 2],
    pub z: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSummary {
    pub connected: bool,
    pub diameter3: bool,
    pub core_ok: bool,
    pub star_ok: bool,
    /// Every nonadjacent pair with the vertices `z` satisfying ⋆ for it.
    pub star_witnesses: Vec<StarWitnesses>,
    pub failing_pair: Option<[usize; 2]>,
}

impl From<&ConditionReport> for ConditionSummary {
    fn from(r: &ConditionReport) -> Self {
        let star_witnesses = r
            .star_witnesses
            .iter()
            .map(|(&(x, y), zs)| StarWitnesses { pair: [x + 1, y + 1], z: zs.iter().map(|z| z + 1).collect() })
            .collect();
        ConditionSummary {
            connected: r.connected,
            diameter3: r.diameter3,
            core_ok: r.core_ok,
            star_ok: r.star_ok,
            star_witnesses,
            failing_pair: r.failing_pair.map(|(x, y)| [x + 1, y + 1]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub graph6: String,
    pub n: usize,
    /// Absent when the search budget ran out.
    pub category: Option<String>,
    pub inconclusive: bool,
    pub method: String,
    pub condition_report: ConditionSummary,
    /// Relative to the report's directory.
    pub certificate_ref: Option<String>,
    pub atlas_id: Option<String>,
}

impl ClassificationRecord {
    pub fn new(c: &Classification, certificate_ref: Option<String>, atlas_id: Option<String>) -> Self {
        ClassificationRecord {
            graph6: zdg_core::emit_graph6(&c.graph),
            n: c.graph.n(),
            category: c.category.map(|k| k.name().to_string()),
            inconclusive: c.is_inconclusive(),
            method: c.method.to_string(),
            condition_report: ConditionSummary::from(&c.report),
            certificate_ref,
            atlas_id,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[cfg(test)]
mod tests {
    use zdg_core::{classify, ClassifyOptions, Graph};

    use super::*;

    #[test]
    fn json_roundtrip() {
        let c = classify(&Graph::cycle(6).unwrap(), &ClassifyOptions::default());
        let r = ClassificationRecord::new(&c, None, Some("G1".into()));
        let line = r.to_json_line();
        assert!(line.contains("\"category\":\"ConnectedNotStar\""), "{line}");
        assert!(line.contains("\"failing_pair\":[1,4]"), "{line}");
        let back: ClassificationRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }
}
