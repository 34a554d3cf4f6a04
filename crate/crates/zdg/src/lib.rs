//! File formats and batch tooling around `zdg-core`: JSONL classification
//! reports, certificate files, plain-text tables, the optional atlas index,
//! the transcribed fixture corpus, and the parallel pipeline behind the
//! `zdg` binary.

pub mod atlas;
pub mod certificate;
pub mod fixtures;
pub mod pipeline;
pub mod record;
pub mod table_text;
