//! Classifying every graph of one order and writing the report.
//!
//! Graphs are enumerated on the calling thread and classified on a rayon
//! pool of `jobs` workers, each classification owning its own solver. The
//! results are sorted by canonical code before anything is written, so the
//! output does not depend on scheduling.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use zdg_core::enumeration::enumerate_all;
use zdg_core::{classify, Category, Classification, ClassifyOptions};

use crate::atlas::AtlasIndex;
use crate::certificate::{self, CertificateFile};
use crate::record::ClassificationRecord;

/// Classifies all isomorphism classes on `n` vertices with `jobs` workers.
pub fn classify_order(n: usize, options: &ClassifyOptions, jobs: usize) -> Result<Vec<Classification>> {
    let graphs = enumerate_all(n).map_err(|e| anyhow::anyhow!("{e}"))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    let mut out: Vec<Classification> = pool.install(|| graphs.par_iter().map(|g| classify(g, options)).collect());
    out.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub counts: BTreeMap<Category, usize>,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(results: &[Classification]) -> Self {
        let mut s = Summary::default();
        for c in results {
            match c.category {
                Some(k) => *s.counts.entry(k).or_default() += 1,
                None => s.inconclusive += 1,
            }
        }
        s
    }

    pub fn count(&self, k: Category) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum::<usize>() + self.inconclusive
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "total {}", self.total())?;
        for k in Category::ALL {
            write!(f, ", {} {}", k, self.count(k))?;
        }
        write!(f, ", inconclusive {}", self.inconclusive)
    }
}

/// Directory holding the certificates of the report at `report`.
pub fn certificate_dir(report: &Path) -> PathBuf {
    let stem = report.file_stem().map_or_else(|| "report".into(), |s| s.to_string_lossy().into_owned());
    report.with_file_name(format!("{stem}.certs"))
}

/// Records in output order. Certificate references are filled in only when
/// `cert_dir_name` is given.
pub fn records(
    results: &[Classification],
    atlas: Option<&AtlasIndex>,
    cert_dir_name: Option<&str>,
) -> Vec<ClassificationRecord> {
    results
        .iter()
        .map(|c| {
            let cert_ref = match (cert_dir_name, &c.certificate) {
                (Some(dir), Some(_)) => Some(format!("{dir}/{}", certificate::file_name(&c.code))),
                _ => None,
            };
            let atlas_id = atlas.and_then(|a| a.lookup(&c.code)).map(str::to_string);
            ClassificationRecord::new(c, cert_ref, atlas_id)
        })
        .collect()
}

/// JSONL to `out`, no certificates.
pub fn write_jsonl(out: &mut impl Write, records: &[ClassificationRecord]) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json_line())?;
    }
    Ok(())
}

/// Writes the JSONL report to `path` and every certificate to the sibling
/// directory from [`certificate_dir`], replacing stale certificates.
pub fn write_report(path: &Path, results: &[Classification], atlas: Option<&AtlasIndex>) -> Result<Summary> {
    let dir = certificate_dir(path);
    if dir.exists() {
        for entry in fs::read_dir(&dir)? {
            let p = entry?.path();
            if p.extension().is_some_and(|e| e == "json") {
                fs::remove_file(&p)?;
            }
        }
    } else {
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    for c in results {
        if let Some(cert) = &c.certificate {
            let file = dir.join(certificate::file_name(&c.code));
            CertificateFile::new(&c.graph, cert).write(&file).with_context(|| format!("writing {}", file.display()))?;
        }
    }
    let dir_name = dir.file_name().expect("certificate dir has a name").to_string_lossy().into_owned();
    let recs = records(results, atlas, Some(&dir_name));
    let mut out = io::BufWriter::new(fs::File::create(path).with_context(|| format!("creating {}", path.display()))?);
    write_jsonl(&mut out, &recs)?;
    out.flush()?;
    Ok(Summary::of(results))
}

pub fn read_report(path: &Path) -> Result<Vec<ClassificationRecord>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .enumerate()
        .map(|(i, l)| serde_json::from_str(l).with_context(|| format!("{}:{}", path.display(), i + 1)))
        .collect()
}

/// Re-checks every record of a written report against its certificate on
/// disk. Returns the number of certificates checked.
pub fn verify_report(path: &Path) -> Result<usize> {
    let base = path.parent().unwrap_or(Path::new("."));
    let mut checked = 0;
    for r in read_report(path)? {
        let expected = match r.category.as_deref() {
            Some("ZDG") => Some(certificate::Verdict::Sat),
            Some("StarNotZDG") => Some(certificate::Verdict::Unsat),
            _ => None,
        };
        let (Some(expected), Some(rel)) = (expected.clone(), &r.certificate_ref) else {
            if expected.is_some() {
                bail!("{}: no certificate", r.graph6);
            }
            // Condition verdicts have none; inconclusive ones keep the cut-off search.
            continue;
        };
        let c = CertificateFile::read(&base.join(rel)).with_context(|| format!("reading {rel}"))?;
        if c.graph6 != r.graph6 || c.verdict != expected {
            bail!("{}: certificate {rel} does not match the record", r.graph6);
        }
        c.check().with_context(|| r.graph6.clone())?;
        checked += 1;
    }
    Ok(checked)
}
