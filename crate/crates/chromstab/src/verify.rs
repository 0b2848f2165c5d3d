//! Runs checks over a corpus and collects per-check reports.

use std::path::{Path, PathBuf};
use std::time::Instant;

use chromstab_core::checks::{evaluate_profile, Check, CheckOutcome, Profile};
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{Corpus, ParseFailure};
use crate::error::{Error, Result};

const CHUNK: u64 = 1 << 14;

pub const EVIDENCE_NOTE: &str = "no counterexample in this corpus; this is evidence, not proof";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: &'static str,
    pub statement: String,
    pub corpus: String,
    pub graphs_scanned: u64,
    pub hypothesis_hits: u64,
    pub violations: Vec<CheckOutcome>,
    pub parse_failures: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parse_errors: Vec<ParseFailure>,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn to_json(&self, pretty: bool) -> String {
        let out = if pretty { serde_json::to_string_pretty(self) } else { serde_json::to_string(self) };
        out.expect("reports always serialize")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub workers: usize,
    /// When false, `wall_time_ms` is reported as 0 so reports are
    /// byte-identical between runs.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { workers: 1, timing: true }
    }
}

/// What one corpus entry contributed to each check.
enum Entry {
    Parsed(Vec<(bool, Option<CheckOutcome>)>),
    Failed(ParseFailure),
}

fn process(corpus: &Corpus, checks: &[Check], index: u64) -> Entry {
    match corpus.get(index) {
        Err(f) => Entry::Failed(f),
        Ok(g) => {
            let mut profile = Profile::new(&g);
            Entry::Parsed(
                checks
                    .iter()
                    .map(|&c| {
                        let o = evaluate_profile(c, &mut profile);
                        (o.hypothesis_applies, o.is_violation().then_some(o))
                    })
                    .collect(),
            )
        }
    }
}

/// Applies every check to every corpus entry. Entries are processed in
/// parallel and merged in index order, so the reports do not depend on
/// `workers`.
pub fn run_corpus(corpus: &Corpus, checks: &[Check], opts: RunOptions) -> Result<Vec<VerificationReport>> {
    if opts.workers == 0 {
        return Err(Error::Usage("workers must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    let start = Instant::now();

    let mut reports: Vec<VerificationReport> = checks
        .iter()
        .map(|&c| VerificationReport {
            check_id: c.id(),
            statement: c.statement(),
            corpus: corpus.description().to_string(),
            graphs_scanned: 0,
            hypothesis_hits: 0,
            violations: Vec::new(),
            parse_failures: 0,
            parse_errors: Vec::new(),
            wall_time_ms: 0,
            note: matches!(c, Check::Problem1 { .. }).then(|| EVIDENCE_NOTE.to_string()),
        })
        .collect();

    let mut lo = 0;
    while lo < corpus.len() {
        let hi = (lo + CHUNK).min(corpus.len());
        let entries: Vec<Entry> =
            pool.install(|| (lo..hi).into_par_iter().map(|i| process(corpus, checks, i)).collect());
        for entry in entries {
            match entry {
                Entry::Failed(f) => {
                    for r in &mut reports {
                        r.parse_failures += 1;
                        r.parse_errors.push(f.clone());
                    }
                }
                Entry::Parsed(results) => {
                    for (r, (applies, violation)) in reports.iter_mut().zip(results) {
                        r.graphs_scanned += 1;
                        r.hypothesis_hits += u64::from(applies);
                        r.violations.extend(violation);
                    }
                }
            }
        }
        lo = hi;
    }

    if opts.timing {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut reports {
            r.wall_time_ms = ms;
        }
    }
    Ok(reports)
}

/// Searches for graphs with `2χ >= Δ + offset` and `vs != ivs`.
pub fn search_problem1(corpus: &Corpus, offset: usize, opts: RunOptions) -> Result<VerificationReport> {
    let mut reports = run_corpus(corpus, &[Check::Problem1 { offset }], opts)?;
    Ok(reports.pop().expect("one check, one report"))
}

/// Parses `--check` values; `all` expands to every check.
pub fn parse_checks(ids: &[String], problem1_offset: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for id in ids {
        let found: Vec<Check> = if id == "all" {
            Check::PROVED.into_iter().chain([Check::Problem1 { offset: problem1_offset }]).collect()
        } else {
            match Check::from_id(id) {
                Some(Check::Problem1 { .. }) => vec![Check::Problem1 { offset: problem1_offset }],
                Some(c) => vec![c],
                None => return Err(Error::Usage(format!("unknown check {id:?}"))),
            }
        };
        for c in found {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Writes `<check_id>.json` for every report and returns the paths.
pub fn write_reports(dir: &Path, reports: &[VerificationReport], pretty: bool) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    reports
        .iter()
        .map(|r| {
            let path = dir.join(format!("{}.json", r.check_id));
            let mut text = r.to_json(pretty);
            text.push('\n');
            std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
            Ok(path)
        })
        .collect()
}

/// One CSV row per report.
pub fn csv_summary(reports: &[VerificationReport]) -> String {
    let mut out =
        String::from("check_id,graphs_scanned,hypothesis_hits,violations,parse_failures,wall_time_ms\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.check_id,
            r.graphs_scanned,
            r.hypothesis_hits,
            r.violations.len(),
            r.parse_failures,
            r.wall_time_ms
        ));
    }
    out
}
