//! Whole-corpus runs and the JSON report document.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::checks::{run_check, CheckId, CheckStatus, VerificationReport};
use crate::config::Config;
use crate::corpus::CorpusEntry;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug)]
pub struct EntryReport {
    pub group: String,
    pub source: String,
    pub tags: Vec<&'static str>,
    pub error: Option<String>,
    pub checks: Vec<VerificationReport>,
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub construction_errors: usize,
    pub total: usize,
}

#[derive(Debug)]
pub struct SuiteReport {
    pub config: Config,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn any_failure(&self) -> bool {
        self.summary.fail > 0 || self.summary.construction_errors > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": REPORT_VERSION,
            "config": {
                "max_order_oracle": self.config.max_order_oracle,
                "max_order_exhaustive_tuples": self.config.max_order_exhaustive_tuples,
                "sample_count": self.config.sample_count,
                "seed": self.config.seed,
            },
            "entries": self.entries.iter().map(|entry| {
                json!({
                    "group": entry.group,
                    "source": entry.source,
                    "tags": entry.tags,
                    "error": entry.error,
                    "checks": entry.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                })
            }).collect::<Vec<_>>(),
            "summary": {
                "pass": self.summary.pass,
                "fail": self.summary.fail,
                "skipped": self.summary.skipped,
                "construction_errors": self.summary.construction_errors,
                "total_checks": self.summary.total,
            },
        })
    }
}

/// Runs every check on every corpus entry. Entries are processed in
/// parallel; the report is assembled in (group name, check id) order so the
/// output is stable for a given corpus, config and seed.
pub fn run_suite(corpus: &[CorpusEntry], config: &Config) -> SuiteReport {
    let mut entries: Vec<EntryReport> = corpus
        .par_iter()
        .map(|entry| {
            let error = entry.group().err();
            let checks: Vec<VerificationReport> = CheckId::ALL
                .into_iter()
                .map(|check| run_check(entry, check, config))
                .collect();
            EntryReport {
                group: entry.name.clone(),
                source: entry.source.to_string(),
                tags: entry.tags.clone(),
                error,
                checks,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.group.cmp(&b.group));

    let mut summary = Summary::default();
    for entry in &entries {
        if entry.error.is_some() {
            summary.construction_errors += 1;
        }
        for check in &entry.checks {
            summary.total += 1;
            match &check.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::Skipped(_) => summary.skipped += 1,
            }
        }
    }
    SuiteReport { config: config.clone(), entries, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_from_dir, CorpusEntry, GroupSource};
    use crate::family::FamilySpec;

    fn small_corpus() -> Vec<CorpusEntry> {
        ["cyclic-6", "symmetric-3", "quaternion8"]
            .iter()
            .enumerate()
            .map(|(i, desc)| {
                CorpusEntry::new(
                    format!("g{i}"),
                    GroupSource::Family(FamilySpec::parse(desc).unwrap()),
                    vec![],
                )
            })
            .collect()
    }

    #[test]
    fn empty_corpus_produces_empty_report() {
        let report = run_suite(&[], &Config::default());
        assert!(report.entries.is_empty());
        assert_eq!(report.summary, Summary::default());
        assert!(!report.any_failure());
    }

    #[test]
    fn summary_counts_match_entry_statuses() {
        let corpus = small_corpus();
        let report = run_suite(&corpus, &Config::default());
        assert_eq!(report.summary.total, corpus.len() * CheckId::ALL.len());
        let recount = report
            .entries
            .iter()
            .flat_map(|e| &e.checks)
            .fold(Summary::default(), |mut acc, c| {
                acc.total += 1;
                match &c.status {
                    CheckStatus::Pass => acc.pass += 1,
                    CheckStatus::Fail => acc.fail += 1,
                    CheckStatus::Skipped(_) => acc.skipped += 1,
                }
                acc
            });
        assert_eq!(report.summary.pass, recount.pass);
        assert_eq!(report.summary.fail, recount.fail);
        assert_eq!(report.summary.skipped, recount.skipped);
        assert_eq!(report.summary.fail, 0, "{}", report.to_json());
    }

    #[test]
    fn reports_are_byte_stable_for_a_fixed_seed() {
        let corpus = small_corpus();
        let config = Config { seed: 7, ..Config::default() };
        let first = run_suite(&corpus, &config).to_json().to_string();
        let second = run_suite(&corpus, &config).to_json().to_string();
        assert_eq!(first, second);
    }

    #[test]
    fn corrupted_table_is_surfaced_and_the_suite_continues() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("bad.tbl"), "2\n0 1\n0 1\n").unwrap();
        std::fs::write(dir.path().join("ok.tbl"), "2\n0 1\n1 0\n").unwrap();
        let corpus = corpus_from_dir(dir.path()).unwrap();
        let report = run_suite(&corpus, &Config::default());
        assert_eq!(report.summary.construction_errors, 1);
        assert!(report.any_failure());
        let ok_entry = report.entries.iter().find(|e| e.group == "ok").unwrap();
        assert!(ok_entry.error.is_none());
        assert!(ok_entry.checks.iter().all(|c| c.status != CheckStatus::Fail));
    }
}
