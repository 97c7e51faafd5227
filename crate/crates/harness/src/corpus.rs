//! Corpus entries: named groups with a lazily built table.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use fitting::group::{read_cayley_table, read_permutations, FiniteGroup};

use crate::family::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Family(FamilySpec),
    CayleyTableFile(PathBuf),
    PermutationFile(PathBuf),
}

impl std::fmt::Display for GroupSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSource::Family(spec) => write!(f, "{spec}"),
            GroupSource::CayleyTableFile(p) => write!(f, "table:{}", p.display()),
            GroupSource::PermutationFile(p) => write!(f, "perms:{}", p.display()),
        }
    }
}

pub struct CorpusEntry {
    pub name: String,
    pub source: GroupSource,
    pub tags: Vec<&'static str>,
    group: OnceLock<Result<FiniteGroup, String>>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, source: GroupSource, tags: Vec<&'static str>) -> Self {
        CorpusEntry { name: name.into(), source, tags, group: OnceLock::new() }
    }

    pub fn from_family(name: &str, descriptor: &str, tags: Vec<&'static str>) -> Self {
        let spec = FamilySpec::parse(descriptor)
            .unwrap_or_else(|e| panic!("bad corpus descriptor {descriptor}: {e}"));
        Self::new(name, GroupSource::Family(spec), tags)
    }

    /// Builds the group on first use; construction failures are cached and
    /// surfaced as entry-level errors.
    pub fn group(&self) -> Result<&FiniteGroup, String> {
        self.group
            .get_or_init(|| match &self.source {
                GroupSource::Family(spec) => spec.build().map_err(|e| e.to_string()),
                GroupSource::CayleyTableFile(path) => std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))
                    .and_then(|text| {
                        read_cayley_table(&text).map_err(|e| format!("{}: {e}", path.display()))
                    }),
                GroupSource::PermutationFile(path) => std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))
                    .and_then(|text| {
                        read_permutations(&text).map_err(|e| format!("{}: {e}", path.display()))
                    }),
            })
            .as_ref()
            .map_err(|e| e.clone())
    }
}

/// The default corpus: abelian, nilpotent, soluble-but-not-nilpotent,
/// simple, and mixed direct products, so every check has instances where its
/// hypothesis holds and where it fails.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut entries = Vec::new();
    for n in 1..=12usize {
        entries.push(CorpusEntry::from_family(
            &format!("Z{n}"),
            &format!("cyclic-{n}"),
            vec!["abelian", "nilpotent", "soluble"],
        ));
    }
    for n in 3..=8usize {
        let tags = if n.is_power_of_two() {
            vec!["nilpotent", "soluble"]
        } else {
            vec!["soluble"]
        };
        entries.push(CorpusEntry::from_family(&format!("D{n}"), &format!("dihedral-{n}"), tags));
    }
    for n in 3..=5usize {
        let tags = if n <= 4 { vec!["soluble"] } else { vec![] };
        entries.push(CorpusEntry::from_family(&format!("S{n}"), &format!("symmetric-{n}"), tags));
    }
    entries.push(CorpusEntry::from_family("A4", "alternating-4", vec!["soluble"]));
    entries.push(CorpusEntry::from_family("A5", "alternating-5", vec!["simple"]));
    entries.push(CorpusEntry::from_family("Q8", "quaternion8", vec!["nilpotent", "soluble"]));
    entries.push(CorpusEntry::from_family("V4", "klein4", vec!["abelian", "nilpotent", "soluble"]));
    entries.push(CorpusEntry::from_family(
        "Q8xZ3",
        "product(quaternion8,cyclic-3)",
        vec!["nilpotent", "soluble"],
    ));
    entries.push(CorpusEntry::from_family("Z2xA5", "product(cyclic-2,alternating-5)", vec![]));
    entries.push(CorpusEntry::from_family("Q8xA5", "product(quaternion8,alternating-5)", vec![]));
    entries
}

/// Loads a corpus from a directory: every `*.tbl` file is read as a Cayley
/// table, every `*.perm` file as a permutation file; entry names are the
/// file stems.
pub fn corpus_from_dir(dir: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    let mut paths: Vec<PathBuf> =
        std::fs::read_dir(dir)?.filter_map(|e| e.ok().map(|e| e.path())).collect();
    paths.sort();
    for path in paths {
        let Some(ext) = path.extension().and_then(|e| e.to_str()) else { continue };
        let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else { continue };
        let source = match ext {
            "tbl" => GroupSource::CayleyTableFile(path.clone()),
            "perm" => GroupSource::PermutationFile(path.clone()),
            _ => continue,
        };
        entries.push(CorpusEntry::new(stem.to_string(), source, Vec::new()));
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_builds_and_has_unique_names() {
        let corpus = default_corpus();
        assert_eq!(corpus.len(), 28);
        let mut names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 28, "corpus names must be unique");
        // Spot-check a few orders without building the heavyweight entries.
        let by_name = |n: &str| corpus.iter().find(|e| e.name == n).unwrap();
        assert_eq!(by_name("Z12").group().unwrap().order(), 12);
        assert_eq!(by_name("S5").group().unwrap().order(), 120);
        assert_eq!(by_name("Q8xZ3").group().unwrap().order(), 24);
    }

    #[test]
    fn corpus_from_directory_reads_both_formats() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("z2.tbl"), "2\n0 1\n1 0\n").unwrap();
        std::fs::write(dir.path().join("s3.perm"), "3\n1 0 2\n1 2 0\n").unwrap();
        std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
        let corpus = corpus_from_dir(dir.path()).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus[0].name, "s3");
        assert_eq!(corpus[0].group().unwrap().order(), 6);
        assert_eq!(corpus[1].name, "z2");
        assert_eq!(corpus[1].group().unwrap().order(), 2);
    }

    #[test]
    fn broken_table_file_is_reported_not_panicked() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("bad.tbl"), "2\n0 1\n0 1\n").unwrap();
        let corpus = corpus_from_dir(dir.path()).unwrap();
        let err = corpus[0].group().unwrap_err();
        assert!(err.contains("bad.tbl"), "error should name the file: {err}");
    }
}
