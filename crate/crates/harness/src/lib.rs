//! Corpus management, verification checks, and report assembly around the
//! `fitting` library.

pub mod checks;
pub mod config;
pub mod corpus;
pub mod family;
pub mod suite;

pub use checks::{run_check, CheckId, CheckStatus, VerificationReport};
pub use config::Config;
pub use corpus::{corpus_from_dir, default_corpus, CorpusEntry, GroupSource};
pub use family::{family, FamilySpec};
pub use suite::{run_suite, EntryReport, Summary, SuiteReport};
