//! Suite configuration, read from a `key = value` text file.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected 'key = value', found '{text}'")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: invalid value for '{key}': {message}")]
    BadValue { line: usize, key: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Orders up to this run the definitional class-union oracles alongside
    /// the elementwise radicals.
    pub max_order_oracle: usize,
    /// Orders up to this get exhaustive tuple scans where a check offers an
    /// exhaustive/sampled split.
    pub max_order_exhaustive_tuples: usize,
    /// Tuple samples per group for sampled scans.
    pub sample_count: usize,
    pub seed: u64,
    pub report_path: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_order_oracle: 60,
            max_order_exhaustive_tuples: 24,
            sample_count: 1000,
            seed: 0,
            report_path: None,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = Config::default();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let Some((key, value)) = stripped.split_once('=') else {
                return Err(ConfigError::Malformed { line, text: raw.trim().to_string() });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |message: String| ConfigError::BadValue {
                line,
                key: key.to_string(),
                message,
            };
            match key {
                "max_order_oracle" => {
                    config.max_order_oracle = value.parse().map_err(|e| bad(format!("{e}")))?
                }
                "max_order_exhaustive_tuples" => {
                    config.max_order_exhaustive_tuples =
                        value.parse().map_err(|e| bad(format!("{e}")))?
                }
                "sample_count" => {
                    config.sample_count = value.parse().map_err(|e| bad(format!("{e}")))?
                }
                "seed" => config.seed = value.parse().map_err(|e| bad(format!("{e}")))?,
                "report_path" => config.report_path = Some(PathBuf::from(value)),
                _ => return Err(ConfigError::UnknownKey { line, key: key.to_string() }),
            }
        }
        Ok(config)
    }
}

/// Stable string hash for deriving per-context seeds; FNV-1a so the value
/// never depends on the platform or standard-library version.
pub fn stable_hash(text: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
