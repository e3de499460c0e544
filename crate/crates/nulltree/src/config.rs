//! `nulltree.toml` settings. Precedence is flag, then `NULLTREE_*`
//! environment variable, then this file, then the built-in default.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

pub const DEFAULT_FILE: &str = "nulltree.toml";

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub lang: Option<String>,
    pub lenient: Option<bool>,
    pub style: Option<String>,
    pub rules: Option<String>,
    pub trace_log: Option<PathBuf>,
    pub function_labels: Option<bool>,
    pub op_placement: Option<String>,
    pub appositive_pro: Option<bool>,
    pub head_rules: Option<PathBuf>,
    pub adverbial_heads: Option<PathBuf>,
    pub passive_auxiliaries: Option<PathBuf>,
    pub with_labels: Option<bool>,
    pub labeled: Option<bool>,
    pub penalize_skips: Option<bool>,
    pub exclude_kinds: Option<Vec<String>>,
    pub report: Option<String>,
    pub profile: Option<String>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Load `explicit` if given, else `./nulltree.toml` when present.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        let path = match explicit {
            Some(p) => p.to_path_buf(),
            None => {
                let p = PathBuf::from(DEFAULT_FILE);
                if !p.exists() {
                    return Ok(FileConfig::default());
                }
                p
            }
        };
        let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("bad config file {}", path.display()))
    }
}

/// Interpret an environment-style boolean.
pub fn parse_bool(s: &str) -> Option<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Some(true),
        "0" | "false" | "no" | "off" | "" => Some(false),
        _ => None,
    }
}

pub fn env_bool(key: &str) -> Option<bool> {
    std::env::var(key).ok().and_then(|v| parse_bool(&v))
}
