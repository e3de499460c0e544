//! Bracket label decomposition (`NP-SBJ-1`, `NP-SBJ=2`, `-NONE-`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A bracket label split into category, function tags and indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeLabel {
    pub category: String,
    pub function_tags: Vec<String>,
    /// The `-1` in `NP-SBJ-1`; the referent of coindexed null elements.
    pub identity_index: Option<u32>,
    /// The `=2` in `NP-SBJ=2` (gapping).
    pub gap_index: Option<u32>,
}

impl NodeLabel {
    /// A label with only a category.
    pub fn bare(category: impl Into<String>) -> Self {
        NodeLabel {
            category: category.into(),
            function_tags: Vec::new(),
            identity_index: None,
            gap_index: None,
        }
    }

    pub fn with_tags<I, S>(category: impl Into<String>, tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        NodeLabel {
            function_tags: tags.into_iter().map(Into::into).collect(),
            ..NodeLabel::bare(category)
        }
    }

    pub fn is(&self, category: &str) -> bool {
        self.category == category
    }

    pub fn is_none_tag(&self) -> bool {
        self.category == "-NONE-"
    }

    /// Category plus function tags, indices dropped (`NP-SBJ`).
    pub fn tagged_category(&self) -> String {
        let mut out = self.category.clone();
        for tag in &self.function_tags {
            out.push('-');
            out.push_str(tag);
        }
        out
    }

    /// The label reduced to its bare category.
    pub fn stripped(&self) -> NodeLabel {
        NodeLabel::bare(self.category.clone())
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.category)?;
        for tag in &self.function_tags {
            write!(f, "-{}", tag)?;
        }
        if let Some(idx) = self.identity_index {
            write!(f, "-{}", idx)?;
        }
        if let Some(gap) = self.gap_index {
            write!(f, "={}", gap)?;
        }
        Ok(())
    }
}

impl From<&str> for NodeLabel {
    fn from(raw: &str) -> Self {
        decompose_label(raw)
    }
}

/// Canonical decimal index: digits only, no leading zero unless the index is `0`.
fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if s.len() > 1 && s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

/// Decompose a raw bracket label.
///
/// Labels wrapped in dashes (`-NONE-`, `-LRB-`) are whole categories. Otherwise
/// a trailing `=<digits>` is the gap index, a trailing all-digit `-` segment is
/// the identity index and the remaining `-` segments after the first are
/// function tags. Never fails; unknown tags pass through.
pub fn decompose_label(raw: &str) -> NodeLabel {
    if raw.len() >= 2 && raw.starts_with('-') && raw.ends_with('-') {
        return NodeLabel::bare(raw);
    }
    if raw.starts_with('-') || raw.starts_with('=') {
        return NodeLabel::bare(raw);
    }

    let mut rest = raw;
    let mut gap_index = None;
    if let Some(pos) = rest.rfind('=') {
        if pos > 0 {
            if let Some(gap) = parse_index(&rest[pos + 1..]) {
                gap_index = Some(gap);
                rest = &rest[..pos];
            }
        }
    }

    let mut segments: Vec<&str> = rest.split('-').collect();
    let mut identity_index = None;
    if segments.len() > 1 {
        if let Some(idx) = parse_index(segments[segments.len() - 1]) {
            identity_index = Some(idx);
            segments.pop();
        }
    }

    let category = segments[0].to_string();
    let function_tags = segments[1..].iter().map(|s| s.to_string()).collect();
    NodeLabel {
        category,
        function_tags,
        identity_index,
        gap_index,
    }
}
