//! Table-driven head finding.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::null::Language;
use crate::tree::SyntaxTree;

const ENGLISH_HEADS: &str = include_str!("../data/english.heads");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
    LeftDis,
    RightDis,
}

impl Direction {
    fn scans_left(self) -> bool {
        matches!(self, Direction::Left | Direction::LeftDis)
    }
}

impl FromStr for Direction {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            "leftdis" => Ok(Direction::LeftDis),
            "rightdis" => Ok(Direction::RightDis),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadRule {
    pub direction: Direction,
    pub priorities: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadRuleError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for HeadRuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "head rules line {}: {}", self.line, self.message)
    }
}

/// Per-category head rules. Categories without rules take their rightmost child.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeadRuleTable {
    rules: BTreeMap<String, Vec<HeadRule>>,
}

impl HeadRuleTable {
    /// No rules at all: every head is the rightmost child.
    pub fn rightmost() -> Self {
        HeadRuleTable::default()
    }

    pub fn english() -> Self {
        Self::parse(ENGLISH_HEADS).expect("bundled English head table parses")
    }

    pub fn for_language(language: Language) -> Self {
        match language {
            Language::English => Self::english(),
            Language::Chinese | Language::Korean => Self::rightmost(),
        }
    }

    /// Parse the plain-text format: `CATEGORY left|right|leftdis|rightdis CAT...`,
    /// `#` comments, repeated categories become ordered fallbacks.
    pub fn parse(text: &str) -> Result<Self, HeadRuleError> {
        let mut rules: BTreeMap<String, Vec<HeadRule>> = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let category = fields.next().unwrap().to_string();
            let direction = match fields.next() {
                Some(d) => d.parse().map_err(|_| HeadRuleError {
                    line: n + 1,
                    message: alloc::format!("unknown direction `{}`", d),
                })?,
                None => {
                    return Err(HeadRuleError {
                        line: n + 1,
                        message: "missing direction".to_string(),
                    })
                }
            };
            let priorities = fields.map(ToString::to_string).collect();
            rules
                .entry(category)
                .or_default()
                .push(HeadRule { direction, priorities });
        }
        Ok(HeadRuleTable { rules })
    }

    pub fn rules_for(&self, category: &str) -> Option<&[HeadRule]> {
        self.rules.get(category).map(Vec::as_slice)
    }

    /// Index of the head child of an internal node. Total and deterministic;
    /// `-NONE-` children are never chosen unless they are all there is.
    pub fn head_child(&self, node: &SyntaxTree) -> usize {
        let children = node.children();
        if children.len() <= 1 {
            return 0;
        }
        let cats: Vec<Option<&str>> = children
            .iter()
            .map(|c| if c.is_null_only() { None } else { c.category() })
            .collect();
        let candidates: Vec<usize> = (0..cats.len()).filter(|&i| cats[i].is_some()).collect();
        let first = candidates.first().copied().unwrap_or(0);
        let last = candidates.last().copied().unwrap_or(children.len() - 1);

        let rules = match node.category().and_then(|c| self.rules.get(c)) {
            Some(r) if !r.is_empty() => r,
            _ => return last,
        };
        for rule in rules {
            let order: Vec<usize> = if rule.direction.scans_left() {
                candidates.clone()
            } else {
                candidates.iter().rev().copied().collect()
            };
            let found = match rule.direction {
                Direction::Left | Direction::Right => rule
                    .priorities
                    .iter()
                    .find_map(|p| order.iter().copied().find(|&i| cats[i] == Some(p.as_str()))),
                Direction::LeftDis | Direction::RightDis => order
                    .iter()
                    .copied()
                    .find(|&i| rule.priorities.iter().any(|p| cats[i] == Some(p.as_str()))),
            };
            if let Some(i) = found {
                return i;
            }
        }
        if rules[0].direction.scans_left() {
            first
        } else {
            last
        }
    }

    /// The token reached by following head children down to a preterminal.
    pub fn head_word<'a>(&self, node: &'a SyntaxTree) -> Option<&'a str> {
        let mut cur = node;
        loop {
            if cur.is_leaf() {
                return None;
            }
            if cur.is_preterminal() {
                return cur.word();
            }
            cur = &cur.children()[self.head_child(cur)];
        }
    }
}
