//! Parseval restricted to null elements.
//!
//! A null element is scored as a mention keyed by its kind and its anchor,
//! the number of overt terminals before it. Labeled scoring adds the
//! category and function tags of the phrase directly above the `-NONE-`
//! preterminal. Predicted and gold trees are aligned by terminal position,
//! so word texts never matter.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::null::NullKind;
use crate::tree::SyntaxTree;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NullMention {
    pub kind: NullKind,
    pub anchor: usize,
    /// Category of the phrase dominating the `-NONE-` preterminal.
    pub category: String,
    /// Function tags of that phrase; filled only for labeled extraction.
    pub tags: Vec<String>,
}

impl NullMention {
    fn key(&self, labeled: bool) -> (NullKind, usize, &str, &[String]) {
        if labeled {
            (self.kind, self.anchor, &self.category, &self.tags)
        } else {
            (self.kind, self.anchor, "", &[])
        }
    }
}

/// One mention per null leaf, in tree order.
pub fn extract_mentions(tree: &SyntaxTree, labeled: bool) -> Vec<NullMention> {
    let mut out = Vec::new();
    let mut overt = 0usize;
    walk(tree, None, labeled, &mut overt, &mut out);
    out
}

fn walk(node: &SyntaxTree, parent: Option<&SyntaxTree>, labeled: bool, overt: &mut usize, out: &mut Vec<NullMention>) {
    if let Some(sym) = node.null_symbol() {
        let label = parent.and_then(SyntaxTree::label);
        out.push(NullMention {
            kind: sym.kind,
            anchor: *overt,
            category: label.map_or_else(|| String::from("-NONE-"), |l| l.category.clone()),
            tags: match (labeled, label) {
                (true, Some(l)) => l.function_tags.clone(),
                _ => Vec::new(),
            },
        });
        return;
    }
    if node.is_preterminal() {
        *overt += 1;
        return;
    }
    for c in node.children() {
        walk(c, Some(node), labeled, overt, out);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alignment {
    Aligned { terminals: usize },
    Mismatch { gold: usize, pred: usize },
}

/// Positional alignment: succeeds iff both trees have the same number of
/// overt terminals.
pub fn align_terminals(gold: &SyntaxTree, pred: &SyntaxTree) -> Alignment {
    let (g, p) = (gold.overt_len(), pred.overt_len());
    if g == p {
        Alignment::Aligned { terminals: g }
    } else {
        Alignment::Mismatch { gold: g, pred: p }
    }
}

/// A system output for one sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prediction {
    Tree(SyntaxTree),
    /// Unusable output, with a description.
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkipReason {
    Malformed,
    TerminalCount,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::Malformed => "malformed",
            SkipReason::TerminalCount => "terminal-count",
        }
    }
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalOptions {
    pub labeled: bool,
    /// Count gold mentions of skipped sentences as misses.
    pub penalize_skips: bool,
    /// Kinds removed from both sides before matching.
    pub exclude_kinds: BTreeSet<NullKind>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
}

impl Counts {
    pub fn add(&mut self, other: Counts) {
        self.tp += other.tp;
        self.fp += other.fp;
        self.fn_ += other.fn_;
    }

    /// Percent. With nothing predicted, 100 if nothing was missed, else 0.
    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp, self.fn_ == 0)
    }

    /// Percent. With nothing to find, 100 if nothing was invented, else 0.
    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_, self.fp == 0)
    }

    pub fn f1(&self) -> f64 {
        let (p, r) = (self.precision(), self.recall());
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    pub fn gold(&self) -> usize {
        self.tp + self.fn_
    }

    pub fn predicted(&self) -> usize {
        self.tp + self.fp
    }
}

fn ratio(num: usize, den: usize, perfect_if_empty: bool) -> f64 {
    if den == 0 {
        if perfect_if_empty {
            100.0
        } else {
            0.0
        }
    } else {
        100.0 * num as f64 / den as f64
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalReport {
    pub per_kind: BTreeMap<NullKind, Counts>,
    pub overall: Counts,
    pub sentences_total: usize,
    pub sentences_skipped: usize,
    pub skip_reasons: BTreeMap<SkipReason, usize>,
    /// Zero-based indices of skipped sentences.
    pub skipped: Vec<(usize, SkipReason)>,
    pub options: EvalOptions,
}

impl EvalReport {
    pub fn sentences_scored(&self) -> usize {
        self.sentences_total - self.sentences_skipped
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    LengthMismatch { gold: usize, pred: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::LengthMismatch { gold, pred } => {
                write!(f, "{} gold trees but {} predictions", gold, pred)
            }
        }
    }
}

/// Match one sentence. Returns per-kind counts.
pub fn score_sentence(gold: &SyntaxTree, pred: &SyntaxTree, options: &EvalOptions) -> BTreeMap<NullKind, Counts> {
    let keep = |m: &NullMention| !options.exclude_kinds.contains(&m.kind);
    let g: Vec<NullMention> = extract_mentions(gold, options.labeled)
        .into_iter()
        .filter(keep)
        .collect();
    let p: Vec<NullMention> = extract_mentions(pred, options.labeled)
        .into_iter()
        .filter(keep)
        .collect();

    let mut pool: BTreeMap<_, usize> = BTreeMap::new();
    for m in &g {
        *pool.entry(m.key(options.labeled)).or_default() += 1;
    }
    let mut out: BTreeMap<NullKind, Counts> = BTreeMap::new();
    for m in &p {
        let c = out.entry(m.kind).or_default();
        match pool.get_mut(&m.key(options.labeled)) {
            Some(n) if *n > 0 => {
                *n -= 1;
                c.tp += 1;
            }
            _ => c.fp += 1,
        }
    }
    for (key, n) in pool {
        if n > 0 {
            out.entry(key.0).or_default().fn_ += n;
        }
    }
    out
}

pub fn score_corpus(gold: &[SyntaxTree], pred: &[Prediction], options: &EvalOptions) -> Result<EvalReport, EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::LengthMismatch {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    let mut report = EvalReport {
        sentences_total: gold.len(),
        options: options.clone(),
        ..EvalReport::default()
    };
    for (i, (g, p)) in gold.iter().zip(pred).enumerate() {
        let skip = match p {
            Prediction::Malformed(_) => Some(SkipReason::Malformed),
            Prediction::Tree(t) => match align_terminals(g, t) {
                Alignment::Aligned { .. } => {
                    for (kind, c) in score_sentence(g, t, options) {
                        report.per_kind.entry(kind).or_default().add(c);
                        report.overall.add(c);
                    }
                    None
                }
                Alignment::Mismatch { .. } => Some(SkipReason::TerminalCount),
            },
        };
        if let Some(reason) = skip {
            report.sentences_skipped += 1;
            *report.skip_reasons.entry(reason).or_default() += 1;
            report.skipped.push((i, reason));
            if options.penalize_skips {
                for m in extract_mentions(g, false) {
                    if options.exclude_kinds.contains(&m.kind) {
                        continue;
                    }
                    report.per_kind.entry(m.kind).or_default().fn_ += 1;
                    report.overall.fn_ += 1;
                }
            }
        }
    }
    Ok(report)
}
