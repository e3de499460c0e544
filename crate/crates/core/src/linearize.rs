//! Depth-first token sequences for seq2seq training and decoding.
//!
//! Grammar of a sequence (tokens separated by single spaces):
//!
//! ```text
//! open   = "(" LABEL      one per internal phrase
//! close  = ")" LABEL      must repeat the matching open label
//! null   = *T* | * | 0 | *PRO* | ...   a NullSymbol without coindex
//! pos    = any other token             a preterminal, word dropped
//! ```
//!
//! `-NONE-` preterminals are not bracketed: the null symbol stands alone
//! inside whatever phrase dominated it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::label::{decompose_label, NodeLabel};
use crate::null::NullSymbol;
use crate::strip::{strip_nulls, StripError};
use crate::tree::SyntaxTree;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Token {
    Open(String),
    Close(String),
    Pos(String),
    Null(NullSymbol),
}

impl Token {
    /// Classify one whitespace-free token.
    pub fn classify(raw: &str) -> Token {
        if let Some(label) = raw.strip_prefix('(').filter(|l| !l.is_empty()) {
            Token::Open(label.to_string())
        } else if let Some(label) = raw.strip_prefix(')').filter(|l| !l.is_empty()) {
            Token::Close(label.to_string())
        } else if let Some(sym) = NullSymbol::parse(raw) {
            Token::Null(NullSymbol::new(sym.kind))
        } else {
            Token::Pos(raw.to_string())
        }
    }

    pub fn is_null(&self) -> bool {
        matches!(self, Token::Null(_))
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Open(l) => write!(f, "({}", l),
            Token::Close(l) => write!(f, "){}", l),
            Token::Pos(p) => f.write_str(p),
            Token::Null(s) => f.write_str(s.kind.symbol()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinearSequence {
    pub tokens: Vec<Token>,
}

impl LinearSequence {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn pos_count(&self) -> usize {
        self.tokens.iter().filter(|t| matches!(t, Token::Pos(_))).count()
    }
}

impl fmt::Display for LinearSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MalformedKind {
    /// No tokens at all.
    Empty,
    /// A token before the first open or after the root closed.
    OutsideRoot,
    /// A close token with no open phrase.
    UnmatchedClose,
    /// `(X ... )Y` with X != Y.
    LabelMismatch { open: String, close: String },
    /// `(X )X` with nothing inside.
    EmptyPhrase(String),
    /// Input ended inside an open phrase.
    Unclosed(String),
    /// `(` or `)` with no label.
    BareBracket,
}

/// First violation found in a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MalformedReport {
    pub kind: MalformedKind,
    /// Zero-based token position.
    pub position: usize,
}

impl fmt::Display for MalformedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MalformedKind::Empty => f.write_str("empty sequence")?,
            MalformedKind::OutsideRoot => f.write_str("token outside the root phrase")?,
            MalformedKind::UnmatchedClose => f.write_str("close without open")?,
            MalformedKind::LabelMismatch { open, close } => write!(f, "`({}` closed by `){}`", open, close)?,
            MalformedKind::EmptyPhrase(l) => write!(f, "empty phrase `({} ){}`", l, l)?,
            MalformedKind::Unclosed(l) => write!(f, "`({}` never closed", l)?,
            MalformedKind::BareBracket => f.write_str("bracket without a label")?,
        }
        write!(f, " at token {}", self.position)
    }
}

/// Emit the depth-first token sequence. Words and all indices are dropped;
/// labels are bare categories unless `with_function_labels`.
pub fn linearize(tree: &SyntaxTree, with_function_labels: bool) -> LinearSequence {
    let mut tokens = Vec::new();
    emit(tree, with_function_labels, &mut tokens);
    LinearSequence { tokens }
}

fn emit(tree: &SyntaxTree, labels: bool, out: &mut Vec<Token>) {
    if let Some(sym) = tree.null_symbol() {
        out.push(Token::Null(NullSymbol::new(sym.kind)));
        return;
    }
    let label = match tree.label() {
        Some(l) => l,
        None => return,
    };
    if tree.is_preterminal() {
        out.push(Token::Pos(label.category.clone()));
        return;
    }
    let text = label_text(label, labels);
    out.push(Token::Open(text.clone()));
    for c in tree.children() {
        emit(c, labels, out);
    }
    out.push(Token::Close(text));
}

fn label_text(label: &NodeLabel, labels: bool) -> String {
    if labels {
        label.tagged_category()
    } else {
        label.category.clone()
    }
}

/// Check a raw whitespace-separated sequence.
pub fn validate_sequence(raw: &str) -> Result<LinearSequence, MalformedReport> {
    let mut tokens = Vec::new();
    for (i, t) in raw.split_whitespace().enumerate() {
        if t == "(" || t == ")" {
            return Err(MalformedReport {
                kind: MalformedKind::BareBracket,
                position: i,
            });
        }
        tokens.push(Token::classify(t));
    }
    let seq = LinearSequence { tokens };
    build(&seq)?;
    Ok(seq)
}

/// Rebuild a tree, giving the i-th POS token the dummy word `w_i`.
pub fn delinearize(seq: &LinearSequence) -> Result<SyntaxTree, MalformedReport> {
    build(seq)
}

fn build(seq: &LinearSequence) -> Result<SyntaxTree, MalformedReport> {
    let err = |kind, position| Err(MalformedReport { kind, position });
    if seq.tokens.is_empty() {
        return err(MalformedKind::Empty, 0);
    }
    let mut stack: Vec<(&str, Vec<SyntaxTree>)> = Vec::new();
    let mut root: Option<SyntaxTree> = None;
    let mut words = 0usize;
    for (i, tok) in seq.tokens.iter().enumerate() {
        if root.is_some() {
            return err(MalformedKind::OutsideRoot, i);
        }
        match tok {
            Token::Open(l) => stack.push((l.as_str(), Vec::new())),
            Token::Close(l) => {
                let (open, children) = match stack.pop() {
                    Some(f) => f,
                    None => return err(MalformedKind::UnmatchedClose, i),
                };
                if open != l {
                    return err(
                        MalformedKind::LabelMismatch {
                            open: open.to_string(),
                            close: l.clone(),
                        },
                        i,
                    );
                }
                if children.is_empty() {
                    return err(MalformedKind::EmptyPhrase(l.clone()), i);
                }
                let node = SyntaxTree::internal(decompose_label(open), children);
                match stack.last_mut() {
                    Some(parent) => parent.1.push(node),
                    None => root = Some(node),
                }
            }
            Token::Pos(_) | Token::Null(_) if stack.is_empty() => {
                return err(MalformedKind::OutsideRoot, i);
            }
            Token::Pos(p) => {
                words += 1;
                let node = SyntaxTree::preterminal(decompose_label(p), format!("w_{}", words));
                stack.last_mut().expect("checked non-empty").1.push(node);
            }
            Token::Null(s) => {
                stack
                    .last_mut()
                    .expect("checked non-empty")
                    .1
                    .push(SyntaxTree::null(*s));
            }
        }
    }
    match (root, stack.last()) {
        (Some(r), _) => Ok(r),
        (None, Some((l, _))) => err(MalformedKind::Unclosed(l.to_string()), seq.tokens.len()),
        (None, None) => err(MalformedKind::Empty, 0),
    }
}

/// Drop null tokens, then any phrase left with nothing inside, repeatedly.
pub fn erase_nulls(seq: &LinearSequence) -> LinearSequence {
    let mut out: Vec<Token> = Vec::with_capacity(seq.tokens.len());
    for tok in &seq.tokens {
        match tok {
            Token::Null(_) => {}
            Token::Close(l) if matches!(out.last(), Some(Token::Open(o)) if o == l) => {
                out.pop();
            }
            other => out.push(other.clone()),
        }
    }
    LinearSequence { tokens: out }
}

/// One training example: the null-free source and the gold target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetPair {
    pub source: LinearSequence,
    pub target: LinearSequence,
    pub sentence_id: String,
}

pub fn build_pair(gold: &SyntaxTree, with_function_labels: bool, sentence_id: &str) -> Result<DatasetPair, StripError> {
    let stripped = strip_nulls(gold)?;
    Ok(DatasetPair {
        source: linearize(&stripped, with_function_labels),
        target: linearize(gold, with_function_labels),
        sentence_id: sentence_id.to_string(),
    })
}

/// The tree `delinearize(linearize(tree, labels))` is expected to equal:
/// words replaced by `w_i`, indices and coindices dropped, and function
/// tags dropped unless `with_function_labels`.
pub fn sequence_view(tree: &SyntaxTree, with_function_labels: bool) -> SyntaxTree {
    let mut words = 0;
    view(tree, with_function_labels, &mut words)
}

fn view(tree: &SyntaxTree, labels: bool, words: &mut usize) -> SyntaxTree {
    if let Some(sym) = tree.null_symbol() {
        return SyntaxTree::null(NullSymbol::new(sym.kind));
    }
    match tree {
        SyntaxTree::Leaf { .. } => tree.clone(),
        SyntaxTree::Internal { label, children } => {
            let label = decompose_label(&label_text(label, labels));
            if tree.is_preterminal() {
                *words += 1;
                return SyntaxTree::preterminal(NodeLabel::bare(label.category), format!("w_{}", words));
            }
            SyntaxTree::internal(label, children.iter().map(|c| view(c, labels, words)).collect())
        }
    }
}
