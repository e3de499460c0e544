//! Penn bracketed-text reader.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::label::{decompose_label, NodeLabel};
use crate::null::NullSymbol;
use crate::tree::SyntaxTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Unclosed bracket at end of input, or a stray `)`.
    Unbalanced,
    /// `()` or `(X)`.
    EmptyNode,
    /// A bare token where a bracketed subtree was expected.
    UnexpectedToken(String),
    /// A token mixed with subtrees, or two tokens under one node.
    LeafInPhrase,
    /// `( ... )` below the root.
    EmptyLabel,
    UnknownNull(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub offset: usize,
    /// Zero-based ordinal of the tree the error belongs to.
    pub tree: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Unbalanced => f.write_str("unbalanced parentheses")?,
            ParseErrorKind::EmptyNode => f.write_str("empty node")?,
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token `{}` where a subtree was expected", t)?,
            ParseErrorKind::LeafInPhrase => f.write_str("token mixed with subtrees")?,
            ParseErrorKind::EmptyLabel => f.write_str("empty label below the root")?,
            ParseErrorKind::UnknownNull(t) => write!(f, "unknown null element `{}`", t)?,
        }
        write!(f, " at byte {} (tree {})", self.offset, self.tree + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Tok<'_>)> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = text[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
        } else if c == '(' {
            out.push((i, Tok::Open));
            i += 1;
        } else if c == ')' {
            out.push((i, Tok::Close));
            i += 1;
        } else {
            let start = i;
            while i < bytes.len() {
                let c = text[i..].chars().next().unwrap();
                if c.is_whitespace() || c == '(' || c == ')' {
                    break;
                }
                i += c.len_utf8();
            }
            out.push((start, Tok::Atom(&text[start..i])));
        }
    }
    out
}

struct Frame {
    label: Option<NodeLabel>,
    children: Vec<SyntaxTree>,
    leaf: Option<String>,
}

fn parse_segment(toks: &[(usize, Tok<'_>)], ordinal: usize, end: usize) -> Result<SyntaxTree, ParseError> {
    let err = |kind, offset| ParseError {
        kind,
        offset,
        tree: ordinal,
    };
    let mut stack: Vec<Frame> = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let (off, tok) = toks[i];
        match tok {
            Tok::Open => {
                if let Some(top) = stack.last() {
                    if top.leaf.is_some() {
                        return Err(err(ParseErrorKind::LeafInPhrase, off));
                    }
                }
                let label = match toks.get(i + 1) {
                    Some((_, Tok::Atom(a))) => {
                        i += 1;
                        Some(decompose_label(a))
                    }
                    Some((_, Tok::Close)) => return Err(err(ParseErrorKind::EmptyNode, off)),
                    _ => None,
                };
                stack.push(Frame {
                    label,
                    children: Vec::new(),
                    leaf: None,
                });
            }
            Tok::Atom(a) => {
                let top = match stack.last_mut() {
                    Some(t) => t,
                    None => return Err(err(ParseErrorKind::UnexpectedToken(a.to_string()), off)),
                };
                if top.leaf.is_some() || !top.children.is_empty() || top.label.is_none() {
                    return Err(err(ParseErrorKind::LeafInPhrase, off));
                }
                top.leaf = Some(a.to_string());
            }
            Tok::Close => {
                let frame = match stack.pop() {
                    Some(f) => f,
                    None => return Err(err(ParseErrorKind::Unbalanced, off)),
                };
                let is_root = stack.is_empty();
                let label = match frame.label {
                    Some(l) => l,
                    None if is_root => NodeLabel::bare("TOP"),
                    None => return Err(err(ParseErrorKind::EmptyLabel, off)),
                };
                let node = if let Some(text) = frame.leaf {
                    if label.is_none_tag() && NullSymbol::parse(&text).is_none() {
                        return Err(err(ParseErrorKind::UnknownNull(text), off));
                    }
                    SyntaxTree::preterminal(label, text)
                } else if frame.children.is_empty() {
                    return Err(err(ParseErrorKind::EmptyNode, off));
                } else {
                    SyntaxTree::Internal {
                        label,
                        children: frame.children,
                    }
                };
                match stack.last_mut() {
                    Some(parent) => parent.children.push(node),
                    None => {
                        if let Some((off, _)) = toks.get(i + 1) {
                            return Err(err(ParseErrorKind::Unbalanced, *off));
                        }
                        return Ok(node);
                    }
                }
            }
        }
        i += 1;
    }
    Err(err(ParseErrorKind::Unbalanced, end))
}

/// Parse every tree in `text`, keeping going after a malformed tree.
///
/// Trees are delimited by bracket depth, so an error inside one tree does
/// not affect its neighbours. An unclosed tree ends at the next line that
/// starts with `(` in the first column.
pub fn parse_tree_segments(text: &str) -> Vec<Result<SyntaxTree, ParseError>> {
    let toks = tokenize(text);
    let mut out = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let ordinal = out.len();
        let (off, tok) = toks[i];
        match tok {
            Tok::Close => {
                out.push(Err(ParseError {
                    kind: ParseErrorKind::Unbalanced,
                    offset: off,
                    tree: ordinal,
                }));
                i += 1;
            }
            Tok::Atom(a) => {
                out.push(Err(ParseError {
                    kind: ParseErrorKind::UnexpectedToken(a.to_string()),
                    offset: off,
                    tree: ordinal,
                }));
                while i < toks.len() && toks[i].1 != Tok::Open {
                    i += 1;
                }
            }
            Tok::Open => {
                let start = i;
                let mut depth = 0usize;
                while i < toks.len() {
                    match toks[i].1 {
                        Tok::Open => depth += 1,
                        Tok::Close => depth -= 1,
                        Tok::Atom(_) => {}
                    }
                    i += 1;
                    if depth == 0 {
                        break;
                    }
                }
                if depth > 0 {
                    // Unclosed: resume at the next bracket opening a line.
                    let starts_line = |off: usize| off == 0 || text.as_bytes()[off - 1] == b'\n';
                    if let Some(k) = (start + 1..toks.len()).find(|&k| toks[k].1 == Tok::Open && starts_line(toks[k].0))
                    {
                        out.push(Err(ParseError {
                            kind: ParseErrorKind::Unbalanced,
                            offset: toks[k].0,
                            tree: ordinal,
                        }));
                        i = k;
                        continue;
                    }
                }
                out.push(parse_segment(&toks[start..i], ordinal, text.len()));
            }
        }
    }
    out
}

/// Parse all trees in document order, failing on the first malformed one.
pub fn parse_trees(text: &str) -> Result<Vec<SyntaxTree>, ParseError> {
    parse_tree_segments(text).into_iter().collect()
}
