//! Immediate-child context patterns such as `(VP VV NP (IP VP))`.
//!
//! A pattern names a category and, optionally, the exact category sequence
//! of its children. A trailing `...` admits any further children. Nested
//! patterns constrain a child's own children. Children in the skippable set
//! may appear anywhere in a matched sequence without being listed.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::tree::{SyntaxTree, TreePath};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub category: String,
    /// `None` for a bare category element.
    pub children: Option<Vec<Pattern>>,
    /// Children after the listed ones are unconstrained.
    pub open: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternError(pub String);

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad pattern: {}", self.0)
    }
}

impl Pattern {
    pub fn parse(text: &str) -> Result<Pattern, PatternError> {
        let toks: Vec<&str> = text.split_whitespace().flat_map(split_parens).collect();
        let mut pos = 0;
        let p = parse_node(&toks, &mut pos)?;
        if p.children.is_none() {
            return Err(PatternError("pattern must be bracketed".to_string()));
        }
        if pos != toks.len() {
            return Err(PatternError("trailing input".to_string()));
        }
        Ok(p)
    }

    /// Path of the target IP relative to a matched node: the last `IP`
    /// element in preorder, excluding the pattern root.
    fn target(&self) -> Option<Vec<usize>> {
        let mut best = None;
        let mut stack = Vec::new();
        self.find_target(&mut stack, &mut best, true);
        best
    }

    fn find_target(&self, stack: &mut Vec<usize>, best: &mut Option<Vec<usize>>, root: bool) {
        if !root && self.category == "IP" {
            *best = Some(stack.clone());
        }
        if let Some(kids) = &self.children {
            for (i, k) in kids.iter().enumerate() {
                stack.push(i);
                k.find_target(stack, best, false);
                stack.pop();
            }
        }
    }

    /// Match against `node`; on success return the tree path (relative to
    /// `node`) of the target IP.
    pub fn match_target(&self, node: &SyntaxTree, skippable: &BTreeSet<String>) -> Option<TreePath> {
        let target = self.target()?;
        let mut bound = Vec::new();
        if !match_node(self, node, skippable, &mut bound) {
            return None;
        }
        // `bound` holds (pattern path, tree path) for every element.
        bound.into_iter().find(|(p, _)| *p == target).map(|(_, t)| TreePath(t))
    }
}

fn split_parens(word: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in word.char_indices() {
        if c == '(' || c == ')' {
            if start < i {
                out.push(&word[start..i]);
            }
            out.push(&word[i..i + 1]);
            start = i + 1;
        }
    }
    if start < word.len() {
        out.push(&word[start..]);
    }
    out
}

fn parse_node(toks: &[&str], pos: &mut usize) -> Result<Pattern, PatternError> {
    match toks.get(*pos) {
        Some(&"(") => {
            *pos += 1;
            let category = match toks.get(*pos) {
                Some(t) if *t != "(" && *t != ")" && *t != "..." => t.to_string(),
                _ => return Err(PatternError("missing category".to_string())),
            };
            *pos += 1;
            let mut children = Vec::new();
            let mut open = false;
            loop {
                match toks.get(*pos) {
                    Some(&")") => {
                        *pos += 1;
                        break;
                    }
                    Some(&"...") => {
                        open = true;
                        *pos += 1;
                        if toks.get(*pos) != Some(&")") {
                            return Err(PatternError("`...` must come last".to_string()));
                        }
                    }
                    Some(_) => children.push(parse_node(toks, pos)?),
                    None => return Err(PatternError("unclosed pattern".to_string())),
                }
            }
            if children.is_empty() {
                return Err(PatternError("empty child list".to_string()));
            }
            Ok(Pattern {
                category,
                children: Some(children),
                open,
            })
        }
        Some(t) if *t != ")" && *t != "..." => {
            *pos += 1;
            Ok(Pattern {
                category: t.to_string(),
                children: None,
                open: false,
            })
        }
        _ => Err(PatternError("unexpected token".to_string())),
    }
}

type Bindings = Vec<(Vec<usize>, Vec<usize>)>;

fn match_node(p: &Pattern, node: &SyntaxTree, skippable: &BTreeSet<String>, bound: &mut Bindings) -> bool {
    if !node.is(&p.category) || node.is_leaf() {
        return false;
    }
    bound.clear();
    bound.push((Vec::new(), Vec::new()));
    match &p.children {
        None => true,
        Some(elems) => {
            if node.is_preterminal() {
                return false;
            }
            let mut local = Vec::new();
            if match_seq(elems, p.open, node.children(), 0, 0, skippable, &mut local) {
                bound.extend(local);
                true
            } else {
                false
            }
        }
    }
}

fn match_seq(
    elems: &[Pattern],
    open: bool,
    children: &[SyntaxTree],
    e: usize,
    c: usize,
    skippable: &BTreeSet<String>,
    bound: &mut Bindings,
) -> bool {
    if e == elems.len() {
        return open || children[c..].iter().all(|k| is_skippable(k, skippable));
    }
    if c == children.len() {
        return false;
    }
    let mark = bound.len();
    let mut sub = Vec::new();
    if match_node(&elems[e], &children[c], skippable, &mut sub) {
        for (pp, tp) in sub {
            let mut pp2 = alloc::vec![e];
            pp2.extend(pp);
            let mut tp2 = alloc::vec![c];
            tp2.extend(tp);
            bound.push((pp2, tp2));
        }
        if match_seq(elems, open, children, e + 1, c + 1, skippable, bound) {
            return true;
        }
        bound.truncate(mark);
    }
    is_skippable(&children[c], skippable) && match_seq(elems, open, children, e, c + 1, skippable, bound)
}

fn is_skippable(node: &SyntaxTree, skippable: &BTreeSet<String>) -> bool {
    node.category().is_some_and(|c| skippable.contains(c))
}
