//! The constituency tree model and read-only navigation.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::label::NodeLabel;
use crate::null::NullSymbol;

/// A Penn-style constituency tree.
///
/// Internal nodes carry a decomposed label; leaves carry the token text. A
/// preterminal is an internal node whose only child is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SyntaxTree {
    Internal {
        label: NodeLabel,
        children: Vec<SyntaxTree>,
    },
    Leaf {
        text: String,
    },
}

/// Child indices from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath(pub Vec<usize>);

impl TreePath {
    pub fn root() -> Self {
        TreePath(Vec::new())
    }

    pub fn child(&self, index: usize) -> TreePath {
        let mut v = self.0.clone();
        v.push(index);
        TreePath(v)
    }

    pub fn parent(&self) -> Option<TreePath> {
        if self.0.is_empty() {
            None
        } else {
            Some(TreePath(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for i in &self.0 {
            write!(f, "/{}", i)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The root is a bare leaf.
    LeafRoot,
    EmptyInternal {
        path: TreePath,
    },
    /// A leaf next to other children, or under a node with several children.
    LeafInPhrase {
        path: TreePath,
    },
    BadCategory {
        path: TreePath,
        category: String,
    },
    BadLeafText {
        path: TreePath,
        text: String,
    },
    UnknownNull {
        path: TreePath,
        text: String,
    },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::LeafRoot => f.write_str("tree root is a bare token"),
            TreeError::EmptyInternal { path } => write!(f, "internal node at {} has no children", path),
            TreeError::LeafInPhrase { path } => {
                write!(f, "token at {} is not the only child of a preterminal", path)
            }
            TreeError::BadCategory { path, category } => {
                write!(f, "invalid category `{}` at {}", category, path)
            }
            TreeError::BadLeafText { path, text } => write!(f, "invalid token `{}` at {}", text, path),
            TreeError::UnknownNull { path, text } => {
                write!(f, "unknown null element `{}` at {}", text, path)
            }
        }
    }
}

fn is_atom(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '(' || c == ')')
}

impl SyntaxTree {
    pub fn internal(label: impl Into<NodeLabel>, children: Vec<SyntaxTree>) -> Self {
        SyntaxTree::Internal {
            label: label.into(),
            children,
        }
    }

    pub fn leaf(text: impl Into<String>) -> Self {
        SyntaxTree::Leaf { text: text.into() }
    }

    /// `(POS word)`.
    pub fn preterminal(pos: impl Into<NodeLabel>, word: impl Into<String>) -> Self {
        SyntaxTree::internal(pos, alloc::vec![SyntaxTree::leaf(word)])
    }

    /// `(-NONE- sym)`.
    pub fn null(symbol: NullSymbol) -> Self {
        SyntaxTree::preterminal(NodeLabel::bare("-NONE-"), symbol.to_string())
    }

    /// `(LABEL (-NONE- sym))`.
    pub fn wrapped_null(label: impl Into<NodeLabel>, symbol: NullSymbol) -> Self {
        SyntaxTree::internal(label, alloc::vec![SyntaxTree::null(symbol)])
    }

    pub fn label(&self) -> Option<&NodeLabel> {
        match self {
            SyntaxTree::Internal { label, .. } => Some(label),
            SyntaxTree::Leaf { .. } => None,
        }
    }

    pub fn label_mut(&mut self) -> Option<&mut NodeLabel> {
        match self {
            SyntaxTree::Internal { label, .. } => Some(label),
            SyntaxTree::Leaf { .. } => None,
        }
    }

    pub fn category(&self) -> Option<&str> {
        self.label().map(|l| l.category.as_str())
    }

    /// True for an internal node with the given bare category.
    pub fn is(&self, category: &str) -> bool {
        self.category() == Some(category)
    }

    pub fn children(&self) -> &[SyntaxTree] {
        match self {
            SyntaxTree::Internal { children, .. } => children,
            SyntaxTree::Leaf { .. } => &[],
        }
    }

    /// Panics on a leaf.
    pub fn children_mut(&mut self) -> &mut Vec<SyntaxTree> {
        match self {
            SyntaxTree::Internal { children, .. } => children,
            SyntaxTree::Leaf { .. } => panic!("leaves have no children"),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, SyntaxTree::Leaf { .. })
    }

    pub fn is_preterminal(&self) -> bool {
        matches!(self, SyntaxTree::Internal { children, .. }
            if children.len() == 1 && children[0].is_leaf())
    }

    /// The token under a preterminal.
    pub fn word(&self) -> Option<&str> {
        match self.children() {
            [SyntaxTree::Leaf { text }] => Some(text),
            _ => None,
        }
    }

    /// A `-NONE-` preterminal.
    pub fn is_null_leaf(&self) -> bool {
        self.is_preterminal() && self.is("-NONE-")
    }

    pub fn null_symbol(&self) -> Option<NullSymbol> {
        if self.is("-NONE-") {
            self.word().and_then(NullSymbol::parse)
        } else {
            None
        }
    }

    /// True when the subtree dominates no overt terminal.
    pub fn is_null_only(&self) -> bool {
        match self {
            SyntaxTree::Leaf { .. } => false,
            SyntaxTree::Internal { .. } if self.is_null_leaf() => true,
            SyntaxTree::Internal { .. } if self.is_preterminal() => false,
            SyntaxTree::Internal { children, .. } => children.iter().all(SyntaxTree::is_null_only),
        }
    }

    /// Number of overt (non-null) terminals in the subtree.
    pub fn overt_len(&self) -> usize {
        match self {
            SyntaxTree::Leaf { .. } => 1,
            _ if self.is_null_leaf() => 0,
            SyntaxTree::Internal { children, .. } => children.iter().map(SyntaxTree::overt_len).sum(),
        }
    }

    pub fn get(&self, path: &TreePath) -> Option<&SyntaxTree> {
        let mut node = self;
        for &i in path.as_slice() {
            node = node.children().get(i)?;
        }
        Some(node)
    }

    pub fn get_mut(&mut self, path: &TreePath) -> Option<&mut SyntaxTree> {
        let mut node = self;
        for &i in path.as_slice() {
            node = match node {
                SyntaxTree::Internal { children, .. } => children.get_mut(i)?,
                SyntaxTree::Leaf { .. } => return None,
            };
        }
        Some(node)
    }

    /// Overt terminals in order, as `(POS, token)`.
    pub fn overt_terminals(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        self.collect_overt(&mut out);
        out
    }

    fn collect_overt<'a>(&'a self, out: &mut Vec<(&'a str, &'a str)>) {
        if self.is_preterminal() {
            if !self.is_null_leaf() {
                out.push((self.category().unwrap_or(""), self.word().unwrap_or("")));
            }
            return;
        }
        for c in self.children() {
            c.collect_overt(out);
        }
    }

    /// All leaf tokens in order, null leaves included.
    pub fn leaves(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.visit(&mut |_, node| {
            if let SyntaxTree::Leaf { text } = node {
                out.push(text.as_str());
            }
        });
        out
    }

    /// Every `-NONE-` preterminal in order with its path.
    pub fn null_leaves(&self) -> Vec<(NullSymbol, TreePath)> {
        let mut out = Vec::new();
        self.visit(&mut |path, node| {
            if node.is_null_leaf() {
                if let Some(sym) = node.null_symbol() {
                    out.push((sym, path.clone()));
                }
            }
        });
        out
    }

    /// Pre-order walk with paths.
    pub fn visit<'a, F>(&'a self, f: &mut F)
    where
        F: FnMut(&TreePath, &'a SyntaxTree),
    {
        let mut path = TreePath::root();
        self.visit_inner(&mut path, f);
    }

    fn visit_inner<'a, F>(&'a self, path: &mut TreePath, f: &mut F)
    where
        F: FnMut(&TreePath, &'a SyntaxTree),
    {
        f(path, self);
        for (i, c) in self.children().iter().enumerate() {
            path.0.push(i);
            c.visit_inner(path, f);
            path.0.pop();
        }
    }

    /// Paths of all internal nodes in pre-order.
    pub fn internal_paths(&self) -> Vec<TreePath> {
        let mut out = Vec::new();
        self.visit(&mut |path, node| {
            if !node.is_leaf() {
                out.push(path.clone());
            }
        });
        out
    }

    /// Overt terminals strictly preceding the node at `path`.
    pub fn overt_before(&self, path: &TreePath) -> usize {
        let mut count = 0;
        let mut node = self;
        for &i in path.as_slice() {
            let children = node.children();
            count += children[..i.min(children.len())]
                .iter()
                .map(SyntaxTree::overt_len)
                .sum::<usize>();
            match children.get(i) {
                Some(c) => node = c,
                None => break,
            }
        }
        count
    }

    /// Largest identity index or coindex anywhere in the tree.
    pub fn max_index(&self) -> u32 {
        let mut max = 0;
        self.visit(&mut |_, node| {
            if let Some(label) = node.label() {
                max = max.max(label.identity_index.unwrap_or(0));
            }
            if let Some(sym) = node.null_symbol() {
                max = max.max(sym.coindex.unwrap_or(0));
            }
        });
        max
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(SyntaxTree::node_count).sum::<usize>()
    }

    /// Check structural invariants.
    pub fn validate(&self) -> Result<(), TreeError> {
        if self.is_leaf() {
            return Err(TreeError::LeafRoot);
        }
        let mut err = None;
        self.visit(&mut |path, node| {
            if err.is_some() {
                return;
            }
            match node {
                SyntaxTree::Leaf { text } => {
                    if !is_atom(text) {
                        err = Some(TreeError::BadLeafText {
                            path: path.clone(),
                            text: text.clone(),
                        });
                    }
                }
                SyntaxTree::Internal { label, children } => {
                    if !is_atom(&label.category) {
                        err = Some(TreeError::BadCategory {
                            path: path.clone(),
                            category: label.category.clone(),
                        });
                    } else if children.is_empty() {
                        err = Some(TreeError::EmptyInternal { path: path.clone() });
                    } else if children.len() > 1 {
                        if let Some(i) = children.iter().position(SyntaxTree::is_leaf) {
                            err = Some(TreeError::LeafInPhrase { path: path.child(i) });
                        }
                    } else if label.is_none_tag() && node.null_symbol().is_none() {
                        err = Some(TreeError::UnknownNull {
                            path: path.clone(),
                            text: node.word().unwrap_or("").to_string(),
                        });
                    }
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}
