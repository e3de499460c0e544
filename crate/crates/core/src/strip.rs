//! Null-element removal, emulating parser output "without traces".

use alloc::vec::Vec;
use core::fmt;

use crate::tree::SyntaxTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripError {
    /// The whole tree is null material.
    EmptyAfterStrip,
}

impl fmt::Display for StripError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tree is empty after removing null elements")
    }
}

/// Remove every `-NONE-` preterminal and, recursively, every ancestor left
/// without children. Single-branching survivors are kept as they are.
pub fn strip_nulls(tree: &SyntaxTree) -> Result<SyntaxTree, StripError> {
    prune(tree).ok_or(StripError::EmptyAfterStrip)
}

fn prune(tree: &SyntaxTree) -> Option<SyntaxTree> {
    match tree {
        SyntaxTree::Leaf { .. } => Some(tree.clone()),
        _ if tree.is_null_leaf() => None,
        _ if tree.is_preterminal() => Some(tree.clone()),
        SyntaxTree::Internal { label, children } => {
            let kept: Vec<SyntaxTree> = children.iter().filter_map(prune).collect();
            if kept.is_empty() {
                None
            } else {
                Some(SyntaxTree::Internal {
                    label: label.clone(),
                    children: kept,
                })
            }
        }
    }
}

/// Reduce every label to its bare category (tags and indices dropped).
pub fn strip_annotations(tree: &SyntaxTree) -> SyntaxTree {
    match tree {
        SyntaxTree::Leaf { .. } => tree.clone(),
        SyntaxTree::Internal { label, children } => SyntaxTree::Internal {
            label: label.stripped(),
            children: children.iter().map(strip_annotations).collect(),
        },
    }
}

/// The canonical stripped form: nulls removed, then labels bared.
pub fn strip_all(tree: &SyntaxTree) -> Result<SyntaxTree, StripError> {
    strip_nulls(tree).map(|t| strip_annotations(&t))
}
