//! Deterministic post-processing restoration of null elements.
//!
//! Each rule runs as a full-tree pass: candidate sites are collected on the
//! tree as it stood when the pass began, then all edits are applied at once,
//! rightmost-deepest first so that earlier paths stay valid.

pub mod ctb;
pub mod pattern;
pub mod ptb;

use alloc::string::String;
use alloc::vec::Vec;

use crate::label::NodeLabel;
use crate::tree::{SyntaxTree, TreePath};

/// One inserted subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: String,
    /// Child slot the subtree was inserted at, in the coordinates of the
    /// tree the pass started from.
    pub path: TreePath,
    /// Overt terminals preceding the insertion; stable across passes.
    pub anchor: usize,
    pub inserted: SyntaxTree,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTraceLog {
    pub firings: Vec<RuleFiring>,
}

impl RuleTraceLog {
    pub fn is_empty(&self) -> bool {
        self.firings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.firings.len()
    }

    pub fn rules(&self) -> impl Iterator<Item = &str> {
        self.firings.iter().map(|f| f.rule.as_str())
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Edit {
    Insert {
        parent: TreePath,
        index: usize,
        node: SyntaxTree,
    },
    /// Replace the child at `parent/index`.
    Replace {
        parent: TreePath,
        index: usize,
        node: SyntaxTree,
    },
    /// Put the node at `path` under a new node whose first child is `before`.
    Wrap {
        path: TreePath,
        label: NodeLabel,
        before: SyntaxTree,
    },
    SetIdentity {
        path: TreePath,
        index: u32,
    },
}

impl Edit {
    fn key(&self) -> Option<TreePath> {
        match self {
            Edit::Insert { parent, index, .. } | Edit::Replace { parent, index, .. } => Some(parent.child(*index)),
            Edit::Wrap { path, .. } => Some(path.clone()),
            Edit::SetIdentity { .. } => None,
        }
    }
}

/// Edits and log entries gathered by one pass.
#[derive(Debug, Default)]
pub(crate) struct Pass {
    edits: Vec<Edit>,
    firings: Vec<RuleFiring>,
}

impl Pass {
    pub(crate) fn insert(&mut self, tree: &SyntaxTree, rule: &str, parent: TreePath, index: usize, node: SyntaxTree) {
        self.log(tree, rule, &parent, index, &node);
        self.edits.push(Edit::Insert { parent, index, node });
    }

    pub(crate) fn replace(&mut self, tree: &SyntaxTree, rule: &str, parent: TreePath, index: usize, node: SyntaxTree) {
        self.log(tree, rule, &parent, index, &node);
        self.edits.push(Edit::Replace { parent, index, node });
    }

    /// Log `before` as inserted immediately left of the node at `path`.
    pub(crate) fn wrap(&mut self, tree: &SyntaxTree, rule: &str, path: TreePath, label: NodeLabel, before: SyntaxTree) {
        let parent = path.parent().unwrap_or_default();
        let index = path.last().unwrap_or(0);
        self.log(tree, rule, &parent, index, &before);
        self.edits.push(Edit::Wrap { path, label, before });
    }

    pub(crate) fn set_identity(&mut self, path: TreePath, index: u32) {
        self.edits.push(Edit::SetIdentity { path, index });
    }

    fn log(&mut self, tree: &SyntaxTree, rule: &str, parent: &TreePath, index: usize, node: &SyntaxTree) {
        self.firings.push(RuleFiring {
            rule: String::from(rule),
            path: parent.child(index),
            anchor: slot_anchor(tree, parent, index),
            inserted: node.clone(),
        });
    }

    pub(crate) fn apply(self, tree: &mut SyntaxTree, log: &mut RuleTraceLog) {
        let mut structural = Vec::new();
        for (seq, edit) in self.edits.into_iter().enumerate() {
            match edit {
                Edit::SetIdentity { path, index } => {
                    if let Some(label) = tree.get_mut(&path).and_then(SyntaxTree::label_mut) {
                        label.identity_index = Some(index);
                    }
                }
                other => structural.push((other.key().unwrap_or_default(), seq, other)),
            }
        }
        structural.sort_by(|a, b| (&b.0, b.1).cmp(&(&a.0, a.1)));
        for (_, _, edit) in structural {
            match edit {
                Edit::Insert { parent, index, node } => {
                    let p = tree.get_mut(&parent).expect("edit path is valid");
                    p.children_mut().insert(index, node);
                }
                Edit::Replace { parent, index, node } => {
                    let p = tree.get_mut(&parent).expect("edit path is valid");
                    p.children_mut()[index] = node;
                }
                Edit::Wrap { path, label, before } => {
                    let slot = tree.get_mut(&path).expect("edit path is valid");
                    let inner = core::mem::replace(slot, SyntaxTree::leaf(""));
                    *slot = SyntaxTree::Internal {
                        label,
                        children: alloc::vec![before, inner],
                    };
                }
                Edit::SetIdentity { .. } => unreachable!(),
            }
        }
        log.firings.extend(self.firings);
    }
}

/// Overt terminals preceding child slot `index` of the node at `parent`.
pub(crate) fn slot_anchor(tree: &SyntaxTree, parent: &TreePath, index: usize) -> usize {
    let before_parent = tree.overt_before(parent);
    let within = tree
        .get(parent)
        .map(|p| {
            p.children()[..index.min(p.children().len())]
                .iter()
                .map(SyntaxTree::overt_len)
                .sum::<usize>()
        })
        .unwrap_or(0);
    before_parent + within
}

pub(crate) fn cat(node: &SyntaxTree) -> &str {
    node.category().unwrap_or("")
}

/// Position of the first child with the given category.
pub(crate) fn child_index(node: &SyntaxTree, category: &str) -> Option<usize> {
    node.children().iter().position(|c| c.is(category))
}

pub(crate) fn has_child(node: &SyntaxTree, category: &str) -> bool {
    child_index(node, category).is_some()
}

/// Parse a newline-separated word list, ignoring `#` comments.
pub fn parse_word_list(text: &str) -> alloc::collections::BTreeSet<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.to_lowercase())
        .collect()
}
