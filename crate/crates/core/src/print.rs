//! Canonical bracketed output.

use alloc::string::{String, ToString};
use core::fmt::Write;

use crate::tree::{SyntaxTree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrintStyle {
    /// `(LABEL child ...)` on one line with single spaces.
    #[default]
    OneLine,
    /// One phrase per line, two-space indentation; phrases whose children
    /// are all preterminals stay on one line.
    Indented,
}

/// Print a validated tree.
pub fn print_tree(tree: &SyntaxTree, style: PrintStyle) -> Result<String, TreeError> {
    tree.validate()?;
    let mut out = String::new();
    match style {
        PrintStyle::OneLine => write_one_line(tree, &mut out),
        PrintStyle::Indented => write_indented(tree, 0, &mut out),
    }
    Ok(out)
}

impl core::fmt::Display for SyntaxTree {
    /// One-line bracketing without validation.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut out = String::new();
        write_one_line(self, &mut out);
        f.write_str(&out)
    }
}

fn write_one_line(tree: &SyntaxTree, out: &mut String) {
    match tree {
        SyntaxTree::Leaf { text } => out.push_str(text),
        SyntaxTree::Internal { label, children } => {
            let _ = write!(out, "({}", label);
            for c in children {
                out.push(' ');
                write_one_line(c, out);
            }
            out.push(')');
        }
    }
}

fn write_indented(tree: &SyntaxTree, depth: usize, out: &mut String) {
    let flat = tree.is_preterminal() || tree.children().iter().all(SyntaxTree::is_preterminal);
    if flat {
        write_one_line(tree, out);
        return;
    }
    let label = tree.label().map(ToString::to_string).unwrap_or_default();
    out.push('(');
    out.push_str(&label);
    for c in tree.children() {
        out.push('\n');
        for _ in 0..depth + 1 {
            out.push_str("  ");
        }
        write_indented(c, depth + 1, out);
    }
    out.push(')');
}
