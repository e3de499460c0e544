//! Null elements (empty categories) in Penn-style constituency treebanks.
//!
//! This crate holds the pure algorithmic parts of the toolkit: the bracketed
//! tree model and reader/printer, null-element removal, the English and
//! Chinese restoration rule engines, the seq2seq linearization format, the
//! null-element-only Parseval scorer and typology counts. Everything here is
//! `no_std` + `alloc`; file handling and the command line live in the
//! `nulltree` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod eval;
pub mod head;
pub mod label;
pub mod linearize;
pub mod null;
pub mod parse;
pub mod print;
pub mod rules;
pub mod stats;
pub mod strip;
pub mod tree;

#[doc(hidden)]
pub mod fixtures;

pub use eval::{
    align_terminals, extract_mentions, score_corpus, Alignment, Counts, EvalError, EvalOptions, EvalReport,
    NullMention, Prediction, SkipReason,
};
pub use head::{HeadRuleError, HeadRuleTable};
pub use label::{decompose_label, NodeLabel};
pub use linearize::{
    build_pair, delinearize, erase_nulls, linearize, validate_sequence, DatasetPair, LinearSequence, MalformedKind,
    MalformedReport, Token,
};
pub use null::{Language, LanguageProfile, NullKind, NullSymbol};
pub use parse::{parse_tree_segments, parse_trees, ParseError, ParseErrorKind};
pub use print::{print_tree, PrintStyle};
pub use rules::{ctb::restore_ctb, ptb::restore_ptb, RuleFiring, RuleTraceLog};
pub use stats::{stats, NullStats};
pub use strip::{strip_all, strip_annotations, strip_nulls, StripError};
pub use tree::{SyntaxTree, TreeError, TreePath};
