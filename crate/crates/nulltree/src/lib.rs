//! Batch pipelines over Penn-style treebank files: null-element removal and
//! restoration, seq2seq dataset building, null-element scoring and typology
//! counts. The algorithms live in `nulltree-core`; this crate adds file
//! handling, configuration, report formats and the `nulltree` command.

pub mod cli;
pub mod config;
pub mod input;
pub mod report;

pub use nulltree_core as core;
