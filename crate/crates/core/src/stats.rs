//! Null-element typology counts.

use alloc::collections::BTreeMap;

use crate::null::{LanguageProfile, NullKind};
use crate::tree::SyntaxTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullStats {
    pub sentences: usize,
    /// Every kind the profile allows, zero counts included.
    pub counts: BTreeMap<NullKind, usize>,
    /// Kinds found in the corpus that the profile does not allow.
    pub unexpected: BTreeMap<NullKind, usize>,
}

impl NullStats {
    pub fn empty(profile: &LanguageProfile) -> Self {
        NullStats {
            sentences: 0,
            counts: profile.allowed_kinds.iter().map(|&k| (k, 0)).collect(),
            unexpected: BTreeMap::new(),
        }
    }

    /// Count one tree.
    pub fn add_tree(&mut self, tree: &SyntaxTree) {
        self.sentences += 1;
        for (sym, _) in tree.null_leaves() {
            match self.counts.get_mut(&sym.kind) {
                Some(n) => *n += 1,
                None => *self.unexpected.entry(sym.kind).or_default() += 1,
            }
        }
    }

    /// Combine counts from a disjoint part of the corpus.
    pub fn merge(&mut self, other: &NullStats) {
        self.sentences += other.sentences;
        for (k, n) in &other.counts {
            *self.counts.entry(*k).or_default() += n;
        }
        for (k, n) in &other.unexpected {
            match self.counts.get_mut(k) {
                Some(c) => *c += n,
                None => *self.unexpected.entry(*k).or_default() += n,
            }
        }
    }

    pub fn count(&self, kind: NullKind) -> usize {
        self.counts
            .get(&kind)
            .or_else(|| self.unexpected.get(&kind))
            .copied()
            .unwrap_or(0)
    }

    /// Nulls of `kind` per sentence, at full precision.
    pub fn ratio(&self, kind: NullKind) -> f64 {
        if self.sentences == 0 {
            0.0
        } else {
            self.count(kind) as f64 / self.sentences as f64
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().chain(self.unexpected.values()).sum()
    }
}

pub fn stats(trees: &[SyntaxTree], profile: &LanguageProfile) -> NullStats {
    let mut s = NullStats::empty(profile);
    for t in trees {
        s.add_tree(t);
    }
    s
}
