//! Chinese restoration rules: relative-clause `*OP*`/`*T*`, control
//! `*PRO*`, dropped `*pro*` and `*RNR*`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::pattern::{Pattern, PatternError};
use super::{cat, child_index, has_child, Pass, RuleTraceLog};
use crate::label::NodeLabel;
use crate::null::{NullKind, NullSymbol};
use crate::tree::{SyntaxTree, TreePath};

pub const BIG_PRO_PATTERNS: [&str; 5] = [
    "(VP VV NP (IP VP))",
    "(VP VV (IP VP))",
    "(CP (IP VP) DEC)",
    "(PP P (IP VP))",
    "(LCP (IP VP) LC)",
];

/// Subjectless clause heading an appositive noun phrase.
pub const APPOSITIVE_PATTERN: &str = "(NP (IP VP) ...)";

pub const SMALL_PRO_PATTERNS: [&str; 5] = [
    "(CP (IP VP) DEC)",
    "(VP VV (IP VP))",
    "(LCP (IP VP) LC)",
    "(IP IP PU (IP VP) ...)",
    "(TOP (IP VP PU))",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CtbPass {
    OpTrace,
    BigPro,
    SmallPro,
    Rnr,
}

impl CtbPass {
    pub const ORDER: [CtbPass; 4] = [CtbPass::OpTrace, CtbPass::BigPro, CtbPass::SmallPro, CtbPass::Rnr];
}

/// Where the `*OP*` phrase goes relative to the inner CP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OpPlacement {
    /// `(CP (WHNP *OP*) (CP ...))`.
    #[default]
    Sister,
    /// `(CP (WHNP *OP* (CP ...)))`.
    Parent,
}

#[derive(Debug, Clone)]
pub struct CtbRules {
    pub op_placement: OpPlacement,
    pub big_pro: Vec<Pattern>,
    pub small_pro: Vec<Pattern>,
    /// Categories ignored between and after pattern elements.
    pub skippable: BTreeSet<String>,
    pub function_labels: bool,
}

impl Default for CtbRules {
    fn default() -> Self {
        Self::with_appositive(true)
    }
}

impl CtbRules {
    /// Default rules, with or without the appositive `*PRO*` context.
    pub fn with_appositive(appositive: bool) -> Self {
        let mut big: Vec<&str> = BIG_PRO_PATTERNS.to_vec();
        if appositive {
            big.push(APPOSITIVE_PATTERN);
        }
        Self::from_patterns(&big, &SMALL_PRO_PATTERNS).expect("bundled patterns parse")
    }

    pub fn from_patterns(big_pro: &[&str], small_pro: &[&str]) -> Result<Self, PatternError> {
        let parse = |ps: &[&str]| ps.iter().map(|p| Pattern::parse(p)).collect::<Result<Vec<_>, _>>();
        Ok(CtbRules {
            op_placement: OpPlacement::Sister,
            big_pro: parse(big_pro)?,
            small_pro: parse(small_pro)?,
            skippable: ["ADVP", "PU"].iter().map(|s| s.to_string()).collect(),
            function_labels: false,
        })
    }

    pub fn restore(&self, tree: &SyntaxTree) -> (SyntaxTree, RuleTraceLog) {
        let mut out = tree.clone();
        let mut log = RuleTraceLog::default();
        let mut next = tree.max_index() + 1;
        for pass in CtbPass::ORDER {
            self.run(pass, &mut out, &mut log, &mut next);
        }
        (out, log)
    }

    fn apply_one(&self, pass: CtbPass, tree: &SyntaxTree) -> SyntaxTree {
        let mut out = tree.clone();
        let mut next = tree.max_index() + 1;
        self.run(pass, &mut out, &mut RuleTraceLog::default(), &mut next);
        out
    }

    pub fn run(&self, pass: CtbPass, tree: &mut SyntaxTree, log: &mut RuleTraceLog, next: &mut u32) {
        let mut edits = Pass::default();
        let snapshot: &SyntaxTree = tree;
        match pass {
            CtbPass::BigPro => self.null_subjects(snapshot, &self.big_pro, NullKind::BigPro, "big-pro", &mut edits),
            CtbPass::SmallPro => {
                self.null_subjects(snapshot, &self.small_pro, NullKind::SmallPro, "small-pro", &mut edits)
            }
            _ => {
                for path in snapshot.internal_paths() {
                    let node = snapshot.get(&path).expect("path from tree");
                    if node.is_preterminal() {
                        continue;
                    }
                    if pass == CtbPass::OpTrace {
                        self.op_trace(snapshot, &path, node, &mut edits, next);
                    } else {
                        self.rnr(snapshot, &path, node, &mut edits, next);
                    }
                }
            }
        }
        edits.apply(tree, log);
    }

    fn subject_label(&self) -> NodeLabel {
        if self.function_labels {
            NodeLabel::with_tags("NP", ["SBJ"])
        } else {
            NodeLabel::bare("NP")
        }
    }

    fn op_trace(&self, tree: &SyntaxTree, path: &TreePath, w: &SyntaxTree, edits: &mut Pass, next: &mut u32) {
        if !w.is("CP") || w.children().iter().any(|c| cat(c).starts_with("WH")) {
            return;
        }
        for (xi, x) in w.children().iter().enumerate() {
            if !x.is("CP") || x.is_preterminal() {
                continue;
            }
            let yi = match child_index(x, "IP") {
                Some(y) if !x.children()[y].is_preterminal() => y,
                _ => continue,
            };
            let y = &x.children()[yi];
            let y_path = path.child(xi).child(yi);
            let k = *next;
            let trace = |label: NodeLabel| SyntaxTree::wrapped_null(label, NullSymbol::coindexed(NullKind::Trace, k));
            let (rule, filler) = if !has_child(y, "NP") {
                edits.insert(tree, "op-trace-subject", y_path, 0, trace(self.subject_label()));
                ("op-trace-subject", "WHNP")
            } else {
                let zi = match y.children().iter().rposition(|c| c.is("VP") && !c.is_preterminal()) {
                    Some(z) => z,
                    None => continue,
                };
                let z = &y.children()[zi];
                let z_path = y_path.child(zi);
                if has_child(z, "VP") {
                    edits.insert(tree, "op-trace-adjunct", z_path, 0, trace(NodeLabel::bare("PP")));
                    ("op-trace-adjunct", "WHPP")
                } else if !has_child(z, "NP") {
                    let end = z.children().len();
                    edits.insert(tree, "op-trace-object", z_path, end, trace(NodeLabel::bare("NP")));
                    ("op-trace-object", "WHNP")
                } else {
                    continue;
                }
            };
            *next += 1;
            let mut label = NodeLabel::bare(filler);
            label.identity_index = Some(k);
            let op = SyntaxTree::null(NullSymbol::new(NullKind::Operator));
            match self.op_placement {
                OpPlacement::Sister => edits.insert(
                    tree,
                    rule,
                    path.clone(),
                    xi,
                    SyntaxTree::internal(label, alloc::vec![op]),
                ),
                OpPlacement::Parent => edits.wrap(tree, rule, path.child(xi), label, op),
            }
        }
    }

    fn null_subjects(&self, tree: &SyntaxTree, patterns: &[Pattern], kind: NullKind, rule: &str, edits: &mut Pass) {
        let mut targets: Vec<TreePath> = Vec::new();
        for path in tree.internal_paths() {
            let node = tree.get(&path).expect("path from tree");
            for p in patterns {
                if let Some(rel) = p.match_target(node, &self.skippable) {
                    let mut target = path.clone();
                    target.0.extend(rel.0);
                    let ip = tree.get(&target).expect("matched node exists");
                    if !has_child(ip, "NP") && !targets.contains(&target) {
                        targets.push(target);
                    }
                }
            }
        }
        for target in targets {
            let subject = SyntaxTree::wrapped_null(self.subject_label(), NullSymbol::new(kind));
            edits.insert(tree, rule, target, 0, subject);
        }
    }

    fn rnr(&self, tree: &SyntaxTree, path: &TreePath, x: &SyntaxTree, edits: &mut Pass, next: &mut u32) {
        let (conjunct, shared, rule) = match cat(x) {
            "QP" => ("QP", "CLP", "rnr-qp"),
            "VP" => ("VP", "NP", "rnr-vp"),
            _ => return,
        };
        let kids = x.children();
        let conj: Vec<usize> = (0..kids.len())
            .filter(|&i| kids[i].is(conjunct) && !kids[i].is_preterminal())
            .collect();
        let (&zi, rest) = match conj.split_last() {
            Some(s) if !s.1.is_empty() => s,
            _ => return,
        };
        let z = &kids[zi];
        let numeral = |n: &SyntaxTree| n.children().iter().any(|c| c.is("CD") || c.is("OD"));
        let si = match child_index(z, shared) {
            Some(s) => s,
            None => return,
        };
        if conjunct == "QP" && !numeral(z) {
            return;
        }
        let targets: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&yi| {
                let y = &kids[yi];
                let eligible = conjunct == "VP" || y.children().first().is_some_and(|f| f.is("CD") || f.is("OD"));
                eligible && !has_child(y, shared)
            })
            .collect();
        if targets.is_empty() {
            return;
        }
        let k = match z.children()[si].label().and_then(|l| l.identity_index) {
            Some(k) => k,
            None => {
                let k = *next;
                *next += 1;
                edits.set_identity(path.child(zi).child(si), k);
                k
            }
        };
        for yi in targets {
            let end = kids[yi].children().len();
            let node = SyntaxTree::wrapped_null(shared, NullSymbol::coindexed(NullKind::RightNodeRaising, k));
            edits.insert(tree, rule, path.child(yi), end, node);
        }
    }
}

pub fn restore_ctb(tree: &SyntaxTree) -> (SyntaxTree, RuleTraceLog) {
    CtbRules::default().restore(tree)
}

pub fn insert_op_trace(tree: &SyntaxTree) -> SyntaxTree {
    CtbRules::default().apply_one(CtbPass::OpTrace, tree)
}

pub fn insert_big_pro(tree: &SyntaxTree) -> SyntaxTree {
    CtbRules::default().apply_one(CtbPass::BigPro, tree)
}

pub fn insert_small_pro(tree: &SyntaxTree) -> SyntaxTree {
    CtbRules::default().apply_one(CtbPass::SmallPro, tree)
}

pub fn insert_rnr(tree: &SyntaxTree) -> SyntaxTree {
    CtbRules::default().apply_one(CtbPass::Rnr, tree)
}
