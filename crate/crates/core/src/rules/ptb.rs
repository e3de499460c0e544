//! English restoration rules: `*U*`, null WH phrases, null complementizers,
//! WH traces and `*`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{cat, child_index, parse_word_list, Pass, RuleTraceLog};
use crate::head::HeadRuleTable;
use crate::label::NodeLabel;
use crate::null::{NullKind, NullSymbol};
use crate::tree::{SyntaxTree, TreePath};

const ADVERBIAL_HEADS: &str = include_str!("../../data/adverbial_heads.txt");
const PASSIVE_AUXILIARIES: &str = include_str!("../../data/passive_auxiliaries.txt");

const VERB_TAGS: [&str; 8] = ["VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD", "TO"];

/// The passes, in the order `restore` runs them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PtbPass {
    EmptyUnit,
    WhPhrase,
    NullComplementizer,
    WhTrace,
    NpStar,
}

impl PtbPass {
    pub const ORDER: [PtbPass; 5] = [
        PtbPass::EmptyUnit,
        PtbPass::WhPhrase,
        PtbPass::NullComplementizer,
        PtbPass::WhTrace,
        PtbPass::NpStar,
    ];
}

/// Rule configuration: head table and word lists.
#[derive(Debug, Clone)]
pub struct PtbRules {
    pub heads: HeadRuleTable,
    /// Parent-NP head words that select `WHADVP` over `WHNP`.
    pub adverbial_heads: BTreeSet<String>,
    /// Forms of *be* and *get* that mark a VBN verb phrase as passive.
    pub passive_auxiliaries: BTreeSet<String>,
    /// Emit `NP-SBJ` rather than `NP` for inserted subjects.
    pub function_labels: bool,
}

impl Default for PtbRules {
    fn default() -> Self {
        PtbRules {
            heads: HeadRuleTable::english(),
            adverbial_heads: parse_word_list(ADVERBIAL_HEADS),
            passive_auxiliaries: parse_word_list(PASSIVE_AUXILIARIES),
            function_labels: false,
        }
    }
}

pub fn restore_ptb(tree: &SyntaxTree) -> (SyntaxTree, RuleTraceLog) {
    PtbRules::default().restore(tree)
}

pub fn insert_empty_unit(tree: &SyntaxTree) -> SyntaxTree {
    PtbRules::default().apply_one(PtbPass::EmptyUnit, tree)
}

pub fn insert_wh_phrase(tree: &SyntaxTree) -> SyntaxTree {
    PtbRules::default().apply_one(PtbPass::WhPhrase, tree)
}

pub fn insert_null_complementizer(tree: &SyntaxTree) -> SyntaxTree {
    PtbRules::default().apply_one(PtbPass::NullComplementizer, tree)
}

pub fn insert_wh_trace(tree: &SyntaxTree) -> SyntaxTree {
    PtbRules::default().apply_one(PtbPass::WhTrace, tree)
}

pub fn insert_np_star(tree: &SyntaxTree) -> SyntaxTree {
    PtbRules::default().apply_one(PtbPass::NpStar, tree)
}

impl PtbRules {
    pub fn restore(&self, tree: &SyntaxTree) -> (SyntaxTree, RuleTraceLog) {
        let mut out = tree.clone();
        let mut log = RuleTraceLog::default();
        let mut next = tree.max_index() + 1;
        for pass in PtbPass::ORDER {
            self.run(pass, &mut out, &mut log, &mut next);
        }
        (out, log)
    }

    fn apply_one(&self, pass: PtbPass, tree: &SyntaxTree) -> SyntaxTree {
        let mut out = tree.clone();
        let mut next = tree.max_index() + 1;
        self.run(pass, &mut out, &mut RuleTraceLog::default(), &mut next);
        out
    }

    /// Run one pass in place, appending its firings to `log`. `next` is the
    /// next free coindex.
    pub fn run(&self, pass: PtbPass, tree: &mut SyntaxTree, log: &mut RuleTraceLog, next: &mut u32) {
        let mut edits = Pass::default();
        let snapshot: &SyntaxTree = tree;
        for path in snapshot.internal_paths() {
            let node = snapshot.get(&path).expect("path from tree");
            if node.is_preterminal() {
                continue;
            }
            match pass {
                PtbPass::EmptyUnit => self.empty_unit(snapshot, &path, node, &mut edits),
                PtbPass::WhPhrase => self.wh_phrase(snapshot, &path, node, &mut edits),
                PtbPass::NullComplementizer => self.null_complementizer(snapshot, &path, node, &mut edits),
                PtbPass::WhTrace => self.wh_trace(snapshot, &path, node, &mut edits, next),
                PtbPass::NpStar => self.np_star(snapshot, &path, node, &mut edits),
            }
        }
        edits.apply(tree, log);
    }

    fn empty_unit(&self, tree: &SyntaxTree, path: &TreePath, node: &SyntaxTree, edits: &mut Pass) {
        let kids = node.children();
        for (i, qp) in kids.iter().enumerate() {
            if !qp.is("QP") || qp.is_preterminal() {
                continue;
            }
            let dollar = match child_index(qp, "$") {
                Some(d) => d,
                None => continue,
            };
            if !qp.children()[dollar + 1..].iter().any(|c| c.is("CD")) {
                continue;
            }
            let already = kids
                .get(i + 1)
                .and_then(SyntaxTree::null_symbol)
                .is_some_and(|s| s.kind == NullKind::Unit);
            if !already {
                let unit = SyntaxTree::null(NullSymbol::new(NullKind::Unit));
                edits.insert(tree, "empty-unit", path.clone(), i + 1, unit);
            }
        }
    }

    fn wh_phrase(&self, tree: &SyntaxTree, path: &TreePath, node: &SyntaxTree, edits: &mut Pass) {
        if !node.is("NP") {
            return;
        }
        for (i, sbar) in node.children().iter().enumerate() {
            if !sbar.is("SBAR") || has_complementizer(sbar) || !has_np_sibling(node, i) {
                continue;
            }
            let category = if self.is_adverbial_head(node) { "WHADVP" } else { "WHNP" };
            let filler = SyntaxTree::wrapped_null(category, NullSymbol::new(NullKind::NullComplementizer));
            edits.insert(tree, "wh-phrase", path.child(i), 0, filler);
        }
    }

    fn is_adverbial_head(&self, np: &SyntaxTree) -> bool {
        let word = match self.heads.head_word(np) {
            Some(w) => w.to_lowercase(),
            None => return false,
        };
        if self.adverbial_heads.contains(&word) {
            return true;
        }
        word.strip_suffix('s').is_some_and(|w| self.adverbial_heads.contains(w))
    }

    fn null_complementizer(&self, tree: &SyntaxTree, path: &TreePath, node: &SyntaxTree, edits: &mut Pass) {
        if !node.is("SBAR") || has_complementizer(node) {
            return;
        }
        if let (Some(pp), Some(i)) = (path.parent(), path.last()) {
            let parent = tree.get(&pp).expect("parent exists");
            if parent.is("NP") && has_np_sibling(parent, i) {
                return;
            }
        }
        let zero = SyntaxTree::null(NullSymbol::new(NullKind::NullComplementizer));
        edits.insert(tree, "null-complementizer", path.clone(), 0, zero);
    }

    fn wh_trace(&self, tree: &SyntaxTree, path: &TreePath, node: &SyntaxTree, edits: &mut Pass, next: &mut u32) {
        if !node.is("SBAR") {
            return;
        }
        let kids = node.children();
        let w = match kids.iter().position(|c| is_wh(cat(c))) {
            Some(w) => w,
            None => return,
        };
        if kids[w].label().and_then(|l| l.identity_index).is_some() {
            return;
        }
        let r = match (w + 1..kids.len()).find(|&i| matches!(cat(&kids[i]), "S" | "SQ" | "SINV")) {
            Some(r) => r,
            None => return,
        };
        let w_cat = cat(&kids[w]);
        let whnp = w_cat == "WHNP";
        let r_path = path.child(r);
        let site = self.trace_site(tree, whnp, &r_path, r_path.clone());

        let k = *next;
        *next += 1;
        let mut label = NodeLabel::bare(trace_category(w_cat));
        if self.function_labels && site.subject && label.category == "NP" {
            label.function_tags.push(String::from("SBJ"));
        }
        let trace = SyntaxTree::wrapped_null(label, NullSymbol::coindexed(NullKind::Trace, k));
        edits.set_identity(path.child(w), k);
        let rule = alloc::format!("wh-trace-{}", site.case);
        match site.replace {
            Some(e) => edits.replace(tree, &rule, site.parent, e, trace),
            None => edits.insert(tree, &rule, site.parent, site.index, trace),
        }
    }

    /// The ordered search for the trace position of filler W inside X,
    /// starting from the filler's clausal sister R.
    fn trace_site(&self, tree: &SyntaxTree, whnp: bool, r_path: &TreePath, x_path: TreePath) -> Site {
        let x = tree.get(&x_path).expect("search stays in tree");
        let kids = x.children();
        let x_cat = cat(x);

        if let Some(last) = last_conjunct(x) {
            return self.trace_site(tree, whnp, r_path, x_path.child(last));
        }
        if whnp {
            if let Some(pp) = kids.iter().rposition(is_objectless_pp) {
                let p = kids[pp].children().len();
                return Site::insert(x_path.child(pp), p, 2);
            }
            if x_cat == "S" && subject_index(x).is_none() && !is_nonfinite(x) {
                if let Some(vp) = child_index(x, "VP") {
                    return Site {
                        subject: true,
                        ..Site::insert(x_path, vp, 3)
                    };
                }
            }
        }
        if let Some(vp) = kids.iter().rposition(|c| c.is("VP")) {
            return self.trace_site(tree, whnp, r_path, x_path.child(vp));
        }
        if !whnp {
            return Site::insert(x_path, kids.len(), 8);
        }
        let head = self.head_index(x);
        for (i, c) in kids.iter().enumerate().skip(head + 1) {
            match cat(c) {
                "ADJP" | "S" if !c.is_preterminal() => {
                    return self.trace_site(tree, whnp, r_path, x_path.child(i));
                }
                "SBAR" if !kids_have_wh(c) => {
                    if let Some(s) = child_index(c, "S") {
                        return self.trace_site(tree, whnp, r_path, x_path.child(i).child(s));
                    }
                }
                _ => {}
            }
        }
        let r = tree.get(r_path).expect("clause exists");
        if x_cat == "VP" && is_infinitival(r) && has_object(x, head) {
            let subject = subject_index(r);
            let empty = subject.filter(|&s| r.children()[s].is_null_only());
            if subject.is_none() || empty.is_some() {
                let vp = child_index(r, "VP").unwrap_or(0);
                return Site {
                    replace: empty,
                    subject: true,
                    ..Site::insert(r_path.clone(), vp, 6)
                };
            }
        }
        Site::insert(x_path, head + 1, 7)
    }

    fn head_index(&self, x: &SyntaxTree) -> usize {
        if x.is("VP") {
            if let Some(v) = head_verb(x) {
                return v;
            }
        }
        self.heads.head_child(x)
    }

    fn np_star(&self, tree: &SyntaxTree, path: &TreePath, node: &SyntaxTree, edits: &mut Pass) {
        let star = |subject: bool| {
            let mut label = NodeLabel::bare("NP");
            if subject && self.function_labels {
                label.function_tags.push(String::from("SBJ"));
            }
            SyntaxTree::wrapped_null(label, NullSymbol::new(NullKind::Star))
        };
        if node.is("VP") {
            let h = match head_verb(node) {
                Some(h) if node.children()[h].is("VBN") => h,
                _ => return,
            };
            if !self.is_passive_context(tree, path) {
                return;
            }
            let post = &node.children()[h + 1..];
            if post.iter().any(|c| matches!(cat(c), "NP" | "S" | "SBAR")) {
                return;
            }
            let dangling = post
                .iter()
                .any(|c| c.is("PP") && !c.is_preterminal() && child_index(c, "NP").is_none());
            let rule = if dangling {
                "np-star-dangling-pp"
            } else {
                "np-star-passive"
            };
            edits.insert(tree, rule, path.clone(), h + 1, star(false));
        } else if node.is("S") && subject_index(node).is_none() && is_nonfinite(node) {
            if let Some(vp) = child_index(node, "VP") {
                edits.insert(tree, "np-star-subject", path.clone(), vp, star(true));
            }
        }
    }

    /// Whether the nearest verb governing the VP at `path`, found through a
    /// contiguous chain of VP ancestors, is a form of *be* or *get*.
    fn is_passive_context(&self, tree: &SyntaxTree, path: &TreePath) -> bool {
        let mut cur = path.clone();
        while let Some(up) = cur.parent() {
            let node = tree.get(&up).expect("ancestor exists");
            if !node.is("VP") {
                return false;
            }
            if let Some(v) = head_verb(node) {
                let word = node.children()[v].word().unwrap_or("").to_lowercase();
                return self.passive_auxiliaries.contains(&word);
            }
            cur = up;
        }
        false
    }
}

#[derive(Debug, Clone)]
struct Site {
    parent: TreePath,
    index: usize,
    case: u8,
    /// Replace this child of `parent` instead of inserting.
    replace: Option<usize>,
    subject: bool,
}

impl Site {
    fn insert(parent: TreePath, index: usize, case: u8) -> Site {
        Site {
            parent,
            index,
            case,
            replace: None,
            subject: false,
        }
    }
}

fn is_wh(category: &str) -> bool {
    category.starts_with("WH")
}

fn kids_have_wh(node: &SyntaxTree) -> bool {
    node.children().iter().any(|c| is_wh(cat(c)))
}

/// A WH filler, an overt complementizer, or a null one.
fn has_complementizer(sbar: &SyntaxTree) -> bool {
    sbar.children()
        .iter()
        .any(|c| is_wh(cat(c)) || (c.is_preterminal() && (c.is("IN") || c.is("DT"))) || c.is_null_leaf())
}

fn has_np_sibling(parent: &SyntaxTree, index: usize) -> bool {
    parent
        .children()
        .iter()
        .enumerate()
        .any(|(j, c)| j != index && c.is("NP"))
}

fn trace_category(filler: &str) -> &'static str {
    match filler {
        "WHADVP" => "ADVP",
        "WHPP" => "PP",
        "WHADJP" => "ADJP",
        _ => "NP",
    }
}

fn is_verb(node: &SyntaxTree) -> bool {
    node.is_preterminal() && VERB_TAGS.contains(&cat(node))
}

fn head_verb(vp: &SyntaxTree) -> Option<usize> {
    vp.children().iter().position(is_verb)
}

/// The first verb reached down the VP head chain of a clause.
fn chain_verb(clause: &SyntaxTree) -> Option<&SyntaxTree> {
    let mut cur = &clause.children()[child_index(clause, "VP")?];
    loop {
        if let Some(v) = head_verb(cur) {
            return Some(&cur.children()[v]);
        }
        cur = &cur.children()[child_index(cur, "VP")?];
    }
}

fn is_nonfinite(clause: &SyntaxTree) -> bool {
    matches!(chain_verb(clause).map(cat), Some("TO" | "VBG" | "VBN"))
}

fn is_infinitival(clause: &SyntaxTree) -> bool {
    chain_verb(clause).is_some_and(|v| v.is("TO"))
}

/// An NP child before the clause's VP.
fn subject_index(clause: &SyntaxTree) -> Option<usize> {
    let kids = clause.children();
    let end = child_index(clause, "VP").unwrap_or(kids.len());
    kids[..end].iter().position(|c| c.is("NP"))
}

fn has_object(vp: &SyntaxTree, head: usize) -> bool {
    vp.children()
        .iter()
        .skip(head + 1)
        .any(|c| c.is("NP") && !c.is_null_only())
}

/// A PP consisting only of its preposition(s).
fn is_objectless_pp(node: &SyntaxTree) -> bool {
    node.is("PP")
        && !node.is_preterminal()
        && node
            .children()
            .iter()
            .all(|c| c.is_preterminal() && matches!(cat(c), "IN" | "TO" | "RP"))
}

/// Index of the last conjunct when X coordinates phrases of its own category.
fn last_conjunct(x: &SyntaxTree) -> Option<usize> {
    let kids = x.children();
    if !kids.iter().any(|c| c.is("CC") || c.is("CONJP")) {
        return None;
    }
    let x_cat = cat(x);
    let same: Vec<usize> = (0..kids.len())
        .filter(|&i| kids[i].is(x_cat) && !kids[i].is_preterminal())
        .collect();
    if same.len() >= 2 {
        same.last().copied()
    } else {
        None
    }
}
