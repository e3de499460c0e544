//! Brute-force reference for the restoration rules.
//!
//! Works on its own tree type. Every gap between children of every node is
//! a candidate insertion site, and each rule is asked, site by site,
//! whether it places a null there. Output is a multiset of
//! (kind, anchor, category) over the input tree.

#![allow(dead_code)]

use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub label: String,
    pub word: Option<String>,
    pub kids: Vec<Node>,
}

impl Node {
    fn is(&self, cat: &str) -> bool {
        self.label == cat
    }

    fn is_pos(&self) -> bool {
        self.word.is_some()
    }

    fn phrase(&self, cat: &str) -> bool {
        self.label == cat && self.word.is_none()
    }

    fn has(&self, cat: &str) -> bool {
        self.kids.iter().any(|k| k.is(cat))
    }

    fn first(&self, cat: &str) -> Option<usize> {
        self.kids.iter().position(|k| k.is(cat))
    }

    fn words(&self) -> usize {
        if self.is_pos() {
            1
        } else {
            self.kids.iter().map(Node::words).sum()
        }
    }

    fn at(&self, path: &[usize]) -> &Node {
        path.iter().fold(self, |n, &i| &n.kids[i])
    }
}

/// Minimal reader: `(LABEL word)` preterminals, `(LABEL child...)` phrases.
/// An unlabeled outer bracket becomes `TOP`.
pub fn read(text: &str) -> Node {
    let toks: Vec<String> = text
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(String::from)
        .collect();
    let mut pos = 0;
    let n = read_node(&toks, &mut pos);
    assert_eq!(pos, toks.len(), "trailing tokens in {}", text);
    n
}

fn read_node(toks: &[String], pos: &mut usize) -> Node {
    assert_eq!(toks[*pos], "(");
    *pos += 1;
    let label = if toks[*pos] == "(" {
        "TOP".to_string()
    } else {
        *pos += 1;
        toks[*pos - 1].clone()
    };
    if toks[*pos] != "(" && toks[*pos + 1] == ")" {
        let word = toks[*pos].clone();
        *pos += 2;
        return Node {
            label,
            word: Some(word),
            kids: vec![],
        };
    }
    let mut kids = vec![];
    while toks[*pos] != ")" {
        kids.push(read_node(toks, pos));
    }
    *pos += 1;
    Node {
        label,
        word: None,
        kids,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mention {
    pub kind: String,
    pub anchor: usize,
    pub category: String,
}

/// Which rule conditions fired, for coverage accounting.
pub type Hits = BTreeSet<String>;

/// Every (node path, gap) pair of the tree, gaps 0..=len.
fn sites(root: &Node) -> Vec<(Vec<usize>, usize)> {
    let mut out = vec![];
    fn go(n: &Node, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if n.is_pos() {
            return;
        }
        for g in 0..=n.kids.len() {
            out.push((path.clone(), g));
        }
        for (i, k) in n.kids.iter().enumerate() {
            path.push(i);
            go(k, path, out);
            path.pop();
        }
    }
    go(root, &mut vec![], &mut out);
    out
}

/// Words before gap `g` of the node at `path`.
fn anchor(root: &Node, path: &[usize], g: usize) -> usize {
    let mut count = 0;
    let mut n = root;
    for &i in path {
        count += n.kids[..i].iter().map(Node::words).sum::<usize>();
        n = &n.kids[i];
    }
    count + n.kids[..g].iter().map(Node::words).sum::<usize>()
}

fn mention(root: &Node, path: &[usize], g: usize, kind: &str, category: &str) -> Mention {
    Mention {
        kind: kind.to_string(),
        anchor: anchor(root, path, g),
        category: category.to_string(),
    }
}

// ---------------------------------------------------------------- English

const VERBS: [&str; 8] = ["VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD", "TO"];
const ADVERBIAL: [&str; 5] = ["reason", "way", "time", "day", "place"];
const BE_GET: [&str; 13] = [
    "be", "is", "are", "was", "were", "been", "being", "am", "get", "got", "gotten", "getting", "gets",
];

fn verb_at(n: &Node) -> Option<usize> {
    n.kids
        .iter()
        .position(|k| k.is_pos() && VERBS.contains(&k.label.as_str()))
}

/// Head word of an NP: rightmost noun, else the first NP, else rightmost.
fn np_head_word(n: &Node) -> String {
    if let Some(w) = &n.word {
        return w.to_lowercase();
    }
    let i = n
        .kids
        .iter()
        .rposition(|k| k.is_pos() && k.label.starts_with("NN"))
        .or_else(|| n.first("NP"))
        .unwrap_or(n.kids.len() - 1);
    np_head_word(&n.kids[i])
}

fn head_of(n: &Node) -> usize {
    match n.label.as_str() {
        "VP" => verb_at(n).unwrap_or(0),
        "ADJP" => n.kids.iter().position(|k| k.label.starts_with("JJ")).unwrap_or(0),
        _ => n.kids.len() - 1,
    }
}

fn sbar_has_comp(s: &Node) -> bool {
    s.kids
        .iter()
        .any(|k| k.label.starts_with("WH") || (k.is_pos() && (k.is("IN") || k.is("DT"))))
}

/// The subject of a clause: an NP ahead of its first VP.
fn has_subject(s: &Node) -> bool {
    let vp = s.first("VP").unwrap_or(s.kids.len());
    s.kids[..vp].iter().any(|k| k.is("NP"))
}

fn clause_verb(s: &Node) -> Option<&Node> {
    let mut vp = &s.kids[s.first("VP")?];
    loop {
        if let Some(v) = verb_at(vp) {
            return Some(&vp.kids[v]);
        }
        vp = &vp.kids[vp.first("VP")?];
    }
}

fn nonfinite(s: &Node) -> bool {
    clause_verb(s).is_some_and(|v| matches!(v.label.as_str(), "TO" | "VBG" | "VBN"))
}

fn pp_without_object(n: &Node) -> bool {
    n.phrase("PP")
        && n.kids
            .iter()
            .all(|k| k.is_pos() && matches!(k.label.as_str(), "IN" | "TO" | "RP"))
}

/// What the relative-clause filler of an SBAR will be, if any: an overt WH
/// child, or one that the WH-phrase rule supplies.
fn filler(root: &Node, sbar: &[usize]) -> Option<String> {
    let s = root.at(sbar);
    if let Some(w) = s.kids.iter().find(|k| k.label.starts_with("WH")) {
        return Some(w.label.clone());
    }
    if sbar_has_comp(s) || sbar.is_empty() {
        return None;
    }
    let parent = root.at(&sbar[..sbar.len() - 1]);
    let me = sbar[sbar.len() - 1];
    let np_sister = parent.kids.iter().enumerate().any(|(j, k)| j != me && k.is("NP"));
    if parent.is("NP") && np_sister {
        let w = np_head_word(parent);
        let adverbial = ADVERBIAL.contains(&w.as_str()) || w.strip_suffix('s').is_some_and(|b| ADVERBIAL.contains(&b));
        Some(if adverbial { "WHADVP" } else { "WHNP" }.to_string())
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Gap {
    path: Vec<usize>,
    g: usize,
    case: u8,
}

/// Where trace(W) lands when searching X (the rule's eight cases).
fn find_trace(root: &Node, whnp: bool, r: &[usize], x: Vec<usize>, trail: &mut Vec<u8>) -> Gap {
    let xn = root.at(&x);
    // (1) conjuncts
    if xn.kids.iter().any(|k| k.is("CC") || k.is("CONJP")) {
        let same: Vec<usize> = (0..xn.kids.len()).filter(|&i| xn.kids[i].phrase(&xn.label)).collect();
        if same.len() > 1 {
            let mut y = x.clone();
            y.push(*same.last().unwrap());
            trail.push(1);
            return find_trace(root, whnp, r, y, trail);
        }
    }
    // (2) objectless PP
    if whnp {
        if let Some(i) = xn.kids.iter().rposition(pp_without_object) {
            let mut p = x.clone();
            p.push(i);
            return Gap {
                g: xn.kids[i].kids.len(),
                path: p,
                case: 2,
            };
        }
    }
    // (3) subjectless finite S
    if whnp && xn.is("S") && !has_subject(xn) && !nonfinite(xn) {
        if let Some(vp) = xn.first("VP") {
            return Gap {
                path: x,
                g: vp,
                case: 3,
            };
        }
    }
    // (4) into the VP
    if let Some(i) = xn.kids.iter().rposition(|k| k.is("VP")) {
        let mut y = x.clone();
        y.push(i);
        trail.push(4);
        return find_trace(root, whnp, r, y, trail);
    }
    if !whnp {
        return Gap {
            g: xn.kids.len(),
            path: x,
            case: 8,
        };
    }
    // (5) ADJP or clausal complement after the head
    let h = head_of(xn);
    for i in h + 1..xn.kids.len() {
        let k = &xn.kids[i];
        let mut y = x.clone();
        y.push(i);
        if k.phrase("ADJP") || k.phrase("S") {
            trail.push(5);
            return find_trace(root, whnp, r, y, trail);
        }
        if k.is("SBAR") && !k.kids.iter().any(|c| c.label.starts_with("WH")) {
            if let Some(s) = k.first("S") {
                y.push(s);
                trail.push(5);
                return find_trace(root, whnp, r, y, trail);
            }
        }
    }
    // (6) infinitival relative, object present, subject missing
    let rn = root.at(r);
    let object = xn.kids[h + 1..].iter().any(|k| k.is("NP"));
    let infinitival = clause_verb(rn).is_some_and(|v| v.is("TO"));
    if xn.is("VP") && infinitival && object && !has_subject(rn) {
        return Gap {
            path: r.to_vec(),
            g: rn.first("VP").unwrap_or(0),
            case: 6,
        };
    }
    // (7)
    Gap {
        path: x,
        g: h + 1,
        case: 7,
    }
}

fn trace_cat(w: &str) -> &'static str {
    match w {
        "WHADVP" => "ADVP",
        "WHPP" => "PP",
        "WHADJP" => "ADJP",
        _ => "NP",
    }
}

fn is_passive_vp(root: &Node, path: &[usize]) -> bool {
    let n = root.at(path);
    let Some(h) = verb_at(n) else { return false };
    if !n.kids[h].is("VBN") {
        return false;
    }
    let mut up = path.to_vec();
    while up.pop().is_some() {
        let a = root.at(&up);
        if !a.is("VP") {
            return false;
        }
        if let Some(v) = verb_at(a) {
            let w = a.kids[v].word.as_deref().unwrap_or("").to_lowercase();
            return BE_GET.contains(&w.as_str());
        }
    }
    false
}

pub fn english(root: &Node) -> (Vec<Mention>, Hits) {
    let mut out = vec![];
    let mut hits = Hits::new();
    let all = sites(root);

    // Traces first: later rules look at where they went.
    let mut traces: Vec<(Gap, String)> = vec![];
    for (path, g) in &all {
        let n = root.at(path);
        if !n.is("SBAR") || *g != 0 {
            continue;
        }
        let Some(w) = filler(root, path) else { continue };
        let Some(r) = n
            .kids
            .iter()
            .position(|k| matches!(k.label.as_str(), "S" | "SQ" | "SINV"))
        else {
            continue;
        };
        let mut rp = path.clone();
        rp.push(r);
        let mut trail = vec![];
        let gap = find_trace(root, w == "WHNP", &rp, rp.clone(), &mut trail);
        for c in trail {
            hits.insert(format!("wh-trace-{}", c));
        }
        traces.push((gap, trace_cat(&w).to_string()));
    }

    for (path, g) in &all {
        let (path, g) = (path.as_slice(), *g);
        let n = root.at(path);

        // *U*: right sister of a QP with $ before a CD.
        if g > 0 {
            let q = &n.kids[g - 1];
            if let Some(d) = q.first("$").filter(|_| q.phrase("QP")) {
                if q.kids[d + 1..].iter().any(|k| k.is("CD")) {
                    hits.insert("unit".into());
                    out.push(mention(root, path, g, "*U*", &n.label));
                }
            }
        }

        // WH phrase or null complementizer at the front of an SBAR.
        if n.is("SBAR") && g == 0 && !sbar_has_comp(n) {
            match filler(root, path) {
                Some(w) => {
                    hits.insert(format!("wh-phrase-{}", w.to_lowercase()));
                    out.push(mention(root, path, g, "0", &w));
                }
                None => {
                    hits.insert("null-complementizer".into());
                    out.push(mention(root, path, g, "0", "SBAR"));
                }
            }
        }

        for (t, cat) in &traces {
            if t.path == path && t.g == g {
                hits.insert(format!("wh-trace-{}", t.case));
                out.push(mention(root, path, g, "*T*", cat));
            }
        }

        // NP* in a passive VP without complement.
        if n.is("VP") && is_passive_vp(root, path) {
            let h = verb_at(n).unwrap();
            let complement = n.kids[h + 1..]
                .iter()
                .any(|k| matches!(k.label.as_str(), "NP" | "S" | "SBAR"))
                || traces.iter().any(|(t, c)| t.path == path && t.g > h && c == "NP");
            if g == h + 1 && !complement {
                let dangling = n.kids[h + 1..].iter().any(|k| k.phrase("PP") && !k.has("NP"));
                hits.insert(
                    if dangling {
                        "np-star-dangling-pp"
                    } else {
                        "np-star-passive"
                    }
                    .into(),
                );
                out.push(mention(root, path, g, "*", "NP"));
            }
        }

        // NP-SBJ* in a subjectless non-finite clause.
        if n.is("S") && !has_subject(n) && nonfinite(n) {
            let vp = n.first("VP").unwrap();
            let trace_subject = traces.iter().any(|(t, c)| t.path == path && t.g <= vp && c == "NP");
            if g == vp && !trace_subject {
                hits.insert("np-star-subject".into());
                out.push(mention(root, path, g, "*", "NP"));
            }
        }
    }
    out.sort();
    (out, hits)
}

// ---------------------------------------------------------------- Chinese

/// A context pattern: category plus optional child list; `open` admits
/// extra children after the listed ones.
#[derive(Debug, Clone)]
struct Pat {
    cat: String,
    kids: Option<Vec<Pat>>,
    open: bool,
}

fn pat(text: &str) -> Pat {
    let toks: Vec<String> = text
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(String::from)
        .collect();
    let mut pos = 0;
    pat_node(&toks, &mut pos)
}

fn pat_node(toks: &[String], pos: &mut usize) -> Pat {
    if toks[*pos] != "(" {
        *pos += 1;
        return Pat {
            cat: toks[*pos - 1].clone(),
            kids: None,
            open: false,
        };
    }
    let cat = toks[*pos + 1].clone();
    *pos += 2;
    let mut kids = vec![];
    let mut open = false;
    while toks[*pos] != ")" {
        if toks[*pos] == "..." {
            open = true;
            *pos += 1;
        } else {
            kids.push(pat_node(toks, pos));
        }
    }
    *pos += 1;
    Pat {
        cat,
        kids: Some(kids),
        open,
    }
}

const SKIP: [&str; 2] = ["ADVP", "PU"];

/// Every way `p` matches `n`, trying each subset of skippable children for
/// deletion. Each result is the tree path (relative to `n`) bound to the
/// pattern element at `target`, or `None` when the target lies elsewhere.
fn bindings(p: &Pat, n: &Node, target: Option<&[usize]>) -> Vec<Option<Vec<usize>>> {
    if n.label != p.cat {
        return vec![];
    }
    let me = |ok: bool| {
        if !ok {
            vec![]
        } else if target == Some(&[][..]) {
            vec![Some(vec![])]
        } else {
            vec![None]
        }
    };
    let Some(pk) = &p.kids else { return me(true) };
    if n.is_pos() {
        return vec![];
    }
    let skippable: Vec<usize> = (0..n.kids.len())
        .filter(|&i| SKIP.contains(&n.kids[i].label.as_str()))
        .collect();
    let mut found: Vec<Option<Vec<usize>>> = vec![];
    for mask in 0u32..(1 << skippable.len()) {
        let dropped: Vec<usize> = (0..skippable.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| skippable[b])
            .collect();
        let kept: Vec<usize> = (0..n.kids.len()).filter(|i| !dropped.contains(i)).collect();
        let fits = if p.open {
            kept.len() >= pk.len()
        } else {
            kept.len() == pk.len()
        };
        if !fits {
            continue;
        }
        let mut results: Vec<Option<Vec<usize>>> = vec![None];
        for (j, sub) in pk.iter().enumerate() {
            let sub_target = target
                .and_then(|t| t.split_first())
                .filter(|(h, _)| **h == j)
                .map(|(_, rest)| rest);
            let under = bindings(sub, &n.kids[kept[j]], sub_target);
            if under.is_empty() {
                results.clear();
                break;
            }
            if sub_target.is_some() {
                results = under
                    .into_iter()
                    .map(|b| {
                        b.map(|mut t| {
                            t.insert(0, kept[j]);
                            t
                        })
                    })
                    .collect();
            }
        }
        found.extend(results);
    }
    if target == Some(&[][..]) {
        return me(!found.is_empty());
    }
    found.sort();
    found.dedup();
    found
}

/// Pattern path of the last `IP` element in preorder, root excluded.
fn target_of(p: &Pat) -> Vec<usize> {
    fn go(p: &Pat, path: &mut Vec<usize>, best: &mut Option<Vec<usize>>, root: bool) {
        if !root && p.cat == "IP" {
            *best = Some(path.clone());
        }
        for (i, k) in p.kids.iter().flatten().enumerate() {
            path.push(i);
            go(k, path, best, false);
            path.pop();
        }
    }
    let mut best = None;
    go(p, &mut vec![], &mut best, true);
    best.expect("pattern has an IP")
}

pub const PRO_CONTEXTS: [&str; 6] = [
    "(VP VV NP (IP VP))",
    "(VP VV (IP VP))",
    "(CP (IP VP) DEC)",
    "(PP P (IP VP))",
    "(LCP (IP VP) LC)",
    "(NP (IP VP) ...)",
];

pub const SMALL_PRO_CONTEXTS: [&str; 5] = [
    "(CP (IP VP) DEC)",
    "(VP VV (IP VP))",
    "(LCP (IP VP) LC)",
    "(IP IP PU (IP VP) ...)",
    "(TOP (IP VP PU))",
];

/// IPs selected by a list of contexts, with the index of each matching context.
fn pattern_targets(root: &Node, contexts: &[&str]) -> Vec<(Vec<usize>, usize)> {
    let mut out = vec![];
    let mut nodes = vec![vec![]];
    let mut i = 0;
    while i < nodes.len() {
        let p: Vec<usize> = nodes[i].clone();
        for c in 0..root.at(&p).kids.len() {
            let mut q = p.clone();
            q.push(c);
            nodes.push(q);
        }
        i += 1;
    }
    for (k, text) in contexts.iter().enumerate() {
        let pt = pat(text);
        let t = target_of(&pt);
        for p in &nodes {
            for rel in bindings(&pt, root.at(p), Some(&t)).into_iter().flatten() {
                let mut full = p.clone();
                full.extend(rel);
                if !out.contains(&(full.clone(), k)) {
                    out.push((full, k));
                }
            }
        }
    }
    out
}

/// Relative clause trace placement under a CP whose parent is a CP.
#[derive(Debug, Clone, PartialEq)]
enum OpGap {
    Subject(Vec<usize>),
    Adjunct(Vec<usize>),
    Object(Vec<usize>, usize),
}

fn op_gap(root: &Node, w: &[usize], xi: usize) -> Option<OpGap> {
    let wn = root.at(w);
    if !wn.is("CP") || wn.kids.iter().any(|k| k.label.starts_with("WH")) {
        return None;
    }
    let x = &wn.kids[xi];
    if !x.phrase("CP") {
        return None;
    }
    let yi = x.first("IP").filter(|&y| !x.kids[y].is_pos())?;
    let mut y = w.to_vec();
    y.extend([xi, yi]);
    let yn = root.at(&y);
    if !yn.has("NP") {
        return Some(OpGap::Subject(y));
    }
    let zi = yn.kids.iter().rposition(|k| k.phrase("VP"))?;
    let zn = &yn.kids[zi];
    y.push(zi);
    if zn.has("VP") {
        Some(OpGap::Adjunct(y))
    } else if !zn.has("NP") {
        Some(OpGap::Object(y, zn.kids.len()))
    } else {
        None
    }
}

pub fn chinese(root: &Node) -> (Vec<Mention>, Hits) {
    let mut out = vec![];
    let mut hits = Hits::new();
    let all = sites(root);

    let mut ops: Vec<(Vec<usize>, usize, OpGap)> = vec![];
    for (path, g) in &all {
        let n = root.at(path);
        if *g < n.kids.len() && n.is("CP") {
            if let Some(gap) = op_gap(root, path, *g) {
                ops.push((path.clone(), *g, gap));
            }
        }
        if n.is("CP") && *g < n.kids.len() && n.kids[*g].phrase("CP") {
            let x = &n.kids[*g];
            if let Some(y) = x.first("IP") {
                let yn = &x.kids[y];
                if yn.has("NP")
                    && yn
                        .kids
                        .iter()
                        .rposition(|k| k.phrase("VP"))
                        .is_some_and(|z| yn.kids[z].has("NP") && !yn.kids[z].has("VP"))
                {
                    hits.insert("op-none".into());
                }
            }
        }
    }
    let subject_traced: Vec<Vec<usize>> = ops
        .iter()
        .filter_map(|(_, _, g)| {
            if let OpGap::Subject(y) = g {
                Some(y.clone())
            } else {
                None
            }
        })
        .collect();
    let object_traced: Vec<Vec<usize>> = ops
        .iter()
        .filter_map(|(_, _, g)| {
            if let OpGap::Object(z, _) = g {
                Some(z.clone())
            } else {
                None
            }
        })
        .collect();

    let mut pro_ips: Vec<Vec<usize>> = vec![];
    for (ip, k) in pattern_targets(root, &PRO_CONTEXTS) {
        if root.at(&ip).has("NP") || subject_traced.contains(&ip) {
            continue;
        }
        hits.insert(format!("pro-{}", k + 1));
        if !pro_ips.contains(&ip) {
            pro_ips.push(ip);
        }
    }
    let mut small_ips: Vec<Vec<usize>> = vec![];
    for (ip, k) in pattern_targets(root, &SMALL_PRO_CONTEXTS) {
        if root.at(&ip).has("NP") || subject_traced.contains(&ip) {
            continue;
        }
        if pro_ips.contains(&ip) {
            hits.insert(format!("small-pro-{}-preempted", k + 1));
            continue;
        }
        hits.insert(format!("small-pro-{}", k + 1));
        if !small_ips.contains(&ip) {
            small_ips.push(ip);
        }
    }

    for (path, g) in &all {
        let (path, g) = (path.as_slice(), *g);
        let n = root.at(path);

        for (w, xi, gap) in &ops {
            if w == path && *xi == g {
                let (name, filler) = match gap {
                    OpGap::Subject(_) => ("op-subject", "WHNP"),
                    OpGap::Adjunct(_) => ("op-adjunct", "WHPP"),
                    OpGap::Object(..) => ("op-object", "WHNP"),
                };
                hits.insert(name.into());
                out.push(mention(root, path, g, "*OP*", filler));
            }
            match gap {
                OpGap::Subject(y) if y == path && g == 0 => out.push(mention(root, path, g, "*T*", "NP")),
                OpGap::Adjunct(z) if z == path && g == 0 => out.push(mention(root, path, g, "*T*", "PP")),
                OpGap::Object(z, e) if z == path && g == *e => out.push(mention(root, path, g, "*T*", "NP")),
                _ => {}
            }
        }

        if g == 0 && pro_ips.iter().any(|p| p == path) {
            out.push(mention(root, path, g, "*PRO*", "NP"));
        }
        if g == 0 && small_ips.iter().any(|p| p == path) {
            out.push(mention(root, path, g, "*pro*", "NP"));
        }

        // *RNR*: Y is an earlier conjunct lacking the shared phrase that the
        // last conjunct Z has; insert at the end of Y.
        if path.is_empty() {
            continue;
        }
        let parent = root.at(&path[..path.len() - 1]);
        let me = path[path.len() - 1];
        let (conj, shared) = match parent.label.as_str() {
            "QP" => ("QP", "CLP"),
            "VP" => ("VP", "NP"),
            _ => continue,
        };
        if !n.phrase(conj) || g != n.kids.len() {
            continue;
        }
        let Some(z) = parent.kids.iter().rposition(|k| k.phrase(conj)) else {
            continue;
        };
        if z == me {
            continue;
        }
        let zn = &parent.kids[z];
        let numeral = |k: &Node| k.is("CD") || k.is("OD");
        let y_has_shared = n.has(shared) || (conj == "VP" && object_traced.iter().any(|p| p == path));
        let ok = zn.has(shared)
            && !y_has_shared
            && (conj == "VP" || (zn.kids.iter().any(numeral) && n.kids.first().is_some_and(numeral)));
        if ok {
            hits.insert(format!("rnr-{}", conj.to_lowercase()));
            out.push(mention(root, path, g, "*RNR*", shared));
        }
    }
    out.sort();
    (out, hits)
}
