//! Seeded generator of small parser-style (null-free) trees exercising the
//! restoration rule contexts.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_TERMINALS: usize = 12;

fn pick<'a>(rng: &mut ChaCha8Rng, xs: &[&'a str]) -> &'a str {
    xs.choose(rng).unwrap()
}

fn words(tree: &str) -> usize {
    // Every preterminal closes with `word)`.
    tree.split(')')
        .filter(|s| {
            s.trim_end()
                .rsplit(' ')
                .next()
                .is_some_and(|w| !w.is_empty() && !w.starts_with('('))
        })
        .count()
}

// ---------------------------------------------------------------- English

fn subject(rng: &mut ChaCha8Rng) -> String {
    match rng.gen_range(0..3) {
        0 => format!("(NP (PRP {}))", pick(rng, &["he", "she", "we", "they"])),
        1 => format!("(NP (NNP {}))", pick(rng, &["Mary", "John", "Kim"])),
        _ => format!("(NP (DT the) (NN {}))", pick(rng, &["dog", "clerk", "firm"])),
    }
}

fn object(rng: &mut ChaCha8Rng) -> String {
    format!(
        "(NP (DT {}) (NN {}))",
        pick(rng, &["the", "a"]),
        pick(rng, &["letter", "bread", "car", "plan"])
    )
}

fn simple_clause(rng: &mut ChaCha8Rng) -> String {
    format!(
        "(S {} (VP (VBD {}) {}))",
        subject(rng),
        pick(rng, &["saw", "bought", "read"]),
        object(rng)
    )
}

/// The clause under a relative SBAR, with the given gap construction.
fn relative_body(rng: &mut ChaCha8Rng, gap: usize) -> String {
    let subj = format!("(NP (PRP {}))", pick(rng, &["we", "they", "I"]));
    match gap {
        0 => format!(
            "(S (VP (VBD {}) {}))",
            pick(rng, &["left", "won", "helped"]),
            object(rng)
        ),
        1 => format!("(S {} (VP (VBD {})))", subj, pick(rng, &["built", "saw", "wanted"])),
        2 => format!(
            "(S {} (VP (VBD {}) (PP (IN {}))))",
            subj,
            pick(rng, &["talked", "thought"]),
            pick(rng, &["about", "of"])
        ),
        3 => format!("(S {} (VP (VP (VBD saw)) (CC and) (VP (VBD liked))))", subj),
        4 => format!(
            "(S (S {} (VP (VBD found))) (CC and) (S (NP (PRP they)) (VP (VBD sold))))",
            subj
        ),
        5 => format!(
            "(S {} (VP (VBD said) (SBAR {}(S (NP (PRP he)) (VP (VBD took))))))",
            subj,
            if rng.gen_bool(0.5) { "(IN that) " } else { "" }
        ),
        6 => format!("(S {} (VP (VBD was) (ADJP (JJ proud) (PP (IN of)))))", subj),
        7 => format!(
            "(S {} (VP (VBD was) (ADJP (JJ happy) (S (VP (TO to) (VP (VB see)))))))",
            subj
        ),
        8 => "(S (VP (TO to) (VP (VB cut))))".to_string(),
        9 => format!("(S (VP (TO to) (VP (VB cut) {})))", object(rng)),
        10 => format!(
            "(S (VP (VBD was) (VP (VBN {}) (PP (IN by) (NP (NNP Kim))))))",
            pick(rng, &["built", "sold"])
        ),
        11 => format!("(S {} (VP (VBD was) (VP (VBN given))))", subj),
        _ => format!(
            "(S {} (VP (VBD {}) (PP (IN to) {})))",
            subj,
            pick(rng, &["went", "ran"]),
            object(rng)
        ),
    }
}

fn relative(rng: &mut ChaCha8Rng) -> String {
    let head = pick(rng, &["man", "book", "reason", "way", "times", "day", "place", "house"]);
    let gap = rng.gen_range(0..13);
    let wh = match rng.gen_range(0..4) {
        0 => String::new(),
        1 => "(WHNP (WDT which)) ".to_string(),
        2 => "(WHNP (WP who)) ".to_string(),
        _ => "(WHADVP (WRB where)) ".to_string(),
    };
    let body = relative_body(rng, gap);
    let np = format!("(NP (NP (DT the) (NN {})) (SBAR {}{}))", head, wh, body);
    if rng.gen_bool(0.5) {
        format!("(S {} (VP (VBD saw) {}) (. .))", subject(rng), np)
    } else {
        format!("(S {} (VP (VBD left)) (. .))", np)
    }
}

fn english_one(rng: &mut ChaCha8Rng) -> String {
    let s = subject(rng);
    match rng.gen_range(0..12) {
        0 => format!(
            "(S {} (VP (VBD {}) {}) (. .))",
            s,
            pick(rng, &["saw", "sold"]),
            object(rng)
        ),
        1 => format!(
            "(S {} (VP (VBD {}) (S (VP (TO to) (VP (VB leave))))) (. .))",
            s,
            pick(rng, &["tried", "wanted", "hoped"])
        ),
        2 => format!("(S {} (VP (VBD enjoyed) (S (VP (VBG swimming)))) (. .))", s),
        3 => format!(
            "(S {} (VP (VBD said) (SBAR {}{})) (. .))",
            s,
            if rng.gen_bool(0.5) { "(IN that) " } else { "" },
            simple_clause(rng)
        ),
        4..=6 => relative(rng),
        7 => {
            let qp = match rng.gen_range(0..4) {
                0 => "(QP ($ $) (CD 5))",
                1 => "(QP ($ $) (CD 5) (CD million))",
                2 => "(QP (RB about) ($ $) (CD 20))",
                _ => "(QP (CD 5) (CD million))",
            };
            format!("(S {} (VP (VBD cost) (NP {})) (. .))", s, qp)
        }
        8 => {
            let aux = pick(rng, &["was", "got", "is"]);
            let rest = match rng.gen_range(0..4) {
                0 => "(PP (IN by) (NP (NNP Kim)))".to_string(),
                1 => "(PP (IN to))".to_string(),
                2 => object(rng),
                _ => String::new(),
            };
            format!("(S {} (VP (VBD {}) (VP (VBN sent) {})) (. .))", s, aux, rest)
        }
        9 => format!(
            "(S {} (VP (MD will) (VP (VB be) (VP (VBN {})))) (. .))",
            s,
            pick(rng, &["sold", "seen"])
        ),
        10 => format!("(S {} (VP (VBZ has) (VP (VBN sent) {})) (. .))", s, object(rng)),
        _ => format!(
            "(S {} (VP (VBD wanted) (NP (NP (DT a) (NN way)) (SBAR (S (VP (TO to) (VP (VB win))))))) (. .))",
            s
        ),
    }
}

pub fn english(seed: u64, n: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = english_one(&mut rng);
        if words(&t) <= MAX_TERMINALS {
            out.push(t);
        }
    }
    out
}

// ---------------------------------------------------------------- Chinese

fn zh_np(rng: &mut ChaCha8Rng) -> String {
    format!("(NP (NN {}))", pick(rng, &["音乐", "经济", "汽车", "问题"]))
}

fn zh_subject(rng: &mut ChaCha8Rng) -> String {
    format!("(NP (PN {}))", pick(rng, &["他", "我们", "她"]))
}

fn adv(rng: &mut ChaCha8Rng) -> &'static str {
    if rng.gen_bool(0.3) {
        "(ADVP (AD 也)) "
    } else {
        ""
    }
}

fn zh_relative(rng: &mut ChaCha8Rng) -> String {
    let ip = match rng.gen_range(0..4) {
        0 => format!("(IP (VP (VV 参加) {}))", zh_np(rng)),
        1 => format!("(IP {} (VP (VV 写)))", zh_subject(rng)),
        2 => format!(
            "(IP {} (VP (ADVP (AD 在)) (VP (VV 写) {})))",
            zh_subject(rng),
            zh_np(rng)
        ),
        _ => format!("(IP {} (VP (VV 写) {}))", zh_subject(rng), zh_np(rng)),
    };
    format!(
        "(NP (CP (CP {} (DEC 的))) (NP (NN {})))",
        ip,
        pick(rng, &["书", "代表", "地方"])
    )
}

fn chinese_one(rng: &mut ChaCha8Rng) -> String {
    let s = zh_subject(rng);
    let body = match rng.gen_range(0..12) {
        0 | 1 => {
            let rel = zh_relative(rng);
            if rng.gen_bool(0.5) {
                format!("(IP {} (VP (VV 发言)) (PU 。))", rel)
            } else {
                format!("(IP {} (VP (VV 喜欢) {}) (PU 。))", s, rel)
            }
        }
        2 => format!(
            "(IP {} (VP {}(VV 想) (IP (VP (VV 去) {}))) (PU 。))",
            s,
            adv(rng),
            zh_np(rng)
        ),
        3 => format!(
            "(IP {} (VP (VV 请) {} (IP {}(VP (VV 来)))) (PU 。))",
            s,
            zh_subject(rng),
            adv(rng)
        ),
        4 => format!(
            "(IP {} (VP (PP (P 为了) (IP (VP (VV 发展) {}))) (VP (VV 努力))) (PU 。))",
            s,
            zh_np(rng)
        ),
        5 => format!(
            "(IP {} (VP (PP (P 在) (LCP (IP (VP (VV 离开))) (LC 以后))) (VP (VV 回家))) (PU 。))",
            s
        ),
        6 => format!(
            "(IP {} (VP (VV 研究) (NP (IP (VP (VV 撤军))) (NP (NN 计划)))) (PU 。))",
            s
        ),
        7 => format!(
            "(IP (IP {} (VP (VV 来))) (PU ，) (IP {}(VP (VV 走) {})) (PU 。))",
            s,
            adv(rng),
            zh_np(rng)
        ),
        8 => format!("(IP (VP {}(VV 喜欢) {}) (PU 。))", adv(rng), zh_np(rng)),
        9 => format!(
            "(IP {} (VP (VV 有) (NP (QP (QP (CD 三)) (CC 或) (QP (CD 四) (CLP (M 个)))) (NP (NN 人)))) (PU 。))",
            s
        ),
        10 => format!(
            "(IP {} (VP (VV 讨论) (NP (CP (IP (VP (VV 发展))) (DEC 的)) (NP (NN 问题)))) (PU 。))",
            s
        ),
        _ => format!(
            "(IP {} (VP (VP (VV 生产)) (PU 、) (VP (VV 销售) {})) (PU 。))",
            s,
            zh_np(rng)
        ),
    };
    format!("(TOP {})", body)
}

pub fn chinese(seed: u64, n: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = chinese_one(&mut rng);
        if words(&t) <= MAX_TERMINALS {
            out.push(t);
        }
    }
    out
}
