//! JSON and TSV renderings of evaluation and typology reports.

use serde::Serialize;

use nulltree_core::{Counts, EvalReport, Language, NullKind, NullStats};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Scores {
    tp: usize,
    fp: usize,
    #[serde(rename = "fn")]
    fn_: usize,
    precision: f64,
    recall: f64,
    f1: f64,
}

impl From<&Counts> for Scores {
    fn from(c: &Counts) -> Self {
        Scores {
            tp: c.tp,
            fp: c.fp,
            fn_: c.fn_,
            precision: c.precision(),
            recall: c.recall(),
            f1: c.f1(),
        }
    }
}

#[derive(Serialize)]
struct KindScores {
    kind: &'static str,
    #[serde(flatten)]
    scores: Scores,
}

#[derive(Serialize)]
struct Mode {
    labeled: bool,
    penalize_skips: bool,
    exclude_kinds: Vec<&'static str>,
}

#[derive(Serialize)]
struct Sentences {
    total: usize,
    scored: usize,
    skipped: usize,
    skip_reasons: Vec<(&'static str, usize)>,
    skipped_sentences: Vec<Skipped>,
}

#[derive(Serialize)]
struct Skipped {
    sentence: String,
    reason: &'static str,
}

#[derive(Serialize)]
struct EvalJson {
    schema_version: u32,
    mode: Mode,
    sentences: Sentences,
    overall: Scores,
    per_kind: Vec<KindScores>,
}

/// `ids` names sentences by position for the skipped list.
pub fn eval_json(r: &EvalReport, ids: &[String]) -> String {
    let doc = EvalJson {
        schema_version: SCHEMA_VERSION,
        mode: Mode {
            labeled: r.options.labeled,
            penalize_skips: r.options.penalize_skips,
            exclude_kinds: r.options.exclude_kinds.iter().map(|k| k.symbol()).collect(),
        },
        sentences: Sentences {
            total: r.sentences_total,
            scored: r.sentences_scored(),
            skipped: r.sentences_skipped,
            skip_reasons: r.skip_reasons.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
            skipped_sentences: r
                .skipped
                .iter()
                .map(|(i, reason)| Skipped {
                    sentence: ids.get(*i).cloned().unwrap_or_else(|| (i + 1).to_string()),
                    reason: reason.as_str(),
                })
                .collect(),
        },
        overall: Scores::from(&r.overall),
        per_kind: r
            .per_kind
            .iter()
            .map(|(k, c)| KindScores {
                kind: k.symbol(),
                scores: Scores::from(c),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

/// Rows are kinds then `overall`; columns P, R, F1 and the raw counts.
pub fn eval_tsv(r: &EvalReport) -> String {
    let mut out = String::from("kind\tP\tR\tF1\ttp\tfp\tfn\n");
    let mut row = |name: &str, c: &Counts| {
        out.push_str(&format!(
            "{}\t{:.2}\t{:.2}\t{:.2}\t{}\t{}\t{}\n",
            name,
            c.precision(),
            c.recall(),
            c.f1(),
            c.tp,
            c.fp,
            c.fn_
        ));
    };
    for (k, c) in &r.per_kind {
        row(k.symbol(), c);
    }
    row("overall", &r.overall);
    out
}

/// Ratio for display: two decimals from 1 upward, else two significant
/// figures (0.36, 0.0071, 1.38).
pub fn display_ratio(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x >= 1.0 {
        return format!("{:.2}", x);
    }
    let digits = |v: f64| (1 - v.log10().floor() as i32).max(0) as usize;
    let d = digits(x);
    let s = format!("{:.*}", d, x);
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded >= 1.0 {
        return format!("{:.2}", rounded);
    }
    let d2 = digits(rounded);
    if d2 != d {
        format!("{:.*}", d2, rounded)
    } else {
        s
    }
}

#[derive(Serialize)]
struct KindCount {
    kind: &'static str,
    count: usize,
    ratio: f64,
}

#[derive(Serialize)]
struct StatsJson {
    schema_version: u32,
    language: &'static str,
    sentences: usize,
    total: usize,
    kinds: Vec<KindCount>,
    unexpected: Vec<KindCount>,
}

fn kind_rows(s: &NullStats, kinds: impl Iterator<Item = NullKind>) -> Vec<KindCount> {
    kinds
        .map(|k| KindCount {
            kind: k.symbol(),
            count: s.count(k),
            ratio: s.ratio(k),
        })
        .collect()
}

pub fn stats_json(s: &NullStats, language: Language) -> String {
    let doc = StatsJson {
        schema_version: SCHEMA_VERSION,
        language: language.code(),
        sentences: s.sentences,
        total: s.total(),
        kinds: kind_rows(s, s.counts.keys().copied()),
        unexpected: kind_rows(s, s.unexpected.keys().copied()),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("stats serialize");
    out.push('\n');
    out
}

pub fn stats_tsv(s: &NullStats) -> String {
    let mut out = String::from("kind\tcount\tratio\n");
    for k in s.counts.keys() {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            k.symbol(),
            s.count(*k),
            display_ratio(s.ratio(*k))
        ));
    }
    for k in s.unexpected.keys() {
        out.push_str(&format!(
            "unexpected:{}\t{}\t{}\n",
            k.symbol(),
            s.count(*k),
            display_ratio(s.ratio(*k))
        ));
    }
    out.push_str(&format!("sentences\t{}\t\n", s.sentences));
    out
}
