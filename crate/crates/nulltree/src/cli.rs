//! Command-line front end.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::builder::BoolishValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use nulltree_core::rules::ctb::{CtbRules, OpPlacement};
use nulltree_core::rules::parse_word_list;
use nulltree_core::rules::ptb::PtbRules;
use nulltree_core::{
    build_pair, delinearize, erase_nulls, linearize, parse_tree_segments, print_tree, score_corpus, strip_all,
    strip_nulls, validate_sequence, EvalOptions, HeadRuleTable, Language, LanguageProfile, NullKind, NullStats,
    Prediction, PrintStyle, RuleTraceLog, SyntaxTree,
};

use crate::config::{env_bool, FileConfig};
use crate::input::{self, Loaded, Problem, Source};
use crate::report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LangArg {
    #[value(alias = "english")]
    En,
    #[value(alias = "chinese")]
    Zh,
    #[value(alias = "korean")]
    Ko,
}

impl From<LangArg> for Language {
    fn from(l: LangArg) -> Language {
        match l {
            LangArg::En => Language::English,
            LangArg::Zh => Language::Chinese,
            LangArg::Ko => Language::Korean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StyleArg {
    Oneline,
    Indented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RulesArg {
    Ptb,
    Ctb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportArg {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpPlacementArg {
    Sister,
    Parent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredFormat {
    Auto,
    Tree,
    Seq,
}

#[derive(Debug, Parser)]
#[command(name = "nulltree", version, about = "Null elements in Penn-style treebanks")]
pub struct Cli {
    /// Treebank language preset.
    #[arg(long, global = true, env = "NULLTREE_LANG", value_enum)]
    pub lang: Option<LangArg>,
    /// Warn about malformed input and keep going instead of failing.
    #[arg(long, global = true, env = "NULLTREE_LENIENT", num_args = 0..=1, require_equals = true,
          default_missing_value = "true", value_parser = BoolishValueParser::new())]
    pub lenient: Option<bool>,
    /// Output file (`make-dataset`: output prefix). Default stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Settings file. Default `./nulltree.toml` when it exists.
    #[arg(long, global = true, env = "NULLTREE_CONFIG")]
    pub config: Option<PathBuf>,
    /// Tree layout for tree outputs.
    #[arg(long, global = true, env = "NULLTREE_STYLE", value_enum)]
    pub style: Option<StyleArg>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Read trees and print them canonically.
    Parse {
        /// Only check the input; print nothing on success.
        #[arg(long)]
        validate: bool,
        inputs: Vec<String>,
    },
    /// Remove null elements.
    Strip {
        /// Keep function tags and indices on the remaining labels.
        #[arg(long)]
        keep_labels: bool,
        inputs: Vec<String>,
    },
    /// Re-insert null elements with the rule engine.
    Restore(RestoreArgs),
    /// Trees to token sequences, one per line.
    Linearize {
        #[command(flatten)]
        labels: LabelArgs,
        inputs: Vec<String>,
    },
    /// Token sequences back to trees.
    Delinearize { inputs: Vec<String> },
    /// Write PREFIX.src, PREFIX.tgt and PREFIX.ids from gold trees.
    MakeDataset {
        #[command(flatten)]
        labels: LabelArgs,
        inputs: Vec<String>,
    },
    /// Score predicted null elements against gold.
    Eval(EvalArgs),
    /// Null-element counts and per-sentence ratios.
    Stats {
        /// Kind inventory to count against. Default: the language preset.
        #[arg(long, env = "NULLTREE_PROFILE", value_enum)]
        profile: Option<LangArg>,
        #[arg(long, env = "NULLTREE_REPORT", value_enum)]
        report: Option<ReportArg>,
        inputs: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    /// Keep function tags on phrase labels.
    #[arg(long, conflicts_with = "without_labels")]
    pub with_labels: bool,
    /// Bare categories only (default).
    #[arg(long)]
    pub without_labels: bool,
}

#[derive(Debug, Args)]
pub struct RestoreArgs {
    #[arg(long, env = "NULLTREE_RULES", value_enum)]
    pub rules: Option<RulesArg>,
    /// Write every rule firing as TSV.
    #[arg(long, env = "NULLTREE_TRACE_LOG")]
    pub trace_log: Option<PathBuf>,
    /// Label inserted subjects `NP-SBJ`.
    #[arg(long, env = "NULLTREE_FUNCTION_LABELS", num_args = 0..=1, require_equals = true,
          default_missing_value = "true", value_parser = BoolishValueParser::new())]
    pub function_labels: Option<bool>,
    #[arg(long, env = "NULLTREE_OP_PLACEMENT", value_enum)]
    pub op_placement: Option<OpPlacementArg>,
    /// Also restore `*PRO*` in subjectless clauses heading a noun phrase.
    #[arg(long, env = "NULLTREE_APPOSITIVE_PRO", num_args = 0..=1, require_equals = true,
          default_missing_value = "true", value_parser = BoolishValueParser::new())]
    pub appositive_pro: Option<bool>,
    /// Replacement English head table.
    #[arg(long, env = "NULLTREE_HEAD_RULES")]
    pub head_rules: Option<PathBuf>,
    /// Replacement word list of adverbial relative heads.
    #[arg(long, env = "NULLTREE_ADVERBIAL_HEADS")]
    pub adverbial_heads: Option<PathBuf>,
    /// Replacement word list of passive auxiliaries.
    #[arg(long, env = "NULLTREE_PASSIVE_AUXILIARIES")]
    pub passive_auxiliaries: Option<PathBuf>,
    pub inputs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, num_args = 1.., required = true)]
    pub gold: Vec<String>,
    #[arg(long, num_args = 1.., required = true)]
    pub pred: Vec<String>,
    #[arg(long, env = "NULLTREE_PRED_FORMAT", value_enum, default_value = "auto")]
    pub pred_format: PredFormat,
    /// Match on parent category and tags as well.
    #[arg(long, env = "NULLTREE_LABELED", num_args = 0..=1, require_equals = true,
          default_missing_value = "true", value_parser = BoolishValueParser::new())]
    pub labeled: Option<bool>,
    /// Count gold nulls of skipped sentences as misses.
    #[arg(long, env = "NULLTREE_PENALIZE_SKIPS", num_args = 0..=1, require_equals = true,
          default_missing_value = "true", value_parser = BoolishValueParser::new())]
    pub penalize_skips: Option<bool>,
    /// Kinds ignored on both sides, e.g. `*ICH*,*EXP*`.
    #[arg(long, env = "NULLTREE_EXCLUDE_KINDS", value_delimiter = ',', value_parser = parse_kind)]
    pub exclude_kinds: Option<Vec<NullKind>>,
    #[arg(long, env = "NULLTREE_REPORT", value_enum)]
    pub report: Option<ReportArg>,
}

fn parse_kind(s: &str) -> std::result::Result<NullKind, String> {
    NullKind::from_symbol(s.trim()).ok_or_else(|| format!("unknown null kind `{}`", s))
}

fn enum_setting<E: ValueEnum>(key: &str, value: &Option<String>) -> Result<Option<E>> {
    match value {
        None => Ok(None),
        Some(v) => E::from_str(v, true)
            .map(Some)
            .map_err(|_| anyhow!("config: bad value `{}` for `{}`", v, key)),
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            1
        }
    }
}

/// Resolved global settings.
struct Ctx {
    lang: Language,
    lenient: bool,
    output: Option<PathBuf>,
    style: PrintStyle,
    file: FileConfig,
}

impl Ctx {
    /// Report input problems. `Ok(false)` means strict mode failed.
    fn problems(&self, problems: &[Problem]) -> bool {
        let tag = if self.lenient { "warning" } else { "error" };
        for p in problems {
            eprintln!("{}: {}", tag, p);
        }
        self.lenient || problems.is_empty()
    }

    fn profile(&self) -> LanguageProfile {
        LanguageProfile::for_language(self.lang)
    }

    fn labels(&self, a: &LabelArgs) -> bool {
        if a.with_labels {
            true
        } else if a.without_labels {
            false
        } else {
            env_bool("NULLTREE_WITH_LABELS")
                .or(self.file.with_labels)
                .unwrap_or(false)
        }
    }

    fn print(&self, tree: &SyntaxTree) -> std::result::Result<String, String> {
        print_tree(tree, self.style).map_err(|e| e.to_string())
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let file = FileConfig::load(cli.config.as_deref())?;
    let lang = match cli.lang {
        Some(l) => l,
        None => enum_setting::<LangArg>("lang", &file.lang)?.unwrap_or(LangArg::En),
    };
    let style = match cli.style {
        Some(s) => s,
        None => enum_setting::<StyleArg>("style", &file.style)?.unwrap_or(StyleArg::Oneline),
    };
    let ctx = Ctx {
        lang: lang.into(),
        lenient: cli.lenient.or(file.lenient).unwrap_or(false),
        output: cli.output,
        style: match style {
            StyleArg::Oneline => PrintStyle::OneLine,
            StyleArg::Indented => PrintStyle::Indented,
        },
        file,
    };
    match cli.command {
        Command::Parse { validate, inputs } => cmd_parse(&ctx, &inputs, validate),
        Command::Strip { keep_labels, inputs } => cmd_strip(&ctx, &inputs, keep_labels),
        Command::Restore(a) => cmd_restore(&ctx, a),
        Command::Linearize { labels, inputs } => cmd_linearize(&ctx, &inputs, ctx.labels(&labels)),
        Command::Delinearize { inputs } => cmd_delinearize(&ctx, &inputs),
        Command::MakeDataset { labels, inputs } => cmd_make_dataset(&ctx, &inputs, ctx.labels(&labels)),
        Command::Eval(a) => cmd_eval(&ctx, a),
        Command::Stats {
            profile,
            report,
            inputs,
        } => {
            let profile = match profile {
                Some(p) => Some(p),
                None => enum_setting::<LangArg>("profile", &ctx.file.profile)?,
            };
            let report = resolve_report(&ctx, report)?;
            cmd_stats(&ctx, &inputs, profile.map(Language::from).unwrap_or(ctx.lang), report)
        }
    }
}

fn resolve_report(ctx: &Ctx, flag: Option<ReportArg>) -> Result<ReportArg> {
    Ok(match flag {
        Some(r) => r,
        None => enum_setting::<ReportArg>("report", &ctx.file.report)?.unwrap_or(ReportArg::Json),
    })
}

fn load(ctx: &Ctx, inputs: &[String]) -> Result<Option<Vec<Loaded<SyntaxTree>>>> {
    let sources = input::read_sources(inputs)?;
    let (trees, problems) = input::load_trees(&sources);
    Ok(if ctx.problems(&problems) { Some(trees) } else { None })
}

/// Apply `f` to every tree in parallel, keeping input order. Failures become
/// problems under the tree's id.
fn map_trees<T, F>(trees: &[Loaded<SyntaxTree>], f: F) -> (Vec<Loaded<T>>, Vec<Problem>)
where
    T: Send,
    F: Fn(&SyntaxTree) -> std::result::Result<T, String> + Sync,
{
    let results: Vec<_> = trees
        .par_iter()
        .map(|l| match f(&l.item) {
            Ok(item) => Ok(Loaded { id: l.id.clone(), item }),
            Err(message) => Err(Problem {
                location: l.id.clone(),
                message,
            }),
        })
        .collect();
    input::split(results)
}

fn write_lines<'a>(ctx: &Ctx, lines: impl IntoIterator<Item = &'a str>) -> Result<()> {
    let mut out = input::open_output(ctx.output.as_deref())?;
    for l in lines {
        out.write_all(l.as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn emit_trees(ctx: &Ctx, trees: &[Loaded<SyntaxTree>]) -> Result<i32> {
    let (printed, problems) = map_trees(trees, |t| ctx.print(t));
    if !ctx.problems(&problems) {
        return Ok(1);
    }
    write_lines(ctx, printed.iter().map(|l| l.item.as_str()))?;
    Ok(0)
}

fn cmd_parse(ctx: &Ctx, inputs: &[String], validate: bool) -> Result<i32> {
    let Some(trees) = load(ctx, inputs)? else { return Ok(1) };
    if validate {
        let (_, problems) = map_trees(&trees, |t| t.validate().map_err(|e| e.to_string()));
        return Ok(if ctx.problems(&problems) { 0 } else { 1 });
    }
    emit_trees(ctx, &trees)
}

fn cmd_strip(ctx: &Ctx, inputs: &[String], keep_labels: bool) -> Result<i32> {
    let Some(trees) = load(ctx, inputs)? else { return Ok(1) };
    let (stripped, problems) = map_trees(&trees, |t| {
        let r = if keep_labels { strip_nulls(t) } else { strip_all(t) };
        r.map_err(|e| e.to_string())
    });
    if !ctx.problems(&problems) {
        return Ok(1);
    }
    emit_trees(ctx, &stripped)
}

enum Engine {
    Ptb(PtbRules),
    Ctb(CtbRules),
}

impl Engine {
    fn restore(&self, t: &SyntaxTree) -> (SyntaxTree, RuleTraceLog) {
        match self {
            Engine::Ptb(r) => r.restore(t),
            Engine::Ctb(r) => r.restore(t),
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn build_engine(ctx: &Ctx, a: &RestoreArgs) -> Result<Engine> {
    let f = &ctx.file;
    let rules = match a.rules {
        Some(r) => r,
        None => match enum_setting::<RulesArg>("rules", &f.rules)? {
            Some(r) => r,
            None => match ctx.lang {
                Language::English => RulesArg::Ptb,
                Language::Chinese => RulesArg::Ctb,
                Language::Korean => bail!("no restoration rules for `ko`; pass --rules ptb or --rules ctb"),
            },
        },
    };
    let function_labels = a.function_labels.or(f.function_labels).unwrap_or(false);
    Ok(match rules {
        RulesArg::Ptb => {
            let mut r = PtbRules {
                function_labels,
                ..Default::default()
            };
            if let Some(p) = a.head_rules.as_ref().or(f.head_rules.as_ref()) {
                r.heads = HeadRuleTable::parse(&read_text(p)?)
                    .map_err(|e| anyhow!("{}: line {}: {}", p.display(), e.line, e.message))?;
            }
            if let Some(p) = a.adverbial_heads.as_ref().or(f.adverbial_heads.as_ref()) {
                r.adverbial_heads = parse_word_list(&read_text(p)?);
            }
            if let Some(p) = a.passive_auxiliaries.as_ref().or(f.passive_auxiliaries.as_ref()) {
                r.passive_auxiliaries = parse_word_list(&read_text(p)?);
            }
            Engine::Ptb(r)
        }
        RulesArg::Ctb => {
            let mut r = CtbRules::with_appositive(a.appositive_pro.or(f.appositive_pro).unwrap_or(true));
            r.function_labels = function_labels;
            let placement = match a.op_placement {
                Some(p) => Some(p),
                None => enum_setting::<OpPlacementArg>("op-placement", &f.op_placement)?,
            };
            r.op_placement = match placement {
                Some(OpPlacementArg::Parent) => OpPlacement::Parent,
                _ => OpPlacement::Sister,
            };
            Engine::Ctb(r)
        }
    })
}

fn cmd_restore(ctx: &Ctx, a: RestoreArgs) -> Result<i32> {
    let engine = build_engine(ctx, &a)?;
    let Some(trees) = load(ctx, &a.inputs)? else {
        return Ok(1);
    };
    let (restored, problems) = map_trees(&trees, |t| {
        let (out, log) = engine.restore(t);
        ctx.print(&out).map(|s| (s, log))
    });
    if !ctx.problems(&problems) {
        return Ok(1);
    }
    write_lines(ctx, restored.iter().map(|l| l.item.0.as_str()))?;
    if let Some(path) = a.trace_log.as_ref().or(ctx.file.trace_log.as_ref()) {
        let mut tsv = String::from("sentence\trule\tpath\tanchor\tinserted\n");
        for l in &restored {
            for f in &l.item.1.firings {
                tsv.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    l.id, f.rule, f.path, f.anchor, f.inserted
                ));
            }
        }
        input::write_file(path, &tsv)?;
    }
    Ok(0)
}

fn cmd_linearize(ctx: &Ctx, inputs: &[String], labels: bool) -> Result<i32> {
    let Some(trees) = load(ctx, inputs)? else { return Ok(1) };
    let (seqs, _) = map_trees(&trees, |t| Ok(linearize(t, labels).to_string()));
    write_lines(ctx, seqs.iter().map(|l| l.item.as_str()))?;
    Ok(0)
}

fn cmd_delinearize(ctx: &Ctx, inputs: &[String]) -> Result<i32> {
    let sources = input::read_sources(inputs)?;
    let lines = input::load_lines(&sources);
    let results: Vec<_> = lines
        .par_iter()
        .map(|l| {
            let tree = validate_sequence(&l.item)
                .and_then(|s| delinearize(&s))
                .map_err(|e| Problem {
                    location: l.id.clone(),
                    message: format!("malformed sequence: {}", e),
                })?;
            Ok(Loaded {
                id: l.id.clone(),
                item: tree,
            })
        })
        .collect();
    let (trees, problems) = input::split(results);
    if !ctx.problems(&problems) {
        return Ok(1);
    }
    emit_trees(ctx, &trees)
}

fn cmd_make_dataset(ctx: &Ctx, inputs: &[String], labels: bool) -> Result<i32> {
    let prefix = ctx
        .output
        .clone()
        .ok_or_else(|| anyhow!("make-dataset needs -o PREFIX"))?;
    let Some(trees) = load(ctx, inputs)? else { return Ok(1) };
    let results: Vec<_> = trees
        .par_iter()
        .map(|l| (l.id.clone(), build_pair(&l.item, labels, &l.id)))
        .collect();
    let (mut src, mut tgt, mut ids) = (String::new(), String::new(), String::new());
    let mut line = 0;
    for (id, r) in results {
        let pair = match r {
            Ok(p) => p,
            Err(e) => {
                eprintln!("warning: {}: {}; skipped", id, e);
                continue;
            }
        };
        if erase_nulls(&pair.target) != pair.source {
            bail!("{}: target does not reduce to source", id);
        }
        line += 1;
        src.push_str(&format!("{}\n", pair.source));
        tgt.push_str(&format!("{}\n", pair.target));
        ids.push_str(&format!("{}\t{}\n", line, pair.sentence_id));
    }
    let with_ext = |ext: &str| {
        let mut p = prefix.clone().into_os_string();
        p.push(ext);
        PathBuf::from(p)
    };
    input::write_file(&with_ext(".src"), &src)?;
    input::write_file(&with_ext(".tgt"), &tgt)?;
    input::write_file(&with_ext(".ids"), &ids)?;
    Ok(0)
}

/// Gold trees by position, parse failures kept in place.
fn gold_segments(sources: &[Source]) -> Vec<(String, std::result::Result<SyntaxTree, String>)> {
    sources
        .iter()
        .flat_map(|s| {
            parse_tree_segments(&s.text)
                .into_iter()
                .enumerate()
                .map(move |(i, r)| (format!("{}:{}", s.name, i + 1), r.map_err(|e| e.to_string())))
        })
        .collect()
}

fn read_predictions(sources: &[Source], format: PredFormat) -> Vec<Prediction> {
    let seq = match format {
        PredFormat::Seq => true,
        PredFormat::Tree => false,
        PredFormat::Auto => sources.iter().any(|s| input::looks_linearized(&s.text)),
    };
    if !seq {
        return sources
            .iter()
            .flat_map(|s| parse_tree_segments(&s.text))
            .map(|r| match r {
                Ok(t) => Prediction::Tree(t),
                Err(e) => Prediction::Malformed(e.to_string()),
            })
            .collect();
    }
    let mut lines: Vec<&str> = sources.iter().flat_map(|s| s.text.lines()).collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    lines
        .par_iter()
        .map(|l| match validate_sequence(l).and_then(|s| delinearize(&s)) {
            Ok(t) => Prediction::Tree(t),
            Err(e) => Prediction::Malformed(e.to_string()),
        })
        .collect()
}

fn cmd_eval(ctx: &Ctx, a: EvalArgs) -> Result<i32> {
    let f = &ctx.file;
    let exclude_kinds: BTreeSet<NullKind> = match a.exclude_kinds {
        Some(ks) => ks.into_iter().collect(),
        None => f
            .exclude_kinds
            .iter()
            .flatten()
            .map(|s| parse_kind(s).map_err(|e| anyhow!("config: {}", e)))
            .collect::<Result<_>>()?,
    };
    let options = EvalOptions {
        labeled: a.labeled.or(f.labeled).unwrap_or(false),
        penalize_skips: a.penalize_skips.or(f.penalize_skips).unwrap_or(false),
        exclude_kinds,
    };
    let report_kind = resolve_report(ctx, a.report)?;

    let gold_src = input::read_sources(&a.gold)?;
    let pred_src = input::read_sources(&a.pred)?;
    let gold = gold_segments(&gold_src);
    let preds = read_predictions(&pred_src, a.pred_format);
    if gold.len() != preds.len() {
        bail!("{} gold trees but {} predictions", gold.len(), preds.len());
    }

    let problems: Vec<Problem> = gold
        .iter()
        .filter_map(|(id, r)| {
            r.as_ref().err().map(|m| Problem {
                location: id.clone(),
                message: m.clone(),
            })
        })
        .collect();
    if !ctx.problems(&problems) {
        return Ok(1);
    }
    let mut ids = Vec::new();
    let mut gold_trees = Vec::new();
    let mut pred_kept = Vec::new();
    for ((id, g), p) in gold.into_iter().zip(preds) {
        if let Ok(t) = g {
            ids.push(id);
            gold_trees.push(t);
            pred_kept.push(p);
        }
    }
    let report = score_corpus(&gold_trees, &pred_kept, &options).map_err(|e| anyhow!("{}", e))?;
    let text = match report_kind {
        ReportArg::Json => report::eval_json(&report, &ids),
        ReportArg::Tsv => report::eval_tsv(&report),
    };
    let mut out = input::open_output(ctx.output.as_deref())?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(0)
}

fn cmd_stats(ctx: &Ctx, inputs: &[String], language: Language, report_kind: ReportArg) -> Result<i32> {
    let Some(trees) = load(ctx, inputs)? else { return Ok(1) };
    let profile = if language == ctx.lang {
        ctx.profile()
    } else {
        LanguageProfile::for_language(language)
    };
    let stats = trees
        .par_iter()
        .fold(
            || NullStats::empty(&profile),
            |mut s, l| {
                s.add_tree(&l.item);
                s
            },
        )
        .reduce(
            || NullStats::empty(&profile),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    let text = match report_kind {
        ReportArg::Json => report::stats_json(&stats, language),
        ReportArg::Tsv => report::stats_tsv(&stats),
    };
    let mut out = input::open_output(ctx.output.as_deref())?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(0)
}
