//! Reading inputs: glob expansion, UTF-8 files or stdin, tree segmentation.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;

use nulltree_core::{parse_tree_segments, SyntaxTree};

/// One input file's contents. `name` is `-` for stdin.
#[derive(Debug, Clone)]
pub struct Source {
    pub name: String,
    pub text: String,
}

/// A problem with one item of input, reported as a warning in lenient mode
/// and as a fatal error otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct Loaded<T> {
    /// `file:ordinal`, 1-based.
    pub id: String,
    pub item: T,
}

fn has_glob_chars(s: &str) -> bool {
    s.contains(['*', '?', '['])
}

/// Expand patterns in order; each pattern's matches are sorted. An empty
/// list means stdin.
pub fn expand(patterns: &[String]) -> Result<Vec<PathBuf>> {
    if patterns.is_empty() {
        return Ok(vec![PathBuf::from("-")]);
    }
    let mut out = Vec::new();
    for p in patterns {
        if p == "-" || !has_glob_chars(p) {
            out.push(PathBuf::from(p));
            continue;
        }
        let mut matched: Vec<PathBuf> = glob::glob(p)
            .with_context(|| format!("bad glob pattern `{}`", p))?
            .collect::<std::result::Result<_, _>>()?;
        if matched.is_empty() {
            bail!("no files match `{}`", p);
        }
        matched.sort();
        out.append(&mut matched);
    }
    Ok(out)
}

pub fn read_sources(patterns: &[String]) -> Result<Vec<Source>> {
    expand(patterns)?.iter().map(|p| read_source(p)).collect()
}

fn read_source(path: &Path) -> Result<Source> {
    let name = path.to_string_lossy().into_owned();
    let text = if name == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", name))?
    };
    Ok(Source { name, text })
}

/// Parse every tree; malformed ones become problems, in input order.
pub fn load_trees(sources: &[Source]) -> (Vec<Loaded<SyntaxTree>>, Vec<Problem>) {
    let per_file: Vec<Vec<Result<Loaded<SyntaxTree>, Problem>>> = sources
        .par_iter()
        .map(|src| {
            parse_tree_segments(&src.text)
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    let id = format!("{}:{}", src.name, i + 1);
                    match r {
                        Ok(tree) => Ok(Loaded { id, item: tree }),
                        Err(e) => Err(Problem {
                            location: id,
                            message: e.to_string(),
                        }),
                    }
                })
                .collect()
        })
        .collect();
    split(per_file.into_iter().flatten())
}

/// Non-empty lines, with `file:line` ids.
pub fn load_lines(sources: &[Source]) -> Vec<Loaded<String>> {
    let mut out = Vec::new();
    for src in sources {
        for (i, line) in src.text.lines().enumerate() {
            if !line.trim().is_empty() {
                out.push(Loaded {
                    id: format!("{}:{}", src.name, i + 1),
                    item: line.to_string(),
                });
            }
        }
    }
    out
}

pub fn split<T>(items: impl IntoIterator<Item = Result<Loaded<T>, Problem>>) -> (Vec<Loaded<T>>, Vec<Problem>) {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for r in items {
        match r {
            Ok(l) => ok.push(l),
            Err(p) => bad.push(p),
        }
    }
    (ok, bad)
}

/// Whether text looks like linearized sequences (`)NP`) rather than trees.
pub fn looks_linearized(text: &str) -> bool {
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == ')' {
            if let Some(&n) = chars.peek() {
                if !n.is_whitespace() && n != '(' && n != ')' {
                    return true;
                }
            }
        }
    }
    false
}

/// Destination for the main output: a file, or stdout when `None`.
pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(io::BufWriter::new(io::stdout()))),
        Some(p) => {
            let f = fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
            Ok(Box::new(io::BufWriter::new(f)))
        }
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| anyhow!("cannot write {}: {}", path.display(), e))
}
