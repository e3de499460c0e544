//! Null-element typology and per-language profiles.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Empty-category types.
///
/// Ordering follows the usual column order of typology tables: the nine
/// scored types first, then the PTB-only types that are recognized on input
/// (`*ICH*`, `*EXP*`, `*NOT*`, `*PPA*`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NullKind {
    /// `*T*`, trace of A' movement.
    Trace,
    /// `*`, NP movement / controlled or arbitrary PRO in English.
    Star,
    /// `*U*`, empty unit.
    Unit,
    /// `0`, null complementizer or empty WH filler.
    NullComplementizer,
    /// `*PRO*`, control subject.
    BigPro,
    /// `*pro*`, dropped pronoun.
    SmallPro,
    /// `*OP*`, null operator.
    Operator,
    /// `*RNR*`, right node raising.
    RightNodeRaising,
    /// `*?*`, predicate deletion.
    PredicateDeletion,
    /// `*ICH*`, interpret constituent here.
    InterpretHere,
    /// `*EXP*`, expletive.
    Expletive,
    /// `*NOT*`, anti-placeholder in gapping.
    Not,
    /// `*PPA*`, permanent predictable ambiguity.
    Ppa,
}

impl NullKind {
    pub const ALL: [NullKind; 13] = [
        NullKind::Trace,
        NullKind::Star,
        NullKind::Unit,
        NullKind::NullComplementizer,
        NullKind::BigPro,
        NullKind::SmallPro,
        NullKind::Operator,
        NullKind::RightNodeRaising,
        NullKind::PredicateDeletion,
        NullKind::InterpretHere,
        NullKind::Expletive,
        NullKind::Not,
        NullKind::Ppa,
    ];

    /// Canonical serialized symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            NullKind::Trace => "*T*",
            NullKind::Star => "*",
            NullKind::Unit => "*U*",
            NullKind::NullComplementizer => "0",
            NullKind::BigPro => "*PRO*",
            NullKind::SmallPro => "*pro*",
            NullKind::Operator => "*OP*",
            NullKind::RightNodeRaising => "*RNR*",
            NullKind::PredicateDeletion => "*?*",
            NullKind::InterpretHere => "*ICH*",
            NullKind::Expletive => "*EXP*",
            NullKind::Not => "*NOT*",
            NullKind::Ppa => "*PPA*",
        }
    }

    /// Parse a bare symbol (no coindex). `*op*` is the Korean spelling of `*OP*`.
    pub fn from_symbol(s: &str) -> Option<NullKind> {
        let kind = match s {
            "*T*" => NullKind::Trace,
            "*" => NullKind::Star,
            "*U*" => NullKind::Unit,
            "0" => NullKind::NullComplementizer,
            "*PRO*" => NullKind::BigPro,
            "*pro*" => NullKind::SmallPro,
            "*OP*" | "*op*" => NullKind::Operator,
            "*RNR*" => NullKind::RightNodeRaising,
            "*?*" => NullKind::PredicateDeletion,
            "*ICH*" => NullKind::InterpretHere,
            "*EXP*" => NullKind::Expletive,
            "*NOT*" => NullKind::Not,
            "*PPA*" => NullKind::Ppa,
            _ => return None,
        };
        Some(kind)
    }
}

impl fmt::Display for NullKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for NullKind {
    type Err = UnknownNullSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NullKind::from_symbol(s).ok_or_else(|| UnknownNullSymbol(String::from(s)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownNullSymbol(pub String);

impl fmt::Display for UnknownNullSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown null element `{}`", self.0)
    }
}

/// The text of a `-NONE-` leaf: a kind plus an optional coindex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NullSymbol {
    pub kind: NullKind,
    pub coindex: Option<u32>,
}

impl NullSymbol {
    pub fn new(kind: NullKind) -> Self {
        NullSymbol { kind, coindex: None }
    }

    pub fn coindexed(kind: NullKind, index: u32) -> Self {
        NullSymbol {
            kind,
            coindex: Some(index),
        }
    }

    /// Parse leaf text such as `*T*-1`, `*-2`, `0`, `*pro*`.
    pub fn parse(text: &str) -> Option<NullSymbol> {
        if let Some(kind) = NullKind::from_symbol(text) {
            return Some(NullSymbol::new(kind));
        }
        let (base, digits) = text.rsplit_once('-')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let kind = NullKind::from_symbol(base)?;
        if kind == NullKind::NullComplementizer {
            return None;
        }
        Some(NullSymbol {
            kind,
            coindex: Some(digits.parse().ok()?),
        })
    }

    /// Leaf text with any coindex removed, keeping the original spelling.
    pub fn strip_coindex(text: &str) -> &str {
        match text.rsplit_once('-') {
            Some((base, digits))
                if !digits.is_empty()
                    && digits.bytes().all(|b| b.is_ascii_digit())
                    && NullKind::from_symbol(base).is_some() =>
            {
                base
            }
            _ => text,
        }
    }
}

impl fmt::Display for NullSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.symbol())?;
        match self.coindex {
            Some(i) if self.kind != NullKind::NullComplementizer => write!(f, "-{}", i),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Language {
    English,
    Chinese,
    Korean,
}

impl Language {
    pub fn code(self) -> &'static str {
        match self {
            Language::English => "en",
            Language::Chinese => "zh",
            Language::Korean => "ko",
        }
    }
}

impl FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "en" | "english" | "ptb" => Ok(Language::English),
            "zh" | "chinese" | "ctb" => Ok(Language::Chinese),
            "ko" | "korean" | "ktb" => Ok(Language::Korean),
            other => Err(alloc::format!("unknown language `{}` (expected en, zh or ko)", other)),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Which null kinds a treebank uses and which POS tags are punctuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    pub language: Language,
    pub allowed_kinds: BTreeSet<NullKind>,
    pub punctuation_pos: BTreeSet<String>,
}

impl LanguageProfile {
    pub fn for_language(language: Language) -> Self {
        use NullKind::*;
        let (kinds, punct): (&[NullKind], &[&str]) = match language {
            Language::English => (
                &[Trace, Star, Unit, NullComplementizer, RightNodeRaising],
                &[".", ",", ":", "``", "''", "-LRB-", "-RRB-", "HYPH", "NFP"],
            ),
            Language::Chinese => (&[Trace, BigPro, SmallPro, Operator, RightNodeRaising], &["PU"]),
            Language::Korean => (
                &[Trace, SmallPro, Operator, PredicateDeletion],
                &["SFN", "SLQ", "SRQ", "SCM", "SSY", "SSL", "SSR"],
            ),
        };
        LanguageProfile {
            language,
            allowed_kinds: kinds.iter().copied().collect(),
            punctuation_pos: punct.iter().map(|s| String::from(*s)).collect(),
        }
    }

    pub fn english() -> Self {
        Self::for_language(Language::English)
    }

    pub fn chinese() -> Self {
        Self::for_language(Language::Chinese)
    }

    pub fn korean() -> Self {
        Self::for_language(Language::Korean)
    }

    pub fn allows(&self, kind: NullKind) -> bool {
        self.allowed_kinds.contains(&kind)
    }

    pub fn is_punctuation(&self, pos: &str) -> bool {
        self.punctuation_pos.contains(pos)
    }

    pub fn allowed_in_order(&self) -> Vec<NullKind> {
        self.allowed_kinds.iter().copied().collect()
    }
}
