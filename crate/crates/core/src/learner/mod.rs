//! Structure learning: grammatical patterns from annotated sentences, and
//! the lvp store that holds what was learned.

mod catalog;
mod graph;

pub use catalog::{
    apply_all, apply_pattern, path_to_pattern, step_for, step_named, GrammaticalPattern, UtilityStep, CATALOG,
};
pub use graph::{embed, shortest_path, DrsGraph, Edge};

use std::fmt;

use thiserror::Error;

use crate::drs::{parse_cnl, Drs, TermType};
use crate::paraphrase::Paraphraser;
use crate::term::{parse_clauses, quote, quote_atom, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LearnError {
    #[error("cannot parse sentence: {0}")]
    Parse(String),
    #[error("training sentence has a term with repeated variables: {0}")]
    RepeatedVariables(String),
    #[error("no path from node {from} to node {to}")]
    Unreachable { from: usize, to: usize },
    #[error("no node {0}")]
    NoSuchNode(usize),
    #[error("unsupported construction: no step from {from} argument {from_pos} to {to} argument {to_pos}")]
    Unsupported {
        from: &'static str,
        from_pos: usize,
        to: &'static str,
        to_pos: usize,
    },
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("extraction failed for pattern '{0}'")]
    ExtractionFailed(String),
    #[error("no object or predicate at word {0}")]
    NoTermAt(usize),
    #[error("annotation line {line}: {message}")]
    Annotation { line: usize, message: String },
    #[error("lvp store line {line}: {message}")]
    Store { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub sentence: String,
    pub frame: String,
    pub lexical_unit: usize,
    pub fillers: Vec<(String, usize)>,
}

impl Annotation {
    /// Reads `annotation('Sentence','Frame',Lu,[['Role',Idx],...]).` facts.
    pub fn parse_file(text: &str) -> Result<Vec<Annotation>, LearnError> {
        let clauses = parse_clauses(text).map_err(|e| LearnError::Annotation {
            line: e.line,
            message: e.message,
        })?;
        clauses
            .into_iter()
            .map(|(line, t)| {
                Annotation::from_term(&t).ok_or_else(|| LearnError::Annotation {
                    line,
                    message: format!("expected annotation/4, found {t}"),
                })
            })
            .collect()
    }

    fn from_term(t: &Term) -> Option<Annotation> {
        let a = t.as_compound("annotation", 4)?;
        let fillers = a[3]
            .as_list()?
            .iter()
            .map(|pair| match pair.as_list()? {
                [role, idx] => Some((role.as_atom()?.to_string(), usize::try_from(idx.as_int()?).ok()?)),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Annotation {
            sentence: a[0].as_atom()?.to_string(),
            frame: a[1].as_atom()?.to_string(),
            lexical_unit: usize::try_from(a[2].as_int()?).ok()?,
            fillers,
        })
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fillers: Vec<String> = self
            .fillers
            .iter()
            .map(|(r, i)| format!("[{},{i}]", quote(r)))
            .collect();
        write!(
            f,
            "annotation({},{},{},[{}])",
            quote(&self.sentence),
            quote(&self.frame),
            self.lexical_unit,
            fillers.join(",")
        )
    }
}

/// Part of speech of a lexical unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LuPos {
    V,
    N,
}

impl LuPos {
    pub fn as_str(self) -> &'static str {
        match self {
            LuPos::V => "v",
            LuPos::N => "n",
        }
    }

    pub fn of(kind: TermType) -> Option<LuPos> {
        match kind {
            TermType::Predicate => Some(LuPos::V),
            TermType::Object => Some(LuPos::N),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RolePattern {
    pub role: String,
    pub pattern: GrammaticalPattern,
    pub required: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lvp {
    pub lexeme: String,
    pub pos: LuPos,
    pub frame: String,
    pub patterns: Vec<RolePattern>,
}

impl Lvp {
    fn canonical(&self) -> (String, LuPos, String, Vec<RolePattern>) {
        let mut p = self.patterns.clone();
        p.sort();
        (self.lexeme.clone(), self.pos, self.frame.clone(), p)
    }

    /// Same lvp up to the order of its patterns.
    pub fn same_as(&self, other: &Lvp) -> bool {
        self.canonical() == other.canonical()
    }

    fn from_term(t: &Term) -> Option<Result<Lvp, LearnError>> {
        let a = t.as_compound("lvp", 4)?;
        let pos = match a[1].as_atom()? {
            "v" => LuPos::V,
            "n" => LuPos::N,
            _ => return None,
        };
        let mut patterns = Vec::new();
        for p in a[3].as_list()? {
            let pa = p.as_compound("pattern", 3)?;
            let required = match pa[2].as_atom()? {
                "required" => true,
                "optional" => false,
                _ => return None,
            };
            let pattern = match GrammaticalPattern::parse(pa[1].as_atom()?) {
                Ok(p) => p,
                Err(e) => return Some(Err(e)),
            };
            patterns.push(RolePattern {
                role: pa[0].as_atom()?.to_string(),
                pattern,
                required,
            });
        }
        if patterns.is_empty() {
            return None;
        }
        Some(Ok(Lvp {
            lexeme: a[0].as_atom()?.to_string(),
            pos,
            frame: a[2].as_atom()?.to_string(),
            patterns,
        }))
    }
}

impl fmt::Display for Lvp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pats: Vec<String> = self
            .patterns
            .iter()
            .map(|p| {
                format!(
                    "pattern({},{},{})",
                    quote(&p.role),
                    quote(&p.pattern.to_string()),
                    if p.required { "required" } else { "optional" }
                )
            })
            .collect();
        write!(
            f,
            "lvp({},{},{},[{}])",
            quote_atom(&self.lexeme),
            self.pos.as_str(),
            quote(&self.frame),
            pats.join(",")
        )
    }
}

/// Learned lvps in insertion order, without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LvpStore {
    lvps: Vec<Lvp>,
}

impl LvpStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads one `lvp(...).` fact per clause.
    pub fn parse(text: &str) -> Result<Self, LearnError> {
        let clauses = parse_clauses(text).map_err(|e| LearnError::Store {
            line: e.line,
            message: e.message,
        })?;
        let mut store = LvpStore::new();
        for (line, t) in clauses {
            let lvp = Lvp::from_term(&t)
                .ok_or_else(|| LearnError::Store {
                    line,
                    message: format!("expected lvp/4, found {t}"),
                })?
                .map_err(|e| LearnError::Store {
                    line,
                    message: e.to_string(),
                })?;
            store.insert(lvp);
        }
        Ok(store)
    }

    /// Adds `lvp` unless an equal one is stored. Returns whether it was new.
    pub fn insert(&mut self, lvp: Lvp) -> bool {
        if self.lvps.iter().any(|l| l.same_as(&lvp)) {
            return false;
        }
        self.lvps.push(lvp);
        true
    }

    pub fn lvps(&self) -> &[Lvp] {
        &self.lvps
    }

    pub fn len(&self) -> usize {
        self.lvps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lvps.is_empty()
    }

    pub fn matching<'a>(&'a self, lexeme: &'a str, pos: LuPos) -> impl Iterator<Item = &'a Lvp> + 'a {
        self.lvps.iter().filter(move |l| l.lexeme == lexeme && l.pos == pos)
    }

    /// Learns from an annotation and stores the result.
    pub fn learn(&mut self, annotation: &Annotation, paraphraser: &Paraphraser) -> Result<Lvp, LearnError> {
        let lvp = learn_lvp(annotation, paraphraser)?;
        self.insert(lvp.clone());
        Ok(lvp)
    }

    /// One lvp per line, each ending in a full stop.
    pub fn to_text(&self) -> String {
        self.lvps.iter().map(|l| format!("{l}.\n")).collect()
    }
}

/// Normalizes and parses an annotated sentence.
pub fn sentence_drs(sentence: &str, paraphraser: &Paraphraser) -> Result<Drs, LearnError> {
    let tokens = paraphraser
        .paraphrase(sentence)
        .map_err(|e| LearnError::Parse(e.to_string()))?;
    parse_cnl(&tokens).map_err(|e| LearnError::Parse(e.to_string()))
}

/// Derives the patterns leading from the lexical unit to each filler.
pub fn learn_from_drs(annotation: &Annotation, drs: &Drs) -> Result<Lvp, LearnError> {
    let graph = embed(drs)?;
    let lu = drs
        .head_term_at(annotation.lexical_unit)
        .ok_or(LearnError::NoTermAt(annotation.lexical_unit))?;
    let lu_term = &drs.terms[lu];
    let pos = LuPos::of(lu_term.term_type()).ok_or(LearnError::NoTermAt(annotation.lexical_unit))?;
    let mut patterns = Vec::with_capacity(annotation.fillers.len());
    for (role, word) in &annotation.fillers {
        let target = drs.head_term_at(*word).ok_or(LearnError::NoTermAt(*word))?;
        let path = shortest_path(&graph, lu, target)?;
        patterns.push(RolePattern {
            role: role.clone(),
            pattern: path_to_pattern(&path, &graph)?,
            required: true,
        });
    }
    if patterns.is_empty() {
        return Err(LearnError::BadPattern("annotation has no role fillers".into()));
    }
    Ok(Lvp {
        lexeme: lu_term.lexeme().to_string(),
        pos,
        frame: annotation.frame.clone(),
        patterns,
    })
}

pub fn learn_lvp(annotation: &Annotation, paraphraser: &Paraphraser) -> Result<Lvp, LearnError> {
    learn_from_drs(annotation, &sentence_drs(&annotation.sentence, paraphraser)?)
}
