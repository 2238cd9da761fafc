//! Discourse representation structures: the term model, the textual
//! notation, and a parser from normalized tokens.

mod parser;

pub use parser::{parse_cnl, DrsError};

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::paraphrase::Token;
use crate::term::quote_atom;

/// A discourse referent. Ids are unique within one [`Drs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarRef(pub u32);

/// Sentence and word index of the token a term was built from, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub sentence: usize,
    pub word: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermKind {
    Object {
        var: VarRef,
        lexeme: String,
        class: String,
        unit: String,
        op: String,
        count: String,
    },
    Predicate {
        var: VarRef,
        lexeme: String,
        subject: VarRef,
        object: Option<VarRef>,
    },
    ModifierPp {
        pred: VarRef,
        preposition: String,
        dependent: VarRef,
    },
    Relation {
        left: VarRef,
        relator: String,
        right: VarRef,
    },
    Query {
        var: VarRef,
        wh_word: String,
    },
}

/// The kind of a term without its arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermType {
    Object,
    Predicate,
    ModifierPp,
    Relation,
    Query,
}

impl TermType {
    pub fn name(self) -> &'static str {
        match self {
            TermType::Object => "object",
            TermType::Predicate => "predicate",
            TermType::ModifierPp => "modifier_pp",
            TermType::Relation => "relation",
            TermType::Query => "query",
        }
    }

    fn rank(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DrsTerm {
    pub kind: TermKind,
    pub position: Position,
}

impl DrsTerm {
    pub fn object(var: VarRef, lexeme: &str, plural: bool, word: usize) -> DrsTerm {
        let (op, count) = if plural { ("geq", "2") } else { ("eq", "1") };
        DrsTerm {
            kind: TermKind::Object {
                var,
                lexeme: lexeme.to_string(),
                class: "countable".into(),
                unit: "na".into(),
                op: op.into(),
                count: count.into(),
            },
            position: Position { sentence: 1, word },
        }
    }

    pub fn term_type(&self) -> TermType {
        match self.kind {
            TermKind::Object { .. } => TermType::Object,
            TermKind::Predicate { .. } => TermType::Predicate,
            TermKind::ModifierPp { .. } => TermType::ModifierPp,
            TermKind::Relation { .. } => TermType::Relation,
            TermKind::Query { .. } => TermType::Query,
        }
    }

    /// Variable arguments with their 1-based argument positions.
    pub fn vars(&self) -> Vec<(usize, VarRef)> {
        match &self.kind {
            TermKind::Object { var, .. } | TermKind::Query { var, .. } => vec![(1, *var)],
            TermKind::Predicate {
                var,
                subject,
                object,
                ..
            } => {
                let mut v = vec![(1, *var), (3, *subject)];
                if let Some(o) = object {
                    v.push((4, *o));
                }
                v
            }
            TermKind::ModifierPp {
                pred, dependent, ..
            } => vec![(1, *pred), (3, *dependent)],
            TermKind::Relation { left, right, .. } => vec![(1, *left), (3, *right)],
        }
    }

    pub fn var_at(&self, position: usize) -> Option<VarRef> {
        self.vars()
            .into_iter()
            .find(|(p, _)| *p == position)
            .map(|(_, v)| v)
    }

    /// The referent the term introduces, for objects, predicates and queries.
    pub fn own_var(&self) -> Option<VarRef> {
        match &self.kind {
            TermKind::Object { var, .. }
            | TermKind::Predicate { var, .. }
            | TermKind::Query { var, .. } => Some(*var),
            _ => None,
        }
    }

    pub fn lexeme(&self) -> &str {
        match &self.kind {
            TermKind::Object { lexeme, .. } | TermKind::Predicate { lexeme, .. } => lexeme,
            TermKind::ModifierPp { preposition, .. } => preposition,
            TermKind::Relation { relator, .. } => relator,
            TermKind::Query { wh_word, .. } => wh_word,
        }
    }

    pub fn word(&self) -> usize {
        self.position.word
    }

    fn render(&self, names: &HashMap<VarRef, String>) -> String {
        let n = |v: &VarRef| names[v].clone();
        let body = match &self.kind {
            TermKind::Object {
                var,
                lexeme,
                class,
                unit,
                op,
                count,
            } => format!(
                "object({},{},{},{},{},{})",
                n(var),
                quote_atom(lexeme),
                class,
                unit,
                op,
                count
            ),
            TermKind::Predicate {
                var,
                lexeme,
                subject,
                object: Some(o),
            } => format!("predicate({},{},{},{})", n(var), quote_atom(lexeme), n(subject), n(o)),
            TermKind::Predicate {
                var,
                lexeme,
                subject,
                object: None,
            } => format!("predicate({},{},{})", n(var), quote_atom(lexeme), n(subject)),
            TermKind::ModifierPp {
                pred,
                preposition,
                dependent,
            } => format!("modifier_pp({},{},{})", n(pred), quote_atom(preposition), n(dependent)),
            TermKind::Relation {
                left,
                relator,
                right,
            } => format!("relation({},{},{})", n(left), quote_atom(relator), n(right)),
            TermKind::Query { var, wh_word } => format!("query({},{})", n(var), quote_atom(wh_word)),
        };
        format!("{body}-{}/{}", self.position.sentence, self.position.word)
    }
}

/// Variable name for the `i`-th distinct variable: A..Z, then A1..Z1, ...
pub fn var_name(i: usize) -> String {
    let letter = (b'A' + (i % 26) as u8) as char;
    match i / 26 {
        0 => letter.to_string(),
        k => format!("{letter}{k}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drs {
    pub terms: Vec<DrsTerm>,
    pub tokens: Vec<Token>,
}

impl Drs {
    pub fn new(mut terms: Vec<DrsTerm>, tokens: Vec<Token>) -> Drs {
        terms.sort_by_key(|t| (t.term_type().rank(), t.position));
        Drs { terms, tokens }
    }

    /// The textual notation, one term per line, variables lettered in order
    /// of first appearance.
    pub fn render(&self) -> String {
        let mut names = HashMap::new();
        for t in &self.terms {
            let mut vars = Vec::new();
            if let Some(v) = t.own_var() {
                vars.push(v);
            }
            vars.extend(t.vars().into_iter().map(|(_, v)| v));
            for v in vars {
                let next = names.len();
                names.entry(v).or_insert_with(|| var_name(next));
            }
        }
        let mut out = String::new();
        for t in &self.terms {
            let _ = writeln!(out, "{}", t.render(&names));
        }
        out
    }

    /// True if some term mentions one referent in two argument positions.
    pub fn has_repeated_variables(&self) -> bool {
        self.terms.iter().any(term_repeats)
    }

    pub fn first_repeated(&self) -> Option<&DrsTerm> {
        self.terms.iter().find(|t| term_repeats(t))
    }

    pub fn token(&self, word: usize) -> Option<&Token> {
        self.tokens.iter().find(|t| t.index == word)
    }

    /// Index of the object or predicate term anchored at `word`.
    pub fn head_term_at(&self, word: usize) -> Option<usize> {
        self.terms.iter().position(|t| {
            t.word() == word && matches!(t.term_type(), TermType::Object | TermType::Predicate)
        })
    }

    pub fn object_of(&self, var: VarRef) -> Option<&DrsTerm> {
        self.terms
            .iter()
            .find(|t| t.term_type() == TermType::Object && t.own_var() == Some(var))
    }

    /// The object term the question asks about.
    pub fn query_object(&self) -> Option<&DrsTerm> {
        self.terms.iter().find_map(|t| match t.kind {
            TermKind::Query { var, .. } => self.object_of(var),
            _ => None,
        })
    }
}

fn term_repeats(t: &DrsTerm) -> bool {
    let vars = t.vars();
    vars.iter()
        .enumerate()
        .any(|(i, (_, a))| vars[i + 1..].iter().any(|(_, b)| a == b))
}

#[cfg(test)]
mod tests;
