//! Query ASTs built from candidate parses, their textual rendering, and
//! template standardization.

mod build;

pub use build::{
    alternatives, assemble, build_ulrq, film_words, maximal_alternative_sets, prune, remove_subsumed, subsumes, wire,
    UlrqError,
};

use std::collections::HashMap;
use std::fmt;

use crate::drs::var_name;
use crate::term::quote;

/// Relation name of the built-in distinctness frame.
pub const DISTINCT: &str = "Distinct";
/// Relation name of the movie frame.
pub const MOVIE: &str = "Movie";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Text(String),
    Int(i64),
}

impl Value {
    /// Parses an integer when the whole text is one, else keeps the text.
    pub fn from_entity(text: &str) -> Value {
        match text.parse::<i64>() {
            Ok(n) if n.to_string() == text => Value::Int(n),
            _ => Value::Text(text.to_string()),
        }
    }

    /// The value as it appears in the fact base.
    pub fn as_text(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(n) => n.to_string(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Text(s) => f.write_str(&quote(s)),
            Value::Int(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicTerm {
    Var(String),
    Const(Value),
    /// A masked constant in a template.
    Placeholder,
}

impl LogicTerm {
    pub fn var(name: impl Into<String>) -> Self {
        LogicTerm::Var(name.into())
    }

    pub fn text(value: impl Into<String>) -> Self {
        LogicTerm::Const(Value::Text(value.into()))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, LogicTerm::Var(_))
    }
}

impl fmt::Display for LogicTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicTerm::Var(v) => f.write_str(v),
            LogicTerm::Const(c) => write!(f, "{c}"),
            LogicTerm::Placeholder => f.write_str("xxxx"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QueryAtom {
    pub relation: String,
    pub bindings: Vec<(String, LogicTerm)>,
}

impl QueryAtom {
    pub fn new(relation: &str, bindings: Vec<(&str, LogicTerm)>) -> Self {
        QueryAtom {
            relation: relation.to_string(),
            bindings: bindings.into_iter().map(|(r, t)| (r.to_string(), t)).collect(),
        }
    }

    pub fn distinct(a: LogicTerm, b: LogicTerm) -> Self {
        Self::new(DISTINCT, vec![("Item1", a), ("Item2", b)])
    }

    pub fn get(&self, role: &str) -> Option<&LogicTerm> {
        self.bindings.iter().find(|(r, _)| r == role).map(|(_, t)| t)
    }

    pub fn is_distinct(&self) -> bool {
        self.relation == DISTINCT
    }

    /// The two terms a distinctness atom asserts unequal.
    pub fn negated_equality(&self) -> Option<(&LogicTerm, &LogicTerm)> {
        if !self.is_distinct() {
            return None;
        }
        Some((self.get("Item1")?, self.get("Item2")?))
    }

    pub fn terms(&self) -> impl Iterator<Item = &LogicTerm> {
        self.bindings.iter().map(|(_, t)| t)
    }

    fn map_terms(&self, f: &mut impl FnMut(&LogicTerm) -> LogicTerm) -> QueryAtom {
        QueryAtom {
            relation: self.relation.clone(),
            bindings: self.bindings.iter().map(|(r, t)| (r.clone(), f(t))).collect(),
        }
    }
}

impl fmt::Display for QueryAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((a, b)) = self.negated_equality() {
            return write!(f, "{a} \\= {b}");
        }
        let args: Vec<String> = self.bindings.iter().map(|(r, t)| format!("{}={t}", quote(r))).collect();
        write!(f, "{}({})", self.relation.to_lowercase(), args.join(","))
    }
}

/// A disjunction of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternativeGroup {
    pub atoms: Vec<QueryAtom>,
}

/// A conjunction of alternative groups with an answer variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ulrq {
    pub groups: Vec<AlternativeGroup>,
    pub answer: LogicTerm,
}

impl Ulrq {
    pub fn atoms(&self) -> impl Iterator<Item = &QueryAtom> {
        self.groups.iter().flat_map(|g| g.atoms.iter())
    }

    pub fn map_terms(&self, mut f: impl FnMut(&LogicTerm) -> LogicTerm) -> Ulrq {
        let answer = f(&self.answer);
        let groups = self
            .groups
            .iter()
            .map(|g| AlternativeGroup {
                atoms: g.atoms.iter().map(|a| a.map_terms(&mut f)).collect(),
            })
            .collect();
        Ulrq { groups, answer }
    }

    /// Renames variables to A, B, C, ... in order of first appearance,
    /// starting with the answer.
    pub fn canonical(&self) -> Ulrq {
        let mut names: HashMap<String, String> = HashMap::new();
        self.map_terms(|t| match t {
            LogicTerm::Var(v) => {
                let next = names.len();
                LogicTerm::Var(names.entry(v.clone()).or_insert_with(|| var_name(next)).clone())
            }
            other => other.clone(),
        })
    }

    /// The query text in clause notation.
    pub fn render(&self) -> String {
        let head = format!("q({}):-", self.answer);
        let indent = " ".repeat(head.chars().count());
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| {
                let alts: Vec<String> = g.atoms.iter().map(|a| a.to_string()).collect();
                if alts.len() == 1 {
                    alts[0].clone()
                } else if self.groups.len() == 1 {
                    alts.join(&format!(";\n{indent}"))
                } else {
                    format!("({})", alts.join(&format!(";\n{indent} ")))
                }
            })
            .collect();
        format!("{head}{}.", parts.join(&format!(",\n{indent}")))
    }
}

impl fmt::Display for Ulrq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A query with standardized variables and masked constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Template {
    pub canonical_text: String,
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text)
    }
}

/// Standardizes variables and replaces every constant by `xxxx`.
pub fn standardize(query: &Ulrq) -> Ulrq {
    query.canonical().map_terms(|t| match t {
        LogicTerm::Const(_) => LogicTerm::Placeholder,
        other => other.clone(),
    })
}

pub fn standardize_template(query: &Ulrq) -> Template {
    Template {
        canonical_text: standardize(query).render(),
    }
}
