//! Utility steps and the grammatical patterns built from them.

use std::fmt;

use crate::drs::{Drs, TermType};

use super::graph::{DrsGraph, Edge};
use super::LearnError;

/// One navigation hop: from a term of `source` kind, take the variable at
/// `source_pos` and find a `target` term holding it at `target_pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UtilityStep {
    pub name: &'static str,
    pub source: TermType,
    pub source_pos: usize,
    pub target: TermType,
    pub target_pos: usize,
}

const fn step(
    name: &'static str,
    source: TermType,
    source_pos: usize,
    target: TermType,
    target_pos: usize,
) -> UtilityStep {
    UtilityStep {
        name,
        source,
        source_pos,
        target,
        target_pos,
    }
}

use TermType::{ModifierPp as Mpp, Object as Obj, Predicate as Pred, Query as Qry, Relation as Rel};

pub static CATALOG: &[UtilityStep] = &[
    step("verb->subject", Pred, 3, Obj, 1),
    step("verb->object", Pred, 4, Obj, 1),
    step("verb->pp", Pred, 1, Mpp, 1),
    step("pp->dep", Mpp, 3, Obj, 1),
    step("object->verb", Obj, 1, Pred, 4),
    step("subject->verb", Obj, 1, Pred, 3),
    step("pp->verb", Mpp, 1, Pred, 1),
    step("dep->pp", Obj, 1, Mpp, 3),
    step("lobject->rel", Obj, 1, Rel, 1),
    step("rel->robject", Rel, 3, Obj, 1),
    step("robject->rel", Obj, 1, Rel, 3),
    step("rel->lobject", Rel, 1, Obj, 1),
    step("object->query", Obj, 1, Qry, 1),
    step("query->object", Qry, 1, Obj, 1),
];

pub fn step_named(name: &str) -> Option<&'static UtilityStep> {
    CATALOG.iter().find(|s| s.name == name)
}

pub fn step_for(
    source: TermType,
    source_pos: usize,
    target: TermType,
    target_pos: usize,
) -> Option<&'static UtilityStep> {
    CATALOG.iter().find(|s| {
        s.source == source && s.source_pos == source_pos && s.target == target && s.target_pos == target_pos
    })
}

/// A non-empty chain of composing utility steps, written `a,b,c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrammaticalPattern {
    steps: Vec<&'static str>,
}

impl GrammaticalPattern {
    /// Builds a pattern, checking that every step exists and that adjacent
    /// steps compose.
    pub fn from_steps(names: &[&str]) -> Result<Self, LearnError> {
        if names.is_empty() {
            return Err(LearnError::BadPattern("empty pattern".into()));
        }
        let mut steps: Vec<&'static UtilityStep> = Vec::with_capacity(names.len());
        for n in names {
            let s = step_named(n.trim())
                .ok_or_else(|| LearnError::BadPattern(format!("unknown step '{n}'")))?;
            if let Some(prev) = steps.last() {
                if prev.target != s.source {
                    return Err(LearnError::BadPattern(format!(
                        "'{}' does not compose with '{}'",
                        prev.name, s.name
                    )));
                }
            }
            steps.push(s);
        }
        Ok(GrammaticalPattern {
            steps: steps.iter().map(|s| s.name).collect(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, LearnError> {
        let names: Vec<&str> = text.split(',').collect();
        Self::from_steps(&names)
    }

    pub fn steps(&self) -> impl Iterator<Item = &'static UtilityStep> + '_ {
        self.steps.iter().map(|n| step_named(n).expect("validated on construction"))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Kind of term the pattern starts from.
    pub fn source(&self) -> TermType {
        self.steps().next().expect("non-empty").source
    }
}

impl fmt::Display for GrammaticalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.steps.join(","))
    }
}

/// Names the catalog step for each hop of `path`.
pub fn path_to_pattern(path: &[Edge], graph: &DrsGraph) -> Result<GrammaticalPattern, LearnError> {
    if path.is_empty() {
        return Err(LearnError::BadPattern("empty path".into()));
    }
    let mut names = Vec::with_capacity(path.len());
    for e in path {
        let (from, to) = (graph.kind(e.from), graph.kind(e.to));
        let s = step_for(from, e.label, to, e.target_pos).ok_or(LearnError::Unsupported {
            from: from.name(),
            from_pos: e.label,
            to: to.name(),
            to_pos: e.target_pos,
        })?;
        names.push(s.name);
    }
    GrammaticalPattern::from_steps(&names)
}

/// Every term reachable from term `lu` by following `pattern`, in DRS order
/// per step.
pub fn apply_all(pattern: &GrammaticalPattern, drs: &Drs, lu: usize) -> Vec<usize> {
    let mut frontier = vec![lu];
    for s in pattern.steps() {
        let mut next = Vec::new();
        for &at in &frontier {
            let term = &drs.terms[at];
            if term.term_type() != s.source {
                continue;
            }
            let Some(v) = term.var_at(s.source_pos) else {
                continue;
            };
            for (i, t) in drs.terms.iter().enumerate() {
                if i != at && t.term_type() == s.target && t.var_at(s.target_pos) == Some(v) && !next.contains(&i) {
                    next.push(i);
                }
            }
        }
        frontier = next;
    }
    frontier
}

/// The first term reached from term `lu` by `pattern`.
pub fn apply_pattern(pattern: &GrammaticalPattern, drs: &Drs, lu: usize) -> Result<usize, LearnError> {
    apply_all(pattern, drs, lu)
        .first()
        .copied()
        .ok_or_else(|| LearnError::ExtractionFailed(pattern.to_string()))
}
