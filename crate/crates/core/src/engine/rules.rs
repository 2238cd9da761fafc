//! Derived-relation rules written as if-then sentences.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::drs::TermType;
use crate::pipeline::Pipeline;
use crate::term::quote;
use crate::ulrq::{assemble, film_words, remove_subsumed, wire, LogicTerm, QueryAtom};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule must have the form 'If ... then ...'")]
    NotConditional,
    #[error("cannot parse rule: {0}")]
    Parse(String),
    #[error("consequent must yield exactly one relation, found {0}")]
    HeadCount(usize),
    #[error("'the {0}' in the consequent refers to nothing in the antecedent")]
    CoReference(String),
    #[error("antecedent is ambiguous: {0}")]
    Ambiguous(String),
    #[error("head variable {0} does not occur in the body")]
    UnboundHead(String),
    #[error("rules line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<RuleError>,
    },
}

/// `head :- body`, with Movie and Distinct atoms in the body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub head: QueryAtom,
    pub body: Vec<QueryAtom>,
}

impl Rule {
    pub fn head_roles(&self) -> BTreeSet<&str> {
        self.head.bindings.iter().map(|(r, _)| r.as_str()).collect()
    }
}

fn functor(a: &QueryAtom) -> String {
    let args: Vec<String> = a.bindings.iter().map(|(r, t)| format!("{}={t}", quote(r))).collect();
    format!("{}({})", a.relation.to_lowercase(), args.join(","))
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.body.iter().map(|a| format!("    {}", functor(a))).collect();
        write!(f, "{}:-\n{}.", functor(&self.head), body.join(",\n"))
    }
}

/// Translates "If A and B ... then C" into a rule. Noun phrases in C must
/// refer back to A, B, ... through "the".
pub fn define_rule_from_cnl(sentence: &str, pipeline: &Pipeline) -> Result<Rule, RuleError> {
    let mut words = sentence.split_whitespace();
    let starts_if = words.next().is_some_and(|w| w.eq_ignore_ascii_case("if"));
    if !starts_if || !words.any(|w| w.eq_ignore_ascii_case("then")) {
        return Err(RuleError::NotConditional);
    }
    let analysis = pipeline
        .analyze(sentence)
        .map_err(|e| RuleError::Parse(e.to_string()))?;
    let then = analysis
        .tokens
        .iter()
        .find(|t| t.lemma.eq_ignore_ascii_case("then"))
        .map(|t| t.index)
        .ok_or(RuleError::NotConditional)?;
    let drs = &analysis.drs;
    for t in &drs.terms {
        if t.term_type() == TermType::Object && t.word() > then {
            let det = drs.token(t.word() - 1).map(|d| d.lemma.to_lowercase());
            if det.as_deref() == Some("the") {
                return Err(RuleError::CoReference(t.lexeme().to_string()));
            }
        }
    }
    let valid = pipeline.valid_parses(&analysis);
    let (heads, antecedent): (Vec<_>, Vec<_>) = valid.into_iter().partition(|p| p.lu > then);
    let heads = remove_subsumed(&heads);
    let [head] = &heads[..] else {
        return Err(RuleError::HeadCount(heads.len()));
    };
    let films = film_words(&remove_subsumed(&antecedent));
    let q = assemble(&antecedent, drs, &pipeline.ontology, None).map_err(|e| RuleError::Parse(e.to_string()))?;
    if let Some(g) = q.groups.iter().find(|g| g.atoms.len() > 1) {
        let alts: Vec<String> = g.atoms.iter().map(functor).collect();
        return Err(RuleError::Ambiguous(alts.join(" ; ")));
    }
    let body: Vec<QueryAtom> = q.groups.into_iter().flat_map(|g| g.atoms).collect();
    let head = wire(head, drs, &pipeline.ontology, &films);

    let mut names: HashMap<LogicTerm, LogicTerm> = HashMap::new();
    let mut rename = |t: &LogicTerm| match t {
        LogicTerm::Var(_) => {
            let next = names.len() + 1;
            names.entry(t.clone()).or_insert_with(|| LogicTerm::Var(format!("V{next}"))).clone()
        }
        other => other.clone(),
    };
    let rn = |a: &QueryAtom, rename: &mut dyn FnMut(&LogicTerm) -> LogicTerm| QueryAtom {
        relation: a.relation.clone(),
        bindings: a.bindings.iter().map(|(r, t)| (r.clone(), rename(t))).collect(),
    };
    let head = rn(&head, &mut rename);
    let body: Vec<QueryAtom> = body.iter().map(|a| rn(a, &mut rename)).collect();
    for t in head.terms().filter(|t| t.is_var()) {
        if !body.iter().any(|a| a.terms().any(|x| x == t)) {
            return Err(RuleError::UnboundHead(t.to_string()));
        }
    }
    Ok(Rule { head, body })
}

/// One rule sentence per line; blank lines and `#` comments are skipped.
pub fn parse_rules(text: &str, pipeline: &Pipeline) -> Result<Vec<Rule>, RuleError> {
    let mut rules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rule = define_rule_from_cnl(line, pipeline).map_err(|e| RuleError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        rules.push(rule);
    }
    Ok(rules)
}
