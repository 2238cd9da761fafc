//! Backtracking join over the film-entity view.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::{FactBase, Rule, PERSON_ROLES};
use crate::ulrq::{LogicTerm, QueryAtom, Ulrq, DISTINCT, MOVIE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown relation {0}")]
    UnknownRelation(String),
    #[error("cannot evaluate {0}: a variable is never bound")]
    Unsafe(String),
}

/// Bindings of the answer variable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AnswerSet {
    pub values: BTreeSet<String>,
}

impl AnswerSet {
    pub fn from_values<I, S>(values: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        AnswerSet {
            values: values.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sorted values joined with `|`.
    pub fn joined(&self) -> String {
        self.values.iter().cloned().collect::<Vec<_>>().join("|")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Let any person role of a film match any other person role.
    pub relax_person_roles: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Val {
    Text(String),
    Id(usize),
}

impl Val {
    fn same(&self, other: &Val) -> bool {
        match (self, other) {
            (Val::Text(a), Val::Text(b)) => a == b,
            (Val::Id(a), Val::Id(b)) => a == b,
            (Val::Text(t), Val::Id(i)) | (Val::Id(i), Val::Text(t)) => *t == i.to_string(),
        }
    }
}

type Subst = HashMap<String, Val>;

fn resolve(t: &LogicTerm, s: &Subst) -> Option<Val> {
    match t {
        LogicTerm::Var(v) => s.get(v).cloned(),
        LogicTerm::Const(c) => Some(Val::Text(c.as_text())),
        LogicTerm::Placeholder => Some(Val::Text("xxxx".into())),
    }
}

/// Extends `s` so that `t` equals `v`, or fails.
fn bind(t: &LogicTerm, v: Val, s: &mut Subst) -> bool {
    match resolve(t, s) {
        Some(have) => have.same(&v),
        None => {
            if let LogicTerm::Var(name) = t {
                s.insert(name.clone(), v);
            }
            true
        }
    }
}

pub fn evaluate(query: &Ulrq, kb: &FactBase, rules: &[Rule]) -> Result<AnswerSet, EvalError> {
    evaluate_with(query, kb, rules, EvalOptions::default())
}

/// Every binding of the answer variable satisfying one alternative of each
/// group. Derived relations are replaced by the bodies of their rules.
pub fn evaluate_with(query: &Ulrq, kb: &FactBase, rules: &[Rule], opts: EvalOptions) -> Result<AnswerSet, EvalError> {
    let mut fresh = 0usize;
    let mut conjunctions: Vec<Vec<QueryAtom>> = vec![Vec::new()];
    for g in &query.groups {
        let mut alts = Vec::new();
        for a in &g.atoms {
            alts.extend(unfold(a, rules, &mut fresh)?);
        }
        conjunctions = conjunctions
            .iter()
            .flat_map(|prefix| {
                alts.iter().map(move |alt| {
                    let mut c = prefix.clone();
                    c.extend(alt.iter().cloned());
                    c
                })
            })
            .collect();
    }
    let mut out = AnswerSet::default();
    let ctx = Ctx {
        kb,
        opts,
        answer: &query.answer,
    };
    for conj in &conjunctions {
        let atoms: Vec<&QueryAtom> = conj.iter().collect();
        ctx.solve(atoms, Subst::new(), &mut out)?;
    }
    Ok(out)
}

/// The conjunctions an atom stands for: itself for base relations, one
/// renamed rule body per matching rule for derived ones.
fn unfold(atom: &QueryAtom, rules: &[Rule], fresh: &mut usize) -> Result<Vec<Vec<QueryAtom>>, EvalError> {
    if atom.relation == MOVIE || atom.relation == DISTINCT {
        return Ok(vec![vec![atom.clone()]]);
    }
    let roles: BTreeSet<&str> = atom.bindings.iter().map(|(r, _)| r.as_str()).collect();
    let matching: Vec<&Rule> = rules
        .iter()
        .filter(|r| r.head.relation == atom.relation && r.head_roles() == roles)
        .collect();
    if matching.is_empty() {
        let roles: Vec<&str> = roles.into_iter().collect();
        return Err(EvalError::UnknownRelation(format!("{}({})", atom.relation, roles.join(","))));
    }
    let mut out = Vec::new();
    for rule in matching {
        *fresh += 1;
        let k = *fresh;
        let mut map: HashMap<String, LogicTerm> = HashMap::new();
        for (role, t) in &rule.head.bindings {
            if let (LogicTerm::Var(v), Some(q)) = (t, atom.get(role)) {
                map.insert(v.clone(), q.clone());
            }
        }
        let rename = |t: &LogicTerm| match t {
            LogicTerm::Var(v) => map.get(v).cloned().unwrap_or_else(|| LogicTerm::Var(format!("{v}#{k}"))),
            other => other.clone(),
        };
        let mut body = Vec::new();
        for b in &rule.body {
            let b = QueryAtom {
                relation: b.relation.clone(),
                bindings: b.bindings.iter().map(|(r, t)| (r.clone(), rename(t))).collect(),
            };
            body.push(b);
        }
        out.push(body);
    }
    Ok(out)
}

struct Ctx<'a> {
    kb: &'a FactBase,
    opts: EvalOptions,
    answer: &'a LogicTerm,
}

impl Ctx<'_> {
    fn solve(&self, mut atoms: Vec<&QueryAtom>, s: Subst, out: &mut AnswerSet) -> Result<(), EvalError> {
        // Check every distinctness atom whose sides are known.
        let mut i = 0;
        while i < atoms.len() {
            if let Some((a, b)) = atoms[i].negated_equality() {
                if let (Some(x), Some(y)) = (resolve(a, &s), resolve(b, &s)) {
                    if x.same(&y) {
                        return Ok(());
                    }
                    atoms.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        if atoms.is_empty() {
            match resolve(self.answer, &s) {
                Some(Val::Text(t)) => {
                    out.values.insert(t);
                }
                Some(Val::Id(id)) => {
                    if let Some(f) = self.kb.film(id) {
                        out.values.insert(f.name.clone());
                    }
                }
                None => return Err(EvalError::Unsafe(format!("answer {}", self.answer))),
            }
            return Ok(());
        }
        let Some(next) = self.pick(&atoms, &s) else {
            return Err(EvalError::Unsafe(atoms[0].to_string()));
        };
        let atom = atoms.remove(next);
        if atom.relation != MOVIE {
            return Err(EvalError::UnknownRelation(atom.relation.clone()));
        }
        for s2 in self.match_movie(atom, &s) {
            self.solve(atoms.clone(), s2, out)?;
        }
        Ok(())
    }

    /// The non-distinct atom with the most bound arguments.
    fn pick(&self, atoms: &[&QueryAtom], s: &Subst) -> Option<usize> {
        atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_distinct())
            .max_by_key(|(i, a)| {
                let bound = a.terms().filter(|t| resolve(t, s).is_some()).count();
                let key = ["FilmNm", "Id"]
                    .iter()
                    .filter(|r| a.get(r).is_some_and(|t| resolve(t, s).is_some()))
                    .count();
                (key, bound, std::cmp::Reverse(*i))
            })
            .map(|(i, _)| i)
    }

    fn role_values<'b>(&self, film: &'b super::Film, role: &str) -> Vec<&'b String> {
        if self.opts.relax_person_roles && PERSON_ROLES.contains(&role) {
            let mut v: Vec<&String> = PERSON_ROLES.iter().flat_map(|r| film.values(r)).collect();
            v.sort();
            v.dedup();
            v
        } else {
            film.values(role).iter().collect()
        }
    }

    fn candidates(&self, atom: &QueryAtom, s: &Subst) -> Vec<usize> {
        if let Some(v) = atom.get("Id").and_then(|t| resolve(t, s)) {
            return match v {
                Val::Id(id) => vec![id],
                Val::Text(t) => t.parse().ok().into_iter().collect(),
            };
        }
        if let Some(Val::Text(name)) = atom.get("FilmNm").and_then(|t| resolve(t, s)) {
            return self.kb.ids_named(&name).to_vec();
        }
        for (role, t) in &atom.bindings {
            if let Some(Val::Text(v)) = resolve(t, s) {
                if self.opts.relax_person_roles && PERSON_ROLES.contains(&role.as_str()) {
                    let mut ids: Vec<usize> = PERSON_ROLES.iter().flat_map(|r| self.kb.ids_with(r, &v)).copied().collect();
                    ids.sort_unstable();
                    ids.dedup();
                    return ids;
                }
                return self.kb.ids_with(role, &v).to_vec();
            }
        }
        (0..self.kb.films().len()).collect()
    }

    fn match_movie(&self, atom: &QueryAtom, s: &Subst) -> Vec<Subst> {
        let mut out = Vec::new();
        for id in self.candidates(atom, s) {
            let Some(film) = self.kb.film(id) else { continue };
            let mut base = s.clone();
            let mut ok = true;
            let mut open: Vec<(&LogicTerm, Vec<&String>)> = Vec::new();
            for (role, t) in &atom.bindings {
                match role.as_str() {
                    "FilmNm" => ok &= bind(t, Val::Text(film.name.clone()), &mut base),
                    "Id" => ok &= bind(t, Val::Id(film.id), &mut base),
                    r => open.push((t, self.role_values(film, r))),
                }
                if !ok {
                    break;
                }
            }
            if !ok {
                continue;
            }
            let mut partial = vec![base];
            for (t, values) in open {
                let mut next = Vec::new();
                for p in &partial {
                    for v in &values {
                        let mut q = p.clone();
                        if bind(t, Val::Text((*v).clone()), &mut q) {
                            next.push(q);
                        }
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            out.extend(partial);
        }
        out
    }
}
