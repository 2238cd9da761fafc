//! From candidate parses to a query: pruning, subsumption, grouping and
//! variable wiring.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use super::{AlternativeGroup, LogicTerm, QueryAtom, Ulrq, Value, DISTINCT, MOVIE};
use crate::drs::Drs;
use crate::frameparser::CandidateParse;
use crate::frames::{disambiguate, EntityRegistry, Ontology, RoleClassMap};
use crate::paraphrase::Pos;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UlrqError {
    #[error("not a question: the sentence has no wh-word")]
    NotAQuestion,
    #[error("no interpretation: every candidate parse was pruned")]
    NoInterpretation,
    #[error("ambiguous grouping: maximal alternative sets overlap on {0}")]
    GroupingAmbiguity(String),
    #[error("alternatives in one group disagree on shared variables: {0}")]
    GroupMismatch(String),
    #[error("answer word {0} fills no role")]
    UnboundAnswer(usize),
}

/// `g` subsumes `f` when both name the same frame and every (role, word)
/// pair of `f` is one of `g`.
pub fn subsumes(g: &CandidateParse, f: &CandidateParse) -> bool {
    g.frame == f.frame && f.role_words().is_subset(&g.role_words())
}

/// Same lexical unit, nested (word, pattern) sets, and no subsumption
/// either way.
pub fn alternatives(f: &CandidateParse, g: &CandidateParse) -> bool {
    if f.lu != g.lu {
        return false;
    }
    let (a, b) = (f.word_patterns(), g.word_patterns());
    (a.is_subset(&b) || b.is_subset(&a)) && !subsumes(f, g) && !subsumes(g, f)
}

/// Drops every parse subsumed by another one. Of parses subsuming each
/// other, the first in canonical order survives.
pub fn remove_subsumed(parses: &[CandidateParse]) -> Vec<CandidateParse> {
    let mut sorted: Vec<CandidateParse> = parses.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted
        .iter()
        .enumerate()
        .filter(|(i, f)| {
            !sorted
                .iter()
                .enumerate()
                .any(|(j, g)| j != *i && subsumes(g, f) && (!subsumes(f, g) || j < *i))
        })
        .map(|(_, f)| f.clone())
        .collect()
}

/// Maximal cliques of the alternatives relation, required to partition the
/// input. Each set holds indices into `parses`.
pub fn maximal_alternative_sets(parses: &[CandidateParse]) -> Result<Vec<Vec<usize>>, UlrqError> {
    let n = parses.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && alternatives(&parses[i], &parses[j])).collect())
        .collect();
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, Vec::new(), (0..n).collect(), Vec::new(), &mut cliques);
    cliques.sort();
    let mut seen = vec![false; n];
    for c in &cliques {
        for &i in c {
            if seen[i] {
                return Err(UlrqError::GroupingAmbiguity(parses[i].to_string()));
            }
            seen[i] = true;
        }
    }
    Ok(cliques)
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        let mut r = r;
        r.sort_unstable();
        out.push(r);
        return;
    }
    let (mut p, mut x) = (p, x);
    while let Some(&v) = p.first() {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.remove(0);
        x.push(v);
    }
}

/// Term for the filler at `word`: a constant for proper nouns, otherwise a
/// variable named after the word.
fn word_term(drs: &Drs, word: usize) -> LogicTerm {
    match drs.token(word) {
        Some(t) if t.pos == Pos::Proper => LogicTerm::Const(Value::from_entity(&t.lemma)),
        _ => LogicTerm::Var(format!("W{word}")),
    }
}

fn id_var(key: usize) -> LogicTerm {
    LogicTerm::Var(format!("I{key}"))
}

/// Words filling FilmNm in some movie parse.
pub fn film_words(parses: &[CandidateParse]) -> HashSet<usize> {
    parses
        .iter()
        .filter(|p| p.frame == MOVIE)
        .filter_map(|p| p.filler("FilmNm").map(|f| f.word))
        .collect()
}

/// Wires one parse into an atom. `films` holds the words that fill FilmNm
/// somewhere in the query.
pub fn wire(parse: &CandidateParse, drs: &Drs, ontology: &Ontology, films: &HashSet<usize>) -> QueryAtom {
    let order = |role: &str| {
        ontology
            .frame(&parse.frame)
            .and_then(|f| f.role_index(role))
            .unwrap_or(usize::MAX)
    };
    let mut fillers: Vec<_> = parse.fillers.iter().collect();
    fillers.sort_by_key(|f| (order(&f.role), f.word));
    let mut bindings: Vec<(String, LogicTerm)> = Vec::new();
    if parse.frame == DISTINCT {
        for f in fillers {
            let t = if films.contains(&f.word) {
                id_var(f.word)
            } else {
                word_term(drs, f.word)
            };
            bindings.push((f.role.clone(), t));
        }
    } else if parse.frame == MOVIE {
        let (film, key) = match parse.filler("FilmNm") {
            Some(f) => (word_term(drs, f.word), f.word),
            None => (LogicTerm::Var(format!("F{}", parse.lu)), parse.lu + 10_000),
        };
        bindings.push(("FilmNm".into(), film));
        bindings.push(("Id".into(), id_var(key)));
        for f in fillers.into_iter().filter(|f| f.role != "FilmNm" && f.role != "Id") {
            bindings.push((f.role.clone(), word_term(drs, f.word)));
        }
    } else {
        for f in fillers {
            bindings.push((f.role.clone(), word_term(drs, f.word)));
        }
    }
    QueryAtom {
        relation: parse.frame.clone(),
        bindings,
    }
}

/// Keeps the parses whose fillers fit their roles.
pub fn prune(
    parses: &[CandidateParse],
    drs: &Drs,
    ontology: &Ontology,
    registry: &EntityRegistry,
    role_map: &RoleClassMap,
) -> Vec<CandidateParse> {
    parses
        .iter()
        .filter(|p| disambiguate(p, drs, ontology, registry, role_map))
        .cloned()
        .collect()
}

/// Groups and wires already pruned parses. `answer` is the word whose term
/// becomes the answer variable, if any.
pub fn assemble(
    parses: &[CandidateParse],
    drs: &Drs,
    ontology: &Ontology,
    answer: Option<usize>,
) -> Result<Ulrq, UlrqError> {
    if parses.is_empty() {
        return Err(UlrqError::NoInterpretation);
    }
    let kept = remove_subsumed(parses);
    let sets = maximal_alternative_sets(&kept)?;
    let films = film_words(&kept);

    let mut groups: Vec<(bool, Vec<usize>, AlternativeGroup)> = sets
        .iter()
        .map(|set| {
            let mut members: Vec<&CandidateParse> = set.iter().map(|&i| &kept[i]).collect();
            members.sort_by_key(|p| group_key(p));
            let key = group_key(members[0]);
            let mut atoms: Vec<(Vec<usize>, QueryAtom)> = members
                .iter()
                .map(|p| (role_rank(p, ontology), wire(p, drs, ontology, &films)))
                .collect();
            atoms.sort();
            let distinct = members.iter().all(|p| p.frame == DISTINCT);
            (
                distinct,
                key,
                AlternativeGroup {
                    atoms: atoms.into_iter().map(|(_, a)| a).collect(),
                },
            )
        })
        .collect();
    groups.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let groups: Vec<AlternativeGroup> = groups.into_iter().map(|(_, _, g)| g).collect();

    let answer = match answer {
        Some(w) => {
            let t = word_term(drs, w);
            if !groups.iter().flat_map(|g| &g.atoms).any(|a| a.terms().any(|x| *x == t)) {
                return Err(UlrqError::UnboundAnswer(w));
            }
            t
        }
        None => LogicTerm::Var("Q".into()),
    };
    let q = Ulrq { groups, answer };
    check_groups(&q)?;
    Ok(q)
}

fn group_key(p: &CandidateParse) -> Vec<usize> {
    let mut k = vec![p.lu];
    let words: BTreeSet<usize> = p.fillers.iter().map(|f| f.word).collect();
    k.extend(words);
    k
}

fn role_rank(p: &CandidateParse, ontology: &Ontology) -> Vec<usize> {
    let frame = ontology.frame(&p.frame);
    let mut r: Vec<usize> = p
        .fillers
        .iter()
        .map(|f| frame.and_then(|fr| fr.role_index(&f.role)).unwrap_or(usize::MAX))
        .collect();
    r.sort_unstable();
    r
}

/// Within a disjunction, every alternative must mention the variables the
/// group shares with the answer or with other groups.
fn check_groups(q: &Ulrq) -> Result<(), UlrqError> {
    let vars = |atoms: &[QueryAtom]| -> HashSet<LogicTerm> {
        atoms.iter().flat_map(|a| a.terms()).filter(|t| t.is_var()).cloned().collect()
    };
    for (i, g) in q.groups.iter().enumerate() {
        if g.atoms.len() < 2 {
            continue;
        }
        let mut outside: HashSet<LogicTerm> = HashSet::from([q.answer.clone()]);
        for (j, h) in q.groups.iter().enumerate() {
            if j != i {
                outside.extend(vars(&h.atoms));
            }
        }
        let mine = vars(&g.atoms);
        for t in mine.intersection(&outside) {
            if let Some(a) = g.atoms.iter().find(|a| !a.terms().any(|x| x == t)) {
                return Err(UlrqError::GroupMismatch(format!("{a} lacks {t}")));
            }
        }
    }
    Ok(())
}

/// Runs the full construction for a question: prune, drop subsumed parses,
/// group alternatives and wire variables.
pub fn build_ulrq(
    parses: &[CandidateParse],
    drs: &Drs,
    ontology: &Ontology,
    registry: &EntityRegistry,
    role_map: &RoleClassMap,
) -> Result<Ulrq, UlrqError> {
    let answer = drs.query_object().ok_or(UlrqError::NotAQuestion)?.word();
    let kept = prune(parses, drs, ontology, registry, role_map);
    assemble(&kept, drs, ontology, Some(answer))
}
