//! Applies learned lvps to a sentence's DRS to produce candidate parses.

use std::collections::BTreeSet;
use std::fmt;

use crate::drs::{Drs, TermType};
use crate::frames::Ontology;
use crate::learner::{apply_all, GrammaticalPattern, LuPos, Lvp, LvpStore};
use crate::paraphrase::Pos;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filler {
    pub role: String,
    pub word: usize,
    pub pattern: GrammaticalPattern,
}

/// One frame relation extracted from a sentence: the frame, the word index
/// of its lexical unit, and the extracted fillers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CandidateParse {
    pub frame: String,
    pub lu: usize,
    pub fillers: Vec<Filler>,
}

impl CandidateParse {
    /// Builds a parse with its fillers in canonical order.
    pub fn new(frame: &str, lu: usize, mut fillers: Vec<Filler>) -> Self {
        fillers.sort();
        fillers.dedup();
        CandidateParse {
            frame: frame.to_string(),
            lu,
            fillers,
        }
    }

    pub fn role_words(&self) -> BTreeSet<(&str, usize)> {
        self.fillers.iter().map(|f| (f.role.as_str(), f.word)).collect()
    }

    pub fn word_patterns(&self) -> BTreeSet<(usize, &GrammaticalPattern)> {
        self.fillers.iter().map(|f| (f.word, &f.pattern)).collect()
    }

    pub fn filler(&self, role: &str) -> Option<&Filler> {
        self.fillers.iter().find(|f| f.role == role)
    }
}

impl fmt::Display for CandidateParse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fillers: Vec<String> = self
            .fillers
            .iter()
            .map(|x| format!("({},{},'{}')", x.role, x.word, x.pattern))
            .collect();
        write!(f, "({},{},[{}])", self.frame, self.lu, fillers.join(","))
    }
}

/// Lexemes that may trigger a frame: predicates as verbs and objects as
/// nouns, with their word indices, in term order.
pub fn candidate_lexical_units(drs: &Drs) -> Vec<(String, LuPos, usize)> {
    drs.terms
        .iter()
        .filter_map(|t| LuPos::of(t.term_type()).map(|p| (t.lexeme().to_string(), p, t.word())))
        .collect()
}

/// Applies every matching lvp to every candidate lexical unit. When an
/// ontology is given, proper-noun fillers must pass their role's type
/// constraints. The result is sorted and duplicate-free.
pub fn parse_sentence(drs: &Drs, store: &LvpStore, ontology: Option<&Ontology>) -> Vec<CandidateParse> {
    let mut out = BTreeSet::new();
    for (i, term) in drs.terms.iter().enumerate() {
        let Some(pos) = LuPos::of(term.term_type()) else {
            continue;
        };
        for lvp in store.matching(term.lexeme(), pos) {
            out.extend(apply_lvp(lvp, drs, i, ontology));
        }
    }
    out.into_iter().collect()
}

/// All parses `lvp` yields at lexical-unit term `lu`: one per combination of
/// extracted fillers.
pub fn apply_lvp(lvp: &Lvp, drs: &Drs, lu: usize, ontology: Option<&Ontology>) -> Vec<CandidateParse> {
    let mut choices: Vec<Vec<Filler>> = Vec::new();
    for rp in &lvp.patterns {
        let words: Vec<Filler> = apply_all(&rp.pattern, drs, lu)
            .into_iter()
            .filter(|&t| drs.terms[t].term_type() == TermType::Object)
            .map(|t| drs.terms[t].word())
            .filter(|&w| ontology.is_none_or(|o| passes_constraints(o, &lvp.frame, &rp.role, drs, w)))
            .map(|word| Filler {
                role: rp.role.clone(),
                word,
                pattern: rp.pattern.clone(),
            })
            .collect();
        if words.is_empty() {
            if rp.required {
                return Vec::new();
            }
            continue;
        }
        choices.push(words);
    }
    let lu_word = drs.terms[lu].word();
    let mut combos: Vec<Vec<Filler>> = vec![Vec::new()];
    for c in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |f| {
                    let mut p = prefix.clone();
                    p.push(f.clone());
                    p
                })
            })
            .collect();
    }
    combos
        .into_iter()
        .map(|fillers| CandidateParse::new(&lvp.frame, lu_word, fillers))
        .collect()
}

fn passes_constraints(ontology: &Ontology, frame: &str, role: &str, drs: &Drs, word: usize) -> bool {
    let (Some(role), Some(tok)) = (ontology.role(frame, role), drs.token(word)) else {
        return true;
    };
    tok.pos != Pos::Proper || role.constraints.iter().all(|c| c.check(&tok.lemma))
}
