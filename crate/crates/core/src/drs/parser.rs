use thiserror::Error;

use super::{Drs, DrsTerm, Position, TermKind, VarRef};
use crate::paraphrase::{Pos, Token};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrsError {
    #[error("unparseable sentence: expected {expected} at word {index} ('{token}')")]
    Unparseable {
        token: String,
        index: usize,
        expected: String,
    },
    #[error("unparseable sentence: expected {expected} at end of sentence")]
    UnexpectedEnd { expected: String },
}

struct Referent {
    var: VarRef,
    lexeme: String,
    indefinite: bool,
    proper: bool,
}

struct Parser<'a> {
    toks: Vec<&'a Token>,
    at: usize,
    next_var: u32,
    terms: Vec<DrsTerm>,
    referents: Vec<Referent>,
}

fn pos(word: usize) -> Position {
    Position { sentence: 1, word }
}

/// Parses a normalized token list into a DRS.
///
/// The accepted fragment: wh-questions and declaratives of the shape
/// `[wh | NP] VERB [NP] PP*`, copulas (`is a N of NP`, `is ADJ PP`,
/// `is VERBed by NP`), relative clauses on nouns, of-genitives, and
/// `If C and C ... then C` conditionals. A definite NP reuses the referent
/// of the nearest preceding indefinite NP with the same noun; a repeated
/// proper name reuses its referent.
pub fn parse_cnl(tokens: &[Token]) -> Result<Drs, DrsError> {
    let mut p = Parser {
        toks: tokens.iter().filter(|t| t.pos != Pos::Punct).collect(),
        at: 0,
        next_var: 0,
        terms: Vec::new(),
        referents: Vec::new(),
    };
    match p.peek() {
        None => return Err(DrsError::UnexpectedEnd { expected: "a sentence".into() }),
        Some(t) if t.lemma.eq_ignore_ascii_case("if") => p.conditional()?,
        Some(t) if t.pos == Pos::Wh => p.question()?,
        Some(_) => p.clause()?,
    }
    if let Some(t) = p.peek() {
        return Err(p.unexpected(t, "end of sentence"));
    }
    Ok(Drs::new(p.terms, tokens.to_vec()))
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.at).copied()
    }

    fn peek_at(&self, k: usize) -> Option<&'a Token> {
        self.toks.get(self.at + k).copied()
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.peek()?;
        self.at += 1;
        Some(t)
    }

    fn fresh(&mut self) -> VarRef {
        self.next_var += 1;
        VarRef(self.next_var)
    }

    fn unexpected(&self, t: &Token, expected: &str) -> DrsError {
        DrsError::Unparseable {
            token: t.surface.clone(),
            index: t.index,
            expected: expected.into(),
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T, DrsError> {
        Err(match self.peek() {
            Some(t) => self.unexpected(t, expected),
            None => DrsError::UnexpectedEnd {
                expected: expected.into(),
            },
        })
    }

    fn is_lemma(&self, lemma: &str) -> bool {
        self.peek().is_some_and(|t| t.lemma.eq_ignore_ascii_case(lemma))
    }

    fn expect_lemma(&mut self, lemma: &str) -> Result<&'a Token, DrsError> {
        if self.is_lemma(lemma) {
            Ok(self.bump().expect("peeked"))
        } else {
            self.fail(&format!("'{lemma}'"))
        }
    }

    fn conditional(&mut self) -> Result<(), DrsError> {
        self.bump();
        self.clause()?;
        while self.is_lemma("and") {
            self.bump();
            self.clause()?;
        }
        self.expect_lemma("then")?;
        self.clause()
    }

    fn clause(&mut self) -> Result<(), DrsError> {
        let subject = self.np()?;
        self.vp(subject)
    }

    fn question(&mut self) -> Result<(), DrsError> {
        let wh = self.bump().expect("peeked");
        let wh_lemma = wh.lemma.to_lowercase();
        let subject = if self.peek().is_some_and(|t| t.pos.is_noun()) && wh_lemma != "who" {
            // which N ...
            let noun = self.bump().expect("peeked");
            let var = self.new_object(noun, true);
            self.postmodifiers(var)?;
            var
        } else {
            let var = self.fresh();
            self.terms.push(DrsTerm::object(var, &wh_lemma, false, wh.index));
            var
        };
        self.terms.push(DrsTerm {
            kind: TermKind::Query {
                var: subject,
                wh_word: wh_lemma,
            },
            position: pos(wh.index),
        });
        self.vp(subject)
    }

    fn new_object(&mut self, noun: &Token, indefinite: bool) -> VarRef {
        let var = self.fresh();
        let proper = noun.pos == Pos::Proper;
        let lexeme = if proper { &noun.surface } else { &noun.lemma };
        self.terms
            .push(DrsTerm::object(var, lexeme, noun.pos == Pos::NounPl, noun.index));
        self.referents.push(Referent {
            var,
            lexeme: lexeme.clone(),
            indefinite,
            proper,
        });
        var
    }

    fn starts_np(t: &Token) -> bool {
        matches!(t.pos, Pos::Det | Pos::Proper | Pos::NounSg | Pos::NounPl)
    }

    fn np(&mut self) -> Result<VarRef, DrsError> {
        let Some(t) = self.peek() else {
            return self.fail("a noun phrase");
        };
        match t.pos {
            Pos::Det => {
                self.bump();
                let Some(noun) = self.peek().filter(|n| n.pos.is_noun()) else {
                    return self.fail("a noun");
                };
                self.bump();
                let definite = t.lemma.eq_ignore_ascii_case("the");
                let antecedent = if definite {
                    self.referents
                        .iter()
                        .rev()
                        .find(|r| r.indefinite && !r.proper && r.lexeme == noun.lemma)
                        .map(|r| r.var)
                } else {
                    None
                };
                let var = match antecedent {
                    Some(v) => v,
                    None => self.new_object(noun, !definite),
                };
                self.postmodifiers(var)?;
                Ok(var)
            }
            Pos::Proper => {
                self.bump();
                let existing = self
                    .referents
                    .iter()
                    .find(|r| r.proper && r.lexeme == t.surface)
                    .map(|r| r.var);
                Ok(match existing {
                    Some(v) => v,
                    None => self.new_object(t, false),
                })
            }
            Pos::NounSg | Pos::NounPl => {
                self.bump();
                let var = self.new_object(t, true);
                self.postmodifiers(var)?;
                Ok(var)
            }
            _ => self.fail("a noun phrase"),
        }
    }

    fn postmodifiers(&mut self, head: VarRef) -> Result<(), DrsError> {
        loop {
            match self.peek() {
                Some(t) if t.pos == Pos::Prep && t.lemma == "of" => {
                    self.bump();
                    let right = self.np()?;
                    self.terms.push(DrsTerm {
                        kind: TermKind::Relation {
                            left: head,
                            relator: "of".into(),
                            right,
                        },
                        position: pos(t.index),
                    });
                }
                Some(t) if t.pos == Pos::Rel => {
                    self.bump();
                    self.relative_clause(head)?;
                }
                _ => return Ok(()),
            }
        }
    }

    fn relative_clause(&mut self, head: VarRef) -> Result<(), DrsError> {
        self.vp(head)
    }

    fn vp(&mut self, subject: VarRef) -> Result<(), DrsError> {
        let Some(verb) = self.peek().filter(|t| t.pos.is_verb()) else {
            return self.fail("a verb");
        };
        self.bump();
        let pred = self.fresh();
        if verb.lemma == "be" {
            let next = self.peek();
            if next.is_some_and(|t| t.pos == Pos::VerbPastPart) {
                // passive: the clause subject is the deep object
                let participle = self.bump().expect("peeked");
                self.expect_lemma("by")?;
                let agent = self.np()?;
                self.push_predicate(pred, &participle.lemma, agent, Some(subject), participle.index);
                return self.pps(pred);
            }
            if next.is_some_and(|t| t.pos == Pos::Other)
                && self.peek_at(1).is_some_and(|t| t.pos == Pos::Prep)
            {
                let adj = self.bump().expect("peeked");
                self.push_predicate(pred, &adj.lemma, subject, None, adj.index);
                return self.pps(pred);
            }
            let complement = self.np()?;
            self.push_predicate(pred, "be", subject, Some(complement), verb.index);
            return self.pps(pred);
        }
        let object = match self.peek() {
            Some(t) if Self::starts_np(t) => Some(self.np()?),
            _ => None,
        };
        self.push_predicate(pred, &verb.lemma, subject, object, verb.index);
        self.pps(pred)
    }

    fn push_predicate(
        &mut self,
        var: VarRef,
        lexeme: &str,
        subject: VarRef,
        object: Option<VarRef>,
        word: usize,
    ) {
        self.terms.push(DrsTerm {
            kind: TermKind::Predicate {
                var,
                lexeme: lexeme.to_string(),
                subject,
                object,
            },
            position: pos(word),
        });
    }

    fn pps(&mut self, pred: VarRef) -> Result<(), DrsError> {
        while let Some(p) = self.peek().filter(|t| t.pos == Pos::Prep) {
            self.bump();
            let dependent = self.np()?;
            self.terms.push(DrsTerm {
                kind: TermKind::ModifierPp {
                    pred,
                    preposition: p.lemma.clone(),
                    dependent,
                },
                position: pos(p.index),
            });
        }
        Ok(())
    }
}
