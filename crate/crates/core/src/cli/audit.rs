//! Checks labeled questions against computed answers and guesses why a
//! label is wrong by re-evaluating under looser assumptions.

use std::fmt;

use super::QuestionLine;
use crate::engine::{evaluate, evaluate_with, AnswerSet, EvalOptions, FactBase, Rule};
use crate::pipeline::Pipeline;
use crate::ulrq::{AlternativeGroup, LogicTerm, QueryAtom, Ulrq, Value, MOVIE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mislabeled,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mislabeled => "mislabeled",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cause {
    /// The label treats films sharing a title as one film.
    NamesakeTitle,
    /// The label reads a number as a release year instead of a title, or
    /// the other way round.
    TitleVsYear,
    /// The label mixes up person roles, or drops a person holding two
    /// roles in one film.
    DualRole,
    Other,
}

impl Cause {
    pub fn as_str(self) -> &'static str {
        match self {
            Cause::NamesakeTitle => "namesake-title",
            Cause::TitleVsYear => "title-vs-year",
            Cause::DualRole => "dual-role",
            Cause::Other => "other",
        }
    }
}

impl fmt::Display for Cause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub line: usize,
    pub question: String,
    pub expected: AnswerSet,
    pub computed: AnswerSet,
    pub verdict: Verdict,
    pub cause: Option<Cause>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub records: Vec<AuditRecord>,
    /// Lines that could not be audited, with the reason.
    pub skipped: Vec<(usize, String)>,
}

impl AuditReport {
    pub fn mislabeled(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records.iter().filter(|r| r.verdict == Verdict::Mislabeled)
    }

    /// Tab-separated records followed by a summary.
    pub fn render(&self) -> String {
        let mut out = String::from("line\tverdict\tcause\tquestion\texpected\tcomputed\n");
        for r in &self.records {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                r.line,
                r.verdict,
                r.cause.map_or("-", Cause::as_str),
                r.question,
                r.expected.joined(),
                r.computed.joined()
            ));
        }
        for (line, why) in &self.skipped {
            out.push_str(&format!("{line}\tskipped\t-\t{why}\t\t\n"));
        }
        let bad = self.mislabeled().count();
        out.push_str(&format!(
            "# {} audited, {} match, {bad} mislabeled, {} skipped\n",
            self.records.len(),
            self.records.len() - bad,
            self.skipped.len()
        ));
        for cause in [Cause::NamesakeTitle, Cause::TitleVsYear, Cause::DualRole, Cause::Other] {
            let n = self.mislabeled().filter(|r| r.cause == Some(cause)).count();
            if n > 0 {
                out.push_str(&format!("# {cause}: {n}\n"));
            }
        }
        out
    }
}

/// Audits every labeled question. Lines without a label, and questions the
/// pipeline cannot answer, are skipped.
pub fn audit(questions: &[QuestionLine], pipeline: &Pipeline, kb: &FactBase, rules: &[Rule]) -> AuditReport {
    let merged = kb.merged_by_title();
    let mut report = AuditReport::default();
    for q in questions {
        let Some(expected) = &q.label else {
            report.skipped.push((q.line, "missing label".into()));
            continue;
        };
        let query = match pipeline.query(&q.question) {
            Ok(query) => query,
            Err(e) => {
                report.skipped.push((q.line, format!("ERROR:{}", e.kind())));
                continue;
            }
        };
        let computed = match evaluate(&query, kb, rules) {
            Ok(a) => a,
            Err(e) => {
                report.skipped.push((q.line, format!("ERROR:evaluation {e}")));
                continue;
            }
        };
        let (verdict, cause) = if computed == *expected {
            (Verdict::Match, None)
        } else {
            (Verdict::Mislabeled, Some(diagnose(&query, &computed, expected, kb, &merged, rules)))
        };
        report.records.push(AuditRecord {
            line: q.line,
            question: q.question.clone(),
            expected: expected.clone(),
            computed,
            verdict,
            cause,
        });
    }
    report
}

fn diagnose(
    query: &Ulrq,
    computed: &AnswerSet,
    expected: &AnswerSet,
    kb: &FactBase,
    merged: &FactBase,
    rules: &[Rule],
) -> Cause {
    let reproduces = |r: Result<AnswerSet, _>| r.is_ok_and(|a| a == *expected);
    if reproduces(evaluate(query, merged, rules)) {
        return Cause::NamesakeTitle;
    }
    if swap_title_and_year(query).is_some_and(|q| reproduces(evaluate(&q, kb, rules))) {
        return Cause::TitleVsYear;
    }
    let relaxed = EvalOptions { relax_person_roles: true };
    if reproduces(evaluate_with(query, kb, rules, relaxed)) {
        return Cause::DualRole;
    }
    let constants: Vec<String> = query
        .atoms()
        .flat_map(|a| a.terms())
        .filter_map(|t| match t {
            LogicTerm::Const(c) => Some(c.as_text()),
            _ => None,
        })
        .collect();
    let without = AnswerSet::from_values(computed.values.iter().filter(|v| !constants.contains(v)).cloned());
    if constants.iter().any(|c| computed.values.contains(c)) && without == *expected {
        return Cause::DualRole;
    }
    Cause::Other
}

/// The query with every numeric film-title constant read as a release
/// year and every release-year constant read as a title. None when the
/// query has no such constant.
fn swap_title_and_year(query: &Ulrq) -> Option<Ulrq> {
    let mut changed = false;
    let mut fresh = 0;
    let groups = query
        .groups
        .iter()
        .map(|g| AlternativeGroup {
            atoms: g
                .atoms
                .iter()
                .map(|a| {
                    if a.relation != MOVIE {
                        return a.clone();
                    }
                    let mut bindings = Vec::new();
                    for (role, t) in &a.bindings {
                        let numeric = matches!(t, LogicTerm::Const(Value::Int(_)));
                        match role.as_str() {
                            "FilmNm" if numeric => {
                                changed = true;
                                fresh += 1;
                                bindings.push((role.clone(), LogicTerm::Var(format!("T#{fresh}"))));
                                bindings.push(("Release Year".to_string(), t.clone()));
                            }
                            "Release Year" if matches!(t, LogicTerm::Const(_)) => {
                                changed = true;
                                bindings.retain(|(r, _)| r != "FilmNm");
                                bindings.insert(0, ("FilmNm".to_string(), t.clone()));
                            }
                            _ => bindings.push((role.clone(), t.clone())),
                        }
                    }
                    QueryAtom {
                        relation: a.relation.clone(),
                        bindings,
                    }
                })
                .collect(),
        })
        .collect();
    changed.then(|| Ulrq {
        groups,
        answer: query.answer.clone(),
    })
}
