//! Batch operations behind the command-line tool: answering, label audits,
//! template grouping and lvp statistics.

mod audit;
mod stats;
mod templates;

pub use audit::{audit, AuditRecord, AuditReport, Cause, Verdict};
pub use stats::{lvp_stats, render_stats, role_label, StatRow};
pub use templates::{group_by_template, TemplateGroups};

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::bundled;
use crate::engine::{ingest_kb, parse_rules, AnswerSet, FactBase, Rule};
use crate::frames::{EntityRegistry, Ontology, RoleClassMap};
use crate::learner::LvpStore;
use crate::paraphrase::{AdhocRule, Lexicon, Paraphraser};
use crate::pipeline::Pipeline;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    File { path: PathBuf, message: String },
}

impl CliError {
    pub fn file(path: &Path, message: impl ToString) -> Self {
        CliError::File {
            path: path.to_path_buf(),
            message: message.to_string(),
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::file(path, e))
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::file(path, e))
}

/// Data files to use instead of the bundled ones.
#[derive(Debug, Clone, Default)]
pub struct Resources {
    pub lexicon: Option<PathBuf>,
    pub frames: Option<PathBuf>,
    pub role_map: Option<PathBuf>,
    pub nouns: Option<PathBuf>,
    pub lvps: Option<PathBuf>,
    pub rules: Option<PathBuf>,
}

fn load_or<T, E: ToString>(
    path: &Option<PathBuf>,
    bundled: &str,
    parse: impl Fn(&str) -> Result<T, E>,
) -> Result<T, CliError> {
    match path {
        Some(p) => parse(&read_file(p)?).map_err(|e| CliError::file(p, e)),
        None => parse(bundled).map_err(|e| CliError::file(Path::new("<bundled>"), e)),
    }
}

impl Resources {
    /// The pipeline, with the fact base's entities registered when given.
    pub fn pipeline(&self, kb: Option<&FactBase>) -> Result<Pipeline, CliError> {
        let lexicon = load_or(&self.lexicon, bundled::LEXICON, |t| {
            Lexicon::parse(t, bundled::IRREGULAR).and_then(|l| l.with_countability(bundled::COUNTABILITY))
        })?;
        let adhoc = AdhocRule::parse_file(bundled::ADHOC_RULES).map_err(|e| CliError::file(Path::new("<bundled>"), e))?;
        let ontology = load_or(&self.frames, bundled::FRAMES, Ontology::parse)?;
        let role_map = load_or(&self.role_map, bundled::ROLE_MAP, RoleClassMap::parse)?;
        if let Err(e) = role_map.check_total(&ontology) {
            let path = self.role_map.clone().unwrap_or_else(|| "<bundled>".into());
            return Err(CliError::file(&path, e));
        }
        let registry = load_or(&self.nouns, bundled::NOUN_CLASSES, |t| EntityRegistry::new().with_noun_classes(t))?;
        let lvps = load_or(&self.lvps, bundled::LVPS, LvpStore::parse)?;
        let pipeline = Pipeline {
            paraphraser: Paraphraser::new(lexicon, adhoc),
            ontology,
            role_map,
            registry,
            lvps,
        };
        Ok(match kb {
            Some(kb) => pipeline.with_kb(kb),
            None => pipeline,
        })
    }

    pub fn rules(&self, pipeline: &Pipeline) -> Result<Vec<Rule>, CliError> {
        load_or(&self.rules, bundled::RULES, |t| parse_rules(t, pipeline))
    }
}

pub fn load_kb(path: &Path) -> Result<FactBase, CliError> {
    ingest_kb(&read_file(path)?).map_err(|e| CliError::file(path, e))
}

/// One line of a question file: the question and, when present, its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionLine {
    pub line: usize,
    pub question: String,
    pub label: Option<AnswerSet>,
}

/// Reads `question<TAB>ans1|ans2|...` lines. The label part is optional;
/// blank lines are skipped.
pub fn parse_questions(text: &str) -> Vec<QuestionLine> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let (question, label) = match l.split_once('\t') {
                Some((q, a)) => (q, Some(parse_label(a))),
                None => (l, None),
            };
            QuestionLine {
                line: i + 1,
                question: question.trim().to_string(),
                label,
            }
        })
        .collect()
}

fn parse_label(text: &str) -> AnswerSet {
    AnswerSet::from_values(text.trim_end_matches('\r').split('|').map(str::trim).filter(|v| !v.is_empty()))
}

/// Answers every question, one output line each. Failures become
/// `ERROR:<kind>` lines.
pub fn answer_batch(questions: &[QuestionLine], pipeline: &Pipeline, kb: &FactBase, rules: &[Rule]) -> String {
    let mut out = String::new();
    for q in questions {
        let answer = match pipeline.answer(&q.question, kb, rules) {
            Ok(a) => a.joined(),
            Err(e) => format!("ERROR:{}", e.kind()),
        };
        out.push_str(&format!("{}\t{answer}\n", q.question));
    }
    out
}

#[cfg(test)]
mod tests;
