//! The question pipeline: paraphrase, DRS, candidate parses, query.

use thiserror::Error;

use crate::drs::{parse_cnl, Drs, DrsError};
use crate::engine::{evaluate, AnswerSet, EvalError, FactBase, Rule};
use crate::frameparser::{parse_sentence, CandidateParse};
use crate::frames::{EntityRegistry, Ontology, RoleClassMap};
use crate::learner::LvpStore;
use crate::paraphrase::{ParaphraseError, Paraphraser, Token};
use crate::ulrq::{build_ulrq, prune, Ulrq, UlrqError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Paraphrase(#[from] ParaphraseError),
    #[error(transparent)]
    Drs(#[from] DrsError),
    #[error(transparent)]
    Ulrq(#[from] UlrqError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl PipelineError {
    /// Short tag used in batch output.
    pub fn kind(&self) -> &'static str {
        match self {
            PipelineError::Paraphrase(_) => "malformed-question",
            PipelineError::Drs(_) => "unparseable-sentence",
            PipelineError::Ulrq(UlrqError::NotAQuestion) => "not-a-question",
            PipelineError::Ulrq(UlrqError::NoInterpretation) => "no-interpretation",
            PipelineError::Ulrq(_) => "query-construction",
            PipelineError::Eval(_) => "evaluation",
        }
    }
}

/// A sentence taken as far as candidate parses.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub tokens: Vec<Token>,
    pub drs: Drs,
    pub parses: Vec<CandidateParse>,
}

/// Everything needed to turn a question into a query.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub paraphraser: Paraphraser,
    pub ontology: Ontology,
    pub role_map: RoleClassMap,
    pub registry: EntityRegistry,
    pub lvps: LvpStore,
}

impl Pipeline {
    /// Adds the fact base's entities to the registry.
    pub fn with_kb(mut self, kb: &FactBase) -> Self {
        kb.register_entities(&mut self.registry);
        self
    }

    pub fn analyze(&self, text: &str) -> Result<Analysis, PipelineError> {
        let tokens = self.paraphraser.paraphrase(text)?;
        let drs = parse_cnl(&tokens)?;
        let parses = parse_sentence(&drs, &self.lvps, Some(&self.ontology));
        Ok(Analysis { tokens, drs, parses })
    }

    /// Candidate parses that survive role-filler disambiguation.
    pub fn valid_parses(&self, a: &Analysis) -> Vec<CandidateParse> {
        prune(&a.parses, &a.drs, &self.ontology, &self.registry, &self.role_map)
    }

    pub fn query_of(&self, a: &Analysis) -> Result<Ulrq, PipelineError> {
        Ok(build_ulrq(&a.parses, &a.drs, &self.ontology, &self.registry, &self.role_map)?)
    }

    pub fn query(&self, text: &str) -> Result<Ulrq, PipelineError> {
        self.query_of(&self.analyze(text)?)
    }

    pub fn answer(&self, text: &str, kb: &FactBase, rules: &[Rule]) -> Result<AnswerSet, PipelineError> {
        Ok(evaluate(&self.query(text)?, kb, rules)?)
    }
}
