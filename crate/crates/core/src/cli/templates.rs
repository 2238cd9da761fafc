//! Groups questions by the template of their query.

use std::collections::BTreeMap;

use super::QuestionLine;
use crate::pipeline::Pipeline;
use crate::ulrq::standardize_template;

/// Questions keyed by template text. Questions that fail are keyed by
/// `ERROR:<kind>`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemplateGroups {
    pub groups: BTreeMap<String, Vec<String>>,
    pub errors: BTreeMap<String, Vec<String>>,
}

impl TemplateGroups {
    pub fn distinct_templates(&self) -> usize {
        self.groups.len()
    }

    /// Templates in lexicographic order, each followed by its count and
    /// member questions.
    pub fn render(&self) -> String {
        let mut out = format!("# {} distinct templates\n", self.distinct_templates());
        for (template, members) in self.groups.iter().chain(&self.errors) {
            out.push_str(&format!("\n{template}\n# {} questions\n", members.len()));
            for m in members {
                out.push_str(&format!("  {m}\n"));
            }
        }
        out
    }
}

pub fn group_by_template(questions: &[QuestionLine], pipeline: &Pipeline) -> TemplateGroups {
    let mut out = TemplateGroups::default();
    for q in questions {
        match pipeline.query(&q.question) {
            Ok(query) => out
                .groups
                .entry(standardize_template(&query).canonical_text)
                .or_default()
                .push(q.question.clone()),
            Err(e) => out
                .errors
                .entry(format!("ERROR:{}", e.kind()))
                .or_default()
                .push(q.question.clone()),
        }
    }
    out
}
