//! Loadable token-level rewrite rules for corpus-specific phrasings.

use thiserror::Error;

use super::Token;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Slot {
    Word(String),
    Capture(usize),
}

/// One ordered rewrite pair. Patterns match lowercased surfaces; `$1`..`$9`
/// capture a single token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdhocRule {
    pattern: Vec<Slot>,
    replacement: Vec<Slot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rule line {line}: {message}")]
pub struct AdhocRuleError {
    pub line: usize,
    pub message: String,
}

fn slots(s: &str) -> Result<Vec<Slot>, String> {
    s.split_whitespace()
        .map(|w| match w.strip_prefix('$') {
            Some(n) => n
                .parse::<usize>()
                .ok()
                .filter(|n| (1..=9).contains(n))
                .map(Slot::Capture)
                .ok_or_else(|| format!("bad capture '{w}'")),
            None => Ok(Slot::Word(w.to_lowercase())),
        })
        .collect()
}

impl AdhocRule {
    pub fn parse_file(text: &str) -> Result<Vec<AdhocRule>, AdhocRuleError> {
        let mut rules = Vec::new();
        for (i, l) in text.lines().enumerate() {
            let line = i + 1;
            if l.trim().is_empty() || l.trim_start().starts_with('#') {
                continue;
            }
            let (pat, rep) = l.split_once('\t').ok_or_else(|| AdhocRuleError {
                line,
                message: "expected match-pattern<TAB>replacement".into(),
            })?;
            let err = |message| AdhocRuleError { line, message };
            let pattern = slots(pat).map_err(err)?;
            let replacement = slots(rep).map_err(err)?;
            if pattern.is_empty() {
                return Err(err("empty pattern".into()));
            }
            for s in &replacement {
                if let Slot::Capture(n) = s {
                    if !pattern.contains(&Slot::Capture(*n)) {
                        return Err(err(format!("capture ${n} not bound by pattern")));
                    }
                }
            }
            rules.push(AdhocRule {
                pattern,
                replacement,
            });
        }
        Ok(rules)
    }

    fn match_at(&self, tokens: &[Token], at: usize) -> Option<Vec<Option<Token>>> {
        if at + self.pattern.len() > tokens.len() {
            return None;
        }
        let mut caps: Vec<Option<Token>> = vec![None; 10];
        for (slot, tok) in self.pattern.iter().zip(&tokens[at..]) {
            match slot {
                Slot::Word(w) => {
                    if tok.entity || tok.surface.to_lowercase() != *w {
                        return None;
                    }
                }
                Slot::Capture(n) => caps[*n] = Some(tok.clone()),
            }
        }
        Some(caps)
    }

    /// Rewrites every non-overlapping match, left to right. `word` builds a
    /// token for a literal replacement word.
    pub fn apply(&self, tokens: Vec<Token>, word: &dyn Fn(&str) -> Token) -> Vec<Token> {
        let mut out = Vec::with_capacity(tokens.len());
        let mut i = 0;
        while i < tokens.len() {
            if let Some(caps) = self.match_at(&tokens, i) {
                for slot in &self.replacement {
                    match slot {
                        Slot::Word(w) => out.push(word(w)),
                        Slot::Capture(n) => {
                            if let Some(t) = &caps[*n] {
                                out.push(t.clone())
                            }
                        }
                    }
                }
                i += self.pattern.len();
            } else {
                out.push(tokens[i].clone());
                i += 1;
            }
        }
        out
    }
}
