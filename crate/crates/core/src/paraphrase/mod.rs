//! Rewrites raw question text into the restricted grammar accepted by the
//! DRS parser.
//!
//! Tokenization tags words with a bundled lexicon. Normalization then runs,
//! in order: the ad-hoc rule table, proper-noun compounding, participle
//! clauses to relative clauses, tense normalization, and article insertion.

mod adhoc;
mod lexicon;

pub use adhoc::{AdhocRule, AdhocRuleError};
pub use lexicon::{plural_present, third_singular, LexEntry, Lexicon, LexiconError, Pos};

use thiserror::Error;

/// One word of a question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub pos: Pos,
    /// 1-based position in the token list.
    pub index: usize,
    /// Set for tokens produced from a bracketed entity span. No rewrite
    /// rule looks inside or merges across them.
    pub entity: bool,
}

impl Token {
    pub fn new(surface: &str, lemma: &str, pos: Pos) -> Token {
        Token {
            surface: surface.to_string(),
            lemma: lemma.to_string(),
            pos,
            index: 0,
            entity: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParaphraseError {
    #[error("malformed question: {0}")]
    MalformedQuestion(String),
}

/// Renders tokens back to text, attaching punctuation to the previous word.
pub fn render_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for t in tokens {
        if !out.is_empty() && t.pos != Pos::Punct {
            out.push(' ');
        }
        out.push_str(&t.surface);
    }
    out
}

fn reindex(tokens: &mut [Token]) {
    for (i, t) in tokens.iter_mut().enumerate() {
        t.index = i + 1;
    }
}

enum Piece {
    Word(String),
    Entity(Vec<String>),
}

fn split_pieces(text: &str) -> Result<Vec<Piece>, ParaphraseError> {
    let mut pieces = Vec::new();
    let mut rest = text;
    loop {
        match rest.find(['[', ']']) {
            None => {
                pieces.extend(plain_words(rest).into_iter().map(Piece::Word));
                return Ok(pieces);
            }
            Some(i) if rest.as_bytes()[i] == b']' => {
                return Err(ParaphraseError::MalformedQuestion(format!(
                    "unmatched ']' in \"{text}\""
                )))
            }
            Some(i) => {
                pieces.extend(plain_words(&rest[..i]).into_iter().map(Piece::Word));
                let after = &rest[i + 1..];
                let close = after.find(']').ok_or_else(|| {
                    ParaphraseError::MalformedQuestion(format!("unclosed '[' in \"{text}\""))
                })?;
                let inner = &after[..close];
                if inner.contains('[') {
                    return Err(ParaphraseError::MalformedQuestion(format!(
                        "overlapping entity spans in \"{text}\""
                    )));
                }
                let words: Vec<String> = inner.split_whitespace().map(String::from).collect();
                if words.is_empty() {
                    return Err(ParaphraseError::MalformedQuestion(format!(
                        "empty entity span in \"{text}\""
                    )));
                }
                pieces.push(Piece::Entity(words));
                rest = &after[close + 1..];
            }
        }
    }
}

fn plain_words(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    for w in s.split_whitespace() {
        let trimmed = w.trim_end_matches(['?', '.', '!', ',']);
        if !trimmed.is_empty() {
            out.push(trimmed.to_string());
        }
        for c in w[trimmed.len()..].chars() {
            out.push(c.to_string());
        }
    }
    out
}

fn is_punct(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c.is_ascii_punctuation())
}

fn starts_upper(w: &str) -> bool {
    w.chars().next().is_some_and(char::is_uppercase)
}

/// Tokenizer and normalizer over a fixed lexicon and rule table.
#[derive(Debug, Clone)]
pub struct Paraphraser {
    lexicon: Lexicon,
    adhoc: Vec<AdhocRule>,
}

impl Paraphraser {
    pub fn new(lexicon: Lexicon, adhoc: Vec<AdhocRule>) -> Self {
        Paraphraser { lexicon, adhoc }
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    /// Splits `text` into tagged tokens. Bracketed spans become single
    /// hyphen-joined proper tokens whose lemma keeps the original spacing.
    pub fn tokenize(&self, text: &str) -> Result<Vec<Token>, ParaphraseError> {
        if text.trim().is_empty() {
            return Err(ParaphraseError::MalformedQuestion("empty question".into()));
        }
        let pieces = split_pieces(text)?;
        let mut tokens: Vec<Token> = Vec::new();
        let mut i = 0;
        while i < pieces.len() {
            match &pieces[i] {
                Piece::Entity(words) => {
                    let mut t = Token::new(&words.join("-"), &words.join(" "), Pos::Proper);
                    t.entity = true;
                    tokens.push(t);
                    i += 1;
                }
                Piece::Word(w) => {
                    if let Some(Piece::Word(next)) = pieces.get(i + 1) {
                        let joined = format!("{}-{}", w.to_lowercase(), next.to_lowercase());
                        if self.lexicon.contains(&joined) && !starts_upper(next) {
                            let t = self.tag(&joined, tokens.is_empty(), tokens.last());
                            tokens.push(t);
                            i += 2;
                            continue;
                        }
                    }
                    let t = self.tag(w, tokens.is_empty(), tokens.last());
                    tokens.push(t);
                    i += 1;
                }
            }
        }
        reindex(&mut tokens);
        Ok(tokens)
    }

    fn tag(&self, word: &str, first: bool, prev: Option<&Token>) -> Token {
        if is_punct(word) {
            return Token::new(word, word, Pos::Punct);
        }
        if word.chars().all(|c| c.is_ascii_digit()) {
            return Token::new(word, word, Pos::Proper);
        }
        if starts_upper(word) && !first {
            return Token::new(word, word, Pos::Proper);
        }
        match self.lexicon.lookup(&word.to_lowercase()) {
            Some(e) => {
                let after_nominal = prev.is_some_and(|p| p.pos.is_noun() || p.pos == Pos::Proper);
                let pos = if e.pos.contains(&Pos::Wh) && e.pos.contains(&Pos::Rel) {
                    if after_nominal {
                        Pos::Rel
                    } else {
                        Pos::Wh
                    }
                } else if e.pos.contains(&Pos::VerbPastPart)
                    && prev.is_some_and(|p| p.lemma == "be")
                {
                    Pos::VerbPastPart
                } else if e.pos.contains(&Pos::VerbPast) {
                    Pos::VerbPast
                } else {
                    e.pos[0]
                };
                Token::new(word, &e.lemma, pos)
            }
            None if starts_upper(word) => Token::new(word, word, Pos::Proper),
            None => Token::new(word, &word.to_lowercase(), Pos::Other),
        }
    }

    /// Builds a token for an inserted or replacement word.
    pub fn word(&self, surface: &str) -> Token {
        match self.lexicon.lookup(surface) {
            Some(e) => Token::new(surface, &e.lemma, e.pos[0]),
            None => Token::new(surface, surface, Pos::Other),
        }
    }

    /// Tokenize then normalize.
    pub fn paraphrase(&self, text: &str) -> Result<Vec<Token>, ParaphraseError> {
        Ok(self.normalize(&self.tokenize(text)?))
    }

    pub fn normalize(&self, tokens: &[Token]) -> Vec<Token> {
        let mut toks = tokens.to_vec();
        for rule in &self.adhoc {
            toks = rule.apply(toks, &|w| self.word(w));
        }
        toks = compound_proper(toks);
        toks = self.participles(toks);
        toks = self.tenses(toks);
        toks = self.articles(toks);
        reindex(&mut toks);
        toks
    }

    fn copula(&self, plural: bool) -> Token {
        let s = if plural { "are" } else { "is" };
        Token::new(s, "be", Pos::VerbPres)
    }

    fn participles(&self, toks: Vec<Token>) -> Vec<Token> {
        let mut out: Vec<Token> = Vec::with_capacity(toks.len() + 4);
        let mut i = 0;
        while i < toks.len() {
            let t = &toks[i];
            // PROPER VERBed NOUN  =>  NOUN that is VERBed by PROPER
            if t.pos == Pos::Proper
                && i + 2 < toks.len()
                && toks[i + 1].pos.is_verb()
                && !toks[i + 1].entity
                && self.lexicon.can_be_participle(&toks[i + 1].surface)
                && toks[i + 2].pos.is_noun()
            {
                let noun = toks[i + 2].clone();
                let plural = noun.pos == Pos::NounPl;
                let mut verb = toks[i + 1].clone();
                verb.pos = Pos::VerbPastPart;
                out.push(noun);
                out.push(Token::new("that", "that", Pos::Rel));
                out.push(self.copula(plural));
                out.push(verb);
                out.push(Token::new("by", "by", Pos::Prep));
                out.push(t.clone());
                i += 3;
                continue;
            }
            // NOUN VERBed (PREP | end)  =>  NOUN that is VERBed ...
            let follows_noun = out.last().is_some_and(|p| p.pos.is_noun());
            let next_ok = match toks.get(i + 1) {
                None => true,
                Some(n) => n.pos == Pos::Prep || n.pos == Pos::Punct,
            };
            if follows_noun
                && matches!(t.pos, Pos::VerbPast | Pos::VerbPastPart)
                && !t.entity
                && self.lexicon.can_be_participle(&t.surface)
                && next_ok
            {
                let plural = out.last().is_some_and(|p| p.pos == Pos::NounPl);
                out.push(Token::new("that", "that", Pos::Rel));
                out.push(self.copula(plural));
                let mut verb = t.clone();
                verb.pos = Pos::VerbPastPart;
                out.push(verb);
                i += 1;
                continue;
            }
            out.push(t.clone());
            i += 1;
        }
        out
    }

    fn tenses(&self, mut toks: Vec<Token>) -> Vec<Token> {
        for i in 0..toks.len() {
            if toks[i].pos != Pos::VerbPast || toks[i].entity {
                continue;
            }
            let lower = toks[i].surface.to_lowercase();
            let (surface, base) = match lower.as_str() {
                "was" => ("is".to_string(), "be".to_string()),
                "were" => ("are".to_string(), "be".to_string()),
                _ => {
                    let base = self.lexicon.present_base(&lower);
                    let form = if subject_is_plural(&toks[..i]) {
                        plural_present(&base)
                    } else {
                        third_singular(&base)
                    };
                    (form, base)
                }
            };
            let surface = if starts_upper(&toks[i].surface) {
                capitalize(&surface)
            } else {
                surface
            };
            toks[i].surface = surface;
            toks[i].lemma = base;
            toks[i].pos = Pos::VerbPres;
        }
        toks
    }

    fn articles(&self, toks: Vec<Token>) -> Vec<Token> {
        let mut out: Vec<Token> = Vec::with_capacity(toks.len() + 4);
        for t in toks {
            let needs = match t.pos {
                Pos::NounSg => self.lexicon.is_countable(&t.lemma),
                Pos::NounPl => true,
                _ => false,
            };
            let determined = out
                .last()
                .is_some_and(|p| matches!(p.pos, Pos::Det | Pos::Wh) || is_numeral(p));
            if needs && !determined && !t.entity {
                let art = if t.pos == Pos::NounPl {
                    "some"
                } else if t.surface.starts_with(['a', 'e', 'i', 'o', 'u', 'A', 'E', 'I', 'O', 'U']) {
                    "an"
                } else {
                    "a"
                };
                out.push(Token::new(art, art, Pos::Det));
            }
            out.push(t);
        }
        out
    }
}

fn is_numeral(t: &Token) -> bool {
    t.surface.chars().all(|c| c.is_ascii_digit()) && !t.entity
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

/// Number of the nearest preceding nominal, skipping relative pronouns.
fn subject_is_plural(before: &[Token]) -> bool {
    for t in before.iter().rev() {
        match t.pos {
            Pos::NounPl => return true,
            Pos::NounSg | Pos::Proper | Pos::Wh => return false,
            _ => {}
        }
    }
    false
}

fn compound_proper(toks: Vec<Token>) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(toks.len());
    for t in toks {
        let merge = t.pos == Pos::Proper
            && !t.entity
            && !t.surface.chars().all(|c| c.is_ascii_digit())
            && out.last().is_some_and(|p| {
                p.pos == Pos::Proper && !p.entity && !p.surface.chars().all(|c| c.is_ascii_digit())
            });
        if merge {
            let last = out.last_mut().expect("checked above");
            last.surface = format!("{}-{}", last.surface, t.surface);
            last.lemma = format!("{} {}", last.lemma, t.lemma);
        } else {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests;
