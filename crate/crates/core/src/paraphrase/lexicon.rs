use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Part-of-speech tags understood by the paraphraser and the DRS parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    NounSg,
    NounPl,
    Proper,
    VerbPres,
    VerbPast,
    VerbPastPart,
    Det,
    Prep,
    Wh,
    Rel,
    Punct,
    Other,
}

impl Pos {
    pub const ALL: [Pos; 12] = [
        Pos::NounSg,
        Pos::NounPl,
        Pos::Proper,
        Pos::VerbPres,
        Pos::VerbPast,
        Pos::VerbPastPart,
        Pos::Det,
        Pos::Prep,
        Pos::Wh,
        Pos::Rel,
        Pos::Punct,
        Pos::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Pos::NounSg => "noun-sg",
            Pos::NounPl => "noun-pl",
            Pos::Proper => "proper",
            Pos::VerbPres => "verb-pres",
            Pos::VerbPast => "verb-past",
            Pos::VerbPastPart => "verb-pastpart",
            Pos::Det => "det",
            Pos::Prep => "prep",
            Pos::Wh => "wh",
            Pos::Rel => "rel",
            Pos::Punct => "punct",
            Pos::Other => "other",
        }
    }

    pub fn is_noun(self) -> bool {
        matches!(self, Pos::NounSg | Pos::NounPl)
    }

    pub fn is_verb(self) -> bool {
        matches!(self, Pos::VerbPres | Pos::VerbPast | Pos::VerbPastPart)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pos {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pos::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown part of speech '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub lemma: String,
    pub pos: Vec<Pos>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("lexicon line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("irregular verb '{past}' maps to '{present}', which is not a present-tense lexicon entry")]
    DanglingIrregular { past: String, present: String },
}

/// Word list with lemmas and tags, plus the irregular-verb and
/// countability tables.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: HashMap<String, LexEntry>,
    irregular: HashMap<String, String>,
    uncountable: HashMap<String, bool>,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

impl Lexicon {
    /// Loads `surface<TAB>lemma<TAB>pos[,pos...]` lines and
    /// `past_form<TAB>present_form` irregular lines.
    pub fn parse(entries: &str, irregular: &str) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for (line, l) in data_lines(entries) {
            let cols: Vec<&str> = l.split('\t').collect();
            if cols.len() != 3 {
                return Err(LexiconError::Syntax {
                    line,
                    message: format!("expected 3 tab-separated columns, found {}", cols.len()),
                });
            }
            let lemma = cols[1].trim();
            if lemma.is_empty() {
                return Err(LexiconError::Syntax {
                    line,
                    message: "empty lemma".into(),
                });
            }
            let pos = cols[2]
                .split(',')
                .map(|p| p.trim().parse::<Pos>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|message| LexiconError::Syntax { line, message })?;
            lex.entries.insert(
                cols[0].trim().to_string(),
                LexEntry {
                    lemma: lemma.to_string(),
                    pos,
                },
            );
        }
        for (line, l) in data_lines(irregular) {
            let cols: Vec<&str> = l.split('\t').collect();
            if cols.len() != 2 {
                return Err(LexiconError::Syntax {
                    line,
                    message: "expected past_form<TAB>present_form".into(),
                });
            }
            let (past, present) = (cols[0].trim(), cols[1].trim());
            let ok = lex
                .entries
                .get(present)
                .is_some_and(|e| e.pos.contains(&Pos::VerbPres));
            if !ok {
                return Err(LexiconError::DanglingIrregular {
                    past: past.into(),
                    present: present.into(),
                });
            }
            lex.irregular.insert(past.to_string(), present.to_string());
        }
        Ok(lex)
    }

    /// Adds `noun<TAB>countable|mass` lines. Nouns not listed are countable.
    pub fn with_countability(mut self, text: &str) -> Result<Self, LexiconError> {
        for (line, l) in data_lines(text) {
            let cols: Vec<&str> = l.split('\t').collect();
            let flag = match cols.get(1).map(|s| s.trim()) {
                Some("countable") => true,
                Some("mass") => false,
                _ => {
                    return Err(LexiconError::Syntax {
                        line,
                        message: "expected noun<TAB>countable|mass".into(),
                    })
                }
            };
            self.uncountable.insert(cols[0].trim().to_string(), flag);
        }
        Ok(self)
    }

    pub fn lookup(&self, surface: &str) -> Option<&LexEntry> {
        self.entries.get(surface)
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains_key(surface)
    }

    pub fn irregular_present(&self, past: &str) -> Option<&str> {
        self.irregular.get(past).map(String::as_str)
    }

    pub fn is_countable(&self, lemma: &str) -> bool {
        self.uncountable.get(lemma).copied().unwrap_or(true)
    }

    /// True if `surface` can be read as a past participle.
    pub fn can_be_participle(&self, surface: &str) -> bool {
        self.lookup(&surface.to_lowercase())
            .is_some_and(|e| e.pos.contains(&Pos::VerbPastPart))
    }

    /// Present-tense base form of a past-tense verb: the irregular table
    /// first, then the lexicon lemma, then `-ed` stripping.
    pub fn present_base(&self, surface: &str) -> String {
        let lower = surface.to_lowercase();
        if let Some(p) = self.irregular_present(&lower) {
            return p.to_string();
        }
        if let Some(e) = self.lookup(&lower) {
            if e.pos.iter().any(|p| p.is_verb()) {
                return e.lemma.clone();
            }
        }
        strip_ed(&lower)
    }
}

fn strip_ed(word: &str) -> String {
    let Some(stem) = word.strip_suffix("ed") else {
        return word.to_string();
    };
    let b = stem.as_bytes();
    if let Some(base) = stem.strip_suffix('i') {
        return format!("{base}y");
    }
    if b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2] && !matches!(b[b.len() - 1], b'l' | b's' | b'z') {
        return stem[..stem.len() - 1].to_string();
    }
    stem.to_string()
}

/// Third-person singular present form of a base verb.
pub fn third_singular(base: &str) -> String {
    match base {
        "be" => return "is".into(),
        "have" => return "has".into(),
        _ => {}
    }
    let vowel = |c: char| "aeiou".contains(c);
    if let Some(stem) = base.strip_suffix('y') {
        if !stem.ends_with(vowel) {
            return format!("{stem}ies");
        }
    }
    if ["s", "x", "z", "ch", "sh", "o"].iter().any(|s| base.ends_with(s)) {
        return format!("{base}es");
    }
    format!("{base}s")
}

/// Plural present form of a base verb.
pub fn plural_present(base: &str) -> String {
    match base {
        "be" => "are".into(),
        _ => base.into(),
    }
}
