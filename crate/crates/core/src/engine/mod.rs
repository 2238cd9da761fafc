//! Movie fact base, derived-relation rules and query evaluation.

mod eval;
mod rules;

pub use eval::{evaluate, evaluate_with, AnswerSet, EvalError, EvalOptions};
pub use rules::{define_rule_from_cnl, parse_rules, Rule, RuleError};

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::frames::EntityRegistry;

/// Person-valued attributes.
pub const PERSON_ROLES: [&str; 3] = ["Actor", "Director", "Writer"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("kb line {line}: {message}")]
pub struct IngestError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MovieFact {
    pub film_name: String,
    pub id: usize,
    pub attribute: String,
    pub value: String,
}

/// Maps a triple relation to the attribute it fills.
pub fn attribute_of(relation: &str) -> Option<&'static str> {
    Some(match relation {
        "directed_by" => "Director",
        "starred_actors" => "Actor",
        "written_by" => "Writer",
        "release_year" => "Release Year",
        "has_genre" => "Genre",
        "in_language" => "Language",
        "has_imdb_rating" => "Rating",
        _ => return None,
    })
}

fn class_of(attribute: &str) -> &'static str {
    match attribute {
        "Actor" | "Director" | "Writer" => "person",
        "Release Year" => "year",
        "Genre" => "genre",
        "Language" => "language",
        _ => "rating",
    }
}

/// One film entity: all facts sharing an Id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Film {
    pub id: usize,
    pub name: String,
    pub attributes: BTreeMap<String, Vec<String>>,
}

impl Film {
    pub fn values(&self, attribute: &str) -> &[String] {
        self.attributes.get(attribute).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Facts grouped into film entities, with indexes on film name and on
/// (attribute, value).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactBase {
    films: Vec<Film>,
    by_name: HashMap<String, Vec<usize>>,
    by_value: HashMap<(String, String), Vec<usize>>,
}

impl FactBase {
    pub fn films(&self) -> &[Film] {
        &self.films
    }

    pub fn film(&self, id: usize) -> Option<&Film> {
        self.films.get(id)
    }

    pub fn is_empty(&self) -> bool {
        self.films.is_empty()
    }

    pub fn ids_named(&self, name: &str) -> &[usize] {
        self.by_name.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn ids_with(&self, attribute: &str, value: &str) -> &[usize] {
        self.by_value
            .get(&(attribute.to_string(), value.to_string()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn facts(&self) -> impl Iterator<Item = MovieFact> + '_ {
        self.films.iter().flat_map(|f| {
            f.attributes.iter().flat_map(move |(a, vs)| {
                vs.iter().map(move |v| MovieFact {
                    film_name: f.name.clone(),
                    id: f.id,
                    attribute: a.clone(),
                    value: v.clone(),
                })
            })
        })
    }

    fn push_fact(&mut self, id: usize, name: &str, attribute: &str, value: &str) {
        if id == self.films.len() {
            self.films.push(Film {
                id,
                name: name.to_string(),
                attributes: BTreeMap::new(),
            });
            self.by_name.entry(name.to_string()).or_default().push(id);
        }
        let values = self.films[id].attributes.entry(attribute.to_string()).or_default();
        if values.iter().any(|v| v == value) {
            return;
        }
        values.push(value.to_string());
        let ids = self.by_value.entry((attribute.to_string(), value.to_string())).or_default();
        if ids.last() != Some(&id) {
            ids.push(id);
        }
    }

    /// A copy in which films sharing a title are one film.
    pub fn merged_by_title(&self) -> FactBase {
        let mut out = FactBase::default();
        let mut ids: HashMap<&str, usize> = HashMap::new();
        for f in &self.films {
            let next = ids.len();
            let id = *ids.entry(&f.name).or_insert(next);
            for (a, vs) in &f.attributes {
                for v in vs {
                    out.push_fact(id, &f.name, a, v);
                }
            }
        }
        out
    }

    /// Registers every film title and attribute value with its class.
    pub fn register_entities(&self, registry: &mut EntityRegistry) {
        for f in &self.films {
            registry.register(&f.name, "film-title");
            for (a, vs) in &f.attributes {
                for v in vs {
                    registry.register(v, class_of(a));
                }
            }
        }
    }
}

/// Reads `Name|relation|Value` lines. A new film Id starts whenever the
/// name differs from the previous line's.
pub fn ingest_kb(text: &str) -> Result<FactBase, IngestError> {
    let mut kb = FactBase::default();
    let mut current: Option<(String, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| IngestError { line: i + 1, message };
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, relation, value] = parts[..] else {
            return Err(err(format!("expected Name|relation|Value, found '{line}'")));
        };
        if name.is_empty() || value.is_empty() {
            return Err(err("empty film name or value".into()));
        }
        let attribute = attribute_of(relation).ok_or_else(|| err(format!("unknown relation '{relation}'")))?;
        let id = match &current {
            Some((n, id)) if n == name => *id,
            _ => kb.films.len(),
        };
        current = Some((name.to_string(), id));
        kb.push_fact(id, name, attribute, value);
    }
    Ok(kb)
}
