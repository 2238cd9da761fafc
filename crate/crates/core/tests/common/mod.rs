//! Brute-force answers for the fixture question shapes, computed straight
//! from the triple file without the library's fact base or query engine.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

pub fn data_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

pub fn read_data(rel: &str) -> String {
    std::fs::read_to_string(data_path(rel)).unwrap()
}

pub struct OracleFilm {
    pub name: String,
    pub facts: BTreeMap<String, BTreeSet<String>>,
}

impl OracleFilm {
    fn get(&self, relation: &str) -> BTreeSet<String> {
        self.facts.get(relation).cloned().unwrap_or_default()
    }
}

/// Films in chunk order: a new film whenever the title changes.
pub fn oracle_films(kb_text: &str) -> Vec<OracleFilm> {
    let mut films: Vec<OracleFilm> = Vec::new();
    for line in kb_text.lines().filter(|l| !l.trim().is_empty()) {
        let mut parts = line.split('|');
        let (name, rel, value) = (parts.next().unwrap(), parts.next().unwrap(), parts.next().unwrap());
        if films.last().is_none_or(|f| f.name != name) {
            films.push(OracleFilm {
                name: name.to_string(),
                facts: BTreeMap::new(),
            });
        }
        films
            .last_mut()
            .unwrap()
            .facts
            .entry(rel.to_string())
            .or_default()
            .insert(value.to_string());
    }
    films
}

/// Question prefixes (text before the bracketed entity) and the shape each
/// one belongs to.
pub const SHAPES: &[(&str, usize)] = &[
    ("who directed the films written by", 1),
    ("who acted in the films directed by", 2),
    ("who appeared in the movies directed by", 2),
    ("which films share an actor with", 3),
    ("what are the films that have the same actor of", 3),
    ("which films share the same actor of", 3),
    ("what are the release years of the films directed by", 4),
    ("who wrote a film that shares a director with", 5),
    ("who wrote the films that share a director with", 5),
    ("who is an actor of", 6),
    ("who starred with", 7),
    ("what are the genres of the films starred by", 8),
    ("who appeared in the films written by", 9),
    ("who acted in the films written by", 9),
    ("what are the release years of the films that share an actor with", 10),
];

/// The shape of a question and its bracketed constant.
pub fn shape_of(question: &str) -> Option<(usize, String)> {
    let (prefix, rest) = question.split_once('[')?;
    let constant = rest.strip_suffix(']')?.to_string();
    let shape = SHAPES.iter().find(|(p, _)| *p == prefix.trim())?.1;
    Some((shape, constant))
}

const D: &str = "directed_by";
const W: &str = "written_by";
const S: &str = "starred_actors";
const Y: &str = "release_year";
const G: &str = "has_genre";

/// Answers by nested loops over films.
pub fn oracle_answer(films: &[OracleFilm], question: &str) -> Option<BTreeSet<String>> {
    let (shape, c) = shape_of(question)?;
    let mut out = BTreeSet::new();
    let has = |f: &OracleFilm, rel: &str| f.get(rel).contains(&c);
    let shares = |f: &OracleFilm, g: &OracleFilm, rel: &str| !f.get(rel).is_disjoint(&g.get(rel));
    for (i, f) in films.iter().enumerate() {
        match shape {
            1 if has(f, W) => out.extend(f.get(D)),
            2 | 4 if has(f, D) => out.extend(f.get(if shape == 2 { S } else { Y })),
            6 if has(f, D) || has(f, W) => out.extend(f.get(S).into_iter().filter(|a| *a != c)),
            7 if has(f, S) => out.extend(f.get(S).into_iter().filter(|a| *a != c)),
            8 if has(f, S) => out.extend(f.get(G)),
            9 if has(f, W) => out.extend(f.get(S)),
            3 | 5 | 10 if f.name == c => {
                let rel = if shape == 5 { D } else { S };
                for (j, g) in films.iter().enumerate() {
                    if i != j && shares(f, g, rel) {
                        match shape {
                            3 => {
                                out.insert(g.name.clone());
                            }
                            5 => out.extend(g.get(W)),
                            _ => out.extend(g.get(Y)),
                        }
                    }
                }
            }
            _ => {}
        }
    }
    Some(out)
}
