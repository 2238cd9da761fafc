//! Frame ontology, role type constraints, the entity registry and
//! class-membership disambiguation of candidate parses.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::drs::Drs;
use crate::frameparser::CandidateParse;
use crate::paraphrase::Pos;
use crate::term::{parse_clauses, Term};

/// Semantic class accepted by every role filler.
pub const ANY_CLASS: &str = "any";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("frame file line {line}: {message}")]
    Load { line: usize, message: String },
    #[error("unknown constraint '{0}'")]
    UnknownConstraint(String),
    #[error("role map line {line}: {message}")]
    RoleMap { line: usize, message: String },
    #[error("role map has no class for {frame}.{role}")]
    MissingRole { frame: String, role: String },
    #[error("noun class line {line}: {message}")]
    NounClass { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    Integer,
    Year,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::Integer => "Integer",
            Constraint::Year => "Year",
        }
    }

    pub fn check(self, value: &str) -> bool {
        let value = value.trim();
        match self {
            Constraint::Integer => parse_decimal(value).is_some(),
            Constraint::Year => parse_decimal(value).is_some_and(is_year),
        }
    }
}

impl std::str::FromStr for Constraint {
    type Err = FrameError;

    fn from_str(s: &str) -> Result<Self, FrameError> {
        match s {
            "Integer" => Ok(Constraint::Integer),
            "Year" => Ok(Constraint::Year),
            other => Err(FrameError::UnknownConstraint(other.to_string())),
        }
    }
}

fn parse_decimal(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn is_year(n: i64) -> bool {
    (1800..=2100).contains(&n)
}

/// Checks `value` against a constraint given by name.
pub fn check_constraint(constraint: &str, value: &str) -> Result<bool, FrameError> {
    Ok(constraint.parse::<Constraint>()?.check(value))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleDef {
    pub name: String,
    pub synsets: Vec<String>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameDef {
    pub name: String,
    pub roles: Vec<RoleDef>,
}

impl FrameDef {
    pub fn role(&self, name: &str) -> Option<&RoleDef> {
        self.roles.iter().find(|r| r.name == name)
    }

    /// Position of a role in the frame's declaration order.
    pub fn role_index(&self, name: &str) -> Option<usize> {
        self.roles.iter().position(|r| r.name == name)
    }
}

/// Parses `fp(Name,[role(RName,[synset,...],[constraint,...]),...]).` facts.
pub fn load_frames(text: &str) -> Result<Vec<FrameDef>, FrameError> {
    let clauses = parse_clauses(text).map_err(|e| FrameError::Load {
        line: e.line,
        message: e.message,
    })?;
    let mut frames: Vec<FrameDef> = Vec::new();
    for (line, clause) in clauses {
        let err = |message: String| FrameError::Load { line, message };
        let args = clause
            .as_compound("fp", 2)
            .ok_or_else(|| err(format!("expected fp/2, found {clause}")))?;
        let name = args[0]
            .as_atom()
            .ok_or_else(|| err("frame name must be an atom".into()))?;
        if frames.iter().any(|f| f.name == name) {
            return Err(err(format!("duplicate frame '{name}'")));
        }
        let role_terms = args[1]
            .as_list()
            .ok_or_else(|| err("role list expected".into()))?;
        if role_terms.is_empty() {
            return Err(err(format!("frame '{name}' has no roles")));
        }
        let mut roles: Vec<RoleDef> = Vec::new();
        for rt in role_terms {
            let role = parse_role(rt).map_err(&err)?;
            if roles.iter().any(|r| r.name == role.name) {
                return Err(err(format!("duplicate role '{}' in '{name}'", role.name)));
            }
            roles.push(role);
        }
        frames.push(FrameDef {
            name: name.to_string(),
            roles,
        });
    }
    Ok(frames)
}

fn parse_role(t: &Term) -> Result<RoleDef, String> {
    let args = t
        .as_compound("role", 3)
        .ok_or_else(|| format!("expected role/3, found {t}"))?;
    let name = args[0].as_atom().ok_or("role name must be an atom")?;
    let atoms = |t: &Term, what: &str| -> Result<Vec<String>, String> {
        t.as_list()
            .ok_or(format!("{what} list expected"))?
            .iter()
            .map(|a| a.as_atom().map(str::to_string).ok_or(format!("{what} must be atoms")))
            .collect()
    };
    let synsets = atoms(&args[1], "synset")?;
    let constraints = atoms(&args[2], "constraint")?
        .iter()
        .map(|c| c.parse().map_err(|e: FrameError| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(RoleDef {
        name: name.to_string(),
        synsets,
        constraints,
    })
}

/// The loaded frames indexed by name.
#[derive(Debug, Clone, Default)]
pub struct Ontology {
    frames: Vec<FrameDef>,
}

impl Ontology {
    pub fn new(frames: Vec<FrameDef>) -> Self {
        Ontology { frames }
    }

    pub fn parse(text: &str) -> Result<Self, FrameError> {
        load_frames(text).map(Ontology::new)
    }

    pub fn frames(&self) -> &[FrameDef] {
        &self.frames
    }

    pub fn frame(&self, name: &str) -> Option<&FrameDef> {
        self.frames.iter().find(|f| f.name == name)
    }

    pub fn role(&self, frame: &str, role: &str) -> Option<&RoleDef> {
        self.frame(frame)?.role(role)
    }
}

/// The class part before any `:` refinement: `person:actor` -> `person`.
pub fn base_class(class: &str) -> &str {
    class.split(':').next().unwrap_or(class)
}

/// Required semantic class for each frame role.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoleClassMap {
    map: HashMap<(String, String), String>,
}

impl RoleClassMap {
    /// Parses `Frame.Role=class` lines. Role names may contain spaces;
    /// blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, FrameError> {
        let mut map = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| FrameError::RoleMap {
                line: i + 1,
                message: message.to_string(),
            };
            let (key, class) = line.rsplit_once('=').ok_or_else(|| err("missing '='"))?;
            let (frame, role) = key.split_once('.').ok_or_else(|| err("missing '.'"))?;
            let (frame, role, class) = (frame.trim(), role.trim(), class.trim());
            if frame.is_empty() || role.is_empty() || class.is_empty() {
                return Err(err("empty frame, role or class"));
            }
            if map
                .insert((frame.to_string(), role.to_string()), class.to_string())
                .is_some()
            {
                return Err(err("duplicate entry"));
            }
        }
        Ok(RoleClassMap { map })
    }

    pub fn class(&self, frame: &str, role: &str) -> Option<&str> {
        self.map
            .get(&(frame.to_string(), role.to_string()))
            .map(String::as_str)
    }

    /// Fails on the first role of `ontology` that has no class.
    pub fn check_total(&self, ontology: &Ontology) -> Result<(), FrameError> {
        for f in ontology.frames() {
            for r in &f.roles {
                if self.class(&f.name, &r.name).is_none() {
                    return Err(FrameError::MissingRole {
                        frame: f.name.clone(),
                        role: r.name.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Semantic classes of known constants and of common nouns.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntityRegistry {
    classes: HashMap<String, BTreeSet<String>>,
    noun_classes: HashMap<String, String>,
}

impl EntityRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `noun=class` lines.
    pub fn with_noun_classes(mut self, text: &str) -> Result<Self, FrameError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (noun, class) = line.split_once('=').ok_or(FrameError::NounClass {
                line: i + 1,
                message: "missing '='".into(),
            })?;
            self.noun_classes
                .insert(noun.trim().to_string(), class.trim().to_string());
        }
        Ok(self)
    }

    /// Registers `value` under `class`. A value registered as `year` must
    /// be an integer in the year range; otherwise the year class is skipped.
    /// Any value that is such an integer also gets the year class.
    pub fn register(&mut self, value: &str, class: &str) {
        let value = value.trim();
        let year = Constraint::Year.check(value);
        let set = self.classes.entry(value.to_string()).or_default();
        if class != "year" || year {
            set.insert(class.to_string());
        }
        if year {
            set.insert("year".to_string());
        }
    }

    pub fn classes_of(&self, value: &str) -> Option<&BTreeSet<String>> {
        self.classes.get(value.trim())
    }

    pub fn is_registered(&self, value: &str) -> bool {
        self.classes.contains_key(value.trim())
    }

    pub fn noun_class(&self, lexeme: &str) -> Option<&str> {
        self.noun_classes.get(lexeme).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Whether a common noun of class `have` can fill a role requiring `want`.
/// A refined noun class (`person:actor`) fits only its own refinement; a
/// generic one (`person`) fits any refinement of it.
pub fn noun_fits(have: &str, want: &str) -> bool {
    want == ANY_CLASS || have == want || have == base_class(want)
}

/// Checks one filler against a role. Wh words always fit; proper nouns
/// must pass the role's constraints and, when registered, carry the role's
/// base class; unregistered names are not excluded.
pub fn filler_fits(
    drs: &Drs,
    word: usize,
    role: &RoleDef,
    class: &str,
    registry: &EntityRegistry,
) -> bool {
    let Some(tok) = drs.token(word) else {
        return false;
    };
    match tok.pos {
        Pos::Wh | Pos::Rel => true,
        Pos::Proper => {
            if !role.constraints.iter().all(|c| c.check(&tok.lemma)) {
                return false;
            }
            match registry.classes_of(&tok.lemma) {
                None => true,
                Some(set) => class == ANY_CLASS || set.contains(base_class(class)),
            }
        }
        _ => match registry.noun_class(&tok.lemma) {
            Some(have) => noun_fits(have, class),
            None => class == ANY_CLASS,
        },
    }
}

/// True iff every filler of `parse` fits its role's constraints and class.
pub fn disambiguate(
    parse: &CandidateParse,
    drs: &Drs,
    ontology: &Ontology,
    registry: &EntityRegistry,
    role_map: &RoleClassMap,
) -> bool {
    parse.fillers.iter().all(|f| {
        let (Some(role), Some(class)) = (
            ontology.role(&parse.frame, &f.role),
            role_map.class(&parse.frame, &f.role),
        ) else {
            return false;
        };
        filler_fits(drs, f.word, role, class, registry)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "fp('Movie',[role('FilmNm',['bn:00034471n'],[]),
        role('Id',['bn:00045822n'],['Integer']),
        role('Actor',['bn:00001176n'],[]),
        role('Release Year',['bn:00078738n'],['Year']),
        role('Director',['bn:00027368n '],[]),
        role('Writer',['bn:00034485n'],[]),
        role('Genre',['bn:00037744n'],[])]).";

    #[test]
    fn loads_movie_frame() {
        let frames = load_frames(EXAMPLE).unwrap();
        assert_eq!(frames.len(), 1);
        let movie = &frames[0];
        assert_eq!(movie.roles.len(), 7);
        assert_eq!(movie.role("Release Year").unwrap().constraints, vec![Constraint::Year]);
        assert_eq!(movie.role("Director").unwrap().synsets, vec!["bn:00027368n "]);
    }

    #[test]
    fn load_errors() {
        assert!(load_frames("").unwrap().is_empty());
        let twice = format!("{EXAMPLE}\n{EXAMPLE}");
        assert!(matches!(load_frames(&twice), Err(FrameError::Load { line: 8, .. })));
        let dup_role = "fp('X',[role(a,[],[]),role(a,[],[])]).";
        assert!(load_frames(dup_role).is_err());
        let bad = "fp('X',[role(a,[],['Colour'])]).";
        let e = load_frames(bad).unwrap_err();
        assert!(e.to_string().contains("Colour"), "{e}");
    }

    #[test]
    fn constraints() {
        assert_eq!(check_constraint("Year", "1995"), Ok(true));
        assert_eq!(check_constraint("Year", "Titanic"), Ok(false));
        assert_eq!(check_constraint("Year", "1799"), Ok(false));
        assert_eq!(check_constraint("Integer", "72"), Ok(true));
        assert_eq!(check_constraint("Integer", "7x"), Ok(false));
        assert!(check_constraint("Colour", "red").is_err());
    }

    #[test]
    fn role_map_with_spaces() {
        let m = RoleClassMap::parse("# c\nMovie.Release Year=year\nMovie.FilmNm=film-title\n").unwrap();
        assert_eq!(m.class("Movie", "Release Year"), Some("year"));
        let ont = Ontology::parse(EXAMPLE).unwrap();
        assert!(matches!(m.check_total(&ont), Err(FrameError::MissingRole { .. })));
    }

    #[test]
    fn registry_years() {
        let mut r = EntityRegistry::new();
        r.register("1941", "film-title");
        r.register("Titanic", "film-title");
        r.register("12", "year");
        let c = r.classes_of("1941").unwrap();
        assert!(c.contains("film-title") && c.contains("year"));
        assert!(!r.classes_of("Titanic").unwrap().contains("year"));
        assert!(r.classes_of("12").unwrap().is_empty());
    }

    #[test]
    fn noun_classes() {
        assert!(noun_fits("person", "person:actor"));
        assert!(noun_fits("person:actor", "person:actor"));
        assert!(!noun_fits("person:actor", "person:director"));
        assert!(noun_fits("food", ANY_CLASS));
        assert!(!noun_fits("film-title", "food"));
    }
}
