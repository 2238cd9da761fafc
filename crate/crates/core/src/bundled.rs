//! Data files shipped with the crate: lexicon, ontology, learned lvps,
//! background rules and the desk-scale fixture corpus.

use crate::engine::{ingest_kb, parse_rules, FactBase, Rule};
use crate::frames::{EntityRegistry, Ontology, RoleClassMap};
use crate::learner::{Annotation, LvpStore};
use crate::paraphrase::{AdhocRule, Lexicon, Paraphraser};
use crate::pipeline::Pipeline;

pub const LEXICON: &str = include_str!("../data/lexicon.tsv");
pub const IRREGULAR: &str = include_str!("../data/irregular.tsv");
pub const COUNTABILITY: &str = include_str!("../data/countability.tsv");
pub const ADHOC_RULES: &str = include_str!("../data/adhoc.tsv");
pub const FRAMES: &str = include_str!("../data/frames.pl");
pub const ROLE_MAP: &str = include_str!("../data/roles.map");
pub const NOUN_CLASSES: &str = include_str!("../data/nouns.map");
pub const ANNOTATIONS: &str = include_str!("../data/annotations.pl");
pub const LVPS: &str = include_str!("../data/lvps.pl");
pub const RULES: &str = include_str!("../data/rules.cnl");
pub const FIXTURE_KB: &str = include_str!("../data/fixture/kb.txt");
pub const FIXTURE_QUESTIONS: &str = include_str!("../data/fixture/questions.tsv");
/// The fixture questions with ten labels made wrong on purpose.
pub const FIXTURE_CORRUPTED: &str = include_str!("../data/fixture/corrupted.tsv");
/// `line<TAB>cause` for each corrupted label.
pub const FIXTURE_CORRUPTIONS: &str = include_str!("../data/fixture/corruptions.tsv");

/// Paraphraser over the bundled lexicon and rule table.
pub fn paraphraser() -> Paraphraser {
    let lexicon = Lexicon::parse(LEXICON, IRREGULAR)
        .and_then(|l| l.with_countability(COUNTABILITY))
        .expect("bundled lexicon is valid");
    let rules = AdhocRule::parse_file(ADHOC_RULES).expect("bundled rules are valid");
    Paraphraser::new(lexicon, rules)
}

pub fn ontology() -> Ontology {
    Ontology::parse(FRAMES).expect("bundled frames are valid")
}

pub fn role_map() -> RoleClassMap {
    RoleClassMap::parse(ROLE_MAP).expect("bundled role map is valid")
}

/// A registry holding only the common-noun classes.
pub fn noun_registry() -> EntityRegistry {
    EntityRegistry::new()
        .with_noun_classes(NOUN_CLASSES)
        .expect("bundled noun classes are valid")
}

pub fn annotations() -> Vec<Annotation> {
    Annotation::parse_file(ANNOTATIONS).expect("bundled annotations are valid")
}

pub fn lvps() -> LvpStore {
    LvpStore::parse(LVPS).expect("bundled lvps are valid")
}

/// The bundled pipeline with no fact-base entities registered.
pub fn pipeline() -> Pipeline {
    Pipeline {
        paraphraser: paraphraser(),
        ontology: ontology(),
        role_map: role_map(),
        registry: noun_registry(),
        lvps: lvps(),
    }
}

pub fn rules(pipeline: &Pipeline) -> Vec<Rule> {
    parse_rules(RULES, pipeline).expect("bundled rules are valid")
}

pub fn fixture_kb() -> FactBase {
    ingest_kb(FIXTURE_KB).expect("fixture kb is valid")
}
