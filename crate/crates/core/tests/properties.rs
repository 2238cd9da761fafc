mod common;

use proptest::prelude::*;

use cnlqa::bundled;
use cnlqa::frameparser::{CandidateParse, Filler};
use cnlqa::learner::{GrammaticalPattern, LvpStore};
use cnlqa::ulrq::{alternatives, remove_subsumed, subsumes};

use common::{oracle_answer, oracle_films, read_data, SHAPES};

const ROLES: [&str; 4] = ["Actor", "Director", "Writer", "FilmNm"];
const PATTERNS: [&str; 3] = ["verb->subject", "verb->object", "verb->pp,pp->dep"];

fn parse_strategy() -> impl Strategy<Value = CandidateParse> {
    let filler = (0..ROLES.len(), 1..4usize, 0..PATTERNS.len());
    (prop::bool::ANY, 1..3usize, prop::collection::vec(filler, 1..4)).prop_map(|(coop, lu, fs)| {
        let fillers = fs
            .into_iter()
            .map(|(r, w, p)| Filler {
                role: ROLES[r].to_string(),
                word: w,
                pattern: GrammaticalPattern::parse(PATTERNS[p]).unwrap(),
            })
            .collect();
        CandidateParse::new(if coop { "Coop" } else { "Movie" }, lu, fillers)
    })
}

proptest! {
    #[test]
    fn subsumption_is_reflexive_and_transitive(a in parse_strategy(), b in parse_strategy(), c in parse_strategy()) {
        prop_assert!(subsumes(&a, &a));
        if subsumes(&a, &b) && subsumes(&b, &c) {
            prop_assert!(subsumes(&a, &c));
        }
    }

    #[test]
    fn alternatives_are_symmetric_and_irreflexive(a in parse_strategy(), b in parse_strategy()) {
        prop_assert!(!alternatives(&a, &a));
        prop_assert_eq!(alternatives(&a, &b), alternatives(&b, &a));
    }

    #[test]
    fn removing_subsumed_is_idempotent_and_order_free(mut ps in prop::collection::vec(parse_strategy(), 0..6)) {
        let once = remove_subsumed(&ps);
        prop_assert_eq!(remove_subsumed(&once), once.clone());
        ps.reverse();
        prop_assert_eq!(remove_subsumed(&ps), once);
    }
}

const WORDS: [&str; 24] = [
    "who", "what", "which", "a", "the", "film", "films", "movies", "directed", "by", "wrote", "acted", "in",
    "starred", "with", "actor", "of", "is", "are", "share", "same", "[Jaws]", "[Bill Murray]", "written",
];

proptest! {
    #[test]
    fn normalize_is_idempotent(words in prop::collection::vec(prop::sample::select(&WORDS[..]), 1..12)) {
        let para = bundled::paraphraser();
        if let Ok(once) = para.paraphrase(&words.join(" ")) {
            prop_assert_eq!(para.normalize(&once), once);
        }
    }
}

#[test]
fn random_constants_match_the_oracle() {
    let kb_text = read_data("fixture/kb.txt");
    let films = oracle_films(&kb_text);
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let rules = bundled::rules(&pipeline);
    let mut people: Vec<String> = films
        .iter()
        .flat_map(|f| {
            ["directed_by", "written_by", "starred_actors"]
                .iter()
                .flat_map(|r| f.facts.get(*r).into_iter().flatten().cloned())
        })
        .collect();
    people.sort();
    people.dedup();
    let mut titles: Vec<String> = films.iter().map(|f| f.name.clone()).collect();
    titles.sort();
    titles.dedup();

    let mut runner = proptest::test_runner::TestRunner::new(proptest::test_runner::Config::with_cases(300));
    let strategy = (0..SHAPES.len(), 0..people.len(), 0..titles.len());
    runner
        .run(&strategy, |(s, p, t)| {
            let (prefix, shape) = SHAPES[s];
            let constant = if [3, 5, 10].contains(&shape) { &titles[t] } else { &people[p] };
            let question = format!("{prefix} [{constant}]");
            let expected = oracle_answer(&films, &question).unwrap();
            let got = pipeline.answer(&question, &kb, &rules);
            prop_assert!(got.is_ok(), "{}: {:?}", question, got);
            prop_assert_eq!(got.unwrap().values, expected, "{}", question);
            Ok(())
        })
        .unwrap();
}

#[test]
fn bundled_lvps_match_the_annotations() {
    let para = bundled::paraphraser();
    let mut store = LvpStore::new();
    for a in bundled::annotations() {
        store.learn(&a, &para).unwrap();
    }
    assert_eq!(store.to_text(), bundled::LVPS);
}
