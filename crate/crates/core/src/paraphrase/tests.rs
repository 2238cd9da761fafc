use super::*;
use crate::bundled;

fn tags(tokens: &[Token]) -> Vec<(String, Pos)> {
    tokens.iter().map(|t| (t.surface.clone(), t.pos)).collect()
}

fn norm(text: &str) -> String {
    render_tokens(&bundled::paraphraser().paraphrase(text).unwrap())
}

#[test]
fn tokenize_bracketed_entity() {
    let p = bundled::paraphraser();
    let toks = p.tokenize("who directed [Bright Star]").unwrap();
    assert_eq!(
        tags(&toks),
        vec![
            ("who".into(), Pos::Wh),
            ("directed".into(), Pos::VerbPast),
            ("Bright-Star".into(), Pos::Proper)
        ]
    );
    assert_eq!(toks[2].lemma, "Bright Star");
    assert!(toks[2].entity);
    assert_eq!(toks.iter().map(|t| t.index).collect::<Vec<_>>(), vec![1, 2, 3]);
}

#[test]
fn tokenize_lexicon_lookup() {
    let p = bundled::paraphraser();
    let toks = p.tokenize("a film").unwrap();
    assert_eq!(tags(&toks), vec![("a".into(), Pos::Det), ("film".into(), Pos::NounSg)]);
}

#[test]
fn tokenize_keeps_unbracketed_names_apart() {
    let p = bundled::paraphraser();
    let toks = p.tokenize("Steven Spielberg directs a film").unwrap();
    assert_eq!(toks[0].pos, Pos::Proper);
    assert_eq!(toks[1].pos, Pos::Proper);
    assert_eq!(toks.len(), 5);
}

#[test]
fn tokenize_rejects_bad_brackets() {
    let p = bundled::paraphraser();
    for bad in ["who directed [Bright Star", "who directed Bright] Star", "[a [b] c]", "who [ ]", "   "] {
        assert!(
            matches!(p.tokenize(bad), Err(ParaphraseError::MalformedQuestion(_))),
            "{bad}"
        );
    }
}

#[test]
fn participle_clause_becomes_relative_clause() {
    assert_eq!(
        norm("Who watched a film directed by Steven Spielberg"),
        "Who watches a film that is directed by Steven-Spielberg"
    );
}

#[test]
fn premodifying_participle_is_reordered() {
    assert_eq!(
        norm("Who appears in XYZ directed films"),
        "Who appears in some films that are directed by XYZ"
    );
}

#[test]
fn conformant_sentence_unchanged() {
    assert_eq!(norm("a director directs a film"), "a director directs a film");
}

#[test]
fn tense_agrees_with_plural_subject() {
    assert_eq!(
        norm("which films shared an actor with [Titanic]"),
        "which films share an actor with Titanic"
    );
    assert_eq!(
        norm("what were the genres of the films starred by [Tom Hanks]"),
        "what are the genres of the films that are starred by Tom-Hanks"
    );
}

#[test]
fn adhoc_rules_and_articles() {
    assert_eq!(
        norm("what are the films that have the same actor of [Bright Star]"),
        "which films share an actor with Bright-Star"
    );
    assert_eq!(norm("who is actor of [Pascal Laugier]"), "who is an actor of Pascal-Laugier");
    assert_eq!(
        norm("what are the release years of the movies directed by [Thomas Mann]"),
        "what are the release-years of the movies that are directed by Thomas-Mann"
    );
}

#[test]
fn question_mark_is_kept_as_punctuation() {
    assert_eq!(
        norm("Who wrote a film that shares a director with Titanic?"),
        "Who writes a film that shares a director with Titanic?"
    );
}

#[test]
fn entity_spans_are_not_rewritten() {
    // "Directed" inside the span would otherwise trigger the participle rule.
    let out = norm("who acted in the films directed by [Films Directed By Me]");
    assert_eq!(out, "who acts in the films that are directed by Films-Directed-By-Me");
}
