use super::*;
use crate::bundled;

fn drs(text: &str) -> Drs {
    let toks = bundled::paraphraser().paraphrase(text).unwrap();
    parse_cnl(&toks).unwrap()
}

#[test]
fn director_directs_film() {
    assert_eq!(
        drs("a director directs a film").render(),
        "object(A,director,countable,na,eq,1)-1/2\n\
         object(B,film,countable,na,eq,1)-1/5\n\
         predicate(C,direct,A,B)-1/3\n"
    );
}

#[test]
fn actor_appears_in_film() {
    assert_eq!(
        drs("an actor appears in a film").render(),
        "object(A,actor,countable,na,eq,1)-1/2\n\
         object(B,film,countable,na,eq,1)-1/6\n\
         predicate(C,appear,A)-1/3\n\
         modifier_pp(C,in,B)-1/4\n"
    );
}

#[test]
fn wh_subject_gets_object_and_query() {
    let d = drs("Who directs a film");
    let r = d.render();
    assert!(r.contains("object(A,who,countable,na,eq,1)-1/1"), "{r}");
    assert!(r.contains("predicate(C,direct,A,B)-1/2"), "{r}");
    assert!(r.ends_with("query(A,who)-1/1\n"), "{r}");
    assert_eq!(d.query_object().unwrap().word(), 1);
}

#[test]
fn empty_drs_renders_empty() {
    assert_eq!(Drs::new(vec![], vec![]).render(), "");
}

#[test]
fn repeated_variables() {
    assert!(!drs("a director directs a film").has_repeated_variables());
    let fido = drs("Fido eats Fido");
    assert!(fido.has_repeated_variables());
    assert_eq!(fido.render(), "object(A,'Fido',countable,na,eq,1)-1/1\npredicate(B,eat,A,A)-1/2\n");
    let single = Drs::new(vec![DrsTerm::object(VarRef(1), "film", false, 2)], vec![]);
    assert!(!single.has_repeated_variables());
}

#[test]
fn definite_np_corefers_with_indefinite() {
    let d = drs("If an actor plays in a film then the actor appears in the film");
    let actors: Vec<_> = d.terms.iter().filter(|t| t.lexeme() == "actor").collect();
    assert_eq!(actors.len(), 1);
    let films: Vec<_> = d.terms.iter().filter(|t| t.lexeme() == "film").collect();
    assert_eq!(films.len(), 1);
    let subjects: Vec<_> = d
        .terms
        .iter()
        .filter_map(|t| match t.kind {
            TermKind::Predicate { subject, .. } => Some(subject),
            _ => None,
        })
        .collect();
    assert_eq!(subjects.len(), 2);
    assert_eq!(subjects[0], subjects[1]);
}

#[test]
fn modifier_pp_references_resolve() {
    let d = drs("Who wrote a film that shares a director with Titanic?");
    for t in &d.terms {
        if let TermKind::ModifierPp { pred, dependent, .. } = t.kind {
            assert!(d
                .terms
                .iter()
                .any(|p| p.term_type() == TermType::Predicate && p.own_var() == Some(pred)));
            assert!(d.object_of(dependent).is_some());
        }
    }
}

#[test]
fn out_of_grammar_names_first_offending_token() {
    let toks = bundled::paraphraser().paraphrase("a director directs directs").unwrap();
    match parse_cnl(&toks) {
        Err(DrsError::Unparseable { token, index, .. }) => {
            assert_eq!(token, "directs");
            assert_eq!(index, 4);
        }
        other => panic!("unexpected {other:?}"),
    }
    let toks = bundled::paraphraser().paraphrase("a director directs a").unwrap();
    assert!(matches!(parse_cnl(&toks), Err(DrsError::UnexpectedEnd { .. })));
}

#[test]
fn var_names_roll_over() {
    assert_eq!(var_name(0), "A");
    assert_eq!(var_name(25), "Z");
    assert_eq!(var_name(26), "A1");
}
