use super::*;
use crate::bundled;

fn setup() -> (Pipeline, FactBase, Vec<Rule>) {
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let rules = bundled::rules(&pipeline);
    (pipeline, kb, rules)
}

#[test]
fn question_lines_with_and_without_labels() {
    let qs = parse_questions("who starred with [Bill Murray]\tAndie MacDowell|Dan Aykroyd\n\nwho is an actor of [X]\n");
    assert_eq!(qs.len(), 2);
    assert_eq!(qs[0].label.as_ref().unwrap().len(), 2);
    assert_eq!(qs[1].line, 3);
    assert_eq!(qs[1].label, None);
    let empty = parse_questions("who wrote [Up]\t\n");
    assert_eq!(empty[0].label, Some(AnswerSet::default()));
}

#[test]
fn batch_writes_errors_inline() {
    let (pipeline, kb, rules) = setup();
    let qs = parse_questions("who directed [Jaws]\na director directs [Jaws]\nwho starred with [Nobody Known]\n");
    let out = answer_batch(&qs, &pipeline, &kb, &rules);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "who directed [Jaws]\tSteven Spielberg");
    assert!(lines[1].ends_with("\tERROR:not-a-question"), "{}", lines[1]);
    assert_eq!(lines[2], "who starred with [Nobody Known]\t");
    assert_eq!(answer_batch(&[], &pipeline, &kb, &rules), "");
}

#[test]
fn audit_names_the_cause() {
    let (pipeline, kb, rules) = setup();
    let qs = parse_questions(
        "who starred with [Joan Fontaine]\tLaurence Olivier|Orson Welles\n\
         what are the release years of the films directed by [Thomas Mann]\t1959|1971\n\
         who appeared in the films written by [Bob Peterson]\tEd Asner\n\
         which films share an actor with [1941]\tCasablanca|Jane Eyre|Touch of Evil\n\
         who directed [Jaws]\tJames Cameron\n\
         who directed [Up]\n",
    );
    let report = audit(&qs, &pipeline, &kb, &rules);
    let causes: Vec<Option<Cause>> = report.records.iter().map(|r| r.cause).collect();
    assert_eq!(
        causes,
        [None, Some(Cause::DualRole), Some(Cause::DualRole), Some(Cause::TitleVsYear), Some(Cause::Other)]
    );
    assert_eq!(report.records[0].verdict, Verdict::Match);
    assert_eq!(report.skipped, [(6, "missing label".to_string())]);
    assert!(report.render().contains("# 5 audited, 1 match, 4 mislabeled, 1 skipped"));
}

#[test]
fn merged_title_label_is_namesake() {
    let (pipeline, kb, rules) = setup();
    let label = "Charlotte Gainsbourg|Laurence Olivier|Mia Wasikowska|Michael Fassbender|Orson Welles|William Hurt";
    let qs = parse_questions(&format!("who starred with [Joan Fontaine]\t{label}\n"));
    let report = audit(&qs, &pipeline, &kb, &rules);
    assert_eq!(report.records[0].cause, Some(Cause::NamesakeTitle));
}

#[test]
fn equivalent_phrasings_share_a_group() {
    let (pipeline, _, _) = setup();
    let qs = parse_questions(
        "which films share the same actor of [Bright Star]\n\
         what are the films that have the same actor of [Jaws]\n\
         who directed [Jaws]\n",
    );
    let groups = group_by_template(&qs, &pipeline);
    assert_eq!(groups.distinct_templates(), 2);
    assert!(groups.groups.values().any(|m| m.len() == 2));
    let one = group_by_template(&qs[2..], &pipeline);
    assert_eq!(one.groups.values().next().unwrap().len(), 1);
}

#[test]
fn stats_count_role_pairs() {
    let pipeline = bundled::pipeline();
    let rows = lvp_stats(&pipeline.lvps, &pipeline.ontology);
    let film_actor = rows
        .iter()
        .find(|r| r.frame == "Movie" && r.role1 == "Film" && r.role2 == "Actor")
        .unwrap();
    let expected = pipeline
        .lvps
        .lvps()
        .iter()
        .filter(|l| l.frame == "Movie")
        .filter(|l| l.patterns.iter().any(|p| p.role == "FilmNm") && l.patterns.iter().any(|p| p.role == "Actor"))
        .count();
    assert_eq!(film_actor.count, expected);
    assert!(lvp_stats(&crate::learner::LvpStore::default(), &pipeline.ontology).is_empty());
    assert_eq!(role_label("Actor2"), "Actor");
    assert!(render_stats(&rows).contains("bridge rules at two per triple"));
}
