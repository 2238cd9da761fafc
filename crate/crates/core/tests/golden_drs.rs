use std::fs;
use std::path::Path;

use cnlqa::bundled;
use cnlqa::drs::parse_cnl;

#[test]
fn golden_drs_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden");
    let paraphraser = bundled::paraphraser();
    let mut checked = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("drs") {
            continue;
        }
        let text = fs::read_to_string(&path).unwrap();
        let (sentence, expected) = text.split_once("\n\n").expect("sentence, blank line, DRS");
        let tokens = paraphraser.paraphrase(sentence).unwrap();
        let drs = parse_cnl(&tokens).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(drs.render(), expected, "{}", path.display());
        checked += 1;
    }
    assert!(checked >= 7);
}
