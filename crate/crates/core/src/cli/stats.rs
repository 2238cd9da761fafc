//! Counts of lvps per pair of frame roles.

use std::collections::BTreeMap;

use crate::frames::Ontology;
use crate::learner::LvpStore;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatRow {
    pub frame: String,
    pub role1: String,
    pub role2: String,
    pub count: usize,
}

/// Display name of a role: FilmNm is shown as Film and numbered copies
/// such as Actor2 as their base role.
pub fn role_label(role: &str) -> String {
    if role == "FilmNm" {
        return "Film".into();
    }
    role.trim_end_matches(|c: char| c.is_ascii_digit()).to_string()
}

/// For each frame, the number of lvps extracting each pair of roles.
/// Rows follow the frame's role order.
pub fn lvp_stats(store: &LvpStore, ontology: &Ontology) -> Vec<StatRow> {
    let mut counts: BTreeMap<(String, usize, usize), (String, String, usize)> = BTreeMap::new();
    for lvp in store.lvps() {
        let index = |role: &str| {
            ontology
                .frame(&lvp.frame)
                .and_then(|f| f.role_index(role))
                .unwrap_or(usize::MAX)
        };
        let mut roles: Vec<(usize, &str)> = lvp.patterns.iter().map(|p| (index(&p.role), p.role.as_str())).collect();
        roles.sort();
        roles.dedup();
        for i in 0..roles.len() {
            for j in i + 1..roles.len() {
                let (a, b) = (roles[i], roles[j]);
                let entry = counts
                    .entry((lvp.frame.clone(), a.0, b.0))
                    .or_insert_with(|| (role_label(a.1), role_label(b.1), 0));
                entry.2 += 1;
            }
        }
    }
    counts
        .into_iter()
        .map(|((frame, _, _), (role1, role2, count))| StatRow {
            frame,
            role1,
            role2,
            count,
        })
        .collect()
}

/// The table plus the number of bridge rules the lvps stand in for, at two
/// per (role, role, lvp) triple.
pub fn render_stats(rows: &[StatRow]) -> String {
    let mut out = String::from("frame\trole1\trole2\tlvps\n");
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\t{}\n", r.frame, r.role1, r.role2, r.count));
    }
    let triples: usize = rows.iter().map(|r| r.count).sum();
    out.push_str(&format!(
        "# {triples} role-role-lvp triples, {} bridge rules at two per triple\n",
        2 * triples
    ));
    out
}
