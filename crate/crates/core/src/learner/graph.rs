//! Graph embedding of a DRS and shortest paths over it.

use std::collections::VecDeque;

use crate::drs::{Drs, TermType};

use super::LearnError;

/// A directed edge labeled with the shared variable's argument position in
/// the source term. `target_pos` is the same variable's position in the
/// target term, i.e. the label of the reverse edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
    pub target_pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrsGraph {
    kinds: Vec<TermType>,
    edges: Vec<Edge>,
}

impl DrsGraph {
    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, node: usize) -> TermType {
        self.kinds[node]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing edges of `node`, ordered by (label, target).
    pub fn out(&self, node: usize) -> Vec<Edge> {
        let mut v: Vec<Edge> = self.edges.iter().filter(|e| e.from == node).copied().collect();
        v.sort_by_key(|e| (e.label, e.to));
        v
    }
}

/// One node per term; an edge each way between two terms sharing exactly
/// one variable.
pub fn embed(drs: &Drs) -> Result<DrsGraph, LearnError> {
    if let Some(t) = drs.first_repeated() {
        let one = Drs::new(vec![t.clone()], Vec::new());
        return Err(LearnError::RepeatedVariables(one.render().trim_end().to_string()));
    }
    let kinds = drs.terms.iter().map(|t| t.term_type()).collect();
    let mut edges = Vec::new();
    for (i, a) in drs.terms.iter().enumerate() {
        for (j, b) in drs.terms.iter().enumerate() {
            if i == j {
                continue;
            }
            let shared: Vec<(usize, usize)> = a
                .vars()
                .iter()
                .flat_map(|(pa, va)| {
                    b.vars()
                        .into_iter()
                        .filter(move |(_, vb)| vb == va)
                        .map(move |(pb, _)| (*pa, pb))
                })
                .collect();
            if let [(pa, pb)] = shared[..] {
                edges.push(Edge {
                    from: i,
                    to: j,
                    label: pa,
                    target_pos: pb,
                });
            }
        }
    }
    Ok(DrsGraph { kinds, edges })
}

/// A minimum-length path from `from` to `to`. Among shortest paths the one
/// with the lexicographically smallest sequence of (label, target) is chosen.
pub fn shortest_path(graph: &DrsGraph, from: usize, to: usize) -> Result<Vec<Edge>, LearnError> {
    let n = graph.node_count();
    if from >= n || to >= n {
        return Err(LearnError::NoSuchNode(from.max(to)));
    }
    // Distances to `to`, searching backwards.
    let mut dist = vec![usize::MAX; n];
    dist[to] = 0;
    let mut queue = VecDeque::from([to]);
    while let Some(x) = queue.pop_front() {
        for e in graph.edges.iter().filter(|e| e.to == x) {
            if dist[e.from] == usize::MAX {
                dist[e.from] = dist[x] + 1;
                queue.push_back(e.from);
            }
        }
    }
    if dist[from] == usize::MAX {
        return Err(LearnError::Unreachable { from, to });
    }
    let mut path = Vec::with_capacity(dist[from]);
    let mut at = from;
    while at != to {
        let e = graph
            .out(at)
            .into_iter()
            .find(|e| dist[e.to] + 1 == dist[at])
            .expect("a node on a shortest path has a successor closer to the goal");
        path.push(e);
        at = e.to;
    }
    Ok(path)
}
