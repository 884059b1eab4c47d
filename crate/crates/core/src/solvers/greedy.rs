use std::collections::BTreeSet;

use super::{IndependentSetResult, Provenance};
use crate::graph::{Graph, VertexSet};

/// Repeatedly takes a vertex of minimum remaining degree (lowest identifier
/// on ties) and deletes it with its neighbours. On a graph of treewidth `w`
/// at most `w + 1` vertices disappear per step, so the result has at least
/// `n / (w + 1)` vertices.
pub fn greedy_degeneracy(g: &Graph) -> IndependentSetResult {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut chosen = Vec::new();

    let delete = |v: usize,
                  queue: &mut BTreeSet<(usize, usize)>,
                  gone: &mut Vec<bool>,
                  degree: &mut Vec<usize>| {
        gone[v] = true;
        queue.remove(&(degree[v], v));
        for &w in g.neighbors(v) {
            if !gone[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    };

    while let Some(&(_, v)) = queue.first() {
        chosen.push(v);
        delete(v, &mut queue, &mut gone, &mut degree);
        for &w in g.neighbors(v) {
            if !gone[w] {
                delete(w, &mut queue, &mut gone, &mut degree);
            }
        }
    }
    IndependentSetResult::new(g, VertexSet::from_vec(chosen), Provenance::Greedy)
}
