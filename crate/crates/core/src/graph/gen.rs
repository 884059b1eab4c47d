//! Seeded instance generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexSet};
use crate::decomp::{PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range")
}

/// Random partial `k`-tree on `n` vertices.
///
/// A `k`-tree is grown by attaching each new vertex to a `k`-clique contained
/// in an existing bag; afterwards every edge survives independently with
/// probability `keep_prob`. The returned decomposition has one bag of size
/// `k + 1` per clique, so its width is exactly `k` and it stays valid for the
/// thinned graph. Vertex identifiers are shuffled so that they carry no
/// information about the construction order.
pub fn gen_partial_ktree(
    n: usize,
    k: usize,
    keep_prob: f64,
    seed: u64,
) -> Result<(Graph, TreeDecomposition)> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&keep_prob) {
        return Err(Error::InvalidParameter(format!(
            "keep_prob {keep_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut bags: Vec<Vec<usize>> = vec![order[..=k].to_vec()];
    let mut tree_edges = Vec::with_capacity(n - k - 1);
    let mut edges = Vec::new();
    for (i, &u) in order[..=k].iter().enumerate() {
        for &v in &order[i + 1..=k] {
            edges.push((u, v));
        }
    }
    for &v in &order[k + 1..] {
        let host = rng.gen_range(0..bags.len());
        let drop = rng.gen_range(0..=k);
        let mut bag: Vec<usize> = bags[host]
            .iter()
            .enumerate()
            .filter_map(|(i, &u)| (i != drop).then_some(u))
            .collect();
        edges.extend(bag.iter().map(|&u| (u, v)));
        bag.push(v);
        tree_edges.push((host, bags.len()));
        bags.push(bag);
    }
    let kept: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|_| rng.gen_bool(keep_prob))
        .collect();
    let g = Graph::from_edges(n, kept)?;
    let td = TreeDecomposition::new(
        bags.into_iter().map(VertexSet::from_vec).collect(),
        tree_edges,
    )?;
    Ok((g, td))
}

/// Random interval graph together with its natural path decomposition.
///
/// Vertex `v` occupies the integer positions `[s_v, s_v + len_v)` with
/// `len_v` uniform in `1..=max_len`; overlapping intervals are adjacent with
/// probability `keep_prob` (so the result is a spanning subgraph of an
/// interval graph). Bags are the non-empty position slices.
pub fn gen_interval_graph(
    n: usize,
    max_len: usize,
    keep_prob: f64,
    seed: u64,
) -> Result<(Graph, PathDecomposition)> {
    if max_len < 1 {
        return Err(Error::InvalidParameter("max_len must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&keep_prob) {
        return Err(Error::InvalidParameter(format!(
            "keep_prob {keep_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = n.max(1);
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let s = rng.gen_range(0..span);
            (s, s + rng.gen_range(1..=max_len))
        })
        .collect();
    let end = intervals.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let bags: Vec<VertexSet> = (0..end)
        .map(|pos| {
            (0..n)
                .filter(|&v| intervals[v].0 <= pos && pos < intervals[v].1)
                .collect::<VertexSet>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let overlap = intervals[u].0 < intervals[v].1 && intervals[v].0 < intervals[u].1;
            if overlap && rng.gen_bool(keep_prob) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let bags = if bags.is_empty() {
        vec![VertexSet::new()]
    } else {
        bags
    };
    Ok((g, PathDecomposition::new(bags)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{validate_pd, validate_td};

    #[test]
    fn one_tree_is_a_tree() {
        let (g, td) = gen_partial_ktree(5, 1, 1.0, 3).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(crate::graph::connected_components(&g).len(), 1);
        assert_eq!(td.width(), 1);
        assert!(validate_td(&g, &td).is_valid());
    }

    #[test]
    fn minimal_ktree_is_a_clique() {
        for k in 1..6 {
            let (g, td) = gen_partial_ktree(k + 1, k, 1.0, 9).unwrap();
            assert_eq!(g, Graph::complete(k + 1));
            assert_eq!(td.num_nodes(), 1);
        }
    }

    #[test]
    fn partial_ktree_is_certified() {
        for seed in 0..20 {
            let (g, td) = gen_partial_ktree(30, 3, 0.7, seed).unwrap();
            g.audit().unwrap();
            let report = validate_td(&g, &td);
            assert!(report.is_valid(), "{report:?}");
            assert!(report.width <= 3);
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(gen_partial_ktree(3, 3, 1.0, 0).is_err());
        assert!(gen_partial_ktree(3, 0, 1.0, 0).is_err());
        assert!(gen_partial_ktree(5, 2, 1.5, 0).is_err());
    }

    #[test]
    fn same_seed_same_instance() {
        let a = gen_partial_ktree(40, 4, 0.5, 77).unwrap();
        let b = gen_partial_ktree(40, 4, 0.5, 77).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn interval_graphs_come_with_valid_path_decompositions() {
        for seed in 0..20 {
            let (g, pd) = gen_interval_graph(20, 4, 0.8, seed).unwrap();
            assert!(validate_pd(&g, &pd).is_valid());
        }
    }
}
