//! Simple undirected graphs, vertex sets, and the elementary operations the
//! decomposition and approximation layers build on.

mod gen;
mod io;

pub use gen::{gen_gnp, gen_interval_graph, gen_partial_ktree};
pub use io::{parse_graph, write_graph, GraphFormat};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Sorted, duplicate-free list of vertex identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from an arbitrary vector, sorting and dropping duplicates.
    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// All identifiers `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Largest identifier, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    /// Applies `f` to every element, e.g. to translate between label spaces.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        VertexSet::from_vec(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_vec(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric, and there are no self-loops.
/// Graphs produced by [`induced_subgraph`] remember which vertex of the parent
/// graph each of their vertices came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are errors.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph {
            adj,
            m: m / 2,
            labels: None,
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are in range")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Identifier of `v` in the graph this one was induced from; identity for
    /// graphs that were not produced by [`induced_subgraph`].
    pub fn label(&self, v: usize) -> usize {
        match &self.labels {
            Some(l) => l[v],
            None => v,
        }
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Translates a vertex set of this graph into the parent graph's identifiers.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.map(|v| self.label(v))
    }

    /// Checks adjacency symmetry, sortedness and loop-freeness.
    pub fn audit(&self) -> Result<(), String> {
        let mut count = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {u} is not strictly sorted"));
            }
            for &v in list {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v >= self.n() || !self.has_edge(v, u) {
                    return Err(format!("edge ({u},{v}) is not symmetric"));
                }
            }
            count += list.len();
        }
        if count != 2 * self.m {
            return Err(format!("edge count {} does not match adjacency", self.m));
        }
        Ok(())
    }
}

fn check_in_range(g: &Graph, s: &VertexSet) {
    if let Some(max) = s.max_vertex() {
        assert!(
            max < g.n(),
            "vertex {max} out of range for graph with {} vertices",
            g.n()
        );
    }
}

/// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order of the
/// original identifiers. The returned graph's labels map back into `g`.
///
/// Panics if `s` contains a vertex outside `g`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Graph {
    check_in_range(g, s);
    let mut index = vec![usize::MAX; g.n()];
    for (i, v) in s.iter().enumerate() {
        index[v] = i;
    }
    let mut m = 0;
    let adj: Vec<Vec<usize>> = s
        .iter()
        .map(|v| {
            let list: Vec<usize> = g
                .neighbors(v)
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            m += list.len();
            list
        })
        .collect();
    Graph {
        adj,
        m: m / 2,
        labels: Some(s.as_slice().to_vec()),
    }
}

/// Connected components, each as a sorted vertex set, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(VertexSet::from_vec(comp));
    }
    out
}

/// True iff no edge of `g` has both endpoints in `s`.
///
/// Panics if `s` contains a vertex outside `g`.
pub fn is_independent_set(g: &Graph, s: &VertexSet) -> bool {
    check_in_range(g, s);
    s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)))
}
