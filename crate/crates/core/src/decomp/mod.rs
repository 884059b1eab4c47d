//! Tree and path decompositions, their validation, the standard normal forms
//! (nice, leaf-unique, nice path, logarithmic depth), and the surgeries used
//! by the treewidth pipeline.

mod depth;
mod nice;
mod pace;
mod surgery;
mod validate;

pub use depth::{depth_bound, reduce_depth};
pub use nice::{compress, make_leaf_unique, make_nice, make_nice_path};
pub use pace::{parse_td, write_td};
pub use surgery::{
    branch_bag_union, branch_nodes, chop_subtrees, contract_to_branch_td, path_decomp_minus_q,
    ChopPart, ChopResult,
};
pub use validate::{validate_pd, validate_td, ValidationReport, Violation};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Role of a node in a nice decomposition. The vertex carried by
/// `Introduce`/`Forget` is the one added or dropped relative to the child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
    /// Node of a decomposition that has not been checked for niceness.
    Plain,
}

/// A tree of bags, optionally rooted.
///
/// The tree shape is not enforced on construction; [`validate_td`] reports
/// whether the edges actually form a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    adj: Vec<Vec<usize>>,
    root: Option<usize>,
    kinds: Option<Vec<NodeKind>>,
}

/// Parent/child structure of a rooted decomposition tree.
#[derive(Clone, Debug)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Distance from the root.
    pub depth: Vec<usize>,
    /// Breadth-first order from the root; iterate in reverse for bottom-up passes.
    pub order: Vec<usize>,
}

impl RootedTree {
    /// Post-order traversal (children before parents, left to right).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
            } else {
                stack.push((t, true));
                for &c in self.children[t].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }
}

impl TreeDecomposition {
    /// Builds an unrooted decomposition. Edge endpoints must be valid node
    /// indices; self-loops and repeated edges are rejected.
    pub fn new(
        bags: Vec<VertexSet>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); bags.len()];
        for (a, b) in edges {
            if a >= bags.len() || b >= bags.len() {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{b}) refers to a missing node"
                )));
            }
            if a == b {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{a}) is a loop"
                )));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (t, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDecomposition(format!(
                    "repeated tree edge at node {t}"
                )));
            }
        }
        Ok(TreeDecomposition {
            bags,
            adj,
            root: None,
            kinds: None,
        })
    }

    /// Single-bag decomposition.
    pub fn single(bag: VertexSet) -> Self {
        TreeDecomposition {
            bags: vec![bag],
            adj: vec![Vec::new()],
            root: Some(0),
            kinds: None,
        }
    }

    pub(crate) fn from_adjacency(
        bags: Vec<VertexSet>,
        mut adj: Vec<Vec<usize>>,
        root: Option<usize>,
    ) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        TreeDecomposition {
            bags,
            adj,
            root,
            kinds: None,
        }
    }

    /// Builds a rooted decomposition from a parent array.
    pub(crate) fn from_parents(
        bags: Vec<VertexSet>,
        parent: &[Option<usize>],
        root: usize,
    ) -> Self {
        let mut adj = vec![Vec::new(); bags.len()];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                adj[t].push(p);
                adj[p].push(t);
            }
        }
        Self::from_adjacency(bags, adj, Some(root))
    }

    pub fn with_root(mut self, root: usize) -> Self {
        assert!(root < self.bags.len(), "root {root} is not a node");
        self.root = Some(root);
        self.kinds = None;
        self
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn neighbors(&self, t: usize) -> &[usize] {
        &self.adj[t]
    }

    /// Undirected degree of `t` in the decomposition tree.
    pub fn degree(&self, t: usize) -> usize {
        self.adj[t].len()
    }

    /// Tree edges as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one (zero for decompositions whose bags are all empty).
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// Node kinds, present once the decomposition has been checked to be nice.
    pub fn kinds(&self) -> Option<&[NodeKind]> {
        self.kinds.as_deref()
    }

    pub fn kind(&self, t: usize) -> NodeKind {
        self.kinds.as_ref().map_or(NodeKind::Plain, |k| k[t])
    }

    /// True if the edges form a single tree (the empty decomposition counts).
    pub fn is_tree(&self) -> bool {
        let n = self.bags.len();
        if n == 0 {
            return true;
        }
        if self.num_edges() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(t) = stack.pop() {
            for &s in &self.adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    count += 1;
                    stack.push(s);
                }
            }
        }
        count == n
    }

    /// Parent/child view from the root. `None` if unrooted or not a tree.
    pub fn rooted(&self) -> Option<RootedTree> {
        let root = self.root?;
        if !self.is_tree() {
            return None;
        }
        let n = self.bags.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(t) = queue.pop_front() {
            order.push(t);
            for &s in &self.adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    parent[s] = Some(t);
                    depth[s] = depth[t] + 1;
                    children[t].push(s);
                    queue.push_back(s);
                }
            }
        }
        Some(RootedTree {
            root,
            parent,
            children,
            depth,
            order,
        })
    }

    /// Length of the longest root-to-leaf path, if rooted.
    pub fn depth(&self) -> Option<usize> {
        self.rooted()
            .map(|r| r.depth.iter().copied().max().unwrap_or(0))
    }

    /// Childless nodes when rooted; nodes of degree at most one otherwise.
    pub fn leaves(&self) -> Vec<usize> {
        match self.rooted() {
            Some(r) => (0..self.num_nodes())
                .filter(|&t| r.children[t].is_empty())
                .collect(),
            None => (0..self.num_nodes())
                .filter(|&t| self.adj[t].len() <= 1)
                .collect(),
        }
    }

    /// Number of bags containing each vertex `0..n`.
    pub fn occurrence_counts(&self, n: usize) -> Vec<usize> {
        let mut count = vec![0; n];
        for bag in &self.bags {
            for v in bag {
                if v < n {
                    count[v] += 1;
                }
            }
        }
        count
    }

    /// Union of all bags.
    pub fn vertices(&self) -> VertexSet {
        self.bags
            .iter()
            .fold(VertexSet::new(), |acc, b| acc.union(b))
    }

    /// Same tree with every bag intersected with `keep`. This is a valid
    /// decomposition of the subgraph induced by `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Self {
        TreeDecomposition {
            bags: self.bags.iter().map(|b| b.intersection(keep)).collect(),
            adj: self.adj.clone(),
            root: self.root,
            kinds: None,
        }
    }

    /// Renames vertices inside every bag.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        TreeDecomposition {
            bags: self.bags.iter().map(|b| b.map(&f)).collect(),
            adj: self.adj.clone(),
            root: self.root,
            kinds: None,
        }
    }

    /// Checks the nice-decomposition rules and returns the kind of every node.
    pub fn nice_kinds(&self) -> Result<Vec<NodeKind>> {
        let r = self
            .rooted()
            .ok_or_else(|| Error::NotNice("decomposition must be a rooted tree".into()))?;
        let mut kinds = Vec::with_capacity(self.num_nodes());
        for t in 0..self.num_nodes() {
            let b = &self.bags[t];
            let kind = match r.children[t].as_slice() {
                [] => NodeKind::Leaf,
                [c] => {
                    let cb = &self.bags[*c];
                    if b.len() == cb.len() + 1 && cb.is_subset(b) {
                        NodeKind::Introduce(b.difference(cb).as_slice()[0])
                    } else if cb.len() == b.len() + 1 && b.is_subset(cb) {
                        NodeKind::Forget(cb.difference(b).as_slice()[0])
                    } else {
                        return Err(Error::NotNice(format!(
                            "node {t} {b} and its child {c} {cb} differ by more than one vertex"
                        )));
                    }
                }
                [c1, c2] => {
                    if &self.bags[*c1] != b || &self.bags[*c2] != b {
                        return Err(Error::NotNice(format!(
                            "join node {t} has children with different bags"
                        )));
                    }
                    NodeKind::Join
                }
                _ => {
                    return Err(Error::NotNice(format!(
                        "node {t} has more than two children"
                    )))
                }
            };
            kinds.push(kind);
        }
        Ok(kinds)
    }

    pub fn is_nice(&self) -> bool {
        self.nice_kinds().is_ok()
    }

    /// Checks niceness and records the node kinds.
    pub fn into_tagged(mut self) -> Result<Self> {
        self.kinds = Some(self.nice_kinds()?);
        Ok(self)
    }
}

/// Sequence of bags `B_1, ..., B_m` whose tree is a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// Consecutive bags differ by exactly one vertex.
    pub fn is_nice(&self) -> bool {
        self.bags.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            (a.len() + 1 == b.len() && a.is_subset(b)) || (b.len() + 1 == a.len() && b.is_subset(a))
        })
    }

    /// The same bags as a path-shaped tree decomposition rooted at the last bag.
    pub fn to_tree(&self) -> TreeDecomposition {
        let m = self.bags.len();
        let parent: Vec<Option<usize>> = (0..m).map(|i| (i + 1 < m).then_some(i + 1)).collect();
        TreeDecomposition::from_parents(self.bags.clone(), &parent, m.saturating_sub(1))
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        PathDecomposition {
            bags: self.bags.iter().map(|b| b.map(&f)).collect(),
        }
    }
}
