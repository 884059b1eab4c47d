use std::collections::BTreeSet;

use super::{validate_pd, validate_td, PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn require_valid(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    let report = validate_td(g, td);
    match report.first_violation() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidDecomposition(v.to_string())),
    }
}

/// Contracts every tree edge whose one bag is a subset of the other, so that
/// no two adjacent bags are nested. Validity, width and the number of
/// childless nodes never get worse. The root (if any) follows the node it is
/// merged into.
pub fn compress(td: &TreeDecomposition) -> TreeDecomposition {
    let n = td.num_nodes();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|t| td.neighbors(t).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut root = td.root();
    let mut work: Vec<usize> = (0..n).collect();
    while let Some(a) = work.pop() {
        if !alive[a] {
            continue;
        }
        let target = adj[a]
            .iter()
            .copied()
            .find(|&b| td.bag(a).is_subset(td.bag(b)));
        let Some(b) = target else { continue };
        // Merge a into b.
        alive[a] = false;
        let nbrs: Vec<usize> = std::mem::take(&mut adj[a]).into_iter().collect();
        for x in nbrs {
            adj[x].remove(&a);
            if x != b {
                adj[x].insert(b);
                adj[b].insert(x);
            }
        }
        if root == Some(a) {
            root = Some(b);
        }
        work.push(b);
        work.extend(adj[b].iter().copied());
    }
    let mut index = vec![usize::MAX; n];
    let mut bags = Vec::new();
    for t in (0..n).filter(|&t| alive[t]) {
        index[t] = bags.len();
        bags.push(td.bag(t).clone());
    }
    let new_adj = (0..n)
        .filter(|&t| alive[t])
        .map(|t| adj[t].iter().map(|&s| index[s]).collect())
        .collect();
    TreeDecomposition::from_adjacency(bags, new_adj, root.map(|r| index[r]))
}

struct Builder {
    bags: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
}

impl Builder {
    fn add(&mut self, bag: VertexSet, children: &[usize]) -> usize {
        let id = self.bags.len();
        self.bags.push(bag);
        self.parent.push(None);
        for &c in children {
            self.parent[c] = Some(id);
        }
        id
    }
}

/// Turns a valid decomposition into a nice one of the same width.
///
/// Nested neighbouring bags are contracted first; then every tree edge is
/// replaced by a chain that forgets the child-only vertices before
/// introducing the parent-only ones, and nodes with several children become
/// a sequence of join nodes. Leaves keep their original bags.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition> {
    require_valid(g, td)?;
    if td.num_nodes() == 0 {
        return TreeDecomposition::single(VertexSet::new()).into_tagged();
    }
    let base = compress(td);
    let base = match base.root() {
        Some(_) => base,
        None => base.with_root(0),
    };
    let rooted = base.rooted().expect("validated decomposition is a tree");

    let mut b = Builder {
        bags: Vec::with_capacity(4 * base.num_nodes()),
        parent: Vec::with_capacity(4 * base.num_nodes()),
    };
    let mut top = vec![usize::MAX; base.num_nodes()];
    for t in rooted.post_order() {
        let bag = base.bag(t);
        let children = &rooted.children[t];
        if children.is_empty() {
            top[t] = b.add(bag.clone(), &[]);
            continue;
        }
        let mut tops = Vec::with_capacity(children.len());
        for &c in children {
            let mut cur = top[c];
            let mut cur_bag = base.bag(c).clone();
            for v in base.bag(c).difference(bag).iter() {
                cur_bag = cur_bag.difference(&VertexSet::singleton(v));
                cur = b.add(cur_bag.clone(), &[cur]);
            }
            for v in bag.difference(base.bag(c)).iter() {
                cur_bag = cur_bag.union(&VertexSet::singleton(v));
                cur = b.add(cur_bag.clone(), &[cur]);
            }
            tops.push(cur);
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = b.add(bag.clone(), &[acc, other]);
        }
        top[t] = acc;
    }
    let root = top[rooted.root];
    TreeDecomposition::from_parents(b.bags, &b.parent, root).into_tagged()
}

/// Repairs a nice decomposition so that every leaf bag holds a vertex that
/// occurs in no other bag.
///
/// Leaves without such a vertex are deleted; when that leaves a join node
/// with a single child (whose bag equals its own), the join node is
/// contracted into that child. Each step removes nodes, so width and node
/// count never grow.
pub fn make_leaf_unique(td: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition> {
    require_valid(g, td)?;
    td.nice_kinds()?;
    let rooted = td.rooted().expect("nice decompositions are rooted trees");
    let nodes = td.num_nodes();
    let mut parent = rooted.parent.clone();
    let mut children = rooted.children.clone();
    let mut alive = vec![true; nodes];
    let mut root = rooted.root;
    let mut count = td.occurrence_counts(g.n());

    let mut work: Vec<usize> = (0..nodes)
        .rev()
        .filter(|&t| children[t].is_empty())
        .collect();
    while let Some(t) = work.pop() {
        if !alive[t] || !children[t].is_empty() || t == root {
            continue;
        }
        if td.bag(t).iter().any(|v| count[v] == 1) {
            continue;
        }
        alive[t] = false;
        for v in td.bag(t) {
            count[v] -= 1;
        }
        let s = parent[t].expect("non-root node has a parent");
        children[s].retain(|&c| c != t);
        match children[s].as_slice() {
            [] => work.push(s),
            &[c] if td.bag(c) == td.bag(s) => {
                // s was a join node; splice its remaining child into its place.
                alive[s] = false;
                for v in td.bag(s) {
                    count[v] -= 1;
                }
                parent[c] = parent[s];
                match parent[s] {
                    Some(p) => {
                        for x in children[p].iter_mut() {
                            if *x == s {
                                *x = c;
                            }
                        }
                    }
                    None => root = c,
                }
            }
            _ => {}
        }
    }

    let mut index = vec![usize::MAX; nodes];
    let mut bags = Vec::new();
    for t in (0..nodes).filter(|&t| alive[t]) {
        index[t] = bags.len();
        bags.push(td.bag(t).clone());
    }
    let new_parent: Vec<Option<usize>> = (0..nodes)
        .filter(|&t| alive[t])
        .map(|t| parent[t].map(|p| index[p]))
        .collect();
    TreeDecomposition::from_parents(bags, &new_parent, index[root]).into_tagged()
}

/// Rewrites a valid path decomposition so that each step introduces or
/// forgets exactly one vertex. The result has exactly `2n` bags: the empty
/// bag before the first introduction is dropped, the empty bag after the last
/// forget is kept. Within a step vertices are handled in increasing order.
pub fn make_nice_path(pd: &PathDecomposition, g: &Graph) -> Result<PathDecomposition> {
    let report = validate_pd(g, pd);
    if let Some(v) = report.first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let mut out = Vec::with_capacity(2 * g.n());
    let mut current = VertexSet::new();
    for bag in pd.bags() {
        for v in current.difference(bag).iter() {
            current = current.difference(&VertexSet::singleton(v));
            out.push(current.clone());
        }
        for v in bag.difference(&current).iter() {
            current = current.union(&VertexSet::singleton(v));
            out.push(current.clone());
        }
    }
    for v in current.clone().iter() {
        current = current.difference(&VertexSet::singleton(v));
        out.push(current.clone());
    }
    debug_assert_eq!(out.len(), 2 * g.n());
    Ok(PathDecomposition::new(out))
}
