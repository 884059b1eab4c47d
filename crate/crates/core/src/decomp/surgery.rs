//! Decomposition surgeries used by the treewidth pipeline: chopping off
//! subtrees with few leaves, and splitting a decomposition at its branch
//! nodes (undirected degree at least 3).

use super::{compress, validate_td, PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Graph, VertexSet};

/// Nodes of undirected tree degree at least 3.
pub fn branch_nodes(td: &TreeDecomposition) -> Vec<usize> {
    (0..td.num_nodes()).filter(|&t| td.degree(t) >= 3).collect()
}

/// Union of the bags of all branch nodes.
pub fn branch_bag_union(td: &TreeDecomposition) -> VertexSet {
    branch_nodes(td)
        .into_iter()
        .fold(VertexSet::new(), |acc, t| acc.union(td.bag(t)))
}

fn check_q(td: &TreeDecomposition, q: &VertexSet) -> Result<()> {
    if *q != branch_bag_union(td) {
        return Err(Error::Contract(
            "Q is not the union of the branch-node bags".into(),
        ));
    }
    Ok(())
}

/// Path decomposition of `C - Q`, obtained by deleting the branch nodes and
/// the vertices of `Q` and concatenating the remaining paths (in order of
/// their smallest node index). Returns `C - Q` (labels into `c`) and the
/// decomposition in its local identifiers. Width never exceeds the input's.
pub fn path_decomp_minus_q(
    td: &TreeDecomposition,
    q: &VertexSet,
    c: &Graph,
) -> Result<(Graph, PathDecomposition)> {
    check_q(td, q)?;
    let keep = VertexSet::full(c.n()).difference(q);
    let sub = induced_subgraph(c, &keep);
    let mut local = vec![usize::MAX; c.n()];
    for (i, v) in keep.iter().enumerate() {
        local[v] = i;
    }

    let nodes = td.num_nodes();
    let is_branch: Vec<bool> = (0..nodes).map(|t| td.degree(t) >= 3).collect();
    let forest_nbrs = |t: usize| td.neighbors(t).iter().copied().filter(|&s| !is_branch[s]);
    let mut seen = vec![false; nodes];
    let mut bags = Vec::new();
    for start in 0..nodes {
        if is_branch[start] || seen[start] {
            continue;
        }
        // Walk to one end of this path, then along it.
        let mut end = start;
        let mut prev = usize::MAX;
        loop {
            let next = forest_nbrs(end).find(|&s| s != prev);
            match next {
                Some(s) if s != start => {
                    prev = end;
                    end = s;
                }
                _ => break,
            }
        }
        let mut path = Vec::new();
        let mut cur = end;
        let mut prev = usize::MAX;
        loop {
            seen[cur] = true;
            path.push(cur);
            match forest_nbrs(cur).find(|&s| s != prev) {
                Some(s) => {
                    prev = cur;
                    cur = s;
                }
                None => break,
            }
        }
        // Read each path from its end with the smaller node index.
        if path.last() < path.first() {
            path.reverse();
        }
        bags.extend(
            path.iter()
                .map(|&t| td.bag(t).difference(q).map(|v| local[v])),
        );
    }
    Ok((sub, PathDecomposition::new(bags)))
}

/// Decomposition of `C[Q]` whose nodes are the branch nodes of `td`, plus one
/// node with bag `B_u ∪ B_v` for every path of degree-2 nodes connecting
/// branch nodes `u` and `v`. Adjacent branch nodes are linked directly and
/// paths ending in a leaf are dropped. Returns `C[Q]` (labels into `c`) and
/// the unrooted decomposition in its local identifiers.
pub fn contract_to_branch_td(
    td: &TreeDecomposition,
    q: &VertexSet,
    c: &Graph,
) -> Result<(Graph, TreeDecomposition)> {
    if q.is_empty() {
        return Err(Error::Contract(
            "Q is empty; there is no branch-node decomposition".into(),
        ));
    }
    check_q(td, q)?;
    let sub = induced_subgraph(c, q);
    let mut local = vec![usize::MAX; c.n()];
    for (i, v) in q.iter().enumerate() {
        local[v] = i;
    }

    let branches = branch_nodes(td);
    let mut index = vec![usize::MAX; td.num_nodes()];
    for (i, &t) in branches.iter().enumerate() {
        index[t] = i;
    }
    let mut bags: Vec<VertexSet> = branches.iter().map(|&t| td.bag(t).clone()).collect();
    let mut edges = Vec::new();
    for &u in &branches {
        for &first in td.neighbors(u) {
            let (mut prev, mut cur, mut internal) = (u, first, 0usize);
            while td.degree(cur) == 2 {
                let next = td
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&s| s != prev)
                    .unwrap();
                prev = cur;
                cur = next;
                internal += 1;
            }
            if td.degree(cur) < 3 || u > cur {
                // pendant path, or already handled from the other end
                continue;
            }
            if internal == 0 {
                edges.push((index[u], index[cur]));
            } else {
                let merged = bags.len();
                bags.push(td.bag(u).union(td.bag(cur)));
                edges.push((index[u], merged));
                edges.push((merged, index[cur]));
            }
        }
    }
    let bags = bags.into_iter().map(|b| b.map(|v| local[v])).collect();
    Ok((sub, TreeDecomposition::new(bags, edges)?))
}

/// One connected component of `G - X` with its decomposition.
#[derive(Clone, Debug)]
pub struct ChopPart {
    /// Induced subgraph; its labels map back into the chopped graph.
    pub graph: Graph,
    /// Rooted decomposition of `graph` in local identifiers.
    pub td: TreeDecomposition,
}

#[derive(Clone, Debug)]
pub struct ChopResult {
    /// Deleted vertices `X`.
    pub removed: VertexSet,
    pub parts: Vec<ChopPart>,
    /// Number of subtrees cut off.
    pub iterations: usize,
}

/// Deletes the bags of few subtree roots so that every remaining component
/// has a decomposition with at most `ell` leaves.
///
/// While the working tree has more than `ell` leaves, the first node in
/// post-order whose subtree holds at least `ell` leaves is chosen; its bag
/// joins `X`, its child subtrees are set aside, and its subtree leaves the
/// working tree. Ancestors left childless whose bag is contained in their
/// parent's bag are pruned, so they do not count as new leaves. When the loop
/// stops the remaining working tree is set aside as well. Every set-aside tree
/// is split by the connected components of the vertices it holds, restricted
/// to each component and compressed.
pub fn chop_subtrees(g: &Graph, td: &TreeDecomposition, ell: usize) -> Result<ChopResult> {
    if ell < 1 {
        return Err(Error::InvalidParameter(
            "leaf budget must be at least 1".into(),
        ));
    }
    if let Some(v) = validate_td(g, td).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let Some(rooted) = td.rooted() else {
        return Err(Error::Contract(
            "chopping needs a rooted decomposition".into(),
        ));
    };
    let nodes = td.num_nodes();
    let mut bags: Vec<VertexSet> = td.bags().to_vec();
    let parent = rooted.parent.clone();
    let mut children = rooted.children.clone();
    let mut alive = vec![true; nodes];
    let root = rooted.root;
    let mut removed = VertexSet::new();
    let mut pieces: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut iterations = 0;

    let subtree = |children: &Vec<Vec<usize>>, t: usize| -> Vec<usize> {
        let mut out = vec![t];
        let mut i = 0;
        while i < out.len() {
            out.extend(children[out[i]].iter().copied());
            i += 1;
        }
        out
    };
    let post_order = |children: &Vec<Vec<usize>>| -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(root, false)];
        while let Some((t, done)) = stack.pop() {
            if done {
                out.push(t);
            } else {
                stack.push((t, true));
                stack.extend(children[t].iter().rev().map(|&c| (c, false)));
            }
        }
        out
    };

    while alive[root] {
        let order = post_order(&children);
        let mut leaves = vec![0usize; nodes];
        for &t in &order {
            leaves[t] = if children[t].is_empty() {
                1
            } else {
                children[t].iter().map(|&c| leaves[c]).sum()
            };
        }
        if leaves[root] <= ell {
            break;
        }
        let star = *order
            .iter()
            .find(|&&t| leaves[t] >= ell)
            .expect("root qualifies");
        iterations += 1;

        let cut = bags[star].clone();
        removed = removed.union(&cut);
        let body = subtree(&children, star);
        for &t in &order {
            bags[t] = bags[t].difference(&cut);
        }
        for &t in &body {
            alive[t] = false;
        }
        for &c in &children[star] {
            pieces.push((subtree(&children, c), c));
        }
        let Some(p) = parent[star] else { break };
        children[p].retain(|&c| c != star);

        let mut p = p;
        while children[p].is_empty() {
            let Some(pp) = parent[p] else { break };
            if !bags[p].is_subset(&bags[pp]) {
                break;
            }
            alive[p] = false;
            children[pp].retain(|&c| c != p);
            p = pp;
        }
    }
    if alive[root] {
        pieces.push((subtree(&children, root), root));
    }

    let mut parts = Vec::new();
    for (piece, piece_root) in pieces {
        let mut index = vec![usize::MAX; nodes];
        for (i, &t) in piece.iter().enumerate() {
            index[t] = i;
        }
        let piece_bags: Vec<VertexSet> = piece.iter().map(|&t| bags[t].clone()).collect();
        let piece_parent: Vec<Option<usize>> = piece
            .iter()
            .map(|&t| {
                if t == piece_root {
                    None
                } else {
                    parent[t].map(|p| index[p])
                }
            })
            .collect();
        let piece_td =
            TreeDecomposition::from_parents(piece_bags, &piece_parent, index[piece_root]);
        let verts = piece_td.vertices();
        let piece_graph = induced_subgraph(g, &verts);
        for comp in connected_components(&piece_graph) {
            let comp = piece_graph.lift(&comp);
            let graph = induced_subgraph(g, &comp);
            let mut local = vec![usize::MAX; g.n()];
            for (i, v) in comp.iter().enumerate() {
                local[v] = i;
            }
            let part_td = compress(&piece_td.restrict(&comp)).relabel(|v| local[v]);
            parts.push(ChopPart { graph, td: part_td });
        }
    }
    Ok(ChopResult {
        removed,
        parts,
        iterations,
    })
}
