//! Logarithmic-depth rebalancing of tree decompositions.
//!
//! The tree is split recursively. A piece of the original tree is attached
//! to the rest through at most two tree edges; the vertices shared across
//! those edges (at most `2(w+1)`) are added to the bag of the node that
//! splits the piece, which gives the `3w + 2` width bound. Pieces with fewer
//! than two boundary edges are split at a centroid. Pieces with exactly two
//! are split at the point where the centroid's path meets the path between
//! the two boundary nodes, which keeps every sub-piece at two boundary edges
//! and halves the size at least every second level, so the depth is at most
//! `2 log2(nodes) + 1`.

use super::{validate_td, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Depth guaranteed by [`reduce_depth`] for an input with `nodes` nodes:
/// `4 (1 + log2 nodes)`, rounded down.
pub fn depth_bound(nodes: usize) -> usize {
    if nodes <= 1 {
        return 0;
    }
    (4.0 * (1.0 + (nodes as f64).log2())).floor() as usize
}

struct Rebalancer<'a> {
    td: &'a TreeDecomposition,
    /// Piece id each original node currently belongs to.
    piece: Vec<usize>,
    next_piece: usize,
    bags: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
}

impl Rebalancer<'_> {
    fn fresh_piece(&mut self, nodes: &[usize]) -> usize {
        let id = self.next_piece;
        self.next_piece += 1;
        for &t in nodes {
            self.piece[t] = id;
        }
        id
    }

    /// Node of `nodes` whose removal leaves parts of at most half the size.
    fn centroid(&self, nodes: &[usize], id: usize) -> usize {
        let start = nodes[0];
        let mut order = vec![start];
        let mut par = std::collections::HashMap::from([(start, usize::MAX)]);
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            i += 1;
            for &s in self.td.neighbors(t) {
                if self.piece[s] == id && par[&t] != s {
                    par.insert(s, t);
                    order.push(s);
                }
            }
        }
        let mut size: std::collections::HashMap<usize, usize> =
            order.iter().map(|&t| (t, 1)).collect();
        for &t in order.iter().rev() {
            let p = par[&t];
            if p != usize::MAX {
                *size.get_mut(&p).unwrap() += size[&t];
            }
        }
        let total = order.len();
        for &t in &order {
            let mut largest = total - size[&t];
            for &s in self.td.neighbors(t) {
                if self.piece[s] == id && par[&s] == t {
                    largest = largest.max(size[&s]);
                }
            }
            if 2 * largest <= total {
                return t;
            }
        }
        unreachable!("every tree has a centroid")
    }

    /// Path from `from` to `to` inside the piece.
    fn path(&self, from: usize, to: usize, id: usize) -> Vec<usize> {
        let mut prev = std::collections::HashMap::from([(from, usize::MAX)]);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(t) = queue.pop_front() {
            if t == to {
                break;
            }
            for &s in self.td.neighbors(t) {
                if self.piece[s] == id && !prev.contains_key(&s) {
                    prev.insert(s, t);
                    queue.push_back(s);
                }
            }
        }
        let mut out = vec![to];
        let mut cur = to;
        while prev[&cur] != usize::MAX {
            cur = prev[&cur];
            out.push(cur);
        }
        out
    }

    /// Closest node to `from` (inside the piece) that lies in `targets`.
    fn nearest(&self, from: usize, targets: &[usize], id: usize) -> usize {
        let mut seen = std::collections::HashSet::from([from]);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(t) = queue.pop_front() {
            if targets.contains(&t) {
                return t;
            }
            for &s in self.td.neighbors(t) {
                if self.piece[s] == id && seen.insert(s) {
                    queue.push_back(s);
                }
            }
        }
        unreachable!("pieces are connected")
    }

    /// Builds the subtree for one piece; `boundary` lists tree edges
    /// `(inside, outside)` leaving it.
    fn build(&mut self, nodes: Vec<usize>, boundary: Vec<(usize, usize)>, parent: Option<usize>) {
        let id = self.piece[nodes[0]];
        debug_assert!(boundary.len() <= 2);
        let shared = boundary.iter().fold(VertexSet::new(), |acc, &(a, b)| {
            acc.union(&self.td.bag(a).intersection(self.td.bag(b)))
        });
        let split = if nodes.len() == 1 {
            nodes[0]
        } else {
            let c = self.centroid(&nodes, id);
            if boundary.len() == 2 {
                let path = self.path(boundary[0].0, boundary[1].0, id);
                self.nearest(c, &path, id)
            } else {
                c
            }
        };
        let me = self.bags.len();
        self.bags.push(self.td.bag(split).union(&shared));
        self.parent.push(parent);

        // Collect the pieces of nodes - split before recursing: the piece
        // ids are overwritten on the way down.
        let mut sub_pieces = Vec::new();
        for &start in self.td.neighbors(split) {
            if self.piece[start] != id {
                continue;
            }
            let mut comp = vec![start];
            let mut seen = std::collections::HashSet::from([start, split]);
            let mut i = 0;
            while i < comp.len() {
                let t = comp[i];
                i += 1;
                for &s in self.td.neighbors(t) {
                    if self.piece[s] == id && seen.insert(s) {
                        comp.push(s);
                    }
                }
            }
            let mut sub_boundary = vec![(start, split)];
            sub_boundary.extend(
                boundary
                    .iter()
                    .copied()
                    .filter(|&(a, _)| seen.contains(&a) && a != split),
            );
            sub_pieces.push((comp, sub_boundary));
        }
        for (comp, _) in &sub_pieces {
            self.fresh_piece(comp);
        }
        for (comp, sub_boundary) in sub_pieces {
            self.build(comp, sub_boundary, Some(me));
        }
    }
}

/// Rebuilds a valid decomposition with `g` nodes as a rooted one of depth at
/// most [`depth_bound`]`(g)` and width at most `3w + 2`.
pub fn reduce_depth(td: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition> {
    if let Some(v) = validate_td(g, td).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    if td.num_nodes() == 0 {
        return Ok(TreeDecomposition::single(VertexSet::new()));
    }
    let nodes: Vec<usize> = (0..td.num_nodes()).collect();
    let mut r = Rebalancer {
        td,
        piece: vec![0; td.num_nodes()],
        next_piece: 1,
        bags: Vec::with_capacity(td.num_nodes()),
        parent: Vec::with_capacity(td.num_nodes()),
    };
    r.build(nodes, Vec::new(), None);
    Ok(TreeDecomposition::from_parents(r.bags, &r.parent, 0))
}
