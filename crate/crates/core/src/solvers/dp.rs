use std::collections::HashMap;

use super::{IndependentSetResult, Provenance};
use crate::decomp::{validate_td, NodeKind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_WIDTH_BUDGET: usize = 20;

/// Subsets of a bag are bitmasks over the bag's (sorted) positions.
type Table = HashMap<u64, usize>;

fn insert_bit(mask: u64, p: usize) -> u64 {
    let low = mask & ((1 << p) - 1);
    ((mask >> p) << (p + 1)) | low
}

fn remove_bit(mask: u64, p: usize) -> u64 {
    let low = mask & ((1 << p) - 1);
    ((mask >> (p + 1)) << p) | low
}

fn position(bag: &VertexSet, v: usize) -> usize {
    bag.as_slice()
        .binary_search(&v)
        .expect("vertex is in the bag")
}

/// Maximum independent set by the subset dynamic program over a nice
/// decomposition (leaf, introduce, forget and join nodes), with traceback.
///
/// Refuses decompositions whose largest bag exceeds `width_budget` vertices.
pub fn exact_mis_td_dp(
    g: &Graph,
    td: &TreeDecomposition,
    width_budget: usize,
) -> Result<IndependentSetResult> {
    if let Some(v) = validate_td(g, td).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let kinds = match td.kinds() {
        Some(k) => k.to_vec(),
        None => td.nice_kinds().map_err(|e| {
            Error::Contract(format!("dynamic program needs a nice decomposition: {e}"))
        })?,
    };
    let limit = width_budget.min(63);
    if td.max_bag_size() > limit {
        return Err(Error::Refused {
            solver: "td-dp".into(),
            n: td.max_bag_size(),
            budget: limit,
        });
    }
    let rooted = td.rooted().expect("nice decompositions are rooted");

    // Neighbourhood of each bag position inside its bag.
    let local_adj = |bag: &VertexSet| -> Vec<u64> {
        bag.iter()
            .map(|v| {
                bag.iter()
                    .enumerate()
                    .filter(|&(_, w)| g.has_edge(v, w))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect()
    };

    let mut tables: Vec<Table> = vec![Table::new(); td.num_nodes()];
    for t in rooted.post_order() {
        let bag = td.bag(t);
        let adj = local_adj(bag);
        let children = &rooted.children[t];
        let table = match kinds[t] {
            NodeKind::Leaf => {
                let mut table = Table::new();
                for mask in 0u64..1 << bag.len() {
                    let independent =
                        (0..bag.len()).all(|i| mask >> i & 1 == 0 || adj[i] & mask == 0);
                    if independent {
                        table.insert(mask, mask.count_ones() as usize);
                    }
                }
                table
            }
            NodeKind::Introduce(v) => {
                let p = position(bag, v);
                let mut table = Table::new();
                for (&cm, &val) in &tables[children[0]] {
                    let m = insert_bit(cm, p);
                    table.insert(m, val);
                    if adj[p] & m == 0 {
                        table.insert(m | 1 << p, val + 1);
                    }
                }
                table
            }
            NodeKind::Forget(v) => {
                let p = position(td.bag(children[0]), v);
                let mut table = Table::new();
                for (&cm, &val) in &tables[children[0]] {
                    let e = table.entry(remove_bit(cm, p)).or_insert(0);
                    *e = (*e).max(val);
                }
                table
            }
            NodeKind::Join => {
                let (a, b) = (&tables[children[0]], &tables[children[1]]);
                a.iter()
                    .filter_map(|(&m, &x)| b.get(&m).map(|&y| (m, x + y - m.count_ones() as usize)))
                    .collect()
            }
            NodeKind::Plain => unreachable!("nice decompositions have no plain nodes"),
        };
        tables[t] = table;
    }

    // Traceback from the best root state (smallest mask on ties).
    let root = rooted.root;
    let (&root_mask, _) = tables[root]
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .expect("every bag admits the empty subset");
    let mut chosen = Vec::new();
    let mut stack = vec![(root, root_mask)];
    while let Some((t, mask)) = stack.pop() {
        let bag = td.bag(t);
        chosen.extend(
            bag.iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v),
        );
        let children = &rooted.children[t];
        match kinds[t] {
            NodeKind::Leaf | NodeKind::Plain => {}
            NodeKind::Introduce(v) => stack.push((children[0], remove_bit(mask, position(bag, v)))),
            NodeKind::Forget(v) => {
                let c = children[0];
                let p = position(td.bag(c), v);
                let target = tables[t][&mask];
                let without = insert_bit(mask, p);
                let cm = if tables[c].get(&without) == Some(&target) {
                    without
                } else {
                    without | 1 << p
                };
                debug_assert_eq!(tables[c].get(&cm), Some(&target));
                stack.push((c, cm));
            }
            NodeKind::Join => {
                stack.push((children[0], mask));
                stack.push((children[1], mask));
            }
        }
    }
    let set = VertexSet::from_vec(chosen);
    debug_assert_eq!(set.len(), tables[root][&root_mask]);
    Ok(IndependentSetResult::new(g, set, Provenance::Exact))
}
