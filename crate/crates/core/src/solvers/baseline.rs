use super::{exact_mis_td_dp, IndependentSetResult, Provenance};
use crate::decomp::{make_nice, validate_td, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};

/// Width-splitting baseline: colour the vertices with `r` classes so that
/// every bag is spread evenly over the classes, solve each class exactly on
/// the restricted decomposition, and return the best class solution.
///
/// Vertices are coloured top-down from the root, each at its first bag, with
/// the least used class inside that bag.
pub fn czumaj_partition(
    g: &Graph,
    td: &TreeDecomposition,
    r: usize,
    dp_budget: usize,
) -> Result<IndependentSetResult> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "number of classes must be positive".into(),
        ));
    }
    if let Some(v) = validate_td(g, td).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    if td.num_nodes() > 0 {
        let rooted = td
            .clone()
            .with_root(td.root().unwrap_or(0))
            .rooted()
            .expect("valid decompositions are trees");
        for &t in &rooted.order {
            let bag = td.bag(t);
            let mut load = vec![0usize; r];
            for v in bag.iter().filter(|&v| colour[v] != usize::MAX) {
                load[colour[v]] += 1;
            }
            for v in bag.iter() {
                if colour[v] != usize::MAX {
                    continue;
                }
                let c = (0..r).min_by_key(|&c| (load[c], c)).unwrap();
                colour[v] = c;
                load[c] += 1;
            }
        }
    }

    let mut best = IndependentSetResult::empty(Provenance::WidthPartition(r));
    for c in 0..r {
        let class: VertexSet = (0..n).filter(|&v| colour[v] == c).collect();
        if class.len() <= best.size() {
            continue;
        }
        let sub = induced_subgraph(g, &class);
        let mut index = vec![usize::MAX; n];
        for (i, v) in class.iter().enumerate() {
            index[v] = i;
        }
        let local = td.restrict(&class).relabel(|v| index[v]);
        let nice = make_nice(&local, &sub)?;
        let res = exact_mis_td_dp(&sub, &nice, dp_budget)?.lift(&sub);
        if res.size() > best.size() {
            best = IndependentSetResult::new(g, res.set, Provenance::WidthPartition(r));
        }
    }
    Ok(best)
}
