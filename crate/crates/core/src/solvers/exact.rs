use super::{greedy_degeneracy, IndependentSetResult, Provenance};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_BUDGET: usize = 30;

/// Bitset width of the branch-and-bound search.
pub const MAX_EXACT_VERTICES: usize = 128;

struct Search {
    nbr: Vec<u128>,
    best: u128,
    best_size: u32,
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn lowest(mask: u128) -> usize {
    mask.trailing_zeros() as usize
}

impl Search {
    /// Number of cliques in a greedy clique cover of `cand`; bounds the
    /// independence number of the candidate set from above.
    fn clique_cover(&self, mut cand: u128) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = lowest(cand);
            let mut clique = bit(v);
            let mut common = self.nbr[v] & cand;
            while common != 0 {
                let u = lowest(common);
                clique |= bit(u);
                common &= self.nbr[u];
            }
            cand &= !clique;
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, mut cand: u128, mut chosen: u128, mut size: u32) {
        // Vertices of degree <= 1 inside the candidate set can always be taken.
        loop {
            let mut changed = false;
            let mut scan = cand;
            while scan != 0 {
                let v = lowest(scan);
                scan &= scan - 1;
                if cand & bit(v) == 0 {
                    continue;
                }
                if (self.nbr[v] & cand).count_ones() <= 1 {
                    chosen |= bit(v);
                    size += 1;
                    cand &= !(self.nbr[v] | bit(v));
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + cand.count_ones() <= self.best_size
            || size + self.clique_cover(cand) <= self.best_size
        {
            return;
        }
        let mut pivot = lowest(cand);
        let mut pivot_deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = lowest(scan);
            scan &= scan - 1;
            let d = (self.nbr[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.run(
            cand & !(self.nbr[pivot] | bit(pivot)),
            chosen | bit(pivot),
            size + 1,
        );
        self.run(cand & !bit(pivot), chosen, size);
    }
}

/// Maximum independent set by branch and bound: branch on a vertex of
/// highest degree (take it or drop it), take degree-0/1 vertices eagerly,
/// and prune with a greedy clique cover against the best set so far, which
/// starts as the degeneracy-greedy solution.
///
/// Refuses graphs with more than `budget` vertices (or more than
/// [`MAX_EXACT_VERTICES`]).
pub fn exact_mis_bruteforce(g: &Graph, budget: usize) -> Result<IndependentSetResult> {
    let limit = budget.min(MAX_EXACT_VERTICES);
    if g.n() > limit {
        return Err(Error::Refused {
            solver: "exact".into(),
            n: g.n(),
            budget: limit,
        });
    }
    let nbr: Vec<u128> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | bit(w)))
        .collect();
    let start = greedy_degeneracy(g).set;
    let mut search = Search {
        nbr,
        best: start.iter().fold(0u128, |m, v| m | bit(v)),
        best_size: start.len() as u32,
    };
    let all = if g.n() == 128 {
        u128::MAX
    } else {
        bit(g.n()) - 1
    };
    search.run(all, 0, 0);
    let set: VertexSet = (0..g.n()).filter(|&v| search.best & bit(v) != 0).collect();
    Ok(IndependentSetResult::new(g, set, Provenance::Exact))
}
