//! Structural checks of every pipeline stage, recomputed from scratch.

use serde::Serialize;

use crate::decomp::{
    branch_bag_union, branch_nodes, chop_subtrees, contract_to_branch_td, make_leaf_unique,
    make_nice, make_nice_path, path_decomp_minus_q, reduce_depth, validate_pd, validate_td,
    PathDecomposition, TreeDecomposition,
};
use crate::error::Result;
use crate::graph::{connected_components, induced_subgraph, is_independent_set, Graph, VertexSet};
use crate::pwapx::{block_partition, level_partition};
use crate::solvers::BlackBox;
use crate::twapx::level_split_q;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample, empty when passed.
    pub detail: String,
}

#[derive(Default)]
struct Checks {
    list: Vec<Check>,
}

impl Checks {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        match self.list.iter_mut().find(|c| c.name == name) {
            Some(c) => {
                if c.passed && !ok {
                    c.passed = false;
                    c.detail = detail();
                }
            }
            None => self.list.push(Check {
                name,
                passed: ok,
                detail: if ok { String::new() } else { detail() },
            }),
        }
    }
}

/// Largest connected piece of `g[s]`.
fn largest_component(g: &Graph, s: &VertexSet) -> usize {
    let h = induced_subgraph(g, s);
    connected_components(&h)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

/// True if no edge of `g` joins two different sets of `blocks`.
pub fn no_cross_edges(g: &Graph, blocks: &[VertexSet]) -> bool {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for v in b {
            owner[v] = i;
        }
    }
    g.edges()
        .all(|(u, v)| owner[u] == usize::MAX || owner[v] == usize::MAX || owner[u] == owner[v])
}

/// Checks the length-class bounds on a path decomposition `pd` of `g`.
fn audit_levels(
    checks: &mut Checks,
    g: &Graph,
    pd: &PathDecomposition,
    bb: &dyn BlackBox,
) -> Result<()> {
    let nice = make_nice_path(pd, g)?;
    checks.record(
        "nice-path-2n-bags",
        nice.len() == 2 * g.n() && nice.is_nice(),
        || format!("{} bags for n = {}", nice.len(), g.n()),
    );
    let part = level_partition(g, &nice, |k| bb.ratio(k))?;
    let k = part.k;
    let mut cover = vec![0usize; g.n()];
    for s in part.levels.iter().chain(std::iter::once(&part.long)) {
        for v in s {
            cover[v] += 1;
        }
    }
    checks.record(
        "level-partition-exact",
        cover.iter().all(|&c| c == 1),
        || "a vertex lies in zero or several levels".into(),
    );
    checks.record(
        "long-vertices-bound",
        2 * part.f_k * part.long.len() <= g.n(),
        || {
            format!(
                "|V'| = {} with n = {}, f(k) = {}",
                part.long.len(),
                g.n(),
                part.f_k
            )
        },
    );
    for (i, level) in part.levels.iter().enumerate() {
        let blocks = block_partition(level, i, &nice, &part.lengths)?;
        let bad_x = blocks.x_blocks.iter().find(|b| b.len() > k);
        checks.record("x-block-size", bad_x.is_none(), || {
            format!("level {i}: |X_r| = {} > k = {k}", bad_x.unwrap().len())
        });
        let bad_y = blocks.y_blocks.iter().find(|b| b.len() > 4 * k);
        checks.record("y-block-size", bad_y.is_none(), || {
            format!(
                "level {i}: |Y_r| = {} > 4k = {}",
                bad_y.unwrap().len(),
                4 * k
            )
        });
        let cover = blocks.x().union(&blocks.y()) == *level && blocks.x().is_disjoint(&blocks.y());
        checks.record("block-cover", cover, || {
            format!("level {i} blocks do not partition the level")
        });
        let clean = no_cross_edges(g, &blocks.x_blocks) && no_cross_edges(g, &blocks.y_blocks);
        checks.record("block-cross-edges", clean, || {
            format!("level {i} has an edge between blocks")
        });
    }
    Ok(())
}

/// Runs every structural check of the pipeline on `(g, td)` and, if given,
/// checks that `solution` is independent.
pub fn audit_pipeline(
    g: &Graph,
    td: &TreeDecomposition,
    bb: &dyn BlackBox,
    solution: Option<&VertexSet>,
) -> Result<Vec<Check>> {
    let mut checks = Checks::default();
    let report = validate_td(g, td);
    checks.record("input-valid", report.is_valid(), || {
        report.first_violation().unwrap().to_string()
    });
    if !report.is_valid() {
        return Ok(checks.list);
    }
    if let Some(s) = solution {
        let ok = s.max_vertex().is_none_or(|v| v < g.n()) && is_independent_set(g, s);
        checks.record("solution-independent", ok, || {
            "two chosen vertices are adjacent".into()
        });
    }
    if g.n() == 0 {
        return Ok(checks.list);
    }
    let n = g.n();
    let k = td.max_bag_size();
    let ell = 2 * bb.ratio(k);

    let nice = make_nice(td, g)?;
    checks.record(
        "nice-valid",
        validate_td(g, &nice).is_valid() && nice.is_nice(),
        || "nice output invalid".into(),
    );
    checks.record("nice-node-bound", nice.num_nodes() <= 4 * n, || {
        format!("{} nodes for n = {n}", nice.num_nodes())
    });
    checks.record("nice-width", nice.max_bag_size() <= k, || {
        format!("width grew to {}", nice.width())
    });

    let lu = make_leaf_unique(&nice, g)?;
    let count = lu.occurrence_counts(n);
    let leaves = lu.leaves();
    let bad_leaf = leaves
        .iter()
        .find(|&&t| !lu.bag(t).iter().any(|v| count[v] == 1));
    checks.record(
        "leaf-unique",
        bad_leaf.is_none() && validate_td(g, &lu).is_valid() && lu.is_nice(),
        || format!("leaf {} has no private vertex", bad_leaf.map_or(0, |t| *t)),
    );

    let depth = reduce_depth(td, g)?;
    let bound = crate::decomp::depth_bound(td.num_nodes());
    checks.record(
        "rebalance-input",
        validate_td(g, &depth).is_valid()
            && depth.max_bag_size() <= 3 * k
            && depth.depth().unwrap_or(0) <= bound,
        || {
            format!(
                "width {} depth {:?} (bound {bound})",
                depth.width(),
                depth.depth()
            )
        },
    );

    let chop = chop_subtrees(g, &lu, ell)?;
    checks.record(
        "chop-removed-bound",
        chop.removed.len() * ell <= k * leaves.len(),
        || {
            format!(
                "|X| = {} with k = {k}, |L| = {}, l = {ell}",
                chop.removed.len(),
                leaves.len()
            )
        },
    );
    let sets: Vec<VertexSet> = chop
        .parts
        .iter()
        .map(|p| p.graph.lift(&VertexSet::full(p.graph.n())))
        .collect();
    let mut cover = vec![0usize; n];
    for v in chop
        .removed
        .iter()
        .chain(sets.iter().flat_map(|s| s.iter()))
    {
        cover[v] += 1;
    }
    checks.record("chop-partition", cover.iter().all(|&c| c == 1), || {
        "parts and X do not partition V".into()
    });
    checks.record("chop-cross-edges", no_cross_edges(g, &sets), || {
        "an edge joins two parts".into()
    });

    for part in &chop.parts {
        let (c, tc) = (&part.graph, &part.td);
        checks.record("part-valid", validate_td(c, tc).is_valid(), || {
            "part decomposition invalid".into()
        });
        checks.record("part-leaves", tc.leaves().len() <= ell, || {
            format!("{} leaves > {ell}", tc.leaves().len())
        });
        let branches = branch_nodes(tc).len();
        checks.record("part-branch-nodes", branches < ell, || {
            format!("{branches} branch nodes with leaf budget {ell}")
        });
        let q = branch_bag_union(tc);

        let (rest, pd) = path_decomp_minus_q(tc, &q, c)?;
        checks.record(
            "path-minus-q",
            validate_pd(&rest, &pd).is_valid() && pd.max_bag_size() <= k,
            || format!("C - Q path width {} > k - 1 = {}", pd.width(), k - 1),
        );
        if rest.n() > 0 {
            audit_levels(&mut checks, &rest, &pd, bb)?;
        }
        if q.is_empty() {
            continue;
        }
        let (cq, tq) = contract_to_branch_td(tc, &q, c)?;
        checks.record(
            "cq-decomposition",
            validate_td(&cq, &tq).is_valid()
                && tq.max_bag_size() <= 2 * k
                && tq.num_nodes() <= 2 * branches,
            || {
                format!(
                    "width {} nodes {} with {branches} branch nodes",
                    tq.width(),
                    tq.num_nodes()
                )
            },
        );
        let tj = reduce_depth(&tq, &cq)?;
        checks.record(
            "cq-rebalanced",
            validate_td(&cq, &tj).is_valid() && tj.max_bag_size() <= 6 * k,
            || format!("rebalanced width {} > 6k - 1", tj.width()),
        );
        let layers = level_split_q(&tj)?;
        let big = layers
            .iter()
            .map(|h| largest_component(&cq, h))
            .max()
            .unwrap_or(0);
        checks.record("layer-components", big <= 6 * k, || {
            format!("layer component of {big} > 6k = {}", 6 * k)
        });
        let mut seen = VertexSet::new();
        let disjoint = layers.iter().all(|h| {
            let ok = seen.is_disjoint(h);
            seen = seen.union(h);
            ok
        });
        checks.record(
            "layer-partition",
            disjoint && seen == VertexSet::full(cq.n()),
            || "layers do not partition Q".into(),
        );
    }
    Ok(checks.list)
}
