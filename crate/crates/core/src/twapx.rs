//! Approximation parameterized by the width of a tree decomposition.
//!
//! Three candidates are computed and the largest is returned: the greedy
//! solution, one private vertex per leaf of a leaf-unique decomposition, and
//! the union of per-component solutions after chopping the decomposition
//! into pieces with few leaves. Each piece is solved twice: once on the
//! vertices outside branch-node bags (a path decomposition problem), once
//! layer by layer on the branch-node vertices.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{
    branch_bag_union, branch_nodes, chop_subtrees, contract_to_branch_td, make_leaf_unique,
    make_nice, path_decomp_minus_q, reduce_depth, validate_td, TreeDecomposition,
};
use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Graph, VertexSet};
use crate::pwapx::approx_pw;
use crate::solvers::{greedy_degeneracy, BlackBox, IndependentSetResult, Provenance};

/// One vertex of occurrence count 1 (the smallest) from every leaf bag.
pub fn leaf_unique_candidate(g: &Graph, td: &TreeDecomposition) -> Result<IndependentSetResult> {
    let count = td.occurrence_counts(g.n());
    let mut chosen = Vec::new();
    for t in td.leaves() {
        match td.bag(t).iter().find(|&v| count[v] == 1) {
            Some(v) => chosen.push(v),
            None => {
                return Err(Error::Contract(format!(
                    "leaf {t} has no vertex of its own"
                )))
            }
        }
    }
    Ok(IndependentSetResult::new(
        g,
        VertexSet::from_vec(chosen),
        Provenance::LeafSet,
    ))
}

/// Layers of a rooted decomposition: layer `i` holds the vertices whose
/// highest bag is at distance `i` from the root. There are `depth + 1` layers.
pub fn level_split_q(td: &TreeDecomposition) -> Result<Vec<VertexSet>> {
    let rooted = td
        .rooted()
        .ok_or_else(|| Error::Contract("layering needs a rooted decomposition".into()))?;
    let depth = rooted.depth.iter().copied().max().unwrap_or(0);
    let mut layer_of: Vec<(usize, usize)> = Vec::new();
    let mut seen = VertexSet::new();
    // Breadth-first order visits every vertex first at its highest bag.
    for &t in &rooted.order {
        let fresh = td.bag(t).difference(&seen);
        layer_of.extend(fresh.iter().map(|v| (rooted.depth[t], v)));
        seen = seen.union(&fresh);
    }
    let mut layers = vec![Vec::new(); depth + 1];
    for (d, v) in layer_of {
        layers[d].push(v);
    }
    Ok(layers.into_iter().map(VertexSet::from_vec).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Path decomposition of `C - Q`.
    PathMinusQ,
    /// Layers of the branch-node vertices `Q`.
    QLayers,
}

/// What happened inside one chopped component.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentTrace {
    pub size: usize,
    pub leaves: usize,
    pub branch_nodes: usize,
    pub q_size: usize,
    /// Width of the path decomposition of `C - Q` (`None` when `C - Q` is empty).
    pub path_width: Option<usize>,
    pub cq_nodes: usize,
    pub cq_width: Option<usize>,
    pub rebalanced_width: Option<usize>,
    pub rebalanced_depth: Option<usize>,
    pub layer_count: usize,
    /// Largest connected component inside one layer.
    pub max_layer_component: usize,
    pub branch_a: usize,
    pub branch_b: Option<usize>,
    pub chosen: Branch,
}

/// Solves one component `c` with decomposition `tc` and returns the better
/// of the two branches (the path branch on ties), in `c`'s identifiers.
pub fn approx_component(
    c: &Graph,
    tc: &TreeDecomposition,
    bb: &dyn BlackBox,
) -> Result<(IndependentSetResult, ComponentTrace)> {
    let q = branch_bag_union(tc);
    let mut trace = ComponentTrace {
        size: c.n(),
        leaves: tc.leaves().len(),
        branch_nodes: branch_nodes(tc).len(),
        q_size: q.len(),
        path_width: None,
        cq_nodes: 0,
        cq_width: None,
        rebalanced_width: None,
        rebalanced_depth: None,
        layer_count: 0,
        max_layer_component: 0,
        branch_a: 0,
        branch_b: None,
        chosen: Branch::PathMinusQ,
    };

    let (rest, pd) = path_decomp_minus_q(tc, &q, c)?;
    let a = if rest.n() == 0 {
        IndependentSetResult::empty(Provenance::Greedy)
    } else {
        trace.path_width = Some(pd.width());
        approx_pw(&rest, &pd, bb)?.lift(&rest)
    };
    trace.branch_a = a.size();
    if q.is_empty() {
        return Ok((a, trace));
    }

    let (cq, tq) = contract_to_branch_td(tc, &q, c)?;
    trace.cq_nodes = tq.num_nodes();
    trace.cq_width = Some(tq.width());
    let tj = reduce_depth(&tq, &cq)?;
    trace.rebalanced_width = Some(tj.width());
    trace.rebalanced_depth = tj.depth();
    let layers = level_split_q(&tj)?;
    trace.layer_count = layers.len();

    let mut b = IndependentSetResult::empty(Provenance::QLevel(0));
    for (i, layer) in layers.iter().enumerate() {
        let h = induced_subgraph(&cq, layer);
        let mut union = Vec::new();
        for comp in connected_components(&h) {
            trace.max_layer_component = trace.max_layer_component.max(comp.len());
            let piece = induced_subgraph(&h, &comp);
            let sol = bb.run(&piece)?.lift(&piece);
            union.extend(sol.set.into_vec());
        }
        if union.len() > b.size() {
            let set = h.lift(&VertexSet::from_vec(union));
            b = IndependentSetResult::new(&cq, set, Provenance::QLevel(i));
        }
    }
    let b = b.lift(&cq);
    trace.branch_b = Some(b.size());
    if b.size() > a.size() {
        trace.chosen = Branch::QLayers;
        Ok((IndependentSetResult::new(c, b.set, b.provenance), trace))
    } else {
        Ok((a, trace))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub provenance: String,
    pub size: usize,
}

/// Record of one run of [`approx_tw`].
#[derive(Clone, Debug, Serialize)]
pub struct PipelineTrace {
    /// Largest bag size of the input decomposition.
    pub k: usize,
    pub f_k: usize,
    /// Leaf budget `2 f(k)` for chopping.
    pub ell: usize,
    pub nice_nodes: usize,
    pub leaf_unique_nodes: usize,
    pub leaf_count: usize,
    pub removed: usize,
    pub chop_iterations: usize,
    pub components: Vec<ComponentTrace>,
    pub candidates: Vec<Candidate>,
    pub final_size: usize,
    pub final_provenance: String,
}

/// Approximates a maximum independent set of `g` given a valid tree
/// decomposition `td` and a black box.
pub fn approx_tw(
    g: &Graph,
    td: &TreeDecomposition,
    bb: &dyn BlackBox,
) -> Result<(IndependentSetResult, PipelineTrace)> {
    if let Some(v) = validate_td(g, td).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let k = td.max_bag_size();
    let f_k = bb.ratio(k);
    let ell = 2 * f_k;
    let mut trace = PipelineTrace {
        k,
        f_k,
        ell,
        nice_nodes: 0,
        leaf_unique_nodes: 0,
        leaf_count: 0,
        removed: 0,
        chop_iterations: 0,
        components: Vec::new(),
        candidates: Vec::new(),
        final_size: 0,
        final_provenance: Provenance::Greedy.to_string(),
    };
    let mut candidates = vec![greedy_degeneracy(g)];
    if g.n() > 0 {
        let nice = make_nice(td, g)?;
        trace.nice_nodes = nice.num_nodes();
        let lu = make_leaf_unique(&nice, g)?;
        trace.leaf_unique_nodes = lu.num_nodes();
        let leaf = leaf_unique_candidate(g, &lu)?;
        trace.leaf_count = leaf.size();
        candidates.push(leaf);

        let chop = chop_subtrees(g, &lu, ell)?;
        trace.removed = chop.removed.len();
        trace.chop_iterations = chop.iterations;
        let solved: Vec<(IndependentSetResult, ComponentTrace)> = chop
            .parts
            .par_iter()
            .map(|part| {
                let (res, ct) = approx_component(&part.graph, &part.td, bb)?;
                Ok((res.lift(&part.graph), ct))
            })
            .collect::<Result<_>>()?;
        let mut union = Vec::new();
        for (res, ct) in solved {
            union.extend(res.set.into_vec());
            trace.components.push(ct);
        }
        candidates.push(IndependentSetResult::new(
            g,
            VertexSet::from_vec(union),
            Provenance::ChopUnion,
        ));
    }

    trace.candidates = candidates
        .iter()
        .map(|c| Candidate {
            provenance: c.provenance.to_string(),
            size: c.size(),
        })
        .collect();
    let mut best = candidates.swap_remove(0);
    for c in candidates {
        if c.size() > best.size() {
            best = c;
        }
    }
    trace.final_size = best.size();
    trace.final_provenance = best.provenance.to_string();
    Ok((best, trace))
}
