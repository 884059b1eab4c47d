//! Approximation parameterized by the width of a path decomposition.
//!
//! Vertices are grouped by their length (number of bags of a nice path
//! decomposition that hold them). Inside one length class the path is cut
//! into blocks that the black box solves independently.

use rayon::prelude::*;

use crate::decomp::{make_nice_path, validate_pd, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::solvers::{clamp_ratio, greedy_degeneracy, BlackBox, IndependentSetResult, Provenance};

/// Length classes of a nice path decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    /// Largest bag size.
    pub k: usize,
    /// Clamped ratio `f(k)`.
    pub f_k: usize,
    /// `lengths[v]` = number of bags containing `v`.
    pub lengths: Vec<usize>,
    /// `V_0, ..., V_m`.
    pub levels: Vec<VertexSet>,
    /// Vertices longer than every level.
    pub long: VertexSet,
    /// Largest length inside each level, 1 for an empty level.
    pub max_len: Vec<usize>,
}

impl LevelPartition {
    /// Index `m` of the last level.
    pub fn m(&self) -> usize {
        self.levels.len() - 1
    }

    /// Half-open length range `[lo, hi)` of level `i`.
    pub fn range(&self, i: usize) -> (usize, usize) {
        level_range(self.k, i)
    }

    /// Smallest length of a long vertex.
    pub fn long_threshold(&self) -> usize {
        self.k << (self.m() + 1)
    }
}

fn level_range(k: usize, i: usize) -> (usize, usize) {
    if i == 0 {
        (0, 2 * k)
    } else {
        (k << i, k << (i + 1))
    }
}

/// `ceil(log2 x)` for `x >= 1`.
fn ceil_log2(x: usize) -> usize {
    (usize::BITS - (x.max(1) - 1).leading_zeros()) as usize
}

/// Blocks of one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub level_index: usize,
    /// Largest length in the level.
    pub l: usize,
    /// `X_r = B_{2Lr} ∩ V_i` for `r = 1..=floor(2n / 2L)`.
    pub x_blocks: Vec<VertexSet>,
    /// `Y_r`: the remaining level vertices whose bags all lie in
    /// `B_{2L(r-1)+1}..B_{2Lr-1}`, for `r = 1..=ceil(2n / 2L)`.
    pub y_blocks: Vec<VertexSet>,
}

impl BlockPartition {
    pub fn x(&self) -> VertexSet {
        self.x_blocks
            .iter()
            .fold(VertexSet::new(), |a, b| a.union(b))
    }

    pub fn y(&self) -> VertexSet {
        self.y_blocks
            .iter()
            .fold(VertexSet::new(), |a, b| a.union(b))
    }
}

fn check_nice(g: &Graph, pd: &PathDecomposition) -> Result<()> {
    if pd.len() != 2 * g.n() || !pd.is_nice() || pd.bags().first().is_some_and(|b| b.len() != 1) {
        return Err(Error::NotNice(format!(
            "expected a nice path decomposition with {} bags, got {} bags",
            2 * g.n(),
            pd.len()
        )));
    }
    Ok(())
}

/// Number of bags holding each vertex. `pd` must be nice with exactly `2n` bags.
pub fn vertex_lengths(g: &Graph, pd: &PathDecomposition) -> Result<Vec<usize>> {
    check_nice(g, pd)?;
    let mut len = vec![0; g.n()];
    for bag in pd.bags() {
        for v in bag {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            len[v] += 1;
        }
    }
    Ok(len)
}

/// Splits the vertices into `V_0` (length below `2k`), `V_i` (length in
/// `[k 2^i, k 2^(i+1))` for `i = 1..=m`) and the long vertices (length at
/// least `k 2^(m+1)`), where `m = ceil(log2 f(k)) + 1`.
pub fn level_partition(
    g: &Graph,
    pd: &PathDecomposition,
    f: impl Fn(usize) -> usize,
) -> Result<LevelPartition> {
    let lengths = vertex_lengths(g, pd)?;
    let k = pd.max_bag_size();
    let f_k = clamp_ratio(f(k), k);
    let m = ceil_log2(f_k) + 1;
    let mut levels = vec![Vec::new(); m + 1];
    let mut long = Vec::new();
    for (v, &len) in lengths.iter().enumerate() {
        match (0..=m).find(|&i| len < level_range(k, i).1) {
            Some(i) => levels[i].push(v),
            None => long.push(v),
        }
    }
    let levels: Vec<VertexSet> = levels.into_iter().map(VertexSet::from_vec).collect();
    let max_len = levels
        .iter()
        .map(|lv| lv.iter().map(|v| lengths[v]).max().unwrap_or(1))
        .collect();
    Ok(LevelPartition {
        k,
        f_k,
        lengths,
        levels,
        long: VertexSet::from_vec(long),
        max_len,
    })
}

/// Cuts `level` into X and Y blocks along the nice path decomposition `pd`.
/// Bags are numbered from 1.
pub fn block_partition(
    level: &VertexSet,
    level_index: usize,
    pd: &PathDecomposition,
    lengths: &[usize],
) -> Result<BlockPartition> {
    if level.max_vertex().is_some_and(|v| v >= lengths.len()) {
        return Err(Error::InvalidParameter(
            "level vertex without a length".into(),
        ));
    }
    let l = level.iter().map(|v| lengths[v]).max().unwrap_or(1).max(1);
    if level.is_empty() {
        return Ok(BlockPartition {
            level_index,
            l,
            x_blocks: Vec::new(),
            y_blocks: Vec::new(),
        });
    }
    let bags = pd.bags();
    let span = 2 * l;
    let x_blocks: Vec<VertexSet> = (1..=bags.len() / span)
        .map(|r| bags[span * r - 1].intersection(level))
        .collect();
    let x = x_blocks.iter().fold(VertexSet::new(), |a, b| a.union(b));

    let mut first = vec![usize::MAX; lengths.len()];
    let mut last = vec![0; lengths.len()];
    for (j, bag) in bags.iter().enumerate() {
        for v in bag.iter().filter(|&v| level.contains(v)) {
            first[v] = first[v].min(j + 1);
            last[v] = j + 1;
        }
    }
    let mut y_blocks = vec![Vec::new(); bags.len().div_ceil(span)];
    for v in level.difference(&x).iter() {
        if first[v] == usize::MAX || lengths[v] != last[v] - first[v] + 1 {
            return Err(Error::InvalidParameter(format!(
                "length of vertex {v} does not match the decomposition"
            )));
        }
        let r = first[v].div_ceil(span);
        debug_assert!(last[v] < span * r, "vertex {v} reaches a cut bag");
        y_blocks[r - 1].push(v);
    }
    Ok(BlockPartition {
        level_index,
        l,
        x_blocks,
        y_blocks: y_blocks.into_iter().map(VertexSet::from_vec).collect(),
    })
}

fn solve_blocks(g: &Graph, blocks: &[VertexSet], bb: &dyn BlackBox) -> Result<VertexSet> {
    let mut out = Vec::new();
    for block in blocks.iter().filter(|b| !b.is_empty()) {
        let sub = induced_subgraph(g, block);
        out.extend(bb.run(&sub)?.lift(&sub).set.into_vec());
    }
    Ok(VertexSet::from_vec(out))
}

/// Solves every block with the black box and returns the larger of the
/// X-union and the Y-union (X on ties).
pub fn approx_level(
    g: &Graph,
    blocks: &BlockPartition,
    bb: &dyn BlackBox,
) -> Result<IndependentSetResult> {
    let x = solve_blocks(g, &blocks.x_blocks, bb)?;
    let y = solve_blocks(g, &blocks.y_blocks, bb)?;
    let best = if x.len() >= y.len() { x } else { y };
    Ok(IndependentSetResult::new(
        g,
        best,
        Provenance::PwLevel(blocks.level_index),
    ))
}

/// Largest of the greedy solution and the per-level solutions for a valid
/// path decomposition of `g`.
pub fn approx_pw(
    g: &Graph,
    pd: &PathDecomposition,
    bb: &dyn BlackBox,
) -> Result<IndependentSetResult> {
    if let Some(v) = validate_pd(g, pd).first_violation() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let nice = make_nice_path(pd, g)?;
    let part = level_partition(g, &nice, |k| bb.ratio(k))?;
    let levels: Vec<IndependentSetResult> = part
        .levels
        .par_iter()
        .enumerate()
        .filter(|(_, level)| !level.is_empty())
        .map(|(i, level)| {
            let blocks = block_partition(level, i, &nice, &part.lengths)?;
            approx_level(g, &blocks, bb)
        })
        .collect::<Result<_>>()?;
    let mut best = greedy_degeneracy(g);
    for cand in levels {
        if cand.size() > best.size() {
            best = cand;
        }
    }
    Ok(best)
}
