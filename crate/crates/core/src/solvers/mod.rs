//! Exact oracles, the degeneracy greedy, and pluggable black-box approximators.

mod baseline;
mod blackbox;
mod dp;
mod exact;
mod greedy;

pub use baseline::czumaj_partition;
pub use blackbox::{
    box_clique_removal, box_exact, clamp_ratio, parse_box, BlackBox, CliqueRemovalBox, ExactBox,
};
pub use dp::{exact_mis_td_dp, DEFAULT_WIDTH_BUDGET};
pub use exact::{exact_mis_bruteforce, DEFAULT_BUDGET, MAX_EXACT_VERTICES};
pub use greedy::greedy_degeneracy;

use std::fmt;

use crate::graph::{is_independent_set, Graph, VertexSet};

/// Which step of which algorithm produced a solution.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Greedy,
    LeafSet,
    /// Level `i` of the length partition of a path decomposition.
    PwLevel(usize),
    /// Layer `i` (root distance) of the rebalanced branch-node decomposition.
    QLevel(usize),
    Exact,
    BlackBox(String),
    /// Union of per-component solutions after chopping.
    ChopUnion,
    /// Best class of a width-splitting partition into `r` classes.
    WidthPartition(usize),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Greedy => write!(f, "greedy"),
            Provenance::LeafSet => write!(f, "leaf-set"),
            Provenance::PwLevel(i) => write!(f, "pw-level-{i}"),
            Provenance::QLevel(i) => write!(f, "Q-level-{i}"),
            Provenance::Exact => write!(f, "exact"),
            Provenance::BlackBox(name) => write!(f, "black-box:{name}"),
            Provenance::ChopUnion => write!(f, "chop-union"),
            Provenance::WidthPartition(r) => write!(f, "width-partition-{r}"),
        }
    }
}

/// An independent set together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSetResult {
    pub set: VertexSet,
    pub provenance: Provenance,
}

impl IndependentSetResult {
    /// Wraps `set`, which must be independent in `g`. Checked in debug and test builds.
    pub fn new(g: &Graph, set: VertexSet, provenance: Provenance) -> Self {
        debug_assert!(
            is_independent_set(g, &set),
            "{provenance} produced a set that is not independent"
        );
        IndependentSetResult { set, provenance }
    }

    pub fn empty(provenance: Provenance) -> Self {
        IndependentSetResult {
            set: VertexSet::new(),
            provenance,
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// Translates the set into the parent graph of the induced subgraph `sub`.
    pub fn lift(self, sub: &Graph) -> Self {
        IndependentSetResult {
            set: sub.lift(&self.set),
            provenance: self.provenance,
        }
    }
}
