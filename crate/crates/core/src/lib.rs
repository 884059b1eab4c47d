//! Approximate maximum independent set on graphs of bounded treewidth,
//! using any `n / f(n)` approximation algorithm as a black box.

pub mod audit;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod pwapx;
pub mod solvers;
pub mod twapx;

pub use decomp::{PathDecomposition, TreeDecomposition};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solvers::{BlackBox, IndependentSetResult, Provenance};
pub use twapx::{approx_tw, PipelineTrace};
