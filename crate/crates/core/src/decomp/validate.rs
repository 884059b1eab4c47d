use std::fmt;

use super::{PathDecomposition, TreeDecomposition};
use crate::graph::Graph;

/// A concrete reason a decomposition fails to be valid for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The node/edge structure is not a single tree.
    NotATree { nodes: usize, edges: usize },
    /// A bag names a vertex the graph does not have.
    UnknownVertex { node: usize, vertex: usize },
    /// Vertex coverage: the vertex occurs in no bag.
    MissingVertex(usize),
    /// Edge coverage: no bag contains both endpoints.
    UncoveredEdge(usize, usize),
    /// Connectivity: the bags containing the vertex do not form a subtree.
    DisconnectedOccurrence(usize),
}

impl Violation {
    /// Human-readable description with vertex identifiers shifted by `offset`
    /// (use 1 for PACE-style output).
    pub fn describe(&self, offset: usize) -> String {
        match *self {
            Violation::NotATree { nodes, edges } => {
                format!("decomposition tree with {nodes} nodes and {edges} edges is not a tree")
            }
            Violation::UnknownVertex { node, vertex } => {
                format!(
                    "bag {} contains unknown vertex {}",
                    node + offset,
                    vertex + offset
                )
            }
            Violation::MissingVertex(v) => format!("vertex {} is in no bag", v + offset),
            Violation::UncoveredEdge(u, v) => {
                format!(
                    "edge ({},{}) is not contained in any bag",
                    u + offset,
                    v + offset
                )
            }
            Violation::DisconnectedOccurrence(v) => {
                format!("bags containing vertex {} are not connected", v + offset)
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(0))
    }
}

/// Outcome of [`validate_td`]: the width plus every violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub width: usize,
    pub nodes: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tree_shape_ok(&self) -> bool {
        !self.violations.iter().any(|v| {
            matches!(
                v,
                Violation::NotATree { .. } | Violation::UnknownVertex { .. }
            )
        })
    }

    pub fn vertex_coverage_ok(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MissingVertex(_)))
    }

    pub fn edge_coverage_ok(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::UncoveredEdge(..)))
    }

    pub fn connectivity_ok(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DisconnectedOccurrence(_)))
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks that `td` is a tree decomposition of `g`, reporting a witness for
/// each failed property. Empty bags are legal.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> ValidationReport {
    let n = g.n();
    let mut violations = Vec::new();
    if !td.is_tree() {
        violations.push(Violation::NotATree {
            nodes: td.num_nodes(),
            edges: td.num_edges(),
        });
    }
    for (t, bag) in td.bags().iter().enumerate() {
        if let Some(v) = bag.iter().find(|&v| v >= n) {
            violations.push(Violation::UnknownVertex { node: t, vertex: v });
        }
    }

    let count = td.occurrence_counts(n);
    violations.extend(
        (0..n)
            .filter(|&v| count[v] == 0)
            .map(Violation::MissingVertex),
    );

    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, bag) in td.bags().iter().enumerate() {
        for v in bag.iter().filter(|&v| v < n) {
            occurrences[v].push(t);
        }
    }
    for (u, v) in g.edges() {
        let covered = occurrences[u].iter().any(|&t| td.bag(t).contains(v));
        if !covered {
            violations.push(Violation::UncoveredEdge(u, v));
        }
    }

    // In a forest, the nodes holding v induce a connected subgraph iff they
    // span exactly (count - 1) tree edges.
    let mut inner_edges = vec![0usize; n];
    for (a, b) in td.edges() {
        for v in td.bag(a).intersection(td.bag(b)).iter().filter(|&v| v < n) {
            inner_edges[v] += 1;
        }
    }
    for v in 0..n {
        if count[v] > 0 && inner_edges[v] + 1 != count[v] {
            violations.push(Violation::DisconnectedOccurrence(v));
        }
    }

    ValidationReport {
        width: td.width(),
        nodes: td.num_nodes(),
        violations,
    }
}

/// [`validate_td`] for a path decomposition.
pub fn validate_pd(g: &Graph, pd: &PathDecomposition) -> ValidationReport {
    validate_td(g, &pd.to_tree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vec(v.to_vec())
    }

    #[test]
    fn triangle_single_bag() {
        let r = validate_td(
            &Graph::complete(3),
            &TreeDecomposition::single(set(&[0, 1, 2])),
        );
        assert!(r.is_valid());
        assert_eq!(r.width, 2);
    }

    #[test]
    fn path_two_bags() {
        let td = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], [(0, 1)]).unwrap();
        let r = validate_td(&Graph::path(3), &td);
        assert!(r.is_valid());
        assert_eq!(r.width, 1);
    }

    #[test]
    fn uncovered_edge_witness() {
        let td = TreeDecomposition::new(vec![set(&[0]), set(&[1, 2])], [(0, 1)]).unwrap();
        let r = validate_td(&Graph::path(3), &td);
        assert!(!r.edge_coverage_ok());
        assert!(r.vertex_coverage_ok() && r.connectivity_ok());
        assert_eq!(r.violations, vec![Violation::UncoveredEdge(0, 1)]);
        assert_eq!(
            r.violations[0].describe(1),
            "edge (1,2) is not contained in any bag"
        );
    }

    #[test]
    fn other_witnesses() {
        let g = Graph::path(3);
        let td = TreeDecomposition::new(vec![set(&[0, 1])], []).unwrap();
        assert!(validate_td(&g, &td)
            .violations
            .contains(&Violation::MissingVertex(2)));

        let td = TreeDecomposition::new(
            vec![set(&[0, 1]), set(&[1, 2]), set(&[0])],
            [(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(
            validate_td(&g, &td).violations,
            vec![Violation::DisconnectedOccurrence(0)]
        );

        let td =
            TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2]), set(&[])], [(0, 1)]).unwrap();
        assert!(!validate_td(&g, &td).tree_shape_ok());

        let td = TreeDecomposition::single(set(&[0, 1, 2, 7]));
        assert!(validate_td(&g, &td)
            .violations
            .contains(&Violation::UnknownVertex { node: 0, vertex: 7 }));
    }

    #[test]
    fn empty_graph_and_empty_bags() {
        let r = validate_td(
            &Graph::empty(0),
            &TreeDecomposition::new(vec![], []).unwrap(),
        );
        assert!(r.is_valid());
        let pd = PathDecomposition::new(vec![set(&[0]), set(&[])]);
        assert!(validate_pd(&Graph::empty(1), &pd).is_valid());
    }
}
