//! Black-box `n / f(n)` approximators: a solve procedure paired with its
//! declared ratio function `f`.

use super::{exact_mis_bruteforce, IndependentSetResult, Provenance};
use crate::error::{Error, Result};
use crate::graph::{is_independent_set, Graph, VertexSet};

/// Clamps a declared ratio into `[2, max(n, 2)]`.
pub fn clamp_ratio(f: usize, n: usize) -> usize {
    f.max(2).min(n.max(2))
}

/// An approximation algorithm for maximum independent set that promises
/// `|solve(G)| >= alpha(G) * f(n) / n`.
pub trait BlackBox: Send + Sync {
    fn name(&self) -> String;

    /// Returns an independent set of `g`.
    fn solve(&self, g: &Graph) -> Result<VertexSet>;

    /// The declared `f(n)` before clamping.
    fn declared_ratio(&self, n: usize) -> usize;

    /// `f(n)` clamped into `[2, max(n, 2)]`.
    fn ratio(&self, n: usize) -> usize {
        clamp_ratio(self.declared_ratio(n), n)
    }

    /// Runs [`BlackBox::solve`] and rejects outputs that are not independent.
    fn run(&self, g: &Graph) -> Result<IndependentSetResult> {
        let set = self.solve(g)?;
        if set.max_vertex().is_some_and(|v| v >= g.n()) || !is_independent_set(g, &set) {
            return Err(Error::Contract(format!(
                "black box {} returned a dependent set",
                self.name()
            )));
        }
        Ok(IndependentSetResult::new(
            g,
            set,
            Provenance::BlackBox(self.name()),
        ))
    }
}

/// Exact solver used as a black box with `f(n) = n`; refuses graphs over budget.
#[derive(Clone, Copy, Debug)]
pub struct ExactBox {
    pub budget: usize,
}

pub fn box_exact(budget: usize) -> ExactBox {
    ExactBox { budget }
}

impl BlackBox for ExactBox {
    fn name(&self) -> String {
        format!("exact:{}", self.budget)
    }

    fn solve(&self, g: &Graph) -> Result<VertexSet> {
        exact_mis_bruteforce(g, self.budget).map(|r| r.set)
    }

    fn declared_ratio(&self, n: usize) -> usize {
        n
    }
}

/// Ramsey-style clique removal: repeatedly split on a pivot into its
/// neighbourhood and non-neighbourhood to find a clique and an independent
/// set, remove the clique, and keep the largest independent set seen.
/// Declared `f(n) = max(2, floor(log2 n))`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CliqueRemovalBox;

pub fn box_clique_removal() -> CliqueRemovalBox {
    CliqueRemovalBox
}

/// Returns (clique, independent set) within `vertices`.
fn ramsey(g: &Graph, vertices: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let Some((&pivot, rest)) = vertices.split_first() else {
        return (Vec::new(), Vec::new());
    };
    let (inside, outside): (Vec<usize>, Vec<usize>) =
        rest.iter().partition(|&&w| g.has_edge(pivot, w));
    let (mut c1, i1) = ramsey(g, &inside);
    let (c2, mut i2) = ramsey(g, &outside);
    c1.push(pivot);
    i2.push(pivot);
    let clique = if c1.len() >= c2.len() { c1 } else { c2 };
    let indep = if i2.len() >= i1.len() { i2 } else { i1 };
    (clique, indep)
}

impl BlackBox for CliqueRemovalBox {
    fn name(&self) -> String {
        "clique-removal".into()
    }

    fn solve(&self, g: &Graph) -> Result<VertexSet> {
        let mut remaining: Vec<usize> = (0..g.n()).collect();
        let mut best: Vec<usize> = Vec::new();
        while !remaining.is_empty() {
            let (clique, indep) = ramsey(g, &remaining);
            if indep.len() > best.len() {
                best = indep;
            }
            let clique = VertexSet::from_vec(clique);
            remaining.retain(|&v| !clique.contains(v));
        }
        Ok(VertexSet::from_vec(best))
    }

    fn declared_ratio(&self, n: usize) -> usize {
        if n < 2 {
            return 2;
        }
        (usize::BITS - 1 - n.leading_zeros()).max(2) as usize
    }
}

/// Parses `exact:<budget>`, `exact` (default budget) or `clique-removal`.
pub fn parse_box(spec: &str) -> Result<Box<dyn BlackBox>> {
    match spec.split_once(':') {
        None if spec == "clique-removal" => Ok(Box::new(box_clique_removal())),
        None if spec == "exact" => Ok(Box::new(box_exact(super::DEFAULT_BUDGET))),
        Some(("exact", budget)) => {
            let budget = budget
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("invalid exact budget '{budget}'")))?;
            Ok(Box::new(box_exact(budget)))
        }
        _ => Err(Error::InvalidParameter(format!(
            "unknown black box '{spec}' (expected exact:<budget> or clique-removal)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_gnp;

    #[test]
    fn exact_box() {
        let b = box_exact(30);
        assert_eq!(b.run(&Graph::cycle(5)).unwrap().size(), 2);
        assert_eq!(b.ratio(10), 10);
        assert_eq!(b.ratio(1), 2);
        assert!(matches!(
            b.run(&Graph::empty(31)),
            Err(Error::Refused { .. })
        ));
        for seed in 0..20 {
            let g = gen_gnp(18, 0.3, seed);
            assert_eq!(
                b.run(&g).unwrap().size(),
                exact_mis_bruteforce(&g, 30).unwrap().size()
            );
        }
    }

    #[test]
    fn clique_removal_examples() {
        let b = box_clique_removal();
        assert_eq!(b.run(&Graph::empty(8)).unwrap().size(), 8);
        assert_eq!(b.run(&Graph::complete(8)).unwrap().size(), 1);
        assert_eq!(b.run(&Graph::empty(0)).unwrap().size(), 0);
        assert_eq!(b.ratio(20), 4);
        assert_eq!(b.ratio(2), 2);
        assert_eq!(b.ratio(1024), 10);
    }

    #[test]
    fn clique_removal_meets_declared_ratio_on_random_graphs() {
        let b = box_clique_removal();
        let f = b.ratio(20);
        let mut good = 0;
        for seed in 0..200 {
            let g = gen_gnp(20, 0.3, seed);
            let out = b.run(&g).unwrap().size();
            let alpha = exact_mis_bruteforce(&g, 30).unwrap().size();
            if out * 20 >= alpha * f {
                good += 1;
            }
        }
        assert!(good >= 190, "{good}/200");
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_box("exact:12").unwrap().name(), "exact:12");
        assert_eq!(parse_box("exact").unwrap().name(), "exact:30");
        assert_eq!(
            parse_box("clique-removal").unwrap().name(),
            "clique-removal"
        );
        assert!(parse_box("exact:x").is_err());
        assert!(parse_box("feige").is_err());
    }

    struct Broken;
    impl BlackBox for Broken {
        fn name(&self) -> String {
            "broken".into()
        }
        fn solve(&self, g: &Graph) -> Result<VertexSet> {
            Ok(VertexSet::full(g.n()))
        }
        fn declared_ratio(&self, n: usize) -> usize {
            n
        }
    }

    #[test]
    fn dependent_output_is_rejected() {
        assert!(matches!(
            Broken.run(&Graph::path(2)),
            Err(Error::Contract(_))
        ));
    }
}
