//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.
//!
//! Validity, niceness, independence and partition checks are reimplemented
//! here instead of calling the library's own validators.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use twmis::decomp::{
    branch_bag_union, branch_nodes, chop_subtrees, contract_to_branch_td, make_leaf_unique,
    make_nice, make_nice_path, path_decomp_minus_q, reduce_depth, PathDecomposition,
    TreeDecomposition,
};
use twmis::graph::{gen_interval_graph, gen_partial_ktree, Graph, VertexSet};
use twmis::pwapx::{approx_level, approx_pw, block_partition, level_partition};
use twmis::solvers::{
    box_clique_removal, box_exact, exact_mis_bruteforce, exact_mis_td_dp, BlackBox,
    IndependentSetResult,
};
use twmis::twapx::{approx_component, approx_tw, level_split_q};

// Pinned limits.
const CORPUS_SIZE: usize = 240;
const MAX_N: usize = 200;
const MAX_K: usize = 6;
const CHAIN_TIME_LIMIT: Duration = Duration::from_secs(60);
const DP_INSTANCES: usize = 100;
const DP_TIME_LIMIT: Duration = Duration::from_secs(120);
const RATIO_INSTANCES: usize = 100;
const RATIO_TIME_LIMIT: Duration = Duration::from_secs(300);
const RATIO_CONSTANT_LIMIT: f64 = 16.0;
const SMALL_N: usize = 25;
const EXACT_BUDGET: usize = 30;
/// Box used on the full corpus, where layer components can exceed 30 vertices.
const CORPUS_EXACT_BUDGET: usize = 64;

struct Criterion {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    checked: usize,
    note: String,
}

impl Criterion {
    fn new(id: usize, name: &'static str) -> Self {
        Criterion {
            id,
            name,
            failures: Vec::new(),
            checked: 0,
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn report(&self) -> bool {
        let pass = self.failures.is_empty() && self.checked > 0;
        println!(
            "[{}] {}. {} ({} checks{}{})",
            if pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            if self.note.is_empty() { "" } else { "; " },
            self.note
        );
        for f in &self.failures {
            println!("       {f}");
        }
        pass
    }
}

// ---------------------------------------------------------------- oracles

fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    let v = s.as_slice();
    v.iter().all(|&x| x < g.n())
        && v.iter()
            .all(|&a| v.iter().all(|&b| a == b || !g.neighbors(a).contains(&b)))
}

fn tree_is_connected(td: &TreeDecomposition) -> bool {
    let n = td.num_nodes();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(t) = queue.pop_front() {
        for &s in td.neighbors(t) {
            if !seen[s] {
                seen[s] = true;
                count += 1;
                queue.push_back(s);
            }
        }
    }
    count == n
}

/// Tree shape, vertex coverage, edge coverage and connected occurrences.
fn valid_td(g: &Graph, td: &TreeDecomposition) -> bool {
    let nodes = td.num_nodes();
    if nodes != td.edges().count() + 1 || !tree_is_connected(td) {
        return g.n() == 0 && nodes == 0;
    }
    if td.bags().iter().any(|b| b.iter().any(|v| v >= g.n())) {
        return false;
    }
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..nodes).filter(|&t| td.bag(t).contains(v)).collect();
        let Some(&first) = holders.first() else {
            return false;
        };
        let mut seen = vec![false; nodes];
        seen[first] = true;
        let mut stack = vec![first];
        let mut reached = 1;
        while let Some(t) = stack.pop() {
            for &s in td.neighbors(t) {
                if !seen[s] && td.bag(s).contains(v) {
                    seen[s] = true;
                    reached += 1;
                    stack.push(s);
                }
            }
        }
        if reached != holders.len() {
            return false;
        }
    }
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            if u < w && !td.bags().iter().any(|b| b.contains(u) && b.contains(w)) {
                return false;
            }
        }
    }
    true
}

fn valid_pd(g: &Graph, pd: &PathDecomposition) -> bool {
    let bags = pd.bags().to_vec();
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    match TreeDecomposition::new(bags, edges) {
        Ok(td) => valid_td(g, &td),
        Err(_) => false,
    }
}

struct Shape {
    children: Vec<Vec<usize>>,
    depth: usize,
}

fn shape(td: &TreeDecomposition) -> Option<Shape> {
    let root = td.root()?;
    let n = td.num_nodes();
    let mut children = vec![Vec::new(); n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(t) = queue.pop_front() {
        for &s in td.neighbors(t) {
            if !seen[s] {
                seen[s] = true;
                depth[s] = depth[t] + 1;
                children[t].push(s);
                queue.push_back(s);
            }
        }
    }
    Some(Shape {
        children,
        depth: depth.into_iter().max().unwrap_or(0),
    })
}

fn childless(td: &TreeDecomposition) -> Vec<usize> {
    let s = shape(td).expect("rooted");
    (0..td.num_nodes())
        .filter(|&t| s.children[t].is_empty())
        .collect()
}

/// Rooted; every node is a leaf, a one-vertex introduce/forget, or a join
/// of two children with equal bags.
fn is_nice(td: &TreeDecomposition) -> bool {
    let Some(s) = shape(td) else { return false };
    (0..td.num_nodes()).all(|t| {
        let b = td.bag(t);
        match s.children[t].as_slice() {
            [] => true,
            [c] => {
                let cb = td.bag(*c);
                (b.len() == cb.len() + 1 && cb.is_subset(b))
                    || (cb.len() == b.len() + 1 && b.is_subset(cb))
            }
            [x, y] => td.bag(*x) == b && td.bag(*y) == b,
            _ => false,
        }
    })
}

fn nice_path_ok(g: &Graph, pd: &PathDecomposition) -> bool {
    let b = pd.bags();
    b.len() == 2 * g.n()
        && b.windows(2).all(|w| {
            w[0].len().abs_diff(w[1].len()) == 1 && (w[0].is_subset(&w[1]) || w[1].is_subset(&w[0]))
        })
        && b.first().is_none_or(|f| f.len() == 1)
        && valid_pd(g, pd)
}

fn components(g: &Graph, s: &VertexSet) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut sizes = Vec::new();
    for v in s.iter() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let mut stack = vec![v];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if s.contains(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

fn no_cross_edges(g: &Graph, blocks: &[VertexSet]) -> bool {
    blocks.iter().enumerate().all(|(i, a)| {
        blocks.iter().enumerate().all(|(j, b)| {
            i == j
                || a.iter()
                    .all(|u| b.iter().all(|v| !g.neighbors(u).contains(&v)))
        })
    })
}

fn partitions(n: usize, sets: &[&VertexSet]) -> bool {
    let mut count = vec![0; n];
    for s in sets {
        for v in s.iter() {
            if v >= n {
                return false;
            }
            count[v] += 1;
        }
    }
    count.iter().all(|&c| c == 1)
}

fn vertices_of(g: &Graph) -> VertexSet {
    g.lift(&VertexSet::full(g.n()))
}

// ---------------------------------------------------------------- corpus

struct Instance {
    name: String,
    g: Graph,
    td: TreeDecomposition,
}

fn corpus() -> Vec<Instance> {
    let keeps = [0.3, 0.5, 0.8, 1.0];
    (0..CORPUS_SIZE)
        .map(|i| {
            let k = 1 + i % MAX_K;
            let n = 10 + (i * 37) % (MAX_N - 9);
            let keep = keeps[(i / MAX_K) % keeps.len()];
            let seed = 1000 + i as u64;
            let (g, td) = gen_partial_ktree(n, k, keep, seed).unwrap();
            Instance {
                name: format!("ktree(n={n},k={k},p={keep},seed={seed})"),
                g,
                td,
            }
        })
        .collect()
}

fn small_corpus(count: usize, seed_base: u64) -> Vec<Instance> {
    let keeps = [0.4, 0.6, 0.8, 1.0];
    (0..count)
        .map(|i| {
            let k = 1 + i % 5;
            let n = (k + 2).max(8 + (i * 7) % (SMALL_N - 7));
            let keep = keeps[i % keeps.len()];
            let seed = seed_base + i as u64;
            let (g, td) = gen_partial_ktree(n, k, keep, seed).unwrap();
            Instance {
                name: format!("ktree(n={n},k={k},p={keep},seed={seed})"),
                g,
                td,
            }
        })
        .collect()
}

struct Audit<'a> {
    independence: &'a mut Criterion,
}

impl Audit<'_> {
    fn solution(&mut self, g: &Graph, r: &IndependentSetResult, ctx: &str) {
        self.independence.check(is_independent(g, &r.set), || {
            format!("{ctx}: {} not independent", r.provenance)
        });
    }
}

fn main() {
    let mut c1 = Criterion::new(1, "decomposition validity chain");
    let mut c2 = Criterion::new(2, "chop bounds for l in {2,4,8}");
    let mut c3 = Criterion::new(3, "length-level and block bounds");
    let mut c4 = Criterion::new(4, "branch-node set bounds");
    let mut c5 = Criterion::new(5, "decomposition DP equals branch and bound");
    let mut c6 = Criterion::new(6, "guarantee floor ceil(n/(w+1))");
    let mut c7 = Criterion::new(7, "end-to-end ratio constant");
    let mut c8 = Criterion::new(8, "every emitted solution is independent");

    let instances = corpus();
    let exact_box = box_exact(CORPUS_EXACT_BUDGET);
    let clique_box = box_clique_removal();
    let boxes: [&dyn BlackBox; 2] = [&exact_box, &clique_box];

    // 1. Validity chain.
    let start = Instant::now();
    for inst in &instances {
        let (g, td, n) = (&inst.g, &inst.td, inst.g.n());
        let k = td.max_bag_size();
        let nice = make_nice(td, g).unwrap();
        c1.check(valid_td(g, &nice) && is_nice(&nice), || {
            format!("{}: make_nice invalid", inst.name)
        });
        c1.check(nice.num_nodes() <= 4 * n, || {
            format!(
                "{}: make_nice {} nodes > 4n = {}",
                inst.name,
                nice.num_nodes(),
                4 * n
            )
        });
        c1.check(nice.max_bag_size() <= k, || {
            format!("{}: make_nice width grew", inst.name)
        });
        let lu = make_leaf_unique(&nice, g).unwrap();
        let count = lu.occurrence_counts(n);
        let unique = childless(&lu)
            .iter()
            .all(|&t| lu.bag(t).iter().any(|v| count[v] == 1));
        c1.check(valid_td(g, &lu) && is_nice(&lu) && unique, || {
            format!("{}: leaf-unique property fails", inst.name)
        });
        let gamma = td.num_nodes();
        let rd = reduce_depth(td, g).unwrap();
        let depth = shape(&rd).map_or(usize::MAX, |s| s.depth);
        let depth_limit = 4.0 * (1.0 + (gamma as f64).log2());
        c1.check(valid_td(g, &rd), || {
            format!("{}: reduce_depth invalid", inst.name)
        });
        c1.check(rd.width() <= 3 * td.width() + 2, || {
            format!(
                "{}: reduce_depth width {} > 3w+2 = {}",
                inst.name,
                rd.width(),
                3 * td.width() + 2
            )
        });
        c1.check(depth as f64 <= depth_limit, || {
            format!(
                "{}: reduce_depth depth {depth} > {depth_limit:.2} (gamma {gamma})",
                inst.name
            )
        });
        // Nice path decompositions of the pieces outside branch-node bags.
        let chop = chop_subtrees(g, &lu, 2 * exact_box.ratio(k)).unwrap();
        for part in &chop.parts {
            let q = branch_bag_union(&part.td);
            let (rest, pd) = path_decomp_minus_q(&part.td, &q, &part.graph).unwrap();
            let np = make_nice_path(&pd, &rest).unwrap();
            c1.check(nice_path_ok(&rest, &np), || {
                format!(
                    "{}: nice path of C - Q has {} bags for n = {}",
                    inst.name,
                    np.len(),
                    rest.n()
                )
            });
        }
    }
    for i in 0..60u64 {
        let n = 10 + (i as usize * 13) % 140;
        let (g, pd) = gen_interval_graph(
            n,
            2 + i as usize % 7,
            [0.5, 0.8, 1.0][i as usize % 3],
            500 + i,
        )
        .unwrap();
        let np = make_nice_path(&pd, &g).unwrap();
        c1.check(
            nice_path_ok(&g, &np) && np.max_bag_size() <= pd.max_bag_size(),
            || {
                format!(
                    "interval(n={n},seed={}): nice path has {} bags",
                    500 + i,
                    np.len()
                )
            },
        );
    }
    let chain_time = start.elapsed();
    c1.check(chain_time < CHAIN_TIME_LIMIT, || {
        format!("took {chain_time:?}")
    });
    c1.note = format!("{} instances, {:.2?}", instances.len() + 60, chain_time);

    // 2. Chop bounds.
    for inst in &instances {
        let (g, n) = (&inst.g, inst.g.n());
        let k = inst.td.max_bag_size();
        let lu = make_leaf_unique(&make_nice(&inst.td, g).unwrap(), g).unwrap();
        let leaves = childless(&lu).len();
        for ell in [2, 4, 8] {
            let chop = chop_subtrees(g, &lu, ell).unwrap();
            c2.check(chop.removed.len() * ell <= k * leaves, || {
                format!(
                    "{} l={ell}: |X|={} > k|L|/l = {k}*{leaves}/{ell}",
                    inst.name,
                    chop.removed.len()
                )
            });
            let sets: Vec<VertexSet> = chop.parts.iter().map(|p| vertices_of(&p.graph)).collect();
            for (p, s) in chop.parts.iter().zip(&sets) {
                c2.check(valid_td(&p.graph, &p.td), || {
                    format!("{} l={ell}: part decomposition invalid", inst.name)
                });
                let part_leaves = childless(&p.td).len();
                c2.check(part_leaves <= ell, || {
                    format!("{} l={ell}: part with {part_leaves} leaves", inst.name)
                });
                c2.check(p.graph.n() == s.len(), || "part labels".into());
            }
            let mut all: Vec<&VertexSet> = sets.iter().collect();
            all.push(&chop.removed);
            c2.check(partitions(n, &all), || {
                format!("{} l={ell}: X and parts do not partition V", inst.name)
            });
            c2.check(no_cross_edges(g, &sets), || {
                format!("{} l={ell}: edge between parts", inst.name)
            });
        }
    }

    // 3 and 4. Level/block bounds and branch-node bounds inside the pipeline.
    let level_check = |c3: &mut Criterion,
                       audit: &mut Audit,
                       name: &str,
                       g: &Graph,
                       pd: &PathDecomposition,
                       bb: &dyn BlackBox| {
        let np = make_nice_path(pd, g).unwrap();
        let part = level_partition(g, &np, |k| bb.ratio(k)).unwrap();
        let k = part.k;
        let f = part.f_k;
        let m = part.levels.len() - 1;
        let c = (f as f64).log2().ceil() as usize;
        c3.check(m == c + 1, || {
            format!("{name}: m = {m}, expected {}", c + 1)
        });
        // Recount lengths by scanning the bags.
        let mut len = vec![0; g.n()];
        for b in np.bags() {
            for v in b {
                len[v] += 1;
            }
        }
        let mut sets: Vec<&VertexSet> = part.levels.iter().collect();
        sets.push(&part.long);
        c3.check(partitions(g.n(), &sets), || {
            format!("{name}: levels do not partition V")
        });
        for (i, level) in part.levels.iter().enumerate() {
            let (lo, hi) = if i == 0 {
                (0, 2 * k)
            } else {
                (k << i, k << (i + 1))
            };
            c3.check(level.iter().all(|v| lo <= len[v] && len[v] < hi), || {
                format!("{name}: level {i} holds a vertex outside [{lo},{hi})")
            });
        }
        c3.check(part.long.iter().all(|v| len[v] >= (4 * k) << c), || {
            format!("{name}: short vertex in V'")
        });
        c3.check(2 * f * part.long.len() <= g.n(), || {
            format!(
                "{name}: |V'| = {} > n/(2f) with n = {}, f = {f}",
                part.long.len(),
                g.n()
            )
        });
        for (i, level) in part.levels.iter().enumerate() {
            let blocks = block_partition(level, i, &np, &part.lengths).unwrap();
            for x in &blocks.x_blocks {
                c3.check(x.len() <= k, || {
                    format!("{name}: level {i} |X_r| = {} > k = {k}", x.len())
                });
            }
            for y in &blocks.y_blocks {
                c3.check(y.len() <= 4 * k, || {
                    format!("{name}: level {i} |Y_r| = {} > 4k = {}", y.len(), 4 * k)
                });
            }
            let mut cover: Vec<&VertexSet> = blocks.x_blocks.iter().collect();
            cover.extend(blocks.y_blocks.iter());
            let sub_n = g.n();
            let mut count = vec![0; sub_n];
            for s in &cover {
                for v in s.iter() {
                    count[v] += 1;
                }
            }
            c3.check(
                (0..sub_n).all(|v| count[v] == usize::from(level.contains(v))),
                || format!("{name}: level {i} blocks do not partition the level"),
            );
            c3.check(
                no_cross_edges(g, &blocks.x_blocks) && no_cross_edges(g, &blocks.y_blocks),
                || format!("{name}: level {i} has an edge between blocks"),
            );
            if !level.is_empty() {
                let r = approx_level(g, &blocks, bb).unwrap();
                audit.solution(g, &r, name);
                c3.check(r.set.is_subset(level), || {
                    format!("{name}: level {i} solution leaves the level")
                });
            }
        }
        let r = approx_pw(g, pd, bb).unwrap();
        audit.solution(g, &r, name);
    };

    for inst in &instances {
        let g = &inst.g;
        let k = inst.td.max_bag_size();
        let lu = make_leaf_unique(&make_nice(&inst.td, g).unwrap(), g).unwrap();
        for bb in boxes {
            let ell = 2 * bb.ratio(k);
            let chop = chop_subtrees(g, &lu, ell).unwrap();
            for part in &chop.parts {
                let (c, tc) = (&part.graph, &part.td);
                let q = branch_bag_union(tc);
                let branches = branch_nodes(tc).len();
                c4.check(branches < ell, || {
                    format!(
                        "{}: {branches} branch nodes with leaf budget {ell}",
                        inst.name
                    )
                });
                let (rest, pd) = path_decomp_minus_q(tc, &q, c).unwrap();
                c4.check(valid_pd(&rest, &pd) && pd.max_bag_size() <= k, || {
                    format!(
                        "{}: C - Q path width {} > k - 1 = {}",
                        inst.name,
                        pd.width(),
                        k - 1
                    )
                });
                c4.check(
                    q.iter().all(|v| v < c.n()) && rest.n() + q.len() == c.n(),
                    || "Q split".into(),
                );
                if rest.n() > 0 {
                    let mut audit = Audit {
                        independence: &mut c8,
                    };
                    level_check(&mut c3, &mut audit, &inst.name, &rest, &pd, bb);
                }
                if !q.is_empty() {
                    let (cq, tq) = contract_to_branch_td(tc, &q, c).unwrap();
                    c4.check(valid_td(&cq, &tq), || {
                        format!("{}: C[Q] decomposition invalid", inst.name)
                    });
                    c4.check(tq.width() < 2 * k, || {
                        format!("{}: C[Q] width {} > 2k - 1", inst.name, tq.width())
                    });
                    c4.check(tq.num_nodes() <= 2 * branches, || {
                        format!(
                            "{}: C[Q] has {} nodes > 2 * {branches}",
                            inst.name,
                            tq.num_nodes()
                        )
                    });
                    let tj = reduce_depth(&tq, &cq).unwrap();
                    c4.check(valid_td(&cq, &tj), || {
                        format!("{}: rebalanced C[Q] invalid", inst.name)
                    });
                    c4.check(tj.width() < 6 * k, || {
                        format!("{}: rebalanced width {} > 6k - 1", inst.name, tj.width())
                    });
                    let layers = level_split_q(&tj).unwrap();
                    let refs: Vec<&VertexSet> = layers.iter().collect();
                    c4.check(partitions(cq.n(), &refs), || {
                        format!("{}: layers do not partition Q", inst.name)
                    });
                    let depth = shape(&tj).map_or(0, |s| s.depth);
                    c4.check(layers.len() == depth + 1, || "layer count".into());
                    for h in &layers {
                        let big = components(&cq, h).into_iter().max().unwrap_or(0);
                        c4.check(big <= 6 * k, || {
                            format!("{}: layer component of {big} > 6k = {}", inst.name, 6 * k)
                        });
                    }
                }
                let (r, _) = approx_component(c, tc, bb).unwrap();
                c8.check(is_independent(c, &r.set), || {
                    format!("{}: component solution", inst.name)
                });
            }
        }
    }

    // 5. DP against branch and bound.
    let start = Instant::now();
    for inst in small_corpus(DP_INSTANCES, 7000) {
        let (g, td) = (&inst.g, &inst.td);
        c5.check(g.n() <= SMALL_N && td.width() <= 5, || {
            format!("{}: outside the size limits", inst.name)
        });
        let dp = exact_mis_td_dp(g, &make_nice(td, g).unwrap(), 20).unwrap();
        let bb = exact_mis_bruteforce(g, EXACT_BUDGET).unwrap();
        c8.check(
            is_independent(g, &dp.set) && is_independent(g, &bb.set),
            || format!("{}: exact set", inst.name),
        );
        c5.check(dp.size() == bb.size(), || {
            format!(
                "{}: dp {} vs branch and bound {}",
                inst.name,
                dp.size(),
                bb.size()
            )
        });
    }
    let dp_time = start.elapsed();
    c5.check(dp_time < DP_TIME_LIMIT, || format!("took {dp_time:?}"));
    c5.note = format!("{DP_INSTANCES} instances, {dp_time:.2?}");

    // 6. Guarantee floor on the whole corpus with both boxes.
    for inst in &instances {
        let (g, td) = (&inst.g, &inst.td);
        let floor = g.n().div_ceil(td.width() + 1);
        for bb in boxes {
            let (r, trace) = approx_tw(g, td, bb).unwrap();
            Audit {
                independence: &mut c8,
            }
            .solution(g, &r, &inst.name);
            c6.check(r.size() >= floor, || {
                format!("{} ({}): {} < {floor}", inst.name, bb.name(), r.size())
            });
            c6.check(
                trace.final_size == trace.candidates.iter().map(|c| c.size).max().unwrap_or(0),
                || format!("{}: final is not the best candidate", inst.name),
            );
        }
    }

    // 7. Ratio constant with the exact box.
    let start = Instant::now();
    let bb = box_exact(EXACT_BUDGET);
    let mut worst: f64 = 0.0;
    for inst in small_corpus(RATIO_INSTANCES, 9000) {
        let (g, td) = (&inst.g, &inst.td);
        let alpha = exact_mis_bruteforce(g, EXACT_BUDGET).unwrap().size();
        let (r, _) = approx_tw(g, td, &bb).unwrap();
        Audit {
            independence: &mut c8,
        }
        .solution(g, &r, &inst.name);
        let k = td.max_bag_size();
        let f = k as f64;
        let c = alpha as f64 * f / (r.size().max(1) as f64 * k as f64 * (f + 2.0).log2());
        worst = worst.max(c);
        c7.check(c <= RATIO_CONSTANT_LIMIT, || {
            format!("{}: constant {c:.3}", inst.name)
        });
    }
    let ratio_time = start.elapsed();
    c7.check(ratio_time < RATIO_TIME_LIMIT, || {
        format!("took {ratio_time:?}")
    });
    c7.note = format!("max c = {worst:.4} (limit {RATIO_CONSTANT_LIMIT}), {ratio_time:.2?}");

    // 8. Black boxes on their own, on corpus subgraphs.
    for inst in instances.iter().take(40) {
        for bb in boxes {
            if inst.g.n() <= CORPUS_EXACT_BUDGET || bb.name() == "clique-removal" {
                let r = bb.run(&inst.g).unwrap();
                Audit {
                    independence: &mut c8,
                }
                .solution(&inst.g, &r, &inst.name);
            }
        }
    }
    c8.note = "debug assertions also check every constructed result".into();

    let results = [
        c1.report(),
        c2.report(),
        c3.report(),
        c4.report(),
        c5.report(),
        c6.report(),
        c7.report(),
        c8.report(),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
