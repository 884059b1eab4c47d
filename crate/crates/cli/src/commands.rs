use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use twmis::audit::{audit_pipeline, Check};
use twmis::decomp::{
    make_leaf_unique, make_nice, make_nice_path, parse_td, reduce_depth, validate_td, write_td,
    PathDecomposition, TreeDecomposition,
};
use twmis::graph::{gen_partial_ktree, parse_graph, write_graph, GraphFormat};
use twmis::solvers::{
    czumaj_partition, exact_mis_bruteforce, exact_mis_td_dp, greedy_degeneracy, parse_box,
    BlackBox, DEFAULT_WIDTH_BUDGET, MAX_EXACT_VERTICES,
};
use twmis::{approx_tw, Error, Graph, IndependentSetResult, VertexSet};

use crate::report::{geomean, BenchRow, BenchSummary, RunReport, StageTime, SCHEMA_VERSION};

/// Raised when `--audit` finds a violated bound.
#[derive(Debug)]
pub struct AuditFailed(pub Vec<Check>);

impl std::fmt::Display for AuditFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self
            .0
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        write!(f, "audit failed: {}", names.join(", "))
    }
}

impl std::error::Error for AuditFailed {}

/// Process exit code for an error.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<AuditFailed>().is_some() {
        return 4;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. } | Error::VertexOutOfRange { .. } | Error::SelfLoop(_)) => 2,
        Some(Error::InvalidDecomposition(_) | Error::NotNice(_)) => 3,
        Some(Error::Refused { .. }) => 5,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

/// Reads a graph and a decomposition of it and checks the decomposition,
/// reporting the first violation with 1-indexed bags and vertices.
pub fn load_instance(
    gr: &Path,
    td: &Path,
    format: GraphFormat,
) -> Result<(Graph, TreeDecomposition)> {
    let g = parse_graph(&read(gr)?, format).with_context(|| format!("{}", gr.display()))?;
    let (t, n) = parse_td(&read(td)?).with_context(|| format!("{}", td.display()))?;
    if n != g.n() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition is for {n} vertices, graph has {}",
            g.n()
        )))
        .with_context(|| format!("{}", td.display()));
    }
    let report = validate_td(&g, &t);
    if let Some(v) = report.first_violation() {
        return Err(Error::InvalidDecomposition(v.describe(1)))
            .with_context(|| format!("{}", td.display()));
    }
    Ok((g, t))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn timed<T>(timings: &mut Vec<StageTime>, stage: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push(StageTime {
        stage,
        millis: start.elapsed().as_secs_f64() * 1e3,
    });
    out
}

/// Exact independence number by the decomposition DP when the width allows,
/// otherwise by branch and bound.
pub fn oracle(g: &Graph, td: &TreeDecomposition) -> twmis::Result<IndependentSetResult> {
    if td.max_bag_size() <= DEFAULT_WIDTH_BUDGET {
        let nice = make_nice(td, g)?;
        return exact_mis_td_dp(g, &nice, DEFAULT_WIDTH_BUDGET);
    }
    exact_mis_bruteforce(g, MAX_EXACT_VERTICES)
}

pub struct SolveOptions {
    pub graph: PathBuf,
    pub td: PathBuf,
    pub format: GraphFormat,
    pub black_box: String,
    pub oracle: bool,
    pub audit: bool,
    pub out: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub json: bool,
}

pub fn solve(opts: &SolveOptions) -> Result<String> {
    let bb = parse_box(&opts.black_box)?;
    let mut timings = Vec::new();
    let (g, td) = timed(&mut timings, "parse", || {
        load_instance(&opts.graph, &opts.td, opts.format)
    })?;
    let (res, trace) = timed(&mut timings, "solve", || approx_tw(&g, &td, bb.as_ref()))?;
    let alpha = if opts.oracle {
        Some(timed(&mut timings, "oracle", || oracle(&g, &td))?.size())
    } else {
        None
    };
    let audits = if opts.audit {
        timed(&mut timings, "audit", || {
            audit_pipeline(&g, &td, bb.as_ref(), Some(&res.set))
        })?
    } else {
        Vec::new()
    };
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        instance: stem(&opts.graph),
        black_box: bb.name(),
        n: g.n(),
        m: g.m(),
        width: td.width(),
        leaf_count: trace.leaf_count,
        final_size: res.size(),
        final_provenance: res.provenance.to_string(),
        alpha,
        ratio: alpha.map(|a| {
            if res.size() == 0 {
                1.0
            } else {
                a as f64 / res.size() as f64
            }
        }),
        timings,
        audits,
        solution: res.set.iter().map(|v| v + 1).collect(),
        trace,
    };
    if let Some(path) = &opts.out {
        let text: String = report.solution.iter().map(|v| format!("{v}\n")).collect();
        write(path, &text)?;
    }
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &opts.report {
        write(path, &json)?;
    }
    let shown = if opts.json {
        json + "\n"
    } else {
        report.render_text()
    };
    if report.audits.iter().any(|c| !c.passed) {
        eprint!("{shown}");
        return Err(AuditFailed(report.audits).into());
    }
    Ok(shown)
}

pub fn validate(gr: &Path, td: &Path, format: GraphFormat) -> Result<String> {
    let (g, t) = load_instance(gr, td, format)?;
    Ok(format!(
        "valid: {} bags, width {}, {} vertices, {} edges\n",
        t.num_nodes(),
        t.width(),
        g.n(),
        g.m()
    ))
}

/// Reads a path-shaped decomposition in path order, starting from the
/// lowest-numbered end.
fn as_path(td: &TreeDecomposition) -> Option<PathDecomposition> {
    let nodes = td.num_nodes();
    if nodes == 0 {
        return Some(PathDecomposition::new(Vec::new()));
    }
    if !td.is_tree() || (0..nodes).any(|t| td.degree(t) > 2) {
        return None;
    }
    let start = (0..nodes).find(|&t| td.degree(t) <= 1)?;
    let mut bags = Vec::with_capacity(nodes);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        bags.push(td.bag(cur).clone());
        match td.neighbors(cur).iter().find(|&&s| s != prev) {
            Some(&s) => (prev, cur) = (cur, s),
            None => break,
        }
    }
    Some(PathDecomposition::new(bags))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TransformOp {
    Nice,
    LeafUnique,
    NicePath,
    ReduceDepth,
}

pub fn transform(
    gr: &Path,
    td: &Path,
    format: GraphFormat,
    op: TransformOp,
    out: Option<&Path>,
) -> Result<String> {
    let (g, t) = load_instance(gr, td, format)?;
    let result = match op {
        TransformOp::Nice => make_nice(&t, &g)?,
        TransformOp::LeafUnique => make_leaf_unique(&make_nice(&t, &g)?, &g)?,
        TransformOp::ReduceDepth => reduce_depth(&t, &g)?,
        TransformOp::NicePath => {
            let Some(pd) = as_path(&t) else {
                bail!(Error::InvalidParameter(
                    "nice-path needs a path-shaped decomposition".into()
                ));
            };
            make_nice_path(&pd, &g)?.to_tree()
        }
    };
    let text = write_td(&result, g.n());
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(format!(
                "wrote {} bags of width {} to {}\n",
                result.num_nodes(),
                result.width(),
                path.display()
            ))
        }
        None => Ok(text),
    }
}

pub fn gen(n: usize, k: usize, keep: f64, seed: u64, prefix: &Path) -> Result<String> {
    if !(0.0..=1.0).contains(&keep) {
        bail!(Error::InvalidParameter(format!(
            "keep probability {keep} outside [0, 1]"
        )));
    }
    let (g, td) = gen_partial_ktree(n, k, keep, seed)?;
    let gr = prefix.with_extension("gr");
    let tdp = prefix.with_extension("td");
    write(&gr, &write_graph(&g))?;
    write(&tdp, &write_td(&td, g.n()))?;
    Ok(format!(
        "wrote {} ({} vertices, {} edges) and {} (width {})\n",
        gr.display(),
        g.n(),
        g.m(),
        tdp.display(),
        td.width()
    ))
}

fn bench_one(
    gr: &Path,
    format: GraphFormat,
    bb: &dyn BlackBox,
    classes: usize,
) -> Result<BenchRow> {
    let td = gr.with_extension("td");
    let (g, t) = load_instance(gr, &td, format)?;
    let start = Instant::now();
    let (res, _) = approx_tw(&g, &t, bb)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let baseline = czumaj_partition(&g, &t, classes, DEFAULT_WIDTH_BUDGET)
        .ok()
        .map(|r| r.size());
    Ok(BenchRow {
        instance: stem(gr),
        n: g.n(),
        m: g.m(),
        width: t.width(),
        greedy: greedy_degeneracy(&g).size(),
        final_size: res.size(),
        final_provenance: res.provenance.to_string(),
        baseline,
        millis,
    })
}

pub fn bench(
    dir: &Path,
    format: GraphFormat,
    black_box: &str,
    classes: usize,
    json: Option<&Path>,
) -> Result<String> {
    let bb = parse_box(black_box)?;
    if classes == 0 {
        bail!(Error::InvalidParameter(
            "baseline needs at least one class".into()
        ));
    }
    let mut graphs: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot list {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gr"))
        .collect();
    graphs.sort();
    if graphs.is_empty() {
        bail!("no .gr instances in {}", dir.display());
    }
    let results: Vec<(PathBuf, Result<BenchRow>)> = graphs
        .par_iter()
        .map(|p| (p.clone(), bench_one(p, format, bb.as_ref(), classes)))
        .collect();
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for (path, r) in results {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => {
                eprintln!("warning: skipping {}: {e:#}", path.display());
                failed.push(stem(&path));
            }
        }
    }
    if rows.is_empty() {
        bail!("all {} instances failed", failed.len());
    }
    let summary = BenchSummary {
        schema_version: SCHEMA_VERSION,
        black_box: bb.name(),
        baseline_classes: classes,
        geomean_vs_greedy: geomean(rows.iter().map(|r| (r.final_size, r.greedy))),
        geomean_vs_baseline: geomean(
            rows.iter()
                .filter_map(|r| r.baseline.map(|b| (r.final_size, b))),
        ),
        rows,
        failed,
    };
    if let Some(path) = json {
        write(path, &serde_json::to_string_pretty(&summary)?)?;
    }
    Ok(summary.render_text())
}

/// Solution file: one 1-indexed vertex per line.
pub fn parse_solution(text: &str, n: usize) -> Result<VertexSet> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: usize = line
            .parse()
            .with_context(|| format!("line {}: bad vertex '{line}'", i + 1))?;
        if v == 0 || v > n {
            bail!("line {}: vertex {v} out of range 1..={n}", i + 1);
        }
        out.push(v - 1);
    }
    Ok(VertexSet::from_vec(out))
}

pub fn check_solution(gr: &Path, sol: &Path, format: GraphFormat) -> Result<String> {
    let g = parse_graph(&read(gr)?, format)?;
    let s = parse_solution(&read(sol)?, g.n())?;
    if !twmis::graph::is_independent_set(&g, &s) {
        bail!("solution is not independent");
    }
    let mut msg = String::new();
    let _ = writeln!(msg, "independent set of size {}", s.len());
    Ok(msg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(
                &Error::Parse {
                    line: 1,
                    message: "x".into()
                }
                .into()
            ),
            2
        );
        assert_eq!(
            exit_code(&Error::InvalidDecomposition("x".into()).into()),
            3
        );
        assert_eq!(exit_code(&AuditFailed(Vec::new()).into()), 4);
        assert_eq!(
            exit_code(
                &Error::Refused {
                    solver: "s".into(),
                    n: 3,
                    budget: 2
                }
                .into()
            ),
            5
        );
        assert_eq!(exit_code(&anyhow::anyhow!("io")), 1);
    }

    #[test]
    fn path_shape_detection() {
        let set = |v: &[usize]| VertexSet::from_vec(v.to_vec());
        let td = TreeDecomposition::new(
            vec![set(&[1, 2]), set(&[0, 1]), set(&[2, 3])],
            [(0, 1), (0, 2)],
        )
        .unwrap();
        let pd = as_path(&td).unwrap();
        assert_eq!(pd.bags(), &[set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        let star = TreeDecomposition::new(vec![set(&[0]); 4], [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(as_path(&star).is_none());
    }

    #[test]
    fn solution_parsing() {
        assert_eq!(
            parse_solution("1\n3\n\n", 3).unwrap(),
            VertexSet::from_vec(vec![0, 2])
        );
        assert!(parse_solution("0\n", 3).is_err());
        assert!(parse_solution("x\n", 3).is_err());
    }
}
