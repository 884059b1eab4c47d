use std::fmt::Write as _;

use serde::Serialize;
use twmis::audit::Check;
use twmis::PipelineTrace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct StageTime {
    pub stage: &'static str,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub instance: String,
    pub black_box: String,
    pub n: usize,
    pub m: usize,
    pub width: usize,
    pub leaf_count: usize,
    pub final_size: usize,
    pub final_provenance: String,
    /// Independence number, when an exact solver was run.
    pub alpha: Option<usize>,
    /// `alpha / final_size`.
    pub ratio: Option<f64>,
    pub timings: Vec<StageTime>,
    pub audits: Vec<Check>,
    /// 1-indexed vertices of the solution.
    pub solution: Vec<usize>,
    pub trace: PipelineTrace,
}

impl RunReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "instance    {}", self.instance);
        let _ = writeln!(s, "black box   {}", self.black_box);
        let _ = writeln!(s, "graph       n={} m={}", self.n, self.m);
        let _ = writeln!(
            s,
            "width       {} (k={}, f(k)={}, leaf budget={})",
            self.width, self.trace.k, self.trace.f_k, self.trace.ell
        );
        let _ = writeln!(s, "leaves      {}", self.leaf_count);
        let _ = writeln!(
            s,
            "chop        |X|={} over {} cuts, {} components",
            self.trace.removed,
            self.trace.chop_iterations,
            self.trace.components.len()
        );
        for c in &self.trace.candidates {
            let _ = writeln!(s, "candidate   {:<12} {}", c.provenance, c.size);
        }
        let _ = writeln!(
            s,
            "final       {} ({})",
            self.final_size, self.final_provenance
        );
        if let (Some(alpha), Some(ratio)) = (self.alpha, self.ratio) {
            let _ = writeln!(s, "alpha       {alpha}");
            let _ = writeln!(s, "ratio       {ratio:.4}");
        }
        for t in &self.timings {
            let _ = writeln!(s, "time        {:<8} {:.3} ms", t.stage, t.millis);
        }
        for a in &self.audits {
            let status = if a.passed { "pass" } else { "FAIL" };
            let _ = write!(s, "audit       {:<24} {status}", a.name);
            if !a.passed {
                let _ = write!(s, "  {}", a.detail);
            }
            s.push('\n');
        }
        s
    }
}

/// One line of `bench` output.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub width: usize,
    pub greedy: usize,
    pub final_size: usize,
    pub final_provenance: String,
    /// Best class of the width-splitting baseline, when its exact DP fits.
    pub baseline: Option<usize>,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchSummary {
    pub schema_version: u32,
    pub black_box: String,
    pub baseline_classes: usize,
    pub rows: Vec<BenchRow>,
    pub failed: Vec<String>,
    /// Geometric mean of `final / greedy`.
    pub geomean_vs_greedy: Option<f64>,
    /// Geometric mean of `final / baseline` over rows with a baseline.
    pub geomean_vs_baseline: Option<f64>,
}

/// Geometric mean of `a / b` over pairs with both sides positive.
pub fn geomean(pairs: impl Iterator<Item = (usize, usize)>) -> Option<f64> {
    let logs: Vec<f64> = pairs
        .filter(|&(a, b)| a > 0 && b > 0)
        .map(|(a, b)| (a as f64 / b as f64).ln())
        .collect();
    (!logs.is_empty()).then(|| (logs.iter().sum::<f64>() / logs.len() as f64).exp())
}

impl BenchSummary {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<24} {:>6} {:>7} {:>5} {:>7} {:>7} {:>8} {:>10}  from",
            "instance", "n", "m", "width", "greedy", "final", "baseline", "ms"
        );
        for r in &self.rows {
            let baseline = r.baseline.map_or("-".to_string(), |b| b.to_string());
            let _ = writeln!(
                s,
                "{:<24} {:>6} {:>7} {:>5} {:>7} {:>7} {:>8} {:>10.2}  {}",
                r.instance,
                r.n,
                r.m,
                r.width,
                r.greedy,
                r.final_size,
                baseline,
                r.millis,
                r.final_provenance
            );
        }
        let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.4}"));
        let _ = writeln!(s, "instances            {}", self.rows.len());
        let _ = writeln!(s, "failed               {}", self.failed.len());
        let _ = writeln!(s, "geomean vs greedy    {}", fmt(self.geomean_vs_greedy));
        let _ = writeln!(
            s,
            "geomean vs baseline  {} (r = {})",
            fmt(self.geomean_vs_baseline),
            self.baseline_classes
        );
        s
    }
}
