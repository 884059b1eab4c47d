use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Text formats understood by [`parse_graph`]. All of them use 1-indexed vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// PACE 2017 `.gr`: `p tw <n> <m>` followed by `u v` lines, `c` comments.
    PaceGr,
    /// DIMACS: `p edge <n> <m>` followed by `e u v` lines, `c` comments.
    Dimacs,
    /// One `u v` pair per line; `n` is the largest identifier seen.
    /// Lines starting with `#`, `%` or `c` are comments.
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gr" | "pace" | "pace-gr" => Ok(GraphFormat::PaceGr),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::InvalidParameter(format!(
                "unknown graph format '{other}'"
            ))),
        }
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} '{tok}'")))
}

fn parse_vertex(tok: Option<&str>, line: usize, n: Option<usize>) -> Result<usize> {
    let v = parse_count(tok, line, "vertex")?;
    if v == 0 {
        return Err(Error::parse(line, "vertex identifiers are 1-indexed"));
    }
    if let Some(n) = n {
        if v > n {
            return Err(Error::parse(
                line,
                format!("vertex {v} out of range 1..={n}"),
            ));
        }
    }
    Ok(v - 1)
}

/// Parses a graph in the given format. Duplicate edges are collapsed;
/// self-loops, bad headers and out-of-range vertices are reported with the
/// offending line number.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap_or_default();
        match format {
            GraphFormat::PaceGr | GraphFormat::Dimacs => {
                if head == "c" {
                    continue;
                }
                if head == "p" {
                    if n.is_some() {
                        return Err(Error::parse(line_no, "duplicate header"));
                    }
                    let kind = if format == GraphFormat::PaceGr {
                        "tw"
                    } else {
                        "edge"
                    };
                    match toks.next() {
                        Some(k) if k == kind || (format == GraphFormat::Dimacs && k == "col") => {}
                        other => {
                            return Err(Error::parse(
                                line_no,
                                format!(
                                    "expected 'p {kind}' header, found '{}'",
                                    other.unwrap_or("")
                                ),
                            ))
                        }
                    }
                    n = Some(parse_count(toks.next(), line_no, "vertex count")?);
                    parse_count(toks.next(), line_no, "edge count")?;
                    if toks.next().is_some() {
                        return Err(Error::parse(line_no, "trailing tokens in header"));
                    }
                    continue;
                }
                let Some(nv) = n else {
                    return Err(Error::parse(line_no, "edge before header"));
                };
                let (a, b) = if format == GraphFormat::Dimacs {
                    if head != "e" {
                        return Err(Error::parse(
                            line_no,
                            format!("unexpected line type '{head}'"),
                        ));
                    }
                    (toks.next(), toks.next())
                } else {
                    (Some(head), toks.next())
                };
                let u = parse_vertex(a, line_no, Some(nv))?;
                let v = parse_vertex(b, line_no, Some(nv))?;
                if toks.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens after edge"));
                }
                edges.push((u, v, line_no));
            }
            GraphFormat::EdgeList => {
                if head.starts_with('#') || head.starts_with('%') || head == "c" {
                    continue;
                }
                let u = parse_vertex(Some(head), line_no, None)?;
                let v = parse_vertex(toks.next(), line_no, None)?;
                edges.push((u, v, line_no));
            }
        }
    }

    let n = match format {
        GraphFormat::EdgeList => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
        _ => n.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing header"))?,
    };
    if let Some(&(u, _, line)) = edges.iter().find(|&&(u, v, _)| u == v) {
        return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Writes `g` in PACE `.gr` format with edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}
