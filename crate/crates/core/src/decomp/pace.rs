//! PACE 2017 `.td` reading and writing.

use std::fmt::Write as _;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Parses a PACE `.td` file: `s td <bags> <max-bag-size> <n>`, then
/// `b <id> <v>...` lines and `a b` tree-edge lines, all 1-indexed, with `c`
/// comments. Returns the decomposition (unrooted) and the declared vertex count.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();

    let num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
        let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("invalid {what} '{tok}'")))
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("s") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate solution line"));
                }
                if toks.next() != Some("td") {
                    return Err(Error::parse(line_no, "expected 's td' header"));
                }
                let nb = num(toks.next(), line_no, "bag count")?;
                let mb = num(toks.next(), line_no, "maximum bag size")?;
                let n = num(toks.next(), line_no, "vertex count")?;
                if toks.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens in header"));
                }
                header = Some((nb, mb, n));
                bags = vec![None; nb];
            }
            Some("b") => {
                let Some((nb, mb, n)) = header else {
                    return Err(Error::parse(line_no, "bag before header"));
                };
                let id = num(toks.next(), line_no, "bag id")?;
                if id == 0 || id > nb {
                    return Err(Error::parse(
                        line_no,
                        format!("bag id {id} out of range 1..={nb}"),
                    ));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::parse(line_no, format!("bag {id} declared twice")));
                }
                let mut verts = Vec::new();
                for tok in toks {
                    let v = num(Some(tok), line_no, "vertex")?;
                    if v == 0 || v > n {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex {v} out of range 1..={n}"),
                        ));
                    }
                    verts.push(v - 1);
                }
                let bag = VertexSet::from_vec(verts);
                if bag.len() > mb {
                    return Err(Error::parse(
                        line_no,
                        format!("bag {id} has {} vertices, header allows {mb}", bag.len()),
                    ));
                }
                bags[id - 1] = Some(bag);
            }
            Some(tok) => {
                let Some((nb, _, _)) = header else {
                    return Err(Error::parse(line_no, "tree edge before header"));
                };
                let a = num(Some(tok), line_no, "bag id")?;
                let b = num(toks.next(), line_no, "bag id")?;
                if toks.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens after tree edge"));
                }
                for x in [a, b] {
                    if x == 0 || x > nb {
                        return Err(Error::parse(
                            line_no,
                            format!("bag id {x} out of range 1..={nb}"),
                        ));
                    }
                }
                if a == b {
                    return Err(Error::parse(line_no, "tree edge is a loop"));
                }
                edges.push((a - 1, b - 1));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (_, _, n) =
        header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing 's td' header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| {
                Error::parse(
                    text.lines().count().max(1),
                    format!("bag {} never declared", i + 1),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(bags, edges)?;
    Ok((td, n))
}

/// Writes `td` as a PACE `.td` file for a graph on `n` vertices.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "s td {} {} {}", td.num_nodes(), td.max_bag_size(), n).unwrap();
    for (t, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", t + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for (a, b) in td.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_partial_ktree;
    use proptest::prelude::*;

    #[test]
    fn parses_pace_example() {
        let text = "c example\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let (td, n) = parse_td(text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(td.num_nodes(), 2);
        assert_eq!(td.bag(1).as_slice(), &[1, 2]);
        assert_eq!(td.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn empty_bag_line() {
        let (td, _) = parse_td("s td 2 1 1\nb 1 1\nb 2\n1 2\n").unwrap();
        assert!(td.bag(1).is_empty());
    }

    #[test]
    fn reports_line_numbers() {
        for (text, line) in [
            ("s td 1 1 2\nb 1 3\n", 2),
            ("s td 1 1 2\nb 2 1\n", 2),
            ("b 1 1\n", 1),
            ("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n", 4),
            ("s td 1 1 2\nb 1 1 2\n", 2),
            ("s tw 1 1 1\n", 1),
        ] {
            match parse_td(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
        assert!(parse_td("s td 2 1 2\nb 1 1\n").is_err());
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(seed in 0u64..1000, n in 4usize..40, k in 1usize..4) {
            let (g, td) = gen_partial_ktree(n, k, 0.8, seed).unwrap();
            let (back, bn) = parse_td(&write_td(&td, g.n())).unwrap();
            prop_assert_eq!(bn, g.n());
            prop_assert_eq!(back, td);
        }
    }
}
