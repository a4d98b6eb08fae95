//! Edge-list and DIMACS text formats.
//!
//! Edge list: one `u v` pair per line, `#` comment lines, and an optional
//! leading `n <count>` line. Vertex indices are 0- or 1-based.
//!
//! DIMACS: `c` comment lines, a single `p edge <n> <m>` header and `e u v`
//! lines with 1-based vertices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, BuiltGraph, Graph};

/// Index base of an edge-list file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    One,
}

impl IndexBase {
    fn offset(self) -> usize {
        match self {
            IndexBase::Zero => 0,
            IndexBase::One => 1,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found '{tok}'"),
        )
    })
}

pub fn parse_edge_list(text: &str, base: IndexBase) -> Result<BuiltGraph> {
    let mut declared_n = None;
    let mut seen_data = false;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "n" {
            if seen_data {
                return Err(parse_err(line_no, "'n' line must come before any edge"));
            }
            if toks.len() != 2 {
                return Err(parse_err(line_no, "expected 'n <count>'"));
            }
            declared_n = Some(parse_index(toks[1], line_no)?);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if toks.len() != 2 {
            return Err(parse_err(
                line_no,
                format!("expected 2 vertices, found {} tokens", toks.len()),
            ));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&toks) {
            let raw_idx = parse_index(tok, line_no)?;
            *slot = raw_idx
                .checked_sub(base.offset())
                .ok_or_else(|| parse_err(line_no, "vertex 0 in 1-based input"))?;
        }
        edges.push((pair[0], pair[1]));
    }
    let n = match declared_n {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    build_graph(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<BuiltGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate 'p' line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(line_no, "expected 'p edge <n> <m>'"));
                }
                header = Some((
                    parse_index(toks[2], line_no)?,
                    parse_index(toks[3], line_no)?,
                ));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge before 'p' line"));
                };
                if toks.len() != 3 {
                    return Err(parse_err(line_no, "expected 'e <u> <v>'"));
                }
                let u = parse_index(toks[1], line_no)?;
                let v = parse_index(toks[2], line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line_no, format!("vertex out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line_no, format!("unknown line type '{other}'"))),
        }
    }
    let (n, declared) = header.ok_or(Error::MissingHeader)?;
    let built = build_graph(n, edges)?;
    if built.graph.m() != declared {
        return Err(Error::EdgeCountMismatch {
            declared,
            parsed: built.graph.m(),
        });
    }
    Ok(built)
}

/// Parses either format, choosing DIMACS when the first meaningful line
/// starts with `p` or `c`.
pub fn parse_auto(text: &str) -> Result<BuiltGraph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p") | Some("c") => parse_dimacs(text),
        _ => parse_edge_list(text, IndexBase::Zero),
    }
}

/// Canonical DIMACS text: header followed by sorted 1-based edges.
pub fn to_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.n(), graph.m());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Canonical 0-based edge list with an explicit `n` line.
pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.n());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Splits a multi-graph corpus file into its edge-list blocks.
///
/// Blocks are separated by blank lines; a leading `# <name>` comment names
/// the block (otherwise the block index is used).
pub fn parse_corpus(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for (i, block) in text.split("\n\n").enumerate() {
        if block.trim().is_empty() {
            continue;
        }
        let name = block
            .lines()
            .next()
            .and_then(|l| l.trim().strip_prefix('#'))
            .map(|s| s.trim().to_string())
            .unwrap_or_else(|| format!("block{i}"));
        out.push((name, parse_edge_list(block, IndexBase::Zero)?.graph));
    }
    Ok(out)
}
