//! Text formats: MEL edge lists, graph6 import and DOT export.
//!
//! MEL: `#` starts a comment line, blank lines are ignored, the first other
//! line is `n <N>` and every further line is `e <u> <v>`; edge ids follow
//! line order.

use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse::<usize>()
            .or_else(|_| parse_err(line, format!("{what} is not a non-negative integer: {t:?}"))),
        None => parse_err(line, format!("missing {what}")),
    }
}

pub fn parse_mel(text: &str) -> Result<MultiGraph> {
    let mut g: Option<MultiGraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut toks = s.split_whitespace();
        let head = toks.next().unwrap();
        match (head, g.as_mut()) {
            ("n", None) => {
                let n = number(toks.next(), line, "vertex count")?;
                if toks.next().is_some() {
                    return parse_err(line, "trailing tokens after vertex count");
                }
                g = Some(MultiGraph::new(n));
            }
            ("n", Some(_)) => return parse_err(line, "duplicate header"),
            ("e", None) => return parse_err(line, "edge before the `n` header"),
            ("e", Some(g)) => {
                let u = number(toks.next(), line, "first endpoint")?;
                let v = number(toks.next(), line, "second endpoint")?;
                if toks.next().is_some() {
                    return parse_err(line, "trailing tokens after edge");
                }
                if u >= g.n() || v >= g.n() {
                    return parse_err(line, format!("endpoint out of range for n = {}", g.n()));
                }
                g.add_edge(u, v)?;
            }
            _ => return parse_err(line, format!("unrecognised line {s:?}")),
        }
    }
    g.ok_or(Error::Parse {
        line: 0,
        msg: "missing `n` header".into(),
    })
}

pub fn serialize_mel(g: &MultiGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Color lines `<edge_id> <color>`; blank and `#` lines are skipped. Every
/// edge of a graph with `m` edges must be colored exactly once.
pub fn parse_colors(text: &str, m: usize) -> Result<EdgeColoring> {
    let mut colors: Vec<Option<Color>> = vec![None; m];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut toks = s.split_whitespace();
        let e = number(toks.next(), line, "edge id")?;
        let c = number(toks.next(), line, "color")?;
        if toks.next().is_some() {
            return parse_err(line, "trailing tokens");
        }
        if e >= m {
            return parse_err(line, format!("edge id {e} out of range for m = {m}"));
        }
        if c == 0 || c > Color::MAX as usize {
            return parse_err(line, "colors start at 1");
        }
        if colors[e].replace(c as Color).is_some() {
            return parse_err(line, format!("edge {e} colored twice"));
        }
    }
    let colors: Option<Vec<Color>> = colors.into_iter().collect();
    EdgeColoring::new(colors.ok_or(Error::Parse {
        line: 0,
        msg: "some edge has no color".into(),
    })?)
}

/// One line `<edge_id> <u> <v> <color>` per edge.
pub fn coloring_lines(g: &MultiGraph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{e} {u} {v} {}", c.color(e)).unwrap();
    }
    out
}

/// Standard graph6 (simple graphs only, optional `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<MultiGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    if s.starts_with(':') || s.starts_with(';') || s.starts_with('&') {
        return Err(Error::Unsupported(
            "sparse6/digraph6 encodings (multigraphs, loops, digraphs) are not supported".into(),
        ));
    }
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.is_empty() {
        return parse_err(1, "empty graph6 string");
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return parse_err(1, format!("byte {b} is outside the graph6 range"));
    }
    let vals: Vec<u32> = bytes.iter().map(|&b| (b - 63) as u32).collect();
    let (n, rest) = if vals[0] < 63 {
        (vals[0] as usize, &vals[1..])
    } else if vals.len() >= 4 && vals[1] < 63 {
        let n = (vals[1] << 12) | (vals[2] << 6) | vals[3];
        (n as usize, &vals[4..])
    } else if vals.len() >= 8 {
        let mut n: usize = 0;
        for &x in &vals[2..8] {
            n = (n << 6) | x as usize;
        }
        (n, &vals[8..])
    } else {
        return parse_err(1, "truncated graph6 size field");
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return parse_err(1, format!("expected {need} data bytes for n = {n}, found {}", rest.len()));
    }
    let mut g = MultiGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (rest[k / 6] >> (5 - k % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Palette used by [`emit_dot`].
pub fn dot_color(c: Color) -> &'static str {
    match c {
        1 => "red",
        2 => "blue",
        3 => "green",
        4 => "orange",
        5 => "purple",
        _ => "black",
    }
}

/// Undirected DOT; parallel edges and loops are written out one by one.
pub fn emit_dot(g: &MultiGraph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => writeln!(
                out,
                "  {u} -- {v} [id=\"e{e}\", color={}, label=\"{}\"];",
                dot_color(c.color(e as EdgeId)),
                c.color(e)
            )
            .unwrap(),
            None => writeln!(out, "  {u} -- {v} [id=\"e{e}\"];").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
