//! Text forms: `L[w0,...]` chains, `C(w0,...)` circles, and a line format
//! `V <id> <weight>` / `E <id> <id>` for anything else.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{join_ints, CircularGraph, LinearChain, Shape, VertexId, WeightedGraph};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    let t = tok.trim().replace('\u{2212}', "-");
    let t = t.strip_prefix('+').unwrap_or(&t);
    t.parse::<i64>().map_err(|_| perr(line, format!("bad integer {tok:?}")))
}

fn parse_list(body: &str) -> Result<Vec<i64>> {
    if body.trim().is_empty() {
        return Err(Error::EmptyGraph);
    }
    body.split(',').map(|t| parse_int(t, 1)).collect()
}

/// Parses any of the three text forms.
pub fn parse_graph(src: &str) -> Result<WeightedGraph> {
    let s = src.trim();
    if let Some(body) = s.strip_prefix("L[").and_then(|r| r.strip_suffix(']')) {
        return LinearChain::new(parse_list(body)?).to_graph();
    }
    if let Some(body) = s.strip_prefix("C(").and_then(|r| r.strip_suffix(')')) {
        return CircularGraph::new(parse_list(body)?).to_graph();
    }
    parse_lines(s)
}

fn parse_lines(s: &str) -> Result<WeightedGraph> {
    let mut weights = BTreeMap::new();
    let mut edges = Vec::new();
    for (i, raw) in s.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        for stmt in content.split(';') {
            let toks: Vec<&str> = stmt.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                ["V", id, w] => {
                    let id = parse_id(id, line)?;
                    if weights.insert(id, parse_int(w, line)?).is_some() {
                        return Err(perr(line, format!("vertex {id} declared twice")));
                    }
                }
                ["E", a, b] => edges.push((parse_id(a, line)?, parse_id(b, line)?)),
                _ => return Err(perr(line, format!("unrecognized statement {:?}", stmt.trim()))),
            }
        }
    }
    for &(a, b) in &edges {
        if !weights.contains_key(&a) || !weights.contains_key(&b) {
            return Err(Error::DanglingEdge(a.0 as usize, b.0 as usize));
        }
    }
    WeightedGraph::from_parts(weights, edges)
}

fn parse_id(tok: &str, line: usize) -> Result<VertexId> {
    tok.parse::<u32>().map(VertexId).map_err(|_| perr(line, format!("bad vertex id {tok:?}")))
}

fn leading_zeros(ws: &[i64]) -> usize {
    ws.iter().take_while(|&&w| w == 0).count()
}

/// Orientation of a chain used for display: the end with more leading
/// zeros first, ties going to the end with the smaller id.
pub fn display_chain(g: &WeightedGraph) -> Option<LinearChain> {
    let c = LinearChain::from_graph(g)?;
    let r = c.reverse();
    let (zc, zr) = (leading_zeros(&c.weights), leading_zeros(&r.weights));
    if zr > zc || (zr == zc && r.ids[0] < c.ids[0]) {
        Some(r)
    } else {
        Some(c)
    }
}

/// Reading of a circle used for display: the base point maximizes the
/// number of leading zeros.
pub fn display_circle(g: &WeightedGraph) -> Option<CircularGraph> {
    let c = CircularGraph::from_graph(g)?;
    let n = c.len();
    let mut best: Option<((usize, VertexId, VertexId), CircularGraph)> = None;
    for dir in [c.clone(), c.reverse()] {
        for k in 0..n {
            let r = dir.rotate(k);
            let key = (
                n - leading_zeros(&r.weights),
                r.ids[0],
                r.ids.get(1).copied().unwrap_or(r.ids[0]),
            );
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, r));
            }
        }
    }
    best.map(|(_, r)| r)
}

pub fn format_lines(g: &WeightedGraph) -> String {
    let mut out: Vec<String> = g.weights().iter().map(|(v, w)| format!("V {v} {w}")).collect();
    let mut es: Vec<(VertexId, VertexId)> = g.edges().map(|(_, u, v)| (u, v)).collect();
    es.sort();
    out.extend(es.into_iter().map(|(u, v)| format!("E {u} {v}")));
    out.join("\n")
}

/// Canonical text of a graph. Connected chains and circles use the compact
/// forms; everything else uses the line format.
pub fn format_graph(g: &WeightedGraph) -> String {
    let comps = g.components();
    if comps.len() == 1 {
        match g.component_shape(&comps[0]) {
            Shape::Point | Shape::Linear => {
                return format!("L[{}]", join_ints(&display_chain(g).unwrap().weights))
            }
            Shape::Circular => {
                return format!("C({})", join_ints(&display_circle(g).unwrap().weights))
            }
            Shape::Branched => {}
        }
    }
    format_lines(g)
}
