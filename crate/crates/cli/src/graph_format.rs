//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! freeloops 1
//! vertex a loop mark alpha=A^2+d beta=B
//! vertex b
//! edge a b
//! ```
//!
//! Vertices keep declaration order. Omitted weights are standard (`A`, `B`).
//! Polynomials must not contain whitespace.

use mgbracket::graph::{GraphError, VertexRecord};
use mgbracket::{LaurentPoly, MarkedWeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated words with 1-based columns.
pub(crate) fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<MarkedWeightedGraph, FormatError> {
    let mut g = MarkedWeightedGraph::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let ws = words(line);
        let Some(&(col, kw)) = ws.first() else {
            continue;
        };
        let end = line.trim_end().len() + 1;
        match kw {
            "vertex" => {
                let Some(&(lc, label)) = ws.get(1) else {
                    return Err(err(ln, end, "expected a vertex label"));
                };
                let mut v = VertexRecord::standard(label);
                for &(c, w) in &ws[2..] {
                    match w {
                        "loop" => v.looped = true,
                        "mark" => v.marked = true,
                        _ => {
                            let (key, value) = w
                                .split_once('=')
                                .ok_or_else(|| err(ln, c, format!("unexpected token {w:?}")))?;
                            let poly: LaurentPoly = value.parse().map_err(|e| {
                                err(ln, c + key.len() + 1, format!("bad polynomial: {e}"))
                            })?;
                            match key {
                                "alpha" => v.alpha = poly,
                                "beta" => v.beta = poly,
                                _ => return Err(err(ln, c, format!("unknown attribute {key:?}"))),
                            }
                        }
                    }
                }
                g.add_vertex(v).map_err(|e| err(ln, lc, e.to_string()))?;
            }
            "edge" => {
                let [_, (c1, a), (c2, b)] = ws[..] else {
                    return Err(err(ln, end, "expected `edge <label> <label>`"));
                };
                let i = g.require(a).map_err(|e| err(ln, c1, e.to_string()))?;
                let j = g.require(b).map_err(|e| err(ln, c2, e.to_string()))?;
                g.add_edge(i, j)
                    .map_err(|e: GraphError| err(ln, c2, e.to_string()))?;
            }
            "freeloops" => {
                let [_, (c, n)] = ws[..] else {
                    return Err(err(ln, end, "expected `freeloops <n>`"));
                };
                let n = n
                    .parse()
                    .map_err(|_| err(ln, c, "expected a natural number"))?;
                g.set_free_loops(n);
            }
            _ => return Err(err(ln, col, format!("unknown directive {kw:?}"))),
        }
    }
    Ok(g)
}

fn compact(p: &LaurentPoly) -> String {
    p.to_string().replace(' ', "")
}

pub fn write_graph(g: &MarkedWeightedGraph) -> String {
    let mut out = String::new();
    if g.free_loops() > 0 {
        out.push_str(&format!("freeloops {}\n", g.free_loops()));
    }
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(&v.label);
        if v.looped {
            out.push_str(" loop");
        }
        if v.marked {
            out.push_str(" mark");
        }
        if !v.has_standard_weights() {
            out.push_str(&format!(
                " alpha={} beta={}",
                compact(&v.alpha),
                compact(&v.beta)
            ));
        }
        out.push('\n');
    }
    for (i, j) in g.edges() {
        let vs = g.vertices();
        out.push_str(&format!("edge {} {}\n", vs[i].label, vs[j].label));
    }
    out
}
