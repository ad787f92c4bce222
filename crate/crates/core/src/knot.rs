//! Euler codes of (virtual) link diagrams, their interlacement graphs, and
//! the bracket → f-polynomial → Jones pipeline.
//!
//! Text format, one directive per line:
//!
//! ```text
//! # comment
//! circuit a b a b
//! sign a -
//! mark b
//! freeloops 1
//! ```
//!
//! Unlisted signs default to `+`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::bracket::{BracketError, BracketValue, Evaluator};
use crate::graph::{is_valid_label, MarkedWeightedGraph, VertexRecord};
use crate::ring::{LaurentPoly, Monomial, RingError, VarSym};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("label {label:?} occurs {count} times; every crossing needs exactly two")]
    DoubleOccurrenceViolation { label: String, count: usize },
    #[error("the two occurrences of {0:?} lie in different circuits")]
    SplitLabel(String),
    #[error("sign or mark refers to unknown label {0:?}")]
    UnknownLabelInSignOrMark(String),
    #[error("bracket contains variable {0:?}; only A, B and d are allowed")]
    UnexpectedVariable(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCodeDiagram {
    circuits: Vec<Vec<String>>,
    signs: BTreeMap<String, Sign>,
    marks: BTreeSet<String>,
    free_loops: u32,
}

impl EulerCodeDiagram {
    /// Validate and build. Labels missing from `signs` are positive.
    pub fn new(
        circuits: Vec<Vec<String>>,
        signs: BTreeMap<String, Sign>,
        marks: BTreeSet<String>,
        free_loops: u32,
    ) -> Result<Self, KnotError> {
        let mut seen: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for (ci, c) in circuits.iter().enumerate() {
            for l in c {
                let e = seen.entry(l.as_str()).or_insert((0, ci));
                e.0 += 1;
                if e.1 != ci {
                    e.1 = usize::MAX;
                }
            }
        }
        for (l, &(count, ci)) in &seen {
            if count != 2 {
                return Err(KnotError::DoubleOccurrenceViolation {
                    label: l.to_string(),
                    count,
                });
            }
            if ci == usize::MAX {
                return Err(KnotError::SplitLabel(l.to_string()));
            }
        }
        for l in signs.keys().chain(marks.iter()) {
            if !seen.contains_key(l.as_str()) {
                return Err(KnotError::UnknownLabelInSignOrMark(l.clone()));
            }
        }
        let mut signs = signs;
        for l in seen.keys() {
            signs.entry(l.to_string()).or_insert(Sign::Positive);
        }
        Ok(EulerCodeDiagram {
            circuits,
            signs,
            marks,
            free_loops,
        })
    }

    pub fn circuits(&self) -> &[Vec<String>] {
        &self.circuits
    }

    pub fn sign(&self, label: &str) -> Option<Sign> {
        self.signs.get(label).copied()
    }

    pub fn is_marked(&self, label: &str) -> bool {
        self.marks.contains(label)
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    /// Crossing labels in order of first appearance.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for c in &self.circuits {
            for l in c {
                if !out.contains(&l.as_str()) {
                    out.push(l);
                }
            }
        }
        out
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }
}

impl core::str::FromStr for EulerCodeDiagram {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self, KnotError> {
        parse_euler_code(s)
    }
}

fn syntax(line: usize, column: usize, message: &str) -> KnotError {
    KnotError::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

/// Whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
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

pub fn parse_euler_code(text: &str) -> Result<EulerCodeDiagram, KnotError> {
    let mut circuits = Vec::new();
    let mut signs = BTreeMap::new();
    let mut marks = BTreeSet::new();
    let mut free_loops = 0u32;
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let ws = words(line);
        let Some(&(col, kw)) = ws.first() else {
            continue;
        };
        let args = &ws[1..];
        let label = |&(c, w): &(usize, &str)| -> Result<String, KnotError> {
            if is_valid_label(w) {
                Ok(w.to_string())
            } else {
                Err(syntax(ln, c, "invalid label"))
            }
        };
        let end = col + line[col - 1..].trim_end().len();
        match kw {
            "circuit" => {
                let c = args.iter().map(label).collect::<Result<Vec<_>, _>>()?;
                if c.is_empty() {
                    return Err(syntax(ln, end, "circuit needs at least one label"));
                }
                circuits.push(c);
            }
            "sign" => {
                let [l, s] = args else {
                    return Err(syntax(ln, end, "expected `sign <label> +|-`"));
                };
                let sign = match s.1 {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(syntax(ln, s.0, "sign must be + or -")),
                };
                signs.insert(label(l)?, sign);
            }
            "mark" => {
                let [l] = args else {
                    return Err(syntax(ln, end, "expected `mark <label>`"));
                };
                marks.insert(label(l)?);
            }
            "freeloops" => {
                let [(c, n)] = args else {
                    return Err(syntax(ln, end, "expected `freeloops <n>`"));
                };
                free_loops = n
                    .parse()
                    .map_err(|_| syntax(ln, *c, "expected a natural number"))?;
            }
            _ => return Err(syntax(ln, col, "unknown directive")),
        }
    }
    EulerCodeDiagram::new(circuits, signs, marks, free_loops)
}

impl fmt::Display for EulerCodeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.circuits {
            f.write_str("circuit")?;
            for l in c {
                write!(f, " {l}")?;
            }
            writeln!(f)?;
        }
        for l in self.labels() {
            if self.signs[l] == Sign::Negative {
                writeln!(f, "sign {l} -")?;
            }
        }
        for l in &self.marks {
            writeln!(f, "mark {l}")?;
        }
        if self.free_loops > 0 {
            writeln!(f, "freeloops {}", self.free_loops)?;
        }
        Ok(())
    }
}

/// One vertex per crossing; `v ~ w` when their occurrences alternate in a circuit.
pub fn interlacement_graph(dgm: &EulerCodeDiagram) -> MarkedWeightedGraph {
    let labels = dgm.labels();
    let mut g = MarkedWeightedGraph::new();
    for &l in &labels {
        let v = VertexRecord::standard(l)
            .looped(dgm.signs[l] == Sign::Negative)
            .marked(dgm.is_marked(l));
        g.add_vertex(v).expect("labels validated");
    }
    let mut pos: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for (ci, c) in dgm.circuits.iter().enumerate() {
        for (i, l) in c.iter().enumerate() {
            pos.entry(l).and_modify(|e| e.2 = i).or_insert((ci, i, i));
        }
    }
    for (i, &v) in labels.iter().enumerate() {
        let (cv, p1, p2) = pos[v];
        for (j, &w) in labels.iter().enumerate().skip(i + 1) {
            let (cw, q1, q2) = pos[w];
            if cv == cw && ((p1 < q1 && q1 < p2) != (p1 < q2 && q2 < p2)) {
                g.add_edge(i, j).expect("distinct vertices");
            }
        }
    }
    g.set_free_loops(dgm.free_loops);
    g
}

/// Positive minus negative crossings.
pub fn writhe(dgm: &EulerCodeDiagram) -> i64 {
    dgm.signs
        .values()
        .map(|s| if *s == Sign::Positive { 1 } else { -1 })
        .sum()
}

pub fn diagram_bracket(
    dgm: &EulerCodeDiagram,
    ev: &mut Evaluator,
) -> Result<BracketValue, BracketError> {
    ev.eval(&interlacement_graph(dgm))
}

fn var(name: &str) -> VarSym {
    VarSym::new(name).expect("valid name")
}

/// `d -> -A^2 - B^2`, `B -> A^-1`, times `(-A^-3)^w`.
pub fn f_polynomial(bracket: &BracketValue, w: i64) -> Result<LaurentPoly, KnotError> {
    for v in bracket.variables() {
        if !matches!(v.as_str(), "A" | "B" | "d") {
            return Err(KnotError::UnexpectedVariable(v.as_str().to_string()));
        }
    }
    let a = LaurentPoly::symbol("A");
    let b = LaurentPoly::symbol("B");
    let loop_value = -(&(&a * &a) + &(&b * &b));
    let p = bracket.substitute(&var("d"), &loop_value)?;
    let p = p.substitute(&var("B"), &a.powi(-1)?)?;
    let w = i32::try_from(w).map_err(|_| RingError::NonInvertiblePower)?;
    let norm = (-a.pow(3)).powi(-w)?;
    Ok(&p * &norm)
}

/// Jones polynomial stored in `q = t^(1/4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JonesValue(pub LaurentPoly);

impl JonesValue {
    /// `(coefficient, exponent of t as numerator / 4)`, highest power first.
    pub fn quarter_terms(&self) -> Vec<(BigInt, i32)> {
        let q = var("q");
        let mut out: Vec<(BigInt, i32)> = self
            .0
            .terms()
            .map(|(m, c)| (c.clone(), m.exponent(&q)))
            .collect();
        out.sort_by_key(|x| core::cmp::Reverse(x.1));
        out
    }
}

fn t_power(e: i32) -> Option<String> {
    if e == 0 {
        return None;
    }
    let g = num_integer::gcd(e.abs(), 4);
    let (num, den) = (e / g, 4 / g);
    Some(match (num, den) {
        (1, 1) => "t".to_string(),
        (n, 1) => alloc::format!("t^{n}"),
        (n, dd) => alloc::format!("t^({n}/{dd})"),
    })
}

impl fmt::Display for JonesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.quarter_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, e)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            match t_power(*e) {
                None => write!(f, "{mag}")?,
                Some(t) if mag.is_one() => f.write_str(&t)?,
                Some(t) => write!(f, "{mag}*{t}")?,
            }
        }
        Ok(())
    }
}

/// `A -> q^-1`.
pub fn jones(fpoly: &LaurentPoly) -> Result<JonesValue, KnotError> {
    let q = LaurentPoly::term(1, Monomial::var(var("q"), -1));
    for v in fpoly.variables() {
        if v.as_str() != "A" {
            return Err(KnotError::UnexpectedVariable(v.as_str().to_string()));
        }
    }
    Ok(JonesValue(fpoly.substitute(&var("A"), &q)?))
}

/// Convenience: the full pipeline on a diagram.
pub fn diagram_jones(dgm: &EulerCodeDiagram, ev: &mut Evaluator) -> Result<JonesValue, KnotError> {
    let br = diagram_bracket(dgm, ev)?;
    jones(&f_polynomial(&br, writhe(dgm))?)
}
