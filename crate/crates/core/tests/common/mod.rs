#![allow(dead_code)]

use mgbracket::graph::VertexRecord;
use mgbracket::{LaurentPoly, MarkedWeightedGraph};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// Per-vertex weight choice: standard, fresh symbols, or a small polynomial.
#[derive(Debug, Clone)]
pub enum W {
    Standard,
    Symbolic,
    Poly(i8, i8, i8),
}

fn weight_strategy(symbolic: bool) -> BoxedStrategy<W> {
    if symbolic {
        prop_oneof![
            1 => Just(W::Standard),
            3 => Just(W::Symbolic),
            1 => (-2i8..=2, -2i8..=2, -1i8..=1).prop_map(|(a, b, c)| W::Poly(a, b, c)),
        ]
        .boxed()
    } else {
        Just(W::Standard).boxed()
    }
}

fn weights(w: &W, i: usize) -> (LaurentPoly, LaurentPoly) {
    match w {
        W::Standard => (p("A"), p("B")),
        W::Symbolic => (p(&format!("x{i}")), p(&format!("y{i}"))),
        W::Poly(a, b, c) => {
            let (a, b, c) = (i64::from(*a), i64::from(*b), i64::from(*c));
            (
                p("A").scale(a) + &p("d").scale(c) + &LaurentPoly::one(),
                p("B").scale(b) + &p("A*B^-1").scale(c),
            )
        }
    }
}

#[derive(Debug, Clone)]
pub struct GraphPlan {
    pub n: usize,
    pub edges: Vec<bool>,
    pub loops: Vec<bool>,
    pub marks: Vec<bool>,
    pub weights: Vec<W>,
    pub free_loops: u32,
}

impl GraphPlan {
    pub fn build(&self) -> MarkedWeightedGraph {
        self.build_with_prefix("v")
    }

    pub fn build_with_prefix(&self, prefix: &str) -> MarkedWeightedGraph {
        let mut g = MarkedWeightedGraph::new();
        for i in 0..self.n {
            let (a, b) = weights(&self.weights[i], i);
            let label = format!("{prefix}{i}");
            let v = VertexRecord::standard(&label)
                .looped(self.loops[i])
                .marked(self.marks[i])
                .weights(a, b);
            g.add_vertex(v).unwrap();
        }
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.edges[k] {
                    g.add_edge(i, j).unwrap();
                }
                k += 1;
            }
        }
        g.set_free_loops(self.free_loops);
        g
    }
}

pub fn graph_plan(lo: usize, hi: usize, symbolic: bool) -> impl Strategy<Value = GraphPlan> {
    (lo..=hi).prop_flat_map(move |n| {
        (
            vec(any::<bool>(), n * n.saturating_sub(1) / 2),
            vec(prop::bool::weighted(0.25), n),
            vec(prop::bool::weighted(0.25), n),
            vec(weight_strategy(symbolic), n),
            0u32..2,
        )
            .prop_map(
                move |(edges, loops, marks, weights, free_loops)| GraphPlan {
                    n,
                    edges,
                    loops,
                    marks,
                    weights,
                    free_loops,
                },
            )
    })
}

pub fn graph(lo: usize, hi: usize, symbolic: bool) -> impl Strategy<Value = MarkedWeightedGraph> {
    graph_plan(lo, hi, symbolic).prop_map(|s| s.build())
}

/// Small random polynomial in A, B, d, used as a scalar.
pub fn scalar() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, -2i64..=2, -2i64..=2, -1i32..=2).prop_map(|(a, b, c, e)| {
        LaurentPoly::constant(a) + &p(&format!("A^{e}*B")).scale(b) + &p("d^2").scale(c)
    })
}

/// Append `k` twins sharing the neighborhood `nbhd` of the host; returns their indices.
pub fn add_twins(
    g: &mut MarkedWeightedGraph,
    nbhd: &[bool],
    k: usize,
    clique: bool,
    marks: &[bool],
    symbolic: bool,
) -> Vec<usize> {
    let host = g.len();
    let mut out = Vec::new();
    for (t, &marked) in marks.iter().enumerate().take(k) {
        let (a, b) = if symbolic {
            (p(&format!("s{t}")), p(&format!("u{t}")))
        } else {
            (p("A"), p("B"))
        };
        let v = VertexRecord::standard(&format!("t{t}"))
            .marked(marked)
            .weights(a, b);
        let i = g.add_vertex(v).unwrap();
        for (u, &on) in nbhd.iter().enumerate().take(host) {
            if on {
                g.add_edge(i, u).unwrap();
            }
        }
        if clique {
            for &j in &out {
                g.add_edge(i, j).unwrap();
            }
        }
        out.push(i);
    }
    out
}
