//! Seeded random instances: graphs, twin configurations, compositions and Euler codes.

use std::collections::{BTreeMap, BTreeSet};

use mgbracket::graph::VertexRecord;
use mgbracket::knot::{EulerCodeDiagram, Sign};
use mgbracket::{LaurentPoly, MarkedWeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weights {
    /// `alpha = A`, `beta = B` everywhere.
    Standard,
    /// Fresh symbols `x<i>`, `y<i>` per vertex.
    Symbolic,
}

/// Probabilities used for every generated graph.
pub const EDGE_P: f64 = 0.5;
pub const LOOP_P: f64 = 0.25;
pub const MARK_P: f64 = 0.25;

pub struct Generator {
    rng: ChaCha8Rng,
}

fn sym(s: &str) -> LaurentPoly {
    LaurentPoly::symbol(s)
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn weights(&self, mode: Weights, tag: &str) -> (LaurentPoly, LaurentPoly) {
        match mode {
            Weights::Standard => (sym("A"), sym("B")),
            Weights::Symbolic => (sym(&format!("x{tag}")), sym(&format!("y{tag}"))),
        }
    }

    /// `n` vertices labelled `<prefix><i>`.
    pub fn graph_with(&mut self, n: usize, mode: Weights, prefix: &str) -> MarkedWeightedGraph {
        let mut g = MarkedWeightedGraph::new();
        for i in 0..n {
            let (a, b) = self.weights(mode, &format!("{prefix}{i}"));
            let v = VertexRecord::standard(&format!("{prefix}{i}"))
                .looped(self.coin(LOOP_P))
                .marked(self.coin(MARK_P))
                .weights(a, b);
            g.add_vertex(v).expect("fresh label");
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.coin(EDGE_P) {
                    g.add_edge(i, j).expect("distinct");
                }
            }
        }
        g
    }

    pub fn graph(&mut self, n: usize, mode: Weights) -> MarkedWeightedGraph {
        self.graph_with(n, mode, "v")
    }

    /// Host graph plus `k` twins with a common outside neighborhood.
    /// Twin `t` gets marks from `marks`, pairwise adjacency from `clique`,
    /// and symbolic weights `s<t>`, `u<t>`. Returns the twin indices.
    pub fn with_twins(
        &mut self,
        host: usize,
        k: usize,
        clique: bool,
        marks: &[bool],
    ) -> (MarkedWeightedGraph, Vec<usize>) {
        let mut g = self.graph(host, Weights::Symbolic);
        let nb: Vec<bool> = (0..host).map(|_| self.coin(0.5)).collect();
        let mut twins = Vec::new();
        for (t, &marked) in marks.iter().enumerate().take(k) {
            let v = VertexRecord::standard(&format!("t{t}"))
                .marked(marked)
                .weights(sym(&format!("s{t}")), sym(&format!("u{t}")));
            let i = g.add_vertex(v).expect("fresh label");
            for (u, &on) in nb.iter().enumerate() {
                if on {
                    g.add_edge(i, u).expect("distinct");
                }
            }
            if clique {
                for &j in &twins {
                    g.add_edge(i, j).expect("distinct");
                }
            }
            twins.push(i);
        }
        (g, twins)
    }

    /// Graph with an extra standard cut vertex `a`; optionally its neighbors are unmarked.
    pub fn with_cut(
        &mut self,
        n: usize,
        mode: Weights,
        prefix: &str,
        unmark_neighbors: bool,
    ) -> MarkedWeightedGraph {
        let mut g = self.graph_with(n, mode, prefix);
        let a = g
            .add_vertex(VertexRecord::standard("a"))
            .expect("fresh label");
        for u in 0..n {
            if self.coin(0.5) {
                g.add_edge(a, u).expect("distinct");
                if unmark_neighbors {
                    g.vertex_mut(u).expect("in range").marked = false;
                }
            }
        }
        g
    }

    /// Random valid Euler code: up to three circuits, random signs and marks.
    pub fn euler_code(&mut self, crossings: usize) -> EulerCodeDiagram {
        let n_circuits = self.range(1, 3.min(crossings.max(1)));
        let mut circuits: Vec<Vec<String>> = vec![Vec::new(); n_circuits];
        let mut signs = BTreeMap::new();
        let mut marks = BTreeSet::new();
        for c in 0..crossings {
            let label = format!("c{c}");
            let k = if c < n_circuits {
                c
            } else {
                self.range(0, n_circuits - 1)
            };
            circuits[k].push(label.clone());
            circuits[k].push(label.clone());
            if self.coin(0.5) {
                signs.insert(label.clone(), Sign::Negative);
            }
            if self.coin(MARK_P) {
                marks.insert(label);
            }
        }
        for c in &mut circuits {
            c.shuffle(&mut self.rng);
        }
        circuits.retain(|c| !c.is_empty());
        let free = self.range(0, 2) as u32;
        EulerCodeDiagram::new(circuits, signs, marks, free).expect("generated code is valid")
    }
}
