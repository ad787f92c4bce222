//! Randomized and exhaustive checks of every bracket identity against the
//! state-sum oracle.

use mgbracket::bracket::{bracket_recursive, bracket_state_sum};
use mgbracket::graph::VertexRecord;
use mgbracket::reduce::{
    bracket_double_composition, bracket_via_composition, build_f10_f01, build_fpm,
    clique_twin_reduce, contributions, dual_parallel_reduce, h_prime, h_prime_marked,
    nonadjacent_twin_chain, pjoin_weights_cor1, pjoin_weights_cor3, pjoin_weights_cor4,
    subset_type, twin_pair_reduce, twin_pair_split,
};
use mgbracket::{bracket, compose, Engine, Evaluator, LaurentPoly, MarkedWeightedGraph};

use crate::graph_format::write_graph;
use crate::random::{Generator, Weights};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub instances: usize,
    /// Description plus the offending graph(s) in graph text format.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Check = Result<(), String>;

fn oracle(g: &MarkedWeightedGraph) -> LaurentPoly {
    bracket_state_sum(g)
}

fn ev() -> Evaluator {
    Evaluator::new(Engine::StateSum)
}

fn show(what: &str, graphs: &[&MarkedWeightedGraph]) -> String {
    let mut s = format!("{what}\n");
    for (k, g) in graphs.iter().enumerate() {
        s.push_str(&format!("# graph {}\n{}", k + 1, write_graph(g)));
    }
    s
}

fn expect_eq(
    what: &str,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    graphs: &[&MarkedWeightedGraph],
) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(show(&format!("{what}: {lhs} != {rhs}"), graphs))
    }
}

fn ok_or_show<T, E: std::fmt::Display>(
    r: Result<T, E>,
    what: &str,
    graphs: &[&MarkedWeightedGraph],
) -> Result<T, String> {
    r.map_err(|e| show(&format!("{what}: {e}"), graphs))
}

/// Marked pivot with the neighborhood exchange left out; used to show the
/// harness catches a broken rule.
pub fn corrupt_marked_pivot(g: &MarkedWeightedGraph, v: usize, w: usize) -> MarkedWeightedGraph {
    let mut h = g.pivot(v, w).expect("valid pair");
    for x in [v, w] {
        let r = h.vertex_mut(x).expect("in range");
        r.marked = !r.marked;
    }
    h
}

pub struct Suite {
    pub gen: Generator,
    pub corrupt_pivot: bool,
}

impl Suite {
    pub fn new(seed: u64) -> Self {
        Suite {
            gen: Generator::new(seed),
            corrupt_pivot: false,
        }
    }

    fn run(
        &mut self,
        name: &str,
        trials: usize,
        mut f: impl FnMut(&mut Generator) -> Check,
    ) -> CheckOutcome {
        for i in 0..trials {
            if let Err(e) = f(&mut self.gen) {
                return CheckOutcome {
                    name: name.to_string(),
                    instances: i + 1,
                    failure: Some(e),
                };
            }
        }
        CheckOutcome {
            name: name.to_string(),
            instances: trials,
            failure: None,
        }
    }

    /// Every graph on up to `max_n` labelled vertices with every loop/mark pattern.
    pub fn oracle_exhaustive(&mut self, max_n: usize) -> CheckOutcome {
        let mut count = 0;
        for n in 0..=max_n {
            let pairs = n * n.saturating_sub(1) / 2;
            for edges in 0u64..1 << pairs {
                for lm in 0u64..1 << (2 * n) {
                    let vs = (0..n)
                        .map(|i| {
                            VertexRecord::standard(&format!("v{i}"))
                                .looped(lm >> i & 1 == 1)
                                .marked(lm >> (n + i) & 1 == 1)
                        })
                        .collect();
                    let mut es = Vec::new();
                    let mut k = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            if edges >> k & 1 == 1 {
                                es.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    let g = MarkedWeightedGraph::from_parts(vs, &es, 0).expect("valid");
                    count += 1;
                    let o = oracle(&g);
                    let checks =
                        expect_eq("recursive vs state sum", &bracket_recursive(&g), &o, &[&g])
                            .and_then(|_| {
                                let auto = bracket(&g, Engine::Auto).map_err(|e| e.to_string())?;
                                expect_eq("auto vs state sum", &auto, &o, &[&g])
                            });
                    if let Err(e) = checks {
                        return CheckOutcome {
                            name: "oracle (exhaustive)".into(),
                            instances: count,
                            failure: Some(e),
                        };
                    }
                }
            }
        }
        CheckOutcome {
            name: "oracle (exhaustive)".into(),
            instances: count,
            failure: None,
        }
    }

    pub fn oracle_random(&mut self, trials: usize, lo: usize, hi: usize) -> CheckOutcome {
        self.run("oracle (random, symbolic weights)", trials, |gen| {
            let n = gen.range(lo, hi);
            let g = gen.graph(n, Weights::Symbolic);
            let o = oracle(&g);
            expect_eq("recursive vs state sum", &bracket_recursive(&g), &o, &[&g])?;
            let auto = bracket(&g, Engine::Auto).map_err(|e| e.to_string())?;
            expect_eq("auto vs state sum", &auto, &o, &[&g])
        })
    }

    pub fn loops(&mut self, trials: usize) -> CheckOutcome {
        self.run("loops: unloop_swap", trials, |gen| {
            let n = gen.range(1, 7);
            let g = gen.graph(n, Weights::Symbolic);
            expect_eq("unloop_swap", &oracle(&g.unloop_swap()), &oracle(&g), &[&g])
        })
    }

    pub fn marked_pivot(&mut self, trials: usize) -> CheckOutcome {
        let corrupt = self.corrupt_pivot;
        self.run("marked pivot invariance", trials, |gen| {
            let n = gen.range(2, 7);
            let mut g = gen.graph(n, Weights::Symbolic);
            let edges = g.edges();
            let (v, w) = match edges.len() {
                0 => {
                    g.add_edge(0, 1).expect("distinct");
                    (0, 1)
                }
                k => edges[gen.range(0, k - 1)],
            };
            g.vertex_mut(v).expect("in range").marked = true;
            g.vertex_mut(w).expect("in range").marked = true;
            let p = if corrupt {
                corrupt_marked_pivot(&g, v, w)
            } else {
                g.marked_pivot(v, w).expect("adjacent")
            };
            expect_eq(
                &format!("marked pivot on ({v}, {w})"),
                &oracle(&p),
                &oracle(&g),
                &[&g],
            )
        })
    }

    pub fn disjoint_union(&mut self, trials: usize) -> CheckOutcome {
        self.run("disjoint union multiplicativity", trials, |gen| {
            let (n, m) = (gen.range(0, 5), gen.range(0, 5));
            let g = gen.graph_with(n, Weights::Symbolic, "f");
            let h = gen.graph_with(m, Weights::Symbolic, "h");
            let u = g.disjoint_union(&h).expect("labels differ");
            expect_eq(
                "[G + H] = [G][H]",
                &oracle(&u),
                &(&oracle(&g) * &oracle(&h)),
                &[&g, &h],
            )
        })
    }

    /// Merging two unlooped twins; `case` selects the mark/adjacency pattern.
    pub fn twin_pair(&mut self, trials: usize, case: char) -> CheckOutcome {
        let (marks, adjacent) = match case {
            'a' => ([true, true], false),
            'b' => ([false, false], true),
            'c' => ([false, true], true),
            _ => ([true, true], true),
        };
        self.run(&format!("twin pair merge ({case})"), trials, |gen| {
            let host = gen.range(0, 5);
            let (g, vs) = gen.with_twins(host, 2, adjacent, &marks);
            let r = ok_or_show(
                twin_pair_reduce(&g, vs[0], vs[1]),
                "twin_pair_reduce",
                &[&g],
            )?;
            expect_eq("merged twins", &oracle(&r), &oracle(&g), &[&g])
        })
    }

    /// Splitting off a nonadjacent twin; `case` 'a' both unmarked, 'b' w marked.
    pub fn twin_split(&mut self, trials: usize, case: char) -> CheckOutcome {
        let marks = if case == 'a' {
            [false, false]
        } else {
            [false, true]
        };
        self.run(&format!("twin pair split ({case})"), trials, |gen| {
            let host = gen.range(0, 5);
            let (g, vs) = gen.with_twins(host, 2, false, &marks);
            let (r, gamma, rest) =
                ok_or_show(twin_pair_split(&g, vs[0], vs[1]), "twin_pair_split", &[&g])?;
            let rhs = &oracle(&r) + &(&gamma * &oracle(&rest));
            expect_eq("split twins", &rhs, &oracle(&g), &[&g])
        })
    }

    pub fn twin_chain(&mut self, trials: usize) -> CheckOutcome {
        self.run("nonadjacent twin chain (k <= 4)", trials, |gen| {
            let host = gen.range(0, 4);
            let k = gen.range(2, 4);
            let marks: Vec<bool> = (0..k).map(|_| gen.coin(0.25)).collect();
            let (g, vs) = gen.with_twins(host, k, false, &marks);
            let (r, gamma) = ok_or_show(
                nonadjacent_twin_chain(&g, &vs),
                "nonadjacent_twin_chain",
                &[&g],
            )?;
            let rest = g.delete_vertices(&vs).expect("in range");
            let rhs = &oracle(&r) + &(&gamma * &oracle(&rest));
            expect_eq("twin chain", &rhs, &oracle(&g), &[&g])
        })
    }

    pub fn dual_parallel(&mut self, trials: usize) -> CheckOutcome {
        self.run("dual parallel (k in {3, 5})", trials, |gen| {
            let host = gen.range(0, 4);
            let k = if gen.coin(0.5) { 3 } else { 5 };
            let (g, vs) = gen.with_twins(host, k, false, &vec![false; k]);
            let r = ok_or_show(dual_parallel_reduce(&g, &vs), "dual_parallel_reduce", &[&g])?;
            expect_eq("dual parallel", &oracle(&r), &oracle(&g), &[&g])
        })
    }

    pub fn clique(&mut self, trials: usize) -> CheckOutcome {
        self.run("clique of twins (k <= 4)", trials, |gen| {
            let host = gen.range(0, 5);
            let k = gen.range(1, 4);
            let marks: Vec<bool> = (0..k).map(|_| gen.coin(0.25)).collect();
            let (g, vs) = gen.with_twins(host, k, true, &marks);
            let r = ok_or_show(clique_twin_reduce(&g, &vs), "clique_twin_reduce", &[&g])?;
            expect_eq("clique", &oracle(&r), &oracle(&g), &[&g])
        })
    }

    fn pair(
        gen: &mut Generator,
        max_total: usize,
        unmark_f: bool,
        unmark_h: bool,
    ) -> (MarkedWeightedGraph, MarkedWeightedGraph) {
        let nf = gen.range(0, max_total - 1);
        let nh = gen.range(0, max_total - 1);
        let f = gen.with_cut(nf, Weights::Symbolic, "f", unmark_f);
        let h = gen.with_cut(nh, Weights::Symbolic, "h", unmark_h);
        (f, h)
    }

    pub fn pjoin_sum(&mut self, trials: usize, max_total: usize) -> CheckOutcome {
        self.run("composition: [F*H] = [H'] + [H'_m]", trials, |gen| {
            let (f, h) = Self::pair(gen, max_total, false, true);
            let direct = oracle(&compose(&f, &h, "a").expect("valid"));
            let res = ok_or_show(
                bracket_via_composition(&f, &h, "a", &mut ev()),
                "bracket_via_composition",
                &[&f, &h],
            )?;
            expect_eq("pjoin", &res.value, &direct, &[&f, &h])
        })
    }

    pub fn pjoin_double(&mut self, trials: usize, max_total: usize) -> CheckOutcome {
        self.run("composition: five-term product", trials, |gen| {
            let (f, h) = Self::pair(gen, max_total, true, true);
            let direct = oracle(&compose(&f, &h, "a").expect("valid"));
            let v = ok_or_show(
                bracket_double_composition(&f, &h, "a", &mut ev()),
                "bracket_double_composition",
                &[&f, &h],
            )?;
            expect_eq("five-term product", &v, &direct, &[&f, &h])
        })
    }

    pub fn gauge_shift(&mut self, trials: usize, max_total: usize) -> CheckOutcome {
        self.run("composition: weight gauge shift", trials, |gen| {
            let (f, h) = Self::pair(gen, max_total, false, true);
            let t = ok_or_show(
                pjoin_weights_cor4(&f, "a", &mut ev()),
                "triple from contributions",
                &[&f],
            )?;
            let (mut hp, mut hm) = (
                h_prime(&h, "a", &t).expect("cut"),
                h_prime_marked(&h, "a", &t).expect("cut"),
            );
            let base = &oracle(&hp) + &oracle(&hm);
            let r: LaurentPoly = format!(
                "{}*A*d - {}*B^-1 + {}",
                gen.range(0, 3),
                gen.range(0, 3),
                gen.range(0, 3)
            )
            .parse()
            .expect("valid");
            let ai = h.require("a").expect("cut");
            hp.vertex_mut(ai).expect("in range").beta = &t.beta_a - &r;
            hm.vertex_mut(ai).expect("in range").beta = r;
            expect_eq(
                "gauge shift",
                &(&oracle(&hp) + &oracle(&hm)),
                &base,
                &[&f, &h],
            )
        })
    }

    pub fn weight_equalities(&mut self, trials: usize, max_total: usize) -> CheckOutcome {
        self.run(
            "composition: triple from [F10]/[F01], [F+]/[F-] and contributions agree",
            trials,
            |gen| {
                let n = gen.range(0, max_total - 1);
                let f = gen.with_cut(n, Weights::Symbolic, "f", false);
                let (f10, f01) = build_f10_f01(&f, "a").expect("cut");
                let (plus, minus) = build_fpm(&f, "a").expect("cut");
                let fa = oracle(
                    &f.delete_vertex(f.require("a").expect("cut"))
                        .expect("in range"),
                );
                let (b10, b01, bp, bm) =
                    (oracle(&f10), oracle(&f01), oracle(&plus), oracle(&minus));
                let (a, b) = (LaurentPoly::symbol("A"), LaurentPoly::symbol("B"));
                expect_eq(
                    "[F+] = A[F10] + B[F01]",
                    &bp,
                    &(&(&a * &b10) + &(&b * &b01)),
                    &[&f],
                )?;
                expect_eq(
                    "[F-] = B[F10] + A[F01]",
                    &bm,
                    &(&(&b * &b10) + &(&a * &b01)),
                    &[&f],
                )?;
                let t1 = ok_or_show(pjoin_weights_cor1(&fa, &b10, &b01), "triple from [F10], [F01]", &[&f])?;
                let t3 = ok_or_show(pjoin_weights_cor3(&fa, &bp, &bm), "triple from [F+], [F-]", &[&f])?;
                let t4 = ok_or_show(pjoin_weights_cor4(&f, "a", &mut ev()), "triple from contributions", &[&f])?;
                if t1 != t4 || t3 != t4 {
                    return Err(show(
                        &format!("triples differ:\n  [F10], [F01]: {t1}\n  [F+], [F-]:   {t3}\n  contributions: {t4}"),
                        &[&f],
                    ));
                }
                Ok(())
            },
        )
    }

    pub fn decomposition(&mut self, trials: usize, max_total: usize) -> CheckOutcome {
        self.run("composition: contribution decomposition", trials, |gen| {
            let n = gen.range(0, max_total - 1);
            let f = gen.with_cut(n, Weights::Symbolic, "f", false);
            let c = ok_or_show(contributions(&f, "a", &mut ev()), "contributions", &[&f])?;
            let d = LaurentPoly::symbol("d");
            let c3d = ok_or_show(c.c3.exact_div(&d), "contr3 / d", &[&f])?;
            let (f10, f01) = build_f10_f01(&f, "a").expect("cut");
            let fa = f
                .delete_vertex(f.require("a").expect("cut"))
                .expect("in range");
            expect_eq("[F-a]", &oracle(&fa), &(&(&c.c1 + &c.c2) + &c.c3), &[&f])?;
            expect_eq(
                "[F10]",
                &oracle(&f10),
                &(&(&(&d * &c.c1) + &c.c2) + &c3d),
                &[&f],
            )?;
            expect_eq(
                "[F01]",
                &oracle(&f01),
                &(&(&c.c1 + &(&d * &c.c2)) + &c3d),
                &[&f],
            )
        })
    }

    /// For every subset of `V(f - a)` the three nullities are `nu+1, nu, nu` in some order.
    pub fn subset_types(&mut self, trials: usize, max_m: usize) -> CheckOutcome {
        self.run("subset nullity pattern", trials, |gen| {
            let m = gen.range(0, max_m);
            let f = gen.with_cut(m, Weights::Standard, "f", false);
            for mask in 0u32..1 << m {
                let t: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
                ok_or_show(
                    subset_type(&f, "a", &t),
                    &format!("subset mask {mask:#b}"),
                    &[&f],
                )?;
            }
            Ok(())
        })
    }

    /// The whole suite with `trials` random instances per check.
    pub fn run_all(&mut self, max_n: usize, trials: usize) -> Vec<CheckOutcome> {
        let big = max_n.clamp(2, 10);
        let mut out = vec![self.oracle_exhaustive(max_n.min(4))];
        out.push(self.oracle_random(trials, 2.min(big), big));
        out.push(self.loops(trials));
        out.push(self.marked_pivot(trials));
        out.push(self.disjoint_union(trials));
        for c in ['a', 'b', 'c', 'd'] {
            out.push(self.twin_pair(trials, c));
        }
        for c in ['a', 'b'] {
            out.push(self.twin_split(trials, c));
        }
        out.push(self.twin_chain(trials));
        out.push(self.dual_parallel(trials));
        out.push(self.clique(trials));
        let total = big.min(7);
        out.push(self.pjoin_sum(trials, total));
        out.push(self.pjoin_double(trials, total));
        out.push(self.gauge_shift(trials, total));
        out.push(self.weight_equalities(trials, total));
        out.push(self.decomposition(trials, total));
        out.push(self.subset_types(trials, big.min(8)));
        out
    }
}
