//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use mgbracket::graph::VertexRecord;
use mgbracket::knot::{f_polynomial, interlacement_graph, jones, parse_euler_code};
use mgbracket::reduce::{clique_twin_reduce, double_composition_value, pjoin_weights_cor1};
use mgbracket::{LaurentPoly, MarkedWeightedGraph, WeightTriple};
use mgbracket_cli::graph_format::{parse_graph, write_graph};
use mgbracket_cli::random::{Generator, Weights};
use mgbracket_cli::verify::{CheckOutcome, Suite};

type Outcome = Result<String, String>;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn check(&mut self, id: &str, what: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let r = f();
        let t = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {id:<3} {what} [{detail}; {t:.2} s]"),
            Err(e) => {
                println!("FAIL {id:<3} {what} [{t:.2} s]\n{e}");
                self.failures.push(id.to_string());
            }
        }
    }
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("valid polynomial")
}

fn eq(what: &str, got: &LaurentPoly, want: &LaurentPoly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn triple(a: &str, b: &str, m: &str) -> WeightTriple {
    WeightTriple::new(p(a), p(b), p(m))
}

fn same_triple(what: &str, got: &WeightTriple, want: &WeightTriple) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got ({got}), expected ({want})"))
    }
}

fn all_pass(outcomes: &[CheckOutcome]) -> Outcome {
    let mut lines = Vec::new();
    for o in outcomes {
        if let Some(f) = &o.failure {
            return Err(format!(
                "{} failed after {} instances:\n{f}",
                o.name, o.instances
            ));
        }
        lines.push(format!("{} x{}", o.name, o.instances));
    }
    Ok(lines.join(", "))
}

fn jones_of(bracket: &str, w: i64) -> Result<String, String> {
    let f = f_polynomial(&p(bracket), w).map_err(|e| e.to_string())?;
    Ok(jones(&f).map_err(|e| e.to_string())?.to_string())
}

fn criterion_1(gate: &mut Gate) {
    let start = Instant::now();
    gate.check(
        "1a",
        "composition weights from the two-vertex examples",
        || {
            let t = pjoin_weights_cor1(
                &p("alpha*d + beta"),
                &p("alpha + beta"),
                &p("alpha + beta*d"),
            )
            .map_err(|e| e.to_string())?;
            same_triple("unmarked neighbor", &t, &triple("alpha", "beta", "0"))?;
            let t = pjoin_weights_cor1(
                &p("alpha + beta"),
                &p("alpha*d + beta"),
                &p("alpha + beta*d"),
            )
            .map_err(|e| e.to_string())?;
            same_triple("marked neighbor", &t, &triple("0", "beta", "alpha"))?;
            Ok("2 triples".into())
        },
    );

    let tf = triple(
        "A^4*d + 2*A^3*B",
        "0",
        "2*A^3*B*d + A^2*B^2*(5 + d^2) + 4*A*B^3*d + B^4*d^2",
    );
    let th = triple("2*A*B^2 + B^3*d", "0", "A^3*d + 3*A^2*B + A*B^2*d");
    let product = p("(A^4*d + 2*A^3*B)*(2*A*B^2 + B^3*d) \
         + ((A^4*d + 2*A^3*B)*d)*(A^3*d + 3*A^2*B + A*B^2*d) \
         + (2*A^3*B*d + A^2*B^2*(5 + d^2) + 4*A*B^3*d + B^4*d^2)*((2*A*B^2 + B^3*d)*d) \
         + (2*A^3*B*d + A^2*B^2*(5 + d^2) + 4*A*B^3*d + B^4*d^2)*(A^3*d + 3*A^2*B + A*B^2*d)");

    gate.check("1b", "tangle triples and the five-term product", || {
        let fa = p("A^4*d^2 + 4*A^3*B*d + 5*A^2*B^2 + A^2*B^2*d^2 + 4*A*B^3*d + B^4*d^2");
        let f01 = p("A^4*d + 2*A^3*B + 2*A^3*B*d + 5*A^2*B^2 + A^2*B^2*d^2 + 4*A*B^3*d + B^4*d^2");
        let f10 =
            p("A^4*d + 2*A^3*B + 2*A^3*B*d^2 + 5*A^2*B^2*d + A^2*B^2*d^3 + 4*A*B^3*d^2 + B^4*d^3");
        let ha = p("A^3*d + 3*A^2*B + 3*A*B^2*d + B^3*d^2");
        let h01 = p("A^3*d + 3*A^2*B + A*B^2*d + 2*A*B^2 + B^3*d");
        let h10 = p("A^3*d^2 + 3*A^2*B*d + A*B^2*d^2 + 2*A*B^2 + B^3*d");
        let got_f = pjoin_weights_cor1(&fa, &f10, &f01).map_err(|e| e.to_string())?;
        let got_h = pjoin_weights_cor1(&ha, &h10, &h01).map_err(|e| e.to_string())?;
        same_triple("F triple", &got_f, &tf)?;
        same_triple("H triple", &got_h, &th)?;
        eq("[F*H]", &double_composition_value(&got_f, &got_h), &product)?;
        Ok("F, H triples and product".into())
    });

    gate.check("1c", "f-polynomial and Jones values", || {
        let cases = [
            (
                "A^2*(A^2*d + 2*A*B + B^2*d) + (2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2)",
                0,
                "-t^(1/2) - t^(-1/2)",
            ),
            (
                "A^2*(A^2 + 2*A*B*d + B^2) + (2*A*B + B^2*d)*(A^2*d + A*B + A*B*d^2 + B^2*d)",
                2,
                "-t^(5/2) - t^(1/2)",
            ),
            (
                "(2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2) + A^2*(A^2*d + 2*A*B + B^2)",
                0,
                "1",
            ),
        ];
        for (br, w, want) in cases {
            let got = jones_of(br, w)?;
            if got != want {
                return Err(format!("writhe {w}: got {got}, expected {want}"));
            }
        }
        let f = f_polynomial(&product, 3).map_err(|e| e.to_string())?;
        let got = jones(&f).map_err(|e| e.to_string())?.to_string();
        let want = "-t^6 + 2*t^5 - 3*t^4 + 4*t^3 - 3*t^2 + 3*t - 2 + t^-1";
        if got != want {
            return Err(format!("tangle product: got {got}, expected {want}"));
        }
        Ok("4 polynomials".into())
    });

    gate.check(
        "1d",
        "clique of three twins with weights (B,A),(B,A),(A,B)",
        || {
            let weights = [("B", "A"), ("B", "A"), ("A", "B")];
            let vs = weights
                .iter()
                .enumerate()
                .map(|(i, (a, b))| VertexRecord::standard(&format!("v{i}")).weights(p(a), p(b)))
                .collect();
            let g = MarkedWeightedGraph::from_parts(vs, &[(0, 1), (0, 2), (1, 2)], 0)
                .map_err(|e| e.to_string())?;
            let r = clique_twin_reduce(&g, &[0, 1, 2]).map_err(|e| e.to_string())?;
            let v = &r.vertices()[0];
            eq("alpha'", &v.alpha, &p("A*B^2"))?;
            let beta = (p("(A + B*d)*(B + A*d)^2") - p("A*B^2"))
                .exact_div(&p("d"))
                .map_err(|e| e.to_string())?;
            eq("beta'", &v.beta, &beta)?;
            Ok(format!("alpha' = {}, beta' = {}", v.alpha, v.beta))
        },
    );
    let total = start.elapsed();
    gate.check("1", "golden vectors within 1 s", || {
        if total < Duration::from_secs(1) {
            Ok(format!("{:.3} s", total.as_secs_f64()))
        } else {
            Err(format!("took {:.3} s", total.as_secs_f64()))
        }
    });
}

fn criterion_2(gate: &mut Gate) {
    gate.check(
        "2a",
        "recursion = state sum, every graph on <= 4 vertices",
        || all_pass(&[Suite::new(0).oracle_exhaustive(4)]),
    );
    gate.check(
        "2b",
        "recursion = state sum, 500 random graphs on 5-10 vertices",
        || all_pass(&[Suite::new(2).oracle_random(500, 5, 10)]),
    );
}

fn criterion_3(gate: &mut Gate) {
    let mut s = Suite::new(3);
    gate.check("3a", "loops", || all_pass(&[s.loops(200)]));
    gate.check("3b", "twin merges (a)-(d)", || {
        all_pass(&['a', 'b', 'c', 'd'].map(|c| s.twin_pair(200, c)))
    });
    gate.check("3c", "twin splits (a)-(b)", || {
        all_pass(&['a', 'b'].map(|c| s.twin_split(200, c)))
    });
    gate.check("3d", "nonadjacent twin chain, k <= 4", || {
        all_pass(&[s.twin_chain(200)])
    });
    gate.check("3e", "dual parallel twins, k in {3, 5}", || {
        all_pass(&[s.dual_parallel(200)])
    });
    gate.check("3f", "clique of twins, k <= 4", || {
        all_pass(&[s.clique(200)])
    });
    gate.check("3g", "marked pivot invariance", || {
        all_pass(&[s.marked_pivot(200)])
    });
    gate.check("3h", "disjoint union multiplicativity", || {
        all_pass(&[s.disjoint_union(200)])
    });
}

fn criterion_4(gate: &mut Gate) {
    let mut s = Suite::new(4);
    gate.check("4a", "[F*H] = [H'] + [H'_m]", || {
        all_pass(&[s.pjoin_sum(100, 7)])
    });
    gate.check("4b", "five-term product", || {
        all_pass(&[s.pjoin_double(100, 7)])
    });
    gate.check("4c", "weight gauge shift", || {
        all_pass(&[s.gauge_shift(100, 7)])
    });
    gate.check("4d", "three weight derivations agree; [F+], [F-]", || {
        all_pass(&[s.weight_equalities(100, 7)])
    });
    gate.check("4e", "contribution decomposition", || {
        all_pass(&[s.decomposition(100, 7)])
    });
}

fn criterion_5(gate: &mut Gate) {
    gate.check("5", "nullities nu+1, nu, nu for every subset", || {
        all_pass(&[Suite::new(5).subset_types(100, 8)])
    });
}

fn criterion_6(gate: &mut Gate) {
    gate.check(
        "6",
        "composed path enumerates < 10 * 2^12 subsets for m = 12",
        || {
            let dir =
                std::env::temp_dir().join(format!("mgbracket-acceptance-{}", std::process::id()));
            std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
            let mut gen = Generator::new(6);
            let f = gen.with_cut(12, Weights::Standard, "f", false);
            let h = gen.with_cut(12, Weights::Standard, "h", true);
            let (fp, hp) = (dir.join("f.g"), dir.join("h.g"));
            std::fs::write(&fp, write_graph(&f)).map_err(|e| e.to_string())?;
            std::fs::write(&hp, write_graph(&h)).map_err(|e| e.to_string())?;
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let start = Instant::now();
            // A limit below 24 keeps the command from running the direct state sum.
            let args = [
                "mgbracket",
                "compose",
                &fp.display().to_string(),
                &hp.display().to_string(),
                "--engine",
                "statesum",
                "--limit",
                "20",
                "--out",
                "json",
            ];
            let code = mgbracket_cli::run(args, &mut out, &mut err);
            let wall = start.elapsed();
            let _ = std::fs::remove_dir_all(&dir);
            if code != 0 {
                return Err(String::from_utf8_lossy(&err).into_owned());
            }
            let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
            let composed = v["counters"]["subsets"].as_u64().ok_or("missing counter")?;
            let direct_exp = f.len() + h.len() - 2;
            if composed >= 10 << 12 {
                return Err(format!("composed count {composed} >= {}", 10 << 12));
            }
            if wall >= Duration::from_secs(60) {
                return Err(format!("took {:.1} s", wall.as_secs_f64()));
            }
            Ok(format!(
                "composed {composed} vs direct 2^{direct_exp} = {}",
                1u64 << direct_exp
            ))
        },
    );
}

fn criterion_7(gate: &mut Gate) {
    gate.check("7a", "graph format round trip, 100 seeded graphs", || {
        let mut gen = Generator::new(71);
        for i in 0..100 {
            let n = gen.range(0, 9);
            let mode = if i % 2 == 0 {
                Weights::Standard
            } else {
                Weights::Symbolic
            };
            let mut g = gen.graph(n, mode);
            g.set_free_loops(gen.range(0, 2) as u32);
            let text = write_graph(&g);
            let back = parse_graph(&text).map_err(|e| format!("{e}\n{text}"))?;
            if back != g {
                return Err(format!("round trip changed the graph:\n{text}"));
            }
        }
        Ok("100 graphs".into())
    });
    gate.check("7b", "Euler code round trip, 100 seeded codes", || {
        let mut gen = Generator::new(72);
        for _ in 0..100 {
            let n = gen.range(0, 8);
            let d = gen.euler_code(n);
            let text = d.to_string();
            let back = parse_euler_code(&text).map_err(|e| format!("{e}\n{text}"))?;
            if back != d {
                return Err(format!("round trip changed the code:\n{text}"));
            }
        }
        Ok("100 codes".into())
    });
    gate.check("7c", "interlacement graphs of the three examples", || {
        let code = |s: &str| parse_euler_code(s).map_err(|e| e.to_string());
        let g = interlacement_graph(&code("circuit a b a b\nsign a +\nsign b +")?);
        if !(g.len() == 2
            && g.adjacent(0, 1)
            && !g.has_loops()
            && g.vertices().iter().all(|v| !v.marked))
        {
            return Err("abab is not an unlooped unmarked K2".into());
        }
        let g = interlacement_graph(&code("circuit a a b b")?);
        if g.len() != 2 || !g.edges().is_empty() {
            return Err("aabb is not two isolated vertices".into());
        }
        let g = interlacement_graph(&code("circuit a b c a b c\nsign a -\nsign b -\nsign c -")?);
        if g.edges().len() != 3 || !g.vertices().iter().all(|v| v.looped) {
            return Err("abcabc is not a looped K3".into());
        }
        Ok("K2, 2K1, looped K3".into())
    });
}

fn main() {
    let mut gate = Gate {
        failures: Vec::new(),
    };
    criterion_1(&mut gate);
    criterion_2(&mut gate);
    criterion_3(&mut gate);
    criterion_4(&mut gate);
    criterion_5(&mut gate);
    criterion_6(&mut gate);
    criterion_7(&mut gate);
    if gate.failures.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed {}", gate.failures.join(", "));
        std::process::exit(1);
    }
}
