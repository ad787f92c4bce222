//! Bracket evaluation: the subset state sum and the elimination recursion.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::MarkedWeightedGraph;
use crate::reduce;
use crate::ring::LaurentPoly;

/// Largest vertex count the state sum accepts unless configured otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;

/// The state sum indexes subsets with a `u64` mask.
pub(crate) const HARD_STATE_SUM_LIMIT: usize = 40;

pub type BracketValue = LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error("state sum over {n} vertices exceeds the limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    StateSum,
    Recursive,
    #[default]
    Auto,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::StateSum => "statesum",
            Engine::Recursive => "recursive",
            Engine::Auto => "auto",
        }
    }
}

impl core::str::FromStr for Engine {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "statesum" => Ok(Engine::StateSum),
            "recursive" => Ok(Engine::Recursive),
            "auto" => Ok(Engine::Auto),
            _ => Err(()),
        }
    }
}

/// Work counters; deterministic for a fixed input and engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    /// Subsets enumerated by state sums (including subset-type enumeration).
    pub subsets: u64,
    /// Calls of the recursive evaluator.
    pub recursion_nodes: u64,
    /// Twin reductions applied by the `auto` preprocessing.
    pub reductions: u64,
}

/// Engine choice plus limits and counters, threaded through every evaluation.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub engine: Engine,
    pub oracle_limit: usize,
    pub counters: Counters,
}

impl Evaluator {
    pub fn new(engine: Engine) -> Self {
        Evaluator {
            engine,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            counters: Counters::default(),
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.oracle_limit = limit;
        self
    }

    pub fn eval(&mut self, g: &MarkedWeightedGraph) -> Result<BracketValue, BracketError> {
        match self.engine {
            Engine::StateSum => {
                let limit = self.oracle_limit.min(HARD_STATE_SUM_LIMIT);
                if g.len() > limit {
                    return Err(BracketError::OracleLimit { n: g.len(), limit });
                }
                Ok(state_sum(g, &mut self.counters))
            }
            Engine::Recursive => Ok(recursive(g, &mut self.counters)),
            Engine::Auto => {
                let (reduced, applied) = reduce::consolidate_twins(&g.unloop_swap());
                self.counters.reductions += applied;
                Ok(recursive(&reduced, &mut self.counters))
            }
        }
    }
}

/// Evaluate with the given engine and the default oracle limit.
pub fn bracket(g: &MarkedWeightedGraph, engine: Engine) -> Result<BracketValue, BracketError> {
    Evaluator::new(engine).eval(g)
}

pub(crate) fn d() -> LaurentPoly {
    LaurentPoly::symbol("d")
}

pub(crate) fn d_pow(k: usize) -> LaurentPoly {
    d().pow(k as u32)
}

/// Sum over all `2^n` subsets. Panics above 40 vertices; callers enforce the
/// configurable limit through [`Evaluator`].
pub fn bracket_state_sum(g: &MarkedWeightedGraph) -> BracketValue {
    state_sum(g, &mut Counters::default())
}

fn state_sum(g: &MarkedWeightedGraph, counters: &mut Counters) -> BracketValue {
    let n = g.len();
    assert!(
        n <= HARD_STATE_SUM_LIMIT,
        "state sum limited to {HARD_STATE_SUM_LIMIT} vertices"
    );
    let table = nullity_table(g);
    counters.subsets += 1u64 << n;
    let alphas: Vec<&LaurentPoly> = g.vertices().iter().map(|v| &v.alpha).collect();
    let betas: Vec<&LaurentPoly> = g.vertices().iter().map(|v| &v.beta).collect();
    let buckets = weighted_buckets(&alphas, &betas, |mask| table[mask as usize] as usize, n + 1);
    collect_in_d(buckets, g.free_loops() as usize)
}

/// `sum_k d^(k + shift) * buckets[k]`.
pub(crate) fn collect_in_d(buckets: Vec<LaurentPoly>, shift: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let dd = d();
    let mut power = dd.pow(shift as u32);
    for b in buckets {
        if !b.is_zero() {
            out += &b * &power;
        }
        power = &power * &dd;
    }
    out
}

/// Nullity of the restricted matrix for every subset mask, enumerated in
/// reflected Gray-code order so the membership vector changes one bit at a time.
pub fn nullity_table(g: &MarkedWeightedGraph) -> Vec<u8> {
    let n = g.len();
    let total = 1usize << n;
    let mut table = vec![0u8; total];
    let mut in_t = vec![false; n];
    let mut code = 0usize;
    for i in 0..total {
        if i > 0 {
            let flip = i.trailing_zeros() as usize;
            in_t[flip] ^= true;
            code ^= 1 << flip;
        }
        table[code] = g.restricted_matrix(&in_t).nullity() as u8;
    }
    table
}

/// Accumulate `prod_{v∉T} alpha(v) * prod_{v∈T} beta(v)` into `buckets[key(T)]`,
/// building the products along a depth-first walk so each subset costs one
/// multiplication. Branches whose partial product vanishes are skipped.
pub(crate) fn weighted_buckets(
    alphas: &[&LaurentPoly],
    betas: &[&LaurentPoly],
    key: impl Fn(u64) -> usize,
    n_buckets: usize,
) -> Vec<LaurentPoly> {
    let mut buckets = vec![LaurentPoly::zero(); n_buckets];
    fn walk(
        i: usize,
        mask: u64,
        prod: &LaurentPoly,
        alphas: &[&LaurentPoly],
        betas: &[&LaurentPoly],
        key: &dyn Fn(u64) -> usize,
        buckets: &mut [LaurentPoly],
    ) {
        if i == alphas.len() {
            buckets[key(mask)] += prod;
            return;
        }
        if !alphas[i].is_zero() {
            let next = prod * alphas[i];
            walk(i + 1, mask, &next, alphas, betas, key, buckets);
        }
        if !betas[i].is_zero() {
            let next = prod * betas[i];
            walk(i + 1, mask | 1 << i, &next, alphas, betas, key, buckets);
        }
    }
    walk(0, 0, &LaurentPoly::one(), alphas, betas, &key, &mut buckets);
    buckets
}

/// Elimination recursion: strip free loops, unloop, split components, clear
/// marked-marked adjacencies by marked pivots, then expand on a marked vertex
/// or on an unmarked edge.
pub fn bracket_recursive(g: &MarkedWeightedGraph) -> BracketValue {
    recursive(g, &mut Counters::default())
}

fn recursive(g: &MarkedWeightedGraph, counters: &mut Counters) -> BracketValue {
    counters.recursion_nodes += 1;
    let mut g = g.unloop_swap();
    let phi = g.free_loops() as usize;
    g.set_free_loops(0);
    let components = g.components();
    let mut value = d_pow(phi);
    if components.len() > 1 {
        for comp in components {
            let part = g.induced(&comp).expect("component indices are valid");
            let v = connected(part, counters);
            if v.is_zero() {
                return v;
            }
            value = &value * &v;
        }
        value
    } else {
        &value * &connected(g, counters)
    }
}

/// Bracket of a connected, loopless graph without free loops.
fn connected(mut g: MarkedWeightedGraph, counters: &mut Counters) -> BracketValue {
    match g.len() {
        0 => return LaurentPoly::one(),
        1 => {
            let v = g.vertex(0).expect("one vertex");
            return if v.marked {
                &v.alpha + &v.beta
            } else {
                &(&v.alpha * &d()) + &v.beta
            };
        }
        _ => {}
    }

    while let Some((v, w)) = marked_adjacent_pair(&g) {
        g = g.marked_pivot(v, w).expect("adjacent pair");
    }

    if let Some(v) = (0..g.len()).find(|&i| g.vertices()[i].marked) {
        let rec = g.vertices()[v].clone();
        let mut out = LaurentPoly::zero();
        if !rec.alpha.is_zero() {
            out += &rec.alpha * &recursive(&g.delete_vertex(v).expect("valid"), counters);
        }
        if !rec.beta.is_zero() {
            let lc = g
                .local_complement(v)
                .expect("valid")
                .delete_vertex(v)
                .expect("valid");
            out += &rec.beta * &recursive(&lc, counters);
        }
        return out;
    }

    // Connected with at least two vertices, so vertex 0 has a neighbor.
    let v = 0;
    let w = g.neighbors(v)[0];
    let (av, bv) = (g.vertices()[v].alpha.clone(), g.vertices()[v].beta.clone());
    let (aw, bw) = (g.vertices()[w].alpha.clone(), g.vertices()[w].beta.clone());
    let mut out = LaurentPoly::zero();
    if !av.is_zero() {
        let piv = g.pivot(v, w).expect("valid");
        if !aw.is_zero() {
            let sub = piv.delete_vertices(&[v, w]).expect("valid");
            out += &(&av * &aw) * &recursive(&sub, counters);
        }
        if !bw.is_zero() {
            let sub = piv
                .local_complement(v)
                .expect("valid")
                .delete_vertices(&[v, w])
                .expect("valid");
            out += &(&av * &bw) * &recursive(&sub, counters);
        }
    }
    if !bv.is_zero() {
        let sub = g
            .local_complement(v)
            .expect("valid")
            .delete_vertex(v)
            .expect("valid");
        out += &bv * &recursive(&sub, counters);
    }
    out
}

fn marked_adjacent_pair(g: &MarkedWeightedGraph) -> Option<(usize, usize)> {
    let marked: Vec<usize> = (0..g.len()).filter(|&i| g.vertices()[i].marked).collect();
    for (k, &v) in marked.iter().enumerate() {
        if let Some(&w) = marked[k + 1..].iter().find(|&&w| g.adjacent(v, w)) {
            return Some((v, w));
        }
    }
    None
}
