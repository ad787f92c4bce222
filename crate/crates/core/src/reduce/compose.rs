//! Weights for the cut vertex of a composition `F * H`, derived three ways,
//! and the evaluators built on them.

use alloc::vec::Vec;

use super::{ReduceError, SubsetType, WeightTriple};
use crate::bracket::{collect_in_d, d, weighted_buckets, BracketError, BracketValue, Evaluator};
use crate::graph::{check_composition, check_cut_vertex, MarkedWeightedGraph, Side};
use crate::ring::LaurentPoly;

/// `f` with the cut vertex reweighted to `(1, 0)` and to `(0, 1)`.
pub fn build_f10_f01(
    f: &MarkedWeightedGraph,
    a: &str,
) -> Result<(MarkedWeightedGraph, MarkedWeightedGraph), ReduceError> {
    let ai = check_cut_vertex(f, a, Side::F)?;
    let mut f10 = f.clone();
    let v = f10.vertex_mut(ai)?;
    v.alpha = LaurentPoly::one();
    v.beta = LaurentPoly::zero();
    let mut f01 = f.clone();
    let v = f01.vertex_mut(ai)?;
    v.alpha = LaurentPoly::zero();
    v.beta = LaurentPoly::one();
    Ok((f10, f01))
}

/// `f` with the cut vertex unlooped (`F+`) and looped (`F-`), standard weights.
pub fn build_fpm(
    f: &MarkedWeightedGraph,
    a: &str,
) -> Result<(MarkedWeightedGraph, MarkedWeightedGraph), ReduceError> {
    let ai = check_cut_vertex(f, a, Side::F)?;
    let plus = f.clone();
    let mut minus = f.clone();
    minus.vertex_mut(ai)?.looped = true;
    Ok((plus, minus))
}

fn two_minus_d_minus_d2() -> LaurentPoly {
    let dd = d();
    LaurentPoly::constant(2) - &dd - &dd * &dd
}

/// Solve the linear system relating `[F-a]`, `[F10]`, `[F01]` to the triple.
pub fn pjoin_weights_cor1(
    f_minus_a: &LaurentPoly,
    f10: &LaurentPoly,
    f01: &LaurentPoly,
) -> Result<WeightTriple, ReduceError> {
    let k = two_minus_d_minus_d2();
    let dp1 = d() + LaurentPoly::one();
    let alpha = (f10 + f01 - &dp1 * f_minus_a).exact_div(&k)?;
    let beta = (f_minus_a + f10 - &dp1 * f01).exact_div(&k)?;
    let alpha_m = (f_minus_a + f01 - &dp1 * f10).exact_div(&k)?;
    Ok(WeightTriple::new(alpha, beta, alpha_m))
}

/// The triple from `[F-a]`, `[F+]`, `[F-]`.
pub fn pjoin_weights_cor3(
    f_minus_a: &LaurentPoly,
    fplus: &LaurentPoly,
    fminus: &LaurentPoly,
) -> Result<WeightTriple, ReduceError> {
    let a = LaurentPoly::symbol("A");
    let b = LaurentPoly::symbol("B");
    let dd = d();
    let k = two_minus_d_minus_d2();
    let dp1 = &dd + &LaurentPoly::one();
    let a_plus_b = &a + &b;
    let diff_sq = &a * &a - &b * &b;
    let p = &a_plus_b + &(&b * &dd);
    let q = &a_plus_b + &(&a * &dd);

    let sum = (fplus + fminus).exact_div(&a_plus_b)?;
    let alpha = (sum - &dp1 * f_minus_a).exact_div(&k)?;
    let beta_frac = (&p * fplus - &q * fminus).exact_div(&diff_sq)?;
    let beta = (f_minus_a + &beta_frac).exact_div(&k)?;
    let am_frac = (&p * fminus - &q * fplus).exact_div(&diff_sq)?;
    let alpha_m = (f_minus_a + &am_frac).exact_div(&k)?;
    Ok(WeightTriple::new(alpha, beta, alpha_m))
}

/// Index map from `f - a` back to `f`.
fn lift(ai: usize, i: usize) -> usize {
    if i < ai {
        i
    } else {
        i + 1
    }
}

fn nullities_for(fa: &MarkedWeightedGraph, border_all: &[bool], in_t: &[bool]) -> [usize; 3] {
    let (m, kept) = fa.restricted_with_kept(in_t);
    let border: Vec<bool> = kept.iter().map(|&i| border_all[i]).collect();
    let n0 = m.bordered(&border, false).expect("square").nullity();
    let n1 = m.bordered(&border, true).expect("square").nullity();
    [n0, n1, m.nullity()]
}

fn classify(ns: [usize; 3]) -> Result<SubsetType, ReduceError> {
    let max = *ns.iter().max().expect("three entries");
    let top: Vec<usize> = (0..3).filter(|&i| ns[i] == max).collect();
    let ok = top.len() == 1 && max > 0 && ns.iter().filter(|&&n| n + 1 == max).count() == 2;
    if !ok {
        return Err(ReduceError::ClassificationViolation(ns));
    }
    Ok(match top[0] {
        0 => SubsetType::Type1,
        1 => SubsetType::Type2,
        _ => SubsetType::Type3,
    })
}

fn split_cut(
    f: &MarkedWeightedGraph,
    a: &str,
) -> Result<(MarkedWeightedGraph, Vec<bool>), ReduceError> {
    let ai = check_cut_vertex(f, a, Side::F)?;
    let fa = f.delete_vertex(ai)?;
    let border = (0..fa.len()).map(|i| f.adjacent(ai, lift(ai, i))).collect();
    Ok((fa, border))
}

/// `[nu(A(F)_T), nu(A(F)_{T+a}), nu(A(F-a)_T)]` for `t` indexed over `f - a`.
pub fn subset_nullities(
    f: &MarkedWeightedGraph,
    a: &str,
    t: &[bool],
) -> Result<[usize; 3], ReduceError> {
    let (fa, border) = split_cut(f, a)?;
    if t.len() != fa.len() {
        return Err(ReduceError::BadVertexList);
    }
    Ok(nullities_for(&fa, &border, t))
}

pub fn subset_type(
    f: &MarkedWeightedGraph,
    a: &str,
    t: &[bool],
) -> Result<SubsetType, ReduceError> {
    classify(subset_nullities(f, a, t)?)
}

/// Weighted subset sums of `f - a`, split by subset type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contributions {
    pub c1: LaurentPoly,
    pub c2: LaurentPoly,
    pub c3: LaurentPoly,
}

/// One pass over the subsets of `f - a`. Free loops of `f` are included.
pub fn contributions(
    f: &MarkedWeightedGraph,
    a: &str,
    ev: &mut Evaluator,
) -> Result<Contributions, ReduceError> {
    let (fa, border) = split_cut(f, a)?;
    let m = fa.len();
    let limit = ev.oracle_limit.min(crate::bracket::HARD_STATE_SUM_LIMIT);
    if m > limit {
        return Err(BracketError::OracleLimit { n: m, limit }.into());
    }
    let total = 1usize << m;
    let stride = m + 1;
    let mut keys = alloc::vec![0u32; total];
    let mut in_t = alloc::vec![false; m];
    let mut code = 0usize;
    for i in 0..total {
        if i > 0 {
            let flip = i.trailing_zeros() as usize;
            in_t[flip] ^= true;
            code ^= 1 << flip;
        }
        let ns = nullities_for(&fa, &border, &in_t);
        let ty = classify(ns)? as usize;
        keys[code] = (ty * stride + ns[2]) as u32;
    }
    ev.counters.subsets += total as u64;
    let alphas: Vec<&LaurentPoly> = fa.vertices().iter().map(|v| &v.alpha).collect();
    let betas: Vec<&LaurentPoly> = fa.vertices().iter().map(|v| &v.beta).collect();
    let mut buckets = weighted_buckets(
        &alphas,
        &betas,
        |mask| keys[mask as usize] as usize,
        3 * stride,
    );
    let shift = f.free_loops() as usize;
    let c3 = collect_in_d(buckets.split_off(2 * stride), shift);
    let c2 = collect_in_d(buckets.split_off(stride), shift);
    let c1 = collect_in_d(buckets, shift);
    Ok(Contributions { c1, c2, c3 })
}

/// The triple read off the contributions: `(c3 / d, c2, c1)`.
pub fn pjoin_weights_cor4(
    f: &MarkedWeightedGraph,
    a: &str,
    ev: &mut Evaluator,
) -> Result<WeightTriple, ReduceError> {
    let c = contributions(f, a, ev)?;
    Ok(WeightTriple::new(c.c3.exact_div(&d())?, c.c2, c.c1))
}

/// `h` with the cut vertex reweighted to `(alpha(a), beta(a))`.
pub fn h_prime(
    h: &MarkedWeightedGraph,
    a: &str,
    w: &WeightTriple,
) -> Result<MarkedWeightedGraph, ReduceError> {
    let ai = h.require(a)?;
    let mut g = h.clone();
    let v = g.vertex_mut(ai)?;
    v.alpha = w.alpha_a.clone();
    v.beta = w.beta_a.clone();
    Ok(g)
}

/// `h` with the cut vertex marked and weighted `(alpha(a_m), 0)`.
pub fn h_prime_marked(
    h: &MarkedWeightedGraph,
    a: &str,
    w: &WeightTriple,
) -> Result<MarkedWeightedGraph, ReduceError> {
    let ai = h.require(a)?;
    let mut g = h.clone();
    let v = g.vertex_mut(ai)?;
    v.marked = true;
    v.alpha = w.alpha_am.clone();
    v.beta = LaurentPoly::zero();
    Ok(g)
}

fn has_marked_neighbor(g: &MarkedWeightedGraph, a: usize) -> bool {
    g.neighbors(a).into_iter().any(|u| g.vertices()[u].marked)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    pub triple: WeightTriple,
    pub h_prime_value: BracketValue,
    pub h_prime_m_value: BracketValue,
    pub value: BracketValue,
}

/// `[F * H] = [H'] + [H'_m]` with the triple taken from `f`.
pub fn bracket_via_composition(
    f: &MarkedWeightedGraph,
    h: &MarkedWeightedGraph,
    a: &str,
    ev: &mut Evaluator,
) -> Result<CompositionResult, ReduceError> {
    let (_, ah) = check_composition(f, h, a)?;
    if has_marked_neighbor(h, ah) {
        return Err(ReduceError::MarkedNeighborInH);
    }
    let triple = pjoin_weights_cor4(f, a, ev)?;
    let h_prime_value = ev.eval(&h_prime(h, a, &triple)?)?;
    let h_prime_m_value = ev.eval(&h_prime_marked(h, a, &triple)?)?;
    let value = &h_prime_value + &h_prime_m_value;
    Ok(CompositionResult {
        triple,
        h_prime_value,
        h_prime_m_value,
        value,
    })
}

/// The bilinear five-term expression in the triples of both sides.
pub fn double_composition_value(tf: &WeightTriple, th: &WeightTriple) -> LaurentPoly {
    let dd = d();
    let (af, bf, mf) = (&tf.alpha_a, &tf.beta_a, &tf.alpha_am);
    let (ah, bh, mh) = (&th.alpha_a, &th.beta_a, &th.alpha_am);
    af * &(ah + bh)
        + bf * &(ah + &(bh * &dd))
        + &(&(af * &dd) + bf) * mh
        + mf * &(&(ah * &dd) + bh)
        + mf * mh
}

/// `[F * H]` from the triples of `f` and `h` alone.
pub fn bracket_double_composition(
    f: &MarkedWeightedGraph,
    h: &MarkedWeightedGraph,
    a: &str,
    ev: &mut Evaluator,
) -> Result<LaurentPoly, ReduceError> {
    let (af, ah) = check_composition(f, h, a)?;
    if has_marked_neighbor(f, af) {
        return Err(ReduceError::MarkedNeighbor(Side::F));
    }
    if has_marked_neighbor(h, ah) {
        return Err(ReduceError::MarkedNeighbor(Side::H));
    }
    let tf = pjoin_weights_cor4(f, a, ev)?;
    let th = pjoin_weights_cor4(h, a, ev)?;
    Ok(double_composition_value(&tf, &th))
}
