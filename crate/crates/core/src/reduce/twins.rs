use alloc::vec::Vec;

use super::{distinct_in_range, product, same_outside_neighbors, weights_of, ReduceError};
use crate::bracket::d;
use crate::graph::MarkedWeightedGraph;
use crate::ring::LaurentPoly;

type Weights = (LaurentPoly, LaurentPoly);

/// `g - vs[1..]` with `vs[0]` carrying the given weights and mark.
fn collapse_onto_first(
    g: &MarkedWeightedGraph,
    vs: &[usize],
    (alpha, beta): Weights,
    marked: bool,
) -> Result<MarkedWeightedGraph, ReduceError> {
    let mut out = g.clone();
    {
        let v = out.vertex_mut(vs[0])?;
        v.alpha = alpha;
        v.beta = beta;
        v.marked = marked;
    }
    Ok(out.delete_vertices(&vs[1..])?)
}

fn require_unlooped(g: &MarkedWeightedGraph, vs: &[usize]) -> Result<(), ReduceError> {
    match vs.iter().find(|&&v| g.vertices()[v].looped) {
        Some(&v) => Err(ReduceError::Looped(v)),
        None => Ok(()),
    }
}

/// Replace a clique of unlooped twins by its first vertex, marked iff the
/// number of unmarked members is even, with
/// `alpha' = prod alpha_i` and `beta' = (prod(alpha_i + d beta_i) - alpha') / d`.
pub fn clique_twin_reduce(
    g: &MarkedWeightedGraph,
    vs: &[usize],
) -> Result<MarkedWeightedGraph, ReduceError> {
    distinct_in_range(g, vs)?;
    let is_clique = vs
        .iter()
        .enumerate()
        .all(|(k, &v)| vs[k + 1..].iter().all(|&w| g.adjacent(v, w)));
    if !is_clique || !same_outside_neighbors(g, vs) || vs.iter().any(|&v| g.vertices()[v].looped) {
        return Err(ReduceError::NotCliqueTwins);
    }
    let unmarked = vs.iter().filter(|&&v| !g.vertices()[v].marked).count();
    let ws = weights_of(g, vs);
    let dd = d();
    let alpha = product(ws.iter().map(|(a, _)| a));
    let shifted: Vec<LaurentPoly> = ws.iter().map(|(a, b)| a + &(b * &dd)).collect();
    let beta = (&product(&shifted) - &alpha).exact_div(&dd)?;
    collapse_onto_first(g, vs, (alpha, beta), unmarked % 2 == 0)
}

/// Merge twin `w` into `v` for the four covered mark/adjacency patterns:
/// both marked and nonadjacent, or adjacent with any marks.
pub fn twin_pair_reduce(
    g: &MarkedWeightedGraph,
    v: usize,
    w: usize,
) -> Result<MarkedWeightedGraph, ReduceError> {
    distinct_in_range(g, &[v, w])?;
    require_unlooped(g, &[v, w])?;
    if !g.are_twins(v, w)? {
        return Err(ReduceError::NotTwins);
    }
    let (rv, rw) = (&g.vertices()[v], &g.vertices()[w]);
    let (av, bv, aw, bw) = (&rv.alpha, &rv.beta, &rw.alpha, &rw.beta);
    let adjacent = g.adjacent(v, w);
    let (weights, marked) = match (rv.marked, rw.marked, adjacent) {
        (true, true, false) => ((&(av * aw) + &(bv * bw), &(av * bw) + &(bv * aw)), true),
        (_, _, true) => {
            let beta = &(&(av * bw) + &(bv * aw)) + &(&(bv * bw) * &d());
            // Equal marks merge into a marked vertex, mixed marks into an unmarked one.
            ((av * aw, beta), rv.marked == rw.marked)
        }
        _ => return Err(ReduceError::UncoveredTwinCase),
    };
    collapse_onto_first(g, &[v, w], weights, marked)
}

/// Split off nonadjacent twin `w`: returns `((g - w)', gamma, g - v - w)`
/// with `[g] = [(g - w)'] + gamma [g - v - w]`. Covers `v`, `w` both unmarked,
/// or `v` unmarked and `w` marked.
pub fn twin_pair_split(
    g: &MarkedWeightedGraph,
    v: usize,
    w: usize,
) -> Result<(MarkedWeightedGraph, LaurentPoly, MarkedWeightedGraph), ReduceError> {
    distinct_in_range(g, &[v, w])?;
    require_unlooped(g, &[v, w])?;
    if !g.are_twins(v, w)? {
        return Err(ReduceError::NotTwins);
    }
    if g.adjacent(v, w) {
        return Err(ReduceError::UncoveredTwinCase);
    }
    let (rv, rw) = (&g.vertices()[v], &g.vertices()[w]);
    let weights = match (rv.marked, rw.marked) {
        (false, false) => split_unmarked(
            &(rv.alpha.clone(), rv.beta.clone()),
            &(rw.alpha.clone(), rw.beta.clone()),
        ),
        (false, true) => split_one_marked(
            &(rv.alpha.clone(), rv.beta.clone()),
            &(rw.alpha.clone(), rw.beta.clone()),
        ),
        _ => return Err(ReduceError::UncoveredTwinCase),
    };
    let gamma = &rv.beta * &rw.beta;
    let reduced = collapse_onto_first(g, &[v, w], weights, false)?;
    let rest = g.delete_vertices(&[v, w])?;
    Ok((reduced, gamma, rest))
}

fn split_unmarked((av, bv): &Weights, (aw, bw): &Weights) -> Weights {
    let alpha = &(&(&(av * aw) * &d()) + &(av * bw)) + &(bv * aw);
    (alpha, LaurentPoly::zero())
}

fn split_one_marked((av, bv): &Weights, (aw, bw): &Weights) -> Weights {
    (&(av * aw) + &(av * bw), bv * aw)
}

fn combine(first: Weights, scale: &LaurentPoly, second: &Weights) -> Weights {
    (
        &first.0 + &(scale * &second.0),
        &first.1 + &(scale * &second.1),
    )
}

/// Consolidate unmarked nonadjacent twins with weights `ws`; returns the
/// weights for the surviving first twin and the coefficient of the bracket
/// with every twin removed.
fn chain_unmarked(ws: &[Weights]) -> (Weights, LaurentPoly) {
    let j = ws.len();
    if j == 1 {
        return (ws[0].clone(), LaurentPoly::zero());
    }
    let coeff = &ws[j - 2].1 * &ws[j - 1].1;
    let mut merged = ws[..j - 1].to_vec();
    merged[j - 2] = split_unmarked(&ws[j - 2], &ws[j - 1]);
    let (w1, g1) = chain_unmarked(&merged);
    if coeff.is_zero() {
        return (w1, g1);
    }
    if j == 2 {
        return (w1, &g1 + &coeff);
    }
    let (w2, g2) = chain_unmarked(&ws[..j - 2]);
    (combine(w1, &coeff, &w2), &g1 + &(&coeff * &g2))
}

/// As [`chain_unmarked`] with one extra marked twin placed last.
fn chain_one_marked(unmarked: &[Weights], marked: &Weights) -> (Weights, bool, LaurentPoly) {
    let j = unmarked.len();
    if j == 0 {
        return (marked.clone(), true, LaurentPoly::zero());
    }
    let coeff = &unmarked[j - 1].1 * &marked.1;
    let mut merged = unmarked.to_vec();
    merged[j - 1] = split_one_marked(&unmarked[j - 1], marked);
    let (w1, g1) = chain_unmarked(&merged);
    if coeff.is_zero() {
        return (w1, false, g1);
    }
    if j == 1 {
        return (w1, false, &g1 + &coeff);
    }
    let (w2, g2) = chain_unmarked(&unmarked[..j - 1]);
    (combine(w1, &coeff, &w2), false, &g1 + &(&coeff * &g2))
}

/// Consolidate nonadjacent unlooped twins onto `vs[0]`: returns
/// `((g - vs[1..])', gamma)` with `[g] = [(g - vs[1..])'] + gamma [g - vs]`.
/// Marked twins are first merged pairwise by the marked nonadjacent rule.
pub fn nonadjacent_twin_chain(
    g: &MarkedWeightedGraph,
    vs: &[usize],
) -> Result<(MarkedWeightedGraph, LaurentPoly), ReduceError> {
    distinct_in_range(g, vs)?;
    require_unlooped(g, vs)?;
    let nonadjacent = vs
        .iter()
        .enumerate()
        .all(|(k, &v)| vs[k + 1..].iter().all(|&w| !g.adjacent(v, w)));
    if !nonadjacent || !same_outside_neighbors(g, vs) {
        return Err(ReduceError::NotTwins);
    }

    let ws = weights_of(g, vs);
    let mut unmarked = Vec::new();
    let mut marked: Option<Weights> = None;
    for (k, &v) in vs.iter().enumerate() {
        if !g.vertices()[v].marked {
            unmarked.push(ws[k].clone());
            continue;
        }
        marked = Some(match marked {
            None => ws[k].clone(),
            Some((a1, b1)) => {
                let (a2, b2) = &ws[k];
                (&(&a1 * a2) + &(&b1 * b2), &(&a1 * b2) + &(&b1 * a2))
            }
        });
    }

    let (weights, is_marked, gamma) = match &marked {
        None => {
            let (w, gamma) = chain_unmarked(&unmarked);
            (w, false, gamma)
        }
        Some(m) => chain_one_marked(&unmarked, m),
    };
    Ok((collapse_onto_first(g, vs, weights, is_marked)?, gamma))
}

/// Odd `k >= 3` unmarked nonadjacent unlooped twins collapse onto `vs[0]` with
/// `beta' = prod beta_i` and `alpha' = (prod(alpha_i d + beta_i) - beta') / d`.
pub fn dual_parallel_reduce(
    g: &MarkedWeightedGraph,
    vs: &[usize],
) -> Result<MarkedWeightedGraph, ReduceError> {
    distinct_in_range(g, vs)?;
    if vs.len() < 3 || vs.len().is_multiple_of(2) {
        return Err(ReduceError::EvenK);
    }
    let ok = vs.iter().enumerate().all(|(k, &v)| {
        let r = &g.vertices()[v];
        !r.looped && !r.marked && vs[k + 1..].iter().all(|&w| !g.adjacent(v, w))
    });
    if !ok || !same_outside_neighbors(g, vs) {
        return Err(ReduceError::NotTwins);
    }
    let ws = weights_of(g, vs);
    let dd = d();
    let beta = product(ws.iter().map(|(_, b)| b));
    let shifted: Vec<LaurentPoly> = ws.iter().map(|(a, b)| &(a * &dd) + b).collect();
    let alpha = (&product(&shifted) - &beta).exact_div(&dd)?;
    collapse_onto_first(g, vs, (alpha, beta), false)
}
