//! Bracket-preserving reductions: twin consolidation and the weights that
//! let a composition `F * H` be evaluated from `F` and `H` separately.

use alloc::vec::Vec;

use crate::bracket::BracketError;
use crate::graph::{GraphError, MarkedWeightedGraph, Side};
use crate::ring::{LaurentPoly, RingError};

mod compose;
mod twins;

pub use compose::{
    bracket_double_composition, bracket_via_composition, build_f10_f01, build_fpm, contributions,
    double_composition_value, h_prime, h_prime_marked, pjoin_weights_cor1, pjoin_weights_cor3,
    pjoin_weights_cor4, subset_nullities, subset_type, CompositionResult, Contributions,
};
pub use twins::{
    clique_twin_reduce, dual_parallel_reduce, nonadjacent_twin_chain, twin_pair_reduce,
    twin_pair_split,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("vertices are not twins")]
    NotTwins,
    #[error("vertices are not unlooped twins forming a clique")]
    NotCliqueTwins,
    #[error("vertex {0} is looped; unloop first")]
    Looped(usize),
    #[error("mark/adjacency pattern of the twin pair has no reduction")]
    UncoveredTwinCase,
    #[error("dual parallel reduction needs an odd number of at least three twins")]
    EvenK,
    #[error("a neighbor of the cut vertex is marked in H; try swapping F and H")]
    MarkedNeighborInH,
    #[error("a neighbor of the cut vertex is marked in {0}")]
    MarkedNeighbor(Side),
    #[error("subset nullities {0:?} do not have the form (v+1, v, v)")]
    ClassificationViolation([usize; 3]),
    #[error("vertex list must be nonempty and duplicate-free")]
    BadVertexList,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// `alpha(a)`, `beta(a)`, `alpha(a_m)` with `beta(a_m) = 0` fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightTriple {
    pub alpha_a: LaurentPoly,
    pub beta_a: LaurentPoly,
    pub alpha_am: LaurentPoly,
}

impl WeightTriple {
    pub fn new(alpha_a: LaurentPoly, beta_a: LaurentPoly, alpha_am: LaurentPoly) -> Self {
        WeightTriple {
            alpha_a,
            beta_a,
            alpha_am,
        }
    }
}

impl core::fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "alpha(a) = {}, beta(a) = {}, alpha(a_m) = {}",
            self.alpha_a, self.beta_a, self.alpha_am
        )
    }
}

/// Which of the three nullities exceeds the other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsetType {
    /// `A(F)_T` (cut vertex diagonal 0) is the larger one.
    Type1,
    /// `A(F)_{T ∪ {a}}` (cut vertex diagonal 1) is the larger one.
    Type2,
    /// `A(F - a)_T` is the larger one.
    Type3,
}

pub(crate) fn distinct_in_range(g: &MarkedWeightedGraph, vs: &[usize]) -> Result<(), ReduceError> {
    if vs.is_empty() {
        return Err(ReduceError::BadVertexList);
    }
    for (k, &v) in vs.iter().enumerate() {
        g.vertex(v)?;
        if vs[..k].contains(&v) {
            return Err(ReduceError::BadVertexList);
        }
    }
    Ok(())
}

/// True when every listed vertex has the same neighbors outside the list.
pub(crate) fn same_outside_neighbors(g: &MarkedWeightedGraph, vs: &[usize]) -> bool {
    (0..g.len()).filter(|u| !vs.contains(u)).all(|u| {
        let first = g.adjacent(vs[0], u);
        vs[1..].iter().all(|&v| g.adjacent(v, u) == first)
    })
}

/// Repeatedly merge unlooped twin pairs covered by [`twin_pair_reduce`],
/// lowest index pair first. Returns the reduced graph and the number of merges.
pub fn consolidate_twins(g: &MarkedWeightedGraph) -> (MarkedWeightedGraph, u64) {
    let mut g = g.clone();
    let mut applied = 0;
    'scan: loop {
        let n = g.len();
        for v in 0..n {
            if g.vertices()[v].looped {
                continue;
            }
            for w in v + 1..n {
                if g.vertices()[w].looped || !g.are_twins(v, w).unwrap_or(false) {
                    continue;
                }
                if let Ok(next) = twin_pair_reduce(&g, v, w) {
                    g = next;
                    applied += 1;
                    continue 'scan;
                }
            }
        }
        return (g, applied);
    }
}

pub(crate) fn product<'a>(it: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
    it.into_iter().fold(LaurentPoly::one(), |acc, p| &acc * p)
}

pub(crate) fn weights_of(g: &MarkedWeightedGraph, vs: &[usize]) -> Vec<(LaurentPoly, LaurentPoly)> {
    vs.iter()
        .map(|&v| {
            let r = &g.vertices()[v];
            (r.alpha.clone(), r.beta.clone())
        })
        .collect()
}
