mod common;

use common::{add_twins, graph_plan, GraphPlan};
use mgbracket::bracket::bracket_state_sum;
use mgbracket::reduce::{
    clique_twin_reduce, dual_parallel_reduce, nonadjacent_twin_chain, twin_pair_reduce,
    twin_pair_split,
};
use mgbracket::{MarkedWeightedGraph, ReduceError};
use proptest::collection::vec;
use proptest::prelude::*;

/// Host graph (looped vertices allowed) plus a twin neighborhood.
fn host() -> impl Strategy<Value = (GraphPlan, Vec<bool>)> {
    graph_plan(0, 4, true).prop_flat_map(|s| {
        let n = s.n;
        (Just(s), vec(any::<bool>(), n))
    })
}

fn twins(
    (s, nb): &(GraphPlan, Vec<bool>),
    k: usize,
    clique: bool,
    marks: &[bool],
) -> (MarkedWeightedGraph, Vec<usize>) {
    let mut g = s.build();
    let vs = add_twins(&mut g, nb, k, clique, marks, true);
    (g, vs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pair_reduce_covered_cases(h in host(), case in 0usize..4) {
        // (marked, marked, nonadjacent) and the three adjacent mark patterns.
        let (marks, adjacent) = match case {
            0 => ([true, true], false),
            1 => ([false, false], true),
            2 => ([false, true], true),
            _ => ([true, true], true),
        };
        let (g, vs) = twins(&h, 2, adjacent, &marks);
        let r = twin_pair_reduce(&g, vs[0], vs[1]).unwrap();
        prop_assert_eq!(bracket_state_sum(&r), bracket_state_sum(&g));
        let r = twin_pair_reduce(&g, vs[1], vs[0]).unwrap();
        prop_assert_eq!(bracket_state_sum(&r), bracket_state_sum(&g));
    }

    #[test]
    fn pair_split_covered_cases(h in host(), w_marked in any::<bool>()) {
        let (g, vs) = twins(&h, 2, false, &[false, w_marked]);
        let (reduced, gamma, rest) = twin_pair_split(&g, vs[0], vs[1]).unwrap();
        let rhs = &bracket_state_sum(&reduced) + &(&gamma * &bracket_state_sum(&rest));
        prop_assert_eq!(rhs, bracket_state_sum(&g));
        prop_assert_eq!(
            twin_pair_split(&g, vs[1], vs[0]).map(|_| ()).err(),
            if w_marked { Some(ReduceError::UncoveredTwinCase) } else { None }
        );
    }

    #[test]
    fn chain_matches_oracle(h in host(), marks in vec(any::<bool>(), 2..=4)) {
        let (g, vs) = twins(&h, marks.len(), false, &marks);
        let (reduced, gamma) = nonadjacent_twin_chain(&g, &vs).unwrap();
        let rest = g.delete_vertices(&vs).unwrap();
        let rhs = &bracket_state_sum(&reduced) + &(&gamma * &bracket_state_sum(&rest));
        prop_assert_eq!(rhs, bracket_state_sum(&g));
    }

    #[test]
    fn clique_matches_oracle(h in host(), marks in vec(any::<bool>(), 1..=4)) {
        let (g, vs) = twins(&h, marks.len(), true, &marks);
        let r = clique_twin_reduce(&g, &vs).unwrap();
        prop_assert_eq!(bracket_state_sum(&r), bracket_state_sum(&g));
    }

    #[test]
    fn dual_parallel_matches_oracle(h in host(), five in any::<bool>()) {
        let k = if five { 5 } else { 3 };
        let (g, vs) = twins(&h, k, false, &vec![false; k]);
        let r = dual_parallel_reduce(&g, &vs).unwrap();
        prop_assert_eq!(bracket_state_sum(&r), bracket_state_sum(&g));
        let (chain, gamma) = nonadjacent_twin_chain(&g, &vs).unwrap();
        prop_assert!(gamma.is_zero());
        prop_assert_eq!(bracket_state_sum(&chain), bracket_state_sum(&r));
    }
}

#[test]
fn non_twins_are_rejected() {
    let g = MarkedWeightedGraph::from_parts(
        (0..3)
            .map(|i| mgbracket::VertexRecord::standard(&format!("v{i}")))
            .collect(),
        &[(0, 1)],
        0,
    )
    .unwrap();
    assert_eq!(
        twin_pair_reduce(&g, 0, 2).unwrap_err(),
        ReduceError::NotTwins
    );
    assert_eq!(
        dual_parallel_reduce(&g, &[0, 1]).unwrap_err(),
        ReduceError::EvenK
    );
    assert_eq!(
        clique_twin_reduce(&g, &[0, 2]).unwrap_err(),
        ReduceError::NotCliqueTwins
    );
}
