//! Property-based tests over random small graphs: graph6 round-trips,
//! monotonicity and ordering laws between invariants, witness feasibility,
//! and full solver-against-oracle agreement.

use conjgraph::bruteforce;
use conjgraph::invariants::{compute, invariant_value, InvariantId};
use conjgraph::{encode_graph6, parse_graph6, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("indices stay in range")
        })
    })
}

fn catalog() -> Vec<InvariantId> {
    vec![
        InvariantId::Alpha,
        InvariantId::AlphaK(1),
        InvariantId::AlphaK(2),
        InvariantId::AlphaLocalK(1),
        InvariantId::Mu,
        InvariantId::Gamma,
        InvariantId::GammaTotal,
        InvariantId::GammaK(2),
        InvariantId::GammaConnected,
        InvariantId::GammaIndependent,
        InvariantId::GammaEdge,
    ]
}

proptest! {
    #[test]
    fn graph6_roundtrips(g in arb_graph(12)) {
        let encoded = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn alpha_k_is_monotone_and_grounded(g in arb_graph(10)) {
        let alpha = invariant_value(&g, InvariantId::Alpha).unwrap();
        prop_assert_eq!(invariant_value(&g, InvariantId::AlphaK(0)).unwrap(), alpha);
        let mut previous = alpha;
        for k in 1..=4 {
            let current = invariant_value(&g, InvariantId::AlphaK(k)).unwrap();
            prop_assert!(current >= previous, "alpha_{} < alpha_{}", k, k - 1);
            prop_assert!(current <= g.n());
            previous = current;
        }
    }

    #[test]
    fn domination_and_matching_orderings_hold(g in arb_graph(10)) {
        let alpha = invariant_value(&g, InvariantId::Alpha).unwrap();
        let gamma = invariant_value(&g, InvariantId::Gamma).unwrap();
        let independent = invariant_value(&g, InvariantId::GammaIndependent).unwrap();
        prop_assert!(gamma <= independent && independent <= alpha);

        let mu = invariant_value(&g, InvariantId::Mu).unwrap();
        let edge = invariant_value(&g, InvariantId::GammaEdge).unwrap();
        prop_assert!(edge <= mu);

        if let Ok(total) = invariant_value(&g, InvariantId::GammaTotal) {
            prop_assert!(gamma <= total && total <= 2 * gamma);
        }
        if let Ok(connected) = invariant_value(&g, InvariantId::GammaConnected) {
            prop_assert!(gamma <= connected);
        }
        prop_assert!(gamma <= invariant_value(&g, InvariantId::GammaK(2)).unwrap());
    }

    #[test]
    fn witnesses_are_feasible_for_every_invariant(g in arb_graph(9)) {
        for id in catalog() {
            if let Ok(record) = compute(&g, id) {
                prop_assert!(record.verify(&g), "{} witness fails to certify", id);
            }
        }
    }

    #[test]
    fn solvers_agree_with_oracles(g in arb_graph(9)) {
        for id in catalog() {
            let solver = invariant_value(&g, id).ok();
            let oracle = bruteforce::oracle_value(&g, id);
            prop_assert_eq!(solver, oracle, "{} disagrees with its oracle", id);
        }
    }
}
