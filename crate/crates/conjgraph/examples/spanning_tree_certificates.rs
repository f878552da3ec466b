//! Shows how equality in the connected domination bound gamma_c >= (n-2)/(r-1)
//! is certified: a graph attains it exactly when it has a spanning tree whose
//! vertices all have degree 1 or r.
//!
//! Run with `cargo run --example spanning_tree_certificates`.

use conjgraph::families::overlay_regular_on_leaves;
use conjgraph::families::{build_1r_tree, FamilyCertificate};
use conjgraph::invariants::{invariant_value, InvariantId};
use conjgraph::parse_graph6;
use conjgraph::theorems::has_spanning_one_r_tree;

fn main() {
    // K_4 and the Petersen graph both attain the bound for r = 3.
    for (name, g6) in [("K_4", "C~"), ("Petersen", "IheA@GUAo")] {
        let g = parse_graph6(g6).expect("valid graph6");
        let gamma_c = invariant_value(&g, InvariantId::GammaConnected).unwrap();
        assert_eq!(2 * gamma_c, g.n() - 2);
        let cert = has_spanning_one_r_tree(&g, 3)
            .expect("within the search cap")
            .expect("both graphs attain the bound");
        assert!(cert.validate(&g));
        let FamilyCertificate::SpanningOneRTree { edges, .. } = &cert else {
            panic!("the search returns spanning tree certificates");
        };
        println!("{name}: gamma_c={gamma_c} = (n-2)/2, spanning (1,3)-tree {edges:?}");
    }

    // The converse construction: overlay a 2-regular graph on the leaves of
    // a (1,3)-tree to get a cubic graph that keeps the tree as a witness.
    let tree = build_1r_tree(3, &[1, 2, 3]).expect("three expansions");
    let leaves = (0..tree.n()).filter(|&v| tree.degree(v) == 1).count();
    let cycle_edges: Vec<(usize, usize)> = (0..leaves).map(|i| (i, (i + 1) % leaves)).collect();
    let cycle = conjgraph::Graph::from_edges(leaves, &cycle_edges).unwrap();
    let host = overlay_regular_on_leaves(&tree, &cycle).expect("overlay fits");
    assert_eq!(host.regularity(), Some(3));
    let gamma_c = invariant_value(&host, InvariantId::GammaConnected).unwrap();
    assert_eq!(2 * gamma_c, host.n() - 2);
    println!(
        "\noverlay of C_{leaves} on a (1,3)-tree: cubic, n={}, gamma_c={gamma_c} = (n-2)/2",
        host.n()
    );

    // The 3-cube misses the bound: gamma_c = 4 > 3 = (n-2)/2, and
    // correspondingly no spanning (1,3)-tree exists.
    let cube = parse_graph6("Gr`HOk").expect("valid graph6");
    assert_eq!(cube.regularity(), Some(3));
    let gamma_c = invariant_value(&cube, InvariantId::GammaConnected).unwrap();
    let cert = has_spanning_one_r_tree(&cube, 3).expect("within the search cap");
    assert!(cert.is_none());
    println!("3-cube: gamma_c={gamma_c} > (n-2)/2 = 3, no spanning (1,3)-tree");
}
