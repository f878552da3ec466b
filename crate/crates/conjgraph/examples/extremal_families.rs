//! Builds one member of each extremal family, prints its graph6 form, and
//! shows the equality that makes the family extremal.
//!
//! Run with `cargo run --example extremal_families`.

use conjgraph::encode_graph6;
use conjgraph::families::{
    build_1r_tree, build_claw_free_chain, build_gr_example, certify_gr, is_one_r_tree,
};
use conjgraph::invariants::{invariant_value, InvariantId};

fn main() {
    // r-regular graphs where alpha = (r/2) * gamma_t, for r = 3 and 4.
    for r in [3, 4] {
        let g = build_gr_example(r).expect("r is in range");
        let alpha = invariant_value(&g, InvariantId::Alpha).unwrap();
        let gamma_t = invariant_value(&g, InvariantId::GammaTotal).unwrap();
        assert_eq!(2 * alpha, r * gamma_t);
        let cert = certify_gr(&g, r)
            .expect("size is within the certification cap")
            .expect("built members certify");
        assert!(cert.validate(&g));
        println!(
            "G_{r} member {}: n={}, alpha={alpha}, gamma_t={gamma_t}, alpha = ({r}/2)*gamma_t",
            encode_graph6(&g),
            g.n()
        );
    }

    // Claw-free chains with alpha = gamma_2 = ell + 1.
    println!();
    for ell in 1..=5 {
        let g = build_claw_free_chain(ell).expect("ell is positive");
        let alpha = invariant_value(&g, InvariantId::Alpha).unwrap();
        let gamma_2 = invariant_value(&g, InvariantId::GammaK(2)).unwrap();
        assert!(g.structural_predicates().claw_free);
        assert_eq!((alpha, gamma_2), (ell + 1, ell + 1));
        println!(
            "claw-free chain ell={ell}: {} with alpha = gamma_2 = {}",
            encode_graph6(&g),
            ell + 1
        );
    }

    // Trees of degree 1 or 3, grown by repeatedly expanding chosen leaves.
    println!();
    let star = build_1r_tree(3, &[]).expect("bare star");
    let grown = build_1r_tree(3, &[1, 2]).expect("two expansions");
    for t in [&star, &grown] {
        assert!(is_one_r_tree(t, 3));
        let leaves = (0..t.n()).filter(|&v| t.degree(v) == 1).count();
        // The leaf bound ((r-2)n + 2)/(r-1) holds with equality here.
        assert_eq!(2 * leaves, t.n() + 2);
        println!(
            "(1,3)-tree {}: n={}, leaves={leaves} = (n + 2)/2",
            encode_graph6(t),
            t.n()
        );
    }
}
