//! Branch-and-bound solvers for independence and k-independence.
//!
//! A set is k-independent when the subgraph it induces has maximum degree at
//! most `k`; plain independence is the `k = 0` case. The solver branches on the
//! candidate vertex of highest residual degree and prunes with the trivial
//! `|chosen| + |candidates|` bound, which is plenty for graphs in the size
//! range this crate targets.

use crate::graph::{Graph, VertexSet};

/// Independence number, the `k = 0` case of [`k_independence_number`].
pub fn independence_number(g: &Graph) -> usize {
    k_independence_number(g, 0)
}

/// Largest size of a set inducing a subgraph of maximum degree at most `k`.
pub fn k_independence_number(g: &Graph, k: usize) -> usize {
    max_k_independent(g, k, 0, 0).expect("the unconstrained search is always feasible")
}

/// Maximum of the k-independence number over all open neighborhoods,
/// taken of the subgraph each neighborhood induces.
pub fn local_k_independence_number(g: &Graph, k: usize) -> usize {
    (0..g.n())
        .map(|v| {
            let (nbhd, _) = g
                .induced_subgraph(g.neighbors(v))
                .expect("neighborhood is a valid vertex set");
            k_independence_number(&nbhd, k)
        })
        .max()
        .unwrap_or(0)
}

/// Whether `v` can join `chosen` without pushing any induced degree past `k`.
fn can_add(g: &Graph, k: usize, chosen: u64, v: usize) -> bool {
    let nb = g.neighbors(v).mask & chosen;
    if nb.count_ones() as usize > k {
        return false;
    }
    VertexSet::new(nb)
        .iter()
        .all(|u| ((g.neighbors(u).mask & chosen).count_ones() as usize) < k)
}

fn bnb(g: &Graph, k: usize, chosen: u64, cand: u64, best: &mut usize) {
    let mut live = 0u64;
    for v in VertexSet::new(cand).iter() {
        if can_add(g, k, chosen, v) {
            live |= 1 << v;
        }
    }
    let size = chosen.count_ones() as usize;
    *best = (*best).max(size);
    if size + live.count_ones() as usize <= *best {
        return;
    }
    let v = VertexSet::new(live)
        .iter()
        .max_by_key(|&v| (g.neighbors(v).mask & live).count_ones())
        .expect("live is nonempty past the bound check");
    bnb(g, k, chosen | 1 << v, live & !(1 << v), best);
    bnb(g, k, chosen, live & !(1 << v), best);
}

/// Largest k-independent set size among sets containing all of `required` and
/// none of `forbidden`. `None` when the constraints are contradictory or
/// `required` is not itself k-independent.
pub(crate) fn max_k_independent(
    g: &Graph,
    k: usize,
    required: u64,
    forbidden: u64,
) -> Option<usize> {
    let all = g.vertices().mask;
    if required & forbidden != 0 || required & !all != 0 {
        return None;
    }
    let required_ok = VertexSet::new(required)
        .iter()
        .all(|v| (g.neighbors(v).mask & required).count_ones() as usize <= k);
    if !required_ok {
        return None;
    }
    let mut best = required.count_ones() as usize;
    bnb(g, k, required, all & !required & !forbidden, &mut best);
    Some(best)
}

/// Optimum value together with the optimal set whose sorted vertex list is
/// lexicographically smallest, found by forcing vertices in ascending order.
pub(crate) fn max_k_independent_with_witness(g: &Graph, k: usize) -> (usize, VertexSet) {
    let target = max_k_independent(g, k, 0, 0).expect("feasible");
    let mut required = 0u64;
    let mut forbidden = 0u64;
    for v in 0..g.n() {
        if max_k_independent(g, k, required | 1 << v, forbidden) == Some(target) {
            required |= 1 << v;
        } else {
            forbidden |= 1 << v;
        }
    }
    (target, VertexSet::new(required))
}

/// Value of the local k-independence number, plus the smallest center
/// achieving it and the lexicographically smallest witness set inside that
/// center's neighborhood. The witness pair is `None` only on the empty graph.
pub(crate) fn local_k_independence_with_witness(
    g: &Graph,
    k: usize,
) -> (usize, Option<(usize, VertexSet)>) {
    let mut best = 0;
    let mut center = None;
    for v in 0..g.n() {
        let (nbhd, _) = g
            .induced_subgraph(g.neighbors(v))
            .expect("neighborhood is a valid vertex set");
        let value = k_independence_number(&nbhd, k);
        if center.is_none() || value > best {
            best = value;
            center = Some(v);
        }
    }
    let Some(c) = center else {
        return (0, None);
    };
    let (nbhd, map) = g.induced_subgraph(g.neighbors(c)).unwrap();
    let (_, local) = max_k_independent_with_witness(&nbhd, k);
    let set = local.iter().map(|v| map[v]).collect();
    (best, Some((c, set)))
}
