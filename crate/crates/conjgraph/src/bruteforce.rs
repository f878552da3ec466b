//! Reference implementations by exhaustive enumeration.
//!
//! Everything here trades speed for obviousness: vertex invariants scan all
//! `2^n` subsets, matching invariants enumerate every matching. These are the
//! oracles the optimized solvers are checked against, both in the test suite
//! and by the CLI selftest, so they must stay independent of the solver code
//! paths in `invariants`.

use crate::graph::{Graph, VertexSet};

/// Largest order the subset-scan oracles accept. `2^16` masks per graph keeps
/// a full-corpus sweep comfortably fast.
pub const MAX_ORACLE_VERTICES: usize = 16;

fn assert_oracle_size(g: &Graph) {
    assert!(
        g.n() <= MAX_ORACLE_VERTICES,
        "brute-force oracle supports n <= {MAX_ORACLE_VERTICES}, got {}",
        g.n()
    );
}

fn all_masks(g: &Graph) -> std::ops::RangeInclusive<u64> {
    0..=VertexSet::full(g.n()).mask
}

fn induced_max_degree(g: &Graph, mask: u64) -> usize {
    VertexSet::new(mask)
        .iter()
        .map(|v| (g.neighbors(v).mask & mask).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_k_independent(g: &Graph, s: VertexSet, k: usize) -> bool {
    induced_max_degree(g, s.mask) <= k
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let covered = s.iter().fold(s.mask, |acc, v| acc | g.neighbors(v).mask);
    covered == g.vertices().mask
}

pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    let covered = s.iter().fold(0, |acc, v| acc | g.neighbors(v).mask);
    covered == g.vertices().mask
}

pub fn is_k_dominating(g: &Graph, s: VertexSet, k: usize) -> bool {
    (0..g.n()).all(|v| s.contains(v) || (g.neighbors(v).mask & s.mask).count_ones() as usize >= k)
}

pub fn induces_connected_subgraph(g: &Graph, s: VertexSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let start = s.mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= g.neighbors(v).mask & s.mask;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == s.mask
}

pub fn alpha(g: &Graph) -> usize {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| induced_max_degree(g, m) == 0)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn alpha_k(g: &Graph, k: usize) -> usize {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| induced_max_degree(g, m) <= k)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum of `alpha_k` over open neighborhoods.
pub fn alpha_local_k(g: &Graph, k: usize) -> usize {
    assert_oracle_size(g);
    (0..g.n())
        .map(|v| {
            let (nbhd, _) = g.induced_subgraph(g.neighbors(v)).unwrap();
            alpha_k(&nbhd, k)
        })
        .max()
        .unwrap_or(0)
}

pub fn gamma(g: &Graph) -> usize {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| is_dominating(g, VertexSet::new(m)))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("the whole vertex set dominates")
}

/// `None` when no total dominating set exists (isolated vertex present).
pub fn gamma_total(g: &Graph) -> Option<usize> {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| is_total_dominating(g, VertexSet::new(m)))
        .map(|m| m.count_ones() as usize)
        .min()
}

pub fn gamma_k(g: &Graph, k: usize) -> usize {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| is_k_dominating(g, VertexSet::new(m), k))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("the whole vertex set k-dominates")
}

/// `None` when the graph is disconnected.
pub fn gamma_connected(g: &Graph) -> Option<usize> {
    assert_oracle_size(g);
    if g.n() == 0 {
        return Some(0);
    }
    all_masks(g)
        .filter(|&m| {
            let s = VertexSet::new(m);
            is_dominating(g, s) && induces_connected_subgraph(g, s)
        })
        .map(|m| m.count_ones() as usize)
        .min()
}

pub fn gamma_independent(g: &Graph) -> usize {
    assert_oracle_size(g);
    all_masks(g)
        .filter(|&m| {
            let s = VertexSet::new(m);
            is_dominating(g, s) && induced_max_degree(g, m) == 0
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("every maximal independent set dominates")
}

/// Visit every matching of `g` (as index sets into `edges`), including the
/// empty one.
fn for_each_matching(edges: &[(usize, usize)], f: &mut impl FnMut(&[usize], u64)) {
    fn rec(
        edges: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<usize>,
        covered: u64,
        f: &mut impl FnMut(&[usize], u64),
    ) {
        f(chosen, covered);
        for i in from..edges.len() {
            let (u, v) = edges[i];
            let bits = 1u64 << u | 1 << v;
            if covered & bits == 0 {
                chosen.push(i);
                rec(edges, i + 1, chosen, covered | bits, f);
                chosen.pop();
            }
        }
    }
    rec(edges, 0, &mut Vec::new(), 0, f);
}

pub fn mu(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for_each_matching(&edges, &mut |chosen, _| best = best.max(chosen.len()));
    best
}

/// Minimum size of a maximal matching, by enumerating all matchings and
/// keeping those no edge can extend.
pub fn gamma_edge(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = usize::MAX;
    for_each_matching(&edges, &mut |chosen, covered| {
        let maximal = edges
            .iter()
            .all(|&(u, v)| covered & (1u64 << u | 1 << v) != 0);
        if maximal {
            best = best.min(chosen.len());
        }
    });
    debug_assert!(
        best != usize::MAX,
        "the empty matching is maximal on edgeless graphs"
    );
    best
}

/// Search for an induced K_{1,r} directly: a center plus r pairwise
/// non-adjacent neighbors.
pub fn has_induced_k1r(g: &Graph, r: usize) -> bool {
    fn extend(g: &Graph, pool: u64, chosen: usize, r: usize) -> bool {
        if chosen == r {
            return true;
        }
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Keep only later vertices non-adjacent to v to stay independent.
            if extend(g, rest & !g.neighbors(v).mask, chosen + 1, r) {
                return true;
            }
        }
        false
    }
    (0..g.n()).any(|c| extend(g, g.neighbors(c).mask, 0, r))
}

/// Dispatches an [`InvariantId`] to its oracle. Returns `None` exactly where
/// the invariant is undefined, mirroring the error cases of the optimized
/// solvers so the two can be compared wholesale.
pub fn oracle_value(g: &Graph, id: crate::invariants::InvariantId) -> Option<usize> {
    use crate::invariants::InvariantId;
    match id {
        InvariantId::Alpha => Some(alpha(g)),
        InvariantId::AlphaK(k) => Some(alpha_k(g, k)),
        InvariantId::AlphaLocalK(k) => Some(alpha_local_k(g, k)),
        InvariantId::Mu => Some(mu(g)),
        InvariantId::Gamma => Some(gamma(g)),
        InvariantId::GammaTotal => gamma_total(g),
        InvariantId::GammaK(k) => Some(gamma_k(g, k)),
        InvariantId::GammaConnected => gamma_connected(g),
        InvariantId::GammaIndependent => Some(gamma_independent(g)),
        InvariantId::GammaEdge => Some(gamma_edge(g)),
    }
}
