//! Constructors for the extremal families that attain equality in the
//! registry's bounds, and certifiers that verify membership with explicit
//! witnesses.
//!
//! Three families appear:
//!
//! * `G_r` members: r-regular bipartite graphs whose vertex set splits into a
//!   part inducing an (r-1)-regular subgraph and a part inducing a perfect
//!   matching. These are exactly the graphs with alpha = (r/2) * gamma_t.
//! * Chain graphs `G_ell`: claw-free graphs with alpha = gamma_2 = ell + 1,
//!   showing the claw-free bound alpha <= gamma_2 is sharp at every value.
//! * (1,r)-trees: trees whose vertices all have degree 1 or r. They maximize
//!   the leaf count at ((r-2)n + 2)/(r-1), and a connected graph with
//!   maximum degree at most r attains the minimum connected domination
//!   (n-2)/(r-1) exactly when it has a spanning (1,r)-tree.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

/// Cap on the exponential partition search in [`certify_gr`].
pub const MAX_CERTIFY_VERTICES: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameter must be at least {min}, got {got}")]
    ParameterTooSmall { min: usize, got: usize },
    #[error("graph has {n} vertices, above the certification cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("expansion index {0} is not a current leaf")]
    NotALeaf(usize),
    #[error("overlay host is not a (1,r)-tree for any r >= 3")]
    HostNotOneRTree,
    #[error("overlay host has {leaves} leaves but the regular graph has {vertices} vertices")]
    LeafCountMismatch { leaves: usize, vertices: usize },
    #[error("overlay graph is not {expected}-regular")]
    OverlayNotRegular { expected: usize },
}

/// Witness that a graph belongs to one of the extremal families. Certificates
/// carry enough data to be re-checked against the graph they describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyCertificate {
    /// Partition `V = A u B` of an r-regular bipartite graph where `G[A]` is
    /// (r-1)-regular and `G[B]` is 1-regular.
    GrPartition {
        r: usize,
        a: VertexSet,
        b: VertexSet,
    },
    /// The chain graph on `3*ell + 1` vertices with `ell` rungs.
    ClawFreeChain { ell: usize },
    /// A tree whose every vertex has degree 1 or r.
    OneRTree { r: usize },
    /// Edge list of a spanning tree whose every vertex has degree 1 or r.
    SpanningOneRTree {
        r: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl FamilyCertificate {
    /// Re-checks the witness against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            FamilyCertificate::GrPartition { r, a, b } => {
                let whole = a.union(*b) == g.vertices() && a.is_disjoint_from(*b);
                if !whole || g.regularity() != Some(*r) || !g.is_bipartite() {
                    return false;
                }
                let part_regularity = |s: VertexSet| {
                    let (induced, _) = g.induced_subgraph(s).expect("partition sides are in range");
                    induced.regularity()
                };
                part_regularity(*a) == Some(r - 1) && part_regularity(*b) == Some(1)
            }
            FamilyCertificate::ClawFreeChain { ell } => match build_claw_free_chain(*ell) {
                Ok(model) => {
                    g.n() == model.n()
                        && g.edge_count() == model.edge_count()
                        && model.edges().iter().all(|&(u, v)| g.has_edge(u, v))
                }
                Err(_) => false,
            },
            FamilyCertificate::OneRTree { r } => is_one_r_tree(g, *r),
            FamilyCertificate::SpanningOneRTree { r, edges } => {
                if *r < 3 || edges.len() + 1 != g.n() {
                    return false;
                }
                if edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
                    return false;
                }
                match Graph::from_edges(g.n(), edges) {
                    Ok(tree) => tree.edge_count() == edges.len() && is_one_r_tree(&tree, *r),
                    Err(_) => false,
                }
            }
        }
    }
}

/// Whether `g` is a tree in which every vertex has degree 1 or `r`.
///
/// The two-vertex tree qualifies for every `r`: both its vertices are leaves,
/// and it attains the leaf bound `((r-2)n + 2)/(r-1) = 2`.
pub fn is_one_r_tree(g: &Graph, r: usize) -> bool {
    r >= 3 && g.is_tree() && (0..g.n()).all(|v| g.degree(v) == 1 || g.degree(v) == r)
}

/// Builds the 4r-vertex `G_r` member generalizing the figure family.
///
/// The matched part is `B = {0, 1, 2, 3}` with edges 0-1 and 2-3. Two
/// complete bipartite gadgets `K_{r-1,r-1}` fill the rest: the left gadget's
/// a-side is joined fully to vertex 0 and its b-side to vertex 2, the right
/// gadget's a-side to vertex 1 and its b-side to vertex 3.
///
/// * r=2 gives the 8-cycle.
/// * r=3 gives the 12-vertex cubic member with alpha = 6 = (3/2) * gamma_t.
/// * r=4 gives the 16-vertex member with alpha = 8 = 2 * gamma_t. The
///   multiplier is r/2 = 2; a halved total domination number would read 2,
///   not 8, so the two are easy to confuse in print.
pub fn build_gr_example(r: usize) -> Result<Graph, FamilyError> {
    if r < 2 {
        return Err(FamilyError::ParameterTooSmall { min: 2, got: r });
    }
    let s = r - 1;
    let left_a = 4;
    let left_b = left_a + s;
    let right_a = left_b + s;
    let right_b = right_a + s;
    let mut edges = vec![(0, 1), (2, 3)];
    for i in 0..s {
        for j in 0..s {
            edges.push((left_a + i, left_b + j));
            edges.push((right_a + i, right_b + j));
        }
        edges.push((0, left_a + i));
        edges.push((2, left_b + i));
        edges.push((1, right_a + i));
        edges.push((3, right_b + i));
    }
    Ok(Graph::from_edges(4 * r, &edges).expect("construction stays within its labels"))
}

/// Exhaustive search for a `G_r` partition of `g`.
///
/// Returns `Ok(None)` when `g` has no such partition. The returned partition
/// is the one whose matched part `B` has the lowest bitmask, so repeated runs
/// agree. Membership forces `B` to meet every vertex's neighborhood exactly
/// once: a vertex of `B` keeps one neighbor inside `B`, and a vertex of `A`
/// keeps r-1 neighbors inside `A`.
pub fn certify_gr(g: &Graph, r: usize) -> Result<Option<FamilyCertificate>, FamilyError> {
    let n = g.n();
    if n > MAX_CERTIFY_VERTICES {
        return Err(FamilyError::TooLarge {
            n,
            cap: MAX_CERTIFY_VERTICES,
        });
    }
    if r < 2 || g.regularity() != Some(r) || !g.is_bipartite() {
        return Ok(None);
    }
    if !n.is_multiple_of(r) || !(n / r).is_multiple_of(2) {
        return Ok(None);
    }
    let target = n / r;
    let mut counts = vec![0u8; n];
    let mut best: Option<u64> = None;
    search_matched_part(g, target, 0, &mut counts, &mut best);
    Ok(best.map(|mask| {
        let b = VertexSet::new(mask);
        let certificate = FamilyCertificate::GrPartition {
            r,
            a: g.vertices().difference(b),
            b,
        };
        debug_assert!(certificate.validate(g));
        certificate
    }))
}

/// Enumerates every candidate matched part as a union of disjoint edges.
/// `counts[v]` tracks how many chosen vertices are adjacent to `v`; a count
/// of 2 can never drop back, so those branches are cut immediately. The
/// lowest uncovered vertex must receive its unique chosen neighbor next,
/// which visits each valid part exactly once.
fn search_matched_part(
    g: &Graph,
    target: usize,
    chosen: u64,
    counts: &mut [u8],
    best: &mut Option<u64>,
) {
    if chosen.count_ones() as usize == target {
        if counts.iter().all(|&c| c == 1) && best.is_none_or(|m| chosen < m) {
            *best = Some(chosen);
        }
        return;
    }
    let Some(v) = counts.iter().position(|&c| c == 0) else {
        return;
    };
    for u in g.neighbors(v).iter() {
        if chosen >> u & 1 == 1 {
            continue;
        }
        for w in g.neighbors(u).iter() {
            if chosen >> w & 1 == 1 {
                continue;
            }
            let mut fatal = false;
            for x in g.neighbors(u).iter().chain(g.neighbors(w).iter()) {
                counts[x] += 1;
                fatal |= counts[x] > 1;
            }
            if !fatal {
                search_matched_part(g, target, chosen | 1 << u | 1 << w, counts, best);
            }
            for x in g.neighbors(u).iter().chain(g.neighbors(w).iter()) {
                counts[x] -= 1;
            }
        }
    }
}

/// Builds the chain graph `G_ell` on `3*ell + 1` vertices.
///
/// Vertices `0..=ell` form an independent spine. For each rung `i` in
/// `0..ell`, an edge `p_i q_i` is added and both endpoints are joined to
/// spine vertices `i` and `i + 1`. The rung for position `i` uses labels
/// `ell + 1 + 2i` and `ell + 2 + 2i`.
///
/// The spine is simultaneously a maximum independent set and a minimum
/// 2-dominating set, so alpha = gamma_2 = ell + 1, and the graph is
/// claw-free. With ell = 1 this is the diamond, `K_4` minus an edge.
pub fn build_claw_free_chain(ell: usize) -> Result<Graph, FamilyError> {
    if ell < 1 {
        return Err(FamilyError::ParameterTooSmall { min: 1, got: ell });
    }
    let mut edges = Vec::with_capacity(5 * ell);
    for i in 0..ell {
        let p = ell + 1 + 2 * i;
        let q = p + 1;
        edges.push((p, q));
        edges.push((p, i));
        edges.push((p, i + 1));
        edges.push((q, i));
        edges.push((q, i + 1));
    }
    Ok(Graph::from_edges(3 * ell + 1, &edges).expect("construction stays within its labels"))
}

/// Builds a (1,r)-tree by repeated leaf expansion.
///
/// The start is the star `K_{1,r}` with center 0 and leaves `1..=r`. Each
/// entry of `expansions` names a current leaf, which receives r-1 fresh
/// leaves and thereby moves to degree r. Every output is a (1,r)-tree on
/// `(r+1) + |expansions| * (r-1)` vertices with `((r-2)n + 2)/(r-1)` leaves.
pub fn build_1r_tree(r: usize, expansions: &[usize]) -> Result<Graph, FamilyError> {
    if r < 3 {
        return Err(FamilyError::ParameterTooSmall { min: 3, got: r });
    }
    let mut edges: Vec<(usize, usize)> = (1..=r).map(|v| (0, v)).collect();
    let mut degree = vec![1usize; r + 1];
    degree[0] = r;
    for &leaf in expansions {
        if leaf >= degree.len() || degree[leaf] != 1 {
            return Err(FamilyError::NotALeaf(leaf));
        }
        let first_new = degree.len();
        for v in first_new..first_new + r - 1 {
            edges.push((leaf, v));
            degree.push(1);
        }
        degree[leaf] = r;
    }
    Ok(Graph::from_edges(degree.len(), &edges).expect("construction stays within its labels"))
}

/// Places an (r-1)-regular graph `h` on the leaves of a (1,r)-tree `t`.
///
/// The i-th leaf of `t` in ascending label order plays the role of vertex
/// `i` of `h`. The union of the tree edges and the transplanted edges of `h`
/// is r-regular and connected, keeps `t` as a spanning (1,r)-tree, and so
/// attains the minimum connected domination (n-2)/(r-1). The overlay `h`
/// need not be connected.
pub fn overlay_regular_on_leaves(t: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    let r = t.max_degree();
    if !is_one_r_tree(t, r) {
        return Err(FamilyError::HostNotOneRTree);
    }
    let leaves: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    if h.n() != leaves.len() {
        return Err(FamilyError::LeafCountMismatch {
            leaves: leaves.len(),
            vertices: h.n(),
        });
    }
    if h.regularity() != Some(r - 1) {
        return Err(FamilyError::OverlayNotRegular { expected: r - 1 });
    }
    let mut edges = t.edges();
    for (x, y) in h.edges() {
        let (u, v) = (leaves[x], leaves[y]);
        assert!(
            !t.has_edge(u, v),
            "leaves of a tree on 3+ vertices are pairwise nonadjacent"
        );
        edges.push((u, v));
    }
    Ok(Graph::from_edges(t.n(), &edges).expect("overlay stays within the host labels"))
}
