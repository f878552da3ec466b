//! Branch-and-bound solvers for the domination family: plain, total,
//! k-fold, connected, and independent domination.
//!
//! Plain and total domination are set-cover searches branching on the
//! uncovered vertex with the fewest remaining coverers, with siblings excluded
//! after being tried so no cover is enumerated twice. Connected domination
//! grows a connected set from each possible minimum vertex. Every solver takes
//! `(required, forbidden)` constraint masks so optimal witnesses can be forced
//! vertex by vertex.

use crate::graph::{Graph, VertexSet};

/// Minimum size of a set whose closed neighborhoods cover every vertex.
pub fn domination_number(g: &Graph) -> usize {
    min_dominating(g, 0, 0, g.n()).expect("the whole vertex set dominates")
}

/// Minimum size of a set whose open neighborhoods cover every vertex.
/// Undefined when the graph has an isolated vertex.
pub fn total_domination_number(g: &Graph) -> Result<usize, super::InvariantError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(super::InvariantError::IsolatedVertex(v));
    }
    Ok(min_total_dominating(g, 0, 0, g.n())
        .expect("without isolated vertices the whole vertex set totally dominates"))
}

/// Minimum size of a set `S` such that every vertex outside `S` has at least
/// `k` neighbors in `S`.
pub fn k_domination_number(g: &Graph, k: usize) -> usize {
    min_k_dominating(g, k, 0, 0, g.n()).expect("the whole vertex set k-dominates")
}

/// Minimum size of a dominating set inducing a connected subgraph.
/// Undefined on disconnected graphs.
pub fn connected_domination_number(g: &Graph) -> Result<usize, super::InvariantError> {
    if !g.is_connected() {
        return Err(super::InvariantError::Disconnected);
    }
    Ok(min_connected_dominating(g, 0, 0, g.n())
        .expect("a connected graph has a connected dominating set"))
}

/// Minimum size of a maximal independent set, equivalently of an independent
/// dominating set.
pub fn independent_domination_number(g: &Graph) -> usize {
    min_independent_dominating(g, 0, 0, g.n()).expect("maximal independent sets exist")
}

// ---- generic covering search ----

/// Minimum number of choosers covering `universe`, where chooser `w` covers
/// the vertices of `coverage[w]`. The coverage relation must be symmetric
/// (`v` in `coverage[w]` iff `w` in `coverage[v]`), which holds for both open
/// and closed neighborhoods. Returns the minimum if it is at most `cap`.
fn min_cover(
    g: &Graph,
    coverage: &[u64],
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let all = g.vertices().mask;
    if required & forbidden != 0 || required & !all != 0 {
        return None;
    }
    let covered = VertexSet::new(required)
        .iter()
        .fold(0u64, |acc, v| acc | coverage[v]);
    let allowed = all & !required & !forbidden;
    let mut best = cap + 1;
    cover_bnb(
        coverage,
        all,
        covered,
        allowed,
        required.count_ones() as usize,
        &mut best,
    );
    (best <= cap).then_some(best)
}

fn cover_bnb(
    coverage: &[u64],
    universe: u64,
    covered: u64,
    allowed: u64,
    size: usize,
    best: &mut usize,
) {
    let uncovered = universe & !covered;
    if uncovered == 0 {
        *best = (*best).min(size);
        return;
    }
    let strongest = VertexSet::new(allowed)
        .iter()
        .map(|w| (coverage[w] & uncovered).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if strongest == 0 {
        return;
    }
    if size + (uncovered.count_ones() as usize).div_ceil(strongest) >= *best {
        return;
    }
    let v = VertexSet::new(uncovered)
        .iter()
        .min_by_key(|&v| (coverage[v] & allowed).count_ones())
        .expect("uncovered is nonempty");
    let mut rest = allowed;
    for w in VertexSet::new(coverage[v] & allowed).iter() {
        rest &= !(1 << w);
        cover_bnb(
            coverage,
            universe,
            covered | coverage[w],
            rest,
            size + 1,
            best,
        );
    }
}

pub(crate) fn min_dominating(
    g: &Graph,
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let coverage: Vec<u64> = (0..g.n()).map(|v| g.closed_neighbors(v).mask).collect();
    min_cover(g, &coverage, required, forbidden, cap)
}

pub(crate) fn min_total_dominating(
    g: &Graph,
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let coverage: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).mask).collect();
    min_cover(g, &coverage, required, forbidden, cap)
}

// ---- k-domination ----

/// Minimum k-dominating set size among sets containing `required` and
/// avoiding `forbidden`, if it is at most `cap`.
pub(crate) fn min_k_dominating(
    g: &Graph,
    k: usize,
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let all = g.vertices().mask;
    if required & forbidden != 0 || required & !all != 0 {
        return None;
    }
    let mut best = cap + 1;
    k_dom_bnb(g, k, required, forbidden & all, &mut best);
    (best <= cap).then_some(best)
}

fn k_dom_bnb(g: &Graph, k: usize, inside: u64, outside: u64, best: &mut usize) {
    let size = inside.count_ones() as usize;
    if size >= *best {
        return;
    }
    let undecided = g.vertices().mask & !inside & !outside;
    // Every decided-out vertex needs k inside neighbors, now or eventually.
    let mut worst: Option<(usize, usize)> = None;
    for v in VertexSet::new(outside).iter() {
        let sat = (g.neighbors(v).mask & inside).count_ones() as usize;
        if sat >= k {
            continue;
        }
        let potential = (g.neighbors(v).mask & undecided).count_ones() as usize;
        if sat + potential < k {
            return;
        }
        let deficit = k - sat;
        if worst.is_none_or(|(d, _)| deficit > d) {
            worst = Some((deficit, v));
        }
    }
    if let Some((deficit, v)) = worst {
        if size + deficit >= *best {
            return;
        }
        let u = (g.neighbors(v).mask & undecided).trailing_zeros() as usize;
        k_dom_bnb(g, k, inside | 1 << u, outside, best);
        k_dom_bnb(g, k, inside, outside | 1 << u, best);
        return;
    }
    let unresolved = VertexSet::new(undecided)
        .iter()
        .find(|&u| ((g.neighbors(u).mask & inside).count_ones() as usize) < k);
    match unresolved {
        Some(u) => {
            k_dom_bnb(g, k, inside | 1 << u, outside, best);
            k_dom_bnb(g, k, inside, outside | 1 << u, best);
        }
        // Sending every undecided vertex outside yields a valid solution.
        None => *best = size,
    }
}

// ---- connected domination ----

/// Minimum connected dominating set size among sets containing `required` and
/// avoiding `forbidden`, if it is at most `cap`. The search enumerates
/// candidate sets by their minimum vertex so each connected set is grown
/// exactly once.
pub(crate) fn min_connected_dominating(
    g: &Graph,
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let n = g.n();
    let all = g.vertices().mask;
    if required & forbidden != 0 || required & !all != 0 {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let max_root = if required != 0 {
        required.trailing_zeros() as usize
    } else {
        n - 1
    };
    let mut best = cap + 1;
    for root in 0..=max_root {
        if forbidden >> root & 1 == 1 {
            continue;
        }
        let above = all & !VertexSet::full(root + 1).mask;
        let eligible = above & !forbidden;
        grow(
            g,
            1 << root,
            g.neighbors(root).mask & eligible,
            eligible,
            required,
            &mut best,
        );
    }
    (best <= cap).then_some(best)
}

fn grow(g: &Graph, s: u64, ext: u64, eligible: u64, required: u64, best: &mut usize) {
    let size = s.count_ones() as usize;
    if size >= *best {
        return;
    }
    let covered = VertexSet::new(s)
        .iter()
        .fold(0u64, |acc, v| acc | g.closed_neighbors(v).mask);
    let uncovered = g.vertices().mask & !covered;
    let missing = required & !s;
    if uncovered == 0 && missing == 0 {
        *best = size;
        return;
    }
    let Some(lb) = growth_lower_bound(g, s, eligible, uncovered, missing) else {
        return;
    };
    let count_lb = (uncovered.count_ones() as usize).div_ceil(g.max_degree() + 1);
    if size + lb.max(count_lb) >= *best {
        return;
    }
    let u = VertexSet::new(ext)
        .iter()
        .max_by_key(|&u| (g.closed_neighbors(u).mask & uncovered).count_ones())
        .expect("a positive lower bound means the frontier is nonempty");
    let s2 = s | 1 << u;
    let elig2 = eligible & !(1 << u);
    grow(
        g,
        s2,
        (ext | (g.neighbors(u).mask & elig2)) & !s2,
        elig2,
        required,
        best,
    );
    grow(g, s, ext & !(1 << u), elig2, required, best);
}

/// Least number of breadth-first layers through `eligible` after which every
/// uncovered vertex has a potential dominator in reach and every missing
/// required vertex is in reach. `None` when reach saturates first, which
/// proves the branch infeasible.
fn growth_lower_bound(
    g: &Graph,
    s: u64,
    eligible: u64,
    uncovered: u64,
    missing: u64,
) -> Option<usize> {
    let mut reach = s;
    let mut layers = 0;
    loop {
        let dominated_by_reach = VertexSet::new(reach)
            .iter()
            .fold(0u64, |acc, v| acc | g.closed_neighbors(v).mask);
        if uncovered & !dominated_by_reach == 0 && missing & !reach == 0 {
            return Some(layers);
        }
        let next = reach
            | (VertexSet::new(reach)
                .iter()
                .fold(0u64, |acc, v| acc | g.neighbors(v).mask)
                & eligible);
        if next == reach {
            return None;
        }
        reach = next;
        layers += 1;
    }
}

// ---- independent domination ----

/// Minimum independent dominating set size among sets containing `required`
/// and avoiding `forbidden`, if it is at most `cap`.
pub(crate) fn min_independent_dominating(
    g: &Graph,
    required: u64,
    forbidden: u64,
    cap: usize,
) -> Option<usize> {
    let all = g.vertices().mask;
    if required & forbidden != 0 || required & !all != 0 {
        return None;
    }
    let independent = VertexSet::new(required)
        .iter()
        .all(|v| g.neighbors(v).mask & required == 0);
    if !independent {
        return None;
    }
    let covered = VertexSet::new(required)
        .iter()
        .fold(0u64, |acc, v| acc | g.closed_neighbors(v).mask);
    let blocked = VertexSet::new(required)
        .iter()
        .fold(0u64, |acc, v| acc | g.neighbors(v).mask);
    let allowed = all & !required & !forbidden & !blocked;
    let mut best = cap + 1;
    independent_dom_bnb(
        g,
        covered,
        allowed,
        required.count_ones() as usize,
        &mut best,
    );
    (best <= cap).then_some(best)
}

fn independent_dom_bnb(g: &Graph, covered: u64, allowed: u64, size: usize, best: &mut usize) {
    let uncovered = g.vertices().mask & !covered;
    if uncovered == 0 {
        *best = (*best).min(size);
        return;
    }
    let strongest = VertexSet::new(allowed)
        .iter()
        .map(|w| (g.closed_neighbors(w).mask & uncovered).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if strongest == 0 {
        return;
    }
    if size + (uncovered.count_ones() as usize).div_ceil(strongest) >= *best {
        return;
    }
    let v = VertexSet::new(uncovered)
        .iter()
        .min_by_key(|&v| (g.closed_neighbors(v).mask & allowed).count_ones())
        .expect("uncovered is nonempty");
    let mut rest = allowed;
    for w in VertexSet::new(g.closed_neighbors(v).mask & allowed).iter() {
        rest &= !(1 << w);
        independent_dom_bnb(
            g,
            covered | g.closed_neighbors(w).mask,
            rest & !g.neighbors(w).mask,
            size + 1,
            best,
        );
    }
}

// ---- canonical witnesses ----

fn force_witness(g: &Graph, target: usize, solve: impl Fn(u64, u64) -> Option<usize>) -> VertexSet {
    let mut required = 0u64;
    let mut forbidden = 0u64;
    for v in 0..g.n() {
        if solve(required | 1 << v, forbidden) == Some(target) {
            required |= 1 << v;
        } else {
            forbidden |= 1 << v;
        }
    }
    debug_assert_eq!(solve(required, forbidden), Some(target));
    VertexSet::new(required)
}

pub(crate) fn domination_with_witness(g: &Graph) -> (usize, VertexSet) {
    let target = domination_number(g);
    (
        target,
        force_witness(g, target, |r, f| min_dominating(g, r, f, target)),
    )
}

pub(crate) fn total_domination_with_witness(g: &Graph) -> (usize, VertexSet) {
    let target = total_domination_number(g).expect("caller checks for isolated vertices");
    (
        target,
        force_witness(g, target, |r, f| min_total_dominating(g, r, f, target)),
    )
}

pub(crate) fn k_domination_with_witness(g: &Graph, k: usize) -> (usize, VertexSet) {
    let target = k_domination_number(g, k);
    (
        target,
        force_witness(g, target, |r, f| min_k_dominating(g, k, r, f, target)),
    )
}

pub(crate) fn connected_domination_with_witness(g: &Graph) -> (usize, VertexSet) {
    let target = connected_domination_number(g).expect("caller checks connectivity");
    (
        target,
        force_witness(g, target, |r, f| min_connected_dominating(g, r, f, target)),
    )
}

pub(crate) fn independent_domination_with_witness(g: &Graph) -> (usize, VertexSet) {
    let target = independent_domination_number(g);
    (
        target,
        force_witness(g, target, |r, f| {
            min_independent_dominating(g, r, f, target)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce;
    use crate::corpus;
    use crate::graph6::parse_graph6;

    #[test]
    fn frozen_values_on_named_graphs() {
        let p4 = Graph::path(4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let c6 = Graph::cycle(6).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let claw = Graph::star(3).unwrap();

        assert_eq!(domination_number(&p4), 2);
        assert_eq!(domination_number(&c5), 2);
        assert_eq!(domination_number(&claw), 1);
        assert_eq!(total_domination_number(&p4), Ok(2));
        assert_eq!(total_domination_number(&c6), Ok(4));
        assert_eq!(total_domination_number(&k4), Ok(2));
        assert_eq!(k_domination_number(&c5, 2), 3);
        assert_eq!(k_domination_number(&claw, 2), 3);
        assert_eq!(k_domination_number(&k4, 2), 2);
        assert_eq!(k_domination_number(&k4, 3), 3);
        assert_eq!(connected_domination_number(&p4), Ok(2));
        assert_eq!(connected_domination_number(&c5), Ok(3));
        assert_eq!(independent_domination_number(&c5), 2);
        assert_eq!(independent_domination_number(&p4), 2);
        assert_eq!(independent_domination_number(&claw), 1);
    }

    #[test]
    fn petersen_reference_values() {
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(domination_number(&pet), 3);
        assert_eq!(total_domination_number(&pet), Ok(4));
        assert_eq!(connected_domination_number(&pet), Ok(4));
        assert_eq!(independent_domination_number(&pet), 3);
    }

    #[test]
    fn undefined_cases_error() {
        let lonely = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            total_domination_number(&lonely),
            Err(super::super::InvariantError::IsolatedVertex(2))
        );
        assert_eq!(
            connected_domination_number(&lonely),
            Err(super::super::InvariantError::Disconnected)
        );
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        let p4 = Graph::path(4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let claw = Graph::star(3).unwrap();

        let as_vec = |s: VertexSet| s.iter().collect::<Vec<_>>();
        assert_eq!(as_vec(domination_with_witness(&p4).1), vec![0, 2]);
        assert_eq!(as_vec(domination_with_witness(&c5).1), vec![0, 2]);
        assert_eq!(as_vec(total_domination_with_witness(&p4).1), vec![1, 2]);
        assert_eq!(as_vec(k_domination_with_witness(&c5, 2).1), vec![0, 1, 3]);
        assert_eq!(as_vec(k_domination_with_witness(&claw, 2).1), vec![1, 2, 3]);
        assert_eq!(as_vec(connected_domination_with_witness(&p4).1), vec![1, 2]);
        assert_eq!(
            as_vec(connected_domination_with_witness(&c5).1),
            vec![0, 1, 2]
        );
        assert_eq!(
            as_vec(independent_domination_with_witness(&p4).1),
            vec![0, 2]
        );
        assert_eq!(
            as_vec(independent_domination_with_witness(&claw).1),
            vec![0]
        );
    }

    #[test]
    fn matches_bruteforce_on_small_connected_corpus() {
        for line in corpus::EMBEDDED_SELFTEST_CORPUS.lines() {
            let g = parse_graph6(line).unwrap();
            assert_eq!(domination_number(&g), bruteforce::gamma(&g), "{line}");
            assert_eq!(
                total_domination_number(&g).ok(),
                bruteforce::gamma_total(&g),
                "{line}"
            );
            assert_eq!(
                k_domination_number(&g, 2),
                bruteforce::gamma_k(&g, 2),
                "{line}"
            );
            assert_eq!(
                connected_domination_number(&g).ok(),
                bruteforce::gamma_connected(&g),
                "{line}"
            );
            assert_eq!(
                independent_domination_number(&g),
                bruteforce::gamma_independent(&g),
                "{line}"
            );
        }
    }
}
