//! Matching number via Edmonds' blossom algorithm, and the edge domination
//! number as a branch-and-bound search for a smallest maximal matching.

use crate::graph::{Graph, VertexSet};

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_masked(g, g.vertices().mask)
}

/// Smallest size of a maximal matching. This equals the minimum size of an
/// edge dominating set.
pub fn edge_domination_number(g: &Graph) -> usize {
    min_maximal_matching(g, &[]).expect("the empty prefix is always extendable")
}

/// Maximum matching size on the subgraph induced by `allowed`.
pub(crate) fn matching_number_masked(g: &Graph, allowed: u64) -> usize {
    let mate = maximum_matching_masked(g, allowed);
    mate.iter().flatten().count() / 2
}

/// Mate table of a maximum matching on the subgraph induced by `allowed`.
/// Entries outside `allowed` stay `None`.
pub(crate) fn maximum_matching_masked(g: &Graph, allowed: u64) -> Vec<Option<usize>> {
    let mut mate = vec![None; g.n()];
    for root in VertexSet::new(allowed).iter() {
        if mate[root].is_none() {
            try_augment(g, allowed, &mut mate, root);
        }
    }
    mate
}

/// One phase of the blossom algorithm: grow an alternating tree from `root`,
/// contracting odd cycles as bases, and flip the augmenting path if an exposed
/// vertex is reached.
fn try_augment(g: &Graph, allowed: u64, mate: &mut [Option<usize>], root: usize) -> bool {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut finish = None;

    'bfs: while let Some(v) = queue.pop_front() {
        let mut rest = g.neighbors(v).mask & allowed;
        while rest != 0 {
            let to = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                let cur = lca(&base, mate, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(&mut parent, &base, mate, &mut blossom, v, cur, to);
                mark_path(&mut parent, &base, mate, &mut blossom, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        finish = Some(to);
                        break 'bfs;
                    }
                    Some(m) => {
                        used[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }

    let Some(mut v) = finish else {
        return false;
    };
    loop {
        let pv = parent[v].expect("augmenting path ends at the exposed root");
        let next = mate[pv];
        mate[v] = Some(pv);
        mate[pv] = Some(v);
        match next {
            Some(x) => v = x,
            None => return true,
        }
    }
}

/// Base vertex of the blossom closing the tree edge between `a` and `b`:
/// walk both tree paths to the root and return the first common base.
fn lca(
    base: &[usize],
    mate: &[Option<usize>],
    parent: &[Option<usize>],
    a: usize,
    b: usize,
) -> usize {
    let mut seen = vec![false; base.len()];
    let mut v = a;
    loop {
        v = base[v];
        seen[v] = true;
        match mate[v] {
            None => break,
            Some(m) => v = parent[m].expect("matched tree vertex has a parent"),
        }
    }
    let mut v = b;
    loop {
        v = base[v];
        if seen[v] {
            return v;
        }
        let m = mate[v].expect("tree path below the base stays matched");
        v = parent[m].expect("matched tree vertex has a parent");
    }
}

fn mark_path(
    parent: &mut [Option<usize>],
    base: &[usize],
    mate: &[Option<usize>],
    blossom: &mut [bool],
    mut v: usize,
    stop: usize,
    mut child: usize,
) {
    while base[v] != stop {
        let m = mate[v].expect("blossom vertices below the base are matched");
        blossom[base[v]] = true;
        blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("matched tree vertex has a parent");
    }
}

/// Maximum matching value plus the optimal matching whose sorted edge list is
/// lexicographically smallest, found by forcing edges in ascending order.
pub(crate) fn maximum_matching_with_witness(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let full = g.vertices().mask;
    let total = matching_number_masked(g, full);
    let mut chosen = Vec::new();
    let mut covered = 0u64;
    for (u, v) in g.edges() {
        let bits = 1u64 << u | 1 << v;
        if covered & bits != 0 {
            continue;
        }
        let rest = matching_number_masked(g, full & !covered & !bits);
        if rest == total - chosen.len() - 1 {
            chosen.push((u, v));
            covered |= bits;
        }
    }
    (total, chosen)
}

/// Smallest maximal matching extending the matching `required`, or `None` when
/// `required` is not a matching of `g`.
pub(crate) fn min_maximal_matching(g: &Graph, required: &[(usize, usize)]) -> Option<usize> {
    let mut covered = 0u64;
    for &(u, v) in required {
        let bits = 1u64 << u | 1 << v;
        if !g.has_edge(u, v) || covered & bits != 0 {
            return None;
        }
        covered |= bits;
    }
    let edges = g.edges();
    let mut best = usize::MAX;
    gamma_edge_bnb(g, &edges, covered, required.len(), &mut best);
    Some(best)
}

fn gamma_edge_bnb(
    g: &Graph,
    edges: &[(usize, usize)],
    covered: u64,
    count: usize,
    best: &mut usize,
) {
    let undominated = edges
        .iter()
        .find(|&&(u, v)| covered & (1u64 << u | 1 << v) == 0);
    let Some(&(u, v)) = undominated else {
        *best = (*best).min(count);
        return;
    };
    // A greedy disjoint family of undominated edges; each future matching edge
    // can dominate at most two of them.
    let mut greedy = 0u64;
    let mut greedy_count = 0usize;
    for &(a, b) in edges {
        let bits = 1u64 << a | 1 << b;
        if covered & bits == 0 && greedy & bits == 0 {
            greedy |= bits;
            greedy_count += 1;
        }
    }
    if count + greedy_count.div_ceil(2) >= *best {
        return;
    }
    // Some chosen edge must touch u or v; branch over every free edge at
    // either endpoint.
    let mut branch = |a: usize, b: usize| {
        let bits = 1u64 << a | 1 << b;
        gamma_edge_bnb(g, edges, covered | bits, count + 1, best);
    };
    for x in VertexSet::new(g.neighbors(u).mask & !covered).iter() {
        branch(u, x);
    }
    for y in VertexSet::new(g.neighbors(v).mask & !covered).iter() {
        if y != u {
            branch(v, y);
        }
    }
}

/// Edge domination value plus the smallest maximal matching whose sorted edge
/// list is lexicographically smallest.
pub(crate) fn min_maximal_matching_with_witness(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let target = edge_domination_number(g);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut covered = 0u64;
    for (u, v) in g.edges() {
        if chosen.len() == target {
            break;
        }
        let bits = 1u64 << u | 1 << v;
        if covered & bits != 0 {
            continue;
        }
        let mut attempt = chosen.clone();
        attempt.push((u, v));
        if min_maximal_matching(g, &attempt) == Some(target) {
            chosen = attempt;
            covered |= bits;
        }
    }
    (target, chosen)
}
