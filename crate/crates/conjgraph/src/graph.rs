//! Undirected simple graphs on at most 64 vertices, stored as bitset adjacency
//! rows. Vertex labels are `0..n` and are preserved by every operation here;
//! nothing in this crate canonicalizes or relabels behind the caller's back.

use crate::invariants;
use thiserror::Error;

/// Hard cap on graph order: one adjacency row per vertex fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex sets must be disjoint")]
    SetsOverlap,
    #[error("vertex set contains vertices outside the graph")]
    SetOutOfRange,
}

/// A set of vertices as a 64-bit mask. Bit `v` set means vertex `v` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    pub mask: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { mask: 0 };

    pub fn new(mask: u64) -> VertexSet {
        VertexSet { mask }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet { mask: 1 << v }
    }

    /// All vertices of a graph on `n` vertices.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet { mask: u64::MAX }
        } else {
            VertexSet {
                mask: (1u64 << n) - 1,
            }
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.mask >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.mask |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.mask &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask & !other.mask,
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint_from(self, other: VertexSet) -> bool {
        self.mask & other.mask == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Undirected simple graph on `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, `n <= 64`.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet { mask: self.adj[v] }
    }

    /// Closed neighborhood `N[v] = N(v) + v`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            mask: self.adj[v] | 1 << v,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !VertexSet::full(u + 1).mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Subgraph induced by `s`, with labels re-packed to `0..s.len()`.
    /// The returned map sends new labels to the original ones, ascending.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if !s.is_subset_of(self.vertices()) {
            return Err(GraphError::SetOutOfRange);
        }
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(map.len())?;
        for (new_u, &old_u) in map.iter().enumerate() {
            for (new_v, &old_v) in map.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.add_edge(new_u, new_v)?;
                }
            }
        }
        Ok((g, map))
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets must be disjoint subsets of the vertex set.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> Result<usize, GraphError> {
        if !a.is_disjoint_from(b) {
            return Err(GraphError::SetsOverlap);
        }
        if !a.union(b).is_subset_of(self.vertices()) {
            return Err(GraphError::SetOutOfRange);
        }
        let mut count = 0;
        for u in a.iter() {
            count += (self.adj[u] & b.mask).count_ones() as usize;
        }
        Ok(count)
    }

    // ---- structural predicates ----

    /// Connectivity by breadth-first search from vertex 0.
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertices().mask
    }

    /// Two-colorability by breadth-first search, per component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let mut rest = self.adj[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if color[w] == 2 {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// `Some(r)` iff every vertex has degree exactly `r`. Edgeless graphs are
    /// 0-regular; the empty graph is not considered regular.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// No induced star K_{1,r}: every open neighborhood has independence
    /// number at most `r - 1`.
    pub fn is_k1r_free(&self, r: usize) -> bool {
        assert!(r >= 1, "K_{{1,r}}-freeness needs r >= 1");
        (0..self.n).all(|v| {
            let (nbhd, _) = self
                .induced_subgraph(self.neighbors(v))
                .expect("neighborhood is a valid vertex set");
            invariants::independence_number(&nbhd) < r
        })
    }

    pub fn is_claw_free(&self) -> bool {
        self.is_k1r_free(3)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v] == 0)
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            tree: self.is_tree(),
            regular: self.regularity(),
            claw_free: self.is_claw_free(),
            triangle_free: self.is_triangle_free(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
        }
    }

    // ---- small named constructors used across the crate ----

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange {
                vertex: n,
                order: n,
            });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Star K_{1,leaves} with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(leaves + 1)?;
        for v in 1..=leaves {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Snapshot of the structural predicates the theorem registry and conjecture
/// engine condition on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub connected: bool,
    pub bipartite: bool,
    pub tree: bool,
    pub regular: Option<usize>,
    pub claw_free: bool,
    pub triangle_free: bool,
    pub min_degree: usize,
    pub max_degree: usize,
}
