//! Undirected simple graphs on at most 64 vertices.
//!
//! A graph is stored as one adjacency bitmask per vertex, so vertex sets,
//! neighborhoods and component floods are single-word operations. All
//! values are immutable after construction and cheap to clone.

use crate::error::{Error, Result};

/// Hard limit on the number of vertices: a vertex set fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices as a bitmask over `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut mask = 0u64;
        for v in iter {
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Iterate members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

/// An undirected simple graph: no loops, no multiple edges, `1 <= n <= 64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Infeasible("cycle needs at least 3 vertices".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    /// The path `P_n`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// The star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    /// The complete bipartite graph `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner 5-cycle of chords 5..9.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10).expect("order 10");
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5).expect("outer cycle");
            g.add_edge(v, v + 5).expect("spoke");
            g.add_edge(v + 5, (v + 2) % 5 + 5).expect("inner chords");
        }
        g
    }

    /// Build from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Infeasible("loops are not allowed".into()));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Dense 0/1 adjacency matrix (for quotient computations).
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| i64::from(self.has_edge(u, v))).collect())
            .collect()
    }

    /// Disjoint union `G ∪ H`: vertices of `H` are shifted past those of `G`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Join `G ∨ H`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Subgraph induced on the complement of `removed` (labels compacted,
    /// preserving relative order).
    pub fn remove_vertices(&self, removed: VertexSet) -> Result<Graph> {
        let keep = VertexSet(VertexSet::full(self.n).0 & !removed.0);
        if keep.is_empty() {
            return Err(Error::RemovedAll);
        }
        let verts: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Number of connected components after deleting `removed` (which must
    /// be a proper subset of the vertex set).
    pub fn components(&self, removed: VertexSet) -> Result<usize> {
        let alive = VertexSet::full(self.n).0 & !removed.0;
        if alive == 0 {
            return Err(Error::RemovedAll);
        }
        let mut unseen = alive;
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[v] & alive;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            unseen &= !comp;
        }
        Ok(count)
    }

    pub fn is_connected(&self) -> bool {
        self.components(VertexSet::EMPTY) == Ok(1)
    }

    /// Bitmask of the component containing `start`, within `alive` vertices.
    pub(crate) fn component_of(&self, start: usize, alive: u64) -> u64 {
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & alive;
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { index: v, order: self.n })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_has_no_cross_edges() {
        let g = Graph::complete(1).unwrap().disjoint_union(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 0);
        assert_eq!(g.components(VertexSet::EMPTY).unwrap(), 2);
    }

    #[test]
    fn union_component_count() {
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.components(VertexSet::EMPTY).unwrap(), 2);
    }

    #[test]
    fn join_closed_forms() {
        // K1 ∨ K1 = K2
        let k2 = Graph::complete(1).unwrap().join(&Graph::complete(1).unwrap()).unwrap();
        assert!(k2.is_complete());
        // K1 ∨ 2K1 = P3
        let two_k1 = Graph::empty(2).unwrap();
        let p3 = Graph::complete(1).unwrap().join(&two_k1).unwrap();
        assert_eq!(p3.degree_sequence(), vec![1, 1, 2]);
        // Ks ∨ Kt = K_{s+t}
        let k5 = Graph::complete(2).unwrap().join(&Graph::complete(3).unwrap()).unwrap();
        assert!(k5.is_complete());
    }

    #[test]
    fn join_edge_count_identity() {
        for (a, b) in [(1usize, 1usize), (2, 3), (4, 5), (3, 3)] {
            let g = Graph::cycle(a.max(3)).unwrap();
            let h = Graph::path(b).unwrap();
            let j = g.join(&h).unwrap();
            assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        }
    }

    #[test]
    fn component_counting_named_cases() {
        // C6 minus three pairwise nonadjacent vertices leaves 3 isolated ones.
        let c6 = Graph::cycle(6).unwrap();
        let removed = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(c6.components(removed).unwrap(), 3);
        // K_n minus any proper subset stays connected.
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.components(VertexSet::from_iter([1, 3, 5])).unwrap(), 1);
        // Star minus its center isolates the leaves.
        let star = Graph::star(5).unwrap();
        assert_eq!(star.components(VertexSet::singleton(0)).unwrap(), 4);
    }

    #[test]
    fn removing_everything_is_rejected() {
        let g = Graph::complete(3).unwrap();
        assert!(g.components(VertexSet::full(3)).is_err());
    }

    #[test]
    fn size_cap_enforced() {
        assert!(Graph::empty(65).is_err());
        let g = Graph::empty(40).unwrap();
        assert!(g.disjoint_union(&Graph::empty(30).unwrap()).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.size(), 15);
        assert!(p.is_regular());
        assert_eq!(p.degree(0), 3);
    }
}
