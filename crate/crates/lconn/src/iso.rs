//! Canonical forms and isomorphism testing.
//!
//! The canonical form of a graph on `n <= 16` vertices is the maximum,
//! over all vertex orderings, of the upper-triangle adjacency bitstring in
//! column order (the same bit order as graph6). The search places one
//! vertex at a time, branches only on orderings whose next column of bits
//! is maximal, prunes against the best complete string found so far, and
//! skips branches that differ from an explored sibling by a twin swap.
//! This is exhaustive and exact; refinement keeps it fast at the orders
//! the enumerator uses (n <= 12 or so).

use crate::graph::{Graph, VertexSet};

/// Largest order the canonical code supports: C(16,2) = 120 bits fit u128.
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Clone, Copy)]
enum Goal {
    /// Find the maximum string.
    Max,
    /// Decide whether `target` is attainable (used for augmentation).
    Reach(u128),
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    forced_last: Option<usize>,
    goal: Goal,
    best: u128,
    have_best: bool,
    reached: bool,
    placed: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        self.descend(0, 0, VertexSet::EMPTY.0);
    }

    fn descend(&mut self, prefix: u128, bits: u32, placed_mask: u64) {
        let depth = self.placed.len();
        if depth == self.n {
            match self.goal {
                Goal::Max => {
                    if !self.have_best || prefix > self.best {
                        self.best = prefix;
                        self.have_best = true;
                    }
                }
                Goal::Reach(target) => {
                    if prefix == target {
                        self.reached = true;
                    }
                }
            }
            return;
        }

        let width = depth as u32;
        let mut pool: Vec<usize> = (0..self.n).filter(|&v| placed_mask >> v & 1 == 0).collect();
        if pool.len() > 1 {
            if let Some(last) = self.forced_last {
                pool.retain(|&v| v != last);
            }
        }

        // Column of adjacency bits towards the already-placed vertices,
        // earliest placement most significant.
        let chunk = |v: usize| -> u64 {
            let mut c = 0u64;
            for &p in &self.placed {
                c = c << 1 | u64::from(self.g.has_edge(v, p));
            }
            c
        };

        let mx = pool.iter().map(|&v| chunk(v)).max().expect("pool non-empty");
        let prefix = prefix << width | u128::from(mx);
        let bits = bits + width;

        let bound = match self.goal {
            Goal::Max if self.have_best => Some(self.best),
            Goal::Max => None,
            Goal::Reach(target) => Some(target),
        };
        if let Some(b) = bound {
            let top = b >> (self.total_bits - bits);
            if prefix < top {
                return;
            }
            if matches!(self.goal, Goal::Reach(_)) && prefix > top {
                // Restricted orderings can never exceed the global maximum.
                return;
            }
        }

        let mut tried: Vec<usize> = Vec::new();
        for &v in &pool {
            if matches!(self.goal, Goal::Reach(_)) && self.reached {
                return;
            }
            if chunk(v) != mx {
                continue;
            }
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            self.placed.push(v);
            self.descend(prefix, bits, placed_mask | 1 << v);
            self.placed.pop();
        }
    }

    /// Swapping twins is an automorphism, so sibling branches that differ
    /// only by a twin swap generate identical string sets.
    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = !(1u64 << u | 1u64 << v);
        self.g.neighbors(u).0 & strip == self.g.neighbors(v).0 & strip
    }
}

/// Canonical code of `g` (`n <= 16`): the graph6 body bits of the
/// canonically relabeled graph, packed most-significant-first.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical code supports n <= {MAX_CANON_ORDER}");
    let mut s = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        forced_last: None,
        goal: Goal::Max,
        best: 0,
        have_best: false,
        reached: false,
        placed: Vec::with_capacity(n),
    };
    s.run();
    s.best
}

/// Whether some maximal ordering places `v` last, i.e. `v` lies in the
/// orbit of the canonical deletion vertex. `code` must be
/// `canonical_code(g)`.
pub fn can_place_last(g: &Graph, v: usize, code: u128) -> bool {
    let n = g.order();
    if n == 1 {
        return true;
    }
    let mut s = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        forced_last: Some(v),
        goal: Goal::Reach(code),
        best: 0,
        have_best: false,
        reached: false,
        placed: Vec::with_capacity(n),
    };
    s.run();
    s.reached
}

/// Isomorphism test. Cheap invariants first, then canonical codes for
/// orders up to 16 and a refinement-guided backtracking match above that.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if g == h {
        return true;
    }
    if g.order() <= MAX_CANON_ORDER {
        return canonical_code(g) == canonical_code(h);
    }
    backtrack_match(g, h)
}

/// Plain injective-extension search, adequate for the occasional large
/// instance (the toolkit's enumeration never exceeds order 10).
fn backtrack_match(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut u64) -> bool {
        let n = g.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if *used >> w & 1 == 1 || g.degree(v) != h.degree(w) {
                continue;
            }
            let ok = (0..v).all(|p| g.has_edge(v, p) == h.has_edge(w, map[p]));
            if ok {
                map[v] = w;
                *used |= 1 << w;
                if extend(g, h, v + 1, map, used) {
                    return true;
                }
                *used &= !(1 << w);
                map[v] = usize::MAX;
            }
        }
        false
    }
    extend(g, h, 0, &mut map, &mut used)
}

/// Canonical code for digraphs: maximum over all vertex orderings of the
/// row-major adjacency bitstring. Exhaustive over permutations, so capped
/// at order 8 (the digraph enumerator stays at order 5).
pub fn digraph_canonical_code(d: &crate::digraph::Digraph) -> u128 {
    let n = d.order();
    assert!(n <= 8, "digraph canonical code supports n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u128;
    let mut first = true;
    loop {
        let mut code = 0u128;
        for &u in &perm {
            for &v in &perm {
                code = code << 1 | u128::from(d.has_arc(u, v));
            }
        }
        if first || code > best {
            best = code;
            first = false;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

pub fn is_digraph_isomorphic(d1: &crate::digraph::Digraph, d2: &crate::digraph::Digraph) -> bool {
    d1.order() == d2.order()
        && d1.arc_count() == d2.arc_count()
        && digraph_canonical_code(d1) == digraph_canonical_code(d2)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(g.order()).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        h
    }

    #[test]
    fn named_pairs() {
        let p3 = Graph::path(3).unwrap();
        let star = Graph::complete(1).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        assert!(is_isomorphic(&p3, &star));
        assert!(!is_isomorphic(&Graph::complete(3).unwrap(), &p3));
    }

    #[test]
    fn relabelings_are_isomorphic() {
        let g = Graph::petersen();
        let perm = [3, 1, 4, 0, 9, 5, 8, 2, 7, 6];
        assert!(is_isomorphic(&g, &relabel(&g, &perm)));
        assert_eq!(canonical_code(&g), canonical_code(&relabel(&g, &perm)));
    }

    #[test]
    fn symmetric_graphs_stay_fast() {
        // Highly symmetric inputs rely on twin skipping.
        let k12 = Graph::complete(12).unwrap();
        let e12 = Graph::empty(12).unwrap();
        assert_ne!(canonical_code(&k12), canonical_code(&e12));
        let kb = Graph::complete_bipartite(6, 6).unwrap();
        let _ = canonical_code(&kb);
        let c12 = Graph::cycle(12).unwrap();
        assert_eq!(canonical_code(&c12), canonical_code(&relabel(&c12, &[5, 0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10])));
    }

    #[test]
    fn can_place_last_tracks_orbits() {
        // In a star, the center is never the canonical deletion vertex
        // once n >= 3, while every leaf is.
        let star = Graph::star(5).unwrap();
        let code = canonical_code(&star);
        assert!(!can_place_last(&star, 0, code));
        assert!(can_place_last(&star, 3, code));
        // Vertex-transitive: every vertex works.
        let c5 = Graph::cycle(5).unwrap();
        let code = canonical_code(&c5);
        assert!((0..5).all(|v| can_place_last(&c5, v, code)));
    }

    #[test]
    fn digraph_codes_distinguish_orientations() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        let k3 = Digraph::complete(3).unwrap();
        assert!(!is_digraph_isomorphic(&c3, &k3));
        let relabeled = Digraph::from_arcs(3, &[(1, 0), (0, 2), (2, 1)]).unwrap();
        assert!(is_digraph_isomorphic(&c3, &relabeled));
    }
}
