//! Directed graphs without loops on at most 64 vertices.

use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};

/// A digraph: `adj[u]` holds a bit for every arc `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Digraph> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Digraph { n, adj: vec![0; n] })
    }

    /// The complete digraph: both arcs between every pair.
    pub fn complete(n: usize) -> Result<Digraph> {
        let mut d = Digraph::empty(n)?;
        let full = VertexSet::full(n).0;
        for v in 0..n {
            d.adj[v] = full & !(1u64 << v);
        }
        Ok(d)
    }

    /// The directed cycle `0 -> 1 -> .. -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Digraph> {
        if n < 2 {
            return Err(Error::Infeasible("directed cycle needs at least 2 vertices".into()));
        }
        let mut d = Digraph::empty(n)?;
        for v in 0..n {
            d.add_arc(v, (v + 1) % n)?;
        }
        Ok(d)
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        let mut d = Digraph::empty(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Rebuild from raw adjacency rows (used by the labeled enumerator).
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Digraph {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        Digraph { n, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of arcs.
    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum()
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { index: u.max(v), order: self.n });
        }
        if u == v {
            return Err(Error::Infeasible("loops are not allowed".into()));
        }
        self.adj[u] |= 1u64 << v;
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { index: u.max(v), order: self.n });
        }
        self.adj[u] &= !(1u64 << v);
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| i64::from(self.has_arc(u, v))).collect())
            .collect()
    }

    /// Digraph join `D1 ∇ D2`: disjoint union plus both arcs between every
    /// cross pair.
    pub fn digraph_join(&self, other: &Digraph) -> Result<Digraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(n).0 & !left;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|row| row | right));
        adj.extend(other.adj.iter().map(|row| row << self.n | left));
        Ok(Digraph { n, adj })
    }

    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Digraph { n, adj })
    }

    /// Strongly connected components of the digraph restricted to the
    /// complement of `removed`, in Tarjan's discovery order. Each component
    /// is a bitmask over the original labels.
    pub fn strong_components(&self, removed: VertexSet) -> Result<Vec<u64>> {
        let alive = VertexSet::full(self.n).0 & !removed.0;
        if alive == 0 {
            return Err(Error::RemovedAll);
        }
        let mut state = Tarjan {
            adj: &self.adj,
            alive,
            index: 0,
            idx: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            on_stack: 0,
            stack: Vec::new(),
            comps: Vec::new(),
        };
        for v in 0..self.n {
            if alive >> v & 1 == 1 && state.idx[v] == usize::MAX {
                state.connect(v);
            }
        }
        Ok(state.comps)
    }

    /// Number of strongly connected components of `D - removed`.
    pub fn scc_count(&self, removed: VertexSet) -> Result<usize> {
        Ok(self.strong_components(removed)?.len())
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.scc_count(VertexSet::EMPTY) == Ok(1)
    }

    /// Condensation of `D - removed`: the component list together with the
    /// arcs between distinct components, and a topological order of the
    /// components (arcs always point from earlier to later in the order).
    pub fn condensation(&self, removed: VertexSet) -> Result<Condensation> {
        let comps = self.strong_components(removed)?;
        let k = comps.len();
        let find = |v: usize| comps.iter().position(|&c| c >> v & 1 == 1).expect("vertex in some component");
        let mut arcs = Vec::new();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut indeg = vec![0usize; k];
        let alive = VertexSet::full(self.n).0 & !removed.0;
        for u in 0..self.n {
            if alive >> u & 1 == 0 {
                continue;
            }
            let cu = find(u);
            for v in VertexSet(self.adj[u] & alive).iter() {
                let cv = find(v);
                if cu != cv && !out[cu].contains(&cv) {
                    out[cu].push(cv);
                    indeg[cv] += 1;
                    arcs.push((cu, cv));
                }
            }
        }
        // Kahn's algorithm; the condensation of any digraph is acyclic.
        let mut order = Vec::with_capacity(k);
        let mut queue: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        while let Some(c) = queue.pop() {
            order.push(c);
            for &d in &out[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push(d);
                }
            }
        }
        let acyclic = order.len() == k;
        Ok(Condensation { components: comps, arcs, topo_order: order, acyclic })
    }
}

/// Result of condensing a digraph into its strongly connected components.
#[derive(Clone, Debug)]
pub struct Condensation {
    /// Component vertex masks.
    pub components: Vec<u64>,
    /// Arcs between distinct components, as component indices.
    pub arcs: Vec<(usize, usize)>,
    /// A topological order of the component indices.
    pub topo_order: Vec<usize>,
    /// Whether a full topological order exists (always true for a genuine
    /// condensation; kept as an explicit sanity flag).
    pub acyclic: bool,
}

struct Tarjan<'a> {
    adj: &'a [u64],
    alive: u64,
    index: usize,
    idx: Vec<usize>,
    low: Vec<usize>,
    on_stack: u64,
    stack: Vec<usize>,
    comps: Vec<u64>,
}

impl Tarjan<'_> {
    fn connect(&mut self, v: usize) {
        self.idx[v] = self.index;
        self.low[v] = self.index;
        self.index += 1;
        self.stack.push(v);
        self.on_stack |= 1u64 << v;

        let mut ws = self.adj[v] & self.alive;
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            if self.idx[w] == usize::MAX {
                self.connect(w);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack >> w & 1 == 1 {
                self.low[v] = self.low[v].min(self.idx[w]);
            }
        }

        if self.low[v] == self.idx[v] {
            let mut comp = 0u64;
            loop {
                let w = self.stack.pop().expect("stack non-empty at SCC root");
                self.on_stack &= !(1u64 << w);
                comp |= 1u64 << w;
                if w == v {
                    break;
                }
            }
            self.comps.push(comp);
        }
    }
}
