//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are the dense indices `0..n`. Each vertex owns one `u64`
//! adjacency row, so neighbourhood tests and set algebra are single word
//! operations. A [`Graph`] is immutable once built; edges are added through
//! [`GraphBuilder`].

mod enumerate;
mod graph6;
pub(crate) mod set;

pub use enumerate::{edge_count_for_order, enumerate_labeled, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use graph6::{parse_graph6, parse_graph6_line, to_graph6, GRAPH6_HEADER, MAX_GRAPH6_ORDER};
pub use set::{Iter as VertexSetIter, VertexSet};

use crate::error::{Error, Result};

/// Largest order any [`Graph`] can have.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Mutable edge accumulator that freezes into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(GraphBuilder { n, adj: vec![0; n] })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph { n: self.n, adj: self.adj }
    }
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges.
    /// Repeated pairs collapse to one edge.
    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Edgeless graph on `n` vertices (`K_n^c`).
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        let all = VertexSet::full(n).bits();
        Graph { n, adj: (0..n).map(|v| all & !(1 << v)).collect() }
    }

    /// The cycle `0-1-..-(n-1)-0`. Panics when `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::with_edges(n, &edges).expect("cycle edges are in range")
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::with_edges(n, &edges).expect("path edges are in range")
    }

    /// Star with centre `0` and `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::with_edges(n, &edges).expect("star edges are in range")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b)).expect("order within limit")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::with_edges(10, &edges).expect("petersen edges are in range")
    }

    /// The graph on `n` vertices whose edge `i` is present iff bit `i` of
    /// `mask` is set, edges indexed in graph6 column order
    /// `(0,1), (0,2), (1,2), (0,3), ..`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        assert!(n <= 11, "edge masks cover at most 11 vertices");
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if (mask >> bit) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Graph { n, adj }
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= 11, "edge masks cover at most 11 vertices");
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| VertexSet::from_bits(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v)))
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n).map(|v| self.degree(v)).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        (0..self.n).map(|v| self.degree(v)).max().ok_or(Error::EmptyGraph)
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        Graph { n: self.n, adj: self.adj.iter().enumerate().map(|(v, row)| !row & all & !(1 << v)).collect() }
    }

    /// Disjoint union plus every edge between the parts. Vertices of `self`
    /// keep their indices; those of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`. The returned map sends each new index to the
    /// original vertex; members keep their relative order.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(s)?;
        let map = s.to_vec();
        let adj = map
            .iter()
            .map(|&u| {
                map.iter().enumerate().filter(|&(_, &v)| self.has_edge(u, v)).fold(0u64, |row, (i, _)| row | 1 << i)
            })
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!("permutation of length {} for order {}", perm.len(), self.n)));
        }
        let image: VertexSet = perm.iter().collect();
        if perm.iter().any(|&p| p >= self.n) || image.len() != self.n {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Every pair in `s` is adjacent. Members must be in range; out-of-range
    /// members make the answer `false`.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertices()) && s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// No pair in `s` is adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertices()) && s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else { return true };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet::from_bits(next).intersection(s).difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_subset(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Checks the representation invariants: rows confined to `0..n`,
    /// symmetric, loop-free.
    pub fn is_well_formed(&self) -> bool {
        let all = VertexSet::full(self.n).bits();
        self.adj.len() == self.n
            && self.adj.iter().enumerate().all(|(u, &row)| {
                row & !all == 0
                    && (row >> u) & 1 == 0
                    && VertexSet::from_bits(row).iter().all(|v| (self.adj[v] >> u) & 1 == 1)
            })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, self.to_graph6_string())
    }
}

impl Graph {
    /// graph6 text for graphs within the codec's range, otherwise an edge list.
    pub fn to_graph6_string(&self) -> String {
        match to_graph6(self) {
            Ok(bytes) => String::from_utf8(bytes).expect("graph6 is ASCII"),
            Err(_) => format!("{:?}", self.edges().collect::<Vec<_>>()),
        }
    }
}
