//! Small simple graphs stored as symmetric adjacency bit rows.

use core::fmt;

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 12;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(((1u32 << n) - 1) as u16)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 16 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Shortest-path length between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    /// The vertices lie in different components.
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// A simple undirected graph on `1..=MAX_VERTICES` vertices.
///
/// Row `v` of `adj` holds the open neighborhood of `v`. Rows are kept
/// symmetric with an empty diagonal by every constructor and mutator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).without(u).bits();
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from open neighborhoods, rejecting asymmetric lists.
    pub fn from_neighborhoods(rows: &[VertexSet]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        for (u, row) in rows.iter().enumerate() {
            for v in row.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if !rows[v].contains(u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
            g.adj[u] = row.bits();
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexCount(n));
        }
        let edges: alloc::vec::Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: alloc::vec::Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        let edges: alloc::vec::Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.open_neighborhood(u).iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertices reachable from `v`, including `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.open_neighborhood(u));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> [Option<u8>; MAX_VERTICES] {
        let mut dist = [None; MAX_VERTICES];
        dist[source] = Some(0);
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        let mut d = 0u8;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.open_neighborhood(u));
            }
            frontier = next.difference(seen);
            for u in frontier {
                dist[u] = Some(d);
            }
            seen = seen.union(frontier);
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        match self.distances_from(u)[v] {
            Some(d) => Distance::Finite(d as usize),
            None => Distance::Infinite,
        }
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for u in 0..self.n() {
            let dist = self.distances_from(u);
            for d in &dist[..self.n()] {
                match d {
                    Some(d) => best = best.max(*d as usize),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let order: alloc::vec::Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(order.len())?;
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// Deletes `v`; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.induced(self.vertices().without(v))
    }

    /// Appends a vertex with the given neighborhood and returns its index.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<(Graph, usize), GraphError> {
        let n = self.n();
        if n >= MAX_VERTICES {
            return Err(GraphError::VertexCount(n + 1));
        }
        if !neighbors.is_subset(self.vertices()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: neighbors.difference(self.vertices()).first().unwrap_or(n),
                n,
            });
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = neighbors.bits();
        for u in neighbors {
            g.adj[u] |= 1 << n;
        }
        Ok((g, n))
    }

    /// Vertices of degree one.
    pub fn ends(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}
