//! Immutable simple undirected graphs over at most 62 vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest order representable by a [`Graph`] (single-byte graph6 header).
pub const MAX_ORDER: usize = 62;

/// A set of vertices stored as a bitmask; bit `i` is vertex `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex of the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterates every `k`-subset of `{0, …, n-1}` in increasing mask order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n || n > 63 {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets {
        next,
        limit: 1u64 << n,
    }
}

#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        // Gosper's hack: next larger integer with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(VertexSet(cur))
    }
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = alloc::vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            adj: alloc::vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let full = VertexSet::full(n).0;
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(Error::LoopEdge(i));
            }
            for j in VertexSet(row) {
                if rows[j] >> i & 1 == 0 {
                    // asymmetric row; treat as an edge that is out of place
                    return Err(Error::IndexOutOfRange { vertex: j, n });
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// Order.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Size (edge count).
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n()).flat_map(move |v| {
            VertexSet(self.adj[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n()).0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &row)| !row & full & !(1u64 << i))
            .collect();
        Graph {
            adj,
            m: self.n() * (self.n() - 1) / 2 - self.m,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut adj = alloc::vec![0u64; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { adj, m: self.m }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let pendants = degrees.iter().filter(|&&d| d == 1).count();
        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
            pendants,
        }
    }

    pub fn is_regular(&self) -> bool {
        let mut it = (0..self.n()).map(|v| self.degree(v));
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Whether the subgraph induced by `s` is connected.
    pub fn induced_connected(&self, s: VertexSet) -> Result<bool> {
        let start = s.first().ok_or(Error::EmptySet)?;
        if !s.is_subset(self.vertices()) {
            return Err(Error::SetOutOfRange);
        }
        Ok(self.reach(start, s) == s)
    }

    /// Vertex connectivity at least `t`: more than `t` vertices and connected
    /// after deleting any set of fewer than `t` vertices. Brute force.
    pub fn is_k_connected(&self, t: usize) -> bool {
        let n = self.n();
        if t == 0 {
            return true;
        }
        if n <= t {
            return false;
        }
        let all = self.vertices();
        (0..t).all(|size| {
            k_subsets(n, size).all(|removed| {
                let rest = all.difference(removed);
                let start = rest.first().expect("n > t keeps a vertex");
                self.reach(start, rest) == rest
            })
        })
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            out.push(c);
            left = left.difference(c);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    /// δ
    pub min_degree: usize,
    /// Δ
    pub max_degree: usize,
    /// Number of degree-1 vertices.
    pub pendants: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(
            n,
            k_subsets(n, 2).map(|s| {
                let mut it = s.iter();
                (it.next().unwrap(), it.next().unwrap())
            }),
        )
        .unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn construction() {
        let p4 = path(4);
        assert_eq!((p4.n(), p4.m()), (4, 3));
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let p3 = Graph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3, path(3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::from_edges(0, []), Err(Error::EmptyGraph));
        assert!(matches!(Graph::empty(63), Err(Error::OrderTooLarge { .. })));
        assert_eq!(
            Graph::from_adjacency(alloc::vec![0b10, 0]),
            Err(Error::IndexOutOfRange { vertex: 1, n: 2 })
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().m(), 0);
        let c = path(4).complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), [(0, 2), (0, 3), (1, 3)]);
        let c5 = cycle(5).complement();
        assert!(c5.is_regular() && c5.degree(0) == 2 && c5.is_connected());
        assert_eq!(
            crate::canon::canonical_key(&c5),
            crate::canon::canonical_key(&cycle(5))
        );
    }

    #[test]
    fn degree_profiles() {
        let p = path(4).degree_profile();
        assert_eq!((p.min_degree, p.max_degree, p.pendants), (1, 2, 2));
        let p = star(5).degree_profile();
        assert_eq!((p.min_degree, p.max_degree, p.pendants), (1, 4, 4));
        let p = cycle(5).degree_profile();
        assert_eq!((p.min_degree, p.max_degree, p.pendants), (2, 2, 0));
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        assert!(!star(5).complement().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let p4 = path(4);
        assert!(p4
            .induced_connected(VertexSet::from_vertices([0, 1, 2]))
            .unwrap());
        assert!(!p4
            .induced_connected(VertexSet::from_vertices([0, 2]))
            .unwrap());
        assert!(!cycle(5)
            .induced_connected(VertexSet::from_vertices([0, 2, 4]))
            .unwrap());
        assert_eq!(p4.induced_connected(VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn k_connectivity_and_regularity() {
        assert!(cycle(4).is_k_connected(2));
        assert!(!path(4).is_k_connected(2));
        assert!(complete(4).is_k_connected(3));
        assert!(!complete(4).is_k_connected(4));
        assert!(cycle(5).is_regular());
        assert!(!path(4).is_regular());
        assert!(Graph::empty(1).unwrap().is_regular());
    }

    #[test]
    fn subsets_in_mask_order() {
        let v: Vec<u64> = k_subsets(4, 2).map(|s| s.0).collect();
        assert_eq!(v, [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(6, 6).count(), 1);
    }

    #[test]
    fn permute_preserves_structure() {
        let g = path(4).permute(&[3, 1, 0, 2]);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(3, 1) && g.has_edge(1, 0) && g.has_edge(0, 2));
    }
}
