//! Exact Steiner distances.
//!
//! The Steiner distance `d(S)` of a nonempty vertex set `S` is the minimum
//! number of edges of a subtree containing `S`, equivalently
//! `min { |T| - 1 : S ⊆ T, G[T] connected }`. Singletons have distance 0.
//!
//! Three independent routes are provided:
//!
//! * [`steiner_all_subsets`] fills a table for every nonempty set by marking
//!   connected vertex sets and propagating minima down to subsets
//!   (a superset-min transform), `O(2^n · n)`;
//! * [`steiner_single`] runs the Dreyfus–Wagner terminal-subset DP for one
//!   query, usable on graphs too large for a full table;
//! * [`steiner_oracle`] enumerates supersets by increasing size, meant only as
//!   a test oracle.
//!
//! Sets spanning several components have infinite distance, reported as
//! `None`.

use alloc::vec::Vec;

use crate::graph::{k_subsets, Graph, VertexSet};
use crate::{Error, Result};

/// Default order limit for [`steiner_all_subsets`].
pub const DEFAULT_TABLE_CAP: usize = 20;

const INFINITE: u8 = u8::MAX;

/// Steiner distance of every nonempty vertex set of a graph, indexed by mask.
#[derive(Clone, PartialEq, Eq)]
pub struct SteinerTable {
    n: usize,
    dist: Vec<u8>,
}

impl SteinerTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `d(S)`, or `None` when `S` meets several components.
    ///
    /// # Panics
    ///
    /// If `s` is empty or not a subset of the vertex range.
    #[inline]
    pub fn get(&self, s: VertexSet) -> Option<usize> {
        assert!(!s.is_empty(), "Steiner distance of the empty set");
        let d = self.dist[s.0 as usize];
        (d != INFINITE).then_some(d as usize)
    }

    /// Iterates `(S, d(S))` over all nonempty sets in mask order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, Option<usize>)> + '_ {
        (1..self.dist.len()).map(move |m| {
            let d = self.dist[m];
            (VertexSet(m as u64), (d != INFINITE).then_some(d as usize))
        })
    }
}

impl core::fmt::Debug for SteinerTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SteinerTable")
            .field("n", &self.n)
            .field("entries", &(self.dist.len() - 1))
            .finish()
    }
}

/// Full Steiner table with the default order cap.
pub fn steiner_all_subsets(g: &Graph) -> Result<SteinerTable> {
    steiner_all_subsets_capped(g, DEFAULT_TABLE_CAP)
}

pub fn steiner_all_subsets_capped(g: &Graph, cap: usize) -> Result<SteinerTable> {
    let n = g.n();
    if n > cap.min(30) {
        return Err(Error::OrderTooLarge {
            n,
            max: cap.min(30),
        });
    }
    let size = 1usize << n;
    let rows = g.rows();

    // dist[T] = |T| - 1 for connected T. T is connected iff some v in T has a
    // neighbour in T \ {v} and T \ {v} is connected (a connected graph always
    // has a non-cut vertex).
    let mut dist = alloc::vec![INFINITE; size];
    for t in 1..size {
        let tm = t as u64;
        if tm & (tm - 1) == 0 {
            dist[t] = 0;
            continue;
        }
        let connected = VertexSet(tm).iter().any(|v| {
            let rest = tm & !(1 << v);
            rows[v] & rest != 0 && dist[rest as usize] != INFINITE
        });
        if connected {
            dist[t] = (tm.count_ones() - 1) as u8;
        }
    }

    // Superset-min transform: dist[S] = min over T ⊇ S.
    for b in 0..n {
        let bit = 1usize << b;
        for s in 0..size {
            if s & bit == 0 {
                let up = dist[s | bit];
                if up < dist[s] {
                    dist[s] = up;
                }
            }
        }
    }
    dist[0] = 0;
    Ok(SteinerTable { n, dist })
}

/// Shortest-path distances between all pairs, by BFS from every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHED: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.d[u * self.n + v];
        (d != UNREACHED).then_some(d as usize)
    }

    #[inline]
    fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }
}

pub fn pairwise_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = alloc::vec![UNREACHED; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= g.rows()[v];
            }
            next &= !seen;
            for v in VertexSet(next) {
                row[v] = level;
            }
            seen |= next;
            frontier = next;
        }
    }
    DistanceMatrix { n, d }
}

/// Dreyfus–Wagner for a single terminal set.
pub fn steiner_single(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    let dm = pairwise_distances(g);
    steiner_single_with(g, &dm, s)
}

/// Dreyfus–Wagner reusing a precomputed distance matrix of `g`.
pub fn steiner_single_with(g: &Graph, dm: &DistanceMatrix, s: VertexSet) -> Result<Option<usize>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::SetOutOfRange);
    }
    let terminals: Vec<usize> = s.iter().collect();
    let k = terminals.len();
    if k == 1 {
        return Ok(Some(0));
    }
    let n = g.n();
    const INF: u32 = u32::MAX / 4;
    let dist = |u: usize, v: usize| match dm.raw(u, v) {
        UNREACHED => INF,
        d => d,
    };

    // best[D * n + v]: fewest edges of a tree spanning terminals D plus v.
    let states = 1usize << k;
    let mut best = alloc::vec![INF; states * n];
    for (i, &t) in terminals.iter().enumerate() {
        let base = (1 << i) * n;
        for v in 0..n {
            best[base + v] = dist(t, v);
        }
    }
    let mut merged = alloc::vec![INF; n];
    for d in 1..states {
        if d & (d - 1) == 0 {
            continue;
        }
        // Merge: split D at v into two nonempty parts; fixing the lowest
        // terminal in one part visits each split once.
        let low = d & d.wrapping_neg();
        let rest = d ^ low;
        for v in 0..n {
            let mut m = INF;
            let mut sub = rest;
            loop {
                let a = sub | low;
                if a != d {
                    let c = best[a * n + v] + best[(d ^ a) * n + v];
                    if c < m {
                        m = c;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            merged[v] = m;
        }
        // Grow: attach v to the tree rooted at u by a shortest path.
        let base = d * n;
        for v in 0..n {
            let mut m = merged[v];
            for (u, &mu) in merged.iter().enumerate() {
                let c = mu + dist(u, v);
                if c < m {
                    m = c;
                }
            }
            best[base + v] = m;
        }
    }
    let answer = best[(states - 1) * n + terminals[0]];
    Ok((answer < INF).then_some(answer as usize))
}

/// Literal transcription of the definition: the smallest connected
/// superset of `s` determines the distance. Exponential; tests only.
pub fn steiner_oracle(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::SetOutOfRange);
    }
    let others: Vec<usize> = g.vertices().difference(s).iter().collect();
    for extra in 0..=others.len() {
        for pick in k_subsets(others.len(), extra) {
            let t = pick.iter().fold(s, |acc, i| acc.insert(others[i]));
            if g.induced_connected(t)? {
                return Ok(Some(t.len() - 1));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn table_examples() {
        let t = steiner_all_subsets(&path(3)).unwrap();
        assert_eq!(t.get(set(&[0, 2])), Some(2));
        assert_eq!(t.get(set(&[0, 1, 2])), Some(2));
        let t = steiner_all_subsets(&star(5)).unwrap();
        assert_eq!(t.get(set(&[1, 2, 3])), Some(3));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = steiner_all_subsets(&two_edges).unwrap();
        assert_eq!(t.get(set(&[0, 2])), None);
        assert_eq!(t.get(set(&[2, 3])), Some(1));
    }

    #[test]
    fn table_cap() {
        let g = path(21);
        assert_eq!(
            steiner_all_subsets(&g),
            Err(Error::OrderTooLarge { n: 21, max: 20 })
        );
        assert!(steiner_all_subsets_capped(&path(9), 8).is_err());
    }

    #[test]
    fn single_examples() {
        assert_eq!(steiner_single(&path(4), set(&[0, 3])), Ok(Some(3)));
        for s in k_subsets(4, 3) {
            assert_eq!(steiner_single(&complete(4), s), Ok(Some(2)));
        }
        assert_eq!(steiner_single(&cycle(5), set(&[0, 2, 4])), Ok(Some(3)));
        assert_eq!(
            steiner_single(&path(4), VertexSet::EMPTY),
            Err(Error::EmptySet)
        );
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(steiner_single(&two_edges, set(&[0, 1, 3])), Ok(None));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(steiner_oracle(&path(3), set(&[0, 2])), Ok(Some(2)));
        assert_eq!(steiner_oracle(&star(5), set(&[1, 2, 3, 4])), Ok(Some(4)));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(steiner_oracle(&k1, set(&[0])), Ok(Some(0)));
        assert_eq!(steiner_oracle(&k1, VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn single_on_graph_beyond_table_cap() {
        let g = cycle(30);
        assert_eq!(steiner_single(&g, set(&[0, 10, 20])), Ok(Some(20)));
        assert_eq!(steiner_single(&g, set(&[0, 1, 29])), Ok(Some(2)));
    }

    #[test]
    fn pairwise_examples() {
        assert_eq!(pairwise_distances(&path(4)).get(0, 3), Some(3));
        assert_eq!(pairwise_distances(&cycle(5)).get(0, 2), Some(2));
        let d = pairwise_distances(&complete(4));
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), Some(usize::from(u != v)));
            }
        }
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(pairwise_distances(&two_edges).get(1, 2), None);
    }

    #[test]
    fn table_invariants_on_petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let t = steiner_all_subsets(&g).unwrap();
        let dm = pairwise_distances(&g);
        for (s, d) in t.iter() {
            let d = d.unwrap();
            assert!(s.len() - 1 <= d && d <= 9);
            assert_eq!(d == s.len() - 1, g.induced_connected(s).unwrap());
            if s.len() > 1 {
                for v in s {
                    assert!(t.get(s.remove(v)).unwrap() <= d);
                }
            }
            if s.len() <= 4 {
                assert_eq!(steiner_single_with(&g, &dm, s).unwrap(), Some(d));
            }
        }
        assert_eq!(t.get(g.vertices()), Some(9));
    }
}
