//! Exhaustive enumeration of small graphs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Range;

use crate::canon::{self, canonical_key, from_edge_mask, from_string_key, pair_count};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order accepted by the enumerator, labelled or deduplicated.
pub const MAX_ENUM_ORDER: usize = 8;

/// Which `k` values a sweep evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KRange {
    /// `2..=n`
    All,
    Values(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub require_connected: bool,
    /// Complement connected.
    pub require_coconnected: bool,
    pub dedup_isomorphism: bool,
    pub k_range: KRange,
}

impl EnumerationSpec {
    /// Connected graphs of order `n`, labelled, every `k`.
    pub fn connected(n: usize) -> Self {
        EnumerationSpec {
            n,
            require_connected: true,
            require_coconnected: false,
            dedup_isomorphism: false,
            k_range: KRange::All,
        }
    }

    pub fn coconnected(mut self) -> Self {
        self.require_coconnected = true;
        self
    }

    pub fn dedup(mut self) -> Self {
        self.dedup_isomorphism = true;
        self
    }

    pub fn with_k(mut self, ks: Vec<usize>) -> Self {
        self.k_range = KRange::Values(ks);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        if self.n > MAX_ENUM_ORDER {
            return Err(Error::OrderTooLarge {
                n: self.n,
                max: MAX_ENUM_ORDER,
            });
        }
        Ok(())
    }

    /// The `k` values to evaluate, restricted to `2..=n`.
    pub fn ks(&self) -> Vec<usize> {
        match &self.k_range {
            KRange::All => (2..=self.n).collect(),
            KRange::Values(v) => v
                .iter()
                .copied()
                .filter(|&k| (2..=self.n).contains(&k))
                .collect(),
        }
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.require_connected || g.is_connected())
            && (!self.require_coconnected || g.complement().is_connected())
    }
}

/// The candidate space of a spec: either every labelled edge mask or the
/// list of isomorphism-class representatives. Slots can be split into
/// contiguous shards.
#[derive(Clone, Debug)]
pub struct Universe {
    spec: EnumerationSpec,
    representatives: Option<Vec<Graph>>,
}

impl Universe {
    pub fn new(spec: &EnumerationSpec) -> Result<Self> {
        spec.validate()?;
        let representatives = spec
            .dedup_isomorphism
            .then(|| unlabeled_graphs(spec.n, spec.require_connected));
        Ok(Universe {
            spec: spec.clone(),
            representatives,
        })
    }

    pub fn spec(&self) -> &EnumerationSpec {
        &self.spec
    }

    /// Number of slots (labelled masks, or representatives when deduplicating).
    pub fn len(&self) -> usize {
        match &self.representatives {
            Some(reps) => reps.len(),
            None => 1usize << pair_count(self.spec.n),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Graphs in slots `range` that pass the spec's filters, in slot order.
    pub fn slice(&self, range: Range<usize>) -> GraphStream<'_> {
        GraphStream {
            universe: self,
            next: range.start,
            end: range.end.min(self.len()),
        }
    }

    /// Slot range of shard `index` out of `count` equal contiguous shards.
    pub fn shard_range(&self, index: usize, count: usize) -> Range<usize> {
        let len = self.len();
        let count = count.max(1);
        (len * index / count)..(len * (index + 1) / count)
    }

    pub fn iter(&self) -> GraphStream<'_> {
        self.slice(0..self.len())
    }
}

/// Streaming iterator over the accepted graphs of a [`Universe`].
#[derive(Clone, Debug)]
pub struct GraphStream<'a> {
    universe: &'a Universe,
    next: usize,
    end: usize,
}

impl Iterator for GraphStream<'_> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let slot = self.next;
            self.next += 1;
            let g = match &self.universe.representatives {
                Some(reps) => reps[slot].clone(),
                None => from_edge_mask(self.universe.spec.n, slot as u64),
            };
            if self.universe.spec.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// Every graph of the spec, in ascending edge-mask order.
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<Vec<Graph>> {
    Ok(Universe::new(spec)?.iter().collect())
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices (connected ones only if asked), sorted by edge mask.
///
/// Every graph on `n` vertices arises from one on `n - 1` vertices by adding
/// a vertex, and every connected graph from a connected one (delete a
/// non-cut vertex), so classes are generated order by order.
pub fn unlabeled_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!((1..=canon::MAX_CANON_ORDER).contains(&n));
    let mut reps = alloc::vec![Graph::empty(1).expect("order 1")];
    for order in 2..=n {
        let parent_n = order - 1;
        let mut keys = BTreeSet::new();
        for parent in &reps {
            let first = usize::from(connected_only);
            for nbrs in first as u64..1u64 << parent_n {
                let mut rows = Vec::with_capacity(order);
                rows.extend_from_slice(parent.rows());
                for (v, row) in rows.iter_mut().enumerate() {
                    *row |= (nbrs >> v & 1) << parent_n;
                }
                rows.push(nbrs);
                keys.insert(canonical_key(&Graph::from_rows_unchecked(rows)));
            }
        }
        reps = keys
            .into_iter()
            .map(|k| from_string_key(order, k))
            .collect();
    }
    reps.sort_by_key(canon::edge_mask);
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: EnumerationSpec) -> usize {
        enumerate_graphs(&spec).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(EnumerationSpec::connected(3)), 4);
        assert_eq!(count(EnumerationSpec::connected(3).dedup()), 2);
        assert_eq!(count(EnumerationSpec::connected(4).dedup()), 6);
        let only = enumerate_graphs(&EnumerationSpec::connected(4).coconnected().dedup()).unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].m(), 3);
        assert_eq!(only[0].degree_profile().pendants, 2);
    }

    #[test]
    fn known_class_counts() {
        // graphs / connected graphs on n vertices, n = 1..=7
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            assert_eq!(unlabeled_graphs(n, false).len(), all[n - 1], "n = {n}");
            assert_eq!(unlabeled_graphs(n, true).len(), connected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn labelled_counts() {
        // connected labelled graphs on n vertices
        let expected = [1, 1, 4, 38, 728, 26704];
        for n in 1..=6 {
            assert_eq!(count(EnumerationSpec::connected(n)), expected[n - 1]);
        }
    }

    #[test]
    fn shards_cover_the_universe() {
        let u = Universe::new(&EnumerationSpec::connected(5).dedup()).unwrap();
        let whole: Vec<_> = u.iter().collect();
        let pieces: Vec<_> = (0..3).flat_map(|i| u.slice(u.shard_range(i, 3))).collect();
        assert_eq!(whole, pieces);
    }

    #[test]
    fn order_limits() {
        assert!(matches!(
            Universe::new(&EnumerationSpec::connected(9)),
            Err(Error::OrderTooLarge { n: 9, max: 8 })
        ));
        assert_eq!(
            EnumerationSpec::connected(4)
                .with_k(alloc::vec![1, 3, 9])
                .ks(),
            [3]
        );
    }
}
