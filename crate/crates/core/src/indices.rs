//! Steiner k-Gutman, Steiner k-Wiener, k-center Steiner degree distance and
//! the Gutman index, computed exactly from a Steiner table.
//!
//! Sums run over the `k`-subsets in increasing mask order, so results are
//! reproducible term by term.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::{k_subsets, Graph, VertexSet};
use crate::scalar::{int, ExactScalar};
use crate::steiner::{pairwise_distances, steiner_all_subsets, SteinerTable};
use crate::{Error, Result};

/// A connected graph with its Steiner table, ready for index queries.
#[derive(Clone, Debug)]
pub struct SteinerIndices<'g> {
    graph: &'g Graph,
    table: SteinerTable,
    degrees: Vec<u64>,
}

impl<'g> SteinerIndices<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let table = steiner_all_subsets(graph)?;
        Ok(Self::with_table(graph, table))
    }

    /// Uses a table already computed for `graph`, which must be connected.
    pub fn with_table(graph: &'g Graph, table: SteinerTable) -> Self {
        debug_assert_eq!(table.n(), graph.n());
        let degrees = (0..graph.n()).map(|v| graph.degree(v) as u64).collect();
        SteinerIndices {
            graph,
            table,
            degrees,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn table(&self) -> &SteinerTable {
        &self.table
    }

    fn check_k(&self, k: usize, min: usize) -> Result<()> {
        let n = self.graph.n();
        if k < min || k > n {
            return Err(Error::KOutOfRange { k, min, max: n });
        }
        Ok(())
    }

    fn distance(&self, s: VertexSet) -> u64 {
        self.table
            .get(s)
            .expect("connected graph has finite distances") as u64
    }

    /// Σ over k-subsets of (∏ deg) · d(S).
    pub fn steiner_gutman(&self, k: usize) -> Result<ExactScalar> {
        self.check_k(k, 2)?;
        let mut acc = Accumulator::default();
        for s in k_subsets(self.graph.n(), k) {
            let d = self.distance(s);
            let term = s
                .iter()
                .try_fold(d as u128, |p, v| p.checked_mul(self.degrees[v] as u128));
            match term {
                Some(t) => acc.add_small(t),
                None => {
                    let t = s.iter().fold(BigInt::from(d), |p, v| p * self.degrees[v]);
                    acc.add_big(t)
                }
            }
        }
        Ok(int(acc.finish()))
    }

    /// Σ over k-subsets of d(S); `k = 1` gives 0.
    pub fn steiner_wiener(&self, k: usize) -> Result<ExactScalar> {
        self.check_k(k, 1)?;
        let mut acc = Accumulator::default();
        for s in k_subsets(self.graph.n(), k) {
            acc.add_small(self.distance(s) as u128);
        }
        Ok(int(acc.finish()))
    }

    /// Σ over k-subsets of (Σ deg) · d(S).
    pub fn steiner_degree_distance(&self, k: usize) -> Result<ExactScalar> {
        self.check_k(k, 2)?;
        let mut acc = Accumulator::default();
        for s in k_subsets(self.graph.n(), k) {
            let deg_sum: u64 = s.iter().map(|v| self.degrees[v]).sum();
            acc.add_small(deg_sum as u128 * self.distance(s) as u128);
        }
        Ok(int(acc.finish()))
    }

    pub fn report(&self, graph_id: impl Into<String>, k: usize) -> Result<IndexReport> {
        Ok(IndexReport {
            graph_id: graph_id.into(),
            k,
            sgut: self.steiner_gutman(k)?,
            sw: self.steiner_wiener(k)?,
            sdd: self.steiner_degree_distance(k)?,
            gut: if k == 2 {
                Some(gutman(self.graph)?)
            } else {
                None
            },
        })
    }
}

/// Sum of `u128` terms that spills into a big integer on overflow.
#[derive(Default)]
struct Accumulator {
    small: u128,
    big: Option<BigInt>,
}

impl Accumulator {
    fn add_small(&mut self, t: u128) {
        match self.small.checked_add(t) {
            Some(s) => self.small = s,
            None => {
                *self.big.get_or_insert_with(BigInt::zero) += self.small;
                self.small = t;
            }
        }
    }

    fn add_big(&mut self, t: BigInt) {
        *self.big.get_or_insert_with(BigInt::zero) += t;
    }

    fn finish(self) -> BigInt {
        self.big.unwrap_or_default() + self.small
    }
}

/// All index values of one graph at one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub graph_id: String,
    pub k: usize,
    pub sgut: ExactScalar,
    pub sw: ExactScalar,
    pub sdd: ExactScalar,
    /// Only for `k = 2`.
    pub gut: Option<ExactScalar>,
}

pub fn steiner_gutman(g: &Graph, k: usize) -> Result<ExactScalar> {
    SteinerIndices::new(g)?.steiner_gutman(k)
}

pub fn steiner_wiener(g: &Graph, k: usize) -> Result<ExactScalar> {
    SteinerIndices::new(g)?.steiner_wiener(k)
}

pub fn steiner_degree_distance(g: &Graph, k: usize) -> Result<ExactScalar> {
    SteinerIndices::new(g)?.steiner_degree_distance(k)
}

/// Gutman index over unordered pairs, from BFS distances rather than the
/// Steiner table.
pub fn gutman(g: &Graph) -> Result<ExactScalar> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::KOutOfRange {
            k: 2,
            min: 2,
            max: n,
        });
    }
    let dm = pairwise_distances(g);
    let mut total = BigInt::zero();
    for u in 0..n {
        for v in u + 1..n {
            let d = dm.get(u, v).expect("connected") as u64;
            total += BigInt::from(g.degree(u) as u64 * g.degree(v) as u64 * d);
        }
    }
    Ok(int(total))
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
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn sgut(g: &Graph, k: usize) -> i64 {
        steiner_gutman(g, k)
            .unwrap()
            .to_integer()
            .try_into()
            .unwrap()
    }

    #[test]
    fn gutman_k_examples() {
        assert_eq!(sgut(&path(3), 2), 6);
        assert_eq!(sgut(&path(4), 4), 12);
        assert_eq!(sgut(&path(4), 3), 28);
        assert_eq!(sgut(&cycle(4), 3), 64);
        assert_eq!(sgut(&cycle(5), 5), 128);
        assert_eq!(sgut(&cycle(5), 3), 200);
        assert_eq!(sgut(&path(4), 2), 19);
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(steiner_wiener(&path(4), 2).unwrap(), int(10));
        assert_eq!(steiner_wiener(&path(4), 3).unwrap(), int(10));
        assert_eq!(steiner_wiener(&path(4), 1).unwrap(), int(0));
        for g in [path(5), cycle(6), complete(4)] {
            let n = g.n();
            assert_eq!(steiner_wiener(&g, n).unwrap(), int(n as i64 - 1));
        }
    }

    #[test]
    fn degree_distance_examples() {
        assert_eq!(steiner_degree_distance(&path(3), 2).unwrap(), int(10));
        assert_eq!(steiner_degree_distance(&path(4), 3).unwrap(), int(44));
        assert_eq!(steiner_degree_distance(&complete(3), 2).unwrap(), int(12));
    }

    #[test]
    fn gutman_examples() {
        assert_eq!(gutman(&cycle(4)).unwrap(), int(32));
        assert_eq!(gutman(&complete(3)).unwrap(), int(12));
        assert_eq!(gutman(&path(3)).unwrap(), int(6));
    }

    #[test]
    fn errors() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(steiner_gutman(&two_edges, 2), Err(Error::Disconnected));
        assert_eq!(gutman(&two_edges), Err(Error::Disconnected));
        assert_eq!(
            steiner_gutman(&path(4), 1),
            Err(Error::KOutOfRange {
                k: 1,
                min: 2,
                max: 4
            })
        );
        assert_eq!(
            steiner_wiener(&path(4), 5),
            Err(Error::KOutOfRange {
                k: 5,
                min: 1,
                max: 4
            })
        );
        assert!(steiner_degree_distance(&path(4), 0).is_err());
        assert!(gutman(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn complete_graph_at_table_cap() {
        let g = complete(20);
        let idx = SteinerIndices::new(&g).unwrap();
        assert_eq!(
            idx.steiner_gutman(20).unwrap(),
            int(crate::scalar::pow(19u32, 21))
        );
    }

    #[test]
    fn accumulator_spills_on_overflow() {
        let mut acc = Accumulator::default();
        acc.add_small(u128::MAX);
        acc.add_small(2);
        acc.add_big(BigInt::from(3));
        assert_eq!(acc.finish(), BigInt::from(u128::MAX) + 5);
    }

    #[test]
    fn report_fields() {
        let g = path(4);
        let idx = SteinerIndices::new(&g).unwrap();
        let r = idx.report("P4", 2).unwrap();
        assert_eq!(r.sgut, int(19));
        assert_eq!(r.gut, Some(int(19)));
        assert!(idx.report("P4", 3).unwrap().gut.is_none());
    }
}
