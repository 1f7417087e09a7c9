//! Brute-force canonical labelling for small graphs.
//!
//! A graph's *adjacency string* lists the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), …`, the graph6 bit order). The canonical
//! form is the relabelling whose adjacency string is lexicographically
//! smallest over all `n!` permutations.
//!
//! The search places vertices position by position. Placing position `j`
//! fixes column `j` of the string, so only candidates producing the
//! smallest column can lead to the minimum; ties branch. The result is the
//! exact minimum, not a heuristic.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Orders whose full adjacency string fits in a `u64` key.
pub const MAX_CANON_ORDER: usize = 11;

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of pair `(i, j)`, `i < j`, in the adjacency string.
#[inline]
pub fn edge_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Edge mask with bit `edge_index(i, j)` set for each edge.
pub fn edge_mask(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_CANON_ORDER);
    g.edges().fold(0, |m, (i, j)| m | 1 << edge_index(i, j))
}

/// Graph on `n` vertices from an edge mask.
pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut rows = alloc::vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if mask >> edge_index(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// The adjacency string as an integer whose most significant bit is the
/// first character, so integer order is lexicographic order.
pub fn string_key(g: &Graph) -> u64 {
    let e = pair_count(g.n());
    g.edges()
        .fold(0, |k, (i, j)| k | 1 << (e - 1 - edge_index(i, j)))
}

pub fn from_string_key(n: usize, key: u64) -> Graph {
    let e = pair_count(n);
    let mask = (0..e)
        .filter(|&idx| key >> (e - 1 - idx) & 1 == 1)
        .fold(0u64, |m, idx| m | 1 << idx);
    from_edge_mask(n, mask)
}

/// Lexicographically minimal adjacency string over all relabellings.
pub fn canonical_key(g: &Graph) -> u64 {
    canonical_labeling(g).0
}

/// Canonical key together with a permutation `order` such that vertex
/// `order[p]` sits at position `p` in the canonical form.
pub fn canonical_labeling(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical form limited to small orders"
    );
    let mut search = Search {
        rows: g.rows(),
        n,
        order: alloc::vec![0; n],
        best_key: u64::MAX,
        best_order: (0..n).collect(),
        found: false,
    };
    search.descend(0, g.vertices(), 0);
    (search.best_key, search.best_order)
}

/// The canonical representative as a graph.
pub fn canonical_form(g: &Graph) -> Graph {
    from_string_key(g.n(), canonical_key(g))
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    order: Vec<usize>,
    best_key: u64,
    best_order: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    /// `prefix` holds the bits of columns `1..depth`, `free` the unplaced vertices.
    fn descend(&mut self, depth: usize, free: VertexSet, prefix: u64) {
        if depth == self.n {
            if !self.found || prefix < self.best_key {
                self.best_key = prefix;
                self.best_order.copy_from_slice(&self.order);
                self.found = true;
            }
            return;
        }
        // Column for position `depth`: bit for row i is adjacency to order[i],
        // row 0 most significant.
        let column = |v: usize| {
            let mut c = 0u64;
            for &u in &self.order[..depth] {
                c = c << 1 | (self.rows[u] >> v & 1);
            }
            c
        };
        let min_col = free.iter().map(column).min().expect("free vertex");
        let next = (prefix << depth) | min_col;
        if self.found {
            // Compare against the best key's prefix of the same length.
            let total = pair_count(self.n);
            let placed = pair_count(depth + 1);
            let best_prefix = self.best_key >> (total - placed);
            if next > best_prefix {
                return;
            }
        }
        for v in free
            .iter()
            .filter(|&v| column(v) == min_col)
            .collect::<Vec<_>>()
        {
            self.order[depth] = v;
            self.descend(depth + 1, free.remove(v), next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::k_subsets;

    fn brute_force_key(g: &Graph) -> u64 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        permutations(&mut perm, 0, &mut |p| {
            best = best.min(string_key(&g.permute(p)));
        });
        best
    }

    fn permutations(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permutations(p, i + 1, f);
            p.swap(i, j);
        }
    }

    #[test]
    fn matches_brute_force_on_all_graphs_of_order_five() {
        let e = pair_count(5);
        for mask in 0..1u64 << e {
            let g = from_edge_mask(5, mask);
            assert_eq!(canonical_key(&g), brute_force_key(&g), "mask {mask:#b}");
        }
    }

    #[test]
    fn labeling_reproduces_key() {
        let g = from_edge_mask(6, 0b1011_0110_0101_1001);
        let (key, order) = canonical_labeling(&g);
        let mut perm = alloc::vec![0; 6];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(string_key(&g.permute(&perm)), key);
    }

    #[test]
    fn key_round_trips() {
        for mask in [0u64, 1, 0b101101, (1 << 15) - 1] {
            let g = from_edge_mask(6, mask);
            assert_eq!(edge_mask(&g), mask);
            assert_eq!(from_string_key(6, string_key(&g)), g);
        }
    }

    #[test]
    fn isomorphic_graphs_share_a_key() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let other = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_key(&p4), canonical_key(&other));
        assert_eq!(canonical_key(&p4), canonical_key(&p4.complement()));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4), canonical_key(&star));
        let k = canonical_key(
            &Graph::from_edges(
                4,
                k_subsets(4, 2).map(|s| {
                    let v: Vec<_> = s.iter().collect();
                    (v[0], v[1])
                }),
            )
            .unwrap(),
        );
        assert_eq!(k, (1 << 6) - 1);
    }
}
