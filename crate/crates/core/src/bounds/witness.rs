//! Structural diagnosis of tight bound instances, used to test the stated
//! equality characterizations empirically.

use super::{BoundCheck, BoundId, PairedGraph};
use crate::graph::k_subsets;
use crate::steiner::SteinerTable;
use crate::{Error, Result};

/// Structural predicates of a graph at which a bound is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityDiagnosis {
    pub bound_id: BoundId,
    pub case_label: &'static str,
    pub k: usize,
    pub regular: bool,
    pub k_equals_n: bool,
    /// `G` is `(n-k+1)`-connected.
    pub connectivity_n_minus_k_plus_1: bool,
    /// Every `k`-subset of `G` induces a connected subgraph, i.e. `d_G(S) = k-1`.
    pub all_k_subsets_connected: bool,
    /// The same for `Ḡ`; `None` when `Ḡ` is disconnected.
    pub complement_all_k_subsets_connected: Option<bool>,
    /// `n` odd and `G` is `(n-1)/2`-regular.
    pub half_regular_odd: bool,
    pub is_path: bool,
    /// `G ≅ P3` and `k = 2`.
    pub p3_k2: bool,
    /// Whether the published equality condition for this bound holds;
    /// `None` for bounds stated without one.
    pub stated_condition: Option<bool>,
}

fn all_subsets_induce_trees(table: &SteinerTable, n: usize, k: usize) -> bool {
    k_subsets(n, k).all(|s| table.get(s) == Some(k - 1))
}

/// Diagnoses a tight check of `pair` at `k`.
pub fn equality_witness(
    pair: &PairedGraph,
    k: usize,
    check: &BoundCheck,
) -> Result<EqualityDiagnosis> {
    if !check.tight {
        return Err(Error::NotTight);
    }
    let g = pair.graph();
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, min: 2, max: n });
    }
    let table = pair.table().ok_or(Error::Disconnected)?;
    let prof = pair.profile();
    let regular = g.is_regular();
    let is_path = g.is_connected() && g.m() + 1 == n && prof.max_degree <= 2;
    let mut d = EqualityDiagnosis {
        bound_id: check.id,
        case_label: check.case_label,
        k,
        regular,
        k_equals_n: k == n,
        connectivity_n_minus_k_plus_1: g.is_k_connected(n - k + 1),
        all_k_subsets_connected: all_subsets_induce_trees(table, n, k),
        complement_all_k_subsets_connected: pair
            .complement_table()
            .map(|t| all_subsets_induce_trees(t, n, k)),
        half_regular_odd: n % 2 == 1 && regular && prof.min_degree * 2 == n - 1,
        is_path,
        p3_k2: is_path && n == 3 && k == 2,
        stated_condition: None,
    };
    d.stated_condition = stated_condition(&d);
    Ok(d)
}

fn stated_condition(d: &EqualityDiagnosis) -> Option<bool> {
    let both_sides_trees =
        d.all_k_subsets_connected && d.complement_all_k_subsets_connected == Some(true);
    Some(match d.bound_id {
        BoundId::Prop21Upper | BoundId::AmgmSumUpper => d.regular && d.k_equals_n,
        BoundId::Prop21Lower if d.case_label == "delta>=2" => {
            d.regular && d.connectivity_n_minus_k_plus_1
        }
        // P_n with k = n > 3, or P_3 with k = 2
        BoundId::Prop21Lower => (d.is_path && d.k_equals_n && d.k > 3) || d.p3_k2,
        BoundId::PsProductLower => d.regular && both_sides_trees,
        BoundId::PsProductUpper => d.half_regular_odd && d.k_equals_n,
        BoundId::AmgmSumLower => d.half_regular_odd && both_sides_trees,
        _ => return None,
    })
}
