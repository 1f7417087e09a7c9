//! Exact evaluation of upper and lower bounds on the Steiner k-Gutman index.
//!
//! Every bound is a rational number except the AM-GM sum lower bound with
//! odd `k`, which is the square root of a rational. Such values are kept as
//! their exact square and compared by squaring the (nonnegative) actual
//! value, so neither tightness nor violations are ever decided by rounding.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::graph::{DegreeProfile, Graph};
use crate::indices::SteinerIndices;
use crate::scalar::{exact_sqrt, sqrt_to_decimal, to_decimal, ExactScalar};
use crate::steiner::{steiner_all_subsets, SteinerTable};
use crate::{Error, Result};

mod formulas;
mod witness;

pub use formulas::{amgm_sum, cor41, lem22, prop21, ps_product, thm32};
pub use witness::{equality_witness, EqualityDiagnosis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Upper,
    Lower,
}

/// Groups of bounds that share preconditions and are evaluated together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundFamily {
    /// Degree-based bounds on a single graph.
    Prop21,
    /// Size-based bounds on a single graph.
    Lem22,
    /// Nordhaus-Gaddum sum/product bounds in `n, m, δ, Δ`.
    Thm32,
    /// The `m`-free corollary of `Thm32`.
    Cor41,
    /// Product bounds from the Pólya–Szegő inequality.
    PsProduct,
    /// Sum bounds from the AM-GM inequality.
    AmgmSum,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 6] = [
        BoundFamily::Prop21,
        BoundFamily::Lem22,
        BoundFamily::Thm32,
        BoundFamily::Cor41,
        BoundFamily::PsProduct,
        BoundFamily::AmgmSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::Prop21 => "prop21",
            BoundFamily::Lem22 => "lem22",
            BoundFamily::Thm32 => "thm32",
            BoundFamily::Cor41 => "cor41",
            BoundFamily::PsProduct => "ps",
            BoundFamily::AmgmSum => "amgm",
        }
    }

    /// Whether the family bounds `SGut(G) ± SGut(Ḡ)` and so needs a
    /// connected complement.
    pub fn needs_complement(self) -> bool {
        !matches!(self, BoundFamily::Prop21 | BoundFamily::Lem22)
    }

    pub fn min_order(self) -> usize {
        match self {
            BoundFamily::Prop21 => 3,
            BoundFamily::Cor41 => 4,
            _ => 2,
        }
    }

    pub fn ids(self) -> impl Iterator<Item = BoundId> {
        BoundId::ALL
            .into_iter()
            .filter(move |id| id.family() == self)
    }

    /// Whether the preconditions hold for `pair` (the `k` range aside).
    pub fn applies_to(self, pair: &PairedGraph) -> bool {
        pair.graph().n() >= self.min_order()
            && pair.is_connected()
            && (!self.needs_complement() || pair.is_complement_connected())
    }

    pub fn evaluate(self, pair: &PairedGraph, k: usize) -> Result<Vec<BoundCheck>> {
        match self {
            BoundFamily::Prop21 => prop21(pair, k).map(Vec::from),
            BoundFamily::Lem22 => lem22(pair, k).map(Vec::from),
            BoundFamily::Thm32 => thm32(pair, k),
            BoundFamily::Cor41 => cor41(pair, k),
            BoundFamily::PsProduct => ps_product(pair, k),
            BoundFamily::AmgmSum => amgm_sum(pair, k),
        }
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Stable identifiers used in reports and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Prop21Upper,
    Prop21Lower,
    Lem22Upper,
    Lem22Lower,
    /// Sum upper bound with `s1 = max{Δ, n-δ-1}`.
    Thm32SumUpper,
    Thm32ProductUpper,
    Thm32SumLower,
    Thm32ProductLower,
    /// Sum upper bound with `s1 = min{Δ, n-δ-1}`, as originally published.
    Cor41SumUpper,
    Cor41SumLower,
    Cor41ProductUpper,
    Cor41ProductLower,
    PsProductLower,
    PsProductUpper,
    AmgmSumLower,
    AmgmSumUpper,
}

impl BoundId {
    pub const ALL: [BoundId; 16] = [
        BoundId::Prop21Upper,
        BoundId::Prop21Lower,
        BoundId::Lem22Upper,
        BoundId::Lem22Lower,
        BoundId::Thm32SumUpper,
        BoundId::Thm32ProductUpper,
        BoundId::Thm32SumLower,
        BoundId::Thm32ProductLower,
        BoundId::Cor41SumUpper,
        BoundId::Cor41SumLower,
        BoundId::Cor41ProductUpper,
        BoundId::Cor41ProductLower,
        BoundId::PsProductLower,
        BoundId::PsProductUpper,
        BoundId::AmgmSumLower,
        BoundId::AmgmSumUpper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Prop21Upper => "prop21.upper",
            BoundId::Prop21Lower => "prop21.lower",
            BoundId::Lem22Upper => "lem22.upper",
            BoundId::Lem22Lower => "lem22.lower",
            BoundId::Thm32SumUpper => "thm32.1.sum_upper",
            BoundId::Thm32ProductUpper => "thm32.1.product_upper",
            BoundId::Thm32SumLower => "thm32.2.sum_lower",
            BoundId::Thm32ProductLower => "thm32.3.product_lower",
            BoundId::Cor41SumUpper => "cor41.1.sum_upper",
            BoundId::Cor41SumLower => "cor41.1.sum_lower",
            BoundId::Cor41ProductUpper => "cor41.2.product_upper",
            BoundId::Cor41ProductLower => "cor41.2.product_lower",
            BoundId::PsProductLower => "ps.product_lower",
            BoundId::PsProductUpper => "ps.product_upper",
            BoundId::AmgmSumLower => "amgm.sum_lower",
            BoundId::AmgmSumUpper => "amgm.sum_upper",
        }
    }

    pub fn family(self) -> BoundFamily {
        use BoundId::*;
        match self {
            Prop21Upper | Prop21Lower => BoundFamily::Prop21,
            Lem22Upper | Lem22Lower => BoundFamily::Lem22,
            Thm32SumUpper | Thm32ProductUpper | Thm32SumLower | Thm32ProductLower => {
                BoundFamily::Thm32
            }
            Cor41SumUpper | Cor41SumLower | Cor41ProductUpper | Cor41ProductLower => {
                BoundFamily::Cor41
            }
            PsProductLower | PsProductUpper => BoundFamily::PsProduct,
            AmgmSumLower | AmgmSumUpper => BoundFamily::AmgmSum,
        }
    }

    pub fn direction(self) -> Direction {
        use BoundId::*;
        match self {
            Prop21Upper | Lem22Upper | Thm32SumUpper | Thm32ProductUpper | Cor41SumUpper
            | Cor41ProductUpper | PsProductUpper | AmgmSumUpper => Direction::Upper,
            _ => Direction::Lower,
        }
    }

    /// What the bound constrains.
    pub fn quantity(self) -> Quantity {
        use BoundId::*;
        match self {
            Prop21Upper | Prop21Lower | Lem22Upper | Lem22Lower => Quantity::Single,
            Thm32SumUpper | Thm32SumLower | Cor41SumUpper | Cor41SumLower | AmgmSumLower
            | AmgmSumUpper => Quantity::Sum,
            _ => Quantity::Product,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownBound(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// `SGut_k(G)`
    Single,
    /// `SGut_k(G) + SGut_k(Ḡ)`
    Sum,
    /// `SGut_k(G) · SGut_k(Ḡ)`
    Product,
}

/// Parses selectors into a sorted, deduplicated id list. A selector is
/// `all`, a family name (`prop21`, `thm32`, `ps`, …) or a full bound id.
pub fn parse_selection<'a, I>(selectors: I) -> Result<Vec<BoundId>>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut ids = Vec::new();
    for raw in selectors {
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if s == "all" {
            ids.extend(BoundId::ALL);
        } else if let Some(f) = BoundFamily::ALL.into_iter().find(|f| f.name() == s) {
            ids.extend(f.ids());
        } else {
            ids.push(s.parse()?);
        }
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

/// A bound's value: rational, or the square root of a rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Rational(ExactScalar),
    /// `sqrt(square)`, used only when the root is irrational.
    SquareRoot(ExactScalar),
}

impl BoundValue {
    /// `sqrt(square)`, simplified to a rational when it is one.
    pub fn sqrt_of(square: ExactScalar) -> Self {
        match exact_sqrt(&square) {
            Some(r) => BoundValue::Rational(r),
            None => BoundValue::SquareRoot(square),
        }
    }

    pub fn squared(&self) -> ExactScalar {
        match self {
            BoundValue::Rational(r) => r * r,
            BoundValue::SquareRoot(sq) => sq.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&ExactScalar> {
        match self {
            BoundValue::Rational(r) => Some(r),
            BoundValue::SquareRoot(_) => None,
        }
    }

    /// Orders a nonnegative value against this (nonnegative) bound.
    pub fn compare_value(&self, value: &ExactScalar) -> Ordering {
        match self {
            BoundValue::Rational(r) => value.cmp(r),
            BoundValue::SquareRoot(sq) => (value * value).cmp(sq),
        }
    }

    /// Orders two bound values.
    pub fn compare(&self, other: &BoundValue) -> Ordering {
        match (self, other) {
            (BoundValue::Rational(a), BoundValue::Rational(b)) => a.cmp(b),
            _ => self.squared().cmp(&other.squared()),
        }
    }

    /// `num/den`, or `sqrt(num/den)` for irrational values.
    pub fn exact_string(&self) -> String {
        match self {
            BoundValue::Rational(r) => r.to_string(),
            BoundValue::SquareRoot(sq) => alloc::format!("sqrt({sq})"),
        }
    }

    pub fn decimal(&self, digits: usize) -> String {
        match self {
            BoundValue::Rational(r) => to_decimal(r, digits),
            BoundValue::SquareRoot(sq) => sqrt_to_decimal(sq, digits),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_string())
    }
}

/// One evaluated bound against the actual index value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub id: BoundId,
    /// Which case of a piecewise bound applied; empty for single-case bounds.
    pub case_label: &'static str,
    pub bound_value: BoundValue,
    pub actual: ExactScalar,
    /// `actual <= bound` for upper bounds, `actual >= bound` for lower ones.
    pub holds: bool,
    pub tight: bool,
    /// False for a branch evaluated only because the case conditions overlap
    /// and the other branch gives the stronger bound.
    pub binding: bool,
}

impl BoundCheck {
    pub(crate) fn new(
        id: BoundId,
        case_label: &'static str,
        bound_value: BoundValue,
        actual: ExactScalar,
    ) -> Self {
        let ord = bound_value.compare_value(&actual);
        let holds = match id.direction() {
            Direction::Upper => ord != Ordering::Greater,
            Direction::Lower => ord != Ordering::Less,
        };
        BoundCheck {
            id,
            case_label,
            bound_value,
            actual,
            holds,
            tight: ord == Ordering::Equal,
            binding: true,
        }
    }

    pub fn direction(&self) -> Direction {
        self.id.direction()
    }
}

/// A graph with its complement, degree profiles, Steiner tables and lazily
/// computed `SGut_k` values on both sides.
pub struct PairedGraph {
    graph: Graph,
    complement: Graph,
    profile: DegreeProfile,
    table: Option<SteinerTable>,
    complement_table: Option<SteinerTable>,
    sgut: Vec<OnceCell<ExactScalar>>,
    sgut_complement: Vec<OnceCell<ExactScalar>>,
}

impl PairedGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        let complement = graph.complement();
        let table = if graph.is_connected() {
            Some(steiner_all_subsets(&graph)?)
        } else {
            None
        };
        let complement_table = if complement.is_connected() {
            Some(steiner_all_subsets(&complement)?)
        } else {
            None
        };
        let n = graph.n();
        Ok(PairedGraph {
            profile: graph.degree_profile(),
            graph,
            complement,
            table,
            complement_table,
            sgut: (0..=n).map(|_| OnceCell::new()).collect(),
            sgut_complement: (0..=n).map(|_| OnceCell::new()).collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complement(&self) -> &Graph {
        &self.complement
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn table(&self) -> Option<&SteinerTable> {
        self.table.as_ref()
    }

    pub fn complement_table(&self) -> Option<&SteinerTable> {
        self.complement_table.as_ref()
    }

    pub fn is_connected(&self) -> bool {
        self.table.is_some()
    }

    pub fn is_complement_connected(&self) -> bool {
        self.complement_table.is_some()
    }

    fn sgut_of(
        graph: &Graph,
        table: Option<&SteinerTable>,
        cache: &[OnceCell<ExactScalar>],
        k: usize,
        missing: Error,
    ) -> Result<ExactScalar> {
        let table = table.ok_or(missing)?;
        if let Some(v) = cache.get(k).and_then(OnceCell::get) {
            return Ok(v.clone());
        }
        let v = SteinerIndices::with_table(graph, table.clone()).steiner_gutman(k)?;
        Ok(cache[k].get_or_init(|| v).clone())
    }

    /// `SGut_k(G)`.
    pub fn sgut(&self, k: usize) -> Result<ExactScalar> {
        Self::sgut_of(
            &self.graph,
            self.table.as_ref(),
            &self.sgut,
            k,
            Error::Disconnected,
        )
    }

    /// `SGut_k(Ḡ)`.
    pub fn sgut_complement(&self, k: usize) -> Result<ExactScalar> {
        Self::sgut_of(
            &self.complement,
            self.complement_table.as_ref(),
            &self.sgut_complement,
            k,
            Error::ComplementDisconnected,
        )
    }

    /// Value constrained by bounds of the given quantity.
    pub fn actual(&self, quantity: Quantity, k: usize) -> Result<ExactScalar> {
        Ok(match quantity {
            Quantity::Single => self.sgut(k)?,
            Quantity::Sum => self.sgut(k)? + self.sgut_complement(k)?,
            Quantity::Product => self.sgut(k)? * self.sgut_complement(k)?,
        })
    }
}

impl fmt::Debug for PairedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PairedGraph")
            .field("graph", &self.graph)
            .field("connected", &self.is_connected())
            .field("complement_connected", &self.is_complement_connected())
            .finish()
    }
}
