//! Standard graph families and the published closed forms for their
//! Steiner k-Gutman index.
//!
//! Printed formulas are reproduced as written, even where they disagree with
//! direct computation; [`audit_formulas`] reports the discrepancies instead
//! of correcting them.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::indices::SteinerIndices;
use crate::scalar::{binom, int, pow, ExactScalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    /// `K_n` with the perfect matching `{2i, 2i+1}` removed.
    CompleteMinusPerfectMatching,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CompleteMinusPerfectMatching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CompleteMinusPerfectMatching => "kn-minus-matching",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete_minus_perfect_matching" => Ok(Family::CompleteMinusPerfectMatching),
            _ => Family::ALL
                .into_iter()
                .find(|f| f.name() == s)
                .ok_or_else(|| Error::UnknownFamily(s.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n }
    }
}

pub fn generate(spec: FamilySpec) -> Result<Graph> {
    let FamilySpec { family, n } = spec;
    let valid = match family {
        Family::Cycle => n >= 3,
        Family::CompleteMinusPerfectMatching => n >= 4 && n % 2 == 0,
        _ => n >= 1,
    };
    if !valid {
        return Err(Error::InvalidFamilyOrder {
            family: family.name(),
            n,
        });
    }
    let pairs = move || (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    match family {
        Family::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
        Family::Complete => Graph::from_edges(n, pairs()),
        Family::CompleteMinusPerfectMatching => {
            Graph::from_edges(n, pairs().filter(|&(i, j)| !(i % 2 == 0 && j == i + 1)))
        }
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, min: 2, max: n });
    }
    Ok(())
}

/// `(kn - 2k + 1) · C(n-1, k-1)`.
pub fn closed_form_star(n: usize, k: usize) -> Result<ExactScalar> {
    check_k(n, k)?;
    let lead = (k * n + 1) as i64 - 2 * k as i64;
    Ok(int(binom(n - 1, k - 1) * lead))
}

/// `C(n, k) · (n-1)^n · (k-1)`, exponent `n` as published.
pub fn closed_form_complete_printed(n: usize, k: usize) -> Result<ExactScalar> {
    check_k(n, k)?;
    Ok(int(binom(n, k) * pow(n as u64 - 1, n) * (k - 1)))
}

/// `C(n, k) · (n-1)^k · (k-1)`: every k-subset of `K_n` induces a clique.
pub fn closed_form_complete_corrected(n: usize, k: usize) -> Result<ExactScalar> {
    check_k(n, k)?;
    Ok(int(binom(n, k) * pow(n as u64 - 1, k) * (k - 1)))
}

/// `2^k · (k-1) · C(n, k+1)` as published.
pub fn closed_form_path_printed(n: usize, k: usize) -> Result<ExactScalar> {
    check_k(n, k)?;
    Ok(int(pow(2u32, k) * (k - 1) * binom(n, k + 1)))
}

/// Which closed form an audit row compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuditedFormula {
    Star,
    CompletePrinted,
    CompleteCorrected,
    PathPrinted,
}

impl AuditedFormula {
    pub const ALL: [AuditedFormula; 4] = [
        AuditedFormula::Star,
        AuditedFormula::CompletePrinted,
        AuditedFormula::CompleteCorrected,
        AuditedFormula::PathPrinted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuditedFormula::Star => "star",
            AuditedFormula::CompletePrinted => "complete",
            AuditedFormula::CompleteCorrected => "complete_corrected",
            AuditedFormula::PathPrinted => "path",
        }
    }

    pub fn family(self) -> Family {
        match self {
            AuditedFormula::Star => Family::Star,
            AuditedFormula::CompletePrinted | AuditedFormula::CompleteCorrected => Family::Complete,
            AuditedFormula::PathPrinted => Family::Path,
        }
    }

    pub fn evaluate(self, n: usize, k: usize) -> Result<ExactScalar> {
        match self {
            AuditedFormula::Star => closed_form_star(n, k),
            AuditedFormula::CompletePrinted => closed_form_complete_printed(n, k),
            AuditedFormula::CompleteCorrected => closed_form_complete_corrected(n, k),
            AuditedFormula::PathPrinted => closed_form_path_printed(n, k),
        }
    }
}

impl fmt::Display for AuditedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaAudit {
    pub formula: AuditedFormula,
    pub n: usize,
    pub k: usize,
    pub printed_value: ExactScalar,
    pub computed_value: ExactScalar,
    pub agrees: bool,
}

/// Audits every formula at one order, all `2 <= k <= n`.
pub fn audit_order(n: usize) -> Result<Vec<FormulaAudit>> {
    let mut out = Vec::new();
    for formula in AuditedFormula::ALL {
        let g = generate(FamilySpec::new(formula.family(), n))?;
        let idx = SteinerIndices::new(&g)?;
        for k in 2..=n {
            let printed_value = formula.evaluate(n, k)?;
            let computed_value = idx.steiner_gutman(k)?;
            out.push(FormulaAudit {
                formula,
                n,
                k,
                agrees: printed_value == computed_value,
                printed_value,
                computed_value,
            });
        }
    }
    Ok(out)
}

/// Compares every closed form with direct computation for `2 <= k <= n <= n_max`.
/// Rows are ordered by formula, then `n`, then `k`.
pub fn audit_formulas(n_max: usize) -> Result<Vec<FormulaAudit>> {
    let mut rows = Vec::new();
    for n in 2..=n_max {
        rows.extend(audit_order(n)?);
    }
    rows.sort_by_key(|a| (a.formula, a.n, a.k));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_families() {
        let s5 = generate(FamilySpec::new(Family::Star, 5)).unwrap();
        assert_eq!((s5.m(), s5.degree_profile().max_degree), (4, 4));
        let c4 = generate(FamilySpec::new(Family::CompleteMinusPerfectMatching, 4)).unwrap();
        assert!(c4.is_regular() && c4.degree(0) == 2 && c4.is_connected());
        assert_eq!(
            c4.edges().collect::<Vec<_>>(),
            [(0, 2), (1, 2), (0, 3), (1, 3)]
        );
        let k3 = generate(FamilySpec::new(Family::Cycle, 3)).unwrap();
        assert_eq!(k3, generate(FamilySpec::new(Family::Complete, 3)).unwrap());
        assert_eq!(generate(FamilySpec::new(Family::Path, 1)).unwrap().m(), 0);
    }

    #[test]
    fn invalid_orders() {
        for (family, n) in [
            (Family::Cycle, 2),
            (Family::CompleteMinusPerfectMatching, 5),
            (Family::CompleteMinusPerfectMatching, 2),
            (Family::Path, 0),
        ] {
            assert!(matches!(
                generate(FamilySpec::new(family, n)),
                Err(Error::InvalidFamilyOrder { .. })
            ));
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form_star(5, 3).unwrap(), int(60));
        assert_eq!(closed_form_star(4, 2).unwrap(), int(15));
        assert_eq!(closed_form_star(2, 2).unwrap(), int(1));
        assert_eq!(closed_form_complete_printed(3, 2).unwrap(), int(24));
        assert_eq!(closed_form_complete_printed(4, 4).unwrap(), int(243));
        assert_eq!(closed_form_complete_printed(4, 3).unwrap(), int(648));
        assert_eq!(closed_form_complete_corrected(3, 2).unwrap(), int(12));
        assert_eq!(closed_form_complete_corrected(4, 3).unwrap(), int(216));
        assert_eq!(closed_form_complete_corrected(4, 4).unwrap(), int(243));
        assert_eq!(closed_form_path_printed(3, 2).unwrap(), int(4));
        assert_eq!(closed_form_path_printed(4, 3).unwrap(), int(16));
        assert_eq!(closed_form_path_printed(4, 2).unwrap(), int(16));
        assert!(matches!(
            closed_form_star(4, 5),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            closed_form_path_printed(4, 1),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn audit_rows() {
        let rows = audit_formulas(5).unwrap();
        let find = |f, n, k| {
            rows.iter()
                .find(|a| a.formula == f && a.n == n && a.k == k)
                .unwrap()
        };
        let star = find(AuditedFormula::Star, 5, 3);
        assert!(star.agrees && star.printed_value == int(60));
        let kn = find(AuditedFormula::CompletePrinted, 3, 2);
        assert_eq!(
            (
                kn.printed_value.clone(),
                kn.computed_value.clone(),
                kn.agrees
            ),
            (int(24), int(12), false)
        );
        let p = find(AuditedFormula::PathPrinted, 4, 3);
        assert_eq!(
            (p.printed_value.clone(), p.computed_value.clone(), p.agrees),
            (int(16), int(28), false)
        );
        assert!(rows
            .iter()
            .filter(|a| a.formula == AuditedFormula::Star)
            .all(|a| a.agrees));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("wheel".parse::<Family>().is_err());
    }
}
