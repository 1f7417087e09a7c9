//! Exhaustive sweeps: every selected bound on every enumerated graph and
//! every `k`, with violations and equality cases collected as data.
//!
//! A sweep over a [`Universe`] can be split into contiguous shards; the
//! partial reports merge associatively in shard order, so the result does
//! not depend on how many shards were used.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;

use crate::bounds::{
    equality_witness, parse_selection, BoundCheck, BoundFamily, BoundId, BoundValue,
    EqualityDiagnosis, PairedGraph, Quantity,
};
use crate::enumerate::{EnumerationSpec, Universe};
use crate::families::{audit_order, FormulaAudit};
use crate::graph::Graph;
use crate::graph6;
use crate::scalar::ExactScalar;
use crate::Result;

/// What a sweep evaluates: a set of bounds and, optionally, the formula
/// audit for the swept order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Selection {
    pub bounds: Vec<BoundId>,
    pub audit: bool,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            bounds: BoundId::ALL.to_vec(),
            audit: false,
        }
    }

    /// Parses selectors as [`parse_selection`] does, plus `audit` for the
    /// closed-form audit. `all` selects every bound but not the audit.
    pub fn parse<'a, I>(selectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut audit = false;
        let rest: Vec<&str> = selectors
            .into_iter()
            .map(str::trim)
            .filter(|s| {
                let is_audit = *s == "audit";
                audit |= is_audit;
                !is_audit
            })
            .collect();
        Ok(Selection {
            bounds: parse_selection(rest)?,
            audit,
        })
    }

    fn families(&self) -> Vec<BoundFamily> {
        let mut fams: Vec<_> = self.bounds.iter().map(|id| id.family()).collect();
        fams.sort();
        fams.dedup();
        fams
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub graph6: String,
    pub k: usize,
    pub bound_id: BoundId,
    pub case_label: &'static str,
    pub bound_value: BoundValue,
    pub actual: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightCase {
    pub graph6: String,
    pub k: usize,
    pub bound_id: BoundId,
    pub case_label: &'static str,
    pub binding: bool,
    pub diagnosis: EqualityDiagnosis,
}

/// A family that could not be evaluated on a graph that meets its
/// preconditions (e.g. no degree case applies). Never expected; recorded
/// rather than aborting the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationError {
    pub graph6: String,
    pub k: usize,
    pub family: BoundFamily,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: EnumerationSpec,
    pub graphs_scanned: usize,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    pub tight_cases: Vec<TightCase>,
    pub evaluation_errors: Vec<EvaluationError>,
    pub formula_audit_findings: Vec<FormulaAudit>,
}

impl VerificationReport {
    pub fn empty(spec: EnumerationSpec) -> Self {
        VerificationReport {
            spec,
            graphs_scanned: 0,
            checks_run: 0,
            violations: Vec::new(),
            tight_cases: Vec::new(),
            evaluation_errors: Vec::new(),
            formula_audit_findings: Vec::new(),
        }
    }

    /// Appends a report for the following shard of the same spec.
    pub fn merge(&mut self, next: VerificationReport) {
        debug_assert_eq!(self.spec, next.spec);
        self.graphs_scanned += next.graphs_scanned;
        self.checks_run += next.checks_run;
        self.violations.extend(next.violations);
        self.tight_cases.extend(next.tight_cases);
        self.evaluation_errors.extend(next.evaluation_errors);
        self.formula_audit_findings
            .extend(next.formula_audit_findings);
    }

    /// Audit rows whose printed value disagrees with direct computation.
    pub fn audit_disagreements(&self) -> impl Iterator<Item = &FormulaAudit> {
        self.formula_audit_findings.iter().filter(|a| !a.agrees)
    }

    /// Whether the sweep found anything wrong: a violated bound, a failed
    /// evaluation, or a disagreeing closed form.
    pub fn has_findings(&self) -> bool {
        !self.violations.is_empty()
            || !self.evaluation_errors.is_empty()
            || self.audit_disagreements().next().is_some()
    }
}

/// One evaluated check, as passed to a sweep's sink.
pub struct CheckEvent<'a> {
    pub graph: &'a Graph,
    pub graph6: &'a str,
    pub k: usize,
    pub check: &'a BoundCheck,
}

/// Sweeps a whole spec.
pub fn sweep(spec: &EnumerationSpec, selection: &Selection) -> Result<VerificationReport> {
    let universe = Universe::new(spec)?;
    let mut report = sweep_range(&universe, selection, 0..universe.len(), &mut |_| {});
    report.formula_audit_findings = audit_for(spec, selection)?;
    Ok(report)
}

/// The closed-form audit rows a sweep of `spec` includes.
pub fn audit_for(spec: &EnumerationSpec, selection: &Selection) -> Result<Vec<FormulaAudit>> {
    if selection.audit && spec.n >= 2 {
        audit_order(spec.n)
    } else {
        Ok(Vec::new())
    }
}

/// Sweeps the universe slots in `range`, reporting every check to `sink`.
/// The formula audit is not included; see [`audit_for`].
pub fn sweep_range(
    universe: &Universe,
    selection: &Selection,
    range: Range<usize>,
    sink: &mut dyn FnMut(CheckEvent<'_>),
) -> VerificationReport {
    let spec = universe.spec();
    let families = selection.families();
    let ks = spec.ks();
    let mut report = VerificationReport::empty(spec.clone());
    for g in universe.slice(range) {
        report.graphs_scanned += 1;
        let Ok(pair) = PairedGraph::new(g) else {
            continue;
        };
        let code = graph6::encode(pair.graph());
        for &k in &ks {
            for &family in &families {
                if !family.applies_to(&pair) {
                    continue;
                }
                let checks = match family.evaluate(&pair, k) {
                    Ok(c) => c,
                    Err(e) => {
                        report.evaluation_errors.push(EvaluationError {
                            graph6: code.clone(),
                            k,
                            family,
                            message: e.to_string(),
                        });
                        continue;
                    }
                };
                for check in checks.iter().filter(|c| selection.bounds.contains(&c.id)) {
                    record(&mut report, &pair, &code, k, check);
                    sink(CheckEvent {
                        graph: pair.graph(),
                        graph6: &code,
                        k,
                        check,
                    });
                }
            }
        }
    }
    report
}

fn record(
    report: &mut VerificationReport,
    pair: &PairedGraph,
    code: &str,
    k: usize,
    check: &BoundCheck,
) {
    report.checks_run += 1;
    if !check.holds {
        report.violations.push(Violation {
            graph6: code.into(),
            k,
            bound_id: check.id,
            case_label: check.case_label,
            bound_value: check.bound_value.clone(),
            actual: check.actual.clone(),
        });
    }
    if check.tight {
        let diagnosis = equality_witness(pair, k, check).expect("tight check on a connected graph");
        report.tight_cases.push(TightCase {
            graph6: code.into(),
            k,
            bound_id: check.id,
            case_label: check.case_label,
            binding: check.binding,
            diagnosis,
        });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Objective {
    pub sense: Sense,
    pub quantity: Quantity,
}

/// Every graph of `spec` attaining the extreme value of the objective at
/// `k`, in enumeration order. Graphs on which the quantity is undefined
/// (disconnected, or with a disconnected complement for sums and products)
/// are skipped.
pub fn find_extremal(
    spec: &EnumerationSpec,
    k: usize,
    objective: Objective,
) -> Result<Vec<(Graph, ExactScalar)>> {
    let universe = Universe::new(spec)?;
    let mut best: Vec<(Graph, ExactScalar)> = Vec::new();
    for g in universe.iter() {
        let pair = PairedGraph::new(g)?;
        let Ok(value) = pair.actual(objective.quantity, k) else {
            continue;
        };
        let ord = match best.first() {
            None => Ordering::Greater,
            Some((_, b)) => match objective.sense {
                Sense::Max => value.cmp(b),
                Sense::Min => b.cmp(&value),
            },
        };
        match ord {
            Ordering::Greater => {
                best.clear();
                best.push((pair.graph().clone(), value));
            }
            Ordering::Equal => best.push((pair.graph().clone(), value)),
            Ordering::Less => {}
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn c5_tight_at_k5() {
        let spec = EnumerationSpec::connected(5).coconnected().dedup();
        let report = sweep(&spec, &Selection::all()).unwrap();
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let code = graph6::encode(&crate::canon::canonical_form(&c5));
        assert!(report
            .violations
            .iter()
            .all(|v| v.bound_id == BoundId::Cor41SumUpper));
        assert!(report
            .tight_cases
            .iter()
            .any(|t| t.graph6 == code && t.k == 5 && t.bound_id == BoundId::Thm32SumUpper));
        assert!(report.evaluation_errors.is_empty());
    }

    #[test]
    fn shards_merge_to_the_whole() {
        let spec = EnumerationSpec::connected(5);
        let universe = Universe::new(&spec).unwrap();
        let sel = Selection::parse(["prop21", "lem22"]).unwrap();
        let whole = sweep_range(&universe, &sel, 0..universe.len(), &mut |_| {});
        let mut merged = VerificationReport::empty(spec.clone());
        for i in 0..4 {
            merged.merge(sweep_range(
                &universe,
                &sel,
                universe.shard_range(i, 4),
                &mut |_| {},
            ));
        }
        assert_eq!(whole, merged);
        assert!(whole.violations.is_empty());
    }

    #[test]
    fn audit_selection() {
        let sel = Selection::parse(["audit"]).unwrap();
        assert!(sel.audit && sel.bounds.is_empty());
        let report = sweep(&EnumerationSpec::connected(4).dedup(), &sel).unwrap();
        assert_eq!(report.checks_run, 0);
        assert!(report.has_findings());
        assert!(!sweep(
            &EnumerationSpec::connected(4).dedup(),
            &Selection::parse(["prop21"]).unwrap()
        )
        .unwrap()
        .has_findings());
    }

    #[test]
    fn extremal_examples() {
        let spec = EnumerationSpec::connected(4).dedup();
        let max = Objective {
            sense: Sense::Max,
            quantity: Quantity::Single,
        };
        let best = find_extremal(&spec, 2, max).unwrap();
        assert_eq!(best.len(), 1);
        assert_eq!((best[0].0.m(), best[0].1.clone()), (6, int(54)));

        let min = Objective {
            sense: Sense::Min,
            ..max
        };
        let best = find_extremal(&spec, 4, min).unwrap();
        assert_eq!(best.len(), 1);
        assert_eq!(
            (best[0].0.degree_profile().max_degree, best[0].1.clone()),
            (3, int(9))
        );

        let spec = EnumerationSpec::connected(5).coconnected().dedup();
        let product = Objective {
            sense: Sense::Max,
            quantity: Quantity::Product,
        };
        let best = find_extremal(&spec, 5, product).unwrap();
        assert_eq!(best.len(), 1);
        assert_eq!(best[0].1, int(16384));
        assert!(best[0].0.is_regular() && best[0].0.m() == 5);
    }
}
