//! Serializable views of core results. Exact values are `num/den` strings
//! (denominator omitted when 1), never floats.

use serde::Serialize;
use sgut_core::bounds::EqualityDiagnosis;
use sgut_core::enumerate::{EnumerationSpec, KRange};
use sgut_core::families::FormulaAudit;
use sgut_core::verify::{EvaluationError, TightCase, VerificationReport, Violation};
use sgut_core::{BoundCheck, Direction, ExactScalar};

fn exact(x: &ExactScalar) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexRow {
    pub graph: String,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sgut: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sw: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdd: Option<String>,
    /// Only defined for `k = 2`; serialized as null otherwise when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gut: Option<Option<String>>,
}

/// One bound check, the row type of both the `bounds` output and the
/// `verify --csv` stream.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub bound_id: &'static str,
    pub case_label: &'static str,
    pub direction: &'static str,
    /// `num/den`, or `sqrt(num/den)` for irrational bounds.
    pub bound_value: String,
    /// Exact square of the bound, the form irrational bounds are compared in.
    pub bound_squared: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_decimal: Option<String>,
    pub actual: String,
    pub holds: bool,
    pub tight: bool,
    pub binding: bool,
}

impl CheckRow {
    pub fn new(
        graph6: &str,
        n: usize,
        k: usize,
        check: &BoundCheck,
        decimal: Option<usize>,
    ) -> Self {
        CheckRow {
            graph6: graph6.to_owned(),
            n,
            k,
            bound_id: check.id.as_str(),
            case_label: check.case_label,
            direction: match check.direction() {
                Direction::Upper => "upper",
                Direction::Lower => "lower",
            },
            bound_value: check.bound_value.exact_string(),
            bound_squared: exact(&check.bound_value.squared()),
            bound_decimal: decimal.map(|d| check.bound_value.decimal(d)),
            actual: exact(&check.actual),
            holds: check.holds,
            tight: check.tight,
            binding: check.binding,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecDto {
    pub n: usize,
    pub require_connected: bool,
    pub require_coconnected: bool,
    pub dedup_isomorphism: bool,
    /// `"all"` or the list of requested `k`.
    pub k_range: serde_json::Value,
}

impl From<&EnumerationSpec> for SpecDto {
    fn from(s: &EnumerationSpec) -> Self {
        SpecDto {
            n: s.n,
            require_connected: s.require_connected,
            require_coconnected: s.require_coconnected,
            dedup_isomorphism: s.dedup_isomorphism,
            k_range: match &s.k_range {
                KRange::All => "all".into(),
                KRange::Values(v) => v.clone().into(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationDto {
    pub graph6: String,
    pub k: usize,
    pub bound_id: &'static str,
    pub case_label: &'static str,
    pub bound_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_decimal: Option<String>,
    pub actual: String,
}

impl ViolationDto {
    fn new(v: &Violation, decimal: Option<usize>) -> Self {
        ViolationDto {
            graph6: v.graph6.clone(),
            k: v.k,
            bound_id: v.bound_id.as_str(),
            case_label: v.case_label,
            bound_value: v.bound_value.exact_string(),
            bound_decimal: decimal.map(|d| v.bound_value.decimal(d)),
            actual: exact(&v.actual),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosisDto {
    pub regular: bool,
    pub k_equals_n: bool,
    pub connectivity_n_minus_k_plus_1: bool,
    pub all_k_subsets_connected: bool,
    pub complement_all_k_subsets_connected: Option<bool>,
    pub half_regular_odd: bool,
    pub is_path: bool,
    pub p3_k2: bool,
    /// Whether the published equality condition holds (null if none is stated).
    pub stated_condition: Option<bool>,
}

impl From<&EqualityDiagnosis> for DiagnosisDto {
    fn from(d: &EqualityDiagnosis) -> Self {
        DiagnosisDto {
            regular: d.regular,
            k_equals_n: d.k_equals_n,
            connectivity_n_minus_k_plus_1: d.connectivity_n_minus_k_plus_1,
            all_k_subsets_connected: d.all_k_subsets_connected,
            complement_all_k_subsets_connected: d.complement_all_k_subsets_connected,
            half_regular_odd: d.half_regular_odd,
            is_path: d.is_path,
            p3_k2: d.p3_k2,
            stated_condition: d.stated_condition,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TightCaseDto {
    pub graph6: String,
    pub k: usize,
    pub bound_id: &'static str,
    pub case_label: &'static str,
    pub binding: bool,
    pub diagnosis: DiagnosisDto,
}

impl From<&TightCase> for TightCaseDto {
    fn from(t: &TightCase) -> Self {
        TightCaseDto {
            graph6: t.graph6.clone(),
            k: t.k,
            bound_id: t.bound_id.as_str(),
            case_label: t.case_label,
            binding: t.binding,
            diagnosis: (&t.diagnosis).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvaluationErrorDto {
    pub graph6: String,
    pub k: usize,
    pub family: &'static str,
    pub message: String,
}

impl From<&EvaluationError> for EvaluationErrorDto {
    fn from(e: &EvaluationError) -> Self {
        EvaluationErrorDto {
            graph6: e.graph6.clone(),
            k: e.k,
            family: e.family.name(),
            message: e.message.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub formula: &'static str,
    pub n: usize,
    pub k: usize,
    pub printed_value: String,
    pub computed_value: String,
    pub agrees: bool,
}

impl From<&FormulaAudit> for AuditRow {
    fn from(a: &FormulaAudit) -> Self {
        AuditRow {
            formula: a.formula.name(),
            n: a.n,
            k: a.k,
            printed_value: exact(&a.printed_value),
            computed_value: exact(&a.computed_value),
            agrees: a.agrees,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDto {
    pub spec: SpecDto,
    pub graphs_scanned: usize,
    pub checks_run: usize,
    pub violations: Vec<ViolationDto>,
    pub tight_cases: Vec<TightCaseDto>,
    pub evaluation_errors: Vec<EvaluationErrorDto>,
    pub formula_audit_findings: Vec<AuditRow>,
}

impl ReportDto {
    pub fn new(r: &VerificationReport, decimal: Option<usize>) -> Self {
        ReportDto {
            spec: (&r.spec).into(),
            graphs_scanned: r.graphs_scanned,
            checks_run: r.checks_run,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationDto::new(v, decimal))
                .collect(),
            tight_cases: r.tight_cases.iter().map(Into::into).collect(),
            evaluation_errors: r.evaluation_errors.iter().map(Into::into).collect(),
            formula_audit_findings: r.formula_audit_findings.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalRow {
    pub graph6: String,
    pub value: String,
}
