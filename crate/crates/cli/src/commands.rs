//! Subcommand implementations.

use std::fs::File;
use std::io::{self, BufWriter, Seek, SeekFrom, Write};
use std::path::Path;
use std::thread;

use anyhow::{bail, ensure, Context, Result};
use serde::Serialize;
use sgut_core::bounds::{parse_selection, Quantity};
use sgut_core::enumerate::{EnumerationSpec, KRange, Universe, MAX_ENUM_ORDER};
use sgut_core::families::{audit_formulas, generate, Family, FamilySpec};
use sgut_core::indices::{gutman, SteinerIndices};
use sgut_core::steiner::DEFAULT_TABLE_CAP;
use sgut_core::verify::{
    audit_for, find_extremal, sweep_range, Objective, Selection, Sense, VerificationReport,
};
use sgut_core::{graph6, BoundFamily, Graph, PairedGraph};

use crate::args::*;
use crate::input::{format_edgelist, parse_graphs, read_source, InputGraph};
use crate::report::{AuditRow, CheckRow, ExtremalRow, IndexRow, ReportDto};

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Nothing to report.
    Clean,
    /// Completed, but found violated bounds or disagreeing formulas.
    Findings,
}

impl Outcome {
    fn from_findings(found: bool) -> Self {
        if found {
            Outcome::Findings
        } else {
            Outcome::Clean
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Compute(a) => compute(a),
        Command::Bounds(a) => bounds(a),
        Command::Family(a) => family(a),
        Command::Verify(a) => verify(a),
        Command::AuditFormulas(a) => audit(a),
        Command::Extremal(a) => extremal(a),
    }
}

fn read_input(input: &GraphInput) -> Result<Vec<InputGraph>> {
    parse_graphs(&read_source(&input.graph)?, input.format)
}

fn write_rows<T: Serialize>(rows: &[T], format: OutputFormat, out: impl Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
            out.flush()?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn compute(args: ComputeArgs) -> Result<Outcome> {
    let graphs = read_input(&args.input)?;
    let wants = |i: Index| args.indices.contains(&i);
    let mut rows = Vec::new();
    for InputGraph { label, graph } in &graphs {
        let idx = SteinerIndices::new(graph).with_context(|| format!("graph {label}"))?;
        let gut = if wants(Index::Gut) && graph.n() >= 2 {
            Some(gutman(graph)?.to_string())
        } else {
            None
        };
        for k in args.k.values(graph.n()) {
            let ctx = || format!("graph {label}, k = {k}");
            rows.push(IndexRow {
                graph: label.clone(),
                n: graph.n(),
                k,
                sgut: wants(Index::Sgut)
                    .then(|| idx.steiner_gutman(k).map(|v| v.to_string()))
                    .transpose()
                    .with_context(ctx)?,
                sw: wants(Index::Sw)
                    .then(|| idx.steiner_wiener(k).map(|v| v.to_string()))
                    .transpose()
                    .with_context(ctx)?,
                sdd: wants(Index::Sdd)
                    .then(|| idx.steiner_degree_distance(k).map(|v| v.to_string()))
                    .transpose()
                    .with_context(ctx)?,
                gut: wants(Index::Gut).then(|| if k == 2 { gut.clone() } else { None }),
            });
        }
    }
    write_rows(&rows, args.out, io::stdout().lock())?;
    Ok(Outcome::Clean)
}

fn bounds(args: BoundsArgs) -> Result<Outcome> {
    let graphs = read_input(&args.input)?;
    let ids = parse_selection(args.set.iter().map(String::as_str))?;
    let mut families: Vec<BoundFamily> = ids.iter().map(|id| id.family()).collect();
    families.dedup();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for InputGraph { label, graph } in &graphs {
        let code = graph6::encode(graph);
        let pair = PairedGraph::new(graph.clone())?;
        for &family in &families {
            if !family.applies_to(&pair) {
                // the family's own check yields the precise reason
                let reason = family.evaluate(&pair, 2).err().map(|e| e.to_string());
                skipped.push(format!(
                    "{family} on {label}: {}",
                    reason.unwrap_or_default()
                ));
                continue;
            }
            for k in args.k.values(graph.n()) {
                let checks = family
                    .evaluate(&pair, k)
                    .with_context(|| format!("{family} on graph {label}, k = {k}"))?;
                rows.extend(
                    checks
                        .iter()
                        .filter(|c| ids.contains(&c.id))
                        .map(|c| CheckRow::new(&code, graph.n(), k, c, args.decimal)),
                );
            }
        }
    }
    if rows.is_empty() && !skipped.is_empty() {
        bail!("no selected bound applies ({})", skipped.join("; "));
    }
    for s in &skipped {
        eprintln!("skipped {s}");
    }
    write_rows(&rows, args.out, io::stdout().lock())?;
    Ok(Outcome::from_findings(rows.iter().any(|r| !r.holds)))
}

fn family(args: FamilyArgs) -> Result<Outcome> {
    let family: Family = args.name.parse()?;
    let g = generate(FamilySpec::new(family, args.n))?;
    let text = match args.emit {
        GraphFormat::G6 => format!("{}\n", graph6::encode(&g)),
        GraphFormat::Edgelist => format_edgelist(&g),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(Outcome::Clean)
}

const CHECK_COLUMNS: [&str; 13] = [
    "graph6",
    "n",
    "k",
    "bound_id",
    "case_label",
    "direction",
    "bound_value",
    "bound_squared",
    "bound_decimal",
    "actual",
    "holds",
    "tight",
    "binding",
];

/// Sweeps one order in `jobs` contiguous shards. CSV rows of each shard go
/// to a temporary file and are appended to `csv` in shard order.
fn sweep_order(
    spec: &EnumerationSpec,
    selection: &Selection,
    jobs: usize,
    decimal: Option<usize>,
    csv: Option<&mut BufWriter<File>>,
) -> Result<VerificationReport> {
    let universe = Universe::new(spec)?;
    let jobs = jobs.clamp(1, universe.len().max(1));
    let with_csv = csv.is_some();
    let shard = |i: usize| -> Result<(VerificationReport, Option<File>)> {
        let range = universe.shard_range(i, jobs);
        if !with_csv {
            return Ok((sweep_range(&universe, selection, range, &mut |_| {}), None));
        }
        let mut part = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(BufWriter::new(tempfile::tempfile()?));
        let mut failure = None;
        let report = sweep_range(&universe, selection, range, &mut |e| {
            if failure.is_none() {
                let row = CheckRow::new(e.graph6, e.graph.n(), e.k, e.check, decimal);
                failure = part.serialize(row).err();
            }
        });
        if let Some(err) = failure {
            return Err(err.into());
        }
        let mut file = part
            .into_inner()
            .map_err(|e| e.into_error())?
            .into_inner()?;
        file.seek(SeekFrom::Start(0))?;
        Ok((report, Some(file)))
    };
    let parts: Vec<_> = if jobs == 1 {
        vec![shard(0)?]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|i| s.spawn(move || shard(i))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect::<Result<_>>()
        })?
    };
    let mut report = VerificationReport::empty(spec.clone());
    let mut csv = csv;
    for (partial, file) in parts {
        report.merge(partial);
        if let (Some(w), Some(mut f)) = (csv.as_deref_mut(), file) {
            io::copy(&mut f, w)?;
        }
    }
    report.formula_audit_findings = audit_for(spec, selection)?;
    Ok(report)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    ensure!(
        (1..=MAX_ENUM_ORDER).contains(&args.n_max),
        "--n-max must be between 1 and {MAX_ENUM_ORDER}"
    );
    ensure!(args.jobs >= 1, "--jobs must be at least 1");
    let selection = Selection::parse(args.set.iter().map(String::as_str))?;
    let k_range = if args.k.is_empty() {
        KRange::All
    } else {
        KRange::Values(args.k.clone())
    };
    let mut csv = match &args.csv {
        Some(path) => {
            let mut out = create(path)?;
            let columns: Vec<_> = CHECK_COLUMNS
                .iter()
                .filter(|c| args.decimal.is_some() || **c != "bound_decimal")
                .collect();
            let mut header = csv::Writer::from_writer(Vec::new());
            header.write_record(columns)?;
            out.write_all(&header.into_inner().map_err(|e| e.into_error())?)?;
            Some(out)
        }
        None => None,
    };
    let mut reports = Vec::new();
    let mut findings = false;
    for n in 1..=args.n_max {
        let spec = EnumerationSpec {
            n,
            require_connected: true,
            require_coconnected: args.coconnected,
            dedup_isomorphism: args.dedup,
            k_range: k_range.clone(),
        };
        let report = sweep_order(&spec, &selection, args.jobs, args.decimal, csv.as_mut())?;
        eprintln!(
            "n = {n}: {} graphs, {} checks, {} violations, {} tight, {} formula disagreements",
            report.graphs_scanned,
            report.checks_run,
            report.violations.len(),
            report.tight_cases.len(),
            report.audit_disagreements().count(),
        );
        findings |= report.has_findings();
        reports.push(ReportDto::new(&report, args.decimal));
    }
    if let Some(mut w) = csv {
        w.flush()?;
    }
    let mut out = create(&args.out)?;
    serde_json::to_writer_pretty(&mut out, &reports)?;
    writeln!(out)?;
    out.flush()?;
    Ok(Outcome::from_findings(findings))
}

fn audit(args: AuditArgs) -> Result<Outcome> {
    ensure!(
        (2..=DEFAULT_TABLE_CAP).contains(&args.n_max),
        "--n-max must be between 2 and {DEFAULT_TABLE_CAP}"
    );
    let audits = audit_formulas(args.n_max)?;
    let rows: Vec<AuditRow> = audits.iter().map(Into::into).collect();
    write_rows(&rows, args.out, io::stdout().lock())?;
    let disagreements = rows.iter().filter(|r| !r.agrees).count();
    if disagreements > 0 {
        eprintln!(
            "{disagreements} of {} printed values disagree with computation",
            rows.len()
        );
    }
    Ok(Outcome::from_findings(disagreements > 0))
}

fn extremal(args: ExtremalArgs) -> Result<Outcome> {
    ensure!(
        (2..=args.n).contains(&args.k),
        "--k must be between 2 and n = {}",
        args.n
    );
    let (sense, quantity) = match args.objective {
        ObjectiveArg::MaxSgut => (Sense::Max, Quantity::Single),
        ObjectiveArg::MinSgut => (Sense::Min, Quantity::Single),
        ObjectiveArg::MaxSum => (Sense::Max, Quantity::Sum),
        ObjectiveArg::MinSum => (Sense::Min, Quantity::Sum),
        ObjectiveArg::MaxProduct => (Sense::Max, Quantity::Product),
        ObjectiveArg::MinProduct => (Sense::Min, Quantity::Product),
    };
    let mut spec = EnumerationSpec::connected(args.n);
    spec.dedup_isomorphism = !args.labelled;
    spec.require_coconnected = args.coconnected || quantity != Quantity::Single;
    let best = find_extremal(&spec, args.k, Objective { sense, quantity })?;
    let rows: Vec<ExtremalRow> = best
        .iter()
        .map(|(g, v): &(Graph, _)| ExtremalRow {
            graph6: graph6::encode(g),
            value: v.to_string(),
        })
        .collect();
    write_rows(&rows, args.out, io::stdout().lock())?;
    Ok(Outcome::Clean)
}
