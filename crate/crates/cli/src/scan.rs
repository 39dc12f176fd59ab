use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use soclelab::linalg::prime_divisors;

use crate::report::{analyze, default_prime, AnalysisReport, TheoremMode, SCHEMA_VERSION};
use crate::source::Source;

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub max_order: usize,
    pub mode: TheoremMode,
    /// Analyze at every prime dividing `|G|` instead of the default prime.
    pub all_primes: bool,
    /// Overrides the default prime for every row.
    pub p: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub source: String,
    pub p: Option<u64>,
    pub order: Option<usize>,
    pub ideal: Option<bool>,
    pub standing: Option<bool>,
    /// Hypotheses of the iff-criterion hold.
    pub criterion_applicable: Option<bool>,
    pub predicted: Option<bool>,
    pub witness: bool,
    pub consistency_failures: Vec<String>,
    /// Load or input error; the scan continues past it.
    pub error: Option<String>,
    #[serde(skip)]
    pub report: Option<Box<AnalysisReport>>,
}

impl ScanRow {
    fn error(source: String, p: Option<u64>, msg: String) -> Self {
        ScanRow {
            source,
            p,
            order: None,
            ideal: None,
            standing: None,
            criterion_applicable: None,
            predicted: None,
            witness: false,
            consistency_failures: Vec::new(),
            error: Some(msg),
            report: None,
        }
    }

    fn from_report(r: AnalysisReport) -> Self {
        let c = r.affine_criterion.value();
        ScanRow {
            source: r.group.source.clone(),
            p: Some(r.p),
            order: Some(r.group.order),
            ideal: r.is_ideal(),
            standing: Some(
                r.standing.gprime_is_sylow && r.standing.h_abelian && r.standing.op_prime_trivial,
            ),
            criterion_applicable: c.map(|c| c.hypotheses_ok),
            predicted: c.filter(|c| c.hypotheses_ok).map(|c| c.predicted),
            witness: r.has_witness(),
            consistency_failures: r.consistency_failures.clone(),
            error: None,
            report: Some(Box::new(r)),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanSummary {
    pub rows: usize,
    pub ideal: usize,
    pub non_ideal: usize,
    pub criterion_applicable: usize,
    pub criterion_not_applicable: usize,
    pub witnesses: usize,
    pub errors: usize,
    pub consistency_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub schema_version: u32,
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

fn scan_one(src: &Source, opts: ScanOptions) -> Vec<ScanRow> {
    let label = src.label();
    let loaded = match src.load(opts.max_order) {
        Ok(l) => l,
        Err(e) => return vec![ScanRow::error(label, opts.p, e.to_string())],
    };
    let g = &loaded.group;
    let primes: Vec<u64> = if let Some(p) = opts.p {
        vec![p]
    } else if opts.all_primes {
        prime_divisors(g.order() as u64)
    } else {
        match loaded
            .prime_hint
            .map(Ok)
            .unwrap_or_else(|| default_prime(g))
        {
            Ok(p) => vec![p],
            Err(e) => return vec![ScanRow::error(label, None, e.to_string())],
        }
    };
    primes
        .into_iter()
        .map(|p| match analyze(g, &label, p, opts.mode) {
            Ok(r) => ScanRow::from_report(r),
            Err(e) => ScanRow::error(label.clone(), Some(p), e.to_string()),
        })
        .collect()
}

/// Analyzes every source in parallel; rows keep the input order.
pub fn scan(sources: &[Source], opts: ScanOptions) -> ScanResult {
    let rows: Vec<ScanRow> = sources
        .par_iter()
        .map(|s| scan_one(s, opts))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut summary = ScanSummary {
        rows: rows.len(),
        ..ScanSummary::default()
    };
    for r in &rows {
        match r.ideal {
            Some(true) => summary.ideal += 1,
            Some(false) => summary.non_ideal += 1,
            None => {}
        }
        match r.criterion_applicable {
            Some(true) => summary.criterion_applicable += 1,
            Some(false) => summary.criterion_not_applicable += 1,
            None => {}
        }
        summary.witnesses += r.witness as usize;
        summary.errors += r.error.is_some() as usize;
        summary.consistency_failures += r.consistency_failures.len();
    }
    ScanResult {
        schema_version: SCHEMA_VERSION,
        rows,
        summary,
    }
}

fn show(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

impl ScanResult {
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("scan serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("value serializes")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<28} {:>3} {:>6} {:>6} {:>9} {:>9} {:>8}  note",
            "group", "p", "order", "ideal", "standing", "criterion", "witness"
        );
        for r in &self.rows {
            let note = match (&r.error, r.consistency_failures.first()) {
                (Some(e), _) => e.clone(),
                (None, Some(c)) => format!("CONSISTENCY {c}"),
                _ => String::new(),
            };
            let criterion = match (r.criterion_applicable, r.predicted) {
                (Some(true), Some(pred)) => {
                    if pred {
                        "yes"
                    } else {
                        "no"
                    }
                }
                (Some(false), _) => "n/a",
                _ => "-",
            };
            let _ = writeln!(
                s,
                "{:<28} {:>3} {:>6} {:>6} {:>9} {:>9} {:>8}  {}",
                r.source,
                r.p.map_or("-".into(), |p| p.to_string()),
                r.order.map_or("-".into(), |n| n.to_string()),
                show(r.ideal),
                show(r.standing),
                criterion,
                if r.witness { "yes" } else { "" },
                note
            );
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "\n{} rows: {} ideal, {} non-ideal; criterion applicable {}, not applicable {}; \
             {} witnesses; {} errors; {} consistency failures",
            m.rows,
            m.ideal,
            m.non_ideal,
            m.criterion_applicable,
            m.criterion_not_applicable,
            m.witnesses,
            m.errors,
            m.consistency_failures
        );
        s
    }
}
