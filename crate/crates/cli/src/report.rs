use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use soclelab::algebra::{GroupAlgebra, IdealVerdict, SocleCosetDims};
use soclelab::group::FiniteGroup;
use soclelab::linalg::prime_divisors;
use soclelab::structure::{
    check_affine_criterion, check_decomposition_conditions, check_standing_form,
    check_standing_invariants, decompose_d, reduction_pipeline, split_central_product,
    verify_annihilators, AffineCriterionReport, AnnihilatorReport, CentralProductSplit, DSummary,
    DecompositionConditions, ReductionStep, StandingFlags, StandingInvariants,
};
use soclelab::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// How much of the structural analysis to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TheoremMode {
    /// Run every check and report why any did not apply.
    All,
    /// Only the algebra: dimensions and the ideal verdict.
    None,
    /// Structural checks only when the standing hypotheses hold.
    Auto,
}

/// Result of one stage of the analysis.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome<T> {
    Ok { value: T },
    Inapplicable { reason: String },
    Unsupported { reason: String },
    ConsistencyFailure { message: String },
    Error { message: String },
    Skipped { reason: String },
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Ok { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_consistency_failure(&self) -> bool {
        matches!(self, Outcome::ConsistencyFailure { .. })
    }

    fn skipped(reason: &str) -> Self {
        Outcome::Skipped {
            reason: reason.into(),
        }
    }

    fn status(&self) -> &'static str {
        match self {
            Outcome::Ok { .. } => "ok",
            Outcome::Inapplicable { .. } => "inapplicable",
            Outcome::Unsupported { .. } => "unsupported",
            Outcome::ConsistencyFailure { .. } => "consistency_failure",
            Outcome::Error { .. } => "error",
            Outcome::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupDescriptor {
    pub source: String,
    pub order: usize,
    pub class_count: usize,
    pub abelian: bool,
    pub derived_order: usize,
    pub second_derived_order: usize,
    pub center_order: usize,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Dims {
    pub center: usize,
    pub radical: usize,
    pub socle: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSummary {
    pub steps: Vec<ReductionStep>,
    pub split_holds: bool,
    pub reduced_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub group: GroupDescriptor,
    pub p: u64,
    pub dims: Dims,
    pub ideal: Outcome<IdealVerdict>,
    pub standing: StandingFlags,
    pub socle_cosets: Outcome<SocleCosetDims>,
    pub invariants: Outcome<StandingInvariants>,
    pub reduction: Outcome<ReductionSummary>,
    pub decomposition: Outcome<DSummary>,
    pub decomposition_conditions: Outcome<DecompositionConditions>,
    pub annihilators: Outcome<AnnihilatorReport>,
    pub central_split: Outcome<CentralProductSplit>,
    pub affine_criterion: Outcome<AffineCriterionReport>,
    pub consistency_failures: Vec<String>,
    pub timing_ms: f64,
}

impl AnalysisReport {
    /// Direct ideal verdict, if it was computed without a failure.
    pub fn is_ideal(&self) -> Option<bool> {
        self.ideal.value().map(|v| v.direct)
    }

    pub fn has_witness(&self) -> bool {
        self.affine_criterion
            .value()
            .is_some_and(|c| c.witness.is_some())
    }

    /// Canonical JSON: object keys sorted, floats as emitted by serde_json.
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("value serializes")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let g = &self.group;
        let _ = writeln!(s, "group            {}", g.source);
        let _ = writeln!(s, "order            {}", g.order);
        let _ = writeln!(s, "classes          {}", g.class_count);
        let _ = writeln!(
            s,
            "|G'|, |G''|      {}, {}",
            g.derived_order, g.second_derived_order
        );
        let _ = writeln!(s, "|Z(G)|           {}", g.center_order);
        let _ = writeln!(s, "p                {}", self.p);
        let _ = writeln!(
            s,
            "dims Z, J, soc   {}, {}, {}",
            self.dims.center, self.dims.radical, self.dims.socle
        );
        match self.ideal.value() {
            Some(v) => {
                let _ = writeln!(
                    s,
                    "socle is ideal   {} (criterion {})",
                    v.direct, v.criterion
                );
            }
            None => {
                let _ = writeln!(s, "socle is ideal   {}", self.ideal.status());
            }
        }
        let f = &self.standing;
        let _ = writeln!(
            s,
            "standing         G' Sylow {}, H abelian {}, O_p' trivial {}, Z(G') = G'' {}",
            f.gprime_is_sylow, f.h_abelian, f.op_prime_trivial, f.z_gprime_equals_gsecond
        );
        if let Some(c) = self.socle_cosets.value() {
            let _ = writeln!(s, "coset dims       {:?}", c.dims);
        }
        let stages: [(&str, &str); 7] = [
            ("invariants", self.invariants.status()),
            ("reduction", self.reduction.status()),
            ("decomposition", self.decomposition.status()),
            ("conditions on D", self.decomposition_conditions.status()),
            ("annihilators", self.annihilators.status()),
            ("central split", self.central_split.status()),
            ("affine criterion", self.affine_criterion.status()),
        ];
        for (name, status) in stages {
            let _ = writeln!(s, "{name:<17}{status}");
        }
        if let Some(c) = self.affine_criterion.value() {
            let _ = writeln!(
                s,
                "  conditions     affine {}, centralizer {}, camina {}; predicted {}, direct {}",
                c.cond_agl, c.cond_chg, c.cond_camina, c.predicted, c.direct
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    s,
                    "  witness        support {}, |C| = {} < |G''| = {}",
                    w.support_size, w.c_order, w.second_derived_order
                );
            }
        }
        for m in &self.consistency_failures {
            let _ = writeln!(s, "CONSISTENCY      {m}");
        }
        let _ = writeln!(s, "time             {:.1} ms", self.timing_ms);
        s
    }
}

/// Smallest prime dividing `|G'|`, or `|G|` when `G` is abelian.
pub fn default_prime(g: &FiniteGroup) -> Result<u64> {
    let d = g.derived_subgroup().order();
    let n = if d > 1 { d } else { g.order() };
    prime_divisors(n as u64)
        .first()
        .copied()
        .ok_or_else(|| Error::Unsupported("the trivial group has no natural prime".into()))
}

fn outcome<T>(r: Result<T>, stage: &str, failures: &mut Vec<String>) -> Outcome<T> {
    match r {
        Ok(value) => Outcome::Ok { value },
        Err(Error::Inapplicable(reason)) => Outcome::Inapplicable { reason },
        Err(Error::Unsupported(reason)) => Outcome::Unsupported { reason },
        Err(e @ Error::OrderCap { .. }) => Outcome::Unsupported {
            reason: e.to_string(),
        },
        Err(Error::Consistency(message)) => {
            failures.push(format!("{stage}: {message}"));
            Outcome::ConsistencyFailure { message }
        }
        Err(e) => Outcome::Error {
            message: e.to_string(),
        },
    }
}

/// Runs the full pipeline on `g` at `p`. Only input-level problems such as
/// an invalid prime are returned as errors; every falsified check is listed
/// in `consistency_failures`.
pub fn analyze(g: &FiniteGroup, source: &str, p: u64, mode: TheoremMode) -> Result<AnalysisReport> {
    let start = Instant::now();
    let alg = GroupAlgebra::new(g, p)?;
    let mut failures = Vec::new();
    let radical = alg.nilradical_center();
    let socle = alg.socle_from_radical(&radical);
    let dims = Dims {
        center: alg.center_dim(),
        radical: radical.dim(),
        socle: socle.dim(),
    };
    let ideal = outcome(alg.socle_ideal_verdict(&socle), "ideal", &mut failures);
    let verdict = ideal.value().copied();
    let sf = check_standing_form(g, p);

    let sh = g.sylow_and_hall(p);
    let socle_cosets = match &sh.hall_complement {
        Some(h) if sh.sylow.is_normal() => outcome(
            alg.socle_coset_decomposition(&socle, &sh.sylow, h),
            "socle_cosets",
            &mut failures,
        ),
        _ => Outcome::Unsupported {
            reason: "no normal Sylow subgroup with a complement".into(),
        },
    };

    let run = match mode {
        TheoremMode::None => Err("theorem checks disabled"),
        TheoremMode::Auto if !sf.holds() => Err("standing hypotheses fail"),
        _ if verdict.is_none() => Err("no ideal verdict"),
        _ => Ok(()),
    };
    let (
        invariants,
        reduction,
        decomposition,
        decomposition_conditions,
        annihilators,
        central_split,
        affine_criterion,
    );
    match run {
        Err(why) => {
            invariants = Outcome::skipped(why);
            reduction = Outcome::skipped(why);
            decomposition = Outcome::skipped(why);
            decomposition_conditions = Outcome::skipped(why);
            annihilators = Outcome::skipped(why);
            central_split = Outcome::skipped(why);
            affine_criterion = Outcome::skipped(why);
        }
        Ok(()) => {
            let v = verdict.expect("checked above");
            invariants = outcome(
                check_standing_invariants(&sf, &radical, &socle, v),
                "invariants",
                &mut failures,
            );
            reduction = outcome(
                reduction_pipeline(g, p).map(|r| ReductionSummary {
                    reduced_order: r.group.order(),
                    steps: r.steps,
                    split_holds: r.split_holds,
                }),
                "reduction",
                &mut failures,
            );
            match decompose_d(&sf) {
                Ok(dd) => {
                    decomposition = Outcome::Ok {
                        value: dd.summary(),
                    };
                    decomposition_conditions = outcome(
                        check_decomposition_conditions(&sf, &dd, v.direct),
                        "decomposition_conditions",
                        &mut failures,
                    );
                    annihilators = outcome(
                        verify_annihilators(&sf, &dd, v.direct),
                        "annihilators",
                        &mut failures,
                    );
                    central_split = outcome(
                        split_central_product(&sf, &dd, v.direct),
                        "central_split",
                        &mut failures,
                    );
                }
                Err(e) => {
                    decomposition = outcome(Err(e), "decomposition", &mut failures);
                    let why = "no decomposition of G/G''";
                    decomposition_conditions = Outcome::skipped(why);
                    annihilators = Outcome::skipped(why);
                    central_split = Outcome::skipped(why);
                }
            }
            affine_criterion = outcome(
                check_affine_criterion(&sf, v),
                "affine_criterion",
                &mut failures,
            );
        }
    }

    let derived = &sf.derived;
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        group: GroupDescriptor {
            source: source.to_string(),
            order: g.order(),
            class_count: g.class_count(),
            abelian: g.is_abelian(),
            derived_order: derived.order(),
            second_derived_order: sf.second_derived.order(),
            center_order: g.center().order(),
        },
        p,
        dims,
        ideal,
        standing: sf.flags,
        socle_cosets,
        invariants,
        reduction,
        decomposition,
        decomposition_conditions,
        annihilators,
        central_split,
        affine_criterion,
        consistency_failures: failures,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
